//! Lattice path delta matroids in type C: the Gale order on subsets of `[n]`,
//! symmetric lattice paths, the delta matroids `Delta[S, T]` whose feasible
//! sets are Gale intervals, their polytopes, unimodular triangulations and
//! exact volumes.

pub mod error;
pub mod matroid;
pub mod oracle;
pub mod order;
pub mod paths;
pub mod perm;
pub mod polytope;
pub mod rational;
pub mod subset;
pub mod selftest;
pub mod triangulation;

pub use error::{Error, Result};
pub use matroid::{ExchangeCheck, Label, LpdmSpec, SetFamily, TypeALpmSpec};
pub use order::GaleChain;
pub use paths::{PathWord, SkewBoxSet, Step, SymmetricPathWord};
pub use perm::Permutation;
pub use polytope::{Face, FaceCertificate, Facet, HRep};
pub use rational::{Rational, RationalPoint};
pub use subset::{Profile, SubsetMask};
pub use triangulation::{LatticeSimplex, Subdivision};
