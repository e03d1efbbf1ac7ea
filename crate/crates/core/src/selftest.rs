//! The acceptance suite: each criterion cross-checks the fast algorithms
//! against an independent oracle and reports one pass/fail row.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::matroid::{
    classify_elements, contract, delete, dual, envelope_bases, envelope_project, homogeneous_component,
    gale_interval_of, is_admissible, lagrangian_image, project_element, verify_exchange, LpdmSpec,
};
use crate::oracle::{self, brute};
use crate::order::{chain_to_permutation, count_maximal_chains, maximal_chains, permutation_to_chain, GaleChain};
use crate::paths::catalan_spec;
use crate::perm::{count_perms_with_descent_set, factorial_big, permutations_with_descent_set, Permutation};
use crate::polytope::{
    contains, contains_indicator, dimension, dimension_from_paths, face, hrep, intersect, is_linked, vertex_set,
    Facet,
};
use crate::rational::{rat, Rational, RationalPoint};
use crate::subset::SubsetMask;
use crate::triangulation::{cell_label, phi_simplex, snake_label, subdivide, triangulate_toric, volume};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub checks: u64,
    pub detail: String,
    pub millis: u64,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "{} [{:>6}] {:<52} {:>9} checks {:>7} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks,
            self.millis,
            self.detail
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    /// Caps every exhaustive range; criteria never exceed their nominal sizes.
    pub max_n: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { max_n: 6, seed: 0x5eed }
    }
}

type Check = std::result::Result<u64, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn run(id: &'static str, title: &'static str, f: impl FnOnce() -> Check) -> CriterionReport {
    let start = Instant::now();
    let outcome = f();
    let millis = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(checks) => CriterionReport { id, title, passed: true, checks, detail: String::new(), millis },
        Err(detail) => CriterionReport { id, title, passed: false, checks: 0, detail, millis },
    }
}

/// Runs `f` on every item in parallel and keeps the first failure in input order.
fn par_all<T: Sync>(items: &[T], f: impl Fn(usize, &T) -> Check + Sync) -> Check {
    let results: Vec<Check> = items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    let mut total = 0;
    for r in results {
        total += r?;
    }
    Ok(total)
}

/// Every `Delta[S, T]` on `[n]`.
pub fn all_specs(n: usize) -> Vec<LpdmSpec> {
    let mut out = Vec::new();
    for s in SubsetMask::all(n) {
        for t in SubsetMask::all(n) {
            if let Ok(m) = LpdmSpec::new(s, t) {
                out.push(m);
            }
        }
    }
    out
}

fn specs_up_to(n: usize) -> Vec<LpdmSpec> {
    (0..=n).flat_map(all_specs).collect()
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A uniformly drawn linked `Delta[S, T]` on `[n]`.
pub fn random_linked_spec(rng: &mut impl Rng, n: usize) -> LpdmSpec {
    loop {
        let s = SubsetMask::from_bits(n, rng.gen::<u64>() & ((1u64 << n) - 1));
        let t = SubsetMask::from_bits(n, rng.gen::<u64>() & ((1u64 << n) - 1));
        if let Ok(m) = LpdmSpec::new(s, t) {
            if is_linked(&m) {
                return m;
            }
        }
    }
}

/// Test points: lattice points of a fine grid around the cube, convex
/// combinations of vertices, and perturbed combinations near the boundary.
pub fn random_point(rng: &mut impl Rng, vertices: &[RationalPoint], n: usize) -> RationalPoint {
    let den: i64 = rng.gen_range(2..=9);
    match rng.gen_range(0..3) {
        0 => RationalPoint::new((0..n).map(|_| rat(rng.gen_range(-1..=den + 1), den)).collect()),
        mode => {
            let k = rng.gen_range(1..=3.min(vertices.len()));
            let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..vertices.len())).collect();
            let weights: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=6)).collect();
            let total: i64 = weights.iter().sum();
            let mut coords = vec![Rational::zero(); n];
            for (p, w) in picks.iter().zip(&weights) {
                for (c, v) in coords.iter_mut().zip(vertices[*p].coords()) {
                    *c += v * rat(*w, total);
                }
            }
            if mode == 2 && n > 0 {
                let i = rng.gen_range(0..n);
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                coords[i] += rat(sign, den);
            }
            RationalPoint::new(coords)
        }
    }
}

pub fn criterion_1(cfg: &SelftestConfig) -> CriterionReport {
    run("1", "exchange axiom on every interval family", || {
        let specs = specs_up_to(cfg.max_n.min(5));
        par_all(&specs, |_, m| {
            let r = verify_exchange(&m.feasible_sets()).map_err(|e| e.to_string())?;
            ensure!(r.holds(), "{m}: {r:?}");
            Ok(1)
        })
    })
}

pub fn criterion_2a(cfg: &SelftestConfig) -> CriterionReport {
    run("2a", "0/1 points of C(S,T) are the interval", || {
        let specs = specs_up_to(cfg.max_n.min(6));
        par_all(&specs, |_, m| {
            let h = hrep(m);
            let n = m.n();
            let by_hrep: Vec<SubsetMask> = {
                let mut v: Vec<_> = SubsetMask::all(n).filter(|s| contains_indicator(&h, s)).collect();
                v.sort();
                v
            };
            ensure!(by_hrep == brute::interval(&m.lower(), &m.upper()), "{m}: H-description vertices differ");
            ensure!(by_hrep == m.feasible_masks(), "{m}: feasible sets differ");
            let count = oracle::count_lattice_points(&h, 1);
            ensure!(count == BigUint::from(by_hrep.len()), "{m}: lattice count {count}");
            Ok(1)
        })
    })
}

pub fn criterion_2b(cfg: &SelftestConfig) -> CriterionReport {
    const POINTS: usize = 200;
    run("2b", "contains agrees with exact hull membership", || {
        let specs = specs_up_to(cfg.max_n.min(4));
        let (inside, outside) = (std::sync::atomic::AtomicU64::new(0), std::sync::atomic::AtomicU64::new(0));
        let checks = par_all(&specs, |i, m| {
            let h = hrep(m);
            let verts = vertex_set(m);
            let mut rng = rng_for(cfg.seed, 2000 + i as u64);
            for _ in 0..POINTS {
                let x = random_point(&mut rng, &verts, m.n());
                let a = contains(&h, &x).map_err(|e| e.to_string())?;
                let b = oracle::hull_membership(&verts, &x).map_err(|e| e.to_string())?;
                ensure!(a == b, "{m}: {x} contains={a} hull={b}");
                let counter = if a { &inside } else { &outside };
                counter.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            Ok(POINTS as u64)
        })?;
        let (i, o) = (inside.into_inner(), outside.into_inner());
        ensure!(i > 0 && o > 0, "sampling degenerate: {i} inside, {o} outside");
        Ok(checks)
    })
}

fn volume_matches_oracle(m: &LpdmSpec) -> Check {
    let h = hrep(m);
    let tri = volume(m).map_err(|e| e.to_string())?;
    let poly = oracle::ehrhart_polynomial(&h);
    let ehr = poly.coefficient(m.n());
    ensure!(tri == ehr, "{m}: triangulation {tri} vs Ehrhart {ehr}");
    for t in [m.n() as u64 + 1, m.n() as u64 + 2] {
        let direct = Rational::from_integer(BigInt::from(oracle::count_lattice_points(&h, t)));
        ensure!(poly.eval(t as i64) == direct, "{m}: polynomial misses the count at t = {t}");
    }
    Ok(1)
}

pub fn criterion_3(cfg: &SelftestConfig) -> CriterionReport {
    run("3", "volume = Ehrhart leading coefficient", || {
        let specs = specs_up_to(cfg.max_n.min(5));
        let mut checks = par_all(&specs, |_, m| volume_matches_oracle(m))?;
        if cfg.max_n >= 6 {
            let mut rng = rng_for(cfg.seed, 3);
            let linked: Vec<LpdmSpec> = (0..100).map(|_| random_linked_spec(&mut rng, 6)).collect();
            checks += par_all(&linked, |_, m| volume_matches_oracle(m))?;
        }
        Ok(checks)
    })
}

pub fn criterion_4(cfg: &SelftestConfig) -> CriterionReport {
    run("4", "toric triangulations are unimodular and complete", || {
        ensure!(volume(&toric(3, &[1])).unwrap() == rat(1, 3), "vol Delta[{{1}},{{1,3}}] != 1/3");
        ensure!(volume(&toric(2, &[1])).unwrap() == rat(1, 2), "vol Delta[{{1}},{{1,2}}] != 1/2");
        ensure!(oracle::ehrhart_volume(&hrep(&toric(3, &[1]))) == rat(1, 3), "Ehrhart disagrees at n = 3");
        ensure!(oracle::ehrhart_volume(&hrep(&toric(2, &[1]))) == rat(1, 2), "Ehrhart disagrees at n = 2");
        let mut cases = Vec::new();
        for n in 1..=cfg.max_n.min(6) {
            for s in SubsetMask::all(n - 1) {
                cases.push(LpdmSpec::new(s.extend(n), s.extend(n).with(n)).unwrap());
            }
        }
        par_all(&cases, |_, m| {
            let n = m.n();
            let s = m.lower();
            let simplices = triangulate_toric(m).map_err(|e| e.to_string())?;
            let beta = count_perms_with_descent_set(&s).map_err(|e| e.to_string())?;
            let chains = count_maximal_chains(&s, &m.upper()).map_err(|e| e.to_string())?;
            ensure!(BigUint::from(simplices.len()) == beta, "{m}: {} simplices, beta {beta}", simplices.len());
            ensure!(chains == beta, "{m}: {chains} chains, beta {beta}");
            let unit = Rational::new(BigInt::from(1), BigInt::from(factorial_big(n)));
            let h = hrep(m);
            let mut total = Rational::zero();
            for simplex in &simplices {
                let v = oracle::simplex_volume(simplex).map_err(|e| e.to_string())?;
                ensure!(v == unit, "{m}: simplex of {} has volume {v}", simplex.perm);
                for vert in &simplex.vertices {
                    let mask = SubsetMask::from_members(n, (1..=n).filter(|&i| vert[i - 1] == 1)).unwrap();
                    ensure!(
                        vert.iter().all(|&c| c == 0 || c == 1) && contains_indicator(&h, &mask),
                        "{m}: vertex {vert:?} is not feasible"
                    );
                }
                ensure!(snake_label(&simplex.perm) == s, "{m}: {} labelled elsewhere", simplex.perm);
                total += v;
            }
            let ehr = oracle::ehrhart_volume(&h);
            ensure!(total == ehr, "{m}: simplices sum to {total}, Ehrhart {ehr}");
            Ok(simplices.len() as u64 + 1)
        })
    })
}

fn toric(n: usize, s: &[usize]) -> LpdmSpec {
    let s = SubsetMask::of(n, s);
    LpdmSpec::new(s, s.with(n)).unwrap()
}

pub fn criterion_5(cfg: &SelftestConfig) -> CriterionReport {
    run("5", "descent classes and cube cells fill the cube", || {
        let mut checks = 0;
        for n in 1..=cfg.max_n.min(6) {
            let mut sum = BigUint::zero();
            for s in SubsetMask::all(n - 1) {
                sum += count_perms_with_descent_set(&s.extend(n)).unwrap();
            }
            ensure!(sum == factorial_big(n), "n = {n}: descent classes sum to {sum}");
            let cube = LpdmSpec::new(SubsetMask::empty(n), SubsetMask::full(n)).unwrap();
            let cells = subdivide(&cube).map_err(|e| e.to_string())?.cells;
            let total: Rational = cells.iter().map(|c| volume(c).unwrap()).sum();
            ensure!(total == rat(1, 1), "n = {n}: cube cells sum to {total}");
            // the n! simplices are distinct and fill the unit volume
            let mut seen = HashSet::new();
            let mut vol = Rational::zero();
            for w in Permutation::all(n) {
                let s = phi_simplex(&w);
                ensure!(seen.insert(s.vertex_sum()), "n = {n}: two simplices share a barycenter");
                vol += oracle::simplex_volume(&s).map_err(|e| e.to_string())?;
            }
            ensure!(vol == rat(1, 1), "n = {n}: simplices sum to {vol}");
            checks += 3;
        }
        Ok(checks)
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn criterion_6(cfg: &SelftestConfig) -> CriterionReport {
    run("6", "Catalan delta matroid has C(2n, n) feasible sets", || {
        let expected = [2u64, 6, 20, 70, 252];
        for n in 1..=cfg.max_n.min(5) {
            let m = catalan_spec(n).map_err(|e| e.to_string())?;
            let got = m.feasible_sets().len() as u64;
            ensure!(got == binomial(2 * n as u64, n as u64), "n = {n}: {got} feasible sets");
            ensure!(got == expected[n - 1], "n = {n}: {got} != {}", expected[n - 1]);
            ensure!(
                brute::interval(&m.lower(), &m.upper()).len() as u64 == got,
                "n = {n}: definitional interval size differs"
            );
        }
        Ok(cfg.max_n.min(5) as u64)
    })
}

pub fn criterion_7(cfg: &SelftestConfig) -> CriterionReport {
    run("7", "deletion, contraction, duality and loops", || {
        let specs = specs_up_to(cfg.max_n.min(5));
        par_all(&specs, |_, m| {
            let n = m.n();
            let feas = brute::interval(&m.lower(), &m.upper());
            let family = crate::matroid::SetFamily::new(m.ground().to_vec(), feas.iter().copied()).unwrap();
            let (loops, coloops) = classify_elements(m);
            let (bl, bc) = brute::coloops_and_loops(&feas, n);
            ensure!(loops == bl && coloops == bc, "{m}: loops {loops} / {bl}, coloops {coloops} / {bc}");
            ensure!(
                dual(m).feasible_masks().iter().map(|f| f.complement()).collect::<BTreeSet<_>>()
                    == feas.iter().copied().collect::<BTreeSet<_>>(),
                "{m}: dual is not the complement family"
            );
            let mut checks = 2;
            for p in 1..=n {
                let l = m.label(p);
                match delete(m, l) {
                    Ok(d) => {
                        let want = project_element(&family.filter(|f| !f.contains(p)), l).unwrap();
                        ensure!(d.feasible_sets().same_sets(&want), "{m} \\ {l}: formula and filter differ");
                        let rhs = contract(&dual(m), l).map_err(|e| format!("{m}: dual contraction {e}"))?;
                        ensure!(dual(&d) == rhs, "{m}: (m \\ {l})* != m* / {l}");
                    }
                    Err(_) => ensure!(coloops.contains(p), "{m}: deleting the non-coloop {l} failed"),
                }
                match contract(m, l) {
                    Ok(c) => {
                        let want = project_element(&family.filter(|f| f.contains(p)), l).unwrap();
                        ensure!(c.feasible_sets().same_sets(&want), "{m} / {l}: formula and filter differ");
                    }
                    Err(_) => ensure!(loops.contains(p), "{m}: contracting the non-loop {l} failed"),
                }
                checks += 3;
            }
            Ok(checks)
        })
    })
}

pub fn criterion_8(cfg: &SelftestConfig) -> CriterionReport {
    run("8", "homogeneous components are type A intervals", || {
        let m = LpdmSpec::new(SubsetMask::of(6, &[1, 3, 5]), SubsetMask::of(6, &[2, 4, 5, 6])).unwrap();
        let c3 = homogeneous_component(&m, 3).ok_or("component k = 3 is empty")?;
        let c4 = homogeneous_component(&m, 4).ok_or("component k = 4 is empty")?;
        ensure!(c3.lower_labels() == [1, 3, 5] && c3.upper_labels() == [4, 5, 6], "k = 3 gives {c3}");
        ensure!(c4.lower_labels() == [1, 2, 3, 5] && c4.upper_labels() == [2, 4, 5, 6], "k = 4 gives {c4}");
        let specs = specs_up_to(cfg.max_n.min(5));
        par_all(&specs, |_, m| {
            let n = m.n();
            let feas = brute::interval(&m.lower(), &m.upper());
            for k in 0..=n {
                let want: Vec<SubsetMask> = feas.iter().copied().filter(|f| f.len() == k).collect();
                match homogeneous_component(m, k) {
                    None => ensure!(want.is_empty(), "{m}: component {k} missing"),
                    Some(c) => {
                        let bases: Vec<SubsetMask> = c.bases().members().copied().collect();
                        ensure!(bases == want, "{m}: component {k} is not the size filter");
                        let (lo, hi) = (c.lower().to_vec(), c.upper().to_vec());
                        let elementwise: Vec<SubsetMask> = SubsetMask::all(n)
                            .filter(|b| {
                                b.len() == k
                                    && b.members().zip(&lo).all(|(x, y)| x >= *y)
                                    && b.members().zip(&hi).all(|(x, y)| x <= *y)
                            })
                            .collect::<BTreeSet<_>>()
                            .into_iter()
                            .collect();
                        ensure!(elementwise == want, "{m}: component {k} is not the type A interval {c}");
                    }
                }
            }
            Ok(n as u64 + 1)
        })
        .map(|c| c + 2)
    })
}

pub fn criterion_9(cfg: &SelftestConfig) -> CriterionReport {
    run("9", "envelope bases project into the feasible polytope", || {
        let fig1 = SubsetMask::of(10, &[1, 5, 7, 8, 9]);
        ensure!(
            envelope_project(&fig1).unwrap() == RationalPoint::from_ints(&[0, 1, 1, 1, 0]),
            "{{-5,-1,2,3,4}} does not project to e_{{2,3,4}}"
        );
        let specs = specs_up_to(cfg.max_n.min(4));
        par_all(&specs, |_, m| {
            let h = hrep(m);
            let env = envelope_bases(m).map_err(|e| e.to_string())?;
            let mut admissible_images = BTreeSet::new();
            for b in env.members() {
                let x = envelope_project(b).map_err(|e| e.to_string())?;
                ensure!(contains(&h, &x).unwrap(), "{m}: basis {:?} projects outside", env.labels_of(b));
                if is_admissible(b) {
                    admissible_images.insert(x);
                }
            }
            let verts: BTreeSet<RationalPoint> = vertex_set(m).into_iter().collect();
            ensure!(admissible_images == verts, "{m}: admissible bases miss feasible vertices");
            for f in m.feasible_masks() {
                ensure!(env.contains(&lagrangian_image(&f)), "{m}: {f} has no admissible basis");
            }
            Ok(env.len() as u64)
        })
    })
}

fn chain_of(n: usize, sets: &[&[usize]]) -> GaleChain {
    GaleChain::new(sets.iter().map(|s| SubsetMask::of(n, s)).collect()).expect("a cover chain")
}

pub fn criterion_10(cfg: &SelftestConfig) -> CriterionReport {
    run("10", "maximal chains biject with descent classes", || {
        let c = chain_of(6, &[&[1, 3, 5], &[1, 3, 6], &[2, 3, 6], &[1, 2, 3, 6], &[1, 2, 4, 6], &[1, 3, 4, 6], &[1, 3, 5, 6]]);
        let p = chain_to_permutation(&c).map_err(|e| e.to_string())?;
        ensure!(p.images() == [3, 2, 5, 4, 6, 1], "chain from 135 gives {p}");
        let w = Permutation::new(vec![5, 3, 6, 1, 4, 2]).unwrap();
        let got = permutation_to_chain(&w, &SubsetMask::of(6, &[1, 3, 5])).map_err(|e| e.to_string())?;
        let want =
            chain_of(6, &[&[1, 3, 5], &[1, 4, 5], &[1, 4, 6], &[2, 4, 6], &[2, 5, 6], &[1, 2, 5, 6], &[1, 3, 5, 6]]);
        ensure!(got == want, "(5,3,6,1,4,2) gives {got}");
        let mut checks = 2;
        for n in 1..=cfg.max_n.min(5) {
            for s in SubsetMask::all(n - 1).map(|s| s.extend(n)) {
                let chains = maximal_chains(&s, &s.with(n)).map_err(|e| e.to_string())?;
                let perms = permutations_with_descent_set(&s).map_err(|e| e.to_string())?;
                ensure!(chains.len() == perms.len(), "n = {n}, S = {s}: {} chains, {} perms", chains.len(), perms.len());
                let mut images = BTreeSet::new();
                for c in &chains {
                    let p = chain_to_permutation(c).map_err(|e| e.to_string())?;
                    ensure!(p.descent_set() == s, "{c} maps outside the descent class");
                    ensure!(permutation_to_chain(&p, &s).ok().as_ref() == Some(c), "{c} does not round-trip");
                    images.insert(p);
                }
                ensure!(images.len() == perms.len(), "n = {n}, S = {s}: map is not injective");
                checks += chains.len() as u64;
            }
        }
        Ok(checks)
    })
}

/// `e_i - e_j` or `+-e_i`.
fn is_allowed_direction(d: &[Rational]) -> bool {
    let one = rat(1, 1);
    let minus = rat(-1, 1);
    let nonzero: Vec<&Rational> = d.iter().filter(|c| !c.is_zero()).collect();
    match nonzero.as_slice() {
        [x] => **x == one || **x == minus,
        [x, y] => (**x == one && **y == minus) || (**x == minus && **y == one),
        _ => false,
    }
}

pub fn criterion_11(cfg: &SelftestConfig) -> CriterionReport {
    run("11", "edge directions are e_i - e_j or e_i", || {
        let specs = specs_up_to(cfg.max_n.min(4));
        par_all(&specs, |_, m| {
            let verts = vertex_set(m);
            let edges = oracle::edges(&verts).map_err(|e| e.to_string())?;
            for (u, v) in &edges {
                let d = verts[*v].sub(&verts[*u]);
                ensure!(is_allowed_direction(d.coords()), "{m}: edge {} - {} has direction {d}", verts[*u], verts[*v]);
            }
            // the graph of a polytope of dimension >= 1 is connected
            if verts.len() > 1 {
                ensure!(edges.len() + 1 >= verts.len(), "{m}: only {} edges", edges.len());
            }
            Ok(edges.len() as u64)
        })
    })
}

pub fn criterion_12(_cfg: &SelftestConfig) -> CriterionReport {
    run("12", "regression values for hand-checked instances", || {
        let spec = |n: usize, s: &[usize], t: &[usize]| LpdmSpec::new(SubsetMask::of(n, s), SubsetMask::of(n, t)).unwrap();
        // six feasible sets; 45 is not below 235
        let m = spec(5, &[3, 4], &[2, 3, 5]);
        let want: Vec<Vec<i64>> = vec![vec![3, 4], vec![3, 5], vec![1, 3, 4], vec![1, 3, 5], vec![2, 3, 4], vec![2, 3, 5]];
        ensure!(m.feasible_sets().label_sets() == want, "Delta[34,235] lists {:?}", m.feasible_sets());
        ensure!(!m.feasible_sets().contains_labels(&[4, 5]), "45 is not below 235");
        // fifteen feasible sets, nine on x_3 = 1
        let m = spec(5, &[1, 3], &[2, 3, 5]);
        ensure!(m.feasible_sets().len() == 15, "Delta[13,235] has {} sets", m.feasible_sets().len());
        let f = face(&m, Facet::CoordOne(3)).map_err(|e| e.to_string())?;
        let want: Vec<Vec<i64>> = vec![
            vec![1, 3],
            vec![2, 3],
            vec![3, 4],
            vec![3, 5],
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 3, 4],
            vec![2, 3, 5],
        ];
        ensure!(f.family.label_sets() == want, "face x_3 = 1 lists {:?}", f.family);
        // the identity of S_2 lands in Delta[{}, {2}], not at asc = {1}
        let id = Permutation::identity(2);
        ensure!(snake_label(&id).is_empty() && id.ascent_set().to_vec() == [1], "identity label");
        let w = Permutation::new(vec![1, 3, 2]).unwrap();
        ensure!(snake_label(&w).to_vec() == [1] && cell_label(&w).to_vec() == [1], "(1,3,2) label");
        ensure!(w.descent_set().to_vec() == [2] && w.ascent_set().to_vec() == [1], "(1,3,2) statistics");
        // projecting 4 out of Delta[34,235] leaves a family that is no interval
        let p = project_element(&spec(5, &[3, 4], &[2, 3, 5]).feasible_sets(), 4).map_err(|e| e.to_string())?;
        let t = gale_interval_of(&p).map_err(|e| e.to_string())?;
        ensure!(!t.is_interval && t.missing == Some(vec![5]), "projection gives {t:?}");
        Ok(8)
    })
}

pub fn invariant_dimension(cfg: &SelftestConfig) -> CriterionReport {
    run("inv-d", "dimension: profiles = paths = affine rank", || {
        let specs = specs_up_to(cfg.max_n.min(5));
        par_all(&specs, |_, m| {
            let (a, b) = (dimension(m), dimension_from_paths(m));
            let c = oracle::affine_rank(&vertex_set(m));
            ensure!(a == b && b == c, "{m}: dimensions {a}, {b}, {c}");
            Ok(1)
        })
    })
}

pub fn invariant_intersection(cfg: &SelftestConfig) -> CriterionReport {
    run("inv-i", "intersections are pointwise", || {
        let n = cfg.max_n.min(4);
        let specs = all_specs(n);
        let pairs: Vec<(usize, usize)> =
            (0..specs.len()).flat_map(|i| (0..specs.len()).map(move |j| (i, j))).filter(|(i, j)| (i * 7 + j) % 5 == 0).collect();
        par_all(&pairs, |k, &(i, j)| {
            let (m1, m2) = (&specs[i], &specs[j]);
            let both = intersect(m1, m2).map_err(|e| e.to_string())?;
            let mut rng = rng_for(cfg.seed, 7000 + k as u64);
            let verts = vertex_set(m1);
            for _ in 0..20 {
                let x = random_point(&mut rng, &verts, n);
                let want = contains(&hrep(m1), &x).unwrap() && contains(&hrep(m2), &x).unwrap();
                let got = both.as_ref().map(|m| contains(&hrep(m), &x).unwrap()).unwrap_or(false);
                ensure!(want == got, "{m1} and {m2} at {x}");
            }
            for s in SubsetMask::all(n) {
                let want = contains_indicator(&hrep(m1), &s) && contains_indicator(&hrep(m2), &s);
                let got = both.as_ref().map(|m| contains_indicator(&hrep(m), &s)).unwrap_or(false);
                ensure!(want == got, "{m1} and {m2} at e_{s}");
            }
            Ok(1)
        })
    })
}

pub fn invariant_slices(cfg: &SelftestConfig) -> CriterionReport {
    run("inv-s", "slices at sum k are the rank-k polytopes", || {
        let n = cfg.max_n.min(4);
        let specs = all_specs(n);
        par_all(&specs, |i, m| {
            let mut rng = rng_for(cfg.seed, 9000 + i as u64);
            let mut checks = 0;
            for k in 0..=n {
                let layer: Vec<RationalPoint> =
                    SubsetMask::all(n).filter(|s| s.len() == k).map(|s| RationalPoint::indicator(&s)).collect();
                let verts: Vec<RationalPoint> =
                    m.feasible_masks().iter().filter(|f| f.len() == k).map(RationalPoint::indicator).collect();
                for _ in 0..10 {
                    let x = random_point(&mut rng, &layer, n);
                    if x.sum() != rat(k as i64, 1) {
                        continue;
                    }
                    let a = contains(&hrep(m), &x).unwrap();
                    let b = !verts.is_empty() && oracle::hull_membership(&verts, &x).unwrap();
                    ensure!(a == b, "{m}: slice k = {k} at {x}");
                    checks += 1;
                }
            }
            Ok(checks)
        })
    })
}

fn eulerian(n: usize, k: usize) -> u64 {
    Permutation::all(n).filter(|w| w.descent_set().len() == k).count() as u64
}

pub fn invariant_hypersimplex(cfg: &SelftestConfig) -> CriterionReport {
    run("inv-h", "hypersimplex slabs carry Eulerian volumes", || {
        let mut checks = 0;
        for n in 1..=cfg.max_n.min(5) {
            for k in 1..=n {
                let a = eulerian(n, k - 1);
                let mut lo = vec![0; n];
                let mut hi: Vec<usize> = (1..=n).map(|i| n + 1 - i).collect();
                lo[0] = k - 1;
                hi[0] = k;
                let values: Vec<BigUint> = (0..=n as u64).map(|t| oracle::count_suffix_box_points(&lo, &hi, t)).collect();
                let slab = oracle::interpolate(&values).coefficient(n);
                let want = Rational::new(BigInt::from(a), BigInt::from(factorial_big(n)));
                ensure!(slab == want, "n = {n}, k = {k}: slab volume {slab}, Eulerian {want}");
                let count = Permutation::all(n).filter(|w| cell_label(w).len() == k - 1).count() as u64;
                ensure!(count == a, "n = {n}, k = {k}: {count} simplices in the slab");
                for w in Permutation::all(n).filter(|w| cell_label(w).len() == k - 1) {
                    let ok = phi_simplex(&w).vertices.iter().all(|v| {
                        let s: i64 = v.iter().sum();
                        s == k as i64 - 1 || s == k as i64
                    });
                    ensure!(ok, "n = {n}: simplex of {w} leaves its slab");
                }
                checks += 1;
            }
        }
        Ok(checks)
    })
}

pub fn invariant_unimodular(cfg: &SelftestConfig) -> CriterionReport {
    run("inv-u", "every phi simplex is unimodular", || {
        let mut checks = 0;
        for n in 1..=(cfg.max_n + 1).min(7) {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            let unit = Rational::new(BigInt::from(1), BigInt::from(factorial_big(n)));
            checks += par_all(&perms, |_, w| {
                let v = oracle::simplex_volume(&phi_simplex(w)).map_err(|e| e.to_string())?;
                ensure!(v == unit, "{w}: volume {v}");
                Ok(1)
            })?;
        }
        Ok(checks)
    })
}

pub fn invariant_subdivision(cfg: &SelftestConfig) -> CriterionReport {
    run("inv-c", "subdivision cells tile linked polytopes", || {
        let mut rng = rng_for(cfg.seed, 11);
        let specs: Vec<LpdmSpec> =
            (0..60).map(|i| random_linked_spec(&mut rng, 1 + i % cfg.max_n.clamp(1, 6))).collect();
        par_all(&specs, |_, m| {
            let cells = subdivide(m).map_err(|e| e.to_string())?.cells;
            let sum: Rational = cells.iter().map(|c| oracle::ehrhart_volume(&hrep(c))).sum();
            let whole = oracle::ehrhart_volume(&hrep(m));
            ensure!(sum == whole, "{m}: cells sum to {sum}, whole {whole}");
            for (i, a) in cells.iter().enumerate() {
                for b in &cells[i + 1..] {
                    if let Some(c) = intersect(a, b).map_err(|e| e.to_string())? {
                        ensure!(dimension(&c) < m.n(), "{m}: cells {a} and {b} overlap");
                    }
                }
            }
            Ok(cells.len() as u64)
        })
    })
}

/// Every row in order: the twelve criteria, then the extra invariants.
pub fn run_all(cfg: &SelftestConfig) -> Vec<CriterionReport> {
    let rows: [fn(&SelftestConfig) -> CriterionReport; 19] = [
        criterion_1,
        criterion_2a,
        criterion_2b,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
        invariant_dimension,
        invariant_intersection,
        invariant_slices,
        invariant_hypersimplex,
        invariant_unimodular,
        invariant_subdivision,
    ];
    rows.iter().map(|f| f(cfg)).collect()
}

pub fn count_to_u64(c: &BigUint) -> Option<u64> {
    c.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = SelftestConfig { max_n: 3, seed: 1 };
        for r in run_all(&cfg) {
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn directions() {
        assert!(is_allowed_direction(&[rat(1, 1), rat(0, 1), rat(-1, 1)]));
        assert!(is_allowed_direction(&[rat(0, 1), rat(-1, 1)]));
        assert!(!is_allowed_direction(&[rat(1, 1), rat(1, 1)]));
        assert!(!is_allowed_direction(&[rat(0, 1), rat(0, 1)]));
    }
}
