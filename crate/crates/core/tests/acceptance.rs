//! Acceptance suite. Each test runs one criterion at its nominal size and
//! prints a PASS/FAIL line; pinned literals are frozen beside them.

use lpdm_core::matroid::{contract, delete, envelope_bases, project_element};
use lpdm_core::oracle::{self, brute};
use lpdm_core::order::count_maximal_chains;
use lpdm_core::paths::catalan_spec;
use lpdm_core::polytope::{dimension, hrep, is_linked};
use lpdm_core::rational::rat;
use lpdm_core::selftest::{self, CriterionReport, SelftestConfig};
use lpdm_core::triangulation::{triangulate_toric, volume};
use lpdm_core::{LpdmSpec, SubsetMask};

const CFG: SelftestConfig = SelftestConfig { max_n: 6, seed: 0x5eed };

fn report(r: CriterionReport) {
    println!("{}", r.line());
    assert!(r.passed, "{}", r.line());
}

fn spec(n: usize, s: &[usize], t: &[usize]) -> LpdmSpec {
    LpdmSpec::new(SubsetMask::of(n, s), SubsetMask::of(n, t)).unwrap()
}

#[test]
fn criterion_01_exchange() {
    report(selftest::criterion_1(&CFG));
}

#[test]
fn criterion_02a_integer_points() {
    report(selftest::criterion_2a(&CFG));
}

#[test]
fn criterion_02b_hull_membership() {
    report(selftest::criterion_2b(&CFG));
}

#[test]
fn criterion_03_volume_vs_ehrhart() {
    report(selftest::criterion_3(&CFG));
}

#[test]
fn criterion_04_toric_triangulation() {
    report(selftest::criterion_4(&CFG));
}

#[test]
fn criterion_05_cube_decomposition() {
    report(selftest::criterion_5(&CFG));
}

#[test]
fn criterion_06_catalan() {
    report(selftest::criterion_6(&CFG));
}

#[test]
fn criterion_07_minors() {
    report(selftest::criterion_7(&CFG));
}

#[test]
fn criterion_08_components() {
    report(selftest::criterion_8(&CFG));
}

#[test]
fn criterion_09_envelope() {
    report(selftest::criterion_9(&CFG));
}

#[test]
fn criterion_10_chain_bijection() {
    report(selftest::criterion_10(&CFG));
}

#[test]
fn criterion_11_edge_directions() {
    report(selftest::criterion_11(&CFG));
}

#[test]
fn criterion_12_regressions() {
    report(selftest::criterion_12(&CFG));
}

#[test]
fn invariant_rows() {
    for f in [
        selftest::invariant_dimension,
        selftest::invariant_intersection,
        selftest::invariant_slices,
        selftest::invariant_hypersimplex,
        selftest::invariant_unimodular,
        selftest::invariant_subdivision,
    ] {
        report(f(&CFG));
    }
}

#[test]
fn pinned_volumes() {
    assert_eq!(volume(&spec(3, &[1], &[1, 3])).unwrap(), rat(1, 3));
    assert_eq!(volume(&spec(2, &[1], &[1, 2])).unwrap(), rat(1, 2));
    assert_eq!(volume(&spec(4, &[], &[4])).unwrap(), rat(1, 24));
    assert_eq!(volume(&spec(4, &[2], &[2, 4])).unwrap(), rat(5, 24));
    assert_eq!(volume(&spec(5, &[], &[1, 2, 3, 4, 5])).unwrap(), rat(1, 1));
    assert_eq!(oracle::ehrhart_volume(&hrep(&spec(4, &[2], &[2, 4]))), rat(5, 24));
}

#[test]
fn pinned_chain_counts() {
    let s = SubsetMask::of(6, &[1, 3, 5]);
    assert_eq!(count_maximal_chains(&s, &s.with(6)).unwrap(), 61u32.into());
    assert_eq!(brute::count_chains(&s, &s.with(6)), 61);
    assert_eq!(triangulate_toric(&spec(6, &[1, 3, 5], &[1, 3, 5, 6])).unwrap().len(), 61);
    let s = SubsetMask::of(4, &[2]);
    assert_eq!(brute::count_chains(&s, &s.with(4)), 5);
}

#[test]
fn pinned_catalan() {
    for (n, want) in [(1, 2), (2, 6), (3, 20), (4, 70), (5, 252)] {
        let m = catalan_spec(n).unwrap();
        assert_eq!(m.feasible_sets().len(), want);
        assert_eq!(dimension(&m), 2 * n - 1);
        assert!(!is_linked(&m));
        assert_eq!(brute::interval(&m.lower(), &m.upper()).len(), want);
    }
    assert_eq!(envelope_bases(&catalan_spec(1).unwrap()).unwrap().len(), 2);
    assert_eq!(envelope_bases(&catalan_spec(2).unwrap()).unwrap().len(), 14);
}

#[test]
fn pinned_minors() {
    let m = spec(5, &[1, 3], &[2, 3, 5]);
    let c = contract(&m, 3).unwrap();
    assert_eq!(c.ground(), [1, 2, 4, 5]);
    assert_eq!(c.labels_of(&c.lower()), [1]);
    assert_eq!(c.labels_of(&c.upper()), [2, 5]);
    let d = delete(&m, 4).unwrap();
    assert_eq!(d.feasible_sets().len(), m.feasible_sets().filter(|f| !f.contains(4)).len());
    // projecting out an element need not give an interval
    let m = spec(5, &[3, 4], &[2, 3, 5]);
    let p = project_element(&m.feasible_sets(), 4).unwrap();
    let t = lpdm_core::matroid::gale_interval_of(&p).unwrap();
    assert!(!t.is_interval);
    assert_eq!(t.missing, Some(vec![5]));
}
