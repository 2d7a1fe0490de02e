//! Checks forced onto non-sharp graphs must fail, and their witnesses must
//! replay as genuine counterexamples.

use bmlab_core::families::{cycle, petersen};
use bmlab_core::{CheckOptions, CheckReport, Graph, Rational, Verdict, Verifier, Witness};

fn failing(r: CheckReport) -> Witness {
    assert_eq!(r.verdict, Verdict::Fail, "{r:?}");
    assert!(r.failures > 0 && r.failures <= r.configurations);
    r.witness.expect("failure carries a witness")
}

fn verifier(g: &Graph) -> Verifier<'_> {
    Verifier::new(g, "control", CheckOptions { samples: 2, seed: 1, geodesic_limit: 16 }).unwrap()
}

#[test]
fn degree_identities_witness() {
    let g = petersen().unwrap();
    let v = verifier(&g);
    let w = failing(v.check_degree_identities(0).unwrap());
    let y = w.vertices["y"];
    let k = i64::from(g.dist(w.pole, y));
    let dd = g.directional_degrees(w.pole, y);
    let (d, l) = (3i64, i64::from(g.diameter()));
    let first = Rational::from_integer(dd.d_plus as i64 - dd.d_minus as i64) == Rational::new(d * (l - 2 * k), l);
    let second = Rational::from_integer(2 * dd.d_plus as i64 + dd.d_zero as i64) == Rational::new(2 * d * (l - k), l);
    let third = Rational::from_integer(2 * dd.d_minus as i64 + dd.d_zero as i64) == Rational::new(2 * k * d, l);
    assert!(!(first && second && third));
}

#[test]
fn corollary_witness() {
    let g = petersen().unwrap();
    let w = failing(verifier(&g).check_corollary_s1_s2(0).unwrap());
    let x1 = w.vertices["x1"];
    assert_eq!(g.dist(w.pole, x1), 1);
    // D = 3, L = 2: d+(x1) should be 1, but Petersen has d+ = 2
    assert_eq!(g.directional_degrees(w.pole, x1).d_plus, 2);
}

#[test]
fn triangle_bound_witness() {
    let g = petersen().unwrap();
    let w = failing(verifier(&g).check_triangle_bound());
    let (u, v) = (w.vertices["u"], w.vertices["v"]);
    assert!(g.adjacent(u, v));
    assert_eq!(g.common_neighbors(u, v).count(), 0);
}

#[test]
fn cp_interval_witness() {
    let g = petersen().unwrap();
    let w = failing(verifier(&g).check_cp_interval(0).unwrap());
    let (x2, a) = (w.vertices["x2"], w.vertices["a"]);
    let interval = g.interval(w.pole, x2);
    assert!(interval.contains(a));
    let non = interval.iter().filter(|&&b| b != a && !g.adjacent(a, b)).count();
    assert_ne!(non, 1);
}

#[test]
fn unique_quadrilateral_witness() {
    let g = petersen().unwrap();
    let w = failing(verifier(&g).check_unique_quadrilateral(0).unwrap());
    let (a, b) = (w.vertices["x1"], w.vertices["xbar1"]);
    assert!(!g.adjacent(a, b));
    let in_s2 = g.common_neighbors(a, b).filter(|&c| g.dist(w.pole, c) == 2).count();
    assert_ne!(in_s2, 1);
}

#[test]
fn interval_antipole_witness() {
    // in C7 the interval to a layer-3 vertex is a path, so nothing is 3 away
    let g = cycle(7).unwrap();
    let w = failing(verifier(&g).check_interval_antipole(0).unwrap());
    let (x3, y) = (w.vertices["x3"], w.vertices["y"]);
    assert_eq!(g.dist(w.pole, x3), 3);
    assert!(g.interval(w.pole, x3).iter().all(|&u| g.dist(u, y) != 3));
}

#[test]
fn checks_are_deterministic_on_controls() {
    let g = petersen().unwrap();
    let a = verifier(&g).check_cp_interval(3).unwrap();
    let b = verifier(&g).check_cp_interval(3).unwrap();
    assert_eq!(a, b);
}
