//! Brute-force references for the transport layer and graph metrics.

use std::collections::VecDeque;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bmlab_core::families::{cartesian_product, cocktail_party, demicube, gosset, hypercube, johnson, petersen};
use bmlab_core::transport::{min_cost_matching, transport_cost};
use bmlab_core::{good_transport_map, ollivier_curvature, sample_good_maps, wasserstein_w1, Graph, Rational};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn brute_min(cost: &[Vec<i64>]) -> (i64, Vec<usize>) {
    permutations(cost.len())
        .into_iter()
        .map(|p| (p.iter().enumerate().map(|(i, &j)| cost[i][j]).sum::<i64>(), p))
        .min()
        .unwrap()
}

fn bfs(g: &Graph, s: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; g.vertex_count()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if d[w] == u32::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Minimum over all bijections `B1(x) -> B1(y)` of the summed distances.
fn brute_transport(g: &Graph, x: usize, y: usize) -> i64 {
    let bx = g.ball(x, 1);
    let by = g.ball(y, 1);
    let cost: Vec<Vec<i64>> = bx.iter().map(|&a| by.iter().map(|&b| i64::from(g.dist(a, b))).collect()).collect();
    brute_min(&cost).0
}

#[test]
fn matcher_against_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..400 {
        let n = rng.random_range(1..=6);
        let hi = rng.random_range(1..=5);
        let cost: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.random_range(0..hi)).collect()).collect();
        let m = min_cost_matching(&cost).unwrap();
        let (best, lex) = brute_min(&cost);
        assert_eq!(m.cost, best, "{cost:?}");
        // permutations are enumerated in lex order and `min` keeps the first
        assert_eq!(m.assignment, lex, "{cost:?}");
    }
}

#[test]
fn transport_cost_against_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=5u32 {
        let g = hypercube(n).unwrap();
        for _ in 0..20 {
            let x = rng.random_range(0..g.vertex_count());
            let y = g.neighbors(x)[rng.random_range(0..g.degree(x))];
            assert_eq!(transport_cost(&g, x, y).unwrap(), brute_transport(&g, x, y));
        }
    }
    for g in [cocktail_party(3).unwrap(), johnson(5, 2).unwrap()] {
        for (x, y) in g.edges().take(10) {
            assert_eq!(transport_cost(&g, x, y).unwrap(), brute_transport(&g, x, y));
        }
    }
}

#[test]
fn hypercube_curvature_closed_form() {
    for n in 1..=6u32 {
        let g = hypercube(n).unwrap();
        let k = ollivier_curvature(&g, 0, 1).unwrap();
        assert_eq!(k, Rational::new(2, i64::from(n)));
    }
}

#[test]
fn good_maps_fix_shared_ball() {
    for g in [hypercube(4).unwrap(), johnson(6, 3).unwrap(), demicube(6).unwrap()] {
        for (x, y) in g.edges().take(8) {
            let opt = transport_cost(&g, x, y).unwrap() as u64;
            let shared: Vec<usize> = g.ball(x, 1).iter().copied().filter(|&v| g.dist(v, y) <= 1).collect();
            for m in sample_good_maps(&g, x, y, 5, 3).unwrap() {
                assert_eq!(m.cost, opt);
                let total: u64 = m.pairs.iter().map(|&(a, b)| u64::from(g.dist(a, b))).sum();
                assert_eq!(total, opt);
                let fixed: Vec<usize> = m.fixed_points().collect();
                assert_eq!(fixed, shared);
                let mut images: Vec<usize> = m.pairs.iter().map(|p| p.1).collect();
                images.sort_unstable();
                assert_eq!(images, g.ball(y, 1).to_vec());
            }
        }
    }
}

#[test]
fn sampling_is_reproducible() {
    let g = johnson(6, 3).unwrap();
    let a = sample_good_maps(&g, 0, 1, 6, 99).unwrap();
    let b = sample_good_maps(&g, 0, 1, 6, 99).unwrap();
    assert_eq!(a, b);
    assert_eq!(a[0], good_transport_map(&g, 0, 1).unwrap());
}

fn small_regular() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (1u32..=5).prop_map(|n| hypercube(n).unwrap()),
        (2usize..=6).prop_map(|n| cocktail_party(n).unwrap()),
        (3u32..=7, 1u32..=3).prop_filter("k < n", |(n, k)| k < n).prop_map(|(n, k)| johnson(n, k).unwrap()),
        (2u32..=4).prop_map(|h| demicube(2 * h).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distances_form_a_metric(g in small_regular()) {
        let n = g.vertex_count();
        for s in 0..n {
            let d = bfs(&g, s);
            for (t, &dt) in d.iter().enumerate() {
                prop_assert_eq!(g.dist(s, t), dt);
                prop_assert_eq!(g.dist(s, t), g.dist(t, s));
                prop_assert_eq!(g.dist(s, t) == 0, s == t);
            }
            let sizes: usize = (0..=g.diameter()).map(|k| g.sphere(s, k).len()).sum();
            prop_assert_eq!(sizes, n);
        }
    }

    #[test]
    fn directional_degrees_sum_to_degree(g in small_regular(), pick in any::<prop::sample::Index>()) {
        let x0 = pick.index(g.vertex_count());
        for y in g.vertices() {
            prop_assert_eq!(g.directional_degrees(x0, y).total(), g.degree(y));
        }
    }

    #[test]
    fn curvature_is_symmetric_and_w1_scaled_integer(g in small_regular(), pick in any::<prop::sample::Index>()) {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let (x, y) = edges[pick.index(edges.len())];
        prop_assert_eq!(ollivier_curvature(&g, x, y).unwrap(), ollivier_curvature(&g, y, x).unwrap());
        let d = g.regular_degree().unwrap() as i64;
        let scaled = &wasserstein_w1(&g, x, y).unwrap() * &Rational::from_integer(d + 1);
        prop_assert!(scaled.is_integer());
        prop_assert_eq!(g.triangle_count_edge(x, y).unwrap(), g.triangle_count_edge(y, x).unwrap());
    }

    #[test]
    fn johnson_complement_symmetry(n in 3u32..=8, k in 1u32..=7) {
        prop_assume!(k < n);
        let a = johnson(n, k).unwrap();
        let b = johnson(n, n - k).unwrap();
        prop_assert_eq!(a.vertex_count(), b.vertex_count());
        prop_assert_eq!(a.edge_count(), b.edge_count());
        prop_assert_eq!(a.diameter(), b.diameter());
        prop_assert_eq!(a.regular_degree(), b.regular_degree());
    }

    #[test]
    fn products_add_degree_and_diameter(a in small_regular(), b in small_regular()) {
        prop_assume!(a.vertex_count() * b.vertex_count() <= 400);
        let p = cartesian_product(&[&a, &b]).unwrap();
        prop_assert_eq!(p.vertex_count(), a.vertex_count() * b.vertex_count());
        prop_assert_eq!(p.regular_degree().unwrap(), a.regular_degree().unwrap() + b.regular_degree().unwrap());
        prop_assert_eq!(p.diameter(), a.diameter() + b.diameter());
    }

    #[test]
    fn demicube_vertex_count(h in 2u32..=6) {
        let g = demicube(2 * h).unwrap();
        prop_assert_eq!(g.vertex_count(), 1usize << (2 * h - 1));
        prop_assert_eq!(g.regular_degree().unwrap() as u32, (2 * h) * (2 * h - 1) / 2);
    }
}

#[test]
fn good_maps_are_unique_on_sharp_graphs_but_not_in_general() {
    for g in [gosset().unwrap(), johnson(6, 3).unwrap(), demicube(6).unwrap(), hypercube(3).unwrap()] {
        for (x, y) in g.edges().take(20) {
            assert_eq!(sample_good_maps(&g, x, y, 9, 0).unwrap().len(), 1);
        }
    }
    // two residual vertices on each side, all at distance 2
    let p = petersen().unwrap();
    let maps = sample_good_maps(&p, 0, p.neighbors(0)[0], 9, 0).unwrap();
    assert_eq!(maps.len(), 2);
    assert_ne!(maps[0], maps[1]);
}
