//! Constructors for the graph families in the sharp-graph catalog, a few
//! negative controls, and the Cartesian product.
//!
//! Vertex id encodings are fixed:
//! - hypercube: the binary value of the bitstring;
//! - cocktail party: vertex `2i` is the non-neighbor of `2i + 1`;
//! - Johnson, Kneser/Petersen, Gosset pairs: colexicographic rank of the
//!   subset, which is the numeric order of its bitmask;
//! - demicube: rank of the bitstring among even-weight strings, in numeric order;
//! - product: row-major tuples, first factor most significant.

mod spec;

use crate::error::FamilyError;
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

pub use spec::{FamilyKind, FamilySpec};

fn out_of_range(family: &'static str, detail: impl Into<String>) -> FamilyError {
    FamilyError::ParameterOutOfRange { family, detail: detail.into() }
}

/// All `k`-subsets of `{0..n}` as bitmasks, in increasing numeric (colex) order.
pub(crate) fn k_subsets(n: u32, k: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(0);
        return out;
    }
    if k > n {
        return out;
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1u64 << k) - 1;
    while s < limit {
        out.push(s);
        // Gosper's hack: next integer with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

fn graph_from_predicate(masks: &[u64], adjacent: impl Fn(u64, u64) -> bool) -> Result<Graph, FamilyError> {
    let mut edges = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i + 1) {
            if adjacent(a, b) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(masks.len(), &edges)?)
}

pub fn hypercube(n: u32) -> Result<Graph, FamilyError> {
    if !(1..=20).contains(&n) {
        return Err(out_of_range("hypercube", format!("need 1 <= n <= 20, got {n}")));
    }
    let size = 1usize << n;
    let mut edges = Vec::with_capacity(size * n as usize / 2);
    for v in 0..size {
        for b in 0..n {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Ok(Graph::new(size, &edges)?)
}

/// `K_{2n}` minus the perfect matching `{2i, 2i+1}`.
pub fn cocktail_party(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(out_of_range("cocktail_party", format!("need n >= 2, got {n}")));
    }
    let mut edges = Vec::new();
    for u in 0..2 * n {
        for v in u + 1..2 * n {
            if u / 2 != v / 2 {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(2 * n, &edges)?)
}

/// `J(N, k)`: `k`-subsets of an `N`-set, adjacent when they share `k - 1` points.
pub fn johnson(n: u32, k: u32) -> Result<Graph, FamilyError> {
    if !(k >= 1 && n > k && n <= 24) {
        return Err(out_of_range("johnson", format!("need N > k >= 1 and N <= 24, got ({n}, {k})")));
    }
    let masks = k_subsets(n, k);
    graph_from_predicate(&masks, |a, b| (a & b).count_ones() == k - 1)
}

/// Halved cube on even-weight strings of length `dim`, adjacent at Hamming distance 2.
pub fn demicube(dim: u32) -> Result<Graph, FamilyError> {
    if dim % 2 == 1 {
        return Err(FamilyError::OddDimension(dim as usize));
    }
    if !(4..=16).contains(&dim) {
        return Err(out_of_range("demicube", format!("need 4 <= dim <= 16, got {dim}")));
    }
    let masks: Vec<u64> = (0..1u64 << dim).filter(|m| m.count_ones() % 2 == 0).collect();
    graph_from_predicate(&masks, |a, b| (a ^ b).count_ones() == 2)
}

/// Gosset graph: two copies `A` (ids 0..28) and `B` (ids 28..56) of the pairs
/// of an 8-set. Within a copy pairs are adjacent when they meet in one point;
/// across copies when they are disjoint.
pub fn gosset() -> Result<Graph, FamilyError> {
    let pairs = k_subsets(8, 2);
    let m = pairs.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let meet = (pairs[i] & pairs[j]).count_ones();
            if i < j && meet == 1 {
                edges.push((i, j));
                edges.push((m + i, m + j));
            }
            if meet == 0 {
                edges.push((i, m + j));
            }
        }
    }
    Ok(Graph::new(2 * m, &edges)?)
}

/// Kneser graph `K(5, 2)`.
pub fn petersen() -> Result<Graph, FamilyError> {
    let masks = k_subsets(5, 2);
    graph_from_predicate(&masks, |a, b| a & b == 0)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(out_of_range("cycle", format!("need n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(out_of_range("complete", format!("need n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::new(n, &edges)?)
}

/// Cartesian product with row-major vertex ids.
pub fn cartesian_product(factors: &[&Graph]) -> Result<Graph, FamilyError> {
    if factors.is_empty() {
        return Err(FamilyError::EmptyFactorList);
    }
    let sizes: Vec<usize> = factors.iter().map(|g| g.vertex_count()).collect();
    let total: usize = sizes.iter().product();
    // stride[i] = product of sizes after i
    let mut stride = vec![1usize; sizes.len()];
    for i in (0..sizes.len().saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * sizes[i + 1];
    }
    let mut edges = Vec::new();
    for id in 0..total {
        for (i, g) in factors.iter().enumerate() {
            let coord: Vertex = (id / stride[i]) % sizes[i];
            for &w in g.neighbors(coord) {
                if w > coord {
                    edges.push((id, id + (w - coord) * stride[i]));
                }
            }
        }
    }
    Ok(Graph::new(total, &edges)?)
}

/// Outcome of comparing `deg / diam` across product factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCheck {
    pub holds: bool,
    pub ratios: Vec<Rational>,
}

pub fn ratio_condition(factors: &[&Graph]) -> Result<RatioCheck, FamilyError> {
    let mut ratios = Vec::with_capacity(factors.len());
    for (i, g) in factors.iter().enumerate() {
        let d = g.regular_degree().ok_or(FamilyError::NotRegularFactor(i))?;
        let l = g.diameter().max(1);
        ratios.push(Rational::new(d as i64, i64::from(l)));
    }
    let holds = ratios.windows(2).all(|w| w[0] == w[1]);
    Ok(RatioCheck { holds, ratios })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_subsets() {
        assert_eq!(k_subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(3, 0), vec![0]);
        assert_eq!(k_subsets(6, 3).len(), 20);
    }

    #[test]
    fn hypercube_counts() {
        let k2 = hypercube(1).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count(), q3.diameter()), (8, 12, 3));
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count(), q4.regular_degree()), (16, 32, Some(4)));
        assert_eq!(q4.sphere(5, 2).len(), 6);
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn cocktail_party_counts() {
        let c4 = cocktail_party(2).unwrap();
        assert_eq!((c4.vertex_count(), c4.regular_degree(), c4.diameter()), (4, Some(2), 2));
        let cp3 = cocktail_party(3).unwrap();
        assert_eq!((cp3.vertex_count(), cp3.regular_degree(), cp3.diameter()), (6, Some(4), 2));
        for v in cp3.vertices() {
            assert_eq!(&*cp3.sphere(v, 2), &[v ^ 1]);
        }
        assert!(cocktail_party(1).is_err());
    }

    #[test]
    fn johnson_counts() {
        let k2 = johnson(2, 1).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let j63 = johnson(6, 3).unwrap();
        assert_eq!((j63.vertex_count(), j63.regular_degree(), j63.diameter()), (20, Some(9), 3));
        let j42 = johnson(4, 2).unwrap();
        assert_eq!((j42.vertex_count(), j42.regular_degree(), j42.diameter()), (6, Some(4), 2));
        assert!(johnson(3, 3).is_err());
        assert!(johnson(3, 0).is_err());
    }

    #[test]
    fn demicube_counts() {
        let d4 = demicube(4).unwrap();
        assert_eq!((d4.vertex_count(), d4.regular_degree()), (8, Some(6)));
        assert!(d4.diameter() <= 2);
        let d6 = demicube(6).unwrap();
        assert_eq!((d6.vertex_count(), d6.regular_degree(), d6.diameter()), (32, Some(15), 3));
        assert_eq!(demicube(5).unwrap_err(), FamilyError::OddDimension(5));
        assert!(demicube(2).is_err());
    }

    #[test]
    fn gosset_counts() {
        let g = gosset().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (56, 756));
        assert_eq!(g.regular_degree(), Some(27));
        assert_eq!(g.diameter(), 3);
        for (u, v) in g.edges() {
            assert_eq!(g.triangle_count_edge(u, v).unwrap(), 16);
        }
    }

    #[test]
    fn petersen_and_controls() {
        let p = petersen().unwrap();
        assert_eq!((p.vertex_count(), p.edge_count(), p.diameter()), (10, 15, 2));
        assert_eq!(cycle(6).unwrap().diameter(), 3);
        assert_eq!(complete(4).unwrap().regular_degree(), Some(3));
    }

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        let sq = cartesian_product(&[&k2, &k2]).unwrap();
        assert_eq!((sq.vertex_count(), sq.regular_degree(), sq.diameter()), (4, Some(2), 2));
        let q3 = hypercube(3).unwrap();
        let q33 = cartesian_product(&[&q3, &q3]).unwrap();
        assert_eq!((q33.vertex_count(), q33.regular_degree(), q33.diameter()), (64, Some(6), 6));
        let cp3 = cocktail_party(3).unwrap();
        let cc = cartesian_product(&[&cp3, &cp3]).unwrap();
        assert_eq!((cc.vertex_count(), cc.regular_degree(), cc.diameter()), (36, Some(8), 4));
        // row-major: (a, b) -> a * 8 + b
        assert!(q33.adjacent(0, 8) && q33.adjacent(0, 1) && !q33.adjacent(0, 9));
        assert_eq!(cartesian_product(&[]).unwrap_err(), FamilyError::EmptyFactorList);
    }

    #[test]
    fn ratios() {
        let q3 = hypercube(3).unwrap();
        let r = ratio_condition(&[&q3, &q3]).unwrap();
        assert!(r.holds);
        assert_eq!(r.ratios, vec![Rational::one(), Rational::one()]);

        let cp3 = cocktail_party(3).unwrap();
        let q2 = hypercube(2).unwrap();
        let r = ratio_condition(&[&cp3, &q2]).unwrap();
        assert!(!r.holds);
        assert_eq!(r.ratios, vec![Rational::from_integer(2), Rational::one()]);

        assert!(ratio_condition(&[&cp3]).unwrap().holds);
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(ratio_condition(&[&q3, &path]).unwrap_err(), FamilyError::NotRegularFactor(1));
    }
}
