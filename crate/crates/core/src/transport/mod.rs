//! Optimal transport between uniform measures on closed 1-balls.
//!
//! With `D`-regular graphs every 1-ball has `D + 1` points of equal mass, so
//! an optimal plan can be taken to be a bijection and `W1` reduces to an
//! integer assignment problem divided by `D + 1`.

mod geodesic;
pub mod matching;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::TransportError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rational::Rational;

pub use geodesic::{all_full_geodesics, classify_move, random_full_geodesic, transport_geodesic, GeodesicPath, Move, MoveKind};
pub use matching::{min_cost_matching, Matching, OptimalFace};

/// Uniform probability measure on `B1(center)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallMeasure {
    pub center: Vertex,
    pub support: VertexSet,
    pub mass: Rational,
}

impl BallMeasure {
    pub fn new(g: &Graph, center: Vertex) -> Self {
        let support = g.ball(center, 1);
        let mass = Rational::new(1, support.len() as i64);
        BallMeasure { center, support, mass }
    }
}

fn regular(g: &Graph) -> Result<usize, TransportError> {
    g.regular_degree().ok_or(TransportError::NotRegular)
}

fn distance_matrix(g: &Graph, rows: &[Vertex], cols: &[Vertex]) -> Vec<Vec<i64>> {
    rows.iter().map(|&u| cols.iter().map(|&v| i64::from(g.dist(u, v))).collect()).collect()
}

/// Integer cost of an optimal bijection `B1(x) -> B1(y)`.
pub fn transport_cost(g: &Graph, x: Vertex, y: Vertex) -> Result<i64, TransportError> {
    regular(g)?;
    let (bx, by) = (g.ball(x, 1), g.ball(y, 1));
    Ok(OptimalFace::solve(&distance_matrix(g, &bx, &by))?.cost)
}

pub fn wasserstein_w1(g: &Graph, x: Vertex, y: Vertex) -> Result<Rational, TransportError> {
    let d = regular(g)?;
    let c = transport_cost(g, x, y)?;
    Ok(Rational::new(c, d as i64 + 1))
}

/// `kappa(x, y) = (D + 1) / D * (1 - W1) = (D + 1 - C) / D`.
pub fn ollivier_curvature(g: &Graph, x: Vertex, y: Vertex) -> Result<Rational, TransportError> {
    let d = regular(g)?;
    if !g.adjacent(x, y) {
        return Err(TransportError::NotAnEdge(x, y));
    }
    let c = transport_cost(g, x, y)?;
    Ok(Rational::new(d as i64 + 1 - c, d as i64))
}

/// Optimal bijection between two 1-balls.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransportMap {
    pub source: Vertex,
    pub target: Vertex,
    /// `(v, T(v))`, sorted by `v`.
    pub pairs: Vec<(Vertex, Vertex)>,
    pub cost: u64,
}

impl TransportMap {
    pub fn apply(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.binary_search_by_key(&v, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    pub fn preimage(&self, w: Vertex) -> Option<Vertex> {
        self.pairs.iter().find(|p| p.1 == w).map(|p| p.0)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.pairs.iter().filter(|p| p.0 == p.1).map(|p| p.0)
    }

    pub fn domain(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.pairs.iter().map(|p| p.0)
    }
}

/// Optimal maps for one directed edge that fix `B1(x) ∩ B1(y)` pointwise.
struct GoodFace {
    source: Vertex,
    target: Vertex,
    shared: Vec<Vertex>,
    rows: Vec<Vertex>,
    cols: Vec<Vertex>,
    face: OptimalFace,
}

impl GoodFace {
    fn new(g: &Graph, x: Vertex, y: Vertex) -> Result<Self, TransportError> {
        regular(g)?;
        if !g.adjacent(x, y) {
            return Err(TransportError::NotAnEdge(x, y));
        }
        let (bx, by) = (g.ball(x, 1), g.ball(y, 1));
        let shared: Vec<Vertex> = bx.iter().copied().filter(|&v| by.contains(v)).collect();
        let rows: Vec<Vertex> = bx.iter().copied().filter(|&v| !by.contains(v)).collect();
        let cols: Vec<Vertex> = by.iter().copied().filter(|&v| !bx.contains(v)).collect();

        let unconstrained = OptimalFace::solve(&distance_matrix(g, &bx, &by))?.cost;
        let face = OptimalFace::solve(&distance_matrix(g, &rows, &cols))?;
        if face.cost > unconstrained {
            return Err(TransportError::GoodMapUnavailable {
                from: x,
                to: y,
                reason: format!("pinned optimum {} exceeds optimum {unconstrained}", face.cost),
            });
        }
        Ok(GoodFace { source: x, target: y, shared, rows, cols, face })
    }

    fn to_map(&self, assignment: &[usize]) -> Result<TransportMap, TransportError> {
        let mut pairs: Vec<(Vertex, Vertex)> = self.shared.iter().map(|&v| (v, v)).collect();
        for (i, &j) in assignment.iter().enumerate() {
            let (v, w) = (self.rows[i], self.cols[j]);
            if v == w {
                return Err(TransportError::GoodMapUnavailable {
                    from: self.source,
                    to: self.target,
                    reason: format!("residual vertex {v} forced to stay"),
                });
            }
            pairs.push((v, w));
        }
        pairs.sort_unstable();
        Ok(TransportMap { source: self.source, target: self.target, pairs, cost: self.face.cost as u64 })
    }
}

/// The canonical good optimal map: fixes `B1(x) ∩ B1(y)`, and on the rest
/// takes the lexicographically smallest optimal assignment by vertex id.
pub fn good_transport_map(g: &Graph, x: Vertex, y: Vertex) -> Result<TransportMap, TransportError> {
    let gf = GoodFace::new(g, x, y)?;
    gf.to_map(&gf.face.lex_smallest())
}

/// Up to `count` distinct good maps for `x -> y`, the canonical map first and
/// then randomized tie-breaks. Deterministic in `(seed, x, y)`.
pub fn sample_good_maps(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    count: usize,
    seed: u64,
) -> Result<Vec<TransportMap>, TransportError> {
    let gf = GoodFace::new(g, x, y)?;
    let canonical = gf.face.lex_smallest();
    let mut seen = BTreeSet::from([canonical.clone()]);
    let mut out = vec![gf.to_map(&canonical)?];
    if count <= 1 {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((x as u64) << 32) | y as u64);
    for _ in 0..count * 16 {
        if out.len() >= count {
            break;
        }
        let a = gf.face.sample(&mut rng);
        if seen.insert(a.clone()) {
            out.push(gf.to_map(&a)?);
        }
    }
    Ok(out)
}
