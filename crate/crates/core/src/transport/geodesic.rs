use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use super::TransportMap;
use crate::error::TransportError;
use crate::graph::{Graph, Vertex};

/// A shortest path `x0 ~ x1 ~ ... ~ xL` with `d(x0, xi) = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeodesicPath(Vec<Vertex>);

impl GeodesicPath {
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self, TransportError> {
        let Some(&x0) = vertices.first() else {
            return Err(TransportError::InvalidPath("empty path".into()));
        };
        for (i, w) in vertices.windows(2).enumerate() {
            if !g.adjacent(w[0], w[1]) {
                return Err(TransportError::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
            }
            if g.dist(x0, w[1]) as usize != i + 1 {
                return Err(TransportError::InvalidPath(format!("{} is not at distance {} from {x0}", w[1], i + 1)));
            }
        }
        Ok(GeodesicPath(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn start(&self) -> Vertex {
        self.0[0]
    }

    pub fn end(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Full-length geodesics from `x0` in lexicographic order, at most `limit`.
pub fn all_full_geodesics(g: &Graph, x0: Vertex, limit: usize) -> Vec<GeodesicPath> {
    fn rec(g: &Graph, x0: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<GeodesicPath>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let last = *path.last().unwrap_or(&x0);
        let k = g.dist(x0, last);
        if k == g.diameter() {
            out.push(GeodesicPath(path.clone()));
            return;
        }
        for &w in g.neighbors(last) {
            if g.dist(x0, w) == k + 1 {
                path.push(w);
                rec(g, x0, path, out, limit);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, x0, &mut vec![x0], &mut out, limit);
    out
}

/// Random walk outward from `x0`; `None` unless `x0` is a pole.
pub fn random_full_geodesic<R: Rng + ?Sized>(g: &Graph, x0: Vertex, rng: &mut R) -> Option<GeodesicPath> {
    let mut path = vec![x0];
    loop {
        let last = path[path.len() - 1];
        let k = g.dist(x0, last);
        if k == g.diameter() {
            return Some(GeodesicPath(path));
        }
        // only steps that can still reach the outermost layer
        let out: Vec<Vertex> = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| g.dist(x0, w) == k + 1 && g.vertices().any(|t| g.dist(x0, t) == g.diameter() && g.dist(w, t) + k + 1 == g.diameter()))
            .collect();
        path.push(*out.choose(rng)?);
    }
}

/// `x0, z, T^1(z), ..., T^L(z), xL` along `path`, checked to have total
/// length `L`.
pub fn transport_geodesic(
    g: &Graph,
    path: &GeodesicPath,
    z: Vertex,
    maps: &[TransportMap],
) -> Result<Vec<Vertex>, TransportError> {
    let x0 = path.start();
    if g.dist(x0, z) > 1 {
        return Err(TransportError::ZNotInBall { z, center: x0 });
    }
    let steps: Vec<_> = path.steps().collect();
    if maps.len() != steps.len() {
        let index = maps.len().min(steps.len());
        let found = maps.get(index).map_or((usize::MAX, usize::MAX), |m| (m.source, m.target));
        let expected = steps.get(index).copied().unwrap_or((usize::MAX, usize::MAX));
        return Err(TransportError::MapPathMismatch { index, expected, found });
    }
    let mut seq = vec![x0, z];
    let mut cur = z;
    for (j, (m, &step)) in maps.iter().zip(&steps).enumerate() {
        if (m.source, m.target) != step {
            return Err(TransportError::MapPathMismatch { index: j, expected: step, found: (m.source, m.target) });
        }
        cur = m.apply(cur).ok_or(TransportError::ZNotInBall { z: cur, center: m.source })?;
        seq.push(cur);
    }
    seq.push(path.end());
    let sum: u32 = seq.windows(2).map(|w| g.dist(w[0], w[1])).sum();
    let expected = path.len() as u32;
    if sum != expected {
        return Err(TransportError::GeodesicSumViolation { sequence: seq, sum, expected });
    }
    Ok(seq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Fixed,
    EdgeStep,
    Long,
}

/// Layers `m = d(x0, v)`, `n = d(x0, image)` of one transport move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub m: u32,
    pub n: u32,
    pub distance: u32,
    pub kind: MoveKind,
}

/// Classifies `v -> image` made by the `step`-th map of a geodesic from `x0`,
/// requiring `step - 2 <= m <= n <= step + 1` and `n - m = d(v, image)`.
pub fn classify_move(g: &Graph, x0: Vertex, v: Vertex, image: Vertex, step: u32) -> Result<Move, TransportError> {
    let (m, n, distance) = (g.dist(x0, v), g.dist(x0, image), g.dist(v, image));
    let ok = m <= n && n - m == distance && m + 2 >= step && n <= step + 1;
    if !ok {
        return Err(TransportError::WindowViolation { v, image, step, m, n, distance });
    }
    let kind = match distance {
        0 => MoveKind::Fixed,
        1 => MoveKind::EdgeStep,
        _ => MoveKind::Long,
    };
    Ok(Move { m, n, distance, kind })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gosset, hypercube};
    use crate::transport::good_transport_map;

    fn canonical_maps(g: &Graph, p: &GeodesicPath) -> Vec<TransportMap> {
        p.steps().map(|(a, b)| good_transport_map(g, a, b).unwrap()).collect()
    }

    #[test]
    fn path_validation() {
        let q3 = hypercube(3).unwrap();
        assert!(GeodesicPath::new(&q3, vec![0, 1, 3, 7]).is_ok());
        assert!(GeodesicPath::new(&q3, vec![0, 1, 0]).is_err());
        assert!(GeodesicPath::new(&q3, vec![0, 3]).is_err());
        assert!(GeodesicPath::new(&q3, vec![]).is_err());
    }

    #[test]
    fn cube_geodesics() {
        let q3 = hypercube(3).unwrap();
        let all = all_full_geodesics(&q3, 0, usize::MAX);
        assert_eq!(all.len(), 6);
        for p in &all {
            let maps = canonical_maps(&q3, p);
            for z in q3.ball(0, 1).iter().copied() {
                let seq = transport_geodesic(&q3, p, z, &maps).unwrap();
                assert_eq!(seq.first(), Some(&0));
                assert_eq!(seq.last(), Some(&7));
            }
            // z = x1 stays put while it is in both balls
            let x1 = p.vertices()[1];
            let seq = transport_geodesic(&q3, p, x1, &maps).unwrap();
            assert_eq!(seq[2], x1);
        }
    }

    #[test]
    fn gosset_geodesic() {
        let g = gosset().unwrap();
        let p = &all_full_geodesics(&g, 0, 1)[0];
        assert_eq!(p.len(), 3);
        let maps = canonical_maps(&g, p);
        for z in g.ball(0, 1).iter().copied() {
            transport_geodesic(&g, p, z, &maps).unwrap();
        }
    }

    #[test]
    fn geodesic_errors() {
        let q3 = hypercube(3).unwrap();
        let p = GeodesicPath::new(&q3, vec![0, 1, 3, 7]).unwrap();
        let maps = canonical_maps(&q3, &p);
        assert_eq!(transport_geodesic(&q3, &p, 3, &maps).unwrap_err(), TransportError::ZNotInBall { z: 3, center: 0 });
        assert!(matches!(
            transport_geodesic(&q3, &p, 0, &maps[..2]),
            Err(TransportError::MapPathMismatch { index: 2, .. })
        ));
        let mut swapped = maps.clone();
        swapped.swap(0, 1);
        assert!(matches!(
            transport_geodesic(&q3, &p, 0, &swapped),
            Err(TransportError::MapPathMismatch { index: 0, .. })
        ));
    }

    #[test]
    fn move_classes() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(classify_move(&q3, 0, 2, 2, 1).unwrap().kind, MoveKind::Fixed);
        let t = good_transport_map(&q3, 0, 1).unwrap();
        let mv = classify_move(&q3, 0, 2, t.apply(2).unwrap(), 1).unwrap();
        assert_eq!((mv.m, mv.n, mv.kind), (1, 2, MoveKind::EdgeStep));
        // inward move
        assert!(matches!(classify_move(&q3, 0, 3, 1, 2), Err(TransportError::WindowViolation { .. })));
        // beyond the window
        assert!(classify_move(&q3, 0, 3, 7, 1).is_err());
    }
}
