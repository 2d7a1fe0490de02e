//! Transport moves along full-length geodesics from a pole.

use super::Verifier;
use crate::error::{CheckError, TransportError};
use crate::graph::Vertex;
use crate::report::{CheckReport, Tally, Witness};
use crate::transport::{all_full_geodesics, classify_move, transport_geodesic, TransportMap};

impl Verifier<'_> {
    /// Every good map `T: B1(a) -> B1(b)` with `d(x0, b) = j = d(x0, a) + 1`
    /// moves `v` from layer `m` to layer `n` with `j - 2 <= m <= n <= j + 1`
    /// and `n - m = d(v, T(v))`.
    pub fn check_move_window(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("move_window");
        for (a, b) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
            let j = g.dist(x0, b);
            if g.dist(x0, a) + 1 != j {
                continue;
            }
            for (mi, map) in self.maps(a, b).iter().enumerate() {
                for &(v, w) in &map.pairs {
                    let res = classify_move(g, x0, v, w, j);
                    t.expect(res.is_ok(), || {
                        let mut wit = Witness::new(x0, "transport move outside the layer window")
                            .vertex("a", a)
                            .vertex("b", b)
                            .vertex("v", v)
                            .vertex("image", w)
                            .value("step", j)
                            .value("map_index", mi);
                        if let Err(TransportError::WindowViolation { m, n, distance, .. }) = res {
                            wit = wit.value("m", m).value("n", n).value("distance", distance);
                        }
                        wit
                    });
                }
            }
        }
        Ok(self.with_maps(t.finish(&self.label)))
    }

    /// `x0, z, T^1(z), ..., T^L(z), xL` has total length `L` for full
    /// geodesics from `x0` and every `z` in `B1(x0)`.
    pub fn check_transport_geodesics(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("transport_geodesics");
        let ball = g.ball(x0, 1);
        for path in all_full_geodesics(g, x0, self.opts.geodesic_limit) {
            let per_step: Vec<&[TransportMap]> = path.steps().map(|(a, b)| self.maps(a, b)).collect();
            if per_step.iter().any(|m| m.is_empty()) {
                continue;
            }
            for k in 0..=self.opts.samples {
                let chain: Vec<TransportMap> = per_step.iter().map(|m| m[k % m.len()].clone()).collect();
                for &z in ball.iter() {
                    let res = transport_geodesic(g, &path, z, &chain);
                    t.expect(res.is_ok(), || {
                        let mut wit = Witness::new(x0, "transported sequence is not a geodesic")
                            .vertex("z", z)
                            .vertex("antipole", path.end())
                            .value("path", format!("{:?}", path.vertices()))
                            .value("map_index", k);
                        if let Err(TransportError::GeodesicSumViolation { sequence, sum, .. }) = &res {
                            wit = wit.value("sequence", format!("{sequence:?}")).value("sum", sum);
                        }
                        wit
                    });
                }
            }
        }
        Ok(self.with_maps(t.finish(&self.label)))
    }
}
