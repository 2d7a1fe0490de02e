//! Statements about three consecutive layers around a pole.

use super::local::fmt_opt;
use super::Verifier;
use crate::error::CheckError;
use crate::graph::Vertex;
use crate::report::{CheckReport, Tally, Witness};

impl Verifier<'_> {
    /// For `u` in `S1(x0)`, `v = T1(u)`, `w = T2(v)` pairwise distinct:
    /// `w` in `S3`, `u, x2` in `[x0, w]` and `d(u, x2) = 3`.
    pub fn check_uvw_theorem(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("uvw_theorem");
        if self.diameter < 3 {
            return Ok(self.with_maps(t.finish(&self.label)));
        }
        let rounds = self.opts.samples + 1;
        let s1 = self.sphere(x0, 1);
        for (x1, x2) in self.two_step_geodesics(x0) {
            let (m1, m2) = (self.maps(x0, x1), self.maps(x1, x2));
            if m1.is_empty() || m2.is_empty() {
                continue;
            }
            for k in 0..rounds {
                let (t1, t2) = (&m1[k % m1.len()], &m2[k % m2.len()]);
                for &u in s1.iter() {
                    let v = t1.apply(u);
                    let w = v.and_then(|v| t2.apply(v));
                    let (Some(v), Some(w)) = (v, w) else {
                        t.expect(false, || {
                            Witness::new(x0, "map undefined along u -> T1(u) -> T2(T1(u))")
                                .vertex("x1", x1)
                                .vertex("x2", x2)
                                .vertex("u", u)
                                .value("v", fmt_opt(v))
                                .value("map_index", k)
                        });
                        continue;
                    };
                    if u == v || v == w || u == w {
                        continue;
                    }
                    let ok = g.dist(x0, w) == 3
                        && g.dist(x0, u) + g.dist(u, w) == 3
                        && g.dist(x0, x2) + g.dist(x2, w) == 3
                        && g.dist(u, x2) == 3;
                    t.expect(ok, || {
                        Witness::new(x0, "pairwise distinct u, v, w without w in S3 and d(u, x2) = 3")
                            .vertex("x1", x1)
                            .vertex("x2", x2)
                            .vertex("u", u)
                            .vertex("v", v)
                            .vertex("w", w)
                            .value("layer_w", g.dist(x0, w))
                            .value("d_u_x2", g.dist(u, x2))
                            .value("map_index", k)
                    });
                }
            }
        }
        Ok(self.with_maps(t.finish(&self.label)))
    }

    /// For `x3` in `S3(x0)` and `y` in `[x0, x3]` at layer 2 there is `u` in
    /// `[x0, x3]` with `d(u, y) = 3`.
    pub fn check_interval_antipole(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("interval_antipole");
        if self.diameter < 3 {
            return Ok(t.finish(&self.label));
        }
        for &x3 in self.sphere(x0, 3).iter() {
            let interval = g.interval(x0, x3);
            for &y in interval.iter().filter(|&&y| g.dist(x0, y) == 2) {
                let found = interval.iter().any(|&u| g.dist(u, y) == 3);
                t.expect(found, || {
                    Witness::new(x0, "no vertex of [x0, x3] at distance 3 from y")
                        .vertex("x3", x3)
                        .vertex("y", y)
                });
            }
        }
        Ok(t.finish(&self.label))
    }

    /// Diameter 3 forces every vertex to be a pole.
    pub fn check_self_centered_diam3(&self) -> CheckReport {
        const NAME: &str = "self_centered_diam3";
        if self.diameter != 3 {
            return CheckReport::skipped(NAME, &self.label, format!("diameter is {}, not 3", self.diameter));
        }
        let g = self.g;
        let mut t = Tally::new(NAME);
        for x in g.vertices() {
            t.expect(g.is_pole(x), || Witness::new(x, "vertex has eccentricity below 3"));
        }
        t.finish(&self.label)
    }
}
