//! Structure of intervals of length two around a pole and of the second
//! transport map `T2: B1(x1) -> B1(x2)`.

use super::Verifier;
use crate::error::CheckError;
use crate::graph::Vertex;
use crate::report::{CheckReport, Tally, Witness};

impl Verifier<'_> {
    /// `[x0, x2]` is a cocktail party graph for every `x2` in `S2(x0)`, and
    /// `xbar1 = T1^-1(x2) = T2(x0)` for the good maps along `x0 ~ x1 ~ x2`.
    pub fn check_cp_interval(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("cp_interval");
        for &x2 in self.sphere(x0, 2).iter() {
            let interval = g.interval(x0, x2);
            let bad = interval.iter().copied().find_map(|a| {
                let non = interval.iter().filter(|&&b| b != a && !g.adjacent(a, b)).count();
                (non != 1).then_some((a, non))
            });
            t.expect(bad.is_none(), || {
                let (a, non) = bad.unwrap();
                Witness::new(x0, "interval [x0, x2] is not a cocktail party graph")
                    .vertex("x2", x2)
                    .vertex("a", a)
                    .value("non_neighbors_in_interval", non)
            });
        }
        for quad in self.quads(x0) {
            for t1 in self.maps(x0, quad.x1) {
                let pre = t1.preimage(quad.x2);
                t.expect(pre == Some(quad.xbar1), || {
                    Witness::new(x0, "T1^-1(x2) != xbar1")
                        .vertex("x1", quad.x1)
                        .vertex("xbar1", quad.xbar1)
                        .vertex("x2", quad.x2)
                        .value("t1_inverse_x2", fmt_opt(pre))
                });
            }
            for t2 in self.maps(quad.x1, quad.x2) {
                let img = t2.apply(x0);
                t.expect(img == Some(quad.xbar1), || {
                    Witness::new(x0, "T2(x0) != xbar1")
                        .vertex("x1", quad.x1)
                        .vertex("xbar1", quad.xbar1)
                        .vertex("x2", quad.x2)
                        .value("t2_x0", fmt_opt(img))
                });
            }
        }
        Ok(self.with_maps(t.finish(&self.label)))
    }

    /// Distinct non-adjacent `x1, xbar1` in `S1(x0)` have exactly one common
    /// neighbor in `S2(x0)`.
    pub fn check_unique_quadrilateral(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("unique_quadrilateral");
        let s1 = self.sphere(x0, 1);
        for (i, &a) in s1.iter().enumerate() {
            for &b in &s1[i + 1..] {
                if g.adjacent(a, b) {
                    continue;
                }
                let common = g.common_neighbors(a, b).filter(|&c| self.layer(x0, c) == 2).count();
                t.expect(common == 1, || {
                    Witness::new(x0, "pair does not have exactly one common neighbor in S2")
                        .vertex("x1", a)
                        .vertex("xbar1", b)
                        .value("common_in_s2", common)
                });
            }
        }
        Ok(t.finish(&self.label))
    }

    /// For `y` in `S2(x0)` with `y ~ x2`: exactly one of `y ~ x1`, `y ~ xbar1`.
    pub fn check_xor(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("xor");
        for quad in self.quads(x0) {
            for &y in g.neighbors(quad.x2) {
                if self.layer(x0, y) != 2 {
                    continue;
                }
                let (a, b) = (g.adjacent(y, quad.x1), g.adjacent(y, quad.xbar1));
                t.expect(a != b, || {
                    Witness::new(x0, "y is adjacent to both or neither of x1, xbar1")
                        .vertex("x1", quad.x1)
                        .vertex("xbar1", quad.xbar1)
                        .vertex("x2", quad.x2)
                        .vertex("y", y)
                        .value("y_adj_x1", a)
                        .value("y_adj_xbar1", b)
                });
            }
        }
        Ok(t.finish(&self.label))
    }

    /// For `w = T2(v)` along `x0 ~ x1 ~ x2`:
    /// (a) `w` in `S3` forces `v` in `S2`, `v` not within 1 of `x2`, `v ~ w`;
    /// (b) no move from `S1` to `S3`;
    /// (c) `v` in `S1` with `v !~ x2` forces `w` in `S2`, `w !~ x1`, `v ~ w ~ x2`.
    pub fn check_t2_properties(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("t2_properties");
        for (x1, x2) in self.two_step_geodesics(x0) {
            for (mi, t2) in self.maps(x1, x2).iter().enumerate() {
                for &(v, w) in &t2.pairs {
                    let (lv, lw) = (self.layer(x0, v), self.layer(x0, w));
                    let wit = |part: &str| {
                        Witness::new(x0, format!("T2 property ({part}) fails"))
                            .vertex("x1", x1)
                            .vertex("x2", x2)
                            .vertex("v", v)
                            .vertex("w", w)
                            .value("map_index", mi)
                            .value("layer_v", lv)
                            .value("layer_w", lw)
                    };
                    let a = lw != 3 || (lv == 2 && g.dist(v, x2) >= 2 && g.adjacent(v, w));
                    let b = !(lv == 1 && lw == 3);
                    let c = !(lv == 1 && !g.adjacent(v, x2))
                        || (lw == 2 && !g.adjacent(w, x1) && g.adjacent(v, w) && g.adjacent(w, x2));
                    t.config();
                    if !a {
                        t.fail(wit("a"));
                    } else if !b {
                        t.fail(wit("b"));
                    } else if !c {
                        t.fail(wit("c"));
                    }
                }
            }
        }
        Ok(self.with_maps(t.finish(&self.label)))
    }

    /// For `u` in `S1(x0)` other than `x1, xbar1`: `u` in `[x0, x2]` iff
    /// `u ~ x1` and `u ~ xbar1`.
    pub fn check_cp_tight(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("cp_tight");
        let s1 = self.sphere(x0, 1);
        for quad in self.quads(x0) {
            for &u in s1.iter() {
                if u == quad.x1 || u == quad.xbar1 {
                    continue;
                }
                let in_interval = g.dist(x0, u) + g.dist(u, quad.x2) == 2;
                let both = g.adjacent(u, quad.x1) && g.adjacent(u, quad.xbar1);
                t.expect(in_interval == both, || {
                    Witness::new(x0, "interval membership disagrees with adjacency to x1 and xbar1")
                        .vertex("x1", quad.x1)
                        .vertex("xbar1", quad.xbar1)
                        .vertex("x2", quad.x2)
                        .vertex("u", u)
                        .value("in_interval", in_interval)
                        .value("adjacent_to_both", both)
                });
            }
        }
        Ok(t.finish(&self.label))
    }

    /// Swapping the roles of `x1` and `xbar1`.
    ///
    /// Forward: for `u` in `S1` with `u ~ x1`, `u !~ x2` there is exactly one
    /// `v` in `S2` with `u ~ v ~ x2`, `v !~ x1`; it equals `T2(u)`, and
    /// `x0, u, v, xbar1` is a quadrilateral with `u !~ xbar1`.
    ///
    /// Inverse: for `u` in `S1` with `u !~ xbar1`, `u !~ x2` and `v` in `S2`
    /// with `u ~ v ~ x2`, `v ~ xbar1`: `x1, u, v, x2` is a quadrilateral with
    /// `v !~ x1`.
    pub fn check_swap_lemmas(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let mut t = Tally::new("swap_lemmas");
        let s1 = self.sphere(x0, 1);
        let s2 = self.sphere(x0, 2);
        for quad in self.quads(x0) {
            let Quad { x1, xbar1, x2 } = quad;
            let base = |reason: &str, u: Vertex| {
                Witness::new(x0, reason).vertex("x1", x1).vertex("xbar1", xbar1).vertex("x2", x2).vertex("u", u)
            };
            for &u in s1.iter() {
                if g.adjacent(u, x1) && !g.adjacent(u, x2) {
                    let cands: Vec<Vertex> = s2
                        .iter()
                        .copied()
                        .filter(|&v| g.adjacent(u, v) && g.adjacent(v, x2) && !g.adjacent(v, x1))
                        .collect();
                    let ok = cands.len() == 1 && g.adjacent(cands[0], xbar1) && !g.adjacent(u, xbar1);
                    t.expect(ok, || base("forward swap: no unique quadrilateral through xbar1", u).value("candidates", format!("{cands:?}")));
                    if cands.len() == 1 {
                        for (mi, t2) in self.maps(x1, x2).iter().enumerate() {
                            let img = t2.apply(u);
                            t.expect(img == Some(cands[0]), || {
                                base("forward swap: T2(u) is not the unique v", u)
                                    .vertex("v", cands[0])
                                    .value("t2_u", fmt_opt(img))
                                    .value("map_index", mi)
                            });
                        }
                    }
                }
                if !g.adjacent(u, xbar1) && !g.adjacent(u, x2) {
                    for &v in s2.iter() {
                        if g.adjacent(u, v) && g.adjacent(v, x2) && g.adjacent(v, xbar1) {
                            let ok = g.adjacent(x1, u) && !g.adjacent(v, x1);
                            t.expect(ok, || {
                                base("inverse swap: x1, u, v, x2 is not an induced quadrilateral", u)
                                    .vertex("v", v)
                                    .value("u_adj_x1", g.adjacent(x1, u))
                                    .value("v_adj_x1", g.adjacent(v, x1))
                            });
                        }
                    }
                }
            }
        }
        Ok(self.with_maps(t.finish(&self.label)))
    }
}

use super::Quad;

pub(super) fn fmt_opt(v: Option<Vertex>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}
