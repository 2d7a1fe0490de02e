//! Degree identities around a pole and the triangle lower bound.

use super::Verifier;
use crate::error::CheckError;
use crate::graph::Vertex;
use crate::rational::Rational;
use crate::report::{CheckReport, Tally, Witness};
use crate::sharpness::SharpnessReport;

fn q(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

impl Verifier<'_> {
    fn d_and_l(&self) -> (Rational, Rational) {
        (q(self.degree), Rational::from_integer(i64::from(self.diameter.max(1))))
    }

    /// For `y` in `S_k(x0)`:
    /// `d+ - d- = D(1 - 2k/L)`, `2d+ + d0 = 2D(1 - k/L)`, `2d- + d0 = 2kD/L`.
    pub fn check_degree_identities(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let (d, l) = self.d_and_l();
        let one = Rational::one();
        let two = Rational::from_integer(2);
        let mut t = Tally::new("degree_identities");
        for y in g.vertices() {
            let k = q(self.layer(x0, y) as usize);
            let dd = g.directional_degrees(x0, y);
            let (dm, d0, dp) = (q(dd.d_minus), q(dd.d_zero), q(dd.d_plus));
            let checks = [
                ("d+ - d-", &dp - &dm, &d * &(&one - &(&(&two * &k) / &l))),
                ("2d+ + d0", &(&two * &dp) + &d0, &(&two * &d) * &(&one - &(&k / &l))),
                ("2d- + d0", &(&two * &dm) + &d0, &(&(&two * &k) * &d) / &l),
            ];
            let bad = checks.iter().find(|(_, lhs, rhs)| lhs != rhs);
            t.expect(bad.is_none(), || {
                let (name, lhs, rhs) = bad.unwrap();
                Witness::new(x0, format!("identity {name} fails"))
                    .vertex("y", y)
                    .value("k", &k)
                    .value("d_minus", dd.d_minus)
                    .value("d_zero", dd.d_zero)
                    .value("d_plus", dd.d_plus)
                    .value("lhs", lhs)
                    .value("rhs", rhs)
            });
        }
        Ok(t.finish(&self.label))
    }

    /// `d+(x1) = D - 2D/L + 1`, `d0(x1) = 2D/L - 2` on `S1(x0)` and
    /// `d+(x1) - d+(x2) = d0(x2)/2 + 1` for every `x1` in `S1`, `x2` in `S2`.
    pub fn check_corollary_s1_s2(&self, x0: Vertex) -> Result<CheckReport, CheckError> {
        self.ensure_pole(x0)?;
        let g = self.g;
        let (d, l) = self.d_and_l();
        let two = Rational::from_integer(2);
        let two_d_over_l = &(&two * &d) / &l;
        let want_plus = &(&d - &two_d_over_l) + &Rational::one();
        let want_zero = &two_d_over_l - &two;
        let mut t = Tally::new("corollary_s1_s2");

        let s1 = self.sphere(x0, 1);
        let s2 = self.sphere(x0, 2);
        for &x1 in s1.iter() {
            let dd = g.directional_degrees(x0, x1);
            let ok = q(dd.d_plus) == want_plus && q(dd.d_zero) == want_zero;
            t.expect(ok, || {
                Witness::new(x0, "S1 degrees differ from D - 2D/L + 1 and 2D/L - 2")
                    .vertex("x1", x1)
                    .value("d_plus", dd.d_plus)
                    .value("d_zero", dd.d_zero)
                    .value("want_plus", &want_plus)
                    .value("want_zero", &want_zero)
            });
        }
        for &x1 in s1.iter() {
            let p1 = q(g.directional_degrees(x0, x1).d_plus);
            for &x2 in s2.iter() {
                let dd2 = g.directional_degrees(x0, x2);
                let lhs = &p1 - &q(dd2.d_plus);
                let rhs = &(&q(dd2.d_zero) / &two) + &Rational::one();
                t.expect(lhs == rhs, || {
                    Witness::new(x0, "d+(x1) - d+(x2) != d0(x2)/2 + 1")
                        .vertex("x1", x1)
                        .vertex("x2", x2)
                        .value("lhs", &lhs)
                        .value("rhs", &rhs)
                });
            }
        }
        Ok(t.finish(&self.label))
    }

    /// Every edge lies in at least `2D/L - 2` triangles.
    pub fn check_triangle_bound(&self) -> CheckReport {
        let g = self.g;
        let (d, l) = self.d_and_l();
        let bound = &(&(&Rational::from_integer(2) * &d) / &l) - &Rational::from_integer(2);
        let mut t = Tally::new("triangle_bound");
        for (u, v) in g.edges() {
            let tri = g.common_neighbors(u, v).count();
            t.expect(q(tri) >= bound, || {
                Witness::new(u, "edge in fewer than 2D/L - 2 triangles")
                    .vertex("u", u)
                    .vertex("v", v)
                    .value("triangles", tri)
                    .value("bound", &bound)
            });
        }
        t.finish(&self.label)
    }

    /// `kappa(x, y) <= (2 + #triangles(x, y)) / D` on every edge.
    pub fn check_curvature_triangle_bound(&self, sharp: &SharpnessReport) -> CheckReport {
        let g = self.g;
        let d = q(self.degree);
        let mut t = Tally::new("curvature_triangle_bound");
        for e in &sharp.edges {
            let tri = g.common_neighbors(e.u, e.v).count();
            let bound = &q(2 + tri) / &d;
            t.expect(e.kappa <= bound, || {
                Witness::new(e.u, "curvature exceeds (2 + triangles) / D")
                    .vertex("u", e.u)
                    .vertex("v", e.v)
                    .value("kappa", &e.kappa)
                    .value("bound", &bound)
            });
        }
        t.finish(&self.label)
    }
}
