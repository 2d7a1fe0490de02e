//! Executable checks of the structural statements about Bonnet-Myers sharp
//! graphs, run pole by pole on concrete graphs.
//!
//! Each check returns a [`CheckReport`] counting the configurations it
//! examined and, on failure, the smallest counterexample it met. Statements
//! quantified over all good optimal transport maps are checked against the
//! canonical map plus a fixed number of seeded samples per directed edge.

mod degrees;
mod length3;
mod local;
mod transport;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::CheckError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::report::CheckReport;
use crate::sharpness::{antipole_unique_check, sharpness_report, SharpnessReport};
use crate::transport::{sample_good_maps, TransportMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    /// Seeded good maps per directed edge in addition to the canonical one.
    pub samples: usize,
    pub seed: u64,
    /// Full-length geodesics per pole for the transport-geodesic check.
    pub geodesic_limit: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { samples: 8, seed: 0, geodesic_limit: 128 }
    }
}

/// `x0 ~ x1 ~ x2` with `x2` in `S2(x0)` and `xbar1` the other middle vertex of
/// the quadrilateral, i.e. the unique `S1` neighbor of `x2` not within
/// distance 1 of `x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub x1: Vertex,
    pub xbar1: Vertex,
    pub x2: Vertex,
}

/// Graph plus everything the checks share: degree, diameter, spheres around
/// the current pole and the good maps of every directed edge.
pub struct Verifier<'g> {
    g: &'g Graph,
    label: String,
    degree: usize,
    diameter: u32,
    opts: CheckOptions,
    maps: HashMap<(Vertex, Vertex), Vec<TransportMap>>,
}

impl<'g> Verifier<'g> {
    pub fn new(g: &'g Graph, label: &str, opts: CheckOptions) -> Result<Self, CheckError> {
        let degree = g.regular_degree().ok_or(CheckError::NotRegular)?;
        let directed: Vec<(Vertex, Vertex)> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        let maps = directed
            .par_iter()
            .map(|&(a, b)| sample_good_maps(g, a, b, opts.samples + 1, opts.seed).map(|m| ((a, b), m)))
            .collect::<Result<HashMap<_, _>, _>>()?;
        Ok(Verifier { g, label: label.to_string(), degree, diameter: g.diameter(), opts, maps })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn options(&self) -> &CheckOptions {
        &self.opts
    }

    /// Canonical map first, then seeded samples.
    pub fn maps(&self, a: Vertex, b: Vertex) -> &[TransportMap] {
        self.maps.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    fn with_maps(&self, r: CheckReport) -> CheckReport {
        let distinct = self.maps.values().map(Vec::len).max().unwrap_or(0);
        r.with_maps(self.opts.samples + 1, distinct, self.opts.seed)
    }

    fn ensure_pole(&self, x0: Vertex) -> Result<(), CheckError> {
        if self.g.is_pole(x0) {
            Ok(())
        } else {
            Err(CheckError::NotAPole(x0))
        }
    }

    fn layer(&self, x0: Vertex, v: Vertex) -> u32 {
        self.g.dist(x0, v)
    }

    /// All `(x1, xbar1, x2)` around `x0` where `xbar1` is well defined.
    /// Configurations where it is not are reported by `check_cp_interval`.
    pub fn quads(&self, x0: Vertex) -> Vec<Quad> {
        let g = self.g;
        let s1 = g.sphere(x0, 1);
        let mut out = Vec::new();
        for &x2 in g.sphere(x0, 2).iter() {
            let mids: Vec<Vertex> = s1.iter().copied().filter(|&v| g.adjacent(v, x2)).collect();
            for &x1 in &mids {
                let others: Vec<Vertex> = mids.iter().copied().filter(|&v| !g.adjacent_or_equal(v, x1)).collect();
                if let [xbar1] = others[..] {
                    out.push(Quad { x1, xbar1, x2 });
                }
            }
        }
        out
    }

    /// Geodesics `x0 ~ x1 ~ x2`.
    pub fn two_step_geodesics(&self, x0: Vertex) -> Vec<(Vertex, Vertex)> {
        let g = self.g;
        let mut out = Vec::new();
        for &x1 in g.neighbors(x0) {
            for &x2 in g.neighbors(x1) {
                if g.dist(x0, x2) == 2 {
                    out.push((x1, x2));
                }
            }
        }
        out
    }

    fn sphere(&self, x0: Vertex, k: u32) -> VertexSet {
        self.g.sphere(x0, k)
    }
}

/// Per-pole checks in report order.
pub const POLE_CHECKS: &[&str] = &[
    "degree_identities",
    "corollary_s1_s2",
    "move_window",
    "transport_geodesics",
    "cp_interval",
    "unique_quadrilateral",
    "xor",
    "t2_properties",
    "cp_tight",
    "swap_lemmas",
    "uvw_theorem",
    "interval_antipole",
];

impl Verifier<'_> {
    /// Runs the per-pole check called `name` (one of [`POLE_CHECKS`]) at `x0`.
    pub fn run_pole_check(&self, name: &str, x0: Vertex) -> Option<Result<CheckReport, CheckError>> {
        Some(match name {
            "degree_identities" => self.check_degree_identities(x0),
            "corollary_s1_s2" => self.check_corollary_s1_s2(x0),
            "move_window" => self.check_move_window(x0),
            "transport_geodesics" => self.check_transport_geodesics(x0),
            "cp_interval" => self.check_cp_interval(x0),
            "unique_quadrilateral" => self.check_unique_quadrilateral(x0),
            "xor" => self.check_xor(x0),
            "t2_properties" => self.check_t2_properties(x0),
            "cp_tight" => self.check_cp_tight(x0),
            "swap_lemmas" => self.check_swap_lemmas(x0),
            "uvw_theorem" => self.check_uvw_theorem(x0),
            "interval_antipole" => self.check_interval_antipole(x0),
            _ => return None,
        })
    }
}

/// Runs every check over every pole of a sharp graph, on the ambient rayon
/// pool. The result order is fixed and independent of scheduling.
pub fn run_all(g: &Graph, label: &str, opts: &CheckOptions) -> Result<Vec<CheckReport>, CheckError> {
    let sharp = sharpness_report(g).map_err(|e| match e {
        crate::error::SharpnessError::NotRegular => CheckError::NotRegular,
        other => CheckError::Sharpness(other),
    })?;
    if !sharp.is_sharp {
        return Err(CheckError::NotSharp(Box::new(sharp.without_edges())));
    }
    let v = Verifier::new(g, label, opts.clone())?;
    run_with(&v, &sharp)
}

pub(crate) fn run_with(v: &Verifier<'_>, sharp: &SharpnessReport) -> Result<Vec<CheckReport>, CheckError> {
    let g = v.graph();
    let poles: Vec<Vertex> = g.vertices().filter(|&x| g.is_pole(x)).collect();

    let mut reports = vec![
        antipole_unique_check(g, sharp, v.label())?,
        v.check_curvature_triangle_bound(sharp),
        v.check_triangle_bound(),
    ];

    let jobs: Vec<(usize, Vertex)> =
        (0..POLE_CHECKS.len()).flat_map(|c| poles.iter().map(move |&p| (c, p))).collect();
    let partial = jobs
        .par_iter()
        .map(|&(c, p)| v.run_pole_check(POLE_CHECKS[c], p).expect("known check"))
        .collect::<Result<Vec<_>, _>>()?;
    for chunk in partial.chunks(poles.len().max(1)) {
        if let Some(merged) = chunk.iter().cloned().reduce(CheckReport::merge) {
            reports.push(merged);
        }
    }
    reports.push(v.check_self_centered_diam3());
    Ok(reports)
}
