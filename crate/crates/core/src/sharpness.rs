//! Bonnet-Myers sharpness: `min over edges of kappa == 2 / diam`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SharpnessError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rational::Rational;
use crate::report::{CheckReport, Tally, Witness};
use crate::transport::ollivier_curvature;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCurvature {
    pub u: Vertex,
    pub v: Vertex,
    pub kappa: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    #[serde(rename = "D")]
    pub degree: usize,
    #[serde(rename = "L")]
    pub diameter: u32,
    pub min_curvature: Rational,
    pub min_edge: (Vertex, Vertex),
    pub is_sharp: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeCurvature>,
}

impl SharpnessReport {
    /// `2 / L`, the curvature a sharp graph must attain.
    pub fn target(&self) -> Rational {
        Rational::new(2, i64::from(self.diameter.max(1)))
    }

    /// `2 / min kappa` when the minimum is positive.
    pub fn diameter_bound(&self) -> Option<Rational> {
        self.min_curvature.is_positive().then(|| &Rational::from_integer(2) / &self.min_curvature)
    }

    pub fn without_edges(&self) -> Self {
        SharpnessReport { edges: Vec::new(), ..self.clone() }
    }
}

/// Evaluates `kappa` on every edge (in parallel on the ambient rayon pool).
pub fn sharpness_report(g: &Graph) -> Result<SharpnessReport, SharpnessError> {
    let degree = g.regular_degree().ok_or(SharpnessError::NotRegular)?;
    let edge_list: Vec<(Vertex, Vertex)> = g.edges().collect();
    let edges = edge_list
        .par_iter()
        .map(|&(u, v)| ollivier_curvature(g, u, v).map(|kappa| EdgeCurvature { u, v, kappa }))
        .collect::<Result<Vec<_>, _>>()?;

    // first edge in (u, v) order attaining the minimum
    let min = edges
        .iter()
        .reduce(|a, b| if b.kappa < a.kappa { b } else { a })
        .cloned()
        .unwrap_or(EdgeCurvature { u: 0, v: 0, kappa: Rational::zero() });

    let diameter = g.diameter();
    let mut report = SharpnessReport {
        degree,
        diameter,
        min_curvature: min.kappa,
        min_edge: (min.u, min.v),
        is_sharp: false,
        edges,
    };
    report.is_sharp = !report.edges.is_empty() && report.min_curvature == report.target();
    if let Some(bound) = report.diameter_bound() {
        if Rational::from_integer(i64::from(diameter)) > bound {
            return Err(SharpnessError::BoundViolated { diameter, bound: bound.to_string() });
        }
    }
    Ok(report)
}

/// Per-vertex antipoles (vertices at distance `diam`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleReport {
    pub diameter: u32,
    pub poles: VertexSet,
    pub antipoles: BTreeMap<Vertex, VertexSet>,
    pub is_self_centered: bool,
}

impl PoleReport {
    pub fn unique_antipoles(&self) -> bool {
        self.antipoles.values().all(|a| a.len() == 1)
    }
}

pub fn poles(g: &Graph) -> PoleReport {
    let diameter = g.diameter();
    let antipoles: BTreeMap<Vertex, VertexSet> = g
        .vertices()
        .map(|x| (x, g.sphere(x, diameter)))
        .filter(|(_, a)| !a.is_empty())
        .collect();
    let poles: VertexSet = antipoles.keys().copied().collect();
    let is_self_centered = poles.len() == g.vertex_count();
    PoleReport { diameter, poles, antipoles, is_self_centered }
}

/// For every pole/antipole pair `(x0, xL)`: `[x0, xL] = V` and the antipole is unique.
pub fn antipole_unique_check(g: &Graph, sharp: &SharpnessReport, label: &str) -> Result<CheckReport, SharpnessError> {
    if !sharp.is_sharp {
        return Err(SharpnessError::NotSharpInput {
            min_curvature: sharp.min_curvature.to_string(),
            diameter: sharp.diameter,
        });
    }
    let pr = poles(g);
    let mut tally = Tally::new("antipole_unique");
    for (&x0, anti) in &pr.antipoles {
        if anti.len() != 1 {
            tally.fail(
                Witness::new(x0, "pole has more than one antipole")
                    .vertex("antipole_a", anti[0])
                    .vertex("antipole_b", anti[1]),
            );
        }
        for &xl in anti.iter() {
            tally.config();
            let interval = g.interval(x0, xl);
            if interval.len() != g.vertex_count() {
                let missing = g.vertices().find(|&v| !interval.contains(v)).unwrap_or(0);
                tally.fail(
                    Witness::new(x0, "interval to antipole misses a vertex")
                        .vertex("antipole", xl)
                        .vertex("missing", missing),
                );
            }
        }
    }
    Ok(tally.finish(label))
}
