//! Verdicts of individual checks, with a counterexample witness on failure.
//!
//! Reports merge associatively and commutatively: counts add, and the
//! smallest witness (by pole, then content) is kept.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Applicable in principle, but no configuration existed.
    Vacuous,
    /// Not applicable to this graph (e.g. a diameter-3 statement on diameter 6).
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub pole: Vertex,
    pub reason: String,
    pub vertices: BTreeMap<String, Vertex>,
    pub values: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(pole: Vertex, reason: impl Into<String>) -> Self {
        Witness { pole, reason: reason.into(), vertices: BTreeMap::new(), values: BTreeMap::new() }
    }

    pub fn vertex(mut self, name: &str, v: Vertex) -> Self {
        self.vertices.insert(name.to_string(), v);
        self
    }

    pub fn value(mut self, name: &str, v: impl Display) -> Self {
        self.values.insert(name.to_string(), v.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub graph: String,
    pub configurations: u64,
    pub failures: u64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Good maps requested per directed edge (canonical plus samples); 0 when map-free.
    pub map_samples: usize,
    /// Most distinct good maps found for any one directed edge.
    #[serde(default)]
    pub distinct_maps: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn skipped(check: &str, graph: &str, note: impl Into<String>) -> Self {
        CheckReport {
            check: check.to_string(),
            graph: graph.to_string(),
            configurations: 0,
            failures: 0,
            verdict: Verdict::Skipped,
            witness: None,
            map_samples: 0,
            distinct_maps: 0,
            seed: None,
            note: Some(note.into()),
        }
    }

    pub fn with_maps(mut self, samples: usize, distinct: usize, seed: u64) -> Self {
        self.map_samples = samples;
        self.distinct_maps = distinct;
        self.seed = Some(seed);
        self
    }

    fn settle(&mut self) {
        self.verdict = if self.failures > 0 {
            Verdict::Fail
        } else if self.verdict == Verdict::Skipped {
            Verdict::Skipped
        } else if self.configurations > 0 {
            Verdict::Pass
        } else {
            Verdict::Vacuous
        };
    }

    /// Combines two partial reports of the same check.
    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        debug_assert_eq!(self.check, other.check);
        let both_skipped = self.verdict == Verdict::Skipped && other.verdict == Verdict::Skipped;
        self.configurations += other.configurations;
        self.failures += other.failures;
        self.map_samples = self.map_samples.max(other.map_samples);
        self.distinct_maps = self.distinct_maps.max(other.distinct_maps);
        self.witness = match (self.witness.take(), other.witness) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.note = self.note.or(other.note);
        self.verdict = if both_skipped { Verdict::Skipped } else { Verdict::Pass };
        self.settle();
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

/// Accumulates configurations and failures while a check runs.
#[derive(Debug, Clone)]
pub struct Tally {
    name: &'static str,
    configurations: u64,
    failures: u64,
    witness: Option<Witness>,
}

impl Tally {
    pub fn new(name: &'static str) -> Self {
        Tally { name, configurations: 0, failures: 0, witness: None }
    }

    pub fn config(&mut self) {
        self.configurations += 1;
    }

    pub fn fail(&mut self, w: Witness) {
        self.failures += 1;
        self.witness = Some(match self.witness.take() {
            Some(old) => old.min(w),
            None => w,
        });
    }

    /// Counts one configuration and records a failure unless `ok`.
    pub fn expect(&mut self, ok: bool, w: impl FnOnce() -> Witness) {
        self.config();
        if !ok {
            self.fail(w());
        }
    }

    pub fn failures(&self) -> u64 {
        self.failures
    }

    pub fn finish(self, graph: &str) -> CheckReport {
        let mut r = CheckReport {
            check: self.name.to_string(),
            graph: graph.to_string(),
            configurations: self.configurations,
            failures: self.failures,
            verdict: Verdict::Pass,
            witness: self.witness,
            map_samples: 0,
            distinct_maps: 0,
            seed: None,
            note: None,
        };
        r.settle();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let t = Tally::new("x");
        assert_eq!(t.finish("g").verdict, Verdict::Vacuous);
        let mut t = Tally::new("x");
        t.expect(true, || unreachable!());
        assert_eq!(t.finish("g").verdict, Verdict::Pass);
        let mut t = Tally::new("x");
        t.expect(false, || Witness::new(3, "bad"));
        let r = t.finish("g");
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn merge_is_order_independent() {
        let mk = |pole: Vertex, ok: bool| {
            let mut t = Tally::new("c");
            t.expect(ok, || Witness::new(pole, "w").vertex("y", pole + 1));
            t.finish("g")
        };
        let (a, b, c) = (mk(4, false), mk(1, false), mk(2, true));
        let left = a.clone().merge(b.clone()).merge(c.clone());
        let right = c.merge(b.merge(a));
        assert_eq!(left, right);
        assert_eq!(left.witness.as_ref().unwrap().pole, 1);
        assert_eq!((left.configurations, left.failures), (3, 2));

        let s = CheckReport::skipped("c", "g", "n/a");
        assert_eq!(s.clone().merge(s.clone()).verdict, Verdict::Skipped);
        assert_eq!(s.merge(mk(0, true)).verdict, Verdict::Pass);
    }
}
