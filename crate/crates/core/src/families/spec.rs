//! Family specifications: a JSON shape and a compact string grammar.
//!
//! ```text
//! spec  := name [ '(' arg { ',' arg } ')' ]
//! arg   := integer | spec
//! ```
//!
//! Shorthands `q3`, `k4`, `c6`, `cp3` stand for `hypercube(3)`, `complete(4)`,
//! `cycle(6)`, `cocktail_party(3)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Hypercube,
    CocktailParty,
    Johnson,
    Demicube,
    Gosset,
    Product,
    Petersen,
    Cycle,
    Complete,
}

impl FamilyKind {
    fn name(self) -> &'static str {
        match self {
            FamilyKind::Hypercube => "hypercube",
            FamilyKind::CocktailParty => "cocktail_party",
            FamilyKind::Johnson => "johnson",
            FamilyKind::Demicube => "demicube",
            FamilyKind::Gosset => "gosset",
            FamilyKind::Product => "product",
            FamilyKind::Petersen => "petersen",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "hypercube" | "q" => FamilyKind::Hypercube,
            "cocktail_party" | "cp" => FamilyKind::CocktailParty,
            "johnson" | "j" => FamilyKind::Johnson,
            "demicube" | "halfcube" => FamilyKind::Demicube,
            "gosset" => FamilyKind::Gosset,
            "product" => FamilyKind::Product,
            "petersen" => FamilyKind::Petersen,
            "cycle" | "c" => FamilyKind::Cycle,
            "complete" | "k" => FamilyKind::Complete,
            _ => return None,
        })
    }

    fn arity(self) -> Option<usize> {
        match self {
            FamilyKind::Gosset | FamilyKind::Petersen => Some(0),
            FamilyKind::Johnson => Some(2),
            FamilyKind::Product => None,
            _ => Some(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    #[serde(default)]
    pub params: Vec<u32>,
    #[serde(default)]
    pub factors: Vec<FamilySpec>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<u32>) -> Self {
        FamilySpec { kind, params, factors: Vec::new() }
    }

    pub fn product(factors: Vec<FamilySpec>) -> Self {
        FamilySpec { kind: FamilyKind::Product, params: Vec::new(), factors }
    }

    pub fn parse(s: &str) -> Result<Self, FamilyError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        p.skip_ws();
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(spec)
    }

    /// Checks parameter shapes and constructor ranges.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.kind.name();
        match self.kind.arity() {
            Some(k) if self.params.len() != k => {
                return Err(FamilyError::ParameterOutOfRange {
                    family: name,
                    detail: format!("expected {k} parameter(s), got {}", self.params.len()),
                });
            }
            None if self.factors.is_empty() => return Err(FamilyError::EmptyFactorList),
            _ => {}
        }
        if self.kind != FamilyKind::Product && !self.factors.is_empty() {
            return Err(FamilyError::ParameterOutOfRange {
                family: name,
                detail: "only product takes factors".into(),
            });
        }
        self.factors.iter().try_for_each(FamilySpec::validate)
    }

    /// Checks membership in the sharp-graph catalog parameter ranges
    /// (hypercube n >= 1, CP(n) n >= 3, J(2n, n) n >= 3, demicube 2n with n >= 3,
    /// Gosset, products of at least two catalog graphs).
    pub fn validate_catalog(&self) -> Result<(), FamilyError> {
        self.validate()?;
        let bad = |detail: &str| FamilyError::ParameterOutOfRange {
            family: self.kind.name(),
            detail: format!("outside catalog range: {detail}"),
        };
        let p = &self.params;
        match self.kind {
            FamilyKind::Hypercube if p[0] >= 1 => Ok(()),
            FamilyKind::CocktailParty if p[0] >= 3 => Ok(()),
            FamilyKind::Johnson if p[0] == 2 * p[1] && p[1] >= 3 => Ok(()),
            FamilyKind::Demicube if p[0].is_multiple_of(2) && p[0] >= 6 => Ok(()),
            FamilyKind::Gosset => Ok(()),
            FamilyKind::Product if self.factors.len() >= 2 => {
                self.factors.iter().try_for_each(FamilySpec::validate_catalog)
            }
            FamilyKind::Petersen | FamilyKind::Cycle | FamilyKind::Complete => {
                Err(bad("negative control"))
            }
            _ => Err(bad("parameters")),
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let p = &self.params;
        match self.kind {
            FamilyKind::Hypercube => super::hypercube(p[0]),
            FamilyKind::CocktailParty => super::cocktail_party(p[0] as usize),
            FamilyKind::Johnson => super::johnson(p[0], p[1]),
            FamilyKind::Demicube => super::demicube(p[0]),
            FamilyKind::Gosset => super::gosset(),
            FamilyKind::Petersen => super::petersen(),
            FamilyKind::Cycle => super::cycle(p[0] as usize),
            FamilyKind::Complete => super::complete(p[0] as usize),
            FamilyKind::Product => {
                let graphs = self.factors.iter().map(FamilySpec::build).collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&Graph> = graphs.iter().collect();
                super::cartesian_product(&refs)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if self.kind == FamilyKind::Product {
            f.write_str("(")?;
            for (i, s) in self.factors.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
            return f.write_str(")");
        }
        if !self.params.is_empty() {
            let args: Vec<String> = self.params.iter().map(u32::to_string).collect();
            write!(f, "({})", args.join(","))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Arg {
    Int(u32),
    Spec(FamilySpec),
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> FamilyError {
        FamilyError::Syntax { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn int(&mut self) -> Result<u32, FamilyError> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit()).to_string();
        digits.parse().map_err(|_| FamilyError::Syntax { position: start, message: "expected integer".into() })
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let start = self.pos;
        let ident = self.take_while(|c| c.is_ascii_lowercase() || c == b'_').to_string();
        if ident.is_empty() {
            return Err(self.error("expected family name"));
        }
        let kind = FamilyKind::from_name(&ident)
            .ok_or_else(|| FamilyError::Syntax { position: start, message: format!("unknown family {ident:?}") })?;

        // shorthand such as `q3`
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            if !matches!(ident.as_str(), "q" | "k" | "c" | "cp") {
                return Err(self.error("numeric suffix only allowed on q, k, c, cp"));
            }
            let n = self.int()?;
            return Ok(FamilySpec::new(kind, vec![n]));
        }
        let mut args = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                self.skip_ws();
                args.push(if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    Arg::Int(self.int()?)
                } else {
                    Arg::Spec(self.spec()?)
                });
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ')'")),
                }
            }
        }

        let mut spec = FamilySpec::new(kind, Vec::new());
        for a in args {
            match (kind, a) {
                (FamilyKind::Product, Arg::Spec(s)) => spec.factors.push(s),
                (FamilyKind::Product, Arg::Int(_)) => {
                    return Err(FamilyError::Syntax { position: start, message: "product takes graph arguments".into() })
                }
                (_, Arg::Int(n)) => spec.params.push(n),
                (_, Arg::Spec(_)) => {
                    return Err(FamilyError::Syntax {
                        position: start,
                        message: format!("{} takes integer arguments", kind.name()),
                    })
                }
            }
        }
        Ok(spec)
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilySpec::parse(s)
    }
}
