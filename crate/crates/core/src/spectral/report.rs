//! Sandwiching M(G) between the spectral/twin/minor lower bounds and Z(G).

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::forcing::{ForcingError, ZeroForcingSolver};
use crate::graph::{format_set, Graph};
use crate::graph6::write_graph6;

use super::{
    check_minor_model, max_multiplicity, twin_bound, MinorModel, SpectralError, DEFAULT_TOL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("bounds need a nonempty graph")]
    EmptyGraph,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Forcing(#[from] ForcingError),
    #[error("lower bound {lower} exceeds zero forcing number {upper}")]
    Inconsistent { lower: usize, upper: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    Eigenvalue,
    Twin,
    Minor,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::Eigenvalue => "eig",
            BoundSource::Twin => "twin",
            BoundSource::Minor => "minor",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Upper {
    Exact {
        z: usize,
        witness: u64,
    },
    /// The solver ran out of budget; Z is at least this.
    Unknown {
        at_least: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Exact(usize),
    Interval { lower: usize, upper: usize },
    AtLeast(usize),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Exact(m) => write!(f, "M={m}"),
            Verdict::Interval { lower, upper } => write!(f, "{lower}<=M<={upper}"),
            Verdict::AtLeast(l) => write!(f, "M>={l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub order: usize,
    /// Largest adjacency eigenvalue multiplicity and its eigenvalue.
    pub eigen: (usize, f64),
    pub twin: usize,
    /// Best verified model and the bound `k − 1` it gives.
    pub minor: Option<(usize, MinorModel)>,
    /// Supplied models that failed verification, with the reason.
    pub rejected_models: Vec<(MinorModel, String)>,
    pub lower: usize,
    pub lower_sources: Vec<BoundSource>,
    pub upper: Upper,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy)]
pub struct BoundsOptions {
    pub tol: f64,
    pub budget: Option<usize>,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            tol: DEFAULT_TOL,
            budget: None,
        }
    }
}

/// Lower bounds from the spectrum, twins and each verified minor model,
/// against Z(G) from above.
pub fn bounds_report(
    g: &Graph,
    models: &[MinorModel],
    opts: BoundsOptions,
) -> Result<BoundsReport, BoundsError> {
    if g.order() == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    let eigen = max_multiplicity(g, opts.tol)?;
    let twin = twin_bound(g);
    let mut minor: Option<(usize, MinorModel)> = None;
    let mut rejected_models = Vec::new();
    for m in models {
        match check_minor_model(g, m) {
            Ok(()) => {
                if minor.as_ref().is_none_or(|(b, _)| m.nullity_bound() > *b) {
                    minor = Some((m.nullity_bound(), m.clone()));
                }
            }
            Err(v) => rejected_models.push((m.clone(), v.to_string())),
        }
    }
    let minor_value = minor.as_ref().map_or(0, |(b, _)| *b);
    let lower = eigen.0.max(twin).max(minor_value);
    let lower_sources = [
        (BoundSource::Eigenvalue, eigen.0),
        (BoundSource::Twin, twin),
        (BoundSource::Minor, minor_value),
    ]
    .into_iter()
    .filter(|&(_, v)| v == lower && v > 0)
    .map(|(s, _)| s)
    .collect();

    let solver = ZeroForcingSolver::new().budget(opts.budget);
    let (upper, verdict) = match solver.solve(g) {
        Ok(zf) => {
            if lower > zf.z {
                return Err(BoundsError::Inconsistent { lower, upper: zf.z });
            }
            let verdict = if lower == zf.z {
                Verdict::Exact(lower)
            } else {
                Verdict::Interval { lower, upper: zf.z }
            };
            (
                Upper::Exact {
                    z: zf.z,
                    witness: zf.witness,
                },
                verdict,
            )
        }
        Err(ForcingError::ExceedsBudget { lower_bound, .. }) => (
            Upper::Unknown {
                at_least: lower_bound,
            },
            Verdict::AtLeast(lower),
        ),
        Err(e) => return Err(e.into()),
    };

    Ok(BoundsReport {
        order: g.order(),
        eigen,
        twin,
        minor,
        rejected_models,
        lower,
        lower_sources,
        upper,
        verdict,
    })
}

impl BoundsReport {
    /// Line-oriented `key: value` block, one key per line, no trailing
    /// blank line.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        let id = write_graph6(g).unwrap_or_else(|_| "-".into());
        let _ = writeln!(out, "graph6: {id}");
        let _ = writeln!(out, "n: {}", self.order);
        let minor = self
            .minor
            .as_ref()
            .map_or("-".to_string(), |(b, m)| format!("{b} {m}"));
        let sources: Vec<String> = self.lower_sources.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(
            out,
            "L: {} [{}]",
            self.lower,
            if sources.is_empty() {
                "-".into()
            } else {
                sources.join(",")
            }
        );
        let _ = writeln!(out, "L_eig: {} @ {:.6}", self.eigen.0, self.eigen.1);
        let _ = writeln!(out, "L_twin: {}", self.twin);
        let _ = writeln!(out, "L_minor: {minor}");
        for (m, why) in &self.rejected_models {
            let _ = writeln!(out, "rejected_model: {m} ({why})");
        }
        match self.upper {
            Upper::Exact { z, witness } => {
                let _ = writeln!(out, "U: {z}");
                let _ = writeln!(out, "witness: {}", format_set(witness));
            }
            Upper::Unknown { at_least } => {
                let _ = writeln!(out, "U: unknown (>= {at_least})");
                let _ = writeln!(out, "witness: -");
            }
        }
        let _ = write!(out, "verdict: {}", self.verdict);
        out
    }
}
