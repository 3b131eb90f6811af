//! Text grammar naming every generator, for the command line.
//!
//! ```text
//! family order=N            all apex-family members of order N
//! family --order N          same
//! family t=T m=M n1,..,nT   members with blocks M_n1 … M_nT, T_M
//! prism N [sigma=i,j]       (C_N) with identity or transposition spokes
//! necklace B                B beads
//! heawood
//! cex16
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

use super::{
    counterexample16, enumerate_family, heawood, members_with_blocks, necklace, permutation_prism,
    FamilyError, Sigma,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("empty generator spec")]
    Empty,
    #[error("unknown generator `{0}`")]
    Unknown(String),
    #[error("{generator}: {message}")]
    Syntax {
        generator: &'static str,
        message: String,
    },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    FamilyOrder(usize),
    FamilyBlocks { ns: Vec<usize>, m: usize },
    Prism { n: usize, sigma: Sigma },
    Necklace(usize),
    Heawood,
    Cex16,
}

fn syntax(generator: &'static str, message: impl Into<String>) -> GeneratorError {
    GeneratorError::Syntax {
        generator,
        message: message.into(),
    }
}

fn number(generator: &'static str, text: &str) -> Result<usize, GeneratorError> {
    text.parse::<usize>()
        .map_err(|_| syntax(generator, format!("`{text}` is not a non-negative integer")))
}

fn list(generator: &'static str, text: &str) -> Result<Vec<usize>, GeneratorError> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| number(generator, s.trim()))
        .collect()
}

impl Generator {
    pub fn parse_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self, GeneratorError> {
        let tokens: Vec<&str> = tokens.iter().map(|t| t.as_ref()).collect();
        let (&head, rest) = tokens.split_first().ok_or(GeneratorError::Empty)?;
        let gen = match head {
            "family" => parse_family(rest)?,
            "prism" => parse_prism(rest)?,
            "necklace" => match rest {
                [b] => Generator::Necklace(number("necklace", b)?),
                _ => return Err(syntax("necklace", "expected `necklace B`")),
            },
            "heawood" | "cex16" if !rest.is_empty() => {
                return Err(syntax(
                    "named graph",
                    format!("`{head}` takes no arguments"),
                ))
            }
            "heawood" => Generator::Heawood,
            "cex16" => Generator::Cex16,
            other => return Err(GeneratorError::Unknown(other.to_string())),
        };
        gen.check_size()?;
        Ok(gen)
    }

    /// Rejects parameters whose graphs exceed [`MAX_VERTICES`] before any
    /// construction happens.
    fn check_size(&self) -> Result<(), GeneratorError> {
        let order = match self {
            Generator::FamilyOrder(n) => *n,
            Generator::FamilyBlocks { ns, m } => ns
                .iter()
                .try_fold(2 * m + 4, |acc: usize, &n| {
                    acc.checked_add(n.checked_mul(2)?.checked_add(4)?)
                })
                .unwrap_or(usize::MAX),
            Generator::Prism { n, .. } => n.saturating_mul(2),
            Generator::Necklace(b) => b.saturating_mul(6),
            Generator::Heawood => 14,
            Generator::Cex16 => 16,
        };
        if order > MAX_VERTICES {
            return Err(syntax(
                "size",
                format!("order {order} exceeds {MAX_VERTICES}"),
            ));
        }
        Ok(())
    }

    pub fn graphs(&self) -> Result<Vec<Graph>, GeneratorError> {
        Ok(match self {
            Generator::FamilyOrder(order) => enumerate_family(*order)?,
            Generator::FamilyBlocks { ns, m } => members_with_blocks(ns, *m)?
                .into_iter()
                .map(|mem| mem.graph)
                .collect(),
            Generator::Prism { n, sigma } => vec![permutation_prism(*n, *sigma)?],
            Generator::Necklace(b) => vec![necklace(*b)?],
            Generator::Heawood => vec![heawood()],
            Generator::Cex16 => vec![counterexample16()],
        })
    }
}

fn parse_family(rest: &[&str]) -> Result<Generator, GeneratorError> {
    let mut order = None;
    let mut t = None;
    let mut m = None;
    let mut ns = None;
    let mut it = rest.iter();
    while let Some(&tok) = it.next() {
        if tok == "--order" {
            let v = it
                .next()
                .ok_or_else(|| syntax("family", "--order needs a value"))?;
            order = Some(number("family", v)?);
        } else if let Some(v) = tok
            .strip_prefix("--order=")
            .or_else(|| tok.strip_prefix("order="))
        {
            order = Some(number("family", v)?);
        } else if let Some(v) = tok.strip_prefix("t=") {
            t = Some(number("family", v)?);
        } else if let Some(v) = tok.strip_prefix("m=") {
            m = Some(number("family", v)?);
        } else if ns.is_none() && tok.chars().all(|c| c.is_ascii_digit() || c == ',') {
            ns = Some(list("family", tok)?);
        } else {
            return Err(syntax("family", format!("unexpected token `{tok}`")));
        }
    }
    match (order, t, m) {
        (Some(order), None, None) if ns.is_none() => Ok(Generator::FamilyOrder(order)),
        (None, Some(t), Some(m)) => {
            let ns = ns.unwrap_or_default();
            if ns.len() != t {
                return Err(syntax(
                    "family",
                    format!("t={t} but {} M-indices given", ns.len()),
                ));
            }
            Ok(Generator::FamilyBlocks { ns, m })
        }
        _ => Err(syntax(
            "family",
            "expected `family order=N` or `family t=T m=M n1,..,nT`",
        )),
    }
}

fn parse_prism(rest: &[&str]) -> Result<Generator, GeneratorError> {
    let (n, sigma) = match rest {
        [n] => (number("prism", n)?, Sigma::Identity),
        [n, s] => {
            let spec = s
                .strip_prefix("sigma=")
                .ok_or_else(|| syntax("prism", format!("expected sigma=i,j, got `{s}`")))?;
            let sigma = if spec == "id" {
                Sigma::Identity
            } else {
                match list("prism", spec)?.as_slice() {
                    [i, j] => Sigma::Transposition(*i, *j),
                    _ => return Err(syntax("prism", "sigma needs exactly two indices")),
                }
            };
            (number("prism", n)?, sigma)
        }
        _ => return Err(syntax("prism", "expected `prism N [sigma=i,j]`")),
    };
    Ok(Generator::Prism { n, sigma })
}

impl FromStr for Generator {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        Generator::parse_tokens(&tokens)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::FamilyOrder(n) => write!(f, "family order={n}"),
            Generator::FamilyBlocks { ns, m } => {
                let list: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                write!(f, "family t={} m={m}", ns.len())?;
                if !ns.is_empty() {
                    write!(f, " {}", list.join(","))?;
                }
                Ok(())
            }
            Generator::Prism {
                n,
                sigma: Sigma::Identity,
            } => write!(f, "prism {n}"),
            Generator::Prism {
                n,
                sigma: Sigma::Transposition(i, j),
            } => {
                write!(f, "prism {n} sigma={i},{j}")
            }
            Generator::Necklace(b) => write!(f, "necklace {b}"),
            Generator::Heawood => write!(f, "heawood"),
            Generator::Cex16 => write!(f, "cex16"),
        }
    }
}
