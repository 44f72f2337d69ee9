//! Resolving command-line inputs into degree sequences.
//!
//! An input is one of:
//! - a family name followed by integer parameters (`jaco 10`),
//! - a file (or `-` for stdin) holding an edge list or sequence lines,
//! - an inline sequence, either as separate integer arguments or as one
//!   quoted argument (`"3 5 3"`).

use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use curlgraph_core::graphs::io::{looks_like_edge_list, parse_edge_list};
use curlgraph_core::graphs::{
    complete, complete_bipartite, cycle, jaco, ladder, path, rasta, set_graph, wheel, SetGraphSpec,
};
use curlgraph_core::seqcore::parse_sequences;
use curlgraph_core::{degree_sequence, DiGraph, IntString, SimpleGraph, SummandSet};

use crate::AppError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Wheel,
    Ladder,
    Jaco,
    Setgraph,
    Rasta,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Wheel => "wheel",
            Family::Ladder => "ladder",
            Family::Jaco => "jaco",
            Family::Setgraph => "setgraph",
            Family::Rasta => "rasta",
        }
    }

    fn parse(s: &str) -> Option<Family> {
        Family::from_str(s, false).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Simple(SimpleGraph),
    Directed(DiGraph),
}

impl Generated {
    pub fn underlying(&self) -> SimpleGraph {
        match self {
            Generated::Simple(g) => g.clone(),
            Generated::Directed(d) => d.underlying(),
        }
    }
}

fn param_count_error(family: Family, expected: &str, got: usize) -> AppError {
    AppError::usage(format!(
        "{} expects {expected}, got {got} parameter(s)",
        family.name()
    ))
}

fn as_usize(v: u64) -> Result<usize, AppError> {
    usize::try_from(v).map_err(|_| AppError::usage(format!("parameter {v} is too large")))
}

fn single(family: Family, params: &[u64]) -> Result<usize, AppError> {
    match params {
        [n] => as_usize(*n),
        _ => Err(param_count_error(family, "1 parameter", params.len())),
    }
}

/// Vertex count implied by the parameters, checked before anything is built.
fn vertex_count(family: Family, params: &[u64]) -> Result<u128, AppError> {
    let n = |i: usize| u128::from(params[i]);
    Ok(match family {
        Family::CompleteBipartite => {
            if params.len() != 2 {
                return Err(param_count_error(family, "2 parameters", params.len()));
            }
            n(0) + n(1)
        }
        Family::Rasta => params.iter().map(|&p| u128::from(p)).sum(),
        Family::Ladder => 2 * u128::from(single(family, params)? as u64),
        Family::Setgraph => {
            let k = single(family, params)?;
            if k >= 64 {
                u128::MAX
            } else {
                (1u128 << k) - 1
            }
        }
        _ => u128::from(single(family, params)? as u64),
    })
}

pub fn generate(family: Family, params: &[u64], max_n: usize) -> Result<Generated, AppError> {
    let count = vertex_count(family, params)?;
    if count > max_n as u128 {
        return Err(AppError::usage(format!(
            "{} would have {count} vertices, above the limit of {max_n} (CURLGRAPH_MAX_N)",
            family.name()
        )));
    }
    let g = match family {
        Family::Path => Generated::Simple(path(single(family, params)?)?),
        Family::Cycle => Generated::Simple(cycle(single(family, params)?)?),
        Family::Complete => Generated::Simple(complete(single(family, params)?)?),
        Family::CompleteBipartite => Generated::Simple(complete_bipartite(
            as_usize(params[0])?,
            as_usize(params[1])?,
        )?),
        Family::Wheel => Generated::Simple(wheel(single(family, params)?)?),
        Family::Ladder => Generated::Simple(ladder(single(family, params)?)?),
        Family::Jaco => Generated::Directed(jaco(single(family, params)?)?),
        Family::Setgraph => {
            let n = u32::try_from(single(family, params)?)
                .map_err(|_| AppError::usage("setgraph parameter is too large"))?;
            Generated::Simple(set_graph(SetGraphSpec::new(n)?)?)
        }
        Family::Rasta => Generated::Directed(rasta(&SummandSet::from_unordered(params.to_vec())?)?),
    };
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// Built by a generator; connectivity and realizability hold by construction.
    Family,
    /// Degrees of an ingested edge list.
    EdgeList,
    /// A raw integer sequence.
    Sequence,
}

/// One degree sequence to analyse, with a descriptor for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolved {
    pub descriptor: String,
    pub sequence: IntString,
    pub origin: Origin,
}

fn read_source(arg: &str) -> Result<String, AppError> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| AppError::io("stdin", e))?;
        return Ok(text);
    }
    fs::read_to_string(arg).map_err(|e| AppError::io(arg, e))
}

fn from_text(name: &str, text: &str) -> Result<Vec<Resolved>, AppError> {
    if looks_like_edge_list(text) {
        let g = parse_edge_list(text)
            .map_err(|e| AppError::input(name, e))?
            .into_simple();
        return Ok(vec![Resolved {
            descriptor: name.to_string(),
            sequence: degree_sequence(&g).map_err(|e| AppError::input(name, e))?,
            origin: Origin::EdgeList,
        }]);
    }
    let seqs = parse_sequences(text).map_err(|e| AppError::input(name, e))?;
    if seqs.is_empty() {
        return Err(AppError::usage(format!("{name}: no sequences found")));
    }
    let batch = seqs.len() > 1;
    Ok(seqs
        .into_iter()
        .enumerate()
        .map(|(i, sequence)| Resolved {
            descriptor: if batch {
                format!("{name}#{}", i + 1)
            } else {
                name.to_string()
            },
            sequence,
            origin: Origin::Sequence,
        })
        .collect())
}

pub fn resolve(args: &[String], max_n: usize) -> Result<Vec<Resolved>, AppError> {
    let Some(first) = args.first() else {
        return Err(AppError::usage("no input given"));
    };
    if let Some(family) = Family::parse(first) {
        let params = args[1..]
            .iter()
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| AppError::usage(format!("invalid parameter {p:?} for {first}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let g = generate(family, &params, max_n)?.underlying();
        return Ok(vec![Resolved {
            descriptor: args.join(" "),
            sequence: degree_sequence(&g)?,
            origin: Origin::Family,
        }]);
    }
    if args.iter().all(|a| a.parse::<u64>().is_ok()) {
        let values = args.iter().map(|a| a.parse::<u64>().unwrap_or_default());
        return Ok(vec![Resolved {
            descriptor: args.join(" "),
            sequence: values.collect(),
            origin: Origin::Sequence,
        }]);
    }
    let mut out = Vec::new();
    for arg in args {
        if arg == "-" || Path::new(arg).is_file() {
            out.extend(from_text(arg, &read_source(arg)?)?);
        } else if arg.chars().all(|c| c.is_ascii_digit() || c == ' ') {
            out.extend(from_text(arg, arg)?);
        } else {
            return Err(AppError::usage(format!(
                "{arg:?} is not a family, a readable file, or an integer sequence"
            )));
        }
    }
    Ok(out)
}
