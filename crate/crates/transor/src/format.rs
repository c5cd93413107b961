//! Edge-list and DIMACS-style graph text.
//!
//! Plain lines are `u v` (an edge) or `vertex u` (an isolated vertex); `#`
//! starts a comment. A file containing a `p edge n m` header is read as
//! DIMACS instead: `e u v` edges over the integer vertices `1..=n`, `c`
//! comments.

use thiserror::Error;
use transor_core::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("self-loop at line {0}")]
    SelfLoop(usize),
    #[error("malformed line {line}: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: vertex {vertex:?} is not in 1..={n}")]
    OutOfRange { line: usize, vertex: String, n: usize },
    #[error("line {0}: second problem header")]
    SecondHeader(usize),
}

/// A parsed graph and the number of duplicate edge lines that were dropped.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub duplicates: usize,
}

pub fn parse_edge_list(text: &str) -> Result<Parsed, ParseError> {
    let lines: Vec<(usize, &str, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            (
                i + 1,
                raw,
                raw.split('#').next().unwrap_or("").split_whitespace().collect(),
            )
        })
        .collect();
    let dimacs = lines
        .iter()
        .any(|(_, _, t)| matches!(t.as_slice(), ["p", "edge", _, _]));

    let mut builder = GraphBuilder::new();
    let mut duplicates = 0;
    let mut n: Option<usize> = None;
    for (line, raw, tokens) in &lines {
        let line = *line;
        let malformed = || ParseError::Malformed {
            line,
            text: raw.to_string(),
        };
        let mut add = |u: &str, v: &str| match builder.add_edge(u, v) {
            Ok(fresh) => {
                duplicates += usize::from(!fresh);
                Ok(())
            }
            Err(_) => Err(ParseError::SelfLoop(line)),
        };
        match (dimacs, tokens.as_slice()) {
            (_, []) => {}
            (true, ["c", ..]) => {}
            (true, ["p", "edge", count, m]) => {
                if n.is_some() {
                    return Err(ParseError::SecondHeader(line));
                }
                let count: usize = count.parse().map_err(|_| malformed())?;
                m.parse::<usize>().map_err(|_| malformed())?;
                for v in 1..=count {
                    builder.add_vertex(v.to_string());
                }
                n = Some(count);
            }
            (true, ["e", u, v]) => {
                let n = n.ok_or_else(malformed)?;
                let mut ends = [String::new(), String::new()];
                for (t, end) in [u, v].into_iter().zip(&mut ends) {
                    match t.parse::<usize>() {
                        // "007" and "7" name the same vertex
                        Ok(x) if (1..=n).contains(&x) => *end = x.to_string(),
                        _ => {
                            return Err(ParseError::OutOfRange {
                                line,
                                vertex: t.to_string(),
                                n,
                            })
                        }
                    }
                }
                add(&ends[0], &ends[1])?;
            }
            (true, _) => return Err(malformed()),
            (false, ["vertex", v]) => builder.add_vertex(*v),
            (false, [u, v]) => add(u, v)?,
            (false, _) => return Err(malformed()),
        }
    }
    Ok(Parsed {
        graph: builder.build(),
        duplicates,
    })
}

/// Plain edge-list text for `g`, one edge per line, isolated vertices declared.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        out.push_str(&format!("vertex {}\n", g.label(v).as_str()));
    }
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(e.lo()).as_str(), g.label(e.hi()).as_str()));
    }
    out
}
