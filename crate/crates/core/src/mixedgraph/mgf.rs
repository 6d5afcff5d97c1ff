//! The MGF text format.
//!
//! ```text
//! mgf 1
//! n <N>
//! e <u> <v>     one per edge, u < v, sorted
//! a <u> <v>     one per arc, sorted
//! ```
//!
//! Lines starting with `#` are comments. Fields are separated by single
//! spaces and every line ends with a newline.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use super::{build, GraphError, MixedGraph, Vertex};

#[derive(Debug, Error)]
pub enum MgfError {
    #[error("line {line}: expected header `mgf 1`")]
    Header { line: usize },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn to_mgf(g: &MixedGraph) -> String {
    to_mgf_with_comments::<&str>(g, &[])
}

/// MGF text with `# `-prefixed comment lines between the header and the
/// order line.
pub fn to_mgf_with_comments<S: AsRef<str>>(g: &MixedGraph, comments: &[S]) -> String {
    let mut out = String::from("mgf 1\n");
    for c in comments {
        for line in c.as_ref().lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("n {}\n", g.order()));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for (u, v) in g.arcs() {
        out.push_str(&format!("a {u} {v}\n"));
    }
    out
}

fn parse_pair(fields: &[&str], line: usize) -> Result<(Vertex, Vertex), MgfError> {
    if fields.len() != 3 {
        return Err(MgfError::Syntax {
            line,
            msg: format!("expected `{} <u> <v>`", fields[0]),
        });
    }
    let num = |s: &str| {
        s.parse::<Vertex>().map_err(|_| MgfError::Syntax {
            line,
            msg: format!("bad vertex label `{s}`"),
        })
    };
    Ok((num(fields[1])?, num(fields[2])?))
}

/// Parse MGF text. Edge and arc lines may come in any order; validation is
/// that of [`build`] with the given strictness.
pub fn parse_mgf(text: &str, strict: bool) -> Result<MixedGraph, MgfError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#') && !l.is_empty());

    match lines.next() {
        Some((_, "mgf 1")) => {}
        Some((line, _)) => return Err(MgfError::Header { line }),
        None => return Err(MgfError::Header { line: 1 }),
    }
    let n = match lines.next() {
        Some((line, l)) => {
            let fields: Vec<&str> = l.split(' ').collect();
            match fields.as_slice() {
                ["n", count] => count.parse::<usize>().map_err(|_| MgfError::Syntax {
                    line,
                    msg: format!("bad order `{count}`"),
                })?,
                _ => {
                    return Err(MgfError::Syntax {
                        line,
                        msg: "expected `n <N>`".into(),
                    })
                }
            }
        }
        None => {
            return Err(MgfError::Syntax {
                line: 2,
                msg: "missing order line".into(),
            })
        }
    };

    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split(' ').collect();
        match fields[0] {
            "e" => edges.push(parse_pair(&fields, line)?),
            "a" => arcs.push(parse_pair(&fields, line)?),
            other => {
                return Err(MgfError::Syntax {
                    line,
                    msg: format!("unknown record `{other}`"),
                })
            }
        }
    }
    Ok(build(n, edges, arcs, strict)?)
}

pub fn read_mgf(path: impl AsRef<Path>, strict: bool) -> Result<MixedGraph, MgfError> {
    parse_mgf(&fs::read_to_string(path)?, strict)
}

pub fn write_mgf(path: impl AsRef<Path>, g: &MixedGraph, comments: &[String]) -> io::Result<()> {
    fs::write(path, to_mgf_with_comments(g, comments))
}
