//! Plain-text graph files: first line "p q", then q lines "u v".
//! Blank lines and `#` comments are skipped.

use super::Graph;
use crate::error::{Error, Result};

/// Yields (1-based line number, trimmed content) for meaningful lines.
pub fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad number {tok:?}") })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty file".into() })?;
    let mut parts = header.split_whitespace();
    let p: usize = parse_num(parts.next().unwrap_or(""), hl)?;
    let q: usize = parse_num(
        parts.next().ok_or(Error::Parse { line: hl, msg: "header needs p and q".into() })?,
        hl,
    )?;
    let mut g = Graph::new(p);
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line: ln, msg: "expected \"u v\"".into() });
        }
        let (u, v) = (parse_num(toks[0], ln)?, parse_num(toks[1], ln)?);
        g.add_edge(u, v).map_err(|e| Error::Parse { line: ln, msg: e.to_string() })?;
    }
    if g.q() != q {
        return Err(Error::Parse { line: hl, msg: format!("header says {q} edges, found {}", g.q()) });
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.q());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
