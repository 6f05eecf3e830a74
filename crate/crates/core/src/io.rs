//! Plain-text instance files.
//!
//! ```text
//! # comment
//! n m
//! tail head mult in_f     (m lines)
//! ```
//!
//! A line with multiplicity `mult` expands to `mult` arcs with consecutive
//! ids, all sharing the line's `in_f` flag.

use std::fmt::Write as _;

use crate::digraph::{ArcSet, Digraph};
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_fields<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(parse_error(
            line_no,
            format!("expected {N} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0usize; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| parse_error(line_no, format!("not a nonnegative integer: {field:?}")))?;
    }
    Ok(out)
}

pub fn parse_digraph(text: &str) -> Result<(Digraph, ArcSet)> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing header line \"n m\""))?;
    let [n, m] = parse_fields::<2>(header_no, header)?;
    let mut digraph = Digraph::new(n).map_err(|e| parse_error(header_no, e.to_string()))?;
    let mut f = ArcSet::new();

    let mut seen = 0;
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if seen == m {
            return Err(parse_error(line_no, format!("more than {m} arc lines")));
        }
        seen += 1;
        let [tail, head, mult, in_f] = parse_fields::<4>(line_no, line)?;
        if mult < 1 {
            return Err(parse_error(line_no, "multiplicity must be at least 1"));
        }
        if in_f > 1 {
            return Err(parse_error(line_no, "F flag must be 0 or 1"));
        }
        for _ in 0..mult {
            let id = digraph
                .add_arc(tail, head)
                .map_err(|e| parse_error(line_no, e.to_string()))?;
            if in_f == 1 {
                f.insert(id);
            }
        }
    }
    if seen < m {
        return Err(parse_error(
            last_line,
            format!("expected {m} arc lines, found {seen}"),
        ));
    }
    Ok((digraph, f))
}

/// Serializes `digraph` and `f`, folding runs of identical consecutive arcs
/// into one multiplicity line so that parsing restores the same ids.
pub fn write_instance(digraph: &Digraph, f: &ArcSet) -> String {
    let mut runs: Vec<(usize, usize, usize, bool)> = Vec::new();
    for arc in digraph.arcs() {
        let in_f = f.contains(arc.id);
        match runs.last_mut() {
            Some((tail, head, mult, flag))
                if *tail == arc.tail && *head == arc.head && *flag == in_f =>
            {
                *mult += 1
            }
            _ => runs.push((arc.tail, arc.head, 1, in_f)),
        }
    }
    let mut out = format!("{} {}\n", digraph.vertex_count(), runs.len());
    for (tail, head, mult, in_f) in runs {
        let _ = writeln!(out, "{tail} {head} {mult} {}", u8::from(in_f));
    }
    out
}
