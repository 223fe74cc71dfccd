//! Text formats: instance files, vertex lists, reduction logs and DOT.
//!
//! An instance file holds one directive per line:
//!
//! ```text
//! # comment
//! p mwns <n> <m>
//! e <u> <v>        (exactly m lines)
//! t <u>            (any number)
//! k <k>
//! ```
//!
//! Vertices are `1..=n`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::blockcut::{block_cut_forest, Node};
use crate::blocker::fmt_set;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::mwns::Instance;
use crate::reducer::{ReductionLog, ReductionStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn number<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, ParseError> {
    match tok.map(str::parse) {
        Some(Ok(v)) => Ok(v),
        Some(Err(_)) => err(line, format!("{what} must be a non-negative integer")),
        None => err(line, format!("missing {what}")),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses an instance file.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::new();
    let mut terminals = VertexSet::new();
    let mut k = None;
    let mut last = 0;
    for (ln, line) in content_lines(text) {
        last = ln;
        let mut toks = line.split_whitespace();
        let directive = toks.next().unwrap_or_default();
        if directive != "p" && header.is_none() {
            return err(ln, "expected header `p mwns <n> <m>` first");
        }
        let vertex = |tok: Option<&str>, n: usize| -> Result<Vertex, ParseError> {
            let v: Vertex = number(ln, tok, "vertex")?;
            if v == 0 || v > n {
                return err(ln, format!("vertex {v} outside 1..={n}"));
            }
            Ok(v)
        };
        match directive {
            "p" => {
                if header.is_some() {
                    return err(ln, "second header");
                }
                if toks.next() != Some("mwns") {
                    return err(ln, "header must read `p mwns <n> <m>`");
                }
                let n: usize = number(ln, toks.next(), "vertex count")?;
                let m: usize = number(ln, toks.next(), "edge count")?;
                graph = Graph::with_vertices(1..=n);
                header = Some((n, m));
            }
            "e" => {
                let n = header.expect("checked").0;
                let u = vertex(toks.next(), n)?;
                let v = vertex(toks.next(), n)?;
                if u == v {
                    return err(ln, format!("self-loop on {u}"));
                }
                if graph.has_edge(u, v) {
                    return err(ln, format!("duplicate edge {u} {v}"));
                }
                graph.add_edge(u, v).expect("vertices exist");
            }
            "t" => {
                let n = header.expect("checked").0;
                let t = vertex(toks.next(), n)?;
                if !terminals.insert(t) {
                    return err(ln, format!("terminal {t} listed twice"));
                }
            }
            "k" => {
                if k.is_some() {
                    return err(ln, "second budget line");
                }
                k = Some(number::<usize>(ln, toks.next(), "budget")?);
            }
            other => return err(ln, format!("unknown directive `{other}`")),
        }
        if toks.next().is_some() {
            return err(ln, "trailing tokens");
        }
    }
    let Some((_, m)) = header else {
        return err(last, "missing header");
    };
    if graph.num_edges() != m {
        return err(last, format!("header announces {m} edges, found {}", graph.num_edges()));
    }
    let Some(k) = k else {
        return err(last, "missing budget line `k <k>`");
    };
    Ok(Instance::new(graph, terminals, k).expect("terminals are declared vertices"))
}

/// Prints an instance with `n` = its largest vertex id.
pub fn format_instance(inst: &Instance) -> String {
    format_instance_with_n(inst, inst.graph.max_vertex().unwrap_or(0))
}

/// Prints an instance over vertices `1..=n`; ids missing from the graph come
/// back as isolated vertices when parsed.
pub fn format_instance_with_n(inst: &Instance, n: usize) -> String {
    let mut out = format!("p mwns {} {}\n", n, inst.graph.num_edges());
    for (u, v) in inst.graph.edges() {
        writeln!(out, "e {u} {v}").expect("write to string");
    }
    for t in &inst.terminals {
        writeln!(out, "t {t}").expect("write to string");
    }
    writeln!(out, "k {}", inst.k).expect("write to string");
    out
}

/// Reads vertex ids separated by whitespace or commas. A leading `YES` is
/// skipped; `NO` is rejected.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet, ParseError> {
    let mut out = VertexSet::new();
    for (ln, line) in content_lines(text) {
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            match tok {
                "YES" => {}
                "NO" => return err(ln, "no solution to read"),
                _ => {
                    out.insert(number(ln, Some(tok), "vertex")?);
                }
            }
        }
    }
    Ok(out)
}

fn parse_set(ln: usize, tok: &str) -> Result<VertexSet, ParseError> {
    let Some(inner) = tok.strip_prefix('{').and_then(|t| t.strip_suffix('}')) else {
        return err(ln, format!("expected a set like {{1,2}}, got `{tok}`"));
    };
    inner
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| number(ln, Some(t), "vertex"))
        .collect()
}

fn parse_step(ln: usize, line: &str) -> Result<ReductionStep, ParseError> {
    let mut toks = line.split_whitespace();
    let kind = toks.next().unwrap_or_default();
    let mut fields = std::collections::BTreeMap::new();
    for tok in toks {
        let Some((key, value)) = tok.split_once('=') else {
            return err(ln, format!("expected key=value, got `{tok}`"));
        };
        fields.insert(key, value);
    }
    let vertex = |key: &str| number::<Vertex>(ln, fields.get(key).copied(), key);
    let set = |key: &str| match fields.get(key) {
        Some(v) => parse_set(ln, v),
        None => err(ln, format!("missing {key}")),
    };
    match kind {
        "rr1" => Ok(ReductionStep::DropNearlySeparated(vertex("t")?)),
        "rr2" => {
            let kept: Vec<Vertex> = set("keep")?.into_iter().collect();
            let [a, b] = kept[..] else {
                return err(ln, "keep must name two terminals");
            };
            Ok(ReductionStep::DropComponentTerminal {
                x: vertex("x")?,
                y: vertex("y")?,
                dropped: vertex("drop")?,
                component: set("D")?,
                kept: (a, b),
            })
        }
        "rr3" => Ok(ReductionStep::DropUnmarked(set("drop")?)),
        "essential" => Ok(ReductionStep::EssentialVertex(vertex("x")?)),
        other => err(ln, format!("unknown step `{other}`")),
    }
}

const STEP_WORDS: [&str; 4] = ["rr1", "rr2", "rr3", "essential"];

/// A log file: the original instance followed by one step per line.
pub fn format_log(log: &ReductionLog) -> String {
    let mut out = String::from("# original instance\n");
    out.push_str(&format_instance(&log.original));
    out.push_str("# steps\n");
    for step in &log.steps {
        writeln!(out, "{step}").expect("write to string");
    }
    out
}

pub fn parse_log(text: &str) -> Result<ReductionLog, ParseError> {
    let mut instance_text = String::new();
    let mut steps = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let first = line.split_whitespace().next().unwrap_or_default();
        if STEP_WORDS.contains(&first) {
            steps.push(parse_step(i + 1, line)?);
            instance_text.push('\n');
        } else {
            instance_text.push_str(line);
            instance_text.push('\n');
        }
    }
    Ok(ReductionLog { original: parse_instance(&instance_text)?, steps })
}

/// DOT rendering with terminals drawn as boxes.
pub fn to_dot(inst: &Instance) -> String {
    let mut out = String::from("graph G {\n");
    for v in inst.graph.vertices() {
        let shape = if inst.terminals.contains(&v) { "box" } else { "circle" };
        writeln!(out, "  {v} [shape={shape}];").expect("write to string");
    }
    for (u, v) in inst.graph.edges() {
        writeln!(out, "  {u} -- {v};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the rooted block-cut forest.
pub fn forest_to_dot(g: &Graph) -> String {
    let f = block_cut_forest(g);
    let mut out = String::from("graph F {\n");
    for (id, node) in f.nodes() {
        let (label, shape) = match node {
            Node::Block(b) => (fmt_set(b), "box"),
            Node::Cut(v) => (v.to_string(), "circle"),
        };
        writeln!(out, "  n{id} [label=\"{label}\", shape={shape}];").expect("write to string");
    }
    for (id, _) in f.nodes() {
        if let Some(p) = f.parent(id) {
            writeln!(out, "  n{p} -- n{id};").expect("write to string");
        }
    }
    out.push_str("}\n");
    out
}
