//! Line-based text formats.
//!
//! ```text
//! sg 4          # header: vertex count
//! e 0 1 +       # edge u v colour, colour one of + - *
//! l 0 2 5       # instance files: list of vertex 0
//! f 0 2 1       # solution files: vertex 0 maps to 2, switched
//! ```
//!
//! CSP files hold `v <name>` and `q <a> <b> <c> <d>` lines instead.
//! `#` starts a comment anywhere. Errors carry 1-based line and column.

use std::collections::HashMap;
use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Colour, SignedGraph, Switching};
use crate::hardness::QuadCsp;
use crate::solver::{Instance, Solution};

struct Line<'a> {
    no: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse { line: self.no, column, message: message.into() }
    }

    fn keyword(&self) -> &'a str {
        self.tokens[0].1
    }

    fn arity(&self, want: usize) -> Result<()> {
        if self.tokens.len() != want + 1 {
            let col = self.tokens.get(want + 1).map_or(self.tokens.last().unwrap().0, |t| t.0);
            return Err(self.error(col, format!("`{}` takes {want} fields, found {}", self.keyword(), self.tokens.len() - 1)));
        }
        Ok(())
    }

    fn field<T: FromStr>(&self, i: usize, what: &str) -> Result<T> {
        let (col, tok) = self.tokens[i];
        tok.parse().map_err(|_| self.error(col, format!("expected {what}, found `{tok}`")))
    }

    fn vertex(&self, i: usize, n: usize) -> Result<usize> {
        let v: usize = self.field(i, "a vertex id")?;
        if v >= n {
            return Err(self.error(self.tokens[i].0, format!("vertex {v} out of range 0..{n}")));
        }
        Ok(v)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap();
        let mut tokens = Vec::new();
        let mut start = None;
        for (at, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(at),
                (true, Some(s)) => {
                    tokens.push((body[..s].chars().count() + 1, &body[s..at]));
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some(Line { no: i + 1, tokens })
    })
}

fn eof(text: &str, message: &str) -> Error {
    Error::Parse { line: text.lines().count().max(1), column: 1, message: message.into() }
}

/// The header, the graph and the remaining non-edge lines.
fn parse_body<'a>(text: &'a str, extra: &[&str]) -> Result<(SignedGraph, Vec<Line<'a>>)> {
    let mut it = lines(text);
    let head = it.next().ok_or_else(|| eof(text, "empty input, expected `sg <n>`"))?;
    if head.keyword() != "sg" {
        return Err(head.error(1, format!("expected `sg <n>`, found `{}`", head.keyword())));
    }
    head.arity(1)?;
    let n: usize = head.field(1, "a vertex count")?;
    let mut g = SignedGraph::new(n);
    let mut rest = Vec::new();
    for line in it {
        match line.keyword() {
            "e" => {
                line.arity(3)?;
                let (u, v) = (line.vertex(1, n)?, line.vertex(2, n)?);
                let (col, sym) = line.tokens[3];
                let c = single_char(sym)
                    .and_then(Colour::from_symbol)
                    .ok_or_else(|| line.error(col, format!("expected a colour `+`, `-` or `*`, found `{sym}`")))?;
                g.add_edge(u, v, c).map_err(|e| line.error(1, e.to_string()))?;
            }
            k if extra.contains(&k) => rest.push(line),
            k => return Err(line.error(1, format!("unexpected record `{k}`"))),
        }
    }
    Ok((g, rest))
}

fn single_char(s: &str) -> Option<char> {
    let mut chars = s.chars();
    let c = chars.next()?;
    chars.next().is_none().then_some(c)
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    Ok(parse_body(text, &[])?.0)
}

pub fn write_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.vertex_count());
    for (u, v, c) in g.edges() {
        writeln!(out, "e {u} {v} {}", c.symbol()).unwrap();
    }
    out
}

fn parse_lists(g: &SignedGraph, lines: &[Line], target_size: usize) -> Result<Vec<Vec<usize>>> {
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; g.vertex_count()];
    for line in lines.iter().filter(|l| l.keyword() == "l") {
        if line.tokens.len() < 2 {
            return Err(line.error(1, "`l` needs a vertex"));
        }
        let v = line.vertex(1, g.vertex_count())?;
        if lists[v].is_some() {
            return Err(line.error(line.tokens[1].0, format!("second list for vertex {v}")));
        }
        lists[v] = Some((2..line.tokens.len()).map(|i| line.vertex(i, target_size)).collect::<Result<_>>()?);
    }
    // a vertex without a list line may go anywhere
    Ok(lists.into_iter().map(|l| l.unwrap_or_else(|| (0..target_size).collect())).collect())
}

/// Target ids in lists are checked against `target_size`.
pub fn parse_instance(text: &str, target_size: usize) -> Result<Instance> {
    let (g, rest) = parse_body(text, &["l"])?;
    let lists = parse_lists(&g, &rest, target_size)?;
    Instance::new(g, lists)
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = write_graph(&inst.g);
    for (v, l) in inst.lists.iter().enumerate() {
        write!(out, "l {v}").unwrap();
        for t in l {
            write!(out, " {t}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// An instance followed by one `f <v> <target> <0|1>` line per vertex.
pub fn parse_solution(text: &str, target_size: usize) -> Result<(Instance, Solution)> {
    let (g, rest) = parse_body(text, &["l", "f"])?;
    let n = g.vertex_count();
    let lists = parse_lists(&g, &rest, target_size)?;
    let mut map = vec![None; n];
    let mut flipped = Vec::new();
    for line in rest.iter().filter(|l| l.keyword() == "f") {
        line.arity(3)?;
        let v = line.vertex(1, n)?;
        if map[v].is_some() {
            return Err(line.error(line.tokens[1].0, format!("second image for vertex {v}")));
        }
        map[v] = Some(line.vertex(2, target_size)?);
        match line.tokens[3].1 {
            "0" => {}
            "1" => flipped.push(v),
            other => return Err(line.error(line.tokens[3].0, format!("expected switch bit 0 or 1, found `{other}`"))),
        }
    }
    let map = map
        .into_iter()
        .enumerate()
        .map(|(v, t)| t.ok_or_else(|| eof(text, &format!("no `f` line for vertex {v}"))))
        .collect::<Result<_>>()?;
    Ok((Instance::new(g, lists)?, Solution { map, switching: Switching::from_vertices(flipped) }))
}

pub fn write_solution(inst: &Instance, sol: &Solution) -> String {
    let mut out = write_instance(inst);
    for (v, &t) in sol.map.iter().enumerate() {
        writeln!(out, "f {v} {t} {}", sol.switching.contains(v) as u8).unwrap();
    }
    out
}

pub fn parse_csp(text: &str) -> Result<QuadCsp> {
    let mut vars = Vec::new();
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut quads = Vec::new();
    for line in lines(text) {
        match line.keyword() {
            "v" => {
                line.arity(1)?;
                let (col, name) = line.tokens[1];
                if ids.insert(name, vars.len()).is_some() {
                    return Err(line.error(col, format!("variable `{name}` declared twice")));
                }
                vars.push(name.to_string());
            }
            "q" => {
                line.arity(4)?;
                let mut q = [0; 4];
                for (i, slot) in q.iter_mut().enumerate() {
                    let (col, name) = line.tokens[i + 1];
                    *slot = *ids.get(name).ok_or_else(|| line.error(col, format!("undeclared variable `{name}`")))?;
                }
                quads.push(q);
            }
            k => return Err(line.error(1, format!("unexpected record `{k}`"))),
        }
    }
    QuadCsp::new(vars, quads)
}

pub fn write_csp(csp: &QuadCsp) -> String {
    let mut out = String::new();
    for v in &csp.vars {
        writeln!(out, "v {v}").unwrap();
    }
    for q in &csp.quads {
        let [a, b, c, d] = q.map(|i| &csp.vars[i]);
        writeln!(out, "q {a} {b} {c} {d}").unwrap();
    }
    out
}
