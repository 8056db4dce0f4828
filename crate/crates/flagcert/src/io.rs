//! The `#flagcert` text file formats shared by every pipeline stage.
//!
//! * graph list: `#flagcert graphs v1`, one `n:<triples>` line per graph;
//! * flag list: `#flagcert flags v1`, `#type <name>`, then
//!   `n:<triples>|root=<vertices>` lines;
//! * tournament list: `#flagcert tournaments v1`, `n:<bits>` lines;
//! * pair-density table: `#flagcert pairdensity v1`,
//!   `sigma=<name> f1=<i> f2=<j> g=<k> val=<p>/<q>` lines;
//! * expression file: `#flagcert expressions v1`, `[<name>]` sections of
//!   `g=<idx> val=<p>/<q>` lines;
//! * matrix file: an order line, then rows of ±1 separated by spaces.

use std::fmt::Write as _;

use num::Zero;
use thiserror::Error;

use crate::certificate::parse_rat;
use crate::density::PairDensityTable;
use crate::flags::{Flag, FlagError, FlagList, TypeGraph};
use crate::hadamard::{HadamardError, SkewHadamardMatrix};
use crate::hypergraph::{GraphError, ThreeGraph};
use crate::tournaments::{Tournament, TournamentError};
use crate::Rat;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("expected header {0:?}, found {1:?}")]
    BadHeader(String, String),
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
    #[error(transparent)]
    Hadamard(#[from] HadamardError),
}

pub const GRAPHS_HEADER: &str = "#flagcert graphs v1";
pub const FLAGS_HEADER: &str = "#flagcert flags v1";
pub const TOURNAMENTS_HEADER: &str = "#flagcert tournaments v1";
pub const PAIRDENSITY_HEADER: &str = "#flagcert pairdensity v1";
pub const EXPRESSIONS_HEADER: &str = "#flagcert expressions v1";

fn check_header(text: &str, want: &str) -> Result<(), IoError> {
    let first = text.lines().next().unwrap_or("").trim();
    if first != want {
        return Err(IoError::BadHeader(want.to_string(), first.to_string()));
    }
    Ok(())
}

pub fn write_graph_list(graphs: &[ThreeGraph]) -> String {
    let mut out = String::from(GRAPHS_HEADER);
    out.push('\n');
    for g in graphs {
        let _ = writeln!(out, "{g}");
    }
    out
}

pub fn read_graph_list(text: &str) -> Result<Vec<ThreeGraph>, IoError> {
    check_header(text, GRAPHS_HEADER)?;
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate().skip(1) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(
            line.parse::<ThreeGraph>()
                .map_err(|e| IoError::Line(no + 1, e.to_string()))?,
        );
    }
    Ok(out)
}

pub fn write_flag_list(list: &FlagList) -> String {
    let mut out = String::from(FLAGS_HEADER);
    out.push('\n');
    let _ = writeln!(
        out,
        "#type {}",
        list.type_graph
            .name()
            .unwrap_or_else(|| format!("custom[{}]", list.type_graph.underlying()))
    );
    for f in &list.flags {
        let _ = writeln!(out, "{f}");
    }
    out
}

pub fn read_flag_list(text: &str, sigma: &TypeGraph) -> Result<Vec<Flag>, IoError> {
    check_header(text, FLAGS_HEADER)?;
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate().skip(1) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (graph_part, root_part) = line
            .split_once("|root=")
            .ok_or_else(|| IoError::Line(no + 1, "missing |root=".into()))?;
        let graph: ThreeGraph = graph_part
            .parse()
            .map_err(|e: GraphError| IoError::Line(no + 1, e.to_string()))?;
        let root: Vec<u8> = root_part
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| IoError::Line(no + 1, "bad root digits".into()))?;
        out.push(
            Flag::new(sigma.clone(), graph, root)
                .map_err(|e| IoError::Line(no + 1, e.to_string()))?,
        );
    }
    Ok(out)
}

pub fn write_tournament_list(ts: &[Tournament]) -> String {
    let mut out = String::from(TOURNAMENTS_HEADER);
    out.push('\n');
    for t in ts {
        let _ = writeln!(out, "{t}");
    }
    out
}

pub fn read_tournament_list(text: &str) -> Result<Vec<Tournament>, IoError> {
    check_header(text, TOURNAMENTS_HEADER)?;
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate().skip(1) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(
            line.parse::<Tournament>()
                .map_err(|e| IoError::Line(no + 1, e.to_string()))?,
        );
    }
    Ok(out)
}

/// Serializes the nonzero entries of a pair-density table.
pub fn write_pair_density(table: &PairDensityTable) -> String {
    let sigma_name = table
        .sigma
        .name()
        .unwrap_or_else(|| format!("custom[{}]", table.sigma.underlying()));
    let mut out = String::from(PAIRDENSITY_HEADER);
    out.push('\n');
    for (g, events) in table.per_g.iter().enumerate() {
        let mut keys: Vec<&(u16, u16)> = events.keys().collect();
        keys.sort();
        for key in keys {
            let val = table.value(g, key.0 as usize, key.1 as usize);
            let _ = writeln!(
                out,
                "sigma={sigma_name} f1={} f2={} g={g} val={}/{}",
                key.0,
                key.1,
                val.numer(),
                val.denom()
            );
        }
    }
    out
}

/// One named expression section over a graph basis.
pub fn write_expressions(sections: &[(String, Vec<Rat>)]) -> String {
    let mut out = String::from(EXPRESSIONS_HEADER);
    out.push('\n');
    for (name, coeffs) in sections {
        let _ = writeln!(out, "[{name}]");
        for (g, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let _ = writeln!(out, "g={g} val={}/{}", c.numer(), c.denom());
            }
        }
    }
    out
}

pub fn read_expressions(text: &str) -> Result<Vec<(String, Vec<(usize, Rat)>)>, IoError> {
    check_header(text, EXPRESSIONS_HEADER)?;
    let mut out: Vec<(String, Vec<(usize, Rat)>)> = Vec::new();
    for (no, line) in text.lines().enumerate().skip(1) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            out.push((name.to_string(), Vec::new()));
            continue;
        }
        let section = out
            .last_mut()
            .ok_or_else(|| IoError::Line(no + 1, "entry before any section".into()))?;
        let mut g = None;
        let mut val = None;
        for tok in line.split_whitespace() {
            if let Some(s) = tok.strip_prefix("g=") {
                g = s.parse::<usize>().ok();
            } else if let Some(s) = tok.strip_prefix("val=") {
                val = parse_rat(s);
            }
        }
        match (g, val) {
            (Some(g), Some(v)) => section.1.push((g, v)),
            _ => return Err(IoError::Line(no + 1, format!("malformed entry {line:?}"))),
        }
    }
    Ok(out)
}

pub const TRIPLES_HEADER: &str = "#flagcert triples v1";

/// Large triple systems (blow-up outputs): header, `n=<count>`, then one
/// `a b c` line per edge.
pub fn write_large_system(g: &crate::constructions::LargeTripleSystem) -> String {
    let mut out = String::from(TRIPLES_HEADER);
    out.push('\n');
    let _ = writeln!(out, "n={}", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e[0], e[1], e[2]);
    }
    out
}

/// Matrix file: order line, then rows of ±1 separated by spaces.
pub fn write_matrix(m: &SkewHadamardMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", m.order());
    for i in 0..m.order() {
        let row: Vec<String> = (0..m.order()).map(|j| m.get(i, j).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn read_matrix(text: &str) -> Result<SkewHadamardMatrix, IoError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let order: usize = lines
        .next()
        .and_then(|l| l.trim().parse().ok())
        .ok_or_else(|| IoError::Line(1, "expected the order on the first line".into()))?;
    let mut entries = Vec::with_capacity(order * order);
    for (no, line) in lines.enumerate() {
        for tok in line.split_whitespace() {
            entries.push(
                tok.parse::<i64>()
                    .map_err(|_| IoError::Line(no + 2, format!("bad entry {tok:?}")))?,
            );
        }
    }
    Ok(SkewHadamardMatrix::new(order, entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::enumerate_free;

    #[test]
    fn graph_list_round_trip() {
        let graphs = enumerate_free(4).unwrap();
        let text = write_graph_list(&graphs);
        assert!(text.starts_with(GRAPHS_HEADER));
        assert_eq!(read_graph_list(&text).unwrap(), graphs);
        assert!(read_graph_list("#wrong\n").is_err());
    }

    #[test]
    fn flag_list_round_trip() {
        let tau = TypeGraph::tau();
        let list = FlagList::generate(&tau, 4).unwrap();
        let text = write_flag_list(&list);
        let back = read_flag_list(&text, &tau).unwrap();
        assert_eq!(back.len(), list.len());
        for (a, b) in back.iter().zip(&list.flags) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn tournament_list_round_trip() {
        let ts = crate::tournaments::enumerate_tournaments(4).unwrap();
        let text = write_tournament_list(&ts);
        assert_eq!(read_tournament_list(&text).unwrap(), ts);
    }

    #[test]
    fn matrix_round_trip() {
        let t = crate::tournaments::paley_tournament(7).unwrap();
        let h = crate::hadamard::tournament_to_skew_hadamard(&t).unwrap();
        let text = write_matrix(&h);
        assert_eq!(read_matrix(&text).unwrap(), h);
        // a corrupted entry breaks the Hadamard identities
        let bad = text.replacen("1", "-1", 1);
        assert!(read_matrix(&bad).is_err());
    }

    #[test]
    fn expression_round_trip() {
        let coeffs = vec![crate::rat(1, 3), crate::rat(0, 1), crate::rat(-5, 7)];
        let text = write_expressions(&[("target".into(), coeffs)]);
        let back = read_expressions(&text).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].0, "target");
        assert_eq!(back[0].1, vec![(0, crate::rat(1, 3)), (2, crate::rat(-5, 7))]);
    }
}
