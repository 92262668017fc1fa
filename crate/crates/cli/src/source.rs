//! Where graphs come from: graph6 files, built-in generators, enumeration.

use std::io::Read;
use std::path::Path;

use nulla_core::graph::{
    complete, cycle, enumerate_nonisomorphic, hajos_join, moser_spindle, parse_graph6, parse_graph6_lines, path, star,
    wheel, MAX_ENUMERATION_VERTICES,
};
use nulla_core::{Edge, Graph};

use crate::CliError;

pub const GENERATORS: &str = "k4, complete:N, wheel:N, cycle:N, path:N, star:N, empty:N, moser-spindle, hajos-k4";

fn arg_usize(name: &str, arg: Option<&str>) -> Result<usize, CliError> {
    let arg = arg.ok_or_else(|| CliError::Usage(format!("generator '{name}' needs an argument, e.g. {name}:5")))?;
    arg.parse()
        .map_err(|_| CliError::Usage(format!("generator '{name}': '{arg}' is not a vertex count")))
}

/// A built-in graph, `NAME` or `NAME:ARG`.
pub fn generate(spec: &str) -> Result<Graph, CliError> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let no_arg = |g: Graph| match arg {
        None => Ok(g),
        Some(_) => Err(CliError::Usage(format!("generator '{name}' takes no argument"))),
    };
    match name {
        "k4" => no_arg(complete(4)),
        "moser-spindle" | "moser" => no_arg(moser_spindle()),
        "hajos-k4" => no_arg(hajos_join(&complete(4), (0, 1), &complete(4), (0, 1))?),
        "complete" => Ok(complete(arg_usize(name, arg)?)),
        "path" => Ok(path(arg_usize(name, arg)?)),
        "star" => Ok(star(arg_usize(name, arg)?)),
        "empty" => Ok(Graph::empty(arg_usize(name, arg)?)),
        "wheel" => Ok(wheel(arg_usize(name, arg)?).map_err(|e| CliError::Usage(e.to_string()))?),
        "cycle" => Ok(cycle(arg_usize(name, arg)?).map_err(|e| CliError::Usage(e.to_string()))?),
        _ => Err(CliError::Usage(format!(
            "unknown generator '{name}' (known: {GENERATORS})"
        ))),
    }
}

/// `LO..HI` (inclusive) or a single order.
pub fn parse_range(spec: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("'{spec}' is not an order range like 4..7"));
    let (lo, hi) = match spec.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (spec, spec),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn enumerate(lo: usize, hi: usize) -> Result<Vec<Graph>, CliError> {
    if hi > MAX_ENUMERATION_VERTICES {
        return Err(CliError::Capacity(format!(
            "enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices; for order {hi} pass a graph6 \
             file holding all non-isomorphic graphs of that order, one per line, with --in"
        )));
    }
    let mut out = Vec::new();
    for n in lo..=hi {
        let level = enumerate_nonisomorphic(n)?;
        log::info!("order {n}: {} graphs", level.len());
        out.extend(level);
    }
    Ok(out)
}

/// graph6 lines from a file, or standard input for `-`.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("reading {}: {e}", path.display())))?
    };
    parse_graph6_lines(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// A graph given inline: `gen:NAME[:ARG]` or a graph6 string.
pub fn inline_graph(spec: &str) -> Result<Graph, CliError> {
    match spec.strip_prefix("gen:") {
        Some(g) => generate(g),
        None => parse_graph6(spec).map_err(|e| CliError::Parse(format!("'{spec}': {e}"))),
    }
}

/// `v,w` or `v-w`, 0-indexed.
pub fn parse_edge(spec: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("'{spec}' is not an edge like 0,1"));
    let (a, b) = spec.split_once([',', '-']).ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn edge_in(g: &Graph, (a, b): (usize, usize)) -> Result<(usize, usize), CliError> {
    if a.max(b) >= g.n() || !g.has_edge(a, b) {
        return Err(CliError::Usage(format!(
            "{} is not an edge of the given graph",
            Edge::new(a, b)
        )));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..7").unwrap(), (4, 7));
        assert_eq!(parse_range("3..=3").unwrap(), (3, 3));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("7..4").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn generators() {
        assert_eq!(generate("wheel:5").unwrap().n(), 6);
        assert_eq!(generate("hajos-k4").unwrap().edge_count(), 11);
        assert!(matches!(generate("wheel"), Err(CliError::Usage(_))));
        assert!(matches!(generate("k4:3"), Err(CliError::Usage(_))));
        assert!(matches!(generate("petersen"), Err(CliError::Usage(_))));
        assert!(matches!(generate("cycle:2"), Err(CliError::Usage(_))));
    }

    #[test]
    fn edges() {
        assert_eq!(parse_edge("0,1").unwrap(), (0, 1));
        assert_eq!(parse_edge("3-2").unwrap(), (3, 2));
        assert!(parse_edge("2,2").is_err());
        assert!(parse_edge("x").is_err());
        assert!(edge_in(&complete(4), (0, 4)).is_err());
    }

    #[test]
    fn inline() {
        assert_eq!(inline_graph("C~").unwrap(), complete(4));
        assert_eq!(inline_graph("gen:k4").unwrap(), complete(4));
        assert!(matches!(inline_graph("C~~"), Err(CliError::Parse(_))));
    }
}
