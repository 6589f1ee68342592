//! Plain edge-list text: `n u-v u-v ...` with 0-based vertices.

use strength_core::Graph;

pub fn parse_edge_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Graph, String> {
    let (first, rest) = tokens.split_first().ok_or("edge list needs a vertex count")?;
    let n: usize = first
        .as_ref()
        .parse()
        .map_err(|_| format!("vertex count {:?} is not a non-negative integer", first.as_ref()))?;
    let mut edges = Vec::with_capacity(rest.len());
    for t in rest {
        let t = t.as_ref();
        let (u, v) = t.split_once('-').ok_or_else(|| format!("edge {t:?} is not of the form u-v"))?;
        let end = |s: &str| s.parse::<usize>().map_err(|_| format!("edge {t:?} has a non-integer endpoint"));
        edges.push((end(u)?, end(v)?));
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

pub fn parse_edge_line(line: &str) -> Result<Graph, String> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    parse_edge_tokens(&tokens)
}

pub fn format_edges(g: &Graph) -> String {
    let mut out = g.order().to_string();
    for (u, v) in g.edges() {
        out.push_str(&format!(" {u}-{v}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = parse_edge_line("4 0-1 2-3 1-2").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(format_edges(&g), "4 0-1 1-2 2-3");
        assert_eq!(parse_edge_line(&format_edges(&g)).unwrap(), g);
        assert_eq!(format_edges(&parse_edge_line("3").unwrap()), "3");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_edge_line("").is_err());
        assert!(parse_edge_line("x 0-1").is_err());
        assert!(parse_edge_line("3 0-3").is_err());
        assert!(parse_edge_line("3 1-1").is_err());
        assert!(parse_edge_line("3 0:1").is_err());
    }
}
