use super::{FiniteGraph, GraphError, VertexColoring};

fn syntax(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-comment, nonblank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn number(line: usize, field: &str) -> Result<usize, GraphError> {
    field
        .parse()
        .map_err(|_| syntax(line, format!("expected a nonnegative integer, found `{field}`")))
}

/// Parses the graph file format: a `p <vertex_count>` header followed by
/// `e <u> <v>` lines. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<FiniteGraph, GraphError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `p <vertex_count>` header"))?;
    let vertex_count = match header.as_slice() {
        ["p", n] => number(header_line, n)?,
        _ => return Err(syntax(header_line, "expected `p <vertex_count>`")),
    };
    let mut graph = FiniteGraph::empty(vertex_count);
    for (line, fields) in lines {
        match fields.as_slice() {
            ["e", u, v] => {
                let (u, v) = (number(line, u)?, number(line, v)?);
                graph.add_edge(u, v).map_err(|e| e.at_line(line))?;
            }
            ["p", ..] => return Err(syntax(line, "duplicate `p` header")),
            _ => return Err(syntax(line, "expected `e <u> <v>`")),
        }
    }
    Ok(graph)
}

/// Parses `v <vertex> <color>` lines for a graph on `vertex_count`
/// vertices. Unlisted vertices get color 0.
pub fn parse_coloring(text: &str, vertex_count: usize) -> Result<VertexColoring, GraphError> {
    let mut colors = vec![0; vertex_count];
    let mut listed = vec![false; vertex_count];
    for (line, fields) in content_lines(text) {
        match fields.as_slice() {
            ["v", v, c] => {
                let (v, c) = (number(line, v)?, number(line, c)?);
                if v >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        vertex: v,
                        vertex_count,
                    }
                    .at_line(line));
                }
                if listed[v] {
                    return Err(syntax(line, format!("vertex {v} colored twice")));
                }
                listed[v] = true;
                colors[v] = c;
            }
            _ => return Err(syntax(line, "expected `v <vertex> <color>`")),
        }
    }
    Ok(VertexColoring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph("p 3\ne 0 1\ne 1 2\ne 2 0\n").unwrap();
        assert_eq!(g, FiniteGraph::complete(3));
    }

    #[test]
    fn single_edge_with_comments() {
        let g = parse_graph("# P2\n\np 2   # header\ne 0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_graph("p 2\ne 0 0\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::AtLine {
                line: 2,
                source: Box::new(GraphError::SelfLoop { vertex: 0 })
            }
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_graph(""),
            Err(GraphError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p 3\ne 0\n"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p x\n"),
            Err(GraphError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p 3\ne 0 1\ne 1 0\n"),
            Err(GraphError::AtLine { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("p 3\ne 0 5\n"),
            Err(GraphError::AtLine { line: 2, .. })
        ));
    }

    #[test]
    fn coloring_defaults_to_zero() {
        let c = parse_coloring("v 2 1\n# note\nv 0 3\n", 4).unwrap();
        assert_eq!(c.colors(), &[3, 0, 1, 0]);
        assert!(parse_coloring("v 4 1\n", 4).is_err());
        assert!(parse_coloring("v 1 1\nv 1 2\n", 4).is_err());
    }
}
