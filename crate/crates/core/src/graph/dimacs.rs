//! DIMACS `.col` reading and writing.
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>        (1-based)
//! ```

use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

pub fn read<R: BufRead>(reader: R) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let err = |msg: String| Error::Dimacs { line: lineno, msg };
        let mut fields = line.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                let kind = fields.next().ok_or_else(|| err("missing format".into()))?;
                if kind != "edge" && kind != "col" {
                    return Err(err(format!("unsupported format `{kind}`")));
                }
                let count = parse_num(fields.next(), "vertex count").map_err(err)?;
                parse_num(fields.next(), "edge count").map_err(err)?;
                n = Some(count);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err("edge before problem line".into()))?;
                let u = parse_num(fields.next(), "endpoint").map_err(err)?;
                let v = parse_num(fields.next(), "endpoint").map_err(err)?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or(Error::Dimacs {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    Graph::from_edge_list(n, &edges)
}

pub fn read_str(text: &str) -> Result<Graph> {
    read(text.as_bytes())
}

pub fn write<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    if let Some(name) = g.name() {
        writeln!(out, "c {name}")?;
    }
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("DIMACS output is ASCII")
}

fn parse_num(field: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let f = field.ok_or_else(|| format!("missing {what}"))?;
    f.parse().map_err(|_| format!("bad {what} `{f}`"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn parses_with_comments() {
        let g = read_str("c a triangle\np edge 3 3\ne 1 2\ne 2 3\n\ne 3 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = read_str("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn writes_header() {
        let c5 = generate(&FamilySpec::cycle(5)).unwrap();
        let text = to_string(&c5);
        assert!(text.contains("p edge 5 5\n"));
        assert_eq!(read_str(&text).unwrap().edges().collect::<Vec<_>>(), c5.edges().collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(read_str("e 1 2\n").is_err());
        assert!(read_str("p edge 2 1\ne 1 3\n").is_err());
        assert!(read_str("p edge 2 1\ne 0 1\n").is_err());
        assert!(read_str("p edge 2 1\ne 2 2\n").is_err());
        assert!(read_str("p edge x 1\n").is_err());
        assert!(read_str("c nothing\n").is_err());
        assert!(read_str("p edge 2 1\nq\n").is_err());
    }
}
