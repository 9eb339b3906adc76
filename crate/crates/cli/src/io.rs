//! Edge-list text: one edge per line as two whitespace-separated non-negative
//! integers. Blank lines and lines starting with `#` or `%` are skipped.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use hyperterrain_core::Graph;

use crate::error::CliError;

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Vec<(u64, u64)>, CliError> {
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
            continue;
        }
        let mut it = t.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u64, CliError> {
            let tok = tok.ok_or_else(|| CliError::parse(i + 1, "expected two vertex ids"))?;
            tok.parse().map_err(|_| CliError::parse(i + 1, format!("`{tok}` is not a non-negative integer")))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(CliError::parse(i + 1, "more than two fields"));
        }
        edges.push((u, v));
    }
    Ok(edges)
}

pub fn read_graph<R: Read>(reader: R) -> Result<Graph, CliError> {
    let edges = parse_edge_list(BufReader::new(reader))?;
    Ok(Graph::from_edges(&edges)?)
}

/// Reads a file, or standard input for `-`.
pub fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    if path.as_os_str() == "-" {
        return read_graph(io::stdin().lock());
    }
    let f = File::open(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    read_graph(f)
}

/// Writes `g` with its original labels, one edge per line, smaller id first.
pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(w, "{} {}", g.label(u), g.label(v))?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperterrain_core::generators::grid;

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n% other\n\n10 20\n 20\t30 \n";
        let g = read_graph(text.as_bytes()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels(), &[10, 20, 30]);
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(read_graph("1 x\n".as_bytes()), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(read_graph("1 2\n3\n".as_bytes()), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(read_graph("1 2 3\n".as_bytes()), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(read_graph("-1 2\n".as_bytes()), Err(CliError::Parse { .. })));
        assert!(matches!(read_graph("1 2\n3 4\n".as_bytes()), Err(CliError::Graph(_))));
        assert!(matches!(read_graph("# nothing\n".as_bytes()), Err(CliError::Graph(_))));
    }

    #[test]
    fn round_trip() {
        let g = grid(3, 4).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(read_graph(buf.as_slice()).unwrap(), g);
    }
}
