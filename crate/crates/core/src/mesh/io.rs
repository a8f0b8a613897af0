use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{CurvilinearMesh, EdgeRef, MeshError};
use crate::geometry::Point2;

/// Serializes a mesh; coordinates carry 17 significant digits so a read
/// reproduces them bitwise.
pub fn write_mesh_string(mesh: &CurvilinearMesh) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "curvemesh 1 {}", mesh.degree());
    let _ = writeln!(s, "points {}", mesh.points().len());
    for p in mesh.points() {
        let _ = writeln!(s, "{:.16e} {:.16e}", p.x, p.y);
    }
    let _ = writeln!(s, "edges {}", mesh.edges().len());
    for e in mesh.edges() {
        let line: Vec<String> = e.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    let _ = writeln!(s, "cells {}", mesh.num_cells());
    for c in mesh.cells() {
        let line: Vec<String> = c.iter().map(|r| format!("{}{}", if r.reversed { '-' } else { '+' }, r.edge)).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

pub fn write_mesh(mesh: &CurvilinearMesh, path: &Path) -> Result<(), MeshError> {
    fs::write(path, write_mesh_string(mesh))?;
    Ok(())
}

pub fn read_mesh(path: &Path) -> Result<CurvilinearMesh, MeshError> {
    read_mesh_str(&fs::read_to_string(path)?)
}

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        Self { inner: Box::new(inner), last: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), MeshError> {
        match self.inner.next() {
            Some((ln, l)) => {
                self.last = ln;
                Ok((ln, l.split_whitespace().collect()))
            }
            None => Err(MeshError::Parse {
                line: self.last + 1,
                msg: format!("unexpected end of file, expected {what}"),
            }),
        }
    }

    fn section(&mut self, name: &str) -> Result<usize, MeshError> {
        let (ln, t) = self.next(&format!("'{name} <count>'"))?;
        match t[..] {
            [n, c] if n == name => parse(ln, c),
            _ => Err(MeshError::Parse { line: ln, msg: format!("expected '{name} <count>'") }),
        }
    }
}

fn parse<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, MeshError> {
    s.parse().map_err(|_| MeshError::Parse { line, msg: format!("cannot parse '{s}'") })
}

fn expect_len(line: usize, t: &[&str], n: usize) -> Result<(), MeshError> {
    if t.len() == n {
        Ok(())
    } else {
        Err(MeshError::Parse { line, msg: format!("expected {n} fields, found {}", t.len()) })
    }
}

/// Parses and validates the text mesh format.
pub fn read_mesh_str(text: &str) -> Result<CurvilinearMesh, MeshError> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next("header")?;
    let degree: usize = match head[..] {
        ["curvemesh", "1", d] => parse(ln, d)?,
        _ => return Err(MeshError::Parse { line: ln, msg: "expected 'curvemesh 1 <degree>'".into() }),
    };
    if degree == 0 {
        return Err(MeshError::Parse { line: ln, msg: "edge degree must be at least 1".into() });
    }
    let np = lines.section("points")?;
    let mut points = Vec::with_capacity(np);
    for _ in 0..np {
        let (ln, t) = lines.next("a point")?;
        expect_len(ln, &t, 2)?;
        let p = Point2::new(parse(ln, t[0])?, parse(ln, t[1])?);
        if !p.is_finite() {
            return Err(MeshError::Parse { line: ln, msg: "non-finite coordinate".into() });
        }
        points.push(p);
    }
    let ne = lines.section("edges")?;
    let mut edges = Vec::with_capacity(ne);
    for _ in 0..ne {
        let (ln, t) = lines.next("an edge")?;
        expect_len(ln, &t, degree + 1)?;
        let e = t.iter().map(|s| parse::<usize>(ln, s)).collect::<Result<Vec<_>, _>>()?;
        if let Some(&bad) = e.iter().find(|&&k| k >= np) {
            return Err(MeshError::Parse { line: ln, msg: format!("point index {bad} out of range") });
        }
        edges.push(e);
    }
    let nc = lines.section("cells")?;
    let mut cells = Vec::with_capacity(nc);
    for _ in 0..nc {
        let (ln, t) = lines.next("a cell")?;
        expect_len(ln, &t, 4)?;
        let mut c = [EdgeRef::fwd(0); 4];
        for (k, s) in t.iter().enumerate() {
            let (reversed, num) = match s.as_bytes().first() {
                Some(b'+') => (false, &s[1..]),
                Some(b'-') => (true, &s[1..]),
                _ => return Err(MeshError::Parse { line: ln, msg: format!("edge ref '{s}' needs a sign") }),
            };
            let edge: usize = parse(ln, num)?;
            if edge >= ne {
                return Err(MeshError::Parse { line: ln, msg: format!("edge index {edge} out of range") });
            }
            c[k] = EdgeRef { edge, reversed };
        }
        cells.push(c);
    }
    if let Ok((ln, _)) = lines.next("") {
        return Err(MeshError::Parse { line: ln, msg: "trailing content".into() });
    }
    CurvilinearMesh::new(degree, points, edges, cells)
}
