//! Bound quiver presentations: a small line-oriented input format for
//! describing algebras as path algebras with relations and a nilpotency cap.
//!
//! The format, one section per line, in any order, `#` starts a comment:
//!
//! ```text
//! vertices: 1 2
//! arrows: a: 1 -> 2, b: 2 -> 1
//! relations: a*b; b*a
//! cap: 2
//! field: p=2
//! ```
//!
//! `vertices`, `cap` and `field` are required; `arrows` and `relations` may be
//! omitted. `a*b` means "traverse a, then b", so it is nonzero only when the
//! target of `a` is the source of `b`. A relation is a linear combination of
//! paths sharing one (source, target) pair; coefficients are integer literals
//! reduced into the field. The algebra built from a presentation is the path
//! algebra modulo the relation ideal plus all paths of length >= cap. Paths of
//! length >= cap appearing inside relations are simply zero, so such terms
//! drop out. Arrow names must start with a letter or underscore (vertex names
//! may be plain numbers); a leading integer in a relation term is always read
//! as a coefficient.
//!
//! Parse errors carry the 1-based line and column where they occurred.

use crate::algebra::Algebra;
use crate::gf::{FiniteField, Scalar};
use crate::linalg::{Subspace, Vector};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverError {
    /// 1-based (line, column) of the offending token, when it has one.
    pub position: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some((line, col)) => write!(f, "line {line}, column {col}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for QuiverError {}

fn err_at(line: usize, col: usize, message: impl Into<String>) -> QuiverError {
    QuiverError { position: Some((line, col)), message: message.into() }
}

fn err_global(message: impl Into<String>) -> QuiverError {
    QuiverError { position: None, message: message.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// One relation: terms (coefficient, arrow index sequence), all sharing the
/// recorded source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone)]
pub struct QuiverPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    cap: usize,
    field: Arc<FiniteField>,
}

impl QuiverPresentation {
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// A character cursor over one line, tracking 1-based columns.
struct Cursor {
    line: usize,
    chars: Vec<char>,
    pos: usize,
    offset: usize, // column of chars[0] minus 1
}

impl Cursor {
    fn new(line: usize, text: &str, offset: usize) -> Cursor {
        Cursor { line, chars: text.chars().collect(), pos: 0, offset }
    }

    fn col(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn error(&self, message: impl Into<String>) -> QuiverError {
        err_at(self.line, self.col(), message)
    }

    /// Scan a name token: [A-Za-z0-9_]+.
    fn scan_word(&mut self) -> Result<(String, usize), QuiverError> {
        self.skip_ws();
        let col = self.col();
        let mut word = String::new();
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            word.push(self.bump().unwrap());
        }
        if word.is_empty() {
            match self.peek() {
                Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
                None => Err(self.error("unexpected end of line")),
            }
        } else {
            Ok((word, col))
        }
    }

    fn expect_char(&mut self, expected: char) -> Result<(), QuiverError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{expected}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{expected}`"))),
        }
    }
}

/// Parse a presentation. Sections may appear in any order; each at most once.
pub fn parse_quiver(text: &str) -> Result<QuiverPresentation, QuiverError> {
    // First pass: find the sections.
    let mut sections: HashMap<&'static str, (usize, usize, String)> = HashMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(cut) => &raw_line[..cut],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(err_at(line_no, 1, "expected `<section>: ...`"));
        };
        let key = line[..colon].trim();
        let keyword = match key {
            "vertices" => "vertices",
            "arrows" => "arrows",
            "relations" => "relations",
            "cap" => "cap",
            "field" => "field",
            other => {
                return Err(err_at(line_no, 1, format!("unknown section `{other}`")));
            }
        };
        if sections.contains_key(keyword) {
            return Err(err_at(line_no, 1, format!("duplicate section `{keyword}`")));
        }
        sections.insert(keyword, (line_no, colon + 1, line[colon + 1..].to_string()));
    }

    let take = |name: &'static str| sections.get(name).cloned();
    let require = |name: &'static str| {
        take(name).ok_or_else(|| err_global(format!("missing required section `{name}`")))
    };

    // field
    let (fline, fcol, ftext) = require("field")?;
    let spec = ftext.trim();
    let field =
        FiniteField::parse_spec(spec).map_err(|e| err_at(fline, fcol + 1, e.to_string()))?;

    // vertices
    let (vline, vcol, vtext) = require("vertices")?;
    let mut vertices: Vec<String> = Vec::new();
    let mut vertex_index: HashMap<String, usize> = HashMap::new();
    {
        let mut cur = Cursor::new(vline, &vtext, vcol);
        while !cur.at_end() {
            let (name, col) = cur.scan_word()?;
            if vertex_index.contains_key(&name) {
                return Err(err_at(vline, col, format!("duplicate vertex `{name}`")));
            }
            vertex_index.insert(name.clone(), vertices.len());
            vertices.push(name);
        }
    }
    if vertices.is_empty() {
        return Err(err_at(vline, vcol + 1, "at least one vertex is required"));
    }

    // arrows
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut arrow_index: HashMap<String, usize> = HashMap::new();
    if let Some((aline, acol, atext)) = take("arrows") {
        let mut cur = Cursor::new(aline, &atext, acol);
        while !cur.at_end() {
            let (name, name_col) = cur.scan_word()?;
            if !name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') {
                return Err(err_at(
                    aline,
                    name_col,
                    format!("arrow name `{name}` must start with a letter or `_`"),
                ));
            }
            if arrow_index.contains_key(&name) {
                return Err(err_at(aline, name_col, format!("duplicate arrow `{name}`")));
            }
            cur.expect_char(':')?;
            let (src, src_col) = cur.scan_word()?;
            let source = *vertex_index
                .get(&src)
                .ok_or_else(|| err_at(aline, src_col, format!("unknown vertex `{src}`")))?;
            cur.expect_char('-')?;
            cur.expect_char('>')?;
            let (tgt, tgt_col) = cur.scan_word()?;
            let target = *vertex_index
                .get(&tgt)
                .ok_or_else(|| err_at(aline, tgt_col, format!("unknown vertex `{tgt}`")))?;
            arrow_index.insert(name.clone(), arrows.len());
            arrows.push(Arrow { name, source, target });
            if !cur.at_end() {
                cur.expect_char(',')?;
            }
        }
    }

    // cap
    let (cline, ccol, ctext) = require("cap")?;
    let cap_str = ctext.trim();
    let cap: usize = cap_str
        .parse()
        .map_err(|_| err_at(cline, ccol + 1, format!("cap must be an integer, got `{cap_str}`")))?;
    if cap < 1 {
        return Err(err_at(cline, ccol + 1, "cap must be at least 1"));
    }

    // relations
    let mut relations: Vec<Relation> = Vec::new();
    if let Some((rline, rcol, rtext)) = take("relations") {
        let mut cur = Cursor::new(rline, &rtext, rcol);
        loop {
            if cur.at_end() {
                break;
            }
            if cur.peek() == Some(';') {
                cur.bump();
                continue;
            }
            let relation = parse_relation(&mut cur, &arrows, &arrow_index, &field)?;
            relations.push(relation);
            if !cur.at_end() {
                cur.expect_char(';')?;
            }
        }
    }

    Ok(QuiverPresentation { vertices, arrows, relations, cap, field })
}

/// Parse one linear combination of paths, up to (not including) `;`.
fn parse_relation(
    cur: &mut Cursor,
    arrows: &[Arrow],
    arrow_index: &HashMap<String, usize>,
    field: &Arc<FiniteField>,
) -> Result<Relation, QuiverError> {
    let mut terms: Vec<(Scalar, Vec<usize>)> = Vec::new();
    let mut endpoints: Option<(usize, usize)> = None;
    loop {
        cur.skip_ws();
        let mut sign = 1i64;
        match cur.peek() {
            Some('-') => {
                cur.bump();
                sign = -1;
            }
            Some('+') if !terms.is_empty() => {
                cur.bump();
            }
            _ => {}
        }
        let term_col = {
            cur.skip_ws();
            cur.col()
        };
        let (first, first_col) = cur.scan_word()?;
        let (coeff, mut path, mut path_cols) = if first.chars().all(|c| c.is_ascii_digit()) {
            let n: i64 = first
                .parse()
                .map_err(|_| err_at(cur.line, first_col, format!("bad coefficient `{first}`")))?;
            cur.expect_char('*')?;
            let (a, a_col) = cur.scan_word()?;
            if a.chars().all(|c| c.is_ascii_digit()) {
                return Err(err_at(cur.line, a_col, "coefficient must come before the path"));
            }
            (field.from_int(sign * n), vec![a], vec![a_col])
        } else {
            (field.from_int(sign), vec![first], vec![first_col])
        };
        loop {
            cur.skip_ws();
            if cur.peek() == Some('*') {
                cur.bump();
                let (a, a_col) = cur.scan_word()?;
                if a.chars().all(|c| c.is_ascii_digit()) {
                    return Err(err_at(cur.line, a_col, "coefficient must come before the path"));
                }
                path.push(a);
                path_cols.push(a_col);
            } else {
                break;
            }
        }
        // resolve arrow names and check composability
        let mut indices = Vec::with_capacity(path.len());
        for (name, col) in path.iter().zip(&path_cols) {
            let idx = *arrow_index
                .get(name)
                .ok_or_else(|| err_at(cur.line, *col, format!("unknown arrow `{name}`")))?;
            if let Some(&prev) = indices.last() {
                let prev_arrow: &Arrow = &arrows[prev];
                if prev_arrow.target != arrows[idx].source {
                    return Err(err_at(
                        cur.line,
                        *col,
                        format!(
                            "path is not composable: `{}` ends at a different vertex than `{name}` starts",
                            prev_arrow.name
                        ),
                    ));
                }
            }
            indices.push(idx);
        }
        let term_endpoints = (arrows[indices[0]].source, arrows[*indices.last().unwrap()].target);
        match endpoints {
            None => endpoints = Some(term_endpoints),
            Some(e) if e != term_endpoints => {
                return Err(err_at(
                    cur.line,
                    term_col,
                    "all paths in a relation must share source and target",
                ));
            }
            _ => {}
        }
        terms.push((coeff, indices));
        cur.skip_ws();
        match cur.peek() {
            Some('+') | Some('-') => continue,
            _ => break,
        }
    }
    let (source, target) = endpoints.expect("relation has at least one term");
    Ok(Relation { terms, source, target })
}

// ---------------------------------------------------------------------------
// Building the algebra
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn target(&self, q: &QuiverPresentation) -> usize {
        match self.arrows.last() {
            Some(&a) => q.arrows[a].target,
            None => self.source,
        }
    }
}

/// Build the algebra presented by a quiver: the span of all paths of length
/// below the cap, modulo the two-sided ideal generated by the relations.
///
/// The ideal is formed by spanning the relation vectors and repeatedly closing
/// under left and right multiplication by single arrows (products at or above
/// the cap truncate to zero) until the span stabilizes; this reaches every
/// product path * relation * path.
pub fn build_algebra(q: &QuiverPresentation) -> Algebra {
    let field = q.field.clone();
    // Enumerate paths of length < cap, shortest first; order is deterministic.
    let mut paths: Vec<Path> = Vec::new();
    let mut index: HashMap<Path, usize> = HashMap::new();
    for v in 0..q.vertices.len() {
        let p = Path { source: v, arrows: Vec::new() };
        index.insert(p.clone(), paths.len());
        paths.push(p);
    }
    let mut level_start = 0;
    for _len in 1..q.cap {
        let level_end = paths.len();
        for i in level_start..level_end {
            let tail = paths[i].target(q);
            for (a_idx, arrow) in q.arrows.iter().enumerate() {
                if arrow.source == tail {
                    let mut arrows = paths[i].arrows.clone();
                    arrows.push(a_idx);
                    let p = Path { source: paths[i].source, arrows };
                    index.insert(p.clone(), paths.len());
                    paths.push(p);
                }
            }
        }
        if paths.len() == level_end {
            break; // no longer paths exist
        }
        level_start = level_end;
    }
    let n = paths.len();

    // Product of two basis paths inside the span: an index, or None for zero.
    let path_mul = |a: usize, b: usize| -> Option<usize> {
        let (pa, pb) = (&paths[a], &paths[b]);
        if pa.target(q) != pb.source {
            return None;
        }
        if pa.arrows.len() + pb.arrows.len() >= q.cap {
            return None;
        }
        let mut arrows = pa.arrows.clone();
        arrows.extend(&pb.arrows);
        Some(index[&Path { source: pa.source, arrows }])
    };

    // Relation vectors; monomials at or above the cap vanish.
    let mut generators: Vec<Vector> = Vec::new();
    for rel in &q.relations {
        let mut v = Vector::zero(&field, n);
        for (coeff, arrows) in &rel.terms {
            if arrows.len() >= q.cap {
                continue;
            }
            let p = Path { source: q.arrows[arrows[0]].source, arrows: arrows.clone() };
            let i = index[&p];
            v.set(i, &v.get(i).clone() + coeff);
        }
        generators.push(v);
    }
    let mut ideal =
        Subspace::from_span(&field, n, &generators).expect("relation vectors are consistent");

    // Close under one-arrow multiplication on both sides.
    loop {
        let mut new_vectors = ideal.basis_vectors();
        for r in ideal.basis_vectors() {
            for a in 0..q.arrows.len() {
                let arrow_path = index[&Path { source: q.arrows[a].source, arrows: vec![a] }];
                let mut left = Vector::zero(&field, n);
                let mut right = Vector::zero(&field, n);
                for i in 0..n {
                    let c = r.get(i);
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(k) = path_mul(arrow_path, i) {
                        left.set(k, &left.get(k).clone() + c);
                    }
                    if let Some(k) = path_mul(i, arrow_path) {
                        right.set(k, &right.get(k).clone() + c);
                    }
                }
                new_vectors.push(left);
                new_vectors.push(right);
            }
        }
        let bigger =
            Subspace::from_span(&field, n, &new_vectors).expect("closure vectors are consistent");
        if bigger.dim() == ideal.dim() {
            break;
        }
        ideal = bigger;
    }

    // Quotient basis: the non-pivot path coordinates.
    let rep_cols = ideal.complement_columns();
    let dim = rep_cols.len();
    let col_of = {
        let mut m = HashMap::new();
        for (slot, &c) in rep_cols.iter().enumerate() {
            m.insert(c, slot);
        }
        m
    };
    let reduce_to_quotient = |v: &Vector| -> Vec<(usize, Scalar)> {
        let r = ideal.reduce(v);
        (0..n).filter(|&i| !r.get(i).is_zero()).map(|i| (col_of[&i], r.get(i).clone())).collect()
    };

    let mut entries = Vec::new();
    for (bi, &pi) in rep_cols.iter().enumerate() {
        for (bj, &pj) in rep_cols.iter().enumerate() {
            if let Some(prod) = path_mul(pi, pj) {
                let mut v = Vector::zero(&field, n);
                v.set(prod, field.one());
                for (k, c) in reduce_to_quotient(&v) {
                    entries.push((bi, bj, k, c));
                }
            }
        }
    }
    let mut unit_span = Vector::zero(&field, n);
    for v in 0..q.vertices.len() {
        let i = index[&Path { source: v, arrows: Vec::new() }];
        unit_span.set(i, field.one());
    }
    let mut unit = Vector::zero(&field, dim);
    for (k, c) in reduce_to_quotient(&unit_span) {
        unit.set(k, c);
    }
    Algebra::new(&field, dim, &entries, unit)
        .expect("a path algebra quotient is associative and unital")
}
