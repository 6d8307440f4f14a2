//! Labelled cliques, edges, oriented paths and the rotation action.
//!
//! A `Level` is a complete graph whose vertices carry a contiguous interval
//! of integer labels, which induces a cyclic order and a rotation action.
//! Inside a level of odd size `p` every edge has a *type* in
//! `1..=(p-1)/2` (the smaller of the two cyclic label differences), and
//! two edges of the same type have a *clockwise distance*: the minimum
//! order of a rotation mapping one onto the other.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A graph vertex, identified by its integer label (>= 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(u32);

impl Vertex {
    pub fn new(label: u32) -> Self {
        assert!(label >= 1, "vertex labels start at 1");
        Vertex(label)
    }

    pub fn label(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge, stored with the smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "edges need two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn of(a: u32, b: u32) -> Self {
        Edge::new(Vertex::new(a), Vertex::new(b))
    }

    /// Endpoint with the smaller label.
    pub fn lo(self) -> Vertex {
        self.u
    }

    /// Endpoint with the larger label.
    pub fn hi(self) -> Vertex {
        self.v
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn is_incident(self, v: Vertex) -> bool {
        self.u == v || self.v == v
    }

    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if v == self.u {
            Some(self.v)
        } else if v == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// An oriented simple path: a nonempty sequence of pairwise distinct
/// vertices. A single-vertex path is legal and has no edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedPath {
    vertices: Vec<Vertex>,
}

impl OrientedPath {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::RepeatedVertex(v));
            }
        }
        Ok(OrientedPath { vertices })
    }

    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        OrientedPath::new(labels.iter().map(|&l| Vertex::new(l)).collect())
    }

    pub fn single(v: Vertex) -> Self {
        OrientedPath { vertices: vec![v] }
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().any(|f| f == e)
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        OrientedPath { vertices }
    }

    /// The path oriented so that its first vertex has the smaller label
    /// of the two endpoints.
    pub fn oriented_lo_first(&self) -> Self {
        if self.first() <= self.last() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    /// The path oriented so that its first vertex is not `avoid`; falls
    /// back to the given orientation when both ends equal `avoid`
    /// (impossible for paths with two or more vertices).
    pub fn oriented_first_not(&self, avoid: Vertex) -> Self {
        let lo_first = self.oriented_lo_first();
        if lo_first.first() == avoid && lo_first.len() > 1 {
            lo_first.reversed()
        } else {
            lo_first
        }
    }
}

impl fmt::Display for OrientedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A labelled clique on the contiguous label interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Level {
    index: usize,
    lo: Vertex,
    hi: Vertex,
}

impl Level {
    pub fn new(index: usize, lo: Vertex, hi: Vertex) -> Self {
        assert!(index >= 1, "levels are 1-indexed");
        assert!(lo <= hi, "level interval must not be empty");
        Level { index, lo, hi }
    }

    /// Level `index` on labels `[lo, lo + size - 1]`.
    pub fn on(index: usize, lo: u32, size: u32) -> Self {
        Level::new(index, Vertex::new(lo), Vertex::new(lo + size - 1))
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn size(&self) -> u32 {
        self.hi.label() - self.lo.label() + 1
    }

    /// Number of edge types in an odd-size level: (p - 1) / 2.
    pub fn half(&self) -> u32 {
        (self.size() - 1) / 2
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.contains(e.lo()) && self.contains(e.hi())
    }

    /// An edge touches the level when its smaller endpoint lies in it.
    pub fn touched_by(&self, e: Edge) -> bool {
        self.contains(e.lo())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (self.lo.label()..=self.hi.label()).map(Vertex::new)
    }

    /// 0-based position of `v` within the interval.
    pub fn offset(&self, v: Vertex) -> Result<u32> {
        if !self.contains(v) {
            return Err(Error::EndpointOutsideLevel(v));
        }
        Ok(v.label() - self.lo.label())
    }

    /// Vertex at the given 0-based position, taken mod the level size.
    pub fn vertex_at(&self, offset: u32) -> Vertex {
        Vertex::new(self.lo.label() + offset % self.size())
    }

    /// All edges of the given type, in increasing order of base offset.
    pub fn edges_of_type(&self, ty: u32) -> Vec<Edge> {
        let p = self.size();
        (0..p)
            .map(|x| Edge::new(self.vertex_at(x), self.vertex_at(x + ty)))
            .collect()
    }
}

/// The type of an edge inside an odd-size level: the smaller of the two
/// cyclic label differences, in `1..=(p-1)/2`.
pub fn edge_type(e: Edge, lv: &Level) -> Result<u32> {
    let p = lv.size();
    debug_assert!(p % 2 == 1, "edge types need an odd level size");
    let a = lv.offset(e.lo())?;
    let b = lv.offset(e.hi())?;
    let z = (b - a) % p;
    Ok(z.min(p - z))
}

/// Offset of the endpoint from which the other endpoint is `ty` steps
/// clockwise, i.e. the `x` with `e = {x, x + ty}` in interval coordinates.
fn type_base(e: Edge, ty: u32, lv: &Level) -> Result<u32> {
    let p = lv.size();
    let a = lv.offset(e.lo())?;
    let b = lv.offset(e.hi())?;
    if (b + p - a) % p == ty {
        Ok(a)
    } else {
        debug_assert_eq!((a + p - b) % p, ty);
        Ok(b)
    }
}

/// Clockwise distance of two distinct homotypical edges: the minimum
/// order of a rotation mapping one onto the other, in `1..=(p-1)/2`.
pub fn clockwise_distance(e1: Edge, e2: Edge, lv: &Level) -> Result<u32> {
    if e1 == e2 {
        return Err(Error::IdenticalEdges);
    }
    let t1 = edge_type(e1, lv)?;
    let t2 = edge_type(e2, lv)?;
    if t1 != t2 {
        return Err(Error::NotHomotypical);
    }
    let p = lv.size();
    let b1 = type_base(e1, t1, lv)?;
    let b2 = type_base(e2, t2, lv)?;
    let r = (b2 + p - b1) % p;
    Ok(r.min(p - r))
}

/// Rotate every vertex of the path by `r` positions within the level.
pub fn rotate_path(path: &OrientedPath, r: u32, lv: &Level) -> Result<OrientedPath> {
    let mut vertices = Vec::with_capacity(path.len());
    for &v in path.vertices() {
        let off = lv.offset(v)?;
        vertices.push(lv.vertex_at(off + r));
    }
    Ok(OrientedPath::new(vertices).expect("rotation preserves distinctness"))
}

/// The edge connecting the last vertex of `p` to the first vertex of `q`.
pub fn connector_edge(p: &OrientedPath, q: &OrientedPath) -> Result<Edge> {
    if let Some(&shared) = p.vertices().iter().find(|v| q.contains_vertex(**v)) {
        return Err(Error::SharedVertex(shared));
    }
    Ok(Edge::new(p.last(), q.first()))
}

/// Concatenate pairwise vertex-disjoint parts into one path; the edge set
/// is the union of the part edges plus the connectors between consecutive
/// parts.
pub fn concatenate(parts: &[OrientedPath]) -> Result<OrientedPath> {
    if parts.is_empty() {
        return Err(Error::NoParts);
    }
    let mut vertices = Vec::new();
    let mut seen = BTreeSet::new();
    for part in parts {
        for &v in part.vertices() {
            if !seen.insert(v) {
                return Err(Error::SharedVertex(v));
            }
            vertices.push(v);
        }
    }
    Ok(OrientedPath { vertices })
}

/// An ordered collection of named oriented paths with unique names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathSystem {
    entries: Vec<(String, OrientedPath)>,
}

impl PathSystem {
    pub fn new() -> Self {
        PathSystem::default()
    }

    pub fn from_entries(entries: Vec<(String, OrientedPath)>) -> Result<Self> {
        let mut system = PathSystem::new();
        for (name, path) in entries {
            system.push(name, path)?;
        }
        Ok(system)
    }

    pub fn push(&mut self, name: impl Into<String>, path: OrientedPath) -> Result<()> {
        let name = name.into();
        if self.entries.iter().any(|(n, _)| *n == name) {
            return Err(Error::DuplicateName(name));
        }
        self.entries.push((name, path));
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &OrientedPath)> {
        self.entries.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&OrientedPath> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }

    pub fn nth(&self, index: usize) -> Option<(&str, &OrientedPath)> {
        self.entries.get(index).map(|(n, p)| (n.as_str(), p))
    }
}
