//! Combinatorial data of the special fiber of an SNC-model.
//!
//! A [`DualGraph`] has one vertex per irreducible component of the fiber,
//! carrying the arithmetic genus and the multiplicity of the component, and
//! one edge per intersection point. Two components meeting in several points
//! are joined by parallel edges. Each edge is stored with the orientation it
//! was entered with; the orientation only matters for which end of a
//! resolution chain touches which component (see [`crate::character`]).

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexData {
    pub id: String,
    pub genus: u32,
    pub multiplicity: u64,
}

/// An intersection point, oriented from `source` to `target` (vertex indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
}

impl Edge {
    pub fn other(&self, v: usize) -> Option<usize> {
        if self.source == v {
            Some(self.target)
        } else if self.target == v {
            Some(self.source)
        } else {
            None
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.source == v || self.target == v
    }
}

/// A structural problem found by [`DualGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    NotConnected { components: usize },
    SelfLoop { edge: usize, vertex: String },
    ZeroMultiplicity { vertex: String },
    GcdNotOne { gcd: u64 },
    InvalidFiber { vertex: String },
}

impl Violation {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::Empty => "EMPTY",
            Violation::NotConnected { .. } => "NOT_CONNECTED",
            Violation::SelfLoop { .. } => "SELF_LOOP",
            Violation::ZeroMultiplicity { .. } => "ZERO_MULTIPLICITY",
            Violation::GcdNotOne { .. } => "GCD_NOT_ONE",
            Violation::InvalidFiber { .. } => "INVALID_FIBER",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "EMPTY: graph has no vertices"),
            Violation::NotConnected { components } => {
                write!(f, "NOT_CONNECTED: graph has {components} components")
            }
            Violation::SelfLoop { edge, vertex } => {
                write!(f, "SELF_LOOP: edge #{edge} joins `{vertex}` to itself")
            }
            Violation::ZeroMultiplicity { vertex } => {
                write!(f, "ZERO_MULTIPLICITY: vertex `{vertex}`")
            }
            Violation::GcdNotOne { gcd } => {
                write!(f, "GCD_NOT_ONE: multiplicities have common divisor {gcd}")
            }
            Violation::InvalidFiber { vertex } => write!(
                f,
                "INVALID_FIBER: self-intersection of `{vertex}` is not an integer"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DualGraph {
    name: Option<String>,
    vertices: Vec<VertexData>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
}

impl DualGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn named(name: impl Into<String>) -> Self {
        Self {
            name: Some(name.into()),
            ..Self::default()
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    /// Adds a component and returns its index. Ids must be unique.
    pub fn add_vertex(&mut self, id: impl Into<String>, genus: u32, multiplicity: u64) -> Result<usize> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(Error::BadInput(format!("duplicate vertex id `{id}`")));
        }
        let idx = self.vertices.len();
        self.index.insert(id.clone(), idx);
        self.vertices.push(VertexData {
            id,
            genus,
            multiplicity,
        });
        Ok(idx)
    }

    /// Adds an intersection point between the components named `source` and `target`.
    pub fn add_edge(&mut self, source: &str, target: &str) -> Result<usize> {
        let s = self.require(source)?;
        let t = self.require(target)?;
        Ok(self.add_edge_between(s, t))
    }

    pub fn add_edge_between(&mut self, source: usize, target: usize) -> usize {
        assert!(source < self.vertices.len() && target < self.vertices.len());
        self.edges.push(Edge { source, target });
        self.edges.len() - 1
    }

    fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::BadInput(format!("unknown vertex id `{id}`")))
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn vertices(&self) -> &[VertexData] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &VertexData {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn multiplicity(&self, v: usize) -> u64 {
        self.vertices[v].multiplicity
    }

    /// Edge indices incident to `v`.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.touches(v))
            .map(|(i, _)| i)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident_edges(v).count()
    }

    pub fn multiplicity_lcm(&self) -> u64 {
        self.vertices
            .iter()
            .fold(1, |acc, v| acc.lcm(&v.multiplicity.max(1)))
    }

    fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Lists every violated invariant. An empty list means the graph is usable.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.vertices.is_empty() {
            out.push(Violation::Empty);
            return out;
        }
        let components = self.component_count();
        if components > 1 {
            out.push(Violation::NotConnected { components });
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.source == e.target {
                out.push(Violation::SelfLoop {
                    edge: i,
                    vertex: self.vertices[e.source].id.clone(),
                });
            }
        }
        let mut zero = false;
        for v in &self.vertices {
            if v.multiplicity == 0 {
                zero = true;
                out.push(Violation::ZeroMultiplicity { vertex: v.id.clone() });
            }
        }
        let g = self
            .vertices
            .iter()
            .fold(0u64, |acc, v| acc.gcd(&v.multiplicity));
        if g != 1 && !zero {
            out.push(Violation::GcdNotOne { gcd: g });
        }
        if !zero {
            for v in 0..self.vertices.len() {
                if self.self_intersection_model(v).is_err() {
                    out.push(Violation::InvalidFiber {
                        vertex: self.vertices[v].id.clone(),
                    });
                }
            }
        }
        out
    }

    /// Returns `self` if [`validate`](Self::validate) reports nothing.
    pub fn validated(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidGraph(v))
        }
    }

    /// Self-intersection of a component, from the relation (fiber) . D_v = 0.
    pub fn self_intersection_model(&self, v: usize) -> Result<i64> {
        let m = self.vertices[v].multiplicity;
        if m == 0 {
            return Err(Error::BadInput(format!(
                "vertex `{}` has multiplicity 0",
                self.vertices[v].id
            )));
        }
        let neighbours: u128 = self
            .edges
            .iter()
            .filter_map(|e| e.other(v))
            .map(|u| self.vertices[u].multiplicity as u128)
            .sum();
        if !neighbours.is_multiple_of(m as u128) {
            return Err(Error::NotInteger {
                what: format!("self-intersection of `{}`", self.vertices[v].id),
                numerator: -(neighbours as i128),
                denominator: m as i128,
            });
        }
        i64::try_from(neighbours / m as u128)
            .map(|x| -x)
            .map_err(|_| Error::Overflow("self-intersection"))
    }

    /// Arithmetic genus of the generic fiber, by adjunction on the special fiber.
    pub fn genus(&self) -> Result<u64> {
        let mut twice: i128 = 0;
        for v in 0..self.vertices.len() {
            let d = &self.vertices[v];
            let self_int = self.self_intersection_model(v)? as i128;
            twice += d.multiplicity as i128 * (2 * d.genus as i128 - 2 - self_int);
        }
        if twice % 2 != 0 {
            return Err(Error::NotInteger {
                what: "genus".into(),
                numerator: 2 + twice,
                denominator: 2,
            });
        }
        let g = 1 + twice / 2;
        u64::try_from(g).map_err(|_| Error::BadInput(format!("adjunction gives negative genus {g}")))
    }

    /// Components of positive genus, or rational components meeting the rest in at least three points.
    pub fn principal_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.vertices[v].genus > 0 || self.degree(v) >= 3)
            .collect()
    }

    /// lcm of the multiplicities of the principal components (1 if there are none).
    pub fn expected_denominator(&self) -> u64 {
        self.principal_vertices()
            .into_iter()
            .fold(1, |acc, v| acc.lcm(&self.vertices[v].multiplicity))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::DualGraph;

    pub fn type_iv() -> DualGraph {
        let mut g = DualGraph::named("IV");
        for i in 1..=3 {
            g.add_vertex(format!("v{i}"), 0, 1).unwrap();
        }
        g.add_vertex("v4", 0, 3).unwrap();
        for i in 1..=3 {
            g.add_edge(&format!("v{i}"), "v4").unwrap();
        }
        g
    }

    pub fn type_vi() -> DualGraph {
        let mut g = DualGraph::named("VI");
        for (i, m) in [1, 2, 3, 4, 2, 2, 1].into_iter().enumerate() {
            g.add_vertex(format!("v{}", i + 1), 0, m).unwrap();
        }
        for (a, b) in [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v5", "v4"), ("v6", "v4"), ("v7", "v4")] {
            g.add_edge(a, b).unwrap();
        }
        g
    }

    pub fn smooth(genus: u32) -> DualGraph {
        let mut g = DualGraph::named("smooth");
        g.add_vertex("e", genus, 1).unwrap();
        g
    }

    pub fn cycle(k: usize) -> DualGraph {
        let mut g = DualGraph::named(format!("I{k}"));
        for i in 0..k {
            g.add_vertex(format!("c{i}"), 0, 1).unwrap();
        }
        for i in 0..k {
            g.add_edge_between(i, (i + 1) % k);
        }
        g
    }
}
