//! Curve configurations with simple normal crossings, as weighted dual
//! graphs, and the adjunction dichotomy for anticanonical cycles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntersectionMatrix;

/// One irreducible component: a vertex of the dual graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub id: String,
    pub genus: u32,
    /// Self-intersection number.
    #[serde(with = "crate::int_serde")]
    pub e: BigInt,
}

/// `mult` intersection points between two distinct components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersection {
    pub a: String,
    pub b: String,
    pub mult: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration")]
pub struct CurveConfiguration {
    vertices: Vec<Curve>,
    edges: Vec<Intersection>,
}

#[derive(Deserialize)]
struct RawConfiguration {
    vertices: Vec<Curve>,
    #[serde(default)]
    edges: Vec<Intersection>,
}

impl TryFrom<RawConfiguration> for CurveConfiguration {
    type Error = Error;

    fn try_from(raw: RawConfiguration) -> Result<Self> {
        CurveConfiguration::new(raw.vertices, raw.edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigClass {
    EllipticIrreducible,
    RationalCycle,
    Other,
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigClass::EllipticIrreducible => "EllipticIrreducible",
            ConfigClass::RationalCycle => "RationalCycle",
            ConfigClass::Other => "Other",
        })
    }
}

fn invalid(field: String, reason: impl Into<String>) -> Error {
    Error::InvalidConfiguration { field, reason: reason.into() }
}

impl CurveConfiguration {
    pub fn new(vertices: Vec<Curve>, edges: Vec<Intersection>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(invalid(format!("vertices[{i}].id"), format!("duplicate id `{}`", v.id)));
            }
        }
        let mut pairs = BTreeSet::new();
        for (k, edge) in edges.iter().enumerate() {
            let ia = *index
                .get(edge.a.as_str())
                .ok_or_else(|| invalid(format!("edges[{k}].a"), format!("unknown vertex `{}`", edge.a)))?;
            let ib = *index
                .get(edge.b.as_str())
                .ok_or_else(|| invalid(format!("edges[{k}].b"), format!("unknown vertex `{}`", edge.b)))?;
            if ia == ib {
                return Err(invalid(format!("edges[{k}]"), format!("self-loop at `{}`", edge.a)));
            }
            if edge.mult == 0 {
                return Err(invalid(format!("edges[{k}].mult"), "multiplicity must be positive"));
            }
            if !pairs.insert((ia.min(ib), ia.max(ib))) {
                return Err(invalid(
                    format!("edges[{k}]"),
                    format!("second record for the pair `{}`–`{}`; aggregate with `mult`", edge.a, edge.b),
                ));
            }
        }
        Ok(CurveConfiguration { vertices, edges })
    }

    /// Rational curves `C1..Cr` arranged in a cycle with the given
    /// self-intersections. For `r = 2` the two curves meet twice.
    pub fn rational_cycle(e: &[BigInt]) -> Result<Self> {
        let r = e.len();
        if r < 2 {
            return Err(Error::CycleTooShort(r));
        }
        let vertices = Self::rational_vertices(e);
        let edges = if r == 2 {
            vec![Intersection { a: "C1".into(), b: "C2".into(), mult: 2 }]
        } else {
            (0..r)
                .map(|i| Intersection { a: format!("C{}", i + 1), b: format!("C{}", (i + 1) % r + 1), mult: 1 })
                .collect()
        };
        Self::new(vertices, edges)
    }

    /// Rational curves `C1..Cr` in a chain, consecutive curves meeting once.
    pub fn rational_chain(e: &[BigInt]) -> Result<Self> {
        let vertices = Self::rational_vertices(e);
        let edges = (1..e.len())
            .map(|i| Intersection { a: format!("C{i}"), b: format!("C{}", i + 1), mult: 1 })
            .collect();
        Self::new(vertices, edges)
    }

    fn rational_vertices(e: &[BigInt]) -> Vec<Curve> {
        e.iter()
            .enumerate()
            .map(|(i, e)| Curve { id: format!("C{}", i + 1), genus: 0, e: e.clone() })
            .collect()
    }

    pub fn vertices(&self) -> &[Curve] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Intersection] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn index_of(&self, id: &str) -> usize {
        self.vertices.iter().position(|v| v.id == id).expect("validated edge endpoint")
    }

    /// `(i, j, mult)` with vertex indices in place of ids.
    fn indexed_edges(&self) -> Vec<(usize, usize, u32)> {
        self.edges.iter().map(|e| (self.index_of(&e.a), self.index_of(&e.b), e.mult)).collect()
    }

    /// Sum of intersection multiplicities at each vertex.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.len()];
        for (i, j, m) in self.indexed_edges() {
            deg[i] += u64::from(m);
            deg[j] += u64::from(m);
        }
        deg
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        let n = self.len();
        let mut off = vec![0u32; n * n];
        for (i, j, m) in self.indexed_edges() {
            off[i * n + j] = m;
            off[j * n + i] = m;
        }
        IntersectionMatrix::from_fn(n, |i, j| {
            if i == j {
                self.vertices[i].e.clone()
            } else {
                BigInt::from(off[i * n + j])
            }
        })
    }

    /// Per-vertex `(2g − 2) + Σ_{j≠i} C_i·C_j`; zero where the component
    /// satisfies adjunction with `K ∼ −C`.
    pub fn adjunction_residues(&self) -> Vec<i64> {
        self.vertices
            .iter()
            .zip(self.degrees())
            .map(|(v, deg)| 2 * i64::from(v.genus) - 2 + deg as i64)
            .collect()
    }

    /// Splits into connected components, ordered by first vertex. Vertex
    /// and edge order within each component follow the input.
    pub fn connected_components(&self) -> Vec<CurveConfiguration> {
        let n = self.len();
        let edges = self.indexed_edges();
        let mut adj = vec![Vec::new(); n];
        for &(i, j, _) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| CurveConfiguration {
                vertices: (0..n).filter(|&i| comp[i] == c).map(|i| self.vertices[i].clone()).collect(),
                edges: edges
                    .iter()
                    .zip(&self.edges)
                    .filter(|((i, _, _), _)| comp[*i] == c)
                    .map(|(_, e)| e.clone())
                    .collect(),
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Which case of the adjunction dichotomy the configuration falls in.
    ///
    /// Requires a connected configuration.
    pub fn classify(&self) -> Result<ConfigClass> {
        match self.connected_components().len() {
            0 => return Err(Error::EmptyConfiguration),
            1 => {}
            k => return Err(Error::Disconnected(k)),
        }
        if self.adjunction_residues().iter().any(|&d| d != 0) {
            return Ok(ConfigClass::Other);
        }
        let r = self.len();
        if r == 1 && self.vertices[0].genus == 1 {
            return Ok(ConfigClass::EllipticIrreducible);
        }
        // Connected, all defects zero and all genera zero means every vertex
        // has weighted degree 2: a single cycle (a double edge when r = 2).
        if r >= 2 && self.vertices.iter().all(|v| v.genus == 0) {
            return Ok(ConfigClass::RationalCycle);
        }
        Ok(ConfigClass::Other)
    }
}
