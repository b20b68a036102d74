//! Ribbon graphs as signed rotation systems.
//!
//! A ribbon graph is given by a cyclic order of half-edges at each vertex and
//! a sign per edge; sign `-1` marks a half-twisted edge. Internally each
//! half-edge expands into two flags (its two sides), giving four flags per
//! edge and three pairings:
//!
//! * the vertex pairing joins flags across the corners between consecutive
//!   half-edges in a rotation,
//! * the side pairing joins the two flags of one half-edge across its
//!   attachment segment,
//! * the edge pairing joins flags along the two sides of an edge ribbon,
//!   crossed over for a negative sign.
//!
//! Boundary components of a spanning ribbon subgraph are the orbits of the
//! vertex pairing together with the edge pairing on included edges and the
//! side pairing elsewhere. Partial duality swaps the edge and side pairings
//! on the duality set and reads a rotation system back off the new orbits.

mod io;
mod ops;
mod trace;

pub use io::{parse_rg, RgParseError};
pub use ops::{disjoint_union, join};

use std::fmt;

use thiserror::Error;

use crate::elements::{ElementError, ElementMap, Subset};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RibbonError {
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("dangling half-edge `{0}`")]
    DanglingHalfEdge(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error(transparent)]
    Element(#[from] ElementError),
}

/// Orientability sign of an edge: `Plus` is untwisted, `Minus` half-twisted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Vertex {
    pub id: String,
    /// Half-edge indices in cyclic order.
    pub rotation: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Edge {
    pub label: String,
    pub a: u32,
    pub b: u32,
    pub sign: Sign,
}

/// A ribbon graph. Immutable after construction; operations return new
/// graphs.
#[derive(Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    pub(crate) vertices: Vec<Vertex>,
    pub(crate) edges: Vec<Edge>,
    /// Half-edge ids, indexed by half-edge number.
    pub(crate) half_ids: Vec<String>,
    /// Half-edge -> vertex index.
    pub(crate) he_vertex: Vec<u32>,
    /// Half-edge -> edge index.
    pub(crate) he_edge: Vec<u32>,
    /// Edge labels as an element map; bit i is edges[i].
    pub(crate) emap: ElementMap,
}

/// Parameters of a spanning ribbon subgraph `(V, A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubParams {
    /// Boundary components.
    pub f: usize,
    /// Connected components.
    pub k: usize,
    /// Rank `v - k`.
    pub r: usize,
    /// Nullity `|A| - r`.
    pub n: usize,
    /// Euler genus `2k - v + |A| - f`.
    pub gamma: usize,
    /// 1 when the subgraph is non-orientable (has a cycle with an odd number
    /// of negative edges).
    pub t: u8,
}

impl RibbonGraph {
    /// Builds and validates a ribbon graph from rotations and signed edges.
    ///
    /// Every half-edge id must appear exactly once in a rotation and exactly
    /// once as an edge end.
    pub fn build(
        vertices: Vec<(String, Vec<String>)>,
        edges: Vec<(String, String, String, Sign)>,
    ) -> Result<RibbonGraph, RibbonError> {
        let mut half_ids: Vec<String> = Vec::new();
        let mut vs: Vec<Vertex> = Vec::new();
        for (id, rot) in vertices {
            let mut rotation = Vec::new();
            for h in rot {
                if half_ids.contains(&h) {
                    return Err(RibbonError::MalformedRotation(format!(
                        "half-edge `{h}` appears twice in the rotations"
                    )));
                }
                rotation.push(half_ids.len() as u32);
                half_ids.push(h);
            }
            if vs.iter().any(|v| v.id == id) {
                return Err(RibbonError::MalformedRotation(format!(
                    "duplicate vertex id `{id}`"
                )));
            }
            vs.push(Vertex { id, rotation });
        }
        let find = |ids: &[String], h: &str| -> Result<u32, RibbonError> {
            ids.iter()
                .position(|x| x == h)
                .map(|i| i as u32)
                .ok_or_else(|| RibbonError::DanglingHalfEdge(h.to_string()))
        };
        let mut es: Vec<Edge> = Vec::new();
        let mut used = vec![false; half_ids.len()];
        for (label, a, b, sign) in edges {
            let ai = find(&half_ids, &a)?;
            let bi = find(&half_ids, &b)?;
            if ai == bi {
                return Err(RibbonError::MalformedRotation(format!(
                    "edge `{label}` uses half-edge `{a}` twice"
                )));
            }
            for i in [ai, bi] {
                if used[i as usize] {
                    return Err(RibbonError::MalformedRotation(format!(
                        "half-edge `{}` belongs to two edges",
                        half_ids[i as usize]
                    )));
                }
                used[i as usize] = true;
            }
            if es.iter().any(|e| e.label == label) {
                return Err(RibbonError::MalformedRotation(format!(
                    "duplicate edge label `{label}`"
                )));
            }
            es.push(Edge {
                label,
                a: ai,
                b: bi,
                sign,
            });
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(RibbonError::DanglingHalfEdge(half_ids[i].clone()));
        }
        let emap = ElementMap::new(es.iter().map(|e| e.label.clone()))?;
        let mut g = RibbonGraph {
            vertices: vs,
            edges: es,
            half_ids,
            he_vertex: Vec::new(),
            he_edge: Vec::new(),
            emap,
        };
        g.normalize();
        Ok(g)
    }

    /// [`RibbonGraph::build`] with borrowed literals; convenient in tests and
    /// fixtures.
    pub fn from_literals(
        vertices: &[(&str, &[&str])],
        edges: &[(&str, &str, &str, Sign)],
    ) -> Result<RibbonGraph, RibbonError> {
        Self::build(
            vertices
                .iter()
                .map(|(id, rot)| (id.to_string(), rot.iter().map(|h| h.to_string()).collect()))
                .collect(),
            edges
                .iter()
                .map(|(l, a, b, s)| (l.to_string(), a.to_string(), b.to_string(), *s))
                .collect(),
        )
    }

    /// Sorts vertices by id and edges by label, rotates each rotation to
    /// start at its lexicographically least half-edge id, and rebuilds the
    /// incidence tables.
    fn normalize(&mut self) {
        self.vertices.sort_by(|x, y| x.id.cmp(&y.id));
        self.edges.sort_by(|x, y| x.label.cmp(&y.label));
        for v in &mut self.vertices {
            if v.rotation.is_empty() {
                continue;
            }
            let best = (0..v.rotation.len())
                .min_by_key(|&i| &self.half_ids[v.rotation[i] as usize])
                .unwrap();
            v.rotation.rotate_left(best);
        }
        self.he_vertex = vec![0; self.half_ids.len()];
        self.he_edge = vec![0; self.half_ids.len()];
        for (vi, v) in self.vertices.iter().enumerate() {
            for &h in &v.rotation {
                self.he_vertex[h as usize] = vi as u32;
            }
        }
        for (ei, e) in self.edges.iter().enumerate() {
            self.he_edge[e.a as usize] = ei as u32;
            self.he_edge[e.b as usize] = ei as u32;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|v| v.id.as_str())
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.label.as_str())
    }

    /// Edge labels as an element map; subset masks index edges in label
    /// order.
    pub fn edge_map(&self) -> &ElementMap {
        &self.emap
    }

    pub fn full_edge_set(&self) -> Subset {
        self.emap.full()
    }

    /// The sign of edge `label`.
    pub fn edge_sign(&self, label: &str) -> Result<Sign, RibbonError> {
        let i = self.edge_index(label)?;
        Ok(self.edges[i].sign)
    }

    pub(crate) fn edge_index(&self, label: &str) -> Result<usize, RibbonError> {
        self.edges
            .iter()
            .position(|e| e.label == label)
            .ok_or_else(|| RibbonError::UnknownEdge(label.to_string()))
    }

    /// True when both ends of the edge attach to one vertex.
    pub fn is_loop_edge(&self, label: &str) -> Result<bool, RibbonError> {
        let e = &self.edges[self.edge_index(label)?];
        Ok(self.he_vertex[e.a as usize] == self.he_vertex[e.b as usize])
    }

    /// Translates edge labels to a subset mask.
    pub fn edge_subset<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        labels: I,
    ) -> Result<Subset, RibbonError> {
        Ok(self.emap.subset(labels)?)
    }
}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonGraph(v={}, e={})", self.vertex_count(), self.edge_count())
    }
}

#[cfg(test)]
mod tests;
