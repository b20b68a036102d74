//! Partial duality, partial petriality, deletion, contraction, and
//! 2-connectivity.

use crate::elements::{bits, Subset};

use super::{RibbonGraph, RibbonError, Sign};

impl RibbonGraph {
    /// The partial dual `G^A`.
    ///
    /// On the flags of each edge in `A` the edge pairing and the side pairing
    /// swap roles; the corner pairing is untouched. New vertices are the
    /// orbits of (corner, new side) — equivalently the boundary components of
    /// `(V, A)` — and a rotation system is read back off the orbit walks.
    /// Edge labels are preserved; half-edge and vertex ids are regenerated.
    /// Isolated vertices carry over.
    pub fn partial_dual(&self, a: Subset) -> RibbonGraph {
        let flags = self.flags();
        let nf = flags.sigma_v.len();
        // New side pairing: edge pairing on A, original sides elsewhere.
        let side = |f: u32| -> u32 {
            if a & (1 << flags.flag_edge[f as usize]) != 0 {
                flags.sigma_e[f as usize]
            } else {
                f ^ 1
            }
        };
        // New edge pairing: the swap in the other direction.
        let edge_pair = |f: u32| -> u32 {
            if a & (1 << flags.flag_edge[f as usize]) != 0 {
                f ^ 1
            } else {
                flags.sigma_e[f as usize]
            }
        };

        // Walk the (corner, side) orbits. Each crossed side pair becomes a
        // half-edge of the new graph; the flag we enter it at is its new
        // left flag.
        let mut pair_of_flag = vec![u32::MAX; nf]; // flag -> new half-edge
        let mut entry_flag: Vec<u32> = Vec::new(); // new half-edge -> left flag
        let mut new_vertices: Vec<Vec<u32>> = Vec::new(); // rotations over new half-edges
        let mut seen = vec![false; nf];
        for start in 0..nf as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut rotation = Vec::new();
            let mut cur = start;
            loop {
                seen[cur as usize] = true;
                let out = side(cur);
                seen[out as usize] = true;
                let he = entry_flag.len() as u32;
                pair_of_flag[cur as usize] = he;
                pair_of_flag[out as usize] = he;
                entry_flag.push(cur);
                rotation.push(he);
                cur = flags.sigma_v[out as usize];
                if cur == start {
                    break;
                }
            }
            new_vertices.push(rotation);
        }

        // Edge signs: edge e joins the two new half-edges carrying its flags;
        // the sign is positive exactly when the new edge pairing matches the
        // new left flags to opposite sides.
        let mut new_edges: Vec<(String, u32, u32, Sign)> = Vec::new();
        for e in &self.edges {
            let f0 = 2 * e.a;
            let p = pair_of_flag[f0 as usize];
            let q = pair_of_flag[edge_pair(f0) as usize];
            debug_assert_ne!(p, q);
            let lp = entry_flag[p as usize];
            let sign = if edge_pair(lp) == entry_flag[q as usize] {
                Sign::Minus
            } else {
                Sign::Plus
            };
            new_edges.push((e.label.clone(), p, q, sign));
        }

        // Assemble with generated ids. Half-edge ids are zero-padded so the
        // canonical serializer's lexicographic order matches numeric order.
        let width = entry_flag.len().max(1).to_string().len();
        let hid = |h: u32| format!("h{:0width$}", h + 1, width = width);
        let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
        for (vi, rot) in new_vertices.iter().enumerate() {
            vertices.push((
                format!("v{}", vi + 1),
                rot.iter().map(|&h| hid(h)).collect(),
            ));
        }
        for v in &self.vertices {
            if v.rotation.is_empty() {
                vertices.push((format!("v{}", vertices.len() + 1), Vec::new()));
            }
        }
        let edges = new_edges
            .into_iter()
            .map(|(l, p, q, s)| (l, hid(p), hid(q), s))
            .collect();
        RibbonGraph::build(vertices, edges).expect("partial dual is a valid rotation system")
    }

    /// The geometric dual `G* = G^{E}`.
    pub fn geometric_dual(&self) -> RibbonGraph {
        self.partial_dual(self.full_edge_set())
    }

    /// The partial petrial `G ⨯ A`: flips the sign of each edge in `A`.
    /// Involutive.
    pub fn partial_petrial(&self, a: Subset) -> RibbonGraph {
        let mut g = self.clone();
        for i in bits(a) {
            g.edges[i].sign = g.edges[i].sign.flip();
        }
        g
    }

    /// Removes the edge ribbon, keeping all vertices.
    pub fn delete_edge(&self, label: &str) -> Result<RibbonGraph, RibbonError> {
        let ei = self.edge_index(label)?;
        let e = &self.edges[ei];
        let drop = [e.a, e.b];
        let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
        for v in &self.vertices {
            vertices.push((
                v.id.clone(),
                v.rotation
                    .iter()
                    .filter(|h| !drop.contains(h))
                    .map(|&h| self.half_ids[h as usize].clone())
                    .collect(),
            ));
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != ei)
            .map(|(_, e)| {
                (
                    e.label.clone(),
                    self.half_ids[e.a as usize].clone(),
                    self.half_ids[e.b as usize].clone(),
                    e.sign,
                )
            })
            .collect();
        RibbonGraph::build(vertices, edges)
    }

    /// Removes several edges.
    pub fn delete_edges(&self, a: Subset) -> Result<RibbonGraph, RibbonError> {
        let mut g = self.clone();
        for i in bits(a) {
            let label = self.edges[i].label.clone();
            g = g.delete_edge(&label)?;
        }
        Ok(g)
    }

    /// Contraction `G/e = G^{e} \ e`.
    pub fn contract_edge(&self, label: &str) -> Result<RibbonGraph, RibbonError> {
        let ei = self.edge_index(label)?;
        self.partial_dual(1 << ei).delete_edge(label)
    }

    /// Removes a vertex and all incident edges.
    pub fn delete_vertex(&self, id: &str) -> Result<RibbonGraph, RibbonError> {
        let vi = self
            .vertices
            .iter()
            .position(|v| v.id == id)
            .ok_or_else(|| RibbonError::UnknownVertex(id.to_string()))?;
        let mut doomed: Subset = 0;
        for (ei, e) in self.edges.iter().enumerate() {
            if self.he_vertex[e.a as usize] as usize == vi
                || self.he_vertex[e.b as usize] as usize == vi
            {
                doomed |= 1 << ei;
            }
        }
        let g = self.delete_edges(doomed)?;
        let vertices = g
            .vertices
            .iter()
            .filter(|v| v.id != id)
            .map(|v| {
                (
                    v.id.clone(),
                    v.rotation
                        .iter()
                        .map(|&h| g.half_ids[h as usize].clone())
                        .collect(),
                )
            })
            .collect();
        let edges = g
            .edges
            .iter()
            .map(|e| {
                (
                    e.label.clone(),
                    g.half_ids[e.a as usize].clone(),
                    g.half_ids[e.b as usize].clone(),
                    e.sign,
                )
            })
            .collect();
        RibbonGraph::build(vertices, edges)
    }

    /// A ribbon graph is 2-connected when it is neither a disjoint union of
    /// non-empty ribbon graphs nor a join of two non-trivial ones;
    /// equivalently, it is connected and `D(G)` is a connected delta-matroid.
    /// A single vertex counts as 2-connected.
    pub fn is_2_connected(&self) -> bool {
        !self.vertices.is_empty()
            && self.component_count(self.full_edge_set()) == 1
            && self.delta_matroid().is_connected()
    }
}

/// Disjoint union; labels and ids get `l.`/`r.` prefixes to stay distinct.
pub fn disjoint_union(g1: &RibbonGraph, g2: &RibbonGraph) -> RibbonGraph {
    let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
    let mut edges: Vec<(String, String, String, Sign)> = Vec::new();
    for (prefix, g) in [("l.", g1), ("r.", g2)] {
        for v in &g.vertices {
            vertices.push((
                format!("{prefix}{}", v.id),
                v.rotation
                    .iter()
                    .map(|&h| format!("{prefix}{}", g.half_ids[h as usize]))
                    .collect(),
            ));
        }
        for e in &g.edges {
            edges.push((
                format!("{prefix}{}", e.label),
                format!("{prefix}{}", g.half_ids[e.a as usize]),
                format!("{prefix}{}", g.half_ids[e.b as usize]),
                e.sign,
            ));
        }
    }
    RibbonGraph::build(vertices, edges).expect("prefixing keeps ids distinct")
}

/// One-point join: merges vertex `u` of `g1` with vertex `w` of `g2`,
/// concatenating the rotations so neither side interlaces the other.
pub fn join(g1: &RibbonGraph, u: &str, g2: &RibbonGraph, w: &str) -> Result<RibbonGraph, RibbonError> {
    let ui = g1
        .vertices
        .iter()
        .position(|v| v.id == u)
        .ok_or_else(|| RibbonError::UnknownVertex(u.to_string()))?;
    let wi = g2
        .vertices
        .iter()
        .position(|v| v.id == w)
        .ok_or_else(|| RibbonError::UnknownVertex(w.to_string()))?;
    let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
    let mut merged: Vec<String> = g1.vertices[ui]
        .rotation
        .iter()
        .map(|&h| format!("l.{}", g1.half_ids[h as usize]))
        .collect();
    merged.extend(
        g2.vertices[wi]
            .rotation
            .iter()
            .map(|&h| format!("r.{}", g2.half_ids[h as usize])),
    );
    vertices.push(("j".to_string(), merged));
    for (prefix, g, skip) in [("l.", g1, ui), ("r.", g2, wi)] {
        for (vi, v) in g.vertices.iter().enumerate() {
            if vi == skip {
                continue;
            }
            vertices.push((
                format!("{prefix}{}", v.id),
                v.rotation
                    .iter()
                    .map(|&h| format!("{prefix}{}", g.half_ids[h as usize]))
                    .collect(),
            ));
        }
    }
    let mut edges: Vec<(String, String, String, Sign)> = Vec::new();
    for (prefix, g) in [("l.", g1), ("r.", g2)] {
        for e in &g.edges {
            edges.push((
                format!("{prefix}{}", e.label),
                format!("{prefix}{}", g.half_ids[e.a as usize]),
                format!("{prefix}{}", g.half_ids[e.b as usize]),
                e.sign,
            ));
        }
    }
    RibbonGraph::build(vertices, edges)
}

impl RibbonGraph {
    /// Relabels every edge, preserving everything else. `map` pairs old and
    /// new labels.
    pub fn relabel_edges(&self, map: &[(&str, &str)]) -> Result<RibbonGraph, RibbonError> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                (
                    v.id.clone(),
                    v.rotation
                        .iter()
                        .map(|&h| self.half_ids[h as usize].clone())
                        .collect(),
                )
            })
            .collect();
        let mut edges = Vec::new();
        for e in &self.edges {
            let new = map
                .iter()
                .find(|(old, _)| *old == e.label)
                .map(|(_, new)| new.to_string())
                .ok_or_else(|| RibbonError::UnknownEdge(e.label.clone()))?;
            edges.push((
                new,
                self.half_ids[e.a as usize].clone(),
                self.half_ids[e.b as usize].clone(),
                e.sign,
            ));
        }
        RibbonGraph::build(vertices, edges)
    }
}
