//! Flag pairings, boundary tracing, and the quasi-tree families.

use crate::dm::DeltaMatroid;
use crate::elements::Subset;

use super::{RibbonGraph, Sign, SubParams};

/// The three flag pairings of a ribbon graph. Flags `2h` and `2h + 1` are
/// the two sides of half-edge `h`; the side pairing is `f ^ 1` and needs no
/// table.
pub(crate) struct Flags {
    /// Corner pairing from the vertex rotations.
    pub sigma_v: Vec<u32>,
    /// Pairing along the edge ribbons; crossed for negative signs.
    pub sigma_e: Vec<u32>,
    /// Flag -> edge index.
    pub flag_edge: Vec<u32>,
    /// Vertices with no incident half-edges.
    pub isolated: usize,
}

impl RibbonGraph {
    pub(crate) fn flags(&self) -> Flags {
        let nf = 2 * self.half_ids.len();
        let mut sigma_v = vec![0u32; nf];
        let mut sigma_e = vec![0u32; nf];
        let mut flag_edge = vec![0u32; nf];
        let mut isolated = 0;
        for v in &self.vertices {
            if v.rotation.is_empty() {
                isolated += 1;
                continue;
            }
            // Corner after h_i meets the left side of h_{i+1}.
            for (i, &h) in v.rotation.iter().enumerate() {
                let next = v.rotation[(i + 1) % v.rotation.len()];
                sigma_v[(2 * h + 1) as usize] = 2 * next;
                sigma_v[(2 * next) as usize] = 2 * h + 1;
            }
        }
        for (ei, e) in self.edges.iter().enumerate() {
            let (al, ar, bl, br) = (2 * e.a, 2 * e.a + 1, 2 * e.b, 2 * e.b + 1);
            match e.sign {
                Sign::Plus => {
                    sigma_e[al as usize] = br;
                    sigma_e[br as usize] = al;
                    sigma_e[ar as usize] = bl;
                    sigma_e[bl as usize] = ar;
                }
                Sign::Minus => {
                    sigma_e[al as usize] = bl;
                    sigma_e[bl as usize] = al;
                    sigma_e[ar as usize] = br;
                    sigma_e[br as usize] = ar;
                }
            }
            for f in [al, ar, bl, br] {
                flag_edge[f as usize] = ei as u32;
            }
        }
        Flags {
            sigma_v,
            sigma_e,
            flag_edge,
            isolated,
        }
    }

    /// Number of boundary components of the spanning ribbon subgraph
    /// `(V, A)`: orbits of the vertex pairing with the edge pairing on `A`
    /// and the side pairing elsewhere, plus one per isolated vertex.
    pub(crate) fn boundary_components(&self, flags: &Flags, a: Subset) -> usize {
        let nf = flags.sigma_v.len();
        debug_assert!(nf <= 128);
        let mut visited: u128 = 0;
        let mut count = flags.isolated;
        for start in 0..nf as u32 {
            if visited & (1u128 << start) != 0 {
                continue;
            }
            count += 1;
            let mut cur = start;
            loop {
                visited |= 1u128 << cur;
                let step = if a & (1 << flags.flag_edge[cur as usize]) != 0 {
                    flags.sigma_e[cur as usize]
                } else {
                    cur ^ 1
                };
                visited |= 1u128 << step;
                cur = flags.sigma_v[step as usize];
                if cur == start {
                    break;
                }
            }
        }
        count
    }

    /// Connected components of `(V, A)`.
    pub(crate) fn component_count(&self, a: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        for (ei, e) in self.edges.iter().enumerate() {
            if a & (1 << ei) != 0 {
                uf.union(
                    self.he_vertex[e.a as usize] as usize,
                    self.he_vertex[e.b as usize] as usize,
                );
            }
        }
        uf.count()
    }

    /// 1 when `(V, A)` contains a cycle with an odd number of negative
    /// edges, i.e. the spanning subgraph is non-orientable.
    pub(crate) fn twist_indicator(&self, a: Subset) -> u8 {
        let mut uf = ParityUnionFind::new(self.vertices.len());
        for (ei, e) in self.edges.iter().enumerate() {
            if a & (1 << ei) != 0 {
                let u = self.he_vertex[e.a as usize] as usize;
                let v = self.he_vertex[e.b as usize] as usize;
                let negative = e.sign == Sign::Minus;
                if !uf.union(u, v, negative) {
                    return 1;
                }
            }
        }
        0
    }

    /// Parameters `(f, k, r, n, gamma, t)` of the spanning ribbon subgraph
    /// `(V, A)`.
    pub fn sub_params(&self, a: Subset) -> SubParams {
        let flags = self.flags();
        self.sub_params_with(&flags, a)
    }

    pub(crate) fn sub_params_with(&self, flags: &Flags, a: Subset) -> SubParams {
        let f = self.boundary_components(flags, a);
        let k = self.component_count(a);
        let v = self.vertices.len();
        let e = a.count_ones() as usize;
        let r = v - k;
        let n = e - r;
        let gamma = (2 * k + e).checked_sub(v + f).expect("Euler genus is non-negative");
        let t = self.twist_indicator(a);
        SubParams { f, k, r, n, gamma, t }
    }

    /// Parameters of the whole graph.
    pub fn params(&self) -> SubParams {
        self.sub_params(self.full_edge_set())
    }

    /// Edge subsets `A` with `k(A) = k(G)` and `f(A) = k(G)`: every component
    /// of `(V, A)` is spanning and has one boundary component.
    pub fn spanning_quasi_trees(&self) -> Vec<Subset> {
        let flags = self.flags();
        let k = self.component_count(self.full_edge_set());
        let mut out = Vec::new();
        for a in 0..=self.full_edge_set() {
            if self.boundary_components(&flags, a) == k && self.component_count(a) == k {
                out.push(a);
            }
        }
        out
    }

    /// The families `F_{<=n}(G)` and `F_n(G)`: subsets whose boundary-count
    /// excess over `k(G)` is at most `n`, resp. exactly `n`.
    pub fn feasible_families_n(&self, n: usize) -> (Vec<Subset>, Vec<Subset>) {
        let flags = self.flags();
        let k = self.component_count(self.full_edge_set());
        let mut le = Vec::new();
        let mut eq = Vec::new();
        for a in 0..=self.full_edge_set() {
            let f = self.boundary_components(&flags, a);
            if f <= k + n {
                le.push(a);
            }
            if f == k + n {
                eq.push(a);
            }
        }
        (le, eq)
    }

    /// The delta-matroid `D(G)`: edge sets of spanning quasi-trees.
    ///
    /// For subsets, `f(A) = k(G)` already forces `k(A) = k(G)`, so this is
    /// `F_0(G)`.
    pub fn delta_matroid(&self) -> DeltaMatroid {
        DeltaMatroid::from_masks(self.emap.clone(), self.spanning_quasi_trees())
            .expect("a maximal spanning forest always exists")
    }

    /// `D_{<=n}(G)`, the n-spread family as a set system.
    pub fn delta_matroid_le_n(&self, n: usize) -> DeltaMatroid {
        let (le, _) = self.feasible_families_n(n);
        DeltaMatroid::from_masks(self.emap.clone(), le).expect("contains F(G)")
    }

    /// `D_n(G)` as a set system, when non-empty.
    pub fn delta_matroid_exact_n(&self, n: usize) -> Option<DeltaMatroid> {
        let (_, eq) = self.feasible_families_n(n);
        DeltaMatroid::from_masks(self.emap.clone(), eq).ok()
    }

    /// True when the graph is orientable: no cycle has an odd number of
    /// negative edges.
    pub fn is_orientable(&self) -> bool {
        self.twist_indicator(self.full_edge_set()) == 0
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while cur != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb as u32;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Union-find with an orientation parity on each node relative to its root.
/// `union(a, b, negative)` returns false when the edge closes an odd cycle.
struct ParityUnionFind {
    parent: Vec<u32>,
    parity: Vec<u8>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n as u32).collect(),
            parity: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        if self.parent[x] as usize == x {
            return (x, 0);
        }
        let (root, p) = self.find(self.parent[x] as usize);
        let total = p ^ self.parity[x];
        self.parent[x] = root as u32;
        self.parity[x] = total;
        (root, total)
    }

    fn union(&mut self, a: usize, b: usize, negative: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        let rel = pa ^ pb ^ (negative as u8);
        if ra == rb {
            rel == 0
        } else {
            self.parent[ra] = rb as u32;
            self.parity[ra] = rel;
            true
        }
    }
}
