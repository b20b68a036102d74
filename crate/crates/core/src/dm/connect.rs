//! Connectivity, separability, isomorphism, minor containment, and the
//! twist-of-a-matroid test.

use crate::elements::{bits, Subset};

use super::{DeltaMatroid, Matroid};

/// Witness for a disconnection: the two ground parts and the two factors.
#[derive(Debug, Clone)]
pub struct SplitParts {
    pub left_mask: Subset,
    pub right_mask: Subset,
    pub left: DeltaMatroid,
    pub right: DeltaMatroid,
}

impl DeltaMatroid {
    /// Tests whether the feasible family factors as a product over a ground
    /// bipartition; returns the bipartition mask (left side) if it does.
    ///
    /// `F` factors over `E = E1 ⊎ E2` exactly when `|F| = |P1| * |P2|`,
    /// where `Pi` is the projection of the family onto `Ei`: the product
    /// always contains the family, and distinct pairs give distinct unions.
    fn disconnection(&self) -> Option<Subset> {
        let n = self.size();
        if n < 2 {
            return None;
        }
        let full = self.full();
        // Fix element 0 on the left to halve the search.
        for half in 0..(1u32 << (n - 1)) {
            let left = (half << 1) | 1;
            let right = full & !left;
            if right == 0 {
                continue;
            }
            let mut p1: Vec<Subset> = self.feasible.iter().map(|f| f & left).collect();
            let mut p2: Vec<Subset> = self.feasible.iter().map(|f| f & right).collect();
            p1.sort_unstable();
            p1.dedup();
            p2.sort_unstable();
            p2.dedup();
            if p1.len() * p2.len() == self.feasible.len() {
                return Some(left);
            }
        }
        None
    }

    /// A delta-matroid is disconnected when it is a direct sum of two
    /// set systems on non-empty ground sets.
    pub fn is_connected(&self) -> bool {
        self.disconnection().is_none()
    }

    /// Separability looks only at the lower matroid.
    pub fn is_separable(&self) -> bool {
        !self.lower_matroid().as_dm().is_connected()
    }

    /// Returns a factorization `D = D1 ⊕ D2` when one exists.
    pub fn split(&self) -> Option<SplitParts> {
        let left = self.disconnection()?;
        let right = self.full() & !left;
        let project = |side: Subset| -> DeltaMatroid {
            let masks: Vec<Subset> = self.feasible.iter().map(|f| f & side).collect();
            let mut keep = self.clone();
            keep.feasible = masks;
            keep.feasible.sort_unstable();
            keep.feasible.dedup();
            keep.restrict_ground(side)
        };
        Some(SplitParts {
            left_mask: left,
            right_mask: right,
            left: project(left),
            right: project(right),
        })
    }

    /// Drops ground elements outside `side`, compacting mask bits. All
    /// feasible masks must already be contained in `side`.
    fn restrict_ground(&self, side: Subset) -> DeltaMatroid {
        let (ground, remap) = self.ground.without(self.full() & !side);
        let feasible = self
            .feasible
            .iter()
            .map(|&f| {
                let mut out = 0;
                for i in bits(f) {
                    out |= 1 << remap[i].expect("mask within side");
                }
                out
            })
            .collect();
        let mut dm = DeltaMatroid { ground, feasible };
        dm.feasible.sort_unstable();
        dm.feasible.dedup();
        dm
    }

    /// Signature used to prune the isomorphism search: feasible-set size
    /// multiset plus, per element, how many feasible sets of each size
    /// contain it.
    fn iso_signature(&self) -> (Vec<u32>, Vec<Vec<u32>>) {
        let n = self.size();
        let mut sizes: Vec<u32> = self.feasible.iter().map(|f| f.count_ones()).collect();
        sizes.sort_unstable();
        let mut per_element = vec![vec![0u32; (n + 1) as usize]; n];
        for &f in &self.feasible {
            let s = f.count_ones() as usize;
            for i in bits(f) {
                per_element[i][s] += 1;
            }
        }
        (sizes, per_element)
    }

    /// Ground-set bijection test: is there a relabelling carrying the
    /// feasible family of `self` onto that of `other`?
    pub fn is_isomorphic(&self, other: &DeltaMatroid) -> bool {
        if self.size() != other.size() || self.feasible.len() != other.feasible.len() {
            return false;
        }
        let (sa, ea) = self.iso_signature();
        let (sb, eb) = other.iso_signature();
        if sa != sb {
            return false;
        }
        let n = self.size();
        if n == 0 {
            return true;
        }
        // candidates[i]: elements of `other` with the same per-size counts.
        let mut candidates = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if ea[i] == eb[j] {
                    candidates[i] |= 1 << j;
                }
            }
            if candidates[i] == 0 {
                return false;
            }
        }
        let mut perm = vec![usize::MAX; n];
        self.iso_search(other, &candidates, &mut perm, 0, 0)
    }

    fn iso_search(
        &self,
        other: &DeltaMatroid,
        candidates: &[u32],
        perm: &mut [usize],
        depth: usize,
        used: u32,
    ) -> bool {
        let n = self.size();
        if depth == n {
            let mapped: Vec<Subset> = self
                .feasible
                .iter()
                .map(|&f| {
                    let mut g = 0;
                    for i in bits(f) {
                        g |= 1 << perm[i];
                    }
                    g
                })
                .collect();
            let mut mapped = mapped;
            mapped.sort_unstable();
            return mapped == other.feasible;
        }
        let mut free = candidates[depth] & !used;
        while free != 0 {
            let j = free.trailing_zeros() as usize;
            free &= free - 1;
            perm[depth] = j;
            if self.iso_search(other, candidates, perm, depth + 1, used | (1 << j)) {
                return true;
            }
        }
        false
    }

    /// Searches for a minor of `self` isomorphic to `target`; returns the
    /// witness masks `(deleted, contracted)` if found.
    pub fn find_minor(&self, target: &DeltaMatroid) -> Option<(Subset, Subset)> {
        let n = self.size();
        let k = target.size();
        if k > n {
            return None;
        }
        let full = self.full();
        for del in 0..=full {
            let rest = full & !del;
            if (n - del.count_ones() as usize) < k {
                continue;
            }
            for con in crate::elements::subsets_of(rest) {
                if n - del.count_ones() as usize - con.count_ones() as usize != k {
                    continue;
                }
                let m = self.minor_masks(del, con).expect("disjoint by construction");
                if m.is_isomorphic(target) {
                    return Some((del, con));
                }
            }
        }
        None
    }

    pub fn has_minor(&self, target: &DeltaMatroid) -> bool {
        self.find_minor(target).is_some()
    }

    /// True when the feasible sets are equicardinal.
    pub fn is_matroid(&self) -> bool {
        let (lo, hi) = self.min_max_size();
        lo == hi
    }

    /// Direct search: some twist of `D` is a matroid.
    pub fn is_twist_of_matroid_direct(&self) -> bool {
        (0..=self.full()).any(|a| self.twist(a).is_matroid())
    }

    /// Structural route: `D` or `D*` is a matroid, or some proper non-empty
    /// `A` is separating in `D_min` with both restrictions `D|A` and `D|A^c`
    /// matroids.
    pub fn is_twist_of_matroid_structural(&self) -> bool {
        if self.is_matroid() || self.dual().is_matroid() {
            return true;
        }
        let full = self.full();
        if self.size() < 2 {
            return false;
        }
        let lower = self.lower_matroid();
        let r = lower.rank_full();
        for a in 1..full {
            // A separating in D_min: rank is additive over the bipartition.
            if lower.rank(a) + lower.rank(full & !a) != r {
                continue;
            }
            let da = self.restrict(a).expect("restriction is total");
            let dac = self.restrict(full & !a).expect("restriction is total");
            if da.is_matroid() && dac.is_matroid() {
                return true;
            }
        }
        false
    }

    /// Whether some twist of `D` is a matroid, computed by two independent
    /// routes that are asserted to agree.
    pub fn is_twist_of_matroid(&self) -> bool {
        let direct = self.is_twist_of_matroid_direct();
        let structural = self.is_twist_of_matroid_structural();
        assert_eq!(
            direct, structural,
            "twist-of-matroid routes disagree on {self:?}"
        );
        direct
    }
}

impl Matroid {
    /// Matroid connectivity in the direct-sum sense.
    pub fn is_connected(&self) -> bool {
        self.as_dm().is_connected()
    }
}
