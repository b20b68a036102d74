//! Spreads, toggles, sums, and the partial-petrial companion `D + A`.

use crate::elements::ElementMap;
use crate::elements::Subset;

use super::{DeltaMatroid, DmError};

impl DeltaMatroid {
    /// The `n`-spread: feasible sets are all `F △ A` with `F` feasible and
    /// `|A| <= n`.
    pub fn spread(&self, n: usize) -> DeltaMatroid {
        let ne = self.size();
        let mut member = vec![false; 1 << ne];
        for &f in &self.feasible {
            member[f as usize] = true;
        }
        let mut frontier: Vec<Subset> = self.feasible.clone();
        for _ in 0..n {
            let mut next = Vec::new();
            for &f in &frontier {
                for e in 0..ne {
                    let g = f ^ (1 << e);
                    if !member[g as usize] {
                        member[g as usize] = true;
                        next.push(g);
                    }
                }
            }
            frontier = next;
        }
        let feasible: Vec<Subset> = (0..(1u32 << ne)).filter(|&m| member[m as usize]).collect();
        DeltaMatroid {
            ground: self.ground.clone(),
            feasible,
        }
    }

    /// The `n`-toggle: sets at symmetric-difference distance exactly `n`
    /// from the family, i.e. `F_{<=n} - F_{<=n-1}`. Errors when empty.
    pub fn toggle(&self, n: usize) -> Result<DeltaMatroid, DmError> {
        if n == 0 {
            return Ok(self.clone());
        }
        let inner = self.spread(n - 1);
        let outer = self.spread(n);
        let feasible: Vec<Subset> = outer
            .feasible
            .iter()
            .copied()
            .filter(|f| !inner.is_feasible(*f))
            .collect();
        if feasible.is_empty() {
            return Err(DmError::EmptyToggle);
        }
        Ok(DeltaMatroid {
            ground: self.ground.clone(),
            feasible,
        })
    }

    /// Delta-matroid sum on a common ground set: pairwise symmetric
    /// differences of feasible sets.
    pub fn sum(&self, other: &DeltaMatroid) -> Result<DeltaMatroid, DmError> {
        if self.ground != other.ground {
            return Err(DmError::GroundMismatch);
        }
        let mut feasible = Vec::new();
        for &f in &self.feasible {
            for &g in &other.feasible {
                feasible.push(f ^ g);
            }
        }
        DeltaMatroid::from_masks(self.ground.clone(), feasible)
    }

    /// Direct sum on disjoint ground sets: feasible sets are unions of one
    /// feasible set from each summand.
    pub fn direct_sum(&self, other: &DeltaMatroid) -> Result<DeltaMatroid, DmError> {
        for l in other.ground.labels() {
            if self.ground.index(l).is_some() {
                return Err(DmError::GroundOverlap);
            }
        }
        let mut labels: Vec<String> = self.ground.labels().to_vec();
        labels.extend(other.ground.labels().iter().cloned());
        let ground = ElementMap::new(labels)?;
        let lift = |from: &ElementMap, mask: Subset| -> Subset {
            let mut out = 0;
            for i in crate::elements::bits(mask) {
                out |= 1 << ground.index(from.label(i)).expect("label present");
            }
            out
        };
        let mut feasible = Vec::new();
        for &f in &self.feasible {
            for &g in &other.feasible {
                feasible.push(lift(&self.ground, f) | lift(&other.ground, g));
            }
        }
        DeltaMatroid::from_masks(ground, feasible)
    }

    /// `D + A`: a set `F` is feasible when the number of feasible sets `F'`
    /// of `D` with `F - A ⊆ F' ⊆ F` is odd.
    ///
    /// This is the delta-matroid companion of the partial petrial. The result
    /// is only guaranteed to satisfy the exchange axiom for vf-safe inputs
    /// (ribbon-graphic and binary delta-matroids are); no vf-safety check is
    /// performed.
    pub fn plus(&self, a: Subset) -> Result<DeltaMatroid, DmError> {
        let full = self.full();
        let mut feasible = Vec::new();
        for cand in 0..=full {
            let lo = cand & !a;
            let mut count = 0u32;
            for &f in &self.feasible {
                if lo & !f == 0 && f & !cand == 0 {
                    count += 1;
                }
            }
            if count % 2 == 1 {
                feasible.push(cand);
            }
        }
        DeltaMatroid::from_masks(self.ground.clone(), feasible)
    }
}
