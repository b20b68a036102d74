//! Delta-matroids: proper set systems satisfying the Symmetric Exchange
//! Axiom, stored as bitmask families over a labelled ground set.
//!
//! The operations here are the full calculus: twists and duals, minors,
//! the rank function rho, lower/upper matroids, width and parity, the
//! loop/coloop taxonomy, spreads, toggles, sums, and connectivity.

mod connect;
mod io;
mod ops;

pub use connect::SplitParts;
pub use io::{parse_dm, ParseError};

use std::fmt;

use thiserror::Error;

use crate::elements::{bits, ElementError, ElementMap, Subset};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DmError {
    #[error("feasible family is empty")]
    EmptyFeasibleFamily,
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error("minor deletion and contraction sets overlap")]
    OverlappingMinorSets,
    #[error("feasible sets are not equicardinal")]
    NotAMatroid,
    #[error("toggle family is empty")]
    EmptyToggle,
    #[error("ground sets overlap")]
    GroundOverlap,
    #[error("ground sets differ")]
    GroundMismatch,
}

/// A violation of the Symmetric Exchange Axiom: feasible sets `x` and `y`
/// and an element `u` of their symmetric difference such that no
/// `x ^ {u, v}` with `v` in the symmetric difference is feasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeaViolation {
    pub x: Subset,
    pub y: Subset,
    pub u: usize,
}

/// Classification of a ground element, following the ribbon-graph-flavoured
/// loop taxonomy. `Loop` is the trivial orientable ribbon loop: an element in
/// no feasible set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    Coloop,
    Loop,
    RibbonLoopOrientableNontrivial,
    RibbonLoopNonorientableTrivial,
    RibbonLoopNonorientableNontrivial,
    Ordinary,
}

/// A proper set system `(E, F)` with `F` stored as a sorted list of bitmasks.
///
/// Constructors only enforce properness; whether the family satisfies the
/// Symmetric Exchange Axiom is checked by [`DeltaMatroid::check_symmetric_exchange`].
/// Every operation that the theory closes under (twist, minors, spreads, ...)
/// preserves the axiom, so values built by those operations from delta-matroids
/// are delta-matroids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeltaMatroid {
    ground: ElementMap,
    feasible: Vec<Subset>,
}

impl DeltaMatroid {
    /// Builds a set system from labels and feasible sets given as label lists.
    pub fn new<'a, I, S, J>(labels: I, feasible: J) -> Result<Self, DmError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        J: IntoIterator<Item = &'a [&'a str]>,
    {
        let ground = ElementMap::new(labels)?;
        let mut masks = Vec::new();
        for set in feasible {
            masks.push(ground.subset(set.iter().copied())?);
        }
        Self::from_masks(ground, masks)
    }

    /// Builds a set system from a ground map and raw masks. Sorts and dedups.
    pub fn from_masks(ground: ElementMap, mut feasible: Vec<Subset>) -> Result<Self, DmError> {
        if feasible.is_empty() {
            return Err(DmError::EmptyFeasibleFamily);
        }
        let full = ground.full();
        debug_assert!(feasible.iter().all(|&f| f & !full == 0));
        feasible.sort_unstable();
        feasible.dedup();
        Ok(DeltaMatroid { ground, feasible })
    }

    /// The trivial delta-matroid: empty ground set, feasible family `{∅}`.
    pub fn trivial() -> Self {
        DeltaMatroid {
            ground: ElementMap::empty(),
            feasible: vec![0],
        }
    }

    pub fn ground(&self) -> &ElementMap {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn feasible(&self) -> &[Subset] {
        &self.feasible
    }

    pub fn is_feasible(&self, set: Subset) -> bool {
        self.feasible.binary_search(&set).is_ok()
    }

    fn full(&self) -> Subset {
        self.ground.full()
    }

    /// Checks the Symmetric Exchange Axiom, returning a witness on failure:
    /// for all feasible `X`, `Y` and all `u` in `X △ Y` there must be a `v`
    /// in `X △ Y` (allowing `v = u`) with `X △ {u, v}` feasible.
    pub fn check_symmetric_exchange(&self) -> Option<SeaViolation> {
        let n = self.size();
        let full = self.full();
        for &x in &self.feasible {
            // u_ok: single toggles of x that stay feasible (the v = u case).
            let mut u_ok: Subset = 0;
            for u in 0..n {
                if self.is_feasible(x ^ (1 << u)) {
                    u_ok |= 1 << u;
                }
            }
            if u_ok == full {
                continue;
            }
            // v_ok[u]: elements v != u with x ^ {u, v} feasible.
            let mut v_ok = [0u32; 32];
            for u in 0..n {
                if u_ok & (1 << u) != 0 {
                    continue;
                }
                for v in 0..n {
                    if v != u && self.is_feasible(x ^ (1 << u) ^ (1 << v)) {
                        v_ok[u] |= 1 << v;
                    }
                }
            }
            for &y in &self.feasible {
                let d = x ^ y;
                let mut rem = d & !u_ok;
                while rem != 0 {
                    let u = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    if v_ok[u] & d == 0 {
                        return Some(SeaViolation { x, y, u });
                    }
                }
            }
        }
        None
    }

    pub fn is_delta_matroid(&self) -> bool {
        self.check_symmetric_exchange().is_none()
    }

    /// The twist `D * A`: replaces each feasible set `F` by `A △ F`.
    pub fn twist(&self, a: Subset) -> DeltaMatroid {
        let mut feasible: Vec<Subset> = self.feasible.iter().map(|f| f ^ a).collect();
        feasible.sort_unstable();
        DeltaMatroid {
            ground: self.ground.clone(),
            feasible,
        }
    }

    /// The dual `D* = D * E`.
    pub fn dual(&self) -> DeltaMatroid {
        self.twist(self.full())
    }

    pub fn twist_labels(&self, labels: &[&str]) -> Result<DeltaMatroid, DmError> {
        Ok(self.twist(self.ground.subset(labels.iter().copied())?))
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.feasible.iter().all(|f| f & (1 << e) != 0)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.feasible.iter().all(|f| f & (1 << e) == 0)
    }

    fn element_bit(&self, label: &str) -> Result<usize, DmError> {
        self.ground
            .index(label)
            .ok_or_else(|| ElementError::UnknownElement(label.to_string()).into())
    }

    /// Removes bit `e` from every mask of `sets`, shifting higher bits down.
    fn shrink(&self, e: usize, sets: impl Iterator<Item = Subset>) -> Result<DeltaMatroid, DmError> {
        let (ground, _) = self.ground.without(1 << e);
        let low = (1u32 << e) - 1;
        let feasible = sets.map(|f| (f & low) | ((f >> 1) & !low)).collect();
        DeltaMatroid::from_masks(ground, feasible)
    }

    /// `D \ e`. Deleting a coloop is routed to contraction, so minors are
    /// total on proper set systems.
    pub fn delete(&self, label: &str) -> Result<DeltaMatroid, DmError> {
        let e = self.element_bit(label)?;
        if self.is_coloop(e) {
            self.contract_bit(e)
        } else {
            self.delete_bit(e)
        }
    }

    /// `D / e`. Contracting a loop is routed to deletion.
    pub fn contract(&self, label: &str) -> Result<DeltaMatroid, DmError> {
        let e = self.element_bit(label)?;
        if self.is_loop(e) {
            self.delete_bit(e)
        } else {
            self.contract_bit(e)
        }
    }

    fn delete_bit(&self, e: usize) -> Result<DeltaMatroid, DmError> {
        let bit = 1 << e;
        self.shrink(e, self.feasible.iter().copied().filter(|f| f & bit == 0))
    }

    fn contract_bit(&self, e: usize) -> Result<DeltaMatroid, DmError> {
        let bit = 1 << e;
        self.shrink(
            e,
            self.feasible
                .iter()
                .copied()
                .filter(|f| f & bit != 0)
                .map(|f| f & !bit),
        )
    }

    /// `D \ X / Y`: deletes the elements of `x`, contracts those of `y`.
    /// The result does not depend on the order of the operations.
    pub fn minor(&self, x: &[&str], y: &[&str]) -> Result<DeltaMatroid, DmError> {
        let xm = self.ground.subset(x.iter().copied())?;
        let ym = self.ground.subset(y.iter().copied())?;
        if xm & ym != 0 {
            return Err(DmError::OverlappingMinorSets);
        }
        self.minor_masks(xm, ym)
    }

    pub fn minor_masks(&self, delete: Subset, contract: Subset) -> Result<DeltaMatroid, DmError> {
        if delete & contract != 0 {
            return Err(DmError::OverlappingMinorSets);
        }
        let mut cur = self.clone();
        for i in bits(delete) {
            let label = self.ground.label(i).to_string();
            cur = cur.delete(&label)?;
        }
        for i in bits(contract) {
            let label = self.ground.label(i).to_string();
            cur = cur.contract(&label)?;
        }
        Ok(cur)
    }

    /// Restriction `D|A = D \ (E - A)`.
    pub fn restrict(&self, a: Subset) -> Result<DeltaMatroid, DmError> {
        self.minor_masks(self.full() & !a, 0)
    }

    /// Delta-matroid rank: `rho(A) = |E| - min over feasible F of |A △ F|`.
    pub fn rho(&self, a: Subset) -> usize {
        let best = self
            .feasible
            .iter()
            .map(|&f| (a ^ f).count_ones())
            .min()
            .expect("feasible family is non-empty");
        self.size() - best as usize
    }

    fn min_max_size(&self) -> (u32, u32) {
        let mut lo = u32::MAX;
        let mut hi = 0;
        for f in &self.feasible {
            lo = lo.min(f.count_ones());
            hi = hi.max(f.count_ones());
        }
        (lo, hi)
    }

    /// The lower matroid `D_min`: feasible sets of minimum cardinality.
    pub fn lower_matroid(&self) -> Matroid {
        let (lo, _) = self.min_max_size();
        self.cardinality_layer(lo)
    }

    /// The upper matroid `D_max`: feasible sets of maximum cardinality.
    pub fn upper_matroid(&self) -> Matroid {
        let (_, hi) = self.min_max_size();
        self.cardinality_layer(hi)
    }

    fn cardinality_layer(&self, size: u32) -> Matroid {
        let feasible: Vec<Subset> = self
            .feasible
            .iter()
            .copied()
            .filter(|f| f.count_ones() == size)
            .collect();
        Matroid {
            dm: DeltaMatroid {
                ground: self.ground.clone(),
                feasible,
            },
        }
    }

    /// `w(D) = r(D_max) - r(D_min)`, the spread of feasible cardinalities.
    pub fn width(&self) -> usize {
        let (lo, hi) = self.min_max_size();
        (hi - lo) as usize
    }

    /// True when all feasible sets share one parity.
    pub fn is_even(&self) -> bool {
        let p = self.feasible[0].count_ones() & 1;
        self.feasible.iter().all(|f| f.count_ones() & 1 == p)
    }

    /// Classifies `e` as coloop, loop, one of the four ribbon-loop kinds, or
    /// ordinary.
    pub fn element_class(&self, label: &str) -> Result<ElementClass, DmError> {
        let e = self.element_bit(label)?;
        Ok(self.element_class_bit(e))
    }

    pub fn element_class_bit(&self, e: usize) -> ElementClass {
        let bit = 1u32 << e;
        if self.is_coloop(e) {
            return ElementClass::Coloop;
        }
        // Ribbon loop: a loop of the lower matroid.
        let (lo, _) = self.min_max_size();
        let ribbon_loop = self
            .feasible
            .iter()
            .all(|f| f.count_ones() != lo || f & bit == 0);
        if !ribbon_loop {
            return ElementClass::Ordinary;
        }
        // Non-orientable: still a ribbon loop after twisting by e.
        let twisted = self.twist(bit);
        let (tlo, _) = twisted.min_max_size();
        let nonorientable = twisted
            .feasible
            .iter()
            .all(|f| f.count_ones() != tlo || f & bit == 0);
        if nonorientable {
            if self.feasible.iter().all(|&f| self.is_feasible(f ^ bit)) {
                ElementClass::RibbonLoopNonorientableTrivial
            } else {
                ElementClass::RibbonLoopNonorientableNontrivial
            }
        } else if self.is_loop(e) {
            ElementClass::Loop
        } else {
            ElementClass::RibbonLoopOrientableNontrivial
        }
    }

    /// Serializes in `.dm` form: a `ground:` line then one `feasible:` line
    /// per set, sets ordered lexicographically by their label lists.
    pub fn to_dm_string(&self) -> String {
        let mut sets: Vec<Vec<&str>> = self
            .feasible
            .iter()
            .map(|&f| self.ground.label_set(f))
            .collect();
        sets.sort();
        let mut out = String::new();
        out.push_str("ground:");
        for l in self.ground.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
        for s in sets {
            out.push_str("feasible:");
            for l in s {
                out.push(' ');
                out.push_str(l);
            }
            out.push('\n');
        }
        out
    }

    /// Relabels the ground set, preserving bit order. Used to align two
    /// delta-matroids that differ only in labelling.
    pub fn relabelled<S: Into<String> + Clone>(&self, labels: &[S]) -> Result<DeltaMatroid, DmError> {
        assert_eq!(labels.len(), self.size());
        let new_ground = ElementMap::new(labels.to_vec())?;
        // Bit i of the old ground maps to the bit of labels[i] in the new.
        let mut perm = vec![0usize; self.size()];
        for (i, l) in labels.iter().enumerate() {
            let l: String = l.clone().into();
            perm[i] = new_ground.index(&l).expect("label present");
        }
        let feasible = self
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
        DeltaMatroid::from_masks(new_ground, feasible)
    }
}

impl fmt::Debug for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaMatroid[{}; ", self.ground.labels().join(" "))?;
        let sets: Vec<String> = self
            .feasible
            .iter()
            .map(|&s| format!("{{{}}}", self.ground.format_set(s)))
            .collect();
        write!(f, "{}]", sets.join(" "))
    }
}

/// A delta-matroid whose feasible sets are equicardinal; they are its bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    dm: DeltaMatroid,
}

impl Matroid {
    pub fn try_new(dm: DeltaMatroid) -> Result<Matroid, DmError> {
        let (lo, hi) = dm.min_max_size();
        if lo != hi {
            return Err(DmError::NotAMatroid);
        }
        Ok(Matroid { dm })
    }

    /// The uniform matroid `U_{r,m}` on the given labels: every `r`-subset is
    /// a basis.
    pub fn uniform<S: Into<String>>(rank: usize, labels: Vec<S>) -> Result<Matroid, DmError> {
        let ground = ElementMap::new(labels)?;
        let n = ground.len();
        assert!(rank <= n, "rank exceeds ground size");
        let feasible: Vec<Subset> = (0..=ground.full())
            .filter(|m| m.count_ones() as usize == rank)
            .collect();
        Ok(Matroid {
            dm: DeltaMatroid::from_masks(ground, feasible)?,
        })
    }

    pub fn as_dm(&self) -> &DeltaMatroid {
        &self.dm
    }

    pub fn into_dm(self) -> DeltaMatroid {
        self.dm
    }

    pub fn bases(&self) -> &[Subset] {
        self.dm.feasible()
    }

    pub fn ground(&self) -> &ElementMap {
        self.dm.ground()
    }

    /// Matroid rank: `r(A) = max over bases B of |A ∩ B|`.
    pub fn rank(&self, a: Subset) -> usize {
        self.bases()
            .iter()
            .map(|&b| (a & b).count_ones())
            .max()
            .expect("non-empty basis family") as usize
    }

    /// Rank of the whole matroid (the common basis size).
    pub fn rank_full(&self) -> usize {
        self.bases()[0].count_ones() as usize
    }

    /// Nullity `n(A) = |A| - r(A)`.
    pub fn nullity(&self, a: Subset) -> usize {
        a.count_ones() as usize - self.rank(a)
    }

    /// The dual matroid: bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        Matroid {
            dm: self.dm.dual(),
        }
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid{:?}", self.dm)
    }
}
