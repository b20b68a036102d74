//! GF(2) representability of delta-matroids.
//!
//! A symmetric binary matrix `C` defines a delta-matroid `D(C)` whose
//! feasible sets are the index sets of non-singular principal submatrices.
//! A delta-matroid is binary when some twist of it is isomorphic (here:
//! equal after the twist, since the ground set is shared) to such a `D(C)`.

pub mod catalog;

pub use catalog::{catalog_entry, catalog_names};

use std::fmt;

use thiserror::Error;

use crate::dm::DeltaMatroid;
use crate::elements::{bits, ElementError, ElementMap, Subset};
use crate::ribbon::{RibbonGraph, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("matrix must be square")]
    NotSquare,
    #[error("interlacement matrices need a one-vertex ribbon graph, this one has {0} vertices")]
    NotOneVertex(usize),
    #[error("ground set has {0} elements; binarity testing supports at most {MAX_BINARY_ELEMENTS}")]
    GroundTooLarge(usize),
    #[error(transparent)]
    Element(#[from] ElementError),
}

/// `is_binary` enumerates all subsets per feasible twist.
pub const MAX_BINARY_ELEMENTS: usize = 12;

/// A symmetric matrix over GF(2), rows stored as bitmasks. The diagonal may
/// be non-zero; over characteristic two that is the honest analogue of
/// skew-symmetry.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    labels: ElementMap,
    rows: Vec<Subset>,
}

impl Gf2Matrix {
    pub fn new(labels: ElementMap, rows: Vec<Subset>) -> Result<Gf2Matrix, RepError> {
        if rows.len() != labels.len() {
            return Err(RepError::NotSquare);
        }
        let m = Gf2Matrix { labels, rows };
        for i in 0..m.rows.len() {
            for j in 0..i {
                if m.entry(i, j) != m.entry(j, i) {
                    return Err(RepError::NonSymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &ElementMap {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i] & (1 << j) != 0
    }

    /// True when the principal submatrix `C[A]` is non-singular over GF(2).
    /// The empty submatrix is non-singular.
    pub fn principal_nonsingular(&self, a: Subset) -> bool {
        let idx: Vec<usize> = bits(a).collect();
        let k = idx.len();
        // Compact the submatrix into the low bits and run elimination.
        let mut rows: Vec<u32> = idx
            .iter()
            .map(|&i| {
                let mut r = 0;
                for (jj, &j) in idx.iter().enumerate() {
                    if self.entry(i, j) {
                        r |= 1 << jj;
                    }
                }
                r
            })
            .collect();
        for col in 0..k {
            let pivot = match (col..k).find(|&r| rows[r] & (1 << col) != 0) {
                Some(p) => p,
                None => return false,
            };
            rows.swap(col, pivot);
            for r in 0..k {
                if r != col && rows[r] & (1 << col) != 0 {
                    rows[r] ^= rows[col];
                }
            }
        }
        true
    }

    /// The delta-matroid `D(C)`: feasible sets are the non-singular
    /// principal index sets. Always contains the empty set.
    pub fn delta_matroid(&self) -> DeltaMatroid {
        let full = self.labels.full();
        let feasible: Vec<Subset> = (0..=full)
            .filter(|&a| self.principal_nonsingular(a))
            .collect();
        DeltaMatroid::from_masks(self.labels.clone(), feasible)
            .expect("the empty set is always feasible")
    }

    /// Text form: dimension line, then one 0/1 row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.size());
        for i in 0..self.size() {
            for j in 0..self.size() {
                out.push(if self.entry(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text form; labels default to `e1..en` in order.
    pub fn parse(text: &str) -> Result<Gf2Matrix, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or("empty input")?
            .trim()
            .parse()
            .map_err(|e| format!("bad dimension: {e}"))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines.next().ok_or_else(|| format!("missing row {}", i + 1))?;
            let line = line.trim();
            if line.len() != n {
                return Err(format!("row {} has {} entries, expected {n}", i + 1, line.len()));
            }
            let mut r: Subset = 0;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '1' => r |= 1 << j,
                    '0' => {}
                    other => return Err(format!("row {}: bad character `{other}`", i + 1)),
                }
            }
            rows.push(r);
        }
        let width = n.to_string().len();
        let labels = ElementMap::new((0..n).map(|i| format!("e{:0width$}", i + 1)))
            .map_err(|e| e.to_string())?;
        Gf2Matrix::new(labels, rows).map_err(|e| e.to_string())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({}x{})", self.size(), self.size())
    }
}

/// The interlacement matrix of a one-vertex ribbon graph: diagonal marks
/// non-orientable loops, off-diagonal entries mark interlaced loop pairs.
pub fn interlacement_matrix(g: &RibbonGraph) -> Result<Gf2Matrix, RepError> {
    if g.vertex_count() != 1 {
        return Err(RepError::NotOneVertex(g.vertex_count()));
    }
    let rotation = &g.vertices[0].rotation;
    let n = g.edge_count();
    let positions = |ei: usize| -> (usize, usize) {
        let e = &g.edges[ei];
        let p = rotation.iter().position(|&h| h == e.a).expect("half-edge present");
        let q = rotation.iter().position(|&h| h == e.b).expect("half-edge present");
        (p.min(q), p.max(q))
    };
    let mut rows = vec![0u32; n];
    for i in 0..n {
        if g.edges[i].sign == Sign::Minus {
            rows[i] |= 1 << i;
        }
        let (p1, p2) = positions(i);
        for j in 0..i {
            let (q1, q2) = positions(j);
            let interlaced = (p1 < q1 && q1 < p2 && p2 < q2) || (q1 < p1 && p1 < q2 && q2 < p2);
            if interlaced {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    let labels = ElementMap::new(g.edge_labels().map(str::to_string))?;
    // Rows were indexed by edge order, which is already label order.
    Ok(Gf2Matrix::new(labels, rows).expect("symmetric by construction"))
}

/// A binary representation witness: the twist `F` and the matrix `C` with
/// `D * F = D(C)`.
pub struct BinaryWitness {
    pub twist: Subset,
    pub matrix: Gf2Matrix,
}

/// Tests binarity: for each feasible `F`, twist so the empty set is
/// feasible, build the unique candidate matrix from the feasible sets of
/// size at most two, and accept when `D(C)` reproduces the twist.
///
/// The diagonal is `c_ee = [{e} feasible]`; the off-diagonal entry comes
/// from `det C[{e,f}] = c_ee c_ff + c_ef` over GF(2), so
/// `c_ef = [{e,f} feasible] XOR (c_ee AND c_ff)`.
pub fn binary_witness(d: &DeltaMatroid) -> Result<Option<BinaryWitness>, RepError> {
    let n = d.size();
    if n > MAX_BINARY_ELEMENTS {
        return Err(RepError::GroundTooLarge(n));
    }
    for &f in d.feasible() {
        let twisted = d.twist(f);
        debug_assert!(twisted.is_feasible(0));
        let mut rows = vec![0u32; n];
        for e in 0..n {
            if twisted.is_feasible(1 << e) {
                rows[e] |= 1 << e;
            }
        }
        for e in 0..n {
            for g in 0..e {
                let pair = twisted.is_feasible((1 << e) | (1 << g));
                let diag = rows[e] & (1 << e) != 0 && rows[g] & (1 << g) != 0;
                if pair != diag {
                    rows[e] |= 1 << g;
                    rows[g] |= 1 << e;
                }
            }
        }
        let c = Gf2Matrix::new(d.ground().clone(), rows).expect("symmetric by construction");
        if c.delta_matroid() == twisted {
            return Ok(Some(BinaryWitness { twist: f, matrix: c }));
        }
    }
    Ok(None)
}

pub fn is_binary(d: &DeltaMatroid) -> Result<bool, RepError> {
    Ok(binary_witness(d)?.is_some())
}

#[cfg(test)]
mod tests;
