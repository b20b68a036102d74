//! Ground-set bookkeeping: labels, bit indices, and subset masks.

use std::fmt;

use thiserror::Error;

/// Hard cap on ground-set size. Subsets are stored as `u32` bitmasks and most
/// operations enumerate all `2^n` subsets.
pub const MAX_ELEMENTS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElementError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("ground set has {0} elements, limit is {MAX_ELEMENTS}")]
    GroundTooLarge(usize),
}

/// A subset of a ground set, as a bitmask relative to an [`ElementMap`].
pub type Subset = u32;

/// Bijection between user-facing element labels and bit indices.
///
/// Labels are held sorted, so equal ground sets produce identical masks and
/// serialized forms are canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementMap {
    labels: Vec<String>,
}

impl ElementMap {
    /// Builds a map from labels, sorting them. Rejects duplicates and
    /// oversized ground sets.
    pub fn new<I, S>(labels: I) -> Result<Self, ElementError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        if labels.len() > MAX_ELEMENTS {
            return Err(ElementError::GroundTooLarge(labels.len()));
        }
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(ElementError::DuplicateElement(w[0].clone()));
            }
        }
        Ok(ElementMap { labels })
    }

    pub fn empty() -> Self {
        ElementMap { labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Mask with every element set.
    pub fn full(&self) -> Subset {
        if self.labels.is_empty() {
            0
        } else {
            (1u32 << self.labels.len()) - 1
        }
    }

    /// Translates labels into a subset mask.
    pub fn subset<'a, I>(&self, labels: I) -> Result<Subset, ElementError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut mask = 0;
        for l in labels {
            let i = self
                .index(l)
                .ok_or_else(|| ElementError::UnknownElement(l.to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    /// Labels of a subset mask, in sorted order.
    pub fn label_set(&self, mask: Subset) -> Vec<&str> {
        bits(mask).map(|i| self.labels[i].as_str()).collect()
    }

    /// Space-separated labels of a mask; empty string for the empty set.
    pub fn format_set(&self, mask: Subset) -> String {
        self.label_set(mask).join(" ")
    }

    /// Removes the elements in `mask`, returning the new map and, for each
    /// surviving old index, its new index.
    pub fn without(&self, mask: Subset) -> (ElementMap, Vec<Option<usize>>) {
        let mut labels = Vec::new();
        let mut remap = vec![None; self.labels.len()];
        for (i, l) in self.labels.iter().enumerate() {
            if mask & (1 << i) == 0 {
                remap[i] = Some(labels.len());
                labels.push(l.clone());
            }
        }
        (ElementMap { labels }, remap)
    }
}

impl fmt::Debug for ElementMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementMap({})", self.labels.join(" "))
    }
}

/// Iterates over the set bit indices of a mask.
pub fn bits(mask: Subset) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// All subsets of `mask`, in increasing mask order. Includes the empty set
/// and `mask` itself.
pub fn subsets_of(mask: Subset) -> impl Iterator<Item = Subset> {
    let mut cur: Option<Subset> = Some(0);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == mask {
            None
        } else {
            Some(((s | !mask).wrapping_add(1)) & mask)
        };
        Some(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_sorted_and_indexed() {
        let m = ElementMap::new(["b", "a", "c"]).unwrap();
        assert_eq!(m.labels(), &["a", "b", "c"]);
        assert_eq!(m.index("b"), Some(1));
        assert_eq!(m.index("z"), None);
        assert_eq!(m.subset(["a", "c"]).unwrap(), 0b101);
        assert_eq!(m.format_set(0b101), "a c");
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            ElementMap::new(["a", "a"]),
            Err(ElementError::DuplicateElement("a".into()))
        );
    }

    #[test]
    fn oversized_ground_rejected() {
        let labels: Vec<String> = (0..25).map(|i| format!("e{i:02}")).collect();
        assert!(matches!(
            ElementMap::new(labels),
            Err(ElementError::GroundTooLarge(25))
        ));
    }

    #[test]
    fn subsets_of_enumerates_all() {
        let subs: Vec<Subset> = subsets_of(0b101).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
        assert_eq!(subsets_of(0).count(), 1);
    }

    #[test]
    fn without_remaps_indices() {
        let m = ElementMap::new(["a", "b", "c"]).unwrap();
        let (m2, remap) = m.without(0b010);
        assert_eq!(m2.labels(), &["a", "c"]);
        assert_eq!(remap, vec![Some(0), None, Some(1)]);
    }
}
