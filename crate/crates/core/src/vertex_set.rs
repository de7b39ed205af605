use std::fmt;

/// A finite set of vertex labels in sorted order without duplicates.
///
/// Labels are small non-negative integers. The same type is used for vertex
/// sets of complexes and graphs, for faces, and for the subsets appearing in
/// enumeration results.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary labels; sorts and deduplicates.
    pub fn from_labels(labels: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = labels.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn max_label(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        VertexSet::from_labels(v)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_subset(&self, other: &VertexSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn insert(&self, label: u32) -> VertexSet {
        if self.contains(label) {
            self.clone()
        } else {
            let mut v = self.0.clone();
            let pos = v.partition_point(|&x| x < label);
            v.insert(pos, label);
            VertexSet(v)
        }
    }

    pub fn remove(&self, label: u32) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&x| x != label).collect())
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet::from_labels(iter)
    }
}

impl From<Vec<u32>> for VertexSet {
    fn from(v: Vec<u32>) -> Self {
        VertexSet::from_labels(v)
    }
}

impl<const N: usize> From<[u32; N]> for VertexSet {
    fn from(v: [u32; N]) -> Self {
        VertexSet::from_labels(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_dedups() {
        let s = VertexSet::from_labels([3, 1, 2, 1]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn subset_and_ops() {
        let a = VertexSet::from([1, 3]);
        let b = VertexSet::from([1, 2, 3]);
        assert!(a.is_subset(&b));
        assert!(a.is_proper_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.union(&b), b);
        assert_eq!(a.intersection(&b), a);
        assert_eq!(b.difference(&a), VertexSet::from([2]));
        assert!(VertexSet::new().is_subset(&a));
    }

    #[test]
    fn display_format() {
        assert_eq!(VertexSet::from([2, 1]).to_string(), "{1,2}");
        assert_eq!(VertexSet::new().to_string(), "{}");
    }
}
