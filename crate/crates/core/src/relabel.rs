use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An injective map between vertex label sets.
///
/// Validated on construction: no source appears twice and no two sources share
/// a target, so the map is a bijection onto its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    map: BTreeMap<u32, u32>,
}

impl Relabeling {
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut targets = BTreeSet::new();
        for (src, dst) in pairs {
            if let Some(&prev) = map.get(&src) {
                if prev != dst {
                    return Err(Error::BadRelabeling(format!(
                        "source {src} mapped to both {prev} and {dst}"
                    )));
                }
                continue;
            }
            if !targets.insert(dst) {
                return Err(Error::BadRelabeling(format!("target {dst} used twice")));
            }
            map.insert(src, dst);
        }
        Ok(Relabeling { map })
    }

    pub fn identity(domain: &VertexSet) -> Self {
        Relabeling {
            map: domain.iter().map(|v| (v, v)).collect(),
        }
    }

    pub fn apply(&self, label: u32) -> Option<u32> {
        self.map.get(&label).copied()
    }

    /// Maps every label of `set`; fails on the first label without an image.
    pub fn apply_set(&self, set: &VertexSet) -> Result<VertexSet> {
        let mut out = Vec::with_capacity(set.len());
        for v in set.iter() {
            match self.apply(v) {
                Some(w) => out.push(w),
                None => return Err(Error::IncompleteRelabeling { vertex: v }),
            }
        }
        Ok(VertexSet::from_labels(out))
    }

    pub fn domain(&self) -> VertexSet {
        self.map.keys().copied().collect()
    }

    pub fn image(&self) -> VertexSet {
        self.map.values().copied().collect()
    }
}
