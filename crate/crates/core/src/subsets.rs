//! Subset enumeration over machine-word bitmasks.
//!
//! Two backends feed the counting kernels: a plain sweep of all `2^n` masks in
//! increasing numeric order, and a revolving-door generator that visits the
//! `C(n,k)` masks of one cardinality, changing a single element per step.

/// Counts connected components of the subgraph induced by `mask`.
///
/// `adj` holds one adjacency word per compact vertex index. Union-find over a
/// stack array; only indices present in the mask are touched.
pub fn component_count(adj: &[u64], mask: u64) -> u32 {
    let mut parent = [0u8; 64];
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        parent[v] = v as u8;
    }
    let mut components = mask.count_ones();
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        // neighbors inside the subset with smaller index
        let mut nb = adj[v] & mask & ((1u64 << v) - 1);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let ru = find(&mut parent, u);
            let rv = find(&mut parent, v);
            if ru != rv {
                parent[ru as usize] = rv;
                components -= 1;
            }
        }
    }
    components
}

#[inline]
fn find(parent: &mut [u8; 64], mut x: usize) -> u8 {
    while parent[x] != x as u8 {
        parent[x] = parent[parent[x] as usize];
        x = parent[x] as usize;
    }
    x as u8
}

/// Revolving-door enumeration of all k-element subsets of `{0,..,n-1}`.
///
/// Successive subsets differ by exactly one element swapped in and one out
/// (except between cardinality-0/1 edge cases where the sequence is trivial).
/// Yields each subset as a bitmask; order is the classic Gray-code order for
/// combinations, not numeric.
pub struct RevolvingDoor {
    /// c[1..=t] is the combination in increasing order; c[t+1], c[t+2] are sentinels.
    c: Vec<usize>,
    t: usize,
    state: State,
}

enum State {
    Fresh,
    Running,
    Done,
}

impl RevolvingDoor {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "mask enumeration requires n <= 63");
        // c[0] unused, c[1..=k] = 0..k, then the two sentinels
        let c: Vec<usize> = std::iter::once(0)
            .chain(0..k)
            .chain([n, 0])
            .collect();
        RevolvingDoor {
            c,
            t: k,
            state: if k <= n { State::Fresh } else { State::Done },
        }
    }

    fn mask(&self) -> u64 {
        let mut m = 0u64;
        for j in 1..=self.t {
            m |= 1u64 << self.c[j];
        }
        m
    }

    /// Transition R3–R5: returns false when the sequence is exhausted.
    fn advance(&mut self) -> bool {
        let t = self.t;
        let c = &mut self.c;
        if t == 0 {
            return false;
        }
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return true;
            }
            if t == 1 {
                return false;
            }
        } else if c[1] > 0 {
            c[1] -= 1;
            return true;
        }
        let mut j = 2;
        // alternate: try to decrease c[j], then to increase it
        loop {
            if t % 2 == 1 || j > 2 {
                // decrease branch entered with c[j-1] == j-2
                if c[j] >= j {
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return true;
                }
                j += 1;
            }
            // increase branch
            if c[j] + 1 < c[j + 1] {
                c[j - 1] = c[j];
                c[j] += 1;
                return true;
            }
            j += 1;
            if j > t {
                return false;
            }
        }
    }
}

impl Iterator for RevolvingDoor {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Running;
                Some(self.mask())
            }
            State::Running => {
                if self.advance() {
                    Some(self.mask())
                } else {
                    self.state = State::Done;
                    None
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn binom_usize(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn revolving_door_visits_every_combination_once() {
        for n in 0..=9 {
            for k in 0..=n {
                let masks: Vec<u64> = RevolvingDoor::new(n, k).collect();
                assert_eq!(masks.len(), binom_usize(n, k), "n={n} k={k}");
                let set: HashSet<u64> = masks.iter().copied().collect();
                assert_eq!(set.len(), masks.len());
                for m in &masks {
                    assert_eq!(m.count_ones() as usize, k);
                    assert_eq!(m >> n, 0);
                }
            }
        }
    }

    #[test]
    fn revolving_door_swaps_one_element_per_step() {
        for n in 1..=9 {
            for k in 1..n {
                let masks: Vec<u64> = RevolvingDoor::new(n, k).collect();
                for w in masks.windows(2) {
                    assert_eq!(
                        (w[0] ^ w[1]).count_ones(),
                        2,
                        "n={n} k={k}: {:b} -> {:b}",
                        w[0],
                        w[1]
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_cardinalities() {
        assert_eq!(RevolvingDoor::new(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(RevolvingDoor::new(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(RevolvingDoor::new(0, 0).collect::<Vec<_>>(), vec![0]);
        assert!(RevolvingDoor::new(2, 3).next().is_none());
    }

    #[test]
    fn component_count_on_path() {
        // path 0-1-2 as adjacency words
        let adj = vec![0b010, 0b101, 0b010];
        assert_eq!(component_count(&adj, 0b111), 1);
        assert_eq!(component_count(&adj, 0b101), 2);
        assert_eq!(component_count(&adj, 0b011), 1);
        assert_eq!(component_count(&adj, 0), 0);
        assert_eq!(component_count(&adj, 0b100), 1);
    }
}
