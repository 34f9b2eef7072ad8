//! Disjoint-set forest with union by rank and path compression.
//!
//! Each root carries the size of its set and the internal difference of the
//! region, i.e. the heaviest edge that was used to build it.

use crate::graph::Weight;

#[derive(Debug, Clone)]
pub struct UnionFindForest {
    parent: Vec<u32>,
    rank: Vec<u8>,
    size: Vec<u32>,
    internal: Vec<Weight>,
    sets: usize,
}

impl UnionFindForest {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            size: vec![1; n],
            internal: vec![0; n],
            sets: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of disjoint sets.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Root lookup without compression.
    pub fn find_immutable(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    /// Size of the set containing `x`.
    pub fn size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r] as usize
    }

    /// Internal difference of the set containing `x`.
    pub fn internal_difference(&mut self, x: usize) -> Weight {
        let r = self.find(x);
        self.internal[r]
    }

    /// Merges the sets of `x` and `y` through an edge of weight `weight` and
    /// returns the new root, or `None` if they were already joined.
    pub fn union(&mut self, x: usize, y: usize, weight: Weight) -> Option<usize> {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return None;
        }
        let (root, child) = match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => (ry, rx),
            std::cmp::Ordering::Greater => (rx, ry),
            std::cmp::Ordering::Equal => {
                self.rank[rx] += 1;
                (rx, ry)
            }
        };
        self.parent[child] = root as u32;
        self.size[root] += self.size[child];
        self.internal[root] = self.internal[root].max(self.internal[child]).max(weight);
        self.sets -= 1;
        Some(root)
    }
}
