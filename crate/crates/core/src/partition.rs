//! Canonical set partitions of `0..n`.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

/// A partition of `0..len` into blocks.
///
/// Blocks are sorted internally, and ordered by their minimal element, which
/// doubles as the block's canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds the partition generated by the given unions.
    pub fn from_pairs(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut uf = UnionFind::<usize>::new(len);
        for (a, b) in pairs {
            uf.union(a, b);
        }
        Self::from_union_find(len, &mut uf)
    }

    pub(crate) fn from_union_find(len: usize, uf: &mut UnionFind<usize>) -> Self {
        let labels: Vec<usize> = (0..len).map(|i| uf.find_mut(i)).collect();
        Self::from_labels(&labels)
    }

    /// Groups indices with equal labels.
    pub fn from_labels<L: Eq + std::hash::Hash + Clone>(labels: &[L]) -> Self {
        use std::collections::HashMap;
        let mut slot: HashMap<L, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        // Scanning in index order makes each block's first element its minimum,
        // and blocks come out ordered by that minimum.
        for (i, label) in labels.iter().enumerate() {
            let b = *slot.entry(label.clone()).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
        }
        let mut block_of = vec![0; labels.len()];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                block_of[i] = b;
            }
        }
        Partition { blocks, block_of }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Minimal element of each block, in block order.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Number of elements partitioned.
    pub fn universe(&self) -> usize {
        self.block_of.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_are_canonical() {
        let p = Partition::from_pairs(6, [(5, 1), (3, 4), (4, 0)]);
        assert_eq!(p.blocks(), &[vec![0, 3, 4], vec![1, 5], vec![2]]);
        assert_eq!(p.representatives(), vec![0, 1, 2]);
        assert_eq!(p.block_of(5), 1);
    }

    #[test]
    fn empty_universe() {
        let p = Partition::from_pairs(0, []);
        assert!(p.is_empty());
        assert_eq!(p.universe(), 0);
    }
}
