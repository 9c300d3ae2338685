use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A set partition of `{0, …, n-1}` in canonical form: points ascending inside each
/// block, blocks ordered by their least point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates and canonicalises. The degree is the total number of points.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x >= n || seen[x] {
                    return Err(Error::InvalidInput(format!(
                        "blocks do not partition 0..{n} (point {x})"
                    )));
                }
                seen[x] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { blocks })
    }

    /// Groups points by label; labels are arbitrary.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut slot: std::collections::HashMap<usize, usize> = Default::default();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (p, &l) in labels.iter().enumerate() {
            let i = *slot.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(p);
        }
        Partition { blocks }
    }

    pub fn singletons(degree: usize) -> Self {
        Partition {
            blocks: (0..degree).map(|p| vec![p]).collect(),
        }
    }

    pub fn whole(degree: usize) -> Self {
        Partition {
            blocks: vec![(0..degree).collect()],
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Common block size, if all blocks have the same size.
    pub fn uniform_block_size(&self) -> Option<usize> {
        let s = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == s).then_some(s)
    }

    /// `labels[p]` is the index of the block containing `p`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.degree()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &p in b {
                labels[p] = i;
            }
        }
        labels
    }

    pub fn block_containing(&self, point: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&point).is_ok())
            .map(Vec::as_slice)
    }

    /// The partition `{γ^g : γ ∈ self}`, canonicalised.
    pub fn image(&self, g: &Permutation) -> Partition {
        let blocks = self.blocks.iter().map(|b| g.image_of_set(b)).collect();
        Partition::new(blocks).expect("image of a partition is a partition")
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() <= 1 || self.blocks.iter().all(|b| b.len() == 1)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Partition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        Partition::new(blocks)
    }
}

impl From<Partition> for Vec<Vec<usize>> {
    fn from(p: Partition) -> Self {
        p.blocks
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = Partition::new(vec![vec![3, 2], vec![1, 0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(p.uniform_block_size(), Some(2));
        assert_eq!(p.labels(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn rejects_overlap_and_gaps() {
        assert!(Partition::new(vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(vec![vec![0, 3]]).is_err());
        assert!(Partition::new(vec![vec![0], vec![]]).is_err());
    }

    #[test]
    fn image_under_permutation() {
        let p = Partition::new(vec![vec![0, 2], vec![1, 3]]).unwrap();
        let g = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        assert_eq!(p.image(&g).blocks(), &[vec![0, 3], vec![1, 2]]);
    }
}
