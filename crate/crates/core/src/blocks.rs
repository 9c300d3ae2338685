//! Block systems of transitive groups via minimal-block union–find closure.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::partition::Partition;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the merged pair of roots, or `None` if already joined.
    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        Some((lo, hi))
    }
}

/// The finest `G`-invariant partition having all of `seed` inside one block.
pub fn minimal_block_system(group: &PermGroup, seed: &[usize]) -> Result<Partition> {
    let n = group.degree();
    for &p in seed {
        group.check_point(p)?;
    }
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    if let Some((&first, rest)) = seed.split_first() {
        for &p in rest {
            if let Some(pair) = uf.union(first, p) {
                queue.push(pair);
            }
        }
    }
    while let Some((a, b)) = queue.pop() {
        for g in group.generators() {
            if let Some(pair) = uf.union(g.apply(a), g.apply(b)) {
                queue.push(pair);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|p| uf.find(p)).collect();
    Ok(Partition::new(Partition::from_labels(&labels).blocks().to_vec()).expect("labels"))
}

/// One `G`-invariant partition, with the block that contains the chosen point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    pub partition: Partition,
    pub block: Vec<usize>,
    pub trivial: bool,
}

/// All block systems of a transitive group, finest first (by block size, then lexicographically).
///
/// Blocks containing `omega` correspond to subgroups `G_ω ≤ K ≤ G`; they are closed under
/// joins, so they are generated from the atoms `⟨ω, α⟩` by repeated joining.
pub fn block_systems(group: &PermGroup, omega: usize, limits: &Limits) -> Result<Vec<BlockSystem>> {
    group.check_point(omega)?;
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut systems: Vec<Partition> = Vec::new();
    let mut record = |p: Partition, found: &mut BTreeSet<Vec<usize>>| -> Result<bool> {
        let block = p
            .block_containing(omega)
            .expect("partition covers omega")
            .to_vec();
        if found.insert(block) {
            if found.len() > limits.subgroup_candidates {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} intermediate subgroups",
                    limits.subgroup_candidates
                )));
            }
            systems.push(p);
            return Ok(true);
        }
        Ok(false)
    };

    record(Partition::singletons(n), &mut found)?;
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    for alpha in 0..n {
        if alpha == omega {
            continue;
        }
        let p = minimal_block_system(group, &[omega, alpha])?;
        let block = p.block_containing(omega).unwrap().to_vec();
        if !atoms.contains(&block) {
            atoms.push(block);
        }
        record(p, &mut found)?;
    }
    let mut frontier: Vec<Vec<usize>> = found.iter().filter(|b| b.len() > 1).cloned().collect();
    while let Some(block) = frontier.pop() {
        for atom in &atoms {
            if atom.iter().all(|x| block.binary_search(x).is_ok()) {
                continue;
            }
            let mut seed = block.clone();
            seed.extend_from_slice(atom);
            let p = minimal_block_system(group, &seed)?;
            let joined = p.block_containing(omega).unwrap().to_vec();
            if record(p, &mut found)? {
                frontier.push(joined);
            }
        }
    }

    let mut out: Vec<BlockSystem> = systems
        .into_iter()
        .map(|partition| {
            let block = partition.block_containing(omega).unwrap().to_vec();
            let trivial = block.len() == 1 || block.len() == n;
            BlockSystem {
                partition,
                block,
                trivial,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.block.len(), &a.partition).cmp(&(b.block.len(), &b.partition)));
    Ok(out)
}

/// `K = ⟨G_ω, t_α : α ∈ block⟩`, the stabiliser of a block containing `omega`.
pub fn block_stabiliser(
    group: &PermGroup,
    point_stabiliser: &PermGroup,
    omega: usize,
    block: &[usize],
) -> Result<PermGroup> {
    let rebased = group.with_base_prefix(&[omega]);
    let mut k = point_stabiliser.clone();
    let target = point_stabiliser.order() * block.len() as u128;
    for &alpha in block {
        if k.order() == target {
            break;
        }
        let t = rebased
            .first_level_representative(alpha)
            .ok_or(Error::NotTransitive)?;
        if !k.contains(&t) {
            k = k.extended(&[t])?;
        }
    }
    if k.order() != target {
        return Err(Error::InvalidInput(format!(
            "{block:?} is not a block containing {omega}"
        )));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn klein() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn primitive_group_has_only_trivial_systems() {
        let s = block_systems(&PermGroup::symmetric(4), 0, &Limits::default()).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|b| b.trivial));
    }

    #[test]
    fn klein_group_has_three_pair_systems() {
        let s = block_systems(&klein(), 0, &Limits::default()).unwrap();
        assert_eq!(s.len(), 5);
        let pairs: Vec<_> = s.iter().filter(|b| !b.trivial).collect();
        assert_eq!(pairs.len(), 3);
        assert!(pairs
            .iter()
            .all(|b| b.partition.uniform_block_size() == Some(2)));
    }

    #[test]
    fn intransitive_is_rejected() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        assert_eq!(
            block_systems(&g, 0, &Limits::default()).unwrap_err(),
            Error::NotTransitive
        );
    }

    #[test]
    fn block_stabiliser_orders() {
        let g = klein();
        let stab = g.point_stabiliser(0).unwrap();
        let k = block_stabiliser(&g, &stab, 0, &[0, 1]).unwrap();
        assert_eq!(k.order(), 2);
        assert!(k.contains(&Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()));
    }
}
