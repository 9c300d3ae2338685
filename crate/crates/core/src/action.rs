//! Right-coset actions `G → Sym(H\G)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;

/// The action of a group on the right cosets of a subgroup. Coset 0 is `H` itself.
#[derive(Clone, Debug)]
pub struct CosetAction {
    subgroup: PermGroup,
    representatives: Vec<Permutation>,
    orbit_label: Vec<u32>,
    buckets: HashMap<Vec<u32>, Vec<usize>>,
    image: PermGroup,
}

impl CosetAction {
    /// Enumerates the cosets of `subgroup` in `group` breadth-first from `H` under the
    /// generators of `group`.
    pub fn new(group: &PermGroup, subgroup: &PermGroup, limits: &Limits) -> Result<Self> {
        group.check_degree(subgroup.degree())?;
        if !subgroup.is_subgroup_of(group) {
            return Err(Error::NotSubgroup("coset action needs H ≤ G".into()));
        }
        let index = group.order() / subgroup.order();
        if index > limits.max_points as u128 {
            return Err(Error::BudgetExceeded(format!(
                "coset action on {index} points exceeds the {} point cap",
                limits.max_points
            )));
        }
        let mut orbit_label = vec![0u32; group.degree()];
        for (i, orb) in subgroup.orbits().iter().enumerate() {
            for &p in orb {
                orbit_label[p] = i as u32;
            }
        }
        let mut action = CosetAction {
            subgroup: subgroup.clone(),
            representatives: Vec::new(),
            orbit_label,
            buckets: HashMap::new(),
            image: PermGroup::trivial(1),
        };
        action.insert(group.identity());
        let mut head = 0;
        while head < action.representatives.len() {
            let rep = action.representatives[head].clone();
            head += 1;
            for s in group.generators() {
                let y = &rep * s;
                if action.locate(&y).is_none() {
                    action.insert(y);
                }
            }
        }
        debug_assert_eq!(action.representatives.len() as u128, index);
        let gens = group
            .generators()
            .iter()
            .map(|g| action.act(g))
            .collect::<Result<Vec<_>>>()?;
        action.image = PermGroup::new(action.degree(), gens)?;
        Ok(action)
    }

    /// Invariant of the coset `Hx`: the orbit of `H` containing `p^(x⁻¹)`, for every `p`.
    fn key(&self, x: &Permutation) -> Vec<u32> {
        let inv = x.inverse();
        (0..x.degree())
            .map(|p| self.orbit_label[inv.apply(p)])
            .collect()
    }

    fn insert(&mut self, x: Permutation) {
        let idx = self.representatives.len();
        self.buckets.entry(self.key(&x)).or_default().push(idx);
        self.representatives.push(x);
    }

    /// Index of the coset `Hx`.
    pub fn locate(&self, x: &Permutation) -> Option<usize> {
        let bucket = self.buckets.get(&self.key(x))?;
        bucket.iter().copied().find(|&j| {
            self.subgroup
                .contains(&(x * &self.representatives[j].inverse()))
        })
    }

    pub fn degree(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// The permutation induced by `x` on the cosets.
    pub fn act(&self, x: &Permutation) -> Result<Permutation> {
        let images = self
            .representatives
            .iter()
            .map(|r| {
                self.locate(&(r * x))
                    .ok_or_else(|| Error::NotSubgroup("element outside the acting group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    /// The image of the whole group.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    /// The image of a subgroup of the acting group.
    pub fn image_of(&self, subgroup: &PermGroup) -> Result<PermGroup> {
        let gens = subgroup
            .generators()
            .iter()
            .map(|g| self.act(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree(), gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_on_cosets_of_s3_is_natural() {
        let s4 = PermGroup::symmetric(4);
        let s3 = s4.point_stabiliser(3).unwrap();
        let act = CosetAction::new(&s4, &s3, &Limits::default()).unwrap();
        assert_eq!(act.degree(), 4);
        assert_eq!(act.image().order(), 24);
        assert!(act.image().is_transitive());
        assert_eq!(act.image().point_stabiliser(0).unwrap().order(), 6);
        assert_eq!(act.image_of(&s3).unwrap().orbit(0).unwrap(), vec![0]);
    }

    #[test]
    fn point_cap_is_enforced() {
        let s5 = PermGroup::symmetric(5);
        let lim = Limits {
            max_points: 10,
            ..Limits::default()
        };
        assert!(matches!(
            CosetAction::new(&s5, &PermGroup::trivial(5), &lim),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
