//! Backtrack searches over a stabiliser chain: setwise stabilisers, intersections and
//! coset intersections.
//!
//! Elements are enumerated as products `u_k ⋯ u_1` of transversal elements, so the
//! images of the first `l` base points are fixed after `l` choices and a search node
//! can be rejected from those images alone.

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;

enum Mode {
    Collect,
    First,
}

struct Backtrack<'a, P, L> {
    group: &'a PermGroup,
    transversals: Vec<Vec<Permutation>>,
    prune: P,
    leaf: L,
    nodes: u64,
    budget: u64,
    mode: Mode,
    found: PermGroup,
    first: Option<Permutation>,
}

impl<P, L> Backtrack<'_, P, L>
where
    P: FnMut(usize, &Permutation) -> bool,
    L: FnMut(&Permutation) -> bool,
{
    /// Returns `false` once the search should stop.
    fn dfs(&mut self, depth: usize, partial: &Permutation) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "backtrack search visited more than {} nodes",
                self.budget
            )));
        }
        if depth == self.transversals.len() {
            if (self.leaf)(partial) {
                match self.mode {
                    Mode::First => {
                        self.first = Some(partial.clone());
                        return Ok(false);
                    }
                    Mode::Collect => {
                        if !self.found.contains(partial) {
                            self.found = self.found.extended(std::slice::from_ref(partial))?;
                        }
                    }
                }
            }
            return Ok(true);
        }
        for k in 0..self.transversals[depth].len() {
            let next = &self.transversals[depth][k] * partial;
            if (self.prune)(depth, &next) && !self.dfs(depth + 1, &next)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn run<P, L>(
    group: &PermGroup,
    prune: P,
    leaf: L,
    mode: Mode,
    limits: &Limits,
) -> Result<(PermGroup, Option<Permutation>)>
where
    P: FnMut(usize, &Permutation) -> bool,
    L: FnMut(&Permutation) -> bool,
{
    let transversals = group
        .bsgs
        .levels
        .iter()
        .map(|l| l.orbit.iter().map(|&p| l.representative(p)).collect())
        .collect();
    let mut bt = Backtrack {
        group,
        transversals,
        prune,
        leaf,
        nodes: 0,
        budget: limits.search_nodes,
        mode,
        found: PermGroup::trivial(group.degree()),
        first: None,
    };
    let id = bt.group.identity();
    bt.dfs(0, &id)?;
    Ok((bt.found, bt.first))
}

/// True when the images of base points `0..=depth` under `p` agree with some element of `chain`.
fn consistent_prefix(chain: &Bsgs, p: &Permutation, depth: usize) -> bool {
    let mut h = p.clone();
    for level in chain.levels.iter().take(depth + 1) {
        let image = h.apply(level.base_point);
        if !level.in_orbit(image) {
            return false;
        }
        h = level.strip(h, image);
    }
    true
}

/// `{x ∈ G | set^x = set}`.
pub fn setwise_stabiliser(group: &PermGroup, set: &[usize], limits: &Limits) -> Result<PermGroup> {
    if set.is_empty() {
        return Err(Error::InvalidInput("empty point set".into()));
    }
    for &p in set {
        group.check_point(p)?;
    }
    let mut points = set.to_vec();
    points.sort_unstable();
    points.dedup();
    if points.len() == group.degree() {
        return Ok(group.clone());
    }
    let mut member = vec![false; group.degree()];
    for &p in &points {
        member[p] = true;
    }
    let rebased = group.with_base_prefix(&points);
    let base = rebased.base();
    let (found, _) = run(
        &rebased,
        |depth, p| member[base[depth]] == member[p.apply(base[depth])],
        |p| points.iter().all(|&x| member[p.apply(x)]),
        Mode::Collect,
        limits,
    )?;
    debug_assert!(found
        .generators()
        .iter()
        .all(|g| g.image_of_set(&points) == points));
    Ok(found)
}

/// `A ∩ B`, searching over the smaller of the two.
pub fn intersect(a: &PermGroup, b: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    a.check_degree(b.degree())?;
    if a.is_subgroup_of(b) {
        return Ok(a.clone());
    }
    if b.is_subgroup_of(a) {
        return Ok(b.clone());
    }
    let (small, large) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    let other = large.with_base_prefix(&small.base());
    let (found, _) = run(
        small,
        |depth, p| consistent_prefix(&other.bsgs, p, depth),
        |p| other.contains(p),
        Mode::Collect,
        limits,
    )?;
    Ok(found)
}

/// Some `h ∈ H` with `h·c ∈ K`, if any.
fn element_in_h_with_hc_in_k(
    h_group: &PermGroup,
    k_group: &PermGroup,
    c: &Permutation,
    limits: &Limits,
) -> Result<Option<Permutation>> {
    let k = k_group.with_base_prefix(&h_group.base());
    let (_, first) = run(
        h_group,
        |depth, p| consistent_prefix(&k.bsgs, &(p * c), depth),
        |p| k.contains(&(p * c)),
        Mode::First,
        limits,
    )?;
    Ok(first)
}

/// A right coset `K·x`.
#[derive(Clone, Debug)]
pub struct Coset {
    pub subgroup: PermGroup,
    pub representative: Permutation,
}

impl Coset {
    pub fn new(subgroup: PermGroup, representative: Permutation) -> Result<Self> {
        subgroup.check_degree(representative.degree())?;
        Ok(Coset {
            subgroup,
            representative,
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.subgroup.degree()
            && self
                .subgroup
                .contains(&(p * &self.representative.inverse()))
    }

    pub fn elements(&self) -> Vec<Permutation> {
        self.subgroup
            .elements()
            .into_iter()
            .map(|k| &k * &self.representative)
            .collect()
    }
}

impl PartialEq for Coset {
    fn eq(&self, other: &Self) -> bool {
        self.subgroup.same_group(&other.subgroup) && self.contains(&other.representative)
    }
}

/// `⋂ K_i x_i`: either empty or a coset of `⋂ K_i`.
pub fn coset_intersection(
    terms: &[(PermGroup, Permutation)],
    limits: &Limits,
) -> Result<Option<Coset>> {
    let Some((first_group, first_rep)) = terms.first() else {
        return Err(Error::InvalidInput("no cosets to intersect".into()));
    };
    let mut current = Coset::new(first_group.clone(), first_rep.clone())?;
    for (k, x) in &terms[1..] {
        current.subgroup.check_degree(k.degree())?;
        current.subgroup.check_degree(x.degree())?;
        // z = h·y ∈ Hy ∩ Kx  ⇔  h·(y x⁻¹) ∈ K
        let c = &current.representative * &x.inverse();
        let Some(h) = element_in_h_with_hc_in_k(&current.subgroup, k, &c, limits)? else {
            return Ok(None);
        };
        let z = &h * &current.representative;
        let subgroup = intersect(&current.subgroup, k, limits)?;
        current = Coset {
            subgroup,
            representative: z,
        };
    }
    Ok(Some(current))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn group(n: usize, gens: &[&[&[usize]]]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|c| p(n, c)).collect()).unwrap()
    }

    #[test]
    fn setwise_stabiliser_examples() {
        let lim = Limits::default();
        let s4 = PermGroup::symmetric(4);
        assert_eq!(setwise_stabiliser(&s4, &[0, 1], &lim).unwrap().order(), 4);
        assert_eq!(
            setwise_stabiliser(&s4, &[0, 1, 2, 3], &lim)
                .unwrap()
                .order(),
            24
        );
        let a6 = PermGroup::alternating(6);
        let st = setwise_stabiliser(&a6, &[0, 1, 2], &lim).unwrap();
        let brute = a6
            .elements()
            .iter()
            .filter(|g| g.image_of_set(&[0, 1, 2]) == vec![0, 1, 2])
            .count();
        assert_eq!(brute, 18);
        assert_eq!(st.order(), 18);
    }

    #[test]
    fn intersection_examples() {
        let lim = Limits::default();
        let s4 = PermGroup::symmetric(4);
        let c3 = group(4, &[&[&[0, 1, 2]]]);
        assert!(intersect(&s4, &c3, &lim).unwrap().same_group(&c3));
        assert!(intersect(&s4, &s4, &lim).unwrap().same_group(&s4));
        // point-stabiliser A5 and the transitive A5 (PSL(2,5) on the projective line)
        let a = group(6, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]);
        let b = group(6, &[&[&[0, 1, 2, 3, 4]], &[&[0, 5], &[1, 4]]]);
        assert_eq!(a.order(), 60);
        assert_eq!(b.order(), 60);
        assert_eq!(intersect(&a, &b, &lim).unwrap().order(), 10);
    }

    #[test]
    fn coset_intersection_examples() {
        let lim = Limits::default();
        let k1 = group(4, &[&[&[0, 1], &[2, 3]]]);
        let k2 = group(4, &[&[&[0, 2], &[1, 3]]]);
        let x2 = p(4, &[&[0, 1], &[2, 3]]);
        let c = coset_intersection(&[(k1.clone(), p(4, &[])), (k2, x2.clone())], &lim)
            .unwrap()
            .unwrap();
        assert!(c.subgroup.is_trivial());
        assert_eq!(c.representative, x2);

        let single = coset_intersection(&[(k1.clone(), x2.clone())], &lim).unwrap();
        assert_eq!(single, Some(Coset::new(k1, x2).unwrap()));

        let t = group(4, &[&[&[0, 1]]]);
        let empty =
            coset_intersection(&[(t.clone(), p(4, &[])), (t, p(4, &[&[0, 2]]))], &lim).unwrap();
        assert!(empty.is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Limits {
            search_nodes: 3,
            ..Limits::default()
        };
        let a6 = PermGroup::alternating(6);
        assert!(matches!(
            setwise_stabiliser(&a6, &[0, 1, 2], &tiny),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
