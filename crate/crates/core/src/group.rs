use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Resource caps for the searches in this crate. Exceeding any of them is an explicit
/// [`Error::BudgetExceeded`], never a silently truncated answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Nodes visited by one backtrack search.
    pub search_nodes: u64,
    /// Intermediate subgroups (blocks) explored by block-system enumeration.
    pub subgroup_candidates: usize,
    /// Block tuples inspected when validating a decomposition.
    pub product_cap: u64,
    /// Largest group order for algorithms that enumerate elements.
    pub desk_order: u128,
    /// Largest degree for constructed actions (coset actions, wreath products).
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_nodes: 100_000_000,
            subgroup_candidates: 100_000,
            product_cap: 10_000_000,
            desk_order: 1_000_000,
            max_points: 100_000,
        }
    }
}

/// A permutation group given by generators, with its stabiliser chain built on construction.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    pub(crate) bsgs: Bsgs,
}

impl PermGroup {
    /// Builds the group generated by `generators` on `degree` points.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let bsgs = Bsgs::build(degree, &generators, &[], None);
        Ok(PermGroup {
            degree,
            generators,
            bsgs,
        })
    }

    /// Like [`PermGroup::new`] but with a caller-asserted order that lets Schreier–Sims stop early.
    pub(crate) fn with_known_order(
        degree: usize,
        generators: Vec<Permutation>,
        prefix: &[usize],
        order: u128,
    ) -> Self {
        let bsgs = Bsgs::build(degree, &generators, prefix, Some(order));
        debug_assert_eq!(bsgs.order(), order);
        PermGroup {
            degree,
            generators,
            bsgs,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("empty generator list")
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).unwrap());
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
        }
        PermGroup::new(degree, gens).unwrap()
    }

    pub fn alternating(degree: usize) -> Self {
        let gens = (2..degree)
            .map(|i| Permutation::from_cycles(degree, &[&[0, 1, i]]).unwrap())
            .collect();
        PermGroup::new(degree, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.bsgs.strong_generators()
    }

    pub fn base(&self) -> Vec<usize> {
        self.bsgs.base()
    }

    /// Orbit lengths along the stabiliser chain.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.bsgs.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.bsgs.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.bsgs.contains(p)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Same group, stabiliser chain rebuilt so the base starts with `prefix`.
    pub fn with_base_prefix(&self, prefix: &[usize]) -> PermGroup {
        PermGroup::with_known_order(self.degree, self.generators.clone(), prefix, self.order())
    }

    pub(crate) fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_degree(&self, other: usize) -> Result<()> {
        if other != self.degree {
            Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other,
            })
        } else {
            Ok(())
        }
    }

    /// Orbit of `point`, ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// All orbits, each ascending, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orb = self.orbit(p).expect("point in range");
            for &x in &orb {
                assigned[x] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1
            || self
                .orbit(0)
                .map(|o| o.len() == self.degree)
                .unwrap_or(false)
    }

    /// The stabiliser of `point`; `|G| = |orbit| · |G_p|` is checked.
    pub fn point_stabiliser(&self, point: usize) -> Result<PermGroup> {
        self.check_point(point)?;
        let rebased = self.with_base_prefix(&[point]);
        let orbit_len = rebased.bsgs.levels[0].orbit.len() as u128;
        let gens = rebased.bsgs.stabiliser_generators(1);
        let order = self.order() / orbit_len;
        let stab = PermGroup::with_known_order(self.degree, gens, &[], order);
        assert_eq!(orbit_len * stab.order(), self.order(), "orbit-stabiliser");
        Ok(stab)
    }

    /// Pointwise stabiliser of a sequence of points.
    pub fn pointwise_stabiliser(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let rebased = self.with_base_prefix(points);
        let depth = rebased
            .bsgs
            .levels
            .iter()
            .take_while(|l| points.contains(&l.base_point))
            .count();
        let order: u128 = rebased.bsgs.levels[depth..]
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product();
        Ok(PermGroup::with_known_order(
            self.degree,
            rebased.bsgs.stabiliser_generators(depth),
            &[],
            order,
        ))
    }

    /// Transversal element of the chain's first level mapping the first base point to `point`.
    pub(crate) fn first_level_representative(&self, point: usize) -> Option<Permutation> {
        let level = self.bsgs.levels.first()?;
        level.in_orbit(point).then(|| level.representative(point))
    }

    /// An element mapping `from` to `to`, if one exists.
    pub fn element_mapping(&self, from: usize, to: usize) -> Result<Option<Permutation>> {
        self.check_point(from)?;
        self.check_point(to)?;
        if from == to {
            return Ok(Some(self.identity()));
        }
        let rebased = self.with_base_prefix(&[from]);
        Ok(rebased.first_level_representative(to))
    }

    /// `H ≤ G`, decided by generator membership.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equal order and mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn conjugate(&self, by: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.conjugate_by(by)).collect();
        PermGroup::with_known_order(self.degree, gens, &[], self.order())
    }

    pub fn is_normalised_by(&self, g: &Permutation) -> bool {
        self.generators
            .iter()
            .all(|h| self.contains(&h.conjugate_by(g)))
    }

    /// Uniformly random element drawn through the stabiliser chain.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for level in self.bsgs.levels.iter().rev() {
            let pt = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = &g * &level.representative(pt);
        }
        g
    }

    /// Images of the base points; determines an element of this group uniquely.
    pub fn base_image_key(&self, p: &Permutation) -> Vec<u32> {
        self.bsgs
            .levels
            .iter()
            .map(|l| p.apply(l.base_point) as u32)
            .collect()
    }

    /// Visits every element exactly once. Callers bound the order first.
    pub fn for_each_element<F: FnMut(&Permutation)>(&self, mut f: F) {
        let transversals: Vec<Vec<Permutation>> = self
            .bsgs
            .levels
            .iter()
            .map(|l| l.orbit.iter().map(|&p| l.representative(p)).collect())
            .collect();
        fn walk<F: FnMut(&Permutation)>(
            depth: usize,
            acc: &Permutation,
            transversals: &[Vec<Permutation>],
            f: &mut F,
        ) {
            if depth == 0 {
                f(acc);
                return;
            }
            for u in &transversals[depth - 1] {
                walk(depth - 1, &(acc * u), transversals, f);
            }
        }
        walk(transversals.len(), &self.identity(), &transversals, &mut f);
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.order().min(1 << 24) as usize);
        self.for_each_element(|p| out.push(p.clone()));
        out
    }

    /// The subgroup generated by this group together with `extra`.
    pub fn extended(&self, extra: &[Permutation]) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        for g in extra {
            if !self.contains(g) {
                gens.push(g.clone());
            }
        }
        PermGroup::new(self.degree, gens)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, {} generators)",
            self.degree,
            self.order(),
            self.generators.len()
        )
    }
}

/// Builds a BSGS from a nonempty generator list; the degree is taken from the generators.
pub fn schreier_sims(generators: Vec<Permutation>) -> Result<PermGroup> {
    let degree = generators
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    PermGroup::new(degree, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn closure_order(g: &PermGroup) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![g.identity()];
        seen.insert(g.identity());
        while let Some(x) = queue.pop() {
            for s in g.generators() {
                let y = &x * s;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn s4_order_from_four_cycle_and_transposition() {
        let g = schreier_sims(vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 1]])]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(closure_order(&g), 24);
    }

    #[test]
    fn a6_order() {
        assert_eq!(PermGroup::alternating(6).order(), 360);
        assert_eq!(PermGroup::symmetric(7).order(), 5040);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let r = schreier_sims(vec![p(4, &[&[0, 1]]), p(5, &[&[0, 1]])]);
        assert!(matches!(r, Err(Error::DegreeMismatch { .. })));
        assert!(schreier_sims(vec![]).is_err());
    }

    #[test]
    fn orbits_and_stabilisers() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(s4.orbit(0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(s4.point_stabiliser(0).unwrap().order(), 6);
        let t = PermGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        assert_eq!(t.orbit(2).unwrap(), vec![2]);
        let klein = PermGroup::new(
            4,
            vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap();
        assert_eq!(klein.orbit(0).unwrap(), vec![0, 1, 2, 3]);
        assert!(klein.point_stabiliser(0).unwrap().is_trivial());
        assert_eq!(
            PermGroup::alternating(6)
                .point_stabiliser(0)
                .unwrap()
                .order(),
            60
        );
        assert!(matches!(s4.orbit(4), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn rebasing_keeps_the_group() {
        let g = PermGroup::alternating(7);
        let h = g.with_base_prefix(&[6, 5, 4]);
        assert_eq!(h.base()[..3], [6, 5, 4]);
        assert_eq!(h.order(), g.order());
        let x = p(7, &[&[0, 1, 2]]);
        assert!(h.contains(&x));
        assert!(!h.contains(&p(7, &[&[0, 1]])));
    }

    #[test]
    fn enumeration_visits_each_element_once() {
        let g = PermGroup::symmetric(5);
        let els = g.elements();
        let set: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(els.len(), 120);
        assert_eq!(set.len(), 120);
        assert!(els.iter().all(|e| g.contains(e)));
    }
}
