//! Normal structure at desk scale: conjugacy classes, normal closures, minimal normal
//! subgroups, normalisers and centralisers.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;

fn desk_scale(g: &PermGroup, limits: &Limits) -> Result<()> {
    if g.order() > limits.desk_order {
        return Err(Error::BudgetExceeded(format!(
            "group order {} exceeds the desk-scale bound {}",
            g.order(),
            limits.desk_order
        )));
    }
    Ok(())
}

/// One representative per conjugacy class, with the class size, in enumeration order.
pub fn class_representatives(g: &PermGroup, limits: &Limits) -> Result<Vec<(Permutation, u128)>> {
    desk_scale(g, limits)?;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut reps = Vec::new();
    g.for_each_element(|x| {
        if seen.contains(&g.base_image_key(x)) {
            return;
        }
        let mut class = vec![x.clone()];
        seen.insert(g.base_image_key(x));
        let mut head = 0;
        while head < class.len() {
            let y = class[head].clone();
            head += 1;
            for s in g.generators() {
                let z = y.conjugate_by(s);
                if seen.insert(g.base_image_key(&z)) {
                    class.push(z);
                }
            }
        }
        reps.push((x.clone(), class.len() as u128));
    });
    Ok(reps)
}

/// The smallest normal subgroup of `g` containing `elements`.
pub fn normal_closure(g: &PermGroup, elements: &[Permutation]) -> Result<PermGroup> {
    let mut n = PermGroup::new(g.degree(), Vec::new())?.extended(elements)?;
    let mut queue: Vec<Permutation> = n.generators().to_vec();
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let c = x.conjugate_by(s);
            if !n.contains(&c) {
                n = n.extended(std::slice::from_ref(&c))?;
                queue.push(c);
            }
        }
    }
    Ok(n)
}

/// The commutator subgroup `[G, G]`.
pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let gens = g.generators();
    let mut commutators = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = &(&a.inverse() * &b.inverse()) * &(a * b);
            if !c.is_identity() {
                commutators.push(c);
            }
        }
    }
    normal_closure(g, &commutators)
}

fn is_prime(n: u128) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// All minimal normal subgroups, smallest order first.
///
/// Every minimal normal subgroup is the normal closure of any of its elements of prime
/// order, so only classes of prime-order elements are examined.
pub fn minimal_normal_subgroups(g: &PermGroup, limits: &Limits) -> Result<Vec<PermGroup>> {
    desk_scale(g, limits)?;
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    let mut closures: Vec<PermGroup> = Vec::new();
    for (x, _) in class_representatives(g, limits)? {
        if !is_prime(x.order()) {
            continue;
        }
        let c = normal_closure(g, &[x])?;
        if !closures.iter().any(|n| n.same_group(&c)) {
            closures.push(c);
        }
    }
    let mut minimal: Vec<PermGroup> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    minimal.sort_by_key(PermGroup::order);
    Ok(minimal)
}

#[derive(Clone, Debug, Serialize)]
pub struct InnateTransitivity {
    pub innately_transitive: bool,
    pub quasiprimitive: bool,
    pub minimal_normal_orders: Vec<u128>,
    #[serde(skip)]
    pub plinths: Vec<PermGroup>,
}

/// Whether some minimal normal subgroup is transitive; the transitive ones are the plinths.
pub fn is_innately_transitive(g: &PermGroup, limits: &Limits) -> Result<InnateTransitivity> {
    let minimal = minimal_normal_subgroups(g, limits)?;
    let plinths: Vec<PermGroup> = minimal
        .iter()
        .filter(|n| n.is_transitive())
        .cloned()
        .collect();
    Ok(InnateTransitivity {
        innately_transitive: !plinths.is_empty(),
        quasiprimitive: !minimal.is_empty() && plinths.len() == minimal.len(),
        minimal_normal_orders: minimal.iter().map(PermGroup::order).collect(),
        plinths,
    })
}

/// True iff the only normal subgroups are 1 and the group itself.
pub fn is_simple(g: &PermGroup, limits: &Limits) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    let minimal = minimal_normal_subgroups(g, limits)?;
    Ok(minimal.len() == 1 && minimal[0].order() == g.order())
}

pub fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a * b == b * a))
}

/// `N_G(H)` by exhaustive search over `G`.
pub fn normaliser(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    desk_scale(g, limits)?;
    g.check_degree(h.degree())?;
    let mut n = h.clone();
    g.for_each_element(|x| {
        if !n.contains(x) && h.is_normalised_by(x) {
            n = n.extended(std::slice::from_ref(x)).expect("same degree");
        }
    });
    Ok(n)
}

/// The centraliser of a transitive group in the full symmetric group on its points.
///
/// An element `c` commuting with `G` is determined by `ω^c`, which must be fixed by `G_ω`;
/// each candidate is propagated along the orbit and kept if the result is consistent.
pub fn centraliser_in_symmetric_group(g: &PermGroup) -> Result<PermGroup> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = g.degree();
    let stab = g.point_stabiliser(0)?;
    let fixed: Vec<usize> = (0..n)
        .filter(|&p| stab.generators().iter().all(|s| s.apply(p) == p))
        .collect();
    let mut elements = Vec::new();
    'candidate: for alpha in fixed {
        let mut map = vec![usize::MAX; n];
        map[0] = alpha;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for s in g.generators() {
                let (y, fy) = (s.apply(x), s.apply(map[x]));
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    continue 'candidate;
                }
            }
        }
        if let Ok(c) = Permutation::new(map) {
            elements.push(c);
        }
    }
    PermGroup::new(n, elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn klein() -> PermGroup {
        PermGroup::new(
            4,
            vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap()
    }

    #[test]
    fn minimal_normal_examples() {
        let lim = Limits::default();
        let a6 = PermGroup::alternating(6);
        let m = minimal_normal_subgroups(&a6, &lim).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 360);

        let m = minimal_normal_subgroups(&PermGroup::symmetric(4), &lim).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m[0].same_group(&klein()));

        let m = minimal_normal_subgroups(&klein(), &lim).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|n| n.order() == 2));
    }

    #[test]
    fn innate_transitivity_examples() {
        let lim = Limits::default();
        let r = is_innately_transitive(&PermGroup::alternating(6), &lim).unwrap();
        assert!(r.innately_transitive && r.quasiprimitive);
        let r = is_innately_transitive(&PermGroup::symmetric(4), &lim).unwrap();
        assert!(r.innately_transitive && r.quasiprimitive);
        assert_eq!(r.plinths[0].order(), 4);
        let t = PermGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        let r = is_innately_transitive(&t, &lim).unwrap();
        assert!(!r.innately_transitive);
        assert!(r.plinths.is_empty());
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(
            derived_subgroup(&PermGroup::symmetric(5)).unwrap().order(),
            60
        );
        assert_eq!(
            derived_subgroup(&PermGroup::symmetric(4)).unwrap().order(),
            12
        );
        assert_eq!(
            derived_subgroup(&PermGroup::alternating(4))
                .unwrap()
                .order(),
            4
        );
    }

    #[test]
    fn budget_applies() {
        let lim = Limits {
            desk_order: 100,
            ..Limits::default()
        };
        assert!(matches!(
            minimal_normal_subgroups(&PermGroup::alternating(6), &lim),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn centralisers_of_regular_and_primitive_groups() {
        // a regular group's centraliser is the opposite regular representation
        assert_eq!(centraliser_in_symmetric_group(&klein()).unwrap().order(), 4);
        assert!(centraliser_in_symmetric_group(&PermGroup::symmetric(5))
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn normaliser_of_sylow_three_in_s4() {
        let c3 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2]])]).unwrap();
        let n = normaliser(&PermGroup::symmetric(4), &c3, &Limits::default()).unwrap();
        assert_eq!(n.order(), 6);
    }
}
