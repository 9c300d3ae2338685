//! Factorisations `G = AB` and multiple factorisations, decided by order arithmetic with
//! explicit cross-checks on small groups.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;
use crate::search::intersect;

/// Largest group order for which products of subgroups are also formed as sets.
pub const EXPLICIT_PRODUCT_ORDER: u128 = 10_000;

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorisationReport {
    pub holds: bool,
    pub group_order: u128,
    pub a_order: u128,
    pub b_order: u128,
    pub intersection_order: u128,
    pub group_primes: Vec<u128>,
    pub a_primes: Vec<u128>,
    pub b_primes: Vec<u128>,
    /// `|AB|` counted as a set, when the group is small enough.
    pub explicit_product_size: Option<u128>,
    /// An element of `G` outside `AB`, when one was found.
    pub missing_element: Option<Permutation>,
}

fn require_subgroup(g: &PermGroup, h: &PermGroup, name: &str) -> Result<()> {
    g.check_degree(h.degree())?;
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup(format!(
            "{name} is not contained in the group"
        )));
    }
    Ok(())
}

/// `AB` as a set: the union of the right cosets `Ab`.
fn product_set(a: &PermGroup, b: &PermGroup) -> HashSet<Permutation> {
    let a_elems = a.elements();
    let mut set = HashSet::new();
    b.for_each_element(|y| {
        if !set.contains(y) {
            for x in &a_elems {
                set.insert(x * y);
            }
        }
    });
    set
}

/// Whether `G = AB`, by `|A|·|B| = |G|·|A∩B|`.
pub fn is_factorisation(
    g: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    limits: &Limits,
) -> Result<FactorisationReport> {
    require_subgroup(g, a, "A")?;
    require_subgroup(g, b, "B")?;
    let meet = intersect(a, b, limits)?;
    let holds = a.order() * b.order() == g.order() * meet.order();
    let (mut explicit, mut missing) = (None, None);
    if g.order() <= EXPLICIT_PRODUCT_ORDER {
        let set = product_set(a, b);
        explicit = Some(set.len() as u128);
        if !holds {
            let mut found = None;
            g.for_each_element(|x| {
                if found.is_none() && !set.contains(x) {
                    found = Some(x.clone());
                }
            });
            missing = found;
        }
        debug_assert_eq!(holds, set.len() as u128 == g.order());
    }
    Ok(FactorisationReport {
        holds,
        group_order: g.order(),
        a_order: a.order(),
        b_order: b.order(),
        intersection_order: meet.order(),
        group_primes: prime_divisors(g.order()),
        a_primes: prime_divisors(a.order()),
        b_primes: prime_divisors(b.order()),
        explicit_product_size: explicit,
        missing_element: missing,
    })
}

/// A factorisation in which `|G|`, `|A|` and `|B|` have the same prime divisors.
pub fn is_full_factorisation(
    g: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    limits: &Limits,
) -> Result<FactorisationReport> {
    let mut r = is_factorisation(g, a, b, limits)?;
    r.holds &= r.a_primes == r.group_primes && r.b_primes == r.group_primes;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipleFactorisationReport {
    pub holds: bool,
    /// Every subgroup is proper.
    pub proper: bool,
    pub group_order: u128,
    pub subgroup_orders: Vec<u128>,
    /// `|∩_{j≠i} K_j|` for each `i`.
    pub complement_orders: Vec<u128>,
    pub intersection_order: u128,
    /// `K_i (∩_{j≠i} K_j) = T` for each `i`.
    pub products: Vec<bool>,
    pub failing_index: Option<usize>,
    /// `∏ |T:K_i|`.
    pub index_product: u128,
}

/// Whether `K_i (∩_{j≠i} K_j) = T` for every `i`, with at least three proper subgroups.
pub fn is_strong_multiple_factorisation(
    t: &PermGroup,
    subgroups: &[PermGroup],
    limits: &Limits,
) -> Result<MultipleFactorisationReport> {
    if subgroups.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "a multiple factorisation needs at least 3 subgroups, got {}",
            subgroups.len()
        )));
    }
    for (i, k) in subgroups.iter().enumerate() {
        require_subgroup(t, k, &format!("subgroup {i}"))?;
    }
    let meet_of = |skip: Option<usize>| -> Result<PermGroup> {
        let mut acc = t.clone();
        for (j, k) in subgroups.iter().enumerate() {
            if Some(j) != skip {
                acc = intersect(&acc, k, limits)?;
            }
        }
        Ok(acc)
    };
    let all = meet_of(None)?.order();
    let complements = (0..subgroups.len())
        .map(|i| meet_of(Some(i)).map(|g| g.order()))
        .collect::<Result<Vec<_>>>()?;
    let products: Vec<bool> = subgroups
        .iter()
        .zip(&complements)
        .map(|(k, &c)| k.order() * c == t.order() * all)
        .collect();
    let proper = subgroups.iter().all(|k| k.order() < t.order());
    Ok(MultipleFactorisationReport {
        holds: proper && products.iter().all(|&b| b),
        proper,
        group_order: t.order(),
        subgroup_orders: subgroups.iter().map(PermGroup::order).collect(),
        complement_orders: complements,
        intersection_order: all,
        failing_index: products.iter().position(|&b| !b),
        products,
        index_product: subgroups.iter().map(|k| t.order() / k.order()).product(),
    })
}

/// The orbit of `h` under conjugation by `by`, capped at `limits.subgroup_candidates`.
fn conjugation_orbit(h: &PermGroup, by: &PermGroup, limits: &Limits) -> Result<Vec<PermGroup>> {
    let mut orbit = vec![h.clone()];
    let mut head = 0;
    while head < orbit.len() {
        let cur = orbit[head].clone();
        head += 1;
        for x in by.generators() {
            let c = cur.conjugate(x);
            if !orbit.iter().any(|o| o.same_group(&c)) {
                orbit.push(c);
                if orbit.len() > limits.subgroup_candidates {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {} conjugates",
                        limits.subgroup_candidates
                    )));
                }
            }
        }
    }
    Ok(orbit)
}

/// Whether `h` and `k` are conjugate in `g`.
pub fn are_conjugate(g: &PermGroup, h: &PermGroup, k: &PermGroup, limits: &Limits) -> Result<bool> {
    if h.order() != k.order() {
        return Ok(false);
    }
    Ok(conjugation_orbit(h, g, limits)?
        .iter()
        .any(|c| c.same_group(k)))
}

/// For a factorisation `G = AB`: whether `A` is transitive by conjugation on the class `B^G`.
pub fn conjugation_transitivity_check(
    g: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    limits: &Limits,
) -> Result<bool> {
    if !is_factorisation(g, a, b, limits)?.holds {
        return Err(Error::NotFactorisation("G ≠ AB".into()));
    }
    let class = conjugation_orbit(b, g, limits)?;
    let orbit = conjugation_orbit(b, a, limits)?;
    Ok(orbit.len() == class.len())
}

/// An automorphism of a permutation group, given either as a permutation of the points
/// normalising the group or as the images of the group's generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Automorphism {
    Relabelling(Permutation),
    GeneratorMap(Vec<Permutation>),
}

/// An automorphism prepared for applying to subgroups of a fixed group.
pub struct AppliedAutomorphism {
    kind: Applied,
}

enum Applied {
    Relabelling(Permutation),
    /// The graph `{(x, φ(x))}` on two copies of the points.
    Graph {
        group: PermGroup,
        points: usize,
    },
}

impl Automorphism {
    pub fn identity(g: &PermGroup) -> Automorphism {
        Automorphism::Relabelling(g.identity())
    }

    /// Checks that the map is an automorphism of `g`.
    pub fn prepare(&self, g: &PermGroup) -> Result<AppliedAutomorphism> {
        let kind = match self {
            Automorphism::Relabelling(p) => {
                g.check_degree(p.degree())?;
                if !g.is_normalised_by(p) {
                    return Err(Error::InvalidInput(
                        "relabelling does not normalise the group".into(),
                    ));
                }
                Applied::Relabelling(p.clone())
            }
            Automorphism::GeneratorMap(images) => {
                if images.len() != g.generators().len() {
                    return Err(Error::InvalidInput(format!(
                        "{} generator images for {} generators",
                        images.len(),
                        g.generators().len()
                    )));
                }
                let n = g.degree();
                let mut gens = Vec::new();
                for (x, y) in g.generators().iter().zip(images) {
                    g.check_degree(y.degree())?;
                    if !g.contains(y) {
                        return Err(Error::InvalidInput(
                            "generator image outside the group".into(),
                        ));
                    }
                    gens.push(x.direct_sum(y));
                }
                let prefix: Vec<usize> = (0..n).collect();
                let graph = PermGroup::new(2 * n, gens)?.with_base_prefix(&prefix);
                let image = PermGroup::new(n, images.clone())?;
                // a homomorphism has a graph of order |G|; a bijective one has image G
                if graph.order() != g.order() || image.order() != g.order() {
                    return Err(Error::InvalidInput(
                        "generator map is not an automorphism".into(),
                    ));
                }
                Applied::Graph {
                    group: graph,
                    points: n,
                }
            }
        };
        Ok(AppliedAutomorphism { kind })
    }
}

impl AppliedAutomorphism {
    pub fn apply(&self, x: &Permutation) -> Result<Permutation> {
        match &self.kind {
            Applied::Relabelling(p) => Ok(x.conjugate_by(p)),
            Applied::Graph { group, points } => {
                let n = *points;
                let (residue, _) = group.bsgs.sift(x.direct_sum(&Permutation::identity(n)), 0);
                let images = residue.images();
                if images[..n].iter().enumerate().any(|(i, &y)| i != y) {
                    return Err(Error::NotSubgroup("element outside the group".into()));
                }
                // the residue is (1, φ(x)⁻¹)
                Ok(Permutation::new(images[n..].iter().map(|&y| y - n).collect())?.inverse())
            }
        }
    }

    pub fn apply_to_subgroup(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|x| self.apply(x))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(h.degree(), gens)
    }
}

/// Whether some supplied automorphism, composed with an inner one, carries `{A₁, B₁}` to
/// `{A₂, B₂}` (in either order).
pub fn equivalent_factorisations(
    g: &PermGroup,
    pair1: (&PermGroup, &PermGroup),
    pair2: (&PermGroup, &PermGroup),
    automorphisms: &[Automorphism],
    limits: &Limits,
) -> Result<bool> {
    for (a, b) in [pair1, pair2] {
        if !is_factorisation(g, a, b, limits)?.holds {
            return Err(Error::NotFactorisation(
                "a supplied pair does not factorise G".into(),
            ));
        }
    }
    let orders1: BTreeSet<u128> = [pair1.0.order(), pair1.1.order()].into();
    let orders2: BTreeSet<u128> = [pair2.0.order(), pair2.1.order()].into();
    if orders1 != orders2 {
        return Ok(false);
    }
    for beta in automorphisms {
        let applied = beta.prepare(g)?;
        let a = applied.apply_to_subgroup(pair1.0)?;
        let b = applied.apply_to_subgroup(pair1.1)?;
        if pair_conjugate(g, (&a, &b), pair2, limits)?
            || pair_conjugate(g, (&b, &a), pair2, limits)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether some `x ∈ G` has `A₁^x = A₂` and `B₁^x = B₂`.
fn pair_conjugate(
    g: &PermGroup,
    from: (&PermGroup, &PermGroup),
    to: (&PermGroup, &PermGroup),
    limits: &Limits,
) -> Result<bool> {
    if from.0.order() != to.0.order() || from.1.order() != to.1.order() {
        return Ok(false);
    }
    let mut orbit = vec![(from.0.clone(), from.1.clone())];
    let mut head = 0;
    while head < orbit.len() {
        let (a, b) = orbit[head].clone();
        head += 1;
        if a.same_group(to.0) && b.same_group(to.1) {
            return Ok(true);
        }
        for x in g.generators() {
            let next = (a.conjugate(x), b.conjugate(x));
            if !orbit
                .iter()
                .any(|(p, q)| p.same_group(&next.0) && q.same_group(&next.1))
            {
                orbit.push(next);
                if orbit.len() > limits.subgroup_candidates {
                    return Err(Error::BudgetExceeded("conjugate pairs".into()));
                }
            }
        }
    }
    Ok(false)
}
