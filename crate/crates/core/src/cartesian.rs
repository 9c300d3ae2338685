//! Cartesian decompositions of a point set, Cartesian systems of subgroups, the
//! correspondence between them, and enumeration of the invariant decompositions of a group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blocks::{block_stabiliser, block_systems, minimal_block_system};
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::normal::{is_abelian, is_innately_transitive, is_simple};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::search::{intersect, setwise_stabiliser};

/// A list of partitions `Γ₁,…,Γ_ℓ` of a common point set, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct CartesianDecomposition {
    partitions: Vec<Partition>,
}

impl CartesianDecomposition {
    /// Checks only that the partitions share a degree; use [`validate_decomposition`] for the
    /// intersection property.
    pub fn new(mut partitions: Vec<Partition>) -> Result<Self> {
        let Some(first) = partitions.first() else {
            return Err(Error::InvalidDecomposition("no partitions".into()));
        };
        let degree = first.degree();
        for p in &partitions {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
        }
        partitions.sort();
        Ok(CartesianDecomposition { partitions })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn degree(&self) -> usize {
        self.partitions[0].degree()
    }

    pub fn index(&self) -> usize {
        self.partitions.len()
    }

    pub fn block_counts(&self) -> Vec<usize> {
        self.partitions.iter().map(Partition::num_blocks).collect()
    }

    /// All partitions have the same number of blocks, and that number is at least 2.
    pub fn is_homogeneous(&self) -> bool {
        let counts = self.block_counts();
        counts[0] >= 2 && counts.iter().all(|&c| c == counts[0])
    }

    pub fn is_nontrivial(&self) -> bool {
        self.index() >= 2
    }

    /// The image under a permutation of the points.
    pub fn image(&self, g: &Permutation) -> CartesianDecomposition {
        CartesianDecomposition::new(self.partitions.iter().map(|p| p.image(g)).collect())
            .expect("same degree")
    }
}

impl TryFrom<Vec<Partition>> for CartesianDecomposition {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        CartesianDecomposition::new(v)
    }
}

impl From<CartesianDecomposition> for Vec<Partition> {
    fn from(e: CartesianDecomposition) -> Self {
        e.partitions
    }
}

impl fmt::Debug for CartesianDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.partitions).finish()
    }
}

/// A block tuple whose intersection does not have exactly one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTupleWitness {
    /// Index of the chosen block in each partition.
    pub blocks: Vec<usize>,
    pub intersection_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub valid: bool,
    pub degree: usize,
    pub index: usize,
    pub homogeneous: bool,
    pub nontrivial: bool,
    /// Valid and of index at least 2.
    pub compliant: bool,
    pub block_counts: Vec<usize>,
    pub block_sizes: Vec<Option<usize>>,
    pub witness: Option<BlockTupleWitness>,
}

/// Checks that every choice of one block per partition meets in exactly one point.
pub fn validate_decomposition(
    e: &CartesianDecomposition,
    limits: &Limits,
) -> Result<DecompositionReport> {
    let counts = e.block_counts();
    let mut product: u64 = 1;
    for &c in &counts {
        product = product.saturating_mul(c as u64);
        if product > limits.product_cap {
            return Err(Error::BudgetExceeded(format!(
                "more than {} block tuples",
                limits.product_cap
            )));
        }
    }
    let labels: Vec<Vec<usize>> = e.partitions.iter().map(Partition::labels).collect();
    let mut hits = vec![0usize; product as usize];
    for p in 0..e.degree() {
        let slot = labels
            .iter()
            .zip(&counts)
            .fold(0usize, |acc, (l, &c)| acc * c + l[p]);
        hits[slot] += 1;
    }
    let witness = hits.iter().position(|&h| h != 1).map(|slot| {
        let mut blocks = vec![0; counts.len()];
        let mut rest = slot;
        for (i, &c) in counts.iter().enumerate().rev() {
            blocks[i] = rest % c;
            rest /= c;
        }
        BlockTupleWitness {
            blocks,
            intersection_size: hits[slot],
        }
    });
    let valid = witness.is_none();
    Ok(DecompositionReport {
        valid,
        degree: e.degree(),
        index: e.index(),
        homogeneous: e.is_homogeneous(),
        nontrivial: e.is_nontrivial(),
        compliant: valid && e.is_nontrivial(),
        block_counts: counts,
        block_sizes: e
            .partitions
            .iter()
            .map(Partition::uniform_block_size)
            .collect(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub invariant: bool,
    /// For each generator, the induced permutation of the partitions (`None` if some image
    /// falls outside the decomposition).
    pub induced: Vec<Option<Vec<usize>>>,
    /// First (generator, partition) pair whose image is not in the decomposition.
    pub witness: Option<(usize, usize)>,
}

/// Whether every generator of `g` permutes the partitions of `e`.
pub fn is_invariant(g: &PermGroup, e: &CartesianDecomposition) -> Result<InvarianceReport> {
    g.check_degree(e.degree())?;
    let mut induced = Vec::new();
    let mut witness = None;
    for (gi, x) in g.generators().iter().enumerate() {
        let mut images = Vec::with_capacity(e.index());
        for (pi, p) in e.partitions.iter().enumerate() {
            match e.partitions.iter().position(|q| *q == p.image(x)) {
                Some(j) => images.push(j),
                None => {
                    witness.get_or_insert((gi, pi));
                    break;
                }
            }
        }
        induced.push((images.len() == e.index()).then_some(images));
    }
    Ok(InvarianceReport {
        invariant: witness.is_none(),
        induced,
        witness,
    })
}

/// Index of the first partition moved by some generator of `m`, if any.
pub fn first_moved_partition(m: &PermGroup, e: &CartesianDecomposition) -> Result<Option<usize>> {
    m.check_degree(e.degree())?;
    Ok(e.partitions
        .iter()
        .position(|p| m.generators().iter().any(|x| p.image(x) != *p)))
}

/// True iff every generator of `m` fixes every partition of `e`.
pub fn plinth_fixes_partitions(m: &PermGroup, e: &CartesianDecomposition) -> Result<bool> {
    Ok(first_moved_partition(m, e)?.is_none())
}

/// Subgroups `K₁,…,K_ℓ` of a transitive group `M`, attached to a point `ω`.
#[derive(Clone, Debug)]
pub struct CartesianSystem {
    pub ambient: PermGroup,
    pub base_point: usize,
    pub subgroups: Vec<PermGroup>,
}

impl CartesianSystem {
    pub fn new(ambient: PermGroup, base_point: usize, subgroups: Vec<PermGroup>) -> Result<Self> {
        ambient.check_point(base_point)?;
        for k in &subgroups {
            ambient.check_degree(k.degree())?;
        }
        if subgroups.is_empty() {
            return Err(Error::InvalidSystem("no subgroups".into()));
        }
        Ok(CartesianSystem {
            ambient,
            base_point,
            subgroups,
        })
    }

    pub fn index(&self) -> usize {
        self.subgroups.len()
    }

    /// `K_I = ∩_{i∈I} K_i`, with `K_∅ = M`.
    pub fn meet(&self, indices: &[usize], limits: &Limits) -> Result<PermGroup> {
        let mut acc = self.ambient.clone();
        for &i in indices {
            acc = intersect(&acc, &self.subgroups[i], limits)?;
        }
        Ok(acc)
    }

    /// The same subgroups, conjugated by `g`, at `ω^g`.
    pub fn conjugate(&self, g: &Permutation) -> CartesianSystem {
        CartesianSystem {
            ambient: self.ambient.conjugate(g),
            base_point: g.apply(self.base_point),
            subgroups: self.subgroups.iter().map(|k| k.conjugate(g)).collect(),
        }
    }

    /// Equal as sets of subgroups, at the same point.
    pub fn same_as(&self, other: &CartesianSystem) -> bool {
        self.base_point == other.base_point && same_subgroup_set(&self.subgroups, &other.subgroups)
    }
}

/// Multiset equality of two lists of subgroups.
pub fn same_subgroup_set(a: &[PermGroup], b: &[PermGroup]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(
        |x| match (0..b.len()).find(|&j| !used[j] && b[j].same_group(x)) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemReport {
    pub valid: bool,
    pub index: usize,
    /// Every `K_i` is a subgroup of `M`.
    pub contained: bool,
    /// `∩ K_i = M_ω`.
    pub eq1_holds: bool,
    /// `K_i (∩_{j≠i} K_j) = M`, one entry per `i`.
    pub eq2_holds: Vec<bool>,
    /// First `i` for which the product condition fails.
    pub failing_index: Option<usize>,
    pub homogeneous: bool,
    pub nontrivial: bool,
    pub ambient_order: u128,
    pub point_stabiliser_order: u128,
    pub subgroup_orders: Vec<u128>,
    pub intersection_order: u128,
    /// `∏ |M:K_i|`.
    pub predicted_degree: u128,
    /// `|M:M_ω|`.
    pub orbit_length: u128,
}

/// Checks both defining equations, deciding the product condition by orders.
pub fn validate_system(k: &CartesianSystem, limits: &Limits) -> Result<SystemReport> {
    let m = &k.ambient;
    let stab = m.point_stabiliser(k.base_point)?;
    let contained = k.subgroups.iter().all(|x| x.is_subgroup_of(m));
    let all: Vec<usize> = (0..k.index()).collect();
    let meet = k.meet(&all, limits)?;
    let eq1 = meet.order() == stab.order() && stab.is_subgroup_of(&meet);
    let mut eq2 = Vec::with_capacity(k.index());
    for i in 0..k.index() {
        let others: Vec<usize> = all.iter().copied().filter(|&j| j != i).collect();
        let rest = k.meet(&others, limits)?;
        eq2.push(contained && k.subgroups[i].order() * rest.order() == m.order() * meet.order());
    }
    let orders: Vec<u128> = k.subgroups.iter().map(PermGroup::order).collect();
    let predicted = orders.iter().map(|o| m.order() / o).product();
    let homogeneous = orders.iter().all(|&o| o < m.order() && o == orders[0]);
    Ok(SystemReport {
        valid: contained && eq1 && eq2.iter().all(|&b| b),
        index: k.index(),
        contained,
        eq1_holds: eq1,
        failing_index: eq2.iter().position(|&b| !b),
        eq2_holds: eq2,
        homogeneous,
        nontrivial: k.index() >= 2,
        ambient_order: m.order(),
        point_stabiliser_order: stab.order(),
        subgroup_orders: orders,
        intersection_order: meet.order(),
        predicted_degree: predicted,
        orbit_length: m.order() / stab.order(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeetLawReport {
    pub holds: bool,
    /// Number of subset pairs `(I, J)` checked.
    pub pairs_checked: usize,
    /// Whether the products were also formed as explicit sets.
    pub explicit: bool,
    pub index_multiplicative: bool,
}

/// Checks `|M:K_I| = ∏_{i∈I} |M:K_i|` for every subset and `K_I K_J = K_{I∩J}` for every
/// pair of subsets, by orders and (for `|M| ≤ 10⁴`) by forming the product set.
pub fn check_meet_law(k: &CartesianSystem, limits: &Limits) -> Result<MeetLawReport> {
    let l = k.index();
    if l > 10 {
        return Err(Error::BudgetExceeded(format!(
            "{l} subgroups is too many subsets"
        )));
    }
    let m_order = k.ambient.order();
    let subsets: Vec<Vec<usize>> = (0u32..1 << l)
        .map(|mask| (0..l).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    let meets = subsets
        .iter()
        .map(|s| k.meet(s, limits))
        .collect::<Result<Vec<_>>>()?;
    let index_multiplicative = subsets.iter().zip(&meets).all(|(s, g)| {
        m_order / g.order()
            == s.iter()
                .map(|&i| m_order / k.subgroups[i].order())
                .product()
    });
    let explicit = m_order <= 10_000;
    let mut holds = true;
    let mut pairs = 0;
    for a in 0..subsets.len() {
        for b in a..subsets.len() {
            pairs += 1;
            let (ka, kb) = (&meets[a], &meets[b]);
            let cap = meets[a & b].order();
            let cup = meets[a | b].order();
            if ka.order() * kb.order() != cup * cap {
                holds = false;
                continue;
            }
            if explicit {
                let target = &meets[a & b];
                let mut product = std::collections::HashSet::new();
                for x in ka.elements() {
                    for y in kb.elements() {
                        product.insert(&x * &y);
                    }
                }
                holds &= product.len() as u128 == cap && product.iter().all(|p| target.contains(p));
            }
        }
    }
    Ok(MeetLawReport {
        holds,
        pairs_checked: pairs,
        explicit,
        index_multiplicative,
    })
}

/// The system of stabilisers in `M` of the blocks through `ω`.
pub fn to_system(
    m: &PermGroup,
    e: &CartesianDecomposition,
    omega: usize,
    limits: &Limits,
) -> Result<CartesianSystem> {
    m.check_degree(e.degree())?;
    m.check_point(omega)?;
    if !m.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let report = validate_decomposition(e, limits)?;
    if let Some(w) = report.witness {
        return Err(Error::InvalidDecomposition(format!(
            "blocks {:?} meet in {} points",
            w.blocks, w.intersection_size
        )));
    }
    if let Some(index) = first_moved_partition(m, e)? {
        return Err(Error::NotInvariant { index });
    }
    let subgroups = e
        .partitions
        .iter()
        .map(|p| setwise_stabiliser(m, p.block_containing(omega).expect("covers"), limits))
        .collect::<Result<Vec<_>>>()?;
    let system = CartesianSystem::new(m.clone(), omega, subgroups)?;
    let check = validate_system(&system, limits)?;
    if !check.valid {
        return Err(Error::InvalidSystem(format!(
            "block stabilisers fail the defining equations: {check:?}"
        )));
    }
    Ok(system)
}

/// The partitions into `M`-translates of the orbits `ω^{K_i}`.
pub fn to_decomposition(k: &CartesianSystem, limits: &Limits) -> Result<CartesianDecomposition> {
    let m = &k.ambient;
    if !m.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let report = validate_system(k, limits)?;
    if !report.valid {
        return Err(Error::InvalidSystem(match report.failing_index {
            Some(i) => format!("product condition fails for subgroup {i}"),
            None if !report.contained => "a subgroup is not contained in the ambient group".into(),
            None => "the subgroups do not meet in the point stabiliser".into(),
        }));
    }
    let partitions = k
        .subgroups
        .iter()
        .map(|sub| {
            let orbit = sub.orbit(k.base_point)?;
            let p = minimal_block_system(m, &orbit)?;
            debug_assert_eq!(p.block_containing(k.base_point), Some(&orbit[..]));
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;
    let e = CartesianDecomposition::new(partitions)?;
    if !validate_decomposition(&e, limits)?.valid {
        return Err(Error::InvalidSystem(
            "orbit translates do not form a decomposition".into(),
        ));
    }
    let back = to_system(m, &e, k.base_point, limits)?;
    if !back.same_as(k) {
        return Err(Error::InvalidSystem(
            "the system is not recovered from its decomposition".into(),
        ));
    }
    Ok(e)
}

/// Whether moving the point by `g ∈ M` conjugates the system by `g`.
pub fn covariance_check(
    m: &PermGroup,
    e: &CartesianDecomposition,
    omega: usize,
    g: &Permutation,
    limits: &Limits,
) -> Result<bool> {
    m.check_degree(g.degree())?;
    if !m.contains(g) {
        return Err(Error::NotSubgroup(
            "the conjugating element is not in M".into(),
        ));
    }
    let here = to_system(m, e, omega, limits)?;
    let there = to_system(m, e, g.apply(omega), limits)?;
    Ok(there.same_as(&here.conjugate(g)))
}

/// Settings for [`cartesian_systems`] and [`enumerate_cartesian_decompositions`].
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// A transitive normal subgroup to use instead of searching for a plinth.
    pub plinth: Option<PermGroup>,
    pub limits: Limits,
}

/// Resolves the transitive normal subgroup used for the search.
pub fn resolve_plinth(g: &PermGroup, options: &EnumerateOptions) -> Result<PermGroup> {
    match &options.plinth {
        Some(m) => {
            g.check_degree(m.degree())?;
            if !m.is_subgroup_of(g) || !g.generators().iter().all(|x| m.is_normalised_by(x)) {
                return Err(Error::NotSubgroup(
                    "the supplied plinth is not normal in G".into(),
                ));
            }
            if !m.is_transitive() {
                return Err(Error::NotTransitive);
            }
            Ok(m.clone())
        }
        None => {
            let report = is_innately_transitive(g, &options.limits)?;
            report
                .plinths
                .into_iter()
                .next()
                .ok_or(Error::NotInnatelyTransitive)
        }
    }
}

fn max_index(m: &PermGroup, degree: usize, limits: &Limits) -> usize {
    let log2 = (usize::BITS - 1 - degree.max(1).leading_zeros()) as usize;
    let simple =
        m.order() <= limits.desk_order && !is_abelian(m) && is_simple(m, limits).unwrap_or(false);
    if simple {
        log2.min(3)
    } else {
        log2
    }
}

/// All `G_ω`-invariant Cartesian systems of the plinth, in no particular order.
pub fn cartesian_systems(
    g: &PermGroup,
    omega: usize,
    options: &EnumerateOptions,
) -> Result<Vec<CartesianSystem>> {
    g.check_point(omega)?;
    let limits = &options.limits;
    let m = resolve_plinth(g, options)?;
    let n = m.degree();
    let stab = m.point_stabiliser(omega)?;
    let candidates: Vec<(PermGroup, usize)> = block_systems(&m, omega, limits)?
        .into_iter()
        .filter(|s| !s.trivial)
        .map(|s| {
            let k = block_stabiliser(&m, &stab, omega, &s.block)?;
            Ok((k, n / s.block.len()))
        })
        .collect::<Result<Vec<_>>>()?;
    let bound = max_index(&m, n, limits);
    let g_stab = g.point_stabiliser(omega)?;

    let mut found = Vec::new();
    let mut chosen = Vec::new();
    search_subsets(
        &m,
        &candidates,
        0,
        &mut chosen,
        &m,
        1,
        n,
        bound,
        limits,
        &mut found,
    )?;
    let mut systems = Vec::new();
    for subset in found {
        let subgroups: Vec<PermGroup> = subset.iter().map(|&i| candidates[i].0.clone()).collect();
        let invariant = g_stab.generators().iter().all(|x| {
            subgroups
                .iter()
                .all(|k| subgroups.iter().any(|k2| k2.same_group(&k.conjugate(x))))
        });
        if !invariant {
            continue;
        }
        let system = CartesianSystem::new(m.clone(), omega, subgroups)?;
        if validate_system(&system, limits)?.valid {
            systems.push(system);
        }
    }
    Ok(systems)
}

#[allow(clippy::too_many_arguments)]
fn search_subsets(
    m: &PermGroup,
    candidates: &[(PermGroup, usize)],
    start: usize,
    chosen: &mut Vec<usize>,
    meet: &PermGroup,
    product: usize,
    degree: usize,
    bound: usize,
    limits: &Limits,
    found: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if product == degree {
        if chosen.len() >= 2 {
            found.push(chosen.clone());
        }
        return Ok(());
    }
    if chosen.len() == bound {
        return Ok(());
    }
    for i in start..candidates.len() {
        let (k, idx) = &candidates[i];
        if !degree.is_multiple_of(product * idx) {
            continue;
        }
        let next = intersect(meet, k, limits)?;
        if m.order() / next.order() != (product * idx) as u128 {
            continue;
        }
        chosen.push(i);
        search_subsets(
            m,
            candidates,
            i + 1,
            chosen,
            &next,
            product * idx,
            degree,
            bound,
            limits,
            found,
        )?;
        chosen.pop();
    }
    Ok(())
}

/// All `G`-invariant Cartesian decompositions of index at least 2, sorted by index and then
/// by partitions.
pub fn enumerate_cartesian_decompositions(
    g: &PermGroup,
    omega: usize,
    options: &EnumerateOptions,
) -> Result<Vec<CartesianDecomposition>> {
    let mut out = cartesian_systems(g, omega, options)?
        .iter()
        .map(|k| to_decomposition(k, &options.limits))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.index(), a).cmp(&(b.index(), b)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTripReport {
    pub decompositions: usize,
    pub systems: usize,
    /// `to_decomposition(to_system(E)) = E` for every decomposition.
    pub decomposition_to_system: bool,
    /// `to_system(to_decomposition(K)) = K` for every system.
    pub system_to_decomposition: bool,
    /// Distinct systems give distinct decompositions.
    pub injective: bool,
    /// The decomposition→system map preserves `G_ω`-orbits on both sides.
    pub equivariant: bool,
    pub holds: bool,
}

/// Checks the correspondence between decompositions and systems in both directions.
pub fn round_trip_check(
    g: &PermGroup,
    omega: usize,
    options: &EnumerateOptions,
) -> Result<RoundTripReport> {
    let limits = &options.limits;
    let m = resolve_plinth(g, options)?;
    let systems = cartesian_systems(g, omega, options)?;
    let decomps = systems
        .iter()
        .map(|k| to_decomposition(k, limits))
        .collect::<Result<Vec<_>>>()?;

    let mut forward = true;
    for e in &decomps {
        let k = to_system(&m, e, omega, limits)?;
        forward &= to_decomposition(&k, limits)? == *e;
    }
    let mut backward = true;
    for (k, e) in systems.iter().zip(&decomps) {
        backward &= to_system(&m, e, omega, limits)?.same_as(k);
    }
    let mut injective = true;
    for i in 0..decomps.len() {
        for j in i + 1..decomps.len() {
            injective &= decomps[i] != decomps[j] && !systems[i].same_as(&systems[j]);
        }
    }
    let g_stab = g.point_stabiliser(omega)?;
    let mut equivariant = true;
    for e in &decomps {
        let k = to_system(&m, e, omega, limits)?;
        for x in g_stab.generators() {
            for (part, sub) in e.partitions().iter().zip(&k.subgroups) {
                let moved = part.image(x);
                equivariant &= match e.partitions().iter().position(|q| *q == moved) {
                    Some(j) => k.subgroups[j].same_group(&sub.conjugate(x)),
                    None => false,
                };
            }
        }
    }
    Ok(RoundTripReport {
        decompositions: decomps.len(),
        systems: systems.len(),
        decomposition_to_system: forward,
        system_to_decomposition: backward,
        injective,
        equivariant,
        holds: forward && backward && injective && equivariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn part(blocks: &[&[usize]]) -> Partition {
        Partition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn grid() -> CartesianDecomposition {
        CartesianDecomposition::new(vec![part(&[&[0, 1], &[2, 3]]), part(&[&[0, 2], &[1, 3]])])
            .unwrap()
    }

    fn klein() -> PermGroup {
        PermGroup::new(
            4,
            vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap()
    }

    #[test]
    fn grid_is_valid_and_repeated_partition_is_not() {
        let r = validate_decomposition(&grid(), &Limits::default()).unwrap();
        assert!(r.valid && r.homogeneous && r.compliant);
        assert_eq!(r.index, 2);
        let twice = part(&[&[0, 1], &[2, 3]]);
        let bad = CartesianDecomposition::new(vec![twice.clone(), twice]).unwrap();
        let r = validate_decomposition(&bad, &Limits::default()).unwrap();
        assert!(!r.valid);
        assert!(r.witness.is_some());
    }

    #[test]
    fn single_partition_is_representable_but_not_compliant() {
        let e = CartesianDecomposition::new(vec![Partition::singletons(3)]).unwrap();
        let r = validate_decomposition(&e, &Limits::default()).unwrap();
        assert!(r.valid && !r.compliant && !r.nontrivial);
    }

    #[test]
    fn invariance_of_grid() {
        let r = is_invariant(&klein(), &grid()).unwrap();
        assert!(r.invariant);
        assert_eq!(r.induced, vec![Some(vec![0, 1]), Some(vec![0, 1])]);
        let r = is_invariant(&PermGroup::symmetric(4), &grid()).unwrap();
        assert!(!r.invariant);
    }

    #[test]
    fn plinth_fixes_examples() {
        assert!(plinth_fixes_partitions(&klein(), &grid()).unwrap());
        let t = PermGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        assert!(!plinth_fixes_partitions(&t, &grid()).unwrap());
        assert_eq!(first_moved_partition(&t, &grid()).unwrap(), Some(1));
    }

    #[test]
    fn klein_grid_system() {
        let lim = Limits::default();
        let k = to_system(&klein(), &grid(), 0, &lim).unwrap();
        let expect = [p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])];
        for (sub, x) in k.subgroups.iter().zip(&expect) {
            assert_eq!(sub.order(), 2);
            assert!(sub.contains(x));
        }
        let r = validate_system(&k, &lim).unwrap();
        assert!(r.valid && r.homogeneous);
        assert_eq!(r.predicted_degree, 4);
        assert_eq!(to_decomposition(&k, &lim).unwrap(), grid());
        assert!(covariance_check(&klein(), &grid(), 0, &expect[0], &lim).unwrap());
        let law = check_meet_law(&k, &lim).unwrap();
        assert!(law.holds && law.explicit && law.index_multiplicative);
    }

    #[test]
    fn duplicated_subgroup_breaks_product_condition() {
        let lim = Limits::default();
        let k = PermGroup::new(4, vec![p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        let sys = CartesianSystem::new(klein(), 0, vec![k.clone(), k]).unwrap();
        let r = validate_system(&sys, &lim).unwrap();
        assert!(!r.valid);
        assert_eq!(r.failing_index, Some(0));
        assert!(matches!(
            to_decomposition(&sys, &lim),
            Err(Error::InvalidSystem(_))
        ));
    }

    #[test]
    fn enumeration_small_cases() {
        let opts = EnumerateOptions::default();
        let s4 = enumerate_cartesian_decompositions(&PermGroup::symmetric(4), 0, &opts).unwrap();
        assert!(s4.is_empty());
        let opts = EnumerateOptions {
            plinth: Some(klein()),
            ..Default::default()
        };
        let v = enumerate_cartesian_decompositions(&klein(), 0, &opts).unwrap();
        assert_eq!(v.len(), 3);
        let rt = round_trip_check(&klein(), 0, &opts).unwrap();
        assert!(rt.holds);
        assert_eq!(rt.decompositions, 3);
    }

    #[test]
    fn non_innately_transitive_is_rejected() {
        let err = enumerate_cartesian_decompositions(&klein(), 0, &EnumerateOptions::default());
        assert!(matches!(err, Err(Error::NotInnatelyTransitive)));
    }
}
