//! Bundled cases with expected values, and the pipeline that recomputes them.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::action::CosetAction;
use crate::blocks::block_systems;
use crate::cartesian::{
    check_meet_law, covariance_check, enumerate_cartesian_decompositions, is_invariant,
    plinth_fixes_partitions, round_trip_check, to_decomposition, validate_decomposition,
    validate_system, CartesianSystem, EnumerateOptions,
};
use crate::error::{Error, Result};
use crate::factor::{
    are_conjugate, conjugation_transitivity_check, equivalent_factorisations, is_factorisation,
    is_full_factorisation, is_strong_multiple_factorisation, Automorphism,
};
use crate::group::{Limits, PermGroup};
use crate::io::GroupSpec;
use crate::normal::{
    centraliser_in_symmetric_group, derived_subgroup, is_innately_transitive, normaliser,
};
use crate::perm::Permutation;
use crate::search::intersect;
use crate::wreath::full_stabiliser;

const MANIFEST: &str = include_str!("../data/manifest.json");

const FILES: &[(&str, &str)] = &[
    ("a6_36.json", include_str!("../data/a6_36.json")),
    ("klein_grid.json", include_str!("../data/klein_grid.json")),
    ("m12_144.json", include_str!("../data/m12_144.json")),
    ("sp62_63.json", include_str!("../data/sp62_63.json")),
];

/// One row of the case list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub citation: String,
    pub desk_scale: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// All cases, including rows recorded for reference only, sorted by name.
pub fn list_cases() -> Vec<CaseSummary> {
    let mut cases: Vec<CaseSummary> = serde_json::from_str(MANIFEST).expect("bundled manifest");
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    cases
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    /// Two subgroups forming a Cartesian system of the coset action on their intersection.
    Decomposition,
    /// Three or more subgroups forming a strong multiple factorisation.
    MultipleFactorisation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedVariant {
    /// Which subgroup is replaced by its derived subgroup.
    pub replaced: usize,
    pub degree: u128,
    pub w: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub group_order: u128,
    pub subgroup_orders: Vec<u128>,
    pub intersection_order: u128,
    pub degree: u128,
    pub index: usize,
    #[serde(default)]
    pub cd_count: Option<usize>,
    pub homogeneous: bool,
    #[serde(default)]
    pub quasiprimitive: Option<bool>,
    pub w: String,
    #[serde(default)]
    pub w_order: Option<String>,
    #[serde(default)]
    pub block_counts: Option<Vec<u128>>,
    #[serde(default)]
    pub self_normalising_intersection: Option<bool>,
    #[serde(default)]
    pub derived_variants: Vec<DerivedVariant>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct SubgroupFile {
    name: String,
    generators: Vec<Permutation>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CaseFile {
    name: String,
    title: String,
    citation: String,
    kind: CaseKind,
    group: GroupSpec,
    subgroups: Vec<SubgroupFile>,
    #[serde(default)]
    automorphism: Option<Automorphism>,
    #[serde(default)]
    plinth_is_group: bool,
    expected: Expected,
}

#[derive(Clone, Debug)]
pub struct NamedSubgroup {
    pub name: String,
    pub group: PermGroup,
}

/// A loaded case whose group and subgroup orders have been recomputed and matched.
#[derive(Clone, Debug)]
pub struct CaseRecord {
    pub name: String,
    pub title: String,
    pub citation: String,
    pub kind: CaseKind,
    pub group_name: String,
    pub group: PermGroup,
    pub subgroups: Vec<NamedSubgroup>,
    pub automorphism: Option<Automorphism>,
    /// Use the whole group as the transitive normal subgroup.
    pub plinth_is_group: bool,
    pub expected: Expected,
}

/// Parses a case file and checks the recorded orders.
pub fn parse_case(text: &str) -> Result<CaseRecord> {
    let file: CaseFile = serde_json::from_str(text)?;
    let group = file.group.to_group()?;
    if group.order() != file.expected.group_order {
        return Err(Error::OrderMismatch {
            what: format!("{} group", file.name),
            expected: file.expected.group_order,
            computed: group.order(),
        });
    }
    if file.subgroups.len() != file.expected.subgroup_orders.len() {
        return Err(Error::InvalidInput(format!(
            "{}: {} subgroups but {} expected orders",
            file.name,
            file.subgroups.len(),
            file.expected.subgroup_orders.len()
        )));
    }
    let mut subgroups = Vec::new();
    for (s, &order) in file.subgroups.iter().zip(&file.expected.subgroup_orders) {
        let h = PermGroup::new(group.degree(), s.generators.clone())?;
        if h.order() != order {
            return Err(Error::OrderMismatch {
                what: format!("{} subgroup {}", file.name, s.name),
                expected: order,
                computed: h.order(),
            });
        }
        if !h.is_subgroup_of(&group) {
            return Err(Error::NotSubgroup(format!(
                "{} subgroup {}",
                file.name, s.name
            )));
        }
        subgroups.push(NamedSubgroup {
            name: s.name.clone(),
            group: h,
        });
    }
    Ok(CaseRecord {
        name: file.name,
        title: file.title,
        citation: file.citation,
        kind: file.kind,
        group_name: file.group.name.unwrap_or_default(),
        group,
        subgroups,
        automorphism: file.automorphism,
        plinth_is_group: file.plinth_is_group,
        expected: file.expected,
    })
}

fn summary(name: &str) -> Result<CaseSummary> {
    list_cases()
        .into_iter()
        .find(|c| c.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownCase(name.to_owned()))
}

/// Loads a bundled desk-scale case by name.
pub fn load_case(name: &str) -> Result<CaseRecord> {
    load_case_from(None, name)
}

/// Loads a case, preferring a same-named file in `dir` over the bundled copy.
pub fn load_case_from(dir: Option<&Path>, name: &str) -> Result<CaseRecord> {
    let row = summary(name)?;
    let Some(file) = row.file else {
        return Err(Error::UnknownCase(format!(
            "{} is recorded for reference only and has no generator data",
            row.name
        )));
    };
    if let Some(path) = dir.map(|d| d.join(&file)).filter(|p| p.exists()) {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return parse_case(&text);
    }
    let text = FILES
        .iter()
        .find(|(f, _)| *f == file)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::UnknownCase(row.name.clone()))?;
    parse_case(text)
}

/// One recomputed quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub citation: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: ToString + PartialEq>(&mut self, quantity: &str, expected: T, computed: T) {
        self.0.push(Check {
            quantity: quantity.to_owned(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
        });
    }

    fn truth(&mut self, quantity: &str, computed: bool) {
        self.eq(quantity, true, computed);
    }
}

/// `S_n wr S_ℓ` for equal counts, otherwise `S_{n₁} x S_{n₂} x ⋯`.
pub fn describe_stabiliser(block_counts: &[u128]) -> String {
    if block_counts.len() > 1 && block_counts.iter().all(|&c| c == block_counts[0]) {
        format!("S{} wr S{}", block_counts[0], block_counts.len())
    } else {
        block_counts
            .iter()
            .map(|c| format!("S{c}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Whether `h` is maximal in `g`, i.e. `g` is primitive on the cosets of `h`.
pub fn is_maximal(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<bool> {
    if h.order() == g.order() {
        return Ok(false);
    }
    let action = CosetAction::new(g, h, limits)?;
    Ok(block_systems(action.image(), 0, limits)?
        .iter()
        .all(|s| s.trivial))
}

/// Recomputes every recorded quantity of a case.
pub fn verify_case(case: &CaseRecord, limits: &Limits) -> Result<VerifyReport> {
    let mut c = Checks::default();
    let exp = &case.expected;
    let t = &case.group;
    let subs: Vec<PermGroup> = case.subgroups.iter().map(|s| s.group.clone()).collect();
    c.eq("|T|", exp.group_order, t.order());
    c.eq(
        "subgroup orders",
        format!("{:?}", exp.subgroup_orders),
        format!(
            "{:?}",
            subs.iter().map(PermGroup::order).collect::<Vec<_>>()
        ),
    );
    c.eq("index", exp.index, subs.len());
    let counts: Vec<u128> = subs.iter().map(|k| t.order() / k.order()).collect();
    if let Some(bc) = &exp.block_counts {
        c.eq("block counts", format!("{bc:?}"), format!("{counts:?}"));
    }
    c.eq("W", exp.w.clone(), describe_stabiliser(&counts));
    c.eq("|Ω| = ∏ |T:K_i|", exp.degree, counts.iter().product());
    for s in &case.subgroups {
        c.truth(
            &format!("{} maximal", s.name),
            is_maximal(t, &s.group, limits)?,
        );
    }
    match case.kind {
        CaseKind::Decomposition => verify_decomposition_case(case, &subs, limits, &mut c)?,
        CaseKind::MultipleFactorisation => verify_multiple_case(case, &subs, limits, &mut c)?,
    }
    Ok(VerifyReport {
        name: case.name.clone(),
        citation: case.citation.clone(),
        passed: c.0.iter().all(|x| x.pass),
        checks: c.0,
    })
}

fn verify_decomposition_case(
    case: &CaseRecord,
    subs: &[PermGroup],
    limits: &Limits,
    c: &mut Checks,
) -> Result<()> {
    let exp = &case.expected;
    let t = &case.group;
    let (a, b) = match subs {
        [a, b] => (a, b),
        _ => {
            return Err(Error::InvalidInput(
                "a decomposition case needs two subgroups".into(),
            ))
        }
    };
    let meet = intersect(a, b, limits)?;
    c.eq("|A ∩ B|", exp.intersection_order, meet.order());
    c.truth("T = AB", is_factorisation(t, a, b, limits)?.holds);
    c.truth("T = AB full", is_full_factorisation(t, a, b, limits)?.holds);
    c.truth(
        "A transitive on B^T",
        conjugation_transitivity_check(t, a, b, limits)?,
    );
    c.truth(
        "B transitive on A^T",
        conjugation_transitivity_check(t, b, a, limits)?,
    );
    if let Some(expected) = exp.self_normalising_intersection {
        let n = normaliser(t, &meet, limits)?;
        c.eq("N_T(A ∩ B) = A ∩ B", expected, n.order() == meet.order());
    }
    if let Some(beta) = &case.automorphism {
        let applied = beta.prepare(t)?;
        let (a2, b2) = (applied.apply_to_subgroup(a)?, applied.apply_to_subgroup(b)?);
        c.truth(
            "automorphism interchanges the classes of A and B",
            are_conjugate(t, &a2, b, limits)? && are_conjugate(t, &b2, a, limits)?,
        );
        c.truth(
            "(A, B) equivalent to (B, A)",
            equivalent_factorisations(t, (a, b), (b, a), std::slice::from_ref(beta), limits)?,
        );
    }

    // the action on the cosets of A ∩ B; coset 0 is A ∩ B itself, so it is the base point
    let action = CosetAction::new(t, &meet, limits)?;
    let g = action.image().clone();
    c.eq("|Ω|", exp.degree, action.degree() as u128);
    c.truth("transitive", g.is_transitive());
    c.eq("faithful", t.order(), g.order());
    c.eq(
        "|T_ω|",
        exp.intersection_order,
        g.point_stabiliser(0)?.order(),
    );
    let centraliser = centraliser_in_symmetric_group(&g)?;
    if let Some(q) = exp.quasiprimitive {
        let innate = is_innately_transitive(&g, limits)?;
        c.eq("quasiprimitive", q, innate.quasiprimitive);
        c.eq("trivial centraliser in Sym(Ω)", q, centraliser.is_trivial());
    }

    let system =
        CartesianSystem::new(g.clone(), 0, vec![action.image_of(a)?, action.image_of(b)?])?;
    let sr = validate_system(&system, limits)?;
    c.truth("system valid", sr.valid);
    c.eq("system homogeneous", exp.homogeneous, sr.homogeneous);
    c.eq("system predicted |Ω|", exp.degree, sr.predicted_degree);
    let law = check_meet_law(&system, limits)?;
    c.truth("index multiplicativity", law.index_multiplicative);
    c.truth("meet law", law.holds);

    let e = to_decomposition(&system, limits)?;
    let dr = validate_decomposition(&e, limits)?;
    c.truth("decomposition valid", dr.valid);
    c.eq("decomposition index", exp.index, dr.index);
    c.eq("decomposition homogeneous", exp.homogeneous, dr.homogeneous);
    c.truth(
        "T preserves the decomposition",
        is_invariant(&g, &e)?.invariant,
    );
    c.truth("T fixes every partition", plinth_fixes_partitions(&g, &e)?);

    let options = EnumerateOptions {
        plinth: case.plinth_is_group.then(|| g.clone()),
        limits: limits.clone(),
    };
    let all = enumerate_cartesian_decompositions(&g, 0, &options)?;
    if let Some(cd) = exp.cd_count {
        c.eq("|cd G|", cd, all.len());
    }
    c.truth("decomposition enumerated", all.contains(&e));
    let rt = round_trip_check(&g, 0, &options)?;
    c.truth("bijection round trip", rt.holds);
    for m in g.generators() {
        c.truth("covariance", covariance_check(&g, &e, 0, m, limits)?);
    }
    if let Some(w_order) = &exp.w_order {
        let w = full_stabiliser(&e, limits)?;
        c.eq("|W|", w_order.clone(), w.order().to_string());
        c.truth("T ≤ W", g.is_subgroup_of(&w));
    }
    Ok(())
}

fn verify_multiple_case(
    case: &CaseRecord,
    subs: &[PermGroup],
    limits: &Limits,
    c: &mut Checks,
) -> Result<()> {
    let exp = &case.expected;
    let t = &case.group;
    let r = is_strong_multiple_factorisation(t, subs, limits)?;
    c.truth("strong multiple factorisation", r.holds);
    for (i, &ok) in r.products.iter().enumerate() {
        c.truth(&format!("K_{i} (∩_(j≠{i}) K_j) = T"), ok);
    }
    c.eq("|∩ K_i|", exp.intersection_order, r.intersection_order);
    c.eq("predicted |Ω|", exp.degree, r.index_product);
    let homogeneous = r.subgroup_orders.iter().all(|&o| o == r.subgroup_orders[0]);
    c.eq("homogeneous", exp.homogeneous, homogeneous);
    for v in &exp.derived_variants {
        let mut varied = subs.to_vec();
        let k = subs
            .get(v.replaced)
            .ok_or_else(|| Error::InvalidInput(format!("no subgroup {}", v.replaced)))?;
        varied[v.replaced] = derived_subgroup(k)?;
        let name = &case.subgroups[v.replaced].name;
        c.eq(
            &format!("|{name} : {name}'|"),
            2,
            k.order() / varied[v.replaced].order(),
        );
        let r = is_strong_multiple_factorisation(t, &varied, limits)?;
        c.truth(
            &format!("strong multiple factorisation with {name}'"),
            r.holds,
        );
        c.eq(
            &format!("predicted |Ω| with {name}'"),
            v.degree,
            r.index_product,
        );
        let counts: Vec<u128> = varied.iter().map(|k| t.order() / k.order()).collect();
        c.eq(
            &format!("W with {name}'"),
            v.w.clone(),
            describe_stabiliser(&counts),
        );
    }
    Ok(())
}
