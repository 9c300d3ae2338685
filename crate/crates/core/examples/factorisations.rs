//! Factorisations of A6 and M12 and a strong multiple factorisation.

use cartesian_decomp::factor::conjugation_transitivity_check;
use cartesian_decomp::{
    is_factorisation, is_full_factorisation, is_strong_multiple_factorisation, load_case, Limits,
    PermGroup, Permutation,
};

fn main() -> cartesian_decomp::Result<()> {
    let limits = Limits::default();
    for name in ["A6_36", "M12_144"] {
        let case = load_case(name)?;
        let (a, b) = (&case.subgroups[0].group, &case.subgroups[1].group);
        let r = is_full_factorisation(&case.group, a, b, &limits)?;
        println!(
            "{}: |A| |B| = {} · {}, |T| |A ∩ B| = {} · {}, full {}",
            case.group_name, r.a_order, r.b_order, r.group_order, r.intersection_order, r.holds
        );
        println!(
            "  A transitive on the class of B: {}",
            conjugation_transitivity_check(&case.group, a, b, &limits)?
        );
    }

    let s4 = PermGroup::symmetric(4);
    let s3 = s4.point_stabiliser(3)?;
    let c4 = PermGroup::new(4, vec![Permutation::new(vec![1, 2, 3, 0])?])?;
    let r = is_factorisation(&s4, &s3, &c4, &limits)?;
    println!(
        "S4 = S3 · C4: {}, primes {:?} {:?} {:?}",
        r.holds, r.group_primes, r.a_primes, r.b_primes
    );

    let sp = load_case("SP62_63")?;
    let subs: Vec<PermGroup> = sp.subgroups.iter().map(|s| s.group.clone()).collect();
    let r = is_strong_multiple_factorisation(&sp.group, &subs, &limits)?;
    println!(
        "{}: {:?} holds {}, index product {}",
        sp.group_name,
        sp.subgroups
            .iter()
            .map(|s| s.name.as_str())
            .collect::<Vec<_>>(),
        r.holds,
        r.index_product
    );
    Ok(())
}
