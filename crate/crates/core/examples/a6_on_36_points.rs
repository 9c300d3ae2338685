//! A6 acting on 36 points preserves exactly one Cartesian decomposition.

use cartesian_decomp::action::CosetAction;
use cartesian_decomp::cartesian::round_trip_check;
use cartesian_decomp::normal::centraliser_in_symmetric_group;
use cartesian_decomp::{
    enumerate_cartesian_decompositions, full_stabiliser, intersect, EnumerateOptions, Limits,
    PermGroup, Permutation,
};

fn main() -> cartesian_decomp::Result<()> {
    let limits = Limits::default();
    let a6 = PermGroup::alternating(6);
    let five = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4]])?;
    // one A5 fixes a point, the other is transitive
    let a = PermGroup::new(
        6,
        vec![five.clone(), Permutation::from_cycles(6, &[&[0, 1, 2]])?],
    )?;
    let b = PermGroup::new(
        6,
        vec![five, Permutation::from_cycles(6, &[&[0, 5], &[1, 4]])?],
    )?;
    let meet = intersect(&a, &b, &limits)?;
    println!(
        "|A| = {}, |B| = {}, |A ∩ B| = {}",
        a.order(),
        b.order(),
        meet.order()
    );

    let action = CosetAction::new(&a6, &meet, &limits)?;
    let g = action.image();
    println!("action on {} cosets, order {}", action.degree(), g.order());
    println!(
        "centraliser in the symmetric group has order {}",
        centraliser_in_symmetric_group(g)?.order()
    );

    let found = enumerate_cartesian_decompositions(g, 0, &EnumerateOptions::default())?;
    println!("{} invariant decomposition(s)", found.len());
    for e in &found {
        println!("  index {}, block counts {:?}", e.index(), e.block_counts());
        println!(
            "  full stabiliser order {}",
            full_stabiliser(e, &limits)?.order()
        );
    }
    println!(
        "{:?}",
        round_trip_check(g, 0, &EnumerateOptions::default())?
    );
    Ok(())
}
