//! Orders, bases and stabilisers of a few classical groups via their stabiliser chains.

use cartesian_decomp::{setwise_stabiliser, Limits, PermGroup, Permutation};

fn main() -> cartesian_decomp::Result<()> {
    let m12 = PermGroup::new(
        12,
        vec![
            Permutation::from_cycles(12, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]])?,
            Permutation::from_cycles(12, &[&[2, 6, 10, 7], &[3, 9, 4, 5]])?,
            Permutation::from_cycles(
                12,
                &[&[0, 11], &[1, 10], &[2, 5], &[3, 7], &[4, 8], &[6, 9]],
            )?,
        ],
    )?;
    for (name, g) in [
        ("S8", PermGroup::symmetric(8)),
        ("A9", PermGroup::alternating(9)),
        ("M12", m12.clone()),
    ] {
        println!(
            "{name:<4} order {:>7}  base {:?}  basic orbits {:?}",
            g.order(),
            g.base(),
            g.basic_orbit_lengths()
        );
    }
    let m11 = m12.point_stabiliser(11)?;
    println!("M12 point stabiliser: order {}", m11.order());
    let two = m12.pointwise_stabiliser(&[10, 11])?;
    println!("M12 two-point stabiliser: order {}", two.order());
    let set = setwise_stabiliser(&m12, &[0, 1, 2, 3, 4, 5], &Limits::default())?;
    println!("M12 stabiliser of a 6-set: order {}", set.order());
    Ok(())
}
