//! Block systems of transitive groups and the stabilisers of the blocks through a point.

use cartesian_decomp::blocks::block_stabiliser;
use cartesian_decomp::normal::is_innately_transitive;
use cartesian_decomp::{block_systems, Limits, PermGroup, Permutation};

fn main() -> cartesian_decomp::Result<()> {
    let limits = Limits::default();
    // the cube's rotation group acting on its 8 vertices
    let vertices = PermGroup::new(
        8,
        vec![
            Permutation::from_cycles(8, &[&[0, 1, 3, 2], &[4, 5, 7, 6]])?,
            Permutation::from_cycles(8, &[&[0, 1, 5, 4], &[2, 3, 7, 6]])?,
        ],
    )?;
    println!("cube rotations, order {}", vertices.order());
    let stab = vertices.point_stabiliser(0)?;
    for s in block_systems(&vertices, 0, &limits)? {
        let k = block_stabiliser(&vertices, &stab, 0, &s.block)?;
        println!(
            "  block {:?}  partition {:?}  stabiliser order {}{}",
            s.block,
            s.partition,
            k.order(),
            if s.trivial { "  (trivial)" } else { "" }
        );
    }
    let s4 = PermGroup::symmetric(4);
    let report = is_innately_transitive(&s4, &limits)?;
    println!(
        "S4 on 4 points: innately transitive {}, quasiprimitive {}, minimal normal orders {:?}",
        report.innately_transitive, report.quasiprimitive, report.minimal_normal_orders
    );
    Ok(())
}
