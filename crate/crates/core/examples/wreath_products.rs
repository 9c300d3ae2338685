//! Product-action wreath products, point encoding and full stabilisers.

use cartesian_decomp::cartesian::is_invariant;
use cartesian_decomp::partition::Partition;
use cartesian_decomp::wreath::full_stabiliser_with_shape;
use cartesian_decomp::{product_action_wreath, CartesianDecomposition, Limits, WreathSpec};

fn main() -> cartesian_decomp::Result<()> {
    let limits = Limits::default();
    for text in ["wr:2^2", "wr:3^2", "wr:2^3", "wr:6^2", "wr:4^3"] {
        let spec: WreathSpec = text.parse()?;
        let (w, e) = product_action_wreath(&spec, &limits)?;
        let swaps = is_invariant(&w, &e)?.induced;
        println!(
            "{spec}: degree {}, order {}, generator actions on the partitions {:?}",
            w.degree(),
            w.order(),
            swaps
        );
    }
    let spec = WreathSpec::new(3, 2)?;
    for t in [[0, 0], [1, 2], [2, 0]] {
        println!("{t:?} -> {}", spec.encode(&t)?);
    }

    // a 2 x 3 grid laid out column by column
    let e = CartesianDecomposition::new(vec![
        Partition::from_labels(&[0, 1, 0, 1, 0, 1]),
        Partition::from_labels(&[0, 0, 1, 1, 2, 2]),
    ])?;
    let s = full_stabiliser_with_shape(&e, &limits)?;
    println!(
        "2 x 3 grid: stabiliser order {} with shape {:?}",
        s.group.order(),
        s.shape
    );
    Ok(())
}
