//! From a Cartesian decomposition to its system of block stabilisers and back.

use cartesian_decomp::cartesian::{check_meet_law, covariance_check};
use cartesian_decomp::wreath::product_action_base_group;
use cartesian_decomp::{
    to_decomposition, to_system, validate_decomposition, validate_system, Limits, WreathSpec,
};

fn main() -> cartesian_decomp::Result<()> {
    let limits = Limits::default();
    let spec: WreathSpec = "wr:3^2".parse()?;
    // S3 x S3 acting on the 3x3 grid
    let m = product_action_base_group(&spec, &limits)?;
    let (_, grid) = cartesian_decomp::product_action_wreath(&spec, &limits)?;
    println!("grid {:?}", grid);
    println!("{:?}", validate_decomposition(&grid, &limits)?);

    let system = to_system(&m, &grid, 0, &limits)?;
    let orders: Vec<u128> = system.subgroups.iter().map(|k| k.order()).collect();
    println!("block stabilisers at 0 have orders {orders:?}");
    let report = validate_system(&system, &limits)?;
    println!(
        "intersection {} (point stabiliser {}), predicted degree {}",
        report.intersection_order, report.point_stabiliser_order, report.predicted_degree
    );
    println!("{:?}", check_meet_law(&system, &limits)?);

    let back = to_decomposition(&system, &limits)?;
    println!("recovered the grid: {}", back == grid);
    for g in m.generators() {
        println!(
            "moving the point by {g}: systems conjugate {}",
            covariance_check(&m, &grid, 0, g, &limits)?
        );
    }
    Ok(())
}
