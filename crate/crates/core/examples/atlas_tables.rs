//! Lists the bundled cases and re-verifies the ones small enough to compute.

use cartesian_decomp::{list_cases, load_case, verify_case, Limits};

fn main() -> cartesian_decomp::Result<()> {
    for row in list_cases() {
        if !row.desk_scale {
            println!(
                "{:<11} {:<45} reference only: {}",
                row.name,
                row.citation,
                row.expected.get("degree").map_or("", |d| d)
            );
            continue;
        }
        let case = load_case(&row.name)?;
        let report = verify_case(&case, &Limits::default())?;
        let failed = report.checks.iter().filter(|c| !c.pass).count();
        println!(
            "{:<11} {:<45} {} checks, {} failed",
            row.name,
            row.citation,
            report.checks.len(),
            failed
        );
    }
    Ok(())
}
