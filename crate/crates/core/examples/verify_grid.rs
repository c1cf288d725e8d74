//! Runs the default grid and prints the summary table.

use antiramsey::oracles::{default_grid, write_csv, ClaimStatus};
use antiramsey::prelude::*;

fn main() -> Result<()> {
    let reports = verify_grid(&default_grid(), &OracleLimits::default());
    write_csv(&reports, std::io::stdout())?;
    for r in &reports {
        for c in &r.claims {
            if c.status == ClaimStatus::Failed {
                println!("{} k={} {:?}: {}", r.profile, r.k, c.claim, c.detail);
                if let Some(cx) = &c.counterexample {
                    println!("   {cx}");
                }
            }
        }
    }
    Ok(())
}
