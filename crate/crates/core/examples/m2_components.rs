//! Disjointness components of complete hosts against `1` / `2^{t-1}`.

use antiramsey::oracles::{ar_m2_closed, ar_m2_formula};
use antiramsey::prelude::*;
use itertools::Itertools;

fn main() -> Result<()> {
    println!("{:<10} {:>10} {:>8}", "profile", "components", "formula");
    for r in 2..=4 {
        for sizes in (0..r).map(|_| 2..=4usize).multi_cartesian_product() {
            if !sizes.windows(2).all(|w| w[0] <= w[1]) {
                continue;
            }
            let profile = PartProfile::new(&sizes)?;
            let comps = ar_m2_closed(&profile);
            let formula = ar_m2_formula(&profile).unwrap();
            let mark = if comps == formula { "" } else { "  MISMATCH" };
            println!("{:<10} {comps:>10} {formula:>8}{mark}", profile.to_string());
        }
    }

    let profile = PartProfile::new(&[2, 2])?;
    let parts = disjointness_components(&SubHypergraph::complete(&profile));
    println!("\nclasses of 2x2:");
    for class in &parts.classes {
        println!("  {}", class.iter().map(|&id| profile.edge_string(id)).join(" "));
    }
    Ok(())
}
