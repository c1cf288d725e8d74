//! Exhaustive `ex(K, M_k)` with the isomorphism classes of all maximizers.

use antiramsey::oracles::{ex_exact, Canonizer};
use antiramsey::prelude::*;

fn main() -> Result<()> {
    let limits = OracleLimits::default();
    for (sizes, k) in [(&[2, 2][..], 2), (&[2, 3], 2), (&[3, 3], 2), (&[3, 3], 3), (&[2, 2, 2], 2), (&[3, 3, 3], 2)] {
        let profile = PartProfile::new(sizes)?;
        let ex = ex_exact(&profile, k, &limits);
        let turan = build_turan_extremal(&profile, k)?;
        let canon = Canonizer::new(&profile, limits.group_cap)?;
        let turan_label = canon.label_sub(&turan);
        println!(
            "{profile} k={k}: ex = {} (formula {}), {} maximizers, method {:?}",
            ex.value,
            (k - 1) * profile.tail_product(),
            ex.maximizers,
            ex.method
        );
        for (label, sub) in ex.extremal.as_ref().unwrap() {
            let edges: Vec<String> = sub.iter().map(|id| profile.edge_string(id)).collect();
            let tag = if *label == turan_label { "turan" } else { "other" };
            println!(
                "   [{tag}] {} isolated={}",
                edges.join(" "),
                sub.isolated_vertices().len()
            );
        }
    }
    Ok(())
}
