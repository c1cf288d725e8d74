use antiramsey::oracles::{ar_exact, check_uniqueness_coloring};
use antiramsey::prelude::*;

fn main() -> Result<()> {
    let limits = OracleLimits::default();
    for (sizes, k) in [(&[2, 2][..], 2), (&[2, 3], 2), (&[2, 2, 2], 2), (&[3, 3], 3), (&[3, 4], 3), (&[4, 4], 3)] {
        let profile = PartProfile::new(sizes)?;
        let ar = ar_exact(&profile, k, &limits)?;
        println!(
            "{profile} k={k}: ar = {} ({} maximizing colorings, {} classes, {} nodes)",
            ar.value,
            ar.maximizers,
            ar.labels().map_or(0, |l| l.len()),
            ar.nodes
        );
        if k >= 3 {
            let u = check_uniqueness_coloring(&profile, k, &limits)?;
            println!("   {} colors: {} classes, unique: {:?}", u.q, u.witness_labels.len(), u.unique);
            if let Some(doc) = &u.counterexample {
                let cx = EdgeColoring::from_doc(doc)?;
                let n2 = profile.size(2);
                for row in cx.raw_colors().chunks(n2) {
                    println!("     {row:?}");
                }
            }
        }
    }
    Ok(())
}
