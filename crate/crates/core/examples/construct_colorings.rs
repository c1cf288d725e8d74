//! Builds the extremal objects on a few hosts and prints their sizes.
//!
//! ```text
//! cargo run --example construct_colorings
//! ```

use antiramsey::prelude::*;

fn main() -> Result<()> {
    for (sizes, k) in [(&[5, 5][..], 3), (&[5, 5, 5], 3), (&[3, 3], 3), (&[2, 2, 2], 2)] {
        let profile = PartProfile::new(sizes)?;
        let turan = build_turan_extremal(&profile, k)?;
        let phi = build_phi_r(&profile, k)?;
        let rep = representing_subhypergraph(&phi, Selector::MinRank);
        println!(
            "{profile:>7} k={k}: turan {} edges, phi {} colors, representing {} edges",
            turan.len(),
            phi.q(),
            rep.len()
        );
    }

    let profile: PartProfile = "2x2x2".parse()?;
    let family = QClassFamily::new(&profile)?;
    let qclass = build_qclass_coloring(&profile)?;
    println!("\nQ-classes on {profile} (t = {}):", family.t);
    for (alpha, bar) in &family.classes {
        println!("  {alpha:?} ~ {bar:?}");
    }
    for id in profile.edges() {
        println!("  {} -> color {}", profile.edge_string(id), qclass.color(id).unwrap());
    }

    let json = serde_json::to_string(&build_phi_r(&"3x3".parse()?, 3)?.to_doc())?;
    println!("\nphi on 3x3, k=3: {json}");
    Ok(())
}
