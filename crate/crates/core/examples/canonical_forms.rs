use antiramsey::oracles::{group_order, Canonize};
use antiramsey::prelude::*;

fn main() -> Result<()> {
    let profile = PartProfile::new(&[2, 2, 2])?;
    println!("|Aut(2x2x2)| = {}", group_order(&profile));

    // stars through v[1,1] and v[1,2]
    let a = SubHypergraph::from_fn(&profile, |id| profile.edge_unrank(id).unwrap().coords[0] == 1);
    let b = SubHypergraph::from_fn(&profile, |id| profile.edge_unrank(id).unwrap().coords[0] == 2);
    println!("star labels equal: {}", canonical_form(&a)? == canonical_form(&b)?);
    println!("label: {}", canonical_form(&a)?);

    let phi = build_phi_r(&PartProfile::new(&[3, 3])?, 3)?;
    let renamed = EdgeColoring::new(phi.domain().clone(), phi.raw_colors().iter().map(|c| 5 - c).collect())?;
    println!("phi vs renamed colors equal: {}", canonical_form(&phi)? == canonical_form(&renamed)?);

    let big = SubHypergraph::complete(&PartProfile::new(&[5, 5, 5])?);
    match big.canonical_form_with(10_000_000) {
        Err(e) => println!("5x5x5: {e}"),
        Ok(l) => println!("5x5x5: {l}"),
    }
    Ok(())
}
