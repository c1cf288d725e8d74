use antiramsey::prelude::*;

fn main() -> Result<()> {
    let budget = SearchBudget::default();
    let profile = PartProfile::new(&[5, 5])?;
    let phi = build_phi_r(&profile, 3)?;

    let best = max_rainbow_matching(&phi, &budget);
    println!(
        "phi on 5x5, k=3: {} colors, max rainbow matching {} {:?}",
        phi.q(),
        best.matching.len(),
        best.matching.edge_strings(&profile)
    );

    // Give one shared-color edge a seventh color; a rainbow M_3 must appear.
    let mut colors = phi.raw_colors().to_vec();
    colors[24] = 7;
    let split = EdgeColoring::new(SubHypergraph::complete(&profile), colors)?;
    for strategy in [Strategy::Generic, Strategy::slice_guided()] {
        let found = find_rainbow_k(&split, 3, strategy, &budget);
        let witness = found.outcome.witness().expect("7 colors force a rainbow M_3");
        println!(
            "{strategy:?}: {:?} colors {:?} ({} nodes, slice {:?})",
            witness.edge_strings(&profile),
            split.colors_of(witness.ids()),
            found.nodes,
            found.via_slice
        );
    }

    let cube = PartProfile::new(&[5, 5, 5])?;
    let phi3 = build_phi_r(&cube, 3)?;
    let f = find_rainbow_k(&phi3, 3, Strategy::Generic, &budget);
    println!("phi on 5x5x5 ({} colors), rainbow M_3: {} after {} nodes", phi3.q(), f.outcome.label(), f.nodes);
    Ok(())
}
