//! Cyclic slices along two equal parts: each slice is a copy of the host
//! with one of them deleted, and matchings move back and forth unchanged.

use antiramsey::prelude::*;
use antiramsey::sampling::random_surjective_coloring;

fn main() -> Result<()> {
    // stored as 2x3x3, so the equal parts are 2 and 3
    let profile = PartProfile::new(&[3, 3, 2])?;
    let coloring = random_surjective_coloring(&profile, 7, 11, 0)?;
    let slices = cyclic_slices_colored(&coloring, (2, 3))?;

    for view in &slices {
        println!("{}", serde_json::to_string(&view.report())?);
    }

    let view = &slices[0];
    let inherited = view.inherited_coloring().unwrap();
    let best = max_rainbow_matching(inherited, &SearchBudget::default());
    let lifted = view.lift_matching(&best.matching).unwrap();
    println!(
        "\nslice {} ({}): rainbow matching {:?} lifts to {:?}",
        view.shift,
        view.projected_profile(),
        best.matching.edge_strings(view.projected_profile()),
        lifted.edge_strings(&profile)
    );
    let mut carried: Vec<u32> = inherited
        .colors_of(best.matching.ids())
        .iter()
        .map(|&c| view.host_color(c).unwrap())
        .collect();
    carried.sort_unstable();
    println!("colors: {carried:?} -> {:?}", coloring.colors_of(lifted.ids()));

    match cyclic_slices(&SubHypergraph::complete(&PartProfile::new(&[2, 3])?), (1, 2)) {
        Err(e) => println!("\n2x3 along (1,2): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
