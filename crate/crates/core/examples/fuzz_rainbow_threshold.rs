//! Random surjective colorings with one color more than the extremal count
//! always contain a rainbow `M_k`.

use antiramsey::prelude::*;
use antiramsey::sampling::random_surjective_coloring;
use rayon::prelude::*;

fn main() -> Result<()> {
    let budget = SearchBudget::default();
    for (sizes, k, trials) in [(&[5, 5][..], 3, 100u64), (&[5, 5, 5], 3, 50)] {
        let profile = PartProfile::new(sizes)?;
        let q = ((k - 2) * profile.tail_product() + 2) as u32;
        let outcomes: Vec<SearchOutcome> = (0..trials)
            .into_par_iter()
            .map(|i| {
                let c = random_surjective_coloring(&profile, q, 2024, i).unwrap();
                find_rainbow_k(&c, k, Strategy::slice_guided(), &budget).outcome
            })
            .collect();
        let found = outcomes.iter().filter(|o| o.is_found()).count();
        println!("{profile} k={k} q={q}: {found}/{trials} contain a rainbow M_{k}");
    }
    Ok(())
}
