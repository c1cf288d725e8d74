use antiramsey::prelude::*;

fn main() -> Result<()> {
    let budget = SearchBudget::default();

    let host = SubHypergraph::complete(&PartProfile::new(&[2, 2, 2])?);
    let best = max_matching(&host, &budget);
    println!("complete 2x2x2: matching {:?} (optimal: {})", best.matching.edge_strings(host.profile()), best.optimal);

    // K_{2,3,3}: every edge meets one of two vertices, so no 3-matching.
    let profile = PartProfile::new(&[3, 3, 3])?;
    let turan = build_turan_extremal(&profile, 3)?;
    println!("turan 3x3x3, k=3: {} edges, max matching {}", turan.len(), max_matching(&turan, &budget).matching.len());
    match has_k_matching(&turan, 3, &budget) {
        SearchOutcome::Absent => println!("  no 3-matching (search completed)"),
        other => println!("  unexpected: {}", other.label()),
    }

    let v = Vertex::new(1, 1);
    let without = host.remove_vertex(v)?;
    println!("\n2x2x2 minus {v}: {} edges (degree was {})", without.len(), host.degree(v)?);
    println!("codegree of v[1,1], v[2,1]: {}", host.codegree(v, Vertex::new(2, 1))?);

    // Matching number 4, but every cheap bound allows 5: a tiny node cap
    // leaves the answer open instead of guessing.
    let p5 = PartProfile::new(&[5, 5, 5])?;
    let cross = SubHypergraph::from_fn(&p5, |id| {
        let e = p5.edge_unrank(id).unwrap();
        e.coords[0] <= 2 || e.coords[1] <= 2
    });
    println!("\n5-matching with 3 nodes: {}", has_k_matching(&cross, 5, &SearchBudget::with_nodes(3)).label());
    println!("5-matching with default budget: {}", has_k_matching(&cross, 5, &budget).label());
    Ok(())
}
