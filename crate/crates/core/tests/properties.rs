use antiramsey::oracles::{ar_exact, ex_exact, ar_m2_closed, Canonizer, HostAutomorphism, OracleValue};
use antiramsey::prelude::*;
use antiramsey::sampling::{random_surjective_coloring, stream};
use itertools::Itertools;
use proptest::prelude::{any, prop, prop_assert, prop_assert_eq, prop_assume, proptest, ProptestConfig};
use proptest::strategy::Strategy as Gen;
use rand::Rng;

fn profiles(max_parts: usize, max_size: usize, max_edges: usize) -> Vec<PartProfile> {
    let mut out = Vec::new();
    for r in 2..=max_parts {
        for sizes in (0..r).map(|_| 1..=max_size).multi_cartesian_product() {
            if sizes.windows(2).all(|w| w[0] <= w[1]) && sizes.iter().product::<usize>() <= max_edges {
                out.push(PartProfile::new(&sizes).unwrap());
            }
        }
    }
    out
}

fn brute_matching_number(sub: &SubHypergraph) -> usize {
    let ids = sub.ids();
    let p = sub.profile();
    let masks: Vec<u128> = ids.iter().map(|&id| p.edge_mask(id)).collect();
    (0u32..1 << ids.len())
        .filter(|set| {
            let mut covered = 0u128;
            (0..ids.len()).filter(|i| set >> i & 1 == 1).all(|i| {
                let ok = covered & masks[i] == 0;
                covered |= masks[i];
                ok
            })
        })
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn profile_strategy(max_edges: usize) -> impl Gen<Value = PartProfile> {
    prop::collection::vec(1usize..=5, 2..=4)
        .prop_filter("edge cap", move |s| s.iter().product::<usize>() <= max_edges)
        .prop_map(|s| PartProfile::new(&s).unwrap())
}

fn sub_strategy(max_edges: usize) -> impl Gen<Value = SubHypergraph> {
    profile_strategy(max_edges).prop_flat_map(|p| {
        let m = p.edge_count();
        prop::collection::vec(any::<bool>(), m)
            .prop_map(move |keep| SubHypergraph::from_fn(&p, |id| keep[id.0]))
    })
}

#[test]
fn rank_round_trip_on_every_small_profile() {
    for p in profiles(4, 6, 100_000) {
        assert_eq!(SubHypergraph::complete(&p).len(), p.sizes().iter().product::<usize>());
        for id in p.edges() {
            let e = p.edge_unrank(id).unwrap();
            assert_eq!(p.edge_rank(&e).unwrap(), id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sums_and_codegree(sub in sub_strategy(200)) {
        let p = sub.profile().clone();
        for part in 1..=p.r() {
            let total: usize = (1..=p.size(part)).map(|i| sub.degree(Vertex::new(part, i)).unwrap()).sum();
            prop_assert_eq!(total, sub.len());
        }
        let vertices: Vec<Vertex> = (1..=p.r()).flat_map(|s| (1..=p.size(s)).map(move |i| Vertex::new(s, i))).collect();
        for (&u, &v) in vertices.iter().tuple_combinations() {
            let cd = sub.codegree(u, v).unwrap();
            prop_assert!(cd <= sub.degree(u).unwrap().min(sub.degree(v).unwrap()));
            if u.part == v.part {
                prop_assert_eq!(cd, 0);
            }
        }
    }

    #[test]
    fn vertex_deletion_removes_degree(sub in sub_strategy(200), part in 1usize..=4, index in 1usize..=5) {
        let p = sub.profile();
        prop_assume!(part <= p.r() && index <= p.size(part));
        let v = Vertex::new(part, index);
        let rest = sub.remove_vertex(v).unwrap();
        prop_assert_eq!(sub.len() - rest.len(), sub.degree(v).unwrap());
    }

    #[test]
    fn max_matching_matches_brute_force(sub in sub_strategy(16)) {
        let r = max_matching(&sub, &SearchBudget::default());
        prop_assert!(r.optimal);
        prop_assert!(r.matching.is_valid(sub.profile()));
        prop_assert!(r.matching.ids().iter().all(|&id| sub.contains(id)));
        prop_assert_eq!(r.matching.len(), brute_matching_number(&sub));
        prop_assert!(r.matching.len() <= sub.profile().size(1));
    }

    #[test]
    fn rainbow_bounded_by_matching(seed in any::<u64>(), q in 1u32..12) {
        let p = PartProfile::new(&[3, 3, 4]).unwrap();
        let c = random_surjective_coloring(&p, q, seed, 0).unwrap();
        let rb = max_rainbow_matching(&c, &SearchBudget::default());
        let mm = max_matching(c.domain(), &SearchBudget::default());
        prop_assert!(rb.optimal && mm.optimal);
        prop_assert!(rb.matching.len() <= mm.matching.len());
        prop_assert!(c.is_rainbow(rb.matching.ids()));
    }
}

#[test]
fn injective_colorings_have_rainbow_number_equal_to_matching_number() {
    for p in profiles(3, 4, 64) {
        let c = EdgeColoring::from_classes(SubHypergraph::complete(&p), |id| id.0);
        let rb = max_rainbow_matching(&c, &SearchBudget::default());
        assert_eq!(rb.matching.len(), p.size(1), "{p}");
    }
}

#[test]
fn component_colorings_decide_rainbow_m2() {
    let budget = SearchBudget::default();
    for p in profiles(4, 4, 32) {
        let host = SubHypergraph::complete(&p);
        let comps = disjointness_components(&host);
        let constant = EdgeColoring::from_classes(host.clone(), |id| comps.class_of(id).unwrap());
        assert!(find_rainbow_k(&constant, 2, Strategy::Generic, &budget).outcome.is_absent(), "{p}");
        // recolor a single edge of a nontrivial class: a rainbow M_2 appears
        for (ci, class) in comps.classes.iter().enumerate() {
            if class.len() < 2 {
                continue;
            }
            for &e in class {
                let split = EdgeColoring::from_classes(host.clone(), |id| {
                    if id == e {
                        comps.len()
                    } else {
                        comps.class_of(id).unwrap()
                    }
                });
                assert!(split.q() as usize == comps.len() + 1, "{p} class {ci}");
                assert!(find_rainbow_k(&split, 2, Strategy::Generic, &budget).outcome.is_found(), "{p} edge {e:?}");
            }
        }
    }
}

#[test]
fn constructions_on_hosts_up_to_200_edges() {
    let budget = SearchBudget::default();
    for p in profiles(4, 6, 200) {
        let n1 = p.size(1);
        for k in 2..=n1 + 1 {
            let phi = build_phi_r(&p, k).unwrap();
            assert_eq!(phi.q() as usize, (k - 2) * p.tail_product() + 1);
            let rb = max_rainbow_matching(&phi, &budget);
            assert!(rb.optimal, "{p} k={k}");
            assert_eq!(rb.matching.len(), (k - 1).min(n1), "{p} k={k}");
            // the rainbow part of φ_r is the Turán construction for k − 1
            let rainbow_part: Vec<EdgeId> = phi.color_classes().into_iter().filter(|c| c.len() == 1).flatten().collect();
            if p.tail_product() > 1 {
                let t = build_turan_extremal(&p, k - 1).unwrap();
                assert_eq!(rainbow_part, t.ids(), "{p} k={k}");
            }
        }
        for k in 1..=n1 + 1 {
            let t = build_turan_extremal(&p, k).unwrap();
            assert_eq!(t.len(), (k - 1) * p.tail_product());
            assert!(has_k_matching(&t, k, &budget).is_absent(), "{p} k={k}");
            assert_eq!(max_matching(&t, &budget).matching.len(), k - 1);
        }
    }
}

#[test]
fn qclass_matches_components() {
    for p in profiles(4, 4, 256).into_iter().filter(|p| p.size(1) == 2) {
        let q = build_qclass_coloring(&p).unwrap();
        let comps = disjointness_components(&SubHypergraph::complete(&p));
        assert_eq!(q.q() as usize, comps.len(), "{p}");
        for class in &comps.classes {
            let colors = q.colors_of(class);
            assert_eq!(colors.len(), 1, "{p}");
        }
        assert_eq!(q.q() as usize, 1 << (p.twos_prefix().unwrap() - 1));
    }
}

#[test]
fn slices_partition_and_round_trip() {
    let mut rng = stream(7, 0);
    let hosts = [&[2, 2][..], &[3, 3], &[4, 4], &[2, 2, 3], &[3, 3, 4], &[3, 3, 3], &[2, 2, 2, 2], &[4, 4, 5]];
    for trial in 0..1000u64 {
        let p = PartProfile::new(hosts[trial as usize % hosts.len()]).unwrap();
        let sub = SubHypergraph::from_fn(&p, |_| rng.random_bool(0.7));
        let views = cyclic_slices(&sub, (1, 2)).unwrap();
        let mut seen = vec![0; p.edge_count()];
        for v in &views {
            for &id in v.host_edges() {
                seen[id.0] += 1;
                assert_eq!(v.lift(v.project(id).unwrap()), Some(id));
            }
            let best = max_matching(v.projected(), &SearchBudget::default());
            let up = v.lift_matching(&best.matching).unwrap();
            assert!(up.is_valid(&p));
            assert_eq!(v.project_matching(&up).unwrap(), best.matching);
        }
        for id in p.edges() {
            assert_eq!(seen[id.0], usize::from(sub.contains(id)));
        }
    }
}

#[test]
fn inherited_rainbow_matchings_lift_with_their_colors() {
    let hosts = [&[3, 3][..], &[4, 4], &[3, 3, 3], &[2, 2, 4], &[3, 3, 4]];
    for trial in 0..1000u64 {
        let p = PartProfile::new(hosts[trial as usize % hosts.len()]).unwrap();
        let q = 1 + (trial % p.edge_count() as u64) as u32;
        let c = random_surjective_coloring(&p, q, 99, trial).unwrap();
        for v in cyclic_slices_colored(&c, (1, 2)).unwrap() {
            let inherited = v.inherited_coloring().unwrap();
            assert_eq!(inherited.q() as usize, v.color_count());
            let rb = max_rainbow_matching(inherited, &SearchBudget::default());
            let up = v.lift_matching(&rb.matching).unwrap();
            assert!(c.is_rainbow(up.ids()));
            let mut carried: Vec<u32> = inherited
                .colors_of(rb.matching.ids())
                .iter()
                .map(|&x| v.host_color(x).unwrap())
                .collect();
            carried.sort_unstable();
            assert_eq!(carried, c.colors_of(up.ids()));
            // and back down
            let down = v.project_matching(&up).unwrap();
            assert!(inherited.is_rainbow(down.ids()));
        }
    }
}

#[test]
fn strategies_agree() {
    let hosts = [&[2, 2][..], &[3, 3], &[4, 4], &[2, 2, 2], &[3, 3, 3], &[4, 4, 4], &[2, 2, 4], &[2, 2, 2, 2], &[2, 2, 2, 4]];
    let budget = SearchBudget::default();
    for trial in 0..1000u64 {
        let p = PartProfile::new(hosts[trial as usize % hosts.len()]).unwrap();
        let m = p.edge_count() as u64;
        let q = 1 + stream(3, trial).random_range(0..m) as u32;
        let c = random_surjective_coloring(&p, q, 5, trial).unwrap();
        for k in 2..=p.size(1) {
            let g = find_rainbow_k(&c, k, Strategy::Generic, &budget);
            let s = find_rainbow_k(&c, k, Strategy::slice_guided(), &budget);
            assert_ne!(g.outcome, SearchOutcome::Indeterminate);
            assert_eq!(g.outcome.is_found(), s.outcome.is_found(), "{p} q={q} k={k} trial {trial}");
            if let Some(w) = s.outcome.witness() {
                assert_eq!(w.len(), k);
                assert!(w.is_valid(&p) && c.is_rainbow(w.ids()));
            }
        }
    }
}

#[test]
fn rainbow_number_is_best_representing_matching() {
    let budget = SearchBudget::default();
    let mut checked = 0;
    for trial in 0..300u64 {
        let p = PartProfile::new([&[2, 3][..], &[3, 3], &[2, 2, 2], &[2, 2, 3]][trial as usize % 4]).unwrap();
        let q = 2 + (trial % (p.edge_count() as u64 - 1)) as u32;
        let c = random_surjective_coloring(&p, q, 17, trial).unwrap();
        let classes = c.color_classes();
        if classes.iter().map(|c| c.len()).product::<usize>() > 10_000 {
            continue;
        }
        let best = classes
            .iter()
            .map(|cl| cl.iter().copied())
            .multi_cartesian_product()
            .map(|pick| {
                let sub = SubHypergraph::from_ids(&p, pick).unwrap();
                max_matching(&sub, &budget).matching.len()
            })
            .max()
            .unwrap();
        assert_eq!(max_rainbow_matching(&c, &budget).matching.len(), best, "{p} trial {trial}");
        checked += 1;
    }
    assert!(checked > 100);
    let phi = build_phi_r(&PartProfile::new(&[5, 5]).unwrap(), 3).unwrap();
    let rep = representing_subhypergraph(&phi, Selector::SeededRandom(3));
    assert_eq!(rep.len(), 6);
    assert_eq!(phi.colors_of(&rep.ids()).len(), 6);
}

#[test]
fn m2_closed_form_equals_exhaustive_ar() {
    let limits = OracleLimits::default();
    for p in profiles(4, 4, 9).into_iter().filter(|p| p.size(1) >= 1) {
        let ar = ar_exact(&p, 2, &limits).unwrap();
        assert_eq!(ar.value, OracleValue::Exact(ar_m2_closed(&p)), "{p}");
    }
}

#[test]
fn canonical_labels_are_invariant() {
    let mut rng = stream(1, 1);
    for sizes in [&[2, 2, 2][..], &[2, 3, 3], &[3, 3], &[2, 2, 2, 2], &[1, 2, 2]] {
        let p = PartProfile::new(sizes).unwrap();
        let canon = Canonizer::new(&p, 10_000_000).unwrap();
        for trial in 0..30 {
            let sub = SubHypergraph::from_fn(&p, |_| rng.random_bool(0.5));
            let c = random_surjective_coloring(&p, 1 + trial % p.edge_count() as u32, 8, trial as u64).unwrap();
            let g = HostAutomorphism::random(&p, &mut rng);
            assert_eq!(canon.label_sub(&sub), canon.label_sub(&g.apply_sub(&sub)));
            assert_eq!(canon.label_coloring(&c), canon.label_coloring(&g.apply_coloring(&c)));
        }
    }
}

/// Every small cell with `n_1 ≥ k`: either the Turán construction is the
/// only extremal class, or the search produced another `M_k`-free class of
/// the same size, re-checked here with the matching solver.
#[test]
fn extremal_classes_are_certified() {
    let limits = OracleLimits::default();
    let mut other_classes = Vec::new();
    for p in profiles(3, 3, 27) {
        for k in 1..=p.size(1) {
            let ex = ex_exact(&p, k, &limits);
            let value = ex.value.exact().unwrap();
            assert_eq!(value as usize, (k - 1) * p.tail_product(), "{p} k={k}");
            let canon = Canonizer::new(&p, limits.group_cap).unwrap();
            let turan = canon.label_sub(&build_turan_extremal(&p, k).unwrap());
            let extremal = ex.extremal.as_ref().unwrap();
            assert!(extremal.contains_key(&turan), "{p} k={k}");
            for (label, sub) in extremal {
                assert_eq!(sub.len() as u64, value);
                assert!(has_k_matching(sub, k, &SearchBudget::default()).is_absent());
                if *label != turan {
                    other_classes.push(format!("{p} k={k}"));
                }
            }
        }
    }
    other_classes.dedup();
    // only 2x2x2 with k = 2 has an extremal family other than the star
    assert_eq!(other_classes, ["2x2x2 k=2"]);
}
