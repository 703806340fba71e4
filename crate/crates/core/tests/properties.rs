use proptest::prelude::*;

use throttle_core::corpus::{random_connected_subgraph, random_tree, rng};
use throttle_core::families::{dim_k_cycle, dim_k_path};
use throttle_core::resolve::is_resolving_with;
use throttle_core::solver::dimension_profile;
use throttle_core::{
    all_pairs_distances, compile_constraints, exhaustive_min_resolving, export_ip, generate, is_extremal_thdim,
    is_resolving, min_hitting_set, throttling_number, truncated_dimension, FamilySpec, Graph, SolveBudget,
    TargetFamily, Variant,
};

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn variant_strategy() -> impl Strategy<Value = Variant> {
    prop::sample::select(Variant::STANDARD.to_vec())
}

fn subset(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn th(g: &Graph, variant: Variant, r_min: u32) -> usize {
    throttling_number(g, variant, &SolveBudget::unlimited(), r_min).unwrap().value.unwrap()
}

/// Floyd-Warshall with `None` for unreachable pairs.
fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apsp_matches_floyd_warshall(g in graph_strategy(10)) {
        let dm = all_pairs_distances(&g);
        let fw = floyd(&g);
        for (u, row) in fw.iter().enumerate() {
            for (v, &expected) in row.iter().enumerate() {
                prop_assert_eq!(dm.get(u, v).finite(), expected);
            }
        }
    }

    #[test]
    fn larger_radius_keeps_resolving(g in graph_strategy(8), variant in variant_strategy(), mask in any::<u32>(), r in 0u32..5) {
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let s = subset(g.order(), mask);
        if is_resolving(&g, &tf, &s, r) {
            prop_assert!(is_resolving(&g, &tf, &s, r + 1));
        }
    }

    #[test]
    fn truncated_dimension_is_nonincreasing(g in graph_strategy(8), variant in variant_strategy(), r in 0u32..5) {
        let at = |r| truncated_dimension(&g, variant, r, &SolveBudget::unlimited()).unwrap().value;
        match (at(r), at(r + 1)) {
            (Some(a), Some(b)) => prop_assert!(b <= a),
            (None, _) => {}
            (Some(_), None) => prop_assert!(false, "feasible at r={} but not at r+1", r),
        }
    }

    #[test]
    fn resolving_iff_hitting_every_distinguisher_set(
        g in graph_strategy(8), variant in variant_strategy(), mask in any::<u32>(), r in 0u32..5,
    ) {
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let dm = all_pairs_distances(&g);
        let cs = compile_constraints(&dm, &tf, r);
        let s = subset(g.order(), mask);
        prop_assert_eq!(is_resolving_with(&dm, &tf, &s, r), cs.is_hit_by(&s));
    }

    #[test]
    fn solver_matches_exhaustive(g in graph_strategy(9), variant in variant_strategy(), r in 0u32..5) {
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let cs = compile_constraints(&all_pairs_distances(&g), &tf, r);
        let fast = min_hitting_set(&cs, &SolveBudget::unlimited());
        let slow = exhaustive_min_resolving(&g, &tf, r).unwrap();
        prop_assert_eq!(fast.value, slow.value);
        prop_assert_eq!(fast.status, slow.status);
    }

    #[test]
    fn canonical_witness_is_lexicographic_minimum(g in graph_strategy(9), variant in variant_strategy(), r in 0u32..4) {
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let cs = compile_constraints(&all_pairs_distances(&g), &tf, r);
        let fast = min_hitting_set(&cs, &SolveBudget::canonical());
        // brute force visits each size in lexicographic order
        let slow = exhaustive_min_resolving(&g, &tf, r).unwrap();
        prop_assert_eq!(fast.witness, slow.witness);
    }

    #[test]
    fn throttling_witness_is_valid(g in graph_strategy(9), variant in variant_strategy(), r_min in 0u32..2) {
        let res = throttling_number(&g, variant, &SolveBudget::unlimited(), r_min).unwrap();
        let (value, r, k) = (res.value.unwrap(), res.r_star.unwrap(), res.k_star.unwrap());
        let witness = res.witness.unwrap();
        prop_assert_eq!(value, r as usize + k);
        prop_assert_eq!(witness.len(), k);
        prop_assert!(r >= r_min);
        let tf = TargetFamily::standard(&g, variant).unwrap();
        prop_assert!(is_resolving(&g, &tf, &witness, r));
    }

    #[test]
    fn pruned_sweep_equals_full_profile(g in graph_strategy(8), variant in variant_strategy(), r_min in 0u32..2) {
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let n = g.order() as u32;
        let profile = dimension_profile(&g, &tf, r_min..=n.max(r_min), &SolveBudget::unlimited());
        let best = profile
            .iter()
            .map(|(&r, out)| r as usize + out.value.unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(th(&g, variant, r_min), best);
    }

    #[test]
    fn throttling_sandwich(g in graph_strategy(9), variant in variant_strategy()) {
        let n = g.order();
        let targets = TargetFamily::standard(&g, variant).unwrap().len();
        let value = th(&g, variant, 0);
        let dim = truncated_dimension(&g, variant, n as u32, &SolveBudget::unlimited()).unwrap().value.unwrap();
        prop_assert!(dim <= value && value <= n);
        if variant == Variant::Dim {
            prop_assert!(value < n);
        }
        // each landmark reports one of r + 2 readings
        let x = value as u32;
        prop_assert!(((x + 2) as u64).pow(x) >= targets as u64);
    }

    #[test]
    fn diameter_needs_coverage(seed in any::<u64>(), n in 2usize..14) {
        let t = random_tree(n, &mut rng(seed));
        let res = throttling_number(&t, Variant::Dim, &SolveBudget::unlimited(), 0).unwrap();
        let d = all_pairs_distances(&t).max_finite() as usize;
        let (r, k) = (res.r_star.unwrap() as usize, res.k_star.unwrap());
        prop_assert!(k * (2 * r + 1) >= d);
    }

    #[test]
    fn subtrees_never_cost_more(seed in any::<u64>(), n in 1usize..11, variant in variant_strategy()) {
        let mut rng = rng(seed);
        let t = random_tree(n, &mut rng);
        let s = random_connected_subgraph(&t, &mut rng);
        prop_assert!(th(&s, variant, 0) <= th(&t, variant, 0));
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(8)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        if g.order() >= 3 {
            prop_assert_eq!(is_extremal_thdim(&g).unwrap(), is_extremal_thdim(&g.complement()).unwrap());
        }
    }

    #[test]
    fn r_min_one_never_lowers_the_value(g in graph_strategy(8), variant in variant_strategy()) {
        prop_assert!(th(&g, variant, 1) >= th(&g, variant, 0));
    }

    #[test]
    fn unreduced_ip_has_a_row_per_pair(g in graph_strategy(7), variant in variant_strategy(), r in 0u32..3) {
        let tf = TargetFamily::standard(&g, variant).unwrap();
        let t = tf.len();
        let lp = export_ip(&g, &tf, r, false);
        let rows = lp.lines().filter(|l| l.starts_with(" c_")).count();
        prop_assert_eq!(rows, t * t.saturating_sub(1) / 2);
        prop_assert_eq!(lp.lines().skip_while(|l| *l != "Binary").count(), g.order() + 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn path_and_cycle_closed_forms_match_brute_force(n in 3usize..13, k in 1u32..6) {
        let path = generate(&FamilySpec::Path(n)).unwrap();
        let cycle = generate(&FamilySpec::Cycle(n)).unwrap();
        let exact = |g: &Graph| {
            let tf = TargetFamily::standard(g, Variant::Dim).unwrap();
            exhaustive_min_resolving(g, &tf, k).unwrap().value.unwrap()
        };
        prop_assert_eq!(dim_k_path(n, k).unwrap(), exact(&path));
        prop_assert_eq!(dim_k_cycle(n, k).unwrap(), exact(&cycle));
    }
}
