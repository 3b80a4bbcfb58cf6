use proptest::prelude::*;

use sc_hadwiger::bounds::sc_bounds;
use sc_hadwiger::canon::canonical_form;
use sc_hadwiger::graph6::{decode_graph6, encode_graph6};
use sc_hadwiger::minors::{check_witness, greedy_witness, hadwiger, Budget};
use sc_hadwiger::sc::{generate_sc, pair_orbits, verify_antimorphism};
use sc_hadwiger::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn sc_order() -> impl Strategy<Value = usize> {
    (0usize..16).prop_map(|k| if k % 2 == 0 { 2 * k + 4 } else { 2 * k + 3 })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let bytes = encode_graph6(&g);
        prop_assert!(bytes.iter().all(|&b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(40)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(2 * g.edge_count(), g.degrees().iter().sum::<usize>());
    }

    #[test]
    fn contraction_edge_count(g in graph(20), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let common = g.neighbors(u).intersection(g.neighbors(v)).len();
        let c = g.contract(u, v).unwrap();
        prop_assert_eq!(c.n(), g.n() - 1);
        prop_assert_eq!(c.edge_count(), g.edge_count() - 1 - common);
    }

    #[test]
    fn components_partition_vertices(g in graph(30)) {
        let comps = g.components();
        let union = comps.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        prop_assert_eq!(union, g.vertices());
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.n());
        for c in comps {
            prop_assert!(g.is_connected(c).unwrap());
        }
    }

    #[test]
    fn generated_graphs_are_certified(n in sc_order(), seed in any::<u64>()) {
        let (g, sigma) = generate_sc(n, seed).unwrap();
        prop_assert!(verify_antimorphism(&g, &sigma.sigma).unwrap());
        prop_assert!(sigma.has_valid_cycle_type());
        prop_assert_eq!(g.edge_count(), n * (n - 1) / 4);
        for orbit in pair_orbits(&sigma.sigma) {
            prop_assert_eq!(orbit.len() % 2, 0);
            let edges = orbit.iter().filter(|&&(u, v)| g.has_edge(u, v)).count();
            prop_assert_eq!(2 * edges, orbit.len());
        }
        prop_assert_eq!(generate_sc(n, seed).unwrap(), (g, sigma));
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(14), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).graph, canonical_form(&h).graph);
    }

    #[test]
    fn witnesses_always_check(g in graph(10)) {
        prop_assert!(check_witness(&g, &greedy_witness(&g)).unwrap());
        let r = hadwiger(&g, &Budget::unlimited());
        prop_assert!(check_witness(&g, r.witness()).unwrap());
        prop_assert_eq!(r.exact(), Some(r.lower()));
    }

    #[test]
    fn bounds_are_ordered(k in 1usize..500_000, odd in any::<bool>()) {
        let n = 4 * k + usize::from(odd);
        let (lo, hi) = sc_bounds(n).unwrap();
        prop_assert!(lo <= hi);
        prop_assert_eq!(2 * lo, n + n % 2);
        prop_assert_eq!(hi, 3 * n / 5);
        // one extension step raises the ceiling by at most 3
        prop_assert!(3 * (n + 4) / 5 - hi <= 3);
    }
}
