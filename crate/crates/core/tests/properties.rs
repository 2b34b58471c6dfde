//! Property tests over seeded random framed graphs.

use proptest::prelude::*;

use latframe_core::checks::Analysis;
use latframe_core::reconstruct::{down_bricks, phi_l_all, psi_l_all};
use latframe_core::{
    build_lattice, enumerate_routes, leq_by_coordinates, parse_framed_graph, random_framed_graph,
    serialize_framed_graph, DEFAULT_ROUTE_LIMIT,
};

fn small_graph(seed: u64) -> latframe_core::FramedGraph {
    random_framed_graph(seed, 6, 10, 256)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parse_inverts_serialize(seed in 0u64..100_000) {
        let g = small_graph(seed);
        let text = serialize_framed_graph(&g);
        prop_assert_eq!(parse_framed_graph(&text).unwrap(), g);
    }

    #[test]
    fn reflections_are_involutions(seed in 0u64..100_000) {
        let g = small_graph(seed);
        prop_assert_eq!(g.reflect_ud().reflect_ud(), g.clone());
        prop_assert_eq!(g.reflect_lr().reflect_lr(), g.clone());
        prop_assert_eq!(g.reflect_ud().reflect_lr(), g.reflect_lr().reflect_ud());
    }

    #[test]
    fn routes_count_matches_enumeration(seed in 0u64..100_000) {
        let g = small_graph(seed);
        let routes = enumerate_routes(&g);
        prop_assert_eq!(routes.len(), latframe_core::coherence::count_routes(&g));
        // Canonical order is strict.
        for w in routes.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn reconstruction_inverts_cover_labels(seed in 0u64..100_000) {
        let g = small_graph(seed);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        for i in 0..l.len() {
            let t = down_bricks(&g, &l, i);
            let back = psi_l_all(&g, &phi_l_all(&g, &t));
            prop_assert_eq!(l.index_of(&back), Some(i));
        }
    }

    #[test]
    fn coordinates_embed_the_order(seed in 0u64..100_000) {
        let g = small_graph(seed);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                prop_assert_eq!(
                    l.leq(i, j),
                    leq_by_coordinates(&g, l.element(i), l.element(j))
                );
            }
        }
    }

    #[test]
    fn full_suite_holds(seed in 0u64..2_000) {
        // The complete invariant battery on one random graph.
        let g = small_graph(seed);
        let a = Analysis::new(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        latframe_core::checks::check_preorders(&a).unwrap();
        latframe_core::checks::check_reconstruction_roundtrips(&a).unwrap();
        latframe_core::checks::check_cornering_inverse(&a).unwrap();
        latframe_core::checks::check_cubical_coordinates(&a).unwrap();
    }
}
