//! Framing lattices of framed directed acyclic graphs.
//!
//! The crate builds the full chain from a framed DAG to its lattice of
//! maximal cliques of coherent routes: route enumeration and the coherence
//! relation ([`coherence`]), clique search and the brick-labelled Hasse
//! diagram with order oracles ([`lattice`]), the two-step reconstruction
//! bijection between brick cliques and maximal cliques ([`reconstruct`]),
//! cubical coordinates with the componentwise comparison criterion
//! ([`cubical`]), and cross-validation against the weak order and the
//! Tamari lattice ([`classical`]). Everything is exercised at desk scale by
//! the brute-force invariant suite in [`checks`].

pub mod bits;
pub mod checks;
pub mod classical;
pub mod coherence;
pub mod cubical;
pub mod graph;
pub mod lattice;
pub mod reconstruct;

pub use classical::{
    all_arcs, all_noncrossing_diagrams, all_permutations, arc_to_brick, brick_to_arc,
    ccl_weak_formula, clique_to_perm, lehmer, lehmer_counterexample, perm_to_clique, tamari_check,
    Arc, ArcSide, BinaryTree, Permutation, TamariLattice, TamariReport,
};
pub use coherence::{
    brick_notation, cmp_preorder, coherence, conflict_subroutes, enumerate_bricks,
    enumerate_left_cornered_routes, enumerate_routes, enumerate_routes_limited,
    extended_letter_compare, is_clockwise_at, is_coherent, notation, parse_brick, parse_notation,
    parse_route, route_notation, weakly_coherent, Brick, CoherenceVerdict, ConflictSubroute,
    GenRoute, LeftCorneredRoute, LeftEnd, Letter, Route, RouteLimitError, RightCorneredRoute,
    RightEnd, Side, DEFAULT_ROUTE_LIMIT,
};
pub use cubical::{
    ccl, ccr, cornered_route_at, cornering_routes, left_clockwise_at, left_clockwise_bricks,
    leq_by_coordinates, not_leq_witness, ComparisonWitness, CubicalCoordinates,
};
pub use graph::{
    caracol, oruga, parse_framed_graph, random_framed_graph, serialize_framed_graph, Base, EdgeId,
    FramedGraph, GraphError, LeftCorner, RightCorner, Vertex,
};
pub use lattice::{
    adjacent, build_lattice, canonical_join_representation, check_semidistributive, cover_label,
    flip_reachable_cliques, lattice_to_dot, maximal_cliques, Adjacency, FramingLattice,
    MaximalClique,
};
pub use reconstruct::{
    brick_complex_faces, down_bricks, phi_l, phi_l_all, phi_r_all, psi_l, psi_l_all, psi_r_all,
    psi_star_l, psi_star_l_all, rowmotion, sigma_l, sigma_r, up_bricks, up_reconstruct,
    BrickClique, LeftCorneredClique, ReconstructionSeed, RightCorneredClique,
};
