//! Cornering routes and cubical coordinates.
//!
//! Within a maximal clique the routes through a corner's apex are totally
//! ordered; the extremal routes through the corner's two edges coincide
//! after the corner, so each clique picks one left-cornered route per left
//! corner. Ranking that route among all left-cornered routes at the corner
//! (by corank in the outgoing order) yields an integer vector per clique —
//! the left cubical coordinates. Covers change exactly one coordinate and
//! componentwise comparison recovers the lattice order, which also equals
//! inclusion of left-clockwise brick sets.

use std::cmp::Ordering;

use crate::coherence::{
    bricks_at_corner, cmp_preorder, cornered_routes_at, is_clockwise_at, Brick,
    LeftCorneredRoute, Route, Side,
};
use crate::graph::{FramedGraph, LeftCorner, Vertex};
use crate::lattice::{clique_order_at, MaximalClique};

/// Integer vector indexed by the canonical corner order (left corners for
/// [`ccl`], right corners for [`ccr`]).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubicalCoordinates {
    pub values: Vec<usize>,
}

impl CubicalCoordinates {
    pub fn leq_componentwise(&self, other: &CubicalCoordinates) -> bool {
        debug_assert_eq!(self.values.len(), other.values.len());
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

/// The extremal routes of `clique` through the two edges of `c`: `lower` is
/// the largest route using `c.lower`, `upper` the smallest using `c.upper`,
/// both in the clique order at the apex. Panics unless they coincide after
/// the corner and sit next to each other in that order — facts that hold
/// for every maximal clique.
pub fn cornering_routes(
    g: &FramedGraph,
    clique: &MaximalClique,
    c: LeftCorner,
) -> (Route, Route) {
    let using = |edge| {
        clique
            .routes()
            .iter()
            .filter(move |r| r.edges().contains(&edge))
    };
    let lower = using(c.lower)
        .max_by(|p, q| clique_order_at(g, c.apex, p, q))
        .unwrap_or_else(|| panic!("no clique route uses the lower corner edge at {}", c.apex))
        .clone();
    let upper = using(c.upper)
        .min_by(|p, q| clique_order_at(g, c.apex, p, q))
        .unwrap_or_else(|| panic!("no clique route uses the upper corner edge at {}", c.apex))
        .clone();

    let suffix = |r: &Route| {
        let i = r.as_gen().position_of(g, c.apex).unwrap();
        r.edges()[i..].to_vec()
    };
    assert_eq!(
        suffix(&lower),
        suffix(&upper),
        "cornering routes must coincide after the corner"
    );
    let mut through: Vec<&Route> = clique
        .routes()
        .iter()
        .filter(|r| r.as_gen().passes_through(g, c.apex))
        .collect();
    through.sort_by(|p, q| clique_order_at(g, c.apex, p, q));
    let pos_lower = through.iter().position(|r| **r == lower).unwrap();
    let pos_upper = through.iter().position(|r| **r == upper).unwrap();
    assert_eq!(
        pos_upper,
        pos_lower + 1,
        "cornering routes must be consecutive in the clique order"
    );
    (lower, upper)
}

/// The left-cornered route of `clique` at `c`: the corner followed by the
/// common suffix of its cornering routes.
pub fn cornered_route_at(
    g: &FramedGraph,
    clique: &MaximalClique,
    c: LeftCorner,
) -> LeftCorneredRoute {
    let (_, upper) = cornering_routes(g, clique, c);
    let i = upper.as_gen().position_of(g, c.apex).unwrap();
    LeftCorneredRoute::new(g, c, upper.edges()[i..].to_vec())
}

/// Corank of a cornered route among all left-cornered routes at its corner,
/// in the outgoing preorder at the apex (the number of strictly larger
/// ones).
pub fn corank_at_corner(g: &FramedGraph, route: &LeftCorneredRoute) -> usize {
    let c = route.corner();
    cornered_routes_at(g, c)
        .iter()
        .filter(|r| {
            cmp_preorder(g, c.apex, Side::Outgoing, r.as_gen(), route.as_gen()) == Ordering::Greater
        })
        .count()
}

/// Left cubical coordinates of a clique, ordered by the canonical left
/// corner order.
pub fn ccl(g: &FramedGraph, clique: &MaximalClique) -> CubicalCoordinates {
    let values = g
        .left_corners()
        .into_iter()
        .map(|c| corank_at_corner(g, &cornered_route_at(g, clique, c)))
        .collect();
    CubicalCoordinates { values }
}

/// Right cubical coordinates, computed on the left-right reflection and
/// re-indexed to the canonical right corner order of `g`.
pub fn ccr(g: &FramedGraph, clique: &MaximalClique) -> CubicalCoordinates {
    let n = g.vertex_count();
    let gt = g.reflect_lr();
    let ct = clique.reflect_lr(n);
    let reflected = ccl(&gt, &ct);
    let gt_corners = gt.left_corners();
    let values = g
        .right_corners()
        .into_iter()
        .map(|rc| {
            let image = LeftCorner {
                apex: n + 1 - rc.apex,
                lower: rc.lower,
                upper: rc.upper,
            };
            let k = gt_corners
                .iter()
                .position(|&c| c == image)
                .expect("right corners map onto left corners of the reflection");
            reflected.values[k]
        })
        .collect();
    CubicalCoordinates { values }
}

/// Bricks with left corner `c` that are clockwise at the apex to some route
/// of the clique.
pub fn left_clockwise_at(g: &FramedGraph, clique: &MaximalClique, c: LeftCorner) -> Vec<Brick> {
    bricks_at_corner(g, c)
        .into_iter()
        .filter(|b| {
            clique.routes().iter().any(|r| {
                r.as_gen().passes_through(g, c.apex)
                    && is_clockwise_at(g, b.as_gen(), r.as_gen(), c.apex)
            })
        })
        .collect()
}

/// All bricks left-clockwise to the clique, the inversion set analogue.
pub fn left_clockwise_bricks(g: &FramedGraph, clique: &MaximalClique) -> Vec<Brick> {
    let mut out = Vec::new();
    for c in g.left_corners() {
        out.extend(left_clockwise_at(g, clique, c));
    }
    out.sort();
    out
}

/// Componentwise comparison of left cubical coordinates; equivalent to the
/// lattice order.
pub fn leq_by_coordinates(g: &FramedGraph, a: &MaximalClique, b: &MaximalClique) -> bool {
    ccl(g, a).leq_componentwise(&ccl(g, b))
}

/// A crossing certifying `a` is not below `b`.
#[derive(Clone, Debug)]
pub struct ComparisonWitness {
    /// Route of the first clique.
    pub in_first: Route,
    /// Route of the second clique, clockwise to `in_first` at `vertex`.
    pub in_second: Route,
    pub vertex: Vertex,
}

/// Returns a witness route pair when `a` is not below `b` in the lattice
/// order (a route of `b` clockwise to a route of `a`), with the smallest
/// possible witness vertex; `None` exactly when `a <= b`.
pub fn not_leq_witness(
    g: &FramedGraph,
    a: &MaximalClique,
    b: &MaximalClique,
) -> Option<ComparisonWitness> {
    for v in g.vertices() {
        for r in a.routes() {
            if !r.as_gen().passes_through(g, v) {
                continue;
            }
            for rp in b.routes() {
                if !rp.as_gen().passes_through(g, v) {
                    continue;
                }
                if is_clockwise_at(g, rp.as_gen(), r.as_gen(), v) {
                    return Some(ComparisonWitness {
                        in_first: r.clone(),
                        in_second: rp.clone(),
                        vertex: v,
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::{parse_route, route_notation, DEFAULT_ROUTE_LIMIT};
    use crate::graph::oruga;
    use crate::lattice::build_lattice;

    fn clique(g: &FramedGraph, routes: &[&str]) -> MaximalClique {
        MaximalClique::from_routes(routes.iter().map(|s| parse_route(g, s).unwrap()).collect())
    }

    #[test]
    fn oruga2_cornering_routes() {
        let g = oruga(2);
        let c = g.left_corners()[0];
        let bottom = clique(&g, &["u1-u2", "u1-d2", "d1-d2"]);
        let top = clique(&g, &["u1-u2", "d1-u2", "d1-d2"]);
        let (lo, up) = cornering_routes(&g, &bottom, c);
        assert_eq!(route_notation(&g, &lo), "u1-d2");
        assert_eq!(route_notation(&g, &up), "d1-d2");
        let (lo, up) = cornering_routes(&g, &top, c);
        assert_eq!(route_notation(&g, &lo), "u1-u2");
        assert_eq!(route_notation(&g, &up), "d1-u2");
    }

    #[test]
    fn oruga2_coordinates() {
        let g = oruga(2);
        let bottom = clique(&g, &["u1-u2", "u1-d2", "d1-d2"]);
        let top = clique(&g, &["u1-u2", "d1-u2", "d1-d2"]);
        assert_eq!(ccl(&g, &bottom).values, vec![0]);
        assert_eq!(ccl(&g, &top).values, vec![1]);
        assert!(leq_by_coordinates(&g, &bottom, &top));
        assert!(!leq_by_coordinates(&g, &top, &bottom));
    }

    #[test]
    fn oruga2_left_clockwise_sets() {
        let g = oruga(2);
        let bottom = clique(&g, &["u1-u2", "u1-d2", "d1-d2"]);
        let top = clique(&g, &["u1-u2", "d1-u2", "d1-d2"]);
        assert!(left_clockwise_bricks(&g, &bottom).is_empty());
        let lw = left_clockwise_bricks(&g, &top);
        assert_eq!(lw.len(), 1);
        assert!(lw[0].edges().is_empty());
    }

    #[test]
    fn witness_example() {
        let g = oruga(2);
        let bottom = clique(&g, &["u1-u2", "u1-d2", "d1-d2"]);
        let top = clique(&g, &["u1-u2", "d1-u2", "d1-d2"]);
        assert!(not_leq_witness(&g, &bottom, &top).is_none());
        let w = not_leq_witness(&g, &top, &bottom).unwrap();
        assert_eq!(route_notation(&g, &w.in_second), "u1-d2");
        assert_eq!(route_notation(&g, &w.in_first), "d1-u2");
        assert_eq!(w.vertex, 2);
    }

    #[test]
    fn bottom_is_all_zeros_and_covers_move_one_coordinate() {
        for g in [oruga(3), crate::graph::caracol(3)] {
            let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
            let coords: Vec<_> = l.elements().iter().map(|c| ccl(&g, c)).collect();
            assert!(coords[l.bottom()].values.iter().all(|&x| x == 0));
            for (lo, hi, _) in l.covers() {
                let diffs: Vec<usize> = (0..coords[*lo].values.len())
                    .filter(|&k| coords[*lo].values[k] != coords[*hi].values[k])
                    .collect();
                assert_eq!(diffs.len(), 1);
                assert!(coords[*lo].values[diffs[0]] < coords[*hi].values[diffs[0]]);
            }
        }
    }
}
