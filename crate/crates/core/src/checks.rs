//! Brute-force invariant suite.
//!
//! Every structural fact the library relies on is re-checked here from
//! definitions at desk scale: preorders against independent word extraction,
//! clique search against the rotation walk, the greedy reconstructions
//! against filter-and-extremize oracles, coordinates against the order, and
//! the lattice against its reflections. The CLI `check` command and the
//! acceptance tests both run this suite.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::bits::BitSet;
use crate::classical::{
    all_noncrossing_diagrams, all_permutations, arc_to_brick, ccl_weak_formula, clique_to_perm,
    lehmer, lehmer_counterexample, perm_to_clique,
};
use crate::coherence::{
    bricks_at_corner, cmp_preorder, coherence, cornered_routes_at, enumerate_bricks,
    enumerate_left_cornered_routes, enumerate_routes_limited, is_clockwise_at, is_coherent,
    notation, weakly_coherent, Brick, CoherenceVerdict, GenRoute, LeftCorneredRoute, LeftEnd,
    Route, RouteLimitError, RightEnd, Side,
};
use crate::cubical::{ccl, ccr, cornering_routes, leq_by_coordinates, not_leq_witness};
use crate::graph::{
    caracol, oruga, parse_framed_graph, random_framed_graph, serialize_framed_graph, FramedGraph,
    LeftCorner,
};
use crate::lattice::{
    build_lattice, canonical_join_representation, check_semidistributive, flip_reachable_cliques,
    FramingLattice, MaximalClique,
};
use crate::reconstruct::{
    brick_complex_faces, down_bricks, orbit_sizes, phi_l, phi_l_all, psi_l, psi_l_all, psi_star_l,
    psi_star_l_all, rowmotion, sigma_l, up_bricks, up_reconstruct, BrickClique, LeftCorneredClique,
    ReconstructionSeed,
};

/// Per-graph caches shared by the individual checks.
pub struct Analysis<'g> {
    pub g: &'g FramedGraph,
    pub routes: Vec<Route>,
    pub lattice: FramingLattice,
    pub bricks: Vec<Brick>,
    pub corners: Vec<LeftCorner>,
    /// Left-cornered routes per corner (same index as `corners`).
    pub cornered: Vec<Vec<LeftCorneredRoute>>,
    /// Bricks per corner, ascending in the outgoing order at the apex.
    pub bricks_at: Vec<Vec<Brick>>,
    /// Every left-cornered route, sorted, with `coherent_with_route`
    /// telling which plain routes each one is coherent with.
    pub cornered_all: Vec<LeftCorneredRoute>,
    pub coherent_with_route: Vec<BitSet>,
    /// Cornered clique of each lattice element.
    pub sigma: Vec<LeftCorneredClique>,
    /// Left cubical coordinates of each element.
    pub coords: Vec<Vec<usize>>,
    /// All brick cliques (faces of the brick complex).
    pub faces: Vec<BrickClique>,
}

impl<'g> Analysis<'g> {
    pub fn new(g: &'g FramedGraph, route_limit: usize) -> Result<Analysis<'g>, RouteLimitError> {
        let routes = enumerate_routes_limited(g, route_limit)?;
        let lattice = build_lattice(g, route_limit)?;
        let bricks = enumerate_bricks(g);
        let corners = g.left_corners();
        let cornered: Vec<Vec<LeftCorneredRoute>> = corners
            .iter()
            .map(|&c| cornered_routes_at(g, c))
            .collect();
        let bricks_at: Vec<Vec<Brick>> = corners
            .iter()
            .map(|&c| {
                let mut bs = bricks_at_corner(g, c);
                bs.sort_by(|x, y| {
                    cmp_preorder(g, c.apex, Side::Outgoing, x.as_gen(), y.as_gen())
                });
                bs
            })
            .collect();
        let cornered_all = enumerate_left_cornered_routes(g);
        let coherent_with_route: Vec<BitSet> = cornered_all
            .iter()
            .map(|cr| {
                let mut bits = BitSet::new(routes.len());
                for (i, r) in routes.iter().enumerate() {
                    if is_coherent(g, cr.as_gen(), r.as_gen()) {
                        bits.insert(i);
                    }
                }
                bits
            })
            .collect();
        let sigma: Vec<LeftCorneredClique> = lattice
            .elements()
            .iter()
            .map(|c| sigma_l(g, c))
            .collect();
        let coords: Vec<Vec<usize>> = lattice
            .elements()
            .iter()
            .map(|c| ccl(g, c).values)
            .collect();
        let faces = brick_complex_faces(g, usize::MAX);
        Ok(Analysis {
            g,
            routes,
            lattice,
            bricks,
            corners,
            cornered,
            bricks_at,
            cornered_all,
            coherent_with_route,
            sigma,
            coords,
            faces,
        })
    }

    fn cornered_index(&self, r: &LeftCorneredRoute) -> usize {
        self.cornered_all
            .binary_search(r)
            .expect("cornered route must be enumerated")
    }

    fn corner_index(&self, c: LeftCorner) -> usize {
        self.corners.iter().position(|&x| x == c).unwrap()
    }
}

/// Observations reported by cross-corpus criteria.
#[derive(Debug, Default, Clone)]
pub struct Observations {
    /// Covers whose single right-coordinate change decreases / increases.
    pub ccr_drops: usize,
    pub ccr_raises: usize,
    pub rowmotion_orbit_sizes: Vec<usize>,
    /// Element pair whose left-clockwise brick sets intersect to more than
    /// the meet's set.
    pub meet_intersection_witness: Option<(usize, usize)>,
}

#[derive(Debug)]
pub struct CheckFailure {
    pub check: &'static str,
    pub detail: String,
}

impl std::fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

#[derive(Debug)]
pub struct CheckReport {
    pub passed: Vec<&'static str>,
    pub observations: Observations,
}

// Cap for quadratic route-pair scans inside a single vertex.
const PAIR_SCAN_CAP: usize = 64;

pub fn check_serialization(a: &Analysis) -> Result<(), String> {
    let text = serialize_framed_graph(a.g);
    let parsed = parse_framed_graph(&text).map_err(|e| e.to_string())?;
    if &parsed != a.g {
        return Err("parse(serialize(g)) differs from g".into());
    }
    if serialize_framed_graph(&parsed) != text {
        return Err("serialization is not byte-stable".into());
    }
    Ok(())
}

pub fn check_reflections(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    if &g.reflect_ud().reflect_ud() != g || &g.reflect_lr().reflect_lr() != g {
        return Err("reflections are not involutions".into());
    }
    if g.reflect_ud().reflect_lr() != g.reflect_lr().reflect_ud() {
        return Err("reflections do not commute".into());
    }
    Ok(())
}

pub fn check_corner_count(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    let left: usize = g
        .vertices()
        .filter(|&v| g.is_internal(v))
        .map(|v| g.in_order(v).len() - 1)
        .sum();
    let right: usize = g
        .vertices()
        .filter(|&v| g.is_internal(v))
        .map(|v| g.out_order(v).len() - 1)
        .sum();
    if g.left_corners().len() != left || g.right_corners().len() != right {
        return Err("corner counts disagree with the degree formula".into());
    }
    // Corner and sink-edge counts together give the clique size.
    let expected = crate::lattice::clique_size_formula(g);
    if left + g.sink_edges().len() != expected {
        return Err("left corners plus sink edges must equal the clique size".into());
    }
    Ok(())
}

/// Suffix letters of a generalized route from `v`, as framing keys — an
/// independent rendering of the word the preorder compares.
fn word_keys(g: &FramedGraph, r: &GenRoute, v: usize, side: Side) -> Vec<u32> {
    let pos = r.position_of(g, v).unwrap();
    let mut keys = Vec::new();
    match side {
        Side::Outgoing => {
            let mut at = v;
            for &e in &r.edges[pos..] {
                keys.push(2 * g.out_pos(e) as u32 + (at << 8) as u32);
                at = g.head(e);
            }
            if let RightEnd::Corner(c) = r.right {
                keys.push(2 * g.out_pos(c.lower) as u32 + 1 + (at << 8) as u32);
            }
        }
        Side::Incoming => {
            let mut at = v;
            for &e in r.edges[..pos].iter().rev() {
                keys.push(2 * g.in_pos(e) as u32 + (at << 8) as u32);
                at = g.tail(e);
            }
            if let LeftEnd::Corner(c) = r.left {
                keys.push(2 * g.in_pos(c.lower) as u32 + 1 + (at << 8) as u32);
            }
        }
    }
    keys
}

pub fn check_preorders(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    for v in g.vertices() {
        let through: Vec<&Route> = a
            .routes
            .iter()
            .filter(|r| r.as_gen().passes_through(g, v))
            .take(PAIR_SCAN_CAP)
            .collect();
        for side in [Side::Incoming, Side::Outgoing] {
            let words: Vec<Vec<u32>> = through
                .iter()
                .map(|r| word_keys(g, r.as_gen(), v, side))
                .collect();
            for (i, p) in through.iter().enumerate() {
                for (j, q) in through.iter().enumerate() {
                    let got = cmp_preorder(g, v, side, p.as_gen(), q.as_gen());
                    if got != words[i].cmp(&words[j]) {
                        return Err(format!(
                            "preorder at {v} disagrees with word comparison for {} vs {}",
                            notation(g, p.as_gen()),
                            notation(g, q.as_gen())
                        ));
                    }
                    if got == Ordering::Equal && words[i] != words[j] {
                        return Err("preorder equality without identical words".into());
                    }
                }
            }
        }
        // Clockwise is antisymmetric at every vertex.
        for p in &through {
            for q in &through {
                if is_clockwise_at(g, p.as_gen(), q.as_gen(), v)
                    && is_clockwise_at(g, q.as_gen(), p.as_gen(), v)
                {
                    return Err(format!("two routes mutually clockwise at {v}"));
                }
            }
        }
    }
    // Every brick crosses some route at its own corner apex; otherwise it
    // could never label a cover.
    for b in &a.bricks {
        let apex = b.left_corner().apex;
        let witnessed = a.routes.iter().any(|r| {
            r.as_gen().passes_through(g, apex) && is_clockwise_at(g, b.as_gen(), r.as_gen(), apex)
        });
        if !witnessed {
            return Err(format!(
                "brick {} is clockwise to no route at its apex",
                notation(g, b.as_gen())
            ));
        }
    }
    Ok(())
}

pub fn check_clique_fundamentals(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    for (idx, c) in a.lattice.elements().iter().enumerate() {
        for (i, p) in c.routes().iter().enumerate() {
            for q in &c.routes()[i + 1..] {
                if !is_coherent(g, p.as_gen(), q.as_gen()) {
                    return Err(format!("element {idx} contains an incoherent pair"));
                }
            }
        }
    }
    // Plain routes cannot share corners: coherent and weakly coherent agree.
    for (i, p) in a.routes.iter().take(PAIR_SCAN_CAP).enumerate() {
        for q in a.routes.iter().take(PAIR_SCAN_CAP).skip(i + 1) {
            let verdict = coherence(g, p.as_gen(), q.as_gen());
            let weak = weakly_coherent(g, p.as_gen(), q.as_gen());
            if matches!(
                verdict,
                CoherenceVerdict::SharedLeftCorner(_) | CoherenceVerdict::SharedRightCorner(_)
            ) {
                return Err("plain routes reported a shared corner".into());
            }
            if (verdict == CoherenceVerdict::Coherent) != weak {
                return Err("coherence and weak coherence differ on plain routes".into());
            }
        }
    }
    // Rotation walk from the reconstructed bottom sees the same elements as
    // the clique search.
    let bottom = psi_l_all(g, &phi_l_all(g, &BrickClique::empty()));
    let walked = flip_reachable_cliques(g, usize::MAX, &bottom).map_err(|e| e.to_string())?;
    if walked.as_slice() != a.lattice.elements() {
        return Err("rotation walk and clique search disagree".into());
    }
    if a.lattice.index_of(&bottom) != Some(a.lattice.bottom()) {
        return Err("reconstruction of the empty brick clique is not the bottom".into());
    }
    Ok(())
}

pub fn check_reconstruction_roundtrips(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    let l = &a.lattice;
    if a.faces.len() != l.len() {
        return Err(format!(
            "{} brick cliques vs {} elements",
            a.faces.len(),
            l.len()
        ));
    }
    for i in 0..l.len() {
        let t = down_bricks(g, l, i);
        let back = psi_l_all(g, &phi_l_all(g, &t));
        if l.index_of(&back) != Some(i) {
            return Err(format!("down-brick round trip misses element {i}"));
        }
        let tu = up_bricks(g, l, i);
        let back = up_reconstruct(g, &tu);
        if l.index_of(&back) != Some(i) {
            return Err(format!("up-brick round trip misses element {i}"));
        }
    }
    for t in &a.faces {
        let element = psi_l_all(g, &phi_l_all(g, t));
        let idx = l
            .index_of(&element)
            .ok_or_else(|| "reconstructed clique is not an element".to_string())?;
        if &down_bricks(g, l, idx) != t {
            return Err("down_bricks does not invert the reconstruction".into());
        }
        let element = up_reconstruct(g, t);
        let idx = l
            .index_of(&element)
            .ok_or_else(|| "up-reconstructed clique is not an element".to_string())?;
        if &up_bricks(g, l, idx) != t {
            return Err("up_bricks does not invert the up reconstruction".into());
        }
    }
    // Single bricks land exactly on the join-irreducible elements.
    let mut image = Vec::new();
    for b in &a.bricks {
        let t = BrickClique::new(g, vec![b.clone()]);
        let idx = l
            .index_of(&psi_l_all(g, &phi_l_all(g, &t)))
            .ok_or_else(|| "single-brick reconstruction is not an element".to_string())?;
        image.push(idx);
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != a.bricks.len() || sorted != l.join_irreducibles() {
        return Err("bricks do not biject with the join-irreducibles".into());
    }
    Ok(())
}

fn oracle_phi(a: &Analysis, t: &BrickClique, c: LeftCorner) -> Result<LeftCorneredRoute, String> {
    let g = a.g;
    let own = t.brick_at(c);
    let candidates: Vec<&LeftCorneredRoute> = a.cornered[a.corner_index(c)]
        .iter()
        .filter(|r| {
            t.bricks()
                .iter()
                .all(|b| weakly_coherent(g, r.as_gen(), b.as_gen()))
        })
        .filter(|r| {
            own.is_none_or(|b| {
                cmp_preorder(g, c.apex, Side::Outgoing, r.as_gen(), b.as_gen()) == Ordering::Less
            })
        })
        .collect();
    candidates
        .into_iter()
        .max_by(|x, y| cmp_preorder(g, c.apex, Side::Outgoing, x.as_gen(), y.as_gen()))
        .cloned()
        .ok_or_else(|| "no feasible cornered route".to_string())
}

fn oracle_psi(
    a: &Analysis,
    lt: &LeftCorneredClique,
    seed: ReconstructionSeed,
) -> Result<Route, String> {
    let g = a.g;
    let seed_edges: Vec<_> = match seed {
        ReconstructionSeed::Corner(c) => {
            let mut e = vec![c.upper];
            e.extend_from_slice(lt.route_at(c).edges());
            e
        }
        ReconstructionSeed::SinkEdge(e) => vec![e],
    };
    let sink = g.head(*seed_edges.last().unwrap());
    let lt_bits: Vec<&BitSet> = lt
        .routes()
        .iter()
        .map(|r| &a.coherent_with_route[a.cornered_index(r)])
        .collect();
    let candidates: Vec<&Route> = a
        .routes
        .iter()
        .enumerate()
        .filter(|(i, r)| {
            r.edges().ends_with(&seed_edges) && lt_bits.iter().all(|bits| bits.contains(*i))
        })
        .map(|(_, r)| r)
        .collect();
    candidates
        .into_iter()
        .min_by(|x, y| cmp_preorder(g, sink, Side::Incoming, x.as_gen(), y.as_gen()))
        .cloned()
        .ok_or_else(|| "no coherent route contains the seed".to_string())
}

pub fn check_greedy_vs_oracle(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    for t in &a.faces {
        for &c in &a.corners {
            let greedy = phi_l(g, t, c);
            let oracle = oracle_phi(a, t, c)?;
            if greedy != oracle {
                return Err(format!(
                    "first step: greedy {} vs oracle {} at corner of vertex {}",
                    notation(g, greedy.as_gen()),
                    notation(g, oracle.as_gen()),
                    g.external(c.apex)
                ));
            }
        }
        let lt = phi_l_all(g, t);
        let seeds = a
            .corners
            .iter()
            .map(|&c| ReconstructionSeed::Corner(c))
            .chain(g.sink_edges().into_iter().map(ReconstructionSeed::SinkEdge));
        for seed in seeds {
            let greedy = psi_l(g, &lt, seed);
            let oracle = oracle_psi(a, &lt, seed)?;
            if greedy != oracle {
                return Err(format!(
                    "second step: greedy {} vs oracle {}",
                    notation(g, greedy.as_gen()),
                    notation(g, oracle.as_gen())
                ));
            }
        }
    }
    Ok(())
}

pub fn check_cornering_inverse(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    for (i, element) in a.lattice.elements().iter().enumerate() {
        let lt = &a.sigma[i];
        if &psi_l_all(g, lt) != element {
            return Err(format!("second step does not invert cornering at {i}"));
        }
        let lt2 = sigma_l(g, &psi_l_all(g, lt));
        if &lt2 != lt {
            return Err(format!("cornering does not invert the second step at {i}"));
        }
        // A route is the lower (resp. upper) cornering route of at most one
        // corner.
        let mut lowers: Vec<Route> = Vec::new();
        let mut uppers: Vec<Route> = Vec::new();
        for &c in &a.corners {
            let (lo, up) = cornering_routes(g, element, c);
            lowers.push(lo);
            uppers.push(up);
        }
        for list in [&mut lowers, &mut uppers] {
            let before = list.len();
            list.sort();
            list.dedup();
            if list.len() != before {
                return Err(format!(
                    "element {i} reuses a cornering route at two corners"
                ));
            }
        }
    }
    Ok(())
}

/// Left-clockwise bricks of `element` at `c`, from the definition.
fn lcb_by_definition(a: &Analysis, element: &MaximalClique, c: LeftCorner) -> Vec<Brick> {
    let g = a.g;
    a.bricks_at[a.corner_index(c)]
        .iter()
        .filter(|b| {
            element.routes().iter().any(|r| {
                r.as_gen().passes_through(g, c.apex)
                    && is_clockwise_at(g, b.as_gen(), r.as_gen(), c.apex)
            })
        })
        .cloned()
        .collect()
}

pub fn check_cubical_coordinates(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    let l = &a.lattice;
    let k = a.corners.len();
    if !a.coords[l.bottom()].iter().all(|&x| x == 0) {
        return Err("bottom coordinates are not all zero".into());
    }
    for ci in 0..k {
        let top_val = a.coords[l.top()][ci];
        let max_val = a.coords.iter().map(|v| v[ci]).max().unwrap();
        if top_val != max_val {
            return Err("top coordinates are not the componentwise maximum".into());
        }
        for v in &a.coords {
            if v[ci] >= a.cornered[ci].len() {
                return Err("coordinate exceeds the cornered-route count".into());
            }
        }
    }
    for (lo, hi, label) in l.covers() {
        let diffs: Vec<usize> = (0..k)
            .filter(|&ci| a.coords[*lo][ci] != a.coords[*hi][ci])
            .collect();
        if diffs.len() != 1 {
            return Err(format!(
                "cover ({lo}, {hi}) changes {} left coordinates",
                diffs.len()
            ));
        }
        if a.coords[*lo][diffs[0]] >= a.coords[*hi][diffs[0]] {
            return Err("left coordinate does not increase along a cover".into());
        }
        if a.corners[diffs[0]] != label.left_corner() {
            return Err("changed coordinate is not at the label's corner".into());
        }
    }
    // Three equivalent descriptions of the left-clockwise bricks, the ideal
    // property, and the coordinate count.
    for (i, element) in l.elements().iter().enumerate() {
        for (ci, &c) in a.corners.iter().enumerate() {
            let by_def = lcb_by_definition(a, element, c);
            let sigma_route = a.sigma[i].route_at(c);
            let by_sigma: Vec<Brick> = a.bricks_at[ci]
                .iter()
                .filter(|b| {
                    cmp_preorder(g, c.apex, Side::Outgoing, b.as_gen(), sigma_route.as_gen())
                        == Ordering::Greater
                })
                .cloned()
                .collect();
            let (_, upper) = cornering_routes(g, element, c);
            let by_upper: Vec<Brick> = a.bricks_at[ci]
                .iter()
                .filter(|b| is_clockwise_at(g, b.as_gen(), upper.as_gen(), c.apex))
                .cloned()
                .collect();
            if by_def != by_sigma || by_def != by_upper {
                return Err(format!(
                    "left-clockwise characterizations disagree at element {i}"
                ));
            }
            if by_def.len() != a.coords[i][ci] {
                return Err(format!(
                    "left-clockwise count differs from the coordinate at element {i}"
                ));
            }
            // Upper ideal: the set is a suffix of the outgoing-sorted bricks.
            let suffix = &a.bricks_at[ci][a.bricks_at[ci].len() - by_def.len()..];
            if by_def != suffix {
                return Err(format!(
                    "left-clockwise bricks are not an upper ideal at element {i}"
                ));
            }
        }
    }
    Ok(())
}

fn lcb_bits(a: &Analysis, i: usize) -> BitSet {
    let g = a.g;
    let mut bits = BitSet::new(a.bricks.len());
    for (ci, &c) in a.corners.iter().enumerate() {
        let sigma_route = a.sigma[i].route_at(c);
        for b in &a.bricks_at[ci] {
            if cmp_preorder(g, c.apex, Side::Outgoing, b.as_gen(), sigma_route.as_gen())
                == Ordering::Greater
            {
                bits.insert(a.bricks.binary_search(b).unwrap());
            }
        }
    }
    bits
}

pub fn check_order_equivalences(a: &Analysis) -> Result<Observations, String> {
    let g = a.g;
    let l = &a.lattice;
    let n = l.len();
    let sets: Vec<BitSet> = (0..n).map(|i| lcb_bits(a, i)).collect();
    let mut obs = Observations::default();
    for i in 0..n {
        for j in 0..n {
            let by_order = l.leq(i, j);
            let by_coords = a.coords[i]
                .iter()
                .zip(&a.coords[j])
                .all(|(x, y)| x <= y);
            let by_bricks = sets[i].is_subset(&sets[j]);
            if by_order != by_coords || by_order != by_bricks {
                return Err(format!("order relations disagree at ({i}, {j})"));
            }
            if by_order != leq_by_coordinates(g, l.element(i), l.element(j)) {
                return Err(format!("leq_by_coordinates wrong at ({i}, {j})"));
            }
            let witness = not_leq_witness(g, l.element(i), l.element(j));
            if witness.is_some() == by_order {
                return Err(format!("witness and order disagree at ({i}, {j})"));
            }
            if let Some(w) = witness {
                if !is_clockwise_at(g, w.in_second.as_gen(), w.in_first.as_gen(), w.vertex) {
                    return Err(format!("invalid witness at ({i}, {j})"));
                }
            }
        }
    }
    // The meet generally sits strictly below the intersection of
    // left-clockwise brick sets; record a pair witnessing that.
    'outer: for i in 0..n {
        for j in 0..n {
            let meet = l.meet(i, j);
            let inter = sets[i].intersection(&sets[j]);
            if sets[meet] != inter {
                obs.meet_intersection_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    // Right coordinates also move one entry per cover; record the observed
    // direction.
    let right: Vec<Vec<usize>> = l.elements().iter().map(|c| ccr(g, c).values).collect();
    for (lo, hi, _) in l.covers() {
        let diffs: Vec<usize> = (0..right[*lo].len())
            .filter(|&ci| right[*lo][ci] != right[*hi][ci])
            .collect();
        if diffs.len() != 1 {
            return Err(format!("cover ({lo}, {hi}) changes {} right coordinates", diffs.len()));
        }
        if right[*lo][diffs[0]] > right[*hi][diffs[0]] {
            obs.ccr_drops += 1;
        } else {
            obs.ccr_raises += 1;
        }
    }
    Ok(obs)
}

pub fn check_lattice_theory(a: &Analysis) -> Result<(), String> {
    let g = a.g;
    let l = &a.lattice;
    if !check_semidistributive(l) {
        return Err("lattice is not semidistributive".into());
    }
    if l.join_irreducibles().len() != a.bricks.len() {
        return Err("join-irreducible count differs from the brick count".into());
    }
    // The canonical joinands of each element are exactly its lower-cover
    // labels under the brick <-> join-irreducible bijection.
    let mut ji_brick: BTreeMap<usize, Brick> = BTreeMap::new();
    for b in &a.bricks {
        let t = BrickClique::new(g, vec![b.clone()]);
        let idx = l.index_of(&psi_l_all(g, &phi_l_all(g, &t))).unwrap();
        ji_brick.insert(idx, b.clone());
    }
    let mut cjr_sets: Vec<Vec<Brick>> = Vec::new();
    for x in 0..l.len() {
        let mut bricks: Vec<Brick> = canonical_join_representation(l, x)
            .into_iter()
            .map(|j| {
                ji_brick
                    .get(&j)
                    .cloned()
                    .ok_or_else(|| format!("joinand {j} is not a brick image"))
            })
            .collect::<Result<_, _>>()?;
        bricks.sort();
        let mut expected = down_bricks(g, l, x).bricks().to_vec();
        expected.sort();
        if bricks != expected {
            return Err(format!(
                "canonical join representation differs from the cover labels at {x}"
            ));
        }
        cjr_sets.push(bricks);
    }
    // The family of representations is exactly the brick complex.
    cjr_sets.sort();
    let mut faces: Vec<Vec<Brick>> = a.faces.iter().map(|f| f.bricks().to_vec()).collect();
    faces.sort();
    if cjr_sets != faces {
        return Err("canonical join complex differs from the brick complex".into());
    }
    Ok(())
}

pub fn check_duality_dynamics(a: &Analysis) -> Result<Observations, String> {
    let g = a.g;
    let l = &a.lattice;
    let n = l.len();
    let mut obs = Observations::default();

    // Up-down reflection: same cliques, reversed order.
    let gu = g.reflect_ud();
    let lu = build_lattice(&gu, usize::MAX).map_err(|e| e.to_string())?;
    if lu.len() != n {
        return Err("reflected lattice has a different size".into());
    }
    let map_u: Vec<usize> = l
        .elements()
        .iter()
        .map(|c| lu.index_of(c).expect("same cliques under the up-down reflection"))
        .collect();
    for i in 0..n {
        for j in 0..n {
            if l.leq(i, j) != lu.leq(map_u[j], map_u[i]) {
                return Err("up-down reflection is not an anti-isomorphism".into());
            }
        }
    }

    // Left-right reflection: reversed routes, reversed order.
    let gt = g.reflect_lr();
    let lt_lattice = build_lattice(&gt, usize::MAX).map_err(|e| e.to_string())?;
    let map_t: Vec<usize> = l
        .elements()
        .iter()
        .map(|c| {
            lt_lattice
                .index_of(&c.reflect_lr(g.vertex_count()))
                .expect("reversed cliques are cliques of the reflection")
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            if l.leq(i, j) != lt_lattice.leq(map_t[j], map_t[i]) {
                return Err("left-right reflection is not an anti-isomorphism".into());
            }
        }
    }

    // Rowmotion permutes the elements.
    let images: Vec<usize> = (0..n).map(|i| rowmotion(g, l, i)).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err("rowmotion is not a bijection".into());
    }
    obs.rowmotion_orbit_sizes = orbit_sizes(&images);

    // The up-down dual of the second step reconstructs the same cliques but
    // never the same per-corner route.
    for (i, lt) in a.sigma.iter().enumerate() {
        if psi_star_l_all(g, lt) != psi_l_all(g, lt) {
            return Err(format!("dual second step differs as a clique map at {i}"));
        }
        for &c in &a.corners {
            let seed = ReconstructionSeed::Corner(c);
            if psi_l(g, lt, seed) == psi_star_l(g, lt, seed) {
                return Err(format!("dual second step repeats the per-corner route at element {i}"));
            }
        }
    }
    Ok(obs)
}

/// Runs the whole per-graph suite, reporting the first failed check.
pub fn run_all_checks(
    g: &FramedGraph,
    route_limit: usize,
) -> Result<CheckReport, Box<CheckFailure>> {
    let fail = |check: &'static str, detail: String| Box::new(CheckFailure { check, detail });
    let a = Analysis::new(g, route_limit)
        .map_err(|e| fail("analysis", e.to_string()))?;
    let mut passed = Vec::new();
    let simple: [(&'static str, fn(&Analysis) -> Result<(), String>); 8] = [
        ("serialization-roundtrip", check_serialization),
        ("reflection-involutions", check_reflections),
        ("corner-counts", check_corner_count),
        ("preorders", check_preorders),
        ("clique-fundamentals", check_clique_fundamentals),
        ("reconstruction-roundtrips", check_reconstruction_roundtrips),
        ("greedy-vs-oracle", check_greedy_vs_oracle),
        ("cornering-inverse", check_cornering_inverse),
    ];
    for (name, f) in simple {
        f(&a).map_err(|d| fail(name, d))?;
        passed.push(name);
    }
    check_cubical_coordinates(&a).map_err(|d| fail("cubical-coordinates", d))?;
    passed.push("cubical-coordinates");
    let mut observations = check_order_equivalences(&a)
        .map_err(|d| fail("order-equivalences", d))?;
    passed.push("order-equivalences");
    check_lattice_theory(&a).map_err(|d| fail("lattice-theory", d))?;
    passed.push("lattice-theory");
    let dyn_obs = check_duality_dynamics(&a).map_err(|d| fail("duality-dynamics", d))?;
    passed.push("duality-dynamics");
    observations.rowmotion_orbit_sizes = dyn_obs.rowmotion_orbit_sizes;
    Ok(CheckReport {
        passed,
        observations,
    })
}

/// The desk-scale test corpus: caterpillars, fan-plus-path graphs (framed
/// and reframed), and fifty seeded random graphs.
pub fn standard_corpus() -> Vec<(String, FramedGraph)> {
    let mut out: Vec<(String, FramedGraph)> = Vec::new();
    for n in 2..=4 {
        out.push((format!("oruga:{n}"), oruga(n)));
    }
    for n in 2..=3 {
        out.push((format!("caracol:{n}"), caracol(n)));
    }
    for seed in [101, 102] {
        out.push((
            format!("caracol:3#reframed{seed}"),
            caracol(3).random_reframing(seed),
        ));
    }
    for seed in 1..=50 {
        out.push((format!("random:{seed}"), random_framed_graph(seed, 6, 10, 512)));
    }
    out
}

// ---------------------------------------------------------------------------
// Classical correspondences (caterpillar and fan-plus-path specific)
// ---------------------------------------------------------------------------

/// The caterpillar lattice is the weak order: permutation map is an order
/// isomorphism, covers match, coordinates obey the inversion formula, arcs
/// match bricks, and left-clockwise bricks are inversions.
pub fn check_weak_order_model(n: usize) -> Result<(), String> {
    let g = oruga(n);
    let l = build_lattice(&g, usize::MAX).map_err(|e| e.to_string())?;
    let perms = all_permutations(n);
    if l.len() != perms.len() {
        return Err(format!("{} cliques vs {} permutations", l.len(), perms.len()));
    }
    let index_of: Vec<usize> = perms
        .iter()
        .map(|p| {
            l.index_of(&perm_to_clique(&g, p))
                .ok_or_else(|| format!("permutation {:?} maps to no element", p.one_line()))
        })
        .collect::<Result<_, _>>()?;
    for (pi, p) in perms.iter().enumerate() {
        if &clique_to_perm(&g, l.element(index_of[pi])) != p {
            return Err("permutation map does not invert".into());
        }
        for (qi, q) in perms.iter().enumerate() {
            if p.weak_leq(q) != l.leq(index_of[pi], index_of[qi]) {
                return Err(format!(
                    "weak order disagrees with the lattice at {:?}, {:?}",
                    p.one_line(),
                    q.one_line()
                ));
            }
        }
    }
    // Covers correspond to single-inversion steps.
    for (lo, hi, _) in l.covers() {
        let p = clique_to_perm(&g, l.element(*lo));
        let q = clique_to_perm(&g, l.element(*hi));
        if !p.is_weak_cover(&q) {
            return Err("a lattice cover is not a weak-order cover".into());
        }
    }
    // Coordinates equal the inversion formula, and both the cornered paths
    // and the left-clockwise counts encode the inversion set: the route at
    // corner i goes up between j and j+1 exactly at inversions (i, j+1),
    // and the count of left-clockwise bricks at corner i has binary digit
    // n - j set exactly at inversions (i, j).
    for (pi, p) in perms.iter().enumerate() {
        let element = l.element(index_of[pi]);
        let coords = ccl(&g, element);
        let inv = p.inversions();
        for i in 1..n {
            if coords.values[i - 1] != ccl_weak_formula(p, i) {
                return Err(format!("formula mismatch for {:?} at {i}", p.one_line()));
            }
            let cornered = crate::cubical::cornered_route_at(
                &g,
                element,
                g.left_corners()[i - 1],
            );
            for (offset, &e) in cornered.edges().iter().enumerate() {
                let j_plus_1 = i + 1 + offset;
                let up = g.token(e).starts_with('u');
                if up != inv.contains(&(i, j_plus_1)) {
                    return Err(format!(
                        "cornered path of {:?} misreads inversion ({i}, {j_plus_1})",
                        p.one_line()
                    ));
                }
            }
            let count = crate::cubical::left_clockwise_at(&g, element, g.left_corners()[i - 1])
                .len();
            for j in i + 1..=n {
                let bit = count >> (n - j) & 1 == 1;
                if bit != inv.contains(&(i, j)) {
                    return Err(format!(
                        "left-clockwise count of {:?} misreads inversion ({i}, {j})",
                        p.one_line()
                    ));
                }
            }
        }
    }
    // Noncrossing arc diagrams are exactly the brick cliques.
    let diagrams = all_noncrossing_diagrams(n);
    let mut from_arcs: Vec<Vec<Brick>> = diagrams
        .iter()
        .map(|d| {
            let mut bricks: Vec<Brick> = d.iter().map(|arc| arc_to_brick(&g, arc)).collect();
            bricks.sort();
            bricks
        })
        .collect();
    from_arcs.sort();
    let mut faces: Vec<Vec<Brick>> = brick_complex_faces(&g, usize::MAX)
        .iter()
        .map(|f| f.bricks().to_vec())
        .collect();
    faces.sort();
    if from_arcs != faces {
        return Err("noncrossing arc diagrams differ from brick cliques".into());
    }
    if from_arcs.len() != perms.len() {
        return Err("diagram count is not n!".into());
    }
    Ok(())
}

/// Lehmer codes step one entry per weak cover, yet componentwise comparison
/// is strictly coarser than the weak order: a witness pair must exist.
pub fn check_lehmer_model(max_n: usize) -> Result<(), String> {
    let mut found = false;
    for n in 2..=max_n {
        let perms = all_permutations(n);
        for p in &perms {
            for q in &perms {
                if p.is_weak_cover(q) {
                    let diffs = lehmer(p)
                        .iter()
                        .zip(lehmer(q))
                        .filter(|&(a, b)| *a != b)
                        .count();
                    if diffs != 1 {
                        return Err("a weak cover moves more than one Lehmer entry".into());
                    }
                }
            }
        }
        if let Some((p, q)) = lehmer_counterexample(n) {
            if p.weak_leq(&q) || q.weak_leq(&p) {
                return Err("counterexample pair is weak-order comparable".into());
            }
            found = true;
        }
    }
    if !found {
        return Err(format!("no Lehmer counterexample up to n = {max_n}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_on_small_graphs() {
        for g in [oruga(3), caracol(2)] {
            let report = run_all_checks(&g, usize::MAX).unwrap();
            assert_eq!(report.passed.len(), 12);
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = standard_corpus();
        let b = standard_corpus();
        assert_eq!(a.len(), 57);
        for ((na, ga), (nb, gb)) in a.iter().zip(&b) {
            assert_eq!(na, nb);
            assert_eq!(ga, gb);
        }
    }

    #[test]
    fn weak_order_model_small() {
        check_weak_order_model(3).unwrap();
    }

    #[test]
    fn lehmer_model() {
        check_lehmer_model(4).unwrap();
    }
}
