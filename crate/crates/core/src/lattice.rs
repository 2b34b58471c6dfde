//! Maximal cliques of coherent routes and the framing lattice over them.
//!
//! Cliques are found with pivoting Bron–Kerbosch over the coherence graph of
//! routes, independently of the rotation logic, so the two can validate each
//! other ([`flip_reachable_cliques`] walks the rotation graph instead).
//! Adjacent cliques exchange a single route across a unique conflict
//! subroute; orienting each exchange by the clockwise test gives the Hasse
//! diagram, whose edges carry brick labels. Reachability is kept as one bit
//! set per element, and joins and meets are tabulated eagerly so that order
//! queries are lookups.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::bits::BitSet;
use crate::coherence::{
    brick_notation, cmp_preorder, conflict_subroutes, enumerate_routes_limited, is_clockwise_at,
    is_coherent, Brick, ConflictSubroute, Route, RouteLimitError, Side,
};
use crate::graph::{FramedGraph, LeftCorner, RightCorner};

/// A maximal set of pairwise coherent routes; an element of the framing
/// lattice. Routes are kept in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MaximalClique {
    routes: Vec<Route>,
}

impl MaximalClique {
    pub fn from_routes(mut routes: Vec<Route>) -> MaximalClique {
        routes.sort();
        routes.dedup();
        MaximalClique { routes }
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn len(&self) -> usize {
        self.routes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.routes.is_empty()
    }

    pub fn contains(&self, r: &Route) -> bool {
        self.routes.binary_search(r).is_ok()
    }

    pub fn reflect_lr(&self, n: usize) -> MaximalClique {
        MaximalClique::from_routes(self.routes.iter().map(|r| r.reflect_lr(n)).collect())
    }
}

/// Expected size of every maximal clique: `|E| - |V| + s + t`.
pub fn clique_size_formula(g: &FramedGraph) -> usize {
    g.edge_count() + g.sources().len() + g.sinks().len() - g.vertex_count()
}

fn coherence_graph(g: &FramedGraph, routes: &[Route]) -> Vec<BitSet> {
    let n = routes.len();
    let mut adj = vec![BitSet::new(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if is_coherent(g, routes[i].as_gen(), routes[j].as_gen()) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

fn bron_kerbosch_pivot(
    adj: &[BitSet],
    r: &mut Vec<usize>,
    p: BitSet,
    x: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // Pivot on the candidate with the most neighbours still in P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection(&adj[u]).count())
        .expect("P or X is non-empty");
    let mut todo = p.clone();
    for u in adj[pivot].iter() {
        todo.remove(u);
    }
    let mut p = p;
    let mut x = x;
    for v in todo.iter() {
        r.push(v);
        bron_kerbosch_pivot(adj, r, p.intersection(&adj[v]), x.intersection(&adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All maximal cliques, canonically ordered. Every clique found is checked
/// against the size formula; a violation is a bug and panics.
pub fn maximal_cliques(
    g: &FramedGraph,
    route_limit: usize,
) -> Result<Vec<MaximalClique>, RouteLimitError> {
    let routes = enumerate_routes_limited(g, route_limit)?;
    let adj = coherence_graph(g, &routes);
    let mut raw = Vec::new();
    bron_kerbosch_pivot(
        &adj,
        &mut Vec::new(),
        BitSet::full(routes.len()),
        BitSet::new(routes.len()),
        &mut raw,
    );
    let expected = clique_size_formula(g);
    let mut cliques: Vec<MaximalClique> = raw
        .into_iter()
        .map(|idxs| {
            assert_eq!(
                idxs.len(),
                expected,
                "maximal clique size {} violates the size formula {}",
                idxs.len(),
                expected
            );
            MaximalClique::from_routes(idxs.iter().map(|&i| routes[i].clone()).collect())
        })
        .collect();
    cliques.sort();
    cliques.dedup();
    Ok(cliques)
}

/// Witness that two cliques differ in exactly one route.
#[derive(Clone, Debug)]
pub struct Adjacency {
    /// The route of the first clique not in the second.
    pub removed: Route,
    /// The route of the second clique not in the first.
    pub added: Route,
    pub conflict: ConflictSubroute,
}

/// Checks whether two maximal cliques are adjacent (differ in one route).
/// When they are, verifies the conflict subroute is unique and that both
/// recombinations across it lie in the intersection, and returns the
/// exchange; any failure of those facts is a bug and panics.
pub fn adjacent(g: &FramedGraph, a: &MaximalClique, b: &MaximalClique) -> Option<Adjacency> {
    let only_a: Vec<&Route> = a.routes().iter().filter(|r| !b.contains(r)).collect();
    let only_b: Vec<&Route> = b.routes().iter().filter(|r| !a.contains(r)).collect();
    if only_a.len() != 1 || only_b.len() != 1 {
        return None;
    }
    let removed = only_a[0].clone();
    let added = only_b[0].clone();
    let conflicts = conflict_subroutes(g, &removed, &added);
    assert_eq!(
        conflicts.len(),
        1,
        "exchanged routes of adjacent cliques must have a unique conflict subroute"
    );
    let conflict = conflicts[0].clone();

    // Recombined routes r1·s·r2' and r1'·s·r2 must lie in both cliques.
    let split = |r: &Route| -> (Vec<_>, Vec<_>) {
        let gen = r.as_gen();
        let i = gen.position_of(g, conflict.start).unwrap();
        let j = gen.position_of(g, conflict.end).unwrap();
        (gen.edges[..i].to_vec(), gen.edges[j..].to_vec())
    };
    let (r1, r2) = split(&removed);
    let (q1, q2) = split(&added);
    for (pre, post) in [(r1.clone(), q2.clone()), (q1, r2)] {
        let mut edges = pre;
        edges.extend(conflict.edges.iter().copied());
        edges.extend(post);
        let recombined = Route::from_edges(g, edges);
        assert!(
            a.contains(&recombined) && b.contains(&recombined),
            "recombination across the conflict subroute must stay in both cliques"
        );
    }
    Some(Adjacency {
        removed,
        added,
        conflict,
    })
}

/// Brick label of a covering relation `a ⋖ b`: the conflict subroute flanked
/// by the left corner of the diverging prefixes and the right corner of the
/// diverging suffixes. Panics when the cliques are not an upward cover or
/// the flanking edge pairs are not framing-consecutive.
pub fn cover_label(g: &FramedGraph, a: &MaximalClique, b: &MaximalClique) -> Brick {
    let adj = adjacent(g, a, b).expect("cover_label needs adjacent cliques");
    let v = adj.conflict.start;
    assert!(
        is_clockwise_at(g, adj.removed.as_gen(), adj.added.as_gen(), v),
        "cover_label needs the lower clique first"
    );
    label_from_adjacency(g, &adj)
}

fn label_from_adjacency(g: &FramedGraph, adj: &Adjacency) -> Brick {
    let (removed, added, conflict) = (&adj.removed, &adj.added, &adj.conflict);
    let prefix_last = |r: &Route, v| {
        let i = r.as_gen().position_of(g, v).unwrap();
        assert!(i > 0, "conflict subroute cannot start at a route's source");
        r.edges()[i - 1]
    };
    let suffix_first = |r: &Route, v| {
        let gen = r.as_gen();
        let i = gen.position_of(g, v).unwrap();
        assert!(i < gen.edges.len(), "conflict subroute cannot end at a sink");
        gen.edges[i]
    };
    // Incoming at the conflict start the removed route is smaller; outgoing
    // at the conflict end it is larger.
    let c1 = LeftCorner {
        apex: conflict.start,
        lower: prefix_last(removed, conflict.start),
        upper: prefix_last(added, conflict.start),
    };
    assert_eq!(
        g.in_pos(c1.upper),
        g.in_pos(c1.lower) + 1,
        "cover prefixes must diverge at framing-consecutive edges"
    );
    let c2 = RightCorner {
        apex: conflict.end,
        lower: suffix_first(added, conflict.end),
        upper: suffix_first(removed, conflict.end),
    };
    assert_eq!(
        g.out_pos(c2.upper),
        g.out_pos(c2.lower) + 1,
        "cover suffixes must diverge at framing-consecutive edges"
    );
    Brick::new(g, c1, conflict.edges.clone(), c2)
}

/// The framing lattice: maximal cliques ordered by counterclockwise
/// rotations, with brick-labelled covering relations.
#[derive(Clone, Debug)]
pub struct FramingLattice {
    elements: Vec<MaximalClique>,
    covers: Vec<(usize, usize, Brick)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    /// `up[i]` holds every `j` with `i <= j` (reflexive).
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    /// Indices in some linear extension, bottom first.
    topo: Vec<usize>,
    join_table: Vec<u32>,
    meet_table: Vec<u32>,
    bottom: usize,
    top: usize,
}

/// Builds the framing lattice. Panics on any structural violation — cliques
/// of the wrong size, a non-unique conflict, a rotation digraph that is not
/// the Hasse diagram of a lattice — since those contradict established
/// facts about framing lattices and signal an implementation bug.
pub fn build_lattice(
    g: &FramedGraph,
    route_limit: usize,
) -> Result<FramingLattice, RouteLimitError> {
    let elements = maximal_cliques(g, route_limit)?;
    let n = elements.len();
    let mut covers: Vec<(usize, usize, Brick)> = Vec::new();
    let mut upper_covers = vec![Vec::new(); n];
    let mut lower_covers = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let Some(adj) = adjacent(g, &elements[i], &elements[j]) else {
                continue;
            };
            let v = adj.conflict.start;
            let i_clockwise = is_clockwise_at(g, adj.removed.as_gen(), adj.added.as_gen(), v);
            let j_clockwise = is_clockwise_at(g, adj.added.as_gen(), adj.removed.as_gen(), v);
            assert!(
                i_clockwise ^ j_clockwise,
                "exchanged routes must be clockwise in exactly one direction"
            );
            let (lo, hi, label) = if i_clockwise {
                (i, j, label_from_adjacency(g, &adj))
            } else {
                let flipped = Adjacency {
                    removed: adj.added,
                    added: adj.removed,
                    conflict: adj.conflict,
                };
                (j, i, label_from_adjacency(g, &flipped))
            };
            upper_covers[lo].push(hi);
            lower_covers[hi].push(lo);
            covers.push((lo, hi, label));
        }
    }
    covers.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    for l in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
        l.sort_unstable();
    }
    for (x, lows) in lower_covers.iter().enumerate() {
        let mut labels: Vec<&Brick> = covers
            .iter()
            .filter(|(_, hi, _)| *hi == x)
            .map(|(_, _, b)| b)
            .collect();
        let total = labels.len();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), total, "lower-cover labels must be distinct");
        assert_eq!(lows.len(), total);
    }

    // Topological order by Kahn; the rotation digraph must be acyclic.
    let mut indeg: Vec<usize> = lower_covers.iter().map(Vec::len).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(i) = queue.pop() {
        topo.push(i);
        for &j in &upper_covers[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push(j);
            }
        }
    }
    assert_eq!(topo.len(), n, "rotation digraph must be acyclic");

    let mut up = vec![BitSet::new(n); n];
    for &i in topo.iter().rev() {
        up[i].insert(i);
        let (head, tail) = up.split_at_mut(i);
        let (own, rest) = tail.split_first_mut().unwrap();
        for &j in &upper_covers[i] {
            own.union_with(if j < i { &head[j] } else { &rest[j - i - 1] });
        }
    }
    let mut down = vec![BitSet::new(n); n];
    for i in 0..n {
        for j in up[i].iter() {
            down[j].insert(i);
        }
    }

    let bottoms: Vec<usize> = (0..n).filter(|&i| lower_covers[i].is_empty()).collect();
    let tops: Vec<usize> = (0..n).filter(|&i| upper_covers[i].is_empty()).collect();
    assert_eq!(bottoms.len(), 1, "the order must have a unique bottom");
    assert_eq!(tops.len(), 1, "the order must have a unique top");
    let (bottom, top) = (bottoms[0], tops[0]);
    assert_eq!(up[bottom].count(), n, "the Hasse diagram must be connected");

    // The adjacency edges must be exactly the transitive reduction.
    for (lo, hi, _) in &covers {
        assert_eq!(
            up[*lo].intersection(&down[*hi]).count(),
            2,
            "adjacency edge {lo}->{hi} is transitively implied"
        );
    }

    let mut lattice = FramingLattice {
        elements,
        covers,
        upper_covers,
        lower_covers,
        up,
        down,
        topo,
        join_table: Vec::new(),
        meet_table: Vec::new(),
        bottom,
        top,
    };
    lattice.join_table = lattice.extremum_table(true);
    lattice.meet_table = lattice.extremum_table(false);
    Ok(lattice)
}

impl FramingLattice {
    fn extremum_table(&self, joins: bool) -> Vec<u32> {
        let n = self.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let x = self.extremum(a, b, joins);
                table[a * n + b] = x as u32;
                table[b * n + a] = x as u32;
            }
        }
        table
    }

    /// Least upper bound (or greatest lower bound): the unique minimal
    /// (maximal) element of the shared bound set. Panics when that element
    /// is not unique, which would contradict the lattice property.
    fn extremum(&self, a: usize, b: usize, joins: bool) -> usize {
        let (bounds_a, bounds_b, all) = if joins {
            (&self.up[a], &self.up[b], &self.up)
        } else {
            (&self.down[a], &self.down[b], &self.down)
        };
        let shared = bounds_a.intersection(bounds_b);
        let order: Box<dyn Iterator<Item = &usize>> = if joins {
            Box::new(self.topo.iter())
        } else {
            Box::new(self.topo.iter().rev())
        };
        for &x in order {
            if shared.contains(x) {
                assert!(
                    shared.is_subset(&all[x]),
                    "non-unique minimal bound of {a} and {b}: the order is not a lattice"
                );
                return x;
            }
        }
        unreachable!("bound set always contains top or bottom");
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[MaximalClique] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MaximalClique {
        &self.elements[i]
    }

    pub fn index_of(&self, c: &MaximalClique) -> Option<usize> {
        self.elements.binary_search(c).ok()
    }

    /// Covering relations `(lower, upper, label)` in canonical order.
    pub fn covers(&self) -> &[(usize, usize, Brick)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn cover_label_of(&self, lo: usize, hi: usize) -> Option<&Brick> {
        self.covers
            .iter()
            .find(|(l, h, _)| *l == lo && *h == hi)
            .map(|(_, _, b)| b)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a * self.len() + b] as usize
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower_covers[i].len() == 1)
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].len() == 1)
            .collect()
    }
}

/// Checks both semidistributive laws on every triple.
pub fn check_semidistributive(l: &FramingLattice) -> bool {
    let n = l.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if l.join(x, y) == l.join(x, z) && l.join(x, l.meet(y, z)) != l.join(x, y) {
                    return false;
                }
                if l.meet(x, y) == l.meet(x, z) && l.meet(x, l.join(y, z)) != l.meet(x, y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Canonical join representation of `x`, computed cover by cover: for each
/// lower cover `y` of `x` the joinand is the unique minimal `j` with
/// `join(j, y) = x`. Uniqueness failure contradicts semidistributivity and
/// panics. Returns sorted element indices.
pub fn canonical_join_representation(l: &FramingLattice, x: usize) -> Vec<usize> {
    let n = l.len();
    let mut out = Vec::new();
    for &y in l.lower_covers(x) {
        let candidates: Vec<usize> = (0..n).filter(|&j| l.join(j, y) == x).collect();
        let minimal: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&j| !candidates.iter().any(|&k| k != j && l.leq(k, j)))
            .collect();
        assert_eq!(
            minimal.len(),
            1,
            "cover label must be a unique minimal joinand"
        );
        out.push(minimal[0]);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All maximal cliques reachable from `start` by single-route exchanges.
/// Together with [`maximal_cliques`] this gives two independent element
/// enumerations.
pub fn flip_reachable_cliques(
    g: &FramedGraph,
    route_limit: usize,
    start: &MaximalClique,
) -> Result<Vec<MaximalClique>, RouteLimitError> {
    let routes = enumerate_routes_limited(g, route_limit)?;
    let adj = coherence_graph(g, &routes);
    let index: BTreeMap<&Route, usize> = routes.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let to_indices = |c: &MaximalClique| -> Vec<usize> {
        c.routes().iter().map(|r| index[r]).collect()
    };
    let mut first = to_indices(start);
    first.sort_unstable();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    seen.insert(first.clone());
    let mut queue = vec![first];
    while let Some(current) = queue.pop() {
        for (slot, &out) in current.iter().enumerate() {
            for candidate in 0..routes.len() {
                if candidate == out || current.contains(&candidate) {
                    continue;
                }
                let compatible = current
                    .iter()
                    .enumerate()
                    .all(|(k, &r)| k == slot || adj[candidate].contains(r));
                if !compatible {
                    continue;
                }
                let mut next = current.clone();
                next[slot] = candidate;
                next.sort_unstable();
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    let mut out: Vec<MaximalClique> = seen
        .into_iter()
        .map(|idxs| MaximalClique::from_routes(idxs.iter().map(|&i| routes[i].clone()).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// DOT rendering of the Hasse diagram, bottom-up, with brick-labelled cover
/// edges. `coords` adds a coordinate vector to each node label.
pub fn lattice_to_dot(
    g: &FramedGraph,
    l: &FramingLattice,
    coords: Option<&[Vec<usize>]>,
) -> String {
    let mut out = String::from("digraph framing_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for i in 0..l.len() {
        let label = match coords {
            Some(cs) => format!("{i} {:?}", cs[i]),
            None => format!("{i}"),
        };
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for (lo, hi, brick) in l.covers() {
        out.push_str(&format!(
            "  n{lo} -> n{hi} [label=\"{}\"];\n",
            brick_notation(g, brick)
        ));
    }
    out.push_str("}\n");
    out
}

/// Total order on the routes of one clique through a shared vertex:
/// incoming preorder first, outgoing as tie-break. Coherence guarantees the
/// two preorders never strictly disagree.
pub fn clique_order_at(
    g: &FramedGraph,
    v: crate::graph::Vertex,
    p: &Route,
    q: &Route,
) -> Ordering {
    match cmp_preorder(g, v, Side::Incoming, p.as_gen(), q.as_gen()) {
        Ordering::Equal => cmp_preorder(g, v, Side::Outgoing, p.as_gen(), q.as_gen()),
        ord => {
            debug_assert_ne!(
                cmp_preorder(g, v, Side::Outgoing, p.as_gen(), q.as_gen()),
                ord.reverse(),
                "clique routes cannot cross"
            );
            ord
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::{parse_route, route_notation, DEFAULT_ROUTE_LIMIT};
    use crate::graph::{caracol, oruga, parse_framed_graph};

    fn clique(g: &FramedGraph, routes: &[&str]) -> MaximalClique {
        MaximalClique::from_routes(routes.iter().map(|s| parse_route(g, s).unwrap()).collect())
    }

    #[test]
    fn oruga2_cliques() {
        let g = oruga(2);
        let cliques = maximal_cliques(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        assert_eq!(cliques.len(), 2);
        let bottom = clique(&g, &["u1-u2", "u1-d2", "d1-d2"]);
        let top = clique(&g, &["u1-u2", "d1-u2", "d1-d2"]);
        assert!(cliques.contains(&bottom));
        assert!(cliques.contains(&top));
    }

    #[test]
    fn oruga3_is_a_hexagon() {
        let g = oruga(3);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        assert_eq!(l.len(), 6);
        assert_eq!(l.covers().len(), 6);
        assert!(l.elements().iter().all(|c| c.len() == 4));
        assert_eq!(l.join_irreducibles().len(), 4);
    }

    #[test]
    fn single_edge_graph() {
        let g = parse_framed_graph("vertices 2 base1\nedge a 1 2\n").unwrap();
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        assert_eq!(l.len(), 1);
        assert!(l.covers().is_empty());
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn adjacency_on_oruga2() {
        let g = oruga(2);
        let bottom = clique(&g, &["u1-u2", "u1-d2", "d1-d2"]);
        let top = clique(&g, &["u1-u2", "d1-u2", "d1-d2"]);
        let adj = adjacent(&g, &bottom, &top).unwrap();
        assert_eq!(route_notation(&g, &adj.removed), "u1-d2");
        assert_eq!(route_notation(&g, &adj.added), "d1-u2");
        assert_eq!(adj.conflict.start, 2);
        assert!(adjacent(&g, &bottom, &bottom).is_none());
    }

    #[test]
    fn non_adjacent_cliques() {
        let g = oruga(3);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        // Bottom and top of the hexagon differ in more than one route.
        assert!(adjacent(&g, l.element(l.bottom()), l.element(l.top())).is_none());
    }

    #[test]
    fn oruga2_cover_label() {
        let g = oruga(2);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.covers().len(), 1);
        let bottom = l.element(l.bottom());
        let top = l.element(l.top());
        let label = cover_label(&g, bottom, top);
        assert_eq!(brick_notation(&g, &label), "[1:u1|d1>·<u2|d2:1]");
    }

    #[test]
    fn order_oracles() {
        let g = oruga(3);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        let bottom = l.bottom();
        let top = l.top();
        for x in 0..l.len() {
            assert_eq!(l.join(bottom, x), x);
            assert_eq!(l.meet(top, x), x);
            assert!(l.leq(bottom, x) && l.leq(x, top));
        }
        // The two atoms of the hexagon join to an upper element, not top.
        let atoms = l.upper_covers(bottom);
        assert_eq!(atoms.len(), 2);
        let j = l.join(atoms[0], atoms[1]);
        assert!(l.leq(atoms[0], j) && l.leq(atoms[1], j));
        assert!(check_semidistributive(&l));
    }

    #[test]
    fn cjr_examples() {
        let g = oruga(2);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        assert!(canonical_join_representation(&l, l.bottom()).is_empty());
        assert_eq!(
            canonical_join_representation(&l, l.top()),
            vec![l.top()],
            "two-element chain: the top is the unique join-irreducible"
        );
        assert_eq!(l.join_irreducibles(), vec![l.top()]);
    }

    #[test]
    fn flip_bfs_agrees_with_clique_search() {
        for g in [oruga(3), caracol(3)] {
            let cliques = maximal_cliques(&g, DEFAULT_ROUTE_LIMIT).unwrap();
            let walked =
                flip_reachable_cliques(&g, DEFAULT_ROUTE_LIMIT, &cliques[0]).unwrap();
            assert_eq!(cliques, walked);
        }
    }

    #[test]
    fn dot_export_is_deterministic() {
        let g = oruga(2);
        let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
        let dot = lattice_to_dot(&g, &l, None);
        assert!(dot.starts_with("digraph framing_lattice {"));
        assert!(dot.contains("[1:u1|d1>·<u2|d2:1]"));
        assert_eq!(dot, lattice_to_dot(&g, &l, None));
    }
}
