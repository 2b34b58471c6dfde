//! Generalized routes and the coherence relation.
//!
//! A generalized route is a path of the graph whose left end is either a
//! source vertex or a left corner and whose right end is either a sink
//! vertex or a right corner. At every shared vertex two generalized routes
//! can be compared by their prefixes (incoming preorder) and suffixes
//! (outgoing preorder), reading framing letters outward from the vertex;
//! corner letters slot strictly between their two edges. A route is
//! *clockwise* to another at `v` when it is strictly smaller incoming and
//! strictly larger outgoing — visually, a crossing. Coherence is the absence
//! of crossings and, for cornered routes, of shared end corners.

use std::cmp::Ordering;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeId, FramedGraph, LeftCorner, RightCorner, Vertex};

/// Which side of a vertex a comparison reads.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Incoming,
    Outgoing,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LeftEnd {
    Vertex(Vertex),
    Corner(LeftCorner),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RightEnd {
    Vertex(Vertex),
    Corner(RightCorner),
}

/// A letter of a prefix or suffix word: an edge, or a terminal corner.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    Edge(EdgeId),
    Left(LeftCorner),
    Right(RightCorner),
}

/// A path with generalized ends. Field order gives the canonical sort:
/// lexicographic by edge sequence, then by ends.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenRoute {
    pub edges: Vec<EdgeId>,
    pub left: LeftEnd,
    pub right: RightEnd,
}

impl GenRoute {
    pub fn new(g: &FramedGraph, left: LeftEnd, edges: Vec<EdgeId>, right: RightEnd) -> GenRoute {
        let r = GenRoute { edges, left, right };
        r.assert_valid(g);
        r
    }

    fn assert_valid(&self, g: &FramedGraph) {
        for w in self.edges.windows(2) {
            assert_eq!(
                g.head(w[0]),
                g.tail(w[1]),
                "edges do not form a path: {} then {}",
                g.token(w[0]),
                g.token(w[1])
            );
        }
        let start = self.start_vertex();
        let end = self.end_vertex();
        if let Some(&e) = self.edges.first() {
            assert_eq!(g.tail(e), start, "left end does not anchor the path");
            assert_eq!(g.head(*self.edges.last().unwrap()), end);
        } else {
            assert_eq!(start, end, "an empty path needs both ends at one vertex");
        }
        if let LeftEnd::Corner(c) = self.left {
            assert!(g.is_internal(c.apex));
        }
        if let RightEnd::Corner(c) = self.right {
            assert!(g.is_internal(c.apex));
        }
    }

    pub fn start_vertex(&self) -> Vertex {
        match self.left {
            LeftEnd::Vertex(v) => v,
            LeftEnd::Corner(c) => c.apex,
        }
    }

    pub fn end_vertex(&self) -> Vertex {
        match self.right {
            RightEnd::Vertex(v) => v,
            RightEnd::Corner(c) => c.apex,
        }
    }

    /// Path vertices from start to end, inclusive.
    pub fn vertices(&self, g: &FramedGraph) -> Vec<Vertex> {
        let mut out = vec![self.start_vertex()];
        out.extend(self.edges.iter().map(|&e| g.head(e)));
        out
    }

    /// Index of `v` among the path vertices; vertices are strictly
    /// increasing along a path, so it is unique.
    pub fn position_of(&self, g: &FramedGraph, v: Vertex) -> Option<usize> {
        if self.start_vertex() == v {
            return Some(0);
        }
        self.edges
            .iter()
            .position(|&e| g.head(e) == v)
            .map(|i| i + 1)
    }

    pub fn passes_through(&self, g: &FramedGraph, v: Vertex) -> bool {
        self.position_of(g, v).is_some()
    }

    /// Mirror image under the up-down reflection: same path, corner roles
    /// swapped within each corner.
    pub fn reflect_ud(&self) -> GenRoute {
        let flip_l = |c: LeftCorner| LeftCorner {
            apex: c.apex,
            lower: c.upper,
            upper: c.lower,
        };
        let flip_r = |c: RightCorner| RightCorner {
            apex: c.apex,
            lower: c.upper,
            upper: c.lower,
        };
        GenRoute {
            edges: self.edges.clone(),
            left: match self.left {
                LeftEnd::Vertex(v) => LeftEnd::Vertex(v),
                LeftEnd::Corner(c) => LeftEnd::Corner(flip_l(c)),
            },
            right: match self.right {
                RightEnd::Vertex(v) => RightEnd::Vertex(v),
                RightEnd::Corner(c) => RightEnd::Corner(flip_r(c)),
            },
        }
    }

    /// Mirror image under the left-right reflection of a graph with
    /// `n` vertices: the path reverses and the ends swap sides.
    pub fn reflect_lr(&self, n: usize) -> GenRoute {
        let left = match self.right {
            RightEnd::Vertex(v) => LeftEnd::Vertex(n + 1 - v),
            RightEnd::Corner(c) => LeftEnd::Corner(LeftCorner {
                apex: n + 1 - c.apex,
                lower: c.lower,
                upper: c.upper,
            }),
        };
        let right = match self.left {
            LeftEnd::Vertex(v) => RightEnd::Vertex(n + 1 - v),
            LeftEnd::Corner(c) => RightEnd::Corner(RightCorner {
                apex: n + 1 - c.apex,
                lower: c.lower,
                upper: c.upper,
            }),
        };
        GenRoute {
            edges: self.edges.iter().rev().copied().collect(),
            left,
            right,
        }
    }
}

macro_rules! gen_route_wrapper {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
        pub struct $name(GenRoute);

        impl $name {
            pub fn as_gen(&self) -> &GenRoute {
                &self.0
            }

            pub fn into_gen(self) -> GenRoute {
                self.0
            }

            pub fn edges(&self) -> &[EdgeId] {
                &self.0.edges
            }
        }
    };
}

gen_route_wrapper! {
    /// A source-to-sink path.
    Route
}
gen_route_wrapper! {
    /// A generalized route with corners at both ends (the path may be empty
    /// when both corners share their apex).
    Brick
}
gen_route_wrapper! {
    /// A generalized route from a left corner to a sink.
    LeftCorneredRoute
}
gen_route_wrapper! {
    /// A generalized route from a source to a right corner.
    RightCorneredRoute
}

impl Route {
    pub fn from_edges(g: &FramedGraph, edges: Vec<EdgeId>) -> Route {
        assert!(!edges.is_empty(), "a route has at least one edge");
        let start = g.tail(edges[0]);
        let end = g.head(*edges.last().unwrap());
        assert!(g.is_source(start), "route must start at a source");
        assert!(g.is_sink(end), "route must end at a sink");
        Route(GenRoute::new(
            g,
            LeftEnd::Vertex(start),
            edges,
            RightEnd::Vertex(end),
        ))
    }

    pub fn reflect_lr(&self, n: usize) -> Route {
        Route(self.0.reflect_lr(n))
    }
}

impl Brick {
    pub fn new(g: &FramedGraph, left: LeftCorner, edges: Vec<EdgeId>, right: RightCorner) -> Brick {
        Brick(GenRoute::new(
            g,
            LeftEnd::Corner(left),
            edges,
            RightEnd::Corner(right),
        ))
    }

    pub fn left_corner(&self) -> LeftCorner {
        match self.0.left {
            LeftEnd::Corner(c) => c,
            LeftEnd::Vertex(_) => unreachable!("brick left end is a corner"),
        }
    }

    pub fn right_corner(&self) -> RightCorner {
        match self.0.right {
            RightEnd::Corner(c) => c,
            RightEnd::Vertex(_) => unreachable!("brick right end is a corner"),
        }
    }

    pub fn reflect_ud(&self) -> Brick {
        Brick(self.0.reflect_ud())
    }

    pub fn reflect_lr(&self, n: usize) -> Brick {
        Brick(self.0.reflect_lr(n))
    }
}

impl LeftCorneredRoute {
    pub fn new(g: &FramedGraph, corner: LeftCorner, edges: Vec<EdgeId>) -> LeftCorneredRoute {
        let end = if let Some(&e) = edges.last() {
            g.head(e)
        } else {
            corner.apex
        };
        assert!(g.is_sink(end), "left-cornered route must end at a sink");
        LeftCorneredRoute(GenRoute::new(
            g,
            LeftEnd::Corner(corner),
            edges,
            RightEnd::Vertex(end),
        ))
    }

    pub fn corner(&self) -> LeftCorner {
        match self.0.left {
            LeftEnd::Corner(c) => c,
            LeftEnd::Vertex(_) => unreachable!("left-cornered route starts at a corner"),
        }
    }

    pub fn reflect_ud(&self) -> LeftCorneredRoute {
        LeftCorneredRoute(self.0.reflect_ud())
    }

    pub fn reflect_lr(&self, n: usize) -> RightCorneredRoute {
        RightCorneredRoute(self.0.reflect_lr(n))
    }
}

impl RightCorneredRoute {
    pub fn new(g: &FramedGraph, edges: Vec<EdgeId>, corner: RightCorner) -> RightCorneredRoute {
        let start = if let Some(&e) = edges.first() {
            g.tail(e)
        } else {
            corner.apex
        };
        assert!(g.is_source(start), "right-cornered route must start at a source");
        RightCorneredRoute(GenRoute::new(
            g,
            LeftEnd::Vertex(start),
            edges,
            RightEnd::Corner(corner),
        ))
    }

    pub fn corner(&self) -> RightCorner {
        match self.0.right {
            RightEnd::Corner(c) => c,
            RightEnd::Vertex(_) => unreachable!("right-cornered route ends at a corner"),
        }
    }

    pub fn reflect_lr(&self, n: usize) -> LeftCorneredRoute {
        LeftCorneredRoute(self.0.reflect_lr(n))
    }
}

// ---------------------------------------------------------------------------
// Extended framing order and preorders
// ---------------------------------------------------------------------------

/// Rank of a letter in the extended framing order at `v`: an edge at framing
/// position `p` gets `2p`, the corner between positions `p` and `p + 1`
/// gets `2p + 1`.
fn letter_key(g: &FramedGraph, v: Vertex, side: Side, letter: Letter) -> u32 {
    match (side, letter) {
        (Side::Incoming, Letter::Edge(e)) => {
            assert_eq!(g.head(e), v, "edge {} is not incoming at {v}", g.token(e));
            2 * g.in_pos(e) as u32
        }
        (Side::Outgoing, Letter::Edge(e)) => {
            assert_eq!(g.tail(e), v, "edge {} is not outgoing at {v}", g.token(e));
            2 * g.out_pos(e) as u32
        }
        (Side::Incoming, Letter::Left(c)) => {
            assert_eq!(c.apex, v, "corner apex mismatch at {v}");
            debug_assert_eq!(g.in_pos(c.upper), g.in_pos(c.lower) + 1);
            2 * g.in_pos(c.lower) as u32 + 1
        }
        (Side::Outgoing, Letter::Right(c)) => {
            assert_eq!(c.apex, v, "corner apex mismatch at {v}");
            debug_assert_eq!(g.out_pos(c.upper), g.out_pos(c.lower) + 1);
            2 * g.out_pos(c.lower) as u32 + 1
        }
        _ => panic!("letter on the wrong side of vertex {v}"),
    }
}

/// Total order on same-side letters at `v`: framing order on edges, with a
/// corner strictly between its two edges; letters compare equal only when
/// identical. Panics when a letter is not incident to `v` on `side`.
pub fn extended_letter_compare(
    g: &FramedGraph,
    v: Vertex,
    side: Side,
    a: Letter,
    b: Letter,
) -> Ordering {
    let ord = letter_key(g, v, side, a).cmp(&letter_key(g, v, side, b));
    debug_assert!(ord != Ordering::Equal || a == b);
    ord
}

/// Letters of the suffix of `r` strictly after position `pos` of its path,
/// ending with the right corner when there is one.
struct SuffixLetters<'a> {
    route: &'a GenRoute,
    next_edge: usize,
    corner_done: bool,
}

impl Iterator for SuffixLetters<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if self.next_edge < self.route.edges.len() {
            let e = self.route.edges[self.next_edge];
            self.next_edge += 1;
            return Some(Letter::Edge(e));
        }
        if !self.corner_done {
            self.corner_done = true;
            if let RightEnd::Corner(c) = self.route.right {
                return Some(Letter::Right(c));
            }
        }
        None
    }
}

/// Letters of the prefix of `r` read right-to-left from position `pos`,
/// ending with the left corner when there is one.
struct PrefixLetters<'a> {
    route: &'a GenRoute,
    next_edge: usize, // 1-based from the vertex, walking leftward
    corner_done: bool,
}

impl Iterator for PrefixLetters<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if self.next_edge > 0 {
            self.next_edge -= 1;
            return Some(Letter::Edge(self.route.edges[self.next_edge]));
        }
        if !self.corner_done {
            self.corner_done = true;
            if let LeftEnd::Corner(c) = self.route.left {
                return Some(Letter::Left(c));
            }
        }
        None
    }
}

/// Compares two generalized routes through `v` in the incoming or outgoing
/// preorder at `v`. Equality means the compared words are identical.
///
/// Panics when a route does not pass through `v`, and on a proper-prefix
/// tie, which cannot happen for well-formed generalized routes (words end
/// together at sinks, sources, or terminal corner letters).
pub fn cmp_preorder(
    g: &FramedGraph,
    v: Vertex,
    side: Side,
    s: &GenRoute,
    t: &GenRoute,
) -> Ordering {
    let pos_s = s
        .position_of(g, v)
        .unwrap_or_else(|| panic!("first route does not pass through vertex {v}"));
    let pos_t = t
        .position_of(g, v)
        .unwrap_or_else(|| panic!("second route does not pass through vertex {v}"));

    match side {
        Side::Outgoing => {
            let it_s = SuffixLetters {
                route: s,
                next_edge: pos_s,
                corner_done: false,
            };
            let it_t = SuffixLetters {
                route: t,
                next_edge: pos_t,
                corner_done: false,
            };
            walk_words(g, v, side, it_s, it_t, |g, e| g.head(e))
        }
        Side::Incoming => {
            let it_s = PrefixLetters {
                route: s,
                next_edge: pos_s,
                corner_done: false,
            };
            let it_t = PrefixLetters {
                route: t,
                next_edge: pos_t,
                corner_done: false,
            };
            walk_words(g, v, side, it_s, it_t, |g, e| g.tail(e))
        }
    }
}

fn walk_words(
    g: &FramedGraph,
    start: Vertex,
    side: Side,
    mut it_s: impl Iterator<Item = Letter>,
    mut it_t: impl Iterator<Item = Letter>,
    advance: impl Fn(&FramedGraph, EdgeId) -> Vertex,
) -> Ordering {
    let mut at = start;
    loop {
        match (it_s.next(), it_t.next()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) | (None, Some(_)) => {
                unreachable!("one word is a proper prefix of the other at vertex {at}")
            }
            (Some(a), Some(b)) => {
                let ord = extended_letter_compare(g, at, side, a, b);
                if ord != Ordering::Equal {
                    return ord;
                }
                match a {
                    Letter::Edge(e) => at = advance(g, e),
                    // Corner letters are terminal; both words end now.
                    Letter::Left(_) | Letter::Right(_) => {}
                }
            }
        }
    }
}

/// `s` is clockwise to `t` at `v`: strictly smaller incoming and strictly
/// larger outgoing.
pub fn is_clockwise_at(g: &FramedGraph, s: &GenRoute, t: &GenRoute, v: Vertex) -> bool {
    cmp_preorder(g, v, Side::Incoming, s, t) == Ordering::Less
        && cmp_preorder(g, v, Side::Outgoing, s, t) == Ordering::Greater
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoherenceVerdict {
    Coherent,
    SharedLeftCorner(LeftCorner),
    SharedRightCorner(RightCorner),
    /// The first route is clockwise to the second at this vertex.
    FirstClockwiseAt(Vertex),
    SecondClockwiseAt(Vertex),
}

fn shared_vertices(g: &FramedGraph, s: &GenRoute, t: &GenRoute) -> Vec<Vertex> {
    let vs = s.vertices(g);
    let vt = t.vertices(g);
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < vs.len() && j < vt.len() {
        match vs[i].cmp(&vt[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(vs[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Classifies a pair of generalized routes: shared end corners first, then
/// the smallest clockwise witness vertex, otherwise coherent.
pub fn coherence(g: &FramedGraph, s: &GenRoute, t: &GenRoute) -> CoherenceVerdict {
    if let (LeftEnd::Corner(a), LeftEnd::Corner(b)) = (s.left, t.left) {
        if a == b {
            return CoherenceVerdict::SharedLeftCorner(a);
        }
    }
    if let (RightEnd::Corner(a), RightEnd::Corner(b)) = (s.right, t.right) {
        if a == b {
            return CoherenceVerdict::SharedRightCorner(a);
        }
    }
    match clockwise_witness(g, s, t) {
        Some((v, true)) => CoherenceVerdict::FirstClockwiseAt(v),
        Some((v, false)) => CoherenceVerdict::SecondClockwiseAt(v),
        None => CoherenceVerdict::Coherent,
    }
}

fn clockwise_witness(g: &FramedGraph, s: &GenRoute, t: &GenRoute) -> Option<(Vertex, bool)> {
    for v in shared_vertices(g, s, t) {
        if is_clockwise_at(g, s, t, v) {
            return Some((v, true));
        }
        if is_clockwise_at(g, t, s, v) {
            return Some((v, false));
        }
    }
    None
}

/// No crossing at any shared vertex; shared corners are allowed.
pub fn weakly_coherent(g: &FramedGraph, s: &GenRoute, t: &GenRoute) -> bool {
    clockwise_witness(g, s, t).is_none()
}

pub fn is_coherent(g: &FramedGraph, s: &GenRoute, t: &GenRoute) -> bool {
    coherence(g, s, t) == CoherenceVerdict::Coherent
}

/// A maximal common subpath of two routes around an incoherence witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConflictSubroute {
    pub start: Vertex,
    pub end: Vertex,
    pub edges: Vec<EdgeId>,
}

/// The maximal common subpaths containing each incoherence witness of a pair
/// of routes, each reported once, ordered by start vertex.
pub fn conflict_subroutes(g: &FramedGraph, p: &Route, q: &Route) -> Vec<ConflictSubroute> {
    assert_ne!(p, q, "conflict subroutes need two distinct routes");
    let (pg, qg) = (p.as_gen(), q.as_gen());
    let mut out: Vec<ConflictSubroute> = Vec::new();
    for v in shared_vertices(g, pg, qg) {
        if !is_clockwise_at(g, pg, qg, v) && !is_clockwise_at(g, qg, pg, v) {
            continue;
        }
        let mut i = pg.position_of(g, v).unwrap();
        let mut j = qg.position_of(g, v).unwrap();
        while i > 0 && j > 0 && pg.edges[i - 1] == qg.edges[j - 1] {
            i -= 1;
            j -= 1;
        }
        let (start_i, start_j) = (i, j);
        let (mut i, mut j) = (pg.position_of(g, v).unwrap(), qg.position_of(g, v).unwrap());
        while i < pg.edges.len() && j < qg.edges.len() && pg.edges[i] == qg.edges[j] {
            i += 1;
            j += 1;
        }
        debug_assert_eq!(i - start_i, j - start_j);
        let sub = ConflictSubroute {
            start: pg.vertices(g)[start_i],
            end: pg.vertices(g)[i],
            edges: pg.edges[start_i..i].to_vec(),
        };
        if !out.contains(&sub) {
            out.push(sub);
        }
    }
    out.sort_by_key(|c| (c.start, c.end));
    out
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

#[derive(Debug, Error)]
#[error("route count {found} exceeds the configured limit {limit}")]
pub struct RouteLimitError {
    pub found: usize,
    pub limit: usize,
}

pub const DEFAULT_ROUTE_LIMIT: usize = 4096;

/// Number of source-to-sink routes, saturating at `usize::MAX`.
pub fn count_routes(g: &FramedGraph) -> usize {
    let mut ways = vec![0usize; g.vertex_count() + 1];
    for v in (1..=g.vertex_count()).rev() {
        if g.is_sink(v) {
            ways[v] = 1;
        } else {
            ways[v] = g
                .out_order(v)
                .iter()
                .fold(0usize, |acc, &e| acc.saturating_add(ways[g.head(e)]));
        }
    }
    g.sources()
        .iter()
        .fold(0usize, |acc, &v| acc.saturating_add(ways[v]))
}

/// All paths from `from` to sinks, in out-order DFS order.
fn paths_to_sinks(g: &FramedGraph, from: Vertex) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(g: &FramedGraph, at: Vertex, stack: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if g.is_sink(at) {
            out.push(stack.clone());
            return;
        }
        for &e in g.out_order(at) {
            stack.push(e);
            go(g, g.head(e), stack, out);
            stack.pop();
        }
    }
    go(g, from, &mut stack, &mut out);
    out
}

/// All paths from `from` to `to` (the empty path when they coincide).
fn paths_between(g: &FramedGraph, from: Vertex, to: Vertex) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(
        g: &FramedGraph,
        at: Vertex,
        to: Vertex,
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if at == to {
            out.push(stack.clone());
        }
        if at >= to {
            return;
        }
        for &e in g.out_order(at) {
            stack.push(e);
            go(g, g.head(e), to, stack, out);
            stack.pop();
        }
    }
    go(g, from, to, &mut stack, &mut out);
    out
}

/// All routes in canonical order (lexicographic by edge sequence).
pub fn enumerate_routes(g: &FramedGraph) -> Vec<Route> {
    let mut out: Vec<Route> = Vec::new();
    for s in g.sources() {
        for path in paths_to_sinks(g, s) {
            out.push(Route::from_edges(g, path));
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn enumerate_routes_limited(
    g: &FramedGraph,
    limit: usize,
) -> Result<Vec<Route>, RouteLimitError> {
    let found = count_routes(g);
    if found > limit {
        return Err(RouteLimitError { found, limit });
    }
    Ok(enumerate_routes(g))
}

/// All bricks: a left corner, a connecting path (possibly empty), and a
/// right corner. Canonically ordered.
pub fn enumerate_bricks(g: &FramedGraph) -> Vec<Brick> {
    let rights = g.right_corners();
    let mut out = Vec::new();
    for lc in g.left_corners() {
        for rc in &rights {
            if rc.apex < lc.apex {
                continue;
            }
            for path in paths_between(g, lc.apex, rc.apex) {
                out.push(Brick::new(g, lc, path, *rc));
            }
        }
    }
    out.sort();
    out
}

/// All bricks with left corner `c`, canonically ordered.
pub fn bricks_at_corner(g: &FramedGraph, c: LeftCorner) -> Vec<Brick> {
    let mut out = Vec::new();
    for rc in g.right_corners() {
        if rc.apex < c.apex {
            continue;
        }
        for path in paths_between(g, c.apex, rc.apex) {
            out.push(Brick::new(g, c, path, rc));
        }
    }
    out.sort();
    out
}

/// All left-cornered routes starting at `c`.
pub fn cornered_routes_at(g: &FramedGraph, c: LeftCorner) -> Vec<LeftCorneredRoute> {
    let mut out: Vec<LeftCorneredRoute> = paths_to_sinks(g, c.apex)
        .into_iter()
        .map(|p| LeftCorneredRoute::new(g, c, p))
        .collect();
    out.sort();
    out
}

/// All left-cornered routes of the graph, canonically ordered.
pub fn enumerate_left_cornered_routes(g: &FramedGraph) -> Vec<LeftCorneredRoute> {
    let mut out = Vec::new();
    for c in g.left_corners() {
        out.extend(cornered_routes_at(g, c));
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Textual notation
// ---------------------------------------------------------------------------

#[derive(Debug, Error)]
#[error("bad route notation `{input}`: {msg}")]
pub struct NotationError {
    pub input: String,
    pub msg: String,
}

/// Renders a generalized route: edge ids joined by `-`, a left corner as
/// `[v:lo|hi>`, a right corner as `<lo|hi:v]`, segments joined by `·`.
/// Vertices use the external numbering.
pub fn notation(g: &FramedGraph, r: &GenRoute) -> String {
    let mut parts: Vec<String> = Vec::new();
    if let LeftEnd::Corner(c) = r.left {
        parts.push(format!(
            "[{}:{}|{}>",
            g.external(c.apex),
            g.token(c.lower),
            g.token(c.upper)
        ));
    }
    if !r.edges.is_empty() {
        let mut seg = String::new();
        for (i, &e) in r.edges.iter().enumerate() {
            if i > 0 {
                seg.push('-');
            }
            let _ = write!(seg, "{}", g.token(e));
        }
        parts.push(seg);
    }
    if let RightEnd::Corner(c) = r.right {
        parts.push(format!(
            "<{}|{}:{}]",
            g.token(c.lower),
            g.token(c.upper),
            g.external(c.apex)
        ));
    }
    parts.join("·")
}

pub fn route_notation(g: &FramedGraph, r: &Route) -> String {
    notation(g, r.as_gen())
}

pub fn brick_notation(g: &FramedGraph, b: &Brick) -> String {
    notation(g, b.as_gen())
}

fn parse_corner_parts<'a>(
    g: &FramedGraph,
    input: &str,
    apex: &str,
    lo: &'a str,
    hi: &'a str,
) -> Result<(Vertex, EdgeId, EdgeId), NotationError> {
    let err = |msg: String| NotationError {
        input: input.to_string(),
        msg,
    };
    let apex: usize = apex
        .parse()
        .map_err(|_| err(format!("corner apex `{apex}` is not an integer")))?;
    let apex = g
        .internal(apex)
        .ok_or_else(|| err(format!("corner apex {apex} out of range")))?;
    let lo = g
        .edge_by_token(lo)
        .ok_or_else(|| err(format!("unknown edge `{lo}`")))?;
    let hi = g
        .edge_by_token(hi)
        .ok_or_else(|| err(format!("unknown edge `{hi}`")))?;
    Ok((apex, lo, hi))
}

/// Parses the notation produced by [`notation`]. Validates corners against
/// the framing and the path against the graph.
pub fn parse_notation(g: &FramedGraph, input: &str) -> Result<GenRoute, NotationError> {
    let err = |msg: String| NotationError {
        input: input.to_string(),
        msg,
    };
    let mut left = None;
    let mut right = None;
    let mut edges: Vec<EdgeId> = Vec::new();
    for part in input.split('·') {
        let part = part.trim();
        if part.is_empty() {
            return Err(err("empty segment".into()));
        }
        if let Some(body) = part.strip_prefix('[').and_then(|p| p.strip_suffix('>')) {
            let (apex, rest) = body
                .split_once(':')
                .ok_or_else(|| err("left corner needs `[v:lo|hi>`".into()))?;
            let (lo, hi) = rest
                .split_once('|')
                .ok_or_else(|| err("left corner needs `[v:lo|hi>`".into()))?;
            let (apex, lo, hi) = parse_corner_parts(g, input, apex, lo, hi)?;
            if left.is_some() || !edges.is_empty() || right.is_some() {
                return Err(err("left corner must come first".into()));
            }
            if g.head(lo) != apex || g.head(hi) != apex || g.in_pos(hi) != g.in_pos(lo) + 1 {
                return Err(err("edges are not framing-consecutive incoming at the apex".into()));
            }
            left = Some(LeftCorner {
                apex,
                lower: lo,
                upper: hi,
            });
        } else if let Some(body) = part.strip_prefix('<').and_then(|p| p.strip_suffix(']')) {
            let (rest, apex) = body
                .rsplit_once(':')
                .ok_or_else(|| err("right corner needs `<lo|hi:v]`".into()))?;
            let (lo, hi) = rest
                .split_once('|')
                .ok_or_else(|| err("right corner needs `<lo|hi:v]`".into()))?;
            let (apex, lo, hi) = parse_corner_parts(g, input, apex, lo, hi)?;
            if right.is_some() {
                return Err(err("duplicate right corner".into()));
            }
            if g.tail(lo) != apex || g.tail(hi) != apex || g.out_pos(hi) != g.out_pos(lo) + 1 {
                return Err(err("edges are not framing-consecutive outgoing at the apex".into()));
            }
            right = Some(RightCorner {
                apex,
                lower: lo,
                upper: hi,
            });
        } else {
            if right.is_some() {
                return Err(err("path segment after the right corner".into()));
            }
            for tok in part.split('-') {
                let e = g
                    .edge_by_token(tok.trim())
                    .ok_or_else(|| err(format!("unknown edge `{tok}`")))?;
                edges.push(e);
            }
        }
    }
    for w in edges.windows(2) {
        if g.head(w[0]) != g.tail(w[1]) {
            return Err(err("edges do not form a path".into()));
        }
    }
    let left = match left {
        Some(c) => {
            if let Some(&e) = edges.first() {
                if g.tail(e) != c.apex {
                    return Err(err("path does not start at the left corner apex".into()));
                }
            }
            LeftEnd::Corner(c)
        }
        None => {
            let start = edges
                .first()
                .map(|&e| g.tail(e))
                .or(right.map(|c| c.apex))
                .ok_or_else(|| err("empty notation".into()))?;
            LeftEnd::Vertex(start)
        }
    };
    let right = match right {
        Some(c) => {
            if let Some(&e) = edges.last() {
                if g.head(e) != c.apex {
                    return Err(err("path does not end at the right corner apex".into()));
                }
            }
            RightEnd::Corner(c)
        }
        None => {
            let end = edges
                .last()
                .map(|&e| g.head(e))
                .or(match left {
                    LeftEnd::Corner(c) => Some(c.apex),
                    LeftEnd::Vertex(_) => None,
                })
                .ok_or_else(|| err("empty notation".into()))?;
            RightEnd::Vertex(end)
        }
    };
    if edges.is_empty() {
        let lv = match left {
            LeftEnd::Vertex(v) => v,
            LeftEnd::Corner(c) => c.apex,
        };
        let rv = match right {
            RightEnd::Vertex(v) => v,
            RightEnd::Corner(c) => c.apex,
        };
        if lv != rv {
            return Err(err("empty path with ends at different vertices".into()));
        }
    }
    Ok(GenRoute { edges, left, right })
}

/// Parses a brick from notation, requiring corners on both ends.
pub fn parse_brick(g: &FramedGraph, input: &str) -> Result<Brick, NotationError> {
    let r = parse_notation(g, input)?;
    match (r.left, r.right) {
        (LeftEnd::Corner(_), RightEnd::Corner(_)) => Ok(Brick(r)),
        _ => Err(NotationError {
            input: input.to_string(),
            msg: "a brick needs corners at both ends".into(),
        }),
    }
}

/// Parses a plain route from notation (edge ids joined by `-`).
pub fn parse_route(g: &FramedGraph, input: &str) -> Result<Route, NotationError> {
    let r = parse_notation(g, input)?;
    match (r.left, r.right) {
        (LeftEnd::Vertex(s), RightEnd::Vertex(e)) if g.is_source(s) && g.is_sink(e) => {
            Ok(Route(r))
        }
        _ => Err(NotationError {
            input: input.to_string(),
            msg: "not a source-to-sink route".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{caracol, oruga};

    fn route(g: &FramedGraph, tokens: &[&str]) -> Route {
        Route::from_edges(
            g,
            tokens.iter().map(|t| g.edge_by_token(t).unwrap()).collect(),
        )
    }

    fn oruga2_brick(g: &FramedGraph) -> Brick {
        let c = g.left_corners()[0];
        let r = g.right_corners()[0];
        Brick::new(g, c, vec![], r)
    }

    #[test]
    fn extended_order_at_oruga2() {
        let g = oruga(2);
        let c = g.left_corners()[0];
        let u1 = Letter::Edge(g.edge_by_token("u1").unwrap());
        let d1 = Letter::Edge(g.edge_by_token("d1").unwrap());
        let corner = Letter::Left(c);
        assert_eq!(
            extended_letter_compare(&g, 2, Side::Incoming, u1, corner),
            Ordering::Less
        );
        assert_eq!(
            extended_letter_compare(&g, 2, Side::Incoming, corner, d1),
            Ordering::Less
        );
        assert_eq!(
            extended_letter_compare(&g, 2, Side::Incoming, u1, u1),
            Ordering::Equal
        );
        // Same rule on the outgoing side of oruga(3)'s vertex 2.
        let g = oruga(3);
        let rc = g.right_corners()[0];
        assert_eq!(rc.apex, 2);
        let u2 = Letter::Edge(g.edge_by_token("u2").unwrap());
        let d2 = Letter::Edge(g.edge_by_token("d2").unwrap());
        assert_eq!(
            extended_letter_compare(&g, 2, Side::Outgoing, u2, Letter::Right(rc)),
            Ordering::Less
        );
        assert_eq!(
            extended_letter_compare(&g, 2, Side::Outgoing, Letter::Right(rc), d2),
            Ordering::Less
        );
    }

    #[test]
    fn preorder_hand_values() {
        let g = oruga(2);
        let ud = route(&g, &["u1", "d2"]);
        let du = route(&g, &["d1", "u2"]);
        assert_eq!(
            cmp_preorder(&g, 2, Side::Incoming, ud.as_gen(), du.as_gen()),
            Ordering::Less
        );
        assert_eq!(
            cmp_preorder(&g, 2, Side::Outgoing, ud.as_gen(), du.as_gen()),
            Ordering::Greater
        );
        assert_eq!(
            cmp_preorder(&g, 2, Side::Incoming, ud.as_gen(), ud.as_gen()),
            Ordering::Equal
        );
        // Brick versus route, outgoing: the right corner letter beats u2.
        let b = oruga2_brick(&g);
        assert_eq!(
            cmp_preorder(&g, 2, Side::Outgoing, b.as_gen(), du.as_gen()),
            Ordering::Greater
        );
    }

    #[test]
    fn clockwise_checks() {
        let g = oruga(2);
        let ud = route(&g, &["u1", "d2"]);
        let du = route(&g, &["d1", "u2"]);
        assert!(is_clockwise_at(&g, ud.as_gen(), du.as_gen(), 2));
        assert!(!is_clockwise_at(&g, du.as_gen(), ud.as_gen(), 2));
        assert!(!is_clockwise_at(&g, ud.as_gen(), ud.as_gen(), 2));
        // The brick is clockwise (left-clockwise) to d1·u2 at the apex.
        let b = oruga2_brick(&g);
        assert!(is_clockwise_at(&g, b.as_gen(), du.as_gen(), 2));
    }

    #[test]
    fn coherence_verdicts() {
        let g = oruga(2);
        let uu = route(&g, &["u1", "u2"]);
        let dd = route(&g, &["d1", "d2"]);
        let ud = route(&g, &["u1", "d2"]);
        let du = route(&g, &["d1", "u2"]);
        assert_eq!(coherence(&g, uu.as_gen(), dd.as_gen()), CoherenceVerdict::Coherent);
        assert_eq!(
            coherence(&g, ud.as_gen(), du.as_gen()),
            CoherenceVerdict::FirstClockwiseAt(2)
        );
        assert_eq!(
            coherence(&g, du.as_gen(), ud.as_gen()),
            CoherenceVerdict::SecondClockwiseAt(2)
        );
        let b = oruga2_brick(&g);
        assert_eq!(
            coherence(&g, b.as_gen(), b.as_gen()),
            CoherenceVerdict::SharedLeftCorner(b.left_corner())
        );
    }

    #[test]
    fn conflict_subroute_examples() {
        let g = oruga(2);
        let ud = route(&g, &["u1", "d2"]);
        let du = route(&g, &["d1", "u2"]);
        let conflicts = conflict_subroutes(&g, &ud, &du);
        assert_eq!(conflicts.len(), 1);
        assert_eq!(conflicts[0].start, 2);
        assert_eq!(conflicts[0].end, 2);
        assert!(conflicts[0].edges.is_empty());
        let uu = route(&g, &["u1", "u2"]);
        assert!(conflict_subroutes(&g, &uu, &du).is_empty());
    }

    #[test]
    fn route_counts() {
        assert_eq!(enumerate_routes(&oruga(3)).len(), 8);
        assert_eq!(enumerate_routes(&caracol(2)).len(), 4);
        assert_eq!(enumerate_routes(&caracol(3)).len(), 8);
        let single = parse_framed_graph_for_test("vertices 2 base1\nedge a 1 2\n");
        assert_eq!(enumerate_routes(&single).len(), 1);
        assert!(enumerate_routes_limited(&oruga(3), 7).is_err());
    }

    fn parse_framed_graph_for_test(text: &str) -> FramedGraph {
        crate::graph::parse_framed_graph(text).unwrap()
    }

    #[test]
    fn brick_counts_on_oruga() {
        let g = oruga(2);
        let bricks = enumerate_bricks(&g);
        assert_eq!(bricks.len(), 1);
        assert!(bricks[0].edges().is_empty());
        assert_eq!(enumerate_bricks(&oruga(3)).len(), 4);
        assert_eq!(enumerate_bricks(&oruga(4)).len(), 11);
    }

    #[test]
    fn notation_roundtrip() {
        let g = oruga(2);
        let b = oruga2_brick(&g);
        let s = brick_notation(&g, &b);
        assert_eq!(s, "[1:u1|d1>·<u2|d2:1]");
        assert_eq!(&parse_brick(&g, &s).unwrap(), &b);
        let r = route(&g, &["u1", "d2"]);
        assert_eq!(route_notation(&g, &r), "u1-d2");
        assert_eq!(parse_route(&g, "u1-d2").unwrap(), r);
        assert!(parse_notation(&g, "[1:u1|d2>").is_err());
        assert!(parse_route(&g, "u1-u1").is_err());
    }

    #[test]
    fn cornered_route_enumeration() {
        let g = oruga(3);
        let c = g.left_corners()[0];
        let routes = cornered_routes_at(&g, c);
        assert_eq!(routes.len(), 4);
        assert!(routes.iter().all(|r| r.corner() == c));
        assert_eq!(enumerate_left_cornered_routes(&g).len(), 4 + 2);
    }
}
