//! Framed directed acyclic graphs.
//!
//! A framed graph is a DAG on vertices `1..=n` (every edge goes from a
//! smaller to a larger vertex, so acyclicity is structural) together with a
//! total order on the incoming edges and on the outgoing edges of each
//! vertex, the *framing*. Edges are identified by opaque tokens so that
//! parallel edges are distinct objects.
//!
//! Vertices are numbered `1..=n` internally; files and display output use an
//! external numbering that starts at 0 or 1 depending on the graph's base.

use std::collections::BTreeMap;
use std::fmt;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Internal vertex label, always in `1..=vertex_count`.
pub type Vertex = usize;

/// Handle for an edge; the index is the declaration position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub(crate) u32);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// External numbering convention for vertices in files and display output.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Base {
    Zero,
    #[default]
    One,
}

impl Base {
    fn token(self) -> &'static str {
        match self {
            Base::Zero => "base0",
            Base::One => "base1",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeData {
    pub token: String,
    pub tail: Vertex,
    pub head: Vertex,
}

/// Two incoming edges of an internal vertex that sit next to each other in
/// the framing, `lower` immediately before `upper`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LeftCorner {
    pub apex: Vertex,
    pub lower: EdgeId,
    pub upper: EdgeId,
}

/// The outgoing-side counterpart of [`LeftCorner`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RightCorner {
    pub apex: Vertex,
    pub lower: EdgeId,
    pub upper: EdgeId,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid framed graph: {0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::Invalid(msg.into())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FramedGraph {
    vertex_count: usize,
    base: Base,
    edges: Vec<EdgeData>,
    /// Incoming framing per vertex (index 0 unused), smallest first.
    in_order: Vec<Vec<EdgeId>>,
    out_order: Vec<Vec<EdgeId>>,
    /// Position of each edge in the framing of its head / tail.
    in_pos: Vec<u32>,
    out_pos: Vec<u32>,
}

fn token_ok(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FramedGraph {
    /// Builds a framed graph from raw parts with internal vertex labels.
    ///
    /// `in_over` / `out_over` override the framing of individual vertices
    /// (edge tokens listed smallest first); every vertex without an override
    /// uses edge declaration order.
    pub fn from_parts(
        vertex_count: usize,
        base: Base,
        edges: Vec<(String, Vertex, Vertex)>,
        in_over: &BTreeMap<Vertex, Vec<String>>,
        out_over: &BTreeMap<Vertex, Vec<String>>,
    ) -> Result<FramedGraph, GraphError> {
        if vertex_count == 0 {
            return Err(invalid("vertex count must be positive"));
        }
        if edges.is_empty() {
            return Err(invalid("graph has no edges"));
        }
        let mut tokens: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, (token, tail, head)) in edges.iter().enumerate() {
            if !token_ok(token) {
                return Err(invalid(format!(
                    "edge id `{token}` must be alphanumeric or '_'"
                )));
            }
            if tokens.insert(token, i).is_some() {
                return Err(invalid(format!("duplicate edge id `{token}`")));
            }
            if !(1..=vertex_count).contains(tail) || !(1..=vertex_count).contains(head) {
                return Err(invalid(format!("edge `{token}` endpoint out of range")));
            }
            if tail >= head {
                return Err(invalid(format!(
                    "edge `{token}` must go from a smaller to a larger vertex"
                )));
            }
        }
        let edges: Vec<EdgeData> = edges
            .into_iter()
            .map(|(token, tail, head)| EdgeData { token, tail, head })
            .collect();

        let mut in_order: Vec<Vec<EdgeId>> = vec![Vec::new(); vertex_count + 1];
        let mut out_order: Vec<Vec<EdgeId>> = vec![Vec::new(); vertex_count + 1];
        for (i, e) in edges.iter().enumerate() {
            out_order[e.tail].push(EdgeId(i as u32));
            in_order[e.head].push(EdgeId(i as u32));
        }
        for v in 1..=vertex_count {
            if in_order[v].is_empty() && out_order[v].is_empty() {
                return Err(invalid(format!("vertex {v} is isolated")));
            }
        }

        let mut g = FramedGraph {
            vertex_count,
            base,
            edges,
            in_order,
            out_order,
            in_pos: Vec::new(),
            out_pos: Vec::new(),
        };
        for (v, toks) in in_over {
            let ids = g.framing_override(*v, toks, true)?;
            g.in_order[*v] = ids;
        }
        for (v, toks) in out_over {
            let ids = g.framing_override(*v, toks, false)?;
            g.out_order[*v] = ids;
        }
        g.rebuild_positions();
        Ok(g)
    }

    fn framing_override(
        &self,
        v: Vertex,
        tokens: &[String],
        incoming: bool,
    ) -> Result<Vec<EdgeId>, GraphError> {
        let side = if incoming { "in" } else { "out" };
        if !(1..=self.vertex_count).contains(&v) {
            return Err(invalid(format!("framing `{side}` for unknown vertex")));
        }
        let current = if incoming {
            &self.in_order[v]
        } else {
            &self.out_order[v]
        };
        let mut ids = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let id = self
                .edge_by_token(tok)
                .ok_or_else(|| invalid(format!("framing `{side} {v}` names unknown edge `{tok}`")))?;
            ids.push(id);
        }
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let mut expected = current.clone();
        expected.sort_unstable();
        if sorted != expected {
            return Err(invalid(format!(
                "framing `{side} {v}` is not a permutation of the incident edges"
            )));
        }
        Ok(ids)
    }

    fn rebuild_positions(&mut self) {
        self.in_pos = vec![0; self.edges.len()];
        self.out_pos = vec![0; self.edges.len()];
        for v in 1..=self.vertex_count {
            for (p, e) in self.in_order[v].iter().enumerate() {
                self.in_pos[e.index()] = p as u32;
            }
            for (p, e) in self.out_order[v].iter().enumerate() {
                self.out_pos[e.index()] = p as u32;
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.vertex_count
    }

    pub fn base(&self) -> Base {
        self.base
    }

    /// External label of an internal vertex, per the graph's base.
    pub fn external(&self, v: Vertex) -> usize {
        match self.base {
            Base::Zero => v - 1,
            Base::One => v,
        }
    }

    pub fn internal(&self, external: usize) -> Option<Vertex> {
        let v = match self.base {
            Base::Zero => external + 1,
            Base::One => external,
        };
        (1..=self.vertex_count).contains(&v).then_some(v)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &EdgeData {
        &self.edges[e.index()]
    }

    pub fn token(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].token
    }

    pub fn tail(&self, e: EdgeId) -> Vertex {
        self.edges[e.index()].tail
    }

    pub fn head(&self, e: EdgeId) -> Vertex {
        self.edges[e.index()].head
    }

    pub fn edge_by_token(&self, token: &str) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.token == token)
            .map(|i| EdgeId(i as u32))
    }

    pub fn in_order(&self, v: Vertex) -> &[EdgeId] {
        &self.in_order[v]
    }

    pub fn out_order(&self, v: Vertex) -> &[EdgeId] {
        &self.out_order[v]
    }

    /// Position of `e` in the incoming framing of its head.
    pub fn in_pos(&self, e: EdgeId) -> usize {
        self.in_pos[e.index()] as usize
    }

    /// Position of `e` in the outgoing framing of its tail.
    pub fn out_pos(&self, e: EdgeId) -> usize {
        self.out_pos[e.index()] as usize
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.in_order[v].is_empty()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out_order[v].is_empty()
    }

    pub fn is_internal(&self, v: Vertex) -> bool {
        !self.is_source(v) && !self.is_sink(v)
    }

    pub fn sources(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_source(v)).collect()
    }

    pub fn sinks(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_sink(v)).collect()
    }

    /// Edges whose head is a sink, in declaration order.
    pub fn sink_edges(&self) -> Vec<EdgeId> {
        self.edge_ids().filter(|&e| self.is_sink(self.head(e))).collect()
    }

    /// All left corners in canonical order: by apex, then by framing position.
    pub fn left_corners(&self) -> Vec<LeftCorner> {
        let mut out = Vec::new();
        for v in self.vertices() {
            if !self.is_internal(v) {
                continue;
            }
            for w in self.in_order[v].windows(2) {
                out.push(LeftCorner {
                    apex: v,
                    lower: w[0],
                    upper: w[1],
                });
            }
        }
        out
    }

    pub fn right_corners(&self) -> Vec<RightCorner> {
        let mut out = Vec::new();
        for v in self.vertices() {
            if !self.is_internal(v) {
                continue;
            }
            for w in self.out_order[v].windows(2) {
                out.push(RightCorner {
                    apex: v,
                    lower: w[0],
                    upper: w[1],
                });
            }
        }
        out
    }

    /// Reverses every framing sequence; the framing lattice of the result is
    /// the dual of the original.
    pub fn reflect_ud(&self) -> FramedGraph {
        let mut g = self.clone();
        for v in 1..=g.vertex_count {
            g.in_order[v].reverse();
            g.out_order[v].reverse();
        }
        g.rebuild_positions();
        g
    }

    /// Reverses every edge, renumbering vertex `v` to `n + 1 - v`, and swaps
    /// the incoming and outgoing framings of each vertex. Also dualizes the
    /// framing lattice.
    pub fn reflect_lr(&self) -> FramedGraph {
        let n = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeData {
                token: e.token.clone(),
                tail: n + 1 - e.head,
                head: n + 1 - e.tail,
            })
            .collect();
        let mut in_order = vec![Vec::new(); n + 1];
        let mut out_order = vec![Vec::new(); n + 1];
        for v in 1..=n {
            in_order[n + 1 - v] = self.out_order[v].clone();
            out_order[n + 1 - v] = self.in_order[v].clone();
        }
        let mut g = FramedGraph {
            vertex_count: n,
            base: self.base,
            edges,
            in_order,
            out_order,
            in_pos: Vec::new(),
            out_pos: Vec::new(),
        };
        g.rebuild_positions();
        g
    }

    /// Same graph with all framings reshuffled deterministically from `seed`.
    pub fn random_reframing(&self, seed: u64) -> FramedGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_f7a3);
        let mut g = self.clone();
        for v in 1..=g.vertex_count {
            g.in_order[v].shuffle(&mut rng);
            g.out_order[v].shuffle(&mut rng);
        }
        g.rebuild_positions();
        g
    }
}

/// Caterpillar with two parallel edges `u{i}` (framing-smaller) and `d{i}`
/// per step. External vertices run `0..=n`. Its framing lattice is the weak
/// order on permutations of `1..=n`.
pub fn oruga(n: usize) -> FramedGraph {
    assert!(n >= 1, "oruga needs n >= 1");
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((format!("u{i}"), i, i + 1));
        edges.push((format!("d{i}"), i, i + 1));
    }
    FramedGraph::from_parts(n + 1, Base::Zero, edges, &BTreeMap::new(), &BTreeMap::new())
        .expect("oruga is always valid")
}

/// Fan-plus-path graph on external vertices `0..=n+2`: path edges `p{i}`
/// from `i` to `i+1`, plus `a{i}: (0, i)` and `z{i}: (i, n+2)` for
/// `2 <= i <= n`. Path edges come first in every framing; with this framing
/// its framing lattice is the Tamari lattice.
pub fn caracol(n: usize) -> FramedGraph {
    assert!(n >= 2, "caracol needs n >= 2");
    let count = n + 3; // internal 1..=n+3, external 0..=n+2
    let mut edges = Vec::new();
    for i in 0..=n + 1 {
        edges.push((format!("p{i}"), i + 1, i + 2));
    }
    for i in 2..=n {
        edges.push((format!("a{i}"), 1, i + 1));
    }
    for i in 2..=n {
        edges.push((format!("z{i}"), i + 1, count));
    }
    FramedGraph::from_parts(count, Base::Zero, edges, &BTreeMap::new(), &BTreeMap::new())
        .expect("caracol is always valid")
}

fn count_routes_at_most(g: &FramedGraph, cap: usize) -> usize {
    // Paths to a sink, computed from the largest vertex down; saturates at
    // cap + 1 so callers can detect overflow without big integers.
    let mut ways = vec![0usize; g.vertex_count() + 1];
    for v in (1..=g.vertex_count()).rev() {
        if g.is_sink(v) {
            ways[v] = 1;
        } else {
            let mut total = 0usize;
            for &e in g.out_order(v) {
                total = total.saturating_add(ways[g.head(e)]);
            }
            ways[v] = total.min(cap + 1);
        }
    }
    let mut total = 0usize;
    for v in g.sources() {
        total = total.saturating_add(ways[v]);
    }
    total.min(cap + 1)
}

/// Seeded layered random framed graph: vertices split into layers, edges
/// between nearby layers with multiplicity at most 2, framings shuffled.
/// Candidates without corners or beyond the edge and route caps are
/// rejected, so every graph has corner structure to exercise and the result
/// is deterministic for a given seed.
pub fn random_framed_graph(
    seed: u64,
    max_vertices: usize,
    max_edges: usize,
    max_routes: usize,
) -> FramedGraph {
    assert!(max_vertices >= 3 && max_edges >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..10_000 {
        let nv = rng.gen_range(max_vertices.saturating_sub(2).max(3)..=max_vertices);
        let layers = rng.gen_range(2..=nv.min(3));
        // Cut points splitting 1..=nv into contiguous non-empty layers.
        let mut layer_of = vec![0usize; nv + 1];
        {
            let mut cuts: Vec<usize> = (1..nv).collect();
            cuts.shuffle(&mut rng);
            let mut cuts: Vec<usize> = cuts.into_iter().take(layers - 1).collect();
            cuts.sort_unstable();
            for v in 1..=nv {
                layer_of[v] = cuts.iter().filter(|&&c| c < v).count();
            }
        }
        let mut raw: Vec<(Vertex, Vertex)> = Vec::new();
        for u in 1..=nv {
            for v in u + 1..=nv {
                let gap = layer_of[v] - layer_of[u];
                if gap == 0 || gap > 2 {
                    continue;
                }
                let p = if gap == 1 { 0.8 } else { 0.4 };
                if rng.gen_bool(p) {
                    raw.push((u, v));
                    if rng.gen_bool(0.45) {
                        raw.push((u, v));
                    }
                }
            }
        }
        if raw.len() > max_edges {
            raw.shuffle(&mut rng);
            raw.truncate(max_edges);
            raw.sort_unstable();
        }
        if raw.len() < 3 {
            continue;
        }
        let edges: Vec<(String, Vertex, Vertex)> = raw
            .iter()
            .enumerate()
            .map(|(i, &(t, h))| (format!("e{i}"), t, h))
            .collect();
        let g = match FramedGraph::from_parts(
            nv,
            Base::One,
            edges,
            &BTreeMap::new(),
            &BTreeMap::new(),
        ) {
            Ok(g) => g,
            Err(_) => continue, // isolated vertex: reject
        };
        if count_routes_at_most(&g, max_routes) > max_routes {
            continue;
        }
        if g.left_corners().is_empty() || g.right_corners().is_empty() {
            continue;
        }
        return g.random_reframing(rng.gen());
    }
    panic!("random_framed_graph: no acceptable candidate for seed {seed}");
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Parses the line-oriented framed-graph format:
///
/// ```text
/// vertices <n> [base0|base1]
/// edge <id> <tail> <head>
/// in <v>: <id> <id> ...
/// out <v>: <id> ...
/// ```
///
/// `#` starts a comment; framing lines are optional (declaration order is
/// the default) and list edges smallest first.
pub fn parse_framed_graph(text: &str) -> Result<FramedGraph, GraphError> {
    let mut vertex_count: Option<(usize, Base)> = None;
    let mut edges: Vec<(String, usize, usize)> = Vec::new();
    let mut in_over: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut out_over: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut raw_framings: Vec<(usize, bool, usize, Vec<String>)> = Vec::new();

    let syntax = |line: usize, msg: String| GraphError::Syntax { line, msg };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let directive = words.next().unwrap();
        match directive {
            "vertices" => {
                if vertex_count.is_some() {
                    return Err(syntax(lineno, "duplicate `vertices` header".into()));
                }
                let n: usize = words
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected vertex count".into()))?
                    .parse()
                    .map_err(|_| syntax(lineno, "vertex count must be an integer".into()))?;
                let base = match words.next() {
                    None => Base::One,
                    Some("base0") => Base::Zero,
                    Some("base1") => Base::One,
                    Some(other) => {
                        return Err(syntax(lineno, format!("unknown base `{other}`")));
                    }
                };
                if words.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens after `vertices`".into()));
                }
                vertex_count = Some((n, base));
            }
            "edge" => {
                let id = words
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected edge id".into()))?;
                let tail: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(lineno, "expected integer tail vertex".into()))?;
                let head: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(lineno, "expected integer head vertex".into()))?;
                if words.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens after `edge`".into()));
                }
                edges.push((id.to_string(), tail, head));
            }
            "in" | "out" => {
                let rest = line[directive.len()..].trim();
                let (vtx, ids) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(lineno, format!("`{directive}` line needs `v: ids`")))?;
                let v: usize = vtx
                    .trim()
                    .parse()
                    .map_err(|_| syntax(lineno, "framing vertex must be an integer".into()))?;
                let toks: Vec<String> = ids.split_whitespace().map(str::to_string).collect();
                if toks.is_empty() {
                    return Err(syntax(lineno, "framing line lists no edges".into()));
                }
                raw_framings.push((lineno, directive == "in", v, toks));
            }
            other => {
                return Err(syntax(lineno, format!("unknown directive `{other}`")));
            }
        }
    }

    let (n, base) = vertex_count
        .ok_or_else(|| syntax(0, "missing `vertices` header".into()))?;
    let to_internal = |lineno: usize, x: usize| -> Result<Vertex, GraphError> {
        let v = match base {
            Base::Zero => x + 1,
            Base::One => x,
        };
        if (1..=n).contains(&v) {
            Ok(v)
        } else {
            Err(syntax(lineno, format!("vertex {x} out of range")))
        }
    };
    // Re-walk edge endpoints now that the base is known. Edge lines may
    // legally precede the header only in memory, not in files; the spec of
    // the format puts the header first, so report range errors against it.
    let mut internal_edges = Vec::with_capacity(edges.len());
    for (tok, t, h) in edges {
        internal_edges.push((tok, to_internal(1, t)?, to_internal(1, h)?));
    }
    for (lineno, incoming, v, toks) in raw_framings {
        let v = to_internal(lineno, v)?;
        let store = if incoming { &mut in_over } else { &mut out_over };
        if store.insert(v, toks).is_some() {
            return Err(syntax(
                lineno,
                format!(
                    "duplicate `{}` framing for vertex",
                    if incoming { "in" } else { "out" }
                ),
            ));
        }
    }
    FramedGraph::from_parts(n, base, internal_edges, &in_over, &out_over)
}

/// Canonical serialization; `parse_framed_graph` inverts it exactly and the
/// output is byte-stable under a parse/serialize round trip.
pub fn serialize_framed_graph(g: &FramedGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "vertices {} {}\n",
        g.vertex_count(),
        g.base().token()
    ));
    for e in g.edge_ids() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            g.token(e),
            g.external(g.tail(e)),
            g.external(g.head(e))
        ));
    }
    for v in g.vertices() {
        if g.in_order(v).len() >= 2 {
            let toks: Vec<&str> = g.in_order(v).iter().map(|&e| g.token(e)).collect();
            out.push_str(&format!("in {}: {}\n", g.external(v), toks.join(" ")));
        }
        if g.out_order(v).len() >= 2 {
            let toks: Vec<&str> = g.out_order(v).iter().map(|&e| g.token(e)).collect();
            out.push_str(&format!("out {}: {}\n", g.external(v), toks.join(" ")));
        }
    }
    out
}

impl fmt::Display for LeftCorner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftCorner(v{}, {:?}|{:?})", self.apex, self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oruga2_shape() {
        let g = oruga(2);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.left_corners().len(), 1);
        assert_eq!(g.right_corners().len(), 1);
        let c = g.left_corners()[0];
        assert_eq!(c.apex, 2);
        assert_eq!(g.token(c.lower), "u1");
        assert_eq!(g.token(c.upper), "d1");
        assert_eq!(g.external(c.apex), 1);
    }

    #[test]
    fn oruga1_degenerate() {
        let g = oruga(1);
        assert!(g.left_corners().is_empty());
        assert!(g.right_corners().is_empty());
        assert_eq!(g.sources(), vec![1]);
        assert_eq!(g.sinks(), vec![2]);
    }

    #[test]
    fn caracol3_shape() {
        let g = caracol(3);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        // Left corners only at the two in-degree-2 vertices (external 2, 3).
        let corners = g.left_corners();
        assert_eq!(corners.len(), 2);
        assert_eq!(
            corners.iter().map(|c| g.external(c.apex)).collect::<Vec<_>>(),
            vec![2, 3]
        );
        // Path edges are framing-smallest everywhere.
        for c in corners {
            assert!(g.token(c.lower).starts_with('p'));
        }
    }

    #[test]
    fn caracol_degree_bound() {
        for n in 2..=4 {
            let g = caracol(n);
            for v in g.vertices().filter(|&v| g.is_internal(v)) {
                assert!(g.in_order(v).len() <= 2);
                assert!(g.out_order(v).len() <= 2);
            }
        }
    }

    #[test]
    fn corner_count_formula() {
        for g in [oruga(3), caracol(3), random_framed_graph(11, 6, 10, 512)] {
            let expect: usize = g
                .vertices()
                .filter(|&v| g.is_internal(v))
                .map(|v| g.in_order(v).len().saturating_sub(1))
                .sum();
            assert_eq!(g.left_corners().len(), expect);
        }
    }

    #[test]
    fn parse_rejects_bad_edge_direction() {
        let err = parse_framed_graph("vertices 2 base1\nedge a 2 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Invalid(_)));
        assert!(err.to_string().contains("smaller"));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_framed_graph("vertices 2 base1\nbogus x\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"));
    }

    #[test]
    fn parse_serialize_roundtrip() {
        let text = "# oruga of size 2\nvertices 3 base0\nedge u1 0 1\nedge d1 0 1\nedge u2 1 2\nedge d2 1 2\nin 1: u1 d1\nout 1: u2 d2\n";
        let g = parse_framed_graph(text).unwrap();
        assert_eq!(g, oruga(2));
        let canon = serialize_framed_graph(&g);
        assert_eq!(parse_framed_graph(&canon).unwrap(), g);
        assert_eq!(serialize_framed_graph(&parse_framed_graph(&canon).unwrap()), canon);
    }

    #[test]
    fn framing_override_must_be_permutation() {
        let text = "vertices 3 base1\nedge a 1 2\nedge b 1 2\nedge c 2 3\nin 2: a a\n";
        assert!(parse_framed_graph(text).is_err());
        let text = "vertices 3 base1\nedge a 1 2\nedge b 1 2\nedge c 2 3\nin 2: a c\n";
        assert!(parse_framed_graph(text).is_err());
    }

    #[test]
    fn reflections_are_involutions_and_commute() {
        for g in [oruga(3), caracol(2), random_framed_graph(5, 6, 10, 512)] {
            assert_eq!(g.reflect_ud().reflect_ud(), g);
            assert_eq!(g.reflect_lr().reflect_lr(), g);
            assert_eq!(g.reflect_ud().reflect_lr(), g.reflect_lr().reflect_ud());
        }
    }

    #[test]
    fn reflect_ud_reverses_framing() {
        let g = oruga(2);
        let r = g.reflect_ud();
        let toks: Vec<&str> = r.in_order(2).iter().map(|&e| r.token(e)).collect();
        assert_eq!(toks, ["d1", "u1"]);
    }

    #[test]
    fn oruga_is_lr_symmetric_up_to_edge_renaming() {
        // The bijection u_i <-> u_{n+1-i}, d_i <-> d_{n+1-i} is a framed-graph
        // isomorphism from oruga(n) to its left-right reflection.
        for n in 1..=4 {
            let g = oruga(n);
            let r = g.reflect_lr();
            let phi = |e: EdgeId| -> EdgeId {
                let t = g.token(e);
                let (kind, i) = t.split_at(1);
                let i: usize = i.parse().unwrap();
                r.edge_by_token(&format!("{kind}{}", n + 1 - i)).unwrap()
            };
            for e in g.edge_ids() {
                assert_eq!(r.tail(phi(e)), g.tail(e));
                assert_eq!(r.head(phi(e)), g.head(e));
            }
            for v in g.vertices() {
                let mapped: Vec<EdgeId> = g.in_order(v).iter().map(|&e| phi(e)).collect();
                assert_eq!(mapped, r.in_order(v));
                let mapped: Vec<EdgeId> = g.out_order(v).iter().map(|&e| phi(e)).collect();
                assert_eq!(mapped, r.out_order(v));
            }
        }
    }

    #[test]
    fn random_graphs_are_deterministic() {
        let a = random_framed_graph(42, 6, 10, 512);
        let b = random_framed_graph(42, 6, 10, 512);
        assert_eq!(a, b);
        assert!(a.edge_count() <= 10);
        assert!(a.vertex_count() <= 6);
    }
}
