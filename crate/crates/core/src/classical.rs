//! Correspondences with classical combinatorial objects.
//!
//! On the two-parallel-edge caterpillar the framing lattice is the weak
//! order: a permutation maps to the clique of binary-word routes whose `k`th
//! word has ones at the first `k` one-line values, bricks map to arcs, and
//! the cubical coordinates obey a closed inversion formula. On the framed
//! fan-plus-path graph the framing lattice is the Tamari lattice, checked
//! here against an independent binary-tree oracle with bracket vectors.

use std::collections::BTreeSet;

use crate::bits::BitSet;
use crate::coherence::{Brick, Route};
use crate::cubical::ccl;
use crate::graph::{caracol, FramedGraph, LeftCorner, RightCorner};
use crate::lattice::{build_lattice, MaximalClique};

// ---------------------------------------------------------------------------
// Permutations and the weak order
// ---------------------------------------------------------------------------

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Permutation {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            assert!((1..=n).contains(&v) && !seen[v], "not a permutation of 1..=n");
            seen[v] = true;
        }
        Permutation { one_line }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Position (1-based) of a value in the one-line word.
    pub fn position_of(&self, value: usize) -> usize {
        self.one_line.iter().position(|&v| v == value).unwrap() + 1
    }

    /// Inversions as value pairs `(a, b)` with `a < b` and `a` written after
    /// `b`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if self.position_of(a) > self.position_of(b) {
                    out.insert((a, b));
                }
            }
        }
        out
    }

    /// Weak order: containment of inversion sets.
    pub fn weak_leq(&self, other: &Permutation) -> bool {
        self.inversions().is_subset(&other.inversions())
    }

    pub fn is_weak_cover(&self, other: &Permutation) -> bool {
        let a = self.inversions();
        let b = other.inversions();
        a.is_subset(&b) && b.len() == a.len() + 1
    }
}

/// All permutations of `1..=n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation {
            one_line: current.clone(),
        });
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn oruga_edge(g: &FramedGraph, up: bool, position: usize) -> crate::graph::EdgeId {
    let kind = if up { 'u' } else { 'd' };
    g.edge_by_token(&format!("{kind}{position}"))
        .expect("graph must be an oruga caterpillar")
}

fn word_to_route(g: &FramedGraph, ones: &BTreeSet<usize>) -> Route {
    let n = g.vertex_count() - 1;
    Route::from_edges(
        g,
        (1..=n)
            .map(|j| oruga_edge(g, ones.contains(&j), j))
            .collect(),
    )
}

/// The maximal clique of the caterpillar graph realizing a permutation: the
/// binary words whose `k`th member has ones at the first `k` one-line
/// values (1 = up edge).
pub fn perm_to_clique(g: &FramedGraph, pi: &Permutation) -> MaximalClique {
    let n = pi.n();
    assert_eq!(g.vertex_count(), n + 1, "graph size must match the permutation");
    let mut ones: BTreeSet<usize> = BTreeSet::new();
    let mut routes = vec![word_to_route(g, &ones)];
    for &v in pi.one_line() {
        ones.insert(v);
        routes.push(word_to_route(g, &ones));
    }
    MaximalClique::from_routes(routes)
}

/// Inverse of [`perm_to_clique`]; panics when the clique is not a chain of
/// nested binary words, which cannot happen for cliques of the caterpillar.
pub fn clique_to_perm(g: &FramedGraph, clique: &MaximalClique) -> Permutation {
    let n = g.vertex_count() - 1;
    let word = |r: &Route| -> BTreeSet<usize> {
        r.edges()
            .iter()
            .enumerate()
            .filter(|&(_, &e)| g.token(e).starts_with('u'))
            .map(|(i, _)| i + 1)
            .collect()
    };
    let mut words: Vec<BTreeSet<usize>> = clique.routes().iter().map(word).collect();
    words.sort_by_key(|w| w.len());
    assert_eq!(words.len(), n + 1, "clique size must be n + 1");
    let mut one_line = Vec::with_capacity(n);
    for k in 0..n {
        assert_eq!(words[k].len(), k, "words must grow one position at a time");
        let added: Vec<usize> = words[k + 1].difference(&words[k]).copied().collect();
        assert_eq!(added.len(), 1, "words must be nested");
        one_line.push(added[0]);
    }
    Permutation::new(one_line)
}

// ---------------------------------------------------------------------------
// Arcs
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArcSide {
    Above,
    Below,
}

/// A curve from `start` to `end > start` on a line of points, passing above
/// or below each point strictly between.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arc {
    pub start: usize,
    pub end: usize,
    /// Sides at points `start + 1, ..., end - 1`.
    pub sides: Vec<ArcSide>,
}

impl Arc {
    pub fn new(start: usize, end: usize, sides: Vec<ArcSide>) -> Arc {
        assert!(start < end, "an arc runs left to right");
        assert_eq!(sides.len(), end - start - 1);
        Arc { start, end, sides }
    }

    /// Vertical level at point `k`: endpoints sit on the line.
    fn level(&self, k: usize) -> i8 {
        if k == self.start || k == self.end {
            0
        } else {
            match self.sides[k - self.start - 1] {
                ArcSide::Above => 1,
                ArcSide::Below => -1,
            }
        }
    }
}

/// Two arcs cross when, over the shared span of their closed intervals,
/// their levels swap sides.
pub fn arcs_cross(a: &Arc, b: &Arc) -> bool {
    let lo = a.start.max(b.start);
    let hi = a.end.min(b.end);
    if lo > hi {
        return false;
    }
    let mut pos = false;
    let mut neg = false;
    for k in lo..=hi {
        match a.level(k) - b.level(k) {
            d if d > 0 => pos = true,
            d if d < 0 => neg = true,
            _ => {}
        }
    }
    pos && neg
}

/// Noncrossing and sharing no start or end points.
pub fn arcs_compatible(a: &Arc, b: &Arc) -> bool {
    a.start != b.start && a.end != b.end && !arcs_cross(a, b)
}

pub fn is_noncrossing_diagram(arcs: &[Arc]) -> bool {
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if !arcs_compatible(&arcs[i], &arcs[j]) {
                return false;
            }
        }
    }
    true
}

/// All arcs on `n` points, canonically ordered.
pub fn all_arcs(n: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for start in 1..n {
        for end in start + 1..=n {
            let inner = end - start - 1;
            for mask in 0..1u32 << inner {
                let sides = (0..inner)
                    .map(|k| {
                        if mask >> k & 1 == 1 {
                            ArcSide::Above
                        } else {
                            ArcSide::Below
                        }
                    })
                    .collect();
                out.push(Arc::new(start, end, sides));
            }
        }
    }
    out.sort();
    out
}

/// All noncrossing arc diagrams on `n` points (sets of pairwise compatible
/// arcs, the empty diagram included).
pub fn all_noncrossing_diagrams(n: usize) -> Vec<Vec<Arc>> {
    let arcs = all_arcs(n);
    let mut out: Vec<Vec<Arc>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn go(arcs: &[Arc], start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<Arc>>) {
        out.push(current.iter().map(|&i| arcs[i].clone()).collect());
        for i in start..arcs.len() {
            if current.iter().all(|&j| arcs_compatible(&arcs[j], &arcs[i])) {
                current.push(i);
                go(arcs, i + 1, current, out);
                current.pop();
            }
        }
    }
    go(&arcs, 0, &mut current, &mut out);
    out
}

/// Brick of the caterpillar graph for an arc: corners at the end points,
/// with the up edge at each point the arc passes above.
pub fn arc_to_brick(g: &FramedGraph, arc: &Arc) -> Brick {
    let left = LeftCorner {
        apex: arc.start + 1,
        lower: oruga_edge(g, true, arc.start),
        upper: oruga_edge(g, false, arc.start),
    };
    let right = RightCorner {
        apex: arc.end, // internal label of external point end - 1
        lower: oruga_edge(g, true, arc.end),
        upper: oruga_edge(g, false, arc.end),
    };
    let edges = (arc.start + 1..arc.end)
        .map(|k| oruga_edge(g, arc.level(k) == 1, k))
        .collect();
    Brick::new(g, left, edges, right)
}

/// Inverse of [`arc_to_brick`], total on bricks of the caterpillar.
pub fn brick_to_arc(g: &FramedGraph, brick: &Brick) -> Arc {
    let start = brick.left_corner().apex - 1;
    let end = brick.right_corner().apex + 1 - 1;
    let sides = brick
        .edges()
        .iter()
        .map(|&e| {
            if g.token(e).starts_with('u') {
                ArcSide::Above
            } else {
                ArcSide::Below
            }
        })
        .collect();
    Arc::new(start, end, sides)
}

// ---------------------------------------------------------------------------
// Coordinate formulas on the weak order
// ---------------------------------------------------------------------------

/// Closed form for the left cubical coordinate of a permutation's clique at
/// corner `i`: the sum of `2^(n-j)` over inversions `(i, j)`.
pub fn ccl_weak_formula(pi: &Permutation, i: usize) -> usize {
    let n = pi.n();
    assert!((1..n).contains(&i));
    pi.inversions()
        .iter()
        .filter(|&&(a, _)| a == i)
        .map(|&(_, j)| 1usize << (n - j))
        .sum()
}

/// Lehmer code under the same indexing: the number of inversions `(i, j)`
/// for each `i`.
pub fn lehmer(pi: &Permutation) -> Vec<usize> {
    let inv = pi.inversions();
    (1..=pi.n())
        .map(|i| inv.iter().filter(|&&(a, _)| a == i).count())
        .collect()
}

fn leq_componentwise(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// First pair (in lexicographic order) whose Lehmer codes are componentwise
/// comparable but which are incomparable in the weak order; such pairs show
/// the Lehmer cube embedding is not an order embedding.
pub fn lehmer_counterexample(n: usize) -> Option<(Permutation, Permutation)> {
    let perms = all_permutations(n);
    for p in &perms {
        for q in &perms {
            if p == q {
                continue;
            }
            if leq_componentwise(&lehmer(p), &lehmer(q)) && !p.weak_leq(q) && !q.weak_leq(p) {
                return Some((p.clone(), q.clone()));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Binary trees and the Tamari lattice
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn internal_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.internal_count() + r.internal_count(),
        }
    }
}

/// All binary trees with `m` internal nodes.
pub fn all_trees(m: usize) -> Vec<BinaryTree> {
    if m == 0 {
        return vec![BinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for left in 0..m {
        for l in all_trees(left) {
            for r in all_trees(m - 1 - left) {
                out.push(BinaryTree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out.sort();
    out
}

/// Bracket vector: for each internal node in symmetric (inorder) position
/// `2..=m`, the number of internal nodes in its left subtree. The first
/// inorder node always has an empty left subtree, so it is omitted.
pub fn bracket_vector(t: &BinaryTree) -> Vec<usize> {
    fn walk(t: &BinaryTree, acc: &mut Vec<usize>) -> usize {
        match t {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => {
                let left = walk(l, acc);
                acc.push(left);
                left + 1 + walk(r, acc)
            }
        }
    }
    let mut acc = Vec::new();
    walk(t, &mut acc);
    assert!(acc.is_empty() || acc[0] == 0);
    acc.split_off(1.min(acc.len()))
}

/// All trees reachable by one right rotation `(A p B) q C -> A p (B q C)`;
/// each rotation lowers exactly one bracket coordinate.
pub fn right_rotations(t: &BinaryTree) -> Vec<BinaryTree> {
    let mut out = Vec::new();
    if let BinaryTree::Node(l, r) = t {
        if let BinaryTree::Node(a, b) = l.as_ref() {
            out.push(BinaryTree::Node(
                a.clone(),
                Box::new(BinaryTree::Node(b.clone(), r.clone())),
            ));
        }
        for l2 in right_rotations(l) {
            out.push(BinaryTree::Node(Box::new(l2), r.clone()));
        }
        for r2 in right_rotations(r) {
            out.push(BinaryTree::Node(l.clone(), Box::new(r2)));
        }
    }
    out
}

/// The Tamari lattice on binary trees with `m` internal nodes, built from
/// single-rotation covers, ordered so that bracket vectors increase upward.
pub struct TamariLattice {
    pub trees: Vec<BinaryTree>,
    pub brackets: Vec<Vec<usize>>,
    /// Cover pairs `(lower, upper)`.
    pub covers: Vec<(usize, usize)>,
    up: Vec<BitSet>,
    pub bottom: usize,
    pub top: usize,
}

impl TamariLattice {
    pub fn build(m: usize) -> TamariLattice {
        let trees = all_trees(m);
        let n = trees.len();
        let brackets: Vec<Vec<usize>> = trees.iter().map(bracket_vector).collect();
        let index = |t: &BinaryTree| trees.binary_search(t).unwrap();
        let mut covers = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower_count = vec![0usize; n];
        for (hi, t) in trees.iter().enumerate() {
            for rotated in right_rotations(t) {
                let lo = index(&rotated);
                let diffs: Vec<usize> = (0..brackets[lo].len())
                    .filter(|&k| brackets[lo][k] != brackets[hi][k])
                    .collect();
                assert_eq!(diffs.len(), 1, "a rotation moves exactly one bracket entry");
                assert!(brackets[lo][diffs[0]] < brackets[hi][diffs[0]]);
                covers.push((lo, hi));
                upper[lo].push(hi);
                lower_count[hi] += 1;
            }
        }
        covers.sort_unstable();
        // Reachability by depth-first closure over covers.
        let mut up = vec![BitSet::new(n); n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(brackets[i].iter().sum::<usize>()));
        for &i in &order {
            up[i].insert(i);
            let (head, tail) = up.split_at_mut(i);
            let (own, rest) = tail.split_first_mut().unwrap();
            for &j in &upper[i] {
                own.union_with(if j < i { &head[j] } else { &rest[j - i - 1] });
            }
        }
        let bottoms: Vec<usize> = (0..n).filter(|&i| lower_count[i] == 0).collect();
        let tops: Vec<usize> = (0..n).filter(|&i| upper[i].is_empty()).collect();
        assert_eq!(bottoms.len(), 1);
        assert_eq!(tops.len(), 1);
        let bottom = bottoms[0];
        assert!(brackets[bottom].iter().all(|&x| x == 0));
        TamariLattice {
            trees,
            brackets,
            covers,
            up,
            bottom,
            top: tops[0],
        }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }
}

/// Outcome of checking the fan-plus-path lattice against the binary-tree
/// oracle.
#[derive(Debug)]
pub struct TamariReport {
    pub elements: usize,
    /// Bracket index (0-based into the bracket vector) for each left corner
    /// in canonical order.
    pub corner_to_bracket: Vec<usize>,
}

/// Builds the framing lattice of the fan-plus-path graph of size `n` and
/// verifies it against an independently built Tamari lattice: same
/// componentwise order, equal coordinate-vector sets up to one fixed index
/// bijection on corners, and isomorphic Hasse diagrams.
pub fn tamari_check(n: usize, route_limit: usize) -> Result<TamariReport, String> {
    let g = caracol(n);
    let l = build_lattice(&g, route_limit).map_err(|e| e.to_string())?;
    let coords: Vec<Vec<usize>> = l.elements().iter().map(|c| ccl(&g, c).values).collect();

    for (i, a) in coords.iter().enumerate() {
        for (j, b) in coords.iter().enumerate() {
            if leq_componentwise(a, b) != l.leq(i, j) {
                return Err(format!(
                    "componentwise order disagrees with the lattice at ({i}, {j})"
                ));
            }
        }
    }
    for (lo, hi, _) in l.covers() {
        let diffs = (0..coords[*lo].len())
            .filter(|&k| coords[*lo][k] != coords[*hi][k])
            .count();
        if diffs != 1 {
            return Err(format!("cover ({lo}, {hi}) changes {diffs} coordinates"));
        }
    }

    let tamari = TamariLattice::build(n);
    if tamari.len() != l.len() {
        return Err(format!(
            "element counts differ: {} cliques vs {} trees",
            l.len(),
            tamari.len()
        ));
    }

    // Fix the index bijection by matching the top vectors entrywise; both
    // have pairwise distinct entries.
    let k = coords[l.bottom()].len();
    let top_ccl = &coords[l.top()];
    let top_bracket = &tamari.brackets[tamari.top];
    if k != top_bracket.len() {
        return Err(format!(
            "coordinate lengths differ: {k} corners vs {} bracket entries",
            top_bracket.len()
        ));
    }
    let mut corner_to_bracket = Vec::with_capacity(k);
    for i in 0..k {
        let matches: Vec<usize> = (0..k).filter(|&j| top_bracket[j] == top_ccl[i]).collect();
        if matches.len() != 1 {
            return Err("top vectors do not determine the index bijection".into());
        }
        corner_to_bracket.push(matches[0]);
    }
    let remap = |v: &[usize]| -> Vec<usize> {
        let mut out = vec![0; k];
        for i in 0..k {
            out[corner_to_bracket[i]] = v[i];
        }
        out
    };

    let mut mapped: Vec<Vec<usize>> = coords.iter().map(|v| remap(v)).collect();
    let mut brackets = tamari.brackets.clone();
    mapped.sort();
    brackets.sort();
    if mapped != brackets {
        return Err("coordinate vector sets differ from bracket vector sets".into());
    }

    // Order isomorphism through the vector correspondence.
    let tree_of: Vec<usize> = coords
        .iter()
        .map(|v| tamari.brackets.iter().position(|b| *b == remap(v)).unwrap())
        .collect();
    for i in 0..l.len() {
        for j in 0..l.len() {
            if l.leq(i, j) != tamari.leq(tree_of[i], tree_of[j]) {
                return Err(format!("order mismatch at ({i}, {j})"));
            }
        }
    }
    let mut hasse: Vec<(usize, usize)> = l
        .covers()
        .iter()
        .map(|(lo, hi, _)| (tree_of[*lo], tree_of[*hi]))
        .collect();
    hasse.sort_unstable();
    if hasse != tamari.covers {
        return Err("Hasse diagrams are not isomorphic".into());
    }

    Ok(TamariReport {
        elements: l.len(),
        corner_to_bracket,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::{brick_notation, parse_route, DEFAULT_ROUTE_LIMIT};
    use crate::graph::oruga;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec())
    }

    #[test]
    fn perm_clique_n2() {
        let g = oruga(2);
        let clique = |routes: &[&str]| {
            MaximalClique::from_routes(routes.iter().map(|s| parse_route(&g, s).unwrap()).collect())
        };
        assert_eq!(
            perm_to_clique(&g, &perm(&[1, 2])),
            clique(&["d1-d2", "u1-d2", "u1-u2"]),
            "identity gives the bottom"
        );
        assert_eq!(
            perm_to_clique(&g, &perm(&[2, 1])),
            clique(&["d1-d2", "d1-u2", "u1-u2"]),
            "the transposition gives the top"
        );
        for p in all_permutations(3) {
            let g = oruga(3);
            assert_eq!(clique_to_perm(&g, &perm_to_clique(&g, &p)), p);
        }
    }

    #[test]
    fn arc_brick_correspondence() {
        let g = oruga(2);
        let b = arc_to_brick(&g, &Arc::new(1, 2, vec![]));
        assert_eq!(brick_notation(&g, &b), "[1:u1|d1>·<u2|d2:1]");
        let g = oruga(3);
        let arcs = all_arcs(3);
        assert_eq!(arcs.len(), 4);
        let bricks: BTreeSet<Brick> = arcs.iter().map(|a| arc_to_brick(&g, a)).collect();
        assert_eq!(bricks.len(), 4);
        assert_eq!(
            bricks,
            crate::coherence::enumerate_bricks(&g).into_iter().collect()
        );
        for a in &arcs {
            assert_eq!(&brick_to_arc(&g, &arc_to_brick(&g, a)), a);
        }
        assert_eq!(all_arcs(4).len(), 11);
        assert_eq!(all_noncrossing_diagrams(3).len(), 6);
    }

    #[test]
    fn weak_formula_values() {
        let p = perm(&[3, 2, 1]);
        assert_eq!(ccl_weak_formula(&p, 1), 3);
        assert_eq!(ccl_weak_formula(&p, 2), 1);
        let p = perm(&[2, 1, 3]);
        assert_eq!(ccl_weak_formula(&p, 1), 2);
        assert_eq!(ccl_weak_formula(&p, 2), 0);
        let id = Permutation::identity(4);
        for i in 1..4 {
            assert_eq!(ccl_weak_formula(&id, i), 0);
        }
    }

    #[test]
    fn formula_matches_coordinates() {
        for n in 2..=3 {
            let g = oruga(n);
            for p in all_permutations(n) {
                let clique = perm_to_clique(&g, &p);
                let coords = ccl(&g, &clique);
                for i in 1..n {
                    assert_eq!(coords.values[i - 1], ccl_weak_formula(&p, i), "{p:?} at {i}");
                }
            }
        }
    }

    #[test]
    fn lehmer_witness_at_3() {
        let (p, q) = lehmer_counterexample(3).expect("witness exists for n = 3");
        assert!(leq_componentwise(&lehmer(&p), &lehmer(&q)));
        assert!(!p.weak_leq(&q) && !q.weak_leq(&p));
    }

    #[test]
    fn lehmer_moves_one_entry_per_cover() {
        let perms = all_permutations(3);
        for p in &perms {
            for q in &perms {
                if p.is_weak_cover(q) {
                    let diffs = lehmer(p)
                        .iter()
                        .zip(lehmer(q))
                        .filter(|&(a, b)| *a != b)
                        .count();
                    assert_eq!(diffs, 1);
                }
            }
        }
    }

    #[test]
    fn tree_counts_are_catalan() {
        assert_eq!(all_trees(2).len(), 2);
        assert_eq!(all_trees(3).len(), 5);
        assert_eq!(all_trees(4).len(), 14);
    }

    #[test]
    fn bracket_vectors_of_small_trees() {
        let t = TamariLattice::build(3);
        let mut brackets = t.brackets.clone();
        brackets.sort();
        assert_eq!(
            brackets,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 2]]
        );
        assert_eq!(t.brackets[t.bottom], vec![0, 0]);
        assert_eq!(t.brackets[t.top], vec![1, 2]);
    }

    #[test]
    fn tamari_check_small() {
        let report = tamari_check(2, DEFAULT_ROUTE_LIMIT).unwrap();
        assert_eq!(report.elements, 2);
        let report = tamari_check(3, DEFAULT_ROUTE_LIMIT).unwrap();
        assert_eq!(report.elements, 5);
    }
}
