//! Maximal almost rigid modules: enumeration as maximal independent
//! sets of the conflict graph, mutation, the Cambrian poset, and the
//! polygon-triangulation bijection.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::exact::ExactStructure;
use crate::grid::SesClass;
use crate::quiver::{Interval, ModuleSum, TypeAQuiver};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarError {
    /// The theory needs at least three vertices.
    TooSmall,
    /// Bitset enumeration handles at most 64 indecomposables (n <= 10).
    TooLarge,
    /// Boundary summands are not mutable.
    NotMutable(Interval),
    NotASummand(Interval),
    NotMar,
}

impl fmt::Display for MarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarError::TooSmall => write!(f, "need n >= 3"),
            MarError::TooLarge => write!(f, "enumeration supports at most 64 indecomposables"),
            MarError::NotMutable(x) => write!(f, "{x} is relative projective-injective, not mutable"),
            MarError::NotASummand(x) => write!(f, "{x} is not a summand"),
            MarError::NotMar => write!(f, "module is not maximal almost rigid"),
        }
    }
}

/// Vertices are all indecomposables; an edge joins two modules with a
/// diamond extension in either direction.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    pub vertices: Vec<Interval>,
    edges: BTreeSet<(Interval, Interval)>,
}

impl ConflictGraph {
    pub fn has_edge(&self, a: Interval, b: Interval) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Interval, Interval)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_independent(&self, s: &ModuleSum) -> bool {
        let sm = s.summands();
        sm.iter()
            .enumerate()
            .all(|(i, &a)| sm[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }
}

pub fn conflict_graph(quiver: &TypeAQuiver) -> Result<ConflictGraph, MarError> {
    if quiver.n() < 3 {
        return Err(MarError::TooSmall);
    }
    let es = ExactStructure::e_diamond(quiver);
    let vertices = quiver.indecomposables();
    let mut edges = BTreeSet::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if es.admissible_class_dim(a, b) == 1 || es.admissible_class_dim(b, a) == 1 {
                edges.insert((a, b));
            }
        }
    }
    Ok(ConflictGraph { vertices, edges })
}

/// Maximal independent sets via Bron-Kerbosch with pivoting on the
/// compatibility (complement) graph, over a 64-bit vertex set.
fn maximal_independent_sets(adj_conflict: &[u64], v: usize) -> Vec<u64> {
    // compatibility adjacency: everything except self and conflicts
    let all: u64 = if v == 64 { !0 } else { (1u64 << v) - 1 };
    let compat: Vec<u64> = (0..v).map(|i| all & !adj_conflict[i] & !(1u64 << i)).collect();
    let mut out = Vec::new();
    fn bk(compat: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // pivot: vertex of p | x with most neighbours in p
        let pivot = {
            let mut best = 0usize;
            let mut best_count = -1i32;
            let mut cand = p | x;
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let c = (p & compat[u]).count_ones() as i32;
                if c > best_count {
                    best_count = c;
                    best = u;
                }
            }
            best
        };
        let mut ext = p & !compat[pivot];
        while ext != 0 {
            let u = ext.trailing_zeros() as usize;
            let bit = 1u64 << u;
            ext &= ext - 1;
            bk(compat, r | bit, p & compat[u], x & compat[u], out);
            p &= !bit;
            x |= bit;
        }
    }
    bk(&compat, 0, all, 0, &mut out);
    out
}

/// All maximal almost rigid modules, sorted by summand list.
pub fn enumerate_mar(quiver: &TypeAQuiver) -> Result<Vec<ModuleSum>, MarError> {
    let g = conflict_graph(quiver)?;
    let v = g.vertices.len();
    if v > 64 {
        return Err(MarError::TooLarge);
    }
    let index: BTreeMap<Interval, usize> =
        g.vertices.iter().enumerate().map(|(i, &iv)| (iv, i)).collect();
    let mut adj = alloc::vec![0u64; v];
    for (a, b) in g.edges() {
        adj[index[&a]] |= 1 << index[&b];
        adj[index[&b]] |= 1 << index[&a];
    }
    let mut sets: Vec<ModuleSum> = maximal_independent_sets(&adj, v)
        .into_iter()
        .map(|mask| {
            ModuleSum::new(
                (0..v)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| g.vertices[i])
                    .collect(),
            )
        })
        .collect();
    sets.sort();
    Ok(sets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationDirection {
    /// X sits in the sub position of the exchange sequence: T is covered
    /// by the mutated module.
    Up,
    Down,
}

/// The unique exchange: replaces summand `x` of the MAR module `t`.
pub fn mutate(
    quiver: &TypeAQuiver,
    t: &ModuleSum,
    x: Interval,
) -> Result<(Interval, SesClass, MutationDirection), MarError> {
    let g = conflict_graph(quiver)?;
    let es = ExactStructure::e_diamond(quiver);
    if !t.contains(x) {
        return Err(MarError::NotASummand(x));
    }
    if es.grid().in_boundary_rows(x) {
        return Err(MarError::NotMutable(x));
    }
    if !g.is_independent(t) || t.len() != 2 * quiver.n() - 1 {
        return Err(MarError::NotMar);
    }
    let mut rest = t.clone();
    rest.remove(x);
    let candidates: Vec<Interval> = quiver
        .indecomposables()
        .into_iter()
        .filter(|&y| {
            y != x
                && !rest.contains(y)
                && rest.summands().iter().all(|&a| !g.has_edge(a, y))
        })
        .collect();
    // the theory gives exactly one replacement
    assert_eq!(candidates.len(), 1, "exchange partner must be unique");
    let y = candidates[0];
    let in_add = |ses: &SesClass| ses.middle.summands().iter().all(|&e| rest.contains(e));
    let up = es
        .grid()
        .ext_class(y, x)
        .filter(|ses| es.admissible_class_dim(y, x) == 1 && in_add(ses));
    let down = es
        .grid()
        .ext_class(x, y)
        .filter(|ses| es.admissible_class_dim(x, y) == 1 && in_add(ses));
    match (up, down) {
        (Some(ses), None) => Ok((y, ses, MutationDirection::Up)),
        (None, Some(ses)) => Ok((y, ses, MutationDirection::Down)),
        _ => unreachable!("precisely one exchange triangle exists"),
    }
}

#[derive(Debug, Clone)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub removed: Interval,
    pub added: Interval,
}

#[derive(Debug, Clone)]
pub struct MarPoset {
    pub elements: Vec<ModuleSum>,
    pub hasse: Vec<HasseEdge>,
}

impl MarPoset {
    /// Reflexive-transitive closure of the Hasse relation, as down-set
    /// bitmasks: below[i] = everything <= element i.
    fn below(&self) -> Vec<u128> {
        let v = self.elements.len();
        assert!(v <= 128, "poset closure supports at most 128 elements");
        let mut below: Vec<u128> = (0..v).map(|i| 1u128 << i).collect();
        // relax until stable (tiny posets)
        let mut changed = true;
        while changed {
            changed = false;
            for e in &self.hasse {
                let merged = below[e.to] | below[e.from];
                if merged != below[e.to] {
                    below[e.to] = merged;
                    changed = true;
                }
            }
        }
        below
    }

    /// Unique source of the Hasse diagram, if any.
    pub fn minimum(&self) -> Option<usize> {
        let mut sources: Vec<usize> = (0..self.elements.len())
            .filter(|&i| self.hasse.iter().all(|e| e.to != i))
            .collect();
        (sources.len() == 1).then(|| sources.pop().unwrap())
    }

    pub fn maximum(&self) -> Option<usize> {
        let mut sinks: Vec<usize> = (0..self.elements.len())
            .filter(|&i| self.hasse.iter().all(|e| e.from != i))
            .collect();
        (sinks.len() == 1).then(|| sinks.pop().unwrap())
    }

    /// Explicit meet/join existence for all pairs.
    pub fn is_lattice(&self) -> bool {
        let below = self.below();
        let v = self.elements.len();
        let unique_max = |mask: u128| -> bool {
            // an element of `mask` above every other element of `mask`
            (0..v).filter(|&i| mask & (1 << i) != 0).any(|i| mask & !below[i] == 0)
        };
        for a in 0..v {
            for b in 0..v {
                // meet: unique maximal common lower bound
                if !unique_max(below[a] & below[b]) {
                    return false;
                }
                // join: unique minimal common upper bound, via the dual
                let above_both: u128 = (0..v)
                    .filter(|&i| below[i] & (1 << a) != 0 && below[i] & (1 << b) != 0)
                    .fold(0, |acc, i| acc | 1 << i);
                let unique_min = (0..v)
                    .filter(|&i| above_both & (1 << i) != 0)
                    .any(|i| above_both & !{
                        // everything above i
                        (0..v)
                            .filter(|&j| below[j] & (1 << i) != 0)
                            .fold(0u128, |acc, j| acc | 1 << j)
                    } == 0);
                if !unique_min {
                    return false;
                }
            }
        }
        true
    }
}

/// The oriented mutation (exchange) graph on all MAR modules.
pub fn mar_poset(quiver: &TypeAQuiver) -> Result<MarPoset, MarError> {
    let elements = enumerate_mar(quiver)?;
    let es = ExactStructure::e_diamond(quiver);
    let index: BTreeMap<&ModuleSum, usize> =
        elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut hasse = Vec::new();
    for (i, t) in elements.iter().enumerate() {
        for &x in t.summands() {
            if es.grid().in_boundary_rows(x) {
                continue;
            }
            let (y, _, dir) = mutate(quiver, t, x)?;
            if dir == MutationDirection::Up {
                let mut other = t.clone();
                other.remove(x);
                other.push(y);
                let j = index[&other];
                hasse.push(HasseEdge { from: i, to: j, removed: x, added: y });
            }
        }
    }
    Ok(MarPoset { elements, hasse })
}

// ---------------------------------------------------------------------
// Triangulations of a convex polygon
// ---------------------------------------------------------------------

/// A triangulation of a convex m-gon with vertices 0..m; only the
/// internal diagonals are stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangulation {
    pub diagonals: BTreeSet<(usize, usize)>,
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (p, q) = a;
    let (r, s) = b;
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

/// All triangulations of the m-gon and the single-flip edges between
/// them, built from the crossing test alone.
pub fn polygon_flip_graph(m: usize) -> Result<(Vec<Triangulation>, Vec<(usize, usize)>), MarError> {
    if m < 4 {
        return Err(MarError::TooSmall);
    }
    let chords: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 2..m).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == m - 1))
        .collect();
    if chords.len() > 64 {
        return Err(MarError::TooLarge);
    }
    let v = chords.len();
    let mut crossing = alloc::vec![0u64; v];
    for i in 0..v {
        for j in 0..v {
            if i != j && chords_cross(chords[i], chords[j]) {
                crossing[i] |= 1 << j;
            }
        }
    }
    let mut tris: Vec<Triangulation> = maximal_independent_sets(&crossing, v)
        .into_iter()
        .map(|mask| Triangulation {
            diagonals: (0..v).filter(|i| mask & (1 << i) != 0).map(|i| chords[i]).collect(),
        })
        .collect();
    tris.sort();
    let mut edges = Vec::new();
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            let common = tris[i].diagonals.intersection(&tris[j].diagonals).count();
            if common + 1 == tris[i].diagonals.len() {
                edges.push((i, j));
            }
        }
    }
    Ok((tris, edges))
}

/// Backtracking isomorphism between two undirected graphs given as
/// sorted edge lists; returns the vertex matching when one exists.
fn graph_isomorphism(
    va: usize,
    ea: &[(usize, usize)],
    vb: usize,
    eb: &[(usize, usize)],
) -> Option<Vec<usize>> {
    if va != vb || ea.len() != eb.len() {
        return None;
    }
    let build = |v: usize, e: &[(usize, usize)]| -> Vec<BTreeSet<usize>> {
        let mut adj = alloc::vec![BTreeSet::new(); v];
        for &(a, b) in e {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    };
    let adj_a = build(va, ea);
    let adj_b = build(vb, eb);
    let mut deg_a: Vec<usize> = adj_a.iter().map(BTreeSet::len).collect();
    let mut db: Vec<usize> = adj_b.iter().map(BTreeSet::len).collect();
    let mut da = deg_a.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    // map vertices of A in BFS order so each new vertex has a mapped
    // neighbour constraining its image
    let mut order = Vec::with_capacity(va);
    let mut seen = alloc::vec![false; va];
    let mut queue = alloc::vec![0usize];
    seen[0] = true;
    while let Some(u) = queue.pop() {
        order.push(u);
        for &w in &adj_a[u] {
            if !seen[w] {
                seen[w] = true;
                queue.insert(0, w);
            }
        }
    }
    if order.len() != va {
        // disconnected graphs: fall back to appending the rest
        for u in 0..va {
            if !seen[u] {
                order.push(u);
            }
        }
    }
    fn extend(
        k: usize,
        order: &[usize],
        adj_a: &[BTreeSet<usize>],
        adj_b: &[BTreeSet<usize>],
        deg_a: &[usize],
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for cand in 0..adj_b.len() {
            if used[cand] || adj_b[cand].len() != deg_a[u] {
                continue;
            }
            let consistent = order[..k].iter().all(|&w| {
                let img = map[w].unwrap();
                adj_a[u].contains(&w) == adj_b[cand].contains(&img)
            });
            if consistent {
                map[u] = Some(cand);
                used[cand] = true;
                if extend(k + 1, order, adj_a, adj_b, deg_a, map, used) {
                    return true;
                }
                map[u] = None;
                used[cand] = false;
            }
        }
        false
    }
    let mut map = alloc::vec![None; va];
    let mut used = alloc::vec![false; vb];
    deg_a.shrink_to_fit();
    if extend(0, &order, &adj_a, &adj_b, &deg_a, &mut map, &mut used) {
        Some(map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Isomorphism certificate between the undirected MAR mutation graph and
/// the flip graph of the (n+1)-gon: mapping from MAR indices (in
/// `enumerate_mar` order) to triangulation indices.
pub fn verify_bijection(quiver: &TypeAQuiver) -> Result<Option<Vec<usize>>, MarError> {
    let poset = mar_poset(quiver)?;
    let mut mar_edges: Vec<(usize, usize)> = poset
        .hasse
        .iter()
        .map(|e| (e.from.min(e.to), e.from.max(e.to)))
        .collect();
    mar_edges.sort_unstable();
    mar_edges.dedup();
    let (tris, flip_edges) = polygon_flip_graph(quiver.n() + 1)?;
    Ok(graph_isomorphism(
        poset.elements.len(),
        &mar_edges,
        tris.len(),
        &flip_edges,
    ))
}

pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k {
        c = c * 2 * (2 * i as u64 + 1) / (i as u64 + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval::new(lo, hi, 5).unwrap()
    }

    fn rlrr() -> TypeAQuiver {
        TypeAQuiver::new(5, "RLRR").unwrap()
    }

    #[test]
    fn conflict_edges_rlrr() {
        let q = rlrr();
        let g = conflict_graph(&q).unwrap();
        // diamond between P(4) = [4,5] and I(4) = [3,4]
        assert!(g.has_edge(iv(4, 5), iv(3, 4)));
        // only an indecomposable-middle extension between [4,4] and I(3)
        assert!(!g.has_edge(iv(4, 4), iv(3, 3)));
        // boundary modules are isolated
        let es = ExactStructure::e_diamond(&q);
        for &x in es.generators() {
            for m in q.indecomposables() {
                assert!(!g.has_edge(x, m), "{x} conflicts with {m}");
            }
        }
    }

    #[test]
    fn mar_counts_are_catalan() {
        for n in 3..=6 {
            for q in TypeAQuiver::all_orientations(n).unwrap() {
                let mars = enumerate_mar(&q).unwrap();
                assert_eq!(mars.len() as u64, catalan(n - 1), "{}", q.orientation_word());
                for t in &mars {
                    assert_eq!(t.len(), 2 * n - 1);
                }
            }
        }
    }

    #[test]
    fn minimum_contains_relative_projectives() {
        let q = rlrr();
        let es = ExactStructure::e_diamond(&q);
        let min = ModuleSum::new(es.relative_projectives());
        assert!(enumerate_mar(&q).unwrap().contains(&min));
    }

    #[test]
    fn mutate_p4_gives_i4() {
        let q = rlrr();
        let es = ExactStructure::e_diamond(&q);
        let t = ModuleSum::new(es.relative_projectives());
        // I(4) = [3,4] is ruled out by its diamond over P(3) = [2,5]
        // (oracle: 0 -> [2,5] -> [2,4] + [3,5] -> [3,4] -> 0), so the
        // unique partner is [2,4] via 0 -> P(4) -> P(3) + [4,4] -> [2,4] -> 0
        let (y, ses, dir) = mutate(&q, &t, iv(4, 5)).unwrap();
        assert_eq!(y, iv(2, 4));
        assert_eq!(dir, MutationDirection::Up);
        assert_eq!(ses.middle, ModuleSum::new(alloc::vec![iv(2, 5), iv(4, 4)]));
        // involution
        let mut t2 = t.clone();
        t2.remove(iv(4, 5));
        t2.push(y);
        let (back, _, dir2) = mutate(&q, &t2, y).unwrap();
        assert_eq!(back, iv(4, 5));
        assert_eq!(dir2, MutationDirection::Down);
        // boundary summands refuse to mutate
        assert!(matches!(mutate(&q, &t, iv(1, 1)), Err(MarError::NotMutable(_))));
    }

    #[test]
    fn poset_structure() {
        for q in TypeAQuiver::all_orientations(4).unwrap() {
            let p = mar_poset(&q).unwrap();
            assert_eq!(p.elements.len(), 5);
            assert!(p.is_lattice(), "{}", q.orientation_word());
            let es = ExactStructure::e_diamond(&q);
            let min = &p.elements[p.minimum().unwrap()];
            assert_eq!(*min, ModuleSum::new(es.relative_projectives()));
            let max = &p.elements[p.maximum().unwrap()];
            for i in 1..=q.n() {
                assert!(max.contains(q.injective(i).unwrap()));
            }
        }
    }

    #[test]
    fn flip_graph_counts() {
        let (t4, e4) = polygon_flip_graph(4).unwrap();
        assert_eq!((t4.len(), e4.len()), (2, 1));
        let (t6, e6) = polygon_flip_graph(6).unwrap();
        assert_eq!(t6.len(), 14);
        // each hexagon triangulation flips in exactly 3 ways
        for i in 0..t6.len() {
            let deg = e6.iter().filter(|&&(a, b)| a == i || b == i).count();
            assert_eq!(deg, 3);
        }
        assert_eq!(catalan(4), 14);
    }

    #[test]
    fn bijection_small() {
        for n in 3..=5 {
            for q in TypeAQuiver::all_orientations(n).unwrap() {
                assert!(
                    verify_bijection(&q).unwrap().is_some(),
                    "{}",
                    q.orientation_word()
                );
            }
        }
    }
}
