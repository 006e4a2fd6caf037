//! Naive reference procedures. They work on words and the commutation
//! relations directly and never build a piling, so they can check the fast
//! algorithms. All of them are exponential and meant for short inputs.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::extension::{ExtElement, ExtGroup};
use crate::graph::{DefiningGraph, LengthPreservingAut};
use crate::search;
use crate::word::{Letter, Word};

/// Default cap on the number of words a shuffle search may visit.
pub const DEFAULT_STATE_CAP: usize = 500_000;

/// All words reachable from `u` by swapping adjacent commuting letters and
/// deleting adjacent inverse pairs.
pub fn shuffle_closure(
    graph: &DefiningGraph,
    u: &[Letter],
    cap: usize,
) -> Result<HashSet<Vec<Letter>>> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(u.to_vec());
    queue.push_back(u.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[i], w[i + 1]);
            let next = if x == y.inverse() {
                let mut n = w[..i].to_vec();
                n.extend_from_slice(&w[i + 2..]);
                n
            } else if graph.adjacent(x.vertex, y.vertex) {
                let mut n = w.clone();
                n.swap(i, i + 1);
                n
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::BoundExceeded(format!("more than {cap} words")));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Least word, in the inverse shortlex order, among all words reachable
/// by [`shuffle_closure`]. Shortest words come first, so this is the least
/// geodesic of the element.
pub fn shortlex_min(graph: &DefiningGraph, u: &[Letter]) -> Result<Word> {
    let all = shuffle_closure(graph, u, DEFAULT_STATE_CAP)?;
    Ok(all
        .into_iter()
        .map(Word::from)
        .min()
        .expect("closure contains u"))
}

/// Word problem by exhaustive rewriting.
pub fn shuffle_equal(graph: &DefiningGraph, u: &[Letter], v: &[Letter]) -> Result<bool> {
    Ok(shortlex_min(graph, u)? == shortlex_min(graph, v)?)
}

/// Deletes `x .. x^-1` whenever every letter in between commutes with `x`,
/// until no such pair is left.
pub fn free_reduce(graph: &DefiningGraph, u: &[Letter]) -> Vec<Letter> {
    let mut w = u.to_vec();
    'again: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[j] == w[i].inverse() {
                    w.remove(j);
                    w.remove(i);
                    continue 'again;
                }
                if !graph.adjacent(w[i].vertex, w[j].vertex) {
                    break;
                }
            }
        }
        return w;
    }
}

/// Canonical word of the element: reduce, then repeatedly take the least
/// letter (inverse base order) that commutes past everything before it.
pub fn canonical(graph: &DefiningGraph, u: &[Letter]) -> Word {
    let mut rest = free_reduce(graph, u);
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for j in 0..rest.len() {
            let free = rest[..j]
                .iter()
                .all(|y| graph.adjacent(y.vertex, rest[j].vertex));
            if free && best.is_none_or(|b| rest[j].cmp_inv(rest[b]).is_lt()) {
                best = Some(j);
            }
        }
        out.push(rest.remove(best.expect("the first letter is always free")));
    }
    Word::from(out)
}

/// Words of length `0..=bound` with no adjacent inverse pair, shortest
/// first, then by base letter order.
fn conjugators(r: usize, bound: usize) -> impl Iterator<Item = Vec<Letter>> {
    let letters: Vec<Letter> = Letter::all(r).collect();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut depth = 0;
    std::iter::from_fn(move || {
        if depth > bound {
            return None;
        }
        let current = std::mem::take(&mut layer);
        if depth < bound {
            for w in &current {
                for &x in &letters {
                    if w.last().is_some_and(|y| *y == x.inverse()) {
                        continue;
                    }
                    let mut n = w.clone();
                    n.push(x);
                    layer.push(n);
                }
            }
        }
        depth += 1;
        Some(current)
    })
    .flatten()
}

/// First `w` with `|w| <= bound` and `w^-1 u w = v`.
pub fn conjugate(graph: &DefiningGraph, u: &[Letter], v: &[Letter], bound: usize) -> Option<Word> {
    twisted_conjugate(
        graph,
        u,
        v,
        &LengthPreservingAut::identity(graph.len()),
        bound,
    )
}

/// First `w` with `|w| <= bound` and `phi(w)^-1 u w = v`.
pub fn twisted_conjugate(
    graph: &DefiningGraph,
    u: &[Letter],
    v: &[Letter],
    phi: &LengthPreservingAut,
    bound: usize,
) -> Option<Word> {
    let target = canonical(graph, v);
    conjugators(graph.len(), bound).find_map(|w| {
        let mut x: Vec<Letter> = w.iter().rev().map(|l| l.apply(phi).inverse()).collect();
        x.extend_from_slice(u);
        x.extend_from_slice(&w);
        (canonical(graph, &x) == target).then(|| Word::from(w))
    })
}

/// Union-find over a finite set of labels.
#[derive(Clone, Debug)]
struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Partition of all elements of length at most `max_len` into the classes
/// generated by single-letter twisted conjugation `u -> phi(x)^-1 u x`,
/// keeping only steps that stay within the length bound.
///
/// Every pair placed together is twisted conjugate. For the identity the
/// converse also holds: conjugate elements both of length `<= max_len`
/// are joined through their cyclic reductions by steps that never grow.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    index: HashMap<Word, usize>,
    elements: Vec<Word>,
    root: Vec<usize>,
}

impl ClassPartition {
    pub fn new(
        graph: &DefiningGraph,
        phi: &LengthPreservingAut,
        max_len: usize,
        cap: usize,
    ) -> Result<Self> {
        let letters: Vec<Letter> = Letter::all(graph.len()).collect();
        let mut elements = vec![Word::empty()];
        let mut index: HashMap<Word, usize> = HashMap::from([(Word::empty(), 0)]);
        let mut layer = vec![0usize];
        for n in 1..=max_len {
            let mut next = Vec::new();
            for &i in &layer {
                for &x in &letters {
                    let mut w = elements[i].to_vec();
                    w.push(x);
                    let c = canonical(graph, &w);
                    if c.len() == n && !index.contains_key(&c) {
                        index.insert(c.clone(), elements.len());
                        next.push(elements.len());
                        elements.push(c);
                        if elements.len() > cap {
                            return Err(Error::BoundExceeded(format!("more than {cap} elements")));
                        }
                    }
                }
            }
            layer = next;
        }
        let mut dsu = Dsu((0..elements.len()).collect());
        for (i, g) in elements.iter().enumerate() {
            for &x in &letters {
                let mut w = vec![x.apply(phi).inverse()];
                w.extend_from_slice(g);
                w.push(x);
                if let Some(&j) = index.get(&canonical(graph, &w)) {
                    dsu.union(i, j);
                }
            }
        }
        let root = (0..elements.len()).map(|i| dsu.find(i)).collect();
        Ok(ClassPartition {
            index,
            elements,
            root,
        })
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    /// Class label of `u`, if its length is within the bound.
    pub fn class_of(&self, graph: &DefiningGraph, u: &[Letter]) -> Option<usize> {
        self.index.get(&canonical(graph, u)).map(|&i| self.root[i])
    }

    pub fn same_class(&self, graph: &DefiningGraph, u: &[Letter], v: &[Letter]) -> Option<bool> {
        Some(self.class_of(graph, u)? == self.class_of(graph, v)?)
    }

    /// `c(n)`: number of classes whose shortest member has length `n`.
    pub fn growth(&self) -> Vec<u64> {
        let mut shortest: HashMap<usize, usize> = HashMap::new();
        for (i, w) in self.elements.iter().enumerate() {
            let e = shortest.entry(self.root[i]).or_insert(w.len());
            *e = (*e).min(w.len());
        }
        let top = self.elements.iter().map(|w| w.len()).max().unwrap_or(0);
        let mut c = vec![0u64; top + 1];
        for n in shortest.values() {
            c[*n] += 1;
        }
        c
    }
}

/// Conjugacy class counts of the free group of the given rank by length,
/// found by listing cyclically reduced words and identifying rotations.
pub fn free_group_class_counts(rank: usize, max_len: usize) -> Vec<u64> {
    let letters: Vec<Letter> = Letter::all(rank).collect();
    let mut counts = vec![1u64];
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 1..=max_len {
        words = words
            .iter()
            .flat_map(|w| {
                letters
                    .iter()
                    .filter(|x| w.last().is_none_or(|y| *y != x.inverse()))
                    .map(|x| {
                        let mut n = w.clone();
                        n.push(*x);
                        n
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut necklaces = HashSet::new();
        for w in &words {
            if w[0] == w[w.len() - 1].inverse() {
                continue;
            }
            let k = search::least_rotation_by(w, |a, b| a.rank().cmp(&b.rank()));
            necklaces.insert(Word::from(w.clone()).rotate(k));
        }
        counts.push(necklaces.len() as u64);
    }
    counts
}

/// Ball of the given radius in `A_phi` over its generators, with the BFS
/// depth of each element.
pub fn ext_ball(group: &ExtGroup<'_>, radius: usize) -> Result<Vec<(ExtElement, usize)>> {
    let gens = group.generators();
    let mut seen: HashMap<ExtElement, usize> = HashMap::from([(group.identity(), 0)]);
    let mut out = vec![(group.identity(), 0)];
    let mut layer = vec![group.identity()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for g in &layer {
            for s in &gens {
                let h = group.multiply(g, s)?;
                if !seen.contains_key(&h) {
                    seen.insert(h.clone(), d);
                    out.push((h.clone(), d));
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    Ok(out)
}

/// Partition of a ball in `A_phi` by conjugation by single generators,
/// keeping only steps inside the ball. Returns a class label per element.
pub fn ext_partition(group: &ExtGroup<'_>, radius: usize) -> Result<HashMap<ExtElement, usize>> {
    let ball = ext_ball(group, radius)?;
    let index: HashMap<&ExtElement, usize> =
        ball.iter().enumerate().map(|(i, (g, _))| (g, i)).collect();
    let mut dsu = Dsu((0..ball.len()).collect());
    let gens = group.generators();
    let inverses: Vec<ExtElement> = gens
        .iter()
        .map(|s| group.inverse(s))
        .collect::<Result<_>>()?;
    for (i, (g, _)) in ball.iter().enumerate() {
        for (s, s_inv) in gens.iter().zip(&inverses) {
            let h = group.multiply(&group.multiply(s_inv, g)?, s)?;
            if let Some(&j) = index.get(&h) {
                dsu.union(i, j);
            }
        }
    }
    Ok(ball
        .iter()
        .enumerate()
        .map(|(i, (g, _))| (g.clone(), dsu.find(i)))
        .collect())
}

/// First conjugator `s_1 .. s_k` (generators of `A_phi`, `k <= bound`) with
/// `s^-1 g s = h`, as generator indices into [`ExtGroup::generators`].
pub fn ext_conjugator(
    group: &ExtGroup<'_>,
    g: &ExtElement,
    h: &ExtElement,
    bound: usize,
) -> Result<Option<Vec<usize>>> {
    let gens = group.generators();
    let inverses: Vec<ExtElement> = gens
        .iter()
        .map(|s| group.inverse(s))
        .collect::<Result<_>>()?;
    // search over conjugates of g rather than over conjugator words
    let mut seen: HashMap<ExtElement, Vec<usize>> = HashMap::from([(g.clone(), Vec::new())]);
    let mut layer = vec![g.clone()];
    for _ in 0..=bound {
        if let Some(path) = seen.get(h) {
            return Ok(Some(path.clone()));
        }
        let mut next = Vec::new();
        for x in &layer {
            for (i, (s, s_inv)) in gens.iter().zip(&inverses).enumerate() {
                let y = group.multiply(&group.multiply(s_inv, x)?, s)?;
                if !seen.contains_key(&y) {
                    let mut path = seen[x].clone();
                    path.push(i);
                    seen.insert(y.clone(), path);
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    Ok(None)
}
