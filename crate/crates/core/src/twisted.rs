//! Twisted conjugacy `v = phi(w)^-1 u w` for length-preserving `phi`.
//!
//! Two procedures are provided. [`tcp_inversions`] handles automorphisms that
//! only invert generators and runs in linear time: twisted cyclic reduction,
//! factorisation, pyramidal forms and a twisted rotation match.
//! [`twisted_class_set`] handles every length-preserving automorphism by
//! closing a piling under twisted tile moves, restarting whenever a move
//! shortens it, and [`tcp`] compares the least members of the two closures.
//!
//! A tile moved from the bottom to the top is twisted by `phi^-1`; a tile
//! moved from the top to the bottom is twisted by `phi`. For
//! `u = x w'` this is `w' phi^-1(x) = phi(w)^-1 u w` with `w = phi^-1(x)`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, LengthPreservingAut, VertexSet};
use crate::piling::{Bead, End, Piling, TileRef};
use crate::word::{phi_cyclic_match, Letter, Sign, Word};

/// Default cap on pilings visited by [`twisted_class_set`].
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// One twisted tile move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TileMove {
    pub from: TileRef,
    pub to_vertex: usize,
    pub to_end: End,
    pub sign: Sign,
    /// The arriving tile cancelled against the tile already at that end.
    pub cancelled: bool,
}

/// Every twisted tile move available from `p`, bottom tiles first.
pub fn phi_tile_moves<'g>(
    p: &Piling<'g>,
    phi: &LengthPreservingAut,
) -> Vec<(TileMove, Piling<'g>)> {
    let phi_inv = phi.inverse();
    moves_with(p, phi, &phi_inv)
}

fn moves_with<'g>(
    p: &Piling<'g>,
    phi: &LengthPreservingAut,
    phi_inv: &LengthPreservingAut,
) -> Vec<(TileMove, Piling<'g>)> {
    let r = p.graph().len();
    let mut out = Vec::new();
    for end in [End::Bottom, End::Top] {
        for v in 0..r {
            let Some(tile) = p.tile_at(v, end) else {
                continue;
            };
            let image = match end {
                End::Bottom => tile.letter().apply(phi_inv),
                End::Top => tile.letter().apply(phi),
            };
            let (q, cancelled) = p
                .shift_tile(v, end, phi, phi_inv)
                .expect("end tiles of a valid piling are removable");
            let mv = TileMove {
                from: tile,
                to_vertex: image.vertex,
                to_end: end.opposite(),
                sign: image.sign,
                cancelled,
            };
            out.push((mv, q));
        }
    }
    out
}

fn require_inversion(phi: &LengthPreservingAut) -> Result<()> {
    if phi.is_inversion() {
        Ok(())
    } else {
        Err(Error::NotInversionAut)
    }
}

/// Twisted cyclic reduction for an inversion automorphism: an inverted stack
/// that starts and ends with the same signed bead, or a fixed stack that
/// starts and ends with opposite ones, loses its bottom and top tiles.
pub fn phi_cyclic_reduce_inversions<'g>(
    p: &Piling<'g>,
    phi: &LengthPreservingAut,
) -> Result<Piling<'g>> {
    require_inversion(phi)?;
    let mut q = p.clone();
    q.reduce_with(|q, v| {
        let s = q.stack(v);
        if s.len() < 2 {
            return false;
        }
        match (s.front(), s.back()) {
            (Some(&a), Some(&b)) if a != Bead::Zero && b != Bead::Zero => {
                (a == b) == phi.is_inverted(v)
            }
            _ => false,
        }
    });
    Ok(q)
}

/// One twisted reduction: some stack `i` ends with a tile whose `phi` image
/// cancels the bottom tile of stack `perm(i)`. Both tiles are removed.
pub fn phi_reduction_step_general<'g>(
    p: &Piling<'g>,
    phi: &LengthPreservingAut,
) -> Option<Piling<'g>> {
    for i in 0..p.graph().len() {
        let Some(top) = p.tile_at(i, End::Top) else {
            continue;
        };
        let image = top.letter().apply(phi);
        let Some(bottom) = p.tile_at(image.vertex, End::Bottom) else {
            continue;
        };
        if bottom.sign != image.sign.flip() {
            continue;
        }
        // a lone bead is both tiles at once
        if image.vertex == i && p.len() == 1 {
            continue;
        }
        let mut q = p.clone();
        q.remove_tile_mut(i, End::Top).ok()?;
        q.remove_tile_mut(image.vertex, End::Bottom).ok()?;
        return Some(q);
    }
    None
}

/// The closure of a piling under twisted tile moves at minimal length.
#[derive(Clone, Debug)]
pub struct TwistedClassSet<'g> {
    /// Members, sorted by canonical encoding.
    pub pilings: Vec<Piling<'g>>,
    /// Least normal word over all members.
    pub min_rep: Word,
    /// How many times a shorter piling forced a restart.
    pub restarts: usize,
    /// Pilings visited, counting restarts.
    pub visited: usize,
}

impl TwistedClassSet<'_> {
    pub fn contains(&self, p: &Piling<'_>) -> bool {
        let key = p.encoding();
        self.pilings
            .binary_search_by(|q| q.encoding().cmp(&key))
            .is_ok()
    }

    /// Common length of all members.
    pub fn len(&self) -> usize {
        self.min_rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pilings.is_empty()
    }
}

pub fn twisted_class_set<'g>(
    graph: &'g DefiningGraph,
    v: &[Letter],
    phi: &LengthPreservingAut,
    budget: usize,
) -> Result<TwistedClassSet<'g>> {
    class_set_of(&Piling::build(graph, v), phi, budget)
}

/// Breadth-first closure of `start` under twisted tile moves. Whenever a move
/// produces a shorter piling, everything found so far is discarded and the
/// search restarts from that piling.
pub fn class_set_of<'g>(
    start: &Piling<'g>,
    phi: &LengthPreservingAut,
    budget: usize,
) -> Result<TwistedClassSet<'g>> {
    let phi_inv = phi.inverse();
    let mut visited = 0usize;
    let mut restarts = 0usize;
    let mut root = start.clone();
    'restart: loop {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut members = Vec::new();
        let mut frontier = VecDeque::new();
        seen.insert(root.encoding());
        frontier.push_back(root.clone());
        while let Some(p) = frontier.pop_front() {
            visited += 1;
            if visited > budget {
                return Err(Error::ResourceExhausted(budget));
            }
            for (_, q) in moves_with(&p, phi, &phi_inv) {
                if q.len() < p.len() {
                    restarts += 1;
                    root = q;
                    continue 'restart;
                }
                if seen.insert(q.encoding()) {
                    frontier.push_back(q);
                }
            }
            members.push(p);
        }
        members.sort_by_cached_key(|p| p.encoding());
        let min_rep = members
            .iter()
            .map(|p| p.normal_word())
            .min()
            .expect("closure contains its root");
        return Ok(TwistedClassSet {
            pilings: members,
            min_rep,
            restarts,
            visited,
        });
    }
}

/// Decides whether `u` and `v` are `phi`-twisted conjugate. Inversion
/// automorphisms take the linear-time path.
pub fn tcp(
    graph: &DefiningGraph,
    u: &[Letter],
    v: &[Letter],
    phi: &LengthPreservingAut,
    budget: usize,
) -> Result<bool> {
    if phi.is_inversion() {
        return tcp_inversions(graph, u, v, phi);
    }
    tcp_general(graph, u, v, phi, budget)
}

/// [`tcp`] without the inversion fast path.
pub fn tcp_general(
    graph: &DefiningGraph,
    u: &[Letter],
    v: &[Letter],
    phi: &LengthPreservingAut,
    budget: usize,
) -> Result<bool> {
    let du = twisted_class_set(graph, u, phi, budget)?;
    let dv = twisted_class_set(graph, v, phi, budget.saturating_sub(du.visited))?;
    Ok(du.min_rep == dv.min_rep)
}

/// Canonical label of the `phi`-twisted class of `u`: the least normal word
/// of its closure.
pub fn twisted_class_key(
    graph: &DefiningGraph,
    u: &[Letter],
    phi: &LengthPreservingAut,
    budget: usize,
) -> Result<Word> {
    Ok(twisted_class_set(graph, u, phi, budget)?.min_rep)
}

/// Twisted cyclic reduction, factors, and twisted pyramidal normal words.
fn inversion_factors<'g>(
    p: &Piling<'g>,
    phi: &LengthPreservingAut,
) -> Result<Vec<(VertexSet, Word)>> {
    let reduced = phi_cyclic_reduce_inversions(p, phi)?;
    let mut out = Vec::new();
    for f in reduced.factor_components() {
        let pyr = f.to_pyramidal_twisted(phi)?;
        out.push((f.support(), pyr.normal_word()));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Linear-time twisted conjugacy for automorphisms that only invert
/// generators.
pub fn tcp_inversions(
    graph: &DefiningGraph,
    u: &[Letter],
    v: &[Letter],
    phi: &LengthPreservingAut,
) -> Result<bool> {
    require_inversion(phi)?;
    let p = phi_cyclic_reduce_inversions(&Piling::build(graph, u), phi)?;
    let q = phi_cyclic_reduce_inversions(&Piling::build(graph, v), phi)?;
    if p.len() != q.len() {
        return Ok(false);
    }
    let fp = inversion_factors(&p, phi)?;
    let fq = inversion_factors(&q, phi)?;
    if fp.len() != fq.len() || fp.iter().zip(&fq).any(|(a, b)| a.0 != b.0) {
        return Ok(false);
    }
    for ((_, a), (_, b)) in fp.iter().zip(&fq) {
        if a.len() != b.len() || !phi_cyclic_match(a, b, phi)? {
            return Ok(false);
        }
    }
    Ok(true)
}
