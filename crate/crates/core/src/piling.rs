//! Pilings: one stack of `+`, `-`, `0` beads per generator.
//!
//! Reading a word left to right, a letter `s_v^e` drops a tile: a signed bead
//! on the `v` stack plus a `0` bead on every stack whose generator does not
//! commute with `s_v`. A tile whose signed bead lands directly on an opposite
//! bead cancels against the tile underneath instead. Two words represent the
//! same group element exactly when their pilings agree stack by stack.
//!
//! Threads between beads are not stored: a tile's `0` beads are always the
//! end-most beads of the blocking stacks, so tiles at either end of the piling
//! can be recovered positionally.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, LengthPreservingAut, VertexSet};
use crate::word::{Letter, Sign, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bead {
    Plus,
    Minus,
    Zero,
}

impl Bead {
    fn signed(s: Sign) -> Bead {
        match s {
            Sign::Plus => Bead::Plus,
            Sign::Minus => Bead::Minus,
        }
    }

    fn sign(self) -> Option<Sign> {
        match self {
            Bead::Plus => Some(Sign::Plus),
            Bead::Minus => Some(Sign::Minus),
            Bead::Zero => None,
        }
    }

    fn symbol(self) -> u8 {
        match self {
            Bead::Plus => b'+',
            Bead::Minus => b'-',
            Bead::Zero => b'0',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Bottom,
    Top,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Bottom => End::Top,
            End::Top => End::Bottom,
        }
    }
}

/// A tile sitting at one end of the piling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TileRef {
    pub vertex: usize,
    pub end: End,
    pub sign: Sign,
}

impl TileRef {
    pub fn letter(self) -> Letter {
        Letter::new(self.vertex, self.sign)
    }
}

#[derive(Clone)]
pub struct Piling<'g> {
    graph: &'g DefiningGraph,
    stacks: Vec<VecDeque<Bead>>,
    /// Number of signed beads, i.e. the geodesic length of the element.
    signed: usize,
}

impl PartialEq for Piling<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.signed == other.signed && self.stacks == other.stacks
    }
}

impl Eq for Piling<'_> {}

impl std::hash::Hash for Piling<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.stacks.hash(state);
    }
}

impl fmt::Debug for Piling<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Piling[{}]",
            self.render().trim_end().replace('\n', "; ")
        )
    }
}

impl<'g> Piling<'g> {
    pub fn empty(graph: &'g DefiningGraph) -> Self {
        Piling {
            graph,
            stacks: vec![VecDeque::new(); graph.len()],
            signed: 0,
        }
    }

    /// Folds [`Piling::push_letter`] over the word.
    pub fn build(graph: &'g DefiningGraph, word: &[Letter]) -> Self {
        let mut p = Piling::empty(graph);
        for &x in word {
            p.push_letter(x);
        }
        p
    }

    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    /// Geodesic length of the represented element.
    pub fn len(&self) -> usize {
        self.signed
    }

    pub fn is_empty(&self) -> bool {
        self.signed == 0
    }

    pub fn stack(&self, v: usize) -> &VecDeque<Bead> {
        &self.stacks[v]
    }

    /// Right-multiplies by a letter.
    pub fn push_letter(&mut self, x: Letter) {
        self.attach(x, End::Top);
    }

    /// Left-multiplies by a letter.
    pub fn prepend_letter(&mut self, x: Letter) {
        self.attach(x, End::Bottom);
    }

    pub fn with_letter(mut self, x: Letter) -> Self {
        self.push_letter(x);
        self
    }

    /// Adds a tile at `end`, cancelling against an opposite tile already there.
    /// Returns true if a cancellation happened.
    fn attach(&mut self, x: Letter, end: End) -> bool {
        let v = x.vertex;
        let opposite = Bead::signed(x.sign.flip());
        let at_end = match end {
            End::Top => self.stacks[v].back(),
            End::Bottom => self.stacks[v].front(),
        };
        if at_end == Some(&opposite) {
            self.detach(v, end);
            true
        } else {
            let bead = Bead::signed(x.sign);
            let Piling { graph, stacks, .. } = self;
            match end {
                End::Top => {
                    stacks[v].push_back(bead);
                    for &j in graph.blockers(v) {
                        stacks[j].push_back(Bead::Zero);
                    }
                }
                End::Bottom => {
                    stacks[v].push_front(bead);
                    for &j in graph.blockers(v) {
                        stacks[j].push_front(Bead::Zero);
                    }
                }
            }
            self.signed += 1;
            false
        }
    }

    /// Pops a tile known to sit at `end` of stack `v`.
    fn detach(&mut self, v: usize, end: End) -> Sign {
        let Piling { graph, stacks, .. } = self;
        let bead = match end {
            End::Top => {
                for &j in graph.blockers(v) {
                    stacks[j].pop_back();
                }
                stacks[v].pop_back()
            }
            End::Bottom => {
                for &j in graph.blockers(v) {
                    stacks[j].pop_front();
                }
                stacks[v].pop_front()
            }
        };
        self.signed -= 1;
        bead.and_then(Bead::sign).expect("detached bead is signed")
    }

    /// The tile at `end` of stack `v`, if that stack ends in a signed bead.
    pub fn tile_at(&self, v: usize, end: End) -> Option<TileRef> {
        let bead = match end {
            End::Top => self.stacks[v].back(),
            End::Bottom => self.stacks[v].front(),
        };
        bead.and_then(|b| b.sign()).map(|sign| TileRef {
            vertex: v,
            end,
            sign,
        })
    }

    pub fn bottom_tiles(&self) -> Vec<TileRef> {
        (0..self.stacks.len())
            .filter_map(|v| self.tile_at(v, End::Bottom))
            .collect()
    }

    pub fn top_tiles(&self) -> Vec<TileRef> {
        (0..self.stacks.len())
            .filter_map(|v| self.tile_at(v, End::Top))
            .collect()
    }

    /// Removes the tile at `end` of stack `v` in place and returns its sign.
    pub fn remove_tile_mut(&mut self, v: usize, end: End) -> Result<Sign> {
        if v >= self.stacks.len() || self.tile_at(v, end).is_none() {
            return Err(Error::NoSuchTile { vertex: v, end });
        }
        let blocked = self.graph.blockers(v).iter().any(|&j| {
            let b = match end {
                End::Top => self.stacks[j].back(),
                End::Bottom => self.stacks[j].front(),
            };
            b != Some(&Bead::Zero)
        });
        if blocked {
            return Err(Error::BlockedTile { vertex: v, end });
        }
        Ok(self.detach(v, end))
    }

    pub fn remove_tile(&self, t: TileRef) -> Result<Piling<'g>> {
        let mut p = self.clone();
        match p.tile_at(t.vertex, t.end) {
            Some(found) if found.sign == t.sign => {}
            _ => {
                return Err(Error::NoSuchTile {
                    vertex: t.vertex,
                    end: t.end,
                })
            }
        }
        p.remove_tile_mut(t.vertex, t.end)?;
        Ok(p)
    }

    /// Adds a tile at `end`; an opposite tile already at that end cancels.
    pub fn add_tile(&self, v: usize, sign: Sign, end: End) -> Piling<'g> {
        let mut p = self.clone();
        p.attach(Letter::new(v, sign), end);
        p
    }

    /// Moves the tile at `from` of stack `v` to the other end. The letter is
    /// twisted by `phi^-1` on the way up and by `phi` on the way down, which
    /// keeps the element in its `phi`-twisted conjugacy class. Returns the new
    /// piling and whether the arriving tile cancelled.
    pub fn shift_tile(
        &self,
        v: usize,
        from: End,
        phi: &LengthPreservingAut,
        phi_inv: &LengthPreservingAut,
    ) -> Result<(Piling<'g>, bool)> {
        let mut p = self.clone();
        let cancelled = p.shift_tile_mut(v, from, phi, phi_inv)?;
        Ok((p, cancelled))
    }

    fn shift_tile_mut(
        &mut self,
        v: usize,
        from: End,
        phi: &LengthPreservingAut,
        phi_inv: &LengthPreservingAut,
    ) -> Result<bool> {
        let sign = self.remove_tile_mut(v, from)?;
        let x = Letter::new(v, sign);
        let y = match from {
            End::Bottom => x.apply(phi_inv),
            End::Top => x.apply(phi),
        };
        Ok(self.attach(y, from.opposite()))
    }

    /// The normal geodesic: the representative that is least in the inverse
    /// shortlex order. Built by repeatedly peeling the bottom tile of largest
    /// generator.
    pub fn normal_word(&self) -> Word {
        let mut p = self.clone();
        let mut out = Vec::with_capacity(self.signed);
        while !p.is_empty() {
            let v = (0..p.stacks.len())
                .rev()
                .find(|&v| p.tile_at(v, End::Bottom).is_some())
                .expect("non-empty piling has a bottom tile");
            let sign = p.detach(v, End::Bottom);
            out.push(Letter::new(v, sign));
        }
        Word::from(out)
    }

    pub fn equals(&self, other: &Piling<'_>) -> Result<bool> {
        if !std::ptr::eq(self.graph, other.graph) && self.graph != other.graph {
            return Err(Error::GraphMismatch);
        }
        Ok(self.signed == other.signed && self.stacks == other.stacks)
    }

    /// Whether some stack starts and ends with opposite signed beads.
    fn reducible_at(&self, v: usize) -> bool {
        let s = &self.stacks[v];
        if s.len() < 2 {
            return false;
        }
        matches!(
            (s.front(), s.back()),
            (Some(Bead::Plus), Some(Bead::Minus)) | (Some(Bead::Minus), Some(Bead::Plus))
        )
    }

    /// Removes matching bottom/top tile pairs until none is left.
    pub fn cyclic_reduce(&self) -> Piling<'g> {
        let mut p = self.clone();
        p.reduce_with(|p, v| p.reducible_at(v));
        p
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        (0..self.stacks.len()).all(|v| !self.reducible_at(v))
    }

    /// Strips the bottom and top tiles of every stack `v` with `test(v)` until
    /// no stack passes the test.
    pub(crate) fn reduce_with(&mut self, mut test: impl FnMut(&Self, usize) -> bool) {
        loop {
            let mut changed = false;
            for v in 0..self.stacks.len() {
                while test(self, v) {
                    self.detach(v, End::Bottom);
                    self.detach(v, End::Top);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Generators whose stack holds a signed bead.
    pub fn support(&self) -> VertexSet {
        (0..self.stacks.len())
            .filter(|&v| self.stacks[v].iter().any(|b| *b != Bead::Zero))
            .collect()
    }

    /// Support together with its components in the complement graph.
    pub fn delta_subgraph(&self) -> (VertexSet, Vec<VertexSet>) {
        let support = self.support();
        // adjacency in the complement = non-commuting distinct generators
        let comps = complement_components(self.graph, &support);
        (support, comps)
    }

    pub fn is_split(&self) -> bool {
        self.delta_subgraph().1.len() > 1
    }

    /// One piling per component of the support in the complement graph.
    pub fn factor_nonsplit(&self) -> Result<Vec<Piling<'g>>> {
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        Ok(self.factor_components())
    }

    pub(crate) fn factor_components(&self) -> Vec<Piling<'g>> {
        let (_, comps) = self.delta_subgraph();
        if comps.len() <= 1 {
            return if self.is_empty() {
                Vec::new()
            } else {
                vec![self.clone()]
            };
        }
        let mut owner = vec![usize::MAX; self.stacks.len()];
        for (c, comp) in comps.iter().enumerate() {
            for v in comp.iter() {
                owner[v] = c;
            }
        }
        let mut factors = vec![Piling::empty(self.graph); comps.len()];
        for x in self.normal_word() {
            factors[owner[x.vertex]].push_letter(x);
        }
        factors
    }

    /// The apex generator starts its stack with a signed bead and every other
    /// stack is empty or starts with `0`.
    ///
    /// The apex is the smallest supported generator. Normal words list larger
    /// generators first, and only with the apex at the opposite end of the
    /// order are all rotations of a pyramidal normal word normal again.
    pub fn is_pyramidal(&self) -> bool {
        let Some(top) = self.support().smallest() else {
            return false;
        };
        (0..self.stacks.len()).all(|v| (v == top) == self.tile_at(v, End::Bottom).is_some())
    }

    /// Cyclically permutes a non-split cyclically reduced piling into
    /// pyramidal form.
    pub fn to_pyramidal(&self) -> Result<Piling<'g>> {
        let id = LengthPreservingAut::identity(self.graph.len());
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        self.to_pyramidal_twisted(&id)
    }

    /// [`Piling::to_pyramidal`] using `phi`-twisted tile moves. `phi` must
    /// keep every vertex in place so that the support is invariant.
    pub(crate) fn to_pyramidal_twisted(&self, phi: &LengthPreservingAut) -> Result<Piling<'g>> {
        debug_assert!(phi.is_inversion());
        if self.is_empty() {
            return Ok(self.clone());
        }
        let (support, comps) = self.delta_subgraph();
        if comps.len() > 1 {
            return Err(Error::NotNonSplit);
        }
        let top = support.smallest().expect("non-empty support");
        let phi_inv = phi.inverse();
        let r = self.stacks.len();

        // Fast path: keep lifting bottom tiles of the other generators.
        let mut p = self.clone();
        let limit = (r + 1) * (self.signed + 1) + r;
        for _ in 0..limit {
            let next = (0..r).find(|&v| v != top && p.tile_at(v, End::Bottom).is_some());
            match next {
                None if p.tile_at(top, End::Bottom).is_some() => return Ok(p),
                None => break,
                Some(v) => {
                    if p.shift_tile_mut(v, End::Bottom, phi, &phi_inv)? {
                        return Err(Error::NotCyclicallyReduced);
                    }
                }
            }
        }
        self.pyramidal_search(phi, &phi_inv)
    }

    /// Breadth-first search over single-tile moves for a pyramidal piling.
    fn pyramidal_search(
        &self,
        phi: &LengthPreservingAut,
        phi_inv: &LengthPreservingAut,
    ) -> Result<Piling<'g>> {
        let mut seen = HashSet::new();
        let mut frontier = VecDeque::new();
        seen.insert(self.encoding());
        frontier.push_back(self.clone());
        while let Some(p) = frontier.pop_front() {
            if p.is_pyramidal() {
                return Ok(p);
            }
            for v in 0..p.stacks.len() {
                for end in [End::Bottom, End::Top] {
                    if p.tile_at(v, end).is_none() {
                        continue;
                    }
                    let (q, cancelled) = p.shift_tile(v, end, phi, phi_inv)?;
                    if cancelled {
                        return Err(Error::NotCyclicallyReduced);
                    }
                    if seen.insert(q.encoding()) {
                        frontier.push_back(q);
                    }
                }
            }
        }
        Err(Error::NotNonSplit)
    }

    /// Stack contents with `|` separators; a total key for visited sets.
    pub fn encoding(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.stacks.iter().map(|s| s.len() + 1).sum());
        for s in &self.stacks {
            out.extend(s.iter().map(|b| b.symbol()));
            out.push(b'|');
        }
        out
    }

    /// One line per stack, bottom to top: `a2: + 0`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (v, s) in self.stacks.iter().enumerate() {
            out.push_str(self.graph.name(v));
            out.push(':');
            for b in s {
                out.push(' ');
                out.push(b.symbol() as char);
            }
            out.push('\n');
        }
        out
    }

    /// Per-stack bead symbols, bottom to top.
    pub fn stacks_as_strings(&self) -> BTreeMap<String, String> {
        self.stacks
            .iter()
            .enumerate()
            .map(|(v, s)| {
                (
                    self.graph.name(v).to_string(),
                    s.iter().map(|b| b.symbol() as char).collect(),
                )
            })
            .collect()
    }
}

fn complement_components(graph: &DefiningGraph, s: &VertexSet) -> Vec<VertexSet> {
    let members: Vec<usize> = s.iter().collect();
    let mut seen = vec![false; graph.len()];
    let mut out = Vec::new();
    for &start in &members {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = VertexSet::default();
        let mut todo = vec![start];
        while let Some(v) = todo.pop() {
            comp.insert(v);
            for &w in &members {
                if !seen[w] && !graph.commute(v, w) {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}
