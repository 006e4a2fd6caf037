//! Defining graphs, vertex sets and length-preserving automorphisms.
//!
//! A vertex is referred to by its index; names only matter when parsing or
//! printing. Index order fixes the base order `s_1 < s_2 < ... < s_r`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph with ordered, named vertices.
///
/// Adjacent vertices commute in the associated group.
#[derive(Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// Row-major bit matrix, `words_per_row` u64 words per vertex.
    adjacency: Vec<u64>,
    words_per_row: usize,
    /// For each vertex `v`, the vertices outside the star of `v`.
    blockers: Vec<Vec<usize>>,
}

impl fmt::Debug for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DefiningGraph")
            .field("vertices", &self.names)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

impl DefiningGraph {
    /// Builds a graph from vertex names and index pairs.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidGraph(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name.contains(|c: char| c.is_whitespace() || c == '.' || c == '^' || c == ';')
            {
                return Err(Error::InvalidGraph(format!("invalid vertex name {name:?}")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "duplicate vertex name {name:?}"
                )));
            }
        }
        let r = names.len();
        let words_per_row = r.div_ceil(64);
        let mut adjacency = vec![0u64; r * words_per_row];
        for (a, b) in edges {
            if a >= r || b >= r {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {}", names[a])));
            }
            adjacency[a * words_per_row + b / 64] |= 1 << (b % 64);
            adjacency[b * words_per_row + a / 64] |= 1 << (a % 64);
        }
        let mut g = DefiningGraph {
            names,
            index,
            adjacency,
            words_per_row,
            blockers: Vec::new(),
        };
        g.blockers = (0..r)
            .map(|v| (0..r).filter(|&j| j != v && !g.adjacent(v, j)).collect())
            .collect();
        Ok(g)
    }

    /// Builds a graph from vertex names and named edges.
    pub fn from_named_edges<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self> {
        let lookup: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_ref(), i))
            .collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *lookup
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownVertex(a.as_ref().to_string()))?;
            let ib = *lookup
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownVertex(b.as_ref().to_string()))?;
            pairs.push((ia, ib));
        }
        Self::new(names.iter().map(|n| n.as_ref().to_string()), pairs)
    }

    /// Parses `{"vertices": [...], "edges": [[a, b], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_named_edges(&file.vertices, &file.edges)
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
                .collect(),
        };
        serde_json::to_string(&file).expect("graph serializes")
    }

    /// Edgeless graph on `r` vertices named `a1..ar` (free group).
    pub fn edgeless(r: usize) -> Self {
        Self::new(default_names(r), std::iter::empty()).expect("valid graph")
    }

    /// Complete graph on `r` vertices named `a1..ar` (free abelian group).
    pub fn complete(r: usize) -> Self {
        let edges = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j)));
        Self::new(default_names(r), edges).expect("valid graph")
    }

    /// Path `a1 - a2 - ... - ar`.
    pub fn path(r: usize) -> Self {
        Self::new(default_names(r), (1..r).map(|i| (i - 1, i))).expect("valid graph")
    }

    /// The running four-vertex example: `[a1,a4] = [a2,a3] = [a2,a4] = 1`.
    pub fn example4() -> Self {
        Self::new(default_names(4), [(0, 3), (1, 2), (1, 3)]).expect("valid graph")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a * self.words_per_row + b / 64] >> (b % 64) & 1 == 1
    }

    /// Distinct generators that commute (are joined by an edge).
    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        a == b || self.adjacent(a, b)
    }

    /// Vertices `j != v` not adjacent to `v`: the stacks that receive a 0 bead
    /// whenever a `v` tile is added.
    #[inline]
    pub fn blockers(&self, v: usize) -> &[usize] {
        &self.blockers[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.len();
        (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(i, j))
            .collect()
    }

    pub fn complement(&self) -> DefiningGraph {
        let r = self.len();
        let edges = (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.adjacent(i, j));
        DefiningGraph::new(self.names.clone(), edges).expect("complement of a valid graph")
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_iter(
            (0..self.len()).filter(|&j| self.adjacent(v, j)),
        ))
    }

    /// `v` together with its neighbours.
    pub fn star(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.link(v)?;
        s.insert(v);
        Ok(s)
    }

    /// Partition of `s` into the vertex sets of the connected components of the
    /// induced subgraph, ordered by smallest member.
    pub fn connected_components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let members: Vec<usize> = s.iter().collect();
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for &start in &members {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = VertexSet::default();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &members {
                    if !seen[w] && self.adjacent(v, w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    /// Checks a signed permutation and returns it as an automorphism.
    pub fn validate_aut(&self, perm: Vec<usize>, sign: Vec<i8>) -> Result<LengthPreservingAut> {
        LengthPreservingAut::new(self, perm, sign)
    }
}

fn default_names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("a{i}")).collect()
}

/// A subset of vertex indices, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

/// A length-preserving automorphism: a graph automorphism composed with
/// inversions, acting on letters by `s_i^e -> s_perm(i)^(e * sign(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LengthPreservingAut {
    perm: Vec<usize>,
    sign: Vec<i8>,
    order: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct AutFile {
    map: BTreeMap<String, String>,
}

impl LengthPreservingAut {
    pub fn new(graph: &DefiningGraph, perm: Vec<usize>, sign: Vec<i8>) -> Result<Self> {
        let r = graph.len();
        if perm.len() != r || sign.len() != r {
            return Err(Error::InvalidAut(format!(
                "expected {r} images, got {} / {}",
                perm.len(),
                sign.len()
            )));
        }
        let mut hit = vec![false; r];
        for &p in &perm {
            if p >= r || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidAut("vertex map is not a bijection".into()));
            }
        }
        if let Some(&s) = sign.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidAut(format!("sign {s} is not +1 or -1")));
        }
        for (a, b) in graph.edges() {
            if !graph.adjacent(perm[a], perm[b]) {
                return Err(Error::AdjacencyViolation {
                    from: (graph.name(a).to_string(), graph.name(b).to_string()),
                    to: (
                        graph.name(perm[a]).to_string(),
                        graph.name(perm[b]).to_string(),
                    ),
                });
            }
        }
        let mut aut = LengthPreservingAut {
            perm,
            sign,
            order: 0,
        };
        aut.order = aut.compute_order();
        Ok(aut)
    }

    pub fn identity(r: usize) -> Self {
        LengthPreservingAut {
            perm: (0..r).collect(),
            sign: vec![1; r],
            order: 1,
        }
    }

    /// The pure inversion automorphism flipping the listed vertices.
    pub fn inversions(r: usize, inverted: &[usize]) -> Self {
        let mut sign = vec![1; r];
        for &v in inverted {
            sign[v] = -1;
        }
        let order = if inverted.is_empty() { 1 } else { 2 };
        LengthPreservingAut {
            perm: (0..r).collect(),
            sign,
            order,
        }
    }

    /// Parses `{"map": {"a1": "a3", "a2": "a4^-1"}}`; omitted vertices are fixed.
    pub fn from_json(graph: &DefiningGraph, text: &str) -> Result<Self> {
        let file: AutFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let r = graph.len();
        let mut perm: Vec<usize> = (0..r).collect();
        let mut sign = vec![1i8; r];
        for (src, target) in &file.map {
            let s = graph.vertex(src)?;
            let (name, inv) = match target.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (target.as_str(), false),
            };
            perm[s] = graph.vertex(name.trim())?;
            sign[s] = if inv { -1 } else { 1 };
        }
        Self::new(graph, perm, sign)
    }

    pub fn to_json(&self, graph: &DefiningGraph) -> String {
        let map = (0..self.perm.len())
            .filter(|&i| self.perm[i] != i || self.sign[i] != 1)
            .map(|i| {
                let suffix = if self.sign[i] < 0 { "^-1" } else { "" };
                (
                    graph.name(i).to_string(),
                    format!("{}{suffix}", graph.name(self.perm[i])),
                )
            })
            .collect();
        serde_json::to_string(&AutFile { map }).expect("aut serializes")
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Smallest `m >= 1` with `phi^m = id`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn perm(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn sign(&self, v: usize) -> i8 {
        self.sign[v]
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// True when the underlying vertex permutation is trivial.
    pub fn is_inversion(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_inverted(&self, v: usize) -> bool {
        self.sign[v] < 0
    }

    /// `self` followed by `other`: `(other . self)(x) = other(self(x))`.
    pub fn then(&self, other: &LengthPreservingAut) -> LengthPreservingAut {
        let r = self.rank();
        let perm = (0..r).map(|i| other.perm[self.perm[i]]).collect();
        let sign = (0..r)
            .map(|i| self.sign[i] * other.sign[self.perm[i]])
            .collect();
        let mut out = LengthPreservingAut {
            perm,
            sign,
            order: 0,
        };
        out.order = out.compute_order();
        out
    }

    pub fn inverse(&self) -> LengthPreservingAut {
        self.pow(-1)
    }

    /// `phi^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> LengthPreservingAut {
        let m = self.order as i64;
        let k = k.rem_euclid(m) as usize;
        let mut acc = LengthPreservingAut::identity(self.rank());
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    fn compute_order(&self) -> usize {
        let r = self.rank();
        let mut perm: Vec<usize> = (0..r).collect();
        let mut sign = vec![1i8; r];
        for m in 1.. {
            let next_perm: Vec<usize> = (0..r).map(|i| self.perm[perm[i]]).collect();
            let next_sign: Vec<i8> = (0..r).map(|i| sign[i] * self.sign[perm[i]]).collect();
            perm = next_perm;
            sign = next_sign;
            if perm.iter().enumerate().all(|(i, &p)| i == p) && sign.iter().all(|&s| s == 1) {
                return m;
            }
        }
        unreachable!()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_edgeless() {
        let c = DefiningGraph::complete(2).complement();
        assert!(c.edges().is_empty());
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn complement_of_example_graph() {
        let c = DefiningGraph::example4().complement();
        assert_eq!(c.edges(), vec![(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn links() {
        let g = DefiningGraph::example4();
        assert_eq!(g.link(1).unwrap().as_slice(), &[2, 3]);
        assert!(DefiningGraph::edgeless(3).link(0).unwrap().is_empty());
        assert_eq!(
            DefiningGraph::complete(4).link(2).unwrap().as_slice(),
            &[0, 1, 3]
        );
        assert!(matches!(g.link(7), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn components_in_complement() {
        let c = DefiningGraph::example4().complement();
        assert!(c.connected_components(&VertexSet::default()).is_empty());
        let split = c.connected_components(&VertexSet::from_iter([0, 3]));
        assert_eq!(
            split,
            vec![VertexSet::from_iter([0]), VertexSet::from_iter([3])]
        );
        let joined = c.connected_components(&VertexSet::from_iter([0, 1]));
        assert_eq!(joined, vec![VertexSet::from_iter([0, 1])]);
    }

    #[test]
    fn example_automorphisms() {
        let g = DefiningGraph::example4();
        let id = g.validate_aut(vec![0, 1, 2, 3], vec![1; 4]).unwrap();
        assert_eq!(id.order(), 1);
        let inv = g
            .validate_aut(vec![0, 1, 2, 3], vec![1, -1, 1, -1])
            .unwrap();
        assert_eq!(inv.order(), 2);
        assert!(inv.is_inversion());
        let swap = g.validate_aut(vec![2, 3, 0, 1], vec![1; 4]).unwrap();
        assert_eq!(swap.order(), 2);
        assert!(!swap.is_inversion());
    }

    #[test]
    fn non_automorphism_rejected() {
        let g = DefiningGraph::example4();
        // a1 <-> a2 sends the edge {a2,a3} to the non-edge {a1,a3}
        let err = g.validate_aut(vec![1, 0, 2, 3], vec![1; 4]).unwrap_err();
        assert!(matches!(err, Error::AdjacencyViolation { .. }));
        assert!(g.validate_aut(vec![0, 0, 2, 3], vec![1; 4]).is_err());
    }

    #[test]
    fn order_of_three_cycle_with_sign() {
        let g = DefiningGraph::edgeless(3);
        let phi = g.validate_aut(vec![1, 2, 0], vec![-1, 1, 1]).unwrap();
        assert_eq!(phi.order(), 6);
        assert!(phi.pow(6).is_identity());
        assert!(!phi.pow(3).is_identity());
        assert_eq!(phi.then(&phi.inverse()), LengthPreservingAut::identity(3));
    }

    #[test]
    fn json_round_trip() {
        let g = DefiningGraph::from_json(
            r#"{"vertices": ["a1","a2","a3","a4"], "edges": [["a1","a4"],["a2","a3"],["a2","a4"]]}"#,
        )
        .unwrap();
        assert_eq!(g, DefiningGraph::example4());
        assert_eq!(DefiningGraph::from_json(&g.to_json()).unwrap(), g);
        let phi = LengthPreservingAut::from_json(&g, r#"{"map": {"a2": "a2^-1", "a4": "a4^-1"}}"#)
            .unwrap();
        assert_eq!(phi, LengthPreservingAut::inversions(4, &[1, 3]));
        assert_eq!(
            LengthPreservingAut::from_json(&g, &phi.to_json(&g)).unwrap(),
            phi
        );
    }

    #[test]
    fn invalid_graphs() {
        assert!(DefiningGraph::new(Vec::<String>::new(), []).is_err());
        assert!(DefiningGraph::new(["a", "a"], []).is_err());
        assert!(DefiningGraph::new(["a", "b"], [(0, 0)]).is_err());
        assert!(DefiningGraph::from_json(r#"{"vertices": ["a"], "edges": [["a","b"]]}"#).is_err());
    }
}
