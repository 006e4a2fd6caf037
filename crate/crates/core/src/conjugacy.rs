//! Linear-time conjugacy: cyclically reduce, split into non-split factors,
//! bring each factor to pyramidal form and compare the resulting cyclic
//! normal forms up to rotation.

use crate::graph::{DefiningGraph, VertexSet};
use crate::piling::Piling;
use crate::search;
use crate::word::{Letter, Word};

pub use crate::word::cyclic_match;

/// Canonical label of a conjugacy class: for each non-split factor, its
/// support and the least rotation (inverse base order on letters) of its
/// cyclic normal form. Sorted by support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey(pub Vec<(VertexSet, Word)>);

impl ClassKey {
    /// Length of the shortest elements in the class.
    pub fn len(&self) -> usize {
        self.0.iter().map(|(_, w)| w.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Cyclically reduced non-split factors of the element, each in pyramidal form.
pub(crate) fn pyramidal_factors<'g>(p: &Piling<'g>) -> Vec<(VertexSet, Piling<'g>)> {
    let reduced = p.cyclic_reduce();
    let mut out: Vec<(VertexSet, Piling<'g>)> = reduced
        .factor_components()
        .into_iter()
        .map(|f| {
            let support = f.support();
            let pyr = f
                .to_pyramidal()
                .expect("factor is non-split and cyclically reduced");
            (support, pyr)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Decides whether `u` and `v` are conjugate.
pub fn conjugate(graph: &DefiningGraph, u: &[Letter], v: &[Letter]) -> bool {
    conjugate_pilings(&Piling::build(graph, u), &Piling::build(graph, v))
}

pub fn conjugate_pilings(p: &Piling<'_>, q: &Piling<'_>) -> bool {
    let p = p.cyclic_reduce();
    let q = q.cyclic_reduce();
    if p.len() != q.len() {
        return false;
    }
    let fp = pyramidal_factors(&p);
    let fq = pyramidal_factors(&q);
    if fp.len() != fq.len() || fp.iter().zip(&fq).any(|(a, b)| a.0 != b.0) {
        return false;
    }
    fp.iter().zip(&fq).all(|((_, a), (_, b))| {
        let wa = a.normal_word();
        let wb = b.normal_word();
        wa.len() == wb.len() && search::is_rotation(&wa, &wb)
    })
}

pub fn class_key(graph: &DefiningGraph, u: &[Letter]) -> ClassKey {
    class_key_of(&Piling::build(graph, u))
}

pub fn class_key_of(p: &Piling<'_>) -> ClassKey {
    ClassKey(
        pyramidal_factors(p)
            .into_iter()
            .map(|(support, pyr)| {
                let w = pyr.normal_word();
                let k = search::least_rotation_by(&w, |a, b| a.cmp_inv(*b));
                (support, w.rotate(k))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &DefiningGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn examples() {
        let g = DefiningGraph::example4();
        assert!(conjugate(&g, &w(&g, "a1 a2"), &w(&g, "a2 a1")));
        assert!(!conjugate(&g, &w(&g, "a1"), &w(&g, "a1^-1")));
        assert!(conjugate(&g, &w(&g, "a1 a4"), &w(&g, "a4 a1")));
        assert!(conjugate(&g, &w(&g, "a1"), &w(&g, "a3 a1 a3^-1")));
        assert!(conjugate(&g, &w(&g, ""), &w(&g, "a3 a2 a2^-1 a3^-1")));
        assert!(!conjugate(&g, &w(&g, "a1 a2"), &w(&g, "a1 a3")));
    }

    #[test]
    fn keys() {
        let g = DefiningGraph::example4();
        assert_eq!(
            class_key(&g, &w(&g, "a1 a2")),
            class_key(&g, &w(&g, "a2 a1"))
        );
        assert_ne!(class_key(&g, &w(&g, "a1")), class_key(&g, &w(&g, "a2")));
        let k = class_key(&g, &w(&g, "a1 a4 a1^-1 a2 a2"));
        assert_eq!(k.len(), 3);
        assert!(class_key(&g, &w(&g, "a3 a3^-1")).is_empty());
    }
}
