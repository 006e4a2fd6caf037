#![allow(dead_code)]

use raag::{DefiningGraph, LengthPreservingAut, Letter, Sign, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut StdRng, r: usize) -> Letter {
    let sign = if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Letter::new(rng.gen_range(0..r), sign)
}

pub fn random_word(rng: &mut StdRng, r: usize, len: usize) -> Word {
    (0..len).map(|_| random_letter(rng, r)).collect()
}

pub fn random_graph(rng: &mut StdRng, r: usize) -> DefiningGraph {
    let mut edges = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            if rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    DefiningGraph::new((1..=r).map(|i| format!("a{i}")), edges).unwrap()
}

/// Every word of length `0..=max_len`.
pub fn all_words(r: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = Letter::all(r).collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &x in &letters {
                let mut n = w.clone();
                n.push(x);
                next.push(n);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `phi(w)^-1 u w`.
pub fn twisted_conjugate_of(u: &Word, w: &Word, phi: &LengthPreservingAut) -> Word {
    w.apply_aut(phi, 1).inverse().concat(u).concat(w)
}

pub fn example_inversion() -> LengthPreservingAut {
    LengthPreservingAut::inversions(4, &[1, 3])
}

pub fn example_swap(g: &DefiningGraph) -> LengthPreservingAut {
    g.validate_aut(vec![2, 3, 0, 1], vec![1; 4]).unwrap()
}

/// Applies `count` random swaps of adjacent commuting letters.
pub fn shuffle(rng: &mut StdRng, g: &DefiningGraph, w: &Word, count: usize) -> Word {
    let mut v = w.to_vec();
    if v.len() < 2 {
        return Word::from(v);
    }
    for _ in 0..count {
        let i = rng.gen_range(0..v.len() - 1);
        if g.adjacent(v[i].vertex, v[i + 1].vertex) {
            v.swap(i, i + 1);
        }
    }
    Word::from(v)
}
