//! Conjugacy growth tables: `c(n)` counts the conjugacy classes whose
//! shortest elements have length `n`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use crate::conjugacy::{self, ClassKey};
use crate::error::{Error, Result};
use crate::extension::{ExtClassKey, ExtGroup};
use crate::graph::DefiningGraph;
use crate::piling::Piling;
use crate::twisted;
use crate::word::{Letter, Word};

/// Default cap on elements enumerated while building a table.
pub const DEFAULT_GROWTH_BUDGET: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    /// `c(0), c(1), .., c(N)`.
    pub coefficients: Vec<u64>,
    /// The generating set lengths are measured in.
    pub generators: String,
}

impl GrowthTable {
    /// Header text explaining what the table does and does not show.
    pub fn note(&self) -> String {
        format!(
            "conjugacy growth c(n) over generators {}, n = 0..{}; a finite prefix of the series, \
             which cannot show whether the series is rational",
            self.generators,
            self.coefficients.len().saturating_sub(1)
        )
    }

    /// `n,c(n)` lines.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (n, c) in self.coefficients.iter().enumerate() {
            let _ = writeln!(s, "{n},{c}");
        }
        s
    }

    /// Whitespace-separated columns with a commented header.
    pub fn to_gnuplot(&self) -> String {
        let mut s = format!("# {}\n# n c(n)\n", self.note());
        for (n, c) in self.coefficients.iter().enumerate() {
            let _ = writeln!(s, "{n} {c}");
        }
        s
    }
}

/// Growth table of `A(G)` up to length `max_len`.
///
/// Normal words are closed under prefixes, so they are listed depth first.
/// Each class of length `n` contains a cyclically reduced element of length
/// `n` and all its cyclically reduced elements have that length, so `c(n)`
/// is the number of distinct class keys of cyclically reduced normal words
/// of length `n`. Every entry up to `max_len` is exact.
pub fn raag_conj_growth(
    graph: &DefiningGraph,
    max_len: usize,
    budget: usize,
) -> Result<GrowthTable> {
    let mut keys: Vec<HashSet<ClassKey>> = vec![HashSet::new(); max_len + 1];
    keys[0].insert(ClassKey(Vec::new()));
    let letters: Vec<Letter> = Letter::all(graph.len()).collect();
    let mut visited = 0usize;
    let mut stack: Vec<Word> = vec![Word::empty()];
    while let Some(w) = stack.pop() {
        if w.len() == max_len {
            continue;
        }
        for &x in &letters {
            let mut next = w.clone();
            next.push(x);
            let p = Piling::build(graph, &next);
            if p.len() != next.len() || p.normal_word() != next {
                continue;
            }
            visited += 1;
            if visited > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            if p.is_cyclically_reduced() {
                keys[next.len()].insert(conjugacy::class_key_of(&p));
            }
            stack.push(next);
        }
    }
    Ok(GrowthTable {
        coefficients: keys.iter().map(|k| k.len() as u64).collect(),
        generators: names(graph).join(" "),
    })
}

fn names(graph: &DefiningGraph) -> Vec<String> {
    graph.names().to_vec()
}

/// Growth table of `A_phi` over `X` and `t`, `t^-1`, up to length `max_len`.
///
/// Lists the ball of radius `max_len` breadth first, labels each element by
/// its class key and records the least depth per class. A class whose
/// shortest element has length `n <= max_len` has that element in the
/// ball, so every entry is exact.
pub fn ext_conj_growth(group: &ExtGroup<'_>, max_len: usize, budget: usize) -> Result<GrowthTable> {
    let mut shortest: BTreeMap<ExtClassKey, usize> = BTreeMap::new();
    let gens = group.generators();
    let mut seen: HashMap<_, usize> = HashMap::from([(group.identity(), 0)]);
    let mut layer = vec![group.identity()];
    shortest.insert(
        group.class_key(&group.identity(), twisted::DEFAULT_BUDGET)?,
        0,
    );
    for d in 1..=max_len {
        let mut next = Vec::new();
        for g in &layer {
            for s in &gens {
                let h = group.multiply(g, s)?;
                if seen.contains_key(&h) {
                    continue;
                }
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                seen.insert(h.clone(), d);
                let key = group.class_key(&h, twisted::DEFAULT_BUDGET)?;
                shortest.entry(key).or_insert(d);
                next.push(h);
            }
        }
        layer = next;
    }
    let mut coefficients = vec![0u64; max_len + 1];
    for d in shortest.values() {
        coefficients[*d] += 1;
    }
    let mut gens_note = names(group.graph());
    if group.order() > 1 {
        gens_note.push("t".into());
        gens_note.push("t^-1".into());
    }
    Ok(GrowthTable {
        coefficients,
        generators: gens_note.join(" "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LengthPreservingAut;

    #[test]
    fn small_tables() {
        let z = raag_conj_growth(&DefiningGraph::edgeless(1), 5, 1000).unwrap();
        assert_eq!(z.coefficients, vec![1, 2, 2, 2, 2, 2]);
        let z2 = raag_conj_growth(&DefiningGraph::complete(2), 4, 1000).unwrap();
        assert_eq!(z2.coefficients, vec![1, 4, 8, 12, 16]);
        let f2 = raag_conj_growth(&DefiningGraph::edgeless(2), 2, 1000).unwrap();
        assert_eq!(f2.to_csv(), "0,1\n1,4\n2,8\n");
        assert!(f2.to_gnuplot().ends_with("0 1\n1 4\n2 8\n"));
        assert!(matches!(
            raag_conj_growth(&DefiningGraph::edgeless(2), 6, 10),
            Err(Error::BudgetExceeded(10))
        ));
    }

    #[test]
    fn extension_tables() {
        let g = DefiningGraph::edgeless(1);
        let grp = ExtGroup::new(&g, LengthPreservingAut::inversions(1, &[0])).unwrap();
        let t = ext_conj_growth(&grp, 3, 10_000).unwrap();
        assert_eq!(&t.coefficients[..2], &[1, 2]);
        assert!(t.generators.ends_with("t t^-1"));

        let trivial = ExtGroup::new(&g, LengthPreservingAut::identity(1)).unwrap();
        let e = ext_conj_growth(&trivial, 4, 10_000).unwrap();
        assert_eq!(
            e.coefficients,
            raag_conj_growth(&g, 4, 10_000).unwrap().coefficients
        );
    }
}
