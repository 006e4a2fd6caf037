//! The finite cyclic extension `A_phi = A(G) x| Z/m`, with `t^m = 1` and
//! `t^-1 x t = phi(x)`, where `m` is the order of `phi`.
//!
//! Elements are pairs `(u, a)` standing for `u t^a`. Moving `t^a` past a word
//! gives `t^a v = phi^-a(v) t^a`, so
//! `(u, a)(v, b) = (u phi^-a(v), a + b mod m)`.

use std::fmt;

use crate::conjugacy::{self, ClassKey};
use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, LengthPreservingAut};
use crate::piling::Piling;
use crate::twisted;
use crate::word::{Letter, Word};

/// `u t^texp`, with `base` kept as a normal word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement {
    pub base: Word,
    pub texp: usize,
}

/// Canonical label of a conjugacy class of `A_phi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtClassKey {
    /// `texp` with `phi^texp` trivial: least ordinary class key over the `phi` orbit.
    Untwisted(usize, ClassKey),
    /// Least twisted class representative over the `phi` orbit.
    Twisted(usize, Word),
}

#[derive(Clone, Debug)]
pub struct ExtGroup<'g> {
    graph: &'g DefiningGraph,
    phi: LengthPreservingAut,
    m: usize,
}

impl<'g> ExtGroup<'g> {
    pub fn new(graph: &'g DefiningGraph, phi: LengthPreservingAut) -> Result<Self> {
        if phi.rank() != graph.len() {
            return Err(Error::InvalidAut(format!(
                "automorphism acts on {} generators, graph has {}",
                phi.rank(),
                graph.len()
            )));
        }
        let m = phi.order();
        Ok(ExtGroup { graph, phi, m })
    }

    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    pub fn phi(&self) -> &LengthPreservingAut {
        &self.phi
    }

    /// Order of `t`, equal to the order of `phi`.
    pub fn order(&self) -> usize {
        self.m
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement {
            base: Word::empty(),
            texp: 0,
        }
    }

    pub fn t(&self) -> ExtElement {
        self.t_pow(1)
    }

    pub fn t_pow(&self, k: i64) -> ExtElement {
        ExtElement {
            base: Word::empty(),
            texp: k.rem_euclid(self.m as i64) as usize,
        }
    }

    pub fn letter(&self, x: Letter) -> ExtElement {
        ExtElement {
            base: Word::from(vec![x]),
            texp: 0,
        }
    }

    /// `u t^k` with `u` brought to normal form.
    pub fn element(&self, u: &[Letter], k: i64) -> ExtElement {
        ExtElement {
            base: Piling::build(self.graph, u).normal_word(),
            texp: k.rem_euclid(self.m as i64) as usize,
        }
    }

    /// The generators `X` and, when `m > 1`, `t` and `t^-1` (once if equal).
    pub fn generators(&self) -> Vec<ExtElement> {
        let mut gens: Vec<ExtElement> = Letter::all(self.graph.len())
            .map(|x| self.letter(x))
            .collect();
        if self.m > 1 {
            gens.push(self.t());
            if self.m > 2 {
                gens.push(self.t_pow(-1));
            }
        }
        gens
    }

    /// Parses `"<word> ; t^<k>"`; the `t` part may be omitted.
    pub fn parse(&self, text: &str) -> Result<ExtElement> {
        let (word, tpart) = match text.split_once(';') {
            Some((w, t)) => (w, t.trim()),
            None => (text, ""),
        };
        let u = Word::parse(self.graph, word)?;
        let k = if tpart.is_empty() {
            0
        } else {
            let after = &text[word.len() + 1..];
            let offset = word.len() + 1 + after.len() - after.trim_start().len();
            let bad = || Error::Parse {
                token: tpart.to_string(),
                offset,
            };
            match tpart.strip_prefix('t') {
                Some("") => 1,
                Some(rest) => rest
                    .strip_prefix('^')
                    .and_then(|e| e.trim().parse::<i64>().ok())
                    .ok_or_else(bad)?,
                None => return Err(bad()),
            }
        };
        Ok(self.element(&u, k))
    }

    fn check(&self, g: &ExtElement) -> Result<()> {
        if g.texp >= self.m || g.base.iter().any(|x| x.vertex >= self.graph.len()) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, g: &ExtElement, h: &ExtElement) -> Result<ExtElement> {
        self.check(g)?;
        self.check(h)?;
        let mut p = Piling::build(self.graph, &g.base);
        for x in h.base.apply_aut(&self.phi, -(g.texp as i64)) {
            p.push_letter(x);
        }
        Ok(ExtElement {
            base: p.normal_word(),
            texp: (g.texp + h.texp) % self.m,
        })
    }

    /// `(u, a)^-1 = (phi^a(u^-1), -a)`.
    pub fn inverse(&self, g: &ExtElement) -> Result<ExtElement> {
        self.check(g)?;
        let a = g.texp as i64;
        Ok(self.element(&g.base.inverse().apply_aut(&self.phi, a), -a))
    }

    pub fn equal(&self, g: &ExtElement, h: &ExtElement) -> Result<bool> {
        self.check(g)?;
        self.check(h)?;
        let p = Piling::build(self.graph, &g.base);
        let q = Piling::build(self.graph, &h.base);
        Ok(g.texp == h.texp && p == q)
    }

    /// Conjugacy in `A_phi`: `(u, a) ~ (v, b)` iff `a = b` and `phi^k(u)` is
    /// `phi^a`-twisted conjugate to `v` for some `k`. Conjugating by
    /// `w t^k` sends `u t^a` to `phi^k(w)^-1 phi^k(u) phi^(k-a)(w) t^a`.
    pub fn conjugate(&self, g: &ExtElement, h: &ExtElement, budget: usize) -> Result<bool> {
        self.check(g)?;
        self.check(h)?;
        if g.texp != h.texp {
            return Ok(false);
        }
        let twist = self.phi.pow(g.texp as i64);
        for k in 0..self.m {
            let u = g.base.apply_aut(&self.phi, k as i64);
            let hit = if twist.is_identity() {
                conjugacy::conjugate(self.graph, &u, &h.base)
            } else {
                twisted::tcp(self.graph, &u, &h.base, &twist, budget)?
            };
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Two elements have the same key iff they are conjugate.
    pub fn class_key(&self, g: &ExtElement, budget: usize) -> Result<ExtClassKey> {
        self.check(g)?;
        let twist = self.phi.pow(g.texp as i64);
        let orbit = (0..self.m).map(|k| g.base.apply_aut(&self.phi, k as i64));
        if twist.is_identity() {
            let key = orbit
                .map(|u| conjugacy::class_key(self.graph, &u))
                .min()
                .expect("m >= 1");
            return Ok(ExtClassKey::Untwisted(g.texp, key));
        }
        let mut best: Option<Word> = None;
        for u in orbit {
            let w = twisted::twisted_class_key(self.graph, &u, &twist, budget)?;
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
        Ok(ExtClassKey::Twisted(g.texp, best.expect("m >= 1")))
    }

    pub fn display<'a>(&'a self, g: &'a ExtElement) -> impl fmt::Display + 'a {
        ExtDisplay { group: self, g }
    }
}

struct ExtDisplay<'a, 'g> {
    group: &'a ExtGroup<'g>,
    g: &'a ExtElement,
}

impl fmt::Display for ExtDisplay<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.g.base.to_string(self.group.graph);
        if word.is_empty() {
            write!(f, "; t^{}", self.g.texp)
        } else {
            write!(f, "{word} ; t^{}", self.g.texp)
        }
    }
}
