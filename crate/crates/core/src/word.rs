//! Letters, words, the inverse shortlex order and the letterwise action of
//! automorphisms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, LengthPreservingAut};
use crate::search;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, s: i8) -> Sign {
        if s < 0 {
            self.flip()
        } else {
            self
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub vertex: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(vertex: usize, sign: Sign) -> Self {
        Letter { vertex, sign }
    }

    pub fn pos(vertex: usize) -> Self {
        Letter::new(vertex, Sign::Plus)
    }

    pub fn neg(vertex: usize) -> Self {
        Letter::new(vertex, Sign::Minus)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.vertex, self.sign.flip())
    }

    /// Position in the base order `s1 < s1^-1 < s2 < s2^-1 < ...`.
    #[inline]
    pub fn rank(self) -> usize {
        2 * self.vertex + (self.sign == Sign::Minus) as usize
    }

    /// Comparison under the inverse of the base order.
    #[inline]
    pub fn cmp_inv(self, other: Letter) -> Ordering {
        other.rank().cmp(&self.rank())
    }

    /// Image under `phi` (one application).
    #[inline]
    pub fn apply(self, phi: &LengthPreservingAut) -> Letter {
        Letter::new(
            phi.perm(self.vertex),
            self.sign.times(phi.sign(self.vertex)),
        )
    }

    /// All `2r` letters in base order.
    pub fn all(r: usize) -> impl Iterator<Item = Letter> + Clone {
        (0..r).flat_map(|v| [Letter::pos(v), Letter::neg(v)])
    }
}

/// A finite sequence of letters. Words are never implicitly reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

/// Words are ordered by [`compare_shortlex_inv`].
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_shortlex_inv(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl IntoIterator for Word {
    type Item = Letter;
    type IntoIter = std::vec::IntoIter<Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    /// Parses whitespace- or `.`-separated tokens `name`, `name^-1`, `name^k`.
    pub fn parse(graph: &DefiningGraph, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for (offset, token) in tokens(text) {
            let bad = || Error::Parse {
                token: token.to_string(),
                offset,
            };
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => (name, exp.parse::<i64>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let v = graph.vertex(name).map_err(|_| bad())?;
            let sign = if exp < 0 { Sign::Minus } else { Sign::Plus };
            letters.extend(std::iter::repeat_n(
                Letter::new(v, sign),
                exp.unsigned_abs() as usize,
            ));
        }
        Ok(Word(letters))
    }

    /// Renders with the same syntax [`Word::parse`] accepts.
    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> WordDisplay<'a> {
        WordDisplay { word: self, graph }
    }

    pub fn to_string(&self, graph: &DefiningGraph) -> String {
        self.display(graph).to_string()
    }

    pub fn inverse(&self) -> Word {
        self.0.iter().rev().map(|x| x.inverse()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    /// Letterwise image under `phi^k`.
    pub fn apply_aut(&self, phi: &LengthPreservingAut, k: i64) -> Word {
        let power = phi.pow(k);
        if power.is_identity() {
            return self.clone();
        }
        self.0.iter().map(|x| x.apply(&power)).collect()
    }

    /// Plain cyclic permutation `x_{i+1} .. x_n x_1 .. x_i`.
    pub fn rotate(&self, i: usize) -> Word {
        self.0[i..].iter().chain(&self.0[..i]).copied().collect()
    }

    /// The twisted rotation `phi^k(x_{i+1} .. x_n) phi^(k-1)(x_1 .. x_i)`.
    pub fn phi_cyclic_permute(&self, phi: &LengthPreservingAut, i: usize, k: i64) -> Word {
        let head = phi.pow(k);
        let tail = phi.pow(k - 1);
        self.0[i..]
            .iter()
            .map(|x| x.apply(&head))
            .chain(self.0[..i].iter().map(|x| x.apply(&tail)))
            .collect()
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut start = None;
    let mut out = Vec::new();
    for (i, c) in text.char_indices() {
        let sep = c.is_whitespace() || c == '.';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    graph: &'a DefiningGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(x.vertex))?;
            if x.sign == Sign::Minus {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Shortlex order induced by the inverse of the base letter order.
pub fn compare_shortlex_inv(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| {
        u.iter()
            .zip(v)
            .map(|(a, b)| a.cmp_inv(*b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Is `v` a twisted rotation of `u`? One linear-time search per power of `phi`:
/// the length-`n` window at offset `i` of `phi^k(u) phi^(k-1)(u)` is exactly
/// `phi^k(u[i..]) phi^(k-1)(u[..i])`.
pub fn phi_cyclic_match(u: &[Letter], v: &[Letter], phi: &LengthPreservingAut) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    if u.is_empty() {
        return Ok(true);
    }
    let m = phi.order() as i64;
    for k in 0..m {
        let head = phi.pow(k);
        let tail = phi.pow(k - 1);
        let doubled = u
            .iter()
            .map(|x| x.apply(&head))
            .chain(u.iter().map(|x| x.apply(&tail)))
            .collect::<Vec<_>>();
        // windows that start at offset n repeat offset 0 with a different power
        if search::find(&doubled[..2 * u.len() - 1], v).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Is `v` a plain rotation of `u`?
pub fn cyclic_match(u: &[Letter], v: &[Letter]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(search::is_rotation(u, v))
}
