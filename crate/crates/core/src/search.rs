//! Linear-time string primitives used for rotation and twisted-rotation tests.

use std::cmp::Ordering;

/// Knuth-Morris-Pratt failure function.
fn failure<T: PartialEq>(pattern: &[T]) -> Vec<usize> {
    let mut fail = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Offset of the first occurrence of `pattern` in `text`.
pub fn find<T: PartialEq>(text: &[T], pattern: &[T]) -> Option<usize> {
    find_in(text.iter(), pattern)
}

/// Like [`find`], but over any stream of items (e.g. a lazily doubled word).
pub fn find_in<'a, T: PartialEq + 'a>(
    text: impl IntoIterator<Item = &'a T>,
    pattern: &[T],
) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    let fail = failure(pattern);
    let mut k = 0;
    for (i, c) in text.into_iter().enumerate() {
        while k > 0 && *c != pattern[k] {
            k = fail[k - 1];
        }
        if *c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            return Some(i + 1 - k);
        }
    }
    None
}

/// True iff `v` is a rotation of `u`.
pub fn is_rotation<T: PartialEq>(u: &[T], v: &[T]) -> bool {
    u.len() == v.len() && find_in(u.iter().chain(u.iter()), v).is_some()
}

/// Start index of the least rotation of `s` under `cmp` (Booth's algorithm).
pub fn least_rotation_by<T>(s: &[T], mut cmp: impl FnMut(&T, &T) -> Ordering) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && cmp(sj, at(k + i as usize + 1)) != Ordering::Equal {
            if cmp(sj, at(k + i as usize + 1)) == Ordering::Less {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && cmp(sj, at(k)) != Ordering::Equal {
            if cmp(sj, at(k)) == Ordering::Less {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}
