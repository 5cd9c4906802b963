//! Exact binomial arithmetic and lexicographic k-combination machinery.
//!
//! A combination is a strictly increasing tuple of indices drawn from
//! `0..n`. Enumeration order is lexicographic, and ranks follow the same
//! order: `rank(first) = 0`, `unrank(rank(c)) = c`. Ranking goes through
//! the combinatorial number system, so both directions cost O(k) binomial
//! evaluations; a rank range therefore names a contiguous slice of the
//! enumeration, which is what the solvers use to split table construction
//! across threads deterministically.

use crate::error::{Error, Result};

/// Exact binomial coefficient C(n, k).
///
/// Returns 0 when `k > n`. Arithmetic is checked: an intermediate value
/// that leaves `u128` reports `Error::Overflow` instead of wrapping.
pub fn binomial(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    // C(n-k+i, i) stays exact at every step, so the division is always even.
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or(Error::Overflow {
                context: "binomial coefficient",
            })?
            / i as u128;
    }
    Ok(acc)
}

/// A strictly increasing index tuple over the universe `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Combination {
    n: usize,
    indices: Vec<usize>,
}

impl Combination {
    /// Builds a combination after validating its invariants.
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::InvalidArgument(format!(
                    "index {last} out of range for universe size {n}"
                )));
            }
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "combination indices must be strictly increasing".into(),
            ));
        }
        Ok(Self { n, indices })
    }

    /// The lexicographically first k-combination: `(0, 1, ..., k-1)`.
    pub fn first(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidArgument(format!(
                "cannot take {k} indices from a universe of {n}"
            )));
        }
        Ok(Self {
            n,
            indices: (0..k).collect(),
        })
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn into_indices(self) -> Vec<usize> {
        self.indices
    }

    /// The lexicographic successor, or `None` after the last combination.
    pub fn successor(&self) -> Option<Self> {
        let mut next = self.clone();
        next.advance().then_some(next)
    }

    /// Steps to the lexicographic successor in place. Returns false once
    /// the last combination `(n-k, ..., n-1)` has been passed.
    pub fn advance(&mut self) -> bool {
        advance_in_place(&mut self.indices, self.n)
    }

    /// 0-based position in lexicographic order.
    pub fn rank(&self) -> Result<u128> {
        rank_of(&self.indices, self.n)
    }

    /// Inverse of [`Combination::rank`]: the combination at position `r`.
    pub fn unrank(n: usize, k: usize, r: u128) -> Result<Self> {
        let mut indices = Vec::with_capacity(k);
        unrank_into(n, k, r, &mut indices)?;
        Ok(Self { n, indices })
    }
}

/// Iterates every k-combination of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut state: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let current = state.clone()?;
        if !state.as_mut().is_some_and(|s| advance_in_place(s, n)) {
            state = None;
        }
        Some(current)
    })
}

pub(crate) fn advance_in_place(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lexicographic rank via the reflected combinatorial number system:
/// rank = C(n,k) - 1 - sum_i C(n-1-c_i, k-i).
pub(crate) fn rank_of(indices: &[usize], n: usize) -> Result<u128> {
    let k = indices.len();
    let mut behind: u128 = 0;
    for (i, &c) in indices.iter().enumerate() {
        behind = behind
            .checked_add(binomial(n - 1 - c, k - i)?)
            .ok_or(Error::Overflow {
                context: "combination rank",
            })?;
    }
    Ok(binomial(n, k)? - 1 - behind)
}

pub(crate) fn unrank_into(n: usize, k: usize, r: u128, out: &mut Vec<usize>) -> Result<()> {
    let total = binomial(n, k)?;
    if r >= total {
        return Err(Error::InvalidArgument(format!(
            "rank {r} out of range, C({n},{k}) = {total}"
        )));
    }
    out.clear();
    let mut rem = r;
    let mut v = 0usize;
    for i in 0..k {
        loop {
            // combinations starting with v at position i
            let below = binomial(n - v - 1, k - i - 1)?;
            if rem < below {
                out.push(v);
                v += 1;
                break;
            }
            rem -= below;
            v += 1;
        }
    }
    Ok(())
}
