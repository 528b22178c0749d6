//! Degrees: elements of the monoid ℕ^k with its coordinatewise lattice order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible coordinate. Arithmetic that would exceed it is an error.
pub const MAX_COORD: u32 = (1 << 31) - 1;

/// A multi-index in ℕ^k.
///
/// The derived `Ord` is lexicographic and exists for sorting and map keys; the
/// partial order of the monoid is [`Degree::leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroRank);
        }
        if coords.iter().any(|&c| c > MAX_COORD) {
            return Err(Error::Overflow);
        }
        Ok(Degree(coords))
    }

    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "rank must be at least 1");
        Degree(vec![0; k])
    }

    /// The generator `e_i` (0-based `i`).
    pub fn unit(k: usize, i: usize) -> Self {
        let mut d = Self::zero(k);
        d.0[i] = 1;
        d
    }

    /// `(c, c, ..., c)`.
    pub fn uniform(k: usize, c: u32) -> Self {
        assert!(k >= 1, "rank must be at least 1");
        assert!(c <= MAX_COORD);
        Degree(vec![c; k])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `|n| = n_1 + ... + n_k`, the length of any path of this degree.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    fn same_rank(&self, other: &Degree) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    pub fn leq(&self, other: &Degree) -> Result<bool> {
        self.same_rank(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    pub fn join(&self, other: &Degree) -> Result<Degree> {
        self.same_rank(other)?;
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect()))
    }

    pub fn meet(&self, other: &Degree) -> Result<Degree> {
        self.same_rank(other)?;
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect()))
    }

    pub fn add(&self, other: &Degree) -> Result<Degree> {
        self.same_rank(other)?;
        let coords = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).filter(|s| *s <= MAX_COORD).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Degree(coords))
    }

    /// `self - other`, defined when `other <= self`.
    pub fn subtract(&self, other: &Degree) -> Result<Degree> {
        if !other.leq(self)? {
            return Err(Error::NotBelow {
                lower: other.0.clone(),
                upper: self.0.clone(),
            });
        }
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// `c * self`.
    pub fn scale(&self, c: u32) -> Result<Degree> {
        let coords = self
            .0
            .iter()
            .map(|&a| a.checked_mul(c).filter(|s| *s <= MAX_COORD).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Degree(coords))
    }

    /// Splits a nonzero signed vector `p` into `(p⁻, p⁺)`, so that `p⁺ - p⁻ = p`
    /// and `p⁺ ∧ p⁻ = 0`.
    pub fn positive_part(p: &[i64]) -> Result<(Degree, Degree)> {
        if p.is_empty() {
            return Err(Error::ZeroRank);
        }
        if p.iter().all(|&c| c == 0) {
            return Err(Error::ZeroVector);
        }
        let to_coord = |c: i64| -> Result<u32> {
            u32::try_from(c)
                .ok()
                .filter(|c| *c <= MAX_COORD)
                .ok_or(Error::Overflow)
        };
        let neg = p.iter().map(|&c| to_coord((-c).max(0))).collect::<Result<_>>()?;
        let pos = p.iter().map(|&c| to_coord(c.max(0))).collect::<Result<_>>()?;
        Ok((Degree(neg), Degree(pos)))
    }

    /// The signed difference `self - other` as a vector in ℤ^k.
    pub fn difference(&self, other: &Degree) -> Result<Vec<i64>> {
        self.same_rank(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect())
    }

    /// The color sequence of the canonical factorization of a path of this
    /// degree: `n_1` copies of color 0, then `n_2` copies of color 1, and so on.
    pub fn color_pattern(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total());
        for (i, &c) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i, c as usize));
        }
        out
    }

    /// All degrees `d` with `0 <= d <= self`, in lexicographic order.
    pub fn below(&self) -> impl Iterator<Item = Degree> + '_ {
        let k = self.rank();
        let mut cur = Some(vec![0u32; k]);
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    cur = None;
                    break;
                }
                i -= 1;
                if next[i] < self.0[i] {
                    next[i] += 1;
                    for c in next.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    cur = Some(next);
                    break;
                }
            }
            Some(Degree(out))
        })
    }
}

impl TryFrom<Vec<u32>> for Degree {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Degree::new(v)
    }
}

impl From<Degree> for Vec<u32> {
    fn from(d: Degree) -> Self {
        d.0
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Builds a [`Degree`] from literal coordinates; panics on invalid input.
#[macro_export]
macro_rules! deg {
    ($($c:expr),+ $(,)?) => {
        $crate::Degree::new(vec![$($c),+]).expect("valid degree literal")
    };
}
