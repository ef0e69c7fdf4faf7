//! Exact lattice and rational vectors.
//!
//! [`LatticeVector`] holds degree and exponent data in `Z^n`; [`RationalVector`]
//! holds coefficient data in `Q^n`. All arithmetic is arbitrary precision and
//! exact. Operations that combine two vectors validate that their lengths
//! agree and report [`Error::DimensionMismatch`] otherwise, so elements of
//! different ambient dimensions can never be mixed silently.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer scalar.
pub type Int = BigInt;

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// An integer vector in `Z^n`.
///
/// Ordering is lexicographic, which makes degree maps iterate deterministically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<Int>);

impl LatticeVector {
    pub fn new(entries: Vec<Int>) -> Self {
        LatticeVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        LatticeVector(entries.iter().map(|&e| Int::from(e)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        LatticeVector(vec![Int::zero(); dim])
    }

    /// The standard basis vector `e_index` (0-based).
    pub fn unit(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut v = vec![Int::zero(); dim];
        v[index] = Int::one();
        Ok(LatticeVector(v))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn entry(&self, index: usize) -> &Int {
        &self.0[index]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    /// Sum of the entries.
    pub fn weight(&self) -> Int {
        self.0.iter().sum()
    }

    fn ensure_dim(&self, other: usize) -> Result<()> {
        if self.dim() == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ensure_dim(other.dim())?;
        Ok(LatticeVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ensure_dim(other.dim())?;
        Ok(LatticeVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scaled(&self, factor: &Int) -> Self {
        LatticeVector(self.0.iter().map(|a| a * factor).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rational vector in `Q^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<Rat>);

impl RationalVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RationalVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        RationalVector(
            entries
                .iter()
                .map(|&e| Rat::from_integer(Int::from(e)))
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Rat::zero(); dim])
    }

    /// The standard basis vector `eps_index` (0-based).
    pub fn unit(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut v = vec![Rat::zero(); dim];
        v[index] = Rat::one();
        Ok(RationalVector(v))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn entry(&self, index: usize) -> &Rat {
        &self.0[index]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn ensure_dim(&self, other: usize) -> Result<()> {
        if self.dim() == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other,
            })
        }
    }

    /// The pairing `<alpha, u> = sum_i alpha_i u_i` of a coefficient vector
    /// with a lattice vector.
    pub fn pairing(&self, u: &LatticeVector) -> Result<Rat> {
        self.ensure_dim(u.dim())?;
        let mut acc = Rat::zero();
        for (a, b) in self.0.iter().zip(u.entries()) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += a * b;
        }
        Ok(acc)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ensure_dim(other.dim())?;
        Ok(RationalVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ensure_dim(other.dim())?;
        Ok(RationalVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scaled(&self, factor: &Rat) -> Self {
        RationalVector(self.0.iter().map(|a| a * factor).collect())
    }

    /// `c1 * v1 + c2 * v2`.
    pub fn linear_combination(c1: &Rat, v1: &Self, c2: &Rat, v2: &Self) -> Result<Self> {
        v1.ensure_dim(v2.dim())?;
        let entries =
            v1.0.iter()
                .zip(&v2.0)
                .map(|(a, b)| {
                    let left = if c1.is_zero() || a.is_zero() {
                        Rat::zero()
                    } else {
                        c1 * a
                    };
                    let right = if c2.is_zero() || b.is_zero() {
                        Rat::zero()
                    } else {
                        c2 * b
                    };
                    left + right
                })
                .collect();
        Ok(RationalVector(entries))
    }

    /// Index and value of the first nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, &Rat)> {
        self.0.iter().enumerate().find(|(_, e)| !e.is_zero())
    }

    /// The canonical representative of the line through this vector: divide by
    /// the first nonzero entry. Idempotent; errors on the zero vector.
    pub fn canonicalized(&self) -> Result<Self> {
        let (_, lead) = self.first_nonzero().ok_or(Error::ZeroVector)?;
        let inv = lead.clone().recip();
        Ok(self.scaled(&inv))
    }

    /// True iff the two vectors span the same line, tested through the
    /// vanishing of all 2x2 minors. Both inputs must be nonzero.
    pub fn is_proportional_to(&self, other: &Self) -> Result<bool> {
        self.ensure_dim(other.dim())?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(entries: &[i64]) -> RationalVector {
        RationalVector::from_i64(entries)
    }

    fn lv(entries: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(entries)
    }

    #[test]
    fn pairing_values() {
        assert_eq!(rv(&[0, 1]).pairing(&lv(&[1, 0])).unwrap(), Rat::zero());
        assert_eq!(rv(&[2, -1]).pairing(&lv(&[1, 2])).unwrap(), Rat::zero());
        assert_eq!(
            rv(&[1, -1]).pairing(&lv(&[0, 1])).unwrap(),
            Rat::from_integer(Int::from(-1))
        );
    }

    #[test]
    fn pairing_dimension_mismatch() {
        assert_eq!(
            rv(&[1, 2]).pairing(&lv(&[1])),
            Err(Error::DimensionMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn canonicalize_scales_by_first_nonzero() {
        assert_eq!(rv(&[2, -4]).canonicalized().unwrap(), rv(&[1, -2]));
        assert_eq!(rv(&[1, -2]).canonicalized().unwrap(), rv(&[1, -2]));
        assert_eq!(rv(&[0, -3]).canonicalized().unwrap(), rv(&[0, 1]));
        assert_eq!(rv(&[0, 0]).canonicalized(), Err(Error::ZeroVector));
    }

    #[test]
    fn proportionality() {
        assert!(rv(&[1, -1]).is_proportional_to(&rv(&[2, -2])).unwrap());
        assert!(!rv(&[1, -1]).is_proportional_to(&rv(&[0, 1])).unwrap());
        assert!(!rv(&[1, 0, 0]).is_proportional_to(&rv(&[1, 0, 1])).unwrap());
        assert_eq!(
            rv(&[0, 0]).is_proportional_to(&rv(&[1, 0])),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn weight_is_entry_sum() {
        assert_eq!(lv(&[-1, 2]).weight(), Int::from(1));
        assert_eq!(lv(&[0, 0, 0]).weight(), Int::zero());
    }

    #[test]
    fn display_is_tuple_style() {
        assert_eq!(lv(&[-1, 2]).to_string(), "(-1, 2)");
        assert_eq!(rv(&[1, -1]).to_string(), "(1, -1)");
    }
}
