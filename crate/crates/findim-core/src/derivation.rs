//! Homogeneous derivations of the Laurent polynomial ring and their calculus.
//!
//! Every homogeneous derivation of `K[x_1^(+-1), ..., x_n^(+-1)]` has the form
//!
//! ```text
//! D^c_alpha = x^c * sum_j alpha_j x_j d_j,    c in Z^n, alpha in Q^n \ {0},
//! ```
//!
//! and this module implements the exact calculus on such elements: the Lie
//! bracket
//!
//! ```text
//! [D^c_alpha, D^d_beta] = D^(c+d)_(<alpha,d> beta - <beta,c> alpha),
//! ```
//!
//! the action on monomials `D^c_alpha(x^u) = <alpha,u> x^(c+u)` (which serves
//! as an independent oracle for the bracket, via operator composition), the
//! classification into polynomial types, weights, and canonical
//! representatives of proportionality classes.
//!
//! Polynomial derivations come in two classes:
//!
//! * type I, `x^a d_i` with `a >= 0`, `a_i = 0` (locally nilpotent), which
//!   embeds as `D^(a - e_i)_(eps_i)`;
//! * type II, `x^p * sum_j beta_j x_j d_j` with `p >= 0` (not locally
//!   nilpotent), which is `D^p_beta` verbatim.
//!
//! Everything else moves individual monomials out of the polynomial ring and
//! is classified [`DerivationClass::LaurentOnly`].

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::vector::{Int, LatticeVector, Rat, RationalVector};

/// A scalar multiple of a single (Laurent) monomial `coefficient * x^exponents`.
///
/// The zero monomial is canonical: a zero coefficient forces zero exponents,
/// so derived equality treats all zero results alike.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    exponents: LatticeVector,
    coefficient: Rat,
}

impl Monomial {
    pub fn new(coefficient: Rat, exponents: LatticeVector) -> Self {
        if coefficient.is_zero() {
            Monomial::zero(exponents.dim())
        } else {
            Monomial {
                exponents,
                coefficient,
            }
        }
    }

    pub fn zero(dim: usize) -> Self {
        Monomial {
            exponents: LatticeVector::zeros(dim),
            coefficient: Rat::zero(),
        }
    }

    /// The monomial `x^exponents` with coefficient one.
    pub fn of_exponents(exponents: LatticeVector) -> Self {
        Monomial::new(Rat::one(), exponents)
    }

    pub fn dim(&self) -> usize {
        self.exponents.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn exponents(&self) -> &LatticeVector {
        &self.exponents
    }

    pub fn coefficient(&self) -> &Rat {
        &self.coefficient
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        if !self.coefficient.is_one() {
            pieces.push(self.coefficient.to_string());
        }
        for (k, e) in self.exponents.entries().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                pieces.push(format!("x{}", k + 1));
            } else {
                pieces.push(format!("x{}^{}", k + 1, e));
            }
        }
        if pieces.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", pieces.join("*"))
    }
}

/// A nonzero homogeneous derivation `D^c_alpha`.
///
/// The zero derivation is never stored; operations that may produce it return
/// an explicit `Option`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousDerivation {
    degree: LatticeVector,
    coeffs: RationalVector,
}

impl HomogeneousDerivation {
    /// Builds `D^degree_coeffs`; the coefficient vector must be nonzero and
    /// the lengths must agree.
    pub fn new(degree: LatticeVector, coeffs: RationalVector) -> Result<Self> {
        if degree.dim() != coeffs.dim() {
            return Err(Error::DimensionMismatch {
                left: degree.dim(),
                right: coeffs.dim(),
            });
        }
        if coeffs.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(HomogeneousDerivation { degree, coeffs })
    }

    /// The type I derivation `x^a d_var` (0-based `var`), embedded as
    /// `D^(a - e_var)_(eps_var)`. Requires `a >= 0` and `a_var = 0`.
    pub fn nabla(var: usize, a: &LatticeVector) -> Result<Self> {
        let n = a.dim();
        if var >= n {
            return Err(Error::IndexOutOfRange { index: var, dim: n });
        }
        if !a.is_nonnegative() {
            return Err(Error::NegativeExponent);
        }
        if !a.entry(var).is_zero() {
            return Err(Error::ExponentAtOwnVariable);
        }
        let degree = a.checked_sub(&LatticeVector::unit(n, var)?)?;
        HomogeneousDerivation::new(degree, RationalVector::unit(n, var)?)
    }

    /// The type II derivation `x^p * sum_j beta_j x_j d_j`. Requires `p >= 0`
    /// and nonzero `beta`.
    pub fn delta(p: &LatticeVector, beta: &RationalVector) -> Result<Self> {
        if !p.is_nonnegative() {
            return Err(Error::NegativeExponent);
        }
        HomogeneousDerivation::new(p.clone(), beta.clone())
    }

    pub fn dim(&self) -> usize {
        self.degree.dim()
    }

    pub fn degree(&self) -> &LatticeVector {
        &self.degree
    }

    pub fn coeffs(&self) -> &RationalVector {
        &self.coeffs
    }

    /// The weight: sum of the degree entries.
    pub fn weight(&self) -> Int {
        self.degree.weight()
    }

    /// The Lie bracket `[self, other]`. `None` encodes the zero derivation.
    pub fn bracket(&self, other: &Self) -> Result<Option<Self>> {
        let lhs = self.coeffs.pairing(&other.degree)?; // <alpha, d>
        let rhs = other.coeffs.pairing(&self.degree)?; // <beta, c>
        if lhs.is_zero() && rhs.is_zero() {
            // Both coefficient vectors enter only scaled by these pairings.
            return Ok(None);
        }
        let coeffs =
            RationalVector::linear_combination(&lhs, &other.coeffs, &(-rhs), &self.coeffs)?;
        if coeffs.is_zero() {
            return Ok(None);
        }
        let degree = self.degree.checked_add(&other.degree)?;
        Ok(Some(HomogeneousDerivation { degree, coeffs }))
    }

    /// Applies the derivation to a monomial:
    /// `D^c_alpha(t x^u) = t <alpha, u> x^(c+u)`.
    pub fn apply(&self, m: &Monomial) -> Result<Monomial> {
        if self.dim() != m.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: m.dim(),
            });
        }
        if m.is_zero() {
            return Ok(Monomial::zero(self.dim()));
        }
        let factor = self.coeffs.pairing(m.exponents())?;
        let exponents = self.degree.checked_add(m.exponents())?;
        Ok(Monomial::new(factor * m.coefficient(), exponents))
    }

    /// Scales the coefficient vector so its first nonzero entry is one.
    /// Idempotent; the degree is unchanged.
    pub fn canonicalize(&self) -> Self {
        let coeffs = self
            .coeffs
            .canonicalized()
            .expect("coefficient vector is nonzero by construction");
        HomogeneousDerivation {
            degree: self.degree.clone(),
            coeffs,
        }
    }

    /// Scalar multiple; `None` when the factor is zero.
    pub fn scaled(&self, factor: &Rat) -> Option<Self> {
        if factor.is_zero() {
            return None;
        }
        Some(HomogeneousDerivation {
            degree: self.degree.clone(),
            coeffs: self.coeffs.scaled(factor),
        })
    }

    /// Classifies the derivation. Total: every nonzero homogeneous derivation
    /// lands in exactly one of the three nonzero classes.
    pub fn classify(&self) -> DerivationClass {
        let negatives: Vec<usize> = self
            .degree
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_negative())
            .map(|(k, _)| k)
            .collect();
        if negatives.is_empty() {
            return DerivationClass::TypeII(TypeIIData {
                degree: self.degree.clone(),
                coeffs: self.coeffs.clone(),
            });
        }
        if negatives.len() == 1 {
            let i = negatives[0];
            let minus_one = -Int::one();
            let along_line = self
                .coeffs
                .entries()
                .iter()
                .enumerate()
                .all(|(j, c)| j == i || c.is_zero());
            if *self.degree.entry(i) == minus_one && along_line {
                let e_i =
                    LatticeVector::unit(self.dim(), i).expect("index comes from the degree vector");
                let a = self
                    .degree
                    .checked_add(&e_i)
                    .expect("dimensions agree by construction");
                return DerivationClass::TypeI(TypeIData {
                    var: i,
                    exponents: a,
                });
            }
        }
        DerivationClass::LaurentOnly
    }
}

impl fmt::Display for HomogeneousDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let mut first = true;
        for j in 0..n {
            let coeff = self.coeffs.entry(j);
            if coeff.is_zero() {
                continue;
            }
            let magnitude = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let e_j = LatticeVector::unit(n, j).expect("j < n");
            let exps = self
                .degree
                .checked_add(&e_j)
                .expect("dimensions agree by construction");
            let mut pieces = Vec::new();
            if !magnitude.is_one() {
                pieces.push(magnitude.to_string());
            }
            for (k, e) in exps.entries().iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if e.is_one() {
                    pieces.push(format!("x{}", k + 1));
                } else {
                    pieces.push(format!("x{}^{}", k + 1, e));
                }
            }
            pieces.push(format!("d{}", j + 1));
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}_{}", self.degree, self.coeffs)
    }
}

/// Classification data of a type I derivation `x^a d_var` (up to scale).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIData {
    /// 0-based index of the targeted variable.
    pub var: usize,
    /// The exponent vector `a`; `a >= 0` and `a_var = 0`.
    pub exponents: LatticeVector,
}

impl TypeIData {
    /// Weight `sum_j a_j - 1`.
    pub fn weight(&self) -> Int {
        self.exponents.weight() - Int::one()
    }

    pub fn to_derivation(&self) -> HomogeneousDerivation {
        HomogeneousDerivation::nabla(self.var, &self.exponents)
            .expect("classification data is valid by construction")
    }
}

/// Classification data of a type II derivation `x^p * sum_j beta_j x_j d_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIIData {
    /// The degree vector `p >= 0`.
    pub degree: LatticeVector,
    /// The nonzero coefficient vector `beta`.
    pub coeffs: RationalVector,
}

impl TypeIIData {
    /// Weight `sum_j p_j`.
    pub fn weight(&self) -> Int {
        self.degree.weight()
    }

    /// Weight-zero elements act diagonally and never enlarge a generated
    /// algebra beyond rescaling; deciders treat them as spectators.
    pub fn is_spectator(&self) -> bool {
        self.degree.is_zero()
    }

    pub fn to_derivation(&self) -> HomogeneousDerivation {
        HomogeneousDerivation::delta(&self.degree, &self.coeffs)
            .expect("classification data is valid by construction")
    }
}

/// The class of a homogeneous derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivationClass {
    /// Locally nilpotent polynomial derivation, proportional to `x^a d_i`.
    TypeI(TypeIData),
    /// Non-locally-nilpotent polynomial derivation `x^p sum beta_j x_j d_j`.
    TypeII(TypeIIData),
    /// Homogeneous on the Laurent ring but not a polynomial derivation.
    LaurentOnly,
    /// The zero derivation; never produced for stored generators.
    Zero,
}

impl DerivationClass {
    pub fn is_type1(&self) -> bool {
        matches!(self, DerivationClass::TypeI(_))
    }

    pub fn is_type2(&self) -> bool {
        matches!(self, DerivationClass::TypeII(_))
    }
}

/// Classifies a whole generating set as type I, failing on the first
/// generator of any other class.
pub fn classify_type1(gens: &[HomogeneousDerivation]) -> Result<Vec<TypeIData>> {
    gens.iter()
        .enumerate()
        .map(|(index, g)| match g.classify() {
            DerivationClass::TypeI(data) => Ok(data),
            _ => Err(Error::NotTypeI { index }),
        })
        .collect()
}

/// Classifies a whole generating set as type II, failing on the first
/// generator of any other class.
pub fn classify_type2(gens: &[HomogeneousDerivation]) -> Result<Vec<TypeIIData>> {
    gens.iter()
        .enumerate()
        .map(|(index, g)| match g.classify() {
            DerivationClass::TypeII(data) => Ok(data),
            _ => Err(Error::NotTypeII { index }),
        })
        .collect()
}
