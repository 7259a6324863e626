//! Exact Laurent polynomials in `v` with integer coefficients.
//!
//! These are the scalars of the deformed Fock space. Values are kept in a
//! canonical sparse form (no stored zero coefficient), coefficients are
//! arbitrary-precision integers, and every operation is exact. The bar
//! involution `v -> v^-1`, balanced quantum integers and their factorials
//! live here as well.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::LaurentError;

/// Sparse map from exponent to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (exp, c) in terms {
            p.add_term(exp, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiply by `c * v^shift`.
    pub fn scalar_shift(&self, c: &BigInt, shift: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, coeff)| (e + shift, coeff * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.scalar_shift(c, 0)
    }

    pub fn mul_pow_v(&self, shift: i64) -> Self {
        self.scalar_shift(&BigInt::one(), shift)
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&e, c)| self.coeffs.get(&-e) == Some(c))
    }

    /// True iff the polynomial lies in `v Z[v]` (all exponents >= 1).
    pub fn in_positive_v_span(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 1)
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division; errors unless the quotient exists over `Z[v,v^-1]`.
    pub fn checked_div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mut remainder = self.clone();
        let mut quotient = LaurentPoly::zero();
        let div_top = divisor.max_exp().expect("nonzero divisor");
        let div_lead = divisor.coeff(div_top);
        while !remainder.is_zero() {
            let rem_top = remainder.max_exp().expect("nonzero remainder");
            let rem_lead = remainder.coeff(rem_top);
            let q = &rem_lead / &div_lead;
            if !(&rem_lead - &q * &div_lead).is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            let shift = rem_top - div_top;
            let term = LaurentPoly::monomial(shift, q);
            remainder -= &(divisor * &term);
            quotient += &term;
            // Degrees must strictly drop, or the division cannot terminate.
            if remainder
                .max_exp()
                .is_some_and(|e| e >= rem_top)
            {
                return Err(LaurentError::InexactDivision);
            }
        }
        Ok(quotient)
    }
}

/// Balanced quantum integer `[n] = (v^n - v^-n) / (v - v^-1)`, so
/// `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}` and `[-n] = -[n]`.
pub fn quantum_integer(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -&quantum_integer(-n);
    }
    LaurentPoly::from_terms((0..n).map(|j| (n - 1 - 2 * j, BigInt::one())))
}

/// Quantum factorial `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 2..=n as i64 {
        acc = &acc * &quantum_integer(k);
    }
    acc
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in rhs.coeffs.iter() {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in rhs.coeffs.iter() {
            self.add_term(e, -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in self.coeffs.iter() {
            for (&eb, cb) in rhs.coeffs.iter() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `v^-1 + 2 + v`; stable formatting used by
    /// every emitter.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exp, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = magnitude.is_one();
            match (exp, coeff_is_one) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{magnitude}v")?,
                (e, true) => write!(f, "v^{e}")?,
                (e, false) => write!(f, "{magnitude}v^{e}")?,
            }
        }
        Ok(())
    }
}

// Serialized as ascending (exponent, decimal coefficient) pairs: exact,
// deterministic, and independent of the display format.
impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self.terms().map(|(e, c)| (e, c.to_string())).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, String)>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            let coeff: BigInt = c
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad integer {c:?}")))?;
            p.add_term(e, coeff);
        }
        Ok(p)
    }
}
