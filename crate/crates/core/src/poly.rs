//! Univariate polynomials with exact integer coefficients.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial has an empty coefficient vector. The serialized form is
//! the coefficient list, lowest-first, decimal integers, comma-separated
//! (e.g. `x^2 - 8x + 3` is `"3,-8,1"`).

use crate::scalar::ExactScalar;
use num_traits::{One, Zero};
use std::fmt;

/// Polynomial over an exact scalar, lowest-degree coefficient first.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: ExactScalar> Poly<S> {
    /// Builds a polynomial from lowest-first coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![S::zero(), S::one()])
    }

    /// x - r, the linear factor with root r.
    pub fn linear(root: i64) -> Self {
        Poly::new(vec![S::from(-root), S::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation at an integer point.
    pub fn eval_i64(&self, x: i64) -> S {
        let xs = S::from(x);
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc *= &xs;
            acc += c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b.clone());
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Product of factors `(poly, exponent)`; the building block for the
    /// factored characteristic polynomials quoted in test expectations.
    pub fn from_factors(factors: &[(Poly<S>, u32)]) -> Self {
        factors
            .iter()
            .fold(Poly::one(), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }

    /// Exact synthetic division by (x - root). Returns the quotient only if
    /// the remainder is zero, i.e. `root` really is a root.
    pub fn div_exact_by_root(&self, root: i64) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let r = S::from(root);
        let n = self.coeffs.len();
        let mut quot = vec![S::zero(); n - 1];
        let mut carry = S::zero();
        for k in (0..n).rev() {
            let b = self.coeffs[k].clone() + carry.clone() * r.clone();
            if k == 0 {
                if !b.is_zero() {
                    return None;
                }
            } else {
                quot[k - 1] = b.clone();
                carry = b;
            }
        }
        Some(Poly::new(quot))
    }

    /// Multiplicity of `root` as a root, removing each factor exactly.
    pub fn root_multiplicity(&self, root: i64) -> (usize, Self) {
        let mut mult = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact_by_root(root) {
            mult += 1;
            cur = q;
        }
        (mult, cur)
    }

    /// Spec serialization: lowest-first decimal coefficients, comma-separated.
    /// The zero polynomial serializes as "0".
    pub fn coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the `coeff_string` form.
    pub fn parse_coeff_string(s: &str) -> Option<Self>
    where
        S: std::str::FromStr,
    {
        let mut out = Vec::new();
        for tok in s.split(',') {
            out.push(tok.trim().parse::<S>().ok()?);
        }
        Some(Poly::new(out))
    }
}

impl<S: ExactScalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coeff_string())
    }
}

// Reports carry polynomials in the comma-separated coefficient form.
impl serde::Serialize for Poly<num_bigint::BigInt> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.coeff_string())
    }
}

impl<'de> serde::Deserialize<'de> for Poly<num_bigint::BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Poly::parse_coeff_string(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("bad polynomial `{s}`")))
    }
}
