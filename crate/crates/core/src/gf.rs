//! Arithmetic tables for small finite fields GF(p^k).
//!
//! The field is modeled as GF(p)\[x\] modulo the lexicographically smallest
//! monic irreducible polynomial of degree k, found by deterministic search
//! (coefficient vectors ordered as base-p integers, most significant digit
//! the highest-degree coefficient). Elements are encoded as integers in
//! 0..p^k by reading the coefficient vector as a base-p number.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
}

/// Precomputed addition/multiplication tables for one GF(p^k).
#[derive(Clone, Debug)]
pub struct Field {
    pub p: u64,
    pub k: u32,
    pub size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    /// Coefficients of the chosen modulus, lowest first, length k+1.
    pub modulus: Vec<u64>,
}

/// Splits q into (p, k) with q = p^k, p prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut n = q;
    let mut p = 0;
    for cand in 2..=q {
        if n.is_multiple_of(cand) {
            p = cand;
            break;
        }
    }
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    if n == 1 {
        Some((p, k))
    } else {
        None
    }
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

fn poly_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Remainder of a by the monic modulus m over GF(p).
fn poly_rem_mod_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    while r.last() == Some(&0) {
        r.pop();
    }
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            let idx = shift + i;
            let sub = (lead * mc) % p;
            r[idx] = (r[idx] + p - sub) % p;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn decode(mut v: u64, p: u64, k: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn encode(coeffs: &[u64], p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial-division irreducibility over GF(p): no monic divisor of degree
/// 1..=deg/2. Adequate for the tiny degrees used here.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // candidate monic divisors of degree d, coefficient vector as base-p int
        for low in 0..p.pow(d as u32) {
            let mut cand = decode(low, p, d as u32);
            cand.resize(d, 0);
            cand.push(1);
            if poly_rem_mod_p(poly, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree k over GF(p).
pub fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x
    }
    for low in 0..p.pow(k) {
        let mut cand = decode(low, p, k);
        cand.resize(k as usize, 0);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl Field {
    pub fn new(q: u64) -> Result<Field, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        let size = q as usize;
        let modulus = smallest_irreducible(p, k);
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        for a in 0..q {
            let pa = decode(a, p, k);
            for b in 0..q {
                let pb = decode(b, p, k);
                let mut s = vec![0u64; k as usize];
                for (i, slot) in s.iter_mut().enumerate() {
                    let x = pa.get(i).copied().unwrap_or(0);
                    let y = pb.get(i).copied().unwrap_or(0);
                    *slot = (x + y) % p;
                }
                add[(a * q + b) as usize] = encode(&s, p) as u16;
                let prod = poly_rem_mod_p(&poly_mul_mod_p(&pa, &pb, p), &modulus, p);
                mul[(a * q + b) as usize] = encode(&prod, p) as u16;
            }
        }
        Ok(Field {
            p,
            k,
            size,
            add,
            mul,
            modulus,
        })
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.size).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (0..self.size).find(|&b| self.mul(a, b) == 1)
    }

    /// Frobenius map x -> x^p.
    pub fn frobenius(&self, a: usize) -> usize {
        let mut acc = a;
        for _ in 1..self.p {
            acc = self.mul(acc, a);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_splitting() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(is_prime(2) && is_prime(13) && !is_prime(9));
    }

    #[test]
    fn smallest_moduli() {
        // GF(4): x^2 + x + 1; GF(8): x^3 + x + 1; GF(9): x^2 + 1
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn gf4_field_axioms() {
        let f = Field::new(4).unwrap();
        for a in 0..4 {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, a), 0); // characteristic 2
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..4 {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..4 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn gf7_matches_mod_arithmetic() {
        let f = Field::new(7).unwrap();
        for a in 0..7usize {
            for b in 0..7usize {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.mul(a, b), (a * b) % 7);
            }
        }
    }

    #[test]
    fn frobenius_is_squaring_in_char2() {
        let f = Field::new(4).unwrap();
        for a in 0..4 {
            assert_eq!(f.frobenius(a), f.mul(a, a));
        }
        // Frobenius fixes exactly the prime subfield elements of GF(4): 0 and 1
        assert_eq!((0..4).filter(|&a| f.frobenius(a) == a).count(), 2);
    }
}
