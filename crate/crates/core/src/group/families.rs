//! Concrete coordinate models for every group family: semidirect-product
//! coordinates for the dihedral-like families, matrix coordinates over
//! GF(q) for the linear and Hanaki groups, permutation words for S_n and
//! A_n. Presentation relations are asserted after construction.

use super::{ElementSet, FiniteGroup, GroupError};
use crate::gf::{is_prime, prime_power, Field};

/// Names a group family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyDescriptor {
    /// Z_n
    Cyclic(u64),
    /// D_{2m}, m >= 3
    Dihedral(u64),
    /// Q_{4n}, n >= 2
    GeneralizedQuaternion(u64),
    /// QD_{2^n}, n >= 4
    Quasidihedral(u64),
    /// M_{2mn} = <a,b : a^m = b^{2n} = 1, bab^{-1} = a^{-1}>, m > 2, n >= 1
    Metacyclic(u64, u64),
    /// Non-abelian group of order pq, p | q-1
    FrobeniusPQ(u64, u64),
    /// The Frobenius group of order 20 (Suzuki group Sz(2))
    Sz20,
    Symmetric(u64),
    Alternating(u64),
    GL2(u64),
    SL2(u64),
    PSL2(u64),
    /// Hanaki group A(n, theta) over GF(2^n), n >= 2
    HanakiTheta(u64),
    /// Hanaki group A(n, p) over GF(p^n)
    HanakiP(u64, u64),
    /// Non-abelian group of order p^3 and exponent p^2:
    /// <a,b : a^{p^2} = b^p = 1, bab^{-1} = a^{1+p}>
    ModP3(u64),
    /// Modular group of order 16: <a,b : a^8 = b^2 = 1, bab = a^5>
    M16,
    /// <a,b : a^4 = b^4 = 1, bab^{-1} = a^{-1}>
    Z4rtimesZ4,
    /// Central product (D_8 x Z_4) / <(a^2, c^2)>
    D8starZ4,
    /// SG(16,3) = <a,b : a^4 = b^4 = 1, ab = b^{-1}a^{-1}, ab^{-1} = ba^{-1}>
    SG16_3,
    Product(Box<FamilyDescriptor>, Box<FamilyDescriptor>),
}

impl FamilyDescriptor {
    pub fn product(a: FamilyDescriptor, b: FamilyDescriptor) -> FamilyDescriptor {
        FamilyDescriptor::Product(Box::new(a), Box::new(b))
    }

    /// Descriptor equality up to the known structural identifications:
    /// product factor order, M_{2m,1} = D_{2m}, PSL(2,4) = A_5, PSL(2,2) = S_3.
    pub fn matches(&self, other: &FamilyDescriptor) -> bool {
        use FamilyDescriptor::*;
        if self.canonical_key() == other.canonical_key() {
            return true;
        }
        if let (Product(a1, b1), Product(a2, b2)) = (self, other) {
            return (a1.matches(a2) && b1.matches(b2)) || (a1.matches(b2) && b1.matches(a2));
        }
        false
    }

    fn canonical_key(&self) -> FamilyDescriptor {
        use FamilyDescriptor::*;
        match self {
            Metacyclic(m, 1) => Dihedral(*m),
            PSL2(4) | Alternating(5) => PSL2(4),
            PSL2(2) | Symmetric(3) => Dihedral(3),
            PSL2(3) | Alternating(4) => Alternating(4),
            Product(a, b) => FamilyDescriptor::product(a.canonical_key(), b.canonical_key()),
            other => other.clone(),
        }
    }
}

fn domain_err(family: &FamilyDescriptor, constraint: impl Into<String>) -> GroupError {
    GroupError::ParamDomain {
        family: family.to_string(),
        constraint: constraint.into(),
    }
}

fn relation(ok: bool) -> Result<(), GroupError> {
    if ok {
        Ok(())
    } else {
        Err(GroupError::Invalid("presentation relation"))
    }
}

fn word_label(letters: &[(&str, u64)]) -> String {
    let mut out = String::new();
    for &(sym, e) in letters {
        match e {
            0 => {}
            1 => out.push_str(sym),
            _ => out.push_str(&format!("{sym}^{e}")),
        }
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Builds the concrete model for a family descriptor.
pub fn build_group(desc: &FamilyDescriptor) -> Result<FiniteGroup, GroupError> {
    use FamilyDescriptor::*;
    match desc {
        Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(domain_err(desc, "n >= 1"));
            }
            FiniteGroup::from_elements(
                (0..n).collect(),
                |a: &u64, b: &u64| (a + b) % n,
                Some(|a: &u64| word_label(&[("g", *a)])),
                Some(desc.clone()),
            )
        }
        Dihedral(m) => {
            let m = *m;
            if m < 3 {
                return Err(domain_err(desc, "m >= 3 (order 2m >= 6)"));
            }
            let elems: Vec<(u64, u64)> = (0..2).flat_map(|e| (0..m).map(move |i| (i, e))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, e): &(u64, u64), &(j, f)| {
                    if e == 0 {
                        ((i + j) % m, f)
                    } else {
                        ((i + m - j % m) % m, (e + f) % 2)
                    }
                },
                Some(|&(i, e): &(u64, u64)| word_label(&[("a", i), ("b", e)])),
                Some(desc.clone()),
            )?;
            // a = index 1, b = index m
            let (a, b) = (1, m as usize);
            relation(g.power(a, m) == g.identity())?;
            relation(g.power(b, 2) == g.identity())?;
            relation(g.mul(g.mul(b, a), g.inv(b)) == g.inv(a))?;
            Ok(g)
        }
        GeneralizedQuaternion(n) => {
            let n = *n;
            if n < 2 {
                return Err(domain_err(desc, "n >= 2 (order 4n >= 8)"));
            }
            let two_n = 2 * n;
            let elems: Vec<(u64, u64)> = (0..2)
                .flat_map(|e| (0..two_n).map(move |i| (i, e)))
                .collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, e): &(u64, u64), &(j, f)| {
                    if e == 0 {
                        ((i + j) % two_n, f)
                    } else {
                        let base = (i + two_n - j % two_n) % two_n;
                        if f == 0 {
                            (base, 1)
                        } else {
                            ((base + n) % two_n, 0)
                        }
                    }
                },
                Some(|&(i, e): &(u64, u64)| word_label(&[("y", i), ("x", e)])),
                Some(desc.clone()),
            )?;
            let (y, x) = (1, two_n as usize);
            relation(g.power(y, two_n) == g.identity())?;
            relation(g.power(x, 2) == g.power(y, n))?;
            relation(g.mul(g.mul(x, y), g.inv(x)) == g.inv(y))?;
            Ok(g)
        }
        Quasidihedral(n) => {
            let n = *n;
            if n < 4 {
                return Err(domain_err(desc, "n >= 4 (order 2^n >= 16)"));
            }
            let half = 1u64 << (n - 1);
            let r = (1u64 << (n - 2)) - 1;
            let elems: Vec<(u64, u64)> = (0..2)
                .flat_map(|e| (0..half).map(move |i| (i, e)))
                .collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, e): &(u64, u64), &(j, f)| {
                    if e == 0 {
                        ((i + j) % half, f)
                    } else {
                        ((i + r * j) % half, (e + f) % 2)
                    }
                },
                Some(|&(i, e): &(u64, u64)| word_label(&[("a", i), ("b", e)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, half as usize);
            relation(g.power(a, half) == g.identity())?;
            relation(g.power(b, 2) == g.identity())?;
            relation(g.mul(g.mul(b, a), g.inv(b)) == g.power(a, r))?;
            Ok(g)
        }
        Metacyclic(m, n) => {
            let (m, n) = (*m, *n);
            if m <= 2 {
                return Err(domain_err(desc, "m > 2"));
            }
            if n == 0 {
                return Err(domain_err(desc, "n >= 1"));
            }
            let two_n = 2 * n;
            let elems: Vec<(u64, u64)> = (0..two_n)
                .flat_map(|j| (0..m).map(move |i| (i, j)))
                .collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, j): &(u64, u64), &(k, l)| {
                    let ik = if j % 2 == 0 {
                        (i + k) % m
                    } else {
                        (i + m - k % m) % m
                    };
                    (ik, (j + l) % two_n)
                },
                Some(|&(i, j): &(u64, u64)| word_label(&[("a", i), ("b", j)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, m as usize);
            relation(g.power(a, m) == g.identity())?;
            relation(g.power(b, two_n) == g.identity())?;
            relation(g.mul(g.mul(b, a), g.inv(b)) == g.inv(a))?;
            Ok(g)
        }
        FrobeniusPQ(p, q) => {
            let (p, q) = (*p, *q);
            if !is_prime(p) || !is_prime(q) {
                return Err(domain_err(desc, "p and q prime"));
            }
            if (q - 1) % p != 0 {
                return Err(domain_err(
                    desc,
                    format!("p | q-1 ({p} does not divide {})", q - 1),
                ));
            }
            // smallest primitive p-th root of unity mod q
            let r = (2..q)
                .find(|&r| mod_pow(r, p, q) == 1)
                .expect("a primitive p-th root exists when p | q-1");
            let powers: Vec<u64> = (0..p).map(|e| mod_pow(r, e, q)).collect();
            let elems: Vec<(u64, u64)> = (0..p).flat_map(|y| (0..q).map(move |x| (x, y))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(x1, y1): &(u64, u64), &(x2, y2)| {
                    ((x1 + powers[y1 as usize] * x2) % q, (y1 + y2) % p)
                },
                Some(|&(x, y): &(u64, u64)| word_label(&[("a", x), ("b", y)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, q as usize);
            relation(g.power(a, q) == g.identity())?;
            relation(g.power(b, p) == g.identity())?;
            relation(g.mul(g.mul(b, a), g.inv(b)) == g.power(a, r))?;
            Ok(g)
        }
        Sz20 => {
            // <a, b : a^5 = b^4 = 1, b^{-1}ab = a^2>; conjugation by b sends a to a^3
            let elems: Vec<(u64, u64)> = (0..4).flat_map(|j| (0..5).map(move |i| (i, j))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, j): &(u64, u64), &(k, l)| ((i + k * mod_pow(3, j, 5)) % 5, (j + l) % 4),
                Some(|&(i, j): &(u64, u64)| word_label(&[("a", i), ("b", j)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, 5);
            relation(g.power(a, 5) == g.identity())?;
            relation(g.power(b, 4) == g.identity())?;
            relation(g.mul(g.mul(g.inv(b), a), b) == g.power(a, 2))?;
            Ok(g)
        }
        Symmetric(n) | Alternating(n) => {
            let n = *n;
            if n == 0 {
                return Err(domain_err(desc, "n >= 1"));
            }
            if n > 8 {
                return Err(domain_err(desc, "n <= 8 (order cap)"));
            }
            let alternating = matches!(desc, Alternating(_));
            let mut perms = all_permutations(n as usize);
            if alternating {
                perms.retain(|p| permutation_parity(p) == 0);
            }
            perms.sort();
            FiniteGroup::from_elements(
                perms,
                |a: &Vec<u8>, b: &Vec<u8>| {
                    // composition: (a*b)(x) = a(b(x))
                    b.iter().map(|&x| a[x as usize]).collect::<Vec<u8>>()
                },
                Some(|p: &Vec<u8>| cycle_notation(p)),
                Some(desc.clone()),
            )
        }
        GL2(q) | SL2(q) => {
            let q = *q;
            let (_, _) = prime_power(q).ok_or_else(|| domain_err(desc, "q a prime power"))?;
            let field = Field::new(q).map_err(|_| domain_err(desc, "q a prime power"))?;
            let qs = q as usize;
            let special = matches!(desc, SL2(_));
            let mut elems: Vec<[usize; 4]> = Vec::new();
            for a in 0..qs {
                for b in 0..qs {
                    for c in 0..qs {
                        for d in 0..qs {
                            let det = field.sub(field.mul(a, d), field.mul(b, c));
                            if (special && det == 1) || (!special && det != 0) {
                                elems.push([a, b, c, d]);
                            }
                        }
                    }
                }
            }
            let expected = if special {
                q * (q * q - 1)
            } else {
                (q * q - 1) * (q * q - q)
            };
            if elems.len() as u64 != expected {
                return Err(GroupError::Invalid("linear group order"));
            }
            let f = field.clone();
            FiniteGroup::from_elements(
                elems,
                move |x: &[usize; 4], y: &[usize; 4]| {
                    [
                        f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
                        f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
                        f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
                        f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3])),
                    ]
                },
                Some(|m: &[usize; 4]| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])),
                Some(desc.clone()),
            )
        }
        PSL2(q) => {
            // SL(2,q) modulo its center {I, -I}
            let sl = build_group(&SL2(*q))?;
            let center = sl.center();
            let g = sl.quotient_by_normal(&center)?;
            let expected = if *q % 2 == 0 {
                *q * (*q * *q - 1)
            } else {
                *q * (*q * *q - 1) / 2
            };
            if g.order() as u64 != expected {
                return Err(GroupError::Invalid("PSL order"));
            }
            Ok(g.with_family(desc.clone()))
        }
        HanakiTheta(n) => {
            let n = *n;
            if n < 2 {
                return Err(domain_err(desc, "n >= 2"));
            }
            let q = 1u64 << n;
            if q * q > super::MAX_GROUP_ORDER as u64 {
                return Err(GroupError::TooLarge((q * q) as usize));
            }
            let field = Field::new(q).map_err(|_| domain_err(desc, "2^n a prime power"))?;
            let qs = q as usize;
            let elems: Vec<(usize, usize)> =
                (0..qs).flat_map(|a| (0..qs).map(move |b| (a, b))).collect();
            let f = field;
            FiniteGroup::from_elements(
                elems,
                move |&(a, b): &(usize, usize), &(a2, b2)| {
                    // U(a,b)U(a',b') = U(a+a', b+b'+a'*theta(a)), theta(x) = x^2
                    (f.add(a, a2), f.add(f.add(b, b2), f.mul(a2, f.mul(a, a))))
                },
                Some(|&(a, b): &(usize, usize)| format!("U({a},{b})")),
                Some(desc.clone()),
            )
        }
        HanakiP(n, p) => {
            let (n, p) = (*n, *p);
            if n == 0 {
                return Err(domain_err(desc, "n >= 1"));
            }
            if !is_prime(p) {
                return Err(domain_err(desc, "p prime"));
            }
            let q = p.pow(n as u32);
            if q.pow(3) > super::MAX_GROUP_ORDER as u64 {
                return Err(GroupError::TooLarge(q.pow(3) as usize));
            }
            let field = Field::new(q).map_err(|_| domain_err(desc, "p^n a prime power"))?;
            let qs = q as usize;
            let elems: Vec<(usize, usize, usize)> = (0..qs)
                .flat_map(|a| (0..qs).flat_map(move |b| (0..qs).map(move |c| (a, b, c))))
                .collect();
            let f = field;
            FiniteGroup::from_elements(
                elems,
                move |&(a, b, c): &(usize, usize, usize), &(a2, b2, c2)| {
                    // V(a,b,c)V(a',b',c') = V(a+a', b+b'+ca', c+c')
                    (
                        f.add(a, a2),
                        f.add(f.add(b, b2), f.mul(c, a2)),
                        f.add(c, c2),
                    )
                },
                Some(|&(a, b, c): &(usize, usize, usize)| format!("V({a},{b},{c})")),
                Some(desc.clone()),
            )
        }
        ModP3(p) => {
            let p = *p;
            if !is_prime(p) {
                return Err(domain_err(desc, "p prime"));
            }
            let p2 = p * p;
            if p2 * p > super::MAX_GROUP_ORDER as u64 {
                return Err(GroupError::TooLarge((p2 * p) as usize));
            }
            let elems: Vec<(u64, u64)> =
                (0..p).flat_map(|j| (0..p2).map(move |i| (i, j))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i1, j1): &(u64, u64), &(i2, j2)| {
                    ((i1 + i2 * mod_pow(1 + p, j1, p2)) % p2, (j1 + j2) % p)
                },
                Some(|&(i, j): &(u64, u64)| word_label(&[("a", i), ("b", j)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, p2 as usize);
            relation(g.power(a, p2) == g.identity())?;
            relation(g.power(b, p) == g.identity())?;
            relation(g.mul(g.mul(b, a), g.inv(b)) == g.power(a, 1 + p))?;
            Ok(g)
        }
        M16 => {
            let elems: Vec<(u64, u64)> = (0..2).flat_map(|e| (0..8).map(move |i| (i, e))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, e): &(u64, u64), &(j, f)| {
                    if e == 0 {
                        ((i + j) % 8, f)
                    } else {
                        ((i + 5 * j) % 8, (e + f) % 2)
                    }
                },
                Some(|&(i, e): &(u64, u64)| word_label(&[("a", i), ("b", e)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, 8);
            relation(g.power(a, 8) == g.identity())?;
            relation(g.power(b, 2) == g.identity())?;
            relation(g.mul(g.mul(b, a), b) == g.power(a, 5))?;
            Ok(g)
        }
        Z4rtimesZ4 => {
            let elems: Vec<(u64, u64)> = (0..4).flat_map(|j| (0..4).map(move |i| (i, j))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(i, j): &(u64, u64), &(k, l)| {
                    let ik = if j % 2 == 0 {
                        (i + k) % 4
                    } else {
                        (i + 4 - k) % 4
                    };
                    (ik, (j + l) % 4)
                },
                Some(|&(i, j): &(u64, u64)| word_label(&[("a", i), ("b", j)])),
                Some(desc.clone()),
            )?;
            let (a, b) = (1, 4);
            relation(g.power(a, 4) == g.identity())?;
            relation(g.power(b, 4) == g.identity())?;
            relation(g.mul(g.mul(b, a), g.inv(b)) == g.inv(a))?;
            Ok(g)
        }
        D8starZ4 => {
            // (D_8 x Z_4) / <(r^2, c^2)> where r^2 generates Z(D_8)
            let d8 = build_group(&Dihedral(4))?;
            let z4 = build_group(&Cyclic(4))?;
            let prod = direct_product(&d8, &z4)?;
            // in product coordinates (i, j) -> i*4 + j: r^2 is d8 index 2,
            // c^2 is z4 index 2, so (r^2, c^2) = (r^2, e) * (e, c^2)
            let r_sq = 2 * z4.order();
            let c_sq = 2;
            let glued = prod.mul(r_sq, c_sq);
            let mut normal = ElementSet::empty(prod.order());
            normal.insert(prod.identity());
            normal.insert(glued);
            relation(prod.mul(glued, glued) == prod.identity())?;
            // the listed presentation a^4 = b^2 = c^2 = 1, ab = ba,
            // ac = ca, bc = a^2cb holds in the quotient for a = (e, c),
            // b = (s, e), c = (rs, e); check it in the product modulo the
            // glued subgroup
            {
                let eq_mod = |x: usize, y: usize| {
                    let diff = prod.mul(x, prod.inv(y));
                    diff == prod.identity() || diff == glued
                };
                let gen_a = 1; // (e, c)
                let gen_b = 4 * z4.order(); // (s, e), s at dihedral index 4
                let gen_c = 5 * z4.order(); // (rs, e)
                relation(eq_mod(prod.power(gen_a, 4), prod.identity()))?;
                relation(eq_mod(prod.power(gen_b, 2), prod.identity()))?;
                relation(eq_mod(prod.power(gen_c, 2), prod.identity()))?;
                relation(eq_mod(prod.mul(gen_a, gen_b), prod.mul(gen_b, gen_a)))?;
                relation(eq_mod(prod.mul(gen_a, gen_c), prod.mul(gen_c, gen_a)))?;
                let a_sq_cb =
                    prod.mul(prod.power(gen_a, 2), prod.mul(gen_c, gen_b));
                relation(eq_mod(prod.mul(gen_b, gen_c), a_sq_cb))?;
            }
            let g = prod.quotient_by_normal(&normal)?;
            relation(g.order() == 16)?;
            relation(g.center().len() == 4)?;
            Ok(g.with_family(desc.clone()))
        }
        SG16_3 => {
            // pairs (j, i) standing for b^j a^i
            let elems: Vec<(u64, u64)> = (0..4).flat_map(|j| (0..4).map(move |i| (j, i))).collect();
            let g = FiniteGroup::from_elements(
                elems,
                |&(j1, i1): &(u64, u64), &(j2, i2)| {
                    let j = if i1 % 2 == 0 {
                        (j1 + j2) % 4
                    } else {
                        (j1 + 4 - j2) % 4
                    };
                    let i = (i1 + i2 + 2 * (i1 % 2) * (j2 % 2)) % 4;
                    (j, i)
                },
                Some(|&(j, i): &(u64, u64)| word_label(&[("b", j), ("a", i)])),
                Some(desc.clone()),
            )?;
            let (b, a) = (4, 1);
            relation(g.power(a, 4) == g.identity())?;
            relation(g.power(b, 4) == g.identity())?;
            // ab = b^{-1}a^{-1} and ab^{-1} = ba^{-1}
            relation(g.mul(a, b) == g.mul(g.inv(b), g.inv(a)))?;
            relation(g.mul(a, g.inv(b)) == g.mul(b, g.inv(a)))?;
            relation(g.center().len() == 4)?;
            Ok(g)
        }
        Product(d1, d2) => {
            let g1 = build_group(d1)?;
            let g2 = build_group(d2)?;
            direct_product(&g1, &g2)
        }
    }
}

/// Direct product with componentwise multiplication; element (i, j) of
/// g x h is indexed i*|h| + j.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (ng, nh) = (g.order(), h.order());
    let order = ng * nh;
    if order > super::MAX_GROUP_ORDER {
        return Err(GroupError::TooLarge(order));
    }
    let mut table = vec![0u16; order * order];
    for i1 in 0..ng {
        for j1 in 0..nh {
            let row = i1 * nh + j1;
            for i2 in 0..ng {
                let gi = g.mul(i1, i2);
                for j2 in 0..nh {
                    table[row * order + i2 * nh + j2] = (gi * nh + h.mul(j1, j2)) as u16;
                }
            }
        }
    }
    let labels: Vec<String> = (0..ng)
        .flat_map(|i| (0..nh).map(move |j| format!("({},{})", g.label(i), h.label(j))))
        .collect();
    let family = match (g.family(), h.family()) {
        (Some(a), Some(b)) => Some(FamilyDescriptor::product(a.clone(), b.clone())),
        _ => None,
    };
    FiniteGroup::from_table(table, order, Some(labels), family)
}

impl FiniteGroup {
    pub(crate) fn with_family(mut self, family: FamilyDescriptor) -> FiniteGroup {
        self.family = Some(family);
        self
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// 0 for even permutations, 1 for odd.
fn permutation_parity(p: &[u8]) -> u8 {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut transpositions = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = p[cur] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    (transpositions % 2) as u8
}

/// One-based cycle notation, e.g. "(1 2)(3 4)"; identity is "()".
fn cycle_notation(p: &[u8]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(cur + 1);
            cur = p[cur] as usize;
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
