//! Factorization of `x^m - 1` over GF(q) through q-cyclotomic cosets.
//!
//! Each coset `C` of exponents mod m gives the irreducible factor
//! `prod_{i in C} (x - xi^i)` where `xi` is a primitive m-th root of unity in
//! GF(q^e), `e = ord_m(q)`. The splitting field is GF(q)[y]/(F(y)) for the
//! first irreducible F of degree e in enumeration order. A coset equal to its
//! negation yields a self-reciprocal factor; `C` and `-C` yield a reciprocal
//! pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Field;

use super::{check_coprime, prime_factors, Poly};

/// Largest supported `q^e` for the splitting field.
const MAX_SPLITTING_ORDER: u128 = 1 << 62;

/// Irreducible factors of `x^m - 1`, split into self-reciprocal ones and
/// reciprocal pairs `(h, h*)` with `h < h*` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorClassification {
    pub m: usize,
    pub field: Field,
    pub self_reciprocal: Vec<Poly>,
    pub reciprocal_pairs: Vec<(Poly, Poly)>,
}

#[derive(Serialize)]
struct FactorReport {
    q: String,
    m: usize,
    self_reciprocal: Vec<String>,
    reciprocal_pairs: Vec<[String; 2]>,
}

impl FactorClassification {
    /// All factors, self-reciprocal first, pairs flattened.
    pub fn all_factors(&self) -> Vec<Poly> {
        let mut v = self.self_reciprocal.clone();
        for (a, b) in &self.reciprocal_pairs {
            v.push(a.clone());
            v.push(b.clone());
        }
        v
    }

    pub fn product(&self) -> Poly {
        self.all_factors()
            .iter()
            .fold(Poly::one(&self.field), |acc, f| &acc * f)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let r = FactorReport {
            q: self.field.to_string(),
            m: self.m,
            self_reciprocal: self.self_reciprocal.iter().map(|p| p.to_string()).collect(),
            reciprocal_pairs: self
                .reciprocal_pairs
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        };
        serde_json::to_value(r).expect("serializable")
    }

    /// `(x+1)(x^2+x+1)` style product, factors in canonical order.
    pub fn product_string(&self) -> String {
        let mut all = self.all_factors();
        all.sort_by(|a, b| a.canonical_cmp(b));
        all.iter().map(|f| format!("({f})")).collect()
    }
}

/// GF(q^e) as polynomials over GF(q) modulo an irreducible of degree e.
struct Extension {
    modulus: Poly,
}

impl Extension {
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        (a * b).rem(&self.modulus).expect("nonzero modulus")
    }

    fn pow(&self, a: &Poly, e: u128) -> Poly {
        a.pow_mod(e, &self.modulus).expect("nonzero modulus")
    }

    /// Element with index `idx` in base-q digit enumeration.
    fn element(&self, field: &Field, mut idx: u128) -> Poly {
        let q = field.q() as u128;
        let e = self.modulus.degree().unwrap();
        let mut v = Vec::with_capacity(e);
        for _ in 0..e {
            v.push((idx % q) as u16);
            idx /= q;
        }
        Poly::new(field, v)
    }
}

fn multiplicative_order(q: u64, m: u64) -> usize {
    if m == 1 {
        return 1;
    }
    let mut e = 1;
    let mut t = q % m;
    while t != 1 {
        t = t * (q % m) % m;
        e += 1;
    }
    e
}

fn first_irreducible(field: &Field, e: usize) -> Poly {
    let q = field.q() as u128;
    let count = q.pow(e as u32);
    for idx in 0..count {
        let mut v = Vec::with_capacity(e + 1);
        let mut t = idx;
        for _ in 0..e {
            v.push((t % q) as u16);
            t /= q;
        }
        v.push(1);
        let f = Poly::new(field, v);
        if f.is_irreducible() {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// q-cyclotomic cosets mod m, each starting at its least member, in
/// increasing order of that member.
pub fn cyclotomic_cosets(q: u64, m: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = ((i as u64 * q) % m as u64) as usize;
        }
        out.push(coset);
    }
    out
}

pub fn factor_xm_minus_1(m: usize, field: &Field) -> Result<FactorClassification> {
    check_coprime(m, field)?;
    let q = field.q() as u64;
    let e = multiplicative_order(q, m as u64);
    let order = (q as u128)
        .checked_pow(e as u32)
        .filter(|&o| o <= MAX_SPLITTING_ORDER)
        .ok_or(Error::SplittingFieldTooLarge { e })?;

    let ext = Extension {
        modulus: first_irreducible(field, e),
    };
    let m_primes = prime_factors(m as u64);
    let one = Poly::one(field);
    let cofactor = (order - 1) / m as u128;
    let mut xi = None;
    for idx in 1..order {
        let w = ext.element(field, idx);
        let z = ext.pow(&w, cofactor);
        if m_primes
            .iter()
            .all(|&r| ext.pow(&z, (m as u64 / r) as u128) != one)
        {
            xi = Some(z);
            break;
        }
    }
    let xi = xi.expect("GF(q^e)* is cyclic of order divisible by m");

    let mut powers = Vec::with_capacity(m);
    let mut cur = one.clone();
    for _ in 0..m {
        powers.push(cur.clone());
        cur = ext.mul(&cur, &xi);
    }

    let cosets = cyclotomic_cosets(q, m);
    let mut minpolys = Vec::with_capacity(cosets.len());
    for coset in &cosets {
        // coefficients live in the extension; start from the constant 1
        let mut acc: Vec<Poly> = vec![one.clone()];
        for &i in coset {
            let root = &powers[i];
            let mut next = vec![Poly::zero(field); acc.len() + 1];
            for (j, c) in acc.iter().enumerate() {
                next[j + 1] = &next[j + 1] + c;
                next[j] = &next[j] - &ext.mul(c, root);
            }
            acc = next;
        }
        let coeffs = acc
            .iter()
            .map(|c| {
                debug_assert!(c.degree().unwrap_or(0) == 0);
                c.coeff(0)
            })
            .collect();
        minpolys.push(Poly::new(field, coeffs));
    }

    let coset_of = |i: usize| cosets.iter().position(|c| c.contains(&i)).unwrap();
    let mut self_reciprocal = Vec::new();
    let mut reciprocal_pairs = Vec::new();
    for (ci, coset) in cosets.iter().enumerate() {
        let partner = coset_of((m - coset[0]) % m);
        if partner == ci {
            self_reciprocal.push(minpolys[ci].clone());
        } else if ci < partner {
            let (a, b) = (minpolys[ci].clone(), minpolys[partner].clone());
            if a.canonical_cmp(&b).is_le() {
                reciprocal_pairs.push((a, b));
            } else {
                reciprocal_pairs.push((b, a));
            }
        }
    }
    self_reciprocal.sort_by(|a, b| a.canonical_cmp(b));
    reciprocal_pairs.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(FactorClassification {
        m,
        field: field.clone(),
        self_reciprocal,
        reciprocal_pairs,
    })
}
