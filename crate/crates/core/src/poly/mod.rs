//! Dense univariate polynomials over GF(q) and the quotient ring
//! `R_m = GF(q)[x]/(x^m - 1)`.

mod factor;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

pub use factor::{factor_xm_minus_1, FactorClassification};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
    field: Field,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        assert!(coeffs.iter().all(|&c| (c as u32) < field.q()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            field: field.clone(),
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    /// `c x^e`.
    pub fn monomial(field: &Field, c: Elem, e: usize) -> Poly {
        let mut v = vec![0; e + 1];
        v[e] = c;
        Poly::new(field, v)
    }

    /// `x^m - 1`.
    pub fn xm_minus_1(field: &Field, m: usize) -> Poly {
        let mut v = vec![0; m + 1];
        v[0] = field.neg(1);
        v[m] = field.add(v[m], 1);
        Poly::new(field, v)
    }

    /// Builds from integer coefficients (ascending) reduced into the prime
    /// subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomial arithmetic across different fields"
        );
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Normalizes to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()).unwrap())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(dn) = self.degree() else {
            return Ok((Poly::zero(f), Poly::zero(f)));
        };
        if dn < dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.rem(self) {
            Ok(r) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f*(x) = f(0)^{-1} x^{deg f} f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() || self.coeffs[0] == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let rev: Vec<Elem> = self.coeffs.iter().rev().copied().collect();
        let c0 = self.field.inv(self.coeffs[0])?;
        Ok(Poly::new(&self.field, rev).scale(c0))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().map(|r| r == *self).unwrap_or(false)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Rabin irreducibility test over the coefficient field.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.q() as u128;
        let x = Poly::monomial(&self.field, 1, 1);
        // frob[i] = x^(q^i) mod f
        let mut frob = vec![x.rem(&f).unwrap()];
        for i in 1..=n {
            let next = frob[i - 1].pow_mod(q, &f).unwrap();
            frob.push(next);
        }
        if frob[n] != frob[0] {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|r| {
            let d = n / r as usize;
            (&frob[d] - &x).gcd(&f).is_one()
        })
    }

    /// Canonical ordering: degree first, then coefficients from the constant
    /// term upward.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Parses the textual polynomial syntax, e.g. `x^3+2x+2` or
    /// `(a^2+1)x^3 + a`.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        parse::parse_poly(field, s)
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", parse::format_poly(self))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

/// An element of `R_m = GF(q)[x]/(x^m - 1)` with `gcd(m, q) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    poly: Poly,
    m: usize,
}

pub fn check_coprime(m: usize, field: &Field) -> Result<()> {
    if m == 0 || gcd_u64(m as u64, field.q() as u64) != 1 {
        return Err(Error::NotCoprime { m, q: field.q() });
    }
    Ok(())
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RingElement {
    /// Reduces `poly` modulo `x^m - 1`.
    pub fn new(poly: &Poly, m: usize) -> Result<RingElement> {
        check_coprime(m, poly.field())?;
        let f = poly.field();
        let mut v = vec![0; m];
        for (i, &c) in poly.coeffs().iter().enumerate() {
            v[i % m] = f.add(v[i % m], c);
        }
        Ok(RingElement {
            poly: Poly::new(f, v),
            m,
        })
    }

    pub fn zero(field: &Field, m: usize) -> Result<RingElement> {
        RingElement::new(&Poly::zero(field), m)
    }

    pub fn one(field: &Field, m: usize) -> Result<RingElement> {
        RingElement::new(&Poly::one(field), m)
    }

    pub fn parse(field: &Field, m: usize, s: &str) -> Result<RingElement> {
        RingElement::new(&Poly::parse(field, s)?, m)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &Field {
        self.poly.field()
    }

    /// Lift to `GF(q)[x]` (degree < m).
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Length-m coefficient vector.
    pub fn dense(&self) -> Vec<Elem> {
        let mut v = self.poly.coeffs().to_vec();
        v.resize(self.m, 0);
        v
    }

    fn check(&self, other: &RingElement) {
        assert_eq!(self.m, other.m, "ring elements with different m");
    }

    fn from_dense(field: &Field, m: usize, v: Vec<Elem>) -> RingElement {
        RingElement {
            poly: Poly::new(field, v),
            m,
        }
    }

    /// `a(x^{m-1})`: coefficient of `x^i` moves to `x^{(m-i) mod m}`.
    pub fn conj(&self) -> RingElement {
        let m = self.m;
        let mut v = vec![0; m];
        for (i, &c) in self.poly.coeffs().iter().enumerate() {
            v[(m - i) % m] = c;
        }
        RingElement::from_dense(self.field(), m, v)
    }

    pub fn scale(&self, c: Elem) -> RingElement {
        RingElement {
            poly: self.poly.scale(c),
            m: self.m,
        }
    }

    /// Uniform element: i.i.d. coefficients, degree < m.
    pub fn random<R: Rng + ?Sized>(field: &Field, m: usize, rng: &mut R) -> Result<RingElement> {
        check_coprime(m, field)?;
        let q = field.q() as Elem;
        let v = (0..m).map(|_| rng.gen_range(0..q)).collect();
        Ok(RingElement::from_dense(field, m, v))
    }

    /// Element whose dense coefficient vector is the base-q expansion of
    /// `index`; enumerates all of `R_m` as `index` runs over `0..q^m`.
    pub fn from_index(field: &Field, m: usize, mut index: u64) -> Result<RingElement> {
        check_coprime(m, field)?;
        let q = field.q() as u64;
        let v = (0..m)
            .map(|_| {
                let c = (index % q) as Elem;
                index /= q;
                c
            })
            .collect();
        Ok(RingElement::from_dense(field, m, v))
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.check(rhs);
        RingElement {
            poly: &self.poly + &rhs.poly,
            m: self.m,
        }
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.check(rhs);
        RingElement {
            poly: &self.poly - &rhs.poly,
            m: self.m,
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            poly: -&self.poly,
            m: self.m,
        }
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.check(rhs);
        let f = self.field();
        let m = self.m;
        let mut v = vec![0; m];
        for (i, &a) in self.poly.coeffs().iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.poly.coeffs().iter().enumerate() {
                let k = (i + j) % m;
                v[k] = f.add(v[k], f.mul(a, b));
            }
        }
        RingElement::from_dense(f, m, v)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({} mod x^{}-1)", self.poly, self.m)
    }
}
