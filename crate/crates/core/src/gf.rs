//! Arithmetic in small finite fields GF(p^k).
//!
//! A [`Field`] is a cheap handle (reference counted) to precomputed addition
//! and multiplication tables. Elements are plain [`Elem`] indices: the element
//! `c_0 + c_1 a + ... + c_{k-1} a^{k-1}` is stored as `c_0 + c_1 p + ... `,
//! so the prime subfield occupies indices `0..p` and `0`/`1` are the additive
//! and multiplicative identities. [`FieldElement`] pairs an index with its
//! field for the checked public API.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Raw element index inside a [`Field`].
pub type Elem = u16;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 2401;

/// Description of GF(p^k): characteristic, degree, and the defining modulus
/// (monic, ascending coefficients over GF(p)).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.k)
    }
}

/// Pinned irreducible moduli (Conway polynomials) for p in {2,3,5,7}, k <= 4;
/// prime fields (`k = 1`) need none and get `x`.
pub fn default_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    let m: &[u32] = match (p, k) {
        (_, 1) => return Some(vec![0, 1]),
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (3, 4) => &[2, 0, 0, 2, 1],
        (5, 2) => &[2, 4, 1],
        (5, 3) => &[3, 3, 0, 1],
        (5, 4) => &[2, 4, 4, 0, 1],
        (7, 2) => &[3, 6, 1],
        (7, 3) => &[4, 0, 6, 1],
        (7, 4) => &[3, 4, 5, 0, 1],
        _ => return None,
    };
    Some(m.to_vec())
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn prime_poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
        }
        trim(&mut r);
    }
    r
}

/// Exhaustive irreducibility check of a monic polynomial over GF(p) by trial
/// division with every monic polynomial of degree <= deg/2.
fn is_irreducible_over_prime(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                div.push((t % p as u64) as u32);
                t /= p as u64;
            }
            div.push(1);
            if prime_poly_rem(modulus, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// Handle to GF(p^k) with precomputed operation tables.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.spec.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k() == 1 {
            write!(f, "{}", self.q())
        } else {
            let m = self.modulus_string();
            write!(f, "{}:modulus={}", self.q(), m)
        }
    }
}

impl Field {
    /// Builds GF(p^k). When `modulus` is `None` the pinned default table is
    /// used.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::BadModulus("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = match modulus {
            Some(mut m) => {
                trim(&mut m);
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus("coefficient out of range".into()));
                }
                if m.len() != k as usize + 1 {
                    return Err(Error::BadModulus(format!("degree must be {k}")));
                }
                if m[k as usize] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if !is_irreducible_over_prime(&m, p) {
                    return Err(Error::BadModulus("modulus is reducible".into()));
                }
                m
            }
            None => default_modulus(p, k).ok_or(Error::NoDefaultModulus { p, k })?,
        };
        Ok(Self::build(FieldSpec { p, k, modulus }))
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1, None)
    }

    /// Field of order `q` with the default modulus.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::new(p, k, None)
    }

    fn build(spec: FieldSpec) -> Field {
        let p = spec.p;
        let k = spec.k as usize;
        let q = spec.q();
        let qs = q as usize;
        let digits: Vec<Vec<u32>> = (0..q)
            .map(|mut x| {
                let mut d = vec![0; k];
                for slot in d.iter_mut() {
                    *slot = x % p;
                    x /= p;
                }
                d
            })
            .collect();
        let index =
            |d: &[u32]| -> Elem { d.iter().rev().fold(0u32, |acc, &c| acc * p + c) as Elem };
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let mut prod = vec![0u32; 2 * k];
        for a in 0..qs {
            for b in a..qs {
                let s: Vec<u32> = (0..k).map(|i| (digits[a][i] + digits[b][i]) % p).collect();
                let si = index(&s);
                add[a * qs + b] = si;
                add[b * qs + a] = si;

                prod.iter_mut().for_each(|c| *c = 0);
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
                    }
                }
                let mut r = prime_poly_rem(&prod, &spec.modulus, p);
                r.resize(k, 0);
                let pi = index(&r);
                mul[a * qs + b] = pi;
                mul[b * qs + a] = pi;
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Elem)
            .collect();
        let mut inv = vec![0; qs];
        for a in 1..qs {
            inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as Elem;
        }
        Field(Arc::new(Tables {
            spec,
            q,
            add,
            mul,
            neg,
            inv,
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn k(&self) -> u32 {
        self.0.spec.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn is_square_order(&self) -> bool {
        self.k().is_multiple_of(2)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.0.inv[a as usize])
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Row of the addition table for `a`, indexed by the second operand.
    #[inline]
    pub fn add_row(&self, a: Elem) -> &[Elem] {
        let q = self.0.q as usize;
        &self.0.add[a as usize * q..(a as usize + 1) * q]
    }

    /// The embedding of an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p() as i64) as Elem
    }

    /// The generator `a` of the extension (the class of the indeterminate
    /// modulo the modulus). For prime fields this is not defined.
    pub fn generator(&self) -> Option<Elem> {
        (self.k() > 1).then_some(self.p() as Elem)
    }

    /// `a^(sqrt q)`, the involutive automorphism used for Hermitian products.
    pub fn frobenius_sqrt_q(&self, a: Elem) -> Result<Elem> {
        if !self.is_square_order() {
            return Err(Error::NotSquare(self.q()));
        }
        Ok(self.pow(a, (self.p() as u64).pow(self.k() / 2)))
    }

    /// Least element whose square is `-1`, if any.
    pub fn sqrt_of_minus_one(&self) -> Option<Elem> {
        let target = self.neg(1);
        (0..self.q() as Elem).find(|&a| self.mul(a, a) == target)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q() as Elem
    }

    pub fn element(&self, value: Elem) -> Result<FieldElement> {
        if (value as u32) < self.q() {
            Ok(FieldElement {
                value,
                field: self.clone(),
            })
        } else {
            Err(Error::Parse(format!("element index {value} out of range")))
        }
    }

    fn digits(&self, mut a: Elem) -> Vec<u32> {
        let p = self.p();
        (0..self.k())
            .map(|_| {
                let d = a as u32 % p;
                a = (a as u32 / p) as Elem;
                d
            })
            .collect()
    }

    /// Textual form: an integer for prime fields, otherwise a polynomial in
    /// the generator symbol `a`, e.g. `a^2+1`.
    pub fn format_elem(&self, a: Elem) -> String {
        if self.k() == 1 {
            return a.to_string();
        }
        if a == 0 {
            return "0".into();
        }
        let digits = self.digits(a);
        let mut parts = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            let mono = match i {
                0 => String::new(),
                1 => "a".into(),
                _ => format!("a^{i}"),
            };
            parts.push(format!("{coeff}{mono}"));
        }
        parts.join("+")
    }

    /// Parses an element expression like `3`, `a`, `2a^2+a+1` (whitespace
    /// ignored, `-` allowed between terms).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let bytes = s.as_bytes();
        let p = self.p();
        let mut acc: Elem = 0;
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected '+' or '-' in '{s}'")));
            }
            first = false;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<u32> = if pos > start {
                let c: u32 = s[start..pos]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer in '{s}'")))?;
                if c >= p {
                    return Err(Error::Parse(format!("coefficient {c} not in GF({p})")));
                }
                Some(c)
            } else {
                None
            };
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            let mut exp = 0u64;
            if pos < bytes.len() && bytes[pos] == b'a' {
                if self.k() == 1 {
                    return Err(Error::Parse("generator 'a' used in a prime field".into()));
                }
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let st = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exp = s[st..pos]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{s}'")))?;
                }
            } else if coeff.is_none() {
                return Err(Error::Parse(format!("unexpected character in '{s}'")));
            }
            let mono = if exp == 0 {
                1
            } else {
                self.pow(self.generator().unwrap(), exp)
            };
            let mut term = self.mul(coeff.unwrap_or(1) as Elem, mono);
            if negative {
                term = self.neg(term);
            }
            acc = self.add(acc, term);
        }
        Ok(acc)
    }

    fn modulus_string(&self) -> String {
        let m = &self.0.spec.modulus;
        let mut parts = Vec::new();
        for (i, &c) in m.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            parts.push(format!("{coeff}{mono}"));
        }
        parts.join("+")
    }

    /// Parses the field notation `q`, `p^k`, optionally followed by
    /// `:modulus=<poly in x>`; a leading `q=` is accepted.
    pub fn parse(s: &str) -> Result<Field> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.strip_prefix("q=").unwrap_or(&s);
        let (order, modulus) = match s.split_once(':') {
            Some((o, rest)) => {
                let m = rest
                    .strip_prefix("modulus=")
                    .ok_or_else(|| Error::Parse(format!("expected 'modulus=' in '{s}'")))?;
                (o, Some(m))
            }
            None => (s, None),
        };
        let (p, k) = if let Some((b, e)) = order.split_once('^') {
            let p: u32 = b
                .parse()
                .map_err(|_| Error::Parse(format!("bad field order '{order}'")))?;
            let k: u32 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad field order '{order}'")))?;
            (p, k)
        } else {
            let q: u32 = order
                .parse()
                .map_err(|_| Error::Parse(format!("bad field order '{order}'")))?;
            prime_power(q).ok_or(Error::NotPrime(q))?
        };
        let modulus = match modulus {
            Some(m) => Some(parse_prime_poly(m, p)?),
            None => None,
        };
        Field::new(p, k, modulus)
    }
}

/// Decomposes `q = p^k` with `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Parses a polynomial in `x` with integer coefficients reduced into GF(p).
fn parse_prime_poly(s: &str, p: u32) -> Result<Vec<u32>> {
    let mut coeffs: Vec<u32> = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i64;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        }
        let st = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let c: i64 = if pos > st {
            s[st..pos].parse().unwrap()
        } else {
            1
        };
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        }
        let mut e = 0usize;
        if pos < bytes.len() && bytes[pos] == b'x' {
            pos += 1;
            e = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let st = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                e = s[st..pos]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{s}'")))?;
            }
        } else if pos == st {
            return Err(Error::Parse(format!("unexpected character in '{s}'")));
        }
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] = ((coeffs[e] as i64 + sign * c).rem_euclid(p as i64)) as u32;
    }
    Ok(coeffs)
}

/// An element together with the field it lives in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: Elem,
    field: Field,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(self.value))
    }
}

impl FieldElement {
    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: Elem) -> FieldElement {
        FieldElement {
            value,
            field: self.field.clone(),
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, e))
    }

    pub fn frobenius_sqrt_q(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.frobenius_sqrt_q(self.value)?))
    }
}
