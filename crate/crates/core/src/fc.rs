//! Four-circulant codes
//! `<(1, 0, a_1, a_2), (0, 1, -a_2(x^{m-1}), a_1(x^{m-1}))> ⊂ R_m^4`.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::poly::{check_coprime, Poly, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourCirculantSpec {
    a1: RingElement,
    a2: RingElement,
}

impl FourCirculantSpec {
    pub fn new(a1: RingElement, a2: RingElement) -> Result<FourCirculantSpec> {
        if a1.m() != a2.m() {
            return Err(Error::DimensionMismatch("a1 and a2 differ in m".into()));
        }
        if a1.field() != a2.field() {
            return Err(Error::FieldMismatch);
        }
        check_coprime(a1.m(), a1.field())?;
        Ok(FourCirculantSpec { a1, a2 })
    }

    pub fn parse(field: &Field, m: usize, a1: &str, a2: &str) -> Result<FourCirculantSpec> {
        FourCirculantSpec::new(
            RingElement::parse(field, m, a1)?,
            RingElement::parse(field, m, a2)?,
        )
    }

    pub fn a1(&self) -> &RingElement {
        &self.a1
    }

    pub fn a2(&self) -> &RingElement {
        &self.a2
    }

    pub fn m(&self) -> usize {
        self.a1.m()
    }

    pub fn field(&self) -> &Field {
        self.a1.field()
    }

    /// The `2m x 4m` matrix `[[I, 0, A1, A2], [0, I, -A2^c, A1^c]]`, with
    /// `A = circ(a)` and `X^c = circ(x(x^{m-1}))`.
    pub fn generator_rows(&self) -> Matrix {
        let f = self.field();
        let m = self.m();
        let id = Matrix::identity(f, m);
        let zero = Matrix::zeros(f, m, m);
        let blocks = vec![
            vec![
                id.clone(),
                zero.clone(),
                Matrix::circulant(&self.a1),
                Matrix::circulant(&self.a2),
            ],
            vec![
                zero,
                id,
                Matrix::circulant(&-&self.a2.conj()),
                Matrix::circulant(&self.a1.conj()),
            ],
        ];
        Matrix::block(f, &blocks).expect("equal blocks")
    }

    pub fn build_code(&self) -> LinearCode {
        LinearCode::from_rows(&self.generator_rows()).expect("m >= 1")
    }

    /// `A(x) = 1 + a_1 a_1(x^{m-1}) + a_2 a_2(x^{m-1})` in `R_m`.
    pub fn hull_sum(&self) -> RingElement {
        let one = RingElement::one(self.field(), self.m()).expect("validated m");
        let t1 = &self.a1 * &self.a1.conj();
        let t2 = &self.a2 * &self.a2.conj();
        &(&one + &t1) + &t2
    }

    /// `u(x) = gcd(A(x), x^m - 1)`; `A = 0` gives `u = x^m - 1`.
    pub fn hull_gcd(&self) -> Poly {
        self.hull_sum()
            .poly()
            .gcd(&Poly::xm_minus_1(self.field(), self.m()))
    }

    /// `2 deg u(x)`.
    pub fn hull_dim_formula(&self) -> usize {
        2 * self.hull_gcd().degree().unwrap_or(0)
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_gcd().is_one()
    }
}

/// `sum_t (a_t - b_t)(a_t - b_t)(x^{m-1})` in `R_m`.
pub fn lcp_sum(c: &FourCirculantSpec, d: &FourCirculantSpec) -> Result<RingElement> {
    if c.m() != d.m() {
        return Err(Error::DimensionMismatch("FC codes with different m".into()));
    }
    if c.field() != d.field() {
        return Err(Error::FieldMismatch);
    }
    let e1 = &c.a1 - &d.a1;
    let e2 = &c.a2 - &d.a2;
    Ok(&(&e1 * &e1.conj()) + &(&e2 * &e2.conj()))
}

/// Whether two FC codes form an LCP.
pub fn fc_lcp(c: &FourCirculantSpec, d: &FourCirculantSpec) -> Result<bool> {
    let s = lcp_sum(c, d)?;
    Ok(s.poly().gcd(&Poly::xm_minus_1(c.field(), c.m())).is_one())
}
