//! One-generator quasi-cyclic codes `<(a_1(x), ..., a_l(x))> ⊂ R_m^l` and
//! double-circulant codes `<(1, a(x))>`.
//!
//! The closed-form side:
//!
//! * `g = gcd(a_1, ..., a_l, x^m - 1)`, `h = (x^m - 1)/g`, `dim C = deg h`;
//! * hull dimension `deg gcd(sum_r a_r(x) a_r(x^{m-1}), h)`;
//! * LCP of two maximal 2-QC codes iff `gcd(a_1 b_2 - a_2 b_1, x^m - 1) = 1`.
//!
//! The oracle side is [`QcOneGenSpec::build_code`] plus the rank computations
//! in [`crate::code`].

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::poly::{check_coprime, Poly, RingElement};

/// Symbolic description of a one-generator l-QC code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QcOneGenSpec {
    m: usize,
    field: Field,
    gens: Vec<RingElement>,
}

impl QcOneGenSpec {
    pub fn new(gens: Vec<RingElement>) -> Result<QcOneGenSpec> {
        let first = gens
            .first()
            .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
        let (m, field) = (first.m(), first.field().clone());
        check_coprime(m, &field)?;
        if gens.iter().any(|g| g.m() != m) {
            return Err(Error::DimensionMismatch(
                "generators with different m".into(),
            ));
        }
        if gens.iter().any(|g| *g.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(QcOneGenSpec { m, field, gens })
    }

    /// Parses each generator string in the polynomial syntax.
    pub fn parse(field: &Field, m: usize, gens: &[&str]) -> Result<QcOneGenSpec> {
        let gens = gens
            .iter()
            .map(|s| RingElement::parse(field, m, s))
            .collect::<Result<Vec<_>>>()?;
        QcOneGenSpec::new(gens)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> usize {
        self.gens.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.gens
    }

    pub fn length(&self) -> usize {
        self.m * self.gens.len()
    }

    fn xm1(&self) -> Poly {
        Poly::xm_minus_1(&self.field, self.m)
    }

    /// `g(x) = gcd(a_1, ..., a_l, x^m - 1)`, monic.
    pub fn generator_poly(&self) -> Poly {
        self.gens
            .iter()
            .fold(self.xm1(), |acc, a| acc.gcd(a.poly()))
    }

    /// `h(x) = (x^m - 1)/g(x)`.
    pub fn parity_check_poly(&self) -> Poly {
        let (h, r) = self.xm1().divmod(&self.generator_poly()).expect("g != 0");
        debug_assert!(r.is_zero());
        h
    }

    /// Dimension `deg h(x)`.
    pub fn dimension(&self) -> usize {
        self.parity_check_poly().degree().unwrap_or(0)
    }

    pub fn is_maximal(&self) -> bool {
        self.generator_poly().is_one()
    }

    /// The `m x ml` matrix `[circ(a_1) | ... | circ(a_l)]`, whose row `i`
    /// holds `x^i (a_1, ..., a_l)`.
    pub fn generator_rows(&self) -> Matrix {
        let blocks = vec![self.gens.iter().map(Matrix::circulant).collect()];
        Matrix::block(&self.field, &blocks).expect("equal blocks")
    }

    pub fn build_code(&self) -> LinearCode {
        LinearCode::from_rows(&self.generator_rows()).expect("m >= 1")
    }

    /// `sum_r a_r(x) a_r(x^{m-1})` in `R_m`.
    pub fn hull_sum(&self) -> RingElement {
        let zero = RingElement::zero(&self.field, self.m).expect("validated m");
        self.gens
            .iter()
            .fold(zero, |acc, a| &acc + &(a * &a.conj()))
    }

    /// `u(x) = gcd(sum_r a_r a_r(x^{m-1}), h(x))`; a zero sum gives `u = h`.
    pub fn hull_gcd(&self) -> Poly {
        self.hull_sum().poly().gcd(&self.parity_check_poly())
    }

    /// Hull dimension from the gcd formula.
    pub fn hull_dim_formula(&self) -> usize {
        self.hull_gcd().degree().unwrap_or(0)
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dim_formula() == 0
    }

    /// Necessary condition for LCD: `g(x)` is self-reciprocal.
    pub fn lcd_necessary_selfreciprocal(&self) -> bool {
        self.generator_poly().is_self_reciprocal()
    }
}

/// Whether two maximal one-generator 2-QC codes form an LCP, via
/// `gcd(a_1 b_2 - a_2 b_1, x^m - 1) = 1`.
///
/// A pair of one-generator QC codes can only be complementary when both have
/// index 2 and are maximal; other inputs are rejected.
pub fn lcp_maximal_2qc(c: &QcOneGenSpec, d: &QcOneGenSpec) -> Result<bool> {
    if c.m != d.m || c.field != d.field {
        return Err(Error::DimensionMismatch("codes over different R_m".into()));
    }
    if c.index() != 2 || d.index() != 2 {
        return Err(Error::Precondition(
            "complementary one-generator QC codes must have index 2".into(),
        ));
    }
    if !c.is_maximal() || !d.is_maximal() {
        return Err(Error::Precondition(
            "complementary one-generator QC codes must both be maximal".into(),
        ));
    }
    let (a1, a2) = (&c.gens[0], &c.gens[1]);
    let (b1, b2) = (&d.gens[0], &d.gens[1]);
    let det = &(a1 * b2) - &(a2 * b1);
    Ok(det.poly().gcd(&c.xm1()).is_one())
}

/// Double-circulant code `<(1, a(x))>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DcSpec {
    a: RingElement,
}

impl DcSpec {
    pub fn new(a: RingElement) -> Result<DcSpec> {
        check_coprime(a.m(), a.field())?;
        Ok(DcSpec { a })
    }

    pub fn parse(field: &Field, m: usize, a: &str) -> Result<DcSpec> {
        DcSpec::new(RingElement::parse(field, m, a)?)
    }

    pub fn a(&self) -> &RingElement {
        &self.a
    }

    pub fn m(&self) -> usize {
        self.a.m()
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn to_qc(&self) -> QcOneGenSpec {
        let one = RingElement::one(self.field(), self.m()).expect("validated m");
        QcOneGenSpec::new(vec![one, self.a.clone()]).expect("consistent generators")
    }

    pub fn build_code(&self) -> LinearCode {
        self.to_qc().build_code()
    }

    /// `1 + a(x) a(x^{m-1})` in `R_m`.
    pub fn hull_sum(&self) -> RingElement {
        let one = RingElement::one(self.field(), self.m()).expect("validated m");
        &one + &(&self.a * &self.a.conj())
    }

    /// `deg gcd(1 + a(x) a(x^{m-1}), x^m - 1)`.
    pub fn hull_dim(&self) -> usize {
        self.hull_gcd().degree().unwrap_or(0)
    }

    pub fn hull_gcd(&self) -> Poly {
        self.hull_sum()
            .poly()
            .gcd(&Poly::xm_minus_1(self.field(), self.m()))
    }

    /// `<(1, -a(x^{m-1}))>`, the partner used for LCP searches.
    pub fn negated_conjugate(&self) -> DcSpec {
        DcSpec { a: -&self.a.conj() }
    }
}

/// LCP test for two DC codes of the same `R_m`.
pub fn dc_lcp(c: &DcSpec, d: &DcSpec) -> Result<bool> {
    lcp_maximal_2qc(&c.to_qc(), &d.to_qc())
}

/// A DC code with hull dimension one.
///
/// For `q ≡ 1 (mod 4)`, `a(x) = x - (α + 1)` with `α^2 = -1`. For even `q`,
/// `a(x) = u(x) + (β + 1)` with `u = (x^m - 1)/(x - 1)` and `β = u(1)`. No
/// such code exists for `q ≡ 3 (mod 4)`.
pub fn dc_construct_hull_one(m: usize, field: &Field) -> Result<DcSpec> {
    check_coprime(m, field)?;
    let q = field.q();
    let a = if q.is_multiple_of(2) {
        let u = Poly::new(field, vec![1; m]);
        let beta = u.eval(1);
        let shift = Poly::constant(field, field.add(beta, 1));
        &u + &shift
    } else if q % 4 == 1 {
        let alpha = field
            .sqrt_of_minus_one()
            .expect("-1 is a square when q = 1 mod 4");
        let c = field.neg(field.add(alpha, 1));
        Poly::new(field, vec![c, 1])
    } else {
        return Err(Error::NoSuchCode(format!(
            "no DC code of hull dimension 1 exists over GF({q}) since q = 3 mod 4"
        )));
    };
    DcSpec::new(RingElement::new(&a, m)?)
}

/// Histogram of hull dimensions over all `q^m` DC codes of `R_m`;
/// `hist[h]` counts the codes with hull dimension `h`.
pub fn dc_hull_histogram(field: &Field, m: usize, budget: u64) -> Result<Vec<u64>> {
    check_coprime(m, field)?;
    let total = (field.q() as u64)
        .checked_pow(m as u32)
        .filter(|&t| t <= budget)
        .ok_or(Error::BudgetExceeded {
            needed: (field.q() as u128).saturating_pow(m as u32),
            budget,
            upper_bound: None,
        })?;
    let mut hist = vec![0u64; m + 1];
    for idx in 0..total {
        let dc = DcSpec::new(RingElement::from_index(field, m, idx)?)?;
        hist[dc.hull_dim()] += 1;
    }
    Ok(hist)
}

/// Exhaustively confirms that no DC code over `R_m` has odd hull dimension.
/// Meant for `q ≡ 3 (mod 4)`, where such codes cannot exist.
pub fn dc_no_odd_hull_check(field: &Field, m: usize, budget: u64) -> Result<bool> {
    if field.q() % 4 != 3 {
        return Err(Error::Precondition(format!(
            "odd-hull exclusion applies to q = 3 mod 4, got q = {}",
            field.q()
        )));
    }
    let hist = dc_hull_histogram(field, m, budget)?;
    Ok(hist.iter().skip(1).step_by(2).all(|&c| c == 0))
}
