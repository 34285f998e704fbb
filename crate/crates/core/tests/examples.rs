//! Worked examples, checked through the public API.

use qchull::code::DEFAULT_BUDGET;
use qchull::fc::lcp_sum;
use qchull::qc::dc_no_odd_hull_check;
use qchull::search::{reproduce_table, run_search, Family, Mode, RowStatus, SearchTask};
use qchull::*;

fn gf(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn poly(f: &Field, s: &str) -> Poly {
    Poly::parse(f, s).unwrap()
}

fn ring(f: &Field, m: usize, s: &str) -> RingElement {
    RingElement::parse(f, m, s).unwrap()
}

fn remark() -> QcOneGenSpec {
    QcOneGenSpec::parse(&gf(2), 3, &["x^2+x", "x^2+1"]).unwrap()
}

#[test]
fn field_construction() {
    assert_eq!(Field::new(2, 1, None).unwrap().q(), 2);
    let f4 = Field::new(2, 2, Some(vec![1, 1, 1])).unwrap();
    assert_eq!(f4, gf(4));
    assert!(matches!(
        Field::new(2, 2, Some(vec![1, 0, 1])),
        Err(Error::BadModulus(_))
    ));
}

#[test]
fn frobenius_and_square_roots() {
    let f4 = gf(4);
    let a = f4.generator().unwrap();
    assert_eq!(f4.frobenius_sqrt_q(a), Ok(f4.mul(a, a)));
    assert_eq!(f4.frobenius_sqrt_q(1), Ok(1));
    let f9 = gf(9);
    for x in f9.elements() {
        let y = f9.frobenius_sqrt_q(x).unwrap();
        assert_eq!(y, f9.pow(x, 3));
        assert_eq!(f9.frobenius_sqrt_q(y), Ok(x));
    }
    assert_eq!(gf(5).sqrt_of_minus_one(), Some(2));
    assert_eq!(gf(2).sqrt_of_minus_one(), Some(1));
    assert_eq!(gf(3).sqrt_of_minus_one(), None);
}

#[test]
fn reciprocal_and_conjugation() {
    let f = gf(2);
    assert_eq!(poly(&f, "x+1").reciprocal().unwrap(), poly(&f, "x+1"));
    assert_eq!(ring(&f, 3, "x^2+x").conj(), ring(&f, 3, "x^2+x"));
    let f3 = gf(3);
    assert_eq!(ring(&f3, 5, "x^2").conj(), ring(&f3, 5, "x^3"));
    assert_eq!(ring(&f3, 5, "2").conj(), ring(&f3, 5, "2"));
}

#[test]
fn factorizations() {
    let f5 = gf(5);
    let fc = factor_xm_minus_1(8, &f5).unwrap();
    assert_eq!(fc.self_reciprocal, vec![poly(&f5, "x+1"), poly(&f5, "x+4")]);
    assert_eq!(
        fc.reciprocal_pairs,
        vec![
            (poly(&f5, "x+2"), poly(&f5, "x+3")),
            (poly(&f5, "x^2+2"), poly(&f5, "x^2+3")),
        ]
    );

    let f4 = gf(4);
    let fc = factor_xm_minus_1(9, &f4).unwrap();
    assert_eq!(fc.self_reciprocal, vec![poly(&f4, "x+1")]);
    assert_eq!(
        fc.reciprocal_pairs,
        vec![
            (poly(&f4, "x+a"), poly(&f4, "x+a^2")),
            (poly(&f4, "x^3+a"), poly(&f4, "x^3+a^2")),
        ]
    );

    let f2 = gf(2);
    let fc = factor_xm_minus_1(3, &f2).unwrap();
    assert_eq!(
        fc.self_reciprocal,
        vec![poly(&f2, "x+1"), poly(&f2, "x^2+x+1")]
    );
    assert!(fc.reciprocal_pairs.is_empty());
}

#[test]
fn matrices() {
    let f3 = gf(3);
    assert_eq!(Matrix::zeros(&f3, 3, 4).rank(), 0);
    assert_eq!(Matrix::identity(&f3, 5).rank(), 5);
    assert_eq!(Matrix::from_ints(&f3, &[&[1, 2], &[2, 1]]).rank(), 1);

    let f2 = gf(2);
    assert_eq!(
        Matrix::circulant(&ring(&f2, 3, "1")),
        Matrix::identity(&f2, 3)
    );
    assert_eq!(
        Matrix::circulant(&ring(&f2, 3, "x")),
        Matrix::from_ints(&f2, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
    );
    assert_eq!(
        Matrix::circulant(&ring(&f2, 3, "x^2+x")),
        Matrix::from_ints(&f2, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
    );
}

#[test]
fn codes() {
    let f2 = gf(2);
    let c = remark().build_code();
    assert_eq!((c.n(), c.k()), (6, 2));
    assert_eq!(c.hull_dim(), 2);

    let rep = LinearCode::from_rows(&Matrix::from_ints(&f2, &[&[1, 1]])).unwrap();
    assert!(rep.dual().same_space(&rep));
    assert_eq!(rep.hull_dim(), 1);

    let f4 = gf(4);
    let a = f4.generator().unwrap();
    for row in [vec![1, 1], vec![1, a]] {
        let c = LinearCode::from_rows(&Matrix::from_rows(&f4, &[row]).unwrap()).unwrap();
        assert_eq!(c.hermitian_hull_dim(), Ok(1));
    }
    assert_eq!(LinearCode::zero(&f4, 3).hermitian_hull_dim(), Ok(0));

    let qc = QcOneGenSpec::parse(&f2, 7, &["x^2+1", "x^3+x+1"]).unwrap();
    assert_eq!(qc.build_code().min_distance(DEFAULT_BUDGET), Ok(4));
    let fc = FourCirculantSpec::parse(&gf(3), 4, "2x^3+x^2+1", "2x^3+1").unwrap();
    assert_eq!(fc.build_code().min_distance(DEFAULT_BUDGET), Ok(6));
}

#[test]
fn security_parameters() {
    let f3 = gf(3);
    let c = DcSpec::parse(&f3, 4, "x^3+2x+1").unwrap().build_code();
    let d = DcSpec::parse(&f3, 4, "x^3+2x+2").unwrap().build_code();
    assert_eq!(security_parameter(&c, &d, DEFAULT_BUDGET), Ok(4));
    assert_eq!(
        security_parameter(&c, &c.dual(), DEFAULT_BUDGET),
        c.min_distance(DEFAULT_BUDGET)
    );
    let full = LinearCode::full(&f3, 8);
    assert_eq!(security_parameter(&full, &c, DEFAULT_BUDGET), Ok(1));
}

#[test]
fn qc_polynomials() {
    let f2 = gf(2);
    let s = remark();
    assert_eq!(s.generator_poly(), poly(&f2, "x+1"));
    assert_eq!(s.parity_check_poly(), poly(&f2, "x^2+x+1"));
    assert_eq!(s.hull_dim_formula(), 2);
    assert!(s.lcd_necessary_selfreciprocal());
    assert!(!s.is_lcd());

    let zero = QcOneGenSpec::parse(&f2, 5, &["0", "0"]).unwrap();
    assert_eq!(zero.generator_poly(), Poly::xm_minus_1(&f2, 5));
    assert!(zero.parity_check_poly().is_one());

    let dc = DcSpec::parse(&f2, 5, "x^3+x").unwrap().to_qc();
    assert!(dc.generator_poly().is_one());
    assert_eq!(dc.parity_check_poly(), Poly::xm_minus_1(&f2, 5));

    let full = QcOneGenSpec::parse(&f2, 7, &["1"]).unwrap().build_code();
    assert_eq!((full.n(), full.k()), (7, 7));

    let t1 = QcOneGenSpec::parse(&f2, 7, &["x^2+1", "x^3+x+1"]).unwrap();
    let c = t1.build_code();
    assert_eq!((c.n(), c.k()), (14, 7));
    assert!(t1.lcd_necessary_selfreciprocal());
    let t1 = QcOneGenSpec::parse(&f2, 5, &["x^3+1", "x^2+x+1"]).unwrap();
    assert_eq!(t1.hull_dim_formula(), 0);
    assert_eq!(DcSpec::parse(&f2, 7, "x^6+x^3+1").unwrap().hull_dim(), 1);

    let f4 = gf(4);
    let g = ring(&f4, 9, "x+a");
    let s = QcOneGenSpec::new(vec![g.clone(), g]).unwrap();
    assert_eq!(s.generator_poly(), poly(&f4, "x+a"));
    assert!(!s.lcd_necessary_selfreciprocal());
}

#[test]
fn qc_lcp() {
    let f3 = gf(3);
    let c = DcSpec::parse(&f3, 4, "x^3+2x+1").unwrap();
    assert_eq!(dc_lcp(&c, &c), Ok(false));
    let d = DcSpec::parse(&f3, 4, "x^3+2x+2").unwrap();
    assert_eq!(dc_lcp(&c, &d), Ok(true));

    // the partner -a(x^{m-1}) of a = x^4+x+2 (the printed b = x^4+2x+1 is not)
    let c = DcSpec::parse(&f3, 5, "x^4+x+2").unwrap();
    assert_eq!(dc_lcp(&c, &c.negated_conjugate()), Ok(true));
    let printed = DcSpec::parse(&f3, 5, "x^4+2x+1").unwrap();
    assert_eq!(dc_lcp(&c, &printed), Ok(false));
}

#[test]
fn dc_hull() {
    assert_eq!(DcSpec::parse(&gf(3), 4, "0").unwrap().hull_dim(), 0);
    let s = DcSpec::parse(&gf(4), 9, "a^2x^8+a^2x^7+a^2x^6+x^3+x+1").unwrap();
    assert_eq!(s.hull_dim(), 2);
    let s = DcSpec::parse(&gf(5), 8, "4x^7+4x^6+4x^5+2x^3+4").unwrap();
    assert_eq!(s.hull_dim(), 4);

    let f5 = gf(5);
    let s = dc_construct_hull_one(4, &f5).unwrap();
    assert_eq!(s.a().poly(), &poly(&f5, "x+2"));
    assert_eq!((s.hull_dim(), s.build_code().hull_dim()), (1, 1));
    let f2 = gf(2);
    let s = dc_construct_hull_one(3, &f2).unwrap();
    assert_eq!(s.a().poly(), &poly(&f2, "x^2+x+1"));
    assert_eq!(s.build_code().hull_dim(), 1);
    for m in [2, 4, 5, 7] {
        assert!(matches!(
            dc_construct_hull_one(m, &gf(3)),
            Err(Error::NoSuchCode(_))
        ));
    }

    for m in [4, 5, 8] {
        assert_eq!(dc_no_odd_hull_check(&gf(3), m, 1 << 20), Ok(true));
    }
}

#[test]
fn four_circulant() {
    let f2 = gf(2);
    let s = FourCirculantSpec::parse(&f2, 3, "0", "0").unwrap();
    assert_eq!(s.build_code().k(), 6);
    assert_eq!(s.hull_dim_formula(), 0);

    let s = FourCirculantSpec::parse(&f2, 5, "x^2", "x^2+x+1").unwrap();
    let c = s.build_code();
    assert_eq!((c.n(), c.k()), (20, 10));
    assert_eq!(c.min_distance(DEFAULT_BUDGET), Ok(5));

    let s = FourCirculantSpec::parse(&gf(3), 5, "x^4+2x^2+x+2", "2x^4+2x^2+1").unwrap();
    let c = s.build_code();
    assert_eq!((c.n(), c.k()), (20, 10));
    assert_eq!(c.min_distance(DEFAULT_BUDGET), Ok(7));

    let s = FourCirculantSpec::parse(&f2, 3, "x+1", "x^2+x").unwrap();
    assert_eq!(s.hull_dim_formula(), 0);
    let s = FourCirculantSpec::parse(&f2, 3, "1", "x").unwrap();
    assert!(s.hull_sum().poly().is_one());
    assert_eq!(s.build_code().hull_dim(), 0);
}

#[test]
fn four_circulant_lcp() {
    let f3 = gf(3);
    let c = FourCirculantSpec::parse(&f3, 4, "2x^3+2x^2+x", "x^2+1").unwrap();
    assert_eq!(fc_lcp(&c, &c), Ok(false));
    let d = FourCirculantSpec::parse(&f3, 4, "2x^3+2x^2+x+1", "x^2+1").unwrap();
    assert_eq!(fc_lcp(&c, &d), Ok(true));
    assert!(c.build_code().is_complementary(&d.build_code()));

    let xm1 = ring(&f3, 4, "x+2");
    let r1 = ring(&f3, 4, "x^2+2");
    let r2 = ring(&f3, 4, "2x^3+x");
    let e = FourCirculantSpec::new(c.a1() + &(&xm1 * &r1), c.a2() + &(&xm1 * &r2)).unwrap();
    assert!(poly(&f3, "x+2").divides(lcp_sum(&c, &e).unwrap().poly()));
    assert_eq!(fc_lcp(&c, &e), Ok(false));
    assert!(!c.build_code().is_complementary(&e.build_code()));
}

fn task(family: Family, q: u32, m: usize) -> SearchTask {
    SearchTask {
        family,
        field: gf(q),
        m,
        mode: Mode::Exhaustive,
        distance_budget: DEFAULT_BUDGET,
    }
}

#[test]
fn searches() {
    let r = run_search(&task(Family::FcLcd, 3, 4)).unwrap();
    assert!(r.best_distance.unwrap() >= 6);
    assert!(r.verified);
    let r = run_search(&task(Family::DcHullOne, 2, 5)).unwrap();
    assert_eq!(r.best_distance, Some(4));
    let r = run_search(&task(Family::DcHullOne, 3, 4)).unwrap();
    assert!(r.witness.is_empty());
    let r = run_search(&SearchTask {
        mode: Mode::Random {
            trials: 50,
            seed: 3,
        },
        ..task(Family::DcHullOne, 3, 4)
    })
    .unwrap();
    assert!(r.witness.is_empty());
}

#[test]
fn reproduced_rows() {
    let row = |t: u8, m: usize| {
        reproduce_table(t, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .find(|r| r.m == m)
            .unwrap()
    };
    let r = row(1, 7);
    assert_eq!(
        (r.status, r.observed_d, r.hull),
        (RowStatus::Pass, Some(4), Some(0))
    );
    let r = row(3, 7);
    assert_eq!((r.status, r.observed_d), (RowStatus::Pass, Some(5)));
    let r = row(5, 8);
    assert_eq!(
        (r.status, r.observed_d, r.hull),
        (RowStatus::Pass, Some(7), Some(1))
    );
}
