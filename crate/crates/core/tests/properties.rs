//! Algebraic invariants, via proptest and small exhaustive sweeps.

use proptest::prelude::*;
use qchull::code::{naive_min_distance, DEFAULT_BUDGET};
use qchull::fc::lcp_sum;
use qchull::*;

const ORDERS: [u32; 4] = [2, 3, 4, 5];

fn gf(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn coprime(q: u32, m: usize) -> bool {
    let p = qchull::gf::prime_power(q).unwrap().0 as usize;
    !m.is_multiple_of(p)
}

/// `(q, m)` with `gcd(m, q) = 1`.
fn field_and_m(max_m: usize) -> impl Strategy<Value = (u32, usize)> {
    (prop::sample::select(ORDERS.to_vec()), 1..=max_m)
        .prop_filter("m coprime to q", |&(q, m)| coprime(q, m))
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(any::<u16>(), n)
}

fn element(f: &Field, m: usize, raw: &[u16]) -> RingElement {
    let q = f.q() as u16;
    let p = Poly::new(f, raw.iter().take(m).map(|c| c % q).collect());
    RingElement::new(&p, m).unwrap()
}

fn matrix(f: &Field, rows: usize, cols: usize, raw: &[u16]) -> Matrix {
    let q = f.q() as u16;
    let v: Vec<Vec<Elem>> = (0..rows)
        .map(|i| (0..cols).map(|j| raw[i * cols + j] % q).collect())
        .collect();
    Matrix::from_rows(f, &v).unwrap()
}

#[test]
fn factorization_reconstructs_xm_minus_1() {
    for q in ORDERS {
        let f = gf(q);
        for m in (1..=30).filter(|&m| coprime(q, m)) {
            let fc = factor_xm_minus_1(m, &f).unwrap();
            assert_eq!(fc.product(), Poly::xm_minus_1(&f, m), "q={q} m={m}");
            for g in fc.all_factors() {
                assert!(g.is_irreducible(), "q={q} m={m} {g}");
                assert!(g.is_monic());
            }
            let linear = [
                Poly::parse(&f, "x+1").unwrap(),
                Poly::parse(&f, "x-1").unwrap(),
            ];
            for g in &fc.self_reciprocal {
                assert!(g.is_self_reciprocal());
                if !linear.contains(g) {
                    assert_eq!(g.degree().unwrap() % 2, 0, "q={q} m={m} {g}");
                }
            }
            for (g, h) in &fc.reciprocal_pairs {
                assert_eq!(&g.reciprocal().unwrap(), h);
                assert_ne!(g, h);
            }
        }
    }
}

#[test]
fn hull_one_construction_all_small_fields() {
    let mut fields: Vec<Field> = [2u32, 4, 5, 8, 9, 13, 16, 17, 25, 29, 37, 41, 49]
        .into_iter()
        .map(gf)
        .collect();
    fields.push(Field::new(2, 5, Some(vec![1, 0, 1, 0, 0, 1])).unwrap());
    for f in &fields {
        for m in (1..=20).filter(|&m| m % f.p() as usize != 0) {
            let s = dc_construct_hull_one(m, f).unwrap();
            assert_eq!(s.hull_dim(), 1, "q={} m={m}", f.q());
            assert_eq!(s.build_code().hull_dim(), 1, "q={} m={m}", f.q());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reciprocal_is_involutive_and_multiplicative(
        q in prop::sample::select(ORDERS.to_vec()),
        a in coeffs(7),
        b in coeffs(7),
    ) {
        let f = gf(q);
        let qq = q as u16;
        let mk = |raw: &[u16]| {
            let mut v: Vec<Elem> = raw.iter().map(|c| c % qq).collect();
            if v[0] == 0 {
                v[0] = 1;
            }
            Poly::new(&f, v)
        };
        let (a, b) = (mk(&a), mk(&b));
        let ra = a.reciprocal().unwrap();
        prop_assert_eq!(ra.reciprocal().unwrap(), a.monic());
        prop_assert_eq!((&a * &b).reciprocal().unwrap(), &ra * &b.reciprocal().unwrap());
    }

    #[test]
    fn conjugation_is_a_ring_involution((q, m) in field_and_m(12), a in coeffs(12), b in coeffs(12)) {
        let f = gf(q);
        let (a, b) = (element(&f, m, &a), element(&f, m, &b));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn rank_and_rref((q, rows, cols) in (prop::sample::select(ORDERS.to_vec()), 1usize..7, 1usize..7), raw in coeffs(36)) {
        let f = gf(q);
        let a = matrix(&f, rows, cols, &raw);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        let r = a.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.rank, r.rank);
        prop_assert_eq!(again.pivot_cols, r.pivot_cols);
    }

    #[test]
    fn circulant_is_a_homomorphism((q, m) in field_and_m(10), a in coeffs(10), b in coeffs(10)) {
        let f = gf(q);
        let (a, b) = (element(&f, m, &a), element(&f, m, &b));
        let (ca, cb) = (Matrix::circulant(&a), Matrix::circulant(&b));
        prop_assert_eq!(Matrix::circulant(&(&a * &b)), ca.mul(&cb).unwrap());
        let sum = Matrix::circulant(&(&a + &b));
        let mut expect = Matrix::zeros(&f, m, m);
        for i in 0..m {
            for j in 0..m {
                expect.set(i, j, f.add(ca.get(i, j), cb.get(i, j)));
            }
        }
        prop_assert_eq!(sum, expect);
        prop_assert_eq!(Matrix::circulant(&a.conj()), ca.transpose());
    }

    #[test]
    fn hull_is_shared_with_the_dual((q, rows, cols) in (prop::sample::select(ORDERS.to_vec()), 1usize..6, 2usize..9), raw in coeffs(48)) {
        let f = gf(q);
        let c = LinearCode::from_rows(&matrix(&f, rows, cols, &raw)).unwrap();
        let d = c.dual();
        prop_assert_eq!(c.hull_dim(), c.hull_dim_by_intersection());
        prop_assert_eq!(c.hull_dim(), d.hull_dim());
        prop_assert_eq!(c.k() + d.k(), cols);
        prop_assert!(d.dual().same_space(&c));
    }

    #[test]
    fn fast_distance_matches_naive((q, rows, cols) in (prop::sample::select(vec![2u32, 3, 4]), 1usize..8, 2usize..12), raw in coeffs(96)) {
        let f = gf(q);
        let c = LinearCode::from_rows(&matrix(&f, rows, cols, &raw)).unwrap();
        prop_assume!(c.k() > 0);
        prop_assert_eq!(c.min_distance(DEFAULT_BUDGET), naive_min_distance(&c));
    }

    #[test]
    fn qc_formula_matches_oracle((q, m) in field_and_m(8), l in 1usize..4, raw in coeffs(24)) {
        let f = gf(q);
        let gens: Vec<RingElement> = (0..l).map(|r| element(&f, m, &raw[r * 8..])).collect();
        let s = QcOneGenSpec::new(gens).unwrap();
        let c = s.build_code();
        prop_assert_eq!(c.k(), s.dimension());
        prop_assert_eq!(s.hull_dim_formula(), c.hull_dim());
        if s.is_lcd() {
            prop_assert!(s.lcd_necessary_selfreciprocal());
        }
    }

    #[test]
    fn fc_formula_matches_oracle((q, m) in field_and_m(8), a in coeffs(8), b in coeffs(8)) {
        let f = gf(q);
        let s = FourCirculantSpec::new(element(&f, m, &a), element(&f, m, &b)).unwrap();
        let c = s.build_code();
        prop_assert_eq!(c.k(), 2 * m);
        prop_assert_eq!(s.hull_dim_formula(), c.hull_dim());
        prop_assert_eq!(c.hull_dim() % 2, 0);
        let sum = s.hull_sum();
        prop_assert_eq!(sum.conj(), sum);
    }

    #[test]
    fn lcp_formulas_match_stacked_rank((q, m) in field_and_m(8), raw in coeffs(32)) {
        let f = gf(q);
        let e = |i: usize| element(&f, m, &raw[i * 8..]);
        let c = QcOneGenSpec::new(vec![e(0), e(1)]).unwrap();
        let d = QcOneGenSpec::new(vec![e(2), e(3)]).unwrap();
        if c.is_maximal() && d.is_maximal() {
            let oracle = c.build_code().is_complementary(&d.build_code());
            prop_assert_eq!(lcp_maximal_2qc(&c, &d).unwrap(), oracle);
        } else {
            prop_assert!(lcp_maximal_2qc(&c, &d).is_err());
        }
        let c = FourCirculantSpec::new(e(0), e(1)).unwrap();
        let d = FourCirculantSpec::new(e(2), e(3)).unwrap();
        let oracle = c.build_code().is_complementary(&d.build_code());
        prop_assert_eq!(fc_lcp(&c, &d).unwrap(), oracle);
        let s = lcp_sum(&c, &d).unwrap();
        prop_assert_eq!(s.conj(), s);
    }

    #[test]
    fn descriptors_round_trip((q, m) in field_and_m(9), a in coeffs(9), b in coeffs(9)) {
        let f = gf(q);
        let specs = [
            CodeSpec::Qc(QcOneGenSpec::new(vec![element(&f, m, &a), element(&f, m, &b)]).unwrap()),
            CodeSpec::Dc(DcSpec::new(element(&f, m, &a)).unwrap()),
            CodeSpec::Fc(FourCirculantSpec::new(element(&f, m, &a), element(&f, m, &b)).unwrap()),
        ];
        for s in specs {
            let json = s.descriptor().to_json();
            prop_assert_eq!(CodeDescriptor::from_json(&json).unwrap().parse().unwrap(), s);
        }
    }
}
