use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qhodge::field::gcd::{cyclotomic, poly_gcd};
use qhodge::field::linalg::*;
use qhodge::field::{Field, Matrix, Poly, PrimeField, RatFunc, SymbolicField};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn rpow(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Independent evaluation of a Laurent polynomial at rational (q, z).
fn eval(p: &Poly, q: &BigRational, z: &BigRational) -> BigRational {
    p.terms().iter().fold(BigRational::zero(), |acc, (e, c)| acc + BigRational::from_integer(c.clone()) * rpow(q, e[0]) * rpow(z, e[1]))
}

fn eval_rf(x: &RatFunc, q: &BigRational, z: &BigRational) -> BigRational {
    eval(x.num(), q, z) / eval(x.den(), q, z)
}

fn laurent() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((-3i32..4, -2i32..3), -4i64..5), 0..5)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|((a, b), c)| ([a, b], BigInt::from(c))).collect()))
}

fn polynomial() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0i32..4, 0i32..3), -4i64..5), 0..5)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|((a, b), c)| ([a, b], BigInt::from(c))).collect()))
}

/// Removes the monomial content (monomials are units of the Laurent ring).
fn strip_monomial(p: &Poly) -> Poly {
    let m = p.min_exp();
    p.shift(&[-m[0], -m[1]])
}

/// Rank modulo p by plain Gaussian elimination on u128.
fn naive_rank_mod(m: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u128>> = m.iter().map(|r| r.iter().map(|&x| x as u128).collect()).collect();
    let p = p as u128;
    let pw = |mut b: u128, mut e: u128| {
        let mut r = 1u128;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let (rows, cols) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] % p != 0) else { continue };
        a.swap(r, piv);
        let inv = pw(a[r][c], p - 2);
        for i in 0..rows {
            if i != r && a[i][c] % p != 0 {
                let fct = a[i][c] * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p * p - fct * a[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn cyclotomic_products_give_x_m_minus_one() {
    for m in 1..=12u32 {
        let mut prod: Vec<BigInt> = vec![BigInt::one()];
        for d in (1..=m).filter(|d| m % d == 0) {
            let c = cyclotomic(d);
            let mut out = vec![BigInt::zero(); prod.len() + c.len() - 1];
            for (i, a) in prod.iter().enumerate() {
                for (j, b) in c.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            prod = out;
        }
        let mut want = vec![BigInt::zero(); m as usize + 1];
        want[0] = BigInt::from(-1);
        want[m as usize] = BigInt::one();
        assert_eq!(prod, want, "m={m}");
    }
}

#[test]
fn symbolic_rank_of_low_rank_product() {
    let f = SymbolicField::gl();
    let (q, z) = (f.q(), f.z());
    let a = Matrix::from_rows(vec![vec![q.clone(), f.one()], vec![z.clone(), f.add(&q, &z)], vec![f.one(), f.mul(&q, &z)]]);
    let b = Matrix::from_rows(vec![vec![f.one(), q.clone(), z.clone(), f.zero()], vec![f.sub(&q, &f.one()), f.one(), f.one(), q.clone()]]);
    let m = mat_mul(&f, &a, &b);
    assert_eq!(rank(&f, &m), 2);
    assert_eq!(kernel(&f, &m).cols, 2);
    assert!(is_zero_matrix(&f, &mat_mul(&f, &m, &kernel(&f, &m))));
    let mr = modular_rank(&m, qhodge::field::SymMode::Gl, 7, 3);
    assert_eq!(mr.rank, 2);
    assert_eq!(mr.agreeing, 3);
}

#[test]
fn symbolic_inverse_and_solve() {
    let f = SymbolicField::gl();
    let (q, z) = (f.q(), f.z());
    let m = Matrix::from_rows(vec![vec![q.clone(), f.one()], vec![f.one(), z.clone()]]);
    let inv = inverse(&f, &m).unwrap();
    assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
    let b = Matrix::from_rows(vec![vec![f.one()], vec![q.clone()]]);
    let x = solve(&f, &m, &b).unwrap();
    assert_eq!(mat_mul(&f, &m, &x), b);
}

#[test]
fn q_number_renders_in_descending_powers() {
    let f = SymbolicField::gl();
    let q = f.q();
    let qi = f.inv(&q).unwrap();
    let three = f.add(&f.add(&f.mul(&q, &q), &f.one()), &f.mul(&qi, &qi));
    assert_eq!(f.render(&three), "q^2 + 1 + q^-2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_ops_match_evaluation(a in laurent(), b in laurent(), qn in 2i64..6, zn in 1i64..5) {
        let (q, z) = (rat(qn, 3), rat(-zn, 2));
        prop_assert_eq!(eval(&a.add(&b), &q, &z), eval(&a, &q, &z) + eval(&b, &q, &z));
        prop_assert_eq!(eval(&a.sub(&b), &q, &z), eval(&a, &q, &z) - eval(&b, &q, &z));
        prop_assert_eq!(eval(&a.mul(&b), &q, &z), eval(&a, &q, &z) * eval(&b, &q, &z));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in polynomial(), b in polynomial()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
        let (ac, bc) = (strip_monomial(&a.mul(&c)), strip_monomial(&b.mul(&c)));
        let g = strip_monomial(&poly_gcd(&ac, &bc));
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&strip_monomial(&c)).is_some(), "common factor survives");
    }

    #[test]
    fn rational_functions_match_evaluation(a in laurent(), b in laurent(), c in laurent(), d in laurent()) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let x = RatFunc::new(a.clone(), b.clone());
        let y = RatFunc::new(c.clone(), d.clone());
        let (q, z) = (rat(7, 5), rat(3, 11));
        prop_assume!(!eval(&b, &q, &z).is_zero() && !eval(&d, &q, &z).is_zero());
        let (xv, yv) = (eval(&a, &q, &z) / eval(&b, &q, &z), eval(&c, &q, &z) / eval(&d, &q, &z));
        let s = x.add(&y);
        let m = x.mul(&y);
        if !eval(s.den(), &q, &z).is_zero() {
            prop_assert_eq!(eval_rf(&s, &q, &z), &xv + &yv);
        }
        if !eval(m.den(), &q, &z).is_zero() {
            prop_assert_eq!(eval_rf(&m, &q, &z), &xv * &yv);
        }
        // canonical form: equal values as rational functions give equal representations
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.sub(&x), RatFunc::zero());
    }

    #[test]
    fn prime_rank_matches_naive_elimination(seed in 0u64..1000, entries in prop::collection::vec(0u64..7, 20)) {
        let f = PrimeField::random_gl(seed);
        let rows: Vec<Vec<u64>> = entries.chunks(5).map(|r| r.to_vec()).collect();
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x as i64)).collect()).collect());
        let fr: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % f.p).collect()).collect();
        prop_assert_eq!(rank(&f, &m), naive_rank_mod(&fr, f.p));
        let k = kernel(&f, &m);
        prop_assert_eq!(k.cols + rank(&f, &m), 5);
        if k.cols > 0 {
            prop_assert!(is_zero_matrix(&f, &mat_mul(&f, &m, &k)));
        }
    }

    #[test]
    fn prime_field_inverses(seed in 0u64..1000, x in 1i64..1_000_000) {
        let f = PrimeField::random_gl(seed);
        let a = f.from_i64(x);
        prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
    }

    #[test]
    fn specialization_is_a_homomorphism(seed in 0u64..1000, a in laurent(), b in laurent()) {
        let pf = PrimeField::random_gl(seed);
        let sf = SymbolicField::gl();
        let (x, y) = (sf.from_laurent(&a), sf.from_laurent(&b));
        let (xs, ys) = (pf.specialize(&x).unwrap(), pf.specialize(&y).unwrap());
        prop_assert_eq!(pf.specialize(&sf.mul(&x, &y)).unwrap(), pf.mul(&xs, &ys));
        prop_assert_eq!(pf.specialize(&sf.add(&x, &y)).unwrap(), pf.add(&xs, &ys));
        prop_assert_eq!(pf.from_laurent(&a), xs);
    }
}
