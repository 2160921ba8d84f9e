use num_rational::BigRational;
use proptest::prelude::*;
use qhodge::field::{Poly, RatFunc};
use qhodge::partition::{GenPartition, GroupSpec, Window};
use qhodge::spectral::*;

fn p(v: &[i32]) -> GenPartition {
    GenPartition::new(v.to_vec()).unwrap()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Direct evaluation of e^τ_λ at numeric q, z over ℚ, written from the defining
/// sum without any Laurent-polynomial machinery.
fn eigen_numeric(l: &GenPartition, tau: i32, q: &BigRational, z: &BigRational) -> BigRational {
    let n = l.len() as i64;
    let pw = |x: &BigRational, k: i64| -> BigRational {
        if k >= 0 {
            num_traits::pow(x.clone(), k as usize)
        } else {
            num_traits::pow(x.recip(), (-k) as usize)
        }
    };
    let qn: BigRational = (1..=n).map(|i| pw(q, n + 1 - 2 * i)).sum();
    let mut s = rat(0);
    for c in l.cells() {
        s += rat(c.sign as i64) * pw(q, tau as i64 * (n + 2 * c.content as i64));
    }
    let inner = &qn + rat(tau as i64) * (q - q.recip()) * s;
    pw(z, -(tau as i64) * l.size()) * inner - qn
}

fn eval_q_z(p: &Poly, q: &BigRational, z: &BigRational) -> BigRational {
    RatFunc::from_poly(p.clone()).eval_rational(&[q.clone(), z.clone()]).unwrap()
}

#[test]
fn eigen_a_single_column_matches_closed_form() {
    for n in 2..5usize {
        let col = GenPartition::rectangle(n, 1);
        let got = eigen_a_poly(&col, Tau::Plus);
        // (q² z^{−N} − 1)[N]
        let want = Poly::monomial([2, -(n as i32)], 1.into()).sub(&Poly::one()).mul(&qnumber_poly(n as i64));
        assert_eq!(got, want);
    }
}

#[test]
fn eigen_a_single_box_matches_closed_form() {
    for n in 2..5usize {
        let mut v = vec![0; n];
        v[0] = 1;
        let got = eigen_a_poly(&p(&v), Tau::Plus);
        let ni = n as i32;
        let qn = qnumber_poly(n as i64);
        let inner = qn.add(&Poly::var_pow(0, ni + 1)).sub(&Poly::var_pow(0, ni - 1));
        let want = inner.shift(&[0, -1]).sub(&qn);
        assert_eq!(got, want);
    }
}

#[test]
fn wrong_family_rejected() {
    let sp = GroupSpec::from_name("spq", 4).unwrap();
    assert!(matches!(eigen_a(&p(&[1, 0, 0, 0]), Tau::Plus, &sp), Err(SpectralError::WrongFamily(_))));
    assert!(matches!(eigen_bcd(&p(&[1, 0]), &GroupSpec::gl(2)), Err(SpectralError::WrongFamily(_))));
}

#[test]
fn sp4_single_box() {
    let sp = GroupSpec::from_name("spq", 4).unwrap();
    let got = eigen_bcd(&p(&[1, 0, 0, 0]), &sp).unwrap();
    let qq = Poly::var_pow(0, 1).sub(&Poly::var_pow(0, -1));
    let want = qq.mul(&qq).mul(&qnumber_poly(5)).neg().shift(&[0, 1]);
    assert_eq!(got, want);
    let ev = Evaluator::At(rat(1));
    assert_eq!(ev.eval(&got), ev.eval(&qq.mul(&qq).mul(&qnumber_poly(5)).neg()));
}

#[test]
fn gl2_z_equals_q_column_pair_vanishes() {
    // With z = q the pair ((1,1),(1,1)) gives (q⁻²z²−1)[2] + (q²z⁻²−1)[2] = 0.
    let e = eigen_a_poly(&p(&[1, 1]), Tau::Minus).add(&eigen_a_poly(&p(&[1, 1]), Tau::Plus));
    let at_z_q = e.remap(|x| [x[0] + x[1], 0]);
    assert!(at_z_q.is_zero());
    assert!(!e.is_zero());
}

#[test]
fn sl2_only_origin() {
    let params = SpectralParams::new(GroupSpec::sl(2), ZSpec::Symbolic);
    let s = zero_scan(&params, &Window::boxes(4), false).unwrap();
    assert_eq!(s.zeros, vec![(p(&[0, 0]), p(&[0, 0]))]);
}

#[test]
fn sl3_only_origin() {
    let params = SpectralParams::new(GroupSpec::sl(3), ZSpec::Symbolic);
    let s = zero_scan(&params, &Window::boxes(4), false).unwrap();
    assert_eq!(s.zeros, vec![(p(&[0, 0, 0]), p(&[0, 0, 0]))]);
}

#[test]
fn gl2_z_one_regular() {
    let params = SpectralParams::new(GroupSpec::gl(2), ZSpec::Value(rat(1)));
    let s = zero_scan(&params, &Window::boxes(6), false).unwrap();
    assert_eq!(s.zeros, vec![(p(&[0, 0]), p(&[0, 0]))]);
}

#[test]
fn gl2_symbolic_regular() {
    let params = SpectralParams::new(GroupSpec::gl(2), ZSpec::Symbolic);
    let s = zero_scan(&params, &Window::parts(3), false).unwrap();
    assert_eq!(s.zeros, vec![(p(&[0, 0]), p(&[0, 0]))]);
}

#[test]
fn gl2_root_of_unity_m2() {
    let g = GroupSpec::gl(2);
    let w = Window::parts(4);
    let s = zero_scan(&SpectralParams::new(g, ZSpec::RootOfUnity(2)), &w, false).unwrap();
    assert!(s.branches_agree);
    let mut want = predicted_root_of_unity_zeros(&g, 2, &w);
    let mut got = s.zeros.clone();
    want.sort();
    got.sort();
    assert_eq!(got, want);
    assert_eq!(got.len(), 25);
}

#[test]
fn gl_root_of_unity_other_orders() {
    for (n, m, b) in [(2usize, 1u32, 3i32), (2, 3, 3), (3, 2, 2)] {
        let g = GroupSpec::gl(n);
        let w = Window::parts(b);
        let s = zero_scan(&SpectralParams::new(g, ZSpec::RootOfUnity(m)), &w, false).unwrap();
        let mut want = predicted_root_of_unity_zeros(&g, m, &w);
        let mut got = s.zeros.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want, "N={n} m={m}");
    }
}

#[test]
fn o3_zero_set() {
    let o3 = GroupSpec::from_name("oq", 3).unwrap();
    for z in [1, -1] {
        let s = zero_scan(&SpectralParams::new(o3, ZSpec::Value(rat(z))), &Window::boxes(4), false).unwrap();
        let filtered = s.zeros_parity_filtered.clone().unwrap();
        let a = p(&[0, 0, 0]);
        let b = p(&[1, 1, 1]);
        let mut want = vec![(a.clone(), a.clone()), (b.clone(), b.clone())];
        let mut f = filtered;
        f.sort();
        want.sort();
        assert_eq!(f, want, "z={z}");
    }
}

#[test]
fn sp_and_so_only_origin_parity_filtered() {
    for (name, n) in [("spq", 4usize), ("soq", 3), ("soq", 4)] {
        let g = GroupSpec::from_name(name, n).unwrap();
        for z in [1, -1] {
            let s = zero_scan(&SpectralParams::new(g, ZSpec::Value(rat(z))), &Window::boxes(4), false).unwrap();
            let zero = GenPartition::zero(n);
            assert_eq!(s.zeros_parity_filtered.unwrap(), vec![(zero.clone(), zero)], "{name} {n} z={z}");
        }
    }
}

#[test]
fn determinant_sl_compatible_point_closed() {
    // GL with z^N = q²: evaluate through the SL substitution.
    let coeff = Poly::monomial([2, -2], 1.into()).sub(&Poly::one());
    assert!(Evaluator::Sl { n: 2 }.eval(&coeff).is_zero());
    let d = determinant_data(&GroupSpec::gl(2), Tau::Plus, &ZSpec::Symbolic).unwrap();
    assert!(!d.closed);
}

#[test]
fn gl3_prediction_matches_product() {
    let pr = cohomology_prediction(&GroupSpec::gl(3), Regime::Regular, None).unwrap();
    for d in &pr.degrees {
        assert_eq!(d.coinvariant_dim, d.product_coefficient);
    }
    assert_eq!(pr.degrees.last().unwrap().coinvariant_dim, 1);
    let ru = cohomology_prediction(&GroupSpec::gl(2), Regime::RootOfUnity { m: 2 }, None).unwrap();
    assert!(ru.laurent_factor.is_some());
}

#[test]
fn limit_origin() {
    let rep = limit_checks(&GenPartition::zero(3));
    assert!(rep.ok);
    assert_eq!(rep.closed_form, "0");
}

fn gen_partition(n: usize, lo: i32, hi: i32) -> impl Strategy<Value = GenPartition> {
    prop::collection::vec(lo..=hi, n).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        GenPartition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn codings_agree_random(l in gen_partition(3, -3, 3), mu in gen_partition(3, -3, 3)) {
        let e = eigen_a_poly(&l, Tau::Minus).add(&eigen_a_poly(&mu, Tau::Plus));
        prop_assert_eq!(e, f_lambda_mu(&l, &mu));
    }

    #[test]
    fn numeric_oracle(l in gen_partition(3, -3, 3), qn in 2i64..7, zn in -4i64..5) {
        prop_assume!(zn != 0);
        let (q, z) = (rat(qn), rat(zn));
        for (tau, t) in [(Tau::Plus, 1), (Tau::Minus, -1)] {
            prop_assert_eq!(eval_q_z(&eigen_a_poly(&l, tau), &q, &z), eigen_numeric(&l, t, &q, &z));
        }
    }

    #[test]
    fn recursion_holds(l in gen_partition(3, -4, 4), plus in any::<bool>()) {
        let tau = if plus { Tau::Plus } else { Tau::Minus };
        prop_assert!(recursion_check(&l, tau));
    }

    #[test]
    fn limit_identities(l in gen_partition(3, 0, 5)) {
        let rep = limit_checks(&l);
        prop_assert!(rep.ok, "{:?}", rep);
    }

    #[test]
    fn limit_shift_invariant(l in gen_partition(4, -3, 3)) {
        prop_assert_eq!(e_tilde(&l.shift(1), Tau::Plus), e_tilde(&l, Tau::Plus));
        prop_assert_eq!(e_tilde(&l, Tau::Plus), Some(e_tilde_closed_form(&l)));
    }

    #[test]
    fn z_one_first_order_limit(l in gen_partition(2, -3, 3), mu in gen_partition(2, -3, 3)) {
        let lim = first_order_limit_at_z_one(&l, &mu).unwrap();
        prop_assert_eq!(lim, rat(mu.size() - l.size()));
    }

    #[test]
    fn bcd_tau_symmetric(v in prop::collection::vec(0i32..3, 4)) {
        let mut v = v;
        v.sort_by(|a, b| b.cmp(a));
        let l = GenPartition::new(v).unwrap();
        let g = GroupSpec::from_name("spq", 4).unwrap();
        prop_assume!(g.admits(&l));
        let params = SpectralParams::new(g, ZSpec::Value(rat(1)));
        let r = regularity_value(&l, &l, &params).unwrap();
        prop_assert_eq!(r.e_minus, r.e_plus);
    }
}
