use proptest::prelude::*;
use qhodge::charring::poincare_product;
use qhodge::complex::*;
use qhodge::field::linalg::*;
use qhodge::field::{Field, PrimeField, SymbolicField};
use qhodge::spectral::Tau;

mod common;
use common::{antisym_oracle, antisym_oracle_columns};

const BOTH: [Tau; 2] = [Tau::Plus, Tau::Minus];

fn sym2(levels: usize) -> Calculi<SymbolicField> {
    Calculi::build(&SymbolicField::gl(), 2, levels, true).unwrap()
}

#[test]
fn antisymmetrizer_recursion_matches_dense_oracle_symbolic() {
    let f = SymbolicField::gl();
    let c = sym2(3);
    for tau in BOTH {
        let t = c.tower(tau);
        for sign in BOTH {
            let sig = &t.op(sign).mat;
            for k in 1..=3 {
                assert_eq!(t.antisym_matrix(&f, sign, k), antisym_oracle(&f, sig, 4, k), "tau {tau:?} sign {sign:?} k {k}");
            }
        }
    }
}

#[test]
fn antisymmetrizer_recursion_matches_dense_oracle_k4_prime() {
    let f = PrimeField::random_gl(11);
    let c = Calculi::build(&f, 2, 1, false).unwrap();
    let t = c.tower(Tau::Plus);
    for sign in BOTH {
        assert_eq!(t.antisym_matrix(&f, sign, 4), antisym_oracle(&f, &t.op(sign).mat, 4, 4), "sign {sign:?}");
    }
}

#[test]
fn column_oracle_matches_dense_oracle() {
    let f = PrimeField::random_gl(13);
    let c = Calculi::build(&f, 2, 1, false).unwrap();
    for sign in BOTH {
        let sig = &c.tower(Tau::Minus).op(sign).mat;
        for k in 1..=3 {
            assert_eq!(antisym_oracle_columns(&f, sig, 4, k), antisym_oracle(&f, sig, 4, k), "k {k}");
        }
    }
}

#[test]
fn breadth_first_sum_matches_recursion_k4() {
    let f = SymbolicField::gl();
    let c = sym2(1);
    for tau in BOTH {
        for sign in BOTH {
            let t = c.tower(tau);
            assert_eq!(t.antisym_matrix(&f, sign, 4), antisymmetrizer_bruteforce(&f, t, sign, 4));
        }
    }
}

#[test]
fn shuffle_fast_paths_match_enumeration() {
    let f = PrimeField::random_gl(5);
    let c = Calculi::build(&f, 2, 1, false).unwrap();
    let t = c.tower(Tau::Minus);
    for (i, j) in [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3)] {
        let amb = 4usize.pow((i + j) as u32);
        for col in (0..amb).step_by(7) {
            let mut v = vec![f.zero(); amb];
            v[col] = f.one();
            v[(col * 5 + 3) % amb] = f.q();
            for sign in BOTH {
                assert_eq!(t.shuffle(&f, sign, i, j, &v), t.shuffle_enumerated(&f, sign, i, j, &v), "({i},{j})");
            }
        }
    }
}

#[test]
fn shuffle_count_is_binomial() {
    for (i, j, n) in [(1, 1, 2), (2, 2, 6), (1, 3, 4), (3, 2, 10)] {
        let s = shuffle_inverses(i, j);
        assert_eq!(s.len(), n);
        for pi in &s {
            let (w, sgn) = reduced_word(pi);
            assert_eq!(sgn, if w.len() % 2 == 0 { 1 } else { -1 });
        }
    }
}

/// A_{i+j} = (A_i ⊗ A_j) B_{i,j}.
#[test]
fn antisymmetrizer_factors_through_shuffles() {
    let f = PrimeField::random_gl(9);
    let c = Calculi::build(&f, 2, 1, false).unwrap();
    let t = c.tower(Tau::Plus);
    for (i, j) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let k = i + j;
        let amb = 4usize.pow(k as u32);
        let ai = t.antisym_matrix(&f, Tau::Plus, i);
        let aj = t.antisym_matrix(&f, Tau::Plus, j);
        let prod = kron(&f, &ai, &aj);
        let ak = t.antisym_matrix(&f, Tau::Plus, k);
        for col in 0..amb {
            let mut v = vec![f.zero(); amb];
            v[col] = f.one();
            let b = t.shuffle(&f, Tau::Plus, i, j, &v);
            assert_eq!(mat_vec(&f, &prod, &b), ak.col(col), "({i},{j}) col {col}");
        }
    }
}

#[test]
fn quotient_maps_are_sound() {
    let f = SymbolicField::gl();
    let c = sym2(4);
    for tau in BOTH {
        let t = c.tower(tau);
        for k in 2..=4 {
            let l = t.level(k).unwrap();
            let a = t.antisym_matrix(&f, Tau::Plus, k);
            let ker = kernel(&f, &a);
            assert!(is_zero_matrix(&f, &mat_mul(&f, &l.proj, &ker)), "proj kills ker A_{k}");
            let sel = l.proj.select_cols(&l.reps);
            assert_eq!(sel, identity(&f, l.dim));
            // the class map factors through A_k: proj = X·A_k for some X
            assert_eq!(rank(&f, &a.vcat(&l.proj)), rank(&f, &a));
        }
    }
}

#[test]
fn exterior_dimensions_n2_both_signs() {
    let c = sym2(5);
    for tau in BOTH {
        assert_eq!(c.tower(tau).dims(), vec![1, 4, 6, 4, 1, 0]);
        let minus: Vec<usize> = c.tower(tau).levels.iter().map(|l| l.rank_minus.unwrap()).collect();
        assert_eq!(minus, vec![1, 4, 6, 4, 1, 0]);
    }
}

#[test]
fn kernels_of_both_antisymmetrizers_agree() {
    let f = SymbolicField::gl();
    let c = sym2(1);
    for tau in BOTH {
        let t = c.tower(tau);
        for k in 2..=3 {
            let kp = kernel(&f, &t.antisym_matrix(&f, Tau::Plus, k));
            let am = t.antisym_matrix(&f, Tau::Minus, k);
            assert!(is_zero_matrix(&f, &mat_mul(&f, &am, &kp)), "k {k}");
        }
    }
}

#[test]
fn exterior_dimensions_n3_three_primes() {
    for seed in [1u64, 2, 3] {
        let f = PrimeField::random_gl(seed);
        let c = Calculi::build(&f, 3, 3, true).unwrap();
        for tau in BOTH {
            assert_eq!(c.tower(tau).dims(), vec![1, 9, 36, 84]);
            assert!(c.tower(tau).levels.iter().all(|l| l.rank_minus == Some(l.dim)));
        }
    }
}

#[test]
fn wedge_is_associative_with_unit() {
    let f = SymbolicField::gl();
    let c = sym2(3);
    let one = vec![f.one()];
    let a: Vec<_> = (0..4).map(|i| f.from_i64(i as i64 + 1)).collect();
    let b = vec![f.q(), f.zero(), f.z(), f.one()];
    let e = vec![f.zero(), f.one(), f.neg(&f.q()), f.from_i64(2)];
    for tau in BOTH {
        assert_eq!(c.wedge(tau, 0, &one, 1, &a).unwrap(), a);
        assert_eq!(c.wedge(tau, 1, &a, 0, &one).unwrap(), a);
        let ab = c.wedge(tau, 1, &a, 1, &b).unwrap();
        let be = c.wedge(tau, 1, &b, 1, &e).unwrap();
        assert_eq!(c.wedge(tau, 2, &ab, 1, &e).unwrap(), c.wedge(tau, 1, &a, 2, &be).unwrap());
    }
}

#[test]
fn omega0_is_closed_and_coclosed() {
    let f = SymbolicField::gl();
    let c = sym2(3);
    for tau in BOTH {
        let w = c.omega0_coords(tau);
        assert!(c.wedge(tau, 1, &w, 1, &w).unwrap().iter().all(|x| f.is_zero(x)), "omega0^omega0 = 0");
        assert!(mat_vec(&f, &c.differential(tau, 1).unwrap(), &w).iter().all(|x| f.is_zero(x)));
        for sign in BOTH {
            assert!(c.codifferential_vec(tau, sign, 1, &w).unwrap().iter().all(|x| f.is_zero(x)));
        }
    }
}

#[test]
fn degree_one_spectrum() {
    let f = SymbolicField::gl();
    let c = sym2(2);
    let q = f.q();
    let qi = f.inv(&q).unwrap();
    let diff = f.sub(&q, &qi);
    let e = f.neg(&f.mul(&f.mul(&diff, &diff), &f.add(&q, &qi)));
    for tau in BOTH {
        for sign in BOTH {
            let lap = c.laplacian(tau, sign, 1).unwrap();
            assert_eq!(kernel(&f, &lap).cols, 1);
            let shifted = mat_sub(&f, &lap, &mat_scale(&f, &identity(&f, 4), &e));
            assert_eq!(rank(&f, &shifted), 1, "eigenvalue multiplicity 3");
            assert!(is_zero_matrix(&f, &mat_mul(&f, &lap, &shifted)));
        }
    }
}

#[test]
fn hodge_table_n2() {
    let c = sym2(5);
    for tau in BOTH {
        let rows: Vec<HodgeRow> = (0..=4).map(|k| c.hodge_check(tau, k).unwrap()).collect();
        assert_eq!(rows.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![1, 4, 6, 4, 1]);
        assert_eq!(rows.iter().map(|r| r.rank_d).collect::<Vec<_>>(), vec![0, 3, 3, 0, 0]);
        assert_eq!(rows.iter().map(|r| r.dim_coinvariant as i64).collect::<Vec<_>>(), poincare_product(2));
        for r in &rows {
            assert!(r.hodge_ok && r.harmonic_is_coinvariant && r.spectrum_ok, "{r:?}");
            assert_eq!(r.dim_harmonic_plus, r.dim_coinvariant);
            assert_eq!(r.dim_harmonic_minus, r.dim_coinvariant);
        }
    }
}

#[test]
fn structural_identities_n2() {
    let c = sym2(5);
    let items = c.structural_checks(4).unwrap();
    let failing: Vec<_> = items.iter().filter(|i| !i.ok).map(|i| i.name.clone()).collect();
    assert!(failing.is_empty(), "{failing:?}");
    assert!(items.len() > 40);
}

#[test]
fn contraction_associativity_n2() {
    let c = sym2(3);
    for tau in BOTH {
        for sign in BOTH {
            assert!(c.contraction_associative(tau, sign, 1, 1, 2).unwrap());
            assert!(c.contraction_associative(tau, sign, 1, 2, 3).unwrap());
            assert!(c.contraction_associative(tau, sign, 2, 1, 3).unwrap());
        }
    }
}

#[test]
fn duality_n2() {
    let c = sym2(4);
    for tau in BOTH {
        for sign in BOTH {
            for k in 0..=3 {
                let r = c.duality_check(tau, sign, k).unwrap();
                assert!(r.adjoint_ok && r.nondegenerate, "{r:?}");
            }
        }
    }
}

#[test]
fn weak_isomorphism_n2_n3() {
    let c = sym2(2);
    let r = c.weak_isomorphism_check().unwrap();
    assert!(r.ok, "{r:?}");
    let f = PrimeField::random_gl(4);
    let c3 = Calculi::build(&f, 3, 2, false).unwrap();
    assert!(c3.weak_isomorphism_check().unwrap().ok);
}

#[test]
fn mixed_braid_relations() {
    let c = sym2(1);
    for a in BOTH {
        for b in BOTH {
            for e in BOTH {
                assert!(c.mixed_braid_holds(a, b, e), "{a:?}{b:?}{e:?}");
            }
        }
    }
}

#[test]
fn n3_coinvariants_match_product_formula() {
    let f = PrimeField::random_gl(21);
    let c = Calculi::build(&f, 3, 3, false).unwrap();
    let prod = poincare_product(3);
    for tau in BOTH {
        for k in 0..=3 {
            assert_eq!(c.coinvariant_subspace(tau, k).unwrap().cols as i64, prod[k], "k {k}");
        }
        for k in 0..=2 {
            let r = c.hodge_check(tau, k).unwrap();
            assert!(r.hodge_ok && r.harmonic_is_coinvariant && r.spectrum_ok, "{r:?}");
        }
    }
}

#[test]
fn sl2_field_gives_same_table() {
    let c = Calculi::build(&SymbolicField::sl(2), 2, 5, false).unwrap();
    for tau in BOTH {
        let co: Vec<usize> = (0..=4).map(|k| c.coinvariant_subspace(tau, k).unwrap().cols).collect();
        assert_eq!(co, vec![1, 1, 0, 1, 1]);
        assert!((0..=4).all(|k| c.hodge_check(tau, k).unwrap().hodge_ok));
    }
}

#[test]
fn level_errors() {
    let c = sym2(2);
    assert!(matches!(c.differential(Tau::Plus, 2), Err(ComplexError::LevelNotBuilt { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Ranks over random prime specializations agree with the symbolic ranks.
    #[test]
    fn specialization_preserves_ranks(seed in 0u64..10_000) {
        let f = PrimeField::random_gl(seed);
        let c = Calculi::build(&f, 2, 5, false).unwrap();
        for tau in BOTH {
            prop_assert_eq!(c.tower(tau).dims(), vec![1, 4, 6, 4, 1, 0]);
            let rd: Vec<usize> = (0..=4).map(|k| { let d = c.differential(tau, k).unwrap(); if d.rows == 0 { 0 } else { rank(&f, &d) } }).collect();
            prop_assert_eq!(rd, vec![0, 3, 3, 0, 0]);
        }
    }

    /// d is a graded derivation of the wedge product and squares to zero.
    #[test]
    fn graded_leibniz_rule(seed in 0u64..10_000, av in prop::collection::vec(0u64..50, 4), bv in prop::collection::vec(0u64..50, 6)) {
        let f = PrimeField::random_gl(seed);
        let c = Calculi::build(&f, 2, 4, false).unwrap();
        let a: Vec<_> = av.iter().map(|&x| f.from_i64(x as i64)).collect();
        let b: Vec<_> = bv.iter().map(|&x| f.from_i64(x as i64)).collect();
        for tau in BOTH {
            let ab = c.wedge(tau, 1, &a, 2, &b).unwrap();
            let lhs = mat_vec(&f, &c.differential(tau, 3).unwrap(), &ab);
            let da = mat_vec(&f, &c.differential(tau, 1).unwrap(), &a);
            let db = mat_vec(&f, &c.differential(tau, 2).unwrap(), &b);
            let t1 = c.wedge(tau, 2, &da, 2, &b).unwrap();
            let t2 = c.wedge(tau, 1, &a, 3, &db).unwrap();
            let rhs: Vec<_> = t1.iter().zip(&t2).map(|(x, y)| f.sub(x, y)).collect();
            prop_assert_eq!(lhs, rhs);
            let ddb = mat_vec(&f, &c.differential(tau, 3).unwrap(), &db);
            prop_assert!(ddb.iter().all(|x| f.is_zero(x)));
        }
    }

    /// ⟨dρ, ζ⟩ = ⟨ρ, ∂ζ⟩ on random combinations (not just basis elements).
    #[test]
    fn random_adjointness(seed in 0u64..10_000, rv in prop::collection::vec(0u64..50, 4), zv in prop::collection::vec(0u64..50, 6)) {
        let f = PrimeField::random_gl(seed);
        let c = Calculi::build(&f, 2, 3, false).unwrap();
        let rho: Vec<_> = rv.iter().map(|&x| f.from_i64(x as i64)).collect();
        let zeta: Vec<_> = zv.iter().map(|&x| f.from_i64(x as i64)).collect();
        for tau in BOTH {
            for sign in BOTH {
                let drho = mat_vec(&f, &c.differential(tau, 1).unwrap(), &rho);
                let rl = c.lift(tau, 2, &drho).unwrap();
                let zl = c.lift(tau.flip(), 2, &zeta).unwrap();
                let (_, _, lhs) = c.contract(sign, tau, 2, &rl, 2, &zl).unwrap();
                let dz = c.codifferential_vec(tau.flip(), sign, 2, &zl).unwrap();
                let (_, _, rhs) = c.contract(sign, tau, 1, &c.lift(tau, 1, &rho).unwrap(), 1, &c.lift(tau.flip(), 1, &dz).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
