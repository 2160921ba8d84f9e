use proptest::prelude::*;
use qhodge::charring::*;
use qhodge::partition::GenPartition;
use std::collections::BTreeMap;

type Full = BTreeMap<Vec<i32>, i64>;

fn p(v: &[i32]) -> GenPartition {
    GenPartition::new(v.to_vec()).unwrap()
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Schur Laurent polynomial s_λ(x_1..x_n) by enumerating semistandard tableaux
/// of the shape λ − λ_n·(1^n) and shifting the weights back.
fn ssyt_schur(l: &[i32]) -> Full {
    let n = l.len();
    let shift = l[n - 1];
    let shape: Vec<usize> = l.iter().map(|&x| (x - shift) as usize).collect();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut filling = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; n];
    let mut out = Full::new();
    fn rec(idx: usize, cells: &[(usize, usize)], n: usize, filling: &mut Vec<Vec<usize>>, shift: i32, out: &mut Full) {
        if idx == cells.len() {
            let mut w = vec![shift; n];
            for &(r, c) in cells {
                w[filling[r][c]] += 1;
            }
            *out.entry(w).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { filling[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            filling[r][c] = v;
            rec(idx + 1, cells, n, filling, shift, out);
        }
    }
    rec(0, &cells, n, &mut filling, shift, &mut out);
    out
}

/// Expansion by repeatedly subtracting the Schur polynomial of the
/// lexicographically largest exponent.
fn subtract_dominant(mut chi: Full) -> Vec<(Vec<i32>, i64)> {
    chi.retain(|_, c| *c != 0);
    let mut out = Vec::new();
    while let Some((top, &c)) = chi.iter().next_back() {
        let top = top.clone();
        assert!(top.windows(2).all(|w| w[0] >= w[1]), "leading exponent {top:?} is not dominant");
        for (e, m) in ssyt_schur(&top) {
            *chi.entry(e).or_insert(0) -= c * m;
        }
        chi.retain(|_, x| *x != 0);
        out.push((top, c));
    }
    out
}

/// Character of Λ^k(1 ⊕ ad) by summing over k-subsets of the N² weights e_i − e_j.
fn exterior_by_subsets(n: usize, k: usize) -> Full {
    let weights: Vec<Vec<i32>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (0..n).map(|t| (t == i) as i32 - (t == j) as i32).collect()))
        .collect();
    let mut out = Full::new();
    let m = weights.len();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut s = vec![0; n];
        for (b, w) in weights.iter().enumerate() {
            if mask & (1 << b) != 0 {
                for t in 0..n {
                    s[t] += w[t];
                }
            }
        }
        *out.entry(s).or_insert(0) += 1;
    }
    out
}

fn decomp_vec(d: &CorepDecomp) -> Vec<(Vec<i32>, i64)> {
    let mut v: Vec<_> = d.parts.iter().map(|(l, m)| (l.parts().to_vec(), *m)).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<(Vec<i32>, i64)>) -> Vec<(Vec<i32>, i64)> {
    v.sort();
    v
}

#[test]
fn ad_character_n2_terms() {
    let chi = ad_character(2).to_full();
    let want: Full = [(vec![1, -1], 1), (vec![-1, 1], 1), (vec![0, 0], 2)].into_iter().collect();
    assert_eq!(chi, want);
    assert_eq!(decomp_vec(&schur_expand(&ad_character(2)).unwrap()), vec![(vec![0, 0], 1), (vec![1, -1], 1)]);
    assert_eq!(decomp_vec(&schur_expand(&ad_character(3)).unwrap()), vec![(vec![0, 0, 0], 1), (vec![1, 0, -1], 1)]);
}

#[test]
fn exterior_power_matches_subset_expansion() {
    for (n, kmax) in [(2usize, 4usize), (3, 5)] {
        for k in 0..=kmax {
            let got = exterior_power(&ad_character(n), k as i64).unwrap().to_full();
            assert_eq!(got, exterior_by_subsets(n, k), "N={n} k={k}");
        }
    }
}

#[test]
fn schur_expansion_matches_subtract_dominant_oracle() {
    for (n, kmax) in [(2usize, 4usize), (3, 5)] {
        for k in 0..=kmax {
            let chi = exterior_by_subsets(n, k);
            let got = decomp_vec(&schur_expand(&SymLaurent::from_full(n, &chi).unwrap()).unwrap());
            assert_eq!(got, sorted(subtract_dominant(chi)), "N={n} k={k}");
        }
    }
}

#[test]
fn pieri_example() {
    let s1 = SymLaurent::from_full(2, &ssyt_schur(&[1, 0])).unwrap();
    let d = schur_expand(&s1.mul(&s1)).unwrap();
    assert_eq!(decomp_vec(&d), vec![(vec![1, 1], 1), (vec![2, 0], 1)]);
}

#[test]
fn blocks_dimensions_and_coinvariants() {
    for n in 2..=3usize {
        let prod = poincare_product(n);
        let mut euler = 0;
        for k in 0..=n * n {
            let b = blocks(n, k).unwrap();
            assert_eq!(b.dim, binomial((n * n) as i64, k as i64), "N={n} k={k}");
            assert_eq!(b.decomposition.dim(), b.dim);
            assert_eq!(b.trivial_multiplicity, prod[k], "N={n} k={k}");
            euler += if k % 2 == 0 { b.trivial_multiplicity } else { -b.trivial_multiplicity };
        }
        assert_eq!(euler, 0);
    }
    assert_eq!(poincare_product(2), vec![1, 1, 0, 1, 1]);
    let b = blocks(2, 2).unwrap();
    assert_eq!(decomp_vec(&b.decomposition), vec![(vec![1, -1], 2)]);
    assert_eq!(blocks(3, 9).unwrap().trivial_multiplicity, 1);
    let b3 = blocks(2, 3).unwrap();
    assert_eq!(decomp_vec(&b3.decomposition), vec![(vec![0, 0], 1), (vec![1, -1], 1)]);
}

#[test]
fn poincare_product_n3_by_hand() {
    // (1+t)(1+t^3)(1+t^5)
    let mut c = vec![0i64; 10];
    for a in [0, 1] {
        for b in [0, 3] {
            for e in [0, 5] {
                c[a + b + e] += 1;
            }
        }
    }
    assert_eq!(poincare_product(3), c);
}

#[test]
fn not_a_character_is_rejected() {
    let mut chi = Full::new();
    chi.insert(vec![1, 0], -1);
    chi.insert(vec![0, 1], -1);
    assert!(schur_expand(&SymLaurent::from_full(2, &chi).unwrap()).is_err());
}

fn gen_partition(n: usize, lo: i32, hi: i32) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(lo..=hi, n).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_dimension_counts_tableaux(l in gen_partition(3, -2, 3)) {
        let count: i64 = ssyt_schur(&l).values().sum();
        prop_assert_eq!(weyl_dim(&p(&l)), count);
    }

    #[test]
    fn products_expand_nonnegatively(l in gen_partition(3, -1, 2), m in gen_partition(3, -1, 2)) {
        let a = SymLaurent::from_full(3, &ssyt_schur(&l)).unwrap();
        let b = SymLaurent::from_full(3, &ssyt_schur(&m)).unwrap();
        let prod = a.mul(&b);
        let d = schur_expand(&prod).unwrap();
        prop_assert!(d.parts.iter().all(|(_, k)| *k > 0));
        prop_assert_eq!(d.dim(), weyl_dim(&p(&l)) * weyl_dim(&p(&m)));
        prop_assert_eq!(decomp_vec(&d), sorted(subtract_dominant(prod.to_full())));
    }

    #[test]
    fn single_schur_round_trips(l in gen_partition(2, -3, 3)) {
        let d = schur_expand(&SymLaurent::from_full(2, &ssyt_schur(&l)).unwrap()).unwrap();
        prop_assert_eq!(decomp_vec(&d), vec![(l.clone(), 1)]);
    }
}
