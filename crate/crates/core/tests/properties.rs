#[path = "support/arith.rs"]
mod arith;

use std::sync::Arc;

use kampen_core::charclass::binomial_is_odd;
use kampen_core::gf2::{BitMatrix, BitVec, Coefficients, PolyRing, SpecialKRing, TruncatedPoly};
use kampen_core::lambda::{
    atiyah_bound, chern_from_lambda, gamma_direct, gamma_via_chern, lambda_power, CoeffRing, LambdaElement, LinePoly,
};
use kampen_core::simplicial::{verify_cover_hypothesis, CoverFamily, Simplex, SimplicialComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<u8>>> {
    (1usize..12, 1usize..12).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(0u8..2, c), r))
}

/// Rank by elimination on plain bytes.
fn dense_rank(rows: &[Vec<u8>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
            m.swap(rank, p);
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[c] == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

proptest! {
    #[test]
    fn rank_nullity_and_kernel(rows in matrix()) {
        let a = BitMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(a.rank(), dense_rank(&rows));
        prop_assert_eq!(a.rank(), a.transpose().rank());
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), a.cols());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_recovers_consistent_systems(rows in matrix(), seed in any::<u64>()) {
        let a = BitMatrix::from_rows(&rows).unwrap();
        let x0 = BitVec::from_bools(&(0..a.cols()).map(|i| (seed >> (i % 64)) & 1 == 1).collect::<Vec<_>>());
        let b = a.mul_vec(&x0).unwrap();
        let x = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn series_inverse_is_inverse(coeffs in prop::collection::vec(-20i64..20, 1..9), f in 1u32..6, domain in 0u8..3) {
        let coefficients = match domain {
            0 => Coefficients::Gf2,
            1 => Coefficients::Integer,
            _ => Coefficients::ModPow2(f),
        };
        let ring = PolyRing::single(coefficients, "T", 1, 9);
        let mut c = coeffs.clone();
        c[0] = 1;
        let p = TruncatedPoly::from_coefficients(&ring, &c).unwrap();
        let q = p.series_invert().unwrap();
        prop_assert!(p.mul(&q).unwrap().is_one());
    }

    #[test]
    fn lucas_parity_matches_binomial(n in 0u64..300, k in 0u64..300) {
        prop_assert_eq!(binomial_is_odd(n, k), arith::binomial(n, k).is_odd());
    }

    #[test]
    fn complex_json_round_trip(facets in prop::collection::vec(prop::collection::btree_set(0u8..7, 1..4), 1..6)) {
        let labels: Vec<String> = (0..7).map(|i| format!("x{i}")).collect();
        let facets: Vec<Vec<String>> = facets.iter().map(|f| f.iter().map(|&v| labels[v as usize].clone()).collect()).collect();
        let k = SimplicialComplex::from_facets(&labels, &facets).unwrap();
        let back = SimplicialComplex::from_json(&k.to_json()).unwrap();
        prop_assert_eq!(&back, &k);
        for q in 0..3 {
            prop_assert!(k.skeleton(q).is_subcomplex_of(&k));
        }
    }
}

/// Direct reading of the hypothesis over nonempty simplices.
fn naive_cover_holds(k: &SimplicialComplex, members: &[Vec<bool>], m: usize, r: usize) -> bool {
    let s = k.simplices();
    members.iter().all(|row| {
        (0..s.len()).all(|a| {
            (0..s.len()).all(|b| {
                !s[a].is_disjoint(&s[b]) || s[a].card() + s[b].card() > m + r + 2 || row[a] || row[b]
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn cover_check_matches_definition(seed in prop::collection::vec(any::<bool>(), 60), m in 0usize..4, r in 1usize..3) {
        let k = kampen_core::simplicial::boundary_of_simplex(4).unwrap();
        let n = k.len();
        // Random families, biased towards small simplices being excluded.
        let members: Vec<Vec<bool>> = (0..r)
            .map(|j| (0..n).map(|i| seed[(i * 7 + j * 13) % seed.len()] || k.simplices()[i].card() >= 3).collect())
            .collect();
        let sets: Vec<Vec<Simplex>> = members
            .iter()
            .map(|row| k.simplices().iter().zip(row).filter(|(_, &b)| b).map(|(s, _)| s.clone()).collect())
            .collect();
        let family = CoverFamily::explicit(&k, &sets).unwrap();
        let got = verify_cover_hypothesis(&k, &family, m, r).unwrap();
        prop_assert_eq!(got.is_none(), naive_cover_holds(&k, &members, m, r));
        if let Some(v) = got {
            let (ia, ib) = (k.index_of(&v.first).unwrap(), k.index_of(&v.second).unwrap());
            prop_assert!(v.first.is_disjoint(&v.second));
            prop_assert!(v.first.card() + v.second.card() <= m + r + 2);
            prop_assert!(!members[v.j][ia] && !members[v.j][ib]);
        }
    }
}

fn line_ring() -> Arc<Vec<bool>> {
    Arc::new(vec![false, true, false])
}

fn line_sum(mults: &[i64], trivial: i64) -> LambdaElement<LinePoly> {
    let r = line_ring();
    let lines = mults
        .iter()
        .enumerate()
        .map(|(j, &a)| (LinePoly::generator(&r, j), a))
        .collect();
    LambdaElement::new(&LinePoly::integer(&r, 1), lines, trivial)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn chern_classes_are_multiplicative(a in prop::collection::vec(0i64..3, 3), b in prop::collection::vec(0i64..3, 3), n in 0i64..3, p in 0i64..3) {
        let (x, y) = (line_sum(&a, n), line_sum(&b, p));
        let (cx, cy, cxy) = (chern_from_lambda(&x).unwrap(), chern_from_lambda(&y).unwrap(), chern_from_lambda(&x.add(&y)).unwrap());
        for (i, c) in cxy.iter().enumerate() {
            let mut conv = LinePoly::integer(&line_ring(), 0);
            for (r, cr) in cx.iter().enumerate() {
                if let Some(cs) = cy.get(i.wrapping_sub(r)).filter(|_| r <= i) {
                    conv = conv.plus(&cr.value.times(&cs.value));
                }
            }
            prop_assert_eq!(&c.value, &conv);
        }
        let sum = cxy.iter().fold(LinePoly::integer(&line_ring(), 0), |acc, c| acc.plus(&c.value));
        prop_assert_eq!(sum, LinePoly::integer(&line_ring(), 1));
        let k = usize::try_from(x.rank()).unwrap();
        prop_assert_eq!(&cx[0].value, &lambda_power(&x, k));
    }

    #[test]
    fn gamma_routes_agree_and_gamma_is_exponential(a in prop::collection::vec(-2i64..3, 3), b in prop::collection::vec(-2i64..3, 3)) {
        let x = line_sum(&a, -a.iter().sum::<i64>());
        let y = line_sum(&b, -b.iter().sum::<i64>());
        let gx = gamma_via_chern(&x, 6).unwrap();
        prop_assert_eq!(&gx, &gamma_direct(&x, 6).unwrap());
        let gy = gamma_via_chern(&y, 6).unwrap();
        prop_assert_eq!(gamma_via_chern(&x.add(&y), 6).unwrap(), gx.mul(&gy));
    }
}

#[test]
fn atiyah_bound_matches_closed_form_and_is_monotone() {
    for d in 1..=24u32 {
        let mut last = 0;
        for f in 1..=10 {
            let n = atiyah_bound(d, f).unwrap();
            assert_eq!(u64::from(n), arith::atiyah_bound(u64::from(d), f), "d = {d}, f = {f}");
            assert!(n >= last);
            last = n;
        }
    }
}

#[test]
fn gamma_of_minus_multiple_of_nu_matches_closed_form() {
    for d in 1..=10u64 {
        for f in 1..=6u32 {
            let x = LambdaElement::nu(f).scale(-(d as i64 + 1));
            let g = gamma_direct(&x, 9).unwrap();
            let modulus = BigInt::from(1) << f;
            for i in 1..=9u64 {
                let want = arith::gamma_mu_coefficient(d, i).mod_floor(&modulus);
                let got = &g.coefficients()[i as usize];
                assert!(got.free_part().is_zero());
                assert_eq!(got.mu_part(), &want, "d = {d}, f = {f}, i = {i}");
            }
            assert_eq!(g.coefficients()[0], SpecialKRing::one(f));
        }
    }
}
