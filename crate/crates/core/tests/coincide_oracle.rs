#[path = "support/vertex_enum.rs"]
mod vertex_enum;

use kampen_core::coincide::{find_coincidences, pair_feasible, random_plmap, PLMap};
use kampen_core::simplicial::{boundary_of_simplex, k5, Simplex, SimplicialComplex};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `[f(v_0) … f(v_p) | −f(u_0) … −f(u_q)]` plus the two unit-sum rows.
fn system(k: &SimplicialComplex, f: &PLMap, s: &Simplex, t: &Simplex) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let m = f.dimension();
    let mut cols: Vec<Vec<BigRational>> = Vec::new();
    for &v in s.vertices() {
        let mut c = f.image(k.label(v)).unwrap().to_vec();
        c.extend([BigRational::one(), BigRational::zero()]);
        cols.push(c);
    }
    for &u in t.vertices() {
        let mut c: Vec<BigRational> = f.image(k.label(u)).unwrap().iter().map(|x| -x.clone()).collect();
        c.extend([BigRational::zero(), BigRational::one()]);
        cols.push(c);
    }
    let rows = (0..m + 2).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut rhs = vec![BigRational::zero(); m];
    rhs.extend([BigRational::one(), BigRational::one()]);
    (rows, rhs)
}

fn check_all_pairs(k: &SimplicialComplex, f: &PLMap) -> usize {
    let s = k.simplices();
    let mut hits = 0;
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            if !s[a].is_disjoint(&s[b]) {
                continue;
            }
            let got = pair_feasible(k, f, &s[a], &s[b]).unwrap();
            let (rows, rhs) = system(k, f, &s[a], &s[b]);
            let want = vertex_enum::lexicographic_min(&rows, &rhs);
            match (got, want) {
                (None, None) => {}
                (Some(w), Some(z)) => {
                    let mut joined = w.x.clone();
                    joined.extend(w.y.iter().cloned());
                    assert_eq!(joined, z, "lexicographic minimum differs");
                    assert!(w.verify(k, f));
                    hits += 1;
                }
                (got, want) => panic!("feasibility differs: {got:?} vs {want:?}"),
            }
        }
    }
    assert_eq!(find_coincidences(k, f, None).unwrap().len(), hits);
    hits
}

#[test]
fn k5_planar_drawings_agree_with_enumeration() {
    let k = k5();
    for seed in 0..25 {
        let f = random_plmap(&k, 2, seed, 9).unwrap();
        assert!(check_all_pairs(&k, &f) >= 1, "seed {seed}");
    }
}

#[test]
fn small_bounds_force_degenerate_cases() {
    // Coordinates in {−1, 0, 1}/1 give many collinear and coincident images.
    let k = boundary_of_simplex(3).unwrap();
    for seed in 0..40 {
        let f = random_plmap(&k, 2, seed, 1).unwrap();
        check_all_pairs(&k, &f);
    }
}

#[test]
fn maps_to_the_line_and_to_space() {
    let k = boundary_of_simplex(3).unwrap();
    for seed in 0..15 {
        check_all_pairs(&k, &random_plmap(&k, 1, seed, 5).unwrap());
        check_all_pairs(&k, &random_plmap(&k, 3, seed, 5).unwrap());
    }
}

#[test]
fn capped_search_is_a_filter() {
    let k = boundary_of_simplex(4).unwrap();
    let f = random_plmap(&k, 3, 11, 6).unwrap();
    let all = find_coincidences(&k, &f, None).unwrap();
    let capped = find_coincidences(&k, &f, Some(2)).unwrap();
    let expected: Vec<_> = all.iter().filter(|w| w.dimension_sum() <= 2).cloned().collect();
    assert_eq!(capped, expected);
}

#[test]
fn witness_records_round_trip() {
    let k = k5();
    let f = random_plmap(&k, 2, 3, 12).unwrap();
    for w in find_coincidences(&k, &f, None).unwrap() {
        let json = serde_json::to_string(&w.to_record(&k)).unwrap();
        let back = kampen_core::coincide::CoincidenceWitness::from_record(&k, &serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, w);
    }
}
