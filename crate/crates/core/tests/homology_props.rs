mod common;

use common::*;
use extremal_core::{
    boundary_matrix, face, make_complex, reduced_betti, reisner_cm_check, segment, Face, Field,
    SimplicialComplex, Violation,
};
use proptest::prelude::*;

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum())
                .collect()
        })
        .collect()
}

fn rp2() -> SimplicialComplex {
    let facets = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 2, 6],
        [1, 4, 5],
        [1, 5, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ];
    make_complex(&facets.map(|f| Face::new(f).unwrap())).unwrap()
}

/// Cohen-Macaulay by brute force: every link has no reduced homology below its dimension.
fn cm_oracle(sets: &[Set], gf2: bool) -> bool {
    let faces = all_faces(sets);
    faces.iter().all(|s| {
        let lk = link_of(&faces, s);
        let top = lk.iter().map(Vec::len).max().unwrap();
        betti_oracle(&lk, gf2)
            .iter()
            .take(top)
            .all(|&b| b == 0)
    })
}

proptest! {
    #[test]
    fn boundary_squares_to_zero(sets in arb_faces(8, 6)) {
        let c = complex(&sets);
        let d = c.dim().unwrap();
        for i in 0..d {
            let low = boundary_matrix(&c, i).unwrap().to_dense();
            let high = boundary_matrix(&c, i + 1).unwrap().to_dense();
            let prod = matmul(&low, &high);
            prop_assert!(prod.iter().flatten().all(|&x| x == 0));
        }
    }

    #[test]
    fn boundary_matches_dense_oracle(sets in arb_faces(6, 5)) {
        let c = complex(&sets);
        let faces = all_faces(&sets);
        for i in 0..=c.dim().unwrap() {
            let m = boundary_matrix(&c, i).unwrap();
            let oracle = dense_boundary(&faces, i as usize + 1);
            // Same entries up to the row/column order.
            for (r, row_face) in m.rows().iter().enumerate() {
                for (col, col_face) in m.cols().iter().enumerate() {
                    let lower: Vec<&Set> = faces.iter().filter(|f| f.len() == i as usize).collect();
                    let upper: Vec<&Set> = faces.iter().filter(|f| f.len() == i as usize + 1).collect();
                    let orow = lower.iter().position(|f| **f == to_set(row_face)).unwrap();
                    let ocol = upper.iter().position(|f| **f == to_set(col_face)).unwrap();
                    prop_assert_eq!(m.get(r, col), oracle[orow][ocol]);
                }
            }
            prop_assert_eq!(m.rank(Field::Rationals), dense_rank_q(&oracle));
            prop_assert_eq!(m.rank(Field::Gf2), dense_rank_gf2(&oracle));
        }
    }

    #[test]
    fn euler_poincare(sets in arb_faces(8, 6)) {
        let c = complex(&sets);
        let f = c.f_vector().unwrap();
        let chi: i64 = f
            .counts()
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum::<i64>()
            - 1;
        let b = reduced_betti(&c, Field::Rationals).unwrap();
        let alt: i64 = b
            .iter()
            .map(|(i, x)| if i.rem_euclid(2) == 0 { x as i64 } else { -(x as i64) })
            .sum();
        prop_assert_eq!(chi, alt);
    }

    #[test]
    fn betti_matches_dense_oracle(sets in arb_faces(6, 5)) {
        let c = complex(&sets);
        let faces = all_faces(&sets);
        for (field, gf2) in [(Field::Rationals, false), (Field::Gf2, true)] {
            let b = reduced_betti(&c, field).unwrap();
            prop_assert_eq!(b.as_slice().to_vec(), betti_oracle(&faces, gf2));
        }
    }

    // Torsion needs at least six vertices, so complexes on five agree over both fields.
    #[test]
    fn fields_agree_without_torsion(sets in arb_faces(5, 6)) {
        let c = complex(&sets);
        prop_assert_eq!(
            reduced_betti(&c, Field::Gf2).unwrap(),
            reduced_betti(&c, Field::Rationals).unwrap()
        );
        prop_assert_eq!(
            reisner_cm_check(&c, Field::Gf2).unwrap().is_cm,
            reisner_cm_check(&c, Field::Rationals).unwrap().is_cm
        );
    }

    #[test]
    fn reisner_matches_oracle(sets in arb_faces(6, 4)) {
        let c = complex(&sets);
        for (field, gf2) in [(Field::Gf2, true), (Field::Rationals, false)] {
            let r = reisner_cm_check(&c, field).unwrap();
            prop_assert_eq!(r.is_cm, r.violations.is_empty());
            prop_assert_eq!(r.is_cm, cm_oracle(&sets, gf2));
            prop_assert_eq!(r.faces_checked, all_faces(&sets).len());
        }
    }
}

#[test]
fn rp2_values_from_dense_oracle() {
    let c = rp2();
    let faces = faces_of(&c);
    assert_eq!(betti_oracle(&faces, false), vec![0, 0, 0, 0]);
    assert_eq!(betti_oracle(&faces, true), vec![0, 0, 1, 1]);
    assert_eq!(reduced_betti(&c, Field::Rationals).unwrap().as_slice(), &[0, 0, 0, 0]);
    assert_eq!(reduced_betti(&c, Field::Gf2).unwrap().as_slice(), &[0, 0, 1, 1]);

    let sets: Vec<Set> = c.facets().iter().map(to_set).collect();
    assert!(cm_oracle(&sets, false));
    assert!(!cm_oracle(&sets, true));
    assert!(reisner_cm_check(&c, Field::Rationals).unwrap().is_cm);
    let r = reisner_cm_check(&c, Field::Gf2).unwrap();
    assert_eq!(
        r.violations,
        vec![Violation {
            face: Face::empty(),
            index: 1,
            rank: 1
        }]
    );
}

#[test]
fn segments_in_dimension_two_are_cm() {
    for n in 1..=10 {
        let c = SimplicialComplex::from_family(&segment(3, n).unwrap()).unwrap();
        for field in Field::ALL {
            assert!(reisner_cm_check(&c, field).unwrap().is_cm, "S_3({n}) over {field:?}");
        }
    }
}

#[test]
fn two_disjoint_simplices_fail_at_the_empty_face() {
    for d in 1..=4u32 {
        let c = make_complex(&[
            Face::new(1..=d + 1).unwrap(),
            Face::new(d + 2..=2 * d + 2).unwrap(),
        ])
        .unwrap();
        for field in Field::ALL {
            let r = reisner_cm_check(&c, field).unwrap();
            assert_eq!(
                r.violations,
                vec![Violation {
                    face: Face::empty(),
                    index: 0,
                    rank: 1
                }]
            );
        }
    }
}

#[test]
fn violations_are_in_squashed_order() {
    // Two triangles sharing vertex 3, plus a disjoint third triangle.
    let c = make_complex(&[face![1, 2, 3], face![3, 4, 5], face![6, 7, 8]]).unwrap();
    let r = reisner_cm_check(&c, Field::Rationals).unwrap();
    let faces: Vec<&Face> = r.violations.iter().map(|v| &v.face).collect();
    let mut sorted = faces.clone();
    sorted.sort();
    assert_eq!(faces, sorted);
    assert_eq!(r.violations[0].face, Face::empty());
    assert!(r.violations.iter().any(|v| v.face == face![3]));
}
