//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the mask-based internals of the library.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use extremal_core::{Face, FaceFamily, Label, SimplicialComplex};
use proptest::prelude::*;

pub type Set = Vec<Label>;

/// All `k`-subsets of `universe` (ascending labels), in lexicographic order.
pub fn k_subsets(universe: &[Label], k: usize) -> Vec<Set> {
    fn rec(u: &[Label], k: usize, start: usize, cur: &mut Set, out: &mut Vec<Set>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..u.len() {
            cur.push(u[j]);
            rec(u, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(universe, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `A < B` iff `max(A \ B) < max(B \ A)`, straight from the definition.
pub fn squashed_by_definition(a: &Set, b: &Set) -> Ordering {
    let a_only = a.iter().filter(|x| !b.contains(x)).max();
    let b_only = b.iter().filter(|x| !a.contains(x)).max();
    a_only.cmp(&b_only)
}

/// The first `n` `k`-sets in squashed order, by sorting every `k`-subset of a large enough range.
pub fn squashed_prefix(k: usize, n: usize, avoid: Option<Label>) -> Vec<Set> {
    let mut m = k as Label;
    loop {
        let universe: Vec<Label> = (1..=m).filter(|&x| Some(x) != avoid).collect();
        let mut all = k_subsets(&universe, k);
        // Every k-subset of [m] precedes any set with a label above m.
        if all.len() >= n {
            all.sort_by(squashed_by_definition);
            all.truncate(n);
            return all;
        }
        m += 1;
    }
}

pub fn shadow_by_definition(sets: &[Set]) -> BTreeSet<Set> {
    let mut out = BTreeSet::new();
    for s in sets {
        for skip in 0..s.len() {
            let mut t = s.clone();
            t.remove(skip);
            out.insert(t);
        }
    }
    out
}

pub fn to_face(s: &Set) -> Face {
    Face::new(s.iter().copied()).unwrap()
}

pub fn to_set(f: &Face) -> Set {
    f.labels().to_vec()
}

pub fn family(k: usize, sets: &[Set]) -> FaceFamily {
    FaceFamily::from_faces(k, sets.iter().map(to_face)).unwrap()
}

/// Every face of the complex generated by `facets`, including the empty face.
pub fn all_faces(facets: &[Set]) -> BTreeSet<Set> {
    let mut out = BTreeSet::new();
    for f in facets {
        for bits in 0u64..(1 << f.len()) {
            out.insert(
                (0..f.len())
                    .filter(|j| bits >> j & 1 == 1)
                    .map(|j| f[j])
                    .collect(),
            );
        }
    }
    out
}

/// All faces of a library complex, computed from its facets by brute force.
pub fn faces_of(c: &SimplicialComplex) -> BTreeSet<Set> {
    let facets: Vec<Set> = c.facets().iter().map(to_set).collect();
    all_faces(&facets)
}

pub fn maximal(faces: &BTreeSet<Set>) -> BTreeSet<Set> {
    faces
        .iter()
        .filter(|f| {
            !faces
                .iter()
                .any(|g| g.len() > f.len() && f.iter().all(|x| g.contains(x)))
        })
        .cloned()
        .collect()
}

pub fn facets_of(c: &SimplicialComplex) -> BTreeSet<Set> {
    c.facets().iter().map(to_set).collect()
}

/// Rank of an integer matrix over the rationals, by exact Bareiss elimination.
pub fn dense_rank_q(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    rank
}

pub fn dense_rank_gf2(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<bool>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(2) == 1).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col]) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[col] {
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense boundary matrix from `size`-faces to `(size-1)`-faces, rows and columns
/// in lexicographic order; sign `(-1)^j` for dropping the `j`-th smallest label.
pub fn dense_boundary(faces: &BTreeSet<Set>, size: usize) -> Vec<Vec<i64>> {
    let upper: Vec<&Set> = faces.iter().filter(|f| f.len() == size).collect();
    let lower: Vec<&Set> = faces.iter().filter(|f| f.len() + 1 == size).collect();
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, f) in upper.iter().enumerate() {
        for skip in 0..f.len() {
            let mut g = (*f).clone();
            g.remove(skip);
            let i = lower.iter().position(|h| **h == g).unwrap();
            m[i][j] = if skip % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Reduced Betti numbers `b̃_{-1}..=b̃_d` from dense matrices.
pub fn betti_oracle(faces: &BTreeSet<Set>, gf2: bool) -> Vec<usize> {
    let top = faces.iter().map(Vec::len).max().unwrap();
    let rank = |size: usize| -> usize {
        if size == 0 || size > top {
            return 0;
        }
        let m = dense_boundary(faces, size);
        if gf2 {
            dense_rank_gf2(&m)
        } else {
            dense_rank_q(&m)
        }
    };
    (0..=top)
        .map(|size| faces.iter().filter(|f| f.len() == size).count() - rank(size) - rank(size + 1))
        .collect()
}

pub fn link_of(faces: &BTreeSet<Set>, s: &Set) -> BTreeSet<Set> {
    faces
        .iter()
        .filter(|f| f.iter().all(|x| !s.contains(x)))
        .filter(|f| {
            let mut u: Set = f.iter().chain(s.iter()).copied().collect();
            u.sort_unstable();
            faces.contains(&u)
        })
        .cloned()
        .collect()
}

pub fn deletion_of(faces: &BTreeSet<Set>, x: Label) -> BTreeSet<Set> {
    faces.iter().filter(|f| !f.contains(&x)).cloned().collect()
}

pub fn is_pure_faces(faces: &BTreeSet<Set>) -> bool {
    let m = maximal(faces);
    m.iter().map(Vec::len).collect::<BTreeSet<_>>().len() <= 1
}

/// Vertex decomposability straight from the definition, without memoization.
/// The empty complex, `{∅}`, and a 0-dimensional complex count as decomposable.
pub fn vd_by_definition(faces: &BTreeSet<Set>) -> bool {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    if top <= 1 {
        return true;
    }
    let verts: BTreeSet<Label> = faces.iter().flatten().copied().collect();
    verts.iter().any(|&x| {
        let lk = link_of(faces, &vec![x]);
        let del = deletion_of(faces, x);
        is_pure_faces(&lk) && is_pure_faces(&del) && vd_by_definition(&lk) && vd_by_definition(&del)
    })
}

/// Shellability by trying every facet order.
pub fn shellable_by_permutation(facets: &[Set]) -> bool {
    fn ok(prefix: &[Set], next: &Set) -> bool {
        let before = all_faces(prefix);
        let inter: BTreeSet<Set> = all_faces(std::slice::from_ref(next))
            .into_iter()
            .filter(|f| before.contains(f))
            .collect();
        let m = maximal(&inter);
        m.iter().all(|f| f.len() + 1 == next.len())
    }
    fn rec(order: &mut Vec<Set>, rest: &mut Vec<Set>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for j in 0..rest.len() {
            let f = rest.remove(j);
            if order.is_empty() || ok(order, &f) {
                order.push(f.clone());
                if rec(order, rest) {
                    return true;
                }
                order.pop();
            }
            rest.insert(j, f);
        }
        false
    }
    rec(&mut Vec::new(), &mut facets.to_vec())
}

/// A uniform family: `k <= max_k`, labels in `1..=max_u`, between 1 and `max_n` members.
pub fn arb_family(max_k: usize, max_u: Label, max_n: usize) -> impl Strategy<Value = (usize, Vec<Set>)> {
    (1..=max_k)
        .prop_flat_map(move |k| (Just(k), k as Label..=max_u))
        .prop_flat_map(move |(k, u)| {
            let universe: Vec<Label> = (1..=u).collect();
            let all = k_subsets(&universe, k);
            let hi = max_n.min(all.len());
            (Just(k), proptest::sample::subsequence(all, 1..=hi))
        })
}

/// Arbitrary nonempty faces on labels `1..=max_v` (not necessarily pure).
pub fn arb_faces(max_v: Label, max_faces: usize) -> impl Strategy<Value = Vec<Set>> {
    (1..=max_v).prop_flat_map(move |v| {
        proptest::collection::vec(1u64..(1 << v), 1..=max_faces).prop_map(move |masks| {
            masks
                .into_iter()
                .map(|m| (1..=v).filter(|x| m >> (x - 1) & 1 == 1).collect())
                .collect()
        })
    })
}

pub fn complex(sets: &[Set]) -> SimplicialComplex {
    let faces: Vec<Face> = sets.iter().map(to_face).collect();
    extremal_core::make_complex(&faces).unwrap()
}
