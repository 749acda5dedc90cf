//! Reduced simplicial homology and Reisner's Cohen-Macaulay criterion.
//!
//! Chain groups are augmented by the empty face, so `∂_0` maps every vertex
//! to `∅` and the resulting Betti numbers are the reduced ones.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{card, Mask, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{rank_gf2, rank_rational, SparseVec};

/// Faces allowed in a single Reisner check unless the caller raises it.
pub const DEFAULT_FACE_BUDGET: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    #[serde(rename = "q")]
    Rationals,
}

impl Field {
    pub const ALL: [Field; 2] = [Field::Gf2, Field::Rationals];

    pub fn name(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rationals => "q",
        }
    }
}

/// Integer boundary matrix `∂_i` from `i`-faces (columns) to `(i-1)`-faces (rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: Vec<Face>,
    cols: Vec<Face>,
    columns: Vec<SparseVec>,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> &[Face] {
        &self.rows
    }

    pub fn cols(&self) -> &[Face] {
        &self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, x)| x)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows.len()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                m[i][j] = x;
            }
        }
        m
    }

    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Gf2 => rank_gf2(&self.columns, self.rows.len()),
            Field::Rationals => rank_rational(&self.columns),
        }
    }
}

/// Columns of `∂` from `upper` faces to `lower` faces; both sorted ascending.
///
/// Removing the `j`-th smallest vertex carries sign `(-1)^j`.
fn boundary_columns(upper: &[Mask], lower: &[Mask]) -> Vec<SparseVec> {
    upper
        .iter()
        .map(|&f| {
            let mut col = Vec::with_capacity(card(f) as usize);
            let mut rest = f;
            let mut j = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let row = lower
                    .binary_search(&(f & !bit))
                    .expect("boundary face is present");
                col.push((row, if j % 2 == 0 { 1 } else { -1 }));
                rest &= rest - 1;
                j += 1;
            }
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

pub fn boundary_matrix(c: &SimplicialComplex, i: i32) -> Result<BoundaryMatrix> {
    let dim = c.dim();
    if i < 0 || dim.is_none_or(|d| i > d) {
        return Err(Error::OutOfRange { requested: i, dim });
    }
    let upper = c.face_masks_of_size(i as u32 + 1);
    let lower = c.face_masks_of_size(i as u32);
    Ok(BoundaryMatrix {
        rows: lower.iter().map(|&m| c.face_of(m)).collect(),
        cols: upper.iter().map(|&m| c.face_of(m)).collect(),
        columns: boundary_columns(&upper, &lower),
    })
}

/// Reduced Betti numbers `b̃_{-1}, b̃_0, ..., b̃_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    reduced: Vec<usize>,
}

impl BettiProfile {
    /// `b̃_i`, zero outside `-1..=d`.
    pub fn get(&self, i: i32) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|j| self.reduced.get(j))
            .copied()
            .unwrap_or(0)
    }

    /// Entries starting at dimension -1.
    pub fn as_slice(&self) -> &[usize] {
        &self.reduced
    }

    /// `(i, b̃_i)` pairs from `i = -1`.
    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.reduced.iter().enumerate().map(|(j, &b)| (j as i32 - 1, b))
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced.iter().all(|&b| b == 0)
    }
}

pub fn reduced_betti(c: &SimplicialComplex, field: Field) -> Result<BettiProfile> {
    let d = c.dim().ok_or(Error::EmptyComplex)?;
    let by_size: Vec<Vec<Mask>> = (0..=(d + 1) as u32)
        .map(|k| c.face_masks_of_size(k))
        .collect();
    // ranks[i] = rank ∂_i : C_i -> C_{i-1}, for i = 0..=d.
    let ranks: Vec<usize> = (0..(d + 1) as usize)
        .map(|i| {
            let cols = boundary_columns(&by_size[i + 1], &by_size[i]);
            match field {
                Field::Gf2 => rank_gf2(&cols, by_size[i].len()),
                Field::Rationals => rank_rational(&cols),
            }
        })
        .collect();
    let rank = |i: i32| -> usize {
        usize::try_from(i)
            .ok()
            .and_then(|i| ranks.get(i))
            .copied()
            .unwrap_or(0)
    };
    let reduced = (-1..=d)
        .map(|i| by_size[(i + 1) as usize].len() - rank(i) - rank(i + 1))
        .collect();
    Ok(BettiProfile { reduced })
}

/// A face whose link has nonvanishing reduced homology below the link's dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub face: Face,
    pub index: i32,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub field: Field,
    pub is_cm: bool,
    pub faces_checked: usize,
    pub violations: Vec<Violation>,
}

pub fn reisner_cm_check(c: &SimplicialComplex, field: Field) -> Result<CmReport> {
    reisner_cm_check_with_budget(c, field, DEFAULT_FACE_BUDGET)
}

/// Checks `H̃_i(lk σ) = 0` for every face `σ` (including `∅`) and every `i < dim lk σ`.
///
/// Violations are listed in squashed order of `σ`, then by `i`.
pub fn reisner_cm_check_with_budget(
    c: &SimplicialComplex,
    field: Field,
    budget: usize,
) -> Result<CmReport> {
    if c.is_empty() {
        return Err(Error::EmptyComplex);
    }
    if c.face_count_capped(budget).is_none() {
        return Err(Error::BudgetExceeded {
            found: budget + 1,
            budget,
        });
    }
    let faces = c.all_face_masks();
    let per_face: Vec<Vec<Violation>> = faces
        .par_iter()
        .map(|&s| -> Result<Vec<Violation>> {
            let link = c.link_mask(s);
            let link_dim = link.dim().expect("link of a face is nonempty");
            let betti = reduced_betti(&link, field)?;
            Ok(betti
                .iter()
                .filter(|&(i, b)| i < link_dim && b > 0)
                .map(|(i, b)| Violation {
                    face: c.face_of(s),
                    index: i,
                    rank: b,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let violations: Vec<Violation> = per_face.into_iter().flatten().collect();
    Ok(CmReport {
        field,
        is_cm: violations.is_empty(),
        faces_checked: faces.len(),
        violations,
    })
}
