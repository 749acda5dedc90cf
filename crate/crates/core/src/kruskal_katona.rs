//! Squashed order, initial segments, shadows and the Kruskal-Katona bound.
//!
//! Index convention: a family of `k`-sets has a shadow of `(k-1)`-sets, and
//! `delta(n, k)` is the size of the shadow of the first `n` `k`-sets. A pure
//! complex of dimension `d` has facets of size `d + 1` and is extremal iff
//! `f_{d-1} == delta(f_d, d + 1)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::complex::{card, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{colex_cmp, Face, FaceFamily, Label};

/// `C(n, k)` with overflow detection. `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        // r = C(n, i) here; C(n, i) <= C(n, k) for i <= k <= n/2.
        r = r * u128::from(n - i) / u128::from(i + 1);
        if r > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient exceeds 64 bits"));
        }
    }
    Ok(r as u64)
}

/// Largest `m` with `C(m, j) <= r`, for `j >= 1`.
fn largest_binomial_index(r: u64, j: u64) -> Result<u64> {
    debug_assert!(j >= 1);
    if j == 1 {
        return Ok(r);
    }
    let fits = |m: u64| binomial(m, j).map(|b| b <= r).unwrap_or(false);
    // C(j - 1, j) = 0 <= r always.
    let mut lo = j - 1;
    let mut hi = j.max(1);
    while fits(hi) {
        lo = hi;
        hi = hi
            .checked_mul(2)
            .ok_or(Error::Overflow("binomial index search"))?;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

fn to_label(x: u64) -> Result<Label> {
    Label::try_from(x).map_err(|_| Error::Overflow("vertex label exceeds 32 bits"))
}

/// Compares equal-size faces: `A < B` iff `max(A \ B) < max(B \ A)`.
pub fn squashed_cmp(a: &Face, b: &Face) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    Ok(colex_cmp(a.labels(), b.labels()))
}

/// Position of `a` among all `|a|`-sets in squashed order, counting from 0.
pub fn colex_rank(a: &Face) -> Result<u64> {
    a.labels().iter().enumerate().try_fold(0u64, |acc, (j, &x)| {
        let term = binomial(u64::from(x) - 1, j as u64 + 1)?;
        acc.checked_add(term).ok_or(Error::Overflow("colex rank"))
    })
}

/// The `k`-set at position `r` of the squashed order.
pub fn colex_unrank(r: u64, k: usize) -> Result<Face> {
    if k == 0 {
        return if r == 0 {
            Ok(Face::empty())
        } else {
            Err(Error::InvalidInput(format!("no 0-set has rank {r}")))
        };
    }
    let mut rest = r;
    let mut labels = vec![0; k];
    for j in (1..=k).rev() {
        let m = largest_binomial_index(rest, j as u64)?;
        rest -= binomial(m, j as u64)?;
        labels[j - 1] = to_label(m.checked_add(1).ok_or(Error::Overflow("colex label"))?)?;
    }
    Ok(Face::from_sorted_unchecked(labels))
}

/// `S_k(n)`: the first `n` `k`-sets in squashed order.
pub fn segment(k: usize, n: u64) -> Result<FaceFamily> {
    segment_mapped(k, n, Ok)
}

/// `S_k^i(n)`: the first `n` `k`-sets in squashed order not containing `i`.
///
/// Unranks in the universe with `i` removed and shifts labels `>= i` up by
/// one; the shift is monotone, so squashed order is preserved.
pub fn segment_avoiding(k: usize, n: u64, i: Label) -> Result<FaceFamily> {
    if i == 0 {
        return Err(Error::InvalidLabel(0));
    }
    segment_mapped(k, n, |x| {
        if x >= i {
            x.checked_add(1)
                .ok_or(Error::Overflow("vertex label exceeds 32 bits"))
        } else {
            Ok(x)
        }
    })
}

fn segment_mapped<F>(k: usize, n: u64, map: F) -> Result<FaceFamily>
where
    F: Fn(Label) -> Result<Label>,
{
    if k == 0 {
        return Err(Error::InvalidInput("segment size k must be >= 1".into()));
    }
    // The last set carries the largest labels; fail before allocating anything.
    if n > 0 {
        for &x in colex_unrank(n - 1, k)?.labels() {
            map(x)?;
        }
    }
    let mut set = BTreeSet::new();
    for r in 0..n {
        let f = colex_unrank(r, k)?;
        let mapped = f
            .labels()
            .iter()
            .map(|&x| map(x))
            .collect::<Result<Vec<_>>>()?;
        set.insert(Face::from_sorted_unchecked(mapped));
    }
    Ok(FaceFamily::from_set_unchecked(k, set))
}

/// `ΔF`: all `(k-1)`-subsets of members. The shadow of an empty family is empty.
pub fn shadow(fam: &FaceFamily) -> Result<FaceFamily> {
    let k = fam.uniform_size();
    if k == 0 {
        return Err(Error::InvalidInput(
            "shadow is undefined for a family of empty faces".into(),
        ));
    }
    let set = fam.iter().flat_map(|f| f.boundary()).collect();
    Ok(FaceFamily::from_set_unchecked(k - 1, set))
}

/// Binomial cascade `n = C(a_k, k) + ... + C(a_t, t)` with `a_k > ... > a_t >= t >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeRep {
    /// `(a_j, j)` for `j = k` down to `t`.
    terms: Vec<(u64, u64)>,
}

impl CascadeRep {
    pub fn terms(&self) -> &[(u64, u64)] {
        &self.terms
    }

    pub fn reconstruct(&self) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, &(a, j)| {
            acc.checked_add(binomial(a, j)?)
                .ok_or(Error::Overflow("cascade sum"))
        })
    }

    /// Checks strict decrease of `a_j`, consecutive `j`, and `1 <= t <= a_t`.
    pub fn is_well_formed(&self) -> bool {
        let consecutive = self
            .terms
            .windows(2)
            .all(|w| w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1);
        let tail = self.terms.last().is_some_and(|&(a, t)| 1 <= t && t <= a);
        consecutive && tail
    }
}

/// Greedy cascade: the largest `a_k` with `C(a_k, k) <= n`, then recurse on the remainder.
pub fn cascade_rep(n: u64, k: u64) -> Result<CascadeRep> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidInput(format!(
            "cascade requires n >= 1 and k >= 1, got n={n} k={k}"
        )));
    }
    let mut terms = Vec::new();
    let mut rest = n;
    let mut j = k;
    while rest > 0 {
        debug_assert!(j >= 1, "C(m, 1) = m always exhausts the remainder");
        let a = largest_binomial_index(rest, j)?;
        rest -= binomial(a, j)?;
        terms.push((a, j));
        j -= 1;
    }
    Ok(CascadeRep { terms })
}

/// `|Δ S_k(n)| = Σ C(a_j, j - 1)` over the cascade of `n` at level `k`.
pub fn delta(n: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidInput("delta requires k >= 1".into()));
    }
    if n == 0 {
        return Ok(0);
    }
    cascade_rep(n, k)?
        .terms
        .iter()
        .try_fold(0u64, |acc, &(a, j)| {
            acc.checked_add(binomial(a, j - 1)?)
                .ok_or(Error::Overflow("delta sum"))
        })
}

/// Codimension-one face count of a pure complex against its Kruskal-Katona bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extremality {
    pub dim: i32,
    pub top_faces: u64,
    pub codim_one_faces: u64,
    pub bound: u64,
}

impl Extremality {
    /// `f_{d-1} - δ_d(f_d)`; never negative by the Kruskal-Katona theorem.
    pub fn slack(&self) -> i64 {
        self.codim_one_faces as i64 - self.bound as i64
    }

    pub fn is_extremal(&self) -> bool {
        self.dim <= 0 || self.codim_one_faces == self.bound
    }
}

/// Requires a pure, nonempty complex of dimension `>= 0`.
pub fn extremality(c: &SimplicialComplex) -> Result<Extremality> {
    let d = c.dim().ok_or(Error::EmptyComplex)?;
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if d < 0 {
        return Err(Error::InvalidInput(
            "the complex {∅} has no codimension-one faces".into(),
        ));
    }
    let top = c.facet_count() as u64;
    let codim_one = if d == 0 {
        1
    } else {
        c.face_masks_of_size(d as u32).len() as u64
    };
    Ok(Extremality {
        dim: d,
        top_faces: top,
        codim_one_faces: codim_one,
        bound: delta(top, d as u64 + 1)?,
    })
}

/// Whether a pure complex attains the Kruskal-Katona bound on codimension-one faces.
///
/// Dimension-0 complexes (and `{∅}`) are always extremal.
pub fn is_extremal(c: &SimplicialComplex) -> Result<bool> {
    let d = c.dim().ok_or(Error::EmptyComplex)?;
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if d <= 0 {
        return Ok(true);
    }
    let top = c.facet_count() as u64;
    let k = card(c.facet_masks()[0]);
    let codim_one = c.face_masks_of_size(k - 1).len() as u64;
    Ok(codim_one == delta(top, u64::from(k))?)
}

/// `B_i` (members avoiding `i`) and `C_i` (members containing `i`, with `i` removed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSplit {
    pub avoiding: FaceFamily,
    pub through: FaceFamily,
    /// False when `i` occurs in no member; then `through` is empty.
    pub present: bool,
}

pub fn split_by_vertex(fam: &FaceFamily, i: Label) -> VertexSplit {
    let k = fam.uniform_size();
    let mut avoiding = BTreeSet::new();
    let mut through = BTreeSet::new();
    for f in fam {
        if f.contains(i) {
            through.insert(f.without(i));
        } else {
            avoiding.insert(f.clone());
        }
    }
    let present = !through.is_empty();
    VertexSplit {
        avoiding: FaceFamily::from_set_unchecked(k, avoiding),
        through: FaceFamily::from_set_unchecked(k.saturating_sub(1), through),
        present,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessResult {
    /// `|Δ B_i| > |C_i|` for this vertex.
    Witness {
        vertex: Label,
        shadow_avoiding: usize,
        through: usize,
    },
    /// No witness: the family is every `k`-subset of its support.
    CompleteOnV(Vec<Label>),
}

/// Scans the support in ascending order for the first `i` with `|Δ B_i| > |C_i|`.
pub fn find_witness(fam: &FaceFamily) -> Result<WitnessResult> {
    if fam.is_empty() {
        return Err(Error::InvalidInput("witness search on an empty family".into()));
    }
    if fam.uniform_size() == 0 {
        return Err(Error::InvalidInput(
            "witness search on a family of empty faces".into(),
        ));
    }
    let support = fam.support();
    for &i in &support {
        let split = split_by_vertex(fam, i);
        let shadow_avoiding = if split.avoiding.is_empty() {
            0
        } else {
            shadow(&split.avoiding)?.len()
        };
        if shadow_avoiding > split.through.len() {
            return Ok(WitnessResult::Witness {
                vertex: i,
                shadow_avoiding,
                through: split.through.len(),
            });
        }
    }
    debug_assert_eq!(
        binomial(support.len() as u64, fam.uniform_size() as u64).ok(),
        Some(fam.len() as u64)
    );
    Ok(WitnessResult::CompleteOnV(support))
}
