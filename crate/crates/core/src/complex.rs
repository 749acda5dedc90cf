//! Facet-generated simplicial complexes over at most 64 vertices.
//!
//! Labels are compacted to bit positions `0..v` in ascending label order, so
//! every face is a single `u64`. Because the compaction is order-preserving,
//! numeric order of equal-popcount masks coincides with squashed order of the
//! underlying label sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{Face, FaceFamily, Label};

pub(crate) type Mask = u64;

/// Maximum number of distinct vertices a complex can carry.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    /// Bit position -> external label, strictly increasing.
    labels: Vec<Label>,
    /// Inclusion-maximal faces, sorted by (cardinality, mask).
    facets: Vec<Mask>,
}

/// Face counts `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Number of `i`-dimensional faces; `f_{-1} = 1` and anything above the top is zero.
    pub fn get(&self, i: i32) -> u64 {
        match i {
            -1 => 1,
            i if i < -1 => 0,
            i => self.0.get(i as usize).copied().unwrap_or(0),
        }
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn card(m: Mask) -> u32 {
    m.count_ones()
}

fn sort_faces(masks: &mut Vec<Mask>) {
    masks.sort_unstable_by_key(|&m| (card(m), m));
    masks.dedup();
}

/// Pushes every `k`-subset of `m` onto `out`.
pub(crate) fn k_subsets(m: Mask, k: u32, out: &mut Vec<Mask>) {
    fn rec(rest: Mask, k: u32, acc: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if card(rest) < k {
            return;
        }
        let low = rest & rest.wrapping_neg();
        rec(rest ^ low, k - 1, acc | low, out);
        rec(rest ^ low, k, acc, out);
    }
    rec(m, k, 0, out);
}

/// Every subset of `m`, including `0` and `m` itself.
pub(crate) fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut sub: Mask = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        sub = sub.wrapping_sub(m) & m;
        done = sub == 0;
        Some(cur)
    })
}

/// Keeps only inclusion-maximal masks.
fn maximal(mut masks: Vec<Mask>) -> Vec<Mask> {
    masks.sort_unstable_by_key(|&m| std::cmp::Reverse((card(m), m)));
    masks.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    sort_faces(&mut kept);
    kept
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}` whose only face is the empty face.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: vec![0],
        }
    }

    /// The complex generated by `faces`: all their subsets, keeping only maximal ones as facets.
    pub fn from_faces<'a, I>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Face>,
    {
        let faces: Vec<&Face> = faces.into_iter().collect();
        let labels: BTreeSet<Label> = faces
            .iter()
            .flat_map(|f| f.labels().iter().copied())
            .collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let labels: Vec<Label> = labels.into_iter().collect();
        let masks = faces
            .iter()
            .map(|f| {
                f.labels().iter().fold(0, |m, x| {
                    let idx = labels.binary_search(x).expect("label collected above");
                    m | (1 << idx)
                })
            })
            .collect();
        Ok(Self::from_masks(&labels, masks))
    }

    /// Complex generated by the members of a family.
    pub fn from_family(fam: &FaceFamily) -> Result<Self> {
        Self::from_faces(fam.iter())
    }

    /// Builds from masks over `labels`, absorbing dominated faces and dropping unused labels.
    pub(crate) fn from_masks(labels: &[Label], masks: Vec<Mask>) -> Self {
        let facets = maximal(masks);
        let used = facets.iter().fold(0, |acc, &m| acc | m);
        let full = if labels.len() == 64 {
            Mask::MAX
        } else {
            (1 << labels.len()) - 1
        };
        if used == full {
            return SimplicialComplex {
                labels: labels.to_vec(),
                facets,
            };
        }
        // Recompact: bit `old` moves to the number of used bits below it.
        let mut remap = [0u32; 64];
        let mut new_labels = Vec::with_capacity(card(used) as usize);
        for (old, &label) in labels.iter().enumerate() {
            if used >> old & 1 == 1 {
                remap[old] = new_labels.len() as u32;
                new_labels.push(label);
            }
        }
        let facets = facets
            .into_iter()
            .map(|m| {
                let mut out = 0;
                let mut rest = m;
                while rest != 0 {
                    let b = rest.trailing_zeros();
                    out |= 1 << remap[b as usize];
                    rest &= rest - 1;
                }
                out
            })
            .collect::<Vec<_>>();
        // Remapping is monotone, so the (card, mask) sort survives.
        SimplicialComplex {
            labels: new_labels,
            facets,
        }
    }

    pub fn vertices(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> Vec<Face> {
        self.facets.iter().map(|&m| self.face_of(m)).collect()
    }

    /// True for the complex with no faces.
    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_face(&self) -> bool {
        self.facets == [0]
    }

    /// `None` for the empty complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.last().map(|&m| card(m) as i32 - 1)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(&first) => self.facets.iter().all(|&m| card(m) == card(first)),
        }
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.mask_of(f)
            .is_some_and(|m| self.facets.iter().any(|&g| m & !g == 0))
    }

    pub(crate) fn facet_masks(&self) -> &[Mask] {
        &self.facets
    }

    pub(crate) fn face_of(&self, m: Mask) -> Face {
        let mut v = Vec::with_capacity(card(m) as usize);
        let mut rest = m;
        while rest != 0 {
            v.push(self.labels[rest.trailing_zeros() as usize]);
            rest &= rest - 1;
        }
        Face::from_sorted_unchecked(v)
    }

    pub(crate) fn mask_of(&self, f: &Face) -> Option<Mask> {
        f.labels().iter().try_fold(0, |m, x| {
            self.labels.binary_search(x).ok().map(|idx| m | (1 << idx))
        })
    }

    /// Masks of all faces of cardinality `k`, ascending (squashed order).
    pub(crate) fn face_masks_of_size(&self, k: u32) -> Vec<Mask> {
        let mut out = Vec::new();
        for &f in &self.facets {
            if card(f) >= k {
                k_subsets(f, k, &mut out);
            }
        }
        sort_faces(&mut out);
        out
    }

    /// Masks of every face including the empty face, sorted by (cardinality, squashed order).
    pub(crate) fn all_face_masks(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = self.facets.iter().flat_map(|&f| submasks(f)).collect();
        sort_faces(&mut out);
        out
    }

    /// Total face count including the empty face, or `None` once it exceeds `cap`.
    pub(crate) fn face_count_capped(&self, cap: usize) -> Option<usize> {
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            for s in submasks(f) {
                seen.insert(s);
                if seen.len() > cap {
                    return None;
                }
            }
        }
        Some(seen.len())
    }

    /// All `i`-dimensional faces. `i = -1` yields `{∅}`.
    pub fn faces_of_dim(&self, i: i32) -> Result<FaceFamily> {
        let dim = self.dim();
        if i < -1 || dim.is_none_or(|d| i > d) {
            return Err(Error::OutOfRange { requested: i, dim });
        }
        let k = (i + 1) as u32;
        let set = self
            .face_masks_of_size(k)
            .into_iter()
            .map(|m| self.face_of(m))
            .collect();
        Ok(FaceFamily::from_set_unchecked(k as usize, set))
    }

    /// Facets as a uniform family; requires purity.
    pub fn facet_family(&self) -> Result<FaceFamily> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let k = self.facets.first().map_or(0, |&m| card(m) as usize);
        Ok(FaceFamily::from_set_unchecked(
            k,
            self.facets.iter().map(|&m| self.face_of(m)).collect(),
        ))
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let d = self.dim().ok_or(Error::EmptyComplex)?;
        Ok(FVector(
            (0..=d)
                .map(|i| self.face_masks_of_size(i as u32 + 1).len() as u64)
                .collect(),
        ))
    }

    pub(crate) fn link_mask(&self, s: Mask) -> Self {
        let masks = self
            .facets
            .iter()
            .filter(|&&f| s & !f == 0)
            .map(|&f| f & !s)
            .collect();
        Self::from_masks(&self.labels, masks)
    }

    /// `lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, s: &Face) -> Result<Self> {
        match self.mask_of(s) {
            Some(m) if self.facets.iter().any(|&f| m & !f == 0) => Ok(self.link_mask(m)),
            _ => Err(Error::FaceNotInComplex(s.labels().to_vec())),
        }
    }

    pub(crate) fn delete_index(&self, idx: u32) -> Self {
        let bit = 1 << idx;
        let masks = self.facets.iter().map(|&f| f & !bit).collect();
        Self::from_masks(&self.labels, masks)
    }

    /// `Δ ∖ x`: every face avoiding `x`.
    pub fn delete_vertex(&self, x: Label) -> Result<Self> {
        let idx = self
            .labels
            .binary_search(&x)
            .map_err(|_| Error::VertexNotInComplex(x))?;
        Ok(self.delete_index(idx as u32))
    }

    pub(crate) fn index_of(&self, x: Label) -> Option<u32> {
        self.labels.binary_search(&x).ok().map(|i| i as u32)
    }

    /// Facets over compacted indices; equal for complexes differing only by
    /// an order-preserving relabeling.
    pub(crate) fn canonical_key(&self) -> Vec<Mask> {
        self.facets.clone()
    }
}

/// The complex generated by `faces`.
pub fn make_complex(faces: &[Face]) -> Result<SimplicialComplex> {
    SimplicialComplex::from_faces(faces)
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.facets()).finish()
    }
}
