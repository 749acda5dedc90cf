//! Faces (finite sets of positive labels) and uniform families of faces.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// External vertex label. Always `>= 1`.
pub type Label = u32;

/// A finite set of vertex labels, stored strictly increasing.
///
/// `Ord` sorts by cardinality first and then by squashed (colex) order, so a
/// `BTreeSet<Face>` of equal-size faces iterates in squashed order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Label>", into = "Vec<Label>")]
pub struct Face(Vec<Label>);

impl TryFrom<Vec<Label>> for Face {
    type Error = Error;

    fn try_from(v: Vec<Label>) -> Result<Self> {
        Face::new(v)
    }
}

impl From<Face> for Vec<Label> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl Face {
    /// Builds a face from arbitrary labels; duplicates are merged.
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Result<Self> {
        let mut v: Vec<Label> = labels.into_iter().collect();
        if v.contains(&0) {
            return Err(Error::InvalidLabel(0));
        }
        v.sort_unstable();
        v.dedup();
        Ok(Face(v))
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Wraps labels that are already strictly increasing and positive.
    pub(crate) fn from_sorted_unchecked(v: Vec<Label>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(v.first().is_none_or(|&x| x >= 1));
        Face(v)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `len - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains(&self, x: Label) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|x| other.contains(*x))
    }

    pub fn without(&self, x: Label) -> Face {
        Face(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    pub fn with(&self, x: Label) -> Result<Face> {
        Face::new(self.0.iter().copied().chain(std::iter::once(x)))
    }

    pub fn max(&self) -> Option<Label> {
        self.0.last().copied()
    }

    /// All faces obtained by removing exactly one label.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| x)
                    .collect(),
            )
        })
    }
}

/// Colex comparison of two sorted label slices of equal length.
pub(crate) fn colex_cmp(a: &[Label], b: &[Label]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| colex_cmp(&self.0, &other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Convenience constructor for tests and fixtures. Panics on label 0.
#[macro_export]
macro_rules! face {
    ($($x:expr),* $(,)?) => {
        $crate::Face::new([$($x as $crate::Label),*]).expect("valid face labels")
    };
}

/// A deduplicated set of faces sharing one cardinality, iterated in squashed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FaceFamily {
    uniform_size: usize,
    members: BTreeSet<Face>,
}

impl FaceFamily {
    pub fn new(uniform_size: usize) -> Self {
        FaceFamily {
            uniform_size,
            members: BTreeSet::new(),
        }
    }

    /// Collects faces into a family of size `k`, rejecting any member of another size.
    pub fn from_faces<I: IntoIterator<Item = Face>>(k: usize, faces: I) -> Result<Self> {
        let mut fam = FaceFamily::new(k);
        for f in faces {
            fam.insert(f)?;
        }
        Ok(fam)
    }

    /// Infers the size from the first face. Returns `None` for an empty input.
    pub fn try_from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Result<Option<Self>> {
        let mut it = faces.into_iter().peekable();
        let Some(first) = it.peek() else {
            return Ok(None);
        };
        let k = first.len();
        FaceFamily::from_faces(k, it).map(Some)
    }

    pub(crate) fn from_set_unchecked(uniform_size: usize, members: BTreeSet<Face>) -> Self {
        debug_assert!(members.iter().all(|f| f.len() == uniform_size));
        FaceFamily {
            uniform_size,
            members,
        }
    }

    /// Inserts a face; returns whether it was new.
    pub fn insert(&mut self, f: Face) -> Result<bool> {
        if f.len() != self.uniform_size {
            return Err(Error::SizeMismatch(self.uniform_size, f.len()));
        }
        Ok(self.members.insert(f))
    }

    pub fn uniform_size(&self) -> usize {
        self.uniform_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.members.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> + '_ {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Face> {
        &self.members
    }

    /// Union of all member labels, ascending.
    pub fn support(&self) -> Vec<Label> {
        let set: BTreeSet<Label> = self
            .members
            .iter()
            .flat_map(|f| f.labels().iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// `{x} ∪ A` for every member `A`. Members already containing `x` are an error.
    pub fn cone(&self, x: Label) -> Result<FaceFamily> {
        let mut out = FaceFamily::new(self.uniform_size + 1);
        for f in &self.members {
            if f.contains(x) {
                return Err(Error::InvalidInput(format!("{f} already contains {x}")));
            }
            out.insert(f.with(x)?)?;
        }
        Ok(out)
    }

    pub fn union(&self, other: &FaceFamily) -> Result<FaceFamily> {
        if self.uniform_size != other.uniform_size {
            return Err(Error::SizeMismatch(self.uniform_size, other.uniform_size));
        }
        Ok(FaceFamily::from_set_unchecked(
            self.uniform_size,
            self.members.union(&other.members).cloned().collect(),
        ))
    }

    pub fn into_faces(self) -> Vec<Face> {
        self.members.into_iter().collect()
    }
}

impl fmt::Debug for FaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a FaceFamily {
    type Item = &'a Face;
    type IntoIter = std::collections::btree_set::Iter<'a, Face>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
