//! Vertex decomposability certificates.
//!
//! The extremal strategy follows the constructive induction: in a
//! non-complete extremal facet family the first vertex `i` with
//! `|Δ B_i| > |C_i|` has an extremal link (`[C_i]`) and an extremal deletion
//! (`[B_i]`), so recursing on both always succeeds. In a complete family any
//! vertex works and the smallest one is taken. The exhaustive strategy is a
//! memoized search over all vertices and works for arbitrary pure input.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{card, Mask, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, Label};
use crate::kruskal_katona::{find_witness, is_extremal, WitnessResult};

/// Facet count above which [`find_shelling`] refuses to search, unless overridden.
pub const DEFAULT_FACET_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DecompositionTree {
    /// The complex with no faces.
    Empty,
    /// The complex `{∅}`.
    EmptyFace,
    Point {
        vertex: Label,
    },
    Split {
        vertex: Label,
        link: Box<DecompositionTree>,
        deletion: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn split(vertex: Label, link: DecompositionTree, deletion: DecompositionTree) -> Self {
        DecompositionTree::Split {
            vertex,
            link: Box::new(link),
            deletion: Box::new(deletion),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompositionTree::Split { link, deletion, .. } => {
                1 + link.depth().max(deletion.depth())
            }
            _ => 0,
        }
    }

    pub fn split_count(&self) -> usize {
        match self {
            DecompositionTree::Split { link, deletion, .. } => {
                1 + link.split_count() + deletion.split_count()
            }
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Extremal,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyUsed {
    Extremal,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Link,
    Deletion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathStep {
    pub vertex: Label,
    pub branch: Branch,
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.branch {
            Branch::Link => write!(f, "lk {}", self.vertex),
            Branch::Deletion => write!(f, "del {}", self.vertex),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cause {
    NonPureLink { vertex: Label },
    NonPureDeletion { vertex: Label },
}

/// Why a complex has no decomposition: following `steps` from the root
/// reaches a subcomplex whose smallest vertex fails with `cause`. At every
/// step the smallest vertex is the one explored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub steps: Vec<PathStep>,
    pub facets: Vec<Face>,
    pub cause: Cause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Decomposable(DecompositionTree),
    NotDecomposable(Obstruction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdReport {
    pub verdict: Verdict,
    pub strategy_used: StrategyUsed,
}

impl VdReport {
    pub fn tree(&self) -> Option<&DecompositionTree> {
        match &self.verdict {
            Verdict::Decomposable(t) => Some(t),
            Verdict::NotDecomposable(_) => None,
        }
    }

    pub fn is_decomposable(&self) -> bool {
        self.tree().is_some()
    }
}

fn is_point(c: &SimplicialComplex) -> bool {
    c.vertex_count() == 1 && c.facet_masks() == [1]
}

fn leaf(c: &SimplicialComplex) -> Option<DecompositionTree> {
    if c.is_empty() {
        Some(DecompositionTree::Empty)
    } else if c.is_empty_face() {
        Some(DecompositionTree::EmptyFace)
    } else if is_point(c) {
        Some(DecompositionTree::Point {
            vertex: c.vertices()[0],
        })
    } else {
        None
    }
}

pub fn certify_vd(c: &SimplicialComplex, strategy: Strategy) -> Result<VdReport> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let use_extremal = match strategy {
        Strategy::Extremal => {
            if leaf(c).is_none() && !is_extremal(c)? {
                return Err(Error::NotExtremal);
            }
            true
        }
        Strategy::Exhaustive => false,
        Strategy::Auto => leaf(c).is_some() || is_extremal(c)?,
    };
    if use_extremal {
        return Ok(VdReport {
            verdict: Verdict::Decomposable(extremal_tree(c)?),
            strategy_used: StrategyUsed::Extremal,
        });
    }
    let mut search = Search::default();
    let verdict = if search.decomposable(c) {
        Verdict::Decomposable(search.tree(c))
    } else {
        Verdict::NotDecomposable(search.obstruction(c))
    };
    Ok(VdReport {
        verdict,
        strategy_used: StrategyUsed::Exhaustive,
    })
}

/// The vertex the extremal strategy splits at; `c` must be pure, extremal and not a leaf.
pub fn extremal_split_vertex(c: &SimplicialComplex) -> Result<Label> {
    let family = c.facet_family()?;
    Ok(match find_witness(&family)? {
        WitnessResult::Witness { vertex, .. } => vertex,
        WitnessResult::CompleteOnV(support) => support[0],
    })
}

fn extremal_tree(c: &SimplicialComplex) -> Result<DecompositionTree> {
    if let Some(t) = leaf(c) {
        return Ok(t);
    }
    let x = extremal_split_vertex(c)?;
    let link = c.link(&Face::from_sorted_unchecked(vec![x]))?;
    let deletion = c.delete_vertex(x)?;
    if !is_extremal(&link)? {
        return Err(Error::ExtremalInvariant {
            vertex: x,
            part: "link",
        });
    }
    if !deletion.is_pure() || !is_extremal(&deletion)? {
        return Err(Error::ExtremalInvariant {
            vertex: x,
            part: "deletion",
        });
    }
    Ok(DecompositionTree::split(
        x,
        extremal_tree(&link)?,
        extremal_tree(&deletion)?,
    ))
}

/// Exhaustive search memoized on the compacted facet masks. Decomposability
/// is invariant under order-preserving relabeling, and so is the position of
/// the successful split vertex.
#[derive(Default)]
struct Search {
    memo: HashMap<Vec<Mask>, Option<u32>>,
}

impl Search {
    fn decomposable(&mut self, c: &SimplicialComplex) -> bool {
        if leaf(c).is_some() {
            return true;
        }
        let key = c.canonical_key();
        if let Some(r) = self.memo.get(&key) {
            return r.is_some();
        }
        let mut found = None;
        for idx in 0..c.vertex_count() as u32 {
            let link = c.link_mask(1 << idx);
            let deletion = c.delete_index(idx);
            if !link.is_pure() || !deletion.is_pure() {
                continue;
            }
            if self.decomposable(&link) && self.decomposable(&deletion) {
                found = Some(idx);
                break;
            }
        }
        self.memo.insert(key, found);
        found.is_some()
    }

    /// Requires `decomposable(c)` to have returned true.
    fn tree(&mut self, c: &SimplicialComplex) -> DecompositionTree {
        if let Some(t) = leaf(c) {
            return t;
        }
        let idx = self.memo[&c.canonical_key()].expect("complex was found decomposable");
        let link = c.link_mask(1 << idx);
        let deletion = c.delete_index(idx);
        DecompositionTree::split(
            c.vertices()[idx as usize],
            self.tree(&link),
            self.tree(&deletion),
        )
    }

    /// Requires `decomposable(c)` to have returned false.
    fn obstruction(&mut self, c: &SimplicialComplex) -> Obstruction {
        let mut steps = Vec::new();
        let mut cur = c.clone();
        loop {
            let x = cur.vertices()[0];
            let link = cur.link_mask(1);
            let deletion = cur.delete_index(0);
            let cause = if !link.is_pure() {
                Some(Cause::NonPureLink { vertex: x })
            } else if !deletion.is_pure() {
                Some(Cause::NonPureDeletion { vertex: x })
            } else {
                None
            };
            if let Some(cause) = cause {
                return Obstruction {
                    steps,
                    facets: cur.facets(),
                    cause,
                };
            }
            let (branch, next) = if self.decomposable(&link) {
                (Branch::Deletion, deletion)
            } else {
                (Branch::Link, link)
            };
            steps.push(PathStep { vertex: x, branch });
            cur = next;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateDefect {
    pub path: Vec<PathStep>,
    pub reason: String,
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            f.write_str("at root")?;
        } else {
            f.write_str("at ")?;
            for (j, s) in self.path.iter().enumerate() {
                if j > 0 {
                    f.write_str(" / ")?;
                }
                write!(f, "{s}")?;
            }
        }
        write!(f, ": {}", self.reason)
    }
}

impl std::error::Error for CertificateDefect {}

/// Replays the tree against `c`; the first mismatch is returned with its path.
pub fn validate_certificate(
    c: &SimplicialComplex,
    t: &DecompositionTree,
) -> Result<(), CertificateDefect> {
    let mut path = Vec::new();
    validate_at(c, t, &mut path)
}

fn validate_at(
    c: &SimplicialComplex,
    t: &DecompositionTree,
    path: &mut Vec<PathStep>,
) -> Result<(), CertificateDefect> {
    let fail = |reason: String, path: &[PathStep]| {
        Err(CertificateDefect {
            path: path.to_vec(),
            reason,
        })
    };
    match t {
        DecompositionTree::Empty if c.is_empty() => Ok(()),
        DecompositionTree::Empty => fail(format!("expected the empty complex, found {c:?}"), path),
        DecompositionTree::EmptyFace if c.is_empty_face() => Ok(()),
        DecompositionTree::EmptyFace => fail(format!("expected {{∅}}, found {c:?}"), path),
        DecompositionTree::Point { vertex } => {
            if is_point(c) && c.vertices() == [*vertex] {
                Ok(())
            } else {
                fail(format!("expected the point {vertex}, found {c:?}"), path)
            }
        }
        DecompositionTree::Split {
            vertex,
            link,
            deletion,
        } => {
            if !c.is_pure() {
                return fail(format!("{c:?} is not pure"), path);
            }
            let Some(idx) = c.index_of(*vertex) else {
                return fail(format!("vertex {vertex} is not in {c:?}"), path);
            };
            let lk = c.link_mask(1 << idx);
            let del = c.delete_index(idx);
            if !lk.is_pure() {
                return fail(format!("link of {vertex} is not pure"), path);
            }
            if !del.is_pure() {
                return fail(format!("deletion of {vertex} is not pure"), path);
            }
            path.push(PathStep {
                vertex: *vertex,
                branch: Branch::Link,
            });
            validate_at(&lk, link, path)?;
            path.pop();
            path.push(PathStep {
                vertex: *vertex,
                branch: Branch::Deletion,
            });
            validate_at(&del, deletion, path)?;
            path.pop();
            Ok(())
        }
    }
}

/// Whether `order` lists the facets of `c` as a shelling: each facet after
/// the first meets the union of its predecessors in a pure complex of
/// codimension one.
pub fn is_shelling(c: &SimplicialComplex, order: &[Face]) -> bool {
    let mut masks = Vec::with_capacity(order.len());
    for f in order {
        match c.mask_of(f) {
            Some(m) if c.facet_masks().contains(&m) && !masks.contains(&m) => masks.push(m),
            _ => return false,
        }
    }
    if masks.len() != c.facet_count() {
        return false;
    }
    (1..masks.len()).all(|j| attaches(masks[j], &masks[..j]))
}

fn attaches(f: Mask, before: &[Mask]) -> bool {
    let want = card(f) - 1;
    let meets: Vec<Mask> = before.iter().map(|&g| f & g).collect();
    // Every intersection must lie in a codimension-one one.
    let ridges: Vec<&Mask> = meets.iter().filter(|&&m| card(m) == want).collect();
    !ridges.is_empty() && meets.iter().all(|&m| ridges.iter().any(|&&r| m & !r == 0))
}

/// Brute-force backtracking search for a shelling order, trying facets in squashed order.
pub fn find_shelling(c: &SimplicialComplex, facet_limit: usize) -> Result<Option<Vec<Face>>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let n = c.facet_count();
    let limit = facet_limit.min(64);
    if n > limit {
        return Err(Error::LimitExceeded { found: n, limit });
    }
    let facets = c.facet_masks();
    let mut order = Vec::with_capacity(n);
    let mut dead = HashSet::new();
    if shell_from(facets, 0, &mut order, &mut dead) {
        Ok(Some(order.iter().map(|&j| c.face_of(facets[j])).collect()))
    } else {
        Ok(None)
    }
}

fn shell_from(
    facets: &[Mask],
    used: u64,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    let before: Vec<Mask> = order.iter().map(|&j| facets[j]).collect();
    for j in 0..facets.len() {
        if used >> j & 1 == 1 {
            continue;
        }
        if !before.is_empty() && !attaches(facets[j], &before) {
            continue;
        }
        order.push(j);
        if shell_from(facets, used | 1 << j, order, dead) {
            return true;
        }
        order.pop();
    }
    dead.insert(used);
    false
}
