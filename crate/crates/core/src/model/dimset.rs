//! Dimensions, dimension sets and tuples.
//!
//! A dimension set is the subset of a model's dimensions over which a
//! variable varies. Sets are kept in canonical order (the order the
//! dimensions were declared in the model), so two sets built from the same
//! dimensions always compare equal regardless of construction order.

use std::fmt;

use crate::model::Model;

/// One member of a dimension: a short code plus an optional display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub code: String,
    pub label: Option<String>,
}

/// A named axis of variation with an ordered list of members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimension {
    pub name: String,
    /// Single uppercase letter used in key names; unique within a model.
    pub initial: char,
    pub members: Vec<Member>,
}

impl Dimension {
    pub fn member_count(&self) -> usize {
        self.members.len()
    }

    pub fn member_index(&self, code: &str) -> Option<usize> {
        self.members.iter().position(|m| m.code == code)
    }
}

/// An ordered set of dimensions, stored as sorted indices into
/// [`Model::dimensions`]. The empty set is valid and denotes a
/// dimensionless variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DimSet {
    dims: Vec<usize>,
}

impl DimSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a set from dimension indices; sorts and dedups into canonical
    /// order.
    pub fn from_indices(mut dims: Vec<usize>) -> Self {
        dims.sort_unstable();
        dims.dedup();
        Self { dims }
    }

    pub fn indices(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn contains(&self, dim: usize) -> bool {
        self.dims.binary_search(&dim).is_ok()
    }

    /// Canonical-order union of two sets.
    pub fn union(&self, other: &DimSet) -> DimSet {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        DimSet::from_indices(dims)
    }

    /// True iff every dimension of `self` is in `other`.
    pub fn is_subset(&self, other: &DimSet) -> bool {
        self.dims.iter().all(|d| other.contains(*d))
    }

    pub fn is_proper_subset(&self, other: &DimSet) -> bool {
        self.is_subset(other) && self.dims.len() < other.dims.len()
    }

    /// Dimension names joined by `-`, e.g. `Sector-Product`. Empty for the
    /// dimensionless set.
    pub fn joined_name(&self, model: &Model) -> String {
        self.dims
            .iter()
            .map(|&d| model.dimensions[d].name.as_str())
            .collect::<Vec<_>>()
            .join("-")
    }

    /// Concatenated dimension initials, e.g. `MSP`. Empty for the
    /// dimensionless set.
    pub fn initials(&self, model: &Model) -> String {
        self.dims.iter().map(|&d| model.dimensions[d].initial).collect()
    }

    /// Product of the member counts; 1 for the dimensionless set.
    pub fn cardinality(&self, model: &Model) -> usize {
        self.dims.iter().map(|&d| model.dimensions[d].member_count()).product()
    }
}

/// One coordinate per dimension of a [`DimSet`], as member codes in
/// canonical dimension order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tuple {
    codes: Vec<String>,
}

impl Tuple {
    pub fn new(codes: Vec<String>) -> Self {
        Self { codes }
    }

    pub fn scalar() -> Self {
        Self::default()
    }

    pub fn codes(&self) -> &[String] {
        &self.codes
    }

    pub fn arity(&self) -> usize {
        self.codes.len()
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.codes.join("-"))
    }
}

impl<S: Into<String>, const N: usize> From<[S; N]> for Tuple {
    fn from(codes: [S; N]) -> Self {
        Tuple::new(codes.into_iter().map(Into::into).collect())
    }
}

/// Errors from the dimension-set algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimSetError {
    #[error("{child} is not a subset of {parent}")]
    NotASubset { child: String, parent: String },
    #[error("tuple arity {got} does not match dimension set size {want}")]
    ArityMismatch { got: usize, want: usize },
}

/// Keeps exactly the coordinates of `target`'s dimensions, canonical order
/// preserved. `tuple` must belong to `source`, and `target` must be a
/// subset of `source`.
pub fn project_tuple(
    tuple: &Tuple,
    source: &DimSet,
    target: &DimSet,
    model: &Model,
) -> Result<Tuple, DimSetError> {
    if tuple.arity() != source.len() {
        return Err(DimSetError::ArityMismatch { got: tuple.arity(), want: source.len() });
    }
    if !target.is_subset(source) {
        return Err(DimSetError::NotASubset {
            child: target.joined_name(model),
            parent: source.joined_name(model),
        });
    }
    let codes = target
        .indices()
        .iter()
        .map(|d| {
            let pos = source.indices().iter().position(|s| s == d).expect("subset checked");
            tuple.codes()[pos].clone()
        })
        .collect();
    Ok(Tuple::new(codes))
}
