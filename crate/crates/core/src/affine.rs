//! Rational affine subspaces of ℂʳ and finite unions of them.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form::AffineForm;
use crate::linalg::{rat_int, rref, solve_affine_rational, Rat};

/// Common zero set of finitely many affine forms, stored by a canonical
/// minimal set of defining forms (reduced echelon rows, each made primitive).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSubspace {
    dim: usize,
    forms: Vec<AffineForm>,
}

impl AffineSubspace {
    pub fn whole(dim: usize) -> Self {
        AffineSubspace { dim, forms: Vec::new() }
    }

    pub fn hyperplane(form: AffineForm) -> Self {
        AffineSubspace { dim: form.dim(), forms: vec![form] }
    }

    /// Errors with [`Error::EmptySubspace`] when the forms have no common zero.
    pub fn from_forms(dim: usize, forms: &[AffineForm]) -> Result<Self> {
        if let Some(f) = forms.iter().find(|f| f.dim() != dim) {
            return Err(Error::Dimension(format!("form {f} is not in {dim} variables")));
        }
        let mut rows: Vec<Vec<Rat>> = forms
            .iter()
            .map(|f| {
                let mut r = f.coeffs_rat();
                r.push(rat_int(f.constant()));
                r
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.last() == Some(&dim) {
            return Err(Error::EmptySubspace);
        }
        let forms = rows
            .iter()
            .map(|r| AffineForm::normalize(&r[..dim], &r[dim]).map(|(f, _)| f))
            .collect::<Result<Vec<_>>>()?;
        Ok(AffineSubspace { dim, forms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    /// A rational point and a basis of the direction space.
    pub fn point_and_directions(&self) -> (Vec<Rat>, Vec<Vec<Rat>>) {
        let a: Vec<Vec<Rat>> = self.forms.iter().map(|f| f.coeffs_rat()).collect();
        let b: Vec<Rat> = self.forms.iter().map(|f| -rat_int(f.constant())).collect();
        let s = solve_affine_rational(self.dim, &a, &b)
            .expect("forms have the ambient dimension")
            .expect("stored subspaces are consistent");
        (s.point, s.kernel)
    }

    pub fn contains_point(&self, p: &[Rat]) -> bool {
        self.forms.iter().all(|f| f.eval(p).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &AffineSubspace) -> bool {
        if other.dim != self.dim {
            return false;
        }
        let (p, dirs) = other.point_and_directions();
        self.contains_point(&p) && self.forms.iter().all(|f| dirs.iter().all(|d| f.kills_direction(d)))
    }

    pub fn intersect(&self, other: &AffineSubspace) -> Option<AffineSubspace> {
        let forms: Vec<AffineForm> = self.forms.iter().chain(&other.forms).cloned().collect();
        AffineSubspace::from_forms(self.dim, &forms).ok()
    }

    /// `{x + v : x ∈ self}`.
    pub fn translated(&self, v: &[Rat]) -> AffineSubspace {
        let forms: Vec<AffineForm> = self.forms.iter().map(|f| f.translated(v)).collect();
        AffineSubspace::from_forms(self.dim, &forms).expect("translation preserves consistency")
    }

    fn sort_key(&self) -> (usize, &[AffineForm]) {
        (self.forms.len(), &self.forms)
    }
}

impl fmt::Display for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.forms.is_empty() {
            return write!(f, "C^{}", self.dim);
        }
        write!(f, "V(")?;
        for (i, form) in self.forms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{form}")?;
        }
        write!(f, ")")
    }
}

/// Finite union of affine subspaces, irredundant and canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineLocus {
    dim: usize,
    components: Vec<AffineSubspace>,
}

impl AffineLocus {
    pub fn empty(dim: usize) -> Self {
        AffineLocus { dim, components: Vec::new() }
    }

    pub fn new(dim: usize, components: Vec<AffineSubspace>) -> Result<Self> {
        if let Some(c) = components.iter().find(|c| c.dim != dim) {
            return Err(Error::Dimension(format!("component {c} is not in {dim} variables")));
        }
        let mut components = components;
        components.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        components.dedup();
        // larger components sort first (fewer forms), so a single pass suffices
        let mut kept: Vec<AffineSubspace> = Vec::with_capacity(components.len());
        for c in components {
            if !kept.iter().any(|k| k.contains(&c)) {
                kept.push(c);
            }
        }
        Ok(AffineLocus { dim, components: kept })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[AffineSubspace] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn union(&self, other: &AffineLocus) -> Result<AffineLocus> {
        if self.dim != other.dim {
            return Err(Error::Dimension("union of loci in different dimensions".into()));
        }
        AffineLocus::new(self.dim, self.components.iter().chain(&other.components).cloned().collect())
    }

    pub fn intersection(&self, other: &AffineLocus) -> Result<AffineLocus> {
        if self.dim != other.dim {
            return Err(Error::Dimension("intersection of loci in different dimensions".into()));
        }
        let comps =
            self.components.iter().flat_map(|a| other.components.iter().filter_map(move |b| a.intersect(b))).collect();
        AffineLocus::new(self.dim, comps)
    }

    /// Is the subspace `s` contained in the locus? (Irreducible inside a finite union
    /// means inside one member.)
    pub fn contains_subspace(&self, s: &AffineSubspace) -> bool {
        self.components.iter().any(|c| c.contains(s))
    }

    /// `other ⊆ self`.
    pub fn includes(&self, other: &AffineLocus) -> bool {
        self.dim == other.dim && other.components.iter().all(|c| self.contains_subspace(c))
    }

    pub fn translated(&self, v: &[Rat]) -> AffineLocus {
        AffineLocus::new(self.dim, self.components.iter().map(|c| c.translated(v)).collect()).expect("same dimension")
    }
}

impl fmt::Display for AffineLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
