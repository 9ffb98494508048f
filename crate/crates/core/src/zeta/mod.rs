//! Topological zeta functions, polar loci and the monodromy checks.

mod poly;
mod rational;
mod resolution;

pub use poly::SPoly;
pub use rational::{substitute_affine, SRationalFunction};
pub use resolution::{
    blown_up_points, canonical_resolution_2d, zeta_from_resolution, Divisor, ResolutionData, Stratum,
};

use std::fmt;

use num_bigint::BigInt;

use crate::affine::{AffineLocus, AffineSubspace};
use crate::arrangement::{intersection_lattice, is_dense, MultiArrangement};
use crate::bs::{dense_edge_conjnd_planes, locus, BSIdealDatum};
use crate::error::{Error, Result};
use crate::form::AffineForm;
use crate::linalg::Rat;
use crate::support::uniform_support_union;
use crate::torus::{exp_affine, CosetUnion};

/// Sorted, deduplicated set of primitive affine forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarLocus(Vec<AffineForm>);

impl PolarLocus {
    pub fn new(mut forms: Vec<AffineForm>) -> Self {
        forms.sort();
        forms.dedup();
        PolarLocus(forms)
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.0
    }

    pub fn is_subset_of(&self, other: &PolarLocus) -> bool {
        self.0.iter().all(|f| other.0.binary_search(f).is_ok())
    }
}

impl fmt::Display for PolarLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut forms: Vec<&AffineForm> = self.0.iter().collect();
        forms.sort_by(|a, b| rational::display_order(a, b));
        let parts: Vec<String> = forms.iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn polar_locus(z: &SRationalFunction) -> PolarLocus {
    PolarLocus::new(z.polar_forms())
}

/// `Σ_j a_{W,j} s_j + codim W` over the dense edges `W`.
pub fn polar_candidates(a: &MultiArrangement) -> PolarLocus {
    let forms = intersection_lattice(a)
        .into_iter()
        .filter(|w| is_dense(a, w))
        .map(|w| {
            let d: Vec<BigInt> = a.degree_vector(w.through.iter().copied()).into_iter().map(BigInt::from).collect();
            AffineForm::new(d, Rat::from_integer(w.codim.into()))
                .expect("edge meets some hyperplane with nonzero multiplicity")
        })
        .collect();
    PolarLocus::new(forms)
}

/// The zeta function of a plane arrangement via its canonical resolution.
pub fn zeta_2d(a: &MultiArrangement, local: bool) -> Result<SRationalFunction> {
    zeta_from_resolution(&canonical_resolution_2d(a)?, local)
}

#[derive(Clone, Debug)]
pub enum ZetaSource {
    /// Canonical resolution, available for `n = 2`.
    Builtin,
    Candidates,
    Resolution(ResolutionData),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCheck {
    pub holds: bool,
    pub checked: PolarLocus,
    pub witnesses: Vec<AffineForm>,
}

/// Every polar form `ℓ` has `Exp(V(ℓ))` inside `support`.
pub fn check_monodromy_against(forms: &PolarLocus, support: &CosetUnion) -> FormCheck {
    let witnesses: Vec<AffineForm> = forms
        .forms()
        .iter()
        .filter(|f| !support.contains_coset(&exp_affine(&AffineSubspace::hyperplane((*f).clone()))))
        .cloned()
        .collect();
    FormCheck { holds: witnesses.is_empty(), checked: forms.clone(), witnesses }
}

pub fn check_monodromy(a: &MultiArrangement, source: &ZetaSource) -> Result<FormCheck> {
    let forms = match source {
        ZetaSource::Builtin => polar_locus(&zeta_2d(a, false)?),
        ZetaSource::Candidates => polar_candidates(a),
        ZetaSource::Resolution(d) => {
            if d.r != a.r() {
                return Err(Error::Dimension(format!("resolution data for r = {}, tuple of length {}", d.r, a.r())));
            }
            polar_locus(&zeta_from_resolution(d, false)?)
        }
    };
    Ok(check_monodromy_against(&forms, &uniform_support_union(a).total))
}

/// Every polar hyperplane lies in `l`.
pub fn check_strong_monodromy_locus(p: &PolarLocus, l: &AffineLocus) -> Result<FormCheck> {
    if let Some(f) = p.forms().iter().find(|f| f.dim() != l.dim()) {
        return Err(Error::Dimension(format!("polar form {f} is not in {} variables", l.dim())));
    }
    let witnesses: Vec<AffineForm> =
        p.forms().iter().filter(|f| !l.contains_subspace(&AffineSubspace::hyperplane((*f).clone()))).cloned().collect();
    Ok(FormCheck { holds: witnesses.is_empty(), checked: p.clone(), witnesses })
}

pub fn check_strong_monodromy(p: &PolarLocus, b: &BSIdealDatum) -> Result<FormCheck> {
    check_strong_monodromy_locus(p, &locus(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCheck {
    pub holds: bool,
    /// Dense-edge forms whose degree data disagrees with the restricted tuple.
    pub bookkeeping_failures: Vec<AffineForm>,
    /// Dense-edge forms not contained in the ideal's zero locus.
    pub witnesses: Vec<AffineForm>,
}

/// For each dense edge `W`, the candidate form equals the hyperplane attached
/// to the restriction `F_W`, and that hyperplane lies in `V(b)`.
pub fn check_thmsm_reduction(a: &MultiArrangement, b: &BSIdealDatum) -> Result<ReductionCheck> {
    if !a.is_central() {
        return Err(Error::Precondition("reduction check needs a central arrangement".into()));
    }
    if b.r != a.r() {
        return Err(Error::Dimension(format!("ideal data in {} variables, tuple of length {}", b.r, a.r())));
    }
    let l = locus(b);
    let mut bookkeeping_failures = Vec::new();
    let mut witnesses = Vec::new();
    for (cand, plane) in dense_edge_conjnd_planes(a)? {
        if AffineSubspace::hyperplane(cand.clone()) != plane {
            bookkeeping_failures.push(cand.clone());
        }
        if !l.contains_subspace(&plane) {
            witnesses.push(cand);
        }
    }
    Ok(ReductionCheck {
        holds: bookkeeping_failures.is_empty() && witnesses.is_empty(),
        bookkeeping_failures,
        witnesses,
    })
}
