//! Zero loci of Bernstein-Sato-type ideals given by factored linear data.
//!
//! Ideals are imported, never computed. A datum is an intersection of
//! ideals: one ideal generated by products of affine-linear factors, and any
//! number of ideals generated by affine-linear forms. Its zero locus is a
//! finite union of rational affine subspaces of `ℂʳ`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::affine::{AffineLocus, AffineSubspace};
use crate::arrangement::{intersection_lattice, is_dense, MultiArrangement};
use crate::error::{Error, Result};
use crate::form::AffineForm;
use crate::linalg::{rat_int, IntMatrix, Rat};
use crate::support::uniform_support_union;
use crate::torus::{exp_locus, preimage_monomial, CosetUnion, TorsionCoset};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub form: AffineForm,
    pub power: u32,
}

impl Factor {
    pub fn new(form: AffineForm, power: u32) -> Self {
        Factor { form, power }
    }
}

/// `⟨g₁, …, g_k⟩ ∩ ⋂_e ⟨ℓ_{e,1}, …⟩`.
///
/// When `generators` is empty only the `intersect_of` part is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSIdealDatum {
    pub r: usize,
    pub generators: Vec<Vec<Factor>>,
    pub intersect_of: Vec<Vec<Factor>>,
    pub locality: Option<String>,
    pub label: Option<String>,
}

impl BSIdealDatum {
    pub fn new(r: usize, generators: Vec<Vec<Factor>>, intersect_of: Vec<Vec<Factor>>) -> Result<Self> {
        let d = BSIdealDatum { r, generators, intersect_of, locality: None, label: None };
        d.validate()?;
        Ok(d)
    }

    pub fn principal(r: usize, factors: Vec<Factor>) -> Result<Self> {
        Self::new(r, vec![factors], Vec::new())
    }

    /// A datum whose zero locus is exactly `l`.
    pub fn from_locus(l: &AffineLocus) -> Self {
        let entries =
            l.components().iter().map(|c| c.forms().iter().map(|f| Factor::new(f.clone(), 1)).collect()).collect();
        BSIdealDatum { r: l.dim(), generators: Vec::new(), intersect_of: entries, locality: None, label: None }
    }

    pub fn validate(&self) -> Result<()> {
        if self.generators.is_empty() && self.intersect_of.is_empty() {
            return Err(Error::Invalid("ideal datum has neither generators nor intersect_of entries".into()));
        }
        for f in self.generators.iter().chain(&self.intersect_of).flatten() {
            if f.form.dim() != self.r {
                return Err(Error::Dimension(format!("factor {} is not in {} variables", f.form, self.r)));
            }
            if f.power == 0 {
                return Err(Error::Invalid(format!("factor {} has power 0", f.form)));
            }
        }
        Ok(())
    }

    pub fn factors(&self) -> impl Iterator<Item = &Factor> {
        self.generators.iter().chain(&self.intersect_of).flatten()
    }
}

fn render_product(factors: &[Factor]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|f| if f.power == 1 { format!("({})", f.form) } else { format!("({})^{}", f.form, f.power) })
        .collect()
}

impl fmt::Display for BSIdealDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.generators.is_empty() {
            parts.push(format!(
                "<{}>",
                self.generators.iter().map(|g| render_product(g)).collect::<Vec<_>>().join(", ")
            ));
        }
        for e in &self.intersect_of {
            parts.push(format!("<{}>", e.iter().map(|x| x.form.to_string()).collect::<Vec<_>>().join(", ")));
        }
        write!(f, "{}", parts.join(" ∩ "))
    }
}

fn hyperplanes_of(r: usize, factors: &[Factor]) -> AffineLocus {
    AffineLocus::new(r, factors.iter().map(|f| AffineSubspace::hyperplane(f.form.clone())).collect())
        .expect("factor dimensions checked")
}

pub fn locus(b: &BSIdealDatum) -> AffineLocus {
    let mut comps: Vec<AffineSubspace> = Vec::new();
    if !b.generators.is_empty() {
        let mut acc = AffineLocus::new(b.r, vec![AffineSubspace::whole(b.r)]).expect("dimension");
        for g in &b.generators {
            acc = acc.intersection(&hyperplanes_of(b.r, g)).expect("dimension");
        }
        comps.extend(acc.components().iter().cloned());
    }
    for e in &b.intersect_of {
        let forms: Vec<AffineForm> = e.iter().map(|f| f.form.clone()).collect();
        if let Ok(s) = AffineSubspace::from_forms(b.r, &forms) {
            comps.push(s);
        }
    }
    AffineLocus::new(b.r, comps).expect("dimension")
}

fn coordinate_index(f: &AffineForm) -> Option<usize> {
    if !f.is_homogeneous() {
        return None;
    }
    let nz: Vec<usize> = (0..f.dim()).filter(|&i| !f.coeffs()[i].is_zero()).collect();
    (nz.len() == 1).then(|| nz[0])
}

/// The closed-form generator `∏_i ∏_{k=1..a_i} (l_i(s) + k)` of a monomial tuple
/// and its zero locus, where `l_i(s) = Σ_j a_{i,j} s_j` collects the exponents of `x_i`.
pub fn monomial_bs_locus(a: &MultiArrangement) -> Result<(Vec<Factor>, AffineLocus)> {
    let mut powers: std::collections::BTreeMap<AffineForm, u32> = Default::default();
    for h in a.hyperplanes() {
        if coordinate_index(&h.form).is_none() {
            return Err(Error::Precondition(format!(
                "hyperplane {} is not a coordinate hyperplane",
                h.form.render("x")
            )));
        }
        let total: u64 = h.mults.iter().sum();
        let coeffs: Vec<Rat> = h.mults.iter().map(|&m| Rat::from_integer(m.into())).collect();
        for k in 1..=total {
            let (form, _) = AffineForm::normalize(&coeffs, &Rat::from_integer(k.into()))?;
            *powers.entry(form).or_insert(0) += 1;
        }
    }
    let factors: Vec<Factor> = powers.into_iter().map(|(form, power)| Factor { form, power }).collect();
    let l = hyperplanes_of(a.r(), &factors);
    Ok((factors, l))
}

/// Zero locus of `t^c · B` given that of `B`: every component moves by `−c`.
pub fn translate(l: &AffineLocus, c: &[BigInt]) -> AffineLocus {
    let v: Vec<Rat> = c.iter().map(|x| -rat_int(x)).collect();
    l.translated(&v)
}

/// `⋃_{j: m_{π(j)}>0} ⋃_{k<m_{π(j)}} (V(B^{e_{π(j)}}) − c_{j,k})` where `c_{j,k}`
/// has `m_{π(i)}` in slot `π(i)` for `i < j`, `k` in slot `π(j)` and zeros elsewhere.
/// `pi` is 0-based.
pub fn vb_decomposition(unit_loci: &[AffineLocus], m: &[u64], pi: &[usize]) -> Result<AffineLocus> {
    let r = unit_loci.len();
    if m.len() != r || pi.len() != r {
        return Err(Error::Dimension(format!(
            "{r} unit loci, {} entries in m, {} in the permutation",
            m.len(),
            pi.len()
        )));
    }
    let mut seen = vec![false; r];
    for &p in pi {
        if p >= r || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Invalid("not a permutation".into()));
        }
    }
    if let Some(l) = unit_loci.iter().find(|l| l.dim() != r) {
        return Err(Error::Dimension(format!("unit locus in dimension {} for r = {r}", l.dim())));
    }
    let mut comps = Vec::new();
    let mut c = vec![BigInt::zero(); r];
    for &idx in pi {
        for k in 0..m[idx] {
            c[idx] = BigInt::from(k);
            comps.extend(translate(&unit_loci[idx], &c).components().iter().cloned());
        }
        c[idx] = BigInt::from(m[idx]);
    }
    AffineLocus::new(r, comps)
}

/// `⋃_{j: m_j ≠ 0} Exp(V(B^{e_j}))`.
pub fn exp_vb(unit_loci: &[AffineLocus], m: &[u64]) -> Result<CosetUnion> {
    let r = unit_loci.len();
    if m.len() != r {
        return Err(Error::Dimension(format!("{r} unit loci, {} entries in m", m.len())));
    }
    let mut out = CosetUnion::empty(r);
    for (l, _) in unit_loci.iter().zip(m).filter(|(_, &mj)| mj != 0) {
        out = out.union(&exp_locus(l))?;
    }
    Ok(out)
}

/// `Σ_j deg(f_j) s_j + n = 0` for a central, essential, indecomposable arrangement.
pub fn conjnd_hyperplane(a: &MultiArrangement) -> Result<AffineSubspace> {
    if !a.is_central() || !a.is_essential() {
        return Err(Error::Precondition("arrangement must be central and essential".into()));
    }
    let all: Vec<usize> = (0..a.hyperplanes().len()).collect();
    let origin = a.edge_of(&all).ok_or_else(|| Error::Precondition("arrangement is empty".into()))?;
    if !is_dense(a, &origin) {
        return Err(Error::Precondition("arrangement is decomposable".into()));
    }
    let coeffs: Vec<BigInt> = a.degrees().into_iter().map(BigInt::from).collect();
    let form = AffineForm::new(coeffs, Rat::from_integer(a.n().into()))?;
    Ok(AffineSubspace::hyperplane(form))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conj2Verdict {
    Equal,
    /// The Exp locus is strictly larger than the support union.
    StrictlyContains,
    /// The Exp locus misses part of the support union; this contradicts a theorem, so the data is suspect.
    StrictlyContained,
    Incomparable,
}

impl fmt::Display for Conj2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conj2Verdict::Equal => "equal",
            Conj2Verdict::StrictlyContains => "strictly_contains",
            Conj2Verdict::StrictlyContained => "strictly_contained",
            Conj2Verdict::Incomparable => "incomparable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conj2Report {
    pub verdict: Conj2Verdict,
    pub exp: CosetUnion,
    pub support: CosetUnion,
    /// Components of the Exp locus not covered by the support union.
    pub extra_in_exp: Vec<TorsionCoset>,
    /// Components of the support union not covered by the Exp locus.
    pub missing_from_exp: Vec<TorsionCoset>,
}

pub fn check_conj2_exp(a: &MultiArrangement, exp: &CosetUnion) -> Result<Conj2Report> {
    if exp.ambient_dim() != a.r() {
        return Err(Error::Dimension(format!(
            "ideal data in {} variables, tuple of length {}",
            exp.ambient_dim(),
            a.r()
        )));
    }
    let support = uniform_support_union(a).total;
    let extra_in_exp = support.missing_from(exp);
    let missing_from_exp = exp.missing_from(&support);
    let verdict = match (extra_in_exp.is_empty(), missing_from_exp.is_empty()) {
        (true, true) => Conj2Verdict::Equal,
        (false, true) => Conj2Verdict::StrictlyContains,
        (true, false) => Conj2Verdict::StrictlyContained,
        (false, false) => Conj2Verdict::Incomparable,
    };
    Ok(Conj2Report { verdict, exp: exp.clone(), support, extra_in_exp, missing_from_exp })
}

pub fn check_conj2(a: &MultiArrangement, b: &BSIdealDatum) -> Result<Conj2Report> {
    if b.r != a.r() {
        return Err(Error::Dimension(format!("ideal data in {} variables, tuple of length {}", b.r, a.r())));
    }
    check_conj2_exp(a, &exp_locus(&locus(b)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub holds: bool,
    /// Components of the smaller side that are not covered.
    pub witnesses: Vec<TorsionCoset>,
}

/// `φ_M^{-1}(Exp V(B_F)) ⊇ Exp V(B_{F^M})` with `M` of shape `p × r`.
pub fn check_bs_specialization(bf: &BSIdealDatum, bg: &BSIdealDatum, m: &IntMatrix) -> Result<InclusionReport> {
    if m.cols() != bf.r || m.rows() != bg.r {
        return Err(Error::Dimension(format!(
            "matrix is {}x{}, ideals are in {} and {} variables",
            m.rows(),
            m.cols(),
            bg.r,
            bf.r
        )));
    }
    let pulled = preimage_monomial(m, &exp_locus(&locus(bf)))?;
    let witnesses = pulled.missing_from(&exp_locus(&locus(bg)));
    Ok(InclusionReport { holds: witnesses.is_empty(), witnesses })
}

/// Every factor must have nonnegative coefficients and positive constant term,
/// up to an overall sign. Returns the offending factors.
pub fn check_conj1_shape(b: &BSIdealDatum) -> (bool, Vec<AffineForm>) {
    let mut bad: Vec<AffineForm> = b
        .factors()
        .map(|f| &f.form)
        .filter(|f| f.coeffs().iter().any(|c| c.is_negative()) || !f.constant().is_positive())
        .cloned()
        .collect();
    bad.sort();
    bad.dedup();
    (bad.is_empty(), bad)
}

/// The candidate hyperplanes `Σ_j a_{W,j} s_j + codim W` over dense edges, each
/// checked against the degree data of the restriction `F_W`. Used by the
/// reduction of the strong conjecture to dense edges.
pub(crate) fn dense_edge_conjnd_planes(a: &MultiArrangement) -> Result<Vec<(AffineForm, AffineSubspace)>> {
    let mut out = Vec::new();
    for w in intersection_lattice(a) {
        if !is_dense(a, &w) {
            continue;
        }
        let d: Vec<BigInt> = a.degree_vector(w.through.iter().copied()).into_iter().map(BigInt::from).collect();
        let cand = AffineForm::new(d, Rat::from_integer(w.codim.into()))?;
        let restricted = crate::arrangement::restriction(a, &w);
        out.push((cand, conjnd_hyperplane(&restricted)?));
    }
    Ok(out)
}
