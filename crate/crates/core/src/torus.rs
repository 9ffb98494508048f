//! Torsion-translated subtori of `(ℂ*)^r`.
//!
//! A coset is encoded by a saturated character lattice `Λ ⊆ ℤ^r` (Hermite
//! basis `b_1, …, b_k`) and torsion values `χ(b_i) ∈ ℚ/ℤ`; it is the set
//! `{t : t^{b_i} = e^{2πi χ(b_i)}}`. Saturation makes each coset irreducible,
//! so inclusion of finite unions reduces to inclusion of single cosets.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine::{AffineLocus, AffineSubspace};
use crate::error::{Error, Result};
use crate::linalg::{hnf, rat_int, saturate, smith_form, IntMatrix, Lattice, Rat};

/// An element of ℚ/ℤ, stored as its representative in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZ(Rat);

impl QZ {
    pub fn new(value: Rat) -> Self {
        let floor = value.floor();
        QZ(value - floor)
    }

    pub fn zero() -> Self {
        QZ(Rat::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        QZ::new(Rat::new(n.into(), d.into()))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Order of `e^{2πi·value}` as a root of unity.
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn dot(a: &[BigInt], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| rat_int(x) * y).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionCoset {
    lattice: Lattice,
    torsion: Vec<QZ>,
}

impl TorsionCoset {
    /// The whole torus `(ℂ*)^r`.
    pub fn full(r: usize) -> Self {
        TorsionCoset { lattice: Lattice::zero(r), torsion: Vec::new() }
    }

    /// Builds the canonical form from an independent set of characters spanning a
    /// saturated lattice, with a torsion value for each.
    pub fn from_basis(r: usize, rows: Vec<Vec<BigInt>>, values: Vec<Rat>) -> Result<Self> {
        if rows.len() != values.len() {
            return Err(Error::Dimension("one torsion value per basis row".into()));
        }
        let m = IntMatrix::from_rows(r, rows)?;
        let (h, u) = hnf(&m);
        let k = m.rows();
        if (0..k).any(|i| h.row(i).iter().all(|x| x.is_zero())) {
            return Err(Error::Invalid("coset characters are linearly dependent".into()));
        }
        let lattice = Lattice::from_matrix(&h);
        if saturate(&lattice) != lattice {
            return Err(Error::Invalid("coset lattice is not saturated".into()));
        }
        let torsion = (0..k).map(|i| QZ::new(dot(u.row(i), &values))).collect();
        Ok(TorsionCoset { lattice, torsion })
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn torsion(&self) -> &[QZ] {
        &self.torsion
    }

    /// Dimension of the coset as a variety.
    pub fn dimension(&self) -> usize {
        self.ambient_dim() - self.lattice.rank()
    }

    pub fn constraints(&self) -> Vec<(Vec<BigInt>, QZ)> {
        self.lattice.basis_rows().into_iter().zip(self.torsion.iter().cloned()).collect()
    }

    /// The torsion character evaluated on a lattice vector.
    pub fn character(&self, v: &[BigInt]) -> Option<QZ> {
        let c = self.lattice.coordinates(v)?;
        Some(QZ::new(c.iter().zip(&self.torsion).map(|(a, t)| rat_int(a) * t.value()).sum()))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &TorsionCoset) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.constraints().iter().all(|(b, chi)| other.character(b).as_ref() == Some(chi))
    }

    /// Is `exp(2πi·x)` in the coset?
    pub fn contains_exp_point(&self, x: &[Rat]) -> bool {
        self.constraints().iter().all(|(b, chi)| QZ::new(dot(b, x)) == *chi)
    }

    pub fn intersect(&self, other: &TorsionCoset) -> Result<CosetUnion> {
        let mut cons = self.constraints();
        cons.extend(other.constraints());
        solve_character_constraints(self.ambient_dim(), &cons)
    }

    fn render(&self) -> String {
        if self.lattice.rank() == 0 {
            return format!("(C*)^{}", self.ambient_dim());
        }
        let r = self.ambient_dim();
        let parts: Vec<String> = self
            .constraints()
            .iter()
            .map(|(b, chi)| {
                let mut mono = String::new();
                for (j, e) in b.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    mono.push('t');
                    if r > 1 {
                        mono.push_str(&(j + 1).to_string());
                    }
                    if !e.is_one() {
                        mono.push_str(&format!("^{e}"));
                    }
                }
                if chi.is_zero() {
                    format!("{mono}=1")
                } else {
                    format!("{mono}=e(2πi·{chi})")
                }
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for TorsionCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Finite union of torsion cosets, irredundant and canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetUnion {
    ambient_dim: usize,
    components: Vec<TorsionCoset>,
}

impl CosetUnion {
    pub fn empty(r: usize) -> Self {
        CosetUnion { ambient_dim: r, components: Vec::new() }
    }

    pub fn new(r: usize, components: Vec<TorsionCoset>) -> Result<Self> {
        if let Some(c) = components.iter().find(|c| c.ambient_dim() != r) {
            return Err(Error::Dimension(format!("component {c} does not live in (C*)^{r}")));
        }
        let mut components = components;
        components.sort();
        components.dedup();
        // lower-rank lattices (bigger cosets) come first
        let mut kept: Vec<TorsionCoset> = Vec::with_capacity(components.len());
        for c in components {
            if !kept.iter().any(|k| k.contains(&c)) {
                kept.push(c);
            }
        }
        Ok(CosetUnion { ambient_dim: r, components: kept })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn components(&self) -> &[TorsionCoset] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    fn check_dim(&self, other: &CosetUnion) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "coset unions in (C*)^{} and (C*)^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn union(&self, other: &CosetUnion) -> Result<CosetUnion> {
        self.check_dim(other)?;
        CosetUnion::new(self.ambient_dim, self.components.iter().chain(&other.components).cloned().collect())
    }

    pub fn contains_coset(&self, c: &TorsionCoset) -> bool {
        self.components.iter().any(|k| k.contains(c))
    }

    /// `other ⊆ self`.
    pub fn includes(&self, other: &CosetUnion) -> Result<bool> {
        self.check_dim(other)?;
        Ok(other.components.iter().all(|c| self.contains_coset(c)))
    }

    pub fn equals(&self, other: &CosetUnion) -> Result<bool> {
        Ok(self.includes(other)? && other.includes(self)?)
    }

    /// Components of `other` not contained in `self`.
    pub fn missing_from(&self, other: &CosetUnion) -> Vec<TorsionCoset> {
        other.components.iter().filter(|c| !self.contains_coset(c)).cloned().collect()
    }

    pub fn intersection(&self, other: &CosetUnion) -> Result<CosetUnion> {
        self.check_dim(other)?;
        let mut comps = Vec::new();
        for a in &self.components {
            for b in &other.components {
                comps.extend(a.intersect(b)?.components);
            }
        }
        CosetUnion::new(self.ambient_dim, comps)
    }

    /// Components of codimension one (rank-one lattice).
    pub fn codim_one(&self) -> CosetUnion {
        CosetUnion {
            ambient_dim: self.ambient_dim,
            components: self.components.iter().filter(|c| c.lattice().rank() == 1).cloned().collect(),
        }
    }

    pub fn contains_exp_point(&self, x: &[Rat]) -> bool {
        self.components.iter().any(|c| c.contains_exp_point(x))
    }
}

impl fmt::Display for CosetUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.render()).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

/// Exact solution set of `{t^a = e^{2πiζ}}` as a union of irreducible cosets.
///
/// With `U·A·V = D` in Smith form, the rows of `V⁻¹` paired with nonzero
/// invariant factors `d_i` span the saturation of the constraint lattice. Each
/// choice of `d_i`-th roots gives one component, so there are `∏ d_i` of them.
pub fn solve_character_constraints(r: usize, constraints: &[(Vec<BigInt>, QZ)]) -> Result<CosetUnion> {
    if let Some((a, _)) = constraints.iter().find(|(a, _)| a.len() != r) {
        return Err(Error::Dimension(format!("character of length {} in dimension {r}", a.len())));
    }
    let rows: Vec<Vec<BigInt>> = constraints.iter().map(|(a, _)| a.clone()).collect();
    let zeta: Vec<Rat> = constraints.iter().map(|(_, z)| z.value().clone()).collect();
    if rows.is_empty() {
        return CosetUnion::new(r, vec![TorsionCoset::full(r)]);
    }
    let m = IntMatrix::from_rows(r, rows)?;
    let s = smith_form(&m);
    let d = s.invariant_factors();
    let transformed: Vec<QZ> = (0..m.rows()).map(|i| QZ::new(dot(s.u.row(i), &zeta))).collect();
    if transformed[d.len()..].iter().any(|z| !z.is_zero()) {
        return Ok(CosetUnion::empty(r));
    }
    let basis: Vec<Vec<BigInt>> = (0..d.len()).map(|i| s.v_inv.row(i).to_vec()).collect();

    let mut comps = Vec::new();
    let mut choice = vec![BigInt::zero(); d.len()];
    loop {
        let values: Vec<Rat> =
            (0..d.len()).map(|i| (transformed[i].value() + rat_int(&choice[i])) / rat_int(&d[i])).collect();
        comps.push(TorsionCoset::from_basis(r, basis.clone(), values)?);
        // odometer over ∏ [0, d_i)
        let mut i = 0;
        loop {
            if i == d.len() {
                return CosetUnion::new(r, comps);
            }
            choice[i] += 1;
            if choice[i] < d[i] {
                break;
            }
            choice[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Zariski closure of `Exp(sub)` for a rational affine subspace.
pub fn exp_affine(sub: &AffineSubspace) -> TorsionCoset {
    let r = sub.dim();
    let normals: Vec<Vec<BigInt>> = sub.forms().iter().map(|f| f.coeffs().to_vec()).collect();
    let lattice = saturate(&Lattice::from_generators(r, &normals).expect("forms live in dimension r"));
    let (point, _) = sub.point_and_directions();
    let rows = lattice.basis_rows();
    let values = rows.iter().map(|b| dot(b, &point)).collect();
    TorsionCoset::from_basis(r, rows, values).expect("saturated basis")
}

pub fn exp_locus(l: &AffineLocus) -> CosetUnion {
    CosetUnion::new(l.dim(), l.components().iter().map(exp_affine).collect()).expect("same dimension")
}

/// `φ_M^{-1}(u)` for the monomial map `φ_M(λ)_j = ∏_k λ_k^{m_kj}`, `m` of shape `p × r`.
/// A character `b` of `(ℂ*)^r` pulls back to `M·b`.
pub fn preimage_monomial(m: &IntMatrix, u: &CosetUnion) -> Result<CosetUnion> {
    if m.cols() != u.ambient_dim() {
        return Err(Error::Dimension(format!(
            "matrix has {} columns, union lives in (C*)^{}",
            m.cols(),
            u.ambient_dim()
        )));
    }
    let p = m.rows();
    let mut comps = Vec::new();
    for c in u.components() {
        let cons: Vec<(Vec<BigInt>, QZ)> =
            c.constraints().into_iter().map(|(b, chi)| Ok((m.apply(&b)?, chi))).collect::<Result<_>>()?;
        comps.extend(solve_character_constraints(p, &cons)?.components);
    }
    CosetUnion::new(p, comps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenvalueSet {
    AllOfCStar,
    Finite(BTreeSet<QZ>),
}

impl fmt::Display for EigenvalueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueSet::AllOfCStar => write!(f, "C*"),
            EigenvalueSet::Finite(s) => {
                let parts: Vec<String> = s.iter().map(|q| format!("e(2πi·{q})")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Intersection with the diagonal `t_1 = … = t_r`, as a subset of `ℂ*`.
pub fn restrict_to_diagonal(u: &CosetUnion) -> EigenvalueSet {
    let ones = IntMatrix::new(1, u.ambient_dim(), vec![BigInt::one(); u.ambient_dim()]).expect("row of ones");
    let line = preimage_monomial(&ones, u).expect("shape matches");
    let mut points = BTreeSet::new();
    for c in line.components() {
        if c.lattice().rank() == 0 {
            return EigenvalueSet::AllOfCStar;
        }
        points.insert(c.torsion()[0].clone());
    }
    EigenvalueSet::Finite(points)
}
