//! Uniform supports of the specialization complex of a multi-arrangement.
//!
//! Every edge `W` contributes the locus `{t^{d^{(i)}_W} = 1 : blocks i}` where
//! the `d^{(i)}_W` are the summed multiplicity vectors of the blocks of the
//! total splitting at `W`. The uniform support union is the union over all
//! edges. Non-reduced entries and shared factors are handled by the summed
//! multiplicities, which is the pullback of the reduced formula along the
//! multiplicity matrix.

use crate::arrangement::{
    chart_restriction, intersection_lattice, is_dense, product, regroup, total_splitting, Edge, MultiArrangement,
    Splitting,
};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Rat};
use crate::torus::{
    preimage_monomial, restrict_to_diagonal, solve_character_constraints, CosetUnion, EigenvalueSet, TorsionCoset, QZ,
};

use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeContribution {
    pub edge: Edge,
    pub splitting: Splitting,
    pub support: CosetUnion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub per_edge: Vec<EdgeContribution>,
    pub total: CosetUnion,
    pub codim1: CosetUnion,
}

fn splitting_locus(r: usize, s: &Splitting) -> CosetUnion {
    let cons: Vec<(Vec<BigInt>, QZ)> =
        s.degree_vectors.iter().map(|d| (d.iter().map(|&x| BigInt::from(x)).collect(), QZ::zero())).collect();
    solve_character_constraints(r, &cons).expect("degree vectors have length r")
}

pub fn edge_contribution(a: &MultiArrangement, w: &Edge) -> CosetUnion {
    splitting_locus(a.r(), &total_splitting(a, w))
}

pub fn uniform_support_union(a: &MultiArrangement) -> SupportReport {
    let per_edge: Vec<EdgeContribution> = intersection_lattice(a)
        .into_iter()
        .map(|edge| {
            let splitting = total_splitting(a, &edge);
            let support = splitting_locus(a.r(), &splitting);
            EdgeContribution { edge, splitting, support }
        })
        .collect();
    let comps: Vec<TorsionCoset> = per_edge.iter().flat_map(|c| c.support.components().to_vec()).collect();
    let total = CosetUnion::new(a.r(), comps).expect("same dimension");
    let codim1 = total.codim_one();
    SupportReport { per_edge, total, codim1 }
}

/// Uniform support at `x`: the contribution of the smallest edge through `x`.
pub fn support_at_point(a: &MultiArrangement, x: &[Rat]) -> Result<CosetUnion> {
    let edge = a
        .edge_at_point(x)?
        .ok_or_else(|| Error::Precondition("point lies on no hyperplane of the arrangement".into()))?;
    Ok(edge_contribution(a, &edge))
}

pub fn milnor_eigenvalues(a: &MultiArrangement) -> EigenvalueSet {
    restrict_to_diagonal(&uniform_support_union(a).total)
}

/// Union over dense edges `W` of `{t^{a_W} = 1}` with `a_W` the summed
/// multiplicities of the hyperplanes through `W`. For reduced tuples of
/// distinct forms this is the codimension-one part of the support.
pub fn dense_edge_hypersurfaces(a: &MultiArrangement) -> CosetUnion {
    let mut comps = Vec::new();
    for w in intersection_lattice(a) {
        if !is_dense(a, &w) {
            continue;
        }
        let d: Vec<BigInt> = a.degree_vector(w.through.iter().copied()).into_iter().map(BigInt::from).collect();
        comps.extend(solve_character_constraints(a.r(), &[(d, QZ::zero())]).expect("length r").components().to_vec());
    }
    CosetUnion::new(a.r(), comps).expect("same dimension")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetComparison {
    pub holds: bool,
    pub left: CosetUnion,
    pub right: CosetUnion,
    /// Components present on one side only.
    pub witnesses: Vec<TorsionCoset>,
}

impl SetComparison {
    fn new(left: CosetUnion, right: CosetUnion) -> Result<Self> {
        let mut witnesses = left.missing_from(&right);
        witnesses.extend(right.missing_from(&left));
        Ok(SetComparison { holds: witnesses.is_empty(), left, right, witnesses })
    }
}

/// `φ_M^{-1}(support(F)) = support(F^M)`. `left` is the pullback, `right` the direct computation.
pub fn check_specialization(a: &MultiArrangement, m: &IntMatrix) -> Result<SetComparison> {
    let g = regroup(a, m)?;
    if g.is_degenerate() {
        return Err(Error::Degenerate(g.lost));
    }
    let pulled = preimage_monomial(m, &uniform_support_union(a).total)?;
    let direct = uniform_support_union(&g.arrangement).total;
    SetComparison::new(pulled, direct)
}

fn origin(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

/// Support at the origin of `F₁·F₂` on `ℂ^{n1+n2}` (left) against the
/// intersection of the supports of `F₁` and `F₂` at their origins (right).
pub fn check_thom_sebastiani(a1: &MultiArrangement, a2: &MultiArrangement) -> Result<SetComparison> {
    if a1.r() != a2.r() {
        return Err(Error::Dimension(format!("tuple lengths {} and {} differ", a1.r(), a2.r())));
    }
    let s1 = support_at_point(a1, &origin(a1.n()))?;
    let s2 = support_at_point(a2, &origin(a2.n()))?;
    let g = product(a1, a2)?;
    let sg = support_at_point(&g, &origin(g.n()))?;
    SetComparison::new(sg, s1.intersection(&s2)?)
}

/// Total support of a central arrangement (left) against the origin
/// contribution together with the total supports of the affine charts `x_i = 1` (right).
pub fn check_deconing(a: &MultiArrangement) -> Result<SetComparison> {
    if !a.is_central() {
        return Err(Error::Precondition("deconing needs a central arrangement".into()));
    }
    let total = uniform_support_union(a).total;
    let mut right =
        if a.hyperplanes().is_empty() { CosetUnion::empty(a.r()) } else { support_at_point(a, &origin(a.n()))? };
    for i in 0..a.n() {
        let chart = chart_restriction(a, i)?;
        right = right.union(&uniform_support_union(&chart).total)?;
    }
    SetComparison::new(total, right)
}
