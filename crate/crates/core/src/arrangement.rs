//! Hyperplane multi-arrangements over ℚ.
//!
//! A tuple `F = (f_1, …, f_r)` of products of affine-linear forms is stored as a
//! list of distinct hyperplanes, each carrying the vector of its multiplicities
//! in the `f_j`. The restriction of `F` to an edge is represented by the set of
//! hyperplanes through the edge; no quotient coordinates are built unless
//! [`restriction`] is asked for them explicitly.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::form::AffineForm;
use crate::linalg::{express_in_basis, primitive_integer, rank_rat, rat_int, solve_affine_rational, IntMatrix, Rat};

pub type LinearForm = AffineForm;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperplaneMulti {
    pub form: LinearForm,
    /// Multiplicity of this hyperplane in each tuple entry.
    pub mults: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiArrangement {
    n: usize,
    r: usize,
    hyperplanes: Vec<HyperplaneMulti>,
}

impl MultiArrangement {
    /// Validates the hyperplanes. Repeated hyperplanes are merged by adding
    /// their multiplicity vectors; hyperplanes with all-zero multiplicities are rejected.
    pub fn new(n: usize, r: usize, hyperplanes: Vec<HyperplaneMulti>) -> Result<Self> {
        let mut merged: Vec<HyperplaneMulti> = Vec::with_capacity(hyperplanes.len());
        for (i, h) in hyperplanes.into_iter().enumerate() {
            if h.form.dim() != n {
                return Err(Error::Dimension(format!(
                    "hyperplane {i}: form has {} coefficients, n = {n}",
                    h.form.dim()
                )));
            }
            if h.mults.len() != r {
                return Err(Error::Dimension(format!("hyperplane {i}: {} multiplicities, r = {r}", h.mults.len())));
            }
            if h.mults.iter().all(|&m| m == 0) {
                return Err(Error::Invalid(format!("hyperplane {i}: multiplicities are all zero")));
            }
            match merged.iter_mut().find(|g| g.form == h.form) {
                Some(g) => g.mults.iter_mut().zip(&h.mults).for_each(|(a, b)| *a += b),
                None => merged.push(h),
            }
        }
        Ok(MultiArrangement { n, r, hyperplanes: merged })
    }

    /// The tuple `(ℓ_1, …, ℓ_k)` of distinct reduced forms, one per entry.
    pub fn from_forms(n: usize, forms: Vec<LinearForm>) -> Result<Self> {
        let r = forms.len();
        let hs = forms
            .into_iter()
            .enumerate()
            .map(|(j, form)| {
                let mut mults = vec![0; r];
                mults[j] = 1;
                HyperplaneMulti { form, mults }
            })
            .collect();
        Self::new(n, r, hs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn hyperplanes(&self) -> &[HyperplaneMulti] {
        &self.hyperplanes
    }

    /// `deg f_j` for every tuple entry.
    pub fn degrees(&self) -> Vec<u64> {
        self.degree_vector(0..self.hyperplanes.len())
    }

    /// `Σ_{H ∈ set} mults(H)`.
    pub fn degree_vector(&self, set: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut d = vec![0; self.r];
        for i in set {
            d.iter_mut().zip(&self.hyperplanes[i].mults).for_each(|(a, b)| *a += b);
        }
        d
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.form.is_homogeneous())
    }

    pub fn is_essential(&self) -> bool {
        let normals: Vec<Vec<Rat>> = self.hyperplanes.iter().map(|h| h.form.coeffs_rat()).collect();
        self.is_central() && rank_rat(&normals) == self.n
    }

    fn normals(&self, set: &[usize]) -> Vec<Vec<Rat>> {
        set.iter().map(|&i| self.hyperplanes[i].form.coeffs_rat()).collect()
    }

    /// The edge cut out by the hyperplanes in `set` (closed under containment),
    /// or `None` when their intersection is empty.
    pub fn edge_of(&self, set: &[usize]) -> Option<Edge> {
        let a: Vec<Vec<Rat>> = self.normals(set);
        let b: Vec<Rat> = set.iter().map(|&i| -rat_int(self.hyperplanes[i].form.constant())).collect();
        let sol = solve_affine_rational(self.n, &a, &b).expect("normals have length n")?;
        let through = (0..self.hyperplanes.len())
            .filter(|&i| {
                let f = &self.hyperplanes[i].form;
                f.eval(&sol.point).is_zero() && sol.kernel.iter().all(|d| f.kills_direction(d))
            })
            .collect();
        Some(Edge { codim: self.n - sol.kernel.len(), point: sol.point, direction: sol.kernel, through })
    }

    /// The smallest edge containing `x`, if `x` lies on some hyperplane.
    pub fn edge_at_point(&self, x: &[Rat]) -> Result<Option<Edge>> {
        if x.len() != self.n {
            return Err(Error::Dimension(format!("point has {} coordinates, n = {}", x.len(), self.n)));
        }
        let through: Vec<usize> =
            (0..self.hyperplanes.len()).filter(|&i| self.hyperplanes[i].form.eval(x).is_zero()).collect();
        if through.is_empty() {
            return Ok(None);
        }
        Ok(self.edge_of(&through))
    }
}

impl fmt::Display for MultiArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = (0..self.r)
            .map(|j| {
                let factors: Vec<String> = self
                    .hyperplanes
                    .iter()
                    .filter(|h| h.mults[j] > 0)
                    .map(|h| {
                        let base = format!("({})", h.form.render("x"));
                        if h.mults[j] == 1 {
                            base
                        } else {
                            format!("{base}^{}", h.mults[j])
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.concat()
                }
            })
            .collect();
        write!(f, "F = ({}) in C^{}", entries.join(", "), self.n)
    }
}

/// A nonempty intersection of hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub point: Vec<Rat>,
    pub direction: Vec<Vec<Rat>>,
    /// Every hyperplane containing the edge, sorted.
    pub through: Vec<usize>,
    pub codim: usize,
}

impl Edge {
    pub fn contains_point(&self, a: &MultiArrangement, x: &[Rat]) -> bool {
        self.through.iter().all(|&i| a.hyperplanes[i].form.eval(x).is_zero())
    }
}

/// All edges, ordered by codimension and then by through-set.
pub fn intersection_lattice(a: &MultiArrangement) -> Vec<Edge> {
    let mut seen: BTreeMap<Vec<usize>, Edge> = BTreeMap::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    for i in 0..a.hyperplanes.len() {
        if let Some(e) = a.edge_of(&[i]) {
            if !seen.contains_key(&e.through) {
                queue.push_back(e.through.clone());
                seen.insert(e.through.clone(), e);
            }
        }
    }
    while let Some(through) = queue.pop_front() {
        for h in 0..a.hyperplanes.len() {
            if through.contains(&h) {
                continue;
            }
            let mut set = through.clone();
            set.push(h);
            let Some(e) = a.edge_of(&set) else { continue };
            if !seen.contains_key(&e.through) {
                queue.push_back(e.through.clone());
                seen.insert(e.through.clone(), e);
            }
        }
    }
    let mut edges: Vec<Edge> = seen.into_values().collect();
    edges.sort_by(|x, y| (x.codim, &x.through).cmp(&(y.codim, &y.through)));
    edges
}

/// Connected components of the linear matroid on `vectors`, as sorted index
/// lists ordered by their smallest element.
///
/// A basis is chosen greedily; every other element is joined with the support
/// of its fundamental circuit. Components are the connected pieces of the union
/// of those circuits.
pub fn matroid_components(vectors: &[Vec<Rat>]) -> Vec<Vec<usize>> {
    let k = vectors.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut basis: Vec<usize> = Vec::new();
    let mut others: Vec<usize> = Vec::new();
    for i in 0..k {
        let mut trial: Vec<Vec<Rat>> = basis.iter().map(|&b| vectors[b].clone()).collect();
        trial.push(vectors[i].clone());
        if rank_rat(&trial) > basis.len() {
            basis.push(i);
        } else {
            others.push(i);
        }
    }
    let basis_vectors: Vec<Vec<Rat>> = basis.iter().map(|&b| vectors[b].clone()).collect();
    for e in others {
        let coords = express_in_basis(&basis_vectors, &vectors[e]).expect("dependent on the basis");
        for (c, &b) in coords.iter().zip(&basis) {
            if !c.is_zero() {
                let (x, y) = (find(&mut parent, e), find(&mut parent, b));
                parent[x] = y;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..k {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    comps.sort();
    comps
}

/// Total splitting of the restriction of `F` to an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    /// Partition of the edge's through-set (hyperplane indices).
    pub blocks: Vec<Vec<usize>>,
    /// `d^{(i)}_j = Σ_{H ∈ block i} mults_j(H)`.
    pub degree_vectors: Vec<Vec<u64>>,
}

pub fn total_splitting(a: &MultiArrangement, w: &Edge) -> Splitting {
    let comps = matroid_components(&a.normals(&w.through));
    let blocks: Vec<Vec<usize>> = comps.iter().map(|c| c.iter().map(|&i| w.through[i]).collect()).collect();
    let degree_vectors = blocks.iter().map(|b| a.degree_vector(b.iter().copied())).collect();
    Splitting { blocks, degree_vectors }
}

pub fn is_dense(a: &MultiArrangement, w: &Edge) -> bool {
    total_splitting(a, w).blocks.len() == 1
}

/// Dense polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Quotient and remainder of division by `t - 1`.
    pub fn div_t_minus_one(&self) -> (IntPoly, BigInt) {
        if self.coeffs.is_empty() {
            return (IntPoly::new(vec![]), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let v = &self.coeffs[k] + &carry;
            if k == 0 {
                return (IntPoly::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let name = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            crate::form::push_term(&mut out, c, &name);
        }
        f.write_str(&out)
    }
}

/// Characteristic polynomial of the restriction to `w`, in the quotient of dimension `codim(w)`.
pub fn char_poly(a: &MultiArrangement, w: &Edge) -> IntPoly {
    let normals = a.normals(&w.through);
    let k = normals.len();
    let rank_of =
        |set: &BTreeSet<usize>| -> usize { rank_rat(&set.iter().map(|&i| normals[i].clone()).collect::<Vec<_>>()) };
    let closure = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
        let r = rank_of(set);
        (0..k)
            .filter(|e| {
                set.contains(e) || {
                    let mut s = set.clone();
                    s.insert(*e);
                    rank_of(&s) == r
                }
            })
            .collect()
    };

    let mut flats: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let bottom = closure(&BTreeSet::new());
    flats.insert(bottom.clone(), 0);
    let mut queue = VecDeque::from([bottom]);
    while let Some(fl) = queue.pop_front() {
        for e in 0..k {
            if fl.contains(&e) {
                continue;
            }
            let mut s = fl.clone();
            s.insert(e);
            let c = closure(&s);
            if !flats.contains_key(&c) {
                let r = rank_of(&c);
                flats.insert(c.clone(), r);
                queue.push_back(c);
            }
        }
    }

    let mut ordered: Vec<(BTreeSet<usize>, usize)> = flats.into_iter().collect();
    ordered.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    let mut mobius: Vec<BigInt> = Vec::with_capacity(ordered.len());
    for (i, (fl, _)) in ordered.iter().enumerate() {
        let m = if i == 0 {
            BigInt::one()
        } else {
            -(0..i).filter(|&j| ordered[j].0.is_subset(fl)).map(|j| mobius[j].clone()).sum::<BigInt>()
        };
        mobius.push(m);
    }
    let mut coeffs = vec![BigInt::zero(); w.codim + 1];
    for ((_, rank), m) in ordered.iter().zip(&mobius) {
        coeffs[w.codim - rank] += m;
    }
    IntPoly::new(coeffs)
}

/// `q(1)` where `char_poly = (t - 1)·q`.
pub fn proj_euler_char(a: &MultiArrangement, w: &Edge) -> BigInt {
    let (q, rem) = char_poly(a, w).div_t_minus_one();
    debug_assert!(rem.is_zero(), "central arrangement polynomial is divisible by t - 1");
    q.eval(&BigInt::one())
}

/// Substitutes `x_i = 1`; the hyperplane `x_i = 0` disappears.
pub fn chart_restriction(a: &MultiArrangement, i: usize) -> Result<MultiArrangement> {
    if !a.is_central() {
        return Err(Error::Precondition("chart restriction needs a central arrangement".into()));
    }
    if i >= a.n {
        return Err(Error::Dimension(format!("variable index {i} out of range for n = {}", a.n)));
    }
    let hs = a
        .hyperplanes
        .iter()
        .filter_map(|h| {
            let c = h.form.coeffs();
            let coeffs: Vec<BigInt> = c.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| x.clone()).collect();
            if coeffs.iter().all(|x| x.is_zero()) {
                return None;
            }
            let form = AffineForm::new(coeffs, rat_int(&c[i])).expect("nonzero coefficients");
            Some(HyperplaneMulti { form, mults: h.mults.clone() })
        })
        .collect();
    MultiArrangement::new(a.n - 1, a.r, hs)
}

/// External product in `ℂ^{n1+n2}`; the tuple entries multiply.
pub fn product(a1: &MultiArrangement, a2: &MultiArrangement) -> Result<MultiArrangement> {
    if a1.r != a2.r {
        return Err(Error::Dimension(format!("tuple lengths {} and {} differ", a1.r, a2.r)));
    }
    let n = a1.n + a2.n;
    let embed = |h: &HyperplaneMulti, offset: usize| {
        let mut coeffs = vec![BigInt::zero(); n];
        for (k, c) in h.form.coeffs().iter().enumerate() {
            coeffs[offset + k] = c.clone();
        }
        HyperplaneMulti {
            form: AffineForm::new(coeffs, rat_int(h.form.constant())).expect("nonzero coefficients"),
            mults: h.mults.clone(),
        }
    };
    let hs = a1.hyperplanes.iter().map(|h| embed(h, 0)).chain(a2.hyperplanes.iter().map(|h| embed(h, a1.n))).collect();
    MultiArrangement::new(n, a1.r, hs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regrouped {
    pub arrangement: MultiArrangement,
    /// Nonconstant tuple entries whose column of the matrix is zero.
    pub lost: Vec<usize>,
}

impl Regrouped {
    pub fn is_degenerate(&self) -> bool {
        !self.lost.is_empty()
    }
}

/// `G = F^M` with `g_k = ∏_j f_j^{m_kj}` for a nonnegative `p × r` matrix `m`.
pub fn regroup(a: &MultiArrangement, m: &IntMatrix) -> Result<Regrouped> {
    if m.cols() != a.r {
        return Err(Error::Dimension(format!("matrix has {} columns, r = {}", m.cols(), a.r)));
    }
    if m.rows() == 0 {
        return Err(Error::Invalid("specialization matrix has no rows".into()));
    }
    let entries: Vec<u64> = (0..m.rows())
        .flat_map(|k| m.row(k).to_vec())
        .map(|x| u64::try_from(x).map_err(|_| Error::Invalid("specialization matrix must be nonnegative".into())))
        .collect::<Result<_>>()?;
    let p = m.rows();
    let lost: Vec<usize> = (0..a.r)
        .filter(|&j| a.hyperplanes.iter().any(|h| h.mults[j] > 0))
        .filter(|&j| (0..p).all(|k| entries[k * a.r + j] == 0))
        .collect();
    let hs = a
        .hyperplanes
        .iter()
        .filter_map(|h| {
            let mults: Vec<u64> = (0..p).map(|k| (0..a.r).map(|j| entries[k * a.r + j] * h.mults[j]).sum()).collect();
            mults.iter().any(|&x| x > 0).then(|| HyperplaneMulti { form: h.form.clone(), mults })
        })
        .collect();
    Ok(Regrouped { arrangement: MultiArrangement::new(a.n, p, hs)?, lost })
}

/// The restriction `F_W` as a central essential arrangement in explicit
/// coordinates on `ℂ^{codim W}` (normals written in a basis of their span).
pub fn restriction(a: &MultiArrangement, w: &Edge) -> MultiArrangement {
    let normals = a.normals(&w.through);
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for v in &normals {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank_rat(&trial) > basis.len() {
            basis = trial;
        }
    }
    let hs = w
        .through
        .iter()
        .zip(&normals)
        .map(|(&i, v)| {
            let coords = express_in_basis(&basis, v).expect("in the span");
            let coeffs = primitive_integer(&coords);
            HyperplaneMulti {
                form: AffineForm::new(coeffs, Rat::zero()).expect("nonzero normal"),
                mults: a.hyperplanes[i].mults.clone(),
            }
        })
        .collect();
    MultiArrangement::new(basis.len(), a.r, hs).expect("restriction is valid")
}
