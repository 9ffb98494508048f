use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::SPoly;
use crate::error::{Error, Result};
use crate::form::AffineForm;
use crate::linalg::{rat_int, IntMatrix, Rat};

/// `num / ∏ ℓ^m` with primitive integer forms `ℓ`, kept fully reduced:
/// no denominator form divides the numerator. The representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SRationalFunction {
    num: SPoly,
    den: BTreeMap<AffineForm, u32>,
}

impl SRationalFunction {
    pub fn new(num: SPoly, den: BTreeMap<AffineForm, u32>) -> Result<Self> {
        if let Some(f) = den.keys().find(|f| f.dim() != num.nvars()) {
            return Err(Error::Dimension(format!("denominator form {f} is not in {} variables", num.nvars())));
        }
        let mut z = SRationalFunction { num, den: den.into_iter().filter(|(_, m)| *m > 0).collect() };
        z.reduce();
        Ok(z)
    }

    pub fn zero(r: usize) -> Self {
        SRationalFunction { num: SPoly::zero(r), den: BTreeMap::new() }
    }

    pub fn constant(r: usize, c: Rat) -> Self {
        SRationalFunction { num: SPoly::constant(r, c), den: BTreeMap::new() }
    }

    /// `c / ∏ forms`.
    pub fn inverse_product(r: usize, c: Rat, forms: &[AffineForm]) -> Result<Self> {
        let mut den = BTreeMap::new();
        for f in forms {
            *den.entry(f.clone()).or_insert(0) += 1;
        }
        SRationalFunction::new(SPoly::constant(r, c), den)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let forms: Vec<AffineForm> = self.den.keys().cloned().collect();
        for f in forms {
            while self.den.get(&f).copied().unwrap_or(0) > 0 {
                match self.num.div_exact_by_form(&f) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&f).expect("present");
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &SPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<AffineForm, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn den_poly(den: &BTreeMap<AffineForm, u32>, r: usize) -> SPoly {
        den.iter().fold(SPoly::one(r), |acc, (f, &m)| acc.mul(&SPoly::from_form(f).pow(m)))
    }

    pub fn add(&self, other: &SRationalFunction) -> Result<SRationalFunction> {
        if self.nvars() != other.nvars() {
            return Err(Error::Dimension("sum of functions in different variables".into()));
        }
        let r = self.nvars();
        let mut lcm = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let cofactor = |den: &BTreeMap<AffineForm, u32>| -> BTreeMap<AffineForm, u32> {
            lcm.iter().map(|(f, &m)| (f.clone(), m - den.get(f).copied().unwrap_or(0))).collect()
        };
        let num = self
            .num
            .mul(&Self::den_poly(&cofactor(&self.den), r))
            .add(&other.num.mul(&Self::den_poly(&cofactor(&other.den), r)));
        SRationalFunction::new(num, lcm)
    }

    pub fn mul(&self, other: &SRationalFunction) -> Result<SRationalFunction> {
        if self.nvars() != other.nvars() {
            return Err(Error::Dimension("product of functions in different variables".into()));
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        SRationalFunction::new(self.num.mul(&other.num), den)
    }

    pub fn scale(&self, c: &Rat) -> SRationalFunction {
        let mut z = SRationalFunction { num: self.num.scale(c), den: self.den.clone() };
        z.reduce();
        z
    }

    /// Value at a point off the polar locus.
    pub fn eval(&self, x: &[Rat]) -> Option<Rat> {
        let d = self.den.iter().fold(Rat::one(), |acc, (f, &m)| acc * num_traits::pow(f.eval(x), m as usize));
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Surviving denominator forms.
    pub fn polar_forms(&self) -> Vec<AffineForm> {
        self.den.keys().cloned().collect()
    }
}

/// Substitutes `s_j ↦ Σ_k m_{kj} v_k + c_j` with `m` of shape `p × r`.
///
/// Errors with [`Error::VanishingDenominator`] when a denominator form becomes
/// identically zero.
pub fn substitute_affine(z: &SRationalFunction, m: &IntMatrix, c: &[Rat]) -> Result<SRationalFunction> {
    let r = z.nvars();
    if m.cols() != r || c.len() != r {
        return Err(Error::Dimension(format!(
            "map is {}x{} with {} shifts for a function of {r} variables",
            m.rows(),
            m.cols(),
            c.len()
        )));
    }
    let p = m.rows();
    let images: Vec<SPoly> = (0..r)
        .map(|j| {
            let coeffs: Vec<Rat> = m.column(j).iter().map(rat_int).collect();
            SPoly::affine(&coeffs, &c[j])
        })
        .collect();
    let mut num = z.num.substitute(p, &images);
    let mut den = BTreeMap::new();
    for (f, &mult) in &z.den {
        let coeffs: Vec<Rat> = (0..p)
            .map(|k| f.coeffs().iter().enumerate().map(|(j, a)| rat_int(a) * rat_int(m.get(k, j))).sum())
            .collect();
        let constant: Rat =
            rat_int(f.constant()) + f.coeffs().iter().zip(c).map(|(a, cj)| rat_int(a) * cj).sum::<Rat>();
        let scale = if coeffs.iter().all(|x| x.is_zero()) {
            if constant.is_zero() {
                return Err(Error::VanishingDenominator(f.to_string()));
            }
            constant
        } else {
            let (g, lambda) = AffineForm::normalize(&coeffs, &constant)?;
            *den.entry(g).or_insert(0) += mult;
            lambda
        };
        num = num.scale(&num_traits::pow(scale, mult as usize).recip());
    }
    SRationalFunction::new(num, den)
}

/// Orders forms by support size, then by leading variable, for printing.
pub(crate) fn display_order(a: &AffineForm, b: &AffineForm) -> std::cmp::Ordering {
    let key = |f: &AffineForm| {
        let lead = f.coeffs().iter().position(|c| !c.is_zero());
        let support = f.coeffs().iter().filter(|c| !c.is_zero()).count();
        (support, lead)
    };
    key(a).cmp(&key(b)).then_with(|| a.coeffs().cmp(b.coeffs())).then_with(|| a.constant().cmp(b.constant()))
}

impl fmt::Display for SRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string();
        if self.den.is_empty() {
            return f.write_str(&num);
        }
        let simple = self.num.term_count() == 1 && self.num.as_constant().is_some_and(|c| c.is_integer());
        if simple {
            write!(f, "{num}/")?;
        } else {
            write!(f, "({num})/")?;
        }
        let mut den: Vec<(&AffineForm, &u32)> = self.den.iter().collect();
        den.sort_by(|a, b| display_order(a.0, b.0));
        let factors: Vec<String> =
            den.into_iter().map(|(g, &m)| if m == 1 { format!("({g})") } else { format!("({g})^{m}") }).collect();
        if factors.len() == 1 {
            f.write_str(&factors[0])
        } else {
            write!(f, "({})", factors.concat())
        }
    }
}
