use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::form::AffineForm;
use crate::linalg::{rat_int, Rat};

/// Sparse polynomial in `s_1..s_r` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SPoly {
    r: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SPoly {
    pub fn zero(r: usize) -> Self {
        SPoly { r, terms: BTreeMap::new() }
    }

    pub fn constant(r: usize, c: Rat) -> Self {
        let mut p = SPoly::zero(r);
        p.add_term(vec![0; r], c);
        p
    }

    pub fn one(r: usize) -> Self {
        SPoly::constant(r, Rat::one())
    }

    pub fn var(r: usize, j: usize) -> Self {
        let mut e = vec![0; r];
        e[j] = 1;
        let mut p = SPoly::zero(r);
        p.add_term(e, Rat::one());
        p
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = SPoly::zero(r);
        for (e, c) in terms {
            assert_eq!(e.len(), r, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn from_form(f: &AffineForm) -> Self {
        let r = f.dim();
        let mut p = SPoly::constant(r, rat_int(f.constant()));
        for (j, c) in f.coeffs().iter().enumerate() {
            p = p.add(&SPoly::var(r, j).scale(&rat_int(c)));
        }
        p
    }

    /// Polynomial `coeffs·s + constant`.
    pub fn affine(coeffs: &[Rat], constant: &Rat) -> Self {
        let r = coeffs.len();
        let mut p = SPoly::constant(r, constant.clone());
        for (j, c) in coeffs.iter().enumerate() {
            p = p.add(&SPoly::var(r, j).scale(c));
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value when the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&vec![0; self.r]).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SPoly) -> SPoly {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> SPoly {
        if c.is_zero() {
            return SPoly::zero(self.r);
        }
        SPoly { r: self.r, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &SPoly) -> SPoly {
        let mut out = SPoly::zero(self.r);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SPoly {
        (0..k).fold(SPoly::one(self.r), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(x).fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .sum()
    }

    /// Substitutes `s_j ↦ images[j]`, all images in a common ring of `p` variables.
    pub fn substitute(&self, p: usize, images: &[SPoly]) -> SPoly {
        let mut out = SPoly::zero(p);
        for (e, c) in &self.terms {
            let mut term = SPoly::constant(p, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[j].pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    fn degree_in(&self, j: usize) -> u32 {
        self.terms.keys().map(|e| e[j]).max().unwrap_or(0)
    }

    /// Exact quotient by the linear polynomial `f`, if `f` divides `self`.
    ///
    /// Long division in the variable of the first nonzero coefficient of `f`.
    pub fn div_exact_by_form(&self, f: &AffineForm) -> Option<SPoly> {
        let p = f.coeffs().iter().position(|c| !c.is_zero())?;
        let lead = rat_int(&f.coeffs()[p]);
        let fp = SPoly::from_form(f);
        let mut rem = self.clone();
        let mut q = SPoly::zero(self.r);
        loop {
            let d = rem.degree_in(p);
            if d == 0 {
                break;
            }
            let mut term = SPoly::zero(self.r);
            for (e, c) in rem.terms.iter().filter(|(e, _)| e[p] == d) {
                let mut e = e.clone();
                e[p] -= 1;
                term.add_term(e, c / &lead);
            }
            q = q.add(&term);
            rem = rem.sub(&fp.mul(&term));
        }
        rem.is_zero().then_some(q)
    }

    fn render_term(e: &[u32], c: &Rat, first: bool, out: &mut String) {
        let names: Vec<String> =
            if e.len() == 1 { vec!["s".into()] } else { (1..=e.len()).map(|i| format!("s{i}")).collect() };
        let mono: String = e
            .iter()
            .zip(&names)
            .filter(|(k, _)| **k > 0)
            .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
            .collect();
        if c.is_negative() {
            out.push('-');
        } else if !first {
            out.push('+');
        }
        let a = c.abs();
        if mono.is_empty() || !a.is_one() {
            if a.is_integer() || mono.is_empty() {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("({a})"));
            }
        }
        out.push_str(&mono);
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Common denominator of the coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        let v: Vec<Rat> = self.terms.values().cloned().collect();
        crate::linalg::denominator_lcm(&v)
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, e) in keys.into_iter().enumerate() {
            SPoly::render_term(e, &self.terms[e], i == 0, &mut out);
        }
        f.write_str(&out)
    }
}
