//! Affine-linear forms with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat_int, Rat};

/// `c·x + c₀` with integer `c ≠ 0` and integer `c₀`, normalized to be primitive
/// (gcd of all entries is 1) with first nonzero coefficient positive.
///
/// Two forms define the same hyperplane exactly when they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    coeffs: Vec<BigInt>,
    constant: BigInt,
}

impl AffineForm {
    pub fn new(coeffs: Vec<BigInt>, constant: Rat) -> Result<Self> {
        let (form, _) = Self::normalize(coeffs.iter().map(rat_int).collect::<Vec<_>>().as_slice(), &constant)?;
        Ok(form)
    }

    pub fn from_i64(coeffs: &[i64], constant: i64) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), Rat::from_integer(constant.into()))
            .expect("literal form with a nonzero coefficient")
    }

    /// Normalizes `coeffs·x + constant`. Returns the primitive form `p` and the
    /// scalar `λ` with `coeffs·x + constant = λ·p(x)`.
    pub fn normalize(coeffs: &[Rat], constant: &Rat) -> Result<(Self, Rat)> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::Invalid("affine form has no nonzero coefficient".into()));
        }
        let l = coeffs.iter().chain(std::iter::once(constant)).fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let lr = rat_int(&l);
        let mut ints: Vec<BigInt> =
            coeffs.iter().chain(std::iter::once(constant)).map(|x| (x * &lr).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let lead = ints.iter().find(|x| !x.is_zero()).expect("checked nonzero");
        if lead.is_negative() {
            g = -g;
        }
        ints.iter_mut().for_each(|x| *x = &*x / &g);
        let constant = ints.pop().expect("constant entry");
        let scale = Rat::new(g, l);
        Ok((AffineForm { coeffs: ints, constant }, scale))
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn coeffs_rat(&self) -> Vec<Rat> {
        self.coeffs.iter().map(rat_int).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.coeffs.iter().zip(point).map(|(c, x)| rat_int(c) * x).sum::<Rat>() + rat_int(&self.constant)
    }

    /// Is `coeffs·d = 0`?
    pub fn kills_direction(&self, d: &[Rat]) -> bool {
        self.coeffs.iter().zip(d).map(|(c, x)| rat_int(c) * x).sum::<Rat>().is_zero()
    }

    /// Translates the zero set by `v`: returns the form vanishing on `{x + v : form(x) = 0}`.
    pub fn translated(&self, v: &[Rat]) -> AffineForm {
        let shift: Rat = self.coeffs.iter().zip(v).map(|(c, x)| rat_int(c) * x).sum();
        let constant = rat_int(&self.constant) - shift;
        AffineForm::normalize(&self.coeffs_rat(), &constant).expect("same coefficients").0
    }

    pub fn render(&self, var: &str) -> String {
        let n = self.coeffs.len();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = if n == 1 { var.to_string() } else { format!("{var}{}", i + 1) };
            push_term(&mut out, c, &name);
        }
        if !self.constant.is_zero() || out.is_empty() {
            push_term(&mut out, &self.constant, "");
        }
        out
    }
}

pub(crate) fn push_term(out: &mut String, c: &BigInt, name: &str) {
    let first = out.is_empty();
    if c.is_negative() {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let a = c.abs();
    if name.is_empty() || !a.is_one() {
        out.push_str(&a.to_string());
    }
    out.push_str(name);
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("s"))
    }
}
