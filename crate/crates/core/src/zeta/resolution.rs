use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::SRationalFunction;
use crate::arrangement::{intersection_lattice, MultiArrangement};
use crate::error::{Error, Result};
use crate::form::AffineForm;
use crate::linalg::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    /// Orders of vanishing of `f_1..f_r` along the divisor.
    pub a: Vec<u64>,
    /// Order of vanishing of the Jacobian.
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub divisors: Vec<usize>,
    pub chi: i64,
    /// Euler characteristic of the stratum over the basepoint.
    pub chi0: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    pub r: usize,
    pub divisors: Vec<Divisor>,
    pub strata: Vec<Stratum>,
}

impl ResolutionData {
    pub fn validate(&self) -> Result<()> {
        for (i, d) in self.divisors.iter().enumerate() {
            if d.a.len() != self.r {
                return Err(Error::Dimension(format!("divisor {i} has {} orders for r = {}", d.a.len(), self.r)));
            }
        }
        let mut seen = BTreeSet::new();
        for s in &self.strata {
            let set: BTreeSet<usize> = s.divisors.iter().copied().collect();
            if set.len() != s.divisors.len() {
                return Err(Error::Invalid(format!("stratum {:?} repeats a divisor", s.divisors)));
            }
            if let Some(&bad) = set.iter().find(|&&i| i >= self.divisors.len()) {
                return Err(Error::Invalid(format!(
                    "stratum refers to divisor {bad}, only {} given",
                    self.divisors.len()
                )));
            }
            if !seen.insert(set) {
                return Err(Error::Invalid(format!("two strata for divisor set {:?}", s.divisors)));
            }
        }
        Ok(())
    }

    pub fn euler_sum(&self) -> i64 {
        self.strata.iter().map(|s| s.chi).sum()
    }
}

/// `Σ_I χ(E_I°) ∏_{i∈I} 1/(a_i·s + k_i + 1)`, with `χ` over the basepoint when `local`.
pub fn zeta_from_resolution(d: &ResolutionData, local: bool) -> Result<SRationalFunction> {
    d.validate()?;
    let mut z = SRationalFunction::zero(d.r);
    for s in &d.strata {
        let chi = if local {
            s.chi0.ok_or_else(|| {
                Error::Precondition(format!("stratum {:?} has no value over the basepoint", s.divisors))
            })?
        } else {
            s.chi
        };
        if chi == 0 {
            continue;
        }
        let mut c = Rat::from_integer(chi.into());
        let mut forms = Vec::new();
        for &i in &s.divisors {
            let div = &d.divisors[i];
            let constant = Rat::from_integer(BigInt::from(div.k) + 1);
            if div.a.iter().all(|&x| x == 0) {
                c /= constant;
            } else {
                let coeffs: Vec<Rat> = div.a.iter().map(|&x| Rat::from_integer(x.into())).collect();
                let (f, lambda) = AffineForm::normalize(&coeffs, &constant)?;
                c /= lambda;
                forms.push(f);
            }
        }
        z = z.add(&SRationalFunction::inverse_product(d.r, c, &forms)?)?;
    }
    Ok(z)
}

/// Resolution of a line arrangement in `ℂ²` obtained by blowing up every point
/// where at least three lines meet. Values over the basepoint refer to the origin.
pub fn canonical_resolution_2d(a: &MultiArrangement) -> Result<ResolutionData> {
    if a.n() != 2 {
        return Err(Error::Precondition(format!("built-in resolution needs n = 2, got n = {}", a.n())));
    }
    let nl = a.hyperplanes().len();
    let origin = [Rat::zero(), Rat::zero()];
    let points: Vec<Vec<usize>> =
        intersection_lattice(a).into_iter().filter(|e| e.codim == 2).map(|e| e.through).collect();
    let at_origin = |through: &[usize]| through.iter().all(|&i| a.hyperplanes()[i].form.eval(&origin).is_zero());
    let on_line = |i: usize| a.hyperplanes()[i].form.eval(&origin).is_zero();
    let ind = |b: bool| i64::from(b);

    let mut divisors: Vec<Divisor> = a.hyperplanes().iter().map(|h| Divisor { a: h.mults.clone(), k: 0 }).collect();
    let mut strata = Vec::new();

    let mut chi_empty = 1 - nl as i64;
    for p in &points {
        chi_empty += p.len() as i64 - 1;
    }
    let origin_on_d = (0..nl).any(on_line);
    strata.push(Stratum { divisors: vec![], chi: chi_empty, chi0: Some(ind(!origin_on_d)) });

    let origin_is_point = points.iter().any(|p| at_origin(p));
    for i in 0..nl {
        let count = points.iter().filter(|p| p.contains(&i)).count() as i64;
        strata.push(Stratum { divisors: vec![i], chi: 1 - count, chi0: Some(ind(on_line(i) && !origin_is_point)) });
    }
    for p in &points {
        let here = at_origin(p);
        if p.len() == 2 {
            strata.push(Stratum { divisors: p.clone(), chi: 1, chi0: Some(ind(here)) });
            continue;
        }
        let e = divisors.len();
        divisors.push(Divisor { a: a.degree_vector(p.iter().copied()), k: 1 });
        let chi = 2 - p.len() as i64;
        strata.push(Stratum { divisors: vec![e], chi, chi0: Some(if here { chi } else { 0 }) });
        for &i in p {
            strata.push(Stratum { divisors: vec![i, e], chi: 1, chi0: Some(ind(here)) });
        }
    }
    Ok(ResolutionData { r: a.r(), divisors, strata })
}

/// Number of points blown up by [`canonical_resolution_2d`].
pub fn blown_up_points(d: &ResolutionData) -> usize {
    d.divisors.iter().filter(|x| x.k >= 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use num_traits::One;

    fn lines(forms: &[(&[i64], i64)]) -> MultiArrangement {
        MultiArrangement::from_forms(2, forms.iter().map(|(c, k)| AffineForm::from_i64(c, *k)).collect()).unwrap()
    }

    fn inv(r: usize, forms: &[AffineForm]) -> SRationalFunction {
        SRationalFunction::inverse_product(r, Rat::one(), forms).unwrap()
    }

    #[test]
    fn normal_crossing() {
        let d = ResolutionData {
            r: 2,
            divisors: vec![Divisor { a: vec![1, 0], k: 0 }, Divisor { a: vec![0, 1], k: 0 }],
            strata: vec![
                Stratum { divisors: vec![], chi: 0, chi0: None },
                Stratum { divisors: vec![0], chi: 0, chi0: None },
                Stratum { divisors: vec![1], chi: 0, chi0: None },
                Stratum { divisors: vec![0, 1], chi: 1, chi0: None },
            ],
        };
        let z = zeta_from_resolution(&d, false).unwrap();
        assert_eq!(z, inv(2, &[AffineForm::from_i64(&[1, 0], 1), AffineForm::from_i64(&[0, 1], 1)]));
        assert!(zeta_from_resolution(&d, true).is_err());
    }

    #[test]
    fn single_divisor_arithmetic() {
        let d = ResolutionData {
            r: 1,
            divisors: vec![Divisor { a: vec![1], k: 0 }],
            strata: vec![
                Stratum { divisors: vec![], chi: 2, chi0: None },
                Stratum { divisors: vec![0], chi: -1, chi0: None },
            ],
        };
        assert_eq!(zeta_from_resolution(&d, false).unwrap().to_string(), "(2s+1)/(s+1)");
        let empty = ResolutionData { r: 1, divisors: vec![], strata: vec![] };
        assert!(zeta_from_resolution(&empty, false).unwrap().is_zero());
    }

    #[test]
    fn invalid_data_rejected() {
        let d = ResolutionData {
            r: 1,
            divisors: vec![Divisor { a: vec![1], k: 0 }],
            strata: vec![
                Stratum { divisors: vec![0], chi: 1, chi0: None },
                Stratum { divisors: vec![0], chi: 1, chi0: None },
            ],
        };
        assert!(d.validate().is_err());
    }

    #[test]
    fn canonical_resolutions() {
        let xy = lines(&[(&[1, 0], 0), (&[0, 1], 0)]);
        let d = canonical_resolution_2d(&xy).unwrap();
        let expected = inv(2, &[AffineForm::from_i64(&[1, 0], 1), AffineForm::from_i64(&[0, 1], 1)]);
        assert_eq!(zeta_from_resolution(&d, false).unwrap(), expected);
        assert_eq!(zeta_from_resolution(&d, true).unwrap(), expected);

        let three = lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)]);
        let d = canonical_resolution_2d(&three).unwrap();
        assert_eq!(d.euler_sum(), 1 + blown_up_points(&d) as i64);
        let big_a = AffineForm::from_i64(&[1, 1, 1], 2);
        let mut expected = inv(3, std::slice::from_ref(&big_a)).scale(&rat(-1, 1));
        for j in 0..3 {
            let mut c = vec![0; 3];
            c[j] = 1;
            expected = expected.add(&inv(3, &[big_a.clone(), AffineForm::from_i64(&c, 1)])).unwrap();
        }
        assert_eq!(zeta_from_resolution(&d, true).unwrap(), expected);
    }

    #[test]
    fn affine_lines_stratum_sanity() {
        let a = lines(&[(&[1, 0], 0), (&[1, 0], -1), (&[0, 1], 0), (&[1, 1], 0), (&[1, -1], 1)]);
        let d = canonical_resolution_2d(&a).unwrap();
        assert_eq!(d.euler_sum(), 1 + blown_up_points(&d) as i64);
    }
}
