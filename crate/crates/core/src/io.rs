//! JSON file formats.
//!
//! Rationals travel as `"p/q"` strings (plain JSON integers are also accepted
//! on input). Integer vectors are JSON numbers, or decimal strings when they
//! do not fit in 64 bits. Parse failures carry the file, line, column and the
//! path of the offending field.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, DeserializeOwned, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::affine::{AffineLocus, AffineSubspace};
use crate::arrangement::{HyperplaneMulti, MultiArrangement};
use crate::bs::{BSIdealDatum, Factor};
use crate::form::AffineForm;
use crate::linalg::{rat_int, Rat};
use crate::torus::{CosetUnion, TorsionCoset};
use crate::zeta::{Divisor, PolarLocus, ResolutionData, SPoly, SRationalFunction, Stratum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub file: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: String,
    pub message: String,
}

impl InputError {
    fn semantic(file: &str, field: impl Into<String>, message: impl fmt::Display) -> Self {
        InputError { file: file.into(), line: None, column: None, field: field.into(), message: message.to_string() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.file)?;
        if let Some(l) = self.line {
            write!(f, ":{l}")?;
            if let Some(c) = self.column {
                write!(f, ":{c}")?;
            }
        }
        if !self.field.is_empty() && self.field != "." {
            write!(f, ": field `{}`", self.field)?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for InputError {}

pub type InputResult<T> = std::result::Result<T, InputError>;

/// Deserializes `text`, tracking the field path for diagnostics.
pub fn parse_json<T: DeserializeOwned>(file: &str, text: &str) -> InputResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    match serde_path_to_error::deserialize(de) {
        Ok(v) => Ok(v),
        Err(e) => {
            let field = e.path().to_string();
            let inner = e.into_inner();
            let line = (inner.line() > 0).then_some(inner.line());
            let column = (inner.column() > 0).then_some(inner.column());
            let message = strip_position(&inner.to_string());
            Err(InputError { file: file.into(), line, column, field, message })
        }
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn read_file(path: &Path) -> InputResult<String> {
    std::fs::read_to_string(path).map_err(|e| InputError::semantic(&path.display().to_string(), "", e))
}

pub fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatJson(pub Rat);

impl Default for RatJson {
    fn default() -> Self {
        RatJson(Rat::zero())
    }
}

impl Serialize for RatJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RatJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d).map_err(|_| de::Error::custom("expected a rational as \"p/q\" string or integer"))? {
            Raw::Int(v) => Ok(RatJson(Rat::from_integer(v.into()))),
            Raw::Str(s) => Rat::from_str(s.trim())
                .map(RatJson)
                .map_err(|_| de::Error::custom(format!("`{s}` is not a rational number p/q"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntJson(pub BigInt);

impl Serialize for IntJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for IntJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d).map_err(|_| de::Error::custom("expected an integer"))? {
            Raw::Int(v) => Ok(IntJson(v.into())),
            Raw::Str(s) => BigInt::from_str(s.trim())
                .map(IntJson)
                .map_err(|_| de::Error::custom(format!("`{s}` is not an integer"))),
        }
    }
}

fn ints(v: &[BigInt]) -> Vec<IntJson> {
    v.iter().cloned().map(IntJson).collect()
}

fn bigints(v: &[IntJson]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn one_u32() -> u32 {
    1
}

fn is_one(p: &u32) -> bool {
    *p == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub coeffs: Vec<IntJson>,
    #[serde(rename = "const", default)]
    pub constant: RatJson,
    #[serde(default = "one_u32", skip_serializing_if = "is_one")]
    pub power: u32,
}

impl FormJson {
    pub fn from_form(f: &AffineForm) -> Self {
        FormJson { coeffs: ints(f.coeffs()), constant: RatJson(rat_int(f.constant())), power: 1 }
    }

    fn to_form(&self, file: &str, field: &str, dim: usize) -> InputResult<AffineForm> {
        if self.coeffs.len() != dim {
            return Err(InputError::semantic(
                file,
                format!("{field}.coeffs"),
                format!("expected {dim} coefficients, found {}", self.coeffs.len()),
            ));
        }
        AffineForm::new(bigints(&self.coeffs), self.constant.0.clone())
            .map_err(|e| InputError::semantic(file, field, e))
    }

    fn normalized(&self, file: &str, field: &str, dim: usize) -> InputResult<(AffineForm, Rat)> {
        self.to_form(file, field, dim)?;
        let coeffs: Vec<Rat> = self.coeffs.iter().map(|c| rat_int(&c.0)).collect();
        AffineForm::normalize(&coeffs, &self.constant.0).map_err(|e| InputError::semantic(file, field, e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneJson {
    pub coeffs: Vec<IntJson>,
    #[serde(rename = "const", default)]
    pub constant: RatJson,
    pub mults: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementJson {
    pub n: usize,
    pub r: usize,
    pub hyperplanes: Vec<HyperplaneJson>,
}

impl ArrangementJson {
    pub fn from_arrangement(a: &MultiArrangement) -> Self {
        ArrangementJson {
            n: a.n(),
            r: a.r(),
            hyperplanes: a
                .hyperplanes()
                .iter()
                .map(|h| HyperplaneJson {
                    coeffs: ints(h.form.coeffs()),
                    constant: RatJson(rat_int(h.form.constant())),
                    mults: h.mults.clone(),
                })
                .collect(),
        }
    }

    pub fn to_arrangement(&self, file: &str) -> InputResult<MultiArrangement> {
        let mut hs = Vec::with_capacity(self.hyperplanes.len());
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let field = format!("hyperplanes[{i}]");
            let fj = FormJson { coeffs: h.coeffs.clone(), constant: h.constant.clone(), power: 1 };
            let form = fj.to_form(file, &field, self.n)?;
            if h.mults.len() != self.r {
                return Err(InputError::semantic(
                    file,
                    format!("{field}.mults"),
                    format!("expected {} multiplicities, found {}", self.r, h.mults.len()),
                ));
            }
            hs.push(HyperplaneMulti { form, mults: h.mults.clone() });
        }
        MultiArrangement::new(self.n, self.r, hs).map_err(|e| InputError::semantic(file, "hyperplanes", e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<FormJson>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub intersect_of: Vec<Vec<FormJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locality: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl IdealJson {
    fn from_datum(b: &BSIdealDatum) -> Self {
        let conv = |fs: &[Factor]| {
            fs.iter().map(|f| FormJson { power: f.power, ..FormJson::from_form(&f.form) }).collect::<Vec<_>>()
        };
        IdealJson {
            generators: b.generators.iter().map(|g| conv(g)).collect(),
            intersect_of: b.intersect_of.iter().map(|g| conv(g)).collect(),
            locality: b.locality.clone(),
            label: b.label.clone(),
        }
    }

    fn to_datum(&self, file: &str, prefix: &str, r: usize) -> InputResult<BSIdealDatum> {
        if let Some(l) = &self.locality {
            if l != "global" && l != "local" {
                return Err(InputError::semantic(
                    file,
                    format!("{prefix}locality"),
                    "expected \"global\" or \"local\"",
                ));
            }
        }
        let conv = |list: &[Vec<FormJson>], name: &str| -> InputResult<Vec<Vec<Factor>>> {
            list.iter()
                .enumerate()
                .map(|(i, g)| {
                    g.iter()
                        .enumerate()
                        .map(|(k, f)| {
                            let field = format!("{prefix}{name}[{i}][{k}]");
                            if f.power == 0 {
                                return Err(InputError::semantic(
                                    file,
                                    format!("{field}.power"),
                                    "power must be positive",
                                ));
                            }
                            Ok(Factor::new(f.to_form(file, &field, r)?, f.power))
                        })
                        .collect()
                })
                .collect()
        };
        let mut d =
            BSIdealDatum::new(r, conv(&self.generators, "generators")?, conv(&self.intersect_of, "intersect_of")?)
                .map_err(|e| InputError::semantic(file, prefix.trim_end_matches('.'), e))?;
        d.locality = self.locality.clone();
        d.label = self.label.clone();
        Ok(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BsJson {
    pub r: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<FormJson>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub intersect_of: Vec<Vec<FormJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locality: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl BsJson {
    pub fn from_datum(b: &BSIdealDatum) -> Self {
        let i = IdealJson::from_datum(b);
        BsJson { r: b.r, generators: i.generators, intersect_of: i.intersect_of, locality: i.locality, label: i.label }
    }

    pub fn to_datum(&self, file: &str) -> InputResult<BSIdealDatum> {
        let i = IdealJson {
            generators: self.generators.clone(),
            intersect_of: self.intersect_of.clone(),
            locality: self.locality.clone(),
            label: self.label.clone(),
        };
        i.to_datum(file, "", self.r)
    }
}

/// The ideals `B^{e_1}, …, B^{e_r}` of one tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitsJson {
    pub r: usize,
    pub units: Vec<IdealJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl UnitsJson {
    pub fn from_data(r: usize, units: &[BSIdealDatum]) -> Self {
        UnitsJson { r, units: units.iter().map(IdealJson::from_datum).collect(), label: None }
    }

    pub fn to_data(&self, file: &str) -> InputResult<Vec<BSIdealDatum>> {
        if self.units.len() != self.r {
            return Err(InputError::semantic(
                file,
                "units",
                format!("expected {} ideals, found {}", self.r, self.units.len()),
            ));
        }
        self.units.iter().enumerate().map(|(j, u)| u.to_datum(file, &format!("units[{j}]."), self.r)).collect()
    }
}

/// Contents of a Bernstein-Sato data file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BsInput {
    Single(BSIdealDatum),
    Units(Vec<BSIdealDatum>),
}

pub fn parse_bs(file: &str, text: &str) -> InputResult<BsInput> {
    let is_units = serde_json::from_str::<serde_json::Value>(text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("units")))
        .unwrap_or(false);
    if is_units {
        Ok(BsInput::Units(parse_json::<UnitsJson>(file, text)?.to_data(file)?))
    } else {
        Ok(BsInput::Single(parse_json::<BsJson>(file, text)?.to_datum(file)?))
    }
}

pub fn parse_arrangement(file: &str, text: &str) -> InputResult<MultiArrangement> {
    parse_json::<ArrangementJson>(file, text)?.to_arrangement(file)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorJson {
    pub a: Vec<u64>,
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumJson {
    pub divisors: Vec<usize>,
    pub chi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi0: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionJson {
    pub r: usize,
    pub divisors: Vec<DivisorJson>,
    pub strata: Vec<StratumJson>,
}

impl ResolutionJson {
    pub fn from_data(d: &ResolutionData) -> Self {
        ResolutionJson {
            r: d.r,
            divisors: d.divisors.iter().map(|x| DivisorJson { a: x.a.clone(), k: x.k }).collect(),
            strata: d
                .strata
                .iter()
                .map(|s| StratumJson { divisors: s.divisors.clone(), chi: s.chi, chi0: s.chi0 })
                .collect(),
        }
    }

    pub fn to_data(&self, file: &str) -> InputResult<ResolutionData> {
        let d = ResolutionData {
            r: self.r,
            divisors: self.divisors.iter().map(|x| Divisor { a: x.a.clone(), k: x.k }).collect(),
            strata: self
                .strata
                .iter()
                .map(|s| Stratum { divisors: s.divisors.clone(), chi: s.chi, chi0: s.chi0 })
                .collect(),
        };
        d.validate().map_err(|e| InputError::semantic(file, "strata", e))?;
        Ok(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: RatJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DenFactorJson {
    pub form: FormJson,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZetaJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub num: Vec<TermJson>,
    #[serde(default)]
    pub den: Vec<DenFactorJson>,
}

impl ZetaJson {
    pub fn from_function(z: &SRationalFunction) -> Self {
        ZetaJson {
            r: Some(z.nvars()),
            num: z
                .numerator()
                .terms()
                .iter()
                .map(|(e, c)| TermJson { exp: e.clone(), coef: RatJson(c.clone()) })
                .collect(),
            den: z
                .denominator()
                .iter()
                .map(|(f, &m)| DenFactorJson { form: FormJson::from_form(f), mult: m })
                .collect(),
        }
    }

    pub fn to_function(&self, file: &str) -> InputResult<SRationalFunction> {
        let r = self
            .r
            .or_else(|| self.num.first().map(|t| t.exp.len()))
            .or_else(|| self.den.first().map(|d| d.form.coeffs.len()))
            .ok_or_else(|| InputError::semantic(file, "r", "cannot infer the number of variables"))?;
        let mut terms = Vec::new();
        for (i, t) in self.num.iter().enumerate() {
            if t.exp.len() != r {
                return Err(InputError::semantic(file, format!("num[{i}].exp"), format!("expected {r} exponents")));
            }
            terms.push((t.exp.clone(), t.coef.0.clone()));
        }
        let mut num = SPoly::from_terms(r, terms);
        let mut den = BTreeMap::new();
        for (i, d) in self.den.iter().enumerate() {
            let field = format!("den[{i}].form");
            if d.mult == 0 {
                return Err(InputError::semantic(file, format!("den[{i}].mult"), "multiplicity must be positive"));
            }
            let (f, lambda) = d.form.normalized(file, &field, r)?;
            num = num.scale(&num_traits::pow(lambda, d.mult as usize).recip());
            *den.entry(f).or_insert(0) += d.mult;
        }
        SRationalFunction::new(num, den).map_err(|e| InputError::semantic(file, "den", e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetJson {
    pub basis: Vec<Vec<IntJson>>,
    pub torsion: Vec<RatJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetUnionJson {
    pub r: usize,
    pub components: Vec<CosetJson>,
}

impl CosetUnionJson {
    pub fn from_union(u: &CosetUnion) -> Self {
        CosetUnionJson { r: u.ambient_dim(), components: u.components().iter().map(coset_json).collect() }
    }

    pub fn to_union(&self, file: &str) -> InputResult<CosetUnion> {
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let rows: Vec<Vec<BigInt>> = c.basis.iter().map(|r| bigints(r)).collect();
                let vals: Vec<Rat> = c.torsion.iter().map(|t| t.0.clone()).collect();
                TorsionCoset::from_basis(self.r, rows, vals)
                    .map_err(|e| InputError::semantic(file, format!("components[{i}]"), e))
            })
            .collect::<InputResult<Vec<_>>>()?;
        CosetUnion::new(self.r, comps).map_err(|e| InputError::semantic(file, "components", e))
    }
}

pub fn coset_json(c: &TorsionCoset) -> CosetJson {
    let cons = c.constraints();
    CosetJson {
        basis: cons.iter().map(|(b, _)| ints(b)).collect(),
        torsion: cons.iter().map(|(_, q)| RatJson(q.value().clone())).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineLocusJson {
    pub dim: usize,
    pub components: Vec<Vec<FormJson>>,
}

impl AffineLocusJson {
    pub fn from_locus(l: &AffineLocus) -> Self {
        AffineLocusJson {
            dim: l.dim(),
            components: l.components().iter().map(|c| c.forms().iter().map(FormJson::from_form).collect()).collect(),
        }
    }

    pub fn to_locus(&self, file: &str) -> InputResult<AffineLocus> {
        let mut comps = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let forms = c
                .iter()
                .enumerate()
                .map(|(k, f)| f.to_form(file, &format!("components[{i}][{k}]"), self.dim))
                .collect::<InputResult<Vec<_>>>()?;
            comps.push(
                AffineSubspace::from_forms(self.dim, &forms)
                    .map_err(|e| InputError::semantic(file, format!("components[{i}]"), e))?,
            );
        }
        AffineLocus::new(self.dim, comps).map_err(|e| InputError::semantic(file, "components", e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarLocusJson {
    pub r: usize,
    pub forms: Vec<FormJson>,
}

impl PolarLocusJson {
    pub fn from_polar(r: usize, p: &PolarLocus) -> Self {
        PolarLocusJson { r, forms: p.forms().iter().map(FormJson::from_form).collect() }
    }

    pub fn to_polar(&self, file: &str) -> InputResult<PolarLocus> {
        let forms = self
            .forms
            .iter()
            .enumerate()
            .map(|(i, f)| f.to_form(file, &format!("forms[{i}]"), self.r))
            .collect::<InputResult<Vec<_>>>()?;
        Ok(PolarLocus::new(forms))
    }
}

/// Outcome of a check as reported by the command line front end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub status: Status,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Violated,
    Error,
}

impl VerdictJson {
    pub fn new(status: Status, witnesses: Vec<String>, notes: Vec<String>) -> Self {
        debug_assert!(status != Status::Violated || !witnesses.is_empty());
        VerdictJson { status, witnesses, notes }
    }
}
