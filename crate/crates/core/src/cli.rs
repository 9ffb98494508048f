//! Command line front end.
//!
//! Exit codes: 0 when a check holds or a computation succeeds, 1 when a check
//! is violated, 2 on input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::affine::AffineLocus;
use crate::arrangement::{
    char_poly, intersection_lattice, is_dense, proj_euler_char, total_splitting, MultiArrangement,
};
use crate::bs::{
    check_bs_specialization, check_conj1_shape, check_conj2, check_conj2_exp, exp_vb, locus, monomial_bs_locus,
    vb_decomposition, BSIdealDatum, Conj2Verdict,
};
use crate::error::Error;
use crate::io::{
    parse_arrangement, parse_bs, parse_json, read_file, to_json_string, AffineLocusJson, ArrangementJson, BsInput,
    CosetUnionJson, FormJson, InputError, IntJson, PolarLocusJson, RatJson, ResolutionJson, Status, VerdictJson,
    ZetaJson,
};
use crate::linalg::{IntMatrix, Rat};
use crate::support::{
    check_deconing, check_specialization, check_thom_sebastiani, milnor_eigenvalues, support_at_point,
    uniform_support_union, SetComparison,
};
use crate::torus::{exp_locus, CosetUnion, EigenvalueSet};
use crate::zeta::{
    canonical_resolution_2d, check_monodromy, check_strong_monodromy_locus, polar_candidates, polar_locus,
    substitute_affine, zeta_from_resolution, FormCheck, PolarLocus, SRationalFunction, ZetaSource,
};

#[derive(Parser, Debug)]
#[command(
    name = "monsupp",
    version,
    about = "Monodromy supports, Bernstein-Sato zero loci and zeta functions of multi-arrangements"
)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Arrangement combinatorics
    Arr {
        #[command(subcommand)]
        cmd: ArrCmd,
    },
    /// Uniform support union of the specialization complex
    Support {
        file: PathBuf,
        /// Support at a point, coordinates as "p/q,..."
        #[arg(long)]
        point: Option<String>,
        /// Milnor monodromy eigenvalues of the product
        #[arg(long)]
        milnor: bool,
        /// Codimension-one part only
        #[arg(long)]
        codim1: bool,
    },
    /// Zero loci of Bernstein-Sato ideal data
    Bs {
        #[command(subcommand)]
        cmd: BsCmd,
    },
    /// Topological zeta functions
    Zeta(ZetaArgs),
    /// Conjecture and identity checks
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
}

#[derive(Subcommand, Debug)]
enum ArrCmd {
    /// Intersection lattice, dense edges, splittings and characteristic polynomials
    Info { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum BsCmd {
    /// Closed-form ideal of a monomial tuple
    Monomial { file: PathBuf },
    /// Zero locus of an ideal file
    Locus { file: PathBuf },
    /// Image of the zero locus under Exp
    Exp { file: PathBuf },
    /// Zero locus of B^m from the unit ideals B^{e_j}
    Decompose {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        m: String,
        /// 1-based permutation, default identity
        #[arg(long)]
        perm: Option<String>,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct ZetaArgs {
    #[command(subcommand)]
    cmd: Option<ZetaCmd>,
    /// Plane arrangement for the built-in resolution
    file: Option<PathBuf>,
    /// Local zeta function at the origin
    #[arg(long)]
    local0: bool,
    /// Resolution data file
    #[arg(long)]
    resolution: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ZetaCmd {
    /// Dense-edge polar candidates
    Candidates { file: PathBuf },
    /// Substitute s_j -> sum_k m_kj v_k + c_j
    Subst {
        file: PathBuf,
        /// Integer matrix of shape p x r, rows separated by ';'
        #[arg(long)]
        map: String,
        /// Rational shift vector c
        #[arg(long)]
        shift: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Factors of every generator have nonnegative coefficients and positive constant
    Conj1 { bs: PathBuf },
    /// Exp of the zero locus against the support union
    Conj2 { arr: PathBuf, bs: PathBuf },
    /// Exp of every polar hyperplane lies in the support union
    Monodromy {
        arr: PathBuf,
        #[arg(long)]
        resolution: Option<PathBuf>,
    },
    /// Every polar hyperplane lies in the zero locus: ARR BSFILE or --zeta Z BSFILE
    Strong {
        #[arg(long)]
        zeta: Option<PathBuf>,
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
    },
    /// Supports (and optionally ideals) commute with specialization
    Specialize {
        arr: PathBuf,
        #[arg(long)]
        m: String,
        #[arg(long, num_args = 2, value_names = ["BSF", "BSG"])]
        bs: Option<Vec<PathBuf>>,
    },
    /// Multiplicative Thom-Sebastiani at the origin
    Ts { arr1: PathBuf, arr2: PathBuf },
    /// Total support against origin plus affine charts
    Decone { arr: PathBuf },
}

/// An input error, reported with exit code 2.
struct Failure(String);

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type CliResult = std::result::Result<i32, Failure>;

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn emit<T: Serialize>(&mut self, v: &T) {
        let s = to_json_string(v);
        self.line(s);
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, out };
    match dispatch(&mut ctx, cli.cmd) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(ctx: &mut Ctx, cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Arr { cmd: ArrCmd::Info { file } } => arr_info(ctx, &file),
        Cmd::Support { file, point, milnor, codim1 } => support(ctx, &file, point.as_deref(), milnor, codim1),
        Cmd::Bs { cmd } => bs(ctx, cmd),
        Cmd::Zeta(args) => zeta(ctx, args),
        Cmd::Check { cmd } => check(ctx, cmd),
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn load_arrangement(p: &Path) -> Result<MultiArrangement, Failure> {
    Ok(parse_arrangement(&path_str(p), &read_file(p)?)?)
}

fn load_bs(p: &Path) -> Result<BsInput, Failure> {
    Ok(parse_bs(&path_str(p), &read_file(p)?)?)
}

fn load_single_bs(p: &Path) -> Result<BSIdealDatum, Failure> {
    match load_bs(p)? {
        BsInput::Single(b) => Ok(b),
        BsInput::Units(_) => Err(Failure(format!("{}: expected a single ideal, found a units file", path_str(p)))),
    }
}

fn load_zeta(p: &Path) -> Result<SRationalFunction, Failure> {
    Ok(parse_json::<ZetaJson>(&path_str(p), &read_file(p)?)?.to_function(&path_str(p))?)
}

fn load_resolution(p: &Path) -> Result<crate::zeta::ResolutionData, Failure> {
    Ok(parse_json::<ResolutionJson>(&path_str(p), &read_file(p)?)?.to_data(&path_str(p))?)
}

fn arg_error(name: &str, msg: impl std::fmt::Display) -> Failure {
    Failure(format!("argument --{name}: {msg}"))
}

fn parse_list<T: FromStr>(name: &str, s: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<T>().map_err(|_| arg_error(name, format!("cannot parse `{x}`"))))
        .collect()
}

fn parse_matrix(name: &str, s: &str) -> Result<IntMatrix, Failure> {
    let rows: Vec<Vec<BigInt>> = s.split(';').map(|r| parse_list::<BigInt>(name, r)).collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    IntMatrix::from_rows(cols, rows).map_err(|e| arg_error(name, e))
}

fn parse_perm(s: &str, r: usize) -> Result<Vec<usize>, Failure> {
    let p: Vec<usize> = parse_list("perm", s)?;
    if p.len() != r || p.iter().any(|&x| x == 0 || x > r) {
        return Err(arg_error("perm", format!("expected a permutation of 1..{r}")));
    }
    Ok(p.into_iter().map(|x| x - 1).collect())
}

fn form_strings(forms: &[crate::form::AffineForm]) -> Vec<String> {
    forms.iter().map(|f| f.to_string()).collect()
}

fn verdict(ctx: &mut Ctx, holds: bool, witnesses: Vec<String>, notes: Vec<String>) -> CliResult {
    let status = if holds { Status::Holds } else { Status::Violated };
    if ctx.json {
        ctx.emit(&VerdictJson::new(status, witnesses, notes));
    } else {
        ctx.line(if holds { "holds" } else { "violated" });
        for w in &witnesses {
            ctx.line(format!("  witness: {w}"));
        }
        for n in &notes {
            ctx.line(format!("  {n}"));
        }
    }
    Ok(if holds { 0 } else { 1 })
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct EdgeJson {
    pub codim: usize,
    pub through: Vec<usize>,
    pub point: Vec<RatJson>,
    pub dense: bool,
    pub blocks: Vec<Vec<usize>>,
    pub degree_vectors: Vec<Vec<u64>>,
    pub char_poly: Vec<IntJson>,
    pub proj_euler_char: IntJson,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ArrInfoJson {
    pub arrangement: ArrangementJson,
    pub central: bool,
    pub essential: bool,
    pub edges: Vec<EdgeJson>,
}

fn arr_info(ctx: &mut Ctx, file: &Path) -> CliResult {
    let a = load_arrangement(file)?;
    let edges: Vec<EdgeJson> = intersection_lattice(&a)
        .into_iter()
        .map(|w| {
            let s = total_splitting(&a, &w);
            EdgeJson {
                codim: w.codim,
                through: w.through.iter().map(|i| i + 1).collect(),
                point: w.point.iter().cloned().map(RatJson).collect(),
                dense: is_dense(&a, &w),
                blocks: s.blocks.iter().map(|b| b.iter().map(|i| i + 1).collect()).collect(),
                degree_vectors: s.degree_vectors.clone(),
                char_poly: char_poly(&a, &w).coeffs().iter().cloned().map(IntJson).collect(),
                proj_euler_char: IntJson(proj_euler_char(&a, &w)),
            }
        })
        .collect();
    if ctx.json {
        ctx.emit(&ArrInfoJson {
            arrangement: ArrangementJson::from_arrangement(&a),
            central: a.is_central(),
            essential: a.is_essential(),
            edges,
        });
        return Ok(0);
    }
    ctx.line(format!("{a}"));
    ctx.line(format!("central: {}, essential: {}", a.is_central(), a.is_essential()));
    ctx.line(format!("{} edges", edges.len()));
    for (w, e) in intersection_lattice(&a).iter().zip(&edges) {
        let through: Vec<String> = e.through.iter().map(|i| i.to_string()).collect();
        let point: Vec<String> = w.point.iter().map(|x| x.to_string()).collect();
        let blocks: Vec<String> =
            e.blocks.iter().zip(&e.degree_vectors).map(|(b, d)| format!("{:?}->{:?}", b, d)).collect();
        ctx.line(format!(
            "codim {} through {{{}}} at ({}){} blocks {} charpoly {} euler {}",
            e.codim,
            through.join(","),
            point.join(","),
            if e.dense { " dense" } else { "" },
            blocks.join(" "),
            char_poly(&a, w),
            e.proj_euler_char.0
        ));
    }
    Ok(0)
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EigenvaluesJson {
    All,
    Finite { values: Vec<RatJson> },
}

fn support(ctx: &mut Ctx, file: &Path, point: Option<&str>, milnor: bool, codim1: bool) -> CliResult {
    let a = load_arrangement(file)?;
    if milnor {
        let e = milnor_eigenvalues(&a);
        if ctx.json {
            let j = match &e {
                EigenvalueSet::AllOfCStar => EigenvaluesJson::All,
                EigenvalueSet::Finite(v) => {
                    EigenvaluesJson::Finite { values: v.iter().map(|q| RatJson(q.value().clone())).collect() }
                }
            };
            ctx.emit(&j);
        } else {
            ctx.line(e.to_string());
        }
        return Ok(0);
    }
    let u = match point {
        Some(p) => {
            let x: Vec<Rat> = parse_list("point", p)?;
            if x.len() != a.n() {
                return Err(arg_error("point", format!("expected {} coordinates", a.n())));
            }
            support_at_point(&a, &x)?
        }
        None => {
            let rep = uniform_support_union(&a);
            if codim1 {
                rep.codim1
            } else {
                rep.total
            }
        }
    };
    let u = if codim1 && point.is_some() { u.codim_one() } else { u };
    print_union(ctx, &u);
    Ok(0)
}

fn print_union(ctx: &mut Ctx, u: &CosetUnion) {
    if ctx.json {
        ctx.emit(&CosetUnionJson::from_union(u));
    } else {
        for c in u.components() {
            ctx.line(c.to_string());
        }
        if u.is_empty() {
            ctx.line("∅");
        }
    }
}

fn print_locus(ctx: &mut Ctx, l: &AffineLocus) {
    if ctx.json {
        ctx.emit(&AffineLocusJson::from_locus(l));
    } else {
        for c in l.components() {
            ctx.line(c.to_string());
        }
        if l.is_empty() {
            ctx.line("∅");
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct MonomialJson {
    pub generator: Vec<FormJson>,
    pub locus: AffineLocusJson,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct LociJson {
    pub loci: Vec<AffineLocusJson>,
}

fn unit_loci(files: &[PathBuf]) -> Result<Vec<AffineLocus>, Failure> {
    if files.len() == 1 {
        if let BsInput::Units(us) = load_bs(&files[0])? {
            return Ok(us.iter().map(locus).collect());
        }
    }
    files.iter().map(|f| load_single_bs(f).map(|b| locus(&b))).collect()
}

fn bs(ctx: &mut Ctx, cmd: BsCmd) -> CliResult {
    match cmd {
        BsCmd::Monomial { file } => {
            let a = load_arrangement(&file)?;
            let (gen, l) = monomial_bs_locus(&a)?;
            if ctx.json {
                ctx.emit(&MonomialJson {
                    generator: gen
                        .iter()
                        .map(|f| FormJson { power: f.power, ..FormJson::from_form(&f.form) })
                        .collect(),
                    locus: AffineLocusJson::from_locus(&l),
                });
            } else {
                let g: String = gen
                    .iter()
                    .map(|f| if f.power == 1 { format!("({})", f.form) } else { format!("({})^{}", f.form, f.power) })
                    .collect();
                ctx.line(format!("generator: {g}"));
                print_locus(ctx, &l);
            }
            Ok(0)
        }
        BsCmd::Locus { file } => {
            match load_bs(&file)? {
                BsInput::Single(b) => print_locus(ctx, &locus(&b)),
                BsInput::Units(us) => {
                    if ctx.json {
                        ctx.emit(&LociJson {
                            loci: us.iter().map(|u| AffineLocusJson::from_locus(&locus(u))).collect(),
                        });
                    } else {
                        for (j, u) in us.iter().enumerate() {
                            ctx.line(format!("unit {}:", j + 1));
                            print_locus(ctx, &locus(u));
                        }
                    }
                }
            }
            Ok(0)
        }
        BsCmd::Exp { file } => {
            let u = match load_bs(&file)? {
                BsInput::Single(b) => exp_locus(&locus(&b)),
                BsInput::Units(us) => {
                    let loci: Vec<AffineLocus> = us.iter().map(locus).collect();
                    exp_vb(&loci, &vec![1; loci.len()])?
                }
            };
            print_union(ctx, &u);
            Ok(0)
        }
        BsCmd::Decompose { files, m, perm } => {
            let loci = unit_loci(&files)?;
            let m: Vec<u64> = parse_list("m", &m)?;
            let pi = match perm {
                Some(p) => parse_perm(&p, loci.len())?,
                None => (0..loci.len()).collect(),
            };
            print_locus(ctx, &vb_decomposition(&loci, &m, &pi)?);
            Ok(0)
        }
    }
}

fn print_zeta(ctx: &mut Ctx, z: &SRationalFunction) {
    if ctx.json {
        ctx.emit(&ZetaJson::from_function(z));
    } else {
        ctx.line(z.to_string());
    }
}

fn print_polar(ctx: &mut Ctx, r: usize, p: &PolarLocus) {
    if ctx.json {
        ctx.emit(&PolarLocusJson::from_polar(r, p));
    } else {
        ctx.line(p.to_string());
    }
}

fn zeta(ctx: &mut Ctx, args: ZetaArgs) -> CliResult {
    match args.cmd {
        Some(ZetaCmd::Candidates { file }) => {
            let a = load_arrangement(&file)?;
            print_polar(ctx, a.r(), &polar_candidates(&a));
            Ok(0)
        }
        Some(ZetaCmd::Subst { file, map, shift }) => {
            let z = load_zeta(&file)?;
            let m = parse_matrix("map", &map)?;
            let c: Vec<Rat> = match shift {
                Some(s) => parse_list("shift", &s)?,
                None => vec![Rat::from_integer(0.into()); z.nvars()],
            };
            print_zeta(ctx, &substitute_affine(&z, &m, &c)?);
            Ok(0)
        }
        None => {
            let d = match (&args.resolution, &args.file) {
                (Some(res), None) => load_resolution(res)?,
                (None, Some(f)) => canonical_resolution_2d(&load_arrangement(f)?)?,
                _ => return Err(Failure("give either an arrangement file or --resolution".into())),
            };
            print_zeta(ctx, &zeta_from_resolution(&d, args.local0)?);
            Ok(0)
        }
    }
}

fn comparison(ctx: &mut Ctx, c: &SetComparison, left: &str, right: &str) -> CliResult {
    let witnesses = c.witnesses.iter().map(|w| w.to_string()).collect();
    let notes = vec![format!("{left}: {}", c.left), format!("{right}: {}", c.right)];
    verdict(ctx, c.holds, witnesses, notes)
}

fn form_check(ctx: &mut Ctx, c: &FormCheck, what: &str) -> CliResult {
    verdict(ctx, c.holds, form_strings(&c.witnesses), vec![format!("{what}: {}", c.checked)])
}

fn check(ctx: &mut Ctx, cmd: CheckCmd) -> CliResult {
    match cmd {
        CheckCmd::Conj1 { bs } => {
            let (ok, bad) = check_conj1_shape(&load_single_bs(&bs)?);
            verdict(ctx, ok, form_strings(&bad), vec![])
        }
        CheckCmd::Conj2 { arr, bs } => {
            let a = load_arrangement(&arr)?;
            let rep = match load_bs(&bs)? {
                BsInput::Single(b) => check_conj2(&a, &b)?,
                BsInput::Units(us) => {
                    let loci: Vec<AffineLocus> = us.iter().map(locus).collect();
                    check_conj2_exp(&a, &exp_vb(&loci, &vec![1; loci.len()])?)?
                }
            };
            let mut witnesses: Vec<String> = rep.extra_in_exp.iter().map(|c| format!("only in Exp: {c}")).collect();
            witnesses.extend(rep.missing_from_exp.iter().map(|c| format!("only in support: {c}")));
            let mut notes = vec![format!("verdict: {}", rep.verdict)];
            let code = match rep.verdict {
                Conj2Verdict::Equal => 0,
                Conj2Verdict::StrictlyContains => 1,
                Conj2Verdict::StrictlyContained | Conj2Verdict::Incomparable => {
                    notes.push(
                        "Exp of the zero locus misses part of the support union; the ideal data is likely wrong".into(),
                    );
                    2
                }
            };
            let status = match code {
                0 => Status::Holds,
                1 => Status::Violated,
                _ => Status::Error,
            };
            if ctx.json {
                ctx.emit(&VerdictJson::new(status, witnesses, notes));
            } else {
                ctx.line(rep.verdict.to_string());
                for w in witnesses.iter().chain(notes.iter().skip(1)) {
                    ctx.line(format!("  {w}"));
                }
            }
            Ok(code)
        }
        CheckCmd::Monodromy { arr, resolution } => {
            let a = load_arrangement(&arr)?;
            let (source, what) = match resolution {
                Some(r) => (ZetaSource::Resolution(load_resolution(&r)?), "poles of the supplied resolution"),
                None if a.n() == 2 => (ZetaSource::Builtin, "poles of the canonical resolution"),
                None => (ZetaSource::Candidates, "dense-edge candidates"),
            };
            let c = check_monodromy(&a, &source)?;
            form_check(ctx, &c, what)
        }
        CheckCmd::Strong { zeta, files } => {
            let (poles, bs_file, what) = match (zeta, files.as_slice()) {
                (Some(z), [b]) => (polar_locus(&load_zeta(&z)?), b.clone(), "poles of the supplied zeta function"),
                (None, [arr, b]) => {
                    let a = load_arrangement(arr)?;
                    if a.n() == 2 {
                        let z = zeta_from_resolution(&canonical_resolution_2d(&a)?, false)?;
                        (polar_locus(&z), b.clone(), "poles of the canonical resolution")
                    } else {
                        (polar_candidates(&a), b.clone(), "dense-edge candidates")
                    }
                }
                _ => return Err(Failure("expected ARR BSFILE or --zeta Z BSFILE".into())),
            };
            let l = match load_bs(&bs_file)? {
                BsInput::Single(b) => locus(&b),
                BsInput::Units(us) => {
                    let loci: Vec<AffineLocus> = us.iter().map(locus).collect();
                    let n = loci.len();
                    vb_decomposition(&loci, &vec![1; n], &(0..n).collect::<Vec<_>>())?
                }
            };
            let c = check_strong_monodromy_locus(&poles, &l)?;
            form_check(ctx, &c, what)
        }
        CheckCmd::Specialize { arr, m, bs } => {
            let a = load_arrangement(&arr)?;
            let m = parse_matrix("m", &m)?;
            let c = check_specialization(&a, &m)?;
            let mut holds = c.holds;
            let mut witnesses: Vec<String> = c.witnesses.iter().map(|w| w.to_string()).collect();
            let mut notes = vec![format!("pulled back: {}", c.left), format!("direct: {}", c.right)];
            if let Some(files) = bs {
                let bf = load_single_bs(&files[0])?;
                let bg = load_single_bs(&files[1])?;
                let rep = check_bs_specialization(&bf, &bg, &m)?;
                holds &= rep.holds;
                witnesses.extend(rep.witnesses.iter().map(|w| format!("not in pulled-back Exp locus: {w}")));
                notes.push(format!("ideal inclusion: {}", if rep.holds { "holds" } else { "violated" }));
            }
            verdict(ctx, holds, witnesses, notes)
        }
        CheckCmd::Ts { arr1, arr2 } => {
            let c = check_thom_sebastiani(&load_arrangement(&arr1)?, &load_arrangement(&arr2)?)?;
            comparison(ctx, &c, "product", "intersection")
        }
        CheckCmd::Decone { arr } => {
            let c = check_deconing(&load_arrangement(&arr)?)?;
            comparison(ctx, &c, "total", "origin and charts")
        }
    }
}
