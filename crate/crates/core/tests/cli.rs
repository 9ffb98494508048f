mod common;

use std::process::Command;

use common::fixture;
use monodromy_support::cli;
use monodromy_support::io::{
    self, AffineLocusJson, ArrangementJson, CosetUnionJson, PolarLocusJson, VerdictJson, ZetaJson,
};

struct Run {
    code: i32,
    out: String,
    err: String,
}

/// Runs the CLI in-process; arguments naming a shipped fixture are expanded to its path.
fn run(args: &[&str]) -> Run {
    let mut argv = vec!["monsupp".to_string()];
    for a in args {
        let p = fixture(a);
        argv.push(if p.is_file() { p.to_string_lossy().into_owned() } else { a.to_string() });
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn ok(args: &[&str]) -> String {
    let r = run(args);
    assert_eq!(r.code, 0, "{args:?}: {}{}", r.out, r.err);
    r.out
}

fn write_temp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("monsupp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn support_listings() {
    assert_eq!(ok(&["support", "xy_1mxy.arr"]), "{t2=1}\n{t1=1}\n{t1t2=1}\n");
    assert_eq!(ok(&["support", "xy_1mxy.arr", "--point", "0,0"]), "{t1=1, t2=1}\n");
    assert_eq!(ok(&["support", "three_lines.arr", "--milnor"]), "{e(2πi·0), e(2πi·1/3), e(2πi·2/3)}\n");
    assert_eq!(ok(&["support", "five_planes.arr"]).lines().count(), 8);
}

#[test]
fn arrangement_summary() {
    let out = ok(&["arr", "info", "five_planes.arr"]);
    assert!(out.starts_with("F = ((x1), (x2), (x1+x2), (x3), (x1+x2+x3)) in C^3\n"));
    assert!(out.contains("12 edges\n"));
    assert!(out.contains(
        "codim 3 through {1,2,3,4,5} at (0,0,0) dense blocks [1, 2, 3, 4, 5]->[1, 1, 1, 1, 1] charpoly t^3-5t^2+8t-4 euler 1"
    ));
    assert!(out.contains("codim 2 through {1,4} at (0,0,0) blocks [1]->[1, 0, 0, 0, 0] [4]->[0, 0, 0, 1, 0]"));
}

#[test]
fn zeta_functions() {
    assert_eq!(ok(&["zeta", "xy.arr"]), "1/((s1+1)(s2+1))\n");
    assert_eq!(ok(&["zeta", "x2y_xy3.arr"]), "1/((s1+3s2+1)(2s1+s2+1))\n");
    assert_eq!(ok(&["zeta", "three_lines.arr", "--local0"]), "(-s1s2s3+s1+s2+s3+2)/((s1+1)(s2+1)(s3+1)(s1+s2+s3+2))\n");
    assert_eq!(
        ok(&["zeta", "candidates", "five_planes.arr"]),
        "{s1+1, s2+1, s3+1, s4+1, s5+1, s1+s2+s3+2, s3+s4+s5+2, s1+s2+s3+s4+s5+3}\n"
    );
    assert_eq!(ok(&["zeta", "subst", "z_quartic_zeta0.zeta", "--map", "1,1"]), "(2s^2+s+1)/((s+1)^2(2s+1))\n");
}

#[test]
fn ideal_loci() {
    assert_eq!(ok(&["bs", "exp", "xy_1mxy.bs"]), "{t2=1}\n{t1=1}\n{t1t2=1}\n");
    let bf = ok(&["bs", "locus", "z_quartic_bf.bs"]);
    assert_eq!(bf, "V(s2+1)\nV(2s2+1)\nV(2s2+3)\nV(4s2+3)\nV(4s2+5)\nV(s1+1)\n");
    for perm in ["1,2", "2,1"] {
        assert_eq!(ok(&["bs", "decompose", "z_quartic_units.bs", "--m", "1,1", "--perm", perm]), bf);
        assert_eq!(ok(&["bs", "decompose", "z_quartic_e1.bs", "z_quartic_e2.bs", "--m", "1,1", "--perm", perm]), bf);
    }
    let mono = ok(&["bs", "monomial", "x2y_xy3.arr"]);
    assert!(mono.starts_with("generator: (s1+3s2+1)(s1+3s2+2)(s1+3s2+3)(s1+3s2+4)(2s1+s2+1)(2s1+s2+2)(2s1+s2+3)\n"));
}

#[test]
fn checks_and_exit_codes() {
    assert_eq!(ok(&["check", "conj1", "z_quartic_bf.bs"]), "holds\n");
    assert_eq!(ok(&["check", "conj2", "five_planes.arr", "five_planes_units.bs"]), "equal\n");
    assert_eq!(ok(&["check", "conj2", "xy_1mxy.arr", "xy_1mxy.bs"]), "equal\n");
    assert!(ok(&["check", "monodromy", "three_lines.arr"]).starts_with("holds\n"));
    assert!(ok(&["check", "strong", "five_planes.arr", "five_planes_units.bs"]).starts_with("holds\n"));
    assert!(ok(&["check", "strong", "--zeta", "z_quartic_zeta0.zeta", "z_quartic_bf.bs"]).starts_with("holds\n"));
    assert!(ok(&["check", "specialize", "three_lines.arr", "--m", "1,1,0;0,0,1"]).starts_with("holds\n"));
    assert!(ok(&["check", "ts", "xy.arr", "xy.arr"]).starts_with("holds\n"));
    assert!(ok(&["check", "decone", "five_planes.arr"]).starts_with("holds\n"));

    let r = run(&["check", "conj2", "xy.arr", "xy_1mxy.bs"]);
    assert_eq!((r.code, r.out.as_str()), (1, "strictly_contains\n  only in Exp: {t1t2=1}\n"));
    let r = run(&["check", "strong", "--zeta", "z_quartic_zeta0.zeta", "z_quartic_e1.bs"]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("violated\n  witness: s2+1\n  witness: 2s2+1\n"));
    let r = run(&["check", "conj2", "xy_1mxy.arr", "z_quartic_e1.bs"]);
    assert_eq!(r.code, 2);
    assert!(r.out.starts_with("strictly_contained\n"));
}

#[test]
fn input_errors_name_file_line_and_field() {
    let bad = write_temp("bad_const.arr", "{\n  \"n\": 1,\n  \"r\": 1,\n  \"hyperplanes\": [\n    {\"coeffs\": [1], \"const\": \"1/0\", \"mults\": [1]}\n  ]\n}\n");
    let r = run(&["support", &bad]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("bad_const.arr:5:"), "{}", r.err);
    assert!(r.err.contains("field `hyperplanes[0].const`"), "{}", r.err);

    let zero = write_temp(
        "zero.arr",
        r#"{"n":2,"r":1,"hyperplanes":[{"coeffs":[1,0],"mults":[1]},{"coeffs":[0,0],"mults":[1]}]}"#,
    );
    let r = run(&["support", &zero]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("zero.arr: field `hyperplanes[1]`"), "{}", r.err);

    let r = run(&["zeta", "z_quartic_zeta0.zeta"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("z_quartic_zeta0.zeta:") && r.err.contains("unknown field `num`"), "{}", r.err);

    let r = run(&["support", "no_such_file.arr"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("no_such_file.arr"));
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["check", "conj2", "x.arr", "xy_1mxy.bs"]).code, 2);
}

#[test]
fn json_reports_round_trip() {
    let out = ok(&["--json", "support", "five_planes.arr"]);
    let u: CosetUnionJson = io::parse_json("out", &out).unwrap();
    let u = u.to_union("out").unwrap();
    assert_eq!(u.components().len(), 8);
    assert_eq!(io::to_json_string(&CosetUnionJson::from_union(&u)).trim_end(), out.trim_end());

    let out = ok(&["--json", "zeta", "three_lines.arr", "--local0"]);
    let z: ZetaJson = io::parse_json("out", &out).unwrap();
    let z = z.to_function("out").unwrap();
    assert_eq!(z.to_string(), "(-s1s2s3+s1+s2+s3+2)/((s1+1)(s2+1)(s3+1)(s1+s2+s3+2))");
    assert_eq!(io::to_json_string(&ZetaJson::from_function(&z)).trim_end(), out.trim_end());

    let out = ok(&["--json", "bs", "locus", "z_quartic_bf.bs"]);
    let l: AffineLocusJson = io::parse_json("out", &out).unwrap();
    assert_eq!(l.to_locus("out").unwrap().components().len(), 6);

    let out = ok(&["--json", "zeta", "candidates", "five_planes.arr"]);
    let p: PolarLocusJson = io::parse_json("out", &out).unwrap();
    assert_eq!(p.to_polar("out").unwrap().forms().len(), 8);

    let r = run(&["--json", "check", "strong", "--zeta", "z_quartic_zeta0.zeta", "z_quartic_e1.bs"]);
    assert_eq!(r.code, 1);
    let v: VerdictJson = io::parse_json("out", &r.out).unwrap();
    assert_eq!(v.witnesses, vec!["s2+1".to_string(), "2s2+1".to_string()]);
    assert_eq!(io::to_json_string(&v).trim_end(), r.out.trim_end());

    let a = common::load_arr("five_planes.arr");
    let text = io::to_json_string(&ArrangementJson::from_arrangement(&a));
    assert_eq!(io::parse_arrangement("a", &text).unwrap(), a);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["arr", "info", "five_planes.arr"][..],
        &["--json", "support", "five_planes.arr"],
        &["zeta", "three_lines.arr", "--local0"],
        &["check", "decone", "five_planes.arr"],
    ] {
        assert_eq!(ok(args), ok(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_monsupp");
    let status = |args: &[&str]| {
        let args: Vec<String> = args
            .iter()
            .map(|a| if fixture(a).is_file() { fixture(a).to_string_lossy().into_owned() } else { a.to_string() })
            .collect();
        Command::new(bin).args(&args).output().unwrap()
    };
    let o = status(&["check", "conj2", "five_planes.arr", "five_planes_units.bs"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "equal\n");
    assert_eq!(status(&["check", "conj2", "xy.arr", "xy_1mxy.bs"]).status.code(), Some(1));
    let o = status(&["support", "missing.arr"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}
