//! Acceptance suite. Run with `cargo test --test acceptance -- --nocapture`
//! to see one line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use common::*;
use monodromy_support::affine::AffineLocus;
use monodromy_support::arrangement::{
    intersection_lattice, is_dense, proj_euler_char, restriction, HyperplaneMulti, MultiArrangement,
};
use monodromy_support::bs::{
    check_conj2, check_conj2_exp, conjnd_hyperplane, locus, monomial_bs_locus, translate, vb_decomposition,
    Conj2Verdict,
};
use monodromy_support::linalg::{IntMatrix, Rat};
use monodromy_support::support::{check_deconing, check_specialization, check_thom_sebastiani, uniform_support_union};
use monodromy_support::torus::{exp_locus, CosetUnion, TorsionCoset};
use monodromy_support::zeta::{
    blown_up_points, canonical_resolution_2d, check_monodromy, check_strong_monodromy, check_strong_monodromy_locus,
    polar_candidates, polar_locus, substitute_affine, zeta_2d, PolarLocus, SRationalFunction, ZetaSource,
};

type Outcome = Result<(), String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit_secs: u64,
    run: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `{t^b = 1}` for each listed character `b`.
fn unit_cosets(r: usize, chars: &[&[i64]]) -> CosetUnion {
    let comps = chars.iter().map(|b| TorsionCoset::from_basis(r, vec![ints(b)], vec![Rat::zero()]).unwrap()).collect();
    CosetUnion::new(r, comps).unwrap()
}

fn unit_form(r: usize, j: usize) -> monodromy_support::form::AffineForm {
    let mut c = vec![0; r];
    c[j] = 1;
    form(&c, 1)
}

fn five_planes_expected() -> CosetUnion {
    unit_cosets(
        5,
        &[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 1],
            &[1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1],
            &[1, 1, 1, 1, 1],
        ],
    )
}

fn unit_loci(units: &[monodromy_support::bs::BSIdealDatum]) -> Vec<AffineLocus> {
    units.iter().map(locus).collect()
}

fn criterion_1() -> Outcome {
    let rep = uniform_support_union(&load_arr("five_planes.arr"));
    let expected = five_planes_expected();
    ensure!(rep.total.components().len() == 8, "{} components", rep.total.components().len());
    ensure!(rep.total == expected, "support {} differs from {}", rep.total, expected);
    Ok(())
}

fn criterion_2() -> Outcome {
    let a = load_arr("five_planes.arr");
    let units = unit_loci(&load_units("five_planes_units.bs"));
    let exp = monodromy_support::bs::exp_vb(&units, &[1; 5]).map_err(|e| e.to_string())?;
    ensure!(exp == five_planes_expected(), "Exp of the unit loci is {exp}");
    let rep = check_conj2_exp(&a, &exp).map_err(|e| e.to_string())?;
    ensure!(rep.verdict == Conj2Verdict::Equal, "verdict {}", rep.verdict);
    Ok(())
}

fn criterion_3() -> Outcome {
    let a = load_arr("five_planes.arr");
    let mut expected: Vec<_> = (0..5).map(|j| unit_form(5, j)).collect();
    expected.extend([form(&[1, 1, 1, 0, 0], 2), form(&[0, 0, 1, 1, 1], 2), form(&[1, 1, 1, 1, 1], 3)]);
    let cands = polar_candidates(&a);
    ensure!(cands == PolarLocus::new(expected), "candidates {cands}");

    let units = unit_loci(&load_units("five_planes_units.bs"));
    let vb = vb_decomposition(&units, &[1; 5], &[0, 1, 2, 3, 4]).map_err(|e| e.to_string())?;
    let planes = intersection_lattice(&a)
        .into_iter()
        .filter(|w| is_dense(&a, w))
        .map(|w| conjnd_hyperplane(&restriction(&a, &w)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let l = vb.union(&AffineLocus::new(5, planes).unwrap()).unwrap();
    let rep = check_strong_monodromy_locus(&cands, &l).map_err(|e| e.to_string())?;
    ensure!(
        rep.holds,
        "forms outside the locus: {:?}",
        rep.witnesses.iter().map(|f| f.to_string()).collect::<Vec<_>>()
    );
    Ok(())
}

fn criterion_4() -> Outcome {
    let a = load_arr("xy_1mxy.arr");
    let bf = load_bs("xy_1mxy.bs");
    let support = uniform_support_union(&a).total;
    let exp = exp_locus(&locus(&bf));
    ensure!(support == exp, "support {support} against Exp {exp}");
    let direct = unit_cosets(2, &[&[1, 0], &[0, 1], &[1, 1]]);
    ensure!(support == direct, "support {support} against {direct}");
    let rep = check_conj2(&a, &bf).map_err(|e| e.to_string())?;
    ensure!(rep.verdict == Conj2Verdict::Equal, "verdict {}", rep.verdict);
    Ok(())
}

fn criterion_5() -> Outcome {
    let units = vec![locus(&load_bs("z_quartic_e1.bs")), locus(&load_bs("z_quartic_e2.bs"))];
    let shipped = unit_loci(&load_units("z_quartic_units.bs"));
    ensure!(shipped == units, "units file disagrees with the single-entry files");
    let bf = load_bs("z_quartic_bf.bs");
    let target = locus(&bf);
    for pi in [[0, 1], [1, 0]] {
        let vb = vb_decomposition(&units, &[1, 1], &pi).map_err(|e| e.to_string())?;
        ensure!(vb == target, "permutation {pi:?}: {vb:?}");
    }
    let z = load_zeta("z_quartic_zeta0.zeta");
    ensure!(z.to_string() == "(2s1s2+s2+1)/((s1+1)(s2+1)(2s2+1))", "zeta literal reads as {z}");
    let rep = check_strong_monodromy(&polar_locus(&z), &bf).map_err(|e| e.to_string())?;
    ensure!(rep.holds, "witnesses {:?}", rep.witnesses);
    Ok(())
}

fn criterion_6() -> Outcome {
    let bf = locus(&load_bs("x4_y2z2_bf.bs"));
    let square = locus(&load_bs("x4_y2z2_square.bs"));
    let shifted = bf.union(&translate(&bf, &[BigInt::from(1)])).unwrap();
    ensure!(shifted == square, "{shifted:?} against {square:?}");
    let vb = vb_decomposition(&[bf], &[2], &[0]).map_err(|e| e.to_string())?;
    ensure!(vb == square, "decomposition {vb:?}");
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut rng = rng(7);
    for case in 0..50 {
        let a = random_monomial(&mut rng);
        let (_, l) = monomial_bs_locus(&a).map_err(|e| e.to_string())?;
        let exp = exp_locus(&l);
        let support = uniform_support_union(&a).total;
        ensure!(exp == support, "case {case}: {a}: Exp {exp} against support {support}");
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut rng = rng(8);
    for case in 0..50 {
        let r = rng.gen_range(1..=3);
        let a = random_arrangement(&mut rng, 2, 6, r, 2, false);
        let m = random_specialization(&mut rng, r);
        let rep = check_specialization(&a, &m).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(rep.holds, "case {case}: {a} with {m}: pullback {} against direct {}", rep.left, rep.right);
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut rng = rng(9);
    for case in 0..20 {
        let r = rng.gen_range(1..=2);
        let n1 = rng.gen_range(1..=2);
        let n2 = rng.gen_range(1..=2);
        let a1 = random_arrangement(&mut rng, n1, 3, r, 2, true);
        let a2 = random_arrangement(&mut rng, n2, 3, r, 2, true);
        let rep = check_thom_sebastiani(&a1, &a2).map_err(|e| format!("product case {case}: {e}"))?;
        ensure!(rep.holds, "product case {case}: {a1} and {a2}: {} against {}", rep.left, rep.right);
    }
    for case in 0..20 {
        let r = rng.gen_range(1..=2);
        let n = rng.gen_range(2..=3);
        let a = random_arrangement(&mut rng, n, 5, r, 2, true);
        let rep = check_deconing(&a).map_err(|e| format!("deconing case {case}: {e}"))?;
        ensure!(rep.holds, "deconing case {case}: {a}: {} against {}", rep.left, rep.right);
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let x = form(&[1, 0], 0);
    let y = form(&[0, 1], 0);
    let pair = MultiArrangement::from_forms(2, vec![x.clone(), y.clone()]).unwrap();
    let z = zeta_2d(&pair, false).map_err(|e| e.to_string())?;
    let expected =
        SRationalFunction::inverse_product(2, Rat::from_integer(1.into()), &[unit_form(2, 0), unit_form(2, 1)])
            .unwrap();
    ensure!(z == expected, "zeta of (x, y) is {z}");
    let product = MultiArrangement::new(
        2,
        1,
        vec![HyperplaneMulti { form: x, mults: vec![1] }, HyperplaneMulti { form: y, mults: vec![1] }],
    )
    .unwrap();
    for local in [false, true] {
        let z = zeta_2d(&pair, local).map_err(|e| e.to_string())?;
        let diag = substitute_affine(&z, &IntMatrix::from_i64(&[&[1, 1]]), &[Rat::zero(), Rat::zero()])
            .map_err(|e| e.to_string())?;
        let direct = zeta_2d(&product, local).map_err(|e| e.to_string())?;
        ensure!(diag == direct, "local = {local}: diagonal {diag} against direct {direct}");
    }

    let mut rng = rng(10);
    for case in 0..20 {
        let r = rng.gen_range(1..=2);
        let a = random_arrangement(&mut rng, 2, 6, r, 2, false);
        let d = canonical_resolution_2d(&a).map_err(|e| e.to_string())?;
        let want = 1 + blown_up_points(&d) as i64;
        ensure!(d.euler_sum() == want, "case {case}: {a}: Euler sum {} against {want}", d.euler_sum());
        let rep = check_monodromy(&a, &ZetaSource::Builtin).map_err(|e| e.to_string())?;
        ensure!(rep.holds, "case {case}: {a}: poles {:?} outside the support", rep.witnesses);
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let mut rng = rng(11);
    for case in 0..50 {
        let n = rng.gen_range(1..=4);
        let central = rng.gen_bool(0.5);
        let a = random_arrangement(&mut rng, n, 7, 1, 1, central);
        for w in intersection_lattice(&a) {
            let dense = is_dense(&a, &w);
            let chi = proj_euler_char(&a, &w);
            ensure!(
                dense == !chi.is_zero(),
                "case {case}: {a}: edge {:?} dense = {dense}, Euler characteristic {chi}",
                w.through
            );
        }
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let mut rng = rng(12);
    for case in 0..30 {
        let r = rng.gen_range(1..=3);
        let u = random_coset_union(&mut rng, r);
        let v = random_coset_union(&mut rng, r);
        let n: BigInt = order_lcm(&u).lcm(&order_lcm(&v)) * 2;
        let n = n.to_i64().unwrap();
        let pu = torsion_points(&u, n);
        let pv = torsion_points(&v, n);
        let inter = u.intersection(&v).map_err(|e| e.to_string())?;
        let pi = torsion_points(&inter, n);
        let brute_inter: Vec<bool> = pu.iter().zip(&pv).map(|(a, b)| *a && *b).collect();
        ensure!(pi == brute_inter, "case {case}: intersection of {u} and {v} is {inter}, N = {n}");
        let brute_uv = pu.iter().zip(&pv).all(|(a, b)| !*b || *a);
        let brute_vu = pu.iter().zip(&pv).all(|(a, b)| !*a || *b);
        let uv = u.includes(&v).map_err(|e| e.to_string())?;
        let vu = v.includes(&u).map_err(|e| e.to_string())?;
        ensure!(uv == brute_uv, "case {case}: {u} includes {v}: {uv}, torsion points say {brute_uv}, N = {n}");
        ensure!(vu == brute_vu, "case {case}: {v} includes {u}: {vu}, torsion points say {brute_vu}, N = {n}");
        let eq = u.equals(&v).map_err(|e| e.to_string())?;
        ensure!(eq == (brute_uv && brute_vu), "case {case}: equality of {u} and {v}: {eq}, N = {n}");
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion { id: 1, name: "five planes: support union", limit_secs: 1, run: criterion_1 },
        Criterion { id: 2, name: "five planes: Exp of unit ideals, conj2 verdict", limit_secs: 1, run: criterion_2 },
        Criterion {
            id: 3,
            name: "five planes: polar candidates within the ideal locus",
            limit_secs: 1,
            run: criterion_3,
        },
        Criterion { id: 4, name: "(xy, (1-x)y): support equals Exp of the ideal", limit_secs: 1, run: criterion_4 },
        Criterion { id: 5, name: "z-quartic pair: decomposition and zeta poles", limit_secs: 1, run: criterion_5 },
        Criterion { id: 6, name: "x^4-y^2z^2: shifted locus of the square", limit_secs: 1, run: criterion_6 },
        Criterion { id: 7, name: "monomial closed form", limit_secs: 10, run: criterion_7 },
        Criterion { id: 8, name: "specialization", limit_secs: 30, run: criterion_8 },
        Criterion { id: 9, name: "products and deconing", limit_secs: 30, run: criterion_9 },
        Criterion { id: 10, name: "plane zeta functions", limit_secs: 30, run: criterion_10 },
        Criterion { id: 11, name: "density against Euler characteristic", limit_secs: 30, run: criterion_11 },
        Criterion { id: 12, name: "torsion-point oracle", limit_secs: 30, run: criterion_12 },
    ];
    let mut failures = Vec::new();
    for Criterion { id, name, limit_secs: limit, run: f } in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("took {elapsed:.2?}, limit {limit} s"))
            } else {
                Ok(())
            }
        });
        match &result {
            Ok(()) => println!("criterion {id:>2}: PASS  {name} ({elapsed:.2?})"),
            Err(msg) => {
                println!("criterion {id:>2}: FAIL  {name} ({elapsed:.2?}): {msg}");
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
