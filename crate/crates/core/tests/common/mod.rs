#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use monodromy_support::arrangement::{HyperplaneMulti, MultiArrangement};
use monodromy_support::bs::BSIdealDatum;
use monodromy_support::form::AffineForm;
use monodromy_support::io::{self, BsInput, ZetaJson};
use monodromy_support::linalg::{IntMatrix, Rat};
use monodromy_support::torus::{solve_character_constraints, CosetUnion, QZ};
use monodromy_support::zeta::SRationalFunction;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load_arr(name: &str) -> MultiArrangement {
    io::parse_arrangement(name, &read(name)).unwrap_or_else(|e| panic!("{e}"))
}

pub fn load_bs(name: &str) -> BSIdealDatum {
    match io::parse_bs(name, &read(name)).unwrap_or_else(|e| panic!("{e}")) {
        BsInput::Single(b) => b,
        BsInput::Units(_) => panic!("{name}: expected a single ideal"),
    }
}

pub fn load_units(name: &str) -> Vec<BSIdealDatum> {
    match io::parse_bs(name, &read(name)).unwrap_or_else(|e| panic!("{e}")) {
        BsInput::Units(u) => u,
        BsInput::Single(_) => panic!("{name}: expected a units file"),
    }
}

pub fn load_zeta(name: &str) -> SRationalFunction {
    let j: ZetaJson = io::parse_json(name, &read(name)).unwrap_or_else(|e| panic!("{e}"));
    j.to_function(name).unwrap_or_else(|e| panic!("{e}"))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn form(c: &[i64], k: i64) -> AffineForm {
    AffineForm::from_i64(c, k)
}

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<i64> {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if c.iter().any(|&x| x != 0) {
            return c;
        }
    }
}

fn random_mults(rng: &mut ChaCha8Rng, r: usize, max: u64) -> Vec<u64> {
    loop {
        let m: Vec<u64> = (0..r).map(|_| rng.gen_range(0..=max)).collect();
        if m.iter().any(|&x| x > 0) {
            return m;
        }
    }
}

/// Up to `max_h` hyperplanes with coefficients in `[-2, 2]`, affine constants in
/// `[-2, 2]` unless `central`, and multiplicity vectors with entries at most `max_mult`.
pub fn random_arrangement(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_h: usize,
    r: usize,
    max_mult: u64,
    central: bool,
) -> MultiArrangement {
    let h = rng.gen_range(1..=max_h);
    let hs = (0..h)
        .map(|_| {
            let c = random_coeffs(rng, n, 2);
            let k = if central { 0 } else { rng.gen_range(-2..=2) };
            HyperplaneMulti { form: AffineForm::from_i64(&c, k), mults: random_mults(rng, r, max_mult) }
        })
        .collect();
    MultiArrangement::new(n, r, hs).expect("valid random arrangement")
}

/// Products of powers of coordinates: `f_j = ∏_i x_i^{a_ij}` with `a_ij ≤ 3`.
pub fn random_monomial(rng: &mut ChaCha8Rng) -> MultiArrangement {
    let n = rng.gen_range(1..=4);
    let r = rng.gen_range(1..=4);
    loop {
        let hs: Vec<HyperplaneMulti> = (0..n)
            .filter_map(|i| {
                let mults: Vec<u64> = (0..r).map(|_| rng.gen_range(0..=3)).collect();
                let mut c = vec![0; n];
                c[i] = 1;
                mults.iter().any(|&m| m > 0).then(|| HyperplaneMulti { form: AffineForm::from_i64(&c, 0), mults })
            })
            .collect();
        if !hs.is_empty() {
            return MultiArrangement::new(n, r, hs).expect("valid monomial tuple");
        }
    }
}

/// `p × r` with entries in `[0, 3]` and no zero column.
pub fn random_specialization(rng: &mut ChaCha8Rng, r: usize) -> IntMatrix {
    let p = rng.gen_range(1..=3);
    let mut rows: Vec<Vec<BigInt>> =
        (0..p).map(|_| (0..r).map(|_| BigInt::from(rng.gen_range(0..=3))).collect()).collect();
    for j in 0..r {
        if rows.iter().all(|row| row[j] == BigInt::from(0)) {
            let k = rng.gen_range(0..p);
            rows[k][j] = BigInt::from(rng.gen_range(1..=3));
        }
    }
    IntMatrix::from_rows(r, rows).expect("rectangular")
}

/// A union of 1 to 3 solution sets of random character constraints with
/// entries in `{-1, 0, 1}` and values of order at most 6.
pub fn random_coset_union(rng: &mut ChaCha8Rng, r: usize) -> CosetUnion {
    let mut out = CosetUnion::empty(r);
    let pieces = rng.gen_range(1..=3);
    for _ in 0..pieces {
        let k = rng.gen_range(0..=r);
        let cons: Vec<(Vec<BigInt>, QZ)> = (0..k)
            .map(|_| {
                let b: Vec<BigInt> = random_coeffs(rng, r, 1).into_iter().map(BigInt::from).collect();
                let d = *[1i64, 2, 3, 4, 5, 6].choose(rng).expect("nonempty");
                (b, QZ::from_ratio(rng.gen_range(0..d), d))
            })
            .collect();
        let piece = solve_character_constraints(r, &cons).expect("consistent dimensions");
        out = out.union(&piece).expect("same ambient dimension");
    }
    out
}

/// Membership of the points `exp(2πi·a/N)` for `a ∈ [0, N)^r`, by direct
/// evaluation of the defining characters.
pub fn torsion_points(u: &CosetUnion, n: i64) -> Vec<bool> {
    let r = u.ambient_dim();
    let comps: Vec<Vec<(Vec<i64>, Option<i64>)>> = u
        .components()
        .iter()
        .map(|c| {
            c.constraints()
                .into_iter()
                .map(|(b, chi)| {
                    let scaled = chi.value() * Rat::from_integer(n.into());
                    let target = scaled.is_integer().then(|| scaled.to_integer().to_i64().unwrap());
                    (b.iter().map(|x| x.to_i64().unwrap()).collect(), target)
                })
                .collect()
        })
        .collect();
    let total = (n as usize).pow(r as u32);
    let mut out = Vec::with_capacity(total);
    let mut a = vec![0i64; r];
    for _ in 0..total {
        let inside = comps.iter().any(|cons| {
            cons.iter().all(|(b, target)| match target {
                Some(t) => (b.iter().zip(&a).map(|(x, y)| x * y).sum::<i64>() - t).rem_euclid(n) == 0,
                None => false,
            })
        });
        out.push(inside);
        for x in a.iter_mut() {
            *x += 1;
            if *x < n {
                break;
            }
            *x = 0;
        }
    }
    out
}

pub fn order_lcm(u: &CosetUnion) -> BigInt {
    u.components()
        .iter()
        .flat_map(|c| c.torsion().iter().map(|t| t.order()))
        .fold(BigInt::from(1), |acc, o| acc.lcm(&o))
}
