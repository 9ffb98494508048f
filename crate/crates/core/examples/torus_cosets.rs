// Torsion cosets in (C*)^r: solving character equations, exponentiating
// rational subspaces, pulling back along monomial maps.

use std::error::Error;

use num_bigint::BigInt;

use monodromy_support::affine::AffineSubspace;
use monodromy_support::form::AffineForm;
use monodromy_support::linalg::IntMatrix;
use monodromy_support::torus::{exp_affine, preimage_monomial, solve_character_constraints, QZ};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // t1^2 t2^2 = -1 splits into two cosets of {t1 t2 = const}
    let u = solve_character_constraints(2, &[(vec![BigInt::from(2), BigInt::from(2)], QZ::from_ratio(1, 2))])?;
    println!("t1^2 t2^2 = -1: {u}");

    let v = solve_character_constraints(2, &[(vec![BigInt::from(1), BigInt::from(-1)], QZ::zero())])?;
    println!("meets t1 = t2 in {}", u.intersection(&v)?);

    let plane = AffineSubspace::hyperplane(AffineForm::from_i64(&[2, 2], 1));
    let c = exp_affine(&plane);
    println!("Exp(V(2s1+2s2+1)) = {c}");

    let diag = IntMatrix::from_i64(&[&[1, 1]]);
    println!("on the diagonal: {}", preimage_monomial(&diag, &u)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
