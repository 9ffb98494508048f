// Zero loci of imported Bernstein-Sato data: reading an ideal file,
// decomposing along unit vectors, and passing to the torus.

use std::error::Error;
use std::path::Path;

use num_bigint::BigInt;

use monodromy_support::bs::{exp_vb, locus, monomial_bs_locus, translate, vb_decomposition};
use monodromy_support::io::{self, BsInput};
use monodromy_support::torus::exp_locus;

fn load(name: &str) -> Result<BsInput, Box<dyn Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    Ok(io::parse_bs(name, &io::read_file(&path)?)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let BsInput::Single(bf) = load("z_quartic_bf.bs")? else { return Err("expected one ideal".into()) };
    let BsInput::Units(units) = load("z_quartic_units.bs")? else { return Err("expected unit ideals".into()) };

    let target = locus(&bf);
    println!("V(B_F):\n{target}");
    let unit_loci: Vec<_> = units.iter().map(locus).collect();
    for pi in [[0, 1], [1, 0]] {
        let vb = vb_decomposition(&unit_loci, &[1, 1], &pi)?;
        println!("order {pi:?} reproduces V(B_F): {}", vb == target);
    }
    println!("Exp: {}", exp_vb(&unit_loci, &[1, 1])?);

    // shifting by an integer vector leaves Exp unchanged
    let moved = translate(&target, &[BigInt::from(3), BigInt::from(-1)]);
    assert_eq!(exp_locus(&moved), exp_locus(&target));

    let mono = io::parse_arrangement(
        "x2y_xy3.arr",
        &io::read_file(&Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/x2y_xy3.arr"))?,
    )?;
    let (factors, l) = monomial_bs_locus(&mono)?;
    println!("monomial generator has {} linear factors; Exp = {}", factors.len(), exp_locus(&l));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
