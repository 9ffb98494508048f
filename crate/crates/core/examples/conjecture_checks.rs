// Running the decision procedures on shipped data: Exp of the ideal locus
// against the support union, monodromy of zeta poles, and the strong form.

use std::error::Error;
use std::path::Path;

use monodromy_support::bs::{check_conj1_shape, check_conj2, locus};
use monodromy_support::io::{self, BsInput, ZetaJson};
use monodromy_support::zeta::{check_monodromy, check_strong_monodromy, polar_locus, ZetaSource};

fn text(name: &str) -> Result<String, Box<dyn Error>> {
    Ok(io::read_file(&Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name))?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = io::parse_arrangement("xy_1mxy.arr", &text("xy_1mxy.arr")?)?;
    let BsInput::Single(bf) = io::parse_bs("xy_1mxy.bs", &text("xy_1mxy.bs")?)? else {
        return Err("expected one ideal".into());
    };

    let (shaped, bad) = check_conj1_shape(&bf);
    println!("generator shape: {shaped} ({} offending factors)", bad.len());
    let rep = check_conj2(&a, &bf)?;
    println!("Exp V(B_F) against support: {}", rep.verdict);
    println!("zeta poles inside support: {}", check_monodromy(&a, &ZetaSource::Builtin)?.holds);
    println!("V(B_F) = {}", locus(&bf));

    let z: ZetaJson = io::parse_json("z_quartic_zeta0.zeta", &text("z_quartic_zeta0.zeta")?)?;
    let z = z.to_function("z_quartic_zeta0.zeta")?;
    let BsInput::Single(b) = io::parse_bs("z_quartic_bf.bs", &text("z_quartic_bf.bs")?)? else {
        return Err("expected one ideal".into());
    };
    let strong = check_strong_monodromy(&polar_locus(&z), &b)?;
    println!("poles of {z} inside V(B_F): {}", strong.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
