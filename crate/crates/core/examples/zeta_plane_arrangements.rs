use std::error::Error;

use monodromy_support::arrangement::MultiArrangement;
use monodromy_support::form::AffineForm;
use monodromy_support::linalg::{IntMatrix, Rat};
use monodromy_support::zeta::{
    blown_up_points, canonical_resolution_2d, polar_candidates, polar_locus, substitute_affine, zeta_2d,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let forms = [[1, 0], [0, 1], [1, 1]].iter().map(|c| AffineForm::from_i64(c, 0)).collect();
    let a = MultiArrangement::from_forms(2, forms)?;

    let res = canonical_resolution_2d(&a)?;
    println!(
        "{} divisors, {} blown-up point(s), euler sum {}",
        res.divisors.len(),
        blown_up_points(&res),
        res.euler_sum()
    );

    let global = zeta_2d(&a, false)?;
    let local = zeta_2d(&a, true)?;
    println!("global: {global}");
    println!("local at 0: {local}");
    println!("poles {} within candidates {}", polar_locus(&local), polar_candidates(&a));

    // s1 = s2 = s3 = s gives the zeta function of xy(x+y)
    let diag = substitute_affine(&local, &IntMatrix::from_i64(&[&[1, 1, 1]]), &vec![Rat::from_integer(0.into()); 3])?;
    println!("on the diagonal: {diag}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
