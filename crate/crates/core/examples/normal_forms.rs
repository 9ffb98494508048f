// Hermite and Smith normal forms, saturation and lattice indices.

use std::error::Error;

use monodromy_support::linalg::{hnf, lattice_index, saturate, smith_form, IntMatrix, Lattice};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
    let (h, u) = hnf(&m);
    println!("m =\n{m}");
    println!("hermite form =\n{h}");
    assert_eq!(u.mul(&m)?, h);

    let s = smith_form(&m);
    println!("invariant factors: {:?}", s.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    assert_eq!(s.u.mul(&m)?.mul(&s.v)?, s.d);

    // the lattice spanned by (2, 2) sits with index 2 in its saturation
    let l = Lattice::from_matrix(&IntMatrix::from_i64(&[&[2, 2]]));
    let sat = saturate(&l);
    println!("saturation of <(2,2)> has basis\n{}", sat.basis());
    println!("index: {:?}", lattice_index(&l, &sat)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
