// Edges, splittings and characteristic polynomials of a plane arrangement in C^3.

use std::error::Error;

use monodromy_support::arrangement::{
    char_poly, intersection_lattice, is_dense, proj_euler_char, total_splitting, MultiArrangement,
};
use monodromy_support::form::AffineForm;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let forms =
        [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 1, 1]].iter().map(|c| AffineForm::from_i64(c, 0)).collect();
    let a = MultiArrangement::from_forms(3, forms)?;
    println!("{a}");
    for w in intersection_lattice(&a) {
        let s = total_splitting(&a, &w);
        println!(
            "codim {} through {:?}: {} block(s), dense = {}, charpoly {}, euler {}",
            w.codim,
            w.through,
            s.blocks.len(),
            is_dense(&a, &w),
            char_poly(&a, &w),
            proj_euler_char(&a, &w)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
