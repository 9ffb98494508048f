use std::error::Error;

use monodromy_support::arrangement::{regroup, MultiArrangement};
use monodromy_support::form::AffineForm;
use monodromy_support::linalg::IntMatrix;
use monodromy_support::support::milnor_eigenvalues;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for k in 2..=5i64 {
        // k distinct lines through the origin, one tuple entry each
        let forms = (0..k).map(|i| AffineForm::from_i64(&[1, i], 0)).collect();
        let a = MultiArrangement::from_forms(2, forms)?;
        let on_diagonal = milnor_eigenvalues(&a);

        // the same set from the single product polynomial
        let product = regroup(&a, &IntMatrix::from_i64(&[&vec![1; k as usize]]))?.arrangement;
        assert_eq!(milnor_eigenvalues(&product), on_diagonal);
        println!("{k} lines: {on_diagonal}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
