// Uniform support of the tuple (xy, (1-x)y), edge by edge and at a point.

use std::error::Error;

use monodromy_support::arrangement::{HyperplaneMulti, MultiArrangement};
use monodromy_support::form::AffineForm;
use monodromy_support::linalg::rat;
use monodromy_support::support::{support_at_point, uniform_support_union};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // x divides f1, y divides both entries, x - 1 divides f2
    let h = |c: &[i64], k: i64, mults: Vec<u64>| HyperplaneMulti { form: AffineForm::from_i64(c, k), mults };
    let a = MultiArrangement::new(
        2,
        2,
        vec![h(&[1, 0], 0, vec![1, 0]), h(&[0, 1], 0, vec![1, 1]), h(&[1, 0], -1, vec![0, 1])],
    )?;

    let rep = uniform_support_union(&a);
    for c in &rep.per_edge {
        println!("edge through {:?}: {}", c.edge.through, c.support);
    }
    println!("total: {}", rep.total);
    println!("codimension one: {}", rep.codim1);
    println!("at (1, 0): {}", support_at_point(&a, &[rat(1, 1), rat(0, 1)])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
