mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use common::{random_arrangement, random_coset_union, random_specialization, rng};
use monodromy_support::affine::{AffineLocus, AffineSubspace};
use monodromy_support::arrangement::{regroup, HyperplaneMulti, MultiArrangement};
use monodromy_support::bs::{exp_vb, translate, vb_decomposition};
use monodromy_support::form::AffineForm;
use monodromy_support::io::{self, ArrangementJson, CosetUnionJson, ZetaJson};
use monodromy_support::linalg::{IntMatrix, Rat};
use monodromy_support::torus::exp_locus;
use monodromy_support::zeta::{polar_candidates, polar_locus, substitute_affine, zeta_2d};

fn form_strategy(r: usize) -> impl Strategy<Value = AffineForm> {
    (prop::collection::vec(-3i64..=3, r), -6i64..=6)
        .prop_filter("nonzero normal", |(c, _)| c.iter().any(|&x| x != 0))
        .prop_map(|(c, k)| AffineForm::from_i64(&c, k))
}

fn locus_strategy(r: usize) -> impl Strategy<Value = AffineLocus> {
    prop::collection::vec(form_strategy(r), 1..4)
        .prop_map(move |fs| AffineLocus::new(r, fs.into_iter().map(AffineSubspace::hyperplane).collect()).unwrap())
}

fn unit_loci_strategy() -> impl Strategy<Value = Vec<AffineLocus>> {
    (1usize..=3).prop_flat_map(|r| prop::collection::vec(locus_strategy(r), r))
}

fn zero_shift(r: usize) -> Vec<Rat> {
    vec![Rat::zero(); r]
}

fn permuted(a: &MultiArrangement, sigma: &[usize]) -> MultiArrangement {
    let hs = a
        .hyperplanes()
        .iter()
        .map(|h| HyperplaneMulti { form: h.form.clone(), mults: sigma.iter().map(|&j| h.mults[j]).collect() })
        .collect();
    MultiArrangement::new(a.n(), a.r(), hs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_ignores_integer_translation(l in locus_strategy(3), c in prop::collection::vec(-4i64..=4, 3)) {
        let c: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(exp_locus(&translate(&l, &c)), exp_locus(&l));
    }

    #[test]
    fn exp_of_decomposition_is_order_free(units in unit_loci_strategy(), m in prop::collection::vec(0u64..=2, 3), shuffle in any::<u64>()) {
        let r = units.len();
        let m = &m[..r];
        let mut pi: Vec<usize> = (0..r).collect();
        pi.rotate_left((shuffle as usize) % r);
        if shuffle & 1 == 1 {
            pi.reverse();
        }
        let id: Vec<usize> = (0..r).collect();
        let a = exp_locus(&vb_decomposition(&units, m, &id).unwrap());
        let b = exp_locus(&vb_decomposition(&units, m, &pi).unwrap());
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, exp_vb(&units, m).unwrap());
    }

    #[test]
    fn zeta_follows_relabelling(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_arrangement(&mut g, 2, 5, 3, 2, false);
        let sigma = [2usize, 0, 1];
        let z = zeta_2d(&a, false).unwrap();
        let mut rows = vec![vec![BigInt::zero(); 3]; 3];
        for (k, &j) in sigma.iter().enumerate() {
            rows[k][j] = BigInt::from(1);
        }
        let p = IntMatrix::from_rows(3, rows).unwrap();
        prop_assert_eq!(zeta_2d(&permuted(&a, &sigma), false).unwrap(), substitute_affine(&z, &p, &zero_shift(3)).unwrap());
    }

    #[test]
    fn zeta_commutes_with_specialization(seed in any::<u64>(), local in any::<bool>()) {
        let mut g = rng(seed);
        let r = 1 + (seed % 3) as usize;
        let a = random_arrangement(&mut g, 2, 5, r, 2, false);
        let m = random_specialization(&mut g, r);
        let direct = zeta_2d(&regroup(&a, &m).unwrap().arrangement, local).unwrap();
        let pulled = substitute_affine(&zeta_2d(&a, local).unwrap(), &m, &zero_shift(r)).unwrap();
        prop_assert_eq!(direct, pulled);
    }

    #[test]
    fn local_poles_are_candidates(seed in any::<u64>(), central in any::<bool>()) {
        let mut g = rng(seed);
        let a = random_arrangement(&mut g, 2, 6, 2, 2, central);
        let poles = polar_locus(&zeta_2d(&a, true).unwrap());
        prop_assert!(poles.is_subset_of(&polar_candidates(&a)), "{} not within {}", poles, polar_candidates(&a));
        let global = polar_locus(&zeta_2d(&a, false).unwrap());
        prop_assert!(global.is_subset_of(&polar_candidates(&a)));
    }

    #[test]
    fn arrangement_json_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_arrangement(&mut g, 3, 6, 2, 3, false);
        let text = io::to_json_string(&ArrangementJson::from_arrangement(&a));
        prop_assert_eq!(io::parse_arrangement("a.json", &text).unwrap(), a);
    }

    #[test]
    fn coset_union_json_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        let u = random_coset_union(&mut g, 3);
        let text = io::to_json_string(&CosetUnionJson::from_union(&u));
        let back: CosetUnionJson = io::parse_json("u.json", &text).unwrap();
        prop_assert_eq!(back.to_union("u.json").unwrap(), u);
    }

    #[test]
    fn zeta_json_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_arrangement(&mut g, 2, 5, 2, 2, false);
        let z = zeta_2d(&a, false).unwrap();
        let text = io::to_json_string(&ZetaJson::from_function(&z));
        let back: ZetaJson = io::parse_json("z.json", &text).unwrap();
        prop_assert_eq!(back.to_function("z.json").unwrap(), z);
    }

    #[test]
    fn coset_union_lattice_laws(seed in any::<u64>()) {
        let mut g = rng(seed);
        let u = random_coset_union(&mut g, 2);
        let v = random_coset_union(&mut g, 2);
        let i = u.intersection(&v).unwrap();
        let w = u.union(&v).unwrap();
        prop_assert_eq!(&w, &v.union(&u).unwrap());
        prop_assert_eq!(&i, &v.intersection(&u).unwrap());
        prop_assert!(u.includes(&i).unwrap() && v.includes(&i).unwrap());
        prop_assert!(w.includes(&u).unwrap() && w.includes(&v).unwrap());
        prop_assert_eq!(u.intersection(&w).unwrap(), u);
    }

    #[test]
    fn normalization_recovers_the_form(c in prop::collection::vec(-20i64..=20, 3), k in -20i64..=20, num in 1i64..=9, den in 1i64..=9) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let scale = Rat::new(num.into(), den.into());
        let coeffs: Vec<Rat> = c.iter().map(|&x| Rat::from_integer(x.into()) * &scale).collect();
        let constant = Rat::from_integer(k.into()) * &scale;
        let (f, lambda) = AffineForm::normalize(&coeffs, &constant).unwrap();
        let back: Vec<Rat> = f.coeffs().iter().map(|x| Rat::from_integer(x.clone()) * &lambda).collect();
        prop_assert_eq!(back, coeffs);
        prop_assert_eq!(Rat::from_integer(f.constant().clone()) * &lambda, constant);
        let (again, one) = AffineForm::normalize(&f.coeffs_rat(), &Rat::from_integer(f.constant().clone())).unwrap();
        prop_assert_eq!(again, f);
        prop_assert_eq!(one, Rat::from_integer(1.into()));
    }
}
