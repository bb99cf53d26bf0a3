//! Property tests for the torus, the Ore localization, flips and the oracle.

use num::complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shearq::fatgraph::spine_graph_an;
use shearq::mcg::{bracket_defect, classical_flip, flip_jacobian, QuantumSubstitution, ShearState};
use shearq::oracle::ClockShiftRep;
use shearq::qring::{
    Coefficient, OreElement, ParamValues, QDenominator, Ring, SkewForm, TorusElement, TorusMonomial,
};

fn a3() -> SkewForm {
    spine_graph_an(3).unwrap().skew_form()
}

fn element(n: usize) -> impl Strategy<Value = TorusElement> {
    prop::collection::vec(
        (prop::collection::vec(-2i32..=2, n), -3i64..=3, -4i32..=4),
        1..4,
    )
    .prop_map(move |terms| {
        let mut x = TorusElement::zero(n);
        for (u, c, k) in terms {
            let coeff = &Coefficient::from_int(c) * &Coefficient::t_pow(k);
            x = x.add(&TorusElement::term(&u, coeff));
        }
        x
    })
}

fn even_monomial(n: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-1i32..=1, n).prop_map(|u| u.into_iter().map(|x| 2 * x).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn torus_product_is_associative(x in element(5), y in element(5), z in element(5)) {
        let f = a3();
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
    }

    #[test]
    fn star_reverses_products(x in element(5), y in element(5)) {
        let f = a3();
        prop_assert_eq!(f.mul(&x, &y).star(), f.mul(&y.star(), &x.star()));
    }

    #[test]
    fn ore_fraction_of_nonzero_is_nonzero(x in element(5), c in -4i32..=4) {
        prop_assume!(!x.is_zero());
        let f = a3();
        let z = TorusMonomial::unit(5, 4, 2);
        let d = QDenominator::binomial(z, Coefficient::t_pow(c)).unwrap();
        let frac = OreElement::fraction(x.clone(), vec![d.clone()]);
        prop_assert!(!frac.is_zero(&f));
        let back = OreElement::fraction(f.mul(&x, &d.to_torus()), vec![d]);
        prop_assert!(back.add(&OreElement::from(x).neg()).is_zero(&f));
    }

    #[test]
    fn quantum_flip_images_multiply_like_the_target_torus(u in even_monomial(5), v in even_monomial(5)) {
        let g = spine_graph_an(3).unwrap();
        let sub = QuantumSubstitution::inner(&g, "X1").unwrap();
        let f = &sub.source;
        let img = |w: &[i32]| sub.apply(&TorusElement::monomial(w)).unwrap();
        let lhs = img(&u).mul(&img(&v), f).unwrap();
        let sum: Vec<i32> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let rhs = img(&sum).scale(&Coefficient::t_pow(sub.target.pair(&u, &v)));
        prop_assert!(lhs.add(&rhs.neg()).is_zero(f));
    }

    #[test]
    fn classical_flip_preserves_the_bracket(seed in 0u64..1000) {
        let g = spine_graph_an(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = ShearState::random(g.clone(), &mut rng, 3.0);
        for e in ["X1", "X2"] {
            let after = classical_flip(&s, e).unwrap().graph;
            let jac = flip_jacobian(&s, e).unwrap();
            prop_assert!(bracket_defect(&jac, &g, &after) < 1e-9);
        }
    }

    #[test]
    fn classical_flip_twice_restores_shears(seed in 0u64..1000) {
        let g = spine_graph_an(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = ShearState::random(g, &mut rng, 3.0);
        let back = classical_flip(&classical_flip(&s, "X2").unwrap(), "X2").unwrap();
        for (a, b) in s.values.iter().zip(&back.values) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn clock_shift_images_follow_the_weyl_rule(
        u in prop::collection::vec(-3i32..=3, 5),
        v in prop::collection::vec(-3i32..=3, 5),
        n in prop::sample::select(vec![3u32, 5, 7]),
    ) {
        let f = a3();
        let rep = ClockShiftRep::new(&f, n, 11, ParamValues::new()).unwrap();
        let sum: Vec<i32> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let lhs = rep.monomial(&u).mul(&rep.monomial(&v));
        let phase = rep.t().powi(f.pair(&u, &v));
        let rhs = rep.monomial(&sum).scale(phase);
        let d = lhs.add(&rhs.scale(Complex64::new(-1.0, 0.0)));
        prop_assert!(d.norm() < 1e-10 * (rep.dim() as f64));
    }

    #[test]
    fn spine_forms_are_antisymmetric_with_central_faces(n in 2usize..7) {
        let g = spine_graph_an(n).unwrap();
        let f = g.skew_form();
        // 6g-6+3s+2r with g = 0, s = 1, r = n + 1
        prop_assert_eq!(g.n_edges(), 2 * n - 1);
        prop_assert_eq!(g.meta().unwrap().expected_edges(), (2 * n - 1) as i64);
        for i in 0..g.n_edges() {
            for j in 0..g.n_edges() {
                prop_assert_eq!(f.get(i, j), -f.get(j, i));
                prop_assert!((-2..=2).contains(&f.get(i, j)));
            }
        }
        for c in g.center_elements() {
            prop_assert!(f.apply(&c).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn coefficient_bar_is_an_involution(k in -12i32..=12, c in -5i64..=5) {
        let x = &Coefficient::from_int(c) * &Coefficient::t_pow(k);
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!(x.shift_t(3).shift_t(-3), x);
    }
}
