use invol_core::expr::{self, Func};
use invol_core::involution::{
    conjugate_of_negation, conjugator_from_involution, involution_check_report,
    involution_from_conjugator, involution_from_even_seeds, same_involution_iff_odd_transfer,
};
use invol_core::json::{poly_from_json, poly_to_json, series_from_json, series_to_json, Convention};
use invol_core::rational::rat;
use invol_core::{bell_eval, bell_poly, ExprNode, LaurentPoly, Monomial, Rational, SeedSpec, Series};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn invertible(order: usize) -> impl Strategy<Value = Series> {
    (nonzero(), prop::collection::vec(rational(), order - 1)).prop_map(|(g1, rest)| {
        let mut c = vec![Rational::zero(), g1];
        c.extend(rest);
        Series::from_coeffs(c)
    })
}

fn plain(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(rational(), order + 1).prop_map(Series::from_coeffs)
}

fn odd(order: usize) -> impl Strategy<Value = Series> {
    invertible(order).prop_map(|s| {
        let c = s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, v)| if n % 2 == 1 { v.clone() } else { Rational::zero() })
            .collect();
        Series::from_coeffs(c)
    })
}

// Laurent polynomials in X1..X3, negative powers of X1 only.
fn laurent() -> impl Strategy<Value = LaurentPoly> {
    let term = (rational(), -3i32..=3, 0i32..=2, 0i32..=2)
        .prop_map(|(c, a, b, d)| (c, Monomial::new(vec![a, b, d]).unwrap()));
    prop::collection::vec(term, 0..5).prop_map(LaurentPoly::from_terms)
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    (nonzero(), rational(), rational()).prop_map(|(a, b, c)| vec![a, b, c])
}

fn expr_tree() -> impl Strategy<Value = ExprNode> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(|n| ExprNode::Const(rat(n, 1))),
        Just(ExprNode::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprNode::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprNode::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprNode::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprNode::Div(Box::new(a), Box::new(b))),
            (inner.clone(), 0u32..4).prop_map(|(a, e)| ExprNode::Pow(Box::new(a), e)),
            (inner, prop::sample::select(vec![Func::Exp, Func::Sin, Func::Cos, Func::Log]))
                .prop_map(|(a, f)| ExprNode::Apply(f, Box::new(a))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in laurent(), q in laurent(), x in point()) {
        let (pv, qv) = (p.eval(&x).unwrap(), q.eval(&x).unwrap());
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), &pv + &qv);
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), &pv * &qv);
        prop_assert_eq!(p.pow(3).eval(&x).unwrap(), &pv * &pv * &pv);
    }

    #[test]
    fn substitution_then_eval(p in laurent(), x in point()) {
        // substituting X_j -> X_j + X_1 * 0 style identities: plain variables round trip
        let ids: Vec<LaurentPoly> = (1..=3).map(LaurentPoly::var).collect();
        prop_assert_eq!(p.substitute(&ids).unwrap(), p.clone());
        let consts: Vec<LaurentPoly> = x.iter().cloned().map(LaurentPoly::constant).collect();
        prop_assert_eq!(p.substitute(&consts).unwrap(), LaurentPoly::constant(p.eval(&x).unwrap()));
    }

    #[test]
    fn poly_json_round_trip(p in laurent()) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn series_json_round_trip(s in plain(7)) {
        for conv in [Convention::Exponential, Convention::Ordinary] {
            prop_assert_eq!(series_from_json(&series_to_json(&s, conv)).unwrap(), s.clone());
        }
    }

    #[test]
    fn compose_with_inverse_is_identity(f in invertible(10)) {
        let inv = f.inverse().unwrap();
        prop_assert!(f.compose(&inv).unwrap().is_identity());
        prop_assert!(inv.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn compose_is_associative(f in plain(8), g in invertible(8), h in invertible(8)) {
        let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
        let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_rule(f in plain(9), g in plain(9)) {
        let lhs = f.mul(&g).unwrap().derivative().unwrap();
        let (ft, gt) = (f.truncate(8).unwrap(), g.truncate(8).unwrap());
        let rhs = f.derivative().unwrap().mul(&gt).unwrap()
            .add(&ft.mul(&g.derivative().unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reciprocal_is_multiplicative_inverse(s in plain(8)) {
        prop_assume!(!s.coeff(0).is_zero());
        prop_assert_eq!(s.mul(&s.reciprocal().unwrap()).unwrap(), Series::one(8));
    }

    #[test]
    fn bell_matches_series_powers(g in invertible(10)) {
        let args = &g.coeffs()[1..];
        for k in 1..=10 {
            let p = g.power_over_factorial(k).unwrap();
            for n in k..=10 {
                let streamed = bell_eval(n, k, args).unwrap();
                prop_assert_eq!(&streamed, &p.coeff(n));
                prop_assert_eq!(bell_poly(n, k).unwrap().eval(args).unwrap(), streamed);
            }
        }
    }

    #[test]
    fn faa_di_bruno_and_dual(f in plain(9), g in invertible(9)) {
        let h = f.compose(&g).unwrap();
        let ginv = g.inverse().unwrap();
        let d = f.compose(&ginv).unwrap();
        let args = &g.coeffs()[1..];
        for n in 1..=9 {
            let mut via_b = Rational::zero();
            let mut via_a = Rational::zero();
            for k in 1..=n {
                via_b += f.coeff(k) * bell_eval(n, k, args).unwrap();
                via_a += f.coeff(k) * invol_core::stirling_lah::stirling_first_poly(n, k).unwrap().eval(args).unwrap();
            }
            prop_assert_eq!(via_b, h.coeff(n));
            prop_assert_eq!(via_a, d.coeff(n));
        }
    }

    #[test]
    fn jabotinsky_rule(u in invertible(8), v in invertible(8)) {
        let p = v.compose(&u).unwrap();
        let (ua, va, pa) = (&u.coeffs()[1..], &v.coeffs()[1..], &p.coeffs()[1..]);
        for n in 1..=8 {
            for k in 1..=n {
                let rhs: Rational = (k..=n)
                    .map(|j| bell_eval(n, j, ua).unwrap() * bell_eval(j, k, va).unwrap())
                    .sum();
                prop_assert_eq!(bell_eval(n, k, pa).unwrap(), rhs);
            }
        }
    }

    #[test]
    fn bell_homogeneity(lambda in nonzero(), g in invertible(9)) {
        let args = &g.coeffs()[1..];
        for n in 1..=9 {
            for k in 1..=n {
                prop_assert!(invol_core::bell::bell_homogeneity_check(n, k, &lambda, args).unwrap());
            }
        }
    }

    #[test]
    fn generated_series_are_involutions(seeds in prop::collection::vec(rational(), 6)) {
        let f = involution_from_even_seeds(&SeedSpec::even(seeds.clone()), 12).unwrap();
        prop_assert!(f.compose(&f).unwrap().is_identity());
        prop_assert!(involution_check_report(&f).unwrap().passed());
        prop_assert_eq!(f.coeff(1), rat(-1, 1));
        for (k, a) in seeds.iter().enumerate() {
            prop_assert_eq!(&f.coeff(2 * (k + 1)), a);
        }
    }

    #[test]
    fn even_seed_perturbation_is_local(seeds in prop::collection::vec(rational(), 5), slot in 0usize..5, bump in nonzero()) {
        let f = involution_from_even_seeds(&SeedSpec::even(seeds.clone()), 11).unwrap();
        let mut moved = seeds;
        moved[slot] += bump;
        let g = involution_from_even_seeds(&SeedSpec::even(moved), 11).unwrap();
        let k = slot + 1;
        for n in 1..2 * k {
            prop_assert_eq!(f.coeff(n), g.coeff(n));
        }
        prop_assert_ne!(f.coeff(2 * k), g.coeff(2 * k));
    }

    #[test]
    fn check_report_agrees_with_composition(f in invertible(8)) {
        let report = involution_check_report(&f).unwrap();
        prop_assert_eq!(report.passed(), f.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn conjugate_matches_direct_composition(g in invertible(12)) {
        let via_lah = involution_from_conjugator(&g).unwrap();
        prop_assert_eq!(&via_lah, &conjugate_of_negation(&g).unwrap());
        prop_assert!(via_lah.is_involution().unwrap());
    }

    #[test]
    fn conjugator_round_trip(seeds in prop::collection::vec(rational(), 5),
                             g1 in nonzero(), rest in prop::collection::vec(rational(), 5)) {
        let f = involution_from_even_seeds(&SeedSpec::even(seeds), 11).unwrap();
        prop_assume!(!f.is_identity());
        let mut odd_seeds = vec![g1];
        odd_seeds.extend(rest);
        let g = conjugator_from_involution(&f, &SeedSpec::odd(odd_seeds).unwrap()).unwrap();
        prop_assert_eq!(&involution_from_conjugator(&g).unwrap(), &f);
        prop_assert_eq!(&conjugate_of_negation(&g).unwrap(), &f);
    }

    #[test]
    fn odd_transfer_criterion(g in invertible(9), h in invertible(9)) {
        let (equal, psi) = same_involution_iff_odd_transfer(&g, &h).unwrap();
        let same = involution_from_conjugator(&g).unwrap() == involution_from_conjugator(&h).unwrap();
        prop_assert_eq!(equal, same);
        prop_assert_eq!(equal, psi.is_odd());
        prop_assert_eq!(g.compose(&psi).unwrap(), h);
    }

    #[test]
    fn odd_transfer_is_detected(g in invertible(9), psi in odd(9)) {
        let h = g.compose(&psi).unwrap();
        let (equal, found) = same_involution_iff_odd_transfer(&g, &h).unwrap();
        prop_assert!(equal);
        prop_assert_eq!(found, psi);
    }

    #[test]
    fn printed_expressions_reparse(tree in expr_tree()) {
        let once = expr::parse(&tree.to_string()).unwrap();
        let twice = expr::parse(&once.to_string()).unwrap();
        prop_assert_eq!(twice, once);
    }
}

#[test]
fn log_inverts_exp() {
    for order in [1, 5, 12] {
        let e = expr::series_from_text("exp(x)-1", order).unwrap();
        let l = expr::series_from_text("log(1+x)", order).unwrap();
        assert_eq!(e.inverse().unwrap(), l);
        assert!(e.compose(&l).unwrap().is_identity());
    }
}

#[test]
fn sine_is_odd() {
    assert!(expr::series_from_text("sin(x)", 13).unwrap().is_odd());
    assert!(!expr::series_from_text("cos(x)-1", 13).unwrap().is_odd());
}
