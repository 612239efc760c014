use std::thread;

use tanderiv::arc::sin_arcsin_form_eval;
use tanderiv::oracles::jet_derivative;
use tanderiv::verify::{self, Config, Suite};
use tanderiv::{
    arc_deriv, arc_deriv_eval, tan_family_deriv, tangent_number, triangle_coeff, ArcFunc, BigInt, Func, Rational,
    TanFunc,
};

#[test]
fn same_code_path_in_f32_f64_and_rationals() {
    let form = arc_deriv(ArcFunc::Arctan, 5).unwrap();
    let q = form.eval(&Rational::new(1.into(), 3.into())).unwrap();
    let exact = q.numer().to_string().parse::<f64>().unwrap() / q.denom().to_string().parse::<f64>().unwrap();
    let f64v = form.eval(&(1.0f64 / 3.0)).unwrap();
    let f32v = form.eval(&(1.0f32 / 3.0)).unwrap();
    assert!((f64v - exact).abs() < 1e-13 * exact.abs());
    assert!((f32v as f64 - exact).abs() < 1e-5 * exact.abs());

    let e = tan_family_deriv(TanFunc::Tanh, 4);
    let a = e.eval(0.3f32).unwrap() as f64;
    let b = e.eval(0.3f64).unwrap();
    assert!((a - b).abs() < 1e-5 * b.abs().max(1.0));
    assert!(
        (sin_arcsin_form_eval(3, -0.7f32).unwrap() as f64 - sin_arcsin_form_eval(3, -0.7f64).unwrap()).abs() < 1e-4
    );
}

#[test]
fn func_names_round_trip() {
    for f in Func::ALL {
        assert_eq!(f.name().parse::<Func>().unwrap(), f);
        assert_eq!(f.to_string().to_uppercase().parse::<Func>().unwrap(), f);
    }
    assert!("sec".parse::<Func>().is_err());
}

#[test]
fn exact_evaluation_examples() {
    let half = Rational::new(1.into(), 2.into());
    assert_eq!(
        arc_deriv_eval(ArcFunc::Arctanh, 2, &half).unwrap(),
        Rational::new(16.into(), 9.into())
    );
    assert_eq!(
        arc_deriv_eval(ArcFunc::Arctan, 3, &Rational::from_integer(0.into())).unwrap(),
        Rational::from_integer((-2).into())
    );
}

#[test]
fn closed_forms_agree_with_jets_in_f32() {
    for n in 1..=4 {
        let c = arc_deriv(ArcFunc::Arctanh, n).unwrap().eval(&0.25f32).unwrap();
        let j = jet_derivative(Func::Arctanh, n, 0.25f32).unwrap();
        assert!((c - j).abs() <= 1e-4 * c.abs().max(1.0), "n={n}: {c} vs {j}");
    }
}

#[test]
fn shared_triangle_is_safe_across_threads() {
    let handles: Vec<_> = (0..8)
        .map(|i| {
            thread::spawn(move || {
                (0..=40 + i)
                    .map(|n| triangle_coeff(n, n as i64 + 1))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        let row = h.join().unwrap();
        let mut f = BigInt::from(1);
        for (n, v) in row.iter().enumerate() {
            if n > 0 {
                f *= n;
            }
            assert_eq!(v, &f);
        }
    }
    assert_eq!(tangent_number(3), BigInt::from(272));
}

#[test]
fn every_suite_passes_for_several_seeds() {
    for seed in [0, 1, 42, 12345] {
        let rep = verify::run(
            Suite::All,
            &Config {
                seed,
                ..Config::default()
            },
        );
        assert!(rep.all_passed(), "seed {seed}:\n{rep}");
    }
}
