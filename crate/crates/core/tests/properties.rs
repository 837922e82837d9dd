use std::f64::consts::PI;

use ellipse_cf::harness::{self, quadrature_perimeter, GroundTruth, DEFAULT_TOL};
use ellipse_cf::{
    cf_eval, cf_to_series, coefficient_gap, e_coefficients, perimeter, periodic_tail, rat,
    series_eval, series_of, series_reciprocal, series_sqrt, viscovatov, Approximant,
    ContinuedFraction, EllipseAxes, Error, PowerSeries, Rational,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..40).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn series_with_constant(c: impl Strategy<Value = Rational>) -> impl Strategy<Value = PowerSeries> {
    (c, prop::collection::vec(rational(), 1..9)).prop_map(|(c0, rest)| {
        let mut v = vec![c0];
        v.extend(rest);
        PowerSeries::new(v).unwrap()
    })
}

fn small_series_with_unit_constant() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-9i64..10, 1i64..10), 1..7).prop_map(|rest| {
        let mut v = vec![Rational::one()];
        v.extend(rest.into_iter().map(|(p, q)| Rational::new(p, q).unwrap()));
        PowerSeries::new(v).unwrap()
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn square_rational() -> impl Strategy<Value = Rational> {
    (1i64..30, 1i64..30).prop_map(|(p, q)| Rational::new(p * p, q * q).unwrap())
}

proptest! {
    #[test]
    fn reciprocal_is_exact_inverse(a in series_with_constant(nonzero_rational())) {
        let r = series_reciprocal(&a).unwrap();
        prop_assert_eq!(a.mul(&r), PowerSeries::one(a.order()).unwrap());
        prop_assert_eq!(r.reciprocal().unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(a in series_with_constant(square_rational())) {
        let r = series_sqrt(&a).unwrap();
        prop_assert!(r.coefficients()[0].is_positive());
        prop_assert_eq!(r.mul(&r), a);
    }

    #[test]
    fn continued_fraction_round_trip(a in small_series_with_unit_constant()) {
        let depth = a.order() - 1;
        prop_assume!(depth >= 1);
        match viscovatov(&a, depth) {
            Ok(cf) => prop_assert_eq!(cf_to_series(&cf, a.order()).unwrap(), a),
            Err(Error::TerminatesEarly { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn perimeter_is_homogeneous(a in 0.01f64..100.0, ratio in 0.0f64..1.0, m in 0usize..6) {
        let methods = [
            Approximant::R1, Approximant::R2, Approximant::cantrell(),
            Approximant::A1, Approximant::A2, Approximant::SeriesTruncation(50),
        ];
        let method = &methods[m];
        let b = a * ratio;
        let base = perimeter(&EllipseAxes::new(a, b).unwrap(), method).unwrap();
        for c in [0.5, 3.0, 1e6] {
            let scaled = perimeter(&EllipseAxes::new(c * a, c * b).unwrap(), method).unwrap();
            prop_assert!((scaled - c * base).abs() <= 1e-13 * c * base);
        }
        let swapped = perimeter(&EllipseAxes::new(b, a).unwrap(), method).unwrap();
        prop_assert_eq!(swapped, base);
    }
}

#[test]
fn ivory_identity_by_midpoint_rule() {
    // (1/pi) int_0^pi |1 - u e^{2it}| dt = E(u^2)
    let e = e_coefficients(200).unwrap();
    let n = 4000;
    for u in [0.1f64, 0.5, 0.9] {
        let h = PI / n as f64;
        let integral: f64 = (0..n)
            .map(|i| {
                let t = (i as f64 + 0.5) * h;
                (1.0 - 2.0 * u * (2.0 * t).cos() + u * u).sqrt()
            })
            .sum::<f64>()
            * h
            / PI;
        let series = series_eval(&e, u * u);
        assert!(
            (integral - series).abs() < 1e-10,
            "u = {u}: {integral} vs {series}"
        );
    }
}

#[test]
fn approximants_are_increasing() {
    let grid: Vec<f64> = (0..=99).map(|i| i as f64 / 100.0).collect();
    for m in Approximant::benchmark_set() {
        let v: Vec<f64> = grid.iter().map(|&x| m.eval(x).unwrap()).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]), "{m}");
    }
}

#[test]
fn float_forms_agree_with_exact_expansions() {
    for m in [
        Approximant::R1,
        Approximant::R2,
        Approximant::A1,
        Approximant::A2,
    ] {
        let s = series_of(&m, 30).unwrap();
        for i in 0..20 {
            let x = 0.5 * i as f64 / 19.0;
            let closed = m.eval(x).unwrap();
            assert!((closed - s.eval(x)).abs() < 1e-10, "{m} at {x}");
        }
    }
}

#[test]
fn r2_and_a2_expansions_against_e() {
    let e = e_coefficients(8).unwrap();
    let r2 = series_of(&Approximant::R2, 6).unwrap();
    assert_eq!(&r2.coefficients()[..5], &e.coefficients()[..5]);
    assert_eq!(
        &e.coefficients()[5] - &r2.coefficients()[5],
        rat!(3, 131072)
    );
    let a2 = series_of(&Approximant::A2, 5).unwrap();
    assert_eq!(a2, e.truncate(5).unwrap());
    // A1 matches through x^5 and first misses at x^6
    for j in 0..=5 {
        assert!(coefficient_gap(&e, &Approximant::A1, j).unwrap().is_zero());
    }
    assert_eq!(
        coefficient_gap(&e, &Approximant::A1, 6).unwrap(),
        rat!(55, 2097152)
    );
}

#[test]
fn tail_coefficients_oscillate() {
    let cf = viscovatov(&e_coefficients(9).unwrap(), 8).unwrap();
    let a: Vec<f64> = cf
        .partial_numerators()
        .iter()
        .map(Rational::to_f64)
        .collect();
    for v in &a[4..] {
        assert!(*v > -0.241 && *v < -0.217);
    }
    // a5 and a7 fall below -0.2288 and a6 above it; a8 = -0.22982 is
    // also below, so the alternation is not strict.
    let mid = -0.2288;
    assert!(a[4] < mid && a[6] < mid && a[7] < mid);
    assert!(a[5] > mid);
    let mean = a[4..].iter().sum::<f64>() / 4.0;
    assert!((mean - mid).abs() < 1e-3);
}

fn periodic_cf(prefix: &[Rational], c: &Rational, depth: usize) -> ContinuedFraction {
    ContinuedFraction::new(prefix.to_vec())
        .unwrap()
        .extend_constant(c, depth - prefix.len())
}

#[test]
fn truncated_periodic_fractions_converge() {
    let x = 0.5;
    // constant fraction 1 + c x/(1 + c x/(...)) = 1 + T(x)
    for c in [rat!(-1, 4), rat!(-3, 16), rat!(-143, 625)] {
        let cf = ContinuedFraction::new(vec![c.clone()])
            .unwrap()
            .extend_constant(&c, 39);
        let closed = 1.0 + periodic_tail(&c, x).unwrap();
        assert!((cf.eval(x, 0.0).unwrap() - closed).abs() < 1e-12, "{c}");
    }
    let r2 = periodic_cf(&[rat!(1, 4), rat!(-1, 16)], &rat!(-3, 16), 40);
    assert!((r2.eval(x, 0.0).unwrap() - ellipse_cf::eval_r2(x).unwrap()).abs() < 1e-12);
    let r1 = periodic_cf(&[rat!(1, 4)], &rat!(-1, 16), 40);
    assert!((r1.eval(x, 0.0).unwrap() - ellipse_cf::eval_r1(x).unwrap()).abs() < 1e-12);
}

#[test]
fn paper_fractions_have_no_poles() {
    let prefix = [rat!(1, 4), rat!(-1, 16), rat!(-3, 16), rat!(-3, 16)];
    let cases = [
        (&prefix[..1], rat!(-1, 16)),
        (&prefix[..2], rat!(-3, 16)),
        (&prefix[..], rat!(-183, 800)),
        (&prefix[..], rat!(-143, 625)),
    ];
    for (p, c) in cases {
        let cf = ContinuedFraction::new(p.to_vec()).unwrap();
        let mut last = 1.0;
        for i in 0..=99 {
            let x = i as f64 / 100.0;
            let v = cf_eval(&cf, x, periodic_tail(&c, x).unwrap()).unwrap();
            assert!(v.is_finite() && v >= last - 1e-15);
            last = v;
        }
    }
}

#[test]
fn dual_oracle_on_moderate_eccentricity() {
    let truth = GroundTruth::new(50).unwrap();
    for (a, b) in [(2.0, 1.0), (3.0, 1.0), (1.5, 1.0), (5.0, 2.0), (4.0, 1.0)] {
        let axes = EllipseAxes::new(a, b).unwrap();
        let q = quadrature_perimeter(a, b, DEFAULT_TOL).unwrap();
        let p = PI * (a + b) * truth.eval(axes.x()).unwrap();
        assert!((p - q.value).abs() <= 1e-11 * q.value);
    }
    let r2 = ellipse_cf::eval_r2(1.0 / 9.0).unwrap();
    let q = quadrature_perimeter(2.0, 1.0, DEFAULT_TOL).unwrap().value / (3.0 * PI);
    assert!((r2 - q).abs() <= 5e-9 * q);
    let series = perimeter(
        &EllipseAxes::new(2.0, 1.0).unwrap(),
        &Approximant::SeriesTruncation(50),
    )
    .unwrap();
    let quad = quadrature_perimeter(2.0, 1.0, DEFAULT_TOL).unwrap().value;
    assert!((series - quad).abs() <= 1e-12 * quad);
    assert!(
        (ellipse_cf::eval_cantrell(0.5, 0.41, 74.0).unwrap() - truth.eval(0.5).unwrap()).abs()
            < 2e-5 * truth.eval(0.5).unwrap()
    );
}

#[test]
fn endpoint_convergence_is_slow() {
    let e50 = harness::ground_truth(1.0, 50).unwrap();
    let e5000 = harness::ground_truth(1.0, 5000).unwrap();
    assert!((e5000 - e50).abs() > 1e-8);
    assert!((e5000 - 4.0 / PI).abs() < 1e-8);
}

#[test]
fn sweep_csv_is_deterministic_and_parses_back() {
    let grid = harness::default_grid();
    let methods = Approximant::benchmark_set();
    let first = harness::to_csv_string(&harness::sweep(&grid, &methods, 50).unwrap()).unwrap();
    let second = harness::to_csv_string(&harness::sweep(&grid, &methods, 50).unwrap()).unwrap();
    assert_eq!(first, second);

    let mut reader = csv::Reader::from_reader(first.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(headers.len(), 2 + 2 * methods.len());
    let mut rows = 0;
    for record in reader.records() {
        let record = record.unwrap();
        let values: Vec<f64> = record.iter().map(|v| v.parse().unwrap()).collect();
        let truth = values[1];
        for k in 0..methods.len() {
            let value = values[2 + 2 * k];
            let rel = values[3 + 2 * k];
            let recomputed = (value - truth).abs() / truth;
            assert!((recomputed - rel).abs() <= f64::EPSILON * rel.max(f64::MIN_POSITIVE));
        }
        rows += 1;
    }
    assert_eq!(rows, 100);
}

#[test]
fn csv_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plot.csv");
    let report = harness::sweep(&[0.1, 0.5, 0.9], &[Approximant::R1, Approximant::A2], 50).unwrap();
    harness::emit_csv(&report, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("x,E,r1,relerr_r1,a2,relerr_a2\n"));
}

#[test]
fn error_ordering_near_zero() {
    // Errors here are far below double precision, so use the exact
    // difference series.
    let rel = |m: &Approximant, x: f64| harness::series_relative_error(m, x, 30).unwrap();
    for x in [1e-3, 1e-2] {
        let (r1, r2, a2) = (
            rel(&Approximant::R1, x),
            rel(&Approximant::R2, x),
            rel(&Approximant::A2, x),
        );
        assert!(r1 > 1e3 * r2 && r2 > 50.0 * a2, "x = {x}");
    }
    assert!(rel(&Approximant::A2, 1e-3) > rel(&Approximant::A1, 1e-3));
    // A2's x^5 gap is only 3/13107200, so A1's x^6 gap overtakes it
    // just below x = 0.01.
    assert!(rel(&Approximant::A2, 1e-2) < rel(&Approximant::A1, 1e-2));
    assert!(rel(&Approximant::A2, 8e-3) > rel(&Approximant::A1, 8e-3));
}
