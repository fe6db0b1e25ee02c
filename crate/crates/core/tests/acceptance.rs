//! One PASS/FAIL line per acceptance criterion, at the pinned tolerances.
//! Exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{form, grid, real, rng, state, state_distance, PREC};
use rand::Rng;
use rational_landen::agm::agm;
use rational_landen::exactpoly::{ExactScalar, Polynomial, RationalFunction};
use rational_landen::landen::{
    iterate, iterate_integrand, pushforward_pair, step, step_geometric, step_theorem, Algorithm, LandenState,
};
use rational_landen::pushforward::{
    conjugacy_pi_star, involution_pullback, pi_star, pullback_pi, Involution, LaurentForm, RationalOneForm, Variable,
};
use rational_landen::quadrature::{elliptic_G, integrate_halfline};
use rational_landen::real::relative_diff;
use rational_landen::Real;

type Check = std::result::Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check, Option<Duration>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn zform(num: Polynomial, den: Polynomial) -> RationalOneForm {
    RationalOneForm::from_parts(num, den, Variable::Z).unwrap()
}

/// Even polynomial from descending coefficients of `z^{2j}`.
fn even_desc(c: &[i64]) -> Polynomial {
    let n = c.len() - 1;
    let mut asc = vec![0; 2 * n + 1];
    for (j, &x) in c.iter().enumerate() {
        asc[2 * (n - j)] = x;
    }
    p(&asc)
}

/// `N·D_expected − N_expected·D`, which vanishes exactly when the images agree.
fn cross_residual(image: &RationalOneForm, num: &Polynomial, den: &Polynomial) -> Polynomial {
    let r = image.coefficient();
    &(r.num() * den) - &(num * r.den())
}

// Each side is at most quadratic in every aⱼ and linear in every bⱼ, so the
// grids {1,2,3} × {1,2} decide the identities symbolically.
fn pushforward_examples() -> Check {
    let mut cases = 0;
    for (a, b) in grid(2, 1) {
        let (a0, a1, b0) = (a[0], a[1], b[0]);
        let image = pi_star(&zform(p(&[b0]), p(&[a1, 0, a0]))).unwrap();
        let res = cross_residual(&image, &p(&[2 * b0 * (a0 + a1)]), &p(&[(a0 + a1).pow(2), 0, 4 * a0 * a1]));
        ensure(res.is_zero(), || format!("degree-two residual {res} at {a:?} {b:?}"))?;
        cases += 1;
    }
    for (a, b) in grid(3, 2) {
        let (a0, a1, a2, b0, b1) = (a[0], a[1], a[2], b[0], b[1]);
        let image = pi_star(&zform(p(&[b1, 0, b0]), p(&[a2, 0, a1, 0, a0]))).unwrap();
        let s = a0 + a1 + a2;
        let res = cross_residual(
            &image,
            &p(&[2 * s * (b0 + b1), 0, 8 * (a2 * b0 + a0 * b1)]),
            &p(&[s * s, 0, 4 * (a0 * a1 + 4 * a0 * a2 + a1 * a2), 0, 16 * a0 * a2]),
        );
        ensure(res.is_zero(), || format!("quartic residual {res} at {a:?} {b:?}"))?;
        cases += 1;
    }
    Ok(format!("{cases} grid points, zero residual polynomial"))
}

fn conjugacy() -> Check {
    let mut r = rng(101);
    for k in 0..50 {
        let phi = form(&mut r, 10, true);
        let (x, y) = (conjugacy_pi_star(&phi).unwrap(), pi_star(&phi).unwrap());
        ensure(x == y, || format!("form {k}: {phi} gives {x} vs {y}"))?;
    }
    Ok("50 Gaussian-rational forms of degree ≤ 10".into())
}

fn quartic_closed_form() -> Check {
    let mut r = rng(103);
    let (mut worst_a, mut worst_u) = (0f64, 0f64);
    for _ in 0..20 {
        let (a1, b0, b1) = (r.gen_range(0.01..20.0), r.gen_range(0.1..5.0), r.gen_range(0.1..5.0));
        let s = LandenState::from_f64(&[a1], &[b0, b1], PREC).unwrap();
        let t = step_theorem(&s).unwrap().state;
        worst_a = worst_a.max(relative_diff(&t.a()[0], &real(2.0), 1.0));
        let trace = iterate(&s, 1e-13, 10, Algorithm::Geometric).unwrap();
        ensure(trace.converged, || format!("no convergence at a₁ = {a1}"))?;
        let expect = &(&real(b0 + b1) * &Real::pi(PREC))
            / &(&real(2.0).powf(&real(1.5)) * &(&real(1.0) + &real(a1 / 2.0)).sqrt());
        worst_u = worst_u.max(relative_diff(&trace.value().unwrap(), &expect, 1.0));
    }
    ensure(worst_a < 1e-14 && worst_u < 1e-12, || format!("a₁⁺ error {worst_a:e}, U error {worst_u:e}"))?;
    Ok(format!("max |a₁⁺ − 2| rel {worst_a:.1e}, max U rel {worst_u:.1e}"))
}

fn sextic_convergence() -> Check {
    let num = even_desc(&[1, 0, 0]);
    let den = even_desc(&[1, 0, 0, 1]);
    let trace = iterate_integrand(&num, &den, 128, 1e-12, 8, Algorithm::Geometric).unwrap();
    ensure(trace.converged && trace.steps() <= 8, || {
        format!("converged = {} after {}", trace.converged, trace.steps())
    })?;
    let residual = trace.residuals.last().unwrap().to_f64();
    ensure(residual < 1e-12, || format!("final residual {residual:e}"))?;
    let coeffs =
        |c: &Polynomial| c.real_coeffs().unwrap().iter().map(|q| Real::from_rational(q, 128)).collect::<Vec<_>>();
    let direct = integrate_halfline(&coeffs(&num), &coeffs(&den), 1e-14).unwrap().value;
    let gap = (&trace.value().unwrap() - &direct).abs().to_f64();
    ensure(gap < 1e-12, || format!("U − quadrature = {gap:e}"))?;
    let order = trace.decay_order(4).unwrap_or(f64::NAN);
    ensure((order - 2.0).abs() <= 0.2, || format!("decay order {order}"))?;
    Ok(format!("{} steps, residual {residual:.1e}, |U − quad| {gap:.1e}, slope {order:.3}", trace.steps()))
}

fn fixed_points() -> Check {
    let mut worst = 0f64;
    for p in 2..=6 {
        for l in [1.0, 3.5] {
            let s = LandenState::limit(p, &real(l));
            for alg in [Algorithm::Geometric, Algorithm::Theorem] {
                let t = step(&s, alg).unwrap();
                let d = state_distance(&s, &t.state).max(relative_diff(&t.factor, &real(1.0), 1.0));
                ensure(d < 1e-13, || format!("p = {p}, L = {l}, {alg}: {d:e}"))?;
                worst = worst.max(d);
            }
        }
    }
    Ok(format!("p = 2..6, both algorithms, max rel {worst:.1e}"))
}

fn theorem_vs_geometry() -> Check {
    let mut r = rng(106);
    let mut worst = 0f64;
    for p in 2..=5 {
        for _ in 0..50 {
            let s = state(&mut r, p);
            let d = state_distance(&step_geometric(&s).unwrap().state, &step_theorem(&s).unwrap().state);
            ensure(d < 1e-13, || format!("p = {p}: {d:e}"))?;
            worst = worst.max(d);
        }
    }
    let mut points = 0;
    for (a, b) in grid(4, 3) {
        let (a0, a1, a2, a3) = (a[0], a[1], a[2], a[3]);
        let (b0, b1, b2) = (b[0], b[1], b[2]);
        let s = a0 + a1 + a2 + a3;
        let (n, d) = pushforward_pair(&even_desc(&b), &even_desc(&a)).unwrap();
        let nb = even_desc(&[
            32 * (a3 * b0 + a0 * b2),
            8 * (a2 * b0 + 3 * a3 * b0 + a0 * b1 + a3 * b1 + 3 * a0 * b2 + a1 * b2),
            2 * s * (b0 + b1 + b2),
        ]);
        let na = even_desc(&[
            64 * a0 * a3,
            16 * (a0 * a2 + 6 * a0 * a3 + a1 * a3),
            4 * (a0 * a1 + 4 * a0 * a2 + a1 * a2 + 9 * a0 * a3 + 4 * a1 * a3 + a2 * a3),
            s * s,
        ]);
        ensure(n == nb && d == na, || format!("degree-six image differs at {a:?} {b:?}"))?;
        points += 1;
    }
    Ok(format!("200 states, max rel {worst:.1e}; degree-six image exact on {points} grid points"))
}

fn step_invariance() -> Check {
    let mut r = rng(107);
    let mut worst = 0f64;
    for p in 2..=5 {
        for _ in 0..20 {
            let s = state(&mut r, p);
            let before = s.integrate(1e-13).unwrap().value;
            let t = step(&s, Algorithm::Geometric).unwrap();
            let after = &t.factor * &t.state.integrate(1e-13).unwrap().value;
            let gap = (&before - &after).abs().to_f64();
            ensure(gap < 1e-10, || format!("p = {p}: {gap:e}"))?;
            worst = worst.max(gap);
        }
    }
    Ok(format!("80 states, max gap {worst:.1e}"))
}

fn agm_vs_elliptic() -> Check {
    let mut r = rng(108);
    let mut worst = 0f64;
    for _ in 0..20 {
        let (a, b) = (real(r.gen_range(0.1..10.0)), real(r.gen_range(0.1..10.0)));
        let trace = agm(&a, &b, 1e-30).unwrap();
        let gap = (&trace.elliptic_value() - &elliptic_G(&a, &b, 1e-13).unwrap().value).abs().to_f64();
        ensure(gap < 1e-10, || format!("({a}, {b}): {gap:e}"))?;
        ensure(trace.quadratic_bound_holds(), || format!("({a}, {b}): gap not quadratic"))?;
        worst = worst.max(gap);
    }
    Ok(format!("20 pairs, max gap {worst:.1e}, quadratic bound on every step"))
}

fn superconvergence() -> Check {
    let mut r = rng(109);
    let mut tightest = f64::INFINITY;
    for radius in [1.5, 2.0] {
        for _ in 0..20 {
            let decay: f64 = r.gen_range(1.0..radius);
            let coeffs: Vec<Real> =
                (-64i64..=64).map(|k| real(r.gen_range(-1.0..1.0) * decay.powi(-(k.abs() as i32)))).collect();
            let phi = LaurentForm::new(coeffs, real(radius)).unwrap();
            for step in phi.superconvergence_probe(4).unwrap() {
                ensure(step.within_bound, || {
                    format!("R = {radius}, n = {}: {} > {}", step.n, step.distance, step.bound)
                })?;
                let b = step.bound.to_f64();
                if b > 0.0 {
                    tightest = tightest.min(b / step.distance.to_f64().max(f64::MIN_POSITIVE));
                }
            }
        }
    }
    Ok(format!("40 forms, K = 64, n = 1..4, smallest bound/distance ratio {tightest:.2}"))
}

fn parity_and_deck() -> Check {
    let mut r = rng(110);
    for _ in 0..30 {
        let phi = form(&mut r, 8, true);
        let image = pi_star(&phi).unwrap();
        let lhs = involution_pullback(&image, Involution::Tau).unwrap();
        let rhs = pi_star(&involution_pullback(&phi, Involution::Tau).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("equivariance fails for {phi}"))?;
        let back = pullback_pi(&image).unwrap();
        let deck = phi.add(&involution_pullback(&phi, Involution::Iota).unwrap());
        ensure(back == deck, || format!("deck identity fails for {phi}"))?;
        let anti = involution_pullback(&phi, Involution::Iota).unwrap() == phi.neg();
        ensure(image.is_zero() == anti, || format!("kernel characterization fails for {phi}"))?;
    }
    // ψ − ι*ψ always lies in the kernel
    for _ in 0..20 {
        let psi = form(&mut r, 6, false);
        let phi = psi.add(&involution_pullback(&psi, Involution::Iota).unwrap().neg());
        ensure(pi_star(&phi).unwrap().is_zero(), || format!("{phi} should be in the kernel"))?;
    }
    let kernel_witness = zform(p(&[0, 1]), p(&[1, 0, 0, 0, 1]));
    ensure(pi_star(&kernel_witness).unwrap().is_zero(), || "z dz/(z⁴+1) should push to 0".into())?;
    let even_witness = zform(p(&[0, 1]), p(&[1]));
    let image = pi_star(&even_witness).unwrap();
    let expect = RationalFunction::from(Polynomial::monomial(ExactScalar::from_int(4), 1));
    ensure(image.coefficient() == &expect, || format!("z dz ↦ {image}"))?;
    Ok("50 random forms plus witnesses z dz ↦ 4w dw and z dz/(z⁴+1) ↦ 0".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "pushforward exactness", pushforward_examples, Some(Duration::from_secs(1))),
        (2, "conjugacy cross-check", conjugacy, Some(Duration::from_secs(10))),
        (3, "quartic closed form", quartic_closed_form, None),
        (4, "degree-6 convergence", sextic_convergence, None),
        (5, "fixed-point family", fixed_points, None),
        (6, "theorem vs geometry", theorem_vs_geometry, None),
        (7, "step invariance", step_invariance, None),
        (8, "AGM and elliptic integral", agm_vs_elliptic, None),
        (9, "superconvergence bound", superconvergence, None),
        (10, "parity and deck identities", parity_and_deck, None),
    ];
    let budget = Duration::from_secs(60);
    let mut failures = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let limit = limit.unwrap_or(budget);
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took longer than {limit:?}")),
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} ({secs:.2} s)"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail} ({secs:.2} s)");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
