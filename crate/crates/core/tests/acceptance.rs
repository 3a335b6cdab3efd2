//! Acceptance gate. Runs without the libtest harness so that every criterion
//! prints its own PASS/FAIL line; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use suris::connection::ConnectionMap;
use suris::heteroclinic::{lobe_area_numeric, FinderOptions};
use suris::melnikov::{anti_integrable_area, critical_points, melnikov_l};
use suris::numerics::{
    area_asymptotic_delta, ellip_k, gamma0_series, gamma_asymptotic, gamma_series, h_map,
    EllipticModulus,
};
use suris::surismap::{dpotential, invariant, map_forward, MapParams, PhasePoint};
use suris::Real;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, message: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn params(delta: &Real, eps: &str) -> MapParams {
    MapParams::new(delta.clone(), dec(eps)).unwrap()
}

fn within_time(start: Instant, limit: Duration) -> std::result::Result<(), String> {
    let elapsed = start.elapsed();
    check(
        elapsed < limit,
        format!("took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn gamma_identity() -> Outcome {
    let start = Instant::now();
    let mut worst = p().zero();
    for x in tenths() {
        let m = EllipticModulus::new(x).unwrap();
        let closed = ellip_k(&m).square() * m.complement();
        let series =
            gamma_series(&h_map(&m).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        worst = worst.max(&rel(&series, &closed));
    }
    check(worst <= 1e-20, format!("max rel {worst:.3e}"))?;
    within_time(start, Duration::from_secs(5))?;
    Ok(format!("max rel {:.3e} in {:.2?}", worst, start.elapsed()))
}

fn gamma0_identities() -> Outcome {
    let mut worst = p().zero();
    for x in tenths() {
        let m = EllipticModulus::new(x).unwrap();
        let h = h_map(&m).map_err(|e| e.to_string())?;
        let k4 = ellip_k(&m).square().square();
        let at_square = gamma0_series(&h.square()).map_err(|e| e.to_string())?;
        let at_h = gamma0_series(&h).map_err(|e| e.to_string())?;
        let first = &k4 * m.complement();
        let second = &first * m.x();
        worst = worst.max(&rel(&at_square, &first));
        worst = worst.max(&rel(&(&at_square - at_h), &second));
    }
    check(worst <= 1e-20, format!("max rel {worst:.3e}"))?;
    Ok(format!("max rel {worst:.3e}"))
}

fn integrability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = p().zero();
    for delta in ["0.1", "0.5", "0.9"] {
        let m = params(&dec(delta), "0");
        for _ in 0..10_000 {
            let z = PhasePoint::new(r(rng.gen_range(-0.5..0.5)), r(rng.gen_range(-1.0..1.0)));
            let drift = (invariant(&m, &map_forward(&m, &z)) - invariant(&m, &z)).abs();
            worst = worst.max(&drift);
        }
    }
    check(worst <= 1e-30, format!("max drift {worst:.3e}"))?;
    Ok(format!("max drift {worst:.3e} over 3 x 10^4 steps"))
}

fn connection_suite() -> Outcome {
    let grid: Vec<Real> = (0..100).map(|i| p().ratio(i, 99) - 0.5).collect();
    let mut group = p().zero();
    let mut odd = p().zero();
    let mut residual = p().zero();
    let mut multiplier = p().zero();
    let step = p().pow10(-(DIGITS as i32) / 3);
    let (a, b) = (p().ratio(-1, 2), p().ratio(1, 2));
    for delta in ["0.1", "0.5", "0.9"] {
        let m = params(&dec(delta), "0");
        let h = ConnectionMap::from_params(&m);
        let e = |x: suris::Result<Real>| x.map_err(|e| e.to_string());
        for theta in &grid {
            let rhs = e(h.h(theta))? - theta * 2 + e(h.h_inv(theta))?;
            residual = residual.max(&(dpotential(&m, theta, false) - rhs).abs());
            odd = odd.max(&(e(h.h(&-theta))? + e(h.h_inv(theta))?).abs());
        }
        for theta in grid.iter().step_by(11) {
            for s in -2..=2i64 {
                for t in -2..=2i64 {
                    let composed = e(h.pow(s, &e(h.pow(t, theta))?))?;
                    group = group.max(&(composed - e(h.pow(s + t, theta))?).abs());
                }
            }
        }
        let at_a = (e(h.h(&(&a + &step)))? - &a) / &step;
        let at_b = (&b - e(h.h(&(&b - &step)))?) / &step;
        multiplier = multiplier.max(&rel(&at_a, &m.nu().recip()));
        multiplier = multiplier.max(&rel(&at_b, m.nu()));
    }
    check(group <= 1e-30, format!("group property {group:.3e}"))?;
    check(odd <= 1e-30, format!("oddness {odd:.3e}"))?;
    check(
        multiplier <= 1e-8,
        format!("endpoint multipliers rel {multiplier:.3e}"),
    )?;
    check(
        residual <= 1e-30,
        format!("potential identity residual {residual:.3e}"),
    )?;
    Ok(format!(
        "group {group:.1e}, oddness {odd:.1e}, multipliers rel {multiplier:.1e}, residual {residual:.1e}"
    ))
}

fn melnikov_gap() -> Outcome {
    let mut worst = p().zero();
    for delta in tenths() {
        let nu = nu_of(&delta);
        let crit = critical_points(&nu).map_err(|e| e.to_string())?;
        let l_q = melnikov_l(&nu, &crit.theta_q).map_err(|e| e.to_string())?;
        let l_p = melnikov_l(&nu, &crit.theta_p).map_err(|e| e.to_string())?;
        let gap = (l_q - l_p - gamma_series(&nu).map_err(|e| e.to_string())?).abs();
        worst = worst.max(&gap);
    }
    check(worst <= 1e-20, format!("max gap error {worst:.3e}"))?;

    let nu = nu_of(&p().ratio(1, 2));
    let crit = critical_points(&nu).map_err(|e| e.to_string())?;
    let quarter = (&crit.theta_p - 0.25).abs();
    check(quarter <= 1e-30, format!("theta_p - 1/4 = {quarter:.3e}"))?;
    let l_q = melnikov_l(&nu, &crit.theta_q).map_err(|e| e.to_string())?;
    let l_p = melnikov_l(&nu, &crit.theta_p).map_err(|e| e.to_string())?;
    check(
        rel(&l_q, &l_at_zero(&nu)) <= 1e-30,
        "L(0) disagrees with the direct sum",
    )?;
    check(
        rel(&l_p, &l_at_theta_p(&nu)) <= 1e-30,
        "L(theta_p) disagrees with the direct sum",
    )?;
    check(
        (l_q.to_f64() - 1.22935).abs() < 5e-5,
        format!("L(0) = {l_q:.8}"),
    )?;
    check(
        (l_p.to_f64() - 1.04123).abs() < 5e-5,
        format!("L(theta_p) = {l_p:.8}"),
    )?;
    Ok(format!(
        "max gap error {worst:.1e}; delta 1/2: theta_p - 1/4 = {quarter:.1e}, L(0) = {}, L(theta_p) = {}",
        l_q.to_decimal(12),
        l_p.to_decimal(12)
    ))
}

fn lobe_area() -> Outcome {
    let start = Instant::now();
    let opts = FinderOptions::default();
    let mut lines = Vec::new();
    for delta in ["0.2", "0.5", "0.8"] {
        let m = params(&dec(delta), "0.00001");
        let rec = lobe_area_numeric(&m, &opts).map_err(|e| format!("delta {delta}: {e}"))?;
        let err = rec.rel_err.clone().unwrap();
        check(err <= 0.01, format!("delta {delta}: rel err {err:.3e}"))?;
        lines.push(format!("delta {delta} rel {err:.2e}"));
    }
    let gamma = gamma_series(&nu_of(&dec("0.5"))).map_err(|e| e.to_string())?;
    let mut remainders = Vec::new();
    for eps in ["0.001", "0.0001", "0.00001"] {
        let m = params(&dec("0.5"), eps);
        let rec = lobe_area_numeric(&m, &opts).map_err(|e| format!("eps {eps}: {e}"))?;
        let remainder = (rec.area_over_eps().unwrap() - &gamma) / m.eps();
        remainders.push(remainder.to_f64());
    }
    let hi = remainders.iter().cloned().fold(f64::MIN, f64::max);
    let lo = remainders.iter().cloned().fold(f64::MAX, f64::min);
    check(
        hi.abs() < 100.0 && lo.abs() < 100.0 && (hi - lo) <= 0.1 * hi.abs().max(lo.abs()),
        format!("remainder (A/eps - Gamma)/eps not bounded: {remainders:?}"),
    )?;
    within_time(start, Duration::from_secs(120))?;
    Ok(format!(
        "{}; (A/eps - Gamma)/eps = {:.4} {:.4} {:.4}; {:.2?}",
        lines.join(", "),
        remainders[0],
        remainders[1],
        remainders[2],
        start.elapsed()
    ))
}

fn asymptotics() -> Outcome {
    let mut worst = 0f64;
    for i in 0..8 {
        let delta = r(0.05) + r(0.75) * (i as f64) / 7.0;
        let nu = nu_of(&delta);
        let ratio = gamma_asymptotic(&nu).map_err(|e| e.to_string())?
            / gamma_series(&nu).map_err(|e| e.to_string())?;
        worst = worst.max((ratio - 1).abs().to_f64());
    }
    check(worst <= 0.01, format!("max |ratio - 1| = {worst:.3e}"))?;
    let delta = dec("0.1");
    let eps = dec("0.00001");
    let nu = nu_of(&delta);
    let gamma = gamma_series(&nu).map_err(|e| e.to_string())?;
    let delta_form = (area_asymptotic_delta(&delta, &eps).map_err(|e| e.to_string())?
        / (&eps * &gamma))
        .to_f64();
    let nu_form = (gamma_asymptotic(&nu).map_err(|e| e.to_string())? / &gamma).to_f64();
    check(
        (delta_form - 1.0).abs() > 10.0 * (nu_form - 1.0).abs(),
        format!("delta form {delta_form} not worse than nu form {nu_form}"),
    )?;
    Ok(format!(
        "max |ratio - 1| on 8 points = {worst:.2e}; delta form at 0.1 gives ratio {delta_form:.6}"
    ))
}

fn integrable_limit() -> Outcome {
    let mut worst = p().zero();
    for delta in ["0.2", "0.5", "0.8"] {
        let m = params(&dec(delta), "0");
        let rec = lobe_area_numeric(&m, &FinderOptions::default()).map_err(|e| e.to_string())?;
        worst = worst.max(&rec.area_numeric);
    }
    check(worst <= 1e-25, format!("max |A| = {worst:.3e}"))?;
    Ok(format!("max |A| at eps = 0 is {worst:.3e}"))
}

fn anti_integrable() -> Outcome {
    let m = params(&dec("0.5"), "0.3");
    let area = anti_integrable_area(&m).map_err(|e| e.to_string())?;
    let bracket = dilog_quad(&dec("1.5")) - dilog_quad(&dec("0.5"));
    let oracle = m.eps() - 0.25 - bracket / p().pi().square();
    let vs_oracle = (&area - &oracle).abs();
    check(
        vs_oracle <= 1e-30,
        format!("oracle difference {vs_oracle:.3e}"),
    )?;
    let vs_value = (&area - m.eps() + 0.1455728).abs();
    check(
        vs_value <= 1e-6,
        format!("|A - (eps - 0.1455728)| = {vs_value:.3e}"),
    )?;

    let tiny = MapParams::from_decimal("1e-36", "0.3", p()).map_err(|e| e.to_string())?;
    let limit = (anti_integrable_area(&tiny).map_err(|e| e.to_string())? - tiny.eps() + 0.25).abs();
    check(limit <= 1e-35, format!("delta -> 0 offset {limit:.3e}"))?;
    Ok(format!(
        "oracle diff {vs_oracle:.1e}, |A - (eps - 0.1455728)| = {vs_value:.1e}, delta -> 0 offset {limit:.1e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("gamma/elliptic identity on x = 0.1..0.9", gamma_identity),
        ("gamma0 identities", gamma0_identities),
        ("invariant conserved at eps = 0", integrability),
        ("connection map suite", connection_suite),
        ("Melnikov gap equals gamma", melnikov_gap),
        ("end-to-end lobe area", lobe_area),
        ("asymptotic form within 1%", asymptotics),
        ("integrable-limit lobe vanishes", integrable_limit),
        ("anti-integrable values", anti_integrable),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
