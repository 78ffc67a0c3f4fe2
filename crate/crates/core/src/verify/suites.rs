//! The four check suites. Each returns its records in a fixed order.

use num_complex::Complex64;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::{FiberSpec, SuiteConfig};
use super::report::{CheckRecord, Status};
use crate::algebra::dirac::{
    anticommutator_closed_form, anticommutator_reference_form, langle_squared_closed_form, r_operator_closed_form,
    r_operator_reference_form,
};
use crate::algebra::envelope::Monomial;
use crate::algebra::lie::{casimir_shift, casimir_trace_ad};
use crate::algebra::{
    casimir, cubic_dirac, dirac_square_identity, formal_adjoint, langle_squared, r_operator, real_imag_parts,
    relative_dirac, AlgNumber, EnvElement, LieElement, SpinOperator, SubalgebraSpec, T_CUBIC,
};
use crate::fibers::{
    counterexample_growth, env_to_fiber, env_to_fiber_exact, langle_squared_value, spin_to_fiber, truncate,
    truncate_scalar, DiscreteSign, FiberLabel, MatchMode, Parity,
};
use crate::series::{
    diagnose_discrete, diagnose_principal, diagnose_resolvent, discrete_reference_bounds, plancherel_weight,
    principal_reference_bounds, resolvent_trace, Component, Interval, ResolventTrace, SeriesConfig, SeriesEnclosure,
    DIAGNOSTIC_BUDGETS, SHIFT_RESOLVENT,
};

const FIBER_TOL: f64 = 1e-12;
const WIDTH_TOL: f64 = 1e-6;
const EXPONENT_TOL: f64 = 0.1;

fn spin_witness(op: &SpinOperator) -> Value {
    let residual = if op.is_zero() { "0".to_string() } else { op.to_string() };
    json!({ "zero": op.is_zero(), "residual": residual })
}

fn zero_check(id: String, op: &SpinOperator, anchor: &str) -> CheckRecord {
    CheckRecord::new(id, Status::from_bool(op.is_zero()), spin_witness(op), anchor)
}

fn error_check(id: String, err: impl std::fmt::Display, anchor: &str) -> CheckRecord {
    CheckRecord::new(id, Status::Fail, json!({ "error": err.to_string() }), anchor)
}

fn t_tag(t: &Rational64) -> String {
    format!("t={t}")
}

pub fn algebra_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let d = cubic_dirac(&T_CUBIC);
    let e = formal_adjoint(&d);

    let shift = casimir_shift();
    out.push(CheckRecord::new(
        "algebra.casimir_shift",
        Status::from_bool(shift == AlgNumber::from_rational(crate::algebra::number::rat(1, 8))),
        json!({ "trace_ad": casimir_trace_ad().to_string(), "shift": shift.to_string() }),
        "Tr_ad(Ω)/24 = 1/8",
    ));
    out.push(zero_check("algebra.dirac_square".into(), &dirac_square_identity(&T_CUBIC), "(D^{1/3})² = (Ω + 1/8)⊗1"));
    out.push(zero_check("algebra.adjoint_square".into(), &(&(&e * &e) - &(&d * &d)), "E₀² = D₀²"));
    out.push(zero_check("algebra.r_vanishes".into(), &r_operator(&T_CUBIC), "R_D = (i/2)(D² − D*²) = 0"));
    let (re, im) = real_imag_parts(&T_CUBIC);
    out.push(zero_check(
        "algebra.anticommutator_vanishes".into(),
        &re.anticommutator(&im),
        "{Re D, Im D} = 0 for the cubic Dirac operator",
    ));

    for t in &cfg.t_values {
        let tag = t_tag(t);
        let residual = &langle_squared(t) - &langle_squared_closed_form(t);
        out.push(zero_check(
            format!("algebra.langle_family.{tag}"),
            &residual,
            "⟨D^t⟩² = (½(−e1²−e2²−e3²) + 9t²/8)⊗1 − ¼(1+3t) e3⊗c(e1)c(e2)",
        ));

        let r = r_operator(t);
        let residual = &r - &r_operator_closed_form(t);
        let printed = &r - &r_operator_reference_form(t);
        let mut w = spin_witness(&residual);
        w["plus_sign_form_zero"] = json!(printed.is_zero());
        out.push(CheckRecord::new(
            format!("algebra.r_family.{tag}"),
            Status::from_bool(residual.is_zero()),
            w,
            "R_{D^t} = (i/4)(1−3t)(e1⊗c(e2)c(e3) ∓ e2⊗c(e1)c(e3))",
        ));

        let (re, im) = real_imag_parts(t);
        let anti = re.anticommutator(&im);
        let residual = &anti - &anticommutator_closed_form(t);
        let scaled = &anti - &anticommutator_reference_form(t).scale(&AlgNumber::gauss((0, 1), (-1, 2)));
        let mut w = spin_witness(&residual);
        w["equals_reference_times_minus_i_over_2"] = json!(scaled.is_zero());
        out.push(CheckRecord::new(
            format!("algebra.anticommutator_family.{tag}"),
            Status::from_bool(residual.is_zero()),
            w,
            "{Re D^t, Im D^t} ∝ (3t−1)·antidiag(e1 − ie2, e1 + ie2)",
        ));
    }

    let subalgebras = [
        ("span_e3", SubalgebraSpec::elliptic()),
        ("span_e1", SubalgebraSpec::new(vec![LieElement::from_ints([1, 0, 0])]).expect("hyperbolic subalgebra")),
    ];
    for (name, k) in subalgebras {
        let id = format!("algebra.relative_dirac.{name}");
        let anchor = "D_{g,k}² = Ω_g − j(Ω_k) + (Tr Ω_g − Tr Ω_k)/24";
        match relative_dirac(&k) {
            Ok(rd) => out.push(CheckRecord::new(
                id,
                Status::from_bool(rd.square_residual.is_zero()),
                json!({
                    "zero": rd.square_residual.is_zero(),
                    "dirac": rd.dirac.to_string(),
                    "lambda_p_in_complement": rd.lambda_p_in_complement(),
                }),
                anchor,
            )),
            Err(err) => out.push(error_check(id, err, anchor)),
        }
    }
    out
}

fn fiber_tag(f: &FiberLabel) -> String {
    FiberSpec(*f).to_string()
}

fn langle_spectrum_check(f: &FiberLabel, window: (i64, i64), min_seen: &mut (f64, String)) -> CheckRecord {
    let id = format!("fibers.langle_spectrum.{}", fiber_tag(f));
    let anchor = "⟨D⟩² = diag(½|τ|² + m′(m′+1) + 1/8, ½|τ|² + m′(m′−1) + 1/8)";
    let op = spin_to_fiber(&langle_squared(&T_CUBIC), *f);
    let tm = match truncate(&op, window.0, window.1) {
        Ok(tm) => tm,
        Err(err) => return error_check(id, err, anchor),
    };
    let diag = tm.diagonal();
    let mut worst: Option<(usize, i64, f64, f64)> = None;
    let mut max_rel = 0.0f64;
    for comp in 0..2 {
        for m in tm.window.0..=tm.window.1 {
            let got = diag[tm.index(comp, m)];
            let want = langle_squared_value(*f, m, comp);
            let rel = (got - Complex64::new(want, 0.0)).norm() / want.abs().max(1.0);
            if rel > max_rel {
                max_rel = rel;
                worst = Some((comp, m, got.re, want));
            }
            if got.re < min_seen.0 {
                *min_seen = (got.re, format!("{} component {comp} m={m}", fiber_tag(f)));
            }
        }
    }
    let offdiag = tm.max_offdiagonal();
    let ok = max_rel <= FIBER_TOL && offdiag <= FIBER_TOL;
    let mut w = json!({ "window": [tm.window.0, tm.window.1], "max_relative_error": max_rel, "max_offdiagonal": offdiag });
    if let Some((comp, m, got, want)) = worst {
        w["worst"] = json!({ "component": comp, "m": m, "value": got, "expected": want });
    }
    CheckRecord::new(id, Status::from_bool(ok), w, anchor)
}

fn casimir_check(f: &FiberLabel, window: (i64, i64)) -> CheckRecord {
    let id = format!("fibers.casimir.{}", fiber_tag(f));
    let anchor = "Ω acts by −½(ρ² + ¼) on principal and ½l(l+1) on discrete fibers";
    let tm = match truncate_scalar(&env_to_fiber(&casimir(), *f), window.0, window.1) {
        Ok(tm) => tm,
        Err(err) => return error_check(id, err, anchor),
    };
    let want = f.casimir_value();
    let (worst_m, worst) = (tm.window.0..=tm.window.1)
        .map(|m| (m, (tm.entries[(tm.index(0, m), tm.index(0, m))] - want).norm() / want.abs().max(1.0)))
        .fold((tm.window.0, 0.0f64), |acc, x| if x.1 > acc.1 { x } else { acc });
    let offdiag = tm.max_offdiagonal();
    let ok = worst <= FIBER_TOL && offdiag <= FIBER_TOL;
    CheckRecord::new(
        id,
        Status::from_bool(ok),
        json!({ "expected": want, "max_relative_error": worst, "worst_m": worst_m, "max_offdiagonal": offdiag }),
        anchor,
    )
}

fn anticommutator_fiber_check(f: &FiberLabel, window: (i64, i64)) -> CheckRecord {
    let id = format!("fibers.anticommutator.{}", fiber_tag(f));
    let anchor = "{Re D, Im D} = 0 on every tempered fiber";
    let (re, im) = real_imag_parts(&T_CUBIC);
    let (fr, fi) = (spin_to_fiber(&re, *f), spin_to_fiber(&im, *f));
    let anti = &(&fr * &fi) + &(&fi * &fr);
    match truncate(&anti, window.0, window.1) {
        Ok(tm) => {
            let max = tm.entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
            CheckRecord::new(id, Status::from_bool(max <= FIBER_TOL), json!({ "max_entry": max }), anchor)
        }
        Err(err) => error_check(id, err, anchor),
    }
}

fn random_env(rng: &mut ChaCha8Rng) -> EnvElement {
    let mut x = EnvElement::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let mut mono: Monomial = [0; 3];
        for _ in 0..rng.gen_range(0..=2) {
            mono[rng.gen_range(0..3)] += 1;
        }
        let c = AlgNumber::gauss((rng.gen_range(-3..=3), 1), (rng.gen_range(-3..=3), 1));
        x.add_term(mono, &c);
    }
    x
}

fn random_fiber(rng: &mut ChaCha8Rng, i: usize) -> FiberLabel {
    let two_l = -rng.gen_range(1..=6);
    match i % 3 {
        0 => {
            let eps = if rng.gen_bool(0.5) { Parity::Zero } else { Parity::Half };
            FiberLabel::Principal { rho: rng.gen_range(0..=40) as f64 / 8.0, eps }
        }
        1 => FiberLabel::negative(two_l),
        _ => FiberLabel::positive(two_l),
    }
}

/// `fiber(xy) = fiber(x)fiber(y)` in exact arithmetic on random pairs.
fn homomorphism_check(cfg: &SuiteConfig) -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut counterexample = Value::Null;
    let mut compared = 0u64;
    'pairs: for i in 0..cfg.homomorphism_pairs {
        let (x, y) = (random_env(&mut rng), random_env(&mut rng));
        let f = random_fiber(&mut rng, i);
        let lhs = env_to_fiber_exact(&(&x * &y), f);
        let rhs = &env_to_fiber_exact(&x, f) * &env_to_fiber_exact(&y, f);
        let Ok((lo, hi)) = f.clip(-8, 8) else { continue };
        for d in -4..=4 {
            for m in lo..=hi {
                compared += 1;
                let (a, b) = (lhs.entry(d, m), rhs.entry(d, m));
                if a != b {
                    counterexample = json!({
                        "pair": i, "fiber": fiber_tag(&f), "x": x.to_string(), "y": y.to_string(),
                        "offset": d, "m": m, "lhs": a.to_string(), "rhs": b.to_string(),
                    });
                    break 'pairs;
                }
            }
        }
    }
    CheckRecord::new(
        "fibers.homomorphism",
        Status::from_bool(counterexample.is_null()),
        json!({ "pairs": cfg.homomorphism_pairs, "seed": cfg.seed, "entries_compared": compared, "counterexample": counterexample }),
        "the fiber realization is an algebra homomorphism of U(su(1,1))",
    )
}

pub fn fibers_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let mut min_seen = (f64::INFINITY, String::new());
    for f in &cfg.fiber_samples {
        out.push(langle_spectrum_check(f, cfg.window, &mut min_seen));
        out.push(casimir_check(f, cfg.window));
        out.push(anticommutator_fiber_check(f, cfg.window));
    }
    let nonneg = min_seen.0 >= 0.0 || cfg.fiber_samples.is_empty();
    out.push(CheckRecord::new(
        "fibers.langle_nonnegative",
        Status::from_bool(nonneg),
        json!({ "min_diagonal": if min_seen.0.is_finite() { json!(min_seen.0) } else { Value::Null }, "at": min_seen.1 }),
        "⟨D⟩² is a positive operator",
    ));
    out.push(homomorphism_check(cfg));
    out
}

fn enclosure_json(e: &SeriesEnclosure) -> Value {
    json!({ "lower": e.lower, "upper": e.upper, "relative_width": e.relative_width(), "terms_used": e.terms_used })
}

fn interval_json(i: &Interval) -> Value {
    json!({ "lower": i.lo, "upper": i.hi })
}

fn q_tag(q: f64) -> String {
    format!("q={q}")
}

const SERIES_NAMES: [&str; 3] = ["s_pos_plus", "s_neg_plus", "s_chi_plus"];

fn parts(t: &ResolventTrace) -> [SeriesEnclosure; 3] {
    [t.positive, t.negative, t.principal]
}

fn certified_checks(q: f64, cfg: &SuiteConfig, out: &mut Vec<CheckRecord>) {
    let tag = q_tag(q);
    let scfg = SeriesConfig { shift: SHIFT_RESOLVENT, budget: cfg.term_budget };
    let anchor = "Σ ∫ Tr[(⟨D⟩² − 1/8 + 9/8)^{−q/2}] dμ converges for q > 3";
    let trace = match resolvent_trace(q, &scfg) {
        Ok(t) => t,
        Err(err) => {
            out.push(error_check(format!("series.resolvent_trace.{tag}"), err, anchor));
            return;
        }
    };
    for (name, e) in SERIES_NAMES.iter().zip(parts(&trace)) {
        let ok = e.lower.is_finite() && e.upper.is_finite() && e.relative_width() <= WIDTH_TOL;
        out.push(CheckRecord::new(format!("series.enclosure.{tag}.{name}"), Status::from_bool(ok), enclosure_json(&e), anchor));
    }
    out.push(CheckRecord::new(
        format!("series.resolvent_trace.{tag}"),
        Status::from_bool(trace.total.lower.is_finite() && trace.total.upper.is_finite()),
        enclosure_json(&trace.total),
        "S^+_+ + S^-_+ + S^χ_+ < ∞",
    ));

    let refs = [
        discrete_reference_bounds(q, DiscreteSign::Positive, cfg.term_budget),
        discrete_reference_bounds(q, DiscreteSign::Negative, cfg.term_budget),
        principal_reference_bounds(q, SHIFT_RESOLVENT, cfg.term_budget),
    ];
    let sandwich_anchor = [
        "½Σ n/(2k² + 9n²/8)^{q/2} ≤ S^+_+ ≤ ½Σ n/(k²/2 + n²/8)^{q/2}",
        "½Σ n/(4k² + 25n²/8)^{q/2} ≤ S^-_+ ≤ ½Σ n/(k² + n²/8)^{q/2}",
        "tanh πρ ≤ 1, coth πρ ≥ 1 and ρ coth πρ ≤ 1 on [0,1] bracket S^χ_+",
    ];
    for ((name, e), (r, a)) in SERIES_NAMES.iter().zip(parts(&trace)).zip(refs.into_iter().zip(sandwich_anchor)) {
        let id = format!("series.sandwich.{tag}.{name}");
        match r {
            Ok(r) => out.push(CheckRecord::new(
                id,
                Status::from_bool(e.is_within(&r)),
                json!({ "bounds": interval_json(&r), "enclosure": interval_json(&e.interval()) }),
                a,
            )),
            Err(err) => out.push(error_check(id, err, a)),
        }
    }

    let coarse_cfg = SeriesConfig { budget: (cfg.term_budget / 2).max(1_000), ..scfg };
    let id = format!("series.nesting.{tag}");
    match resolvent_trace(q, &coarse_cfg) {
        Ok(coarse) => {
            let nested: Vec<bool> = parts(&trace).iter().zip(parts(&coarse)).map(|(f, c)| f.nested_in(&c)).collect();
            out.push(CheckRecord::new(
                id,
                Status::from_bool(nested.iter().all(|&b| b)),
                json!({ "coarse_budget": coarse_cfg.budget, "budget": cfg.term_budget, "nested": nested }),
                "enclosures shrink as the term budget grows",
            ));
        }
        Err(err) => out.push(error_check(id, err, "enclosures shrink as the term budget grows")),
    }
}

fn diagnostic_checks(q: f64, out: &mut Vec<CheckRecord>) {
    let id = format!("series.divergence.{}", q_tag(q));
    let anchor = "the resolvent-trace series diverges for q ≤ 3";
    let reports = (
        diagnose_resolvent(q, SHIFT_RESOLVENT, &DIAGNOSTIC_BUDGETS),
        diagnose_discrete(q, Component::Plus, DiscreteSign::Positive, SHIFT_RESOLVENT, &DIAGNOSTIC_BUDGETS),
        diagnose_discrete(q, Component::Plus, DiscreteSign::Negative, SHIFT_RESOLVENT, &DIAGNOSTIC_BUDGETS),
        diagnose_principal(q, Component::Plus, SHIFT_RESOLVENT, &DIAGNOSTIC_BUDGETS),
    );
    match reports {
        (Ok(total), Ok(pos), Ok(neg), Ok(chi)) => {
            let w = json!({
                "stabilizing": total.stabilizing,
                "total": total,
                "s_pos_plus": pos,
                "s_neg_plus": neg,
                "s_chi_plus": chi,
            });
            out.push(CheckRecord::new(id, Status::Inconclusive, w, anchor));
        }
        (a, b, c, d) => {
            let err = [a.err(), b.err(), c.err(), d.err()].into_iter().flatten().next().expect("one error");
            out.push(error_check(id, err, anchor));
        }
    }
}

pub fn series_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let weights: Vec<(String, f64)> =
        cfg.fiber_samples.iter().map(|f| (fiber_tag(f), plancherel_weight(*f).weight)).collect();
    let ok = weights.iter().all(|(_, w)| w.is_finite() && *w >= 0.0);
    out.push(CheckRecord::new(
        "series.plancherel_weights",
        Status::from_bool(ok),
        Value::Object(weights.into_iter().map(|(k, w)| (k, json!(w))).collect()),
        "dμ(T_l^±) = (−l−½)dl, dμ(T_χ) = ½ρ tanh π(ρ+iε) dρ",
    ));
    for &q in &cfg.q_values {
        if q > 3.0 {
            certified_checks(q, cfg, &mut out);
        } else {
            diagnostic_checks(q, &mut out);
        }
    }
    out
}

pub const COUNTEREXAMPLE_CANDIDATES: [i64; 3] = [-2, -3, -4];

fn match_name(m: MatchMode) -> &'static str {
    match m {
        MatchMode::Exact => "exact",
        MatchMode::UpToSign => "up_to_sign",
        MatchMode::None => "none",
    }
}

pub fn counterexample_suite(_cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let ms: Vec<i64> = (-100..=-10).collect();
    let mut rows = Vec::new();
    let mut scaling = Vec::new();
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    let mut errors = Vec::new();
    for two_l in COUNTEREXAMPLE_CANDIDATES {
        let label = FiberSpec(FiberLabel::negative(two_l)).to_string();
        match counterexample_growth(two_l, &ms) {
            Ok(t) => {
                if (t.num_exponent - 4.0).abs() <= EXPONENT_TOL && (t.den_exponent - 2.0).abs() <= EXPONENT_TOL {
                    scaling.push(label.clone());
                }
                if t.numerator_match != MatchMode::None {
                    numerator.push(format!("{label} ({})", match_name(t.numerator_match)));
                }
                if t.denominator_match != MatchMode::None {
                    denominator.push(format!("{label} ({})", match_name(t.denominator_match)));
                }
                rows.push(json!({
                    "fiber": label,
                    "num_exponent": t.num_exponent,
                    "den_exponent": t.den_exponent,
                    "ratio_exponent": t.ratio_exponent,
                    "numerator_match": match_name(t.numerator_match),
                    "denominator_match": match_name(t.denominator_match),
                }));
            }
            Err(err) => errors.push(format!("{label}: {err}")),
        }
    }
    vec![
        CheckRecord::new(
            "counterexample.scaling",
            Status::from_bool(!scaling.is_empty()),
            json!({ "m_range": [-100, -10], "candidates": rows, "matching_labels": scaling, "errors": errors }),
            "‖[Re D, Im D]x_m‖² grows like m⁴ while ‖x_m‖² + ‖Re D x_m‖² + ‖Im D x_m‖² grows like m²",
        ),
        CheckRecord::new(
            "counterexample.closed_forms",
            Status::from_bool(!numerator.is_empty()),
            json!({ "numerator_matches": numerator, "denominator_matches": denominator }),
            "Q_num = −¼(−2m−1)²(1−m)(−m−2), Q_den = 1 + ½(m+½)² − ½(1−m)(−m−2)",
        ),
    ]
}
