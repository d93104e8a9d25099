//! The verification suites behind `borwein verify`.

use borwein_core::asymptotics::{check_mth1_inequality, estimate_report};
use borwein_core::identities::{
    conjecture1_check, corollary_sign_check, cubic_theta_check, divisibility_violations, lambert_derivative_check,
    sign_pattern_check, theorem_main_residual, theta_derivative_check, theta_dissection_residual,
    two_squares_check, vanishing_check,
};
use borwein_core::modular::{modular_transform_sides, TransformContext, Truncation};
use borwein_core::numeric::Complex;
use borwein_core::series::{borwein_coeffs, format_rational};
use borwein_core::{parse_rational, Float, Rational, Result, Variant};
use clap::ValueEnum;
use serde::Serialize;

use crate::report::{short, TextRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Mth,
    Mth1,
    Main,
    Jtpe,
    Lambert,
    TwoSquares,
    Cubic,
    Vanishing,
    Divisibility,
    Signs,
    Conjecture1,
    Transform,
    All,
}

impl Suite {
    const EACH: [Suite; 12] = [
        Suite::Mth,
        Suite::Mth1,
        Suite::Main,
        Suite::Jtpe,
        Suite::Lambert,
        Suite::TwoSquares,
        Suite::Cubic,
        Suite::Vanishing,
        Suite::Divisibility,
        Suite::Signs,
        Suite::Conjecture1,
        Suite::Transform,
    ];

    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_owned()
    }

    fn default_order(self) -> usize {
        match self {
            Suite::Mth | Suite::Main | Suite::Cubic | Suite::Conjecture1 => 300,
            Suite::Jtpe => 100,
            Suite::Transform => 60,
            Suite::TwoSquares => 500,
            Suite::Mth1 | Suite::Vanishing | Suite::Divisibility | Suite::Signs => 600,
            Suite::Lambert | Suite::All => 0,
        }
    }
}

/// Optional overrides shared by all suites.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub order: Option<usize>,
    pub k: Option<u64>,
    pub p: Option<u64>,
    pub delta: Option<Rational>,
    pub precision: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    /// `false` for exploratory checks, which never affect the exit code.
    pub asserted: bool,
    pub passed: bool,
    pub residual: Option<String>,
    pub detail: String,
}

impl TextRow for Check {
    fn text(&self) -> String {
        let tag = match (self.passed, self.asserted) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "NOTE",
        };
        let mut s = format!("{tag}  {:<12} {}", self.suite, self.name);
        if let Some(r) = &self.residual {
            s += &format!("  residual {r}");
        }
        if !self.detail.is_empty() {
            s += &format!("  ({})", self.detail);
        }
        s
    }
}

/// A deferred check; plans are built eagerly (so parameter errors surface
/// before any work) and run later, possibly in parallel.
pub type Job = Box<dyn Fn() -> Result<Check> + Send + Sync>;

fn q(s: &str) -> Rational {
    parse_rational(s).expect("literal")
}

fn check(suite: Suite, name: String, asserted: bool, passed: bool, residual: Option<String>, detail: String) -> Check {
    Check { suite: suite.name(), name, asserted, passed, residual, detail }
}

fn ks(params: &Params, default: impl IntoIterator<Item = u64>) -> Vec<u64> {
    params.k.map_or_else(|| default.into_iter().collect(), |k| vec![k])
}

fn deltas(params: &Params, default: &[&str]) -> Vec<Rational> {
    params.delta.clone().map_or_else(|| default.iter().map(|s| q(s)).collect(), |d| vec![d])
}

pub fn plan(suite: Suite, params: &Params) -> Result<Vec<Job>> {
    if suite == Suite::All {
        let mut jobs = Vec::new();
        for s in Suite::EACH {
            jobs.extend(plan(s, params)?);
        }
        return Ok(jobs);
    }
    let order = params.order.unwrap_or(suite.default_order());
    let prec = params.precision;
    let mut jobs: Vec<Job> = Vec::new();
    match suite {
        Suite::Mth => {
            let ps = params.p.map_or(vec![2, 3, 5], |p| vec![p]);
            for p in ps {
                let grid = deltas(params, &["1/4", "1/2", "1", "2", "3"]);
                for d in grid {
                    if params.delta.is_none() && d > (24, p - 1) {
                        continue;
                    }
                    // the first n with 24n > (p−1)δ
                    let first = (Rational::from(&d * (p - 1)) / 24u32).floor().numer().to_u64().unwrap_or(0) + 1;
                    for big_n in 1..=3u64 {
                        // validate the hypotheses now
                        if order as u64 >= first {
                            estimate_report(p, &d, first, big_n, &Rational::new(), Variant::ProofGeneral, prec)?;
                        }
                        let d = d.clone();
                        jobs.push(Box::new(move || mth_job(p, &d, first, order as u64, big_n, prec)));
                    }
                }
            }
        }
        Suite::Mth1 => {
            for d in deltas(params, &["0.25", "0.5", "1", "1.5", "2", "2.5", "3"]) {
                check_mth1_inequality(&d, 1, &Rational::new(), 53)?;
                let dd = d.clone();
                jobs.push(Box::new(move || mth1_job(&dd, order, prec)));
                if d >= q("0.227") && d <= q("2.9999") && order >= 158 {
                    jobs.push(Box::new(move || {
                        let r = corollary_sign_check(&d, 158, order)?;
                        let detail = if r.holds() {
                            String::new()
                        } else {
                            format!("sign mismatches {:?}, non-positive c(n)c(n+3) at {:?}", r.sign_mismatches, r.nonpositive_products)
                        };
                        Ok(check(Suite::Mth1, format!("signs δ={d} 158≤n≤{order}"), true, r.holds(), None, detail))
                    }));
                }
            }
        }
        Suite::Main => {
            for k in ks(params, 1..=9) {
                if k == 0 {
                    return Err(borwein_core::Error::Domain("k must be positive".into()));
                }
                jobs.push(Box::new(move || {
                    let r = theorem_main_residual(k, order);
                    Ok(check(Suite::Main, format!("k={k} order={order}"), true, r == 0, Some(format_rational(&r)), String::new()))
                }));
            }
        }
        Suite::Jtpe => {
            for k in ks(params, 1..=4) {
                if k == 0 {
                    return Err(borwein_core::Error::Domain("k must be positive".into()));
                }
                jobs.push(Box::new(move || {
                    let r = theta_dissection_residual(k, 10, order);
                    Ok(check(Suite::Jtpe, format!("k={k} M=10 order={order}"), true, r == 0, Some(format_rational(&r)), String::new()))
                }));
            }
        }
        Suite::Lambert => {
            let tol = 1e-10;
            for (kp, a, qv) in [(0i64, "1/2", "0.1"), (1, "1/3", "0.1"), (0, "2/5", "0.3"), (1, "3/4", "0.5")] {
                jobs.push(Box::new(move || {
                    let wp = prec.max(64);
                    let qf = Float::with_val(wp, &q(qv));
                    let step = Float::with_val(wp, &q("1/1000000"));
                    let r = lambert_derivative_check(kp, &q(a), &qf, &step, wp)?;
                    let name = format!("derivative k={kp} α={a} q={qv}");
                    Ok(check(Suite::Lambert, name, true, r < tol, Some(short(&r)), format!("tolerance {tol:e}")))
                }));
            }
            jobs.push(Box::new(move || {
                let wp = prec.max(64);
                let step = Float::with_val(wp, &q("1/1000000"));
                let r = theta_derivative_check(&Float::with_val(wp, &q("0.2")), &step, wp)?;
                Ok(check(Suite::Lambert, "limit q=0.2".into(), true, r < tol, Some(short(&r)), format!("tolerance {tol:e}")))
            }));
        }
        Suite::TwoSquares => jobs.push(Box::new(move || {
            let r = two_squares_check(order);
            Ok(check(Suite::TwoSquares, format!("order={order}"), true, r == 0, Some(format_rational(&r)), String::new()))
        })),
        Suite::Cubic => jobs.push(Box::new(move || {
            let c = cubic_theta_check(order);
            let detail = format!(
                "addition {}, a(q³)=b+c {}, a³=b³+c³ {}, lambert {}",
                format_rational(&c.cth),
                format_rational(&c.abc2),
                format_rational(&c.cubic),
                format_rational(&c.a_lambert)
            );
            let worst = [&c.cth, &c.abc2, &c.cubic, &c.a_lambert].into_iter().max().unwrap().clone();
            Ok(check(Suite::Cubic, format!("order={order}"), true, c.all_zero(), Some(format_rational(&worst)), detail))
        })),
        Suite::Vanishing => {
            for k in ks(params, [3, 5, 7, 9]) {
                borwein_core::identities::vanishing_classes(k)?;
                jobs.push(Box::new(move || {
                    let r = vanishing_check(k, order)?;
                    let detail = format!("classes {:?}, nonzero at {:?}", r.classes, r.violations);
                    Ok(check(Suite::Vanishing, format!("k={k} order={order}"), true, r.holds(), None, detail))
                }));
            }
        }
        Suite::Divisibility => {
            for k in ks(params, [3, 5, 7, 9]) {
                borwein_core::identities::vanishing_classes(k)?;
                jobs.push(Box::new(move || {
                    let bad = divisibility_violations(k, order)?;
                    let detail = if bad.is_empty() { String::new() } else { format!("not divisible at {bad:?}") };
                    Ok(check(Suite::Divisibility, format!("k={k} order={order}"), true, bad.is_empty(), None, detail))
                }));
            }
        }
        Suite::Signs => {
            let ps = params.p.map_or(vec![2, 3, 5, 7], |p| vec![p]);
            for p in ps {
                if p < 2 {
                    return Err(borwein_core::Error::Domain("p must be at least 2".into()));
                }
                for d in deltas(params, &["1", "3"]) {
                    let asserted = d == 1 || d == 3;
                    jobs.push(Box::new(move || {
                        let r = sign_pattern_check(p, &d, order)?;
                        let detail = match r.first_violation {
                            None => format!("{} products checked", r.checked),
                            Some(n) => format!("{} violations, first at n={n}", r.violations),
                        };
                        Ok(check(Suite::Signs, format!("p={p} δ={d} order={order}"), asserted, r.holds(), None, detail))
                    }));
                }
            }
        }
        Suite::Conjecture1 => {
            for d in deltas(params, &["1/5", "1/4", "1/2", "1", "2", "3"]) {
                jobs.push(Box::new(move || {
                    let r = conjecture1_check(&d, order)?;
                    let detail = r
                        .components
                        .iter()
                        .map(|c| match c.first_negative {
                            None => format!("{} ≥ 0", c.name),
                            Some(n) => format!("{} first negative at n={n}", c.name),
                        })
                        .collect::<Vec<_>>()
                        .join(", ");
                    // a conjecture: reported, never asserted (δ = 1 is classical)
                    Ok(check(Suite::Conjecture1, format!("δ={d} order={order}"), d == 1, r.all_nonnegative(), None, detail))
                }));
            }
        }
        Suite::Transform => {
            let cases: Vec<(u64, i64, u64)> = match (params.p, params.k) {
                (None, None) => vec![(3, 0, 1), (2, 1, 2), (3, 1, 3), (5, 2, 5)],
                (p, k) => {
                    let p = p.unwrap_or(3);
                    let k = k.unwrap_or(p);
                    vec![(p, 1, k)]
                }
            };
            for (p, h, k) in cases {
                let ctx = TransformContext::new(h, k, p)?;
                for d in deltas(params, &["1", "3/2"]) {
                    let variants: &[Variant] =
                        if p == 3 { &[Variant::ProofGeneral, Variant::AsStated] } else { &[Variant::ProofGeneral] };
                    for &variant in variants {
                        let (ctx, d) = (ctx.clone(), d.clone());
                        jobs.push(Box::new(move || transform_job(&ctx, &d, order, variant, prec)));
                    }
                }
            }
        }
        Suite::All => unreachable!(),
    }
    Ok(jobs)
}

fn mth_job(p: u64, d: &Rational, first: u64, last: u64, big_n: u64, prec: u32) -> Result<Check> {
    let c = borwein_coeffs(p, d, last as usize)?;
    let mut worst = Float::new(prec);
    let mut bad = Vec::new();
    for n in first..=last {
        let r = estimate_report(p, d, n, big_n, &c.coeffs()[n as usize], Variant::ProofGeneral, prec)?;
        if !r.within_bound {
            bad.push(n);
        }
        let gap = Float::with_val(prec, Float::with_val(prec, &r.exact_coeff) - &r.main_term).abs() / &r.error_bound;
        if gap > worst {
            worst = gap;
        }
    }
    let detail = if bad.is_empty() { "largest |c − main|/bound".to_owned() } else { format!("outside bound at n={bad:?}") };
    Ok(check(
        Suite::Mth,
        format!("p={p} δ={d} N={big_n} {first}≤n≤{last}"),
        true,
        bad.is_empty(),
        Some(short(&worst)),
        detail,
    ))
}

fn mth1_job(d: &Rational, last: usize, prec: u32) -> Result<Check> {
    let c = borwein_coeffs(3, d, last)?;
    let mut bad = Vec::new();
    for n in 1..=last {
        if !check_mth1_inequality(d, n as i64, &c.coeffs()[n], prec)? {
            bad.push(n);
        }
    }
    let detail = if bad.is_empty() { String::new() } else { format!("inequality fails at n={bad:?}") };
    Ok(check(Suite::Mth1, format!("inequality δ={d} 1≤n≤{last}"), true, bad.is_empty(), None, detail))
}

fn transform_job(ctx: &TransformContext, d: &Rational, order: usize, variant: Variant, prec: u32) -> Result<Check> {
    let z = Complex::from_real(Float::with_val(prec, 1));
    let s = modular_transform_sides(ctx, d, &z, Truncation::adaptive(order), variant, prec)?;
    // 1e-20 from 128 bits on; half the working precision below that
    let tol = if prec >= 128 {
        Float::with_val(prec, 1e-20)
    } else {
        Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2))
    };
    let label = match variant {
        Variant::ProofGeneral => "",
        Variant::AsStated => " as-stated",
    };
    Ok(check(
        Suite::Transform,
        format!("(p,h,k)=({},{},{}) δ={d} z=1{label}", ctx.p(), ctx.h(), ctx.k()),
        true,
        s.residual < tol,
        Some(short(&s.residual)),
        format!("tolerance {}", short(&tol)),
    ))
}
