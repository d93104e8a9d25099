use borwein_core::asymptotics::*;
use borwein_core::numeric::Interval;
use borwein_core::series::borwein_coeffs;
use borwein_core::{parse_rational, Float, Rational, Variant};

fn grid() -> Vec<Rational> {
    ["0.25", "0.5", "1", "1.5", "2", "2.5", "3"].iter().map(|s| parse_rational(s).unwrap()).collect()
}

#[test]
fn error_bound_dominated_by_cubic_constant() {
    for d in grid() {
        for n in [1u64, 2, 5, 10, 50, 157, 158, 500, 2000, 10_000] {
            let (bound, constant) = cubic_error_regime(&d, n, 128).unwrap();
            assert!(bound.certainly_le(&constant), "δ={d} n={n}: {:?} > {:?}", bound.hi(), constant.lo());
        }
    }
}

#[test]
fn m_is_monotone_from_158() {
    for d in grid() {
        let mut prev: Option<Float> = None;
        for n in 158..=2000i64 {
            let m = mth1_quantities(&d, n, 128).unwrap().m;
            if let Some(prev) = &prev {
                assert!(m <= *prev, "δ={d} n={n}");
            }
            prev = Some(m);
        }
    }
}

#[test]
fn bessel_precision_ladder() {
    for prec in [64u32, 128, 256] {
        for i in 1..=300 {
            let x = Float::with_val(prec + 64, i) / 10u32;
            let a = bessel_i1(&x, prec).unwrap();
            let b = bessel_i1(&x, prec + 64).unwrap();
            let rel = Float::with_val(prec + 64, Float::with_val(prec + 64, &a - &b) / &b).abs();
            assert!(rel < Float::with_val(prec + 64, Float::i_exp(1, -(prec as i32))), "x={x} prec={prec}");
        }
    }
}

#[test]
fn bessel_increasing() {
    let mut prev = bessel_i1(&Float::with_val(128, 0), 128).unwrap();
    for i in 1..=300 {
        let v = bessel_i1(&(Float::with_val(128, i) / 10u32), 128).unwrap();
        assert!(v > prev);
        prev = v;
    }
}

#[test]
fn bessel_sum_bound_dominates_direct_sums() {
    for x in ["0.5", "1", "5", "10"] {
        let x = Interval::from_rational(&parse_rational(x).unwrap(), 160);
        for y in [3u64, 10, 100] {
            let lhs = lemma_e_direct_sum(&x, y);
            let rhs = lemma_e_bound_interval(&x, y).unwrap();
            assert!(lhs.certainly_le(&rhs), "x={:?} y={y}", x.lo());
        }
    }
    // both sides are O(x) as x → 0
    let tiny = Interval::from_rational(&Rational::from((1, 1_000_000)), 160);
    let lhs = lemma_e_direct_sum(&tiny, 3).mid();
    let rhs = lemma_e_bound_interval(&tiny, 3).unwrap().mid();
    assert!(lhs < 1e-5 && rhs < 1e-5 && lhs <= rhs);
}

#[test]
fn mth_bound_spot_checks() {
    let d = Rational::from(1);
    let c = borwein_coeffs(3, &d, 50).unwrap();
    let rep = estimate_report(3, &d, 50, 3, &c.coeffs()[50], Variant::ProofGeneral, 128).unwrap();
    assert!(rep.within_bound);
    let c = borwein_coeffs(5, &Rational::from(6), 40).unwrap();
    // at the boundary δ = 24/(p−1) the n = 1 main term divides by zero
    assert!(rademacher_main(5, &Rational::from(6), 1, 2, 128).is_err());
    for n in 2..=40 {
        let rep = estimate_report(5, &Rational::from(6), n, 2, &c.coeffs()[n as usize], Variant::ProofGeneral, 128)
            .unwrap();
        assert!(rep.within_bound, "n={n}");
    }
}

#[test]
fn corollary_regime_at_158() {
    for d in grid() {
        if d >= 3 {
            continue;
        }
        for n in 158..=160 {
            assert!(cosine_dominates(&d, n, 128).unwrap(), "δ={d} n={n}");
        }
    }
}
