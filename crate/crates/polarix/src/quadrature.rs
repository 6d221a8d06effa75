//! Adaptive Gauss–Kronrod quadrature (15-point rule) with local error
//! control.
//!
//! The worklist is processed worst-error-first, but the final value is a
//! compensated sum over intervals sorted by left endpoint, so the result is
//! deterministic regardless of evaluation order. Integrands return `Result`,
//! letting domain errors (resonance guards) propagate out of the integration.

use crate::spectrum::neumaier_sum;
use std::collections::BinaryHeap;
use thiserror::Error;

/// Kronrod abscissae for the 15-point rule on [-1, 1] (positive half).
const XGK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769,
    0.741_531_185_599_394,
    0.586_087_235_467_691,
    0.405_845_151_377_397,
    0.207_784_955_007_898,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529,
    0.063_092_092_629_979,
    0.104_790_010_322_250,
    0.140_653_259_715_525,
    0.169_004_726_639_267,
    0.190_350_578_064_785,
    0.204_432_940_075_298,
    0.209_482_141_084_728,
];

/// Embedded 7-point Gauss weights (nodes XGK[1], XGK[3], XGK[5], center).
const WG: [f64; 4] = [
    0.129_484_966_168_870,
    0.279_705_391_489_277,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

#[derive(Debug, Error)]
pub enum QuadratureError<E> {
    #[error(
        "quadrature failed to converge after {max_intervals} subdivisions; worst subinterval [{a}, {b}] with local error {local_error:e}"
    )]
    NonConvergent {
        a: f64,
        b: f64,
        local_error: f64,
        max_intervals: usize,
    },
    #[error("integrand error at x = {x}: {source}")]
    Integrand {
        x: f64,
        #[source]
        source: E,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute error estimate (sum of local Kronrod−Gauss estimates).
    pub error_estimate: f64,
    pub n_evaluations: usize,
    pub n_intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    seq: usize,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.seq == other.seq
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error
            .total_cmp(&other.error)
            .then(other.seq.cmp(&self.seq))
    }
}

fn gk15<E>(
    f: &mut impl FnMut(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    evals: &mut usize,
) -> Result<(f64, f64), QuadratureError<E>> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |x: f64| -> Result<f64, QuadratureError<E>> {
        *evals += 1;
        f(x).map_err(|source| QuadratureError::Integrand { x, source })
    };
    let f_center = eval(center)?;
    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    let mut resabs = WGK[7] * f_center.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = f_center;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = eval(center - x)?;
        let f2 = eval(center + x)?;
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let value = kronrod * half;
    resabs *= half.abs();
    resasc *= half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * 1.0_f64.min((200.0 * err / resasc).powf(1.5));
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    Ok((value, err))
}

/// Integrate `f` over [a, b] to relative tolerance `rel_tol` (with absolute
/// floor `abs_floor`), splitting the worst interval until convergence or
/// `max_intervals` subdivisions.
pub fn adaptive_gk15<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
    max_intervals: usize,
) -> Result<QuadratureResult, QuadratureError<E>> {
    let mut evals = 0usize;
    let mut seq = 0usize;
    let (v0, e0) = gk15(&mut f, a, b, &mut evals)?;
    let mut heap = BinaryHeap::new();
    heap.push(Interval {
        a,
        b,
        value: v0,
        error: e0,
        seq,
    });
    let mut total_value = v0;
    let mut total_error = e0;
    while total_error > rel_tol * total_value.abs() && total_error > abs_floor {
        if heap.len() >= max_intervals {
            let worst = heap.peek().expect("nonempty heap");
            return Err(QuadratureError::NonConvergent {
                a: worst.a,
                b: worst.b,
                local_error: worst.error,
                max_intervals,
            });
        }
        let worst = heap.pop().expect("nonempty heap");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at floating-point resolution; accept it as is
            total_error -= worst.error;
            let mut stuck = worst;
            stuck.error = 0.0;
            heap.push(stuck);
            continue;
        }
        seq += 1;
        let (v1, e1) = gk15(&mut f, worst.a, mid, &mut evals)?;
        let left = Interval {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
            seq,
        };
        seq += 1;
        let (v2, e2) = gk15(&mut f, mid, worst.b, &mut evals)?;
        let right = Interval {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
            seq,
        };
        total_value += v1 + v2 - worst.value;
        total_error += e1 + e2 - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // deterministic final summation: sort by left endpoint, compensated sum
    let mut intervals: Vec<Interval> = heap.into_vec();
    intervals.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = neumaier_sum(intervals.iter().map(|i| i.value));
    let error_estimate = neumaier_sum(intervals.iter().map(|i| i.error));
    Ok(QuadratureResult {
        value,
        error_estimate,
        n_evaluations: evals,
        n_intervals: intervals.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::convert::Infallible;

    fn ok(f: impl Fn(f64) -> f64) -> impl FnMut(f64) -> Result<f64, Infallible> {
        move |x| Ok(f(x))
    }

    #[test]
    fn polynomial_is_exact() {
        let r = adaptive_gk15(ok(|x| x * x), 0.0, 1.0, 1e-12, 1e-300, 100).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-14);
        assert_eq!(r.n_intervals, 1, "GK15 integrates x² in one panel");
    }

    #[test]
    fn exponential_tail() {
        let r = adaptive_gk15(ok(|x| (-x).exp()), 0.0, 60.0, 1e-12, 1e-300, 1000).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11, "{}", r.value);
        assert!(r.error_estimate >= (r.value - 1.0).abs());
    }

    #[test]
    fn oscillatory_error_estimate_is_conservative() {
        let r = adaptive_gk15(ok(|x| (20.0 * x).sin()), 0.0, 3.0, 1e-10, 1e-300, 2000).unwrap();
        let exact = (1.0 - (60.0f64).cos()) / 20.0;
        assert!((r.value - exact).abs() <= r.error_estimate.max(1e-12));
    }

    #[test]
    fn divergent_integrand_reports_worst_interval() {
        let err = adaptive_gk15(ok(|x| 1.0 / (x * x)), 0.0, 1.0, 1e-10, 1e-300, 64).unwrap_err();
        match err {
            QuadratureError::NonConvergent { a, local_error, .. } => {
                assert!(a < 1e-3, "worst interval should hug the singularity, a = {a}");
                assert!(local_error > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn integrand_errors_propagate() {
        #[derive(Debug, PartialEq)]
        struct Boom;
        impl std::fmt::Display for Boom {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "boom")
            }
        }
        impl std::error::Error for Boom {}
        let err = adaptive_gk15(
            |x| if x > 0.5 { Err(Boom) } else { Ok(x) },
            0.0,
            1.0,
            1e-10,
            1e-300,
            64,
        )
        .unwrap_err();
        assert!(matches!(err, QuadratureError::Integrand { .. }));
    }

    #[test]
    fn zero_integrand_converges_immediately() {
        let r = adaptive_gk15(ok(|_| 0.0), 0.0, 10.0, 1e-12, 1e-300, 10).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.n_evaluations, 15);
    }
}
