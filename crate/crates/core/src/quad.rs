//! Adaptive one-dimensional quadrature.
//!
//! Panels are estimated with a 15-point Gauss-Legendre rule; the error of a
//! panel is the difference against the sum of the rule applied to its halves.
//! The worst panel is split until the total error estimate meets the target.
//! Node/weight tables are computed once by Newton iteration on the Legendre
//! recurrence, so there are no transcribed constants to get wrong.

use std::collections::BinaryHeap;

use ordered_float::OrderedFloat;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-style initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

thread_local! {
    static GL15: (Vec<f64>, Vec<f64>) = gauss_legendre(15);
}

fn gl15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    GL15.with(|(nodes, weights)| {
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    })
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
}

#[derive(PartialEq)]
struct Panel {
    err: OrderedFloat<f64>,
    a: f64,
    b: f64,
    value: f64,
}

impl Eq for Panel {}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err
            .cmp(&other.err)
            .then(OrderedFloat(self.a).cmp(&OrderedFloat(other.a)))
    }
}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Integrate `f` on [a, b] to relative tolerance `rel_tol` (with an absolute
/// floor for integrals near zero).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64, abs_floor: f64) -> QuadResult {
    integrate_with_limit(f, a, b, rel_tol, abs_floor, 20_000)
}

pub fn integrate_with_limit<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
    max_panels: usize,
) -> QuadResult {
    if a == b {
        return QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            panels: 0,
        };
    }
    let make_panel = |a: f64, b: f64| {
        let whole = gl15(&f, a, b);
        let mid = 0.5 * (a + b);
        let halves = gl15(&f, a, mid) + gl15(&f, mid, b);
        Panel {
            err: OrderedFloat((whole - halves).abs()),
            a,
            b,
            value: halves,
        }
    };
    let mut heap = BinaryHeap::new();
    heap.push(make_panel(a, b));
    let mut panels = 1usize;
    loop {
        let total: f64 = heap.iter().map(|p| p.value).sum();
        let err: f64 = heap.iter().map(|p| p.err.0).sum();
        let target = (rel_tol * total.abs()).max(abs_floor);
        if err <= target || panels >= max_panels {
            return QuadResult {
                value: total,
                error_estimate: err,
                panels,
            };
        }
        let worst = heap.pop().expect("heap nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval exhausted at f64 resolution; keep the estimate.
            let mut p = worst;
            p.err = OrderedFloat(0.0);
            heap.push(p);
            continue;
        }
        heap.push(make_panel(worst.a, mid));
        heap.push(make_panel(mid, worst.b));
        panels += 1;
    }
}

/// Composite Simpson over uniformly spaced samples. The sample count may be
/// even or odd; a trailing trapezoid corrects an even count.
pub fn simpson_uniform(values: &[f64], spacing: f64) -> f64 {
    let n = values.len();
    assert!(n >= 2, "need at least two samples");
    if n == 2 {
        return 0.5 * spacing * (values[0] + values[1]);
    }
    let pairs = (n - 1) / 2;
    let mut acc = 0.0;
    for k in 0..pairs {
        let i = 2 * k;
        acc += spacing / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
    }
    if (n - 1) % 2 == 1 {
        // Odd number of panels: close the last one with a 3-point rule
        // fitted on the final three samples (integrated over the last panel).
        let a = values[n - 3];
        let b = values[n - 2];
        let c = values[n - 1];
        acc += spacing * (-a / 12.0 + 2.0 * b / 3.0 + 5.0 * c / 12.0);
    }
    acc
}
