//! Binomial coefficients in log space, with exact values for small arguments.

/// Largest top index for which exact integer binomials are used.
pub const EXACT_TOP: u64 = 64;

/// Exact C(n, t) for `n ≤ 64`; zero when `t > n`.
pub fn binomial_exact(n: u64, t: u64) -> Option<u128> {
    if n > EXACT_TOP {
        return None;
    }
    if t > n {
        return Some(0);
    }
    let t = t.min(n - t);
    let mut acc: u128 = 1;
    for i in 1..=t as u128 {
        // acc * (n - t + i) is divisible by i at every step
        acc = acc * (n as u128 - t as u128 + i) / i;
    }
    Some(acc)
}

/// ln C(n, t). Returns `-inf` (the logarithm of zero) when `t < 0` or `t > n`.
pub fn log_binomial(n: u64, t: i64) -> f64 {
    if t < 0 || t as u64 > n {
        return f64::NEG_INFINITY;
    }
    let t = t as u64;
    if let Some(exact) = binomial_exact(n, t) {
        return (exact as f64).ln();
    }
    let t = t.min(n - t);
    (1..=t).map(|i| ((n - t + i) as f64 / i as f64).ln()).sum()
}

/// ln(e^a + e^b) without overflow; either argument may be `-inf`.
pub fn log_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}

/// ln(i!) by direct summation.
pub fn ln_factorial(i: u64) -> f64 {
    (2..=i).map(|j| (j as f64).ln()).sum()
}
