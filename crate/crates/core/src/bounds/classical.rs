use super::{BoundReport, ReportBuilder};

/// γ(G) ≤ n·(ln(δ+1)+1)/(δ+1).
pub fn bound_classical(delta: usize, n: usize) -> BoundReport {
    let d1 = delta as f64 + 1.0;
    ReportBuilder::new("classical", n, Some(n as f64))
        .param("delta", delta as f64)
        .finish(Ok(()), Some((d1.ln() + 1.0) / d1))
}

/// γ(G) ≤ n·(1 − δ/(1+δ)^{1+1/δ}) for δ ≥ 1.
pub fn bound_caro_roditty(delta: usize, n: usize) -> BoundReport {
    let d = delta as f64;
    let builder = ReportBuilder::new("caro_roditty", n, Some(n as f64)).param("delta", d);
    if delta == 0 {
        return builder.finish(Err("needs δ ≥ 1".into()), None);
    }
    let coefficient = 1.0 - d / (1.0 + d).powf(1.0 + 1.0 / d);
    builder.finish(Ok(()), Some(coefficient))
}
