//! Kolmogorov-Smirnov statistics used by the symmetry check and the
//! exponential goodness-of-fit test.

/// One-sample K-S statistic of sorted data against a theoretical CDF:
/// `D = max_k |k/N - F(x_(k))|`.
pub fn ks_statistic_sorted<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> f64 {
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (k, &x) in sorted.iter().enumerate() {
        let gap = ((k + 1) as f64 / n - cdf(x)).abs();
        if gap > d {
            d = gap;
        }
    }
    d
}

/// Two-sample K-S statistic between two sorted samples:
/// the largest gap between their empirical CDFs.
pub fn ks_two_sample_sorted(a: &[f64], b: &[f64]) -> f64 {
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d = 0.0f64;
    while i < a.len() && j < b.len() {
        let x = if a[i] <= b[j] { a[i] } else { b[j] };
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        let gap = (i as f64 / na - j as f64 / nb).abs();
        if gap > d {
            d = gap;
        }
    }
    d
}

/// Sort a sample of finite values ascending.
pub fn sort_finite(values: &mut [f64]) {
    values.sort_unstable_by(f64::total_cmp);
}
