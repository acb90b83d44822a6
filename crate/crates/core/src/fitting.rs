//! Linear-region detection on log-log curves: ordinary least squares over
//! every admissible contiguous window, keeping the window with the best r².

use serde::Serialize;

/// Result of fitting a line to a window of a curve.
///
/// `window` is the inclusive (start, end) index range of the entries used;
/// `r_squared` is computed on exactly those entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub window: (usize, usize),
}

/// OLS fit of `y` against `x` over all contiguous windows of length at least
/// `min_window` whose entries are all admissible. Returns the window with the
/// highest r²; ties go to the longer window, then to the smaller start index.
///
/// A window with zero variance in `y` gets r² = 0: a constant is
/// indistinguishable from noise there, and letting it score 1 would let flat
/// low-count stretches win the selection.
pub(crate) fn best_window_fit(
    x: &[f64],
    y: &[f64],
    admissible: &[bool],
    min_window: usize,
) -> Option<SlopeFit> {
    assert_eq!(x.len(), y.len());
    assert_eq!(x.len(), admissible.len());
    let n = x.len();
    let mut best: Option<SlopeFit> = None;
    let mut start = 0usize;
    while start < n {
        if !admissible[start] {
            start += 1;
            continue;
        }
        let mut end = start;
        while end + 1 < n && admissible[end + 1] {
            end += 1;
        }
        // admissible run [start, end]
        for i in start..=end {
            for j in (i + min_window - 1)..=end {
                let fit = ols(&x[i..=j], &y[i..=j], (i, j));
                let better = match &best {
                    None => true,
                    Some(b) => {
                        let len_new = j - i + 1;
                        let len_old = b.window.1 - b.window.0 + 1;
                        fit.r_squared > b.r_squared
                            || (fit.r_squared == b.r_squared && len_new > len_old)
                    }
                };
                if better {
                    best = Some(fit);
                }
            }
        }
        start = end + 1;
    }
    best
}

fn ols(x: &[f64], y: &[f64], window: (usize, usize)) -> SlopeFit {
    let n = x.len() as f64;
    let xm = x.iter().sum::<f64>() / n;
    let ym = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - xm;
        let dy = yi - ym;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    let slope = sxy / sxx;
    let intercept = ym - slope * xm;
    let r_squared = if syy == 0.0 {
        0.0
    } else {
        let ss_res = (syy - slope * sxy).max(0.0);
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    SlopeFit {
        slope,
        intercept,
        r_squared,
        window,
    }
}
