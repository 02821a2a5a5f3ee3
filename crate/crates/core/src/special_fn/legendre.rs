use crate::error::{Error, Result};

fn check_domain(x: f64) -> Result<()> {
    if !(x.abs() <= 1.0 + f64::EPSILON) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[-1, 1]",
        });
    }
    Ok(())
}

/// Legendre polynomial `P_l(x)` by the Bonnet recurrence
/// `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
pub fn legendre_eval(l: usize, x: f64) -> Result<f64> {
    check_domain(x)?;
    let (mut prev, mut cur) = (1.0, x);
    if l == 0 {
        return Ok(prev);
    }
    for k in 1..l {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `[P_0(x), ..., P_{l_max}(x)]` from a single pass of the recurrence.
pub fn legendre_eval_all(l_max: usize, x: f64) -> Result<Vec<f64>> {
    check_domain(x)?;
    Ok(legendre_table(l_max, x))
}

/// Unchecked batched recurrence for callers that already validated `x`.
pub(crate) fn legendre_table(l_max: usize, x: f64) -> Vec<f64> {
    let mut p = Vec::with_capacity(l_max + 1);
    p.push(1.0);
    if l_max >= 1 {
        p.push(x);
    }
    for k in 1..l_max {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p[k] - kf * p[k - 1]) / (kf + 1.0);
        p.push(next);
    }
    p
}
