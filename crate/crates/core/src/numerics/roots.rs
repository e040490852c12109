use crate::error::{Error, Result};

/// Bisection root of `g` on `[lo, hi]`; stops once the bracket is narrower
/// than `tol` and returns its midpoint.
pub fn find_root<G>(mut g: G, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    G: FnMut(f64) -> f64,
{
    if !(tol > 0.0) || !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidArgument(format!("find_root on [{lo}, {hi}] with tolerance {tol}")));
    }
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut ga = g(a);
    let gb = g(b);
    if ga == 0.0 {
        return Ok(a);
    }
    if gb == 0.0 {
        return Ok(b);
    }
    if !(ga.signum() * gb.signum() < 0.0) {
        return Err(Error::Bracket { lo, hi });
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let gm = g(m);
        if gm == 0.0 {
            return Ok(m);
        }
        if gm.signum() == ga.signum() {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
