use std::f64::consts::PI;

use num_complex::Complex64;

use crate::numerics::csinc;

/// One summand `coeff · e^{−πitp} · sin(πq(δ−|t|)₊)/(πq)` of a transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumTerm {
    pub coeff: Complex64,
    /// `p`
    pub phase_freq: Complex64,
    /// `q`; zero means the triangle `(δ−|t|)₊`.
    pub spread: Complex64,
}

/// Exact piecewise-analytic function supported in `[−δ, δ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumForm {
    pub delta: f64,
    pub terms: Vec<SpectrumTerm>,
}

impl SpectrumForm {
    pub fn eval(&self, t: f64) -> Complex64 {
        let gap = self.delta - t.abs();
        if !(gap > 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        self.terms
            .iter()
            .map(|term| {
                let window = csinc(term.spread * (PI * gap)) * gap;
                let phase = (Complex64::new(0.0, -PI * t) * term.phase_freq).exp();
                term.coeff * phase * window
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_sinh_windows() {
        let f = SpectrumForm {
            delta: 2.0,
            terms: vec![SpectrumTerm {
                coeff: Complex64::new(1.0, 0.0),
                phase_freq: Complex64::new(0.0, 0.0),
                spread: Complex64::new(0.0, 0.0),
            }],
        };
        assert_eq!(f.eval(0.5), Complex64::new(1.5, 0.0));
        assert_eq!(f.eval(2.0), Complex64::new(0.0, 0.0));
        assert_eq!(f.eval(-7.0), Complex64::new(0.0, 0.0));

        let g = SpectrumForm {
            delta: 1.0,
            terms: vec![SpectrumTerm {
                coeff: Complex64::new(1.0, 0.0),
                phase_freq: Complex64::new(0.0, 0.0),
                spread: Complex64::new(0.0, 2.0),
            }],
        };
        let want = (2.0 * PI * 0.75).sinh() / (2.0 * PI);
        assert!((g.eval(0.25).re - want).abs() < 1e-13 * want);
    }
}
