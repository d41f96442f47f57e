//! Sample-size/gap strategies and in-place sample placement.
//!
//! A strategy maps the current segment length `m` to a sample size `s` and a
//! rank gap `g`. The gap controls how far apart the two pivot ranks are
//! drawn around the target rank; larger gaps trade extra partitioning work
//! for a higher probability that the target lies between the pivots.

use crate::rng::Rng;
use crate::{Error, Result};

/// Ceiling with a snap guard: values within 1e-9 of an integer are treated
/// as that integer before the ceiling is taken, so floating-point noise in
/// an expression that is mathematically integral cannot shift the result by
/// one.
pub fn ceil_guard(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 {
        r
    } else {
        x.ceil()
    }
}

/// `f(n) = n^(2/3) * (ln n)^(1/3)`, the reference sample-size scale.
pub fn f_of_n(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("f_of_n requires n >= 2, got {n}")));
    }
    let nf = n as f64;
    Ok(nf.powf(2.0 / 3.0) * nf.ln().cbrt())
}

/// `Phi_eps(n) = (n^eps / ln n)^(1/3)`, the ratio between the power-law
/// sample scale `n^((2+eps)/3)` and `f(n)`.
pub fn phi_eps(n: u64, eps: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!("phi_eps requires n >= 3, got {n}")));
    }
    let nf = n as f64;
    Ok((nf.powf(eps) / nf.ln()).cbrt())
}

/// Sample size and gap for one pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleParams {
    pub s: usize,
    pub g: f64,
}

/// The sample-size/gap families. Parameters are validated at construction;
/// [`SampleStrategy::sample_params`] never fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleStrategy {
    /// `s = min(ceil(alpha * m^(2/3) ln^(1/3) m), m-1)`, `g = sqrt(beta * s * ln m)`.
    Fr { alpha: f64, beta: f64 },
    /// As `Fr` but `g = sqrt(beta * s * ln(theta * s))`.
    FrLns { alpha: f64, beta: f64, theta: f64 },
    /// `s = min(ceil(alpha * m^(2/3) ln^(eps_l/3) m), m-1)`, `g = sqrt(beta * s * ln^eps_l m)`.
    FrLneps { alpha: f64, beta: f64, eps_l: f64 },
    /// `s = min(ceil(alpha * m^(2/3)), m-1)`, `g = sqrt(beta * s * ln m)`.
    FrSn23 { alpha: f64, beta: f64 },
    /// `s = min(ceil(alpha * m^eps_s), m-1)`, `g = sqrt(beta * s * m^eps)`.
    Reischuk { alpha: f64, beta: f64, eps_s: f64, eps: f64 },
}

impl Default for SampleStrategy {
    fn default() -> Self {
        SampleStrategy::Fr { alpha: 0.5, beta: 0.25 }
    }
}

fn check_pos(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must be positive and finite, got {v}")))
    }
}

impl SampleStrategy {
    pub fn fr(alpha: f64, beta: f64) -> Result<Self> {
        check_pos("alpha", alpha)?;
        check_pos("beta", beta)?;
        Ok(SampleStrategy::Fr { alpha, beta })
    }

    /// `theta` defaults to 1.
    pub fn fr_lns(alpha: f64, beta: f64, theta: f64) -> Result<Self> {
        check_pos("alpha", alpha)?;
        check_pos("beta", beta)?;
        check_pos("theta", theta)?;
        Ok(SampleStrategy::FrLns { alpha, beta, theta })
    }

    /// `eps_l >= 1`; `eps_l = 1` degenerates to [`SampleStrategy::Fr`].
    pub fn fr_lneps(alpha: f64, beta: f64, eps_l: f64) -> Result<Self> {
        check_pos("alpha", alpha)?;
        check_pos("beta", beta)?;
        if !(eps_l >= 1.0) {
            return Err(Error::Config(format!("eps_l must be >= 1, got {eps_l}")));
        }
        Ok(SampleStrategy::FrLneps { alpha, beta, eps_l })
    }

    pub fn fr_sn23(alpha: f64, beta: f64) -> Result<Self> {
        check_pos("alpha", alpha)?;
        check_pos("beta", beta)?;
        Ok(SampleStrategy::FrSn23 { alpha, beta })
    }

    /// Requires `0 < eps < eps_s < 1`, which makes
    /// `eta = max(1 + (eps - eps_s)/2, eps_s) < 1`.
    pub fn reischuk(alpha: f64, beta: f64, eps_s: f64, eps: f64) -> Result<Self> {
        check_pos("alpha", alpha)?;
        check_pos("beta", beta)?;
        if !(0.0 < eps && eps < eps_s && eps_s < 1.0) {
            return Err(Error::Config(format!(
                "reischuk requires 0 < eps < eps_s < 1, got eps={eps}, eps_s={eps_s}"
            )));
        }
        let eta = (1.0 + (eps - eps_s) / 2.0).max(eps_s);
        if !(eta < 1.0) {
            return Err(Error::Config(format!("reischuk requires eta < 1, got eta={eta}")));
        }
        Ok(SampleStrategy::Reischuk { alpha, beta, eps_s, eps })
    }

    /// Optimal power-law choice for a given `eps`: `eps_s = (2 + eps)/3`.
    pub fn reischuk_default(alpha: f64, beta: f64) -> Self {
        let eps = 0.25;
        SampleStrategy::Reischuk { alpha, beta, eps_s: (2.0 + eps) / 3.0, eps }
    }

    /// Sample size and gap for a segment of length `m >= 2`.
    ///
    /// Guarantees `1 <= s <= m-1` and `g > 0`. Degenerate corners where the
    /// gap formula evaluates to zero or below (e.g. `ln(theta*s) <= 0` for a
    /// one-element sample) clamp `g` to a tiny positive value.
    pub fn sample_params(&self, m: usize) -> SampleParams {
        assert!(m >= 2, "sample_params requires a segment of length >= 2");
        let mf = m as f64;
        let lnm = mf.ln();
        let (alpha, base) = match *self {
            SampleStrategy::Fr { alpha, .. } => (alpha, mf.powf(2.0 / 3.0) * lnm.cbrt()),
            SampleStrategy::FrLns { alpha, .. } => (alpha, mf.powf(2.0 / 3.0) * lnm.cbrt()),
            SampleStrategy::FrLneps { alpha, eps_l, .. } => {
                (alpha, mf.powf(2.0 / 3.0) * lnm.powf(eps_l / 3.0))
            }
            SampleStrategy::FrSn23 { alpha, .. } => (alpha, mf.powf(2.0 / 3.0)),
            SampleStrategy::Reischuk { alpha, eps_s, .. } => (alpha, mf.powf(eps_s)),
        };
        let s = (ceil_guard(alpha * base).max(1.0) as usize).min(m - 1);
        let sf = s as f64;
        let g_sq = match *self {
            SampleStrategy::Fr { beta, .. } => beta * sf * lnm,
            SampleStrategy::FrLns { beta, theta, .. } => beta * sf * (theta * sf).ln(),
            SampleStrategy::FrLneps { beta, eps_l, .. } => beta * sf * lnm.powf(eps_l),
            SampleStrategy::FrSn23 { beta, .. } => beta * sf * lnm,
            SampleStrategy::Reischuk { beta, eps, .. } => beta * sf * mf.powf(eps),
        };
        let g = g_sq.max(0.0).sqrt().max(1e-12);
        SampleParams { s, g }
    }
}

/// Moves a uniformly random `s`-subset of `seg` (without replacement) into
/// its first `s` positions: for each `i` exchange `seg[i]` with
/// `seg[i + rand_below(len-1-i)]`. No element comparisons are made and the
/// multiset of `seg` is unchanged.
pub fn place_sample<T>(seg: &mut [T], s: usize, rng: &mut Rng) -> Result<()> {
    if s > seg.len() {
        return Err(Error::InvalidArgument(format!(
            "sample size {s} exceeds segment length {}",
            seg.len()
        )));
    }
    let last = seg.len() - 1;
    for i in 0..s {
        let j = i + rng.rand_below((last - i) as u64) as usize;
        seg.swap(i, j);
    }
    Ok(())
}
