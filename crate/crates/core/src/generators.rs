//! Input families for the benchmark harness.
//!
//! All families produce `i64` values. Except for `onezero` (a shuffled
//! multiset of ones and zeros) and `organpipe` (each of `1..=n/2` twice),
//! every family is a permutation of `1..=n`.

use crate::rng::Rng;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Uniformly random permutation of `1..=n`.
    Random,
    /// `ceil(n/2)` ones and `floor(n/2)` zeros, uniformly shuffled.
    Onezero,
    /// `1, 2, ..., n`.
    Sorted,
    /// Sorted sequence rotated left once: `2, 3, ..., n, 1`.
    Rotated,
    /// Rising then falling: `1, ..., n/2, n/2, ..., 1`. Requires even `n`.
    Organpipe,
    /// Musser's median-of-3 killer permutation. Requires `n % 4 == 0`.
    M3killer,
    /// The m3killer with two large interior stretches re-shuffled, which
    /// hides the adversarial structure from constant-factor inspection
    /// while keeping its tails. Requires `n % 4 == 0`.
    Twofaced,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Random,
        Family::Onezero,
        Family::Sorted,
        Family::Rotated,
        Family::Organpipe,
        Family::M3killer,
        Family::Twofaced,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Onezero => "onezero",
            Family::Sorted => "sorted",
            Family::Rotated => "rotated",
            Family::Organpipe => "organpipe",
            Family::M3killer => "m3killer",
            Family::Twofaced => "twofaced",
        }
    }

    /// Whether the family depends on the seed.
    pub fn is_randomized(&self) -> bool {
        matches!(self, Family::Random | Family::Onezero | Family::Twofaced)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    pub family: Family,
    pub n: usize,
    /// Ignored by the deterministic families.
    pub seed: u64,
}

/// Fisher-Yates shuffle of a slice with the crate generator.
fn shuffle(x: &mut [i64], rng: &mut Rng) {
    for i in (1..x.len()).rev() {
        let j = rng.rand_below(i as u64) as usize;
        x.swap(i, j);
    }
}

pub fn generate(spec: &SequenceSpec) -> Result<Vec<i64>> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidArgument("sequence length must be positive".into()));
    }
    match spec.family {
        Family::Random => {
            let mut x: Vec<i64> = (1..=n as i64).collect();
            shuffle(&mut x, &mut Rng::new(spec.seed));
            Ok(x)
        }
        Family::Onezero => {
            let ones = n.div_ceil(2);
            let mut x = vec![1i64; ones];
            x.resize(n, 0);
            shuffle(&mut x, &mut Rng::new(spec.seed));
            Ok(x)
        }
        Family::Sorted => Ok((1..=n as i64).collect()),
        Family::Rotated => Ok((2..=n as i64).chain([1]).collect()),
        Family::Organpipe => {
            if n % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "organpipe requires even n, got {n}"
                )));
            }
            let half = (n / 2) as i64;
            Ok((1..=half).chain((1..=half).rev()).collect())
        }
        Family::M3killer => m3killer(n),
        Family::Twofaced => {
            let mut x = m3killer(n)?;
            let log2n = n.ilog2() as usize;
            // 1-based position ranges [4 log2 n, n/2 - 1] and
            // [n/2 + 4 log2 n - 1, n - 2], shuffled with one shared stream
            let lo1 = 4 * log2n;
            let hi1 = n / 2 - 1;
            let lo2 = n / 2 + 4 * log2n - 1;
            let hi2 = n - 2;
            if lo1 > hi1 || lo2 > hi2 {
                return Err(Error::InvalidArgument(format!(
                    "twofaced requires n large enough for its shuffle ranges, got {n}"
                )));
            }
            let mut rng = Rng::new(spec.seed);
            shuffle(&mut x[lo1 - 1..hi1], &mut rng);
            shuffle(&mut x[lo2 - 1..hi2], &mut rng);
            Ok(x)
        }
    }
}

/// Musser's median-of-3 killer: with `k = n/2` and 1-based positions,
/// odd `i <= k-1` holds `i`; even `i <= k-2` holds `k+i-1`;
/// `k <= i <= 2k-2` holds `2(i-k+1)`; the last two positions hold
/// themselves. A deterministic median-of-3 quickselect that picks the
/// middle element keeps choosing near-minimal pivots on it.
fn m3killer(n: usize) -> Result<Vec<i64>> {
    if n % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "m3killer requires n divisible by 4, got {n}"
        )));
    }
    let k = n / 2;
    let mut x = vec![0i64; n];
    for i in 1..=n {
        x[i - 1] = if i == 2 * k - 1 || i == 2 * k {
            i as i64
        } else if i >= k {
            2 * (i - k + 1) as i64
        } else if i % 2 == 1 {
            i as i64
        } else {
            (k + i - 1) as i64
        };
    }
    Ok(x)
}
