//! Seedable pseudo-random number generation.
//!
//! One fixed generator is used everywhere in the crate so that a (seed,
//! input) pair reproduces a run bit-exactly: xoshiro256** with the state
//! expanded from the 64-bit seed by SplitMix64. Not cryptographic.

/// Advances a SplitMix64 state and returns the next output.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// xoshiro256** generator with a recorded seed.
#[derive(Debug, Clone)]
pub struct Rng {
    state: [u64; 4],
    seed: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let mut state = [0u64; 4];
        for w in state.iter_mut() {
            *w = splitmix64(&mut sm);
        }
        // SplitMix64 never yields four zero words for any seed, but keep the
        // generator well-defined regardless.
        if state == [0; 4] {
            state[0] = 1;
        }
        Rng { state, seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform integer in the closed range `0..=bound`.
    ///
    /// Unbiased via rejection of the partial top interval of the 64-bit
    /// output range.
    pub fn rand_below(&mut self, bound: u64) -> u64 {
        if bound == u64::MAX {
            return self.next_u64();
        }
        let range = bound + 1;
        // 2^64 mod range; draws below this threshold are discarded.
        let threshold = range.wrapping_neg() % range;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % range;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..1000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn different_seeds_differ() {
        let mut a = Rng::new(1);
        let mut b = Rng::new(2);
        let same = (0..100).filter(|_| a.next_u64() == b.next_u64()).count();
        assert!(same < 5);
    }

    #[test]
    fn rand_below_is_inclusive_and_in_range() {
        let mut rng = Rng::new(7);
        let mut seen_max = false;
        for _ in 0..10_000 {
            let v = rng.rand_below(6);
            assert!(v <= 6);
            if v == 6 {
                seen_max = true;
            }
        }
        assert!(seen_max);
        assert_eq!(rng.rand_below(0), 0);
    }

    #[test]
    fn rand_below_roughly_uniform() {
        let mut rng = Rng::new(99);
        let trials = 100_000usize;
        let mut counts = [0usize; 10];
        for _ in 0..trials {
            counts[rng.rand_below(9) as usize] += 1;
        }
        // chi-square with 9 dof; 99.9th percentile is about 27.9
        let expected = trials as f64 / 10.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        assert!(chi2 < 27.9, "chi2 = {chi2}");
    }
}
