//! Seeded instance generation, reproducible across platforms and languages.

use crate::family::{Family, Interval};

/// splitmix64 generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `next() mod bound`. Slightly biased for large bounds; kept simple so
    /// other implementations reproduce it exactly.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// `m` random intervals on `[0, n)`.
///
/// Each member draws two endpoints from `0..=n`, redrawing the pair while
/// they coincide, and keeps them in ascending order.
pub fn random_family(m: usize, n: usize, seed: u64) -> Family {
    assert!(n >= 1, "random families need a nonempty ground set");
    let mut rng = Prng::new(seed);
    let span = n as u64 + 1;
    let members = (0..m)
        .map(|_| loop {
            let a = rng.below(span) as usize;
            let b = rng.below(span) as usize;
            if let Some(iv) = Interval::try_new(a.min(b), a.max(b)) {
                break iv;
            }
        })
        .collect();
    Family::from_vec_unchecked(n, members)
}
