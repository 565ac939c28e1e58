//! 32-bit Mersenne Twister (MT19937) with the reference `init_genrand` seeding.

const N: usize = 624;
const M: usize = 397;
const MATRIX_A: u32 = 0x9908_b0df;
const UPPER_MASK: u32 = 0x8000_0000;
const LOWER_MASK: u32 = 0x7fff_ffff;
const INIT_MULTIPLIER: u32 = 1_812_433_253;

pub(crate) const STATE_WORDS: usize = N;

#[derive(Clone, PartialEq, Eq)]
pub struct Mt19937 {
    mt: [u32; N],
    index: usize,
}

impl std::fmt::Debug for Mt19937 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Mt19937")
            .field("index", &self.index)
            .field("mt[0]", &self.mt[0])
            .finish_non_exhaustive()
    }
}

impl Mt19937 {
    pub fn new(seed: u32) -> Self {
        let mut mt = [0u32; N];
        mt[0] = seed;
        for i in 1..N {
            let prev = mt[i - 1];
            mt[i] = INIT_MULTIPLIER
                .wrapping_mul(prev ^ (prev >> 30))
                .wrapping_add(i as u32);
        }
        // index == N forces a twist before the first output, as in the reference code.
        Self { mt, index: N }
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        if self.index >= N {
            self.twist();
        }
        let y = self.mt[self.index];
        self.index += 1;
        temper(y)
    }

    /// Advances by `n` outputs without tempering the discarded words.
    pub fn discard(&mut self, mut n: u64) {
        while n > 0 {
            if self.index >= N {
                self.twist();
            }
            let available = (N - self.index) as u64;
            let step = available.min(n);
            self.index += step as usize;
            n -= step;
        }
    }

    pub fn words(&self) -> &[u32; N] {
        &self.mt
    }

    pub fn index(&self) -> usize {
        self.index
    }

    fn twist(&mut self) {
        let mt = &mut self.mt;
        for i in 0..N {
            let y = (mt[i] & UPPER_MASK) | (mt[(i + 1) % N] & LOWER_MASK);
            let mag = if y & 1 == 0 { 0 } else { MATRIX_A };
            mt[i] = mt[(i + M) % N] ^ (y >> 1) ^ mag;
        }
        self.index = 0;
    }
}

#[inline]
fn temper(mut y: u32) -> u32 {
    y ^= y >> 11;
    y ^= (y << 7) & 0x9d2c_5680;
    y ^= (y << 15) & 0xefc6_0000;
    y ^= y >> 18;
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_default_seed() {
        let mut mt = Mt19937::new(5489);
        assert_eq!(mt.next_u32(), 3_499_211_612);
        assert_eq!(mt.next_u32(), 581_869_302);
        assert_eq!(mt.next_u32(), 3_890_346_734);
    }

    #[test]
    fn discard_matches_stepping_across_twists() {
        for n in [0u64, 1, 623, 624, 625, 1247, 1248, 5000] {
            let mut a = Mt19937::new(42);
            let mut b = Mt19937::new(42);
            for _ in 0..n {
                a.next_u32();
            }
            b.discard(n);
            assert_eq!(a.next_u32(), b.next_u32(), "n = {n}");
            assert_eq!(a, b);
        }
    }
}
