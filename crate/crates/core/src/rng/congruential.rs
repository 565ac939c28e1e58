//! Multiplicative congruential generators `x <- a * x mod m`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruential {
    multiplier: u64,
    modulus: u64,
    x: u64,
}

pub(crate) const RANDU_MULTIPLIER: u64 = 65_539;
pub(crate) const RANDU_MODULUS: u64 = 1 << 31;
pub(crate) const MINSTD_MULTIPLIER: u64 = 16_807;
pub(crate) const MINSTD_MODULUS: u64 = (1 << 31) - 1;

impl Congruential {
    pub fn randu(seed: u32) -> Self {
        Self {
            multiplier: RANDU_MULTIPLIER,
            modulus: RANDU_MODULUS,
            x: seed as u64,
        }
    }

    pub fn minstd(seed: u32) -> Self {
        Self {
            multiplier: MINSTD_MULTIPLIER,
            modulus: MINSTD_MODULUS,
            x: seed as u64,
        }
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        // a < 2^17 and x < 2^31, so the product fits comfortably in 64 bits.
        self.x = self.multiplier * self.x % self.modulus;
        self.x as u32
    }

    /// Jumps `n` steps ahead: `x <- a^n * x mod m`.
    pub fn discard(&mut self, n: u64) {
        let jump = pow_mod(self.multiplier, n, self.modulus);
        self.x = jump * self.x % self.modulus;
    }

    pub fn word(&self) -> u32 {
        self.x as u32
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}
