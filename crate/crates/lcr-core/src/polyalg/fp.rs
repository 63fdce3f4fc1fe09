//! Arithmetic in the prime field `F_p` with `p = 2^61 - 1`.
//!
//! The Mersenne modulus keeps reduction cheap: a 122-bit product folds
//! into the field with two shift-and-add passes and one conditional
//! subtraction. Inversion is Fermat exponentiation. The field is large
//! enough that Schwartz-Zippel identity testing at the degrees arising
//! here (total degree at most a few dozen) has negligible failure odds.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_core::RngCore;

/// The field modulus, the Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1u64 << 61) - 1;

/// An element of `F_p`, stored reduced to `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    /// Reduce an arbitrary `u64` into the field.
    pub fn new(v: u64) -> Fp {
        let mut r = (v & MODULUS) + (v >> 61);
        if r >= MODULUS {
            r -= MODULUS;
        }
        Fp(r)
    }

    /// Reduce a signed big integer into the field.
    pub fn from_bigint(v: &BigInt) -> Fp {
        let m = v.mod_floor(&BigInt::from(MODULUS));
        Fp(m.to_u64().expect("mod_floor result fits in u64"))
    }

    /// The canonical representative in `[0, p)`.
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Binary exponentiation.
    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Fp> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(MODULUS - 2))
        }
    }

    /// Uniform element of `[0, p)`.
    pub fn random<R: RngCore + ?Sized>(rng: &mut R) -> Fp {
        // Rejection-sample 61-bit values; only x = p itself is rejected.
        loop {
            let x = rng.next_u64() >> 3;
            if x < MODULUS {
                return Fp(x);
            }
        }
    }

    /// Uniform element of `[1, p)`.
    pub fn random_nonzero<R: RngCore + ?Sized>(rng: &mut R) -> Fp {
        loop {
            let x = Fp::random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Fold a 122-bit product back into the field.
    fn reduce128(x: u128) -> u64 {
        let lo = (x as u64) & MODULUS;
        let hi = (x >> 61) as u64;
        let s = lo + hi;
        let mut r = (s & MODULUS) + (s >> 61);
        if r >= MODULUS {
            r -= MODULUS;
        }
        r
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let mut s = self.0 + rhs.0;
        if s >= MODULUS {
            s -= MODULUS;
        }
        Fp(s)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let mut s = self.0 + MODULUS - rhs.0;
        if s >= MODULUS {
            s -= MODULUS;
        }
        Fp(s)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(Fp::reduce128(self.0 as u128 * rhs.0 as u128))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(MODULUS - self.0)
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

impl From<u64> for Fp {
    fn from(v: u64) -> Fp {
        Fp::new(v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
