use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::rational::parse_fraction;
use super::Scalar;
use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Config(format!(
                "modulus must be at least 2, got {m}"
            )));
        }
        Ok(Modulus(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod {}", self.0)
    }
}

/// Residue class modulo a runtime modulus, stored in `[0, m)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModInt {
    modulus: Modulus,
    value: u64,
}

impl ModInt {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        ModInt {
            modulus,
            value: value % modulus.0,
        }
    }

    pub fn from_i64(value: i64, modulus: Modulus) -> Self {
        let m = modulus.0 as i128;
        ModInt {
            modulus,
            value: (value as i128).rem_euclid(m) as u64,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn same_modulus(self, other: Self) -> u64 {
        assert_eq!(
            self.modulus, other.modulus,
            "residues with different moduli combined"
        );
        self.modulus.0
    }
}

impl Add<&ModInt> for ModInt {
    type Output = ModInt;
    fn add(self, rhs: &ModInt) -> ModInt {
        let m = self.same_modulus(*rhs);
        let v = (self.value as u128 + rhs.value as u128) % m as u128;
        ModInt::new(v as u64, self.modulus)
    }
}

impl Sub<&ModInt> for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: &ModInt) -> ModInt {
        self + (-*rhs)
    }
}

impl Mul<&ModInt> for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: &ModInt) -> ModInt {
        let m = self.same_modulus(*rhs);
        let v = (self.value as u128 * rhs.value as u128) % m as u128;
        ModInt::new(v as u64, self.modulus)
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        if self.value == 0 {
            self
        } else {
            ModInt::new(self.modulus.0 - self.value, self.modulus)
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ModInt {
            type Output = ModInt;
            fn $m(self, rhs: ModInt) -> ModInt {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.0)
    }
}

impl Scalar for ModInt {
    type Context = Modulus;

    fn context(&self) -> Modulus {
        self.modulus
    }

    fn zero_in(m: &Modulus) -> Self {
        ModInt::new(0, *m)
    }

    fn one_in(m: &Modulus) -> Self {
        ModInt::new(1, *m)
    }

    fn from_bigint_in(m: &Modulus, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(m.0));
        ModInt::new(r.to_u64().expect("residue below modulus"), *m)
    }

    fn from_i64_in(m: &Modulus, n: i64) -> Self {
        ModInt::from_i64(n, *m)
    }

    /// Fractions `p/q` are read as `p * q^{-1}` and fail when `q` is not a unit.
    fn parse_in(m: &Modulus, s: &str) -> Result<Self> {
        let q = parse_fraction(s)?;
        let num = Self::from_bigint_in(m, q.numer());
        let den = Self::from_bigint_in(m, q.denom());
        Ok(num * den.inverse()?)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Result<Self> {
        let m = self.modulus.0 as i128;
        let e = (self.value as i128).extended_gcd(&m);
        if e.gcd != 1 {
            return Err(Error::NotInvertible {
                value: self.value.to_string(),
                context: self.modulus.to_string(),
            });
        }
        Ok(ModInt::new(e.x.rem_euclid(m) as u64, self.modulus))
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.0,
                right: other.modulus.0,
            });
        }
        Ok(())
    }
}
