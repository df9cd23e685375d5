use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

// Small values stay below this bound so that i128 intermediates never overflow.
const SMALL_LIMIT: i64 = 1 << 60;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number.
///
/// Elements of Z_(p) are the scalars whose reduced denominator is prime to p.
/// Intermediate coordinate computations may leave that subring, so locality
/// is a checked property and not part of the type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PScalar(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl PScalar {
    pub fn zero() -> Self {
        PScalar(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        PScalar(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    /// `num/den` in lowest terms; rejects a zero denominator.
    pub fn from_frac(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    /// Checked constructor for an element of Z_(p).
    pub fn local(num: i64, den: i64, p: u64) -> Result<Self> {
        let s = Self::from_frac(num, den)?;
        if !s.is_local(p) {
            return Err(Error::InvalidScalar(s.to_string(), p));
        }
        Ok(s)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        let lim = SMALL_LIMIT as i128;
        if num.abs() < lim && den < lim {
            PScalar(Repr::Small(num as i64, den as i64))
        } else {
            PScalar(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))))
        }
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n.abs() < SMALL_LIMIT && d < SMALL_LIMIT {
                return PScalar(Repr::Small(n, d));
            }
        }
        PScalar(Repr::Big(Box::new(r)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// Numerator/denominator pair, if both fit in an i64.
    pub fn to_pair(&self) -> Option<(i64, i64)> {
        match &self.0 {
            Repr::Small(n, d) => Some((*n, *d)),
            Repr::Big(b) => Some((b.numer().to_i64()?, b.denom().to_i64()?)),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_local(&self, p: u64) -> bool {
        match &self.0 {
            Repr::Small(_, d) => !(*d as u64).is_multiple_of(p),
            Repr::Big(b) => !b.denom().is_multiple_of(&BigInt::from(p)),
        }
    }

    /// p-adic valuation; `None` for zero.
    pub fn valuation(&self, p: u64) -> Option<i32> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(small_valuation(*n, p) as i32 - small_valuation(*d, p) as i32),
            Repr::Big(b) => {
                Some(int_valuation(b.numer(), p) as i32 - int_valuation(b.denom(), p) as i32)
            }
        }
    }

    /// Write a nonzero scalar as `p^v * u` and return `u^{-1}`.
    pub fn unit_part_inverse(&self, p: u64) -> PScalar {
        let v = self.valuation(p).expect("unit part of zero");
        PScalar::p_power(p, v).div(self)
    }

    pub fn inverse(&self) -> PScalar {
        match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    /// `self / other`; panics on division by zero.
    pub fn div(&self, other: &PScalar) -> PScalar {
        self * &other.inverse()
    }

    pub fn p_power(p: u64, e: i32) -> PScalar {
        let base = BigInt::from(p).pow(e.unsigned_abs());
        if e >= 0 {
            Self::from_big(BigRational::from_integer(base))
        } else {
            Self::from_big(BigRational::new_raw(BigInt::one(), base))
        }
    }

    /// Canonical representative in `[0, p^e)` of a local scalar modulo p^e.
    pub fn reduce_mod_power(&self, p: u64, e: u32) -> PScalar {
        if self.is_zero() {
            return PScalar::zero();
        }
        if let Repr::Small(n, d) = &self.0 {
            if let Some(m) = (p as i128).checked_pow(e) {
                if m < (1i128 << 62) {
                    let num = (*n as i128).rem_euclid(m);
                    if *d == 1 {
                        return Self::from_i128(num, 1);
                    }
                    let inv = mod_inverse_i128((*d as i128).rem_euclid(m), m)
                        .expect("denominator not invertible mod p^e");
                    return Self::from_i128((num * inv).rem_euclid(m), 1);
                }
            }
        }
        let modulus = BigInt::from(p).pow(e);
        let num = self.numer().mod_floor(&modulus);
        let den = self.denom().mod_floor(&modulus);
        let ext = den.extended_gcd(&modulus);
        assert!(ext.gcd.is_one(), "denominator not invertible mod p^e");
        PScalar::from_bigint((num * ext.x.mod_floor(&modulus)).mod_floor(&modulus))
    }

    pub fn abs(&self) -> PScalar {
        match &self.0 {
            Repr::Small(n, d) => PScalar(Repr::Small(n.abs(), *d)),
            Repr::Big(b) => Self::from_big(b.abs()),
        }
    }
}

fn small_valuation(mut n: i64, p: u64) -> u32 {
    let p = p as i64;
    let mut v = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

fn mod_inverse_i128(a: i128, m: i128) -> Option<i128> {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m))
}

pub(crate) fn int_valuation(n: &BigInt, p: u64) -> u32 {
    if n.is_zero() {
        return 0;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

impl fmt::Display for PScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for PScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&PScalar> for &PScalar {
    type Output = PScalar;
    fn add(self, rhs: &PScalar) -> PScalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) => rhs.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    PScalar::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    PScalar::from_i128(a * d + c * b, b * d)
                }
            }
            _ => PScalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub<&PScalar> for &PScalar {
    type Output = PScalar;
    fn sub(self, rhs: &PScalar) -> PScalar {
        self + &(-rhs)
    }
}

impl Mul<&PScalar> for &PScalar {
    type Output = PScalar;
    fn mul(self, rhs: &PScalar) -> PScalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => PScalar::zero(),
            (Repr::Small(1, 1), _) => rhs.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                PScalar::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => PScalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for PScalar {
    type Output = PScalar;
    fn neg(self) -> PScalar {
        -&self
    }
}

impl Neg for &PScalar {
    type Output = PScalar;
    fn neg(self) -> PScalar {
        match &self.0 {
            Repr::Small(n, d) => PScalar(Repr::Small(-n, *d)),
            Repr::Big(b) => PScalar::from_big(-(**b).clone()),
        }
    }
}

impl AddAssign<&PScalar> for PScalar {
    fn add_assign(&mut self, rhs: &PScalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&PScalar> for PScalar {
    fn sub_assign(&mut self, rhs: &PScalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl From<i64> for PScalar {
    fn from(n: i64) -> Self {
        PScalar::from_int(n)
    }
}
