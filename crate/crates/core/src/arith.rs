//! Exact scalar arithmetic: arbitrary-precision rationals, factorials, and
//! the extended binomial convention used by every other module.
//!
//! All values produced by this crate are exact; there is no floating-point
//! path anywhere. [`Rat`] wraps a big rational that is always stored in
//! lowest terms with a positive denominator, so equality, ordering and
//! string output are canonical.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact rational number, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn new(numer: Int, denom: Int) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rat(BigRational::new(numer, denom))
    }

    /// Convenience constructor for small literal fractions.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(Int::from(numer), Int::from(denom))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    /// Integer power with possibly negative exponent. `0^0 = 1` by the
    /// empty-product convention; `0^k` for `k < 0` panics.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rat::one();
        }
        if self.is_zero() {
            assert!(exp > 0, "zero to a negative power");
            return Rat::zero();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let e = exp.unsigned_abs();
        Rat::new(int_pow(base.numer(), e), int_pow(base.denom(), e))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
}

impl<T: Into<Int>> From<T> for Rat {
    fn from(value: T) -> Self {
        Rat(BigRational::from_integer(value.into()))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error parsing a rational from its `p/q` string form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}")]
pub struct ParseRatError {
    input: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Parses `"p"` or `"p/q"` with `q > 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRatError {
            input: s.to_string(),
        };
        let (n, d) = match s.split_once('/') {
            None => (s, "1"),
            Some(parts) => parts,
        };
        let numer = Int::from_str(n.trim()).map_err(|_| err())?;
        let denom = Int::from_str(d.trim()).map_err(|_| err())?;
        if denom <= Int::zero() {
            return Err(err());
        }
        Ok(Rat::new(numer, denom))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rat> for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rat> for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl DivAssign<&Rat> for Rat {
    fn div_assign(&mut self, rhs: &Rat) {
        self.0 /= &rhs.0;
    }
}

impl DivAssign<Rat> for Rat {
    fn div_assign(&mut self, rhs: Rat) {
        self.0 /= rhs.0;
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// `base^exp` for a nonnegative integer exponent.
pub fn int_pow(base: &Int, exp: u64) -> Int {
    assert!(exp <= u32::MAX as u64, "exponent too large");
    base.pow(exp as u32)
}

/// `(-1)^exp`.
pub fn neg_one_pow(exp: i64) -> Rat {
    if exp.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Binomial coefficient extended to arbitrary integer arguments:
///
/// ```text
/// C(a, b) = 0                     if a < b
///         = 1                     if a = b
///         = 0                     if a > b and b < 0
///         = a! / (b! (a-b)!)      if a > b and b >= 0
/// ```
pub fn binom_conv(alpha: i64, beta: i64) -> Rat {
    if alpha < beta {
        Rat::zero()
    } else if alpha == beta {
        Rat::one()
    } else if beta < 0 {
        Rat::zero()
    } else {
        Rat::from(num_integer::binomial(Int::from(alpha), Int::from(beta)))
    }
}

/// Values that admit the product `v (v-1) (v-2) ... (v-count+1)`:
/// exact rationals and the polynomial types built on top of them.
pub trait FallingProduct: Clone {
    /// Multiplicative identity of the same shape as `self`.
    fn one_like(&self) -> Self;
    fn mul_with(&self, rhs: &Self) -> Self;
    fn sub_one(&self) -> Self;
}

impl FallingProduct for Rat {
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn mul_with(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_one(&self) -> Self {
        self - Rat::one()
    }
}

/// `start (start-1) ... (start-count+1)`; the empty product `1` when
/// `count = 0`.
pub fn falling_product<T: FallingProduct>(start: &T, count: u64) -> T {
    let mut product = start.one_like();
    let mut factor = start.clone();
    for _ in 0..count {
        product = product.mul_with(&factor);
        factor = factor.sub_one();
    }
    product
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(factorial(20), Int::from(2432902008176640000u64));
    }

    #[test]
    fn binom_convention_cases() {
        assert_eq!(binom_conv(5, 2), Rat::from(10));
        assert_eq!(binom_conv(-3, -3), Rat::one());
        assert_eq!(binom_conv(4, -1), Rat::zero());
        assert_eq!(binom_conv(-2, 3), Rat::zero());
        assert_eq!(binom_conv(2, -3), Rat::zero());
        assert_eq!(binom_conv(0, 0), Rat::one());
    }

    #[test]
    fn binom_pascal_recurrence() {
        for a in 2..=14i64 {
            for b in 1..a {
                let lhs = binom_conv(a, b);
                let rhs = binom_conv(a - 1, b - 1) + binom_conv(a - 1, b);
                assert_eq!(lhs, rhs, "Pascal fails at ({a},{b})");
            }
        }
    }

    #[test]
    fn binom_factorial_identity() {
        for a in 0..=12i64 {
            for b in 0..=a {
                let lhs = binom_conv(a, b)
                    * Rat::from(factorial(b as u64))
                    * Rat::from(factorial((a - b) as u64));
                assert_eq!(lhs, Rat::from(factorial(a as u64)));
            }
        }
    }

    #[test]
    fn falling_product_values() {
        assert_eq!(falling_product(&Rat::from(5), 3), Rat::from(60));
        assert_eq!(falling_product(&Rat::from(5), 0), Rat::one());
        assert_eq!(falling_product(&Rat::from(3), 4), Rat::zero());
        assert_eq!(falling_product(&Rat::ratio(1, 2), 2), Rat::ratio(-1, 4));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "7", "-7", "3/4", "-22/7", "2432902008176640001/3"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("6/4".parse::<Rat>().unwrap().to_string(), "3/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("1/-2".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn pow_with_negative_exponents() {
        let r = Rat::ratio(-2, 3);
        assert_eq!(r.pow(0), Rat::one());
        assert_eq!(r.pow(2), Rat::ratio(4, 9));
        assert_eq!(r.pow(-2), Rat::ratio(9, 4));
        assert_eq!(r.pow(3) * r.pow(-3), Rat::one());
        assert_eq!(Rat::zero().pow(0), Rat::one());
    }

    // Small deterministic pseudo-random sample of field axioms.
    #[test]
    fn field_axioms_on_samples() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let n = (state % 41) as i64 - 20;
            let d = (state % 9) as i64 + 1;
            Rat::ratio(n, d)
        };
        for _ in 0..200 {
            let (a, b, c) = (next(), next(), next());
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!((&a + &b) + &c, &a + (&b + &c));
            assert_eq!((&a * &b) * &c, &a * (&b * &c));
            assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                assert_eq!(a.pow(-3), Rat::one() / a.pow(3));
            }
        }
    }
}
