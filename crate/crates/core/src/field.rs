//! Exact coefficient fields.
//!
//! Two families are provided: the prime fields `F_p` (a const generic over the
//! modulus, canonical residue in `[0, p)`) and the rationals backed by
//! arbitrary-precision integers. Nothing in the crate ever rounds.

use alloc::format;
use alloc::string::String;
use core::fmt::{self, Debug, Display};
use core::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_core::RngCore;

/// A field with exact arithmetic.
///
/// The methods are named after the ring operations rather than going through
/// `core::ops` so that generic code never has to juggle reference/owned
/// operator impls.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// Short identifier used in reports, e.g. `fp:32003` or `qq`.
    fn tag() -> String;
    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// A random nonzero element, used for generic linear forms.
    fn sample_nonzero<R: RngCore + ?Sized>(rng: &mut R) -> Self;
    /// Parses the textual form produced by `Display` (and plain integers).
    fn parse(s: &str) -> Option<Self>;

    /// `self - a * b`, the inner step of every elimination loop.
    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        self.sub(&a.mul(b))
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `P`, stored as the canonical representative in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

/// The default coefficient field.
pub type F32003 = Fp<32003>;

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(is_prime(P), "Fp modulus must be prime");

    #[inline]
    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp((v % P as u64) as u32)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let p = P as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }

    /// Representative in `(-P/2, P/2]`, used for printing.
    pub fn symmetric(self) -> i64 {
        if self.0 > P / 2 {
            self.0 as i64 - P as i64
        } else {
            self.0 as i64
        }
    }
}

impl<const P: u32> Field for Fp<P> {
    fn tag() -> String {
        format!("fp:{P}")
    }
    fn characteristic() -> u64 {
        P as u64
    }
    #[inline]
    fn zero() -> Self {
        Fp(0)
    }
    #[inline]
    fn one() -> Self {
        Fp::new(1)
    }
    fn from_i64(v: i64) -> Self {
        let p = P as i64;
        Fp::new(v.rem_euclid(p) as u64)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp(if s >= P as u64 { s - P as u64 } else { s } as u32)
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + (P - rhs.0))
        }
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
    #[inline]
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }
    fn sample_nonzero<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        Fp::new(1 + rng.next_u64() % (P as u64 - 1))
    }
    fn parse(s: &str) -> Option<Self> {
        let v: i64 = s.trim().parse().ok()?;
        Some(Self::from_i64(v))
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

/// Exact rational number with a positive, reduced denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

/// Shorthand used throughout the tests and the CLI.
pub type QQ = Rational;

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Image in `F_p`, or `None` if `p` divides the denominator.
    pub fn reduce_mod<const P: u32>(&self) -> Option<Fp<P>> {
        let p = BigInt::from(P);
        let num = (self.numer() % &p + &p) % &p;
        let den = (self.denom() % &p + &p) % &p;
        if den.is_zero() {
            return None;
        }
        let to_u64 = |b: &BigInt| -> u64 {
            let (_, digits) = b.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        };
        Fp::<P>::new(to_u64(&num)).div(&Fp::<P>::new(to_u64(&den)))
    }
}

impl Field for Rational {
    fn tag() -> String {
        String::from("qq")
    }
    fn characteristic() -> u64 {
        0
    }
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn sample_nonzero<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        // small integers keep Groebner coefficient growth in check
        let v = 1 + (rng.next_u32() % 9) as i64;
        if rng.next_u32() & 1 == 0 {
            Self::from_i64(v)
        } else {
            Self::from_i64(-v)
        }
    }
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Rational(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().ok()?;
                Some(Rational(BigRational::from_integer(n)))
            }
        }
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Whether a coefficient prints with a leading minus sign.
pub(crate) fn prints_negative<F: Field>(c: &F) -> bool {
    let s = format!("{c}");
    s.starts_with('-')
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F7 = Fp<7>;

    #[test]
    fn fp_axioms_small() {
        for a in 0..7u64 {
            for b in 0..7u64 {
                let (x, y) = (F7::new(a), F7::new(b));
                assert_eq!(x.add(&y).sub(&y), x);
                assert_eq!(x.mul(&y), y.mul(&x));
                if !y.is_zero() {
                    assert_eq!(x.mul(&y).div(&y).unwrap(), x);
                }
            }
        }
        assert_eq!(F7::from_i64(-1).value(), 6);
        assert_eq!(format!("{}", F7::from_i64(-1)), "-1");
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn rational_canonical() {
        let r = Rational::new(6, -4);
        assert_eq!(format!("{r}"), "-3/2");
        assert_eq!(Rational::parse("-3/2").unwrap(), r);
        assert_eq!(r.reduce_mod::<7>().unwrap(), F7::from_i64(-3).div(&F7::from_i64(2)).unwrap());
        assert!(Rational::new(1, 7).reduce_mod::<7>().is_none());
    }

    #[test]
    fn samples_are_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            assert!(!F7::sample_nonzero(&mut rng).is_zero());
            assert!(!Rational::sample_nonzero(&mut rng).is_zero());
        }
    }
}
