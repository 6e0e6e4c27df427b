use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RingError;

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers, with exact big-integer arithmetic.
    Rational,
    /// The prime field of order `p`, `p < 2^16`.
    Prime(u32),
    /// The field with four elements, `GF(2)[w] / (w^2 + w + 1)`.
    Gf4,
}

impl FieldSpec {
    /// Prime field constructor; rejects composite or oversized moduli.
    pub fn prime(p: u32) -> Result<Self, RingError> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(RingError::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
            FieldSpec::Gf4 => 2,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(u64::from(*p)),
            FieldSpec::Gf4 => Some(4),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(i64::from(*p)) as u32,
                modulus: *p,
            },
            FieldSpec::Gf4 => Scalar::Gf4(Gf4::new((n.rem_euclid(2)) as u8)),
        }
    }

    /// Image of the rational `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let n = self.reduce_bigint(num);
                let d = self.reduce_bigint(den);
                let inv = d.inv().ok_or(RingError::DivisionByZero)?;
                Ok(&n * &inv)
            }
        }
    }

    fn reduce_bigint(&self, n: &BigInt) -> Scalar {
        let c = i64::from(self.characteristic());
        let r = (n % BigInt::from(c)).to_i64().unwrap_or(0);
        self.from_int(r)
    }

    /// Maps a scalar of another field into this one where a canonical map exists
    /// (reduction of rationals modulo `p`, `GF(2) -> GF4`).
    pub fn convert(&self, s: &Scalar) -> Result<Scalar, RingError> {
        match (self, s) {
            (_, s) if s.field() == *self => Ok(s.clone()),
            (FieldSpec::Prime(_) | FieldSpec::Gf4, Scalar::Rational(q)) => {
                self.from_ratio(q.numer(), q.denom())
            }
            (FieldSpec::Gf4, Scalar::Prime { value, modulus: 2 }) => {
                Ok(Scalar::Gf4(Gf4::new(*value as u8)))
            }
            _ => Err(RingError::NoFieldMap {
                from: s.field(),
                to: *self,
            }),
        }
    }

    /// All elements of a finite field in a fixed order; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(
                (0..*p)
                    .map(|value| Scalar::Prime { value, modulus: *p })
                    .collect(),
            ),
            FieldSpec::Gf4 => Some(Gf4::ALL.iter().map(|&g| Scalar::Gf4(g)).collect()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Gf4 => write!(f, "GF4"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the four-element field, stored as `b0 + b1*w` in the low two bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf4(u8);

// w^2 = w + 1
const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// The primitive element `w`.
    pub const W: Gf4 = Gf4(2);
    pub const W_PLUS_ONE: Gf4 = Gf4(3);
    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    pub fn new(bits: u8) -> Self {
        Gf4(bits & 3)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn add(self, other: Gf4) -> Gf4 {
        Gf4(self.0 ^ other.0)
    }

    pub fn mul(self, other: Gf4) -> Gf4 {
        Gf4(GF4_MUL[self.0 as usize][other.0 as usize])
    }

    pub fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            _ => Some(Gf4(2)),
        }
    }
}

/// A field element tagged with its field.
///
/// Arithmetic between scalars of different fields is a logic error and panics;
/// polynomial operations check ring compatibility before touching coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
    Gf4(Gf4),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
            Scalar::Gf4(_) => FieldSpec::Gf4,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Gf4(g) => g.0 == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Gf4(g) => g.0 == 1,
        }
    }

    /// Whether the printed form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Gf4(g) => Scalar::Gf4(g.inv()?),
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }
}

fn pow_mod(b: u32, mut e: u32, m: u32) -> u32 {
    let m64 = u64::from(m);
    let mut acc = 1u64 % m64;
    let mut b64 = u64::from(b % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b64 % m64;
        }
        b64 = b64 * b64 % m64;
        e >>= 1;
    }
    acc as u32
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            (Scalar::Gf4(a), Scalar::Gf4(b)) => Scalar::Gf4(a.add(*b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: ((u64::from(*a) * u64::from(*b)) % u64::from(*p)) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Gf4(a), Scalar::Gf4(b)) => Scalar::Gf4(a.mul(*b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Gf4(a) => Scalar::Gf4(*a),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Gf4(g) => match g.0 {
                0 => write!(f, "0"),
                1 => write!(f, "1"),
                2 => write!(f, "w"),
                _ => write!(f, "w + 1"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_field_axioms_exhaustive() {
        let all = Gf4::ALL;
        for a in all {
            assert_eq!(a.add(Gf4::ZERO), a);
            assert_eq!(a.mul(Gf4::ONE), a);
            assert_eq!(a.add(a), Gf4::ZERO);
            if a != Gf4::ZERO {
                assert_eq!(a.mul(a.inv().unwrap()), Gf4::ONE);
            } else {
                assert!(a.inv().is_none());
            }
            for b in all {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in all {
                    assert_eq!(a.add(b).add(c), a.add(b.add(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
        // w is primitive: w, w^2, w^3 = 1 runs through the nonzero elements
        let w2 = Gf4::W.mul(Gf4::W);
        assert_eq!(w2, Gf4::W_PLUS_ONE);
        assert_eq!(w2.mul(Gf4::W), Gf4::ONE);
    }

    #[test]
    fn prime_field_inverse_and_char() {
        let f = FieldSpec::prime(7).unwrap();
        for x in f.elements().unwrap().iter().skip(1) {
            assert!((x * &x.inv().unwrap()).is_one());
        }
        let two = FieldSpec::Prime(2);
        assert!((&two.one() + &two.one()).is_zero());
        assert!(FieldSpec::prime(15).is_err());
        assert!(FieldSpec::prime(65537).is_err());
    }

    #[test]
    fn ratio_in_prime_field() {
        let f = FieldSpec::Prime(3);
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half, f.from_int(2));
        assert!(FieldSpec::Prime(2)
            .from_ratio(&BigInt::from(1), &BigInt::from(2))
            .is_err());
    }

    #[test]
    fn negative_rationals_reduce() {
        let f = FieldSpec::Prime(5);
        let q = FieldSpec::Rational.from_ratio(&BigInt::from(-3), &BigInt::from(2)).unwrap();
        // -3/2 = -3 * 3 = -9 = 1 mod 5
        assert_eq!(f.convert(&q).unwrap(), f.from_int(1));
    }
}
