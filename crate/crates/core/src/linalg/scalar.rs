use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::LinalgError;

/// Largest admissible characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 61;

/// The base field of every space, map and matrix in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field of the given characteristic.
    Prime(u64),
}

impl Field {
    /// Validates `p` and returns the prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p >= MAX_PRIME {
            return Err(LinalgError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    fn embed_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Parses `"3"`, `"-1"`, `"−1"` or `"2/3"`. Over `F_p` a fraction means
    /// numerator times the inverse of the denominator.
    pub fn parse(self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::ScalarParse(text.to_string());
        let cleaned: String = text.trim().replace('\u{2212}', "-");
        if cleaned.is_empty() {
            return Err(bad());
        }
        let (num, den) = match cleaned.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (cleaned.as_str(), None),
        };
        let parse_int = |s: &str| -> Result<BigInt, LinalgError> {
            let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse::<BigInt>().map_err(|_| bad())
        };
        let n = parse_int(num)?;
        let d = match den {
            Some(d) => parse_int(d)?,
            None => BigInt::one(),
        };
        let numerator = self.embed_bigint(&n);
        let denominator = self.embed_bigint(&d);
        let inv = denominator
            .inv()
            .ok_or_else(|| LinalgError::ZeroDenominator(text.to_string()))?;
        Ok(&numerator * &inv)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of ℚ (always normalized) or of `F_p` (always reduced).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Integer power; negative exponents invert first.
    ///
    /// # Panics
    /// On a negative power of zero.
    pub fn pow(&self, exp: i64) -> Scalar {
        let base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "scalar field mismatch: {} vs {}",
                self.field(),
                other.field()
            );
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *modulus as u128;
                Scalar::Residue {
                    value: s as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve(limit: usize) -> Vec<bool> {
        let mut is = vec![true; limit];
        is[0] = false;
        is[1] = false;
        for i in 2..limit {
            if is[i] {
                let mut j = i * i;
                while j < limit {
                    is[j] = false;
                    j += i;
                }
            }
        }
        is
    }

    #[test]
    fn primality_matches_sieve() {
        let s = sieve(5000);
        for (n, &expected) in s.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expected, "n = {n}");
        }
        assert!(is_prime(2305843009213693951)); // 2^61 - 1
        assert!(!is_prime(2305843009213693953));
    }

    #[test]
    fn prime_field_validation() {
        assert_eq!(Field::prime(7), Ok(Field::Prime(7)));
        assert_eq!(Field::prime(4), Err(LinalgError::NotPrime(4)));
        assert_eq!(Field::prime(1), Err(LinalgError::NotPrime(1)));
        assert_eq!(
            Field::prime(2305843009213693951),
            Ok(Field::Prime(2305843009213693951))
        );
        assert!(matches!(
            Field::prime(18446744073709551557),
            Err(LinalgError::PrimeTooLarge(_))
        ));
    }

    #[test]
    fn rationals_stay_normalized() {
        let q = Field::Rational;
        let a = q.parse("4/6").unwrap();
        assert_eq!(a.to_string(), "2/3");
        assert_eq!(q.parse("-2/-4").unwrap().to_string(), "1/2");
        let c = &a + &q.parse("1/3").unwrap();
        assert!(c.is_one());
        assert_eq!(q.parse("−1").unwrap(), q.from_i64(-1));
        assert_eq!(q.parse("3/-6").unwrap().to_string(), "-1/2");
        for bad in ["", "x", "1/", "/2", "1.5", "--1", "1/2/3"] {
            assert!(q.parse(bad).is_err(), "{bad:?}");
        }
        assert!(matches!(
            q.parse("1/0"),
            Err(LinalgError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn residues() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1).to_string(), "6");
        assert_eq!(f.parse("2/3").unwrap(), f.from_i64(3)); // 2 * 5 = 10 = 3
        let two = f.from_i64(2);
        assert_eq!(two.pow(3), f.one());
        assert_eq!(two.pow(-1), f.from_i64(4));
        assert!(f.parse("1/7").is_err());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(5).one();
    }
}
