use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Gcd, Lcm, Sign};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rat = Rational;
pub type Int = Integer;
pub type Nat = Natural;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct RatParseError(pub String);

pub fn rat(n: i64, d: i64) -> Rat {
    Rational::from_signeds(n, d)
}

pub fn ri(n: i64) -> Rat {
    Rational::from(n)
}

pub fn zero() -> Rat {
    Rational::ZERO
}

pub fn one() -> Rat {
    Rational::ONE
}

pub fn rvec(xs: &[(i64, i64)]) -> Vec<Rat> {
    xs.iter().map(|&(n, d)| rat(n, d)).collect()
}

pub fn ivec(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&n| ri(n)).collect()
}

/// Parses "p", "-p" or "p/q" with q > 0.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let t = s.trim();
    let ok = !t.is_empty()
        && t
            .chars()
            .enumerate()
            .all(|(i, c)| c.is_ascii_digit() || c == '/' || (i == 0 && c == '-'));
    if !ok || t.matches('/').count() > 1 || t.ends_with('/') || t.starts_with('/') {
        return Err(RatParseError(s.to_string()));
    }
    if let Some((_, den)) = t.split_once('/') {
        if den.is_empty() || den.starts_with('-') {
            return Err(RatParseError(s.to_string()));
        }
    }
    Rational::from_str(t).map_err(|_| RatParseError(s.to_string()))
}

/// "p" when the denominator is one, "p/q" otherwise.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn is_integer(r: &Rat) -> bool {
    *r.denominator_ref() == 1u32
}

pub fn to_integer(r: &Rat) -> Option<Int> {
    Integer::try_from(r).ok()
}

pub fn from_int(i: &Int) -> Rat {
    Rational::from(i.clone())
}

pub fn sign(r: &Rat) -> Ordering {
    r.sign()
}

pub fn is_zero(r: &Rat) -> bool {
    r.sign() == Ordering::Equal
}

pub fn is_pos(r: &Rat) -> bool {
    r.sign() == Ordering::Greater
}

pub fn is_neg(r: &Rat) -> bool {
    r.sign() == Ordering::Less
}

pub fn int_abs(i: &Int) -> Nat {
    i.unsigned_abs_ref().clone()
}

pub fn gcd_ints<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Nat {
    let mut g = Natural::ZERO;
    for x in xs {
        g = g.gcd(x.unsigned_abs_ref());
        if g == 1u32 {
            break;
        }
    }
    g
}

pub fn lcm_denominators<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> Nat {
    let mut l = Natural::ONE;
    for x in xs {
        l = l.lcm(x.denominator_ref());
    }
    l
}

/// Scales by a positive factor so every entry is an integer and their gcd is one.
/// The zero vector is returned unchanged.
pub fn primitive_integer(v: &[Rat]) -> Vec<Int> {
    let l = Rational::from(lcm_denominators(v));
    let scaled: Vec<Int> = v
        .iter()
        .map(|x| Integer::try_from(x * &l).expect("scaled entry is integral"))
        .collect();
    let g = gcd_ints(scaled.iter());
    if g == 0u32 || g == 1u32 {
        return scaled;
    }
    let g = Integer::from(g);
    scaled.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_rat(v: &[Rat]) -> Vec<Rat> {
    primitive_integer(v).into_iter().map(Rational::from).collect()
}

pub fn ints_to_rats(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rational::from(x.clone())).collect()
}

pub fn rats_to_ints(v: &[Rat]) -> Option<Vec<Int>> {
    v.iter().map(to_integer).collect()
}

/// A rational or positive infinity. Only comparisons and the reciprocal are
/// defined when infinity is involved; arithmetic on infinity panics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    Finite(Rat),
    PlusInfinity,
}

impl ExtRat {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::PlusInfinity)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::PlusInfinity => None,
        }
    }

    pub fn finite(&self) -> &Rat {
        self.as_finite()
            .expect("arithmetic on PlusInfinity is undefined")
    }

    /// 1/x with 1/inf = 0. Panics on zero.
    pub fn recip(&self) -> Rat {
        match self {
            ExtRat::PlusInfinity => Rational::ZERO,
            ExtRat::Finite(r) => {
                assert!(!is_zero(r), "reciprocal of zero");
                Rational::ONE / r
            }
        }
    }

    pub fn parse(s: &str) -> Result<ExtRat, RatParseError> {
        if s.trim() == "inf" {
            Ok(ExtRat::PlusInfinity)
        } else {
            parse_rat(s).map(ExtRat::Finite)
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{r}"),
            ExtRat::PlusInfinity => f.write_str("inf"),
        }
    }
}

macro_rules! finite_only_op {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for ExtRat {
            type Output = ExtRat;
            fn $m(self, rhs: ExtRat) -> ExtRat {
                match (self, rhs) {
                    (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a $op b),
                    _ => panic!(concat!("ExtRat::", stringify!($m), " with PlusInfinity is undefined")),
                }
            }
        }
    };
}

finite_only_op!(Add, add, +);
finite_only_op!(Sub, sub, -);
finite_only_op!(Mul, mul, *);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("7").unwrap(), ri(7));
        assert_eq!(format_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rat(&rat(4, 2)), "2");
        for bad in ["", "1/0", "1/-2", "a", "1/2/3", "/2", "2/", "+3", "--1"] {
            assert!(parse_rat(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lowest_terms() {
        let r = rat(10, -4);
        assert_eq!(r.numerator_ref(), &Natural::from(5u32));
        assert_eq!(r.denominator_ref(), &Natural::from(2u32));
        assert!(is_neg(&r));
    }

    #[test]
    fn infinity_ordering_and_recip() {
        let big = ExtRat::Finite(ri(1_000_000_000));
        assert!(ExtRat::PlusInfinity > big);
        assert!(ExtRat::Finite(rat(1, 2)) < ExtRat::Finite(ri(1)));
        assert_eq!(ExtRat::PlusInfinity.recip(), zero());
        assert_eq!(ExtRat::Finite(rat(1, 4)).recip(), ri(4));
        assert_eq!(ExtRat::parse("inf").unwrap(), ExtRat::PlusInfinity);
        assert_eq!(ExtRat::PlusInfinity.to_string(), "inf");
    }

    #[test]
    #[should_panic]
    fn infinity_add_panics() {
        let _ = ExtRat::PlusInfinity + ExtRat::Finite(ri(1));
    }

    #[test]
    #[should_panic]
    fn infinity_sub_panics() {
        let _ = ExtRat::Finite(ri(1)) - ExtRat::PlusInfinity;
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive_rat(&rvec(&[(1, 2), (-3, 4), (0, 1)])), ivec(&[2, -3, 0]));
        assert_eq!(primitive_rat(&ivec(&[4, -6])), ivec(&[2, -3]));
        assert_eq!(primitive_rat(&ivec(&[0, 0])), ivec(&[0, 0]));
    }
}
