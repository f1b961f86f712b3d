//! Exact arithmetic in ℚ(√5): numbers of the form `a + b√5` with rational
//! `a`, `b` in lowest terms. Field operations are closed and exact, and the
//! sign of a value is decided without any floating-point evaluation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `a + b√5` with arbitrary-precision rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadNumber {
    a: BigRational,
    b: BigRational,
}

impl QuadNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadNumber { a, b }
    }

    /// The rational `num/den` (no root part).
    ///
    /// # Panics
    /// If `den` is zero.
    pub fn rational(num: i64, den: i64) -> Self {
        QuadNumber {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
        }
    }

    /// `(a_num/a_den) + (b_num/b_den)·√5`.
    ///
    /// # Panics
    /// If either denominator is zero.
    pub fn with_root(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        QuadNumber {
            a: BigRational::new(BigInt::from(a_num), BigInt::from(a_den)),
            b: BigRational::new(BigInt::from(b_num), BigInt::from(b_den)),
        }
    }

    pub fn from_integer(v: i64) -> Self {
        QuadNumber::rational(v, 1)
    }

    pub fn zero() -> Self {
        QuadNumber::from_integer(0)
    }

    pub fn one() -> Self {
        QuadNumber::from_integer(1)
    }

    /// Rational part.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √5.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: `-1`, `0`, or `+1`. When `a` and `b` have opposite strict
    /// signs the comparison reduces to `a²` versus `5b²`, which never ties
    /// for non-zero rationals because √5 is irrational.
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (_, 0) => sa,
            (0, _) => sb,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                let a_sq = &self.a * &self.a;
                let b_sq_times_5 = &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
                match a_sq.cmp(&b_sq_times_5) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("a² = 5b² forces a = b = 0 over the rationals"),
                }
            }
        }
    }

    /// Multiplicative inverse via the conjugate:
    /// `1/(a + b√5) = (a − b√5)/(a² − 5b²)`.
    ///
    /// # Panics
    /// If the value is zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in ℚ(√5)");
        let norm =
            &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
        QuadNumber {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
        }
    }

    /// Nearest double, `a + b·√5` evaluated in floating point.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().expect("rational part fits in f64");
        let b = self.b.to_f64().expect("root coefficient fits in f64");
        a + b * 5.0_f64.sqrt()
    }
}

fn rational_sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for QuadNumber {
    type Output = QuadNumber;
    fn add(self, rhs: QuadNumber) -> QuadNumber {
        QuadNumber {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for QuadNumber {
    type Output = QuadNumber;
    fn sub(self, rhs: QuadNumber) -> QuadNumber {
        QuadNumber {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Mul for QuadNumber {
    type Output = QuadNumber;
    fn mul(self, rhs: QuadNumber) -> QuadNumber {
        let five = BigRational::from_integer(BigInt::from(5));
        QuadNumber {
            a: &self.a * &rhs.a + &self.b * &rhs.b * five,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for QuadNumber {
    type Output = QuadNumber;
    fn neg(self) -> QuadNumber {
        QuadNumber {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Div for QuadNumber {
    type Output = QuadNumber;
    // Field division is multiplication by the conjugate inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: QuadNumber) -> QuadNumber {
        let inv = rhs.inverse();
        self * inv
    }
}

impl fmt::Display for QuadNumber {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Unit coefficients print as bare √5.
        fn root_term(c: &BigRational) -> String {
            if c.is_one() {
                "√5".to_string()
            } else {
                format!("{c}√5")
            }
        }
        if self.b.is_zero() {
            return write!(out, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b.is_positive() {
                return write!(out, "{}", root_term(&self.b));
            }
            return write!(out, "-{}", root_term(&-&self.b));
        }
        if self.b.is_positive() {
            write!(out, "{} + {}", self.a, root_term(&self.b))
        } else {
            write!(out, "{} - {}", self.a, root_term(&-&self.b))
        }
    }
}
