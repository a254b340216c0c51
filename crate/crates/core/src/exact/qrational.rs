use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, rat, rational_to_string, ArithOp, QPoly};
use crate::error::{Error, Result};

/// Element of `Q(q)` in canonical form.
///
/// The numerator and denominator are coprime, the denominator is monic, and
/// zero is stored as `0/1`. Canonical form makes derived equality sound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRational::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = QPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            QRational { num, den }
        } else {
            let inv = lc.recip();
            QRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        QRational {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRational::from_poly(QPoly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QRational::from_poly(QPoly::q_pow(1))
    }

    pub fn q_pow(k: usize) -> Self {
        QRational::from_poly(QPoly::q_pow(k))
    }

    pub fn from_int(n: i64) -> Self {
        QRational::from_poly(QPoly::constant(rat(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        QRational::from_poly(QPoly::constant(c))
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRational {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRational) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QRational::zero();
        }
        QRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at a rational value of `q`; `None` when the denominator vanishes.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(q) / d)
        }
    }
}

/// Checked field operation in canonical form.
pub fn qrat_arith(a: &QRational, b: &QRational, op: ArithOp) -> Result<QRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl Default for QRational {
    fn default() -> Self {
        QRational::zero()
    }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        QRational::from_poly(p)
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QRational::from_poly(num);
            }
            return QRational::normalized(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QRational::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num * &rhs.num);
        }
        QRational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QRationalJson {
    num: Vec<String>,
    den: Vec<String>,
}

fn poly_to_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

fn strings_to_poly(v: &[String]) -> Result<QPoly> {
    Ok(QPoly::new(
        v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
    ))
}

impl Serialize for QRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QRationalJson {
            num: poly_to_strings(&self.num),
            den: poly_to_strings(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = QRationalJson::deserialize(d)?;
        let num = strings_to_poly(&raw.num).map_err(D::Error::custom)?;
        let den = strings_to_poly(&raw.den).map_err(D::Error::custom)?;
        QRational::new(num, den).map_err(D::Error::custom)
    }
}
