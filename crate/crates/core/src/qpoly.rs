//! Exact polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored densely, index = exponent, with no trailing
//! zeros; the zero polynomial is the empty vector. This is plenty for the
//! generating functions that show up here: everything lives below degree
//! `C(n,2)`.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `c * q^k`.
    pub fn monomial(coeff: BigInt, exponent: usize) -> Self {
        if coeff.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = coeff;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Dense coefficient slice, index = exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the leading term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term; `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Exact division in `Z[q]`; fails with [`Error::NotDivisible`] when
    /// the divisor does not divide `self` (including division by zero).
    pub fn exact_divide(&self, divisor: &QPolynomial) -> Result<QPolynomial, Error> {
        if divisor.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        let deg_a = self.coeffs.len() - 1;
        let deg_b = divisor.coeffs.len() - 1;
        if deg_a < deg_b {
            return Err(Error::NotDivisible);
        }
        let lead = &divisor.coeffs[deg_b];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); deg_a - deg_b + 1];
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[deg_b + k]);
            if top.is_zero() {
                continue;
            }
            let (factor, leftover) = num_integer::div_rem(top, lead.clone());
            if !leftover.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, b) in divisor.coeffs[..deg_b].iter().enumerate() {
                rem[k + j] -= &factor * b;
            }
            quot[k] = factor;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(QPolynomial::from_coeffs(quot))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: usize) -> QPolynomial {
    QPolynomial {
        coeffs: vec![BigInt::one(); n],
    }
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`; the empty product is 1.
pub fn q_factorial(n: usize) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for k in 1..=n {
        acc = &acc * &q_int(k);
    }
    acc
}

/// The maj generating function over the standard tableaux of `shape`,
/// via the q-analog of the hook length formula:
/// `q^{b(λ)} [n]_q! / Π_c [h_c]_q`.
///
/// Its coefficients are the fake degrees of the shape; the lowest and
/// highest exponents are the min and max of maj over `SYT(λ)`.
pub fn stanley_maj_poly(shape: &Partition) -> QPolynomial {
    let n = shape.size();
    let mut hooks: Vec<usize> = shape
        .cells()
        .map(|c| shape.hook_length(c).expect("cell comes from the shape"))
        .collect();
    // Divide by the large hooks first; keeps intermediate degrees falling.
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    let mut poly = q_factorial(n);
    for h in hooks {
        poly = poly
            .exact_divide(&q_int(h))
            .expect("hook quotient is always a polynomial");
    }
    poly.shift(shape.b_stat() as usize)
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !magnitude.is_one() || exp == 0;
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match exp {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{exp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl FromStr for QPolynomial {
    type Err = Error;

    /// Parses the display form, e.g. `1 + 2q + 2q^2 + q^3`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse(String::new()));
        }
        if s == "0" {
            return Ok(QPolynomial::zero());
        }
        let normalized = s.replace(" - ", " + -");
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in normalized.split(" + ") {
            let term = term.trim();
            let (coeff_part, exp) = match term.split_once('q') {
                None => (term, 0usize),
                Some((c, rest)) => {
                    let exp = match rest.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| Error::Parse(term.to_string()))?,
                        None if rest.is_empty() => 1,
                        None => return Err(Error::Parse(term.to_string())),
                    };
                    (c, exp)
                }
            };
            let coeff = match coeff_part.trim() {
                "" => BigInt::one(),
                "-" => -BigInt::one(),
                c => c.parse().map_err(|_| Error::Parse(term.to_string()))?,
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += coeff;
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

impl Serialize for QPolynomial {
    /// JSON form: array of decimal coefficient strings, index = exponent.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}
