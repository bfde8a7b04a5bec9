//! Dense univariate polynomials over Z and Q, coefficients stored low degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Polynomial with integer coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact quotient by a monic divisor. Returns `None` when the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return self.coeffs.is_empty().then(|| self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// Euler's totient, the degree of the m-th cyclotomic polynomial.
pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|&k| k.gcd(&m) == 1).count()
}

/// The m-th cyclotomic polynomial, obtained by dividing x^m - 1 by every
/// Phi_d with d a proper divisor of m.
///
/// Panics if `m == 0`.
pub fn cyclotomic_polynomial(m: u32) -> IntPoly {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let mut coeffs = vec![BigInt::zero(); m as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[m as usize] = BigInt::one();
    let mut p = IntPoly::new(coeffs);
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        p = p
            .div_exact_monic(&cyclotomic_polynomial(d))
            .expect("Phi_d divides x^m - 1 for d | m");
    }
    p
}

/// Polynomial over Q used for reduction and inversion in the cyclotomic field.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct QPoly(pub(crate) Vec<Rational>);

impl QPoly {
    pub(crate) fn trimmed(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub(crate) fn from_int(p: &IntPoly) -> Self {
        QPoly::trimmed(p.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let zero = Rational::zero();
        QPoly::trimmed(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub(crate) fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        QPoly::trimmed(out)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub(crate) fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.0[dd].recip().expect("leading coefficient is nonzero");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                let t = &c * d;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        (QPoly::trimmed(quot), QPoly::trimmed(rem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).to_string(), "x^2 - x + 1");
        assert_eq!(cyclotomic_polynomial(1).to_string(), "x - 1");
    }

    #[test]
    fn product_over_divisors_is_x_m_minus_one() {
        for m in 1..=40u32 {
            let prod = divisors(m)
                .into_iter()
                .fold(IntPoly::from_i64(&[1]), |acc, d| acc.mul(&cyclotomic_polynomial(d)));
            let mut expected = vec![0i64; m as usize + 1];
            expected[0] = -1;
            expected[m as usize] = 1;
            assert_eq!(prod, IntPoly::from_i64(&expected), "m = {m}");
            let phi = cyclotomic_polynomial(m);
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(euler_phi(m)));
        }
    }

    #[test]
    fn totient_values() {
        let got: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(got, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn qpoly_division() {
        let q = |v: &[i64]| QPoly::trimmed(v.iter().map(|&c| Rational::from(c)).collect());
        // (x^3 - 1) = (x - 1)(x^2 + x + 1)
        let (quot, rem) = q(&[-1, 0, 0, 1]).div_rem(&q(&[-1, 1]));
        assert_eq!(quot, q(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (quot, rem) = q(&[1, 0, 1]).div_rem(&q(&[0, 2]));
        assert_eq!(quot, QPoly(vec![Rational::zero(), Rational::new(1, 2).unwrap()]));
        assert_eq!(rem, q(&[1]));
    }
}
