//! Elements of the cyclotomic field Q(zeta_m), stored as polynomials in zeta_m
//! reduced modulo the m-th cyclotomic polynomial. Reduction modulo Phi_m (and
//! not modulo x^m - 1) makes the coefficient vector a canonical form, so
//! equality and zero tests are exact.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{cyclotomic_polynomial, IntPoly, QPoly};
use super::Rational;
use crate::error::{Error, Result};

/// The field Q(zeta_m) together with its defining polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u32,
    modulus: IntPoly,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Result<Arc<Self>> {
        if conductor == 0 {
            return Err(Error::InvalidConductor(conductor));
        }
        Ok(Arc::new(CyclotomicField {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Phi_m, the minimal polynomial of zeta_m.
    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    /// Degree of the field over Q, i.e. phi(m).
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("cyclotomic polynomial is nonzero")
    }

    pub fn zero(self: &Arc<Self>) -> CycloNum {
        CycloNum {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloNum {
        self.from_rational(Rational::one())
    }

    pub fn from_int(self: &Arc<Self>, value: i64) -> CycloNum {
        self.from_rational(Rational::from(value))
    }

    pub fn from_rational(self: &Arc<Self>, value: Rational) -> CycloNum {
        let mut z = self.zero();
        z.coeffs[0] = value;
        z
    }

    /// Builds an element from a polynomial in zeta of any length, reducing it.
    pub fn from_poly(self: &Arc<Self>, coeffs: Vec<Rational>) -> CycloNum {
        CycloNum {
            field: Arc::clone(self),
            coeffs: self.reduce(coeffs),
        }
    }

    /// Builds an element from an already reduced coefficient vector.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<Rational>) -> Result<CycloNum> {
        if coeffs.len() != self.degree() {
            return Err(Error::CoefficientLength {
                m: self.conductor,
                expected: self.degree(),
                found: coeffs.len(),
            });
        }
        Ok(CycloNum {
            field: Arc::clone(self),
            coeffs,
        })
    }

    /// The generator zeta_m.
    pub fn zeta(self: &Arc<Self>) -> CycloNum {
        self.zeta_pow(1)
    }

    /// zeta_m^k for any integer k.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycloNum {
        let e = k.rem_euclid(self.conductor as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        self.from_poly(coeffs)
    }

    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let deg = self.degree();
        let modulus = self.modulus.coeffs();
        for top in (deg..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[top]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in modulus[..deg].iter().enumerate() {
                if !num_traits::Zero::is_zero(mj) {
                    let t = &c * &Rational::from_integer(mj.clone());
                    coeffs[top - deg + j] -= &t;
                }
            }
        }
        coeffs.resize(deg, Rational::zero());
        coeffs
    }
}

/// An element of Q(zeta_m) in canonical reduced form.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Canonical coefficients of 1, zeta, ..., zeta^(phi(m)-1).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Rational::one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// Rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Rational::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, other: &CycloNum) -> Result<()> {
        if self.field.conductor != other.field.conductor {
            Err(Error::ConductorMismatch {
                left: self.field.conductor,
                right: other.field.conductor,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check(other)?;
        Ok(CycloNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check(other)?;
        Ok(CycloNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check(other)?;
        let deg = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        Ok(self.field.from_poly(prod))
    }

    pub fn scale(&self, factor: &Rational) -> CycloNum {
        CycloNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.from_rational(r.recip()?));
        }
        let mut r0 = QPoly::from_int(&self.field.modulus);
        let mut r1 = QPoly::trimmed(self.coeffs.clone());
        let mut s0 = QPoly(Vec::new());
        let mut s1 = QPoly(vec![Rational::one()]);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // Phi_m is irreducible, so the gcd r0 is a nonzero constant.
        debug_assert_eq!(r0.degree(), Some(0));
        let c = r0.0[0].recip()?;
        let inv: Vec<Rational> = s0.0.iter().map(|x| x * &c).collect();
        Ok(self.field.from_poly(inv))
    }

    pub fn try_div(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut exp: u32) -> CycloNum {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl Hash for CycloNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for CycloNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (conductor, coefficients); a sort key, not a field order.
impl Ord for CycloNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .conductor
            .cmp(&other.field.conductor)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.field.conductor;
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match (k, c.to_string().as_str()) {
                (0, s) => s.to_string(),
                (_, "1") => format!("z{m}^{k}"),
                (_, "-1") => format!("-z{m}^{k}"),
                (_, s) => format!("{s}*z{m}^{k}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator forms panic on a conductor mismatch; the `try_*` methods report it.
macro_rules! cyclo_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                self.$checked(rhs).expect("cyclotomic operands must share a conductor")
            }
        }
        impl $trait<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}
cyclo_binop!(Add, add, try_add);
cyclo_binop!(Sub, sub, try_sub);
cyclo_binop!(Mul, mul, try_mul);

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    m: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            m: self.field.conductor,
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(deserializer)?;
        let field = CyclotomicField::new(repr.m).map_err(serde::de::Error::custom)?;
        field.from_coeffs(repr.coeffs).map_err(serde::de::Error::custom)
    }
}

/// The n roots of x^n + 1, namely zeta_{2n}^(2j+1) for j = 0..n, in that order.
pub fn nth_roots_of_minus_one(n: u32) -> Result<Vec<CycloNum>> {
    if n == 0 {
        return Err(Error::InvalidConductor(0));
    }
    let field = CyclotomicField::new(2 * n)?;
    Ok((0..n as i64).map(|j| field.zeta_pow(2 * j + 1)).collect())
}

/// Evaluates an integer polynomial at a field element (Horner).
pub fn eval_int_poly(p: &IntPoly, x: &CycloNum) -> CycloNum {
    let field = x.field();
    p.coeffs().iter().rev().fold(field.zero(), |acc, c: &BigInt| {
        &(&acc * x) + &field.from_rational(Rational::from_integer(c.clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(m: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(m).unwrap()
    }

    #[test]
    fn zeta6_times_zeta6_squared_is_minus_one() {
        let k = field(6);
        let z = k.zeta();
        assert_eq!(&z * &z.pow(2), k.from_int(-1));
        assert!((&z.pow(3) + &k.one()).is_zero());
    }

    #[test]
    fn additive_identity() {
        let k = field(8);
        let a = k.from_poly(vec![Rational::from(3), Rational::new(-1, 2).unwrap(), Rational::from(7)]);
        assert_eq!(&a + &k.zero(), a);
    }

    #[test]
    fn zeta8_difference_of_squares() {
        let k = field(8);
        let z = k.zeta();
        let lhs = &(&z + &k.one()) * &(&z - &k.one());
        assert_eq!(lhs, &z.pow(2) - &k.one());
        assert_eq!(lhs.coeffs(), &[Rational::from(-1), Rational::zero(), Rational::one(), Rational::zero()]);
    }

    #[test]
    fn inverses() {
        let k = field(6);
        assert_eq!(k.one().inv().unwrap(), k.one());
        for m in [3u32, 4, 5, 6, 8, 10, 12] {
            let k = field(m);
            assert_eq!(k.zeta().inv().unwrap(), k.zeta_pow(m as i64 - 1), "m = {m}");
        }
        let a = &k.one() + &k.zeta();
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(k.from_int(4).inv().unwrap(), k.from_rational(Rational::new(1, 4).unwrap()));
    }

    #[test]
    fn zero_tests() {
        let k6 = field(6);
        assert!(k6.zero().is_zero());
        assert!((&k6.zeta().pow(3) + &k6.one()).is_zero());
        let k8 = field(8);
        assert!(!(&k8.zeta() + &k8.one()).is_zero());
    }

    #[test]
    fn conductor_mismatch_is_an_error() {
        let a = field(6).zeta();
        let b = field(8).zeta();
        let err = Error::ConductorMismatch { left: 6, right: 8 };
        assert_eq!(a.try_add(&b), Err(err.clone()));
        assert_eq!(a.try_sub(&b), Err(err.clone()));
        assert_eq!(a.try_mul(&b), Err(err));
    }

    #[test]
    fn generator_is_a_root_of_its_modulus() {
        for m in 1..=30u32 {
            let k = field(m);
            assert!(eval_int_poly(k.modulus(), &k.zeta()).is_zero(), "m = {m}");
            assert!(k.zeta().pow(m).is_one(), "m = {m}");
        }
    }

    #[test]
    fn roots_of_minus_one() {
        let r1 = nth_roots_of_minus_one(1).unwrap();
        assert_eq!(r1, vec![field(2).from_int(-1)]);

        let k4 = field(4);
        assert_eq!(nth_roots_of_minus_one(2).unwrap(), vec![k4.zeta(), k4.zeta_pow(3)]);

        let r3 = nth_roots_of_minus_one(3).unwrap();
        let k6 = field(6);
        assert_eq!(r3.len(), 3);
        for r in &r3 {
            assert_eq!(r.pow(3), k6.from_int(-1));
        }
        assert!(r3.contains(&k6.from_int(-1)));
    }

    #[test]
    fn roots_of_minus_one_are_distinct_and_factor_x_n_plus_one() {
        for n in 1..=10u32 {
            let roots = nth_roots_of_minus_one(n).unwrap();
            let k = roots[0].field().clone();
            let minus_one = k.from_int(-1);
            for (i, r) in roots.iter().enumerate() {
                assert_eq!(r.pow(n), minus_one);
                assert!(roots[..i].iter().all(|s| s != r));
            }
            // prod (x - r) expanded with coefficients in the field
            let mut poly = vec![k.one()];
            for r in &roots {
                let mut next = vec![k.zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] = &next[i + 1] + c;
                    next[i] = &next[i] - &(c * r);
                }
                poly = next;
            }
            for (i, c) in poly.iter().enumerate() {
                let expected = if i == 0 || i == n as usize { k.one() } else { k.zero() };
                assert_eq!(c, &expected, "n = {n}, coefficient {i}");
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let k = field(12);
        let a = &k.zeta_pow(5) + &k.from_rational(Rational::new(-3, 7).unwrap());
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.starts_with("{\"m\":12,\"coeffs\":["));
        let back: CycloNum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<CycloNum>(r#"{"m":6,"coeffs":["1/1"]}"#).is_err());
    }
}
