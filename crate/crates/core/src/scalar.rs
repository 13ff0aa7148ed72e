//! Exact scalars over ℚ and cyclotomic fields ℚ(ζ_N).
//!
//! A cyclotomic scalar is stored as a coefficient vector of a residue in
//! ℚ[z]/Φ_N(z), always of length deg Φ_N = φ(N). Rationals are the degree-one
//! case. Every scalar carries a cheap handle to its [`Field`], so arithmetic
//! can reduce without any global lookup.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed cyclotomic element: {0}")]
    Malformed(String),
    #[error("{n}-th roots of unity do not live in {field}")]
    NoRootOfUnity { n: u32, field: FieldSpec },
    #[error("cannot parse scalar {input:?}: {msg}")]
    Parse { input: String, msg: String },
}

/// Which field the scalars of an algebra live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Cyclotomic(u32),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(z{n})"),
        }
    }
}

struct FieldInner {
    spec: FieldSpec,
    /// Monic modulus, low degree first, leading 1 omitted.
    modulus: Vec<Rational>,
}

/// Shared handle to a field; cloning is a reference-count bump.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.spec)
    }
}

fn field_cache() -> &'static Mutex<HashMap<FieldSpec, Field>> {
    static CACHE: OnceLock<Mutex<HashMap<FieldSpec, Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of Φ_n, low degree first, by dividing x^n - 1 by
/// every Φ_d with d a proper divisor of n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_int_div(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

// Division of integer polynomials by a monic divisor that is known to be exact.
fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (t, dc) in den.iter().enumerate() {
            rem[k + t] -= &c * dc;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        if let FieldSpec::Cyclotomic(n) = spec {
            assert!(n >= 1, "cyclotomic order must be positive");
        }
        let mut cache = field_cache().lock().unwrap();
        if let Some(f) = cache.get(&spec) {
            return f.clone();
        }
        let modulus = match spec {
            // z plays no role over Q; reducing modulo z - 1 keeps one coefficient.
            FieldSpec::Rational => vec![-Rational::one()],
            FieldSpec::Cyclotomic(n) => {
                let phi = cyclotomic_polynomial(n);
                phi[..phi.len() - 1]
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect()
            }
        };
        let f = Field(Arc::new(FieldInner { spec, modulus }));
        cache.insert(spec, f.clone());
        f
    }

    pub fn rational() -> Field {
        Field::new(FieldSpec::Rational)
    }

    pub fn cyclotomic(n: u32) -> Field {
        Field::new(FieldSpec::Cyclotomic(n))
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    /// Dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.0.modulus.len()
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(&self, v: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = v;
        s
    }

    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        self.from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds a scalar from an arbitrary polynomial in z, reducing it.
    pub fn from_poly(&self, mut poly: Vec<Rational>) -> Scalar {
        self.reduce(&mut poly);
        Scalar {
            field: self.clone(),
            coeffs: poly,
        }
    }

    /// The class of z itself. Over ℚ this is 1.
    pub fn generator(&self) -> Scalar {
        let mut p = vec![Rational::zero(); 2];
        p[1] = Rational::one();
        self.from_poly(p)
    }

    /// A primitive `n`-th root of unity in this field.
    pub fn root_of_unity(&self, n: u32) -> Result<Scalar, ScalarError> {
        match self.spec() {
            FieldSpec::Rational if n == 1 => Ok(self.one()),
            FieldSpec::Rational if n == 2 => Ok(-self.one()),
            FieldSpec::Cyclotomic(m) if n >= 1 && m % n == 0 => {
                let mut p = vec![Rational::zero(); (m / n) as usize + 1];
                p[(m / n) as usize] = Rational::one();
                Ok(self.from_poly(p))
            }
            spec => Err(ScalarError::NoRootOfUnity { n, field: spec }),
        }
    }

    // Reduce in place modulo the field's monic modulus and truncate to degree.
    fn reduce(&self, poly: &mut Vec<Rational>) {
        let d = self.degree();
        let modulus = &self.0.modulus;
        if poly.len() > d {
            for k in (d..poly.len()).rev() {
                if poly[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut poly[k], Rational::zero());
                for (t, m) in modulus.iter().enumerate() {
                    if !m.is_zero() {
                        poly[k - d + t] -= &c * m;
                    }
                }
            }
        }
        poly.resize(d, Rational::zero());
    }

    /// Parses the textual scalar syntax: `p`, `p/q`, or a polynomial in `z`
    /// such as `1/2*z^2 - z + 3`.
    pub fn parse(&self, input: &str) -> Result<Scalar, ScalarError> {
        let err = |msg: &str| ScalarError::Parse {
            input: input.to_string(),
            msg: msg.to_string(),
        };
        let toks = tokenize_scalar(input).map_err(|m| err(&m))?;
        if toks.is_empty() {
            return Err(err("empty"));
        }
        let mut poly: Vec<Rational> = Vec::new();
        let mut pos = 0;
        let mut first = true;
        while pos < toks.len() {
            let mut sign = Rational::one();
            match toks[pos] {
                STok::Plus => pos += 1,
                STok::Minus => {
                    sign = -sign;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(err("expected '+' or '-' between terms")),
            }
            first = false;
            let mut coeff = Rational::one();
            let mut have_coeff = false;
            if let Some(STok::Num(n)) = toks.get(pos) {
                coeff = Rational::from_integer(n.clone());
                have_coeff = true;
                pos += 1;
                if let Some(STok::Slash) = toks.get(pos) {
                    pos += 1;
                    match toks.get(pos) {
                        Some(STok::Num(d)) if !d.is_zero() => {
                            coeff /= Rational::from_integer(d.clone());
                            pos += 1;
                        }
                        Some(STok::Num(_)) => return Err(err("zero denominator")),
                        _ => return Err(err("expected denominator")),
                    }
                }
            }
            let mut power = 0usize;
            let wants_z = if have_coeff {
                if let Some(STok::Star) = toks.get(pos) {
                    pos += 1;
                    true
                } else {
                    false
                }
            } else {
                true
            };
            if wants_z {
                match toks.get(pos) {
                    Some(STok::Z) => {
                        if self.spec() == FieldSpec::Rational {
                            return Err(err("'z' is not available over Q"));
                        }
                        pos += 1;
                        power = 1;
                        if let Some(STok::Caret) = toks.get(pos) {
                            pos += 1;
                            match toks.get(pos) {
                                Some(STok::Num(e)) => {
                                    power = usize::try_from(e.clone())
                                        .map_err(|_| err("exponent too large"))?;
                                    pos += 1;
                                }
                                _ => return Err(err("expected exponent")),
                            }
                        }
                    }
                    _ => return Err(err("expected term")),
                }
            }
            if poly.len() <= power {
                poly.resize(power + 1, Rational::zero());
            }
            poly[power] += sign * coeff;
        }
        Ok(self.from_poly(poly))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum STok {
    Num(BigInt),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize_scalar(s: &str) -> Result<Vec<STok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '+' => out.push(STok::Plus),
            '-' => out.push(STok::Minus),
            '*' => out.push(STok::Star),
            '/' => out.push(STok::Slash),
            '^' => out.push(STok::Caret),
            'z' => out.push(STok::Z),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(STok::Num(digits.parse().unwrap()));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
        i += 1;
    }
    Ok(out)
}

/// An exact element of a [`Field`].
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    coeffs: Vec<Rational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for Scalar {}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients of the reduced representative, low degree first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field != other.field {
            Err(ScalarError::FieldMismatch(self.field.spec(), other.field.spec()))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let d = self.coeffs.len();
        if d == 1 {
            return Ok(Scalar {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(self.field.zero());
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(self.field.from_poly(prod))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let mut modulus: Vec<Rational> = self.field.0.modulus.clone();
        modulus.push(Rational::one());
        let (g, s) = poly_ext_gcd(trim(self.coeffs.clone()), modulus);
        // g is a nonzero constant when self is invertible in the field
        if g.len() != 1 || g[0].is_zero() {
            return Err(ScalarError::Malformed(format!("{self} is not invertible")));
        }
        let scale = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|c| c * &scale).collect();
        Ok(self.field.from_poly(s))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    let need = q.len() + b.len() - 1;
    if out.len() < need {
        out.resize(need, Rational::zero());
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let lead = b[db].recip();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![Rational::zero()], trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (t, bt) in b.iter().enumerate() {
            rem[k + t] -= &c * bt;
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Returns (g, s) with s·a ≡ g (mod m).
fn poly_ext_gcd(a: Vec<Rational>, m: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    f.write_str("z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator impls panic on field mismatch; use the `try_*` methods when the
// fields are not known to agree.
impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar subtraction")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar multiplication")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// `self += a * b`, the inner step of every contraction.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.coeffs.len() == 1 {
            self.coeffs[0] += &a.coeffs[0] * &b.coeffs[0];
        } else {
            let p = a * b;
            for (x, y) in self.coeffs.iter_mut().zip(p.coeffs) {
                *x += y;
            }
        }
    }

    pub fn add_assign_ref(&mut self, a: &Scalar) {
        for (x, y) in self.coeffs.iter_mut().zip(&a.coeffs) {
            *x += y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let q = Field::rational();
        assert_eq!(&q.frac(1, 2) + &q.frac(1, 3), q.frac(5, 6));
        assert_eq!(&q.frac(2, 3) * &q.frac(3, 4), q.frac(1, 2));
        let x = q.frac(-7, 9);
        assert_eq!(&x + &q.zero(), x);
        assert_eq!(q.frac(4, 6).to_string(), "2/3");
        assert_eq!(q.from_int(-5).to_string(), "-5");
    }

    #[test]
    fn cyclotomic_relations() {
        let f3 = Field::cyclotomic(3);
        let z = f3.generator();
        assert_eq!(&z + &(&z * &z), f3.from_int(-1));

        let f4 = Field::cyclotomic(4);
        let i = f4.generator();
        assert_eq!(&i * &i, f4.from_int(-1));
    }

    #[test]
    fn inverse_of_root_of_unity() {
        for n in [3u32, 4, 5, 6, 8, 12] {
            let f = Field::cyclotomic(n);
            let z = f.generator();
            let expect = z.pow(n as i64 - 1).unwrap();
            assert_eq!(z.inv().unwrap(), expect, "n={n}");
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = Field::cyclotomic(5);
        assert_eq!(f.zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Field::rational().zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Field::rational().one();
        let b = Field::cyclotomic(3).one();
        assert!(matches!(a.try_add(&b), Err(ScalarError::FieldMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(ScalarError::FieldMismatch(..))));
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| {
            cyclotomic_polynomial(n)
                .into_iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        for n in 1..=30 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn roots_of_unity() {
        let f = Field::cyclotomic(12);
        for n in [1u32, 2, 3, 4, 6, 12] {
            let z = f.root_of_unity(n).unwrap();
            assert!(z.pow(n as i64).unwrap().is_one());
            for k in 1..n {
                assert!(!z.pow(k as i64).unwrap().is_one(), "n={n} k={k}");
            }
        }
        assert_eq!(f.root_of_unity(1).unwrap(), f.one());
        assert_eq!(f.root_of_unity(2).unwrap(), f.from_int(-1));
        assert!(f.root_of_unity(5).is_err());
        assert_eq!(Field::rational().root_of_unity(2).unwrap(), Field::rational().from_int(-1));
        assert!(Field::rational().root_of_unity(3).is_err());
    }

    #[test]
    fn parse_and_display() {
        let f = Field::cyclotomic(5);
        let s = f.parse("1/2*z^2 - z + 3").unwrap();
        assert_eq!(s.to_string(), "1/2*z^2 - z + 3");
        assert_eq!(f.parse(&s.to_string()).unwrap(), s);
        // z^4 = -(1 + z + z^2 + z^3) in Q(z5)
        assert_eq!(f.parse("z^4").unwrap(), f.parse("-z^3 - z^2 - z - 1").unwrap());
        assert_eq!(f.parse("-z").unwrap(), -f.generator());
        assert_eq!(Field::rational().parse("-3/6").unwrap(), Field::rational().frac(-1, 2));
        assert!(Field::rational().parse("z").is_err());
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("").is_err());
        assert!(f.parse("2 3").is_err());
        assert_eq!(f.zero().to_string(), "0");
    }
}
