//! Exact scalar fields: arbitrary-precision rationals and prime fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
pub use num_traits::{One, Zero};
use num_traits::{Signed, ToPrimitive};

/// An exact field usable as the ground field of an algebra.
///
/// The arithmetic operators are required by value; the `*_ref` helpers exist
/// so that elimination loops over big rationals can avoid needless clones.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;

    /// Short human readable name, e.g. `Q` or `F_5`.
    fn field_name() -> String;

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        *self = self.sub_ref(&prod);
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Distinct roots in the field of the polynomial with coefficients
    /// `coeffs[0] + coeffs[1] x + ...`. The zero polynomial has no roots
    /// reported.
    fn roots(coeffs: &[Self]) -> Vec<Self>;

    /// Numerator/denominator pair used by the JSON formats. Residues mod p
    /// are reported as `(r, 1)` with `0 <= r < p`.
    fn to_fraction(&self) -> (BigInt, BigInt);

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self>;
}

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic() -> u64 {
        0
    }

    fn field_name() -> String {
        "Q".to_string()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        // integer fast path keeps the common small cases allocation-light
        if a.is_integer() && b.is_integer() && self.is_integer() {
            let v = self.numer() - a.numer() * b.numer();
            *self = BigRational::from_integer(v);
            return;
        }
        *self -= a * b;
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
}

fn trim<F: Field>(coeffs: &[F]) -> Vec<F> {
    let mut v = coeffs.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn eval<F: Field>(coeffs: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul_ref(x).add_ref(c);
    }
    acc
}

/// Trial-division divisor list; `None` when the number is too large to factor
/// cheaply.
fn positive_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut poly = trim(coeffs);
    let mut roots = Vec::new();
    if poly.len() <= 1 {
        return roots;
    }
    if poly[0].is_zero() {
        roots.push(BigRational::zero());
        while poly.first().is_some_and(|c| c.is_zero()) {
            poly.remove(0);
        }
    }
    if poly.len() <= 1 {
        return roots;
    }
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (Some(ps), Some(qs)) = (
        positive_divisors(&ints[0]),
        positive_divisors(ints.last().unwrap()),
    ) else {
        return roots;
    };
    let mut seen = std::collections::BTreeSet::new();
    for &p in &ps {
        for &q in &qs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(
                    BigInt::from(p) * BigInt::from(sign),
                    BigInt::from(q),
                );
                if seen.contains(&cand) {
                    continue;
                }
                seen.insert(cand.clone());
                if eval(&poly, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// The prime field `Z/PZ`. `P` must be prime; this is not checked at the
/// type level, use [`is_prime`] before instantiating with untrusted input.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }

    fn characteristic() -> u64 {
        P
    }

    fn field_name() -> String {
        format!("F_{P}")
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        let poly = trim(coeffs);
        if poly.len() <= 1 {
            return Vec::new();
        }
        if P <= 1 << 16 {
            return (0..P)
                .map(Fp)
                .filter(|x| eval(&poly, x).is_zero())
                .collect();
        }
        let mut roots = Vec::new();
        let mut poly = poly;
        if poly[0].is_zero() {
            roots.push(Fp(0));
            while poly.first().is_some_and(|c| c.is_zero()) {
                poly.remove(0);
            }
        }
        // split off the product of the distinct linear factors, then split it
        let x = vec![Fp(0), Fp(1)];
        let xp = poly::powmod(&x, P, &poly);
        let g = poly::gcd(&poly, &poly::sub(&xp, &x));
        split_linear(&g, &mut roots);
        roots.sort();
        roots.dedup();
        roots
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.0), BigInt::one())
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let n = num.mod_floor(&p).to_u64()?;
        let d = den.mod_floor(&p).to_u64()?;
        if d == 0 {
            None
        } else {
            Some(Fp(n) / Fp(d))
        }
    }
}

/// Equal-degree splitting of a squarefree product of distinct linear factors
/// over a large prime field, with deterministic shifts.
fn split_linear<const P: u64>(g: &[Fp<P>], out: &mut Vec<Fp<P>>) {
    let g = poly::monic(g);
    match g.len() {
        0 | 1 => {}
        2 => out.push(-g[0]),
        _ => {
            for shift in 0..P {
                let h = vec![Fp(shift % P), Fp(1)];
                let t = poly::powmod(&h, (P - 1) / 2, &g);
                let d = poly::gcd(&g, &poly::sub(&t, &[Fp(1)]));
                if d.len() > 1 && d.len() < g.len() {
                    let (q, _) = poly::divrem(&g, &d);
                    split_linear(&d, out);
                    split_linear(&q, out);
                    return;
                }
            }
        }
    }
}

/// Dense univariate polynomial helpers (coefficients low to high).
pub mod poly {
    use super::Field;

    pub fn trim<F: Field>(p: &[F]) -> Vec<F> {
        super::trim(p)
    }

    pub fn eval<F: Field>(p: &[F], x: &F) -> F {
        super::eval(p, x)
    }

    pub fn monic<F: Field>(p: &[F]) -> Vec<F> {
        let p = trim(p);
        match p.last() {
            None => p,
            Some(lead) => {
                let inv = lead.inv();
                p.iter().map(|c| c.mul_ref(&inv)).collect()
            }
        }
    }

    pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        let n = a.len().max(b.len());
        let out: Vec<F> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(F::zero);
                let y = b.get(i).cloned().unwrap_or_else(F::zero);
                x - y
            })
            .collect();
        trim(&out)
    }

    pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![F::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
            }
        }
        trim(&out)
    }

    pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
        let b = trim(b);
        assert!(!b.is_empty(), "polynomial division by zero");
        let mut r = trim(a);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![F::zero(); r.len() - b.len() + 1];
        let lead_inv = b.last().unwrap().inv();
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap().mul_ref(&lead_inv);
            for (i, bi) in b.iter().enumerate() {
                r[shift + i].sub_mul_assign(&c, bi);
            }
            q[shift] = c;
            r = trim(&r);
        }
        (trim(&q), r)
    }

    pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        let mut a = trim(a);
        let mut b = trim(b);
        while !b.is_empty() {
            let (_, r) = divrem(&a, &b);
            a = b;
            b = r;
        }
        monic(&a)
    }

    pub fn powmod<F: Field>(base: &[F], mut e: u64, m: &[F]) -> Vec<F> {
        let mut acc = vec![F::one()];
        let mut b = divrem(base, m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = divrem(&mul(&acc, &b), m).1;
            }
            b = divrem(&mul(&b, &b), m).1;
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = q(1, 3);
        let b = q(2, 7);
        assert_eq!((a.clone() + b.clone()) - b, a);
        assert_eq!(a.clone() * a.inv(), Rational::one());
    }

    #[test]
    fn rational_roots_of_split_polynomial() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let p = vec![q(0, 1), q(-3, 2), q(5, 2), q(1, 1)];
        let mut r = Rational::roots(&p);
        r.sort();
        assert_eq!(r, vec![q(-3, 1), q(0, 1), q(1, 2)]);
        // x^2 - 2 has no rational roots
        assert!(Rational::roots(&[q(-2, 1), q(0, 1), q(1, 1)]).is_empty());
    }

    #[test]
    fn prime_field_inverse_and_roots() {
        type F5 = Fp<5>;
        for v in 1..5 {
            let x = F5::new(v);
            assert_eq!(x * x.inv(), F5::one());
        }
        // x^2 - 1 over F_5
        let roots = F5::roots(&[F5::new(-1), F5::new(0), F5::new(1)]);
        assert_eq!(roots, vec![F5::new(1), F5::new(4)]);
    }

    #[test]
    fn large_prime_root_splitting() {
        type F = Fp<1_000_000_007>;
        // (x - 2)(x - 10)(x + 7)(x^2 + 1): last factor irreducible since p = 3 mod 4
        let lin = |r: i64| vec![F::new(-r), F::new(1)];
        let mut p = poly::mul(&lin(2), &lin(10));
        p = poly::mul(&p, &lin(-7));
        p = poly::mul(&p, &[F::new(1), F::new(0), F::new(1)]);
        let mut roots = F::roots(&p);
        roots.sort();
        let mut expected = vec![F::new(2), F::new(10), F::new(-7)];
        expected.sort();
        assert_eq!(roots, expected);
    }

    #[test]
    fn fraction_round_trip() {
        let x = q(-7, 12);
        let (n, d) = x.to_fraction();
        assert_eq!(Rational::from_fraction(&n, &d), Some(x));
        type F7 = Fp<7>;
        let y = F7::from_fraction(&BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(y * F7::new(2), F7::new(3));
    }
}
