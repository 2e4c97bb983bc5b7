//! Exact arithmetic in the representation ring of a torus: sparse Laurent
//! polynomials in `e^{ε_1}, ..., e^{ε_rank}` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::weyl::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: BigInt) -> Self {
        Self::term(vec![0; rank], c)
    }

    /// `e^μ`.
    pub fn monomial(mu: &[i32]) -> Self {
        Self::term(mu.to_vec(), BigInt::one())
    }

    pub fn term(exp: Vec<i32>, c: BigInt) -> Self {
        let rank = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { rank, terms }
    }

    /// `e^μ - 1`.
    pub fn exp_minus_one(mu: &[i32]) -> Self {
        let mut p = Self::monomial(mu);
        p.add_term(vec![0; mu.len()], -BigInt::one());
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order of exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exp: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exp).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut acc: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(LaurentPoly { rank: self.rank, terms: acc })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// The involution `e^λ ↦ e^{-λ}`.
    pub fn dual(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect();
        LaurentPoly { rank: self.rank, terms }
    }

    /// Set `ε_coord` to zero (1-based) and drop that coordinate.
    pub fn specialize_zero(&self, coord: usize) -> Result<Self> {
        if coord == 0 || coord > self.rank {
            return Err(Error::Index { index: coord, rank: self.rank });
        }
        let mut out = Self::zero(self.rank - 1);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.remove(coord - 1);
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// `Σ c_μ t^{μ(ξ)}`; every degree must be an integer.
    pub fn ev_xi(&self, xi: &[BigRational]) -> Result<UniPoly> {
        let mut out = UniPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(integral_degree(e, xi)?, c.clone());
        }
        Ok(out)
    }
}

/// `μ(ξ)`, required to be an integer.
pub fn integral_degree(mu: &[i32], xi: &[BigRational]) -> Result<i64> {
    if mu.len() != xi.len() {
        return Err(Error::RankMismatch { expected: xi.len(), got: mu.len() });
    }
    let d: BigRational = mu.iter().zip(xi).map(|(&m, x)| x * BigInt::from(m)).sum();
    if !d.is_integer() {
        return Err(Error::NonIntegral(format!("{mu:?} pairs to {d} with xi")));
    }
    d.to_integer().to_i64().ok_or_else(|| Error::NonIntegral(format!("degree {d} too large")))
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on rank mismatch; use the `try_` methods to handle it.
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> Result<LaurentPoly> = $body;
                f(self, rhs).expect("rank mismatch")
            }
        }
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.try_add(b));
binop!(Mul, mul, |a, b| a.try_mul(b));
binop!(Sub, sub, |a, b| a.try_add(&-b));

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// `ε_1-ε_3`, `2ε_4`, `0`.
pub fn format_weight(mu: &[i32]) -> String {
    let mut s = String::new();
    for (i, &c) in mu.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("ε_{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn write_signed(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, body: &str) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if body.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{a}{body}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let body = if e.iter().all(|&x| x == 0) { String::new() } else { format!("e^{{{}}}", format_weight(e)) };
            write_signed(f, k == 0, c, &body)?;
        }
        Ok(())
    }
}

/// Univariate Laurent polynomial in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(deg: i64, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(deg, c);
        p
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let base = Self::from_coeffs(&[1, -1]);
        (0..k).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    /// Coefficients of `t^0, t^1, ...`.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (d, &c) in cs.iter().enumerate() {
            p.add_term(d as i64, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, deg: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(deg).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn coefficient(&self, deg: i64) -> BigInt {
        self.terms.get(&deg).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, c) in &other.terms {
            out.add_term(d, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &other.terms {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&d, v) in &self.terms {
            out.add_term(d, v * c);
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&d, c)) in self.terms.iter().rev().enumerate() {
            let body = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            write_signed(f, k == 0, c, &body)?;
        }
        Ok(())
    }
}

/// A truncated graded character: slice `k` holds the monomials of
/// `ξ`-degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    pub slices: Vec<LaurentPoly>,
}

impl GradedSeries {
    pub fn truncation(&self) -> usize {
        self.slices.len().saturating_sub(1)
    }

    /// Dimension of each slice (sum of its coefficients).
    pub fn dims(&self) -> Vec<BigInt> {
        self.slices.iter().map(|s| s.terms().map(|(_, c)| c.clone()).sum()).collect()
    }
}

fn check_denominators(weights: &[Weight], xi: &[BigRational]) -> Result<()> {
    for mu in weights {
        let neg: Vec<i32> = mu.iter().map(|x| -x).collect();
        if integral_degree(&neg, xi)? != 1 {
            return Err(Error::NonIntegral(format!("e^{{-({})}} does not have degree 1", format_weight(mu))));
        }
    }
    Ok(())
}

/// Expand `numerator / Π_μ (1 - e^{-μ})` with each factor read as
/// `1 + e^{-μ} + e^{-2μ} + ...`, keeping `ξ`-degrees `0..=n`.
pub fn geometric_expand(numerator: &LaurentPoly, weights: &[Weight], xi: &[BigRational], n: usize) -> Result<GradedSeries> {
    check_denominators(weights, xi)?;
    let rank = numerator.rank();
    let mut slices = vec![LaurentPoly::zero(rank); n + 1];
    for (e, c) in numerator.terms() {
        let d = integral_degree(e, xi)?;
        if d < 0 {
            return Err(Error::NonIntegral(format!("numerator term of negative degree {d}")));
        }
        if (d as usize) <= n {
            slices[d as usize].add_term(e.clone(), c.clone());
        }
    }
    for mu in weights {
        let step = LaurentPoly::monomial(&mu.iter().map(|x| -x).collect::<Vec<_>>());
        // S'_k = S_k + e^{-μ} S'_{k-1}
        for k in 1..=n {
            let carried = slices[k - 1].try_mul(&step)?;
            slices[k] = slices[k].try_add(&carried)?;
        }
    }
    Ok(GradedSeries { slices })
}

/// Dimensions only: coefficients of `t^0..t^n` in
/// `ev_ξ(numerator) / (1 - t)^{#weights}`.
pub fn geometric_expand_dims(numerator: &LaurentPoly, weights: &[Weight], xi: &[BigRational], n: usize) -> Result<Vec<BigInt>> {
    check_denominators(weights, xi)?;
    let num = numerator.ev_xi(xi)?;
    let q = weights.len();
    let mut out = vec![BigInt::zero(); n + 1];
    for (&d, c) in num.terms() {
        if d < 0 {
            return Err(Error::NonIntegral(format!("numerator term of negative degree {d}")));
        }
        for (i, slot) in out.iter_mut().skip(d as usize).enumerate() {
            *slot += c * series_coefficient(q, i);
        }
    }
    Ok(out)
}

/// Coefficient of `t^i` in `(1 - t)^{-a}`.
pub fn series_coefficient(a: usize, i: usize) -> BigInt {
    if a == 0 {
        return if i == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(i + a - 1, a - 1)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_poly(rng: &mut impl Rng, rank: usize) -> LaurentPoly {
        let mut p = LaurentPoly::zero(rank);
        for _ in 0..rng.gen_range(0..5) {
            let e: Vec<i32> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
            p.add_term(e, BigInt::from(rng.gen_range(-3..=3)));
        }
        p
    }

    #[test]
    fn monomials_multiply() {
        let a = LaurentPoly::monomial(&[1, -1, 0]);
        let b = LaurentPoly::monomial(&[0, 2, 1]);
        assert_eq!(&a * &b, LaurentPoly::monomial(&[1, 1, 1]));
        assert!((&LaurentPoly::exp_minus_one(&[-1, 1]) * &LaurentPoly::zero(2)).is_zero());
        let x = &LaurentPoly::exp_minus_one(&[-1, 1]) + &LaurentPoly::one(2);
        let y = &LaurentPoly::exp_minus_one(&[1, -1]) + &LaurentPoly::one(2);
        assert_eq!(&x * &y, LaurentPoly::one(2));
        assert!(LaurentPoly::one(2).try_add(&LaurentPoly::one(3)).is_err());
    }

    #[test]
    fn ring_axioms_random() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..200 {
            let (a, b, c) = (random_poly(&mut rng, 3), random_poly(&mut rng, 3), random_poly(&mut rng, 3));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert!((&a - &a).is_zero());
            assert_eq!(a.dual().dual(), a);
            assert_eq!((&a * &b).dual(), &a.dual() * &b.dual());
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(LaurentPoly::one(2).dual(), LaurentPoly::one(2));
        assert_eq!(LaurentPoly::monomial(&[1, 0]).dual(), LaurentPoly::monomial(&[-1, 0]));
    }

    #[test]
    fn specialization() {
        assert_eq!(LaurentPoly::monomial(&[0, 0, 1]).specialize_zero(3).unwrap(), LaurentPoly::one(2));
        let p = &LaurentPoly::monomial(&[1, 1]) + &LaurentPoly::monomial(&[1, 0]);
        assert_eq!(p.specialize_zero(2).unwrap(), LaurentPoly::term(vec![1], BigInt::from(2)));
        let q = LaurentPoly::monomial(&[2, 0]);
        assert_eq!(q.specialize_zero(2).unwrap(), LaurentPoly::monomial(&[2]));
        assert!(q.specialize_zero(3).is_err());
        assert!(q.specialize_zero(0).is_err());
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    fn half(rank: usize) -> Vec<BigRational> {
        vec![BigRational::new(1.into(), 2.into()); rank]
    }

    #[test]
    fn evaluation() {
        let xi = half(2);
        assert_eq!(LaurentPoly::one(2).ev_xi(&xi).unwrap(), UniPoly::one());
        let r = [1, 1];
        let s = [2, 0];
        let e = |w: &[i32]| LaurentPoly::monomial(&w.iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(e(&r).ev_xi(&xi).unwrap(), UniPoly::monomial(-1, BigInt::one()));
        let p = &LaurentPoly::exp_minus_one(&[-1, -1]) * &LaurentPoly::exp_minus_one(&[-2, 0]);
        // Degrees are -1 here, so the product is (t^{-1} - 1)^2.
        let want = UniPoly::from_coeffs(&[1, -1]).mul(&UniPoly::from_coeffs(&[1, -1]));
        let got = p.ev_xi(&xi).unwrap().mul(&UniPoly::monomial(2, BigInt::one()));
        assert_eq!(got, want);
        assert!(LaurentPoly::monomial(&s[..1].iter().chain(&[1]).copied().collect::<Vec<_>>()).ev_xi(&xi).is_err());
    }

    #[test]
    fn ev_is_multiplicative() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let xi: Vec<BigRational> = ints(&[1, 0, 2]);
        for _ in 0..100 {
            let (a, b) = (random_poly(&mut rng, 3), random_poly(&mut rng, 3));
            assert_eq!((&a * &b).ev_xi(&xi).unwrap(), a.ev_xi(&xi).unwrap().mul(&b.ev_xi(&xi).unwrap()));
        }
    }

    #[test]
    fn smooth_point_expansion() {
        // Grass(2,4) at the base point: tangent weights ε_j - ε_i, i <= 2 < j.
        let xi: Vec<BigRational> = ints(&[1, 1, 0, 0]);
        let mut weights = Vec::new();
        for i in 0..2 {
            for j in 2..4 {
                let mut w = vec![0; 4];
                w[j] = 1;
                w[i] = -1;
                weights.push(w);
            }
        }
        let s = geometric_expand(&LaurentPoly::one(4), &weights, &xi, 3).unwrap();
        assert_eq!(s.dims(), vec![1.into(), 4.into(), 10.into(), 20.into()]);
        assert_eq!(geometric_expand_dims(&LaurentPoly::one(4), &weights, &xi, 3).unwrap(), s.dims());
        let z = geometric_expand(&LaurentPoly::zero(4), &weights, &xi, 3).unwrap();
        assert!(z.dims().iter().all(|d| d.is_zero()));
        assert!(geometric_expand(&LaurentPoly::one(4), &[vec![1, 0, 0, 0]], &xi, 2).is_err());
    }

    #[test]
    fn display() {
        let p = &LaurentPoly::exp_minus_one(&[1, 0, -1]) * &LaurentPoly::constant(3, BigInt::from(2));
        assert_eq!(p.to_string(), "-2 + 2e^{ε_1-ε_3}");
        assert_eq!(UniPoly::one_minus_t_pow(2).to_string(), "t^2 - 2t + 1");
        assert_eq!(format_weight(&[0, -2, 1]), "-2ε_2+ε_3");
        assert_eq!(binomial(9, 8), BigInt::from(9));
        assert_eq!(series_coefficient(0, 0), BigInt::one());
        assert_eq!(series_coefficient(3, 2), BigInt::from(6));
    }
}
