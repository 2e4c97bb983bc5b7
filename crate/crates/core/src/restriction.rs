//! Restriction of Schubert structure-sheaf classes to torus fixed points,
//! computed by three backends, plus Hilbert data at those points.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::diagrams::{energies, enumerate_eyd, Cell, Geometry, ReflectionTableau};
use crate::error::{Error, Result};
use crate::hecke::{hecke_subsequences_with, is_reduced, DEFAULT_CAP};
use crate::ring::{binomial, geometric_expand, geometric_expand_dims, series_coefficient, GradedSeries, LaurentPoly, UniPoly};
use crate::shapes::{bd_lift, contains, partition_of, perm_of, perm_of_strict, strict_partition_of, Partition, StrictPartition};
use crate::tableaux::enumerate_svt;
use crate::weyl::{check_d, Kind, RootSystem, Weight, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Backend {
    Eyd,
    Svt,
    Hecke,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Eyd, Backend::Svt, Backend::Hecke];
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Eyd => "eyd",
            Backend::Svt => "svt",
            Backend::Hecke => "hecke",
        })
    }
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "eyd" => Ok(Backend::Eyd),
            "svt" => Ok(Backend::Svt),
            "hecke" => Ok(Backend::Hecke),
            _ => Err(Error::Parse(format!("unknown backend {s:?}"))),
        }
    }
}

/// A Schubert variety `X^w` and a fixed point `v`, both minimal coset
/// representatives for the same maximal parabolic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Problem {
    rs: RootSystem,
    d: usize,
    w: WeylElement,
    v: WeylElement,
}

impl Problem {
    /// `d` is required in type A; types B, C, D use `d = n`.
    pub fn new(w: WeylElement, v: WeylElement, d: Option<usize>) -> Result<Self> {
        let rs = w.root_system();
        if v.root_system() != rs {
            return Err(Error::TypeMismatch(format!("w is in {}{}, v is in {}{}", rs.kind(), rs.rank(), v.root_system().kind(), v.root_system().rank())));
        }
        let n = rs.rank();
        let d = match (rs.kind(), d) {
            (Kind::A, Some(d)) => {
                check_d(n, d)?;
                d
            }
            (Kind::A, None) => return Err(Error::RootSystem("type A needs d".into())),
            (_, Some(d)) if d != n => {
                return Err(Error::RootSystem(format!("types B, C, D use the maximal parabolic d = n = {n}, got d = {d}")))
            }
            _ => n,
        };
        for x in [&w, &v] {
            if !x.is_minimal_rep(Some(d))? {
                return Err(Error::NotMinimal(x.to_string()));
            }
        }
        Ok(Problem { rs, d, w, v })
    }

    pub fn from_windows(kind: Kind, rank: usize, d: Option<usize>, w: &[i32], v: &[i32]) -> Result<Self> {
        let rs = RootSystem::new(kind, rank)?;
        Self::new(WeylElement::new(rs, w.to_vec())?, WeylElement::new(rs, v.to_vec())?, d)
    }

    /// Partitions in type A, strict partitions in types B, C, D.
    pub fn from_shapes(kind: Kind, rank: usize, d: Option<usize>, lambda: &[usize], mu: &[usize]) -> Result<Self> {
        let rs = RootSystem::new(kind, rank)?;
        let elem = |shape: &[usize]| -> Result<WeylElement> {
            match kind {
                Kind::A => {
                    let d = d.ok_or_else(|| Error::RootSystem("type A needs d".into()))?;
                    perm_of(&Partition::new(shape.to_vec())?, d, rank)
                }
                _ => perm_of_strict(&StrictPartition::new(shape.to_vec())?, rs),
            }
        };
        Self::new(elem(lambda)?, elem(mu)?, d)
    }

    pub fn root_system(&self) -> RootSystem {
        self.rs
    }

    pub fn kind(&self) -> Kind {
        self.rs.kind()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    pub fn v(&self) -> &WeylElement {
        &self.v
    }

    pub fn geometry(&self) -> Geometry {
        Geometry::for_kind(self.kind())
    }

    fn shape_of(&self, x: &WeylElement) -> Vec<usize> {
        let shape = match self.kind() {
            Kind::A => partition_of(x, self.d).map(|p| p.parts().to_vec()),
            _ => strict_partition_of(x).map(|p| p.parts().to_vec()),
        };
        shape.expect("checked minimal representative")
    }

    /// Shape of `w`.
    pub fn lambda(&self) -> Vec<usize> {
        self.shape_of(&self.w)
    }

    /// Shape of `v`.
    pub fn mu(&self) -> Vec<usize> {
        self.shape_of(&self.v)
    }

    /// `v ≥ w`, i.e. the fixed point lies on `X^w`.
    pub fn on_variety(&self) -> bool {
        contains(&self.lambda(), &self.mu())
    }

    /// `dim G/P`.
    pub fn dimension(&self) -> usize {
        let (n, d) = (self.rank(), self.d);
        match self.kind() {
            Kind::A => d * (n - d),
            Kind::B | Kind::C => n * (n + 1) / 2,
            Kind::D => n * (n - 1) / 2,
        }
    }

    /// `dim X^w`.
    pub fn d_w(&self) -> usize {
        self.dimension() - self.w.length()
    }

    /// The `D_{n+1}` problem with the same strict partitions (type B only).
    pub fn lift_to_d(&self) -> Result<Problem> {
        if self.kind() != Kind::B {
            return Err(Error::TypeMismatch("only type B lifts to type D".into()));
        }
        Problem::new(bd_lift(&self.w)?, bd_lift(&self.v)?, None)
    }
}

/// Positive roots outside the Levi of `P_d` (type A) or `P_n`.
pub fn positive_roots_outside_levi(rs: RootSystem, d: usize) -> Vec<Weight> {
    rs.positive_roots()
        .into_iter()
        .filter(|b| match rs.kind() {
            Kind::A => b[..d].contains(&1) && b[d..].contains(&-1),
            _ => b.iter().sum::<i32>() != 0,
        })
        .collect()
}

/// Weights of the tangent space of `G/P` at `v`: `v` applied to the
/// negatives of the positive roots outside the Levi.
pub fn tangent_weights(v: &WeylElement, d: usize) -> Result<Vec<Weight>> {
    if !v.is_minimal_rep(Some(d))? {
        return Err(Error::NotMinimal(v.to_string()));
    }
    let rs = v.root_system();
    let d = if rs.kind() == Kind::A { d } else { rs.rank() };
    positive_roots_outside_levi(rs, d)
        .into_iter()
        .map(|b| v.apply(&b.iter().map(|x| -x).collect::<Vec<_>>()))
        .collect()
}

/// `r(c) = s_{k_1} ⋯ s_{k_{c-1}}(α_{k_c})` for a reduced word.
pub fn r_values(rs: RootSystem, word: &[usize]) -> Result<Vec<Weight>> {
    if !is_reduced(rs, word)? {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let mut prefix = rs.identity();
    let mut out = Vec::with_capacity(word.len());
    for &k in word {
        out.push(prefix.apply(&rs.simple_root(k)?)?);
        prefix = prefix.right_mul_simple(k);
    }
    Ok(out)
}

/// The reflection tableau of `v` together with the weight `r` carried by
/// each of its boxes.
pub fn box_weights(p: &Problem) -> Result<(ReflectionTableau, BTreeMap<Cell, Weight>)> {
    let t = ReflectionTableau::new(p.rs, p.d, &p.mu())?;
    let r = r_values(p.rs, &t.reading_word())?;
    let map = t.reading_order().iter().copied().zip(r).collect();
    Ok((t, map))
}

/// A class written as `sign · Σ_terms Π_{r ∈ term} (e^{-r} - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub rank: usize,
    /// `(-1)^{l(w)}`.
    pub negative: bool,
    pub terms: Vec<Vec<Weight>>,
}

impl Expansion {
    pub fn to_poly(&self) -> LaurentPoly {
        let rank = self.rank;
        let sum = self
            .terms
            .par_iter()
            .map(|term| {
                term.iter().fold(LaurentPoly::one(rank), |acc, r| {
                    let neg: Vec<i32> = r.iter().map(|x| -x).collect();
                    &acc * &LaurentPoly::exp_minus_one(&neg)
                })
            })
            .reduce(|| LaurentPoly::zero(rank), |a, b| &a + &b);
        if self.negative {
            -sum
        } else {
            sum
        }
    }
}

/// The restricted class as an element of the representation ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub kind: Kind,
    pub rank: usize,
    pub d: usize,
    pub value: LaurentPoly,
}

/// Terms of the restricted class from one backend. Empty when the point
/// is off the variety.
pub fn expansion(p: &Problem, backend: Backend, cap: usize) -> Result<Expansion> {
    let mut out = Expansion { rank: p.rank(), negative: p.w.length() % 2 == 1, terms: Vec::new() };
    if !p.on_variety() {
        return Ok(out);
    }
    let (lambda, mu, g) = (p.lambda(), p.mu(), p.geometry());
    match backend {
        Backend::Eyd => {
            let (t, weights) = box_weights(p)?;
            let pos = t.positions();
            for c in enumerate_eyd(&lambda, &mu, g, false)? {
                let mut boxes: Vec<&Cell> = c.boxes().iter().collect();
                boxes.sort_by_key(|b| pos[b]);
                out.terms.push(boxes.into_iter().map(|b| weights[b].clone()).collect());
            }
        }
        Backend::Svt => {
            let (t, weights) = box_weights(p)?;
            let pos = t.positions();
            for tab in enumerate_svt(&lambda, &mu, g, false)? {
                // Entry x of box (i,j) stands for the box (x, x+j-i).
                let mut boxes: Vec<Cell> =
                    tab.cells().iter().flat_map(|(&(i, j), set)| set.iter().map(move |&x| (x, x + j - i))).collect();
                boxes.sort_by_key(|b| pos[b]);
                out.terms.push(boxes.iter().map(|b| weights[b].clone()).collect());
            }
        }
        Backend::Hecke => {
            return hecke_expansion(p, &p.v.reduced_word(), cap);
        }
    }
    Ok(out)
}

/// Hecke backend over a chosen reduced word of `v`.
pub fn hecke_expansion(p: &Problem, word: &[usize], cap: usize) -> Result<Expansion> {
    if p.rs.word_product(word)? != p.v {
        return Err(Error::Window { window: p.v.window().to_vec(), reason: format!("{word:?} is not a word for v") });
    }
    let r = r_values(p.rs, word)?;
    let parallel = rayon::current_num_threads() > 1;
    let subs = hecke_subsequences_with(&p.w, word, cap, parallel)?;
    let terms = subs.iter().map(|s| s.indices.iter().map(|&c| r[c].clone()).collect()).collect();
    Ok(Expansion { rank: p.rank(), negative: p.w.length() % 2 == 1, terms })
}

pub fn pullback_with(p: &Problem, backend: Backend, cap: usize) -> Result<KClass> {
    let value = expansion(p, backend, cap)?.to_poly();
    Ok(KClass { kind: p.kind(), rank: p.rank(), d: p.d, value })
}

pub fn pullback(p: &Problem, backend: Backend) -> Result<KClass> {
    pullback_with(p, backend, DEFAULT_CAP)
}

/// Type B class computed in `D_{n+1}` and specialized at `ε_{n+1} = 0`.
pub fn pullback_b_via_d(p: &Problem, backend: Backend, cap: usize) -> Result<KClass> {
    let lifted = p.lift_to_d()?;
    let value = pullback_with(&lifted, backend, cap)?.value.specialize_zero(p.rank() + 1)?;
    Ok(KClass { kind: p.kind(), rank: p.rank(), d: p.d, value })
}

/// `ξ = v ξ_0` with every tangent weight at `v` pairing to `-1`.
pub fn xi_vector(p: &Problem) -> Result<Vec<BigRational>> {
    let n = p.rank();
    let base: Vec<BigRational> = match p.kind() {
        Kind::A => (0..n).map(|i| BigRational::from_integer(BigInt::from(u8::from(i < p.d)))).collect(),
        Kind::C | Kind::D => vec![BigRational::new(1.into(), 2.into()); n],
        Kind::B => {
            return Err(Error::Unsupported("type B is not cominuscule; use the D_{n+1} identification".into()))
        }
    };
    let mut xi = vec![BigRational::zero(); n];
    for (i, &x) in p.v.window().iter().enumerate() {
        let target = x.unsigned_abs() as usize - 1;
        xi[target] = if x > 0 { base[i].clone() } else { -base[i].clone() };
    }
    let minus_one = -BigRational::one();
    for mu in tangent_weights(&p.v, p.d)? {
        let pairing: BigRational = mu.iter().zip(&xi).map(|(&m, x)| x * BigInt::from(m)).sum();
        if pairing != minus_one {
            return Err(Error::NonIntegral(format!("tangent weight {mu:?} pairs to {pairing}")));
        }
    }
    Ok(xi)
}

/// `d_w = dim X^w` and `m_k`, the number of terms with `k` extra factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertData {
    pub d_w: usize,
    pub m: Vec<u64>,
}

impl HilbertData {
    pub fn multiplicity(&self) -> u64 {
        self.m.first().copied().unwrap_or(0)
    }

    pub fn alternating_sum(&self) -> BigInt {
        self.signed_m().sum()
    }

    fn signed_m(&self) -> impl Iterator<Item = BigInt> + '_ {
        self.m.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { BigInt::from(c) } else { -BigInt::from(c) })
    }

    /// `h(i) = Σ_k (-1)^k m_k C(i + d_w - k - 1, d_w - k - 1)`.
    pub fn hilbert_function(&self, i: usize) -> BigInt {
        self.signed_m().enumerate().map(|(k, c)| c * series_coefficient(self.d_w - k, i)).sum()
    }

    /// Coefficients of `1, n, n^2, ...` of the Hilbert polynomial.
    pub fn polynomial(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.d_w.max(1)];
        for (k, c) in self.signed_m().enumerate() {
            let a = self.d_w - k;
            if a == 0 {
                continue;
            }
            // C(n+a-1, a-1) = Π_{t=1}^{a-1} (n+t) / (a-1)!
            let mut poly = vec![BigRational::one()];
            for t in 1..a {
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (e, coef) in poly.iter().enumerate() {
                    next[e] += coef * BigInt::from(t);
                    next[e + 1] += coef;
                }
                poly = next;
            }
            let fact: BigInt = (1..a).map(BigInt::from).product();
            for (e, coef) in poly.into_iter().enumerate() {
                out[e] += coef * BigRational::new(c.clone(), fact.clone());
            }
        }
        while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn eval_polynomial(&self, x: &BigRational) -> BigRational {
        self.polynomial().iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `Σ_k (-1)^k m_k (1-t)^{l(w)+k}`, which equals `ev_ξ` of the class.
    pub fn ev_numerator(&self, length_w: usize) -> UniPoly {
        self.signed_m().enumerate().fold(UniPoly::zero(), |acc, (k, c)| {
            acc.add(&UniPoly::one_minus_t_pow(length_w + k).scale(&c))
        })
    }
}

fn counts_by(values: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut m = Vec::new();
    for k in values {
        if m.len() <= k {
            m.resize(k + 1, 0);
        }
        m[k] += 1;
    }
    m
}

/// Hilbert data from excited diagram sizes. Type B is computed through the
/// `D_{n+1}` identification.
pub fn hilbert_data(p: &Problem) -> Result<HilbertData> {
    if p.kind() == Kind::B {
        return hilbert_data(&p.lift_to_d()?);
    }
    let d_w = p.d_w();
    if !p.on_variety() {
        return Ok(HilbertData { d_w, m: Vec::new() });
    }
    let lambda = p.lambda();
    let eyds = enumerate_eyd(&lambda, &p.mu(), p.geometry(), false)?;
    Ok(HilbertData { d_w, m: counts_by(eyds.iter().map(|c| energies(c, &lambda).1)) })
}

/// Hilbert data from the excess of 0-Hecke subsequences.
pub fn hilbert_data_hecke(p: &Problem, cap: usize) -> Result<HilbertData> {
    if p.kind() == Kind::B {
        return hilbert_data_hecke(&p.lift_to_d()?, cap);
    }
    let subs = hecke_subsequences_with(&p.w, &p.v.reduced_word(), cap, rayon::current_num_threads() > 1)?;
    Ok(HilbertData { d_w: p.d_w(), m: counts_by(subs.iter().map(|s| s.excess)) })
}

/// Truncated multigraded character of the local ring at `v`, degrees `0..=n`.
pub fn graded_character(p: &Problem, n: usize) -> Result<GradedSeries> {
    let xi = xi_vector(p)?;
    let class = pullback(p, Backend::Eyd)?;
    geometric_expand(&class.value, &tangent_weights(&p.v, p.d)?, &xi, n)
}

/// Dimensions of the slices of [`graded_character`].
pub fn graded_character_dims(p: &Problem, n: usize) -> Result<Vec<BigInt>> {
    let xi = xi_vector(p)?;
    let class = pullback(p, Backend::Eyd)?;
    geometric_expand_dims(&class.value, &tangent_weights(&p.v, p.d)?, &xi, n)
}

/// All problems of one root system (every `d` in type A).
pub fn all_problems(rs: RootSystem) -> Result<Vec<Problem>> {
    let ds: Vec<usize> = if rs.kind() == Kind::A { (1..rs.rank()).collect() } else { vec![rs.rank()] };
    let mut out = Vec::new();
    for d in ds {
        let reps = rs.minimal_reps(d)?;
        for w in &reps {
            for v in &reps {
                out.push(Problem::new(w.clone(), v.clone(), Some(d))?);
            }
        }
    }
    Ok(out)
}

/// Hilbert function of a smooth point of dimension `dim`.
pub fn smooth_hilbert_function(dim: usize, i: usize) -> BigInt {
    if dim == 0 {
        return BigInt::from(u8::from(i == 0));
    }
    binomial(i + dim - 1, dim - 1)
}
