//! Classical root systems and their Weyl groups as signed permutations.
//!
//! Type `A` of rank `n` is the symmetric group `S_n` acting on `Z^n`
//! (the root system `A_{n-1}`). Types `B`, `C`, `D` of rank `n` act on
//! `Z^n` by permutations and sign changes.
//!
//! A word `(k_1, ..., k_l)` denotes the product `s_{k_1} ... s_{k_l}`, so
//! `s_{k_l}` acts first on weights.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Coefficients of `ε_1, ..., ε_rank`.
pub type Weight = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
}

impl Kind {
    pub fn is_classical_isotropic(self) -> bool {
        self != Kind::A
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "C" | "c" => Ok(Kind::C),
            "D" | "d" => Ok(Kind::D),
            other => Err(Error::Parse(format!("unknown type {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
}

impl RootSystem {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let min = if kind == Kind::D { 3 } else { 2 };
        if rank < min {
            return Err(Error::RootSystem(format!(
                "type {kind} needs rank >= {min}, got {rank}"
            )));
        }
        Ok(RootSystem { kind, rank })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple reflections.
    pub fn num_simple(&self) -> usize {
        match self.kind {
            Kind::A => self.rank - 1,
            _ => self.rank,
        }
    }

    pub fn check_letter(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.num_simple() {
            Err(Error::Letter { letter: k, max: self.num_simple() })
        } else {
            Ok(())
        }
    }

    pub fn simple_root(&self, k: usize) -> Result<Weight> {
        self.check_letter(k)?;
        let n = self.rank;
        let mut a = vec![0; n];
        if k < n {
            a[k - 1] = 1;
            a[k] = -1;
            return Ok(a);
        }
        match self.kind {
            Kind::A => unreachable!("letter checked"),
            Kind::B => a[n - 1] = 1,
            Kind::C => a[n - 1] = 2,
            Kind::D => {
                a[n - 2] = 1;
                a[n - 1] = 1;
            }
        }
        Ok(a)
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (1..=self.num_simple())
            .map(|k| self.simple_root(k).expect("valid letter"))
            .collect()
    }

    /// All positive roots, in a fixed order.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut out = Vec::new();
        let unit = |i: usize, c: i32| {
            let mut v = vec![0; n];
            v[i] = c;
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                let mut r = vec![0; n];
                r[i] = 1;
                r[j] = -1;
                out.push(r);
                if self.kind != Kind::A {
                    let mut r = vec![0; n];
                    r[i] = 1;
                    r[j] = 1;
                    out.push(r);
                }
            }
            match self.kind {
                Kind::B => out.push(unit(i, 1)),
                Kind::C => out.push(unit(i, 2)),
                _ => {}
            }
        }
        out
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement { rs: *self, window: (1..=self.rank as i32).collect() }
    }

    pub fn simple_reflection(&self, k: usize) -> Result<WeylElement> {
        self.check_letter(k)?;
        let n = self.rank;
        let mut window: Vec<i32> = (1..=n as i32).collect();
        if k < n {
            window.swap(k - 1, k);
        } else {
            match self.kind {
                Kind::A => unreachable!("letter checked"),
                Kind::B | Kind::C => window[n - 1] = -(n as i32),
                Kind::D => {
                    window[n - 2] = -(n as i32);
                    window[n - 1] = -(n as i32 - 1);
                }
            }
        }
        Ok(WeylElement { rs: *self, window })
    }

    /// Product of the simple reflections of `word`, read as `s_{k_1} ... s_{k_l}`.
    pub fn word_product(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &k in word.iter().rev() {
            self.check_letter(k)?;
            w = w.left_mul_simple(k);
        }
        Ok(w)
    }

    /// Order of `s_s s_t`.
    pub fn coxeter_m(&self, s: usize, t: usize) -> Result<usize> {
        let st = self.simple_reflection(s)?.mul(&self.simple_reflection(t)?)?;
        let id = self.identity();
        let mut p = st.clone();
        let mut m = 1;
        while p != id {
            p = p.mul(&st)?;
            m += 1;
        }
        Ok(m)
    }

    /// Every element of the Weyl group. Exponential in the rank.
    pub fn elements(&self) -> Vec<WeylElement> {
        let n = self.rank;
        let mut perms = Vec::new();
        let mut cur: Vec<i32> = (1..=n as i32).collect();
        permutations(&mut cur, 0, &mut perms);
        let mut out = Vec::new();
        for p in perms {
            if self.kind == Kind::A {
                out.push(WeylElement { rs: *self, window: p });
                continue;
            }
            for signs in 0u32..(1 << n) {
                if self.kind == Kind::D && signs.count_ones() % 2 == 1 {
                    continue;
                }
                let window = p
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if signs >> i & 1 == 1 { -x } else { x })
                    .collect();
                out.push(WeylElement { rs: *self, window });
            }
        }
        out.sort();
        out
    }

    /// Minimal coset representatives for the maximal parabolic `P_d` (type
    /// A) or `P_n` (other types; `d` is ignored).
    pub fn minimal_reps(&self, d: usize) -> Result<Vec<WeylElement>> {
        let n = self.rank;
        let mut out = Vec::new();
        if self.kind == Kind::A {
            check_d(n, d)?;
            for mask in 0u64..(1 << n) {
                if mask.count_ones() as usize != d {
                    continue;
                }
                let head = (1..=n as i32).filter(|&x| mask >> (x - 1) & 1 == 1);
                let tail = (1..=n as i32).filter(|&x| mask >> (x - 1) & 1 == 0);
                out.push(WeylElement { rs: *self, window: head.chain(tail).collect() });
            }
        } else {
            for mask in 0u64..(1 << n) {
                if self.kind == Kind::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let plain = (1..=n as i32).filter(|&x| mask >> (x - 1) & 1 == 0);
                let barred = (1..=n as i32).rev().filter(|&x| mask >> (x - 1) & 1 == 1).map(|x| -x);
                out.push(WeylElement { rs: *self, window: plain.chain(barred).collect() });
            }
        }
        out.sort();
        Ok(out)
    }
}

pub(crate) fn check_d(n: usize, d: usize) -> Result<()> {
    if d == 0 || d >= n {
        Err(Error::RootSystem(format!("d must satisfy 1 <= d <= {}, got {d}", n - 1)))
    } else {
        Ok(())
    }
}

fn permutations(cur: &mut Vec<i32>, k: usize, out: &mut Vec<Vec<i32>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// A root (or any weight) is positive when its first nonzero coordinate is.
pub fn is_positive(mu: &[i32]) -> bool {
    mu.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rs: RootSystem,
    window: Vec<i32>,
}

impl WeylElement {
    pub fn new(rs: RootSystem, window: Vec<i32>) -> Result<Self> {
        let n = rs.rank();
        let bad = |reason: &str| Error::Window { window: window.clone(), reason: reason.to_string() };
        if window.len() != n {
            return Err(bad(&format!("expected {n} entries")));
        }
        let mut seen = vec![false; n];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(bad(&format!("entries must lie in 1..={n} up to sign")));
            }
            if seen[a - 1] {
                return Err(bad("repeated entry"));
            }
            seen[a - 1] = true;
        }
        let negatives = window.iter().filter(|&&x| x < 0).count();
        match rs.kind() {
            Kind::A if negatives > 0 => return Err(bad("type A windows are unsigned")),
            Kind::D if negatives % 2 == 1 => {
                return Err(bad("type D needs an even number of barred entries"))
            }
            _ => {}
        }
        Ok(WeylElement { rs, window })
    }

    pub fn parse(rs: RootSystem, s: &str) -> Result<Self> {
        let window = parse_list::<i32>(s)?;
        Self::new(rs, window)
    }

    pub fn root_system(&self) -> RootSystem {
        self.rs
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    fn check_same(&self, other: &WeylElement) -> Result<()> {
        if self.rs != other.rs {
            return Err(Error::TypeMismatch(format!(
                "{}{} vs {}{}",
                self.rs.kind(),
                self.rs.rank(),
                other.rs.kind(),
                other.rs.rank()
            )));
        }
        Ok(())
    }

    /// Action on weights: `ε_i ↦ sign(w_i) ε_{|w_i|}`.
    pub fn apply(&self, mu: &[i32]) -> Result<Weight> {
        let n = self.rs.rank();
        if mu.len() != n {
            return Err(Error::RankMismatch { expected: n, got: mu.len() });
        }
        let mut out = vec![0; n];
        for (i, &c) in mu.iter().enumerate() {
            let x = self.window[i];
            out[x.unsigned_abs() as usize - 1] += x.signum() * c;
        }
        Ok(out)
    }

    /// Group product `self · other` (apply `other` first).
    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_same(other)?;
        let window = other
            .window
            .iter()
            .map(|&x| x.signum() * self.window[x.unsigned_abs() as usize - 1])
            .collect();
        Ok(WeylElement { rs: self.rs, window })
    }

    pub fn inverse(&self) -> WeylElement {
        let mut window = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            window[x.unsigned_abs() as usize - 1] = x.signum() * (i as i32 + 1);
        }
        WeylElement { rs: self.rs, window }
    }

    /// `s_k · self`; `k` must be a valid letter.
    pub fn left_mul_simple(&self, k: usize) -> WeylElement {
        let n = self.rs.rank() as i32;
        let k = k as i32;
        let act = |x: i32| -> i32 {
            let (s, a) = (x.signum(), x.abs());
            if k < n {
                if a == k {
                    s * (k + 1)
                } else if a == k + 1 {
                    s * k
                } else {
                    x
                }
            } else {
                match self.rs.kind() {
                    Kind::B | Kind::C if a == n => -x,
                    Kind::D if a == n => -s * (n - 1),
                    Kind::D if a == n - 1 => -s * n,
                    _ => x,
                }
            }
        };
        WeylElement { rs: self.rs, window: self.window.iter().map(|&x| act(x)).collect() }
    }

    /// `self · s_k`; `k` must be a valid letter.
    pub fn right_mul_simple(&self, k: usize) -> WeylElement {
        let n = self.rs.rank();
        let mut window = self.window.clone();
        if k < n {
            window.swap(k - 1, k);
        } else {
            match self.rs.kind() {
                Kind::B | Kind::C => window[n - 1] = -window[n - 1],
                Kind::D => {
                    let (a, b) = (window[n - 2], window[n - 1]);
                    window[n - 2] = -b;
                    window[n - 1] = -a;
                }
                Kind::A => unreachable!("letter checked"),
            }
        }
        WeylElement { rs: self.rs, window }
    }

    /// Sign of `u(α_k)` where `u` is given by its window.
    fn root_image_positive(rs: RootSystem, window: &[i32], k: usize) -> bool {
        let n = rs.rank();
        // Images of the (at most two) basis vectors in the simple root.
        let img = |i: usize| -> (usize, i32) {
            let x = window[i - 1];
            (x.unsigned_abs() as usize, x.signum())
        };
        let (first, second) = if k < n {
            let (p, sp) = img(k);
            let (q, sq) = img(k + 1);
            ((p, sp), (q, -sq))
        } else {
            match rs.kind() {
                Kind::B | Kind::C => return img(n).1 > 0,
                Kind::D => (img(n - 1), img(n)),
                Kind::A => unreachable!("letter checked"),
            }
        };
        if first.0 < second.0 {
            first.1 > 0
        } else {
            second.1 > 0
        }
    }

    /// True when `l(s_k w) < l(w)`, that is `w^{-1}(α_k) < 0`.
    pub fn is_left_descent(&self, k: usize) -> bool {
        !Self::root_image_positive(self.rs, &self.inverse().window, k)
    }

    /// True when `l(w s_k) < l(w)`, that is `w(α_k) < 0`.
    pub fn is_right_descent(&self, k: usize) -> bool {
        !Self::root_image_positive(self.rs, &self.window, k)
    }

    /// A reduced word, found by stripping the smallest left descent each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        let m = self.rs.num_simple();
        while !w.is_identity() {
            let k = (1..=m).find(|&k| w.is_left_descent(k)).expect("non-identity has a descent");
            word.push(k);
            w = w.left_mul_simple(k);
        }
        word
    }

    /// Coxeter length by descent reduction.
    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    /// Coxeter length as the number of positive roots sent negative.
    pub fn inversion_count(&self) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .filter(|a| !is_positive(&self.apply(a).expect("same rank")))
            .count()
    }

    /// Membership in `W^P` for the maximal parabolic `P_d` (type A) or
    /// `P_n` (types B, C, D, where `d` is ignored).
    pub fn is_minimal_rep(&self, d: Option<usize>) -> Result<bool> {
        let n = self.rs.rank();
        if self.rs.kind() == Kind::A {
            let d = d.ok_or_else(|| Error::RootSystem("type A needs d".into()))?;
            check_d(n, d)?;
            let w = &self.window;
            Ok(w[..d].windows(2).all(|p| p[0] < p[1]) && w[d..].windows(2).all(|p| p[0] < p[1]))
        } else {
            let full = self.full_window();
            Ok(full[..n].windows(2).all(|p| p[0] < p[1]))
        }
    }

    /// Window on `1..=2n` with `bar(k) = 2n+1-k` (types B, C, D); for type
    /// A the plain window.
    pub fn full_window(&self) -> Vec<usize> {
        let n = self.rs.rank();
        if self.rs.kind() == Kind::A {
            return self.window.iter().map(|&x| x as usize).collect();
        }
        let mut full = vec![0; 2 * n];
        for (i, &x) in self.window.iter().enumerate() {
            let key = if x > 0 { x as usize } else { 2 * n + 1 - x.unsigned_abs() as usize };
            full[i] = key;
            full[2 * n - 1 - i] = 2 * n + 1 - key;
        }
        full
    }

    /// Inverse of [`full_window`](Self::full_window) for types B, C, D.
    pub fn from_full_window(rs: RootSystem, full: &[usize]) -> Result<WeylElement> {
        let n = rs.rank();
        if full.len() != 2 * n {
            return Err(Error::RankMismatch { expected: 2 * n, got: full.len() });
        }
        let window = full[..n]
            .iter()
            .map(|&k| if k <= n { k as i32 } else { -((2 * n + 1 - k) as i32) })
            .collect();
        let w = WeylElement::new(rs, window)?;
        if w.full_window() != full {
            return Err(Error::Window { window: w.window.clone(), reason: "full window is not symmetric".into() });
        }
        Ok(w)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parse a comma-separated list such as `"2,-4,-3,-1"`; empty input gives
/// an empty list.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad entry {p:?} in {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(kind: Kind, n: usize) -> RootSystem {
        RootSystem::new(kind, n).unwrap()
    }

    fn el(kind: Kind, n: usize, w: &[i32]) -> WeylElement {
        WeylElement::new(rs(kind, n), w.to_vec()).unwrap()
    }

    #[test]
    fn simple_roots_by_type() {
        assert_eq!(rs(Kind::A, 3).simple_roots(), vec![vec![1, -1, 0], vec![0, 1, -1]]);
        assert_eq!(rs(Kind::C, 2).simple_roots(), vec![vec![1, -1], vec![0, 2]]);
        assert_eq!(rs(Kind::B, 2).simple_roots(), vec![vec![1, -1], vec![0, 1]]);
        assert_eq!(
            rs(Kind::D, 3).simple_roots(),
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![0, 1, 1]]
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(el(Kind::A, 3, &[2, 1, 3]).apply(&[1, 0, 0]).unwrap(), vec![0, 1, 0]);
        assert_eq!(el(Kind::C, 2, &[1, -2]).apply(&[0, 1]).unwrap(), vec![0, -1]);
        assert_eq!(el(Kind::C, 2, &[-2, 1]).apply(&[0, 0]).unwrap(), vec![0, 0]);
        assert!(el(Kind::C, 2, &[1, -2]).apply(&[1, 0, 0]).is_err());
    }

    #[test]
    fn lengths_of_worked_examples() {
        assert_eq!(rs(Kind::A, 4).identity().length(), 0);
        assert_eq!(el(Kind::A, 7, &[1, 3, 5, 2, 4, 6, 7]).length(), 3);
        assert_eq!(el(Kind::D, 6, &[1, 2, 4, 6, -5, -3]).length(), 4);
    }

    #[test]
    fn word_convention() {
        // s_2 s_1 in S_3: apply s_1 first.
        let w = rs(Kind::A, 3).word_product(&[2, 1]).unwrap();
        assert_eq!(w.window(), &[3, 1, 2]);
        let s1 = rs(Kind::A, 3).simple_reflection(1).unwrap();
        let s2 = rs(Kind::A, 3).simple_reflection(2).unwrap();
        assert_eq!(s2.mul(&s1).unwrap(), w);
        assert_eq!(s1.mul(&s2).unwrap().window(), &[2, 3, 1]);
    }

    #[test]
    fn minimal_rep_examples() {
        assert!(el(Kind::A, 7, &[1, 3, 5, 2, 4, 6, 7]).is_minimal_rep(Some(3)).unwrap());
        assert!(el(Kind::A, 3, &[2, 1, 3]).is_minimal_rep(Some(1)).unwrap());
        assert!(!el(Kind::A, 3, &[3, 2, 1]).is_minimal_rep(Some(1)).unwrap());
        assert!(el(Kind::C, 4, &[2, -4, -3, -1]).is_minimal_rep(None).unwrap());
        assert!(!el(Kind::C, 4, &[2, -1, -3, -4]).is_minimal_rep(None).unwrap());
        assert!(el(Kind::A, 3, &[2, 1, 3]).is_minimal_rep(Some(3)).is_err());
    }

    #[test]
    fn windows_validate() {
        let r = rs(Kind::D, 3);
        assert!(WeylElement::new(r, vec![1, 2, -3]).is_err());
        assert!(WeylElement::new(r, vec![1, 1, 3]).is_err());
        assert!(WeylElement::new(rs(Kind::A, 3), vec![1, -2, 3]).is_err());
        assert!(WeylElement::parse(rs(Kind::C, 4), "2,-4,-3,-1").is_ok());
    }

    #[test]
    fn length_changes_by_one_and_matches_inversions() {
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            let r = rs(kind, 3);
            for w in r.elements() {
                let l = w.length();
                assert_eq!(l, w.inversion_count(), "{w}");
                for k in 1..=r.num_simple() {
                    let sw = w.left_mul_simple(k);
                    assert_eq!(sw, r.simple_reflection(k).unwrap().mul(&w).unwrap());
                    assert_eq!(w.right_mul_simple(k), w.mul(&r.simple_reflection(k).unwrap()).unwrap());
                    assert_eq!(sw.length().abs_diff(l), 1);
                    assert_eq!(w.is_left_descent(k), sw.length() < l);
                }
            }
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(rs(Kind::A, 4).elements().len(), 24);
        assert_eq!(rs(Kind::B, 3).elements().len(), 48);
        assert_eq!(rs(Kind::D, 4).elements().len(), 192);
    }

    #[test]
    fn apply_inverse_roundtrip_exhaustive() {
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            for n in 3..=4 {
                let r = rs(kind, n);
                let weights: Vec<Weight> = (0..7usize.pow(n as u32))
                    .map(|mut c| {
                        (0..n)
                            .map(|_| {
                                let x = (c % 7) as i32 - 3;
                                c /= 7;
                                x
                            })
                            .collect()
                    })
                    .collect();
                for w in r.elements().iter().step_by(5) {
                    let winv = w.inverse();
                    assert!(w.mul(&winv).unwrap().is_identity());
                    for mu in &weights {
                        assert_eq!(&w.apply(&winv.apply(mu).unwrap()).unwrap(), mu);
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_word_folds_back() {
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            let r = rs(kind, 4);
            for w in r.elements() {
                assert_eq!(r.word_product(&w.reduced_word()).unwrap(), w);
            }
        }
    }

    #[test]
    fn d_parity_preserved_under_products() {
        let r = rs(Kind::D, 4);
        let els = r.elements();
        for u in els.iter().step_by(7) {
            for w in els.iter().step_by(11) {
                let p = u.mul(w).unwrap();
                assert!(WeylElement::new(r, p.window().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn coxeter_orders() {
        let a = rs(Kind::A, 4);
        assert_eq!(a.coxeter_m(1, 2).unwrap(), 3);
        assert_eq!(a.coxeter_m(1, 3).unwrap(), 2);
        assert_eq!(rs(Kind::C, 3).coxeter_m(2, 3).unwrap(), 4);
        assert_eq!(rs(Kind::B, 3).coxeter_m(2, 3).unwrap(), 4);
        let d = rs(Kind::D, 4);
        assert_eq!(d.coxeter_m(2, 4).unwrap(), 3);
        assert_eq!(d.coxeter_m(3, 4).unwrap(), 2);
    }

    #[test]
    fn minimal_reps_match_filter() {
        for (kind, n, d) in [(Kind::A, 5, 2), (Kind::B, 4, 0), (Kind::C, 3, 0), (Kind::D, 4, 0)] {
            let r = rs(kind, n);
            let dd = if kind == Kind::A { Some(d) } else { None };
            let filtered: Vec<_> =
                r.elements().into_iter().filter(|w| w.is_minimal_rep(dd).unwrap()).collect();
            assert_eq!(r.minimal_reps(d).unwrap(), filtered);
        }
    }

    #[test]
    fn full_window_roundtrip() {
        let w = el(Kind::C, 4, &[2, -4, -3, -1]);
        assert_eq!(w.full_window(), vec![2, 5, 6, 8, 1, 3, 4, 7]);
        assert_eq!(WeylElement::from_full_window(w.root_system(), &w.full_window()).unwrap(), w);
    }
}
