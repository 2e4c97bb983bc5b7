//! Partitions, strict partitions, and their bijections with minimal coset
//! representatives, including the identification of `D_n` and `B_{n-1}`
//! fixed points.

use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{parse_list, Kind, RootSystem, WeylElement};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ^t_j = #{i : λ_i >= j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// Strictly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] <= p[1]) {
            return Err(Error::Shape(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    f.write_str(&s.join(","))
}

/// Componentwise `λ_i <= μ_i`.
pub fn contains(lambda: &[usize], mu: &[usize]) -> bool {
    lambda.len() <= mu.len() && lambda.iter().zip(mu).all(|(a, b)| a <= b)
}

/// `λ_i = v_{d+1-i} - (d+1-i)` on a window of values `1..`.
fn partition_from_window(window: &[usize], d: usize) -> Partition {
    let parts = (1..=d).map(|i| window[d - i] - (d + 1 - i)).collect();
    Partition::new(parts).expect("minimal representative gives a partition")
}

fn window_from_partition(lambda: &Partition, d: usize, n: usize) -> Result<Vec<usize>> {
    let p = lambda.parts();
    if p.len() > d || p.first().is_some_and(|&x| x > n - d) {
        return Err(Error::Shape(format!("{lambda} does not fit in a {d} x {} box", n - d)));
    }
    let mut head: Vec<usize> = (1..=d).map(|i| p.get(d - i).copied().unwrap_or(0) + i).collect();
    head.sort();
    let tail = (1..=n).filter(|x| !head.contains(x));
    Ok(head.iter().copied().chain(tail).collect())
}

/// Type A: the partition of a minimal representative of `W^{P_d}`.
pub fn partition_of(v: &WeylElement, d: usize) -> Result<Partition> {
    if v.root_system().kind() != Kind::A {
        return Err(Error::TypeMismatch("partition_of expects type A".into()));
    }
    if !v.is_minimal_rep(Some(d))? {
        return Err(Error::NotMinimal(v.to_string()));
    }
    Ok(partition_from_window(&v.full_window(), d))
}

/// Type A: inverse of [`partition_of`].
pub fn perm_of(lambda: &Partition, d: usize, n: usize) -> Result<WeylElement> {
    let rs = RootSystem::new(Kind::A, n)?;
    crate::weyl::check_d(n, d)?;
    let window = window_from_partition(lambda, d, n)?;
    WeylElement::new(rs, window.into_iter().map(|x| x as i32).collect())
}

/// Types B, C, D: the symmetric partition read from the `2n` window with
/// `d = n`.
pub fn symmetric_partition_of(w: &WeylElement) -> Result<Partition> {
    if w.root_system().kind() == Kind::A {
        return Err(Error::TypeMismatch("symmetric_partition_of expects type B, C or D".into()));
    }
    if !w.is_minimal_rep(None)? {
        return Err(Error::NotMinimal(w.to_string()));
    }
    let lambda = partition_from_window(&w.full_window(), w.root_system().rank());
    if !lambda.is_symmetric() {
        return Err(Error::Shape(format!("partition {lambda} of {w} is not symmetric")));
    }
    Ok(lambda)
}

/// Types B, C, D: the strict partition of a minimal representative of
/// `W^{P_n}`. B and C drop the boxes below the diagonal; D also drops the
/// diagonal.
pub fn strict_partition_of(w: &WeylElement) -> Result<StrictPartition> {
    let lambda = symmetric_partition_of(w)?;
    let shift = usize::from(w.root_system().kind() == Kind::D);
    let parts =
        lambda.parts().iter().enumerate().map(|(i, &p)| p.saturating_sub(i + shift)).collect();
    StrictPartition::new(parts)
}

fn symmetric_from_strict(strict: &[usize], shift: usize) -> Vec<usize> {
    // Row i of the symmetric shape: mirrored boxes from earlier rows, then
    // its own strict part (shift 0 counts the diagonal once for B/C, shift
    // 1 keeps row i's diagonal out of the strict part for D).
    let len = strict.first().copied().unwrap_or(0) + strict.len() + shift + 1;
    (1..=len)
        .map(|i| {
            let mirrored = (1..i)
                .filter(|&j| strict.get(j - 1).is_some_and(|&p| p + j - 1 + shift >= i))
                .count();
            mirrored + strict.get(i - 1).map_or(0, |&p| p + shift)
        })
        .collect()
}

/// Inverse of [`strict_partition_of`].
pub fn perm_of_strict(lambda: &StrictPartition, rs: RootSystem) -> Result<WeylElement> {
    let n = rs.rank();
    let (shift, max) = match rs.kind() {
        Kind::A => return Err(Error::TypeMismatch("perm_of_strict expects type B, C or D".into())),
        Kind::B | Kind::C => (0, n),
        Kind::D => (1, n - 1),
    };
    if lambda.parts().first().is_some_and(|&p| p > max) || lambda.parts().len() > max {
        return Err(Error::Shape(format!("{lambda} does not fit type {}{n}", rs.kind())));
    }
    let base = symmetric_from_strict(lambda.parts(), shift);
    let mut candidates = vec![base.clone()];
    if shift == 1 {
        // D forgets the diagonal; the parity rule picks one of two fillings.
        let i = lambda.parts().len();
        let mut with_diag = base;
        with_diag[i] += 1;
        candidates.push(with_diag);
    }
    for cand in candidates {
        let Ok(cand) = Partition::new(cand) else { continue };
        let Ok(full) = window_from_partition(&cand, n, 2 * n) else { continue };
        let Ok(w) = WeylElement::from_full_window(rs, &full) else { continue };
        if strict_partition_of(&w).ok().as_ref() == Some(lambda) {
            return Ok(w);
        }
    }
    Err(Error::Shape(format!("{lambda} does not fit type {}{n}", rs.kind())))
}

/// Minimal representative of `D_n` to the one of `B_{n-1}` with the same
/// strict partition: delete `n` and `bar n` from the `2n` window.
pub fn bd_identify(w: &WeylElement) -> Result<WeylElement> {
    let rs = w.root_system();
    if rs.kind() != Kind::D {
        return Err(Error::TypeMismatch("bd_identify expects type D".into()));
    }
    if !w.is_minimal_rep(None)? {
        return Err(Error::NotMinimal(w.to_string()));
    }
    let n = rs.rank();
    let full: Vec<usize> = w
        .full_window()
        .into_iter()
        .filter(|&x| x != n && x != n + 1)
        .map(|x| if x > n + 1 { x - 2 } else { x })
        .collect();
    WeylElement::from_full_window(RootSystem::new(Kind::B, n - 1)?, &full)
}

/// Inverse of [`bd_identify`]: minimal representative of `B_m` to the one
/// of `D_{m+1}`.
pub fn bd_lift(u: &WeylElement) -> Result<WeylElement> {
    let rs = u.root_system();
    if rs.kind() != Kind::B {
        return Err(Error::TypeMismatch("bd_lift expects type B".into()));
    }
    if !u.is_minimal_rep(None)? {
        return Err(Error::NotMinimal(u.to_string()));
    }
    let n = rs.rank() + 1;
    let drs = RootSystem::new(Kind::D, n)?;
    let head: Vec<usize> =
        u.full_window()[..n - 1].iter().map(|&x| if x >= n { x + 2 } else { x }).collect();
    for mid in [n, n + 1] {
        let mut h = head.clone();
        h.push(mid);
        h.sort();
        let full: Vec<usize> = h.iter().copied().chain(h.iter().rev().map(|&x| 2 * n + 1 - x)).collect();
        if let Ok(w) = WeylElement::from_full_window(drs, &full) {
            return Ok(w);
        }
    }
    unreachable!("one of the two insertions has even parity")
}
