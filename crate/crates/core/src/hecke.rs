//! 0-Hecke (Demazure) products, the subsequence sets `T(w, s)`, commutation
//! classes and full commutativity.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::weyl::{RootSystem, WeylElement};

/// Default limit on word length for subsequence enumeration.
pub const DEFAULT_CAP: usize = 24;

/// Demazure product of `word`, folded right to left: `u ← s_k u` whenever
/// that increases the length.
pub fn demazure_fold(rs: RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut u = rs.identity();
    for &k in word.iter().rev() {
        rs.check_letter(k)?;
        if !u.is_left_descent(k) {
            u = u.left_mul_simple(k);
        }
    }
    Ok(u)
}

/// Demazure product folded left to right: `u ← u s_k` on length increase.
pub fn demazure_fold_left(rs: RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut u = rs.identity();
    for &k in word {
        rs.check_letter(k)?;
        if !u.is_right_descent(k) {
            u = u.right_mul_simple(k);
        }
    }
    Ok(u)
}

pub fn is_reduced(rs: RootSystem, word: &[usize]) -> Result<bool> {
    Ok(rs.word_product(word)?.length() == word.len())
}

/// One element of `T(w, s)`: positions (0-based, increasing) into the word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subsequence {
    pub indices: Vec<usize>,
    /// `len - l(w)`.
    pub excess: usize,
}

impl Subsequence {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn letters(&self, word: &[usize]) -> Vec<usize> {
        self.indices.iter().map(|&i| word[i]).collect()
    }
}

/// Search state while scanning the word from the right. `rest = w u^{-1}`
/// where `u` is the fold of the letters chosen so far; `u` stays a right
/// factor of `w`, so `l(rest) = l(w) - l(u)`.
#[derive(Clone)]
struct State {
    pos: usize,
    rest: WeylElement,
    rest_len: usize,
    u: WeylElement,
    chosen: Vec<usize>,
}

fn expand(word: &[usize], st: State, out: &mut Vec<Vec<usize>>) {
    if st.rest_len == 0 && st.pos == 0 {
        let mut c = st.chosen;
        c.reverse();
        out.push(c);
        return;
    }
    if st.pos < st.rest_len {
        return;
    }
    for child in children(word, st) {
        expand(word, child, out);
    }
}

fn children(word: &[usize], st: State) -> Vec<State> {
    let p = st.pos - 1;
    let k = word[p];
    let mut out = Vec::with_capacity(2);
    if st.u.is_left_descent(k) {
        // Absorbed: H_s H_u = H_u.
        let mut chosen = st.chosen.clone();
        chosen.push(p);
        out.push(State { pos: p, rest: st.rest.clone(), rest_len: st.rest_len, u: st.u.clone(), chosen });
    } else if st.rest_len > 0 && st.rest.is_right_descent(k) {
        let mut chosen = st.chosen.clone();
        chosen.push(p);
        out.push(State {
            pos: p,
            rest: st.rest.right_mul_simple(k),
            rest_len: st.rest_len - 1,
            u: st.u.left_mul_simple(k),
            chosen,
        });
    }
    out.push(State { pos: p, ..st });
    out
}

/// All index subsequences of `word` whose Demazure product is `w`, in
/// lexicographic order of index tuples.
pub fn hecke_subsequences(w: &WeylElement, word: &[usize], cap: usize) -> Result<Vec<Subsequence>> {
    hecke_subsequences_with(w, word, cap, false)
}

/// As [`hecke_subsequences`]; with `parallel` the top levels of the search
/// tree are split across the rayon pool. Output order does not depend on it.
pub fn hecke_subsequences_with(
    w: &WeylElement,
    word: &[usize],
    cap: usize,
    parallel: bool,
) -> Result<Vec<Subsequence>> {
    let rs = w.root_system();
    if word.len() > cap {
        return Err(Error::CapExceeded { len: word.len(), cap });
    }
    for &k in word {
        rs.check_letter(k)?;
    }
    let lw = w.length();
    let root = State { pos: word.len(), rest: w.clone(), rest_len: lw, u: rs.identity(), chosen: Vec::new() };
    let mut found = Vec::new();
    if parallel {
        let mut frontier = vec![root];
        for _ in 0..8 {
            let mut next = Vec::new();
            for st in frontier {
                if st.pos == 0 || st.pos < st.rest_len {
                    next.push(st);
                } else {
                    next.extend(children(word, st));
                }
            }
            frontier = next;
        }
        let parts: Vec<Vec<Vec<usize>>> = frontier
            .into_par_iter()
            .map(|st| {
                let mut v = Vec::new();
                expand(word, st, &mut v);
                v
            })
            .collect();
        found.extend(parts.into_iter().flatten());
    } else {
        expand(word, root, &mut found);
    }
    found.sort();
    Ok(found.into_iter().map(|indices| Subsequence { excess: indices.len() - lw, indices }).collect())
}

/// Coxeter matrix entries `m(s,t)` for all pairs of letters (1-based).
pub fn coxeter_matrix(rs: RootSystem) -> Vec<Vec<usize>> {
    let m = rs.num_simple();
    (0..=m)
        .map(|s| (0..=m).map(|t| if s == 0 || t == 0 { 1 } else { rs.coxeter_m(s, t).expect("valid letters") }).collect())
        .collect()
}

/// Every word obtained from the reduced word `word` by swapping adjacent
/// commuting letters, sorted.
pub fn commutation_class(rs: RootSystem, word: &[usize]) -> Result<Vec<Vec<usize>>> {
    if !is_reduced(rs, word)? {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let m = coxeter_matrix(rs);
    Ok(commutation_class_with(&m, word))
}

fn commutation_class_with(m: &[Vec<usize>], word: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if m[cur[i]][cur[i + 1]] == 2 {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn has_braid_factor(m: &[Vec<usize>], word: &[usize]) -> bool {
    (0..word.len().saturating_sub(1)).any(|i| {
        let (s, t) = (word[i], word[i + 1]);
        let len = m[s][t];
        s != t
            && len >= 3
            && i + len <= word.len()
            && (0..len).all(|c| word[i + c] == if c % 2 == 0 { s } else { t })
    })
}

/// True when no word in the commutation class of a reduced word of `w`
/// contains an alternating factor `s t s ...` of length `m(s,t) >= 3`.
pub fn is_fully_commutative(w: &WeylElement) -> bool {
    let m = coxeter_matrix(w.root_system());
    commutation_class_with(&m, &w.reduced_word()).iter().all(|u| !has_braid_factor(&m, u))
}

/// Positions `i < j` with equal letters such that every letter strictly
/// between them commutes with that letter, if any.
pub fn find_commuting_repeat(rs: RootSystem, letters: &[usize]) -> Option<(usize, usize)> {
    let m = coxeter_matrix(rs);
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if letters[j] == letters[i] {
                return Some((i, j));
            }
            if m[letters[i]][letters[j]] != 2 {
                break;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Kind;

    fn rs(kind: Kind, n: usize) -> RootSystem {
        RootSystem::new(kind, n).unwrap()
    }

    fn naive(w: &WeylElement, word: &[usize]) -> Vec<Vec<usize>> {
        let rs = w.root_system();
        let mut out = Vec::new();
        for mask in 0u32..(1 << word.len()) {
            let idx: Vec<usize> = (0..word.len()).filter(|&i| mask >> i & 1 == 1).collect();
            let letters: Vec<usize> = idx.iter().map(|&i| word[i]).collect();
            if &demazure_fold(rs, &letters).unwrap() == w {
                out.push(idx);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn fold_examples() {
        let a = rs(Kind::A, 3);
        assert_eq!(demazure_fold(a, &[1, 1]).unwrap(), a.simple_reflection(1).unwrap());
        assert_eq!(demazure_fold(a, &[1, 2, 1, 2]).unwrap().window(), &[3, 2, 1]);
        assert!(demazure_fold(a, &[]).unwrap().is_identity());
        assert!(demazure_fold(a, &[3]).is_err());
    }

    #[test]
    fn fold_directions_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            let r = rs(kind, 4);
            for _ in 0..300 {
                let len = rng.gen_range(0..=12);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=r.num_simple())).collect();
                let f = demazure_fold(r, &word).unwrap();
                assert_eq!(f, demazure_fold_left(r, &word).unwrap());
                assert!(word.len() >= f.length());
            }
        }
    }

    #[test]
    fn subsequence_examples() {
        let a = rs(Kind::A, 3);
        let s1 = a.simple_reflection(1).unwrap();
        let t = hecke_subsequences(&s1, &[1, 2, 1], DEFAULT_CAP).unwrap();
        let idx: Vec<Vec<usize>> = t.iter().map(|s| s.indices.clone()).collect();
        assert_eq!(idx, vec![vec![0], vec![0, 2], vec![2]]);
        assert_eq!(t.iter().map(|s| s.excess).collect::<Vec<_>>(), vec![0, 1, 0]);
        let id = hecke_subsequences(&a.identity(), &[1, 2, 1], DEFAULT_CAP).unwrap();
        assert_eq!(id.len(), 1);
        assert!(id[0].is_empty());
        let long = a.word_product(&[1, 2, 1]).unwrap();
        assert!(hecke_subsequences(&long, &[1, 2], DEFAULT_CAP).unwrap().is_empty());
        assert!(matches!(
            hecke_subsequences(&s1, &[1; 5], 4),
            Err(Error::CapExceeded { len: 5, cap: 4 })
        ));
    }

    #[test]
    fn pruned_search_matches_bitmask() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            let r = rs(kind, 4);
            let els = r.elements();
            for _ in 0..60 {
                let len = rng.gen_range(0..=10);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=r.num_simple())).collect();
                let w = &els[rng.gen_range(0..els.len())];
                let want = naive(w, &word);
                let got: Vec<Vec<usize>> =
                    hecke_subsequences(w, &word, DEFAULT_CAP).unwrap().into_iter().map(|s| s.indices).collect();
                assert_eq!(got, want);
                let par: Vec<Vec<usize>> = hecke_subsequences_with(w, &word, DEFAULT_CAP, true)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.indices)
                    .collect();
                assert_eq!(par, want);
            }
        }
    }

    #[test]
    fn commutation_class_examples() {
        let a4 = rs(Kind::A, 4);
        assert_eq!(commutation_class(a4, &[1, 3]).unwrap(), vec![vec![1, 3], vec![3, 1]]);
        assert_eq!(commutation_class(rs(Kind::A, 3), &[1, 2]).unwrap(), vec![vec![1, 2]]);
        assert_eq!(commutation_class(a4, &[2]).unwrap(), vec![vec![2]]);
        assert!(commutation_class(a4, &[1, 1]).is_err());
    }

    #[test]
    fn full_commutativity_examples() {
        assert!(is_fully_commutative(&rs(Kind::A, 3).identity()));
        assert!(!is_fully_commutative(&rs(Kind::A, 3).word_product(&[1, 2, 1]).unwrap()));
        let b3 = rs(Kind::B, 3);
        assert!(is_fully_commutative(&b3.word_product(&[2, 3, 2, 1]).unwrap()));
        assert!(!is_fully_commutative(&b3.word_product(&[2, 3, 2, 3]).unwrap()));
    }

    #[test]
    fn fully_commutative_letter_counts_agree() {
        for kind in [Kind::A, Kind::B, Kind::D] {
            let r = rs(kind, 4);
            for w in r.elements().iter().filter(|w| is_fully_commutative(w)) {
                let class = commutation_class(r, &w.reduced_word()).unwrap();
                let sorted = |u: &Vec<usize>| {
                    let mut u = u.clone();
                    u.sort();
                    u
                };
                assert!(class.iter().all(|u| sorted(u) == sorted(&class[0])));
            }
        }
    }

    #[test]
    fn commuting_repeat_exists_for_nonreduced_fc_words() {
        // Exhaustive over words up to length 6 in rank 3 (A, B) and rank 4 (D).
        for (kind, n, maxlen) in [(Kind::A, 4, 6), (Kind::B, 3, 6), (Kind::D, 4, 5)] {
            let r = rs(kind, n);
            let m = r.num_simple();
            for len in 1..=maxlen {
                let total = m.pow(len as u32);
                for code in 0..total {
                    let mut c = code;
                    let word: Vec<usize> = (0..len)
                        .map(|_| {
                            let k = c % m + 1;
                            c /= m;
                            k
                        })
                        .collect();
                    let w = demazure_fold(r, &word).unwrap();
                    if word.len() > w.length() && is_fully_commutative(&w) {
                        assert!(find_commuting_repeat(r, &word).is_some(), "{kind:?} {word:?}");
                    }
                }
            }
        }
    }
}
