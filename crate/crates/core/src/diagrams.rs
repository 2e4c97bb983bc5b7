//! Young diagrams and shifted Young diagrams, excitations, excited Young
//! diagrams, reflection tableaux and their reading words.
//!
//! Boxes are `(row, col)`, 1-indexed. Shifted diagrams keep absolute
//! coordinates: row `i` occupies columns `i ..= μ_i + i - 1`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::shapes::contains;
use crate::weyl::{Kind, RootSystem};

pub type Cell = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Geometry {
    Ordinary,
    ShiftedBC,
    ShiftedD,
}

impl Geometry {
    pub fn for_kind(kind: Kind) -> Geometry {
        match kind {
            Kind::A => Geometry::Ordinary,
            Kind::B | Kind::C => Geometry::ShiftedBC,
            Kind::D => Geometry::ShiftedD,
        }
    }

    pub fn is_shifted(self) -> bool {
        self != Geometry::Ordinary
    }

    /// Entry step along a diagonal box: 2 for `D`, 1 otherwise.
    pub fn diagonal_step(self) -> usize {
        if self == Geometry::ShiftedD {
            2
        } else {
            1
        }
    }
}

/// Boxes of the (shifted) diagram of `shape`, row-major.
pub fn diagram(geometry: Geometry, shape: &[usize]) -> Vec<Cell> {
    let mut out = Vec::new();
    for (r, &len) in shape.iter().enumerate() {
        let i = r + 1;
        let first = if geometry.is_shifted() { i } else { 1 };
        out.extend((first..first + len).map(|j| (i, j)));
    }
    out
}

pub fn in_diagram(geometry: Geometry, shape: &[usize], (i, j): Cell) -> bool {
    if i == 0 || i > shape.len() {
        return false;
    }
    let len = shape[i - 1];
    if geometry.is_shifted() {
        j >= i && j < i + len
    } else {
        j >= 1 && j <= len
    }
}

fn check_shape(geometry: Geometry, shape: &[usize]) -> Result<()> {
    let ok = if geometry.is_shifted() {
        shape.windows(2).all(|p| p[0] > p[1]) && shape.last() != Some(&0)
    } else {
        shape.windows(2).all(|p| p[0] >= p[1]) && shape.last() != Some(&0)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Shape(format!("{shape:?} is not a valid shape for {geometry:?}")))
    }
}

/// A set of boxes inside an ambient (shifted) diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxSet {
    geometry: Geometry,
    ambient: Vec<usize>,
    boxes: BTreeSet<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Excitation {
    /// Move the box.
    Type1,
    /// Add the target box.
    Type2,
}

impl BoxSet {
    pub fn new(geometry: Geometry, ambient: Vec<usize>, boxes: impl IntoIterator<Item = Cell>) -> Result<Self> {
        check_shape(geometry, &ambient)?;
        let boxes: BTreeSet<Cell> = boxes.into_iter().collect();
        if let Some(&(i, j)) = boxes.iter().find(|&&b| !in_diagram(geometry, &ambient, b)) {
            return Err(Error::Shape(format!("box ({i},{j}) lies outside the ambient shape {ambient:?}")));
        }
        Ok(BoxSet { geometry, ambient, boxes })
    }

    /// The diagram of `lambda` placed in the top-left of `mu`.
    pub fn top(geometry: Geometry, lambda: &[usize], mu: &[usize]) -> Result<Self> {
        check_shape(geometry, lambda)?;
        if !contains(lambda, mu) {
            return Err(Error::Shape(format!("{lambda:?} is not contained in {mu:?}")));
        }
        BoxSet::new(geometry, mu.to_vec(), diagram(geometry, lambda))
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn ambient(&self) -> &[usize] {
        &self.ambient
    }

    pub fn boxes(&self) -> &BTreeSet<Cell> {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: Cell) -> bool {
        self.boxes.contains(&b)
    }

    fn free(&self, b: Cell) -> bool {
        in_diagram(self.geometry, &self.ambient, b) && !self.boxes.contains(&b)
    }

    /// Target of an excitation at `(i,j)` when its emptiness conditions
    /// hold.
    fn excitation_target(&self, (i, j): Cell) -> Option<Cell> {
        let needed: Vec<Cell>;
        let target;
        match (self.geometry, i == j) {
            (Geometry::ShiftedBC, true) => {
                needed = vec![(i, i + 1), (i + 1, i + 1)];
                target = (i + 1, i + 1);
            }
            (Geometry::ShiftedD, true) => {
                needed = vec![(i, i + 1), (i + 1, i + 1), (i + 1, i + 2), (i + 2, i + 2)];
                target = (i + 2, i + 2);
            }
            _ => {
                needed = vec![(i + 1, j), (i, j + 1), (i + 1, j + 1)];
                target = (i + 1, j + 1);
            }
        }
        needed.iter().all(|&b| self.free(b)).then_some(target)
    }

    pub fn excite(&self, b: Cell, kind: Excitation) -> Result<Option<BoxSet>> {
        if !self.boxes.contains(&b) {
            return Err(Error::BoxNotPresent(b.0, b.1));
        }
        Ok(self.excitation_target(b).map(|t| {
            let mut out = self.clone();
            if kind == Excitation::Type1 {
                out.boxes.remove(&b);
            }
            out.boxes.insert(t);
            out
        }))
    }

    /// Text picture: `#` for boxes of the set, `.` for the rest of the ambient.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (r, &len) in self.ambient.iter().enumerate() {
            let i = r + 1;
            let first = if self.geometry.is_shifted() { i } else { 1 };
            s.push_str(&" ".repeat(2 * (first - 1)));
            let row: Vec<&str> =
                (first..first + len).map(|j| if self.contains((i, j)) { "#" } else { "." }).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }
}

/// All excited Young diagrams of `lambda` inside `mu`, sorted by box list.
/// With `reduced_only`, only type 1 excitations are used.
pub fn enumerate_eyd(lambda: &[usize], mu: &[usize], geometry: Geometry, reduced_only: bool) -> Result<Vec<BoxSet>> {
    let start = BoxSet::top(geometry, lambda, mu)?;
    let cells = diagram(geometry, mu);
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    let words = cells.len().div_ceil(64).max(1);
    let key = |c: &BoxSet| {
        let mut bits = vec![0u64; words];
        for b in &c.boxes {
            let k = index[b];
            bits[k / 64] |= 1 << (k % 64);
        }
        bits
    };
    let kinds: &[Excitation] =
        if reduced_only { &[Excitation::Type1] } else { &[Excitation::Type1, Excitation::Type2] };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(key(&start));
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        for &b in &c.boxes {
            for &kind in kinds {
                if let Some(next) = c.excite(b, kind)? {
                    if seen.insert(key(&next)) {
                        queue.push_back(next);
                    }
                }
            }
        }
        out.push(c);
    }
    out.sort();
    Ok(out)
}

/// Type 1 and type 2 energies of an excited diagram relative to `lambda`.
/// In type `D` a diagonal box `(i,i)` weighs `i` rather than `2i`.
pub fn energies(c: &BoxSet, lambda: &[usize]) -> (Ratio<i64>, usize) {
    let weight = |&(i, j): &Cell| -> i64 {
        if c.geometry == Geometry::ShiftedD && i == j {
            i as i64
        } else {
            (i + j) as i64
        }
    };
    let top = diagram(c.geometry, lambda);
    let e1 = c.boxes.iter().map(weight).sum::<i64>() - top.iter().map(weight).sum::<i64>();
    let size: usize = lambda.iter().sum();
    (Ratio::new(e1, 2), c.len() - size)
}

/// Filling of a (shifted) diagram by simple reflections, with its reading
/// order (rows bottom to top, each row right to left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionTableau {
    geometry: Geometry,
    shape: Vec<usize>,
    letters: BTreeMap<Cell, usize>,
    order: Vec<Cell>,
}

impl ReflectionTableau {
    pub fn new(rs: RootSystem, d: usize, mu: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let geometry = Geometry::for_kind(rs.kind());
        check_shape(geometry, mu)?;
        let fits = match rs.kind() {
            Kind::A => {
                crate::weyl::check_d(n, d)?;
                mu.len() <= d && mu.first().is_none_or(|&m| m <= n - d)
            }
            Kind::B | Kind::C => mu.first().is_none_or(|&m| m <= n),
            Kind::D => mu.first().is_none_or(|&m| m < n),
        };
        if !fits {
            return Err(Error::Shape(format!("{mu:?} does not fit type {}{n}", rs.kind())));
        }
        let letter = |(i, j): Cell| -> usize {
            match rs.kind() {
                Kind::A => d + j - i,
                Kind::B | Kind::C => n + i - j,
                Kind::D if i == j => {
                    if i % 2 == 1 {
                        n
                    } else {
                        n - 1
                    }
                }
                Kind::D => n + i - j - 1,
            }
        };
        let cells = diagram(geometry, mu);
        let letters = cells.iter().map(|&b| (b, letter(b))).collect();
        let mut order = cells;
        order.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        Ok(ReflectionTableau { geometry, shape: mu.to_vec(), letters, order })
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn letter(&self, b: Cell) -> Option<usize> {
        self.letters.get(&b).copied()
    }

    /// Boxes in reading order.
    pub fn reading_order(&self) -> &[Cell] {
        &self.order
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.order.iter().map(|b| self.letters[b]).collect()
    }

    /// Position of each box in the reading word.
    pub fn positions(&self) -> BTreeMap<Cell, usize> {
        self.order.iter().enumerate().map(|(k, &b)| (b, k)).collect()
    }

    /// Increasing positions of the boxes of `c` in the reading word.
    pub fn subword_of(&self, c: &BoxSet) -> Result<Vec<usize>> {
        let pos = self.positions();
        let mut out = c
            .boxes()
            .iter()
            .map(|b| pos.get(b).copied().ok_or(Error::BoxNotPresent(b.0, b.1)))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::demazure_fold;

    fn size_histogram(ds: &[BoxSet]) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for d in ds {
            *h.entry(d.len()).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn type_one_move_from_top() {
        let top = BoxSet::top(Geometry::Ordinary, &[2, 1], &[4, 4, 3]).unwrap();
        let moved = top.excite((2, 1), Excitation::Type1).unwrap().unwrap();
        assert_eq!(moved.boxes().iter().copied().collect::<Vec<_>>(), vec![(1, 1), (1, 2), (3, 2)]);
        // (1,1) is blocked by (1,2) and (2,1).
        assert_eq!(top.excite((1, 1), Excitation::Type1).unwrap(), None);
        assert!(top.excite((3, 3), Excitation::Type1).is_err());
        let d = BoxSet::top(Geometry::ShiftedD, &[1], &[3, 1]).unwrap();
        assert_eq!(d.excite((1, 1), Excitation::Type1).unwrap(), None);
    }

    #[test]
    fn worked_example_counts() {
        let a = enumerate_eyd(&[2, 1], &[4, 4, 3], Geometry::Ordinary, false).unwrap();
        assert_eq!(a.len(), 11);
        assert_eq!(size_histogram(&a), BTreeMap::from([(3, 5), (4, 5), (5, 1)]));
        let c = enumerate_eyd(&[2, 1], &[4, 2, 1], Geometry::ShiftedBC, false).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(enumerate_eyd(&[2, 1], &[4, 2, 1], Geometry::ShiftedBC, true).unwrap().len(), 4);
        let d = enumerate_eyd(&[3, 1], &[5, 3, 2, 1], Geometry::ShiftedD, false).unwrap();
        assert_eq!(size_histogram(&d), BTreeMap::from([(4, 5), (5, 5), (6, 1)]));
    }

    #[test]
    fn trivial_enumerations() {
        for g in [Geometry::Ordinary, Geometry::ShiftedBC, Geometry::ShiftedD] {
            assert_eq!(enumerate_eyd(&[3, 1], &[3, 1], g, false).unwrap().len(), 1);
            let empty = enumerate_eyd(&[], &[4, 2], g, false).unwrap();
            assert_eq!(empty.len(), 1);
            assert!(empty[0].is_empty());
        }
        assert!(enumerate_eyd(&[3], &[2, 2], Geometry::Ordinary, false).is_err());
    }

    #[test]
    fn energies_of_examples() {
        let lambda = [2, 1];
        let all = enumerate_eyd(&lambda, &[4, 4, 3], Geometry::Ordinary, false).unwrap();
        let top = BoxSet::top(Geometry::Ordinary, &lambda, &[4, 4, 3]).unwrap();
        assert_eq!(energies(&top, &lambda), (Ratio::from_integer(0), 0));
        let big = all.iter().find(|c| c.len() == 5).unwrap();
        assert_eq!(energies(big, &lambda).1, 2);
        for c in &all {
            for &b in c.boxes() {
                if let Some(next) = c.excite(b, Excitation::Type2).unwrap() {
                    assert_eq!(energies(&next, &lambda).1, energies(c, &lambda).1 + 1);
                }
                if let Some(next) = c.excite(b, Excitation::Type1).unwrap() {
                    assert_eq!(energies(&next, &lambda).0, energies(c, &lambda).0 + 1);
                }
            }
        }
    }

    #[test]
    fn reflection_tableau_examples() {
        let a8 = RootSystem::new(Kind::A, 8).unwrap();
        let t = ReflectionTableau::new(a8, 4, &[4, 3, 3, 2]).unwrap();
        assert_eq!(t.letter((1, 1)), Some(4));
        assert_eq!(t.letter((1, 4)), Some(7));
        assert_eq!(t.letter((4, 2)), Some(2));
        assert_eq!(t.reading_word(), vec![2, 1, 4, 3, 2, 5, 4, 3, 7, 6, 5, 4]);

        let c6 = RootSystem::new(Kind::C, 6).unwrap();
        let t = ReflectionTableau::new(c6, 6, &[6, 5, 3, 2]).unwrap();
        assert_eq!(t.letter((1, 1)), Some(6));
        assert_eq!(t.letter((1, 6)), Some(1));
        assert_eq!(
            t.reading_word(),
            vec![5, 6, 4, 5, 6, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6]
        );

        let d7 = RootSystem::new(Kind::D, 7).unwrap();
        let t = ReflectionTableau::new(d7, 7, &[6, 5, 3, 2]).unwrap();
        assert_eq!(t.letter((1, 1)), Some(7));
        assert_eq!(t.letter((2, 2)), Some(6));
        assert_eq!(t.letter((3, 3)), Some(7));
        assert_eq!(t.reading_word(), vec![5, 6, 4, 5, 7, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 7]);
        assert!(ReflectionTableau::new(d7, 7, &[7]).is_err());
    }

    #[test]
    fn reading_word_small() {
        let a3 = RootSystem::new(Kind::A, 3).unwrap();
        let t = ReflectionTableau::new(a3, 1, &[2]).unwrap();
        assert_eq!(t.reading_word(), vec![2, 1]);
        assert_eq!(demazure_fold(a3, &t.reading_word()).unwrap().window(), &[3, 1, 2]);
        assert!(ReflectionTableau::new(a3, 1, &[]).unwrap().reading_word().is_empty());
    }

    #[test]
    fn subword_positions() {
        let a8 = RootSystem::new(Kind::A, 8).unwrap();
        let mu = [4, 3, 3, 2];
        let t = ReflectionTableau::new(a8, 4, &mu).unwrap();
        let full = BoxSet::new(Geometry::Ordinary, mu.to_vec(), diagram(Geometry::Ordinary, &mu)).unwrap();
        assert_eq!(t.subword_of(&full).unwrap(), (0..12).collect::<Vec<_>>());
        let empty = BoxSet::new(Geometry::Ordinary, mu.to_vec(), []).unwrap();
        assert!(t.subword_of(&empty).unwrap().is_empty());
        assert!(BoxSet::new(Geometry::Ordinary, mu.to_vec(), [(4, 4)]).is_err());
        let c = BoxSet::new(Geometry::Ordinary, mu.to_vec(), [(3, 1), (2, 1), (2, 2), (3, 3), (1, 4)]).unwrap();
        let word = t.reading_word();
        let letters: Vec<usize> = t.subword_of(&c).unwrap().iter().map(|&p| word[p]).collect();
        assert_eq!(letters, vec![4, 2, 4, 3, 7]);
    }
}
