//! Set-valued (shifted) tableaux restricted by an ambient shape, and the
//! bijection `f` onto excited Young diagrams.
//!
//! An entry `x` in box `(i,j)` stands for the box `(x, x+j-i)` of the
//! ambient diagram: same diagonal, row `x`.

use std::collections::BTreeMap;

use crate::diagrams::{diagram, BoxSet, Cell, Excitation, Geometry};
use crate::error::{Error, Result};
use crate::shapes::contains;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedTableau {
    geometry: Geometry,
    shape: Vec<usize>,
    cells: BTreeMap<Cell, Vec<usize>>,
}

fn ambient_row(mu: &[usize], x: usize) -> usize {
    if x == 0 {
        0
    } else {
        mu.get(x - 1).copied().unwrap_or(0)
    }
}

/// Whether entry `x` may sit in box `(i,j)` given the ambient `mu`.
fn allowed(geometry: Geometry, mu: &[usize], (i, j): Cell, x: usize) -> bool {
    let m = ambient_row(mu, x);
    let fits = if geometry.is_shifted() {
        m >= 1 && j - i < m
    } else {
        x + j <= m + i
    };
    // Type D diagonal entries keep the row parity.
    fits && !(geometry == Geometry::ShiftedD && i == j && x % 2 != i % 2)
}

impl SetValuedTableau {
    pub fn new(geometry: Geometry, shape: Vec<usize>, cells: BTreeMap<Cell, Vec<usize>>) -> Result<Self> {
        let want = diagram(geometry, &shape);
        if want.len() != cells.len() || want.iter().any(|b| !cells.contains_key(b)) {
            return Err(Error::Shape(format!("cells do not fill the shape {shape:?}")));
        }
        for (b, set) in &cells {
            if set.is_empty() || set.windows(2).any(|p| p[0] >= p[1]) || set[0] == 0 {
                return Err(Error::Shape(format!("box {b:?} needs a nonempty increasing set of positive entries")));
            }
        }
        Ok(SetValuedTableau { geometry, shape, cells })
    }

    /// Every box of row `i` holds `{i}`.
    pub fn top(geometry: Geometry, lambda: &[usize]) -> Self {
        let cells = diagram(geometry, lambda).into_iter().map(|b| (b, vec![b.0])).collect();
        SetValuedTableau { geometry, shape: lambda.to_vec(), cells }
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn cells(&self) -> &BTreeMap<Cell, Vec<usize>> {
        &self.cells
    }

    pub fn entry_count(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        self.cells.iter().all(|(&(i, j), set)| {
            let max = *set.last().expect("nonempty");
            let right_ok = self.cells.get(&(i, j + 1)).is_none_or(|r| max <= r[0]);
            let below_ok = self.cells.get(&(i + 1, j)).is_none_or(|b| max < b[0]);
            right_ok && below_ok
        })
    }

    pub fn is_restricted_by(&self, mu: &[usize]) -> bool {
        self.cells.iter().all(|(&b, set)| set.iter().all(|&x| allowed(self.geometry, mu, b, x)))
    }

    /// Semistandard, restricted by `mu` (including the type D diagonal
    /// parity rule).
    pub fn is_valid_for(&self, mu: &[usize]) -> bool {
        self.is_semistandard() && self.is_restricted_by(mu)
    }

    /// Tableau counterpart of a diagram excitation: move (type 1) or copy
    /// (type 2) entry `x` of box `b` one step down its diagonal (two steps
    /// on a type D diagonal box).
    pub fn excite(&self, b: Cell, x: usize, kind: Excitation, mu: &[usize]) -> Result<Option<Self>> {
        let set = self.cells.get(&b).ok_or(Error::BoxNotPresent(b.0, b.1))?;
        if !set.contains(&x) {
            return Err(Error::Shape(format!("entry {x} is not in box {b:?}")));
        }
        let (i, j) = b;
        let diag = i == j && self.geometry.is_shifted();
        let step = if diag { self.geometry.diagonal_step() } else { 1 };
        let has = |c: Cell, y: usize| self.cells.get(&c).is_some_and(|s| s.contains(&y));
        let mut ok = !set.contains(&(x + step)) && !has((i, j + 1), x) && allowed(self.geometry, mu, b, x + step);
        ok &= if diag && self.geometry == Geometry::ShiftedD { !has((i, i + 1), x + 1) } else { !has((i + 1, j), x + 1) };
        if !ok {
            return Ok(None);
        }
        let mut out = self.clone();
        let s = out.cells.get_mut(&b).expect("present");
        if kind == Excitation::Type1 {
            s.retain(|&y| y != x);
        }
        s.push(x + step);
        s.sort();
        debug_assert!(out.is_valid_for(mu));
        Ok(Some(out))
    }
}

/// All set-valued tableaux of shape `lambda` restricted by `mu`, sorted.
/// With `single_valued`, only ordinary tableaux.
pub fn enumerate_svt(lambda: &[usize], mu: &[usize], geometry: Geometry, single_valued: bool) -> Result<Vec<SetValuedTableau>> {
    if !contains(lambda, mu) {
        return Err(Error::Shape(format!("{lambda:?} is not contained in {mu:?}")));
    }
    BoxSet::top(geometry, lambda, mu)?;
    let boxes = diagram(geometry, lambda);
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    fill(geometry, mu, &boxes, 0, single_valued, &mut cur, &mut out, lambda);
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    geometry: Geometry,
    mu: &[usize],
    boxes: &[Cell],
    k: usize,
    single_valued: bool,
    cur: &mut BTreeMap<Cell, Vec<usize>>,
    out: &mut Vec<SetValuedTableau>,
    lambda: &[usize],
) {
    if k == boxes.len() {
        out.push(SetValuedTableau { geometry, shape: lambda.to_vec(), cells: cur.clone() });
        return;
    }
    let (i, j) = boxes[k];
    let mut lo = 1;
    if let Some(left) = cur.get(&(i, j.wrapping_sub(1))) {
        lo = lo.max(*left.last().expect("nonempty"));
    }
    if i > 1 {
        if let Some(up) = cur.get(&(i - 1, j)) {
            lo = lo.max(up.last().expect("nonempty") + 1);
        }
    }
    let cands: Vec<usize> = (lo..=mu.len()).filter(|&x| allowed(geometry, mu, (i, j), x)).collect();
    let subsets: Vec<Vec<usize>> = if single_valued {
        cands.iter().map(|&x| vec![x]).collect()
    } else {
        (1u32..(1 << cands.len()))
            .map(|m| cands.iter().enumerate().filter(|(t, _)| m >> t & 1 == 1).map(|(_, &x)| x).collect())
            .collect()
    };
    for s in subsets {
        cur.insert((i, j), s);
        fill(geometry, mu, boxes, k + 1, single_valued, cur, out, lambda);
    }
    cur.remove(&(i, j));
}

/// `f(T) = {(x, x+j-i) : (i,j) ∈ T, x ∈ T(i,j)}` inside `mu`.
pub fn f_map(t: &SetValuedTableau, mu: &[usize]) -> Result<BoxSet> {
    let mut boxes = Vec::with_capacity(t.entry_count());
    for (&(i, j), set) in &t.cells {
        for &x in set {
            let col = (x + j).checked_sub(i).filter(|&c| c >= 1).ok_or_else(|| {
                Error::Shape(format!("entry {x} of box ({i},{j}) leaves the diagram"))
            })?;
            boxes.push((x, col));
        }
    }
    let c = BoxSet::new(t.geometry, mu.to_vec(), boxes)?;
    if c.len() != t.entry_count() {
        return Err(Error::Shape("two entries map to the same box".into()));
    }
    Ok(c)
}

/// The unique `T` with `f(T) = c`, filled one diagonal at a time from the
/// largest diagonal down.
pub fn f_inverse(c: &BoxSet, lambda: &[usize]) -> Result<SetValuedTableau> {
    let geometry = c.geometry();
    let mu = c.ambient();
    if !contains(lambda, mu) {
        return Err(Error::Shape(format!("{lambda:?} is not contained in {mu:?}")));
    }
    let diag = |&(i, j): &Cell| j as i64 - i as i64;
    let shape_boxes = diagram(geometry, lambda);
    let mut by_diag: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
    for b in &shape_boxes {
        by_diag.entry(diag(b)).or_default().push(*b);
    }
    let mut targets: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for b in c.boxes() {
        targets.entry(diag(b)).or_default().push(b.0);
    }
    if let Some(q) = targets.keys().find(|q| !by_diag.contains_key(q)) {
        return Err(Error::NotInImage(format!("a box lies on diagonal {q}, outside the shape")));
    }
    let mut cells: BTreeMap<Cell, Vec<usize>> = shape_boxes.iter().map(|&b| (b, Vec::new())).collect();
    for (&q, slots) in by_diag.iter().rev() {
        for &x in targets.get(&q).map(Vec::as_slice).unwrap_or(&[]) {
            let fits: Vec<Cell> = slots
                .iter()
                .copied()
                .filter(|&(i, j)| {
                    let lower = cells.get(&(i.wrapping_sub(1), j)).and_then(|s| s.last().copied()).unwrap_or(0);
                    let upper = cells.get(&(i, j + 1)).and_then(|s| s.first().copied()).unwrap_or(usize::MAX);
                    lower < x && x <= upper
                })
                .collect();
            match fits.as_slice() {
                [b] => cells.get_mut(b).expect("slot").push(x),
                _ => return Err(Error::NotInImage(format!("row {x} on diagonal {q} has {} candidate boxes", fits.len()))),
            }
        }
    }
    let t = SetValuedTableau::new(geometry, lambda.to_vec(), cells)
        .map_err(|e| Error::NotInImage(e.to_string()))?;
    if !t.is_valid_for(mu) || &f_map(&t, mu)? != c {
        return Err(Error::NotInImage("reconstructed tableau does not map back".into()));
    }
    Ok(t)
}
