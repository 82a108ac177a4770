//! Conway–Coxeter frieze grids.
//!
//! Entry `m(i, j)` sits at the cell of arc `[i, j]`, with `len = j - i`
//! counting rows from the top 0-row. Rows `len = 0` and `len = n` are zeros,
//! rows `1` and `n - 1` are ones, and the `n - 3` rows in between are stored
//! explicitly for one period `i = 1..=n`. The quiddity row is `len = 2`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polygon::{all_arcs, quiddity, wrap, Arc, Triangulation};
use crate::quiver::quiver_of_triangulation;
use crate::strings::{cc_entry_in, StringError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FriezeError {
    #[error("a quiddity sequence needs at least 4 entries, got {0}")]
    TooShort(usize),
    #[error("division at m({i},{j}) is not exact")]
    NonIntegral { i: i64, j: i64 },
    #[error("m({i},{j}) is not positive")]
    NonPositive { i: i64, j: i64 },
    #[error("row {len} should be all {expected} but m({i},{j}) differs")]
    BorderMismatch {
        len: usize,
        i: i64,
        j: i64,
        expected: u8,
    },
    #[error("frieze of order {n} needs {expected} rows of length {n}")]
    Shape { n: usize, expected: usize },
    #[error("bad entry {0:?}")]
    BadEntry(String),
    #[error(transparent)]
    Strings(#[from] StringError),
}

/// A frieze of order `n`; see the module docs for coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frieze {
    n: usize,
    rows: Vec<Vec<BigUint>>,
}

impl Frieze {
    /// Builds a frieze by evaluating `value` at every interior arc.
    pub fn from_arc_values<E>(
        n: usize,
        mut value: impl FnMut(Arc) -> Result<BigUint, E>,
    ) -> Result<Frieze, E> {
        let mut rows = vec![Vec::with_capacity(n); n.saturating_sub(3)];
        for (l, row) in rows.iter_mut().enumerate() {
            let len = l + 2;
            for i in 1..=n {
                row.push(value(Arc::new(i, wrap(n, (i + len) as i64)))?);
            }
        }
        Ok(Frieze { n, rows })
    }

    /// Wraps explicit interior rows, checking only the shape.
    pub fn from_rows(n: usize, rows: Vec<Vec<BigUint>>) -> Result<Frieze, FriezeError> {
        if n < 4 || rows.len() != n - 3 || rows.iter().any(|r| r.len() != n) {
            return Err(FriezeError::Shape {
                n,
                expected: n.saturating_sub(3),
            });
        }
        Ok(Frieze { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Interior rows top to bottom; `rows()[len - 2][i - 1] = m(i, i + len)`.
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// `m(i, j)` for any `i <= j <= i + n`.
    pub fn entry(&self, i: i64, j: i64) -> BigUint {
        let len = j - i;
        assert!(
            (0..=self.n as i64).contains(&len),
            "m({i},{j}) is outside the frieze"
        );
        let len = len as usize;
        if len == 0 || len == self.n {
            BigUint::zero()
        } else if len == 1 || len == self.n - 1 {
            BigUint::one()
        } else {
            self.rows[len - 2][wrap(self.n, i) - 1].clone()
        }
    }

    /// Entry at the cell of arc `d`; boundary arcs give 1.
    pub fn entry_at(&self, d: Arc) -> BigUint {
        self.entry(d.lo() as i64, d.hi() as i64)
    }

    /// `q_k = m(k - 2, k)` for `k = 1..=n`.
    pub fn quiddity_row(&self) -> Vec<BigUint> {
        (1..=self.n as i64).map(|k| self.entry(k - 2, k)).collect()
    }

    /// Positions of interior entries equal to 1.
    pub fn ones(&self) -> Vec<Arc> {
        all_arcs(self.n)
            .into_iter()
            .filter(|d| d.is_diagonal(self.n) && self.entry_at(*d).is_one())
            .collect()
    }

    /// Staggered text grid, `window` entries per row, border rows included.
    pub fn render(&self, window: usize) -> String {
        let n = self.n as i64;
        let rows: Vec<Vec<BigUint>> = (0..=n)
            .map(|len| {
                let start = 1 - len.div_euclid(2);
                (start..start + window as i64)
                    .map(|i| self.entry(i, i + len))
                    .collect()
            })
            .collect();
        let widest = rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let cell = (widest + 2) & !1;
        let mut out = String::new();
        for (len, row) in rows.iter().enumerate() {
            let mut line = " ".repeat((len % 2) * cell / 2);
            for v in row {
                let _ = write!(line, "{:>cell$}", v.to_string());
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Fills the grid from its quiddity row by the diamond rule.
///
/// `q[k - 1]` is the entry `m(k - 2, k)`. Fails on an inexact division or a
/// non-positive entry, and when the closing rows are not ones and zeros;
/// this happens exactly when `q` is not the quiddity of a triangulation.
pub fn frieze_from_quiddity(q: &[u64]) -> Result<Frieze, FriezeError> {
    let n = q.len();
    if n < 4 {
        return Err(FriezeError::TooShort(n));
    }
    // full[len][i - 1] = m(i, i + len) for len = 0..=n.
    let mut full: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n], vec![BigUint::one(); n]];
    full.push(
        (1..=n)
            .map(|i| BigUint::from(q[wrap(n, i as i64 + 2) - 1]))
            .collect(),
    );
    for len in 3..=n {
        let mut row = Vec::with_capacity(n);
        for i in 1..=n {
            let (ii, jj) = (i as i64, (i + len) as i64);
            // Diamond with top m(i+1,j), left m(i,j), right m(i+1,j+1) and bottom m(i,j+1).
            let left = &full[len - 1][i - 1];
            let right = &full[len - 1][i % n];
            let top = &full[len - 2][i % n];
            if top.is_zero() {
                return Err(FriezeError::NonPositive {
                    i: ii + 1,
                    j: jj - 1,
                });
            }
            let num = left * right;
            if num.is_zero() {
                return Err(FriezeError::NonPositive { i: ii, j: jj });
            }
            let num = num - 1u32;
            if !(&num % top).is_zero() {
                return Err(FriezeError::NonIntegral { i: ii, j: jj });
            }
            let v = num / top;
            if v.is_zero() && len < n - 1 {
                return Err(FriezeError::NonPositive { i: ii, j: jj });
            }
            row.push(v);
        }
        full.push(row);
    }
    for (len, expected) in [(n - 1, 1u8), (n, 0u8)] {
        if let Some(i) = (0..n).find(|&i| full[len][i] != BigUint::from(expected)) {
            let i = i as i64 + 1;
            return Err(FriezeError::BorderMismatch {
                len,
                i,
                j: i + len as i64,
                expected,
            });
        }
    }
    full.truncate(n - 1);
    Frieze::from_rows(n, full.split_off(2))
}

/// The frieze whose entry at each position is the specialized
/// Caldero–Chapoton value there.
pub fn frieze_from_triangulation(t: &Triangulation) -> Result<Frieze, FriezeError> {
    let q = quiver_of_triangulation(t);
    Frieze::from_arc_values(t.n(), |d| cc_entry_in(t, &q, d)).map_err(FriezeError::from)
}

/// Conway–Coxeter construction straight from the quiddity sequence.
pub fn frieze_from_triangulation_quiddity(t: &Triangulation) -> Result<Frieze, FriezeError> {
    frieze_from_quiddity(&quiddity(t))
}

/// First failed frieze condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `m(i,j) m(i+1,j+1) - m(i+1,j) m(i,j+1) != 1`.
    Diamond {
        i: i64,
        j: i64,
    },
    NonPositive {
        i: i64,
        j: i64,
    },
    /// `m(i,j) != m(j,i+n)`.
    Glide {
        i: i64,
        j: i64,
    },
}

/// Checks the diamond rule on one period of diamonds (border rows
/// included), positivity and the glide relation. Periodicity holds by
/// construction since only one period is stored.
pub fn verify(f: &Frieze) -> Result<(), Violation> {
    let n = f.n as i64;
    for len in 2..n - 1 {
        for i in 1..=n {
            if f.entry(i, i + len).is_zero() {
                return Err(Violation::NonPositive { i, j: i + len });
            }
        }
    }
    for len in 1..n {
        for i in 1..=n {
            let j = i + len;
            let lhs = f.entry(i, j) * f.entry(i + 1, j + 1);
            let rhs = f.entry(i + 1, j) * f.entry(i, j + 1) + 1u32;
            if lhs != rhs {
                return Err(Violation::Diamond { i, j });
            }
        }
    }
    for len in 2..n - 1 {
        for i in 1..=n {
            let j = i + len;
            if f.entry(i, j) != f.entry(j, i + n) {
                return Err(Violation::Glide { i, j });
            }
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct FriezeJson {
    n: usize,
    rows: Vec<Vec<serde_json::Value>>,
    offset: Vec<u8>,
}

fn to_json_number(v: &BigUint) -> serde_json::Value {
    match u64::try_from(v) {
        Ok(x) => serde_json::Value::from(x),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

fn from_json_number(v: &serde_json::Value) -> Result<BigUint, FriezeError> {
    match v {
        serde_json::Value::Number(x) => x
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| FriezeError::BadEntry(x.to_string())),
        serde_json::Value::String(s) => s.parse().map_err(|_| FriezeError::BadEntry(s.clone())),
        other => Err(FriezeError::BadEntry(other.to_string())),
    }
}

impl Serialize for Frieze {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FriezeJson {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(to_json_number).collect())
                .collect(),
            offset: (2..self.n - 1).map(|len| (len % 2) as u8).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Frieze {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = FriezeJson::deserialize(d)?;
        let rows = raw
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(from_json_number)
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Frieze::from_rows(raw.n, rows).map_err(D::Error::custom)
    }
}

/// A transcribed patch of a frieze in staggered-column coordinates.
///
/// Cell `(x, len)` is the `x`-th token of the row at depth `len`; cells
/// holding arcs of the same row are two columns apart and neighbouring
/// rows are offset by one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Window {
    cells: BTreeMap<(i64, usize), BigUint>,
}

/// Parses whitespace-separated rows whose first row has depth `first_len`.
///
/// Tokens are `.` for an empty column, a number, or `a>b` for a cell that
/// reads `a` in the first window and `b` in the second. Lines starting with
/// `#` and blank lines are skipped.
pub fn parse_window_pair(text: &str, first_len: usize) -> Result<(Window, Window), FriezeError> {
    let mut before = Window::default();
    let mut after = Window::default();
    let lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    for (r, line) in lines.enumerate() {
        for (x, tok) in line.split_whitespace().enumerate() {
            if tok == "." {
                continue;
            }
            let (a, b) = tok.split_once('>').unwrap_or((tok, tok));
            let parse = |s: &str| {
                s.parse::<BigUint>()
                    .map_err(|_| FriezeError::BadEntry(tok.into()))
            };
            before.cells.insert((x as i64, first_len + r), parse(a)?);
            after.cells.insert((x as i64, first_len + r), parse(b)?);
        }
    }
    Ok((before, after))
}

/// How a window sits inside a frieze: cell `(x, len)` lands on column
/// `shift + x` (or `shift - x` when mirrored), where column `c` of row
/// `len` holds `m(i, i + len)` with `2i + len = c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Alignment {
    pub shift: i64,
    pub mirrored: bool,
}

impl Window {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &BTreeMap<(i64, usize), BigUint> {
        &self.cells
    }

    pub fn get(&self, x: i64, len: usize) -> Option<&BigUint> {
        self.cells.get(&(x, len))
    }

    /// Checks the diamond rule on every diamond fully inside the window.
    pub fn verify(&self) -> Result<(), (i64, usize)> {
        for (&(x, len), v) in &self.cells {
            if len == 0 {
                continue;
            }
            let cells = (
                self.get(x + 2, len),
                self.get(x + 1, len - 1),
                self.get(x + 1, len + 1),
            );
            if let (Some(right), Some(top), Some(bottom)) = cells {
                if v * right != top * bottom + 1u32 {
                    return Err((x, len));
                }
            }
        }
        Ok(())
    }

    /// The frieze value under a window cell for a given alignment.
    pub fn frieze_value(f: &Frieze, x: i64, len: usize, al: Alignment) -> Option<BigUint> {
        let c = if al.mirrored {
            al.shift - x
        } else {
            al.shift + x
        };
        if len > f.n() || (c - len as i64).rem_euclid(2) != 0 {
            return None;
        }
        let i = (c - len as i64) / 2;
        Some(f.entry(i, i + len as i64))
    }

    pub fn matches(&self, f: &Frieze, al: Alignment) -> bool {
        self.cells
            .iter()
            .all(|(&(x, len), v)| Window::frieze_value(f, x, len, al).as_ref() == Some(v))
    }

    /// Every alignment under which the window agrees with `f`, one period of
    /// shifts in each orientation.
    pub fn alignments(&self, f: &Frieze) -> Vec<Alignment> {
        let period = 2 * f.n() as i64;
        [false, true]
            .into_iter()
            .flat_map(|mirrored| (0..period).map(move |shift| Alignment { shift, mirrored }))
            .filter(|&al| self.matches(f, al))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::validate;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn square_frieze() {
        let f = frieze_from_quiddity(&[2, 1, 2, 1]).unwrap();
        assert_eq!(f.rows(), &[big(&[2, 1, 2, 1])]);
        assert_eq!(f.quiddity_row(), big(&[2, 1, 2, 1]));
        assert!(verify(&f).is_ok());
        assert_eq!(
            f.render(4),
            " 0 0 0 0\n  1 1 1 1\n 1 2 1 2\n  1 1 1 1\n 0 0 0 0\n"
        );
    }

    #[test]
    fn pentagon_fan() {
        let f = frieze_from_quiddity(&[3, 1, 2, 2, 1]).unwrap();
        assert!(verify(&f).is_ok());
        assert_eq!(f.quiddity_row(), big(&[3, 1, 2, 2, 1]));
        let t = validate(5, &[Arc::new(1, 3), Arc::new(1, 4)]).unwrap();
        assert_eq!(frieze_from_triangulation(&t).unwrap(), f);
    }

    #[test]
    fn unrealizable_quiddities() {
        assert!(frieze_from_quiddity(&[1, 1, 1, 1]).is_err());
        assert!(frieze_from_quiddity(&[2, 2, 2, 2]).is_err());
        assert!(frieze_from_quiddity(&[1, 2, 1]).is_err());
        assert!(frieze_from_quiddity(&[3, 1, 3, 1, 3]).is_err());
    }

    #[test]
    fn verify_catches_a_bumped_entry() {
        let f = frieze_from_quiddity(&[3, 1, 2, 2, 1]).unwrap();
        let mut rows = f.rows().to_vec();
        rows[1][2] += 1u32;
        let g = Frieze::from_rows(5, rows).unwrap();
        assert!(matches!(verify(&g), Err(Violation::Diamond { .. })));
    }

    #[test]
    fn boundary_entries_are_one() {
        let f = frieze_from_quiddity(&[3, 1, 2, 2, 1]).unwrap();
        for i in 1..5 {
            assert!(f.entry_at(Arc::new(i, i + 1)).is_one());
        }
        assert!(f.entry_at(Arc::new(1, 5)).is_one());
    }

    #[test]
    fn json_round_trip_with_big_entries() {
        let f = Frieze::from_rows(
            4,
            vec![vec![
                BigUint::from(u64::MAX) * 3u32,
                1u32.into(),
                2u32.into(),
                1u32.into(),
            ]],
        )
        .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains("\"55340232221128654845\""));
        assert_eq!(serde_json::from_str::<Frieze>(&s).unwrap(), f);
        let f = frieze_from_quiddity(&[2, 1, 2, 1]).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"n":4,"rows":[[2,1,2,1]],"offset":[0]}"#
        );
    }

    #[test]
    fn window_alignment() {
        let f = frieze_from_quiddity(&[3, 1, 2, 2, 1]).unwrap();
        let (w, w2) = parse_window_pair(". 1 . 1\n3 . 1 . 2", 1).unwrap();
        assert_eq!(w, w2);
        assert!(w.verify().is_ok());
        let found = w.alignments(&f);
        assert!(found.contains(&Alignment {
            shift: 0,
            mirrored: false
        }));
        let (bad, _) = parse_window_pair(". 1 . 1\n3 . 2 . 2", 1).unwrap();
        assert!(bad.alignments(&f).is_empty());
        let (pair_a, pair_b) = parse_window_pair("1>2 . 3", 2).unwrap();
        assert_eq!(pair_a.get(0, 2), Some(&BigUint::from(1u32)));
        assert_eq!(pair_b.get(0, 2), Some(&BigUint::from(2u32)));
        assert_eq!(pair_b.get(2, 2), Some(&BigUint::from(3u32)));
    }
}
