//! Standard Young tableaux: descent statistics, streaming enumeration,
//! and exact counting via the hook length formula.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partition::Partition;

/// A standard filling of a Young diagram: entries `1..=n`, strictly
/// increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not a partition".into()))?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidTableau(format!(
                        "entries are not a permutation of 1..={n}"
                    )));
                }
                seen[v] = true;
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for c in 0..row.len() {
                if c + 1 < row.len() && row[c] >= row[c + 1] {
                    return Err(Error::InvalidTableau(format!(
                        "row {r} is not strictly increasing"
                    )));
                }
                if r > 0 && rows[r - 1][c] >= row[c] {
                    return Err(Error::InvalidTableau(format!(
                        "column {c} is not strictly increasing"
                    )));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    /// Wraps rows produced by construction-correct algorithms (RSK,
    /// corner-peeling enumeration); revalidates in debug builds.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(StandardTableau::new(rows.clone()).is_ok());
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .expect("caller guarantees a standard filling");
        StandardTableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// 0-based row index of each value; `row_of[v]` for `v` in `1..=n`.
    fn row_index(&self) -> Vec<usize> {
        let mut row_of = vec![0usize; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        row_of
    }

    /// Positions `i` such that `i+1` sits in a lower row than `i`.
    pub fn descent_set(&self) -> Vec<usize> {
        let row_of = self.row_index();
        (1..self.size())
            .filter(|&i| row_of[i + 1] > row_of[i])
            .collect()
    }

    /// Sum of the descent positions.
    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&i| i as u64).sum()
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `/`, entries comma-separated: `1,4,5,6/2,7,9/3/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau({self})")
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return StandardTableau::new(Vec::new());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|v| v.trim().parse().map_err(|_| Error::Parse(v.to_string())))
                    .collect::<Result<Vec<usize>, Error>>()
            })
            .collect::<Result<Vec<_>, Error>>()?;
        StandardTableau::new(rows)
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Streams every standard tableau of `shape` exactly once.
///
/// Values are placed from `n` down to 1 at the removable corners of the
/// shrinking shape, depth-first by corner row, which yields a fixed
/// deterministic order without materializing the set.
pub fn enumerate_syt(shape: &Partition) -> SytEnumerator {
    SytEnumerator {
        n: shape.size(),
        shape: shape.clone(),
        rows: shape.parts().to_vec(),
        cells: vec![(0, 0); shape.size()],
        stack: Vec::with_capacity(shape.size()),
        state: IterState::Fresh,
    }
}

#[derive(PartialEq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

pub struct SytEnumerator {
    n: usize,
    shape: Partition,
    rows: Vec<usize>,
    /// `cells[v-1]` = (row, col) where value `v` sits.
    cells: Vec<(usize, usize)>,
    /// `stack[d]` = row chosen for value `n - d`.
    stack: Vec<usize>,
    state: IterState,
}

impl SytEnumerator {
    fn corner_at_or_after(&self, from: usize) -> Option<usize> {
        (from..self.rows.len()).find(|&i| {
            self.rows[i] > 0 && (i + 1 == self.rows.len() || self.rows[i] > self.rows[i + 1])
        })
    }

    fn place(&mut self, row: usize) {
        let value = self.n - self.stack.len();
        self.cells[value - 1] = (row, self.rows[row] - 1);
        self.rows[row] -= 1;
        self.stack.push(row);
    }

    /// Fills the remaining depths with the first available corner each.
    fn descend(&mut self) {
        while self.stack.len() < self.n {
            let row = self
                .corner_at_or_after(0)
                .expect("a nonempty partition always has a removable corner");
            self.place(row);
        }
    }

    /// Undoes the deepest choice and moves it to the next corner; returns
    /// false when every branch is exhausted.
    fn advance(&mut self) -> bool {
        while let Some(row) = self.stack.pop() {
            self.rows[row] += 1;
            if let Some(next_row) = self.corner_at_or_after(row + 1) {
                self.place(next_row);
                self.descend();
                return true;
            }
        }
        false
    }

    fn build(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> =
            self.shape.parts().iter().map(|&len| vec![0; len]).collect();
        for (idx, &(r, c)) in self.cells.iter().enumerate() {
            rows[r][c] = idx + 1;
        }
        StandardTableau::from_rows_unchecked(rows)
    }
}

impl Iterator for SytEnumerator {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        match self.state {
            IterState::Done => None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.descend();
                Some(self.build())
            }
            IterState::Running => {
                if self.advance() {
                    Some(self.build())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
        }
    }
}

/// `f^λ = n! / Π_c h_c`, computed exactly.
pub fn count_syt(shape: &Partition) -> BigUint {
    let n = shape.size();
    let mut numerator = BigUint::one();
    for k in 2..=n.max(1) {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::one();
    for cell in shape.cells() {
        denominator *= BigUint::from(shape.hook_length(cell).expect("cell comes from the shape"));
    }
    let (count, rem) = num_integer::div_rem(numerator, denominator);
    debug_assert!(rem.is_zero(), "hook product divides n!");
    count
}

/// Number of standard tableaux of `shape` at each maj value, by exhaustive
/// enumeration. Total mass is `count_syt(shape)`.
pub fn maj_histogram(shape: &Partition) -> BTreeMap<u64, BigUint> {
    let n = shape.size() as u64;
    let max_maj = n * (n.saturating_sub(1)) / 2;
    let mut dense = vec![BigUint::zero(); max_maj as usize + 1];
    for tableau in enumerate_syt(shape) {
        dense[tableau.maj() as usize] += 1u32;
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, count)| !count.is_zero())
        .map(|(maj, count)| (maj as u64, count))
        .collect()
}
