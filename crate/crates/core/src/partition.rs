//! Integer partitions viewed as Young diagrams.
//!
//! A partition is stored as its weakly decreasing list of positive row
//! lengths; trailing zeros are trimmed on construction and read back as
//! virtual zeros through [`Partition::part`]. Rows are indexed from 0, so
//! `b_stat` is literally `sum(i * parts[i])`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A cell of a Young diagram, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Classification of a shape as a hook `(u, 1^{n-u})` or not.
///
/// The leg of a hook is its full first column, `n - u + 1` cells; the hook
/// is odd or even according to the parity of that length. A single row is
/// an odd hook (leg length 1) and a single column follows the parity of
/// its height.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookClass {
    NotHook,
    OddHook,
    EvenHook,
}

/// An integer partition `(parts[0] >= parts[1] >= ... >= 1)`.
///
/// Statistics such as [`Partition::b_stat`] use machine-width integers;
/// they stay well within `u64` for any size up to the supported cap of
/// `n <= 2^15`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `(arm, 1^ones)`; `arm = 0` with `ones > 0` gives a column.
    pub fn hook(arm: usize, ones: usize) -> Self {
        let mut parts = Vec::with_capacity(ones + 1);
        if arm > 0 {
            parts.push(arm);
        }
        parts.extend(std::iter::repeat_n(1, ones));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length with virtual zeros past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of (nonzero) rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total number of cells `n`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All parts equal (and at least one row).
    pub fn is_rectangle(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|&p| p == self.parts[0])
    }

    /// Rectangle with at least two rows and at least two columns; the
    /// shapes whose major-index support skips `m+1` and `M-1`.
    pub fn is_proper_rectangle(&self) -> bool {
        self.is_rectangle() && self.rows() >= 2 && self.parts[0] >= 2
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.parts.iter().take_while(|&&p| p > c).count());
        }
        Partition { parts }
    }

    /// `b(λ) = Σ_i i·λ_i` over 0-based rows; the minimum of `maj` over the
    /// standard tableaux of this shape.
    pub fn b_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Number of columns of odd length. Always congruent to `n` mod 2.
    pub fn odd_column_count(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .filter(|&&c| c % 2 == 1)
            .count()
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook_length(&self, cell: Cell) -> Result<usize, Error> {
        if cell.col >= self.part(cell.row) {
            return Err(Error::CellOutOfShape {
                row: cell.row,
                col: cell.col,
                shape: self.to_string(),
            });
        }
        let arm = self.parts[cell.row] - cell.col - 1;
        let leg = self.parts[cell.row + 1..]
            .iter()
            .take_while(|&&p| p > cell.col)
            .count();
        Ok(arm + leg + 1)
    }

    /// Iterates over the cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell::new(r, c)))
    }

    /// Classifies a nonempty shape as a hook or not.
    ///
    /// # Panics
    /// Panics on the empty partition.
    pub fn hook_classification(&self) -> HookClass {
        assert!(!self.is_empty(), "hook classification of the empty shape");
        if self.rows() >= 2 && self.parts[1] >= 2 {
            return HookClass::NotHook;
        }
        // λ = (u, 1^{n-u}); the leg is the full first column, n - u + 1 cells.
        let u = self.parts[0];
        let leg_len = self.size() - u + 1;
        if leg_len % 2 == 1 {
            HookClass::OddHook
        } else {
            HookClass::EvenHook
        }
    }

    /// Dominance comparison: `self ⊴ other` iff every prefix sum of `self`
    /// is at most the corresponding prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, Error> {
        let (n, m) = (self.size(), other.size());
        if n != m {
            return Err(Error::SizeMismatch(n, m));
        }
        let len = self.rows().max(other.rows());
        let (mut acc_s, mut acc_o) = (0usize, 0usize);
        for i in 0..len {
            acc_s += self.part(i);
            acc_o += other.part(i);
            if acc_s > acc_o {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracket form `[4,3,1,1]`. Exponent shorthand is accepted
    /// on input: `[2^4,1]` reads as `(2,2,2,2,1)`. Brackets are optional.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .map(|rest| {
                rest.strip_suffix(']')
                    .ok_or_else(|| Error::Parse(s.to_string()))
            })
            .transpose()?
            .unwrap_or(s);
        let inner = inner.trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for token in inner.split(',') {
                let token = token.trim();
                let (base, mult) = match token.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim()),
                    None => (token, "1"),
                };
                let value: usize = base.parse().map_err(|_| Error::Parse(token.to_string()))?;
                let count: usize = mult.parse().map_err(|_| Error::Parse(token.to_string()))?;
                parts.extend(std::iter::repeat_n(value, count));
            }
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Streaming iterator behind [`enumerate_partitions`].
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// Next partition in reverse lexicographic order, if any.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    // Find the last part greater than 1, shrink it, and redistribute the
    // freed cells greedily in chunks of the new value.
    let i = parts.iter().rposition(|&p| p > 1)?;
    let ones = parts.len() - i - 1;
    let new_part = parts[i] - 1;
    let mut rest = parts[i] + ones - new_part;
    let mut next = parts[..i].to_vec();
    next.push(new_part);
    while rest > 0 {
        let chunk = rest.min(new_part);
        next.push(chunk);
        rest -= chunk;
    }
    Some(next)
}

/// The diagrams of `n` with exactly `r` odd columns, in the order of
/// [`enumerate_partitions`]. Empty whenever `r > n` or `n - r` is odd.
pub fn enumerate_shapes_with_odd_columns(n: usize, r: usize) -> impl Iterator<Item = Partition> {
    enumerate_partitions(n).filter(move |p| p.odd_column_count() == r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![2, 4, 1]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[0]), Partition::empty());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 1, 1]).conjugate(), p(&[4, 2, 2, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn b_stat_examples() {
        // Row filling 0/1/2 of (4,3,2) sums to 0 + 3 + 4.
        assert_eq!(p(&[4, 3, 2]).b_stat(), 7);
        // Column sums 6+3+1 of (4,3,2) read off b of its conjugate (3,3,2,1).
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
        assert_eq!(p(&[3, 3, 2, 1]).b_stat(), 10);
        assert_eq!(p(&[4, 2, 2, 1]).b_stat(), 9);
        assert_eq!(p(&[7]).b_stat(), 0);
        assert_eq!(p(&[1, 1, 1, 1]).b_stat(), 6);
        assert_eq!(Partition::empty().b_stat(), 0);
    }

    #[test]
    fn odd_column_examples() {
        assert_eq!(p(&[5, 4]).odd_column_count(), 1);
        assert_eq!(p(&[1, 1, 1, 1]).odd_column_count(), 0);
        assert_eq!(p(&[4, 3, 1, 1]).odd_column_count(), 1);
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p(&[2, 2]).hook_length(Cell::new(0, 0)), Ok(3));
        assert_eq!(p(&[6]).hook_length(Cell::new(0, 0)), Ok(6));
        assert_eq!(p(&[2, 2]).hook_length(Cell::new(1, 1)), Ok(1));
        assert!(matches!(
            p(&[2, 2]).hook_length(Cell::new(2, 0)),
            Err(Error::CellOutOfShape { .. })
        ));
    }

    #[test]
    fn hook_classification_examples() {
        assert_eq!(p(&[3, 1, 1]).hook_classification(), HookClass::OddHook);
        assert_eq!(p(&[2, 1, 1, 1]).hook_classification(), HookClass::EvenHook);
        assert_eq!(p(&[2, 2]).hook_classification(), HookClass::NotHook);
        assert_eq!(p(&[4]).hook_classification(), HookClass::OddHook);
        assert_eq!(p(&[1, 1]).hook_classification(), HookClass::EvenHook);
        assert_eq!(p(&[1, 1, 1]).hook_classification(), HookClass::OddHook);
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[1, 1, 1, 1]).dominance_leq(&p(&[2, 2])), Ok(true));
        assert_eq!(p(&[3, 1]).dominance_leq(&p(&[3, 1])), Ok(true));
        assert_eq!(p(&[3, 1]).dominance_leq(&p(&[2, 2])), Ok(false));
        assert!(matches!(
            p(&[3, 1]).dominance_leq(&p(&[3])),
            Err(Error::SizeMismatch(4, 3))
        ));
    }

    #[test]
    fn partitions_of_four_in_reverse_lex() {
        let got: Vec<Partition> = enumerate_partitions(4).collect();
        let want = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn partitions_of_zero() {
        let got: Vec<Partition> = enumerate_partitions(0).collect();
        assert_eq!(got, vec![Partition::empty()]);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        // Independent count: p(n) via Euler's pentagonal number recurrence.
        let max = 40usize;
        let mut counts = vec![0i64; max + 1];
        counts[0] = 1;
        for n in 1..=max {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > n {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                total += sign * counts[n - g1 as usize];
                if g2 as usize <= n {
                    total += sign * counts[n - g2 as usize];
                }
                k += 1;
            }
            counts[n] = total;
        }
        assert_eq!(counts[9], 30);
        for n in 0..=max {
            if n <= 24 {
                assert_eq!(enumerate_partitions(n).count() as i64, counts[n], "p({n})");
            }
        }
    }

    #[test]
    fn shapes_with_odd_columns_examples() {
        let d40: Vec<Partition> = enumerate_shapes_with_odd_columns(4, 0).collect();
        assert_eq!(d40, vec![p(&[2, 2]), p(&[1, 1, 1, 1])]);
        let d44: Vec<Partition> = enumerate_shapes_with_odd_columns(4, 4).collect();
        assert_eq!(d44, vec![p(&[4])]);
        let d91: Vec<Partition> = enumerate_shapes_with_odd_columns(9, 1).collect();
        assert!(d91.contains(&p(&[5, 4])));
        assert!(d91.contains(&p(&[1, 1, 1, 1, 1, 1, 1, 1, 1])));
        // Parity violation: defined but empty.
        assert_eq!(enumerate_shapes_with_odd_columns(4, 1).count(), 0);
    }

    #[test]
    fn odd_column_classes_partition_all_shapes() {
        for n in 0..=14 {
            let total = enumerate_partitions(n).count();
            let by_class: usize = (0..=n)
                .map(|r| enumerate_shapes_with_odd_columns(n, r).count())
                .sum();
            assert_eq!(total, by_class, "n={n}");
            for shape in enumerate_partitions(n) {
                assert_eq!(shape.odd_column_count() % 2, n % 2, "{shape}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "[4,3,1,1]".parse().unwrap();
        assert_eq!(q, p(&[4, 3, 1, 1]));
        assert_eq!(q.to_string(), "[4,3,1,1]");
        let shorthand: Partition = "[2^4,1]".parse().unwrap();
        assert_eq!(shorthand, p(&[2, 2, 2, 2, 1]));
        let bare: Partition = "5,4".parse().unwrap();
        assert_eq!(bare, p(&[5, 4]));
        let empty: Partition = "[]".parse().unwrap();
        assert_eq!(empty, Partition::empty());
        assert!("[4,3,".parse::<Partition>().is_err());
        assert!("[a,b]".parse::<Partition>().is_err());
        assert!("[1,2]".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let q = p(&[4, 3, 1, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "\"[4,3,1,1]\"");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }
}
