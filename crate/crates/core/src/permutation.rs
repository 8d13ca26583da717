//! Permutations in one-line notation, their descent statistics, the RSK
//! correspondence, and streaming enumeration of involutions by
//! fixed-point count.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::tableau::StandardTableau;

/// A permutation of `{1,…,n}` in one-line notation: `word[i]` is the image
/// of `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Positions `i` with `π(i) > π(i+1)`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// Sum of the descent positions.
    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&i| i as u64).sum()
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "degree mismatch");
        Permutation {
            word: (1..=self.len())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    pub fn fixed_point_count(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| self.word[v - 1] == i + 1)
    }

    /// Row-inserts the word into an insertion tableau `P`, recording in `Q`
    /// the order in which cells appear. `Des(Q) = Des(π)` and
    /// `Des(P) = Des(π⁻¹)`.
    pub fn rsk(&self) -> TableauPair {
        let mut p: Vec<Vec<usize>> = Vec::new();
        let mut q: Vec<Vec<usize>> = Vec::new();
        for (step, &value) in self.word.iter().enumerate() {
            let mut carry = value;
            let mut row = 0;
            loop {
                if row == p.len() {
                    p.push(vec![carry]);
                    q.push(vec![step + 1]);
                    break;
                }
                match p[row].iter().position(|&y| y > carry) {
                    None => {
                        p[row].push(carry);
                        q[row].push(step + 1);
                        break;
                    }
                    Some(col) => {
                        std::mem::swap(&mut carry, &mut p[row][col]);
                        row += 1;
                    }
                }
            }
        }
        TableauPair {
            p: StandardTableau::from_rows_unchecked(p),
            q: StandardTableau::from_rows_unchecked(q),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts the comma-separated one-line form `5,3,2,1,4,7,6`, a bare
    /// digit string `5321476` (single-digit values only), or cycle form
    /// `(1 2)(3 4)` with `n` taken as the largest entry mentioned.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.starts_with('(') {
            return parse_cycles(s);
        }
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let word = if s.contains(',') {
            s.split(',')
                .map(|v| v.trim().parse().map_err(|_| Error::Parse(v.to_string())))
                .collect::<Result<Vec<usize>, Error>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(c.to_string()))
                })
                .collect::<Result<Vec<usize>, Error>>()?
        };
        Permutation::new(word)
    }
}

fn parse_cycles(s: &str) -> Result<Permutation, Error> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut max = 0usize;
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(rest.to_string()))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(rest.to_string()))?;
        let body = &open[..close];
        let entries = body
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(t.to_string())))
            .collect::<Result<Vec<usize>, Error>>()?;
        for &e in &entries {
            max = max.max(e);
        }
        cycles.push(entries);
        rest = open[close + 1..].trim_start();
    }
    let mut word: Vec<usize> = (1..=max).collect();
    let mut touched = vec![false; max + 1];
    for cycle in &cycles {
        for (i, &e) in cycle.iter().enumerate() {
            if e == 0 || touched[e] {
                return Err(Error::InvalidPermutation(format!(
                    "cycles are not disjoint at {e}"
                )));
            }
            touched[e] = true;
            word[e - 1] = cycle[(i + 1) % cycle.len()];
        }
    }
    Permutation::new(word)
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// The image of a permutation under RSK: insertion tableau `p` and
/// recording tableau `q` of the same shape.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableauPair {
    p: StandardTableau,
    q: StandardTableau,
}

impl TableauPair {
    pub fn new(p: StandardTableau, q: StandardTableau) -> Result<Self, Error> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch(
                p.shape().to_string(),
                q.shape().to_string(),
            ));
        }
        Ok(TableauPair { p, q })
    }

    pub fn p(&self) -> &StandardTableau {
        &self.p
    }

    pub fn q(&self) -> &StandardTableau {
        &self.q
    }
}

/// Runs the insertion procedure backwards, recovering the unique
/// permutation whose RSK image is `pair`.
pub fn rsk_inverse(pair: &TableauPair) -> Permutation {
    let n = pair.p.size();
    let mut p: Vec<Vec<usize>> = pair.p.rows().to_vec();
    // Position of each recorded step: the cell created at that step.
    let mut created = vec![(0usize, 0usize); n + 1];
    for (r, row) in pair.q.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            created[v] = (r, c);
        }
    }
    let mut word = vec![0usize; n];
    for step in (1..=n).rev() {
        let (row, col) = created[step];
        debug_assert_eq!(col + 1, p[row].len(), "recording cell is a corner");
        let mut carry = p[row].pop().expect("corner exists");
        if p[row].is_empty() {
            p.pop();
        }
        for upper in (0..row).rev() {
            // Largest entry smaller than the carried value gets bumped out.
            let pos = p[upper]
                .iter()
                .rposition(|&y| y < carry)
                .expect("reverse bump always finds a smaller entry");
            std::mem::swap(&mut carry, &mut p[upper][pos]);
        }
        word[step - 1] = carry;
    }
    Permutation { word }
}

/// Streams the involutions of `S_n`, optionally restricted to a fixed
/// number of fixed points. A parity-violating request (`n - r` odd, or
/// `r > n`) yields an empty stream rather than an error.
///
/// Involutions are built directly as partial matchings - the smallest
/// unassigned point is either fixed or paired with a larger one - so no
/// time is spent filtering `S_n`.
pub fn enumerate_involutions(n: usize, fixed_points: Option<usize>) -> Involutions {
    let feasible = match fixed_points {
        Some(r) => r <= n && (n - r).is_multiple_of(2),
        None => true,
    };
    Involutions {
        n,
        word: vec![0; n],
        stack: Vec::with_capacity(n),
        fixed_budget: fixed_points.map(|r| if feasible { r } else { 0 }),
        pair_budget: fixed_points.map(|r| if feasible { (n - r) / 2 } else { 0 }),
        state: if feasible {
            IterState::Fresh
        } else {
            IterState::Done
        },
    }
}

#[derive(PartialEq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// One backtracking choice: the smallest unassigned point `anchor` was
/// either fixed or paired with `partner`.
struct Choice {
    anchor: usize,
    partner: Option<usize>,
}

pub struct Involutions {
    n: usize,
    /// 1-based images; 0 marks an unassigned point.
    word: Vec<usize>,
    stack: Vec<Choice>,
    /// Remaining fixed points / transpositions when a class is requested.
    fixed_budget: Option<usize>,
    pair_budget: Option<usize>,
    state: IterState,
}

impl Involutions {
    fn smallest_unassigned(&self) -> Option<usize> {
        self.word.iter().position(|&v| v == 0).map(|i| i + 1)
    }

    fn may_fix(&self) -> bool {
        self.fixed_budget.is_none_or(|b| b > 0)
    }

    fn may_pair(&self) -> bool {
        self.pair_budget.is_none_or(|b| b > 0)
    }

    fn apply_fix(&mut self, anchor: usize) {
        self.word[anchor - 1] = anchor;
        if let Some(b) = self.fixed_budget.as_mut() {
            *b -= 1;
        }
        self.stack.push(Choice {
            anchor,
            partner: None,
        });
    }

    fn apply_pair(&mut self, anchor: usize, partner: usize) {
        self.word[anchor - 1] = partner;
        self.word[partner - 1] = anchor;
        if let Some(b) = self.pair_budget.as_mut() {
            *b -= 1;
        }
        self.stack.push(Choice {
            anchor,
            partner: Some(partner),
        });
    }

    fn next_partner(&self, anchor: usize, after: usize) -> Option<usize> {
        (after.max(anchor) + 1..=self.n).find(|&j| self.word[j - 1] == 0)
    }

    /// Assigns every remaining point with its first allowed choice.
    fn descend(&mut self) -> bool {
        while let Some(anchor) = self.smallest_unassigned() {
            if self.may_fix() {
                self.apply_fix(anchor);
            } else if self.may_pair() {
                match self.next_partner(anchor, 0) {
                    Some(partner) => self.apply_pair(anchor, partner),
                    None => return false,
                }
            } else {
                return false;
            }
        }
        true
    }

    /// Rolls back the deepest choice and tries its next alternative.
    fn advance(&mut self) -> bool {
        while let Some(Choice { anchor, partner }) = self.stack.pop() {
            self.word[anchor - 1] = 0;
            match partner {
                None => {
                    if let Some(b) = self.fixed_budget.as_mut() {
                        *b += 1;
                    }
                    if self.may_pair() {
                        if let Some(p) = self.next_partner(anchor, 0) {
                            self.apply_pair(anchor, p);
                            if self.descend() {
                                return true;
                            }
                            continue;
                        }
                    }
                }
                Some(prev) => {
                    self.word[prev - 1] = 0;
                    if let Some(b) = self.pair_budget.as_mut() {
                        *b += 1;
                    }
                    if self.may_pair() {
                        if let Some(p) = self.next_partner(anchor, prev) {
                            self.apply_pair(anchor, p);
                            if self.descend() {
                                return true;
                            }
                            continue;
                        }
                    }
                }
            }
        }
        false
    }
}

impl Iterator for Involutions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let complete = match self.state {
            IterState::Done => false,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.descend()
            }
            IterState::Running => self.advance(),
        };
        if complete {
            Some(Permutation {
                word: self.word.clone(),
            })
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descents_and_maj() {
        let pi = perm("5,3,2,1,4,7,6");
        assert_eq!(pi.descent_set(), vec![1, 2, 3, 6]);
        assert_eq!(pi.maj(), 12);
        assert_eq!(Permutation::identity(5).maj(), 0);
        let rev = perm("7,6,5,4,3,2,1");
        assert_eq!(rev.descent_set(), (1..7).collect::<Vec<_>>());
        assert_eq!(rev.maj(), 21);
    }

    #[test]
    fn inverse_and_compose() {
        let pi = perm("2,3,1");
        assert_eq!(pi.inverse(), perm("3,1,2"));
        assert_eq!(pi.compose(&pi.inverse()), Permutation::identity(3));
        assert_eq!(perm("3,4,1,2").inverse(), perm("3,4,1,2"));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
    }

    #[test]
    fn fixed_points() {
        assert_eq!(perm("5,3,2,1,4,7,6").fixed_point_count(), 0);
        assert_eq!(Permutation::identity(6).fixed_point_count(), 6);
        assert_eq!(perm("2,1,4,3").fixed_point_count(), 0);
        assert!(perm("2,1,4,3").is_involution());
        assert!(!perm("2,3,1").is_involution());
    }

    #[test]
    fn rsk_examples() {
        let pair = perm("3,4,1,2").rsk();
        assert_eq!(pair.p().to_string(), "1,2/3,4");
        assert_eq!(pair.q().to_string(), "1,2/3,4");
        let id = Permutation::identity(5).rsk();
        assert_eq!(id.p().to_string(), "1,2,3,4,5");
        assert_eq!(id.q().to_string(), "1,2,3,4,5");
        // Des(Q) = Des(π).
        let pi = perm("5,3,2,1,4,7,6");
        assert_eq!(pi.rsk().q().descent_set(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn rsk_inverse_examples() {
        let pair =
            TableauPair::new("1,2/3,4".parse().unwrap(), "1,2/3,4".parse().unwrap()).unwrap();
        assert_eq!(rsk_inverse(&pair), perm("3,4,1,2"));
        let single = TableauPair::new("1,2,3".parse().unwrap(), "1,2,3".parse().unwrap()).unwrap();
        assert_eq!(rsk_inverse(&single), Permutation::identity(3));
        assert!(matches!(
            TableauPair::new("1,2/3,4".parse().unwrap(), "1,2,3,4".parse().unwrap()),
            Err(Error::ShapeMismatch(..))
        ));
    }

    #[test]
    fn involution_counts_match_recurrence() {
        // a(n) = a(n-1) + (n-1) a(n-2)
        let mut a = vec![1u64, 1];
        for n in 2..=10 {
            let next = a[n - 1] + (n as u64 - 1) * a[n - 2];
            a.push(next);
        }
        for n in 0..=10 {
            assert_eq!(
                enumerate_involutions(n, None).count() as u64,
                a[n],
                "a({n})"
            );
        }
        assert_eq!(a[4], 10);
    }

    #[test]
    fn involution_classes() {
        let class: Vec<String> = enumerate_involutions(4, Some(0))
            .map(|p| p.to_string())
            .collect();
        let mut sorted = class.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["2,1,4,3", "3,4,1,2", "4,3,2,1"]);
        // Class size n!/(k! 2^k r!) for μ = (2^k, 1^r).
        let count = |n: usize, r: usize| enumerate_involutions(n, Some(r)).count();
        assert_eq!(count(6, 2), 720 / (2 * 4 * 2));
        assert_eq!(count(7, 3), 5040 / (2 * 4 * 6));
        assert_eq!(count(5, 5), 1);
        // Parity violations yield empty streams.
        assert_eq!(count(4, 1), 0);
        assert_eq!(count(3, 5), 0);
        // The empty permutation is the unique involution of S_0.
        assert_eq!(enumerate_involutions(0, None).count(), 1);
        assert_eq!(count(0, 0), 1);
    }

    #[test]
    fn involutions_are_involutions() {
        for n in 0..=7 {
            for pi in enumerate_involutions(n, None) {
                assert!(pi.is_involution(), "{pi}");
            }
            let all: std::collections::BTreeSet<Permutation> =
                enumerate_involutions(n, None).collect();
            assert_eq!(all.len(), enumerate_involutions(n, None).count());
            let by_class: usize = (0..=n)
                .map(|r| enumerate_involutions(n, Some(r)).count())
                .sum();
            assert_eq!(all.len(), by_class);
        }
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(perm("5321476"), perm("5,3,2,1,4,7,6"));
        assert_eq!(perm("(1 2)(3 4)"), perm("2,1,4,3"));
        assert_eq!(perm("(1,2)(3,4)"), perm("2,1,4,3"));
        assert_eq!(perm("(2 4)"), perm("1,4,3,2"));
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("(1 2)(2 3)".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        assert_eq!(perm("5,3,2,1,4,7,6").to_string(), "5,3,2,1,4,7,6");
    }

    #[test]
    fn serde_round_trip() {
        let pi = perm("3,4,1,2");
        let json = serde_json::to_string(&pi).unwrap();
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pi);
    }
}
