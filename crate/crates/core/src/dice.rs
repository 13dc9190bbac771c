//! Generalized dice: exact win probabilities, balance, the beats-digraph,
//! and exhaustive search for balanced non-transitive sets realizing a
//! digraph.
//!
//! A die is a set of `k` distinct integers and the faces of all dice in a
//! set are pairwise distinct, so two dice never tie on a roll. Die `a` beats
//! die `b` when more than half of the `k²` face pairs favour `a`.
//!
//! # Edge direction
//!
//! By default an edge `u -> v` means the die of `u` beats the die of `v`
//! ([`EdgeConvention::WinnerToLoser`]). Some texts draw the beats-digraph
//! the other way round, with the edge pointing at the winner; use
//! [`EdgeConvention::LoserToWinner`] for that.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::DiceError;
use crate::graph::{is_strong, StrictDigraph};

/// Largest number of labeled partitions the realization search will walk.
pub const SEARCH_BUDGET: u128 = 10_000_000;

/// An exact probability `wins / total`. Equality and ordering compare the
/// rational values, so `5/9 == 10/18`.
#[derive(Clone, Copy, Debug)]
pub struct Prob {
    pub wins: u64,
    pub total: u64,
}

impl Prob {
    pub fn new(wins: u64, total: u64) -> Self {
        assert!(total > 0 && wins <= total, "invalid probability {wins}/{total}");
        Self { wins, total }
    }

    pub fn complement(self) -> Self {
        Self::new(self.total - self.wins, self.total)
    }

    /// Strictly more than one half.
    pub fn beats(self) -> bool {
        2 * u128::from(self.wins) > u128::from(self.total)
    }

    pub fn is_one(self) -> bool {
        self.wins == self.total
    }

    pub fn is_half(self) -> bool {
        2 * u128::from(self.wins) == u128::from(self.total)
    }

    /// Numerator and denominator in lowest terms.
    pub fn reduced(self) -> (u64, u64) {
        let d = self.wins.gcd(&self.total);
        (self.wins / d, self.total / d)
    }
}

impl PartialEq for Prob {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Prob {}

impl PartialOrd for Prob {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Prob {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.wins) * u128::from(other.total))
            .cmp(&(u128::from(other.wins) * u128::from(self.total)))
    }
}

/// Unreduced `wins/total`, e.g. `5/9` or `0/9` for three-sided dice.
impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.wins, self.total)
    }
}

impl Serialize for Prob {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Probability that a roll of `a` exceeds a roll of `b`.
pub fn win_probability(a: &[i64], b: &[i64]) -> Result<Prob, DiceError> {
    if a.is_empty() || b.is_empty() {
        return Err(DiceError::EmptyDie);
    }
    if a.len() != b.len() {
        return Err(DiceError::SizeMismatch(a.len(), b.len()));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    for die in [&a, &b] {
        if let Some(w) = die.windows(2).find(|w| w[0] == w[1]) {
            return Err(DiceError::RepeatedFace(w[0]));
        }
    }
    let mut below = 0usize;
    let mut wins = 0u64;
    for &x in &a {
        while below < b.len() && b[below] < x {
            below += 1;
        }
        if below < b.len() && b[below] == x {
            return Err(DiceError::Overlap(x));
        }
        wins += below as u64;
    }
    let k = a.len() as u64;
    Ok(Prob::new(wins, k * k))
}

/// A validated set of dice, faces sorted within each die.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DiceSet {
    dice: Vec<Vec<i64>>,
}

impl DiceSet {
    pub fn new(mut dice: Vec<Vec<i64>>) -> Result<Self, DiceError> {
        if dice.is_empty() {
            return Err(DiceError::TooFew { n: 0, min: 1 });
        }
        let k = dice[0].len();
        let mut seen = HashSet::new();
        for die in dice.iter_mut() {
            if die.is_empty() {
                return Err(DiceError::EmptyDie);
            }
            if die.len() != k {
                return Err(DiceError::SizeMismatch(k, die.len()));
            }
            die.sort_unstable();
            if let Some(w) = die.windows(2).find(|w| w[0] == w[1]) {
                return Err(DiceError::RepeatedFace(w[0]));
            }
            if let Some(&v) = die.iter().find(|&&v| !seen.insert(v)) {
                return Err(DiceError::Overlap(v));
            }
        }
        Ok(Self { dice })
    }

    pub fn len(&self) -> usize {
        self.dice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dice.is_empty()
    }

    pub fn sides(&self) -> usize {
        self.dice[0].len()
    }

    pub fn dice(&self) -> &[Vec<i64>] {
        &self.dice
    }

    /// Applies `f` to every face. `f` must be injective on the faces.
    pub fn map_faces(&self, f: impl Fn(i64) -> i64) -> Result<Self, DiceError> {
        Self::new(
            self.dice
                .iter()
                .map(|d| d.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }
}

impl fmt::Display for DiceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for die in &self.dice {
            let faces: Vec<String> = die.iter().map(i64::to_string).collect();
            writeln!(f, "{}", faces.join(" "))?;
        }
        Ok(())
    }
}

/// Pairwise win counts of a dice set; entry `(i, j)` counts face pairs where
/// die `i` rolls higher than die `j`, out of `k²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinMatrix {
    wins: Vec<Vec<u64>>,
    total: u64,
}

impl WinMatrix {
    pub fn of(d: &DiceSet) -> Self {
        let wins = d
            .dice
            .iter()
            .enumerate()
            .map(|(i, a)| {
                d.dice
                    .iter()
                    .enumerate()
                    .map(|(j, b)| {
                        if i == j {
                            0
                        } else {
                            win_probability(a, b).expect("dice set is validated").wins
                        }
                    })
                    .collect()
            })
            .collect();
        let k = d.sides() as u64;
        Self { wins, total: k * k }
    }

    pub fn n(&self) -> usize {
        self.wins.len()
    }

    /// `p_{i,j}`. Meaningless on the diagonal.
    pub fn p(&self, i: usize, j: usize) -> Prob {
        Prob::new(self.wins[i][j], self.total)
    }
}

impl fmt::Display for WinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            let row: Vec<String> = (0..self.n())
                .map(|j| if i == j { "-".to_string() } else { self.p(i, j).to_string() })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for WinMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Option<Prob>>> = (0..self.n())
            .map(|i| (0..self.n()).map(|j| (i != j).then(|| self.p(i, j))).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// Which way a beats-digraph edge points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeConvention {
    /// `u -> v` when `u` beats `v`.
    #[default]
    WinnerToLoser,
    /// `u -> v` when `v` beats `u`.
    LoserToWinner,
}

impl EdgeConvention {
    fn orient(self, winner: usize, loser: usize) -> (usize, usize) {
        match self {
            EdgeConvention::WinnerToLoser => (winner, loser),
            EdgeConvention::LoserToWinner => (loser, winner),
        }
    }
}

/// One edge per pair of dice where one beats the other. With an odd number
/// of sides this is a tournament; with an even number a pair can split its
/// `k²` rolls evenly and then has no edge.
pub fn beats_digraph(d: &DiceSet, convention: EdgeConvention) -> StrictDigraph {
    let m = WinMatrix::of(d);
    let edges = (0..d.len())
        .flat_map(|i| (0..d.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && m.p(i, j).beats())
        .map(|(i, j)| convention.orient(i, j));
    StrictDigraph::from_edges(d.len(), edges).expect("beats relation is antisymmetric")
}

/// The common probability `p ≥ 1/2` with which the winner of every pair
/// wins, or `None` when pairs differ. `p = 1` means every pair is totally
/// ordered; `p = 1/2` means every pair splits evenly.
pub fn is_balanced(d: &DiceSet) -> Result<Option<Prob>, DiceError> {
    if d.len() < 2 {
        return Err(DiceError::TooFew { n: d.len(), min: 2 });
    }
    let m = WinMatrix::of(d);
    let mut common: Option<Prob> = None;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let p = m.p(i, j).max(m.p(j, i));
            match common {
                None => common = Some(p),
                Some(c) if c != p => return Ok(None),
                Some(_) => {}
            }
        }
    }
    Ok(common)
}

/// True when every edge of `h` is an edge of the beats-digraph.
pub fn realizes(
    d: &DiceSet,
    h: &StrictDigraph,
    convention: EdgeConvention,
) -> Result<bool, DiceError> {
    if h.n() != d.len() {
        return Err(DiceError::CountMismatch {
            graph: h.n(),
            dice: d.len(),
        });
    }
    Ok(h.is_subgraph_of(&beats_digraph(d, convention)))
}

/// `(nk)! / (k!)^n`, saturating.
pub fn labeled_partition_count(n: usize, k: usize) -> u128 {
    let mut count: u128 = 1;
    let mut remaining = (n * k) as u128;
    for _ in 0..n {
        // C(remaining, k)
        let mut binom: u128 = 1;
        for i in 0..k as u128 {
            binom = match binom.checked_mul(remaining - i) {
                Some(v) => v / (i + 1),
                None => return u128::MAX,
            };
        }
        count = match count.checked_mul(binom) {
            Some(v) => v,
            None => return u128::MAX,
        };
        remaining -= k as u128;
    }
    count
}

/// First set of `n = |V(h)|` dice with `k` faces from `1..=nk` that is
/// balanced with `p > 1/2`, is non-transitive (its beats-digraph is strong),
/// and realizes `h`.
///
/// Face values are placed in increasing order, each on the lowest-indexed
/// die with room left, so the first hit is the lexicographically first in
/// that enumeration. Dice are labeled by the vertices of `h`.
pub fn search_balanced_realization(
    h: &StrictDigraph,
    k: usize,
    convention: EdgeConvention,
) -> Result<Option<DiceSet>, DiceError> {
    let n = h.n();
    if n < 3 {
        return Err(DiceError::TooFew { n, min: 3 });
    }
    if k == 0 {
        return Err(DiceError::EmptyDie);
    }
    let count = labeled_partition_count(n, k);
    if count > SEARCH_BUDGET {
        return Err(DiceError::Budget {
            count,
            max: SEARCH_BUDGET,
        });
    }

    // must_lose_to[i] lists dice that must beat die i.
    let mut must_lose_to = vec![Vec::new(); n];
    for (u, v) in h.edges() {
        let (winner, loser) = match convention {
            EdgeConvention::WinnerToLoser => (u, v),
            EdgeConvention::LoserToWinner => (v, u),
        };
        must_lose_to[loser].push(winner);
    }

    struct State<'a> {
        n: usize,
        k: usize,
        total: u64,
        must_lose_to: &'a [Vec<usize>],
        faces: Vec<Vec<i64>>,
        wins: Vec<Vec<u64>>,
    }

    impl State<'_> {
        fn leaf_ok(&self) -> bool {
            let total = self.total;
            let p = self.wins[0][1].max(total - self.wins[0][1]);
            if 2 * p <= total {
                return false;
            }
            for i in 0..self.n {
                for j in i + 1..self.n {
                    if self.wins[i][j].max(total - self.wins[i][j]) != p {
                        return false;
                    }
                }
            }
            let edges = (0..self.n)
                .flat_map(|i| (0..self.n).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j && 2 * self.wins[i][j] > total);
            let beats = StrictDigraph::from_edges(self.n, edges).expect("antisymmetric");
            is_strong(&beats)
        }

        fn place(&mut self, value: i64, last: i64) -> bool {
            if value > last {
                return self.leaf_ok();
            }
            for i in 0..self.n {
                if self.faces[i].len() == self.k {
                    continue;
                }
                // `value` exceeds every face placed so far.
                for j in 0..self.n {
                    if j != i {
                        self.wins[i][j] += self.faces[j].len() as u64;
                    }
                }
                self.faces[i].push(value);
                // A die that must lose to `w` can never gain back rolls it won.
                let feasible = self.must_lose_to[i]
                    .iter()
                    .all(|&w| 2 * self.wins[i][w] < self.total);
                if feasible && self.place(value + 1, last) {
                    return true;
                }
                self.faces[i].pop();
                for j in 0..self.n {
                    if j != i {
                        self.wins[i][j] -= self.faces[j].len() as u64;
                    }
                }
            }
            false
        }
    }

    let mut state = State {
        n,
        k,
        total: (k * k) as u64,
        must_lose_to: &must_lose_to,
        faces: vec![Vec::with_capacity(k); n],
        wins: vec![vec![0; n]; n],
    };
    let last = (n * k) as i64;
    if state.place(1, last) {
        Ok(Some(DiceSet::new(state.faces).expect("partition of 1..=nk")))
    } else {
        Ok(None)
    }
}
