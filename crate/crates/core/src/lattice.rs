//! Words of the lattice `S(n,r)` and their order-theoretic operations.
//!
//! A word is stored as the set of nonzero alphabet symbols it contains, packed
//! into a bit mask: bit `i - 1` holds the positive mark `i` (`1 <= i <= r`) and
//! bit `r + j - 1` holds the negative mark `j` (`1 <= j <= n - r`). The string
//! form `i1..ir|j1..j(n-r)` is rebuilt on demand, so every stored word is
//! canonical by construction.
//!
//! Symbols map to signed levels (`+i`, `0`, `-j`) whose integer order is the
//! alphabet order, which turns comparison, meet, join and cover tests into
//! componentwise integer operations on the level vector.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// Largest `n` a word mask can hold.
pub const MAX_N: u32 = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeParams {
    n: u32,
    r: u32,
}

impl LatticeParams {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidParams(format!("r = {r} exceeds n = {n}")));
        }
        if n > MAX_N {
            return Err(Error::InvalidParams(format!(
                "n = {n} exceeds the supported maximum {MAX_N}"
            )));
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Number of negative marks, `n - r`.
    pub fn bars(&self) -> u32 {
        self.n - self.r
    }

    /// Total rank `R(n,r) = C(r+1,2) + C(n-r+1,2)`.
    pub fn rank_bound(&self) -> u64 {
        let r = u64::from(self.r);
        let m = u64::from(self.bars());
        r * (r + 1) / 2 + m * (m + 1) / 2
    }

    /// Number of words, `2^n`.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Parameters of the lattice `S(n, n-r)` reached by transposition.
    pub fn conjugate(&self) -> Self {
        Self {
            n: self.n,
            r: self.bars(),
        }
    }

    /// Symbols are written comma separated once some mark needs two digits.
    fn wide(&self) -> bool {
        self.r >= 10 || self.bars() >= 10
    }

    pub fn bottom(&self) -> Word {
        Word {
            params: *self,
            members: self.bar_mask(),
        }
    }

    pub fn top(&self) -> Word {
        Word {
            params: *self,
            members: self.tilde_mask(),
        }
    }

    /// The all-zero word `0..0|0..0` (empty symbol set).
    pub fn zero_word(&self) -> Word {
        Word {
            params: *self,
            members: 0,
        }
    }

    /// The word containing every nonzero symbol, `r..1|1..(n-r)`.
    pub fn full_word(&self) -> Word {
        Word {
            params: *self,
            members: self.full_mask(),
        }
    }

    pub fn tilde_mask(&self) -> u64 {
        (1u64 << self.r) - 1
    }

    pub fn bar_mask(&self) -> u64 {
        self.full_mask() & !self.tilde_mask()
    }

    pub fn bit_of(&self, symbol: Symbol) -> Result<u64> {
        match symbol {
            Symbol::Tilde(i) if i >= 1 && i <= self.r => Ok(1u64 << (i - 1)),
            Symbol::Bar(j) if j >= 1 && j <= self.bars() => Ok(1u64 << (self.r + j - 1)),
            _ => Err(Error::Domain(format!(
                "symbol {symbol} is not a nonzero symbol of A({},{})",
                self.n, self.r
            ))),
        }
    }

    /// The nonzero symbols in bit order: `T1..Tr`, then `B1..B(n-r)`.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        let r = self.r;
        let m = self.bars();
        (1..=r).map(Symbol::Tilde).chain((1..=m).map(Symbol::Bar))
    }

    pub fn word_from_mask(&self, members: u64) -> Result<Word> {
        if members & !self.full_mask() != 0 {
            return Err(Error::Domain(format!(
                "mask {members:#b} has bits outside the {} symbols of S({},{})",
                self.n, self.n, self.r
            )));
        }
        Ok(Word {
            params: *self,
            members,
        })
    }

    /// `word_from_subset`: the unique word whose nonzero symbols are `set`.
    pub fn word_from_subset<I>(&self, set: I) -> Result<Word>
    where
        I: IntoIterator<Item = Symbol>,
    {
        let mut members = 0;
        for s in set {
            members |= self.bit_of(s)?;
        }
        Ok(Word {
            params: *self,
            members,
        })
    }

    /// Parses the string form of a word of this lattice.
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        let (left, right) = text
            .split_once('|')
            .ok_or_else(|| ParseError::MissingSeparator(text.to_string()))?;
        let left = split_side(left)?;
        let right = split_side(right)?;
        if left.len() != self.r as usize {
            return Err(ParseError::WrongLength {
                side: "left",
                expected: self.r as usize,
                found: left.len(),
            });
        }
        if right.len() != self.bars() as usize {
            return Err(ParseError::WrongLength {
                side: "right",
                expected: self.bars() as usize,
                found: right.len(),
            });
        }
        let mut levels = Vec::with_capacity(self.n as usize);
        for (k, &v) in left.iter().enumerate() {
            if v > self.r {
                return Err(ParseError::OutOfRange {
                    position: k + 1,
                    value: v,
                    max: self.r,
                });
            }
            levels.push(v as i32);
        }
        for (k, &v) in right.iter().enumerate() {
            if v > self.bars() {
                return Err(ParseError::OutOfRange {
                    position: self.r as usize + k + 1,
                    value: v,
                    max: self.bars(),
                });
            }
            levels.push(-(v as i32));
        }
        self.word_from_levels(&levels)
    }

    /// Rebuilds a word from its level vector, checking the canonical-form rules.
    ///
    /// Positions `1..=r` must hold levels in `0..=r`, positions `r+1..=n`
    /// levels in `-(n-r)..=0`; the whole vector must weakly decrease and the
    /// nonzero entries must strictly decrease.
    pub fn word_from_levels(&self, levels: &[i32]) -> Result<Word, ParseError> {
        let r = self.r as usize;
        if levels.len() != self.n as usize {
            return Err(ParseError::WrongLength {
                side: "whole",
                expected: self.n as usize,
                found: levels.len(),
            });
        }
        let mut members = 0u64;
        for (k, &l) in levels.iter().enumerate() {
            let in_range = if k < r {
                (0..=self.r as i32).contains(&l)
            } else {
                (-(self.bars() as i32)..=0).contains(&l)
            };
            if !in_range {
                return Err(ParseError::OutOfRange {
                    position: k + 1,
                    value: l.unsigned_abs(),
                    max: if k < r { self.r } else { self.bars() },
                });
            }
            if k > 0 {
                let prev = levels[k - 1];
                if l > prev {
                    return Err(ParseError::Ordering { position: k + 1 });
                }
                if l == prev && l != 0 {
                    return Err(ParseError::Repeated { position: k + 1 });
                }
            }
            if l > 0 {
                members |= 1u64 << (l - 1);
            } else if l < 0 {
                members |= 1u64 << (self.r as i32 - l - 1);
            }
        }
        Ok(Word {
            params: *self,
            members,
        })
    }
}

impl fmt::Display for LatticeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.n, self.r)
    }
}

fn split_side(side: &str) -> Result<Vec<u32>, ParseError> {
    if side.is_empty() {
        return Ok(Vec::new());
    }
    if side.contains(',') {
        side.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseError::BadSymbol(t.to_string()))
            })
            .collect()
    } else {
        side.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| ParseError::BadSymbol(c.to_string()))
            })
            .collect()
    }
}

/// One letter of the alphabet `A(n,r)`.
///
/// Ordering follows the alphabet: `B(n-r) < .. < B1 < Zero < T1 < .. < Tr`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Tilde(u32),
    Zero,
    Bar(u32),
}

impl Symbol {
    /// Signed position in the alphabet chain: `+i`, `0` or `-j`.
    pub fn level(self) -> i32 {
        match self {
            Symbol::Tilde(i) => i as i32,
            Symbol::Zero => 0,
            Symbol::Bar(j) => -(j as i32),
        }
    }

    pub fn from_level(level: i32) -> Self {
        match level {
            0 => Symbol::Zero,
            l if l > 0 => Symbol::Tilde(l as u32),
            l => Symbol::Bar(l.unsigned_abs()),
        }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.level().cmp(&other.level())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Tilde(i) => write!(f, "T{i}"),
            Symbol::Zero => write!(f, "0"),
            Symbol::Bar(j) => write!(f, "B{j}"),
        }
    }
}

/// An element of `S(n,r)`.
///
/// Equality and hashing use `(params, members)`, so words of different
/// lattices never compare equal. The derived `Ord` is a storage order for
/// collections, not the lattice order; use [`Word::leq`] for that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    params: LatticeParams,
    members: u64,
}

/// Per-position differences between two words: `None` where they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector(pub Vec<Option<(Symbol, Symbol)>>);

impl DeltaVector {
    pub fn differing(&self) -> impl Iterator<Item = (usize, Symbol, Symbol)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(k, e)| e.map(|(a, b)| (k + 1, a, b)))
    }
}

impl Word {
    pub fn params(&self) -> LatticeParams {
        self.params
    }

    pub fn members(&self) -> u64 {
        self.members
    }

    /// The set `w*` of nonzero symbols, in bit order.
    pub fn subset(&self) -> Vec<Symbol> {
        self.params
            .symbols()
            .filter(|&s| self.contains(s))
            .collect()
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.params
            .bit_of(symbol)
            .map(|b| self.members & b != 0)
            .unwrap_or(false)
    }

    pub fn nonzero_count(&self) -> u32 {
        self.members.count_ones()
    }

    /// Level vector of the string form, positions `1..=n`.
    pub fn levels(&self) -> Vec<i32> {
        let r = self.params.r;
        let m = self.params.bars();
        let mut out = Vec::with_capacity(self.params.n as usize);
        for i in (1..=r).rev() {
            if self.members & (1u64 << (i - 1)) != 0 {
                out.push(i as i32);
            }
        }
        out.resize(r as usize, 0);
        let bars: Vec<i32> = (1..=m)
            .filter(|j| self.members & (1u64 << (r + j - 1)) != 0)
            .map(|j| -(j as i32))
            .collect();
        out.resize(r as usize + (m as usize - bars.len()), 0);
        out.extend(bars);
        out
    }

    /// The string form as alphabet symbols.
    pub fn letters(&self) -> Vec<Symbol> {
        self.levels().into_iter().map(Symbol::from_level).collect()
    }

    fn same_lattice(&self, other: &Word) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch(self.params, other.params));
        }
        Ok(())
    }

    fn from_levels_unchecked(params: LatticeParams, levels: &[i32]) -> Word {
        let w = params.word_from_levels(levels);
        debug_assert!(w.is_ok(), "componentwise result left S(n,r): {levels:?}");
        w.expect("lattice operation produced a non-canonical string")
    }

    /// Componentwise comparison of the string forms.
    pub fn leq(&self, other: &Word) -> Result<bool> {
        self.same_lattice(other)?;
        Ok(self
            .levels()
            .iter()
            .zip(other.levels())
            .all(|(a, b)| *a <= b))
    }

    pub fn meet(&self, other: &Word) -> Result<Word> {
        self.same_lattice(other)?;
        let levels: Vec<i32> = self
            .levels()
            .iter()
            .zip(other.levels())
            .map(|(a, b)| (*a).min(b))
            .collect();
        Ok(Self::from_levels_unchecked(self.params, &levels))
    }

    pub fn join(&self, other: &Word) -> Result<Word> {
        self.same_lattice(other)?;
        let levels: Vec<i32> = self
            .levels()
            .iter()
            .zip(other.levels())
            .map(|(a, b)| (*a).max(b))
            .collect();
        Ok(Self::from_levels_unchecked(self.params, &levels))
    }

    /// Set union transported through `*`; differs from [`Word::join`] in general.
    pub fn bool_union(&self, other: &Word) -> Result<Word> {
        self.same_lattice(other)?;
        Ok(Word {
            params: self.params,
            members: self.members | other.members,
        })
    }

    pub fn bool_intersect(&self, other: &Word) -> Result<Word> {
        self.same_lattice(other)?;
        Ok(Word {
            params: self.params,
            members: self.members & other.members,
        })
    }

    /// The word whose symbol set is the complement of this one's.
    pub fn complement(&self) -> Word {
        Word {
            params: self.params,
            members: self.members ^ self.params.full_mask(),
        }
    }

    pub fn delta(&self, other: &Word) -> Result<DeltaVector> {
        self.same_lattice(other)?;
        Ok(DeltaVector(
            self.levels()
                .iter()
                .zip(other.levels())
                .map(|(&a, b)| (a != b).then(|| (Symbol::from_level(a), Symbol::from_level(b))))
                .collect(),
        ))
    }

    /// Whether `other` covers `self`: exactly one position differs, and there
    /// `other` holds the alphabet successor of `self`'s symbol.
    pub fn is_covered_by(&self, other: &Word) -> Result<bool> {
        let delta = self.delta(other)?;
        let mut diffs = delta.differing();
        Ok(match (diffs.next(), diffs.next()) {
            (Some((_, a, b)), None) => b.level() == a.level() + 1,
            _ => false,
        })
    }

    /// Graded rank: sum of positive marks plus `sum_k (k - j_k)` over the
    /// right-hand positions.
    pub fn rank(&self) -> u64 {
        let r = self.params.r as usize;
        let levels = self.levels();
        let left: u64 = levels[..r].iter().map(|&l| l as u64).sum();
        let right: u64 = levels[r..]
            .iter()
            .enumerate()
            .map(|(k, &l)| (k as u64 + 1) - u64::from(l.unsigned_abs()))
            .sum();
        left + right
    }

    /// `w^t`: reverse the string and swap positive and negative marks,
    /// landing in `S(n, n-r)`.
    pub fn transpose(&self) -> Word {
        let r = self.params.r;
        let m = self.params.bars();
        let tildes = self.members & self.params.tilde_mask();
        let bars = self.members >> r;
        Word {
            params: self.params.conjugate(),
            members: bars | (tildes << m),
        }
    }

    /// The order isomorphism `S(n,r) -> S(n,n-r)`, `w -> (w^t)^c`.
    pub fn iso_to_conjugate(&self) -> Word {
        self.transpose().complement()
    }

    /// Splits at the bar into `(S(r,r), S(n-r,0))` components.
    pub fn cartesian_split(&self) -> (Word, Word) {
        let r = self.params.r;
        let m = self.params.bars();
        let left = Word {
            params: LatticeParams { n: r, r },
            members: self.members & self.params.tilde_mask(),
        };
        let right = Word {
            params: LatticeParams { n: m, r: 0 },
            members: self.members >> r,
        };
        (left, right)
    }

    pub fn cartesian_merge(left: &Word, right: &Word) -> Result<Word> {
        let lp = left.params;
        let rp = right.params;
        if lp.n != lp.r || rp.r != 0 {
            return Err(Error::Domain(format!(
                "cartesian merge expects S(r,r) x S(m,0) components, got {lp} x {rp}"
            )));
        }
        let params = LatticeParams::new(lp.n + rp.n, lp.r)?;
        Ok(Word {
            params,
            members: left.members | (right.members << lp.r),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.params.r as usize;
        let levels = self.levels();
        let (left, right) = levels.split_at(r);
        let side = |f: &mut fmt::Formatter<'_>, part: &[i32]| -> fmt::Result {
            for (k, l) in part.iter().enumerate() {
                if self.params.wide() && k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", l.unsigned_abs())?;
            }
            Ok(())
        };
        side(f, left)?;
        f.write_str("|")?;
        side(f, right)
    }
}

/// Parses a word, reading `r` and `n` off the two side lengths.
impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (left, right) = s
            .split_once('|')
            .ok_or_else(|| ParseError::MissingSeparator(s.to_string()))?;
        let r = split_side(left)?.len() as u32;
        let m = split_side(right)?.len() as u32;
        let params = LatticeParams::new(r + m, r).map_err(|_| ParseError::WrongLength {
            side: "whole",
            expected: MAX_N as usize,
            found: (r + m) as usize,
        })?;
        params.parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All words of `S(n,r)` by rank, each level in the left-to-right order of
/// the default Hasse construction.
pub fn enumerate(params: LatticeParams) -> Vec<Word> {
    crate::hasse::build(params, crate::hasse::GenOrder::OutIn)
        .levels
        .into_iter()
        .flatten()
        .collect()
}

/// The words of `S(n,d,r)`: exactly `d` nonzero symbols, in [`enumerate`] order.
pub fn enumerate_d_slice(params: LatticeParams, d: u32) -> Result<Vec<Word>> {
    if d < 1 || d > params.n {
        return Err(Error::Domain(format!(
            "d = {d} must lie in 1..={} for {params}",
            params.n
        )));
    }
    Ok(enumerate(params)
        .into_iter()
        .filter(|w| w.nonzero_count() == d)
        .collect())
}
