//! Boolean maps on `S(n,r)`: axioms, exhaustive enumeration of the weighted
//! ones, exact representability by weight functions, and the extremal
//! counts built on top of them.
//!
//! A map is stored as the set of words labeled `P`. The axioms are
//!
//! * a1/a2: the `P` set is an up-set (equivalently the `N` set is a down-set);
//! * a3: the all-zero word is `P` and the word `0..0|0..01` is `N`;
//! * a4: an `N` word has a `P` complement;
//! * a5: the word `r..1|1..(n-r)` holding every symbol is `P`.
//!
//! Maps satisfying a1-a3 are BMs, those satisfying all five are WBMs. When
//! `r = n` the word `0..0|0..01` does not exist and the second half of a3 is
//! treated as vacuous.

use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::{solve, Constraint, Feasibility};
use crate::hasse::{build, GenOrder};
use crate::lattice::{LatticeParams, Symbol, Word};
use crate::scalar::Scalar;
use crate::weights::NrFunction;
use crate::{Rational, WeightFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    P,
    N,
}

/// A total two-valued labeling of `S(n,r)`, stored as its `P` set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanMap {
    params: LatticeParams,
    p_set: FixedBitSet,
}

/// JSON form `{p_set: [word strings]}`, words in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub p_set: Vec<String>,
}

impl BooleanMap {
    pub fn from_masks<I: IntoIterator<Item = u64>>(params: LatticeParams, masks: I) -> Self {
        let mut p_set = FixedBitSet::with_capacity(params.size() as usize);
        for m in masks {
            p_set.insert(m as usize);
        }
        Self { params, p_set }
    }

    pub fn from_p_words<I: IntoIterator<Item = Word>>(
        params: LatticeParams,
        words: I,
    ) -> Result<Self> {
        let mut masks = Vec::new();
        for w in words {
            if w.params() != params {
                return Err(Error::ParamsMismatch(params, w.params()));
            }
            masks.push(w.members());
        }
        Ok(Self::from_masks(params, masks))
    }

    /// Builds a map from explicit labels; every word must be labeled exactly once.
    pub fn from_labels<I>(params: LatticeParams, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Label)>,
    {
        let size = params.size() as usize;
        let mut seen = FixedBitSet::with_capacity(size);
        let mut p_set = FixedBitSet::with_capacity(size);
        for (w, label) in labels {
            if w.params() != params {
                return Err(Error::ParamsMismatch(params, w.params()));
            }
            let m = w.members() as usize;
            if seen.put(m) {
                return Err(Error::Domain(format!("word {w} is labeled twice")));
            }
            if label == Label::P {
                p_set.insert(m);
            }
        }
        if seen.count_ones(..) != size {
            return Err(Error::Domain(format!(
                "partial labeling: {} of {size} words labeled",
                seen.count_ones(..)
            )));
        }
        Ok(Self { params, p_set })
    }

    pub fn from_json(params: LatticeParams, json: &MapJson) -> Result<Self> {
        let words = json
            .p_set
            .iter()
            .map(|s| params.parse_word(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_p_words(params, words)
    }

    pub fn params(&self) -> LatticeParams {
        self.params
    }

    pub fn label(&self, word: &Word) -> Label {
        if self.is_p(word) {
            Label::P
        } else {
            Label::N
        }
    }

    pub fn is_p(&self, word: &Word) -> bool {
        self.is_p_mask(word.members())
    }

    fn is_p_mask(&self, mask: u64) -> bool {
        self.p_set.contains(mask as usize)
    }

    pub fn p_count(&self) -> u64 {
        self.p_set.count_ones(..) as u64
    }

    /// `P` words with exactly `d` nonzero symbols.
    pub fn p_count_d(&self, d: u32) -> u64 {
        self.p_set.ones().filter(|m| m.count_ones() == d).count() as u64
    }

    /// The `P` words in canonical enumeration order.
    pub fn p_words(&self) -> Vec<Word> {
        crate::lattice::enumerate(self.params)
            .into_iter()
            .filter(|w| self.is_p(w))
            .collect()
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            p_set: self.p_words().iter().map(Word::to_string).collect(),
        }
    }
}

impl fmt::Display for BooleanMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.p_words().iter().map(Word::to_string).collect();
        write!(f, "P = {{{}}}", words.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4,
    A5,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub is_bm: bool,
    pub is_wbm: bool,
    pub violated: Vec<Axiom>,
}

/// Cover structure of one lattice, indexed by word mask.
#[derive(Clone, Debug)]
pub struct LatticeIndex {
    params: LatticeParams,
    /// Canonical enumeration order.
    words: Vec<Word>,
    upper: Vec<Vec<u64>>,
    lower: Vec<Vec<u64>>,
}

impl LatticeIndex {
    pub fn new(params: LatticeParams) -> Self {
        let diagram = build(params, GenOrder::OutIn);
        let size = params.size() as usize;
        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for (a, b) in &diagram.edges {
            upper[a.members() as usize].push(b.members());
            lower[b.members() as usize].push(a.members());
        }
        let words = diagram.levels.into_iter().flatten().collect();
        Self {
            params,
            words,
            upper,
            lower,
        }
    }

    pub fn params(&self) -> LatticeParams {
        self.params
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The word `0..0|0..01`, absent when `r = n`.
    fn first_bar(&self) -> Option<u64> {
        self.params.bit_of(Symbol::Bar(1)).ok()
    }

    pub fn check_axioms(&self, map: &BooleanMap) -> Result<AxiomReport> {
        if map.params != self.params {
            return Err(Error::ParamsMismatch(self.params, map.params));
        }
        let full = self.params.full_mask();
        let mut violated = Vec::new();
        let mut a1 = true;
        let mut a2 = true;
        for (m, ups) in self.upper.iter().enumerate() {
            for &u in ups {
                if map.is_p_mask(m as u64) && !map.is_p_mask(u) {
                    a1 = false;
                }
                if !map.is_p_mask(u) && map.is_p_mask(m as u64) {
                    a2 = false;
                }
            }
        }
        if !a1 {
            violated.push(Axiom::A1);
        }
        if !a2 {
            violated.push(Axiom::A2);
        }
        let a3 = map.is_p_mask(0) && self.first_bar().is_none_or(|b| !map.is_p_mask(b));
        if !a3 {
            violated.push(Axiom::A3);
        }
        let a4 = (0..=full).all(|m| map.is_p_mask(m) || map.is_p_mask(m ^ full));
        if !a4 {
            violated.push(Axiom::A4);
        }
        if !map.is_p_mask(full) {
            violated.push(Axiom::A5);
        }
        let is_bm = !violated
            .iter()
            .any(|a| matches!(a, Axiom::A1 | Axiom::A2 | Axiom::A3));
        Ok(AxiomReport {
            is_bm,
            is_wbm: is_bm && violated.is_empty(),
            violated,
        })
    }

    /// Decides whether `map` equals `A_f` for some function `f`, weight
    /// functions only when `variant` is [`Variant::Weighted`].
    ///
    /// The constraint system is homogeneous in the values of `f`, so every
    /// strict inequality `expr < 0` is replaced by `expr <= -1`. Only the
    /// minimal `P` words and maximal `N` words are constrained; the monotone
    /// chain carries the rest.
    pub fn is_representable<T: Scalar>(
        &self,
        map: &BooleanMap,
        variant: Variant,
    ) -> Result<Representability<T>> {
        let report = self.check_axioms(map)?;
        let admissible = match variant {
            Variant::Boolean => report.is_bm,
            Variant::Weighted => report.is_wbm,
        };
        if !admissible {
            return Ok(Representability::NotRepresentable);
        }
        let n = self.params.n() as usize;
        let r = self.params.r() as usize;
        let one = T::one();
        let unit = |i: usize, v: T| {
            let mut c = vec![T::zero(); n];
            c[i] = v;
            c
        };
        let mut rows = Vec::new();
        if r > 0 {
            rows.push(Constraint::new(unit(0, -one.clone()), T::zero()));
        }
        for i in 1..r {
            let mut c = unit(i - 1, one.clone());
            c[i] = -one.clone();
            rows.push(Constraint::new(c, T::zero()));
        }
        if n > r {
            rows.push(Constraint::new(unit(r, one.clone()), -one.clone()));
        }
        for j in r + 1..n {
            let mut c = unit(j, one.clone());
            c[j - 1] = -one.clone();
            rows.push(Constraint::new(c, T::zero()));
        }
        if variant == Variant::Weighted {
            rows.push(Constraint::new(vec![-one.clone(); n], T::zero()));
        }
        let indicator = |mask: u64, v: &T| -> Vec<T> {
            (0..n)
                .map(|b| {
                    if mask >> b & 1 == 1 {
                        v.clone()
                    } else {
                        T::zero()
                    }
                })
                .collect()
        };
        for w in &self.words {
            let m = w.members();
            if map.is_p_mask(m) {
                if self.lower[m as usize].iter().all(|&l| !map.is_p_mask(l)) {
                    rows.push(Constraint::new(indicator(m, &-one.clone()), T::zero()));
                }
            } else if self.upper[m as usize].iter().all(|&u| map.is_p_mask(u)) {
                rows.push(Constraint::new(indicator(m, &one), -one.clone()));
            }
        }
        match solve(n, rows) {
            Feasibility::Infeasible => Ok(Representability::NotRepresentable),
            Feasibility::Feasible(mut x) => {
                let bar = x.split_off(r);
                let f = NrFunction::new(self.params, x, bar)
                    .expect("witness satisfies the monotone chain");
                assert!(
                    variant == Variant::Boolean || f.is_weight(),
                    "witness satisfies the weight condition"
                );
                assert_eq!(&f.induced_map(), map, "witness reproduces the queried map");
                Ok(Representability::Representable(f))
            }
        }
    }

    /// Every WBM of the lattice, as a fallible stream capped at `cap` maps.
    pub fn enumerate_wbm(&self, cap: u64) -> WbmEnumerator<'_> {
        WbmEnumerator::new(self, cap)
    }
}

pub fn check_axioms(map: &BooleanMap) -> AxiomReport {
    LatticeIndex::new(map.params)
        .check_axioms(map)
        .expect("index built for the map's own lattice")
}

pub fn is_representable(map: &BooleanMap, variant: Variant) -> Representability<Rational> {
    LatticeIndex::new(map.params)
        .is_representable(map, variant)
        .expect("index built for the map's own lattice")
}

/// Which family a representing function must come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Any function satisfying the monotone chain.
    Boolean,
    /// Functions with nonnegative total as well.
    Weighted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representability<T> {
    Representable(NrFunction<T>),
    NotRepresentable,
}

impl<T> Representability<T> {
    pub fn is_representable(&self) -> bool {
        matches!(self, Representability::Representable(_))
    }

    pub fn witness(&self) -> Option<&NrFunction<T>> {
        match self {
            Representability::Representable(f) => Some(f),
            Representability::NotRepresentable => None,
        }
    }
}

const UNKNOWN: u8 = 0;
const POS: u8 = 1;
const NEG: u8 = 2;

struct Frame {
    labels: Vec<u8>,
    cursor: usize,
}

/// Depth-first search over labelings, deciding words from the top rank
/// down, `N` branch before `P` branch. Every decision is closed under
/// upward `P`, downward `N`, and `N => P` on the complement before the next
/// word is considered, so each leaf is a distinct WBM.
pub struct WbmEnumerator<'a> {
    index: &'a LatticeIndex,
    order: Vec<u64>,
    stack: Vec<Frame>,
    cap: u64,
    yielded: u64,
    done: bool,
}

impl<'a> WbmEnumerator<'a> {
    fn new(index: &'a LatticeIndex, cap: u64) -> Self {
        let params = index.params;
        let mut order: Vec<u64> = Vec::with_capacity(index.words.len());
        for level in build(params, GenOrder::OutIn).levels.iter().rev() {
            order.extend(level.iter().map(Word::members));
        }
        let mut labels = vec![UNKNOWN; params.size() as usize];
        let mut ok = propagate(index, &mut labels, 0, POS)
            && propagate(index, &mut labels, params.full_mask(), POS);
        if let Some(b) = index.first_bar() {
            ok = ok && propagate(index, &mut labels, b, NEG);
        }
        let stack = if ok {
            vec![Frame { labels, cursor: 0 }]
        } else {
            Vec::new()
        };
        Self {
            index,
            order,
            stack,
            cap,
            yielded: 0,
            done: false,
        }
    }

    /// Maps produced so far.
    pub fn yielded(&self) -> u64 {
        self.yielded
    }
}

fn propagate(index: &LatticeIndex, labels: &mut [u8], start: u64, label: u8) -> bool {
    let full = index.params.full_mask();
    let mut work = vec![(start, label)];
    while let Some((m, l)) = work.pop() {
        match labels[m as usize] {
            UNKNOWN => labels[m as usize] = l,
            existing if existing == l => continue,
            _ => return false,
        }
        if l == POS {
            work.extend(index.upper[m as usize].iter().map(|&u| (u, POS)));
        } else {
            work.extend(index.lower[m as usize].iter().map(|&d| (d, NEG)));
            work.push((m ^ full, POS));
        }
    }
    true
}

impl Iterator for WbmEnumerator<'_> {
    type Item = Result<BooleanMap>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        while let Some(mut frame) = self.stack.pop() {
            while frame.cursor < self.order.len()
                && frame.labels[self.order[frame.cursor] as usize] != UNKNOWN
            {
                frame.cursor += 1;
            }
            if frame.cursor == self.order.len() {
                if self.yielded == self.cap {
                    self.done = true;
                    self.stack.clear();
                    return Some(Err(Error::CapExceeded {
                        cap: self.cap,
                        partial: self.yielded,
                    }));
                }
                self.yielded += 1;
                let masks = frame
                    .labels
                    .iter()
                    .enumerate()
                    .filter(|(_, &l)| l == POS)
                    .map(|(m, _)| m as u64);
                return Some(Ok(BooleanMap::from_masks(self.index.params, masks)));
            }
            let m = self.order[frame.cursor];
            let mut p = frame.labels.clone();
            if propagate(self.index, &mut p, m, POS) {
                self.stack.push(Frame {
                    labels: p,
                    cursor: frame.cursor + 1,
                });
            }
            let mut n = frame.labels;
            if propagate(self.index, &mut n, m, NEG) {
                self.stack.push(Frame {
                    labels: n,
                    cursor: frame.cursor + 1,
                });
            }
        }
        self.done = true;
        None
    }
}

/// Caps applied to exhaustive WBM searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Maximum number of maps enumerated before giving up.
    pub cap: u64,
    /// Largest `n` attempted at all.
    pub max_n: u32,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            cap: 10_000_000,
            max_n: 5,
        }
    }
}

/// Stream every WBM of `S(n,r)` under `limits`.
pub fn enumerate_wbm(params: LatticeParams, cap: u64) -> Result<Vec<BooleanMap>> {
    let index = LatticeIndex::new(params);
    index.enumerate_wbm(cap).collect()
}

/// Everything learned from one exhaustive pass over `WB(n,r)`.
#[derive(Clone, Debug)]
pub struct GammaReport {
    pub params: LatticeParams,
    pub d: Option<u32>,
    /// Minimum `P` count over all WBMs.
    pub gamma_tilde: u64,
    pub tilde_minimizer: BooleanMap,
    /// Minimum `P` count over numerically represented WBMs.
    pub gamma: u64,
    pub minimizer: BooleanMap,
    /// A weight function inducing `minimizer`.
    pub witness: WeightFunction,
    pub wb_count: u64,
    pub rwb_count: u64,
    pub non_representable: Vec<BooleanMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReportJson {
    pub n: u32,
    pub r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub gamma_tilde: u64,
    pub gamma: u64,
    pub minimizer: MapJson,
    pub wb_count: u64,
    pub rwb_count: u64,
    pub non_representable: Vec<MapJson>,
}

impl GammaReport {
    pub fn to_json(&self) -> GammaReportJson {
        GammaReportJson {
            n: self.params.n(),
            r: self.params.r(),
            d: self.d,
            gamma_tilde: self.gamma_tilde,
            gamma: self.gamma,
            minimizer: self.minimizer.to_json(),
            wb_count: self.wb_count,
            rwb_count: self.rwb_count,
            non_representable: self
                .non_representable
                .iter()
                .map(BooleanMap::to_json)
                .collect(),
        }
    }
}

const CHUNK: usize = 2048;

/// Enumerates `WB(n,r)`, checks each map for representability and collects
/// the extremal counts. With `d` set, only words with `d` nonzero symbols
/// are counted.
///
/// Requires `1 <= r <= n` and `n <= limits.max_n`.
pub fn analyze(
    params: LatticeParams,
    d: Option<u32>,
    limits: EnumerationLimits,
) -> Result<GammaReport> {
    if params.n() > limits.max_n {
        return Err(Error::OutOfScale(format!(
            "{params} exceeds the enumeration guard n <= {}",
            limits.max_n
        )));
    }
    if params.r() == 0 {
        return Err(Error::Domain(format!(
            "{params} has no weighted boolean maps: every negative-only valuation has negative total"
        )));
    }
    if let Some(d) = d {
        if d < 1 || d > params.n() {
            return Err(Error::Domain(format!(
                "d = {d} must lie in 1..={}",
                params.n()
            )));
        }
    }
    let index = LatticeIndex::new(params);
    let count = |m: &BooleanMap| d.map_or_else(|| m.p_count(), |d| m.p_count_d(d));

    let mut wb_count = 0u64;
    let mut rwb_count = 0u64;
    let mut tilde_best: Option<(u64, BooleanMap)> = None;
    let mut best: Option<(u64, BooleanMap, WeightFunction)> = None;
    let mut non_representable = Vec::new();

    let mut stream = index.enumerate_wbm(limits.cap);
    loop {
        let chunk: Vec<BooleanMap> = stream.by_ref().take(CHUNK).collect::<Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        let checked: Vec<Representability<Rational>> = chunk
            .par_iter()
            .map(|m| index.is_representable(m, Variant::Weighted))
            .collect::<Result<_>>()?;
        for (map, rep) in chunk.into_iter().zip(checked) {
            wb_count += 1;
            let c = count(&map);
            if tilde_best.as_ref().is_none_or(|(b, _)| c < *b) {
                tilde_best = Some((c, map.clone()));
            }
            match rep {
                Representability::Representable(f) => {
                    rwb_count += 1;
                    if best.as_ref().is_none_or(|(b, _, _)| c < *b) {
                        best = Some((c, map, f));
                    }
                }
                Representability::NotRepresentable => non_representable.push(map),
            }
        }
    }
    let (gamma_tilde, tilde_minimizer) = tilde_best
        .ok_or_else(|| Error::Domain(format!("{params} has no weighted boolean maps")))?;
    let (gamma, minimizer, witness) = best.ok_or_else(|| {
        Error::Domain(format!(
            "{params} has no numerically represented weighted boolean maps"
        ))
    })?;
    assert!(
        gamma_tilde <= gamma,
        "every represented map is a weighted map"
    );
    if wb_count == rwb_count {
        assert_eq!(
            gamma_tilde, gamma,
            "all maps represented, so the minima coincide"
        );
    }
    Ok(GammaReport {
        params,
        d,
        gamma_tilde,
        tilde_minimizer,
        gamma,
        minimizer,
        witness,
        wb_count,
        rwb_count,
        non_representable,
    })
}

pub fn gamma(params: LatticeParams, limits: EnumerationLimits) -> Result<(u64, BooleanMap)> {
    analyze(params, None, limits).map(|r| (r.gamma, r.minimizer))
}

pub fn gamma_tilde(params: LatticeParams, limits: EnumerationLimits) -> Result<(u64, BooleanMap)> {
    analyze(params, None, limits).map(|r| (r.gamma_tilde, r.tilde_minimizer))
}

pub fn gamma_d(
    params: LatticeParams,
    d: u32,
    limits: EnumerationLimits,
) -> Result<(u64, BooleanMap)> {
    analyze(params, Some(d), limits).map(|r| (r.gamma, r.minimizer))
}

pub fn gamma_tilde_d(
    params: LatticeParams,
    d: u32,
    limits: EnumerationLimits,
) -> Result<(u64, BooleanMap)> {
    analyze(params, Some(d), limits).map(|r| (r.gamma_tilde, r.tilde_minimizer))
}

/// Minimum of `gamma_d` over `1 <= r <= n`, with the first minimizing `r`.
pub fn psi(n: u32, d: u32, limits: EnumerationLimits) -> Result<(u64, u32, BooleanMap)> {
    let mut best: Option<(u64, u32, BooleanMap)> = None;
    for r in 1..=n {
        let (g, map) = gamma_d(LatticeParams::new(n, r)?, d, limits)?;
        if best.as_ref().is_none_or(|(b, _, _)| g < *b) {
            best = Some((g, r, map));
        }
    }
    best.ok_or_else(|| Error::Domain(format!("psi({n},{d}) needs n >= 1")))
}

/// The WB-versus-RWB census of `S(n,r)`.
pub fn wb_vs_rwb_report(params: LatticeParams, limits: EnumerationLimits) -> Result<GammaReport> {
    analyze(params, None, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::f85;

    fn p(n: u32, r: u32) -> LatticeParams {
        LatticeParams::new(n, r).unwrap()
    }

    fn words(params: LatticeParams, list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| params.parse_word(s).unwrap()).collect()
    }

    #[test]
    fn all_p_fails_a3() {
        let params = p(3, 1);
        let all = BooleanMap::from_masks(params, 0..params.size());
        let report = check_axioms(&all);
        assert!(!report.is_bm);
        assert!(report.violated.contains(&Axiom::A3));
    }

    #[test]
    fn s21_diamond_by_hand() {
        let params = p(2, 1);
        let map = BooleanMap::from_p_words(params, words(params, &["0|0", "1|1", "1|0"])).unwrap();
        let report = check_axioms(&map);
        assert!(report.is_wbm, "{report:?}");
        assert!(report.violated.is_empty());
    }

    #[test]
    fn non_monotone_map_fails_a1_and_a2() {
        let params = p(2, 1);
        // drop the top word from the diamond map
        let map = BooleanMap::from_p_words(params, words(params, &["0|0", "1|1"])).unwrap();
        let report = check_axioms(&map);
        assert_eq!(report.violated, vec![Axiom::A1, Axiom::A2, Axiom::A4]);
    }

    #[test]
    fn partial_labeling_is_a_domain_error() {
        let params = p(2, 1);
        let w = params.zero_word();
        let err = BooleanMap::from_labels(params, [(w, Label::P)]);
        assert!(matches!(err, Err(Error::Domain(_))));
        let err = BooleanMap::from_labels(params, [(w, Label::P), (w, Label::N)]);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn labels_round_trip() {
        let params = p(2, 1);
        let labels: Vec<(Word, Label)> = words(params, &["0|1", "0|0", "1|1", "1|0"])
            .into_iter()
            .zip([Label::N, Label::P, Label::P, Label::P])
            .collect();
        let map = BooleanMap::from_labels(params, labels.clone()).unwrap();
        for (w, l) in labels {
            assert_eq!(map.label(&w), l);
        }
    }

    #[test]
    fn fixture_map_is_wbm() {
        let f = f85::<Rational>();
        assert!(check_axioms(&f.induced_map()).is_wbm);
    }

    #[test]
    fn unique_wbm_of_s21() {
        let maps = enumerate_wbm(p(2, 1), 100).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].p_count(), 3);
        let rep = is_representable(&maps[0], Variant::Weighted);
        let f = rep.witness().expect("representable");
        assert_eq!(&f.induced_map(), &maps[0]);
    }

    #[test]
    fn s11_enumeration_is_self_consistent() {
        let maps = enumerate_wbm(p(1, 1), 100).unwrap();
        assert!(!maps.is_empty());
        for m in &maps {
            assert!(check_axioms(m).is_wbm);
        }
    }

    #[test]
    fn r_zero_has_no_wbm() {
        assert!(enumerate_wbm(p(3, 0), 100).unwrap().is_empty());
        assert!(matches!(
            analyze(p(3, 0), None, EnumerationLimits::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cap_is_reported_with_partial_count() {
        let index = LatticeIndex::new(p(4, 2));
        let all: Vec<_> = index
            .enumerate_wbm(u64::MAX)
            .collect::<Result<_>>()
            .unwrap();
        assert!(all.len() > 2);
        let capped: Vec<_> = index.enumerate_wbm(2).collect();
        assert_eq!(capped.len(), 3);
        assert!(matches!(
            capped[2],
            Err(Error::CapExceeded { cap: 2, partial: 2 })
        ));
        // exactly at the count is fine
        let exact: Result<Vec<_>> = index.enumerate_wbm(all.len() as u64).collect();
        assert_eq!(exact.unwrap().len(), all.len());
    }

    #[test]
    fn guard_rejects_large_n() {
        let limits = EnumerationLimits::default();
        assert!(matches!(
            analyze(p(6, 3), None, limits),
            Err(Error::OutOfScale(_))
        ));
    }

    #[test]
    fn gamma_s21() {
        let limits = EnumerationLimits::default();
        let (g, map) = gamma(p(2, 1), limits).unwrap();
        assert_eq!(g, 3);
        assert_eq!(map.p_count(), 3);
        let report = wb_vs_rwb_report(p(2, 1), limits).unwrap();
        assert_eq!((report.wb_count, report.rwb_count), (1, 1));
        assert!(report.non_representable.is_empty());
    }

    #[test]
    fn non_wbm_is_not_weight_representable() {
        let params = p(2, 1);
        let map = BooleanMap::from_p_words(params, words(params, &["1|0"])).unwrap();
        assert!(!is_representable(&map, Variant::Weighted).is_representable());
        assert!(!is_representable(&map, Variant::Boolean).is_representable());
    }

    #[test]
    fn boolean_variant_admits_negative_totals() {
        // P only on the zero word and the top: f(T1) small, f(B1) very negative
        let params = p(2, 1);
        let map = BooleanMap::from_p_words(params, words(params, &["0|0", "1|0"])).unwrap();
        assert!(check_axioms(&map).is_bm);
        assert!(!check_axioms(&map).is_wbm);
        let rep = is_representable(&map, Variant::Boolean);
        let f = rep.witness().expect("a plain function exists");
        assert!(!f.is_weight());
        assert!(!is_representable(&map, Variant::Weighted).is_representable());
    }

    #[test]
    fn json_round_trip() {
        let maps = enumerate_wbm(p(3, 1), 1000).unwrap();
        for m in maps {
            assert_eq!(BooleanMap::from_json(m.params(), &m.to_json()).unwrap(), m);
        }
    }
}
