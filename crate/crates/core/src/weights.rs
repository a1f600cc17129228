//! Exact valuations of the alphabet and the sums they induce on words.
//!
//! An [`NrFunction`] assigns a value to every nonzero symbol such that
//!
//! ```text
//! f(Tr) >= .. >= f(T1) >= 0 > f(B1) >= .. >= f(B(n-r))
//! ```
//!
//! and it is a weight function when in addition the values sum to something
//! nonnegative. `sigma` adds the values over the letters of a word; the
//! monotone chain makes it order preserving on `S(n,r)`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boolmaps::BooleanMap;
use crate::error::{Error, Result, ValidationError};
use crate::lattice::{enumerate, LatticeParams, Symbol, Word};
use crate::scalar::Scalar;

/// Seed of the randomized function pools used throughout the test suites.
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_5a17;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NrFunction<T> {
    params: LatticeParams,
    /// `tilde[i - 1] = f(Ti)`.
    tilde: Vec<T>,
    /// `bar[j - 1] = f(Bj)`.
    bar: Vec<T>,
    weight: bool,
}

impl<T: Scalar> NrFunction<T> {
    /// Checks the monotone chain and records whether the weight condition holds.
    pub fn new(params: LatticeParams, tilde: Vec<T>, bar: Vec<T>) -> Result<Self, ValidationError> {
        if tilde.len() != params.r() as usize {
            return Err(ValidationError::WrongCount {
                side: "positive",
                expected: params.r() as usize,
                found: tilde.len(),
            });
        }
        if bar.len() != params.bars() as usize {
            return Err(ValidationError::WrongCount {
                side: "negative",
                expected: params.bars() as usize,
                found: bar.len(),
            });
        }
        if let Some(first) = tilde.first() {
            if first.is_negative() {
                return Err(ValidationError::Chain("f(T1) >= 0".into()));
            }
        }
        for i in 1..tilde.len() {
            if tilde[i] < tilde[i - 1] {
                return Err(ValidationError::Chain(format!(
                    "f(T{}) >= f(T{})",
                    i + 1,
                    i
                )));
            }
        }
        if let Some(first) = bar.first() {
            if !first.is_negative() {
                return Err(ValidationError::Chain("0 > f(B1)".into()));
            }
        }
        for j in 1..bar.len() {
            if bar[j] > bar[j - 1] {
                return Err(ValidationError::Chain(format!(
                    "f(B{}) >= f(B{})",
                    j,
                    j + 1
                )));
            }
        }
        let total = tilde
            .iter()
            .chain(&bar)
            .fold(T::zero(), |acc, v| acc + v.clone());
        Ok(Self {
            params,
            tilde,
            bar,
            weight: !total.is_negative(),
        })
    }

    /// Builds a function from one value per symbol. The zero mark may be
    /// listed but must then be valued 0.
    pub fn validate<I>(params: LatticeParams, values: I) -> Result<Self, ValidationError>
    where
        I: IntoIterator<Item = (Symbol, T)>,
    {
        let mut map = BTreeMap::new();
        for (s, v) in values {
            match s {
                Symbol::Zero if !v.is_zero() => return Err(ValidationError::NonzeroAtZero),
                Symbol::Zero => {}
                _ => {
                    if params.bit_of(s).is_err() {
                        return Err(ValidationError::UnknownSymbol(s));
                    }
                    map.insert(s, v);
                }
            }
        }
        let mut take = |s: Symbol| map.remove(&s).ok_or(ValidationError::MissingValue(s));
        let tilde = (1..=params.r())
            .map(|i| take(Symbol::Tilde(i)))
            .collect::<Result<Vec<_>, _>>()?;
        let bar = (1..=params.bars())
            .map(|j| take(Symbol::Bar(j)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(params, tilde, bar)
    }

    pub fn params(&self) -> LatticeParams {
        self.params
    }

    /// Whether the values sum to a nonnegative total.
    pub fn is_weight(&self) -> bool {
        self.weight
    }

    pub fn tilde_values(&self) -> &[T] {
        &self.tilde
    }

    pub fn bar_values(&self) -> &[T] {
        &self.bar
    }

    pub fn value(&self, symbol: Symbol) -> T {
        match symbol {
            Symbol::Zero => T::zero(),
            Symbol::Tilde(i) => self.tilde[i as usize - 1].clone(),
            Symbol::Bar(j) => self.bar[j as usize - 1].clone(),
        }
    }

    /// Value in bit order of the word masks.
    fn bit_value(&self, bit: usize) -> &T {
        let r = self.tilde.len();
        if bit < r {
            &self.tilde[bit]
        } else {
            &self.bar[bit - r]
        }
    }

    pub fn total(&self) -> T {
        self.tilde
            .iter()
            .chain(&self.bar)
            .fold(T::zero(), |acc, v| acc + v.clone())
    }

    pub fn sigma(&self, word: &Word) -> Result<T> {
        if word.params() != self.params {
            return Err(Error::ParamsMismatch(self.params, word.params()));
        }
        Ok(self.sigma_mask(word.members()))
    }

    pub(crate) fn sigma_mask(&self, mut members: u64) -> T {
        let mut acc = T::zero();
        while members != 0 {
            let bit = members.trailing_zeros() as usize;
            acc = acc + self.bit_value(bit).clone();
            members &= members - 1;
        }
        acc
    }

    /// `A_f`: label `P` exactly where `sigma >= 0`.
    pub fn induced_map(&self) -> BooleanMap {
        let positive = (0..self.params.size()).filter(|&m| !self.sigma_mask(m).is_negative());
        BooleanMap::from_masks(self.params, positive)
    }

    /// `|{w : sigma(w) >= 0}|`, the all-zero word included.
    pub fn alpha_count(&self) -> u64 {
        (0..self.params.size())
            .filter(|&m| !self.sigma_mask(m).is_negative())
            .count() as u64
    }

    /// Nonnegative-sum words with exactly `d` nonzero symbols.
    pub fn phi_count(&self, d: u32) -> Result<u64> {
        if d < 1 || d > self.params.n() {
            return Err(Error::Domain(format!(
                "d = {d} must lie in 1..={}",
                self.params.n()
            )));
        }
        Ok((0..self.params.size())
            .filter(|m| m.count_ones() == d && !self.sigma_mask(*m).is_negative())
            .count() as u64)
    }

    /// `(word, sigma)` for every word in canonical enumeration order.
    pub fn sigma_table(&self) -> Vec<(Word, T)> {
        enumerate(self.params)
            .into_iter()
            .map(|w| {
                let s = self.sigma_mask(w.members());
                (w, s)
            })
            .collect()
    }

    pub fn to_json(&self) -> NrFunctionJson {
        NrFunctionJson {
            n: self.params.n(),
            r: self.params.r(),
            tilde: self.tilde.iter().map(ToString::to_string).collect(),
            bar: self.bar.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(json: &NrFunctionJson) -> Result<Self> {
        let params = LatticeParams::new(json.n, json.r)?;
        let parse = |s: &String| {
            s.trim()
                .parse::<T>()
                .map_err(|_| ValidationError::BadRational(s.clone()))
        };
        let tilde = json
            .tilde
            .iter()
            .map(parse)
            .collect::<Result<Vec<_>, _>>()?;
        let bar = json.bar.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(params, tilde, bar)?)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: NrFunctionJson = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("malformed function description: {e}")))?;
        Self::from_json(&json)
    }
}

/// File form of a function: `{n, r, tilde: ["p/q", ..], bar: [..]}` with
/// `tilde[i-1] = f(Ti)` and `bar[j-1] = f(Bj)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NrFunctionJson {
    pub n: u32,
    pub r: u32,
    pub tilde: Vec<String>,
    pub bar: Vec<String>,
}

/// `n = 8, r = 5`: five marks at `1/5`, three at `-1/3`.
pub const F85_JSON: &str = include_str!("../fixtures/f85.json");

pub fn f85<T: Scalar>() -> NrFunction<T> {
    NrFunction::from_json_str(F85_JSON).expect("bundled fixture is valid")
}

/// Deterministic pool of random valid functions on `S(n,r)`.
///
/// Raw values are small fractions; positives are made nonnegative and sorted
/// ascending, negatives are pushed strictly below zero and sorted descending.
/// With `weight_only`, a negative total is repaired by adding its deficit to
/// the largest positive mark. `S(n,0)` with `n > 0` admits no weight
/// function, so that pool is empty.
pub fn random_pool<T: Scalar>(
    params: LatticeParams,
    count: usize,
    seed: u64,
    weight_only: bool,
) -> Vec<NrFunction<T>> {
    if weight_only && params.r() == 0 && params.n() > 0 {
        return Vec::new();
    }
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ (u64::from(params.n()) << 32) ^ u64::from(params.r()));
    let frac = |rng: &mut ChaCha8Rng, lo: i64| {
        let num = rng.gen_range(lo..=9i64);
        let den = rng.gen_range(1..=6i64);
        T::from_i64(num).unwrap() / T::from_i64(den).unwrap()
    };
    (0..count)
        .map(|_| {
            let mut tilde: Vec<T> = (0..params.r()).map(|_| frac(&mut rng, 0)).collect();
            tilde.sort();
            let mut bar: Vec<T> = (0..params.bars()).map(|_| -frac(&mut rng, 1)).collect();
            bar.sort_by(|a, b| b.cmp(a));
            if weight_only {
                let total = tilde
                    .iter()
                    .chain(&bar)
                    .fold(T::zero(), |a, v| a + v.clone());
                if total.is_negative() {
                    let last = tilde.last_mut().expect("r >= 1");
                    *last = last.clone() - total;
                }
            }
            NrFunction::new(params, tilde, bar).expect("repaired values satisfy the chain")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(d))
    }

    fn params(n: u32, r: u32) -> LatticeParams {
        LatticeParams::new(n, r).unwrap()
    }

    #[test]
    fn fixture_is_a_weight_function_with_zero_total() {
        let f = f85::<Rational>();
        assert!(f.is_weight());
        assert_eq!(f.total(), q(0, 1));
        assert_eq!(f.value(Symbol::Tilde(3)), q(1, 5));
        assert_eq!(f.value(Symbol::Bar(2)), q(-1, 3));
        assert_eq!(f.value(Symbol::Zero), q(0, 1));
    }

    #[test]
    fn boundary_strictness_rejected() {
        let err = NrFunction::new(params(3, 2), vec![q(0, 1), q(0, 1)], vec![q(0, 1)]);
        assert_eq!(err, Err(ValidationError::Chain("0 > f(B1)".into())));
    }

    #[test]
    fn chain_violations_are_named() {
        let e = NrFunction::new(params(3, 2), vec![q(2, 1), q(1, 1)], vec![q(-1, 1)]);
        assert_eq!(e, Err(ValidationError::Chain("f(T2) >= f(T1)".into())));
        let e = NrFunction::new(params(3, 1), vec![q(2, 1)], vec![q(-2, 1), q(-1, 1)]);
        assert_eq!(e, Err(ValidationError::Chain("f(B1) >= f(B2)".into())));
        let e = NrFunction::new(params(2, 1), vec![q(-1, 1)], vec![q(-1, 1)]);
        assert_eq!(e, Err(ValidationError::Chain("f(T1) >= 0".into())));
        let e = NrFunction::new(params(2, 1), vec![], vec![q(-1, 1)]);
        assert!(matches!(e, Err(ValidationError::WrongCount { .. })));
    }

    #[test]
    fn non_weight_function_is_flagged() {
        let f = NrFunction::new(
            params(4, 3),
            vec![q(1, 1), q(2, 1), q(3, 1)],
            vec![q(-10, 1)],
        )
        .unwrap();
        assert!(!f.is_weight());
        assert_eq!(f.total(), q(-4, 1));
    }

    #[test]
    fn validate_from_symbol_map() {
        let p = params(2, 1);
        let f = NrFunction::validate(
            p,
            [
                (Symbol::Zero, q(0, 1)),
                (Symbol::Tilde(1), q(1, 1)),
                (Symbol::Bar(1), q(-1, 1)),
            ],
        )
        .unwrap();
        assert!(f.is_weight());
        let e = NrFunction::validate(p, [(Symbol::Zero, q(1, 1))]);
        assert_eq!(e, Err(ValidationError::NonzeroAtZero));
        let e = NrFunction::validate(p, [(Symbol::Tilde(1), q(1, 1))]);
        assert_eq!(e, Err(ValidationError::MissingValue(Symbol::Bar(1))));
        let e = NrFunction::validate(p, [(Symbol::Tilde(2), q(1, 1))]);
        assert_eq!(e, Err(ValidationError::UnknownSymbol(Symbol::Tilde(2))));
    }

    #[test]
    fn sigma_examples() {
        let f = f85::<Rational>();
        let top: Word = "54321|000".parse().unwrap();
        assert_eq!(f.sigma(&top).unwrap(), q(1, 1));
        let zero = params(8, 5).zero_word();
        assert_eq!(f.sigma(&zero).unwrap(), q(0, 1));
        let w: Word = "43210|003".parse().unwrap();
        assert_eq!(f.sigma(&w).unwrap(), q(7, 15));
        let other: Word = "1|0".parse().unwrap();
        assert!(f.sigma(&other).is_err());
    }

    #[test]
    fn fixture_counts() {
        let f = f85::<Rational>();
        assert_eq!(f.phi_count(5).unwrap(), 16);
        assert!(f.phi_count(0).is_err());
        assert!(f.phi_count(9).is_err());
        let map = f.induced_map();
        assert!(map.is_p(&params(8, 5).zero_word()));
        assert_eq!(map.p_count(), f.alpha_count());
    }

    #[test]
    fn alpha_count_on_s21_pool() {
        for f in random_pool::<Rational>(params(2, 1), 50, DEFAULT_SEED, true) {
            assert!(f.alpha_count() >= 3);
        }
    }

    #[test]
    fn json_round_trip_and_errors() {
        let f = f85::<Rational>();
        let back = NrFunction::<Rational>::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"n":2,"r":1,"tilde":["x"],"bar":["-1"]}"#;
        assert!(NrFunction::<Rational>::from_json_str(bad).is_err());
        let bad = r#"{"n":2,"r":1,"tilde":["1"],"bar":["0"]}"#;
        assert!(NrFunction::<Rational>::from_json_str(bad).is_err());
    }

    #[test]
    fn small_rational_backend_agrees() {
        let big = f85::<Rational>();
        let small = f85::<crate::Rational64>();
        assert_eq!(big.phi_count(5).unwrap(), small.phi_count(5).unwrap());
        assert_eq!(big.alpha_count(), small.alpha_count());
    }

    #[test]
    fn pools_are_deterministic_and_valid() {
        let p = params(5, 2);
        let a = random_pool::<Rational>(p, 20, 7, true);
        let b = random_pool::<Rational>(p, 20, 7, true);
        assert_eq!(a, b);
        assert!(a.iter().all(NrFunction::is_weight));
        assert!(random_pool::<Rational>(params(3, 0), 5, 7, true).is_empty());
        assert_eq!(random_pool::<Rational>(params(3, 0), 5, 7, false).len(), 5);
    }
}
