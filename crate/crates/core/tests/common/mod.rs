//! Brute-force oracles that share no code with the library: a word is a raw
//! mask, its string form is rebuilt from scratch, and order, covers, glb/lub
//! and ranks are found by exhaustive search.

#![allow(dead_code)]

use snr_lattice::{LatticeParams, Word};

pub fn params(n: u32, r: u32) -> LatticeParams {
    LatticeParams::new(n, r).unwrap()
}

pub fn all_params(n_max: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=n_max).flat_map(|n| (0..=n).map(move |r| (n, r)))
}

/// Level vector of the canonical string: tildes descending then zeros on the
/// left; zeros then bars ascending (as negative levels) on the right.
pub fn levels(n: u32, r: u32, mask: u64) -> Vec<i32> {
    let mut left: Vec<i32> = (1..=r as i32)
        .filter(|i| mask >> (i - 1) & 1 == 1)
        .collect();
    left.reverse();
    left.resize(r as usize, 0);
    let bars: Vec<i32> = (1..=(n - r) as i32)
        .filter(|j| mask >> (r as i32 + j - 1) & 1 == 1)
        .map(|j| -j)
        .collect();
    let mut right = vec![0; (n - r) as usize - bars.len()];
    right.extend(bars);
    left.extend(right);
    left
}

/// The string form with single-digit symbols.
pub fn render(n: u32, r: u32, mask: u64) -> String {
    let lv = levels(n, r, mask);
    let digits = |xs: &[i32]| xs.iter().map(|v| v.abs().to_string()).collect::<String>();
    format!(
        "{}|{}",
        digits(&lv[..r as usize]),
        digits(&lv[r as usize..])
    )
}

/// Exhaustive order data for one lattice, indexed by mask.
pub struct Oracle {
    pub n: u32,
    pub r: u32,
    pub size: usize,
    pub levels: Vec<Vec<i32>>,
    leq: Vec<bool>,
}

impl Oracle {
    pub fn new(n: u32, r: u32) -> Self {
        let size = 1usize << n;
        let levels: Vec<Vec<i32>> = (0..size as u64).map(|m| levels(n, r, m)).collect();
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                leq[a * size + b] = levels[a].iter().zip(&levels[b]).all(|(x, y)| x <= y);
            }
        }
        Self {
            n,
            r,
            size,
            levels,
            leq,
        }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `b` covers `a`: `a < b` with nothing strictly between.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && !(0..self.size).any(|c| self.lt(a, c) && self.lt(c, b))
    }

    /// All cover pairs, via the minimal elements of each strict up-set.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            let up: Vec<usize> = (0..self.size).filter(|&b| self.lt(a, b)).collect();
            for &b in &up {
                if !up.iter().any(|&c| self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn glb(&self, a: usize, b: usize) -> usize {
        let lower: Vec<usize> = (0..self.size)
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        let best: Vec<usize> = lower
            .iter()
            .copied()
            .filter(|&c| lower.iter().all(|&x| self.leq(x, c)))
            .collect();
        assert_eq!(best.len(), 1, "glb is unique in a lattice");
        best[0]
    }

    pub fn lub(&self, a: usize, b: usize) -> usize {
        let upper: Vec<usize> = (0..self.size)
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .collect();
        let best: Vec<usize> = upper
            .iter()
            .copied()
            .filter(|&c| upper.iter().all(|&x| self.leq(c, x)))
            .collect();
        assert_eq!(best.len(), 1, "lub is unique in a lattice");
        best[0]
    }

    pub fn bottom(&self) -> usize {
        (0..self.size)
            .find(|&a| (0..self.size).all(|b| self.leq(a, b)))
            .unwrap()
    }

    /// Breadth-first distance from the bottom along cover edges, and the
    /// longest cover chain from the bottom; equal in a graded poset.
    pub fn chain_ranks(&self, covers: &[(usize, usize)]) -> (Vec<u64>, Vec<u64>) {
        let mut up = vec![Vec::new(); self.size];
        for &(a, b) in covers {
            up[a].push(b);
        }
        let bottom = self.bottom();
        let mut shortest = vec![u64::MAX; self.size];
        shortest[bottom] = 0;
        let mut queue = std::collections::VecDeque::from([bottom]);
        while let Some(a) = queue.pop_front() {
            for &b in &up[a] {
                if shortest[b] == u64::MAX {
                    shortest[b] = shortest[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        // Longest path: relax in order of strict-down-set size (a linear extension).
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&a| (0..self.size).filter(|&c| self.lt(c, a)).count());
        let mut longest = vec![0u64; self.size];
        for &a in &order {
            for &b in &up[a] {
                longest[b] = longest[b].max(longest[a] + 1);
            }
        }
        (shortest, longest)
    }
}

pub fn word(p: LatticeParams, mask: usize) -> Word {
    p.word_from_mask(mask as u64).unwrap()
}

pub fn w(p: LatticeParams, text: &str) -> Word {
    p.parse_word(text).unwrap()
}

/// Seed for the random function pools: `SNR_SEED` (decimal or `0x` hex)
/// when set, otherwise the library default.
pub fn seed() -> u64 {
    match std::env::var("SNR_SEED") {
        Ok(text) => {
            let text = text.trim();
            match text.strip_prefix("0x") {
                Some(hex) => u64::from_str_radix(hex, 16),
                None => text.parse(),
            }
            .expect("SNR_SEED must be an unsigned integer")
        }
        Err(_) => snr_lattice::weights::DEFAULT_SEED,
    }
}
