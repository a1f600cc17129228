//! Level-by-level generation of the Hasse diagram of `S(n,r)`.
//!
//! Each word of rank `k` emits the words obtained by bumping one position to
//! its alphabet successor. Concatenating the emissions of level `k` (in level
//! order) and keeping only the first occurrence of each word yields level
//! `k + 1` together with its left-to-right order.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{LatticeParams, Word};

/// How the children of one word are ordered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenOrder {
    /// Positive indexes ascending, then negative indexes descending.
    #[default]
    OutIn,
    /// All generating indexes ascending.
    LeftRight,
}

impl GenOrder {
    pub fn as_str(&self) -> &'static str {
        match self {
            GenOrder::OutIn => "outin",
            GenOrder::LeftRight => "leftright",
        }
    }
}

/// Positions (1-based) that can be bumped to the covering alphabet symbol
/// while keeping the string canonical, split into the left (`1..=r`) and
/// right (`r+1..=n`) sides.
pub fn generating_indexes(word: &Word) -> (Vec<usize>, Vec<usize>) {
    let params = word.params();
    let r = params.r() as usize;
    let mut levels = word.levels();
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for k in 0..levels.len() {
        levels[k] += 1;
        if params.word_from_levels(&levels).is_ok() {
            if k < r {
                positive.push(k + 1);
            } else {
                negative.push(k + 1);
            }
        }
        levels[k] -= 1;
    }
    (positive, negative)
}

/// The string generated from `word` at position `k` (1-based).
fn bumped(word: &Word, k: usize) -> Word {
    let mut levels = word.levels();
    levels[k - 1] += 1;
    word.params()
        .word_from_levels(&levels)
        .expect("generating index yields a canonical word")
}

pub fn children(word: &Word, order: GenOrder) -> Vec<Word> {
    let (positive, mut negative) = generating_indexes(word);
    if order == GenOrder::OutIn {
        negative.reverse();
    }
    positive
        .into_iter()
        .chain(negative)
        .map(|k| bumped(word, k))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub params: LatticeParams,
    pub order: GenOrder,
    /// `levels[k]` lists the words of rank `k` left to right.
    pub levels: Vec<Vec<Word>>,
    /// Cover pairs `(lower, upper)` in emission order, without repeats.
    pub edges: Vec<(Word, Word)>,
}

impl HasseDiagram {
    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.levels.iter().flatten()
    }

    pub fn edge_set(&self) -> HashSet<(Word, Word)> {
        self.edges.iter().copied().collect()
    }

    pub fn to_dump(&self) -> DiagramDump {
        DiagramDump {
            params: ParamsDump {
                n: self.params.n(),
                r: self.params.r(),
            },
            order: self.order,
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(Word::to_string).collect())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }
}

/// JSON shape of a diagram: `{params, order, levels, edges}`.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramDump {
    pub params: ParamsDump,
    pub order: GenOrder,
    pub levels: Vec<Vec<String>>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParamsDump {
    pub n: u32,
    pub r: u32,
}

pub fn build(params: LatticeParams, order: GenOrder) -> HasseDiagram {
    let mut levels = vec![vec![params.bottom()]];
    let mut edges = Vec::new();
    let mut seen_edges = HashSet::new();
    loop {
        let current = levels.last().expect("at least the bottom level");
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for parent in current {
            for child in children(parent, order) {
                if seen_edges.insert((*parent, child)) {
                    edges.push((*parent, child));
                }
                if seen.insert(child) {
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    debug_assert_eq!(levels.len() as u64, params.rank_bound() + 1);
    HasseDiagram {
        params,
        order,
        levels,
        edges,
    }
}

/// The two disjoint halves of `S(n,r)`, each isomorphic to a lattice on
/// `n - 1` symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitParts {
    /// Words containing the smallest negative mark (for `r < n`); contains the bottom.
    pub lower: Vec<Word>,
    /// The complementary half, translated upward by `height` ranks.
    pub upper: Vec<Word>,
    /// Rank of the minimum of `upper` inside `S(n,r)`.
    pub height: u64,
}

/// Splits `S(n,r)` into two translated copies of `S(n-1,r)`.
///
/// For `r < n` the lower part holds the words containing `B(n-r)`. For
/// `r = n` the split of `S(n,0)` is carried over through
/// [`Word::iso_to_conjugate`], so the height there is `n`.
pub fn split_parts(params: LatticeParams) -> Result<SplitParts> {
    if params.n() == 0 {
        return Err(Error::Domain("S(0,0) has no proper split".into()));
    }
    let words = crate::lattice::enumerate(params);
    if params.r() < params.n() {
        let last_bar = params.bit_of(crate::lattice::Symbol::Bar(params.bars()))?;
        let (lower, upper): (Vec<Word>, Vec<Word>) =
            words.into_iter().partition(|w| w.members() & last_bar != 0);
        Ok(SplitParts {
            lower,
            upper,
            height: u64::from(params.bars()),
        })
    } else {
        let conj = params.conjugate();
        let last_bar = conj.bit_of(crate::lattice::Symbol::Bar(conj.bars()))?;
        let (lower, upper): (Vec<Word>, Vec<Word>) = words
            .into_iter()
            .partition(|w| w.iso_to_conjugate().members() & last_bar != 0);
        Ok(SplitParts {
            lower,
            upper,
            height: u64::from(params.n()),
        })
    }
}

/// The isomorphism from either split part of `S(n,r)` (`r < n`) onto
/// `S(n-1,r)`: forget the smallest negative mark.
pub fn restrict_to_smaller(word: &Word) -> Result<Word> {
    let params = word.params();
    if params.r() == params.n() {
        return Err(Error::Domain(format!(
            "{params} splits through its conjugate; restrict the conjugate word instead"
        )));
    }
    let smaller = LatticeParams::new(params.n() - 1, params.r())?;
    let last_bar = params.bit_of(crate::lattice::Symbol::Bar(params.bars()))?;
    smaller.word_from_mask(word.members() & !last_bar)
}

fn dot_id(word: &Word) -> String {
    format!("\"{}\"", word.to_string().replace('|', "\\|"))
}

/// Graphviz description of the diagram, bottom rank at the bottom.
pub fn to_dot(diagram: &HasseDiagram) -> String {
    let p = diagram.params;
    let mut out = String::new();
    writeln!(out, "digraph \"S({},{})\" {{", p.n(), p.r()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  newrank=true;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    for (k, level) in diagram.levels.iter().enumerate() {
        writeln!(out, "  subgraph level_{k} {{").unwrap();
        writeln!(out, "    rank=same;").unwrap();
        for w in level {
            writeln!(out, "    {} [label=\"{}\"];", dot_id(w), w).unwrap();
        }
        for pair in level.windows(2) {
            writeln!(
                out,
                "    {} -> {} [style=invis];",
                dot_id(&pair[0]),
                dot_id(&pair[1])
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for (a, b) in &diagram.edges {
        writeln!(out, "  {} -> {};", dot_id(a), dot_id(b)).unwrap();
    }
    out.push_str("}\n");
    out
}
