//! Exact feasibility of small systems `A x <= b` by Fourier–Motzkin elimination.
//!
//! Variables are eliminated one at a time (cheapest pair count first). Each
//! intermediate system is normalized, deduplicated and stripped of
//! constraints dominated by a tighter copy with the same left-hand side, then
//! kept so a witness can be rebuilt by back-substitution in reverse order.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::Scalar;

/// `sum coeffs[i] * x[i] <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub rhs: T,
}

impl<T: Scalar> Constraint<T> {
    pub fn new(coeffs: Vec<T>, rhs: T) -> Self {
        Self { coeffs, rhs }
    }

    pub fn evaluate(&self, x: &[T]) -> T {
        self.coeffs
            .iter()
            .zip(x)
            .fold(T::zero(), |acc, (a, v)| acc + a.clone() * v.clone())
    }

    pub fn holds(&self, x: &[T]) -> bool {
        self.evaluate(x) <= self.rhs
    }

    /// Scale so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c = c.clone() / lead.clone();
            }
            self.rhs = self.rhs / lead;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility<T> {
    Feasible(Vec<T>),
    Infeasible,
}

impl<T> Feasibility<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Removes trivial rows and dominated duplicates. `None` signals a row
/// `0 <= b` with `b < 0`.
fn prune<T: Scalar>(rows: Vec<Constraint<T>>) -> Option<Vec<Constraint<T>>> {
    let mut best: BTreeMap<Vec<T>, T> = BTreeMap::new();
    for row in rows {
        let row = row.normalized();
        if row.coeffs.iter().all(Zero::is_zero) {
            if row.rhs.is_negative() {
                return None;
            }
            continue;
        }
        best.entry(row.coeffs)
            .and_modify(|rhs| {
                if row.rhs < *rhs {
                    *rhs = row.rhs.clone();
                }
            })
            .or_insert(row.rhs);
    }
    Some(
        best.into_iter()
            .map(|(coeffs, rhs)| Constraint { coeffs, rhs })
            .collect(),
    )
}

fn eliminate<T: Scalar>(rows: &[Constraint<T>], var: usize) -> Vec<Constraint<T>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for row in rows {
        let a = &row.coeffs[var];
        if a.is_positive() {
            pos.push(row);
        } else if a.is_negative() {
            neg.push(row);
        } else {
            out.push(row.clone());
        }
    }
    for p in &pos {
        for q in &neg {
            let wp = -q.coeffs[var].clone();
            let wq = p.coeffs[var].clone();
            let coeffs = p
                .coeffs
                .iter()
                .zip(&q.coeffs)
                .map(|(a, b)| wp.clone() * a.clone() + wq.clone() * b.clone())
                .collect::<Vec<_>>();
            let rhs = wp.clone() * p.rhs.clone() + wq.clone() * q.rhs.clone();
            let mut c = Constraint { coeffs, rhs };
            c.coeffs[var] = T::zero();
            out.push(c);
        }
    }
    out
}

fn pair_cost<T: Scalar>(rows: &[Constraint<T>], var: usize) -> usize {
    let pos = rows.iter().filter(|r| r.coeffs[var].is_positive()).count();
    let neg = rows.iter().filter(|r| r.coeffs[var].is_negative()).count();
    pos * neg
}

/// Decides `A x <= b` over the rationals, returning a witness when feasible.
pub fn solve<T: Scalar>(num_vars: usize, constraints: Vec<Constraint<T>>) -> Feasibility<T> {
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == num_vars));
    let Some(mut rows) = prune(constraints) else {
        return Feasibility::Infeasible;
    };
    let mut remaining: Vec<usize> = (0..num_vars).collect();
    // (variable, system before eliminating it)
    let mut stages: Vec<(usize, Vec<Constraint<T>>)> = Vec::with_capacity(num_vars);
    while !remaining.is_empty() {
        let (slot, &var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| pair_cost(&rows, v))
            .expect("nonempty");
        remaining.swap_remove(slot);
        let next = eliminate(&rows, var);
        stages.push((var, rows));
        match prune(next) {
            Some(r) => rows = r,
            None => return Feasibility::Infeasible,
        }
    }
    debug_assert!(rows.is_empty());

    let mut x = vec![T::zero(); num_vars];
    for (var, system) in stages.iter().rev() {
        let mut lower: Option<T> = None;
        let mut upper: Option<T> = None;
        for row in system {
            let a = &row.coeffs[*var];
            if a.is_zero() {
                continue;
            }
            let rest = row
                .coeffs
                .iter()
                .enumerate()
                .filter(|(i, _)| i != var)
                .fold(T::zero(), |acc, (i, c)| acc + c.clone() * x[i].clone());
            let bound = (row.rhs.clone() - rest) / a.clone();
            if a.is_positive() {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            } else {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            }
        }
        let zero = T::zero();
        x[*var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "elimination certified a nonempty interval");
                if l <= zero && zero <= u {
                    zero
                } else if l > zero {
                    l
                } else {
                    u
                }
            }
            (Some(l), None) => {
                if l > zero {
                    l
                } else {
                    zero
                }
            }
            (None, Some(u)) => {
                if u < zero {
                    u
                } else {
                    zero
                }
            }
            (None, None) => zero,
        };
    }
    Feasibility::Feasible(x)
}
