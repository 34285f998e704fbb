//! Minimum distance by exhaustive message enumeration.
//!
//! With the generator in RREF, a codeword splits into its information part
//! (the message itself, on the pivot columns) and its redundancy part
//! `msg * P`. Messages are enumerated one per scalar class: the first nonzero
//! coordinate is fixed to 1 and the tail runs through a modular Gray code, in
//! which every step adds one fixed multiple of one row of `P` to the running
//! redundancy vector. Weights are updated incrementally. Binary codes use a
//! bit-packed path.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

use super::LinearCode;

/// Default cap on the number of codewords enumerated.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Number of scalar classes of nonzero messages, `(q^k - 1)/(q - 1)`.
fn class_count(q: u32, k: usize) -> u128 {
    let q = q as u128;
    (0..k).fold(0u128, |acc, _| acc.saturating_mul(q).saturating_add(1))
}

struct Enumeration {
    best: usize,
    visited: u64,
    /// enumeration stops once `best < stop_below`
    stop_below: usize,
}

impl Enumeration {
    #[inline]
    fn record(&mut self, w: usize) -> bool {
        if w < self.best {
            self.best = w;
        }
        self.best < self.stop_below
    }
}

pub(super) fn min_distance(code: &LinearCode, budget: u64) -> Result<usize> {
    Ok(min_distance_at_least(code, budget, 0)?.expect("no floor"))
}

/// `Some(d)` when the minimum distance `d` is at least `floor`, `None` as
/// soon as a nonzero codeword lighter than `floor` is found.
pub(super) fn min_distance_at_least(
    code: &LinearCode,
    budget: u64,
    floor: usize,
) -> Result<Option<usize>> {
    let k = code.k();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let f = code.field();
    let n = code.n();
    let free: Vec<usize> = (0..n).filter(|c| !code.pivots().contains(c)).collect();
    let redundancy: Vec<Vec<Elem>> = (0..k)
        .map(|i| free.iter().map(|&j| code.generator().get(i, j)).collect())
        .collect();
    let needed = class_count(f.q(), k);
    let mut st = Enumeration {
        best: usize::MAX,
        visited: 0,
        stop_below: floor.max(2),
    };
    let complete = if f.q() == 2 && free.len() <= 128 {
        enumerate_binary(&redundancy, budget, &mut st)
    } else {
        enumerate_general(f, &redundancy, budget, &mut st)
    };
    if complete {
        Ok((st.best >= floor).then_some(st.best))
    } else if st.best < floor {
        Ok(None)
    } else {
        Err(Error::BudgetExceeded {
            needed,
            budget,
            upper_bound: (st.best != usize::MAX).then_some(st.best),
        })
    }
}

/// Returns false when the budget ran out before the enumeration finished.
///
/// Each tail coordinate is split into its `k` base-p digits (the digits of the
/// element index), and the p-ary modular Gray code runs over all of them, so a
/// step that bumps digit `j` of coordinate `i` adds `a^j * row_i`.
fn enumerate_general(f: &Field, rows: &[Vec<Elem>], budget: u64, st: &mut Enumeration) -> bool {
    let k = rows.len();
    let r = rows.first().map_or(0, |v| v.len());
    let p = f.p() as usize;
    let ext = f.k() as usize;
    let basis: Vec<Elem> = (0..ext).map(|j| (p as Elem).pow(j as u32)).collect();
    // supports[i * ext + j]: nonzero entries of basis[j] * row_i
    let supports: Vec<Vec<(usize, Elem)>> = rows
        .iter()
        .flat_map(|row| {
            basis.iter().map(move |&b| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(c, &e)| (c, f.mul(e, b)))
                    .collect()
            })
        })
        .collect();
    let mut redundancy = vec![0 as Elem; r];
    let mut message = vec![0 as Elem; k];
    let mut counter = vec![0usize; k * ext];
    for lead in 0..k {
        redundancy.copy_from_slice(&rows[lead]);
        let mut red_weight = rows[lead].iter().filter(|&&e| e != 0).count();
        let mut msg_weight = 1usize;
        let digits = (k - lead - 1) * ext;
        message.iter_mut().for_each(|m| *m = 0);
        counter[..digits].iter_mut().for_each(|c| *c = 0);
        loop {
            if st.visited >= budget {
                return false;
            }
            st.visited += 1;
            if st.record(msg_weight + red_weight) {
                return true;
            }
            let mut t = 0;
            while t < digits && counter[t] == p - 1 {
                counter[t] = 0;
                t += 1;
            }
            if t == digits {
                break;
            }
            counter[t] += 1;
            let pos = lead + 1 + t / ext;
            let j = t % ext;
            let old = message[pos];
            let new = f.add(old, basis[j]);
            message[pos] = new;
            msg_weight = msg_weight + (new != 0) as usize - (old != 0) as usize;
            for &(c, e) in &supports[pos * ext + j] {
                let before = redundancy[c];
                let after = f.add(before, e);
                redundancy[c] = after;
                red_weight = red_weight + (after != 0) as usize - (before != 0) as usize;
            }
        }
    }
    true
}

fn enumerate_binary(rows: &[Vec<Elem>], budget: u64, st: &mut Enumeration) -> bool {
    let k = rows.len();
    let packed: Vec<u128> = rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(0u128, |acc, (c, &e)| acc | ((e as u128 & 1) << c))
        })
        .collect();
    for lead in 0..k {
        let tail = k - lead - 1;
        let mut red = packed[lead];
        let mut msg_weight = 1u32;
        let mut gray: u64 = 0;
        if tail >= 63 {
            return false;
        }
        let total: u64 = 1u64 << tail;
        for step in 0..total {
            if st.visited >= budget {
                return false;
            }
            st.visited += 1;
            if st.record((msg_weight + red.count_ones()) as usize) {
                return true;
            }
            if step + 1 == total {
                break;
            }
            let t = (step + 1).trailing_zeros() as usize;
            let bit = 1u64 << t;
            if gray & bit == 0 {
                msg_weight += 1;
            } else {
                msg_weight -= 1;
            }
            gray ^= bit;
            red ^= packed[lead + 1 + t];
        }
    }
    true
}

/// Reference implementation: every nonzero message, full matrix-vector
/// product. Exponential in `k`; intended for cross-checking small codes.
pub fn naive_min_distance(code: &LinearCode) -> Result<usize> {
    let k = code.k();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let f = code.field();
    let q = f.q() as u64;
    let n = code.n();
    let g = code.generator();
    let total = q.pow(k as u32);
    let mut best = usize::MAX;
    for idx in 1..total {
        let mut msg = Vec::with_capacity(k);
        let mut t = idx;
        for _ in 0..k {
            msg.push((t % q) as Elem);
            t /= q;
        }
        let w = (0..n)
            .filter(|&c| {
                let v = (0..k).fold(0, |acc, i| f.add(acc, f.mul(msg[i], g.get(i, c))));
                v != 0
            })
            .count();
        best = best.min(w);
    }
    Ok(best)
}
