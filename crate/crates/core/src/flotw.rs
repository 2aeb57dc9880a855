//! Residues and the FLOTW predicate on blocks of `f delta` components.
//!
//! With the extended charges `w_1 <= ... <= w_{f delta} <= e - 1`, the three
//! cylindric conditions say that each component dominates the next one
//! shifted by the charge gap, cyclically:
//!
//! ```text
//! lambda(c)_k >= lambda(c+1)_{k + w_{c+1} - w_c}         for c < f delta
//! lambda(f delta)_k >= lambda(1)_{k + w_1 + e - w_{f delta}}
//! ```
//!
//! Inside a group of `delta` components the gap is `v_{j+1} - v_j`; between
//! groups and around the cycle it is `v_1 + e' - v_delta`. The fourth
//! condition looks at row ends: for every column index `k`, the residues of
//! the nodes that end a row of length `k` must not cover all of `Z/e`.

use std::collections::BTreeSet;

use crate::combinatorics::{block_tuples, enumerate_multipartitions, Multipartition};
use crate::parameters::{charge_data, ChargeData, ParameterSpec};
use crate::Result;

/// A box of a multipartition: `row` and `col` are 1-based, as is `component`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub component: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, component: usize) -> Self {
        Node {
            row,
            col,
            component,
        }
    }
}

/// Residue exponent `i` of `eta_e^i`, reduced mod `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue(pub u32);

/// `(col - row + w_component) mod e`.
pub fn residue(node: Node, charges: &ChargeData, e: u32) -> Residue {
    let w = charges.w[node.component - 1];
    let x = node.col as i64 - node.row as i64 + w;
    Residue(x.rem_euclid(e as i64) as u32)
}

/// Charge gap from component `c` to the cyclically next one (0-based `c`).
fn gap(charges: &ChargeData, e: u32, c: usize) -> usize {
    let w = &charges.w;
    let next = (c + 1) % w.len();
    let g = if next == 0 {
        w[0] + e as i64 - w[c]
    } else {
        w[next] - w[c]
    };
    debug_assert!(g >= 0);
    g as usize
}

fn cylindric(lambda: &Multipartition, charges: &ChargeData, e: u32) -> bool {
    let level = lambda.level();
    (0..level).all(|c| {
        let here = lambda.component(c);
        let next = lambda.component((c + 1) % level);
        let shift = gap(charges, e, c);
        // beyond this bound both sides are zero
        let bound = here.height().max(next.height());
        (1..=bound).all(|k| here.part(k) >= next.part(k + shift))
    })
}

/// Residues (with multiplicity, sorted) of the nodes ending a row of length `k`.
pub fn row_end_residues(
    lambda: &Multipartition,
    k: u32,
    charges: &ChargeData,
    e: u32,
) -> Vec<Residue> {
    let mut out: Vec<Residue> = lambda
        .components()
        .iter()
        .enumerate()
        .flat_map(|(c, part)| {
            part.parts()
                .iter()
                .enumerate()
                .filter(move |(_, &len)| len == k)
                .map(move |(a, _)| residue(Node::new(a + 1, k as usize, c + 1), charges, e))
        })
        .collect();
    out.sort();
    out
}

fn residue_condition(lambda: &Multipartition, charges: &ChargeData, e: u32) -> bool {
    let lengths: BTreeSet<u32> = lambda
        .components()
        .iter()
        .flat_map(|p| p.parts().iter().copied())
        .collect();
    lengths.into_iter().all(|k| {
        let distinct: BTreeSet<Residue> = row_end_residues(lambda, k, charges, e)
            .into_iter()
            .collect();
        distinct.len() != e as usize
    })
}

/// Whether a block of `f delta` components is a FLOTW multipartition.
pub fn is_flotw(lambda: &Multipartition, spec: &ParameterSpec) -> Result<bool> {
    lambda.expect_level(spec.block_width())?;
    let charges = charge_data(spec);
    Ok(cylindric(lambda, &charges, spec.e()) && residue_condition(lambda, &charges, spec.e()))
}

/// FLOTW blocks of size `nprime`, in canonical order.
pub fn enumerate_flotw(nprime: usize, spec: &ParameterSpec) -> Vec<Multipartition> {
    let charges = charge_data(spec);
    enumerate_multipartitions(nprime, spec.block_width())
        .into_iter()
        .filter(|l| cylindric(l, &charges, spec.e()) && residue_condition(l, &charges, spec.e()))
        .collect()
}

/// `r`-partitions of `n` whose `p'` blocks are all FLOTW.
pub fn enumerate_lambda1(n: usize, spec: &ParameterSpec) -> Vec<Multipartition> {
    let by_size: Vec<Vec<Multipartition>> = (0..=n).map(|k| enumerate_flotw(k, spec)).collect();
    block_tuples(n, spec.pprime() as usize, &by_size)
}

/// Whether every block of an `r`-partition is FLOTW.
pub fn in_lambda1(lambda: &Multipartition, spec: &ParameterSpec) -> Result<bool> {
    lambda.expect_level(spec.r())?;
    for block in lambda.blocks(spec.block_width()) {
        if !is_flotw(&block, spec)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    fn spec(e: u32, p: u32, v: &[i64]) -> ParameterSpec {
        ParameterSpec::new(e, p, v.len(), v).unwrap()
    }

    /// The three cylindric conditions written out with `v`, `delta` and `e'`.
    fn cylindric_by_cases(l: &Multipartition, s: &ParameterSpec) -> bool {
        let (f, d, ep) = (s.f() as usize, s.delta(), s.eprime() as usize);
        let v: Vec<usize> = s.charges().iter().map(|&x| x as usize).collect();
        let at = |c: usize, k: usize| l.component(c - 1).part(k);
        let ks = 1..=l.size() + 1;
        let first = (1..=f).all(|i| {
            (1..d).all(|j| {
                ks.clone()
                    .all(|k| at((i - 1) * d + j, k) >= at((i - 1) * d + j + 1, k + v[j] - v[j - 1]))
            })
        });
        let wrap = v[0] + ep - v[d - 1];
        let second = (1..f).all(|i| ks.clone().all(|k| at(i * d, k) >= at(i * d + 1, k + wrap)));
        let third = ks.clone().all(|k| at(f * d, k) >= at(1, k + wrap));
        first && second && third
    }

    #[test]
    fn residues() {
        let c = ChargeData {
            w: vec![0],
            m: vec![],
        };
        assert_eq!(residue(Node::new(1, 1, 1), &c, 4), Residue(0));
        assert_eq!(residue(Node::new(1, 2, 1), &c, 4), Residue(1));
        assert_eq!(residue(Node::new(3, 1, 1), &c, 4), Residue(2));
        let c = charge_data(&spec(4, 2, &[0]));
        assert_eq!(residue(Node::new(1, 1, 2), &c, 4), Residue(2));
    }

    #[test]
    fn predicate_examples() {
        let s = spec(4, 2, &[0]);
        assert!(is_flotw(&Multipartition::empty(2), &s).unwrap());
        assert!(is_flotw(&mp(&[&[1], &[]]), &s).unwrap());
        assert!(is_flotw(&mp(&[&[], &[1]]), &s).unwrap());
        let s = spec(2, 1, &[0, 0]);
        assert!(!is_flotw(&mp(&[&[], &[1]]), &s).unwrap());
        assert!(is_flotw(&mp(&[&[1], &[]]), &s).unwrap());
        assert_eq!(
            is_flotw(&Multipartition::empty(3), &s),
            Err(Error::ComponentCount {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn residue_condition_level_one() {
        // level one: no part may repeat e times
        let s = spec(2, 1, &[0]);
        assert!(!is_flotw(&mp(&[&[1, 1]]), &s).unwrap());
        assert!(is_flotw(&mp(&[&[2]]), &s).unwrap());
        assert!(is_flotw(&mp(&[&[2, 1]]), &s).unwrap());
        assert!(!is_flotw(&mp(&[&[3, 1, 1]]), &s).unwrap());
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_flotw(n, &s).len()).collect();
        // partitions into distinct parts
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn uniform_gaps_match_the_written_conditions() {
        for s in [
            spec(4, 2, &[0]),
            spec(6, 2, &[0, 1]),
            spec(6, 3, &[0, 1]),
            spec(5, 1, &[0, 2, 2]),
            spec(2, 4, &[0]),
        ] {
            let charges = charge_data(&s);
            for n in 0..=4 {
                for l in enumerate_multipartitions(n, s.block_width()) {
                    assert_eq!(
                        cylindric(&l, &charges, s.e()),
                        cylindric_by_cases(&l, &s),
                        "{l} under {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let s = spec(4, 2, &[0]);
        assert_eq!(enumerate_flotw(0, &s), vec![Multipartition::empty(2)]);
        assert_eq!(
            enumerate_flotw(1, &s),
            vec![mp(&[&[1], &[]]), mp(&[&[], &[1]])]
        );
        assert_eq!(enumerate_lambda1(1, &s), enumerate_flotw(1, &s));
        let s = spec(2, 4, &[0]);
        assert_eq!(enumerate_lambda1(0, &s), vec![Multipartition::empty(4)]);
        assert_eq!(
            enumerate_lambda1(1, &s).len(),
            2 * enumerate_flotw(1, &s).len()
        );
    }

    #[test]
    fn removing_rows_stays_total() {
        let s = spec(4, 2, &[0, 1]);
        for n in 0..=5 {
            for l in enumerate_flotw(n, &s) {
                for c in 0..l.level() {
                    let smaller = l.with_component(c, l.component(c).without_last_row());
                    assert!(is_flotw(&smaller, &s).is_ok());
                }
            }
        }
    }
}
