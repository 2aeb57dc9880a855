//! The cyclic action on components induced by multiplying the parameters by
//! `eta_p`, its orbits on multipartitions and tableaux, and the semisimple
//! label tables.
//!
//! Each orbit of `r`-partitions is represented by its canonical minimum. A
//! representative `lambda` with stabilizer index `o_lambda` contributes
//! `p / o_lambda` labels, one per eigenvalue `eta_p^{o_lambda i}` of the
//! induced map on its Specht module, each of dimension
//! `syt(lambda) o_lambda / p`. The empty multipartition contributes one label
//! of dimension 1.

use serde::Serialize;

use crate::afunction::{a_value_r, AValue};
use crate::combinatorics::{
    enumerate_multipartitions, enumerate_standard_tableaux, syt_count, Multipartition,
    StandardTableau,
};
use crate::parameters::{q_exponents, ParameterSpec};
use crate::{Error, Result};

/// A permutation of the `r` component positions; `perm[i]` is the image of
/// position `i` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarpiAction {
    perm: Vec<usize>,
}

impl VarpiAction {
    /// Wraps an arbitrary permutation.
    pub fn from_permutation(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &x in &perm {
            if x >= perm.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Inconsistent(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        Ok(VarpiAction { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Image of the 1-based position `i`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i - 1] + 1
    }

    pub fn power(&self, k: usize) -> VarpiAction {
        let mut perm: Vec<usize> = (0..self.perm.len()).collect();
        for _ in 0..k {
            perm = perm.iter().map(|&x| self.perm[x]).collect();
        }
        VarpiAction { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths, one entry per cycle.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for start in 0..self.perm.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.perm[x];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out
    }

    /// Component `perm[i]` of the result is component `i` of `lambda`.
    pub fn apply(&self, lambda: &Multipartition) -> Multipartition {
        let mut out = lambda.components().to_vec();
        for (i, part) in lambda.components().iter().enumerate() {
            out[self.perm[i]] = part.clone();
        }
        Multipartition::new(out)
    }

    pub fn apply_tableau(&self, t: &StandardTableau) -> StandardTableau {
        t.permute_components(&self.perm)
    }
}

/// The permutation `varpi` of the spec's component positions.
///
/// Built blockwise (shift by one block of `f delta`, except the last block,
/// which returns to the first rotated by `delta`) and checked against
/// `Q_{varpi(i)} = eta_p Q_i`.
pub fn varpi(spec: &ParameterSpec) -> Result<VarpiAction> {
    let r = spec.r();
    let width = spec.block_width();
    let delta = spec.delta();
    let perm: Vec<usize> = (1..=r)
        .map(|i| {
            if i <= r - width {
                i + width
            } else if i <= r - delta {
                i + (spec.f() as usize + 1) * delta - r
            } else {
                i + delta - r
            }
        })
        .map(|i| i - 1)
        .collect();
    let action = VarpiAction::from_permutation(perm)?;

    let q = q_exponents(spec);
    let eta_p = spec.eta_p();
    if let Some(i) = (0..r).find(|&i| q[action.perm[i]] != q[i] * eta_p) {
        return Err(Error::Inconsistent(format!(
            "Q_varpi({}) != eta_p Q_{}",
            i + 1,
            i + 1
        )));
    }
    let p = spec.p() as usize;
    if !action.power(p).is_identity() || action.cycle_type().iter().any(|&c| c != p) {
        return Err(Error::Inconsistent(format!(
            "varpi has cycle type {:?}, expected {} cycles of length {p}",
            action.cycle_type(),
            spec.d()
        )));
    }
    Ok(action)
}

/// `varpi(lambda)`.
pub fn apply_varpi(lambda: &Multipartition, action: &VarpiAction) -> Multipartition {
    action.apply(lambda)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    /// Canonical minimum of the orbit.
    pub representative: Multipartition,
    /// Smallest `k > 0` with `varpi^k(lambda) = lambda`.
    pub o_lambda: usize,
    /// `lambda, varpi(lambda), ..., varpi^{o-1}(lambda)`.
    pub orbit: Vec<Multipartition>,
}

impl OrbitDatum {
    /// How many labels the orbit splits into: `p / o_lambda`, or 1 for the
    /// empty multipartition.
    pub fn eigen_count(&self, p: u32) -> usize {
        if self.representative.size() == 0 {
            1
        } else {
            p as usize / self.o_lambda
        }
    }
}

pub fn orbit(lambda: &Multipartition, action: &VarpiAction) -> OrbitDatum {
    let mut orbit = vec![lambda.clone()];
    loop {
        let next = action.apply(orbit.last().expect("orbit starts non-empty"));
        if &next == lambda {
            break;
        }
        orbit.push(next);
    }
    let representative = orbit.iter().min().expect("orbit is non-empty").clone();
    OrbitDatum {
        representative,
        o_lambda: orbit.len(),
        orbit,
    }
}

/// The distinct orbits meeting `items`, ordered by representative.
pub fn orbits(items: &[Multipartition], action: &VarpiAction) -> Vec<OrbitDatum> {
    let mut out: Vec<OrbitDatum> = items
        .iter()
        .map(|l| orbit(l, action))
        .filter(|o| o.representative == o.orbit[0])
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimpleLabel {
    pub representative: Multipartition,
    pub o_lambda: usize,
    pub eigen_index: usize,
    pub dimension: u128,
    pub a_value: AValue,
}

/// One label per orbit representative and eigen-index, sorted by a-value,
/// then representative, then index.
pub fn semisimple_labels(n: usize, spec: &ParameterSpec) -> Result<Vec<SemisimpleLabel>> {
    let action = varpi(spec)?;
    let p = spec.p();
    let all = enumerate_multipartitions(n, spec.r());
    let mut labels = Vec::new();
    for datum in orbits(&all, &action) {
        let lambda = &datum.representative;
        let dimension = if n == 0 {
            1
        } else {
            syt_count(lambda) * datum.o_lambda as u128 / p as u128
        };
        let a_value = a_value_r(lambda, spec)?;
        for eigen_index in 0..datum.eigen_count(p) {
            labels.push(SemisimpleLabel {
                representative: lambda.clone(),
                o_lambda: datum.o_lambda,
                eigen_index,
                dimension,
                a_value,
            });
        }
    }
    labels.sort_by(|x, y| {
        (x.a_value, &x.representative, x.eigen_index).cmp(&(
            y.a_value,
            &y.representative,
            y.eigen_index,
        ))
    });
    Ok(labels)
}

/// Standard `lambda`-tableaux split into orbits of `varpi^{o_lambda}`.
///
/// For `|lambda| >= 1` the action is free, so every orbit has `p / o_lambda`
/// elements. The empty shape yields its single empty tableau.
pub fn tableau_orbits(
    lambda: &Multipartition,
    action: &VarpiAction,
    cap: usize,
) -> Result<Vec<Vec<StandardTableau>>> {
    let tableaux = enumerate_standard_tableaux(lambda, cap)?;
    let step = action.power(orbit(lambda, action).o_lambda);
    let mut remaining: std::collections::BTreeSet<StandardTableau> = tableaux.into_iter().collect();
    let mut out = Vec::new();
    while let Some(start) = remaining.pop_first() {
        let mut cycle = vec![start.clone()];
        let mut t = step.apply_tableau(&start);
        while t != start {
            remaining.remove(&t);
            cycle.push(t.clone());
            t = step.apply_tableau(&t);
        }
        out.push(cycle);
    }
    Ok(out)
}
