//! Labels of the simple modules of the G(r,p,n) algebra at a root of unity.
//!
//! The labels are pairs `(lambda, i)` with `lambda` a canonical orbit
//! representative whose blocks are all FLOTW, and `0 <= i < p / o_lambda`.
//! Output is sorted by a-value, then by `lambda`, then by `i`; each label
//! heads a unitriangular column of the decomposition matrix with all other
//! entries at strictly smaller a-value. Decomposition numbers themselves are
//! not computed.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::afunction::{a_value_r, AValue};
use crate::clifford::{orbits, varpi, OrbitDatum};
use crate::combinatorics::Multipartition;
use crate::flotw::enumerate_lambda1;
use crate::kleshchev::{enumerate_lambda0, SignatureOrder};
use crate::parameters::ParameterSpec;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleLabel {
    pub lambda: Multipartition,
    pub o_lambda: usize,
    #[serde(rename = "i")]
    pub eigen_index: usize,
    pub a_value: AValue,
}

/// The FLOTW orbits of size `n`, checking that no orbit leaves the FLOTW set.
fn lambda1_orbits(
    n: usize,
    spec: &ParameterSpec,
) -> Result<(Vec<Multipartition>, Vec<OrbitDatum>)> {
    let action = varpi(spec)?;
    let lambda1 = enumerate_lambda1(n, spec);
    let members: BTreeSet<&Multipartition> = lambda1.iter().collect();
    let data = orbits(&lambda1, &action);
    for datum in &data {
        if let Some(outside) = datum.orbit.iter().find(|l| !members.contains(l)) {
            return Err(Error::Inconsistent(format!(
                "the orbit of {} leaves the FLOTW set at {outside}",
                datum.representative
            )));
        }
    }
    Ok((lambda1, data))
}

fn labels_of(data: &[OrbitDatum], spec: &ParameterSpec) -> Result<Vec<SimpleLabel>> {
    let mut labels = Vec::new();
    for datum in data {
        let a_value = a_value_r(&datum.representative, spec)?;
        for eigen_index in 0..datum.eigen_count(spec.p()) {
            labels.push(SimpleLabel {
                lambda: datum.representative.clone(),
                o_lambda: datum.o_lambda,
                eigen_index,
                a_value,
            });
        }
    }
    labels.sort_by(|x, y| {
        (x.a_value, &x.lambda, x.eigen_index).cmp(&(y.a_value, &y.lambda, y.eigen_index))
    });
    Ok(labels)
}

/// The simple-module labels for size `n`.
pub fn classify(n: usize, spec: &ParameterSpec) -> Result<Vec<SimpleLabel>> {
    let (_, data) = lambda1_orbits(n, spec)?;
    labels_of(&data, spec)
}

/// Cardinalities tying the Kleshchev and FLOTW labelings to the final labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub lambda0: usize,
    pub lambda1: usize,
    pub orbits: usize,
    /// Sum over FLOTW orbits of `p / o_lambda`.
    pub total: usize,
    pub labels: usize,
    pub violations: Vec<String>,
}

impl CountReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn count_check(n: usize, spec: &ParameterSpec, order: SignatureOrder) -> Result<CountReport> {
    let (lambda1, data) = lambda1_orbits(n, spec)?;
    let lambda0 = enumerate_lambda0(n, spec, order).len();
    let total = data.iter().map(|d| d.eigen_count(spec.p())).sum();
    let labels = labels_of(&data, spec)?.len();
    let mut violations = Vec::new();
    if lambda0 != lambda1.len() {
        violations.push(format!(
            "|Kleshchev tuples| = {lambda0} but |FLOTW tuples| = {} at n = {n}",
            lambda1.len()
        ));
    }
    if labels != total {
        violations.push(format!(
            "{labels} labels but the orbit sum is {total} at n = {n}"
        ));
    }
    Ok(CountReport {
        n,
        lambda0,
        lambda1: lambda1.len(),
        orbits: data.len(),
        total,
        labels,
        violations,
    })
}

pub const TRIANGULARITY_STATEMENT: &str = "the decomposition column of this label has entry 1 on \
the label itself and all other nonzero entries at labels of strictly smaller a-value";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangularityRecord {
    pub a_value: AValue,
    pub statement_id: &'static str,
    pub statement: &'static str,
}

pub fn triangularity_metadata(label: &SimpleLabel) -> TriangularityRecord {
    TriangularityRecord {
        a_value: label.a_value,
        statement_id: "unitriangular-column",
        statement: TRIANGULARITY_STATEMENT,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Checks {
    pub lambda0: usize,
    pub lambda1: usize,
    pub orbits: usize,
    pub total: usize,
}

/// The machine-readable result of a classification run.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub spec: ParameterSpec,
    pub n: usize,
    pub labels: Vec<SimpleLabel>,
    pub checks: Checks,
}

impl ClassifyReport {
    pub fn build(n: usize, spec: &ParameterSpec, order: SignatureOrder) -> Result<Self> {
        let counts = count_check(n, spec, order)?;
        Ok(ClassifyReport {
            spec: spec.clone(),
            n,
            labels: classify(n, spec)?,
            checks: Checks {
                lambda0: counts.lambda0,
                lambda1: counts.lambda1,
                orbits: counts.orbits,
                total: counts.total,
            },
        })
    }
}
