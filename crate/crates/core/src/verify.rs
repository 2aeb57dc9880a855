//! Cross-module identities checked over a matrix of parameter specs and a
//! range of sizes. Each identity reports the first counterexample found,
//! scanning specs in order, sizes ascending and multipartitions in canonical
//! order.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::afunction::a_value_r;
use crate::classify::count_check;
use crate::clifford::{orbit, semisimple_labels, tableau_orbits, varpi};
use crate::combinatorics::{enumerate_multipartitions, factorial, syt_count, DEFAULT_TABLEAU_CAP};
use crate::flotw::{enumerate_flotw, enumerate_lambda1, in_lambda1};
use crate::kleshchev::{kleshchev_layers, SignatureOrder};
use crate::parameters::{morita_split, q_exponents, ParameterSpec};
use crate::{Error, Result};

/// The parameter specs exercised by default.
pub fn default_matrix() -> Vec<ParameterSpec> {
    [
        (4, 2, &[0][..]),
        (2, 2, &[0]),
        (3, 3, &[0]),
        (4, 2, &[0, 1]),
        (2, 4, &[0]),
    ]
    .into_iter()
    .map(|(e, p, v)| ParameterSpec::new(e, p, v.len(), v).expect("default specs are valid"))
    .collect()
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub specs: Vec<ParameterSpec>,
    pub n_min: usize,
    pub n_max: usize,
    pub cap: usize,
    pub order: SignatureOrder,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            specs: default_matrix(),
            n_min: 0,
            n_max: 4,
            cap: DEFAULT_TABLEAU_CAP,
            order: SignatureOrder::Ascending,
        }
    }
}

impl VerifyConfig {
    fn sizes(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for IdentityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "FAIL {} ({} cases): {c}", self.name, self.cases),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }
}

/// Counts cases and keeps the first failure.
struct Tally {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn done(self) -> IdentityOutcome {
        IdentityOutcome {
            name: self.name,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn pow(base: usize, exp: usize) -> u128 {
    (base as u128).pow(exp as u32)
}

fn sum_of_squares(cfg: &VerifyConfig) -> IdentityOutcome {
    let mut t = Tally::new("sum-of-squares");
    let levels: BTreeSet<usize> = cfg.specs.iter().map(ParameterSpec::r).collect();
    for &r in &levels {
        for n in cfg.sizes() {
            let total: u128 = enumerate_multipartitions(n, r)
                .iter()
                .map(|l| syt_count(l).pow(2))
                .sum();
            let expected = pow(r, n) * factorial(n);
            t.check(total == expected, || {
                format!("r={r} n={n}: {total} != {expected}")
            });
        }
    }
    t.done()
}

fn semisimple_dimensions(cfg: &VerifyConfig) -> Result<IdentityOutcome> {
    let mut t = Tally::new("semisimple-dimensions");
    for spec in &cfg.specs {
        for n in cfg.sizes() {
            let labels = semisimple_labels(n, spec)?;
            let total: u128 = labels.iter().map(|l| l.dimension.pow(2)).sum();
            if n == 0 {
                t.check(labels.len() == 1 && total == 1, || {
                    format!("{spec} n=0: {} labels, sum {total}", labels.len())
                });
            } else {
                let full = pow(spec.r(), n) * factorial(n);
                let p = spec.p() as u128;
                t.check(full.is_multiple_of(p) && total == full / p, || {
                    format!("{spec} n={n}: sum of squares {total} != {full}/{p}")
                });
            }
        }
    }
    Ok(t.done())
}

fn count_bijection(cfg: &VerifyConfig) -> Result<IdentityOutcome> {
    let mut t = Tally::new("count-bijection");
    for spec in &cfg.specs {
        let layers = kleshchev_layers(cfg.n_max, spec, cfg.order);
        for n in cfg.sizes() {
            let (k, f) = (layers[n].len(), enumerate_flotw(n, spec).len());
            t.check(k == f, || {
                format!("{spec} n'={n}: {k} Kleshchev vs {f} FLOTW blocks")
            });
            let report = count_check(n, spec, cfg.order)?;
            t.check(report.lambda0 == report.lambda1, || {
                format!(
                    "{spec} n={n}: {} Kleshchev tuples vs {} FLOTW tuples",
                    report.lambda0, report.lambda1
                )
            });
        }
    }
    Ok(t.done())
}

fn varpi_stability(cfg: &VerifyConfig) -> Result<IdentityOutcome> {
    let mut t = Tally::new("varpi-stability");
    for spec in &cfg.specs {
        let action = varpi(spec)?;
        for n in cfg.sizes() {
            for lambda in enumerate_lambda1(n, spec) {
                let image = action.apply(&lambda);
                t.check(in_lambda1(&image, spec)?, || {
                    format!("{spec}: {lambda} -> {image}")
                });
            }
        }
    }
    Ok(t.done())
}

fn a_invariance(cfg: &VerifyConfig) -> Result<IdentityOutcome> {
    let mut t = Tally::new("a-invariance");
    for spec in &cfg.specs {
        let action = varpi(spec)?;
        for n in cfg.sizes() {
            for lambda in enumerate_multipartitions(n, spec.r()) {
                let image = action.apply(&lambda);
                let (a, b) = (a_value_r(&lambda, spec)?, a_value_r(&image, spec)?);
                t.check(a == b, || {
                    format!("{spec}: a({lambda}) = {a} but a({image}) = {b}")
                });
            }
        }
    }
    Ok(t.done())
}

fn tableau_orbit_sizes(cfg: &VerifyConfig) -> Result<IdentityOutcome> {
    let mut t = Tally::new("tableau-orbits");
    for spec in &cfg.specs {
        let action = varpi(spec)?;
        let p = spec.p() as usize;
        for n in cfg.sizes().filter(|&n| n >= 1) {
            for lambda in enumerate_multipartitions(n, spec.r()) {
                let o = orbit(&lambda, &action).o_lambda;
                let parts = tableau_orbits(&lambda, &action, cfg.cap)?;
                let count: usize = parts.iter().map(Vec::len).sum();
                let ok = p.is_multiple_of(o)
                    && parts.iter().all(|c| c.len() == p / o)
                    && count as u128 == syt_count(&lambda);
                t.check(ok, || {
                    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
                    format!("{spec}: {lambda} has o={o}, tableau orbit sizes {sizes:?}")
                });
            }
        }
    }
    Ok(t.done())
}

fn morita(cfg: &VerifyConfig) -> IdentityOutcome {
    let mut t = Tally::new("morita-split");
    for spec in &cfg.specs {
        let q = q_exponents(spec);
        let classes = morita_split(&q, spec.e());
        let width = spec.block_width();
        let eta_p = spec.eta_p();
        let shape_ok =
            classes.len() == spec.pprime() as usize && classes.iter().all(|c| c.len() == width);
        let translate_ok = shape_ok
            && classes.iter().enumerate().all(|(j, class)| {
                class
                    .iter()
                    .zip(&classes[0])
                    .all(|(&x, &y)| q[x] == q[y] * eta_p.pow(j as u64))
            });
        t.check(translate_ok, || format!("{spec}: classes {classes:?}"));
    }
    t.done()
}

fn classification_count(cfg: &VerifyConfig) -> Result<IdentityOutcome> {
    let mut t = Tally::new("classification-count");
    for spec in &cfg.specs {
        for n in cfg.sizes() {
            let report = count_check(n, spec, cfg.order)?;
            t.check(report.labels == report.total, || {
                format!(
                    "{spec} n={n}: {} labels vs orbit sum {}",
                    report.labels, report.total
                )
            });
        }
    }
    Ok(t.done())
}

/// Runs every identity. An empty size range passes vacuously.
pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.n_min <= cfg.n_max && cfg.n_max > cfg.cap {
        return Err(Error::CapExceeded {
            size: cfg.n_max,
            cap: cfg.cap,
        });
    }
    Ok(VerifyReport {
        outcomes: vec![
            sum_of_squares(cfg),
            semisimple_dimensions(cfg)?,
            count_bijection(cfg)?,
            varpi_stability(cfg)?,
            a_invariance(cfg)?,
            tableau_orbit_sizes(cfg)?,
            morita(cfg),
            classification_count(cfg)?,
        ],
    })
}
