//! The exact rational a-function on multipartitions.
//!
//! All values are normalized with the additive constant `g(n)` set to zero.
//! Every use of a-values (sorting, equality along orbits, minima at fixed
//! `n`) is unchanged by an additive constant that depends only on the
//! parameters and `n`.
//!
//! Two readings are fixed here: components are indexed `1..=f delta` and the
//! pair sum runs over `i <= j`; the inner range `1 <= k <= a` of the charge
//! sum is taken over the integers `k` in `[1, floor(a)]`.
//!
//! The shifts `m^(j)` are computed from their definition
//! `w_j - j e / (f delta) + e`, which reduces to `v_k - k e' / delta + e` for
//! `j = (s-1) delta + k`. In particular they depend only on `k`.

use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::combinatorics::Multipartition;
use crate::parameters::{charge_data, ChargeData, ParameterSpec};
use crate::Result;

/// Strictly decreasing shifted part sequence `mu_s - s + n + m` for `s = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet(Vec<Rational64>);

impl BetaSet {
    pub fn entries(&self) -> &[Rational64] {
        &self.0
    }
}

/// An exact a-value; serialized as a `"num/den"` string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AValue(pub Rational64);

impl AValue {
    pub fn value(&self) -> Rational64 {
        self.0
    }
}

impl fmt::Display for AValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for AValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One beta-set of length `n` per component of `mu`.
pub fn beta_sets(mu: &Multipartition, n: usize, charges: &ChargeData) -> Result<Vec<BetaSet>> {
    mu.expect_level(charges.m.len())?;
    let n = n as i64;
    Ok(mu
        .components()
        .iter()
        .zip(&charges.m)
        .map(|(part, &m)| {
            BetaSet(
                (1..=n)
                    .map(|s| Rational64::from_integer(part.part(s as usize) as i64 - s + n) + m)
                    .collect(),
            )
        })
        .collect())
}

/// `sum_{k=1}^{floor(a)} min(k, m)`.
fn capped_triangle(a: Rational64, m: Rational64) -> Rational64 {
    let top = a.floor().to_integer();
    if top <= 0 {
        return Rational64::zero();
    }
    // k <= m exactly when k <= floor(m)
    let ramp = top.min(m.floor().to_integer()).max(0);
    Rational64::from_integer(ramp * (ramp + 1) / 2) + m * (top - ramp)
}

/// The a-value of a single block of `f delta` components, with beta-sets of
/// length `n`.
pub fn a_value_component(mu: &Multipartition, n: usize, charges: &ChargeData) -> Result<AValue> {
    let betas = beta_sets(mu, n, charges)?;
    let mut pairs = Rational64::zero();
    for (i, bi) in betas.iter().enumerate() {
        // within one beta-set the entries are strictly decreasing, so each
        // unordered pair appears once with min = the later entry
        for (s, _) in bi.0.iter().enumerate() {
            for b in &bi.0[s + 1..] {
                pairs += *b;
            }
        }
        for bj in &betas[i + 1..] {
            for a in &bi.0 {
                for b in &bj.0 {
                    pairs += *a.min(b);
                }
            }
        }
    }
    let mut charged = Rational64::zero();
    for b in &betas {
        for &a in &b.0 {
            for &m in &charges.m {
                charged += capped_triangle(a, m);
            }
        }
    }
    Ok(AValue(pairs - charged))
}

/// The a-value of an `r`-partition: the sum over its `p'` blocks, each block
/// evaluated with beta-sets of length `|lambda|`.
pub fn a_value_r(lambda: &Multipartition, spec: &ParameterSpec) -> Result<AValue> {
    lambda.expect_level(spec.r())?;
    let charges = charge_data(spec);
    let n = lambda.size();
    lambda
        .blocks(spec.block_width())
        .iter()
        .try_fold(AValue::default(), |acc, block| {
            Ok(AValue(acc.0 + a_value_component(block, n, &charges)?.0))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_multipartitions;
    use crate::Error;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::from_parts(parts).unwrap()
    }

    fn int(x: i64) -> Rational64 {
        Rational64::from_integer(x)
    }

    fn single(m: i64) -> ChargeData {
        ChargeData {
            w: vec![0],
            m: vec![int(m)],
        }
    }

    #[test]
    fn beta_set_examples() {
        let b = beta_sets(&Multipartition::empty(1), 0, &single(0)).unwrap();
        assert_eq!(b, vec![BetaSet(vec![])]);
        let b = beta_sets(&mp(&[&[1]]), 1, &single(0)).unwrap();
        assert_eq!(b, vec![BetaSet(vec![int(1)])]);
        let spec = ParameterSpec::new(4, 2, 1, &[0]).unwrap();
        let b = beta_sets(&Multipartition::empty(2), 2, &charge_data(&spec)).unwrap();
        assert_eq!(b, vec![BetaSet(vec![int(3), int(2)]); 2]);
    }

    #[test]
    fn beta_sets_strictly_decrease() {
        let spec = ParameterSpec::new(6, 2, 2, &[0, 1]).unwrap();
        let charges = charge_data(&spec);
        for mu in enumerate_multipartitions(4, 4) {
            for set in beta_sets(&mu, 5, &charges).unwrap() {
                assert!(set.entries().windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn component_count_is_checked() {
        assert_eq!(
            beta_sets(&Multipartition::empty(2), 0, &single(0)),
            Err(Error::ComponentCount {
                expected: 1,
                got: 2
            })
        );
        let spec = ParameterSpec::new(4, 2, 1, &[0]).unwrap();
        assert!(a_value_r(&Multipartition::empty(3), &spec).is_err());
    }

    #[test]
    fn hand_evaluations() {
        let a = a_value_component(&Multipartition::empty(1), 0, &single(0)).unwrap();
        assert_eq!(a, AValue(int(0)));
        let a = a_value_component(&mp(&[&[1]]), 1, &single(0)).unwrap();
        assert_eq!(a, AValue(int(0)));
    }

    #[test]
    fn capped_triangle_matches_direct_sum() {
        let ms = [int(0), int(2), Rational64::new(9, 2), Rational64::new(7, 3)];
        for num in 0..40 {
            let a = Rational64::new(num, 3);
            for &m in &ms {
                let direct: Rational64 = (1..=a.floor().to_integer()).map(|k| int(k).min(m)).sum();
                assert_eq!(capped_triangle(a, m), direct, "a={a} m={m}");
            }
        }
    }

    #[test]
    fn display_and_json() {
        let a = AValue(Rational64::new(-7, 2));
        assert_eq!(a.to_string(), "-7/2");
        assert_eq!(serde_json::to_string(&a).unwrap(), "\"-7/2\"");
        assert_eq!(AValue(int(3)).to_string(), "3/1");
    }

    #[test]
    fn single_block_collapses() {
        let spec = ParameterSpec::new(4, 2, 1, &[0]).unwrap();
        let charges = charge_data(&spec);
        for lambda in enumerate_multipartitions(3, 2) {
            assert_eq!(
                a_value_r(&lambda, &spec).unwrap(),
                a_value_component(&lambda, 3, &charges).unwrap()
            );
        }
        assert_eq!(
            a_value_r(&Multipartition::empty(2), &spec).unwrap(),
            AValue(int(0))
        );
    }
}
