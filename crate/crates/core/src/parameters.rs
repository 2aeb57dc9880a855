//! Parameter bookkeeping: `(e, p, delta, charges)` and the derived constants.
//!
//! Every root of unity is an exponent modulo `L = lcm(e, p)`; no floating
//! point is involved. With `eta_k = exp(2 i pi / k)` we have
//! `eta_e = eta_L^{p'}` and `eta_p = eta_L^{e'}`.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Validated parameters together with all derived constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterSpec {
    e: u32,
    p: u32,
    charges: Vec<u32>,
    f: u32,
    eprime: u32,
    pprime: u32,
}

impl ParameterSpec {
    /// `e`: order of the root of unity; `p`: the G(r,p,n) parameter;
    /// `delta` charges `0 <= v_1 <= ... <= v_delta <= e' - 1`.
    pub fn new(e: u32, p: u32, delta: usize, charges: &[i64]) -> Result<Self> {
        if e <= 1 {
            return Err(Error::InvalidOrder(e));
        }
        if p == 0 {
            return Err(Error::NonPositive {
                name: "p",
                value: p,
            });
        }
        if delta == 0 {
            return Err(Error::NonPositive {
                name: "delta",
                value: 0,
            });
        }
        if charges.len() != delta {
            return Err(Error::ChargeCount {
                expected: delta,
                got: charges.len(),
            });
        }
        let f = e.gcd(&p);
        let eprime = e / f;
        let pprime = p / f;
        let in_range = charges.iter().all(|&v| (0..eprime as i64).contains(&v));
        let sorted = charges.windows(2).all(|w| w[0] <= w[1]);
        if !in_range || !sorted {
            return Err(Error::InvalidCharge {
                charges: charges.to_vec(),
                max: eprime - 1,
            });
        }
        Ok(ParameterSpec {
            e,
            p,
            charges: charges.iter().map(|&v| v as u32).collect(),
            f,
            eprime,
            pprime,
        })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn delta(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[u32] {
        &self.charges
    }

    /// `gcd(e, p)`.
    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn eprime(&self) -> u32 {
        self.eprime
    }

    pub fn pprime(&self) -> u32 {
        self.pprime
    }

    /// Number of components of the labels: `delta * f * p'`.
    pub fn r(&self) -> usize {
        self.block_width() * self.pprime as usize
    }

    /// Components per block: `f * delta`.
    pub fn block_width(&self) -> usize {
        self.f as usize * self.delta()
    }

    /// `r / p`.
    pub fn d(&self) -> usize {
        self.r() / self.p as usize
    }

    /// `lcm(e, p) = e * p'`, the modulus of every root-of-unity exponent.
    pub fn lcm(&self) -> u64 {
        self.e as u64 * self.pprime as u64
    }

    /// `eta_e` as a root of unity of order dividing `L`.
    pub fn eta_e(&self) -> RootOfUnity {
        RootOfUnity::new(self.pprime as i64, self.lcm())
    }

    /// `eta_p` as a root of unity of order dividing `L`.
    pub fn eta_p(&self) -> RootOfUnity {
        RootOfUnity::new(self.eprime as i64, self.lcm())
    }
}

impl fmt::Display for ParameterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.charges.iter().map(u32::to_string).collect();
        write!(
            f,
            "(e={}, p={}, delta={}, v=({}))",
            self.e,
            self.p,
            self.delta(),
            v.join(",")
        )
    }
}

#[derive(Serialize)]
struct Derived {
    f: u32,
    eprime: u32,
    pprime: u32,
    r: usize,
    #[serde(rename = "L")]
    lcm: u64,
}

impl Serialize for ParameterSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ParameterSpec", 5)?;
        s.serialize_field("e", &self.e)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("delta", &self.delta())?;
        s.serialize_field("charges", &self.charges)?;
        s.serialize_field(
            "derived",
            &Derived {
                f: self.f,
                eprime: self.eprime,
                pprime: self.pprime,
                r: self.r(),
                lcm: self.lcm(),
            },
        )?;
        s.end()
    }
}

/// `exp(2 i pi * exponent / order)`, stored by its exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    exponent: u64,
    order: u64,
}

impl RootOfUnity {
    pub fn new(exponent: i64, order: u64) -> Self {
        assert!(order > 0, "root of unity of order zero");
        RootOfUnity {
            exponent: exponent.rem_euclid(order as i64) as u64,
            order,
        }
    }

    pub fn one(order: u64) -> Self {
        RootOfUnity { exponent: 0, order }
    }

    /// Exponent in `[0, order)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The modulus the exponent is reduced by.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn pow(&self, k: u64) -> Self {
        RootOfUnity {
            exponent: (self.exponent * (k % self.order)) % self.order,
            order: self.order,
        }
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        assert_eq!(
            self.order, rhs.order,
            "roots of unity with different moduli"
        );
        RootOfUnity {
            exponent: (self.exponent + rhs.exponent) % self.order,
            order: self.order,
        }
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta_{}^{}", self.order, self.exponent)
    }
}

/// The parameter sequence `Q = Q^1, ..., Q^{p'}` without the distinctness
/// check. Entry `(j-1) f delta + (s-1) delta + k` is
/// `eta_p^{(s-1) p' + j - 1} eta_e^{v_k}`.
pub fn q_exponents(spec: &ParameterSpec) -> Vec<RootOfUnity> {
    let eta_e = spec.eta_e();
    let eta_p = spec.eta_p();
    let (f, pprime) = (spec.f() as u64, spec.pprime() as u64);
    let mut q = Vec::with_capacity(spec.r());
    for j in 1..=pprime {
        for s in 1..=f {
            for &v in spec.charges() {
                q.push(eta_p.pow((s - 1) * pprime + j - 1) * eta_e.pow(v as u64));
            }
        }
    }
    q
}

/// The canonical parameter sequence `Q`; all entries must be distinct.
pub fn build_q(spec: &ParameterSpec) -> Result<Vec<RootOfUnity>> {
    let q = q_exponents(spec);
    for (i, a) in q.iter().enumerate() {
        if let Some(j) = q[i + 1..].iter().position(|b| b == a) {
            return Err(Error::DuplicateParameter {
                first: i + 1,
                second: i + j + 2,
                exponent: a.exponent(),
                modulus: a.order(),
            });
        }
    }
    Ok(q)
}

/// Splits the indices of `q` into the classes of the relation
/// "`Q_i / Q_j` is a power of `eta_e`".
///
/// Classes are listed by their smallest index, indices ascending inside.
pub fn morita_split(q: &[RootOfUnity], e: u32) -> Vec<Vec<usize>> {
    let Some(first) = q.first() else {
        return Vec::new();
    };
    let order = first.order();
    // eta_e^k lies in mu_order exactly when it lies in mu_gcd(e, order).
    let step = order / order.gcd(&(e as u64));
    let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
    for (i, x) in q.iter().enumerate() {
        assert_eq!(x.order(), order, "roots of unity with different moduli");
        let key = x.exponent() % step;
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(i),
            None => classes.push((key, vec![i])),
        }
    }
    classes.into_iter().map(|(_, members)| members).collect()
}

/// The extended charges `w_j` and the rational shifts `m^(j)` of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeData {
    pub w: Vec<i64>,
    pub m: Vec<Rational64>,
}

/// `w_{(s-1) delta + k} = v_k + (s-1) e'` and `m^(j) = w_j - j e / (f delta) + e`.
pub fn charge_data(spec: &ParameterSpec) -> ChargeData {
    let width = spec.block_width() as i64;
    let e = spec.e() as i64;
    let w: Vec<i64> = (0..spec.f() as i64)
        .flat_map(|s| {
            spec.charges()
                .iter()
                .map(move |&v| v as i64 + s * spec.eprime() as i64)
        })
        .collect();
    let m = w
        .iter()
        .enumerate()
        .map(|(idx, &wj)| {
            let j = idx as i64 + 1;
            Rational64::from_integer(wj) - Rational64::new(j * e, width)
                + Rational64::from_integer(e)
        })
        .collect();
    ChargeData { w, m }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(e: u32, p: u32, v: &[i64]) -> ParameterSpec {
        ParameterSpec::new(e, p, v.len(), v).unwrap()
    }

    fn exps(q: &[RootOfUnity]) -> Vec<u64> {
        q.iter().map(RootOfUnity::exponent).collect()
    }

    #[test]
    fn derived_constants() {
        let s = spec(4, 2, &[0]);
        assert_eq!(
            (s.f(), s.eprime(), s.pprime(), s.r(), s.lcm()),
            (2, 2, 1, 2, 4)
        );
        let s = spec(3, 1, &[0, 1]);
        assert_eq!((s.f(), s.eprime(), s.pprime(), s.r()), (1, 3, 1, 2));
        let s = spec(2, 4, &[0]);
        assert_eq!(
            (s.f(), s.eprime(), s.pprime(), s.r(), s.lcm()),
            (2, 1, 2, 4, 4)
        );
        assert_eq!(s.d(), 1);
    }

    #[test]
    fn validation() {
        assert_eq!(
            ParameterSpec::new(1, 2, 1, &[0]),
            Err(Error::InvalidOrder(1))
        );
        assert!(matches!(
            ParameterSpec::new(4, 2, 1, &[7]),
            Err(Error::InvalidCharge { max: 1, .. })
        ));
        assert!(matches!(
            ParameterSpec::new(5, 1, 2, &[3, 1]),
            Err(Error::InvalidCharge { .. })
        ));
        assert!(matches!(
            ParameterSpec::new(5, 1, 2, &[-1, 1]),
            Err(Error::InvalidCharge { .. })
        ));
        assert!(matches!(
            ParameterSpec::new(5, 1, 2, &[1]),
            Err(Error::ChargeCount { .. })
        ));
        assert!(ParameterSpec::new(5, 0, 1, &[0]).is_err());
    }

    #[test]
    fn eta_identities() {
        for (e, p) in [(4, 2), (2, 4), (6, 4), (3, 3), (5, 1), (12, 8)] {
            let s = spec(e, p, &[0]);
            let eta_f_from_p = s.eta_p().pow(s.pprime() as u64);
            let eta_f_from_e = s.eta_e().pow(s.eprime() as u64);
            assert_eq!(eta_f_from_p, eta_f_from_e);
            assert_eq!(eta_f_from_p.exponent(), s.lcm() / s.f() as u64 % s.lcm());
        }
    }

    #[test]
    fn q_sequences() {
        assert_eq!(exps(&build_q(&spec(4, 2, &[0])).unwrap()), vec![0, 2]);
        assert_eq!(exps(&build_q(&spec(2, 2, &[0])).unwrap()), vec![0, 1]);
        let q = build_q(&spec(4, 2, &[0, 1])).unwrap();
        assert_eq!(q.len(), 4);
        assert!(matches!(
            build_q(&spec(2, 1, &[0, 0])),
            Err(Error::DuplicateParameter {
                first: 1,
                second: 2,
                ..
            })
        ));
    }

    #[test]
    fn splits() {
        let q = build_q(&spec(4, 2, &[0])).unwrap();
        assert_eq!(morita_split(&q, 4), vec![vec![0, 1]]);
        let q = build_q(&spec(2, 4, &[0])).unwrap();
        assert_eq!(morita_split(&q, 2), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(morita_split(&[RootOfUnity::new(3, 7)], 3), vec![vec![0]]);
        assert!(morita_split(&[], 3).is_empty());
    }

    #[test]
    fn charges() {
        let c = charge_data(&spec(4, 2, &[0]));
        assert_eq!(c.w, vec![0, 2]);
        assert_eq!(c.m, vec![Rational64::from_integer(2); 2]);
        let c = charge_data(&spec(3, 1, &[0]));
        assert_eq!((c.w, c.m), (vec![0], vec![Rational64::from_integer(0)]));
        let c = charge_data(&spec(6, 2, &[0, 1]));
        assert_eq!(c.w, vec![0, 1, 3, 4]);
        assert_eq!(
            c.m,
            vec![
                Rational64::new(9, 2),
                Rational64::from_integer(4),
                Rational64::new(9, 2),
                Rational64::from_integer(4)
            ]
        );
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&spec(4, 2, &[0])).unwrap();
        assert_eq!(
            json,
            r#"{"e":4,"p":2,"delta":1,"charges":[0],"derived":{"f":2,"eprime":2,"pprime":1,"r":2,"L":4}}"#
        );
    }
}
