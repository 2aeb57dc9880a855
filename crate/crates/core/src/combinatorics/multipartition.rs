use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::factorial;
use super::partition::{enumerate_partitions, Partition};
use crate::{Error, Result};

/// An `r`-tuple of partitions. The number of components is fixed at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    /// The empty multipartition with `r` components.
    pub fn empty(r: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); r],
        }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(parts: &[&[u32]]) -> Result<Self> {
        parts
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Result<Vec<_>>>()
            .map(Multipartition::new)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c`, 0-based.
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c]
    }

    /// Number of components.
    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }

    pub fn expect_level(&self, r: usize) -> Result<()> {
        if self.level() != r {
            return Err(Error::ComponentCount {
                expected: r,
                got: self.level(),
            });
        }
        Ok(())
    }

    /// Splits into consecutive blocks of `width` components.
    pub fn blocks(&self, width: usize) -> Vec<Multipartition> {
        self.components
            .chunks(width)
            .map(|c| Multipartition::new(c.to_vec()))
            .collect()
    }

    /// Concatenates blocks back into one multipartition.
    pub fn concat(blocks: &[Multipartition]) -> Self {
        Multipartition::new(
            blocks
                .iter()
                .flat_map(|b| b.components.iter().cloned())
                .collect(),
        )
    }

    pub fn with_component(&self, c: usize, part: Partition) -> Self {
        let mut components = self.components.clone();
        components[c] = part;
        Multipartition { components }
    }

    /// Nested part lists, as used in the JSON outputs.
    pub fn to_lists(&self) -> Vec<Vec<u32>> {
        self.components.iter().map(|p| p.parts().to_vec()).collect()
    }
}

impl Ord for Multipartition {
    /// Canonical order: component sizes compared lexicographically with the
    /// larger size first, then the components in reverse-lexicographic order.
    /// Enumeration order is ascending in this order.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .sizes()
            .cmp(&self.sizes())
            .then_with(|| self.components.cmp(&other.components))
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "({})", body.join(", "))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses the JSON form, e.g. `[[2,1],[],[1]]`.
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("multipartition {s:?}: {e}")))
    }
}

/// All `r`-partitions of `n`, sorted in the canonical order: compositions of
/// `n` into `r` parts (larger leading sizes first), then componentwise
/// partition order.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<Multipartition> {
    assert!(r >= 1, "a multipartition needs at least one component");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    for sizes in compositions(n, r) {
        let mut current: Vec<Vec<Partition>> = vec![Vec::new()];
        for &k in &sizes {
            current = current
                .into_iter()
                .flat_map(|prefix| {
                    by_size[k].iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(current.into_iter().map(Multipartition::new));
    }
    out
}

/// Compositions of `n` into `r` non-negative parts, lexicographically
/// decreasing.
fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .rev()
        .flat_map(|first| {
            compositions(n - first, r - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// All concatenations `(mu^1, ..., mu^blocks)` with `mu^i` drawn from
/// `by_size[|mu^i|]` and total size `n`, sorted in the canonical order.
///
/// `by_size` must cover every size in `0..=n`.
pub fn block_tuples(
    n: usize,
    blocks: usize,
    by_size: &[Vec<Multipartition>],
) -> Vec<Multipartition> {
    fn go(
        rest: usize,
        slots: usize,
        by_size: &[Vec<Multipartition>],
        prefix: &mut Vec<Multipartition>,
        out: &mut Vec<Multipartition>,
    ) {
        if slots == 0 {
            if rest == 0 {
                out.push(Multipartition::concat(prefix));
            }
            return;
        }
        let sizes: Vec<usize> = if slots == 1 {
            vec![rest]
        } else {
            (0..=rest).rev().collect()
        };
        for k in sizes {
            for block in &by_size[k] {
                prefix.push(block.clone());
                go(rest - k, slots - 1, by_size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, blocks, by_size, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of standard tableaux of `shape`: the multinomial coefficient of the
/// component sizes times the hook length counts of the components.
pub fn syt_count(shape: &Multipartition) -> u128 {
    let multinomial = shape
        .components
        .iter()
        .fold(factorial(shape.size()), |acc, p| acc / factorial(p.size()));
    shape
        .components
        .iter()
        .fold(multinomial, |acc, p| acc * p.hook_count())
}
