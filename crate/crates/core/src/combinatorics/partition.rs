use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros; [`Partition::part`] reads zero beyond the
/// height.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects increasing parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} has an interior zero part")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `row`-th part, 1-based; zero beyond the height (and for row 0).
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Rows (1-based) where a box can be appended keeping the shape a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.height() + 1)
            .filter(|&a| a == 1 || self.part(a - 1) > self.part(a))
            .collect()
    }

    /// Rows (1-based) whose last box can be removed keeping the shape a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.height())
            .filter(|&a| self.part(a) > self.part(a + 1))
            .collect()
    }

    /// Appends a box at the end of `row`. The caller guarantees addability.
    pub fn with_added(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            debug_assert_eq!(row, parts.len() + 1);
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Removes the last box of `row`. The caller guarantees removability.
    pub fn with_removed(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Drops the last row entirely.
    pub fn without_last_row(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.pop();
        Partition { parts }
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|col| self.parts.iter().filter(|&&x| x as usize >= col).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    pub fn hook_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len as usize {
                let arm = len as usize - j - 1;
                let leg = conj.part(j + 1) as usize - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        super::factorial(self.size()) / hooks
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Ord for Partition {
    /// Larger size first, then reverse-lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}
