use std::fmt;

use serde::Serialize;

use super::multipartition::Multipartition;
use crate::{Error, Result};

/// Default bound on the size of shapes whose tableaux are listed explicitly.
pub const DEFAULT_TABLEAU_CAP: usize = 8;

/// A standard filling of a multipartition by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardTableau {
    /// `rows[c][a]` is row `a` of component `c`, both 0-based.
    rows: Vec<Vec<Vec<u32>>>,
}

impl StandardTableau {
    /// Checks that `rows` is a standard filling of a multipartition shape.
    pub fn new(rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let shape_ok = rows.iter().all(|comp| {
            comp.iter().all(|row| !row.is_empty())
                && comp.windows(2).all(|w| w[0].len() >= w[1].len())
        });
        if !shape_ok {
            return Err(Error::Parse("tableau rows do not form a shape".into()));
        }
        let mut seen: Vec<u32> = rows.iter().flatten().flatten().copied().collect();
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(k, &x)| x as usize != k + 1) {
            return Err(Error::Parse("tableau entries are not 1..=n".into()));
        }
        for comp in &rows {
            for (a, row) in comp.iter().enumerate() {
                if row.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Parse("tableau row not increasing".into()));
                }
                if a > 0 && row.iter().zip(&comp[a - 1]).any(|(lo, hi)| lo <= hi) {
                    return Err(Error::Parse("tableau column not increasing".into()));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    pub fn shape(&self) -> Multipartition {
        let parts: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|comp| comp.iter().map(|row| row.len() as u32).collect())
            .collect();
        let refs: Vec<&[u32]> = parts.iter().map(Vec::as_slice).collect();
        Multipartition::from_parts(&refs).expect("tableau rows form a shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    /// Moves component `c` to position `perm[c]`, the tableau analogue of
    /// permuting the components of the shape.
    pub fn permute_components(&self, perm: &[usize]) -> Self {
        let mut rows = vec![Vec::new(); self.rows.len()];
        for (c, comp) in self.rows.iter().enumerate() {
            rows[perm[c]] = comp.clone();
        }
        StandardTableau { rows }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|comp| {
                let rows: Vec<String> = comp
                    .iter()
                    .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("[{}]", rows.join(" / "))
            })
            .collect();
        write!(f, "{}", comps.join(" "))
    }
}

/// All standard tableaux of `shape`, in lexicographic order of their fillings.
///
/// Shapes larger than `cap` are refused.
pub fn enumerate_standard_tableaux(
    shape: &Multipartition,
    cap: usize,
) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let target: Vec<Vec<usize>> = shape
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&x| x as usize).collect())
        .collect();
    let mut current: Vec<Vec<Vec<u32>>> = target
        .iter()
        .map(|comp| vec![Vec::new(); comp.len()])
        .collect();
    let mut out = Vec::new();
    fill(1, n as u32, &target, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill(
    next: u32,
    n: u32,
    target: &[Vec<usize>],
    current: &mut Vec<Vec<Vec<u32>>>,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau {
            rows: current.clone(),
        });
        return;
    }
    for c in 0..target.len() {
        for a in 0..target[c].len() {
            let len = current[c][a].len();
            let fits = len < target[c][a] && (a == 0 || current[c][a - 1].len() > len);
            if fits {
                current[c][a].push(next);
                fill(next + 1, n, target, current, out);
                current[c][a].pop();
            }
        }
    }
}
