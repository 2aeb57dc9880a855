//! Kleshchev multipartitions, grown from the empty multipartition by adding
//! good nodes.
//!
//! For a residue `i`, the addable and removable `i`-nodes are read in a fixed
//! order and written as a word in `A` and `R`. Adjacent `RA` pairs are
//! cancelled until the word has the form `A...AR...R`; the good addable node
//! is the surviving `A` next to the `R` block (the last surviving `A`).
//!
//! Two reading orders are available. Both give crystals isomorphic to the
//! same highest weight crystal, so their vertex counts agree with each other
//! and with the FLOTW counts. A third setting keeps the ascending order but
//! picks the first surviving `A`; that choice does not define a crystal and
//! its counts drift from the FLOTW counts once `n'` reaches 3 or 4. It exists
//! to exercise the count check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{block_tuples, Multipartition};
use crate::flotw::{residue, Node, Residue};
use crate::parameters::{charge_data, ChargeData, ParameterSpec};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SignatureOrder {
    /// Component ascending, then row ascending.
    #[default]
    Ascending,
    /// Component descending, then row descending.
    Descending,
    /// Ascending reading, but the first surviving `A` is taken.
    AscendingFirst,
}

impl SignatureOrder {
    pub const ALL: [SignatureOrder; 3] = [
        SignatureOrder::Ascending,
        SignatureOrder::Descending,
        SignatureOrder::AscendingFirst,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SignatureOrder::Ascending => "ascending",
            SignatureOrder::Descending => "descending",
            SignatureOrder::AscendingFirst => "ascending-first",
        }
    }
}

impl fmt::Display for SignatureOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignatureOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SignatureOrder::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown signature order {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// The `i`-signature of a shape: its addable and removable `i`-nodes in
/// reading order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature(pub Vec<(NodeKind, Node)>);

impl Signature {
    /// The signature with adjacent `RA` pairs cancelled repeatedly.
    pub fn reduced(&self) -> Signature {
        let mut stack: Vec<(NodeKind, Node)> = Vec::new();
        for &entry in &self.0 {
            if entry.0 == NodeKind::Addable
                && stack.last().is_some_and(|top| top.0 == NodeKind::Removable)
            {
                stack.pop();
            } else {
                stack.push(entry);
            }
        }
        Signature(stack)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (kind, _) in &self.0 {
            f.write_str(match kind {
                NodeKind::Addable => "A",
                NodeKind::Removable => "R",
            })?;
        }
        Ok(())
    }
}

/// The `i`-signature of `shape` in the given reading order.
pub fn addable_removable_profile(
    shape: &Multipartition,
    i: u32,
    charges: &ChargeData,
    e: u32,
    order: SignatureOrder,
) -> Signature {
    let mut entries = Vec::new();
    for (c, part) in shape.components().iter().enumerate() {
        // addable and removable rows never coincide, so merging by row is enough
        let mut rows: Vec<(usize, NodeKind)> = part
            .addable_rows()
            .into_iter()
            .map(|a| (a, NodeKind::Addable))
            .chain(
                part.removable_rows()
                    .into_iter()
                    .map(|a| (a, NodeKind::Removable)),
            )
            .collect();
        rows.sort_by_key(|&(a, _)| a);
        for (a, kind) in rows {
            let col = match kind {
                NodeKind::Addable => part.part(a) as usize + 1,
                NodeKind::Removable => part.part(a) as usize,
            };
            let node = Node::new(a, col, c + 1);
            if residue(node, charges, e) == Residue(i) {
                entries.push((kind, node));
            }
        }
    }
    if order == SignatureOrder::Descending {
        entries.reverse();
    }
    Signature(entries)
}

/// The good addable `i`-node of `shape`, if any.
pub fn good_node(
    shape: &Multipartition,
    i: u32,
    charges: &ChargeData,
    e: u32,
    order: SignatureOrder,
) -> Option<Node> {
    let reduced = addable_removable_profile(shape, i, charges, e, order).reduced();
    let mut addable = reduced
        .0
        .iter()
        .filter(|(kind, _)| *kind == NodeKind::Addable)
        .map(|&(_, node)| node);
    match order {
        SignatureOrder::AscendingFirst => addable.next(),
        SignatureOrder::Ascending | SignatureOrder::Descending => addable.next_back(),
    }
}

fn add_node(shape: &Multipartition, node: Node) -> Multipartition {
    let c = node.component - 1;
    shape.with_component(c, shape.component(c).with_added(node.row))
}

/// The crystal layers of depth `0..=max_depth`, each in canonical order.
pub fn kleshchev_layers(
    max_depth: usize,
    spec: &ParameterSpec,
    order: SignatureOrder,
) -> Vec<Vec<Multipartition>> {
    let charges = charge_data(spec);
    let e = spec.e();
    let mut layers = vec![vec![Multipartition::empty(spec.block_width())]];
    for _ in 0..max_depth {
        let next: BTreeSet<Multipartition> = layers
            .last()
            .expect("at least the root layer")
            .iter()
            .flat_map(|shape| {
                (0..e).filter_map(|i| {
                    good_node(shape, i, &charges, e, order).map(|node| add_node(shape, node))
                })
            })
            .collect();
        layers.push(next.into_iter().collect());
    }
    layers
}

/// Kleshchev blocks of size `nprime`, in canonical order.
pub fn enumerate_kleshchev(
    nprime: usize,
    spec: &ParameterSpec,
    order: SignatureOrder,
) -> Vec<Multipartition> {
    kleshchev_layers(nprime, spec, order)
        .pop()
        .expect("layers are never empty")
}

/// `p'`-tuples of Kleshchev blocks with total size `n`, flattened.
pub fn enumerate_lambda0(
    n: usize,
    spec: &ParameterSpec,
    order: SignatureOrder,
) -> Vec<Multipartition> {
    let layers = kleshchev_layers(n, spec, order);
    block_tuples(n, spec.pprime() as usize, &layers)
}
