//! Elements of Thompson's group V as complete prefix-code bijections in
//! reduced (canonical) form: a sorted table of `(domain, range)` address
//! pairs whose two columns are complete antichains, with no mergeable
//! sibling pairs. Equality of canonical forms decides equality in V.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::address::{is_complete_antichain, Address, AddressError, Letter, SwapPair};

/// Default iteration cap for [`VElement::order`]. An absent result means
/// "order exceeds the cap", never "infinite".
pub const DEFAULT_ORDER_CAP: u32 = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElementError {
    #[error(transparent)]
    Address(#[from] AddressError),
    #[error("pair table is empty")]
    EmptyTable,
    #[error("{side} addresses do not form a complete antichain")]
    NotPrefixCode { side: &'static str },
    #[error("malformed element dump: {0}")]
    Dump(String),
}

/// An element of V in canonical form. A point of Cantor space with prefix
/// `domain[i]` maps to the same point with that prefix replaced by
/// `range[i]`. Construction always canonicalizes, so `==` is equality in V.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VElement {
    pairs: Vec<(Address, Address)>,
}

impl VElement {
    /// The identity map, canonical form `{(e, e)}`.
    pub fn identity() -> VElement {
        VElement { pairs: vec![(Address::root(), Address::root())] }
    }

    /// The transposition exchanging αC and βC and fixing everything else.
    /// Rejects comparable (α, β).
    pub fn from_swap(alpha: &Address, beta: &Address) -> Result<VElement, ElementError> {
        Ok(VElement::from_swap_pair(&SwapPair::new(
            alpha.clone(),
            beta.clone(),
        )?))
    }

    pub fn from_swap_pair(pair: &SwapPair) -> VElement {
        let alpha = pair.alpha();
        let beta = pair.beta();
        // nodes of the finite tree spanned by the two labels
        let mut nodes: Vec<Address> = Vec::new();
        for addr in [alpha, beta] {
            for i in 0..=addr.len() {
                nodes.push(Address::from_letters(addr.letters()[..i].to_vec()));
            }
        }
        nodes.sort();
        nodes.dedup();
        let mut pairs: Vec<(Address, Address)> = vec![
            (alpha.clone(), beta.clone()),
            (beta.clone(), alpha.clone()),
        ];
        for node in &nodes {
            let children = [node.child(Letter::Zero), node.child(Letter::One)];
            if children.iter().any(|c| nodes.binary_search(c).is_ok()) {
                for c in children {
                    if nodes.binary_search(&c).is_err() {
                        pairs.push((c.clone(), c));
                    }
                }
            }
        }
        VElement::from_pairs(pairs).expect("swap tables satisfy the invariants")
    }

    /// Builds an element from a raw pair table, validating the antichain
    /// invariants and merging sibling pairs until the table is reduced.
    pub fn from_pairs(pairs: Vec<(Address, Address)>) -> Result<VElement, ElementError> {
        if pairs.is_empty() {
            return Err(ElementError::EmptyTable);
        }
        let domains: Vec<Address> = pairs.iter().map(|(d, _)| d.clone()).collect();
        let ranges: Vec<Address> = pairs.iter().map(|(_, r)| r.clone()).collect();
        if !is_complete_antichain(&domains) {
            return Err(ElementError::NotPrefixCode { side: "domain" });
        }
        if !is_complete_antichain(&ranges) {
            return Err(ElementError::NotPrefixCode { side: "range" });
        }
        let mut table: BTreeMap<Address, Address> = pairs.into_iter().collect();
        // merge (p0 -> q0, p1 -> q1) into (p -> q) until none remain
        loop {
            let mut merge: Option<(Address, Address)> = None;
            for (d, r) in &table {
                let Some((dp, Letter::Zero)) = d.split_last() else {
                    continue;
                };
                let Some((rp, Letter::Zero)) = r.split_last() else {
                    continue;
                };
                let sib_d = dp.child(Letter::One);
                if table.get(&sib_d) == Some(&rp.child(Letter::One)) {
                    merge = Some((dp, rp));
                    break;
                }
            }
            match merge {
                Some((dp, rp)) => {
                    table.remove(&dp.child(Letter::Zero));
                    table.remove(&dp.child(Letter::One));
                    table.insert(dp, rp);
                }
                None => break,
            }
        }
        Ok(VElement { pairs: table.into_iter().collect() })
    }

    /// The reduced pair table, sorted by domain address (shortlex).
    pub fn pairs(&self) -> &[(Address, Address)] {
        &self.pairs
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0.is_empty() && self.pairs[0].1.is_empty()
    }

    /// Largest address length appearing in the canonical table.
    pub fn max_depth(&self) -> usize {
        self.pairs
            .iter()
            .map(|(d, r)| d.len().max(r.len()))
            .max()
            .unwrap_or(0)
    }

    /// Composition, applying `self` first and then `g` (maps act on the
    /// right). The range cells of `self` are refined against the domain
    /// cells of `g` and relabelled through both tables.
    pub fn compose(&self, g: &VElement) -> VElement {
        let mut pairs: Vec<(Address, Address)> = Vec::new();
        for (d1, r1) in &self.pairs {
            for (d2, r2) in &g.pairs {
                if let Some(delta) = r1.strip_prefix(d2) {
                    // r1 lies inside the cell d2
                    pairs.push((d1.clone(), r2.concat(&delta)));
                } else if let Some(delta) = d2.strip_prefix(r1) {
                    if !delta.is_empty() {
                        // d2 refines r1: split the domain cell accordingly
                        pairs.push((d1.concat(&delta), r2.clone()));
                    }
                }
            }
        }
        VElement::from_pairs(pairs).expect("refinement of complete antichains is complete")
    }

    /// The inverse map: the pair table reversed and re-sorted.
    pub fn inverse(&self) -> VElement {
        let pairs = self.pairs.iter().map(|(d, r)| (r.clone(), d.clone())).collect();
        VElement::from_pairs(pairs).expect("inverse of a bijection table is valid")
    }

    pub fn power(&self, n: i64) -> VElement {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = VElement::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// The partial action on addresses: prefix substitution through the
    /// matching table row, undefined when `g` is a proper prefix of a
    /// domain address.
    pub fn act(&self, g: &Address) -> Option<Address> {
        for (d, r) in &self.pairs {
            if let Some(delta) = g.strip_prefix(d) {
                return Some(r.concat(&delta));
            }
        }
        None
    }

    /// Smallest k ≤ cap with self^k = 1.
    pub fn order(&self, cap: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = p.compose(self);
        }
        None
    }

    /// True iff the moved regions (cells with domain ≠ range, on canonical
    /// form) of the two elements share no basic open set. Disjoint supports
    /// force the elements to commute.
    pub fn supports_disjoint(&self, other: &VElement) -> bool {
        let moved = |e: &VElement| -> Vec<Address> {
            e.pairs
                .iter()
                .filter(|(d, r)| d != r)
                .flat_map(|(d, r)| [d.clone(), r.clone()])
                .collect()
        };
        let ours = moved(self);
        let theirs = moved(other);
        ours.iter()
            .all(|a| theirs.iter().all(|b| a.is_incomparable_with(b)))
    }

    /// The tree-pair view: two finite binary trees with matched numbered
    /// leaves, domain leaves numbered 1..n left to right.
    pub fn to_tree_pair(&self) -> TreePair {
        let planar = |mut v: Vec<Address>| {
            v.sort_by(|a, b| a.letters().cmp(b.letters()));
            v
        };
        let domain_leaves = planar(self.pairs.iter().map(|(d, _)| d.clone()).collect());
        let range_leaves = planar(self.pairs.iter().map(|(_, r)| r.clone()).collect());
        let table: BTreeMap<&Address, &Address> =
            self.pairs.iter().map(|(d, r)| (d, r)).collect();
        let mut number_of: BTreeMap<&Address, usize> = BTreeMap::new();
        for (i, d) in domain_leaves.iter().enumerate() {
            number_of.insert(table[d], i + 1);
        }
        let range_numbering = range_leaves.iter().map(|r| number_of[r]).collect();
        TreePair { domain_leaves, range_leaves, range_numbering }
    }

    /// Text dump: header `velement v1 n=<pairs>` then one `domain -> range`
    /// line per pair, sorted. Round-trips exactly through [`VElement::from_dump`].
    pub fn dump(&self) -> String {
        let mut out = format!("velement v1 n={}\n", self.pairs.len());
        for (d, r) in &self.pairs {
            out.push_str(&format!("{d} -> {r}\n"));
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<VElement, ElementError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| ElementError::Dump("empty input".into()))?;
        let rest = header
            .strip_prefix("velement v1 n=")
            .ok_or_else(|| ElementError::Dump(format!("bad header: {header:?}")))?;
        let n: usize = rest
            .trim()
            .parse()
            .map_err(|_| ElementError::Dump(format!("bad pair count: {rest:?}")))?;
        let mut pairs = Vec::with_capacity(n);
        for line in lines {
            let (d, r) = line
                .split_once("->")
                .ok_or_else(|| ElementError::Dump(format!("bad pair line: {line:?}")))?;
            let d: Address = d.trim().parse()?;
            let r: Address = r.trim().parse()?;
            pairs.push((d, r));
        }
        if pairs.len() != n {
            return Err(ElementError::Dump(format!(
                "header promises {n} pairs, found {}",
                pairs.len()
            )));
        }
        VElement::from_pairs(pairs)
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.dump().trim_end())
    }
}

/// A pair of finite binary trees with matched numbered leaves. Domain
/// leaves are numbered 1..n left to right; the range leaf carrying number
/// i is the image of domain leaf i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePair {
    domain_leaves: Vec<Address>,
    range_leaves: Vec<Address>,
    range_numbering: Vec<usize>,
}

impl TreePair {
    pub fn leaf_count(&self) -> usize {
        self.domain_leaves.len()
    }

    /// Domain leaves in planar (left-to-right) order; leaf i carries number i+1.
    pub fn domain_leaves(&self) -> &[Address] {
        &self.domain_leaves
    }

    pub fn range_leaves(&self) -> &[Address] {
        &self.range_leaves
    }

    /// Numbers carried by the range leaves, left to right.
    pub fn range_numbering(&self) -> &[usize] {
        &self.range_numbering
    }

    /// Side-by-side ASCII rendering: domain tree, arrow, range tree, leaves
    /// annotated `[n]`.
    pub fn render_ascii(&self) -> String {
        let left = render_tree_block(&self.domain_leaves, |i| i + 1);
        let right = render_tree_block(&self.range_leaves, |i| self.range_numbering[i]);
        let width = left.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let height = left.len().max(right.len());
        let arrow_row = (height - 1) / 2;
        let mut out = String::new();
        for row in 0..height {
            let l = left.get(row).map(String::as_str).unwrap_or("");
            let r = right.get(row).map(String::as_str).unwrap_or("");
            let gap = width - l.chars().count();
            let mid = if row == arrow_row { "  -->  " } else { "       " };
            let line = format!("{l}{:gap$}{mid}{r}", "");
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Graphviz rendering with one cluster per tree.
    pub fn render_dot(&self) -> String {
        fn cluster(out: &mut String, tag: &str, name: &str, leaves: &[Address], nums: &[usize]) {
            out.push_str(&format!("  subgraph cluster_{name} {{\n    label=\"{name}\";\n"));
            for node in tree_nodes(leaves) {
                let id = format!("{tag}_{node}");
                if let Some(i) = leaves.iter().position(|l| *l == node) {
                    out.push_str(&format!(
                        "    {id} [shape=plaintext, label=\"{node} [{}]\"];\n",
                        nums[i]
                    ));
                } else {
                    out.push_str(&format!("    {id};\n"));
                }
                if let Some((parent, _)) = node.split_last() {
                    out.push_str(&format!("    {tag}_{parent} -> {id};\n"));
                }
            }
            out.push_str("  }\n");
        }
        let mut out = String::from("digraph treepair {\n  node [shape=point];\n");
        let domain_numbers: Vec<usize> = (1..=self.leaf_count()).collect();
        cluster(&mut out, "d", "domain", &self.domain_leaves, &domain_numbers);
        cluster(&mut out, "r", "range", &self.range_leaves, &self.range_numbering);
        out.push_str("}\n");
        out
    }
}

/// All nodes of the finite tree whose leaf set is the given complete
/// antichain, in shortlex order.
fn tree_nodes(leaves: &[Address]) -> Vec<Address> {
    let mut nodes: Vec<Address> = leaves
        .iter()
        .flat_map(|leaf| {
            (0..=leaf.len()).map(|i| Address::from_letters(leaf.letters()[..i].to_vec()))
        })
        .collect();
    nodes.sort();
    nodes.dedup();
    nodes
}

fn render_tree_block(leaves: &[Address], number: impl Fn(usize) -> usize) -> Vec<String> {
    let mut lines = Vec::new();
    render_tree_node(&Address::root(), leaves, &number, "", "", &mut lines);
    lines
}

fn render_tree_node(
    node: &Address,
    leaves: &[Address],
    number: &impl Fn(usize) -> usize,
    prefix: &str,
    child_prefix: &str,
    lines: &mut Vec<String>,
) {
    if let Some(i) = leaves.iter().position(|l| l == node) {
        lines.push(format!("{prefix}{node} [{}]", number(i)));
        return;
    }
    lines.push(format!("{prefix}*"));
    let zero = node.child(Letter::Zero);
    let one = node.child(Letter::One);
    render_tree_node(
        &zero,
        leaves,
        number,
        &format!("{child_prefix}├─ "),
        &format!("{child_prefix}│  "),
        lines,
    );
    render_tree_node(
        &one,
        leaves,
        number,
        &format!("{child_prefix}└─ "),
        &format!("{child_prefix}   "),
        lines,
    );
}
