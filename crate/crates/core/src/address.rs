//! Binary addresses: finite words over {0, 1} naming nodes of the infinite
//! rooted binary tree, together with prefix comparison and the partial
//! action of a swap on addresses.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One letter of the binary alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Zero,
    One,
}

impl Letter {
    /// The other letter; an involution.
    pub fn complement(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::One => Letter::Zero,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
        }
    }
}

/// Errors from address and swap construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AddressError {
    #[error("invalid address character {found:?} at position {position}")]
    InvalidCharacter { found: char, position: usize },
    #[error("addresses {alpha} and {beta} are comparable; a swap needs an incomparable pair")]
    ComparablePair { alpha: Address, beta: Address },
    #[error("enumeration to length {requested} exceeds the cap {cap}")]
    EnumerationCapExceeded { requested: usize, cap: usize },
}

/// A node of the infinite binary tree: a finite word over {0, 1}.
/// The empty word is the root and prints as `e`.
///
/// Ordering is shortlex (length first, then lexicographic), the canonical
/// enumeration and display order used throughout.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Address {
    letters: Vec<Letter>,
}

impl Address {
    /// The empty address ε (the tree root).
    pub fn root() -> Address {
        Address { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Address {
        Address { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The child node reached by appending one letter.
    pub fn child(&self, letter: Letter) -> Address {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Address { letters }
    }

    /// Concatenation αβ.
    pub fn concat(&self, suffix: &Address) -> Address {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&suffix.letters);
        Address { letters }
    }

    /// The last letter, if any, together with the parent address.
    pub fn split_last(&self) -> Option<(Address, Letter)> {
        let (&last, init) = self.letters.split_last()?;
        Some((Address { letters: init.to_vec() }, last))
    }

    /// True iff `self` ⪯ `other` (prefix, possibly equal).
    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// True iff neither address is a prefix of the other (α ⊥ β).
    pub fn is_incomparable_with(&self, other: &Address) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    /// The suffix δ with `other` = `self`·δ, when `self` ⪯ `other`.
    pub fn strip_prefix(&self, prefix: &Address) -> Option<Address> {
        self.letters
            .strip_prefix(prefix.letters.as_slice())
            .map(|rest| Address { letters: rest.to_vec() })
    }

    /// Classifies the prefix relation between two addresses. Exactly one
    /// variant holds for any pair.
    pub fn compare(&self, other: &Address) -> AddressRelation {
        if self == other {
            AddressRelation::Equal
        } else if self.is_prefix_of(other) {
            AddressRelation::PrefixOf
        } else if other.is_prefix_of(self) {
            AddressRelation::ExtensionOf
        } else {
            AddressRelation::Incomparable
        }
    }
}

impl PartialOrd for Address {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Address {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Address {
    type Err = AddressError;

    /// Accepts a word over {0,1}; the empty string or `e` denotes ε.
    fn from_str(s: &str) -> Result<Address, AddressError> {
        if s.is_empty() || s == "e" {
            return Ok(Address::root());
        }
        let mut letters = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '0' => letters.push(Letter::Zero),
                '1' => letters.push(Letter::One),
                found => return Err(AddressError::InvalidCharacter { found, position }),
            }
        }
        Ok(Address { letters })
    }
}

/// How two addresses relate under the prefix order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AddressRelation {
    Equal,
    /// The first is a proper prefix of the second.
    PrefixOf,
    /// The first properly extends the second.
    ExtensionOf,
    /// Neither is a prefix of the other (disjoint basic open sets).
    Incomparable,
}

/// A validated incomparable pair of addresses: the label of a swap ⟨α β⟩.
/// The pair is stored in shortlex order; ⟨β α⟩ and ⟨α β⟩ compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwapPair {
    alpha: Address,
    beta: Address,
}

impl SwapPair {
    pub fn new(alpha: Address, beta: Address) -> Result<SwapPair, AddressError> {
        if !alpha.is_incomparable_with(&beta) {
            return Err(AddressError::ComparablePair { alpha, beta });
        }
        if alpha <= beta {
            Ok(SwapPair { alpha, beta })
        } else {
            Ok(SwapPair { alpha: beta, beta: alpha })
        }
    }

    /// Convenience constructor from text forms.
    pub fn parse(alpha: &str, beta: &str) -> Result<SwapPair, AddressError> {
        SwapPair::new(alpha.parse()?, beta.parse()?)
    }

    pub fn alpha(&self) -> &Address {
        &self.alpha
    }

    pub fn beta(&self) -> &Address {
        &self.beta
    }

    /// The partial action γ·⟨α β⟩ on addresses: prefix substitution where
    /// defined, undefined exactly when γ is a proper prefix of α or β.
    pub fn apply(&self, g: &Address) -> Option<Address> {
        if let Some(delta) = g.strip_prefix(&self.alpha) {
            return Some(self.beta.concat(&delta));
        }
        if let Some(delta) = g.strip_prefix(&self.beta) {
            return Some(self.alpha.concat(&delta));
        }
        if self.alpha.strip_prefix(g).is_some() || self.beta.strip_prefix(g).is_some() {
            return None;
        }
        Some(g.clone())
    }

    /// Transports both labels of another swap, when both images are defined.
    pub fn transport(&self, other: &SwapPair) -> Option<SwapPair> {
        let a = self.apply(&other.alpha)?;
        let b = self.apply(&other.beta)?;
        // images of an incomparable pair stay incomparable
        Some(SwapPair::new(a, b).expect("transport preserves incomparability"))
    }

    /// The two split halves ⟨α0 β0⟩, ⟨α1 β1⟩ whose product equals this swap.
    pub fn split(&self) -> (SwapPair, SwapPair) {
        let h = |l: Letter| {
            SwapPair::new(self.alpha.child(l), self.beta.child(l))
                .expect("children of an incomparable pair are incomparable")
        };
        (h(Letter::Zero), h(Letter::One))
    }
}

impl fmt::Display for SwapPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} {}>", self.alpha, self.beta)
    }
}

/// The free partial-action form: γ·⟨α β⟩ for a not-yet-validated pair.
/// Rejects comparable (α, β).
pub fn swap_address_action(
    g: &Address,
    alpha: Address,
    beta: Address,
) -> Result<Option<Address>, AddressError> {
    Ok(SwapPair::new(alpha, beta)?.apply(g))
}

/// Cap guarding [`enumerate_addresses`] against accidental exponential
/// blowups; overridable via [`enumerate_addresses_with_cap`].
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// All addresses of length 0..=`max_len`, in shortlex order.
pub fn enumerate_addresses(max_len: usize) -> Result<Vec<Address>, AddressError> {
    enumerate_addresses_with_cap(max_len, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_addresses_with_cap(
    max_len: usize,
    cap: usize,
) -> Result<Vec<Address>, AddressError> {
    if max_len > cap {
        return Err(AddressError::EnumerationCapExceeded { requested: max_len, cap });
    }
    let mut out = vec![Address::root()];
    let mut level = vec![Address::root()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * 2);
        for a in &level {
            next.push(a.child(Letter::Zero));
            next.push(a.child(Letter::One));
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// True iff the set is a complete antichain (prefix code): members are
/// pairwise incomparable and every infinite binary string has exactly one
/// prefix in the set, i.e. Σ 2^{-|α|} = 1.
pub fn is_complete_antichain(set: &[Address]) -> bool {
    if set.is_empty() {
        return false;
    }
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if !a.is_incomparable_with(b) {
                return false;
            }
        }
    }
    let max = set.iter().map(Address::len).max().unwrap();
    if max >= 120 {
        // would overflow the exact measure computation below
        return false;
    }
    let measure: u128 = set.iter().map(|a| 1u128 << (max - a.len())).sum();
    measure == 1u128 << max
}
