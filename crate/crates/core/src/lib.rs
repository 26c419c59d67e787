//! Exact computation in R. Thompson's group V using a transposition
//! ("swap") calculus on the Cantor algebra.
//!
//! Elements of V are represented as complete prefix-code bijections of
//! Cantor space (reduced tree pairs). The building blocks are the swaps
//! `<a b>`: prefix substitutions exchanging the basic open sets below two
//! incomparable binary addresses. On top of that sit:
//!
//! - [`address`]: binary-address algebra (prefix comparison, the partial
//!   swap action on addresses, antichain checks),
//! - [`element`]: the group V itself — composition, inversion, canonical
//!   forms, tree-pair rendering,
//! - [`words`]: a small expression language over named generators with
//!   inverses, powers, conjugation `x^g` and commutators `[x,y]`,
//! - [`presentations`]: the named generating sets (`abc`, `uv`, `cfp`),
//!   the level-3 swap table, and the relation suites,
//! - [`algorithms`]: swap decomposition into the four basic generators,
//!   even factorization, and the suite runner.
//!
//! Maps compose left to right throughout: `compose(f, g)` applies `f`
//! first, matching the tree-pair convention (domain on the left).

pub mod address;
pub mod algorithms;
pub mod element;
pub mod presentations;
pub mod words;

pub use address::{Address, AddressRelation, Letter, SwapPair};
pub use element::{TreePair, VElement};
pub use presentations::{GeneratingSet, Presentation, Relator, SwapTable};
pub use words::{GenName, Word, WordExpr};
