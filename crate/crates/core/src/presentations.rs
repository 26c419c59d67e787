//! The registry of generating sets, the level-3 swap-definition table, and
//! the relation suites, plus the evaluation homomorphism from words into V.
//!
//! Named generating sets:
//! - `abc`: a = <00 01>, b = <01 10><01 11> (the 3-cycle on 01,10,11),
//!   c = <1 00>;
//! - `uv`: u = <00 01><10 110><10 111>, v = b;
//! - `cfp`: A = <0 1><0 10><10 11>, B = <10 11><10 110><110 111>,
//!   C = <10 11><0 10>, pi0 = <0 10>;
//! - `swaps`: no named generators, swap literals only.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::address::{Address, SwapPair};
use crate::element::VElement;
use crate::words::{parse, GenName, Word, WordExpr};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unknown generator {name:?} in generating set {genset:?}")]
    UnknownGenerator { name: String, genset: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("truncation level {0} out of range (1..=5)")]
    LevelOutOfRange(u32),
    #[error("derived element index {0} out of range (n >= 1)")]
    DerivedIndexOutOfRange(i64),
    #[error("swap table entry {pair} evaluates to the wrong element")]
    InconsistentTableEntry { pair: SwapPair },
}

/// A named assignment of canonical V elements to generator symbols.
/// Evaluation of words through it is a homomorphism from the free group;
/// swap literals resolve in every generating set.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    name: String,
    images: BTreeMap<String, VElement>,
}

impl GeneratingSet {
    pub fn new(name: &str, images: Vec<(&str, VElement)>) -> GeneratingSet {
        GeneratingSet {
            name: name.to_string(),
            images: images.into_iter().map(|(n, e)| (n.to_string(), e)).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.images.keys().map(String::as_str)
    }

    pub fn image(&self, name: &str) -> Option<&VElement> {
        self.images.get(name)
    }

    pub fn eval(&self, expr: &WordExpr) -> Result<VElement, EvalError> {
        self.eval_word(&expr.flatten())
    }

    pub fn eval_word(&self, word: &Word) -> Result<VElement, EvalError> {
        let mut acc = VElement::identity();
        for (gen, exp) in word.letters() {
            let image = match gen {
                GenName::Symbol(name) => {
                    self.images.get(name).cloned().ok_or_else(|| EvalError::UnknownGenerator {
                        name: name.clone(),
                        genset: self.name.clone(),
                    })?
                }
                GenName::Swap(pair) => VElement::from_swap_pair(pair),
            };
            let image = if *exp < 0 { image.inverse() } else { image };
            acc = acc.compose(&image);
        }
        Ok(acc)
    }
}

fn swap_elem(a: &str, b: &str) -> VElement {
    VElement::from_swap_pair(&SwapPair::parse(a, b).expect("incomparable literals"))
}

/// a = <00 01>, b the 3-cycle 01 -> 10 -> 11 -> 01, c = <1 00>.
pub fn genset_abc() -> GeneratingSet {
    let b = swap_elem("01", "10").compose(&swap_elem("01", "11"));
    GeneratingSet::new(
        "abc",
        vec![("a", swap_elem("00", "01")), ("b", b), ("c", swap_elem("1", "00"))],
    )
}

/// u = <00 01><10 110><10 111> (the Figure-2 element of order 6), v = b.
pub fn genset_uv() -> GeneratingSet {
    let u = swap_elem("00", "01")
        .compose(&swap_elem("10", "110"))
        .compose(&swap_elem("10", "111"));
    let v = swap_elem("01", "10").compose(&swap_elem("01", "11"));
    GeneratingSet::new("uv", vec![("u", u), ("v", v)])
}

/// The four Cannon-Floyd-Parry style generators realized as swap products.
pub fn genset_cfp() -> GeneratingSet {
    let a = swap_elem("0", "1").compose(&swap_elem("0", "10")).compose(&swap_elem("10", "11"));
    let b = swap_elem("10", "11")
        .compose(&swap_elem("10", "110"))
        .compose(&swap_elem("110", "111"));
    let c = swap_elem("10", "11").compose(&swap_elem("0", "10"));
    GeneratingSet::new(
        "cfp",
        vec![("A", a), ("B", b), ("C", c), ("pi0", swap_elem("0", "10"))],
    )
}

/// Swap literals only; any named generator is an error.
pub fn genset_swaps() -> GeneratingSet {
    GeneratingSet::new("swaps", vec![])
}

/// The abc and uv images side by side, for checking the conversion formulas.
pub fn genset_abc_uv() -> GeneratingSet {
    let abc = genset_abc();
    let uv = genset_uv();
    let mut images: Vec<(&str, VElement)> = Vec::new();
    for (name, set) in [("a", &abc), ("b", &abc), ("c", &abc), ("u", &uv), ("v", &uv)] {
        images.push((name, set.image(name).unwrap().clone()));
    }
    GeneratingSet::new("abc+uv", images)
}

pub fn genset_by_name(name: &str) -> Option<GeneratingSet> {
    match name {
        "abc" => Some(genset_abc()),
        "uv" => Some(genset_uv()),
        "cfp" => Some(genset_cfp()),
        "swaps" => Some(genset_swaps()),
        _ => None,
    }
}

/// The auxiliary element families of the four-generator presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    C,
    X,
    Pi,
}

fn pow_expr(x: WordExpr, n: i32) -> WordExpr {
    match n {
        0 => WordExpr::Empty,
        1 => x,
        _ => x.power(n),
    }
}

/// The defining word of C_n, X_n or pi_n over {A, B, C, pi0}:
/// C_n = A^{1-n} C B^{n-1}, X_n = A^{1-n} B A^{n-1},
/// pi_1 = pi0^{C_2}, pi_n = pi_1^{A^{n-1}}.
pub fn derived_cfp_word(kind: DerivedKind, n: u32) -> Result<WordExpr, PresentationError> {
    if n < 1 {
        return Err(PresentationError::DerivedIndexOutOfRange(i64::from(n)));
    }
    let n = n as i32;
    let word = match kind {
        DerivedKind::C => WordExpr::product(vec![
            pow_expr(WordExpr::gen("A"), 1 - n),
            WordExpr::gen("C"),
            pow_expr(WordExpr::gen("B"), n - 1),
        ]),
        DerivedKind::X => WordExpr::product(vec![
            pow_expr(WordExpr::gen("A"), 1 - n),
            WordExpr::gen("B"),
            pow_expr(WordExpr::gen("A"), n - 1),
        ]),
        DerivedKind::Pi => {
            let pi1 = WordExpr::gen("pi0")
                .conjugate(derived_cfp_word(DerivedKind::C, 2)?);
            if n == 1 {
                pi1
            } else {
                pi1.conjugate(pow_expr(WordExpr::gen("A"), n - 1))
            }
        }
    };
    Ok(word)
}

/// Evaluates the defining formula of C_n / X_n / pi_n in the cfp set.
pub fn derived_cfp(kind: DerivedKind, n: u32) -> Result<VElement, PresentationError> {
    let word = derived_cfp_word(kind, n)?;
    Ok(genset_cfp().eval(&word).expect("cfp words resolve"))
}

/// The table expressing every swap with labels of length <= 3 as a word
/// over {a, b, c}, built in the definition order of the three-generator
/// presentation and verified entry by entry on construction.
#[derive(Clone, Debug)]
pub struct SwapTable {
    entries: BTreeMap<SwapPair, WordExpr>,
}

impl SwapTable {
    pub fn build() -> Result<SwapTable, PresentationError> {
        let entries = build_swap_table_entries();
        let abc = genset_abc();
        for (pair, word) in &entries {
            if abc.eval(word).expect("table words resolve") != VElement::from_swap_pair(pair) {
                return Err(PresentationError::InconsistentTableEntry { pair: pair.clone() });
            }
        }
        Ok(SwapTable { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Symmetric lookup: entry(β, α) = entry(α, β).
    pub fn entry(&self, alpha: &Address, beta: &Address) -> Option<&WordExpr> {
        let pair = SwapPair::new(alpha.clone(), beta.clone()).ok()?;
        self.entries.get(&pair)
    }

    pub fn entry_for(&self, pair: &SwapPair) -> Option<&WordExpr> {
        self.entries.get(pair)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SwapPair, &WordExpr)> {
        self.entries.iter()
    }
}

fn pair(a: &str, b: &str) -> SwapPair {
    SwapPair::parse(a, b).expect("incomparable literals")
}

const X1: [char; 2] = ['0', '1'];
const X2: [&str; 4] = ["00", "01", "10", "11"];
const X3: [&str; 8] = ["000", "001", "010", "011", "100", "101", "110", "111"];
// the level-2 conjugator set includes the root swap <0 1>
const SW2: [(&str, &str); 7] = [
    ("0", "1"),
    ("00", "01"),
    ("00", "10"),
    ("00", "11"),
    ("01", "10"),
    ("01", "11"),
    ("10", "11"),
];

fn bar(x: char) -> char {
    if x == '0' {
        '1'
    } else {
        '0'
    }
}

fn build_swap_table_entries() -> BTreeMap<SwapPair, WordExpr> {
    fn put(t: &mut BTreeMap<SwapPair, WordExpr>, a: &str, b: &str, w: WordExpr) {
        t.entry(pair(a, b)).or_insert(w);
    }
    fn tb(t: &BTreeMap<SwapPair, WordExpr>, a: &str, b: &str) -> WordExpr {
        t.get(&pair(a, b)).expect("dependency built earlier").clone()
    }
    let mut t: BTreeMap<SwapPair, WordExpr> = BTreeMap::new();
    let g = WordExpr::gen;

    // level-2 transpositions in terms of a and the 3-cycle b
    put(&mut t, "00", "01", g("a"));
    put(&mut t, "00", "10", g("a").conjugate(g("b")));
    put(&mut t, "00", "11", g("a").conjugate(g("b").inverse()));
    put(&mut t, "01", "10", g("a").conjugate(WordExpr::product(vec![g("b"), g("a")])));
    put(&mut t, "01", "11",
        g("a").conjugate(WordExpr::product(vec![g("b").inverse(), g("a")])));
    put(&mut t, "10", "11",
        g("a").conjugate(WordExpr::product(vec![g("b"), g("a"), g("b")])));
    // the root swap via its split
    let w = WordExpr::product(vec![tb(&t, "00", "10"), tb(&t, "01", "11")]);
    put(&mut t, "0", "1", w);
    // length 1-2
    put(&mut t, "1", "00", g("c"));
    let w = tb(&t, "1", "00").conjugate(tb(&t, "00", "01"));
    put(&mut t, "1", "01", w);
    for x in X1 {
        let w = tb(&t, "1", &format!("0{x}")).conjugate(tb(&t, "0", "1"));
        put(&mut t, "0", &format!("1{x}"), w);
    }
    // length 1-3
    for x in X1 {
        let w = tb(&t, "00", &format!("1{x}")).conjugate(tb(&t, "1", "00"));
        put(&mut t, "1", &format!("00{x}"), w);
    }
    for x in X1 {
        let w = tb(&t, "1", &format!("00{x}")).conjugate(tb(&t, "00", "01"));
        put(&mut t, "1", &format!("01{x}"), w);
    }
    for x in X1 {
        for y in X1 {
            let w = tb(&t, "1", &format!("0{x}{y}")).conjugate(tb(&t, "0", "1"));
            put(&mut t, "0", &format!("1{x}{y}"), w);
        }
    }
    // length 2-3
    for x in X1 {
        let w = tb(&t, "1", &format!("01{x}")).conjugate(tb(&t, "1", "00"));
        put(&mut t, "00", &format!("01{x}"), w);
    }
    for x in X1 {
        let w = tb(&t, "00", &format!("01{x}")).conjugate(tb(&t, "00", "01"));
        put(&mut t, "01", &format!("00{x}"), w);
    }
    for x in X1 {
        for y in X1 {
            let w = tb(&t, &format!("0{x}"), &format!("0{}{y}", bar(x)))
                .conjugate(tb(&t, "0", "1"));
            put(&mut t, &format!("1{x}"), &format!("1{}{y}", bar(x)), w);
        }
    }
    for x in X1 {
        for y in X1 {
            for z in X1 {
                let w = tb(&t, &format!("0{}", bar(y)), &format!("0{y}{z}"))
                    .conjugate(tb(&t, &format!("0{}", bar(y)), &format!("1{x}")));
                put(&mut t, &format!("1{x}"), &format!("0{y}{z}"), w);
            }
        }
    }
    for x in X1 {
        for y in X1 {
            for z in X1 {
                let w = tb(&t, &format!("1{x}"), &format!("0{y}{z}"))
                    .conjugate(tb(&t, "0", "1"));
                put(&mut t, &format!("0{x}"), &format!("1{y}{z}"), w);
            }
        }
    }
    // length 3-3
    for second in ["001", "010", "011"] {
        let w = tb(&t, "1", "000").conjugate(tb(&t, "1", second));
        put(&mut t, "000", second, w);
    }
    let w = tb(&t, "1", "001").conjugate(tb(&t, "1", "011"));
    put(&mut t, "001", "011", w);
    for xy in X2 {
        if xy != "00" {
            let w = tb(&t, "000", "001").conjugate(tb(&t, "00", xy));
            put(&mut t, &format!("{xy}0"), &format!("{xy}1"), w);
        }
    }
    // distinct level-2 prefixes, via a transporting permutation of X^2
    for kappa in X2 {
        for lambda in X2 {
            if kappa == lambda {
                continue;
            }
            let rho = rho_word(kappa, lambda, &t);
            for (x, y) in [('0', '0'), ('0', '1'), ('1', '1')] {
                let w = tb(&t, &format!("00{x}"), &format!("01{y}")).conjugate(rho.clone());
                put(&mut t, &format!("{kappa}{x}"), &format!("{lambda}{y}"), w);
            }
        }
    }
    t
}

/// A product of level-2 transpositions that, viewed as a permutation of
/// X^2, sends 00 to kappa and 01 to lambda; the remaining two points go in
/// shortlex-increasing order. Cycle decomposition over the table's level-2
/// entry words.
fn rho_word(kappa: &str, lambda: &str, table: &BTreeMap<SwapPair, WordExpr>) -> WordExpr {
    let rest: Vec<&str> = X2.iter().copied().filter(|p| *p != kappa && *p != lambda).collect();
    let image = |p: &str| -> &str {
        match p {
            "00" => kappa,
            "01" => lambda,
            "10" => rest[0],
            _ => rest[1],
        }
    };
    let mut seen: Vec<&str> = Vec::new();
    let mut factors: Vec<WordExpr> = Vec::new();
    for start in X2 {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.push(start);
        let mut next = image(start);
        while next != start {
            cycle.push(next);
            seen.push(next);
            next = image(next);
        }
        for &point in &cycle[1..] {
            factors.push(table.get(&pair(cycle[0], point)).expect("level-2 entry").clone());
        }
    }
    WordExpr::product(factors)
}

/// One relation of a suite. All stored forms must evaluate to the identity
/// for the relator to hold; equalities lhs = rhs are stored as lhs rhs^-1
/// with the display text keeping both sides.
#[derive(Clone, Debug)]
pub struct Relator {
    pub label: String,
    pub text: String,
    pub forms: Vec<WordExpr>,
}

impl Relator {
    pub fn from_word(label: impl Into<String>, word: WordExpr) -> Relator {
        let text = word.to_string();
        Relator { label: label.into(), text, forms: vec![word] }
    }

    pub fn equality(label: impl Into<String>, lhs: WordExpr, rhs: WordExpr) -> Relator {
        let text = format!("{lhs} = {rhs}");
        let word = WordExpr::product(vec![lhs, rhs.inverse()]);
        Relator { label: label.into(), text, forms: vec![word] }
    }
}

/// Generators plus relators, together with the generating set the relators
/// are verified against.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
    pub genset: GeneratingSet,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: <{} | {} relators>",
            self.name,
            self.generators.join(", "),
            self.relators.len()
        )
    }
}

fn expr(text: &str) -> WordExpr {
    parse(text).unwrap_or_else(|e| panic!("bad built-in word {text:?}: {e}"))
}

fn relator_word(label: &str, text: &str) -> Relator {
    Relator::from_word(label, expr(text))
}

fn relator_eq(label: &str, lhs: &str, rhs: &str) -> Relator {
    Relator::equality(label, expr(lhs), expr(rhs))
}

/// The eight relations of the three-generator presentation, each stored in
/// both its swap form and its {a,b,c} word form; both must evaluate to the
/// identity.
pub fn presentation_p3() -> Presentation {
    let dual = |label: &str, swap_lhs: &str, swap_rhs: Option<&str>, word_lhs: &str,
                word_rhs: Option<&str>| {
        let swap_form = match swap_rhs {
            Some(rhs) => WordExpr::product(vec![expr(swap_lhs), expr(rhs).inverse()]),
            None => expr(swap_lhs),
        };
        let word_form = match word_rhs {
            Some(rhs) => WordExpr::product(vec![expr(word_lhs), expr(rhs).inverse()]),
            None => expr(word_lhs),
        };
        let text = match (swap_rhs, word_rhs) {
            (Some(sr), Some(wr)) => format!("{swap_lhs} = {sr}  |  {word_lhs} = {wr}"),
            _ => format!("{swap_lhs}  |  {word_lhs}"),
        };
        Relator { label: label.into(), text, forms: vec![swap_form, word_form] }
    };
    let relators = vec![
        dual("R1a", "<00 01>^2", None, "a^2", None),
        dual("R1b", "(<01 10> <01 11>)^3", None, "b^3", None),
        dual("R1c", "(<00 01> <01 10> <01 11>)^4", None, "(a b)^4", None),
        dual("R2", "<1 01>^<1 00>", Some("<00 01>"), "c^(a c)", Some("a")),
        dual(
            "R3",
            "<1 00>",
            Some("<10 000> <11 001>"),
            "c",
            Some("a^(b c a c a a^(b a)) a^(b^-1 c a c a a^(b^-1 a))"),
        ),
        dual(
            "R4a",
            "[<00 010>, <10 111>]",
            None,
            "[a^(b^-1 c a c), a^(b^-1 c a c a^b a^(b^-1 a))]",
            None,
        ),
        dual(
            "R4b",
            "[<00 011>, <10 111>]",
            None,
            "[a^(b c a c), a^(b^-1 c a c a^b a^(b^-1 a))]",
            None,
        ),
        dual(
            "R5",
            "[<000 010>, <10 110>]",
            None,
            "[a^(b c a^(b c a)), a^(b c a c a^b a^(b^-1 a))]",
            None,
        ),
    ];
    Presentation {
        name: "p3".into(),
        generators: vec!["a".into(), "b".into(), "c".into()],
        relators,
        genset: genset_abc(),
    }
}

/// The Knuth-Bendix-shortened list: same normal closure as the p3 words.
pub fn presentation_p3_kb() -> Presentation {
    let relators = vec![
        relator_word("KB1", "a^2"),
        relator_word("KB2", "b^3"),
        relator_word("KB3", "(a b)^4"),
        relator_word("KB4", "c^-1 (a c)^2 a"),
        relator_word("KB5", "(c a b^-1 a b a)^2 c b (c a b a b^-1 a)^2"),
        relator_word(
            "KB6",
            "a (c b)^2 a (b^-1 c)^2 b c a b c b^-1 c a b^-1 a c b^-1 (c b)^2 a b^-1",
        ),
        relator_word(
            "KB7",
            "a b^-1 c b c (a b^-1)^2 c b c b^-1 a (b^-1 c)^2 b a b c b^-1 c a b^-1",
        ),
        relator_word(
            "KB8",
            "c a (b^-1 c)^2 b a c a b a c b c (b^-1 c a)^2 b (c b^-1)^2 (a c b)^2 c b^-1 c a b^-1",
        ),
    ];
    Presentation {
        name: "p3-kb".into(),
        generators: vec!["a".into(), "b".into(), "c".into()],
        relators,
        genset: genset_abc(),
    }
}

/// The seven relators of the two-generator presentation.
pub fn presentation_2gen() -> Presentation {
    let relators = vec![
        relator_word("T1", "u^6"),
        relator_word("T2", "v^3"),
        relator_word("T3", "(u^3 v)^4"),
        relator_word(
            "T4",
            "v^-1 u (u^2 v^-1)^2 u^3 v u^-1 v^-1 u^3 v u \
             (u v u^2 (u v^-1 u^3 v)^3)^2 u v^-1 u^3 v^-1",
        ),
        relator_word(
            "T5",
            "u v^-1 u^3 v^-1 u^-2 v^-1 u v u^2 v^-1 u^-1 v u^2 v^-1 u v u^-1 \
             (u^-1 v^-1)^2 u^3 v u^-1",
        ),
        relator_word("T6", "v (u v^-1 u^3 v^-1)^2 u^-1 v^-1 u^3 v^-1 u^-1 v^-1 u^3 v"),
        relator_word(
            "T7",
            "u v u^3 v u v^-1 u^-2 v^-1 u (u^2 v)^2 (u^2 v^-1)^2 u^3 v u^-2 v^-1 u^3 v",
        ),
    ];
    Presentation {
        name: "two-gen".into(),
        generators: vec!["u".into(), "v".into()],
        relators,
        genset: genset_uv(),
    }
}

/// The fourteen relations of the four-generator presentation, with the
/// auxiliary C_n / X_n / pi_n formulas expanded over {A, B, C, pi0}.
pub fn presentation_cfp() -> Presentation {
    let c = |n| derived_cfp_word(DerivedKind::C, n).unwrap();
    let x = |n| derived_cfp_word(DerivedKind::X, n).unwrap();
    let pi = |n| derived_cfp_word(DerivedKind::Pi, n).unwrap();
    let ab1 = || WordExpr::product(vec![WordExpr::gen("A"), WordExpr::gen("B").inverse()]);
    let prod = |v: Vec<WordExpr>| WordExpr::product(v);
    let relators = vec![
        Relator::from_word("CFP1", ab1().commutator(x(2))),
        Relator::from_word("CFP2", ab1().commutator(x(3))),
        Relator::equality("CFP3", c(1), prod(vec![WordExpr::gen("B"), c(2)])),
        Relator::equality("CFP4", prod(vec![c(2), x(2)]), prod(vec![WordExpr::gen("B"), c(3)])),
        Relator::equality("CFP5", prod(vec![c(1), WordExpr::gen("A")]), c(2).power(2)),
        Relator::from_word("CFP6", c(1).power(3)),
        Relator::from_word("CFP7", pi(1).power(2)),
        Relator::equality("CFP8", prod(vec![pi(1), pi(3)]), prod(vec![pi(3), pi(1)])),
        Relator::from_word("CFP9", prod(vec![pi(2), pi(1)]).power(3)),
        Relator::equality("CFP10", prod(vec![x(3), pi(1)]), prod(vec![pi(1), x(3)])),
        Relator::equality(
            "CFP11",
            prod(vec![pi(1), x(2)]),
            prod(vec![WordExpr::gen("B"), pi(2), pi(1)]),
        ),
        Relator::equality(
            "CFP12",
            prod(vec![pi(2), WordExpr::gen("B")]),
            prod(vec![WordExpr::gen("B"), pi(3)]),
        ),
        Relator::equality("CFP13", prod(vec![pi(1), c(3)]), prod(vec![c(3), pi(2)])),
        Relator::from_word("CFP14", prod(vec![pi(1), c(2)]).power(3)),
    ];
    Presentation {
        name: "cfp".into(),
        generators: vec!["A".into(), "B".into(), "C".into(), "pi0".into()],
        relators,
        genset: genset_cfp(),
    }
}

/// The eight closed-form swap products for the derived cfp elements.
pub fn presentation_cfp_lemma() -> Presentation {
    let c = |n| derived_cfp_word(DerivedKind::C, n).unwrap();
    let x = |n| derived_cfp_word(DerivedKind::X, n).unwrap();
    let pi = |n| derived_cfp_word(DerivedKind::Pi, n).unwrap();
    let relators = vec![
        Relator::equality("L-i", expr("A B^-1"), expr("<00 01> <01 10> <0 10>")),
        Relator::equality("L-ii", x(2), expr("<0 11> <00 01> <00 010> <010 011> <0 11>")),
        Relator::equality("L-iii", x(3), expr("<0 111> <00 01> <00 010> <010 011> <0 111>")),
        Relator::equality("L-iv", c(2), expr("<0 10> <0 111> <110 111>")),
        Relator::equality(
            "L-v",
            c(3),
            expr("<0 110> <10 111> <0 100> <0 101> <10 110> <110 111>"),
        ),
        Relator::equality("L-vi", pi(1), expr("<10 110>")),
        Relator::equality("L-vii", pi(2), expr("<0 11> <00 010> <0 11>")),
        Relator::equality("L-viii", pi(3), expr("<0 111> <00 010> <0 111>")),
    ];
    Presentation {
        name: "cfp-lemma".into(),
        generators: vec!["A".into(), "B".into(), "C".into(), "pi0".into()],
        relators,
        genset: genset_cfp(),
    }
}

/// The generator identities exhibiting a, b, c inside <A, B, C, pi0>.
pub fn presentation_prop51() -> Presentation {
    let relators = vec![
        relator_eq("P51-1", "pi0^(A C)", "<1 00>"),
        relator_eq("P51-2", "C pi0", "<10 11>"),
        relator_eq("P51-3", "(C pi0)^(A C)", "<00 01>"),
        relator_eq("P51-4", "pi0^(B^-1 C)", "<10 110>"),
        relator_eq("P51-5", "pi0^(B^-1 C) C pi0 B", "<110 111>"),
        relator_eq(
            "P51-6",
            "<10 110>^(<110 111> <10 11> <0 10> <10 11>)",
            "<01 10>",
        ),
    ];
    Presentation {
        name: "prop51".into(),
        generators: vec!["A".into(), "B".into(), "C".into(), "pi0".into()],
        relators,
        genset: genset_cfp(),
    }
}

/// The generator conversion formulas between the abc and uv sets, checked
/// in V with both sets of images available.
pub fn presentation_tietze_uv() -> Presentation {
    let relators = vec![
        relator_eq("TZ-a", "a", "u^3"),
        relator_eq("TZ-b", "b", "v"),
        relator_eq("TZ-c", "c", "(u^3)^(v u^-2 v u^3 v) (u^3)^(v u^-1 v u^3 v)"),
        relator_eq("TZ-u", "u", "a (a^b a^(b^-1))^(c a c a^b a^(b^-1 a))"),
        relator_eq("TZ-s1", "<10 000>", "(u^3)^(v u^-2 v u^3 v)"),
        relator_eq("TZ-s2", "<11 001>", "(u^3)^(v u^-1 v u^3 v)"),
    ];
    Presentation {
        name: "tietze-uv".into(),
        generators: vec!["a".into(), "b".into(), "c".into(), "u".into(), "v".into()],
        relators,
        genset: genset_abc_uv(),
    }
}

/// Every entry of the swap table as the relation "entry word = swap".
pub fn presentation_swap_table() -> Result<Presentation, PresentationError> {
    let table = SwapTable::build()?;
    let relators = table
        .iter()
        .map(|(p, word)| {
            Relator::equality(format!("{p}"), WordExpr::swap(p.clone()), word.clone())
        })
        .collect();
    Ok(Presentation {
        name: "swap-table".into(),
        generators: vec!["a".into(), "b".into(), "c".into()],
        relators,
        genset: genset_abc(),
    })
}

fn swap_word(a: &Address, b: &Address) -> WordExpr {
    WordExpr::swap(SwapPair::new(a.clone(), b.clone()).expect("incomparable"))
}

/// All unordered incomparable pairs with both lengths in 1..=max, shortlex.
fn incomparable_pairs_upto(max: usize) -> Vec<(Address, Address)> {
    let pool: Vec<Address> = crate::address::enumerate_addresses_with_cap(max, 16)
        .expect("small level")
        .into_iter()
        .filter(|a| !a.is_empty())
        .collect();
    let mut out = Vec::new();
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            if a.is_incomparable_with(b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// The order, conjugacy and split families truncated to labels of length
/// <= level. Conjugacy instances are kept exactly when both transported
/// addresses are defined; generators are realized as swap literals.
pub fn truncated_infinite_presentation(level: u32) -> Result<Presentation, PresentationError> {
    if !(1..=5).contains(&level) {
        return Err(PresentationError::LevelOutOfRange(level));
    }
    let mut relators = Vec::new();
    let pairs = incomparable_pairs_upto(level as usize);
    for (a, b) in &pairs {
        relators.push(Relator::from_word(
            format!("order <{a} {b}>"),
            swap_word(a, b).power(2),
        ));
    }
    for (a, b) in &pairs {
        for (g, d) in &pairs {
            let tau = SwapPair::new(g.clone(), d.clone()).unwrap();
            let (Some(ta), Some(tb)) = (tau.apply(a), tau.apply(b)) else {
                continue;
            };
            relators.push(Relator::equality(
                format!("conj <{a} {b}> ^ <{g} {d}>"),
                swap_word(a, b).conjugate(swap_word(g, d)),
                swap_word(&ta, &tb),
            ));
        }
    }
    if level >= 2 {
        for (a, b) in incomparable_pairs_upto(level as usize - 1) {
            let (h0, h1) = SwapPair::new(a.clone(), b.clone()).unwrap().split();
            relators.push(Relator::equality(
                format!("split <{a} {b}>"),
                swap_word(&a, &b),
                WordExpr::product(vec![WordExpr::swap(h0), WordExpr::swap(h1)]),
            ));
        }
    }
    Ok(Presentation {
        name: format!("inf-L{level}"),
        generators: vec![format!("swaps of length <= {level}")],
        relators,
        genset: genset_swaps(),
    })
}

/// The verification suite of the level-3 relation calculations: each
/// equation family enumerated over its quantifier ranges and checked in V.
pub fn presentation_section3() -> Presentation {
    Presentation {
        name: "section3".into(),
        generators: vec!["swaps of length <= 3".into()],
        relators: section3_relators(),
        genset: genset_swaps(),
    }
}

fn push_conj(rels: &mut Vec<Relator>, fam: &str, s: (&str, &str), t: (&str, &str), u: (&str, &str)) {
    let sw = |a: &str, b: &str| WordExpr::swap(pair(a, b));
    rels.push(Relator::equality(
        format!("{fam} <{} {}>^<{} {}>", s.0, s.1, t.0, t.1),
        sw(s.0, s.1).conjugate(sw(t.0, t.1)),
        sw(u.0, u.1),
    ));
}

fn push_comm(rels: &mut Vec<Relator>, fam: &str, s: (&str, &str), t: (&str, &str)) {
    let sw = |a: &str, b: &str| WordExpr::swap(pair(a, b));
    rels.push(Relator::from_word(
        format!("{fam} [<{} {}>, <{} {}>]", s.0, s.1, t.0, t.1),
        sw(s.0, s.1).commutator(sw(t.0, t.1)),
    ));
}

fn push_split(rels: &mut Vec<Relator>, fam: &str, a: &str, b: &str) {
    let sw = |a: &str, b: &str| WordExpr::swap(pair(a, b));
    rels.push(Relator::equality(
        format!("{fam} <{a} {b}>"),
        sw(a, b),
        WordExpr::product(vec![
            sw(&format!("{a}0"), &format!("{b}0")),
            sw(&format!("{a}1"), &format!("{b}1")),
        ]),
    ));
}

#[allow(clippy::too_many_lines)]
fn section3_relators() -> Vec<Relator> {
    let rels = &mut Vec::new();

    for x in X1 {
        for y in X1 {
            let (bx, by) = (bar(x), bar(y));
            push_conj(rels, "12^11", (&x.to_string(), &format!("{bx}{y}")), ("0", "1"),
                      (&bx.to_string(), &format!("{x}{y}")));
            push_conj(rels, "12^22", (&x.to_string(), &format!("{bx}{y}")),
                      (&format!("{bx}{y}"), &format!("{bx}{by}")),
                      (&x.to_string(), &format!("{bx}{by}")));
            push_conj(rels, "12^12=22", (&x.to_string(), &format!("{bx}{y}")),
                      (&x.to_string(), &format!("{bx}{by}")),
                      (&format!("{bx}{y}"), &format!("{bx}{by}")));
        }
    }
    for x in X1 {
        for y in X1 {
            for z in X1 {
                let (bx, by) = (bar(x), bar(y));
                push_conj(rels, "13^11", (&x.to_string(), &format!("{bx}{y}{z}")), ("0", "1"),
                          (&bx.to_string(), &format!("{x}{y}{z}")));
                push_conj(rels, "13^22", (&x.to_string(), &format!("{bx}{y}{z}")),
                          (&format!("{bx}{y}"), &format!("{bx}{by}")),
                          (&x.to_string(), &format!("{bx}{by}{z}")));
                push_conj(rels, "13^12=22", (&x.to_string(), &format!("{bx}{y}{z}")),
                          (&x.to_string(), &format!("{bx}{y}")),
                          (&format!("{x}{z}"), &format!("{bx}{y}")));
            }
        }
    }
    // 23^2: transport of <kappa, lambda x> by any level-2 swap
    for kappa in X2 {
        for lambda in X2 {
            if kappa == lambda {
                continue;
            }
            for x in X1 {
                let long = format!("{lambda}{x}");
                for (ta, tb) in SW2 {
                    let tau = pair(ta, tb);
                    let (Some(ia), Some(ib)) =
                        (tau.apply(&kappa.parse().unwrap()), tau.apply(&long.parse().unwrap()))
                    else {
                        continue;
                    };
                    push_conj(rels, "23^2", (kappa, &long), (ta, tb),
                              (&ia.to_string(), &ib.to_string()));
                }
            }
        }
    }
    for x in X1 {
        for y in X1 {
            let bx = bar(x);
            push_split(rels, "12-split", &x.to_string(), &format!("{bx}{y}"));
        }
    }
    for kappa in X2 {
        for lambda in X2 {
            for mu in X2 {
                if kappa == lambda || kappa == mu || lambda == mu {
                    continue;
                }
                for x in X1 {
                    push_conj(rels, "23^23=22", (kappa, &format!("{lambda}{x}")),
                              (mu, &format!("{lambda}{x}")), (kappa, mu));
                }
            }
        }
    }
    for x in X1 {
        for y in X1 {
            for z in X1 {
                let (bx, bz) = (bar(x), bar(z));
                push_conj(rels, "22^12=23", (&format!("{x}{y}"), &format!("{bx}{z}")),
                          (&x.to_string(), &format!("{bx}{bz}")),
                          (&format!("{bx}{z}"), &format!("{bx}{bz}{y}")));
                for t in X1 {
                    push_conj(rels, "23^12=23", (&format!("{x}{y}"), &format!("{bx}{z}{t}")),
                              (&x.to_string(), &format!("{bx}{z}")),
                              (&format!("{x}{t}"), &format!("{bx}{z}{y}")));
                }
            }
        }
    }
    for kappa in X2 {
        for lambda in X2 {
            if kappa == lambda {
                continue;
            }
            for x in X1 {
                let bx = bar(x);
                push_conj(rels, "23^23=k01", (kappa, &format!("{lambda}{x}")),
                          (kappa, &format!("{lambda}{bx}")),
                          (&format!("{lambda}0"), &format!("{lambda}1")));
                push_conj(rels, "23^k01=23", (kappa, &format!("{lambda}{x}")),
                          (&format!("{lambda}0"), &format!("{lambda}1")),
                          (kappa, &format!("{lambda}{bx}")));
            }
        }
    }
    for x in X1 {
        for y in X1 {
            let (bx, by) = (bar(x), bar(y));
            push_comm(rels, "[12,k01]", (&x.to_string(), &format!("{bx}{y}")),
                      (&format!("{bx}{by}0"), &format!("{bx}{by}1")));
        }
    }
    for kappa in X2 {
        for lambda in X2 {
            for mu in X2 {
                if kappa == lambda || kappa == mu || lambda == mu {
                    continue;
                }
                push_comm(rels, "[23-k0,23-k1]", (kappa, &format!("{lambda}0")),
                          (mu, &format!("{lambda}1")));
            }
        }
    }
    for kappa in X2 {
        for lambda in X2 {
            for mu in X2 {
                for nu in X2 {
                    let set = [kappa, lambda, mu, nu];
                    let distinct = (1..4).all(|i| !set[..i].contains(&set[i]));
                    if !distinct {
                        continue;
                    }
                    for x in X1 {
                        for y in X1 {
                            push_comm(rels, "[23,23]", (kappa, &format!("{lambda}{x}")),
                                      (mu, &format!("{nu}{y}")));
                        }
                    }
                }
            }
        }
    }
    for x in X1 {
        for y in X1 {
            for z in X1 {
                let (bx, by, bz) = (bar(x), bar(y), bar(z));
                push_comm(rels, "[13,23]", (&x.to_string(), &format!("{bx}{y}{z}")),
                          (&format!("{bx}{by}"), &format!("{bx}{y}{bz}")));
                push_conj(rels, "12^13=23", (&x.to_string(), &format!("{bx}{y}")),
                          (&x.to_string(), &format!("{bx}{by}{z}")),
                          (&format!("{bx}{y}"), &format!("{bx}{by}{z}")));
                push_conj(rels, "12^23=13", (&x.to_string(), &format!("{bx}{y}")),
                          (&format!("{bx}{y}"), &format!("{bx}{by}{z}")),
                          (&x.to_string(), &format!("{bx}{by}{z}")));
                push_conj(rels, "13^12=23", (&x.to_string(), &format!("{bx}{y}{z}")),
                          (&x.to_string(), &format!("{bx}{by}")),
                          (&format!("{bx}{by}"), &format!("{bx}{y}{z}")));
            }
        }
    }
    // 33^2: unordered pair of level-3 labels with distinct level-2 prefixes
    for (i, kappa) in X2.iter().enumerate() {
        for lambda in &X2[i + 1..] {
            for x in X1 {
                for y in X1 {
                    let (la, lb) = (format!("{kappa}{x}"), format!("{lambda}{y}"));
                    for (ta, tb) in SW2 {
                        let tau = pair(ta, tb);
                        let (Some(ia), Some(ib)) =
                            (tau.apply(&la.parse().unwrap()), tau.apply(&lb.parse().unwrap()))
                        else {
                            continue;
                        };
                        push_conj(rels, "33^2", (&la, &lb), (ta, tb),
                                  (&ia.to_string(), &ib.to_string()));
                    }
                }
            }
        }
    }
    for (i, kappa) in X2.iter().enumerate() {
        for lambda in &X2[i + 1..] {
            push_split(rels, "22-split", kappa, lambda);
        }
    }
    for alpha in X3 {
        for beta in X3 {
            if alpha == beta {
                continue;
            }
            for kappa in X2 {
                if alpha.starts_with(kappa) || beta.starts_with(kappa) {
                    continue;
                }
                push_conj(rels, "23^23=33", (kappa, alpha), (kappa, beta), (alpha, beta));
                push_conj(rels, "23^33=23", (kappa, alpha), (alpha, beta), (kappa, beta));
            }
        }
    }
    for kappa in X2 {
        for lambda in X2 {
            for mu in X2 {
                if kappa == lambda || kappa == mu || lambda == mu {
                    continue;
                }
                for x in X1 {
                    push_comm(rels, "[23,k01]", (kappa, &format!("{lambda}{x}")),
                              (&format!("{mu}0"), &format!("{mu}1")));
                }
            }
        }
    }
    for kappa in X2 {
        for (i, lambda) in X2.iter().enumerate() {
            for mu in &X2[i + 1..] {
                if kappa == *lambda || kappa == *mu {
                    continue;
                }
                for x in X1 {
                    for y in X1 {
                        push_comm(rels, "[k01,33]", (&format!("{kappa}0"), &format!("{kappa}1")),
                                  (&format!("{lambda}{x}"), &format!("{mu}{y}")));
                    }
                }
            }
        }
    }
    for kappa in X2 {
        for lambda in X2 {
            if kappa == lambda {
                continue;
            }
            for x in X1 {
                for y in X1 {
                    let bx = bar(x);
                    push_conj(rels, "33^k01", (&format!("{kappa}{x}"), &format!("{lambda}{y}")),
                              (&format!("{kappa}0"), &format!("{kappa}1")),
                              (&format!("{kappa}{bx}"), &format!("{lambda}{y}")));
                }
            }
        }
    }
    for kappa in X2 {
        let outside: Vec<&str> = X3.iter().copied().filter(|w| !w.starts_with(kappa)).collect();
        for &alpha in &outside {
            for (i, &beta) in outside.iter().enumerate() {
                for &gamma in &outside[i + 1..] {
                    if alpha == beta || alpha == gamma {
                        continue;
                    }
                    push_comm(rels, "[23,33]", (kappa, alpha), (beta, gamma));
                }
            }
        }
    }
    for alpha in X3 {
        for beta in X3 {
            for gamma in X3 {
                if alpha == beta || alpha == gamma || beta == gamma {
                    continue;
                }
                push_conj(rels, "33^33", (alpha, beta), (alpha, gamma), (beta, gamma));
            }
        }
    }
    let pairs3: Vec<(&str, &str)> = X3
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| X3[i + 1..].iter().map(move |&q| (p, q)))
        .collect();
    for (i, &(alpha, beta)) in pairs3.iter().enumerate() {
        for &(gamma, delta) in &pairs3[i + 1..] {
            let set = [alpha, beta, gamma, delta];
            let distinct = (1..4).all(|k| !set[..k].contains(&set[k]));
            if distinct {
                push_comm(rels, "[33,33]", (alpha, beta), (gamma, delta));
            }
        }
    }
    for x in X1 {
        for y in X1 {
            let bx = bar(x);
            push_conj(rels, "k01^12=22", (&format!("{bx}{y}0"), &format!("{bx}{y}1")),
                      (&x.to_string(), &format!("{bx}{y}")),
                      (&format!("{x}0"), &format!("{x}1")));
        }
    }
    for x in X1 {
        let bx = bar(x);
        let sub: Vec<&str> = X3.iter().copied().filter(|w| w.starts_with(bx)).collect();
        for &alpha in &sub {
            for (i, &beta) in sub.iter().enumerate() {
                for &gamma in &sub[i + 1..] {
                    if alpha == beta || alpha == gamma {
                        continue;
                    }
                    push_comm(rels, "[13,33]", (&x.to_string(), alpha), (beta, gamma));
                }
            }
        }
        for &alpha in &sub {
            for &beta in &sub {
                if alpha == beta {
                    continue;
                }
                push_conj(rels, "13^33=13", (&x.to_string(), alpha), (alpha, beta),
                          (&x.to_string(), beta));
                push_conj(rels, "33^13=13", (alpha, beta), (&x.to_string(), alpha),
                          (&x.to_string(), beta));
            }
        }
    }
    for x in X1 {
        for y in X1 {
            for z in X1 {
                for t in X1 {
                    let (bx, by) = (bar(x), bar(y));
                    push_conj(rels, "33^12=23", (&format!("{bx}{y}{z}"), &format!("{bx}{by}{t}")),
                              (&x.to_string(), &format!("{bx}{y}")),
                              (&format!("{x}{z}"), &format!("{bx}{by}{t}")));
                }
            }
        }
    }
    std::mem::take(rels)
}
