//! Constructive procedures on top of the calculus: decomposition of an
//! arbitrary swap into the four basic generators, even factorization via
//! the split relation, and the relation-suite runner.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::address::{Address, AddressError, Letter, SwapPair};
use crate::element::VElement;
use crate::presentations::{
    presentation_2gen, presentation_cfp, presentation_cfp_lemma, presentation_p3,
    presentation_p3_kb, presentation_prop51, presentation_section3, presentation_swap_table,
    presentation_tietze_uv, truncated_infinite_presentation, EvalError, Presentation,
    PresentationError,
};
use crate::words::{GenName, Word, WordExpr};

/// Default cap on target label length for [`decompose_swap`].
pub const DEFAULT_DECOMPOSE_CAP: usize = 8;

/// Hard ceiling on the configurable cap (the search packs addresses into
/// 32-bit words).
pub const MAX_DECOMPOSE_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error(transparent)]
    Address(#[from] AddressError),
    #[error("target lengths {alpha} and {beta} exceed the cap {cap}")]
    CapExceeded { alpha: usize, beta: usize, cap: usize },
    #[error("search failed for <{0}> (should be unreachable)")]
    SearchFailed(SwapPair),
}

/// The four generators whose conjugates and splits reach every swap:
/// <00 01>, <01 10>, <10 11>, <1 00>.
pub fn basic_generators() -> [SwapPair; 4] {
    [
        SwapPair::parse("00", "01").unwrap(),
        SwapPair::parse("01", "10").unwrap(),
        SwapPair::parse("10", "11").unwrap(),
        SwapPair::parse("1", "00").unwrap(),
    ]
}

/// Expresses ⟨α β⟩ as a word in the four basic generators, by a
/// breadth-first search for a conjugator: the pair (00, 01) is driven to
/// (α, β) under the generators' partial address actions and the base swap
/// <00 01> is conjugated along the path. The address 0 is not in the orbit
/// of the action, so targets containing it take one split step first.
pub fn decompose_swap(alpha: &Address, beta: &Address) -> Result<Word, DecomposeError> {
    decompose_swap_with_cap(alpha, beta, DEFAULT_DECOMPOSE_CAP)
}

pub fn decompose_swap_with_cap(
    alpha: &Address,
    beta: &Address,
    cap: usize,
) -> Result<Word, DecomposeError> {
    let cap = cap.min(MAX_DECOMPOSE_CAP);
    let target = SwapPair::new(alpha.clone(), beta.clone())?;
    if alpha.len() > cap || beta.len() > cap {
        return Err(DecomposeError::CapExceeded {
            alpha: alpha.len(),
            beta: beta.len(),
            cap,
        });
    }
    if let Some(gen) = basic_generators().iter().find(|g| **g == target) {
        return Ok(Word::from_letters(vec![(GenName::Swap(gen.clone()), 1)]));
    }
    let zero = Address::root().child(Letter::Zero);
    if *alpha == zero || *beta == zero {
        let (h0, h1) = target.split();
        let mut letters = decompose_swap_with_cap(h0.alpha(), h0.beta(), cap + 1)?
            .letters()
            .to_vec();
        letters.extend_from_slice(decompose_swap_with_cap(h1.alpha(), h1.beta(), cap + 1)?.letters());
        return Ok(Word::from_letters(letters));
    }
    bfs_conjugator(&target).ok_or(DecomposeError::SearchFailed(target))
}

// Addresses are packed for the search as sentinel-marked bit strings:
// pack(a) = 1 followed by the letters of a, so lengths are recoverable
// from the position of the leading bit. Bit-exact with the Address form.
type Packed = u32;
type SearchState = (Packed, Packed);

fn pack(a: &Address) -> Packed {
    a.letters()
        .iter()
        .fold(1, |acc, l| (acc << 1) | u32::from(*l == Letter::One))
}

fn packed_len(v: Packed) -> u32 {
    31 - v.leading_zeros()
}

/// γ·<p q> on packed addresses; mirrors `SwapPair::apply` exactly.
fn packed_apply(v: Packed, p: Packed, q: Packed) -> Option<Packed> {
    let (lv, lp, lq) = (packed_len(v), packed_len(p), packed_len(q));
    if lv >= lp && v >> (lv - lp) == p {
        return Some((q << (lv - lp)) | (v & ((1 << (lv - lp)) - 1)));
    }
    if lv >= lq && v >> (lv - lq) == q {
        return Some((p << (lv - lq)) | (v & ((1 << (lv - lq)) - 1)));
    }
    if lv < lp && p >> (lp - lv) == v {
        return None;
    }
    if lv < lq && q >> (lq - lv) == v {
        return None;
    }
    Some(v)
}

fn bfs_conjugator(target: &SwapPair) -> Option<Word> {
    let gens = basic_generators();
    let packed_gens: [(Packed, Packed); 4] =
        gens.clone().map(|g| (pack(g.alpha()), pack(g.beta())));
    let base: SearchState = (0b100, 0b101);
    let goal = (pack(target.alpha()), pack(target.beta()));
    let max_len = target.alpha().len().max(target.beta().len()).max(2) as u32 + 2;
    let done = |state: &SearchState| *state == goal || (state.1, state.0) == goal;
    let reconstruct = |prev: &HashMap<SearchState, (SearchState, usize)>,
                       mut state: SearchState| {
        let mut path = Vec::new();
        while let Some((parent, gi)) = prev.get(&state) {
            path.push(*gi);
            state = *parent;
        }
        path.reverse();
        // <a b> = w^-1 <00 01> w with w the generator path; each generator
        // is an involution, so w^-1 is the reversed path
        let mut letters: Vec<(GenName, i8)> = Vec::new();
        for gi in path.iter().rev() {
            letters.push((GenName::Swap(gens[*gi].clone()), 1));
        }
        letters.push((GenName::Swap(gens[0].clone()), 1));
        for gi in &path {
            letters.push((GenName::Swap(gens[*gi].clone()), 1));
        }
        Word::from_letters(letters)
    };

    let mut prev: HashMap<SearchState, (SearchState, usize)> = HashMap::new();
    let mut queue = VecDeque::new();
    if done(&base) {
        return Some(reconstruct(&prev, base));
    }
    queue.push_back(base);
    let mut seen: std::collections::HashSet<SearchState> = std::collections::HashSet::new();
    seen.insert(base);
    while let Some(state) = queue.pop_front() {
        for (gi, (p, q)) in packed_gens.iter().enumerate() {
            let (Some(a), Some(b)) = (packed_apply(state.0, *p, *q), packed_apply(state.1, *p, *q))
            else {
                continue;
            };
            if packed_len(a) > max_len || packed_len(b) > max_len {
                continue;
            }
            let next = (a, b);
            if !seen.insert(next) {
                continue;
            }
            prev.insert(next, (state, gi));
            if done(&next) {
                return Some(reconstruct(&prev, next));
            }
            queue.push_back(next);
        }
    }
    None
}

/// Rewrites a product of swaps into a product-equal one of even length,
/// splitting the last factor when the input length is odd. Output length
/// is at most input length + 1.
pub fn even_factorization(word: &[SwapPair]) -> Vec<SwapPair> {
    let mut out = word.to_vec();
    if out.len() % 2 == 1 {
        let last = out.pop().expect("odd length is nonzero");
        let (h0, h1) = last.split();
        out.push(h0);
        out.push(h1);
    }
    out
}

/// True iff the relator evaluates to the identity in the generating set.
pub fn verify_relator(
    relator: &WordExpr,
    genset: &crate::presentations::GeneratingSet,
) -> Result<bool, EvalError> {
    Ok(genset.eval(relator)?.is_identity())
}

/// One failed relator: its label, display text, and the canonical dump of
/// the element it evaluated to (or the evaluation error).
#[derive(Clone, Debug)]
pub struct Failure {
    pub label: String,
    pub text: String,
    pub dump: String,
}

/// Outcome of running one suite; the suite passes iff `failures` is empty.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed_all(&self) -> bool {
        self.failures.is_empty()
    }

    /// Machine-readable line: `suite<TAB>total<TAB>passed`.
    pub fn machine_line(&self) -> String {
        format!("{}\t{}\t{}", self.suite, self.total, self.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}/{} passed", self.suite, self.passed, self.total)?;
        for failure in &self.failures {
            writeln!(f, "  FAIL {}: {}", failure.label, failure.text)?;
            for line in failure.dump.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

/// Verifies every relator of a presentation, in input order. A relator
/// passes iff all of its stored forms evaluate to the identity.
pub fn run_suite(presentation: &Presentation) -> VerificationReport {
    let mut failures = Vec::new();
    for relator in &presentation.relators {
        let mut verdict: Option<String> = None;
        for form in &relator.forms {
            match presentation.genset.eval(form) {
                Ok(e) if e.is_identity() => {}
                Ok(e) => {
                    verdict = Some(e.dump());
                    break;
                }
                Err(err) => {
                    verdict = Some(format!("evaluation error: {err}"));
                    break;
                }
            }
        }
        if let Some(dump) = verdict {
            failures.push(Failure {
                label: relator.label.clone(),
                text: relator.text.clone(),
                dump,
            });
        }
    }
    VerificationReport {
        suite: presentation.name.clone(),
        total: presentation.relators.len(),
        passed: presentation.relators.len() - failures.len(),
        failures,
    }
}

/// The built-in suite names, in `verify all` order.
pub const SUITE_NAMES: [&str; 11] = [
    "p3",
    "p3-kb",
    "two-gen",
    "cfp",
    "cfp-lemma",
    "inf-L2",
    "inf-L3",
    "swap-table",
    "prop51",
    "tietze-uv",
    "section3",
];

/// Builds a suite by CLI name.
pub fn suite_by_name(name: &str) -> Result<Option<Presentation>, PresentationError> {
    let p = match name {
        "p3" => presentation_p3(),
        "p3-kb" => presentation_p3_kb(),
        "two-gen" => presentation_2gen(),
        "cfp" => presentation_cfp(),
        "cfp-lemma" => presentation_cfp_lemma(),
        "inf-L1" => truncated_infinite_presentation(1)?,
        "inf-L2" => truncated_infinite_presentation(2)?,
        "inf-L3" => truncated_infinite_presentation(3)?,
        "swap-table" => presentation_swap_table()?,
        "prop51" => presentation_prop51(),
        "tietze-uv" => presentation_tietze_uv(),
        "section3" => presentation_section3(),
        _ => return Ok(None),
    };
    Ok(Some(p))
}

pub fn verify_prop51() -> VerificationReport {
    run_suite(&presentation_prop51())
}

pub fn verify_tietze_uv() -> VerificationReport {
    run_suite(&presentation_tietze_uv())
}

pub fn verify_section3() -> VerificationReport {
    run_suite(&presentation_section3())
}

/// Evaluates a word whose letters are all swaps into V.
pub fn eval_swap_word(word: &[SwapPair]) -> VElement {
    word.iter()
        .fold(VElement::identity(), |acc, p| acc.compose(&VElement::from_swap_pair(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{genset_abc, genset_swaps};
    use crate::words::parse;

    fn addr(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn eval_word(w: &Word) -> VElement {
        genset_swaps().eval_word(w).unwrap()
    }

    #[test]
    fn decompose_single_generator_is_short() {
        let w = decompose_swap(&addr("1"), &addr("00")).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(eval_word(&w), VElement::from_swap(&addr("1"), &addr("00")).unwrap());
    }

    #[test]
    fn decompose_root_swap_via_split() {
        let w = decompose_swap(&addr("0"), &addr("1")).unwrap();
        assert_eq!(eval_word(&w), VElement::from_swap(&addr("0"), &addr("1")).unwrap());
    }

    #[test]
    fn decompose_longer_target() {
        let w = decompose_swap(&addr("000"), &addr("11")).unwrap();
        assert_eq!(eval_word(&w), VElement::from_swap(&addr("000"), &addr("11")).unwrap());
    }

    #[test]
    fn decompose_respects_cap_and_rejects_comparable() {
        assert!(matches!(
            decompose_swap(&addr("000000000"), &addr("1")),
            Err(DecomposeError::CapExceeded { .. })
        ));
        assert!(decompose_swap(&addr("0"), &addr("00")).is_err());
    }

    #[test]
    fn even_factorization_cases() {
        let root = SwapPair::parse("0", "1").unwrap();
        let input = [root.clone()];
        let out = even_factorization(&input);
        assert_eq!(
            out,
            vec![SwapPair::parse("00", "10").unwrap(), SwapPair::parse("01", "11").unwrap()]
        );
        assert_eq!(eval_swap_word(&out), eval_swap_word(&input));

        let even = [root, SwapPair::parse("00", "01").unwrap()];
        assert_eq!(even_factorization(&even), even.to_vec());

        let odd = [
            SwapPair::parse("00", "01").unwrap(),
            SwapPair::parse("1", "00").unwrap(),
            SwapPair::parse("0", "10").unwrap(),
        ];
        let out = even_factorization(&odd);
        assert_eq!(out.len(), 4);
        assert_eq!(eval_swap_word(&out), eval_swap_word(&odd));
    }

    #[test]
    fn verify_relator_basics() {
        let abc = genset_abc();
        assert!(verify_relator(&parse("(a b)^4").unwrap(), &abc).unwrap());
        assert!(!verify_relator(&parse("a").unwrap(), &abc).unwrap());
        assert!(verify_relator(&parse("zz").unwrap(), &abc).is_err());
    }

    #[test]
    fn sabotaged_suite_reports_failure() {
        let mut p = presentation_p3();
        p.relators.push(crate::presentations::Relator::from_word("bogus", parse("a").unwrap()));
        let report = run_suite(&p);
        assert_eq!(report.total, 9);
        assert_eq!(report.passed, 8);
        assert!(!report.passed_all());
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].label, "bogus");
        assert!(report.failures[0].dump.starts_with("velement v1"));
        // deterministic: two runs produce byte-identical reports
        assert_eq!(format!("{report}"), format!("{}", run_suite(&p)));
    }

    #[test]
    fn machine_line_format() {
        let report = run_suite(&presentation_prop51());
        assert_eq!(report.machine_line(), "prop51\t6\t6");
    }

    #[test]
    fn suite_registry_is_complete() {
        for name in SUITE_NAMES {
            assert!(suite_by_name(name).unwrap().is_some(), "missing suite {name}");
        }
        assert!(suite_by_name("nope").unwrap().is_none());
    }
}
