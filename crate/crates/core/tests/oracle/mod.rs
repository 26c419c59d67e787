//! Test-support: a deterministic RNG and an independent pointwise oracle.
//! The oracle compares elements by raw string prefix substitution over
//! every address of the elements' maximum depth; it shares no code with
//! the canonical-form equality it cross-checks.
#![allow(dead_code)] // each test target uses its own subset

use cantor_swaps::address::{Address, Letter, SwapPair};
use cantor_swaps::element::VElement;

/// xorshift64*; fixed seeds keep the suites reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

pub fn random_address(rng: &mut Rng, min_len: usize, max_len: usize) -> Address {
    let len = min_len + rng.below(max_len - min_len + 1);
    let letters = (0..len)
        .map(|_| if rng.next() & 1 == 0 { Letter::Zero } else { Letter::One })
        .collect();
    Address::from_letters(letters)
}

/// A uniform-ish random swap with label lengths 1..=4.
pub fn random_swap(rng: &mut Rng) -> SwapPair {
    loop {
        let a = random_address(rng, 1, 4);
        let b = random_address(rng, 1, 4);
        if let Ok(pair) = SwapPair::new(a, b) {
            return pair;
        }
    }
}

/// A random product of at most 8 swaps with labels of length <= 3, depth
/// capped so that the pointwise oracle stays cheap.
pub fn random_element(rng: &mut Rng) -> VElement {
    loop {
        let n = 1 + rng.below(8);
        let mut e = VElement::identity();
        for _ in 0..n {
            let swap = loop {
                let a = random_address(rng, 1, 3);
                let b = random_address(rng, 1, 3);
                if let Ok(pair) = SwapPair::new(a, b) {
                    break pair;
                }
            };
            e = e.compose(&VElement::from_swap_pair(&swap));
        }
        if e.max_depth() <= 12 {
            return e;
        }
    }
}

fn string_table(e: &VElement) -> Vec<(String, String)> {
    e.pairs().iter().map(|(d, r)| (bits(d), bits(r))).collect()
}

fn bits(a: &Address) -> String {
    a.letters().iter().map(|l| l.as_char()).collect()
}

fn image(table: &[(String, String)], point: &str) -> String {
    for (d, r) in table {
        if let Some(rest) = point.strip_prefix(d.as_str()) {
            return format!("{r}{rest}");
        }
    }
    panic!("point {point} shorter than the table depth");
}

/// Depth-N comparison: equal iff the images of every address of length
/// N = max depth over both elements agree.
pub fn pointwise_equal(f: &VElement, g: &VElement) -> bool {
    let n = f.max_depth().max(g.max_depth());
    let tf = string_table(f);
    let tg = string_table(g);
    for bitsv in 0..(1u64 << n) {
        let point: String =
            (0..n).map(|i| if bitsv >> i & 1 == 0 { '0' } else { '1' }).collect();
        if image(&tf, &point) != image(&tg, &point) {
            return false;
        }
    }
    true
}
