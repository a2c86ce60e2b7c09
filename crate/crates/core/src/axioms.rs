//! Law checkers for the cyclic-word structure and for finite-dimensional
//! structure-constant bialgebras.
//!
//! Every identity is evaluated exactly: a law "holds" only when its residual
//! is the literal zero sum.  The checkers never assume the theorems they
//! test — a nonzero residual is reported with the inputs that produced it.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{
    bracket, bracket_sums, cobracket, cobracket_sum, FormalSum, Tensor2, Tensor3,
};
use crate::orientation::SurfaceSymbol;
use crate::words::{Alphabet, CyclicWord, Letter, LinearWord};

pub mod structure;

pub use structure::{check_structure_constants, ScLaw, ScReport, StructureConstants};

/// Applies `id (x) cobracket` to a two-tensor.
pub fn id_tensor_cobracket(t: &Tensor2, o: &SurfaceSymbol) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((x, y), c) in t.iter() {
        for ((d1, d2), e) in cobracket(y, o).iter() {
            out.add_term((x.clone(), d1.clone(), d2.clone()), c * e);
        }
    }
    out
}

/// The action `x . (y (x) z) = [x,y] (x) z + y (x) [x,z]`, extended to sums.
pub fn act(x: &CyclicWord, t: &Tensor2, o: &SurfaceSymbol) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((y, z), c) in t.iter() {
        for (w, e) in bracket(x, y, o).iter() {
            out.add_term((w.clone(), z.clone()), c * e);
        }
        for (w, e) in bracket(x, z, o).iter() {
            out.add_term((y.clone(), w.clone()), c * e);
        }
    }
    out
}

/// `s(delta(w)) + delta(w)`; zero exactly when the cobracket is coskew.
pub fn coskew_residual(w: &CyclicWord, o: &SurfaceSymbol) -> Tensor2 {
    let d = cobracket(w, o);
    d.swap().add(&d)
}

/// `(id + e + e^2)(id (x) delta)(delta(w))`; zero exactly for co-Jacobi.
pub fn cojacobi_residual(w: &CyclicWord, o: &SurfaceSymbol) -> Tensor3 {
    let t = id_tensor_cobracket(&cobracket(w, o), o);
    let r = t.rotate();
    t.add(&r).add(&r.rotate())
}

/// `[v,w] + [w,v]`; zero exactly when the bracket is antisymmetric.
pub fn antisymmetry_residual(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol) -> FormalSum {
    bracket(v, w, o).add(&bracket(w, v, o))
}

/// `[u,[v,w]] + [v,[w,u]] + [w,[u,v]]`; zero exactly for Jacobi.
pub fn jacobi_residual(
    u: &CyclicWord,
    v: &CyclicWord,
    w: &CyclicWord,
    o: &SurfaceSymbol,
) -> FormalSum {
    let us = FormalSum::single(u.clone());
    let vs = FormalSum::single(v.clone());
    let ws = FormalSum::single(w.clone());
    let t1 = bracket_sums(&us, &bracket(v, w, o), o);
    let t2 = bracket_sums(&vs, &bracket(w, u, o), o);
    let t3 = bracket_sums(&ws, &bracket(u, v, o), o);
    t1.add(&t2).add(&t3)
}

/// `delta([v,w]) - v . delta(w) + w . delta(v)`; zero exactly when bracket
/// and cobracket are compatible.
pub fn compatibility_residual(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol) -> Tensor2 {
    let lhs = cobracket_sum(&bracket(v, w, o), o);
    let rhs = act(v, &cobracket(w, o), o).sub(&act(w, &cobracket(v, o), o));
    lhs.sub(&rhs)
}

/// `[,] applied to delta(w)`; zero exactly when the structure is involutive.
pub fn involutivity_residual(w: &CyclicWord, o: &SurfaceSymbol) -> FormalSum {
    let mut out = FormalSum::zero();
    for ((x, y), c) in cobracket(w, o).iter() {
        for (word, e) in bracket(x, y, o).iter() {
            out.add_term(word.clone(), c * e);
        }
    }
    out
}

/// The offending value of a failed law.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Residual {
    Zero,
    Sum(FormalSum),
    Pairs(Tensor2),
    Triples(Tensor3),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Zero => true,
            Residual::Sum(s) => s.is_zero(),
            Residual::Pairs(t) => t.is_zero(),
            Residual::Triples(t) => t.is_zero(),
        }
    }

    pub fn lines(&self) -> Vec<String> {
        match self {
            Residual::Zero => alloc::vec![String::from("0")],
            Residual::Sum(s) => s.lines(),
            Residual::Pairs(t) => t.lines(),
            Residual::Triples(t) => t.lines(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

/// Outcome of one law check: the law holds exactly when the residual is the
/// zero sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LawReport {
    pub law: &'static str,
    pub holds: bool,
    pub residual: Residual,
    pub witness: String,
}

impl LawReport {
    fn new(law: &'static str, residual: Residual, witness: String) -> Self {
        LawReport { law, holds: residual.is_zero(), residual, witness }
    }
}

/// Checks coskew symmetry and co-Jacobi for one word; holds iff both vanish.
pub fn check_coalgebra(w: &CyclicWord, o: &SurfaceSymbol) -> LawReport {
    let witness = w.text();
    let coskew = coskew_residual(w, o);
    if !coskew.is_zero() {
        return LawReport::new("coalgebra", Residual::Pairs(coskew), witness);
    }
    LawReport::new("coalgebra", Residual::Triples(cojacobi_residual(w, o)), witness)
}

/// Checks antisymmetry of `[u,v]` and the Jacobi identity on `(u,v,w)`.
pub fn check_algebra(
    u: &CyclicWord,
    v: &CyclicWord,
    w: &CyclicWord,
    o: &SurfaceSymbol,
) -> LawReport {
    let witness = alloc::format!("{u}, {v}, {w}");
    let anti = antisymmetry_residual(u, v, o);
    if !anti.is_zero() {
        return LawReport::new("algebra", Residual::Sum(anti), witness);
    }
    LawReport::new("algebra", Residual::Sum(jacobi_residual(u, v, w, o)), witness)
}

/// Checks the compatibility equation on `(v, w)`.
pub fn check_compatibility(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol) -> LawReport {
    let witness = alloc::format!("{v}, {w}");
    LawReport::new("compatibility", Residual::Pairs(compatibility_residual(v, w, o)), witness)
}

/// Checks involutivity on `w`.
pub fn check_involutive(w: &CyclicWord, o: &SurfaceSymbol) -> LawReport {
    LawReport::new("involutive", Residual::Sum(involutivity_residual(w, o)), w.text())
}

/// All reduced cyclic words over `alphabet` of length `1..=max_len`,
/// deduplicated by canonical form and sorted.
pub fn exhaustive_words(alphabet: Alphabet, max_len: usize) -> Vec<CyclicWord> {
    let letters: Vec<Letter> = alphabet.letters().collect();
    let mut found: BTreeSet<CyclicWord> = BTreeSet::new();
    let mut stack: Vec<Letter> = Vec::new();
    fn extend(
        letters: &[Letter],
        stack: &mut Vec<Letter>,
        max_len: usize,
        found: &mut BTreeSet<CyclicWord>,
    ) {
        let len = stack.len();
        if len >= 1 {
            // cyclically reduced linear word: interior handled on push
            if len == 1 || stack[0] != stack[len - 1].inverse() {
                found.insert(
                    CyclicWord::from_reduced(&LinearWord::new(stack.clone()))
                        .expect("constructed reduced"),
                );
            }
        }
        if len == max_len {
            return;
        }
        for &x in letters {
            if len > 0 && x == stack[len - 1].inverse() {
                continue;
            }
            stack.push(x);
            extend(letters, stack, max_len, found);
            stack.pop();
        }
    }
    extend(&letters, &mut stack, max_len, &mut found);
    found.into_iter().collect()
}

/// A deterministic corpus: exhaustive up to length `min(4, max_len)`, plus
/// `samples` seeded random words of length up to `max_len`, deduplicated.
pub fn corpus(alphabet: Alphabet, max_len: usize, samples: usize, seed: u64) -> Vec<CyclicWord> {
    let exhaustive_to = max_len.min(4);
    let mut set: BTreeSet<CyclicWord> =
        exhaustive_words(alphabet, exhaustive_to).into_iter().collect();
    if max_len > exhaustive_to {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let len = rng.gen_range(exhaustive_to + 1..=max_len);
            set.insert(random_reduced_word(alphabet, len, &mut rng));
        }
    }
    set.into_iter().collect()
}

/// A uniform-ish random cyclically reduced word of exactly `len` letters.
fn random_reduced_word(alphabet: Alphabet, len: usize, rng: &mut ChaCha8Rng) -> CyclicWord {
    let letters: Vec<Letter> = alphabet.letters().collect();
    loop {
        let mut word: Vec<Letter> = Vec::with_capacity(len);
        for i in 0..len {
            let x = loop {
                let cand = letters[rng.gen_range(0..letters.len())];
                if i == 0 || cand != word[i - 1].inverse() {
                    break cand;
                }
            };
            word.push(x);
        }
        if len == 1 || word[0] != word[len - 1].inverse() {
            return CyclicWord::from_reduced(&LinearWord::new(word)).expect("reduced by choice");
        }
    }
}

/// Which laws a suite run covers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LawSelection {
    All,
    Algebra,
    Coalgebra,
    Compatibility,
    Involutive,
}

impl LawSelection {
    fn wants(self, law: &str) -> bool {
        match self {
            LawSelection::All => true,
            LawSelection::Algebra => law == "antisymmetry" || law == "jacobi",
            LawSelection::Coalgebra => law == "coskew" || law == "co-jacobi",
            LawSelection::Compatibility => law == "compatibility",
            LawSelection::Involutive => law == "involutivity",
        }
    }
}

/// One line of a suite run: a law, how many tuples were checked, and the
/// first failure if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LawLine {
    pub law: &'static str,
    pub checked: usize,
    pub failure: Option<LawReport>,
}

/// Outcome of a whole law-suite run over a seeded corpus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub corpus_size: usize,
    pub lines: Vec<LawLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.failure.is_none())
    }
}

/// Runs the selected laws over a deterministic corpus.
///
/// Unary laws run on every corpus word; binary and ternary laws run on
/// `samples` seeded tuples drawn from the corpus.
pub fn run_law_suite(
    o: &SurfaceSymbol,
    max_len: usize,
    samples: usize,
    seed: u64,
    laws: LawSelection,
) -> SuiteReport {
    let words = corpus(o.alphabet(), max_len, samples, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut pick = |n: usize| -> Vec<usize> {
        (0..n).map(|_| rng.gen_range(0..words.len())).collect()
    };
    let pairs: Vec<(usize, usize)> = {
        let a = pick(samples);
        let b = pick(samples);
        a.into_iter().zip(b).collect()
    };
    let triples: Vec<(usize, usize, usize)> = {
        let a = pick(samples);
        let b = pick(samples);
        let c = pick(samples);
        a.into_iter().zip(b).zip(c).map(|((x, y), z)| (x, y, z)).collect()
    };

    let run_unary = |law: &'static str, f: &dyn Fn(&CyclicWord) -> Residual| {
        let mut failure = None;
        for w in &words {
            let res = f(w);
            if !res.is_zero() {
                failure = Some(LawReport { law, holds: false, residual: res, witness: w.text() });
                break;
            }
        }
        LawLine { law, checked: words.len(), failure }
    };
    let mut lines = Vec::new();
    if laws.wants("coskew") {
        lines.push(run_unary("coskew", &|w| Residual::Pairs(coskew_residual(w, o))));
    }
    if laws.wants("co-jacobi") {
        lines.push(run_unary("co-jacobi", &|w| Residual::Triples(cojacobi_residual(w, o))));
    }
    if laws.wants("antisymmetry") {
        let mut failure = None;
        for &(i, j) in &pairs {
            let res = antisymmetry_residual(&words[i], &words[j], o);
            if !res.is_zero() {
                failure = Some(LawReport::new(
                    "antisymmetry",
                    Residual::Sum(res),
                    alloc::format!("{}, {}", words[i], words[j]),
                ));
                break;
            }
        }
        lines.push(LawLine { law: "antisymmetry", checked: pairs.len(), failure });
    }
    if laws.wants("jacobi") {
        let mut failure = None;
        for &(i, j, k) in &triples {
            let res = jacobi_residual(&words[i], &words[j], &words[k], o);
            if !res.is_zero() {
                failure = Some(LawReport::new(
                    "jacobi",
                    Residual::Sum(res),
                    alloc::format!("{}, {}, {}", words[i], words[j], words[k]),
                ));
                break;
            }
        }
        lines.push(LawLine { law: "jacobi", checked: triples.len(), failure });
    }
    if laws.wants("compatibility") {
        let mut failure = None;
        for &(i, j) in &pairs {
            let res = compatibility_residual(&words[i], &words[j], o);
            if !res.is_zero() {
                failure = Some(LawReport::new(
                    "compatibility",
                    Residual::Pairs(res),
                    alloc::format!("{}, {}", words[i], words[j]),
                ));
                break;
            }
        }
        lines.push(LawLine { law: "compatibility", checked: pairs.len(), failure });
    }
    if laws.wants("involutivity") {
        lines.push(run_unary("involutivity", &|w| Residual::Sum(involutivity_residual(w, o))));
    }
    SuiteReport { corpus_size: words.len(), lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symbol(text: &str) -> SurfaceSymbol {
        SurfaceSymbol::parse(text).unwrap()
    }
    fn word(text: &str, n: u32) -> CyclicWord {
        CyclicWord::parse(text, Alphabet::new(n)).unwrap().unwrap()
    }

    #[test]
    fn corpus_tiny_case_is_exhaustive() {
        let words = corpus(Alphabet::new(1), 2, 100, 7);
        let texts: Vec<String> = words.iter().map(|w| w.text()).collect();
        assert_eq!(texts, vec!["a1", "a1a1", "A1", "A1A1"]);
    }

    #[test]
    fn corpus_is_deterministic_and_reduced() {
        let a = corpus(Alphabet::new(2), 6, 40, 11);
        let b = corpus(Alphabet::new(2), 6, 40, 11);
        assert_eq!(a, b);
        for w in &a {
            assert!(w.canonical().is_reduced());
            assert_ne!(w.letters()[0], w.letters()[w.len() - 1].inverse());
        }
        let c = corpus(Alphabet::new(2), 6, 40, 12);
        assert_ne!(a, c);
    }

    #[test]
    fn exhaustive_counts_over_two_generators() {
        // transfer-matrix couts for cyclically reduced cyclic words over A_2
        let counts = [4usize, 8, 12, 26, 52];
        for (i, &expected) in counts.iter().enumerate() {
            let len = i + 1;
            let all = exhaustive_words(Alphabet::new(2), len);
            let at_len = all.iter().filter(|w| w.len() == len).count();
            assert_eq!(at_len, expected, "length {len}");
        }
    }

    #[test]
    fn coalgebra_laws_hold_on_small_words() {
        let o = symbol("a1a2A1A2");
        for text in ["a1", "a1a2", "a1a1a2", "a1a1a2a2a1a2", "A1A1A2A2"] {
            let report = check_coalgebra(&word(text, 2), &o);
            assert!(report.holds, "{}: {}", report.witness, report.residual);
        }
    }

    #[test]
    fn algebra_laws_hold_on_small_triples() {
        let o = symbol("a1a2A1A2");
        let degenerate = check_algebra(&word("a1", 2), &word("a1", 2), &word("a2", 2), &o);
        assert!(degenerate.holds);
        let report = check_algebra(&word("a1", 2), &word("a2", 2), &word("a1a2", 2), &o);
        assert!(report.holds, "{}", report.residual);
    }

    #[test]
    fn compatibility_holds_on_small_pairs() {
        let o = symbol("a1a2A1A2");
        assert!(check_compatibility(&word("a1a2", 2), &word("a1a2", 2), &o).holds);
        assert!(check_compatibility(&word("a1", 2), &word("a2", 2), &o).holds);
        assert!(check_compatibility(&word("a1a1a2", 2), &word("A1A1A2A2", 2), &o).holds);
    }

    #[test]
    fn involutivity_holds_on_small_words() {
        let o = symbol("a1a2A1A2");
        for text in ["a1", "a1a1a2", "a1a1a2a2a1a2", "A1A1A2A2"] {
            assert!(check_involutive(&word(text, 2), &o).holds);
        }
    }

    #[test]
    fn suite_runs_and_passes_on_a_small_budget() {
        let o = symbol("a1a2A1A2");
        let report = run_law_suite(&o, 4, 12, 5, LawSelection::All);
        assert!(report.passed());
        assert_eq!(report.lines.len(), 6);
        let report = run_law_suite(&o, 4, 6, 5, LawSelection::Coalgebra);
        assert_eq!(report.lines.len(), 2);
    }
}
