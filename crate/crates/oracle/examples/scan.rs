//! Scratch scanner: prints oracle values for the fixtures frozen in tests.

use goldman_turaev::axioms::corpus;
use goldman_turaev::orientation::SurfaceSymbol;
use goldman_turaev::words::{Alphabet, CyclicWord};
use goldman_turaev_oracle as oracle;

fn word(text: &str, n: u32) -> CyclicWord {
    CyclicWord::parse(text, Alphabet::new(n)).unwrap().unwrap()
}

fn main() {
    let o = SurfaceSymbol::parse("a1a2A1A2").unwrap();

    println!("== cobracket(a1a1a2a2a1a2) ==");
    for ((x, y), c) in oracle::cobracket(&word("a1a1a2a2a1a2", 2), &o) {
        println!("{c:+} {x} | {y}");
    }

    println!("== bracket(a1a1a2, a1a1a2a1a1a2a1) ==");
    for (x, c) in oracle::bracket(&word("a1a1a2", 2), &word("a1a1a2a1a1a2a1", 2), &o) {
        println!("{c:+} {x}");
    }

    println!("== lp1(A1A1A2A2) listing ==");
    for p in oracle::lp1(&word("A1A1A2A2", 2), &o) {
        println!("type={} sign={} P={} Q={}", p.kind, p.sign, p.p, p.q);
    }

    println!("== lp1(a1a2A1) after reduction ==");
    let w = word("a1a2A1", 2);
    println!("reduces to {w}; |LP1| = {}", oracle::lp1(&w, &o).len());

    println!("== nonzero cobrackets per surface, corpus len<=6 ==");
    for sym in ["a1a2A1A2", "a2a1A2A1", "a1a2a3A1A2A3"] {
        let o = SurfaceSymbol::parse(sym).unwrap();
        let words = corpus(o.alphabet(), 6, 200, 20260809);
        let nonzero: Vec<String> = words
            .iter()
            .filter(|w| !oracle::cobracket(w, &o).is_empty())
            .map(|w| w.text())
            .collect();
        println!("{sym}: corpus {} words, {} with nonzero cobracket", words.len(), nonzero.len());
        for t in nonzero.iter().take(6) {
            println!("  {t}");
        }
    }
}
