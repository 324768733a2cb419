//! Regular words over a binary alphabet: testing, counting, and the
//! factorization into a nonincreasing product of regular words.

use wordalg::words::{cfl_factorize, generate_regular, is_assoc_regular, Alphabet};

fn main() {
    let ab = Alphabet::new("ab").unwrap();

    for text in ["ba", "ab", "bab", "bba", "aab"] {
        let w = ab.word(text).unwrap();
        let verdict = if is_assoc_regular(&w).unwrap() { "regular" } else { "not regular" };
        println!("{text:4} {verdict}");
    }

    let words = generate_regular(&ab, 8);
    let mut counts = vec![0usize; 9];
    for w in &words {
        counts[w.len()] += 1;
    }
    println!("\nregular words by length: {:?}", &counts[1..]);

    let w = ab.word("babbaabab").unwrap();
    let factors: Vec<String> =
        cfl_factorize(&w).unwrap().iter().map(|f| ab.format(f)).collect();
    println!("\nbabbaabab = {}", factors.join(" · "));
}
