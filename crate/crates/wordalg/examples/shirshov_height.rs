//! Shirshov n-divisibility and height: witnesses, decompositions, and an
//! exhaustive survey over short binary words.

use wordalg::height::{height_over, height_survey, is_n_divisible};
use wordalg::words::{words_up_to, Alphabet};

fn main() {
    let ab = Alphabet::new("ab").unwrap();

    for text in ["ba", "ab", "bbaba", "aabb"] {
        let w = ab.word(text).unwrap();
        match is_n_divisible(&w, 2) {
            Some(witness) => {
                let parts: Vec<String> = witness.parts.iter().map(|p| ab.format(p)).collect();
                let prefix = if witness.prefix.is_empty() {
                    "ε".to_string()
                } else {
                    ab.format(&witness.prefix)
                };
                println!("{text:6} 2-divisible: prefix {prefix}, parts {}", parts.join(" "));
            }
            None => println!("{text:6} not 2-divisible"),
        }
    }

    // words that avoid 2-divisibility are exactly the nondecreasing ones
    let sorted = |w: &wordalg::Word| w.ranks().windows(2).all(|p| p[0] <= p[1]);
    let agree = words_up_to(&ab, 9)
        .filter(|w| !w.is_empty())
        .all(|w| (is_n_divisible(&w, 2).is_none()) == sorted(&w));
    println!("\nnon-2-divisible = nondecreasing on all binary words ≤ 9: {agree}");

    let allowed: Vec<_> = words_up_to(&ab, 2).filter(|w| !w.is_empty()).collect();
    let w = ab.word("abbaba").unwrap();
    let d = height_over(&w, &allowed).unwrap();
    let blocks: Vec<String> =
        d.blocks.iter().map(|(u, k)| format!("{}^{k}", ab.format(u))).collect();
    println!("abbaba over words of length ≤ 2: height {} as {}", d.height(), blocks.join(" "));

    println!("\n{}", height_survey(&ab, 3, 10).unwrap());
}
