//! The canonical bracketing of a regular word, its expansion in the free
//! algebra, and the basis of the free Lie algebra it generates.

use wordalg::freealg::{expand_bracket, leading_monomial, lie_basis, MonomialOrder};
use wordalg::words::{shirshov_bracketing, Alphabet};

fn main() {
    let xy = Alphabet::new("xy").unwrap();

    for text in ["yx", "yxx", "yyx", "yxyxx"] {
        let w = xy.word(text).unwrap();
        let t = shirshov_bracketing(&w).unwrap();
        let p = expand_bracket(&t, &xy);
        let (lead, coeff) = leading_monomial(&p, MonomialOrder::DegLex).unwrap();
        println!("{text:6} → {:14} lead {} ({coeff})", t.format(&xy), xy.format(&lead));
    }

    println!("\nLie basis through degree 4:");
    for t in lie_basis(&xy, 4) {
        let w = t.flatten();
        println!("  deg {} {:12} = {}", w.len(), t.format(&xy), expand_bracket(&t, &xy));
    }
}
