//! Growth of monomial algebras through the automaton of normal words:
//! counting, classification, and the Gelfand–Kirillov estimate.

use wordalg::autalg::{
    build_normal_word_automaton, classify_growth, gk_estimate, growth, to_dot,
};
use wordalg::words::Alphabet;

fn main() {
    let xy = Alphabet::new("xy").unwrap();

    let forbid_yy = vec![xy.word("yy").unwrap()];
    let a = build_normal_word_automaton(&xy, &forbid_yy);
    println!("forbid yy: {} states, {}", a.num_states(), classify_growth(&a).unwrap());
    let v = growth(&a, 8).unwrap();
    println!("  V(0..=8) = {v:?}");
    print!("{}", to_dot(&a));

    let forbid_yx = vec![xy.word("yx").unwrap()];
    let b = build_normal_word_automaton(&xy, &forbid_yx);
    println!("\nforbid yx: {} states, {}", b.num_states(), classify_growth(&b).unwrap());
    let v = growth(&b, 6).unwrap();
    println!("  V(0..=6) = {v:?}");
    println!("  V(1000)  = {}", growth(&b, 1000).unwrap()[1000]);
    println!("  ln V(n)/ln n at n = 1000: {:.4}", gk_estimate(&b, 1000).unwrap());

    let forbid_both = vec![xy.word("yy").unwrap(), xy.word("xy").unwrap()];
    let c = build_normal_word_automaton(&xy, &forbid_both);
    println!("\nforbid yy and xy: {} states, {}", c.num_states(), classify_growth(&c).unwrap());
}
