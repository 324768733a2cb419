//! The word problem in the genus-2 surface group by Dehn's algorithm,
//! justified by the metric small-cancellation condition C'(1/6).

use num::BigRational;
use wordalg::groups::{
    check_metric_condition, dehn_decide, parse_group_word, parse_presentation, replay_dehn,
    symmetrize, DehnOutcome, GroupWord,
};

fn main() {
    let p = parse_presentation(
        "generators: a b c d\n\
         relator: a b a- b- c d c- d-\n",
    )
    .unwrap();
    let gens = p.generators().clone();

    println!("symmetrized relators: {}", symmetrize(&p).len());
    let sixth = BigRational::new(1.into(), 6.into());
    let (holds, max_piece) = check_metric_condition(&p, &sixth);
    println!("C'(1/6) holds: {holds} (longest piece: {max_piece})");

    let relator = p.relators()[0].clone();
    let g = parse_group_word(&gens, "c a b-").unwrap();
    let conjugate = g.concat(&relator).concat(&g.inverse());
    println!("\ng r g⁻¹ for g = {}:", g.format(&gens));
    match dehn_decide(&conjugate, &p) {
        DehnOutcome::Trivial(steps) => {
            println!("  trivial in {} steps", steps.len());
            for s in &steps {
                println!(
                    "  rotate {}, match {} of relator {} rotation {}{}",
                    s.rotate, s.matched, s.relator, s.rotation,
                    if s.inverted { " inverted" } else { "" }
                );
            }
            let end = replay_dehn(&conjugate, &p, &steps).unwrap();
            println!("  replay ends at: {}", end.format(&gens));
            assert!(end.is_empty());
        }
        other => println!("  {other:?}"),
    }

    for text in ["a", "a b", "a b a- b-"] {
        let w = parse_group_word(&gens, text).unwrap();
        let verdict = match dehn_decide(&w, &p) {
            DehnOutcome::Trivial(_) => "trivial",
            DehnOutcome::Nontrivial => "nontrivial",
            DehnOutcome::Unsupported => "unsupported",
        };
        println!("{text:12} {verdict}");
    }

    let empty = dehn_decide(&GroupWord::empty(), &p);
    println!("{:12} {:?}", "ε", matches!(empty, DehnOutcome::Trivial(_)));
}
