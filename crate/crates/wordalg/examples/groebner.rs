//! Rewriting modulo relations: reduction with a replayable trace,
//! completion under composition, ideal membership, and normal words.

use wordalg::freealg::{parse_poly, parse_relations, MonomialOrder};
use wordalg::rewrite::{complete, is_member, normal_words, reduce, Membership, RelationSet};
use wordalg::words::Alphabet;

fn main() {
    let xy = Alphabet::new("xy").unwrap();
    let commutator = RelationSet::new(
        xy.clone(),
        MonomialOrder::DegLex,
        parse_relations(&xy, "y*x - x*y\n").unwrap(),
    )
    .unwrap();

    let p = parse_poly(&xy, "y*x*y*x").unwrap();
    let trace = reduce(&p, &commutator);
    println!("y*x*y*x reduces to {}", trace.result);
    print!("{}", trace.render_log(&xy));
    trace.verify(&p, &commutator).unwrap();

    let words: Vec<String> =
        normal_words(&commutator, 3).iter().map(|w| xy.format(w)).collect();
    println!("\nnormal words of length ≤ 3: {}", words.join(" "));

    let start = RelationSet::new(
        xy.clone(),
        MonomialOrder::DegLex,
        parse_relations(&xy, "y*y - x*x\n").unwrap(),
    )
    .unwrap();
    let (closed, status) = complete(&start, 8);
    println!("\ncompleting {{y² − x²}}: {status:?}");
    for poly in closed.polys() {
        println!("  {poly}");
    }

    let h = parse_poly(&xy, "y*y*x - x*y*y").unwrap();
    match is_member(&h, &commutator, 8) {
        Membership::InIdeal(trace) => {
            println!("\ny²x − xy² lies in the commutator ideal ({} steps)", trace.steps.len());
        }
        other => println!("\nunexpected: {other:?}"),
    }
}
