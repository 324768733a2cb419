//! Van der Waerden numbers by backtracking: W(3,2) = 9 and W(4,2) = 35,
//! each with a longest witness coloring.

use wordalg::ramsey::{find_mono_ap, vdw_number, VdwResult};

fn digits(colors: &[u8]) -> String {
    colors.iter().map(|c| char::from(b'0' + c)).collect()
}

fn report(n: usize, k: usize, max: usize) {
    match vdw_number(n, k, max) {
        VdwResult::Found { value, witness } => {
            println!("W({n},{k}) = {value}");
            println!("  witness of length {}: {}", witness.len(), digits(&witness));
            assert!(find_mono_ap(&witness, n).is_none());
        }
        VdwResult::NotFoundUpTo { bound, witness } => {
            println!("W({n},{k}) > {bound}, e.g. {}", digits(&witness));
        }
    }
}

fn main() {
    report(3, 2, 20);
    report(4, 2, 40);
    report(3, 3, 30);
    report(3, 2, 5);

    let coloring = [0, 1, 1, 0, 1, 0, 0, 1];
    match find_mono_ap(&coloring, 3) {
        Some(ap) => println!(
            "\n{} has a mono 3-AP: start {}, step {}, color {}",
            digits(&coloring), ap.start, ap.step, ap.color
        ),
        None => println!("\n{} has no mono 3-AP", digits(&coloring)),
    }
}
