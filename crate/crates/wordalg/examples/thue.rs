//! Square-free and cube-free words from iterated morphisms, and the two
//! classical tests for square-free-preserving substitutions.

use wordalg::morphisms::{
    apply_morphism, check_thue3_conditions, crochemore_test, is_power_free, iterate_fixed_point,
    thue_binary, thue_ternary,
};

fn main() {
    let binary = thue_binary();
    let tm = iterate_fixed_point(&binary, 'a', 64).unwrap();
    println!("Thue–Morse prefix ({} letters): {}", tm.len(), binary.target().format(&tm));
    println!("  cube-free: {}", is_power_free(&tm, 3).is_none());
    println!("  square-free: {}", is_power_free(&tm, 2).is_none());

    let ternary = thue_ternary();
    let sf = iterate_fixed_point(&ternary, 'a', 120).unwrap();
    println!("\nternary fixed point ({} letters):", sf.len());
    println!("  {}", ternary.target().format(&sf));
    println!("  square-free: {}", is_power_free(&sf, 2).is_none());

    let report = check_thue3_conditions(&ternary);
    println!("\nsquare-free substitution hypotheses for the ternary morphism:");
    println!("  short square-free words keep square-free images: {}", report.cond1);
    println!("  no image is a factor of another image: {}", report.cond2);

    let (k, ok) = crochemore_test(&ternary);
    println!("  Crochemore bound k = {k}, exhaustive check up to k: {ok}");

    // the binary morphism fixes a word with squares, and fails the test
    let (k, ok) = crochemore_test(&binary);
    println!("\nbinary morphism: Crochemore bound k = {k}, check: {ok}");

    let w = binary.source().word("aa").unwrap();
    let image = apply_morphism(&binary, &w).unwrap();
    println!("  φ(aa) = {} contains a square: {}", binary.target().format(&image),
        is_power_free(&image, 2).is_some());
}
