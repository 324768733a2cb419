//! Combinatorics of words in the service of noncommutative algebra.
//!
//! The crate is organized around a handful of classical algorithmic topics:
//!
//! * [`words`] — associative and nonassociative regular (Lyndon–Shirshov)
//!   words: testing, generation, Chen–Fox–Lyndon factorization, canonical
//!   bracketing, and the `fgf`/semiregular machinery.
//! * [`freealg`] — noncommutative polynomials over the rationals, monomial
//!   orders, bracket expansion, and a Lie basis enumerator.
//! * [`rewrite`] — reduction and composition (overlap/inclusion) calculus for
//!   free-algebra rewriting, completion with a degree bound, ideal-membership
//!   semidecision, and the diamond lemma on finite simplification graphs.
//! * [`autalg`] — finite automata for monomial algebras: normal-word automata
//!   built from forbidden factors, determinization, minimization, growth
//!   series, and growth classification.
//! * [`height`] — Shirshov n-divisibility and height computations.
//! * [`morphisms`] — power-free words and the Thue/Crochemore morphism tests.
//! * [`groups`] — group words, small-cancellation metric conditions, and
//!   Dehn's algorithm.
//! * [`ramsey`] — monochromatic arithmetic progressions and van der Waerden
//!   number search.
//!
//! Every major capability has a runnable demo under `examples/`; the `wordalg`
//! binary exposes the same operations as subcommands.

pub mod autalg;
pub mod cli;
pub mod freealg;
pub mod groups;
pub mod height;
pub mod morphisms;
pub mod ramsey;
pub mod rewrite;
pub mod textio;
pub mod words;

pub use words::{Alphabet, Word};
