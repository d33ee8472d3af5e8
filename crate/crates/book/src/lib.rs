//! Compiles and runs the code listings in `book/src` as doc-tests.
//!
//! mdbook cannot link listings against workspace crates, so each chapter is
//! pulled in here as the docs of an empty module and `cargo test` runs its
//! listings like any other rustdoc example.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/eisenstein.md")]
pub mod eisenstein {}

#[doc = include_str!("../../../book/src/triangles.md")]
pub mod triangles {}

#[doc = include_str!("../../../book/src/diophantine.md")]
pub mod diophantine {}

#[doc = include_str!("../../../book/src/search.md")]
pub mod search {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
