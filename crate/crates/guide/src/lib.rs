//! Runs the book through the compiler.
//!
//! Each module below embeds one chapter of `book/` as its documentation, so
//! `cargo test -p guide` executes every Rust snippet in the guide as a
//! doc-test. A chapter edit that breaks a snippet breaks the build here,
//! which keeps the prose and the library honest with each other.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/formulas.md")]
pub mod formulas {}

#[doc = include_str!("../../../book/src/independence.md")]
pub mod independence {}

#[doc = include_str!("../../../book/src/forgetting.md")]
pub mod forgetting {}

#[doc = include_str!("../../../book/src/primes.md")]
pub mod primes {}

#[doc = include_str!("../../../book/src/applications.md")]
pub mod applications {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
