// mdbook cannot run snippets that depend on an external crate, so every
// chapter is pulled into this crate as a module doc and `cargo test --doc`
// runs the code blocks. One module per chapter keeps failures traceable.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/quaternions.md")]
pub mod quaternions {}
#[doc = include_str!("src/states.md")]
pub mod states {}
#[doc = include_str!("src/oscillator.md")]
pub mod oscillator {}
#[doc = include_str!("src/ladder.md")]
pub mod ladder {}
#[doc = include_str!("src/higher-dimensions.md")]
pub mod higher_dimensions {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
#[doc = include_str!("../README.md")]
pub mod readme {}
