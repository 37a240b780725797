//! IO-side companion to `primeformula-core`: cap configuration from the
//! environment, the verification driver and the benchmark harness.

pub mod bench;
pub mod caps;
pub mod verify;
