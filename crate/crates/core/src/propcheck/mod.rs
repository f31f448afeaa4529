//! Sequence recognizers, proposition verifiers, and the exponent-function
//! scan. Verifiers sweep parameter grids in parallel, classify every cell
//! exactly (no floating point anywhere), and assemble deterministic
//! reports; see [`report::VerificationReport`].

mod report;
mod scan;
mod sequences;
mod verify;

pub use report::{CellRecord, CellStatus, Summary, VerificationReport};
pub use scan::{scan_exponents, ScanCandidate, ScanSpec};
pub use sequences::{
    fibonacci, is_fibonacci, is_in_power3_halves, is_jacobsthal, is_power_of_two, jacobsthal,
    reference_sequence,
};
pub use verify::{exponent_fn, verify_prop1, verify_prop2, verify_prop3};
