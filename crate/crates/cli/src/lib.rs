//! Input documents, built-in examples, reports and the verb driver behind
//! the `orbihh` binary.

pub mod builtin;
pub mod error;
pub mod input;
pub mod report;
pub mod run;

pub use builtin::{builtin, builtin_document, CATALOGUE, EXAMPLES};
pub use error::{CliError, EXIT_CAP, EXIT_PARSE, EXIT_VERIFY};
pub use input::{parse_input, parse_input_file, InputSpec, Options};
pub use report::Report;
pub use run::{run, Outcome, RunConfig, Verb};
