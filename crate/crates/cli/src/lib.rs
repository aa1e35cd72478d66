//! Batch front end for `comat`: file loading, the `verify` theorem suite and
//! the seeded corpus runner.

pub mod app;
pub mod corpus;
pub mod suite;

pub use app::{run, Outcome, RunConfig};
pub use corpus::{generate_random_arrangement, run_corpus, run_seed, CorpusReport, CorpusShape};
pub use suite::{verify_com, VerifyReport};
