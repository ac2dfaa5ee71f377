//! Graph generators, the exhaustive small-graph enumerator, and the empirical
//! claim suite that replays decomposition-theorem statements and their lemma
//! suite over enumerated or sampled corpora.

mod bindings;
mod claims;
mod enumerate;
mod generate;
mod report;
mod suite;

pub use claims::{claim_by_name, ClaimId, ALL_CLAIMS};
pub use enumerate::{enumerate_all_graphs, EnumerateError};
pub use generate::{generate, GenerateError, GeneratorSpec};
pub use report::{BindingValue, CorpusReport, LemmaCounterexample};
pub use suite::{run_suite, Source, SuiteError, SuiteOptions};
