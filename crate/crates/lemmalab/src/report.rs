use graphcore::{emit_graph6, Graph, VertexSet};

/// One value bound in a counterexample: a vertex set, an ordered sequence
/// (path, hole, antipath), or a scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BindingValue {
    Set(Vec<usize>),
    Seq(Vec<usize>),
    Int(i64),
    Text(String),
}

impl BindingValue {
    pub fn set(s: VertexSet) -> Self {
        BindingValue::Set(s.to_vec())
    }
}

/// A machine-checked violation: the named bindings satisfy the claim's
/// hypothesis but break its conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCounterexample {
    pub claim: String,
    pub graph6: String,
    pub bindings: Vec<(String, BindingValue)>,
}

impl LemmaCounterexample {
    pub fn new(claim: &str, g: &Graph, bindings: Vec<(String, BindingValue)>) -> Self {
        LemmaCounterexample { claim: claim.to_string(), graph6: emit_graph6(g), bindings }
    }
}

/// Aggregate result of running one claim over a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    pub claim: String,
    pub graphs_checked: usize,
    /// Corpus members skipped because the claim quantifies over Berge graphs
    /// only; counted, never silently dropped.
    pub skipped_non_berge: usize,
    pub bindings_checked: u64,
    /// Graphs whose per-graph binding budget tripped; their check is partial.
    pub budget_overflows: usize,
    pub counterexamples: Vec<LemmaCounterexample>,
    pub wall_time_ms: u128,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}
