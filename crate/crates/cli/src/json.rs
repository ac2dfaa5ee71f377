//! JSON encoding for certificates and reports. serde_json maps are B-tree
//! backed, so object keys always serialize sorted; vertex sets are emitted as
//! ascending integer arrays and graphs as graph6 strings.

use graphcore::{emit_graph6, Graph, Hole, InducedPath, VertexSet};
use lemmalab::{BindingValue, CorpusReport};
use recognizers::{BasicCert, BergeWitness, Side};
use serde_json::{json, Map, Value};

pub fn set_json(s: VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v)).collect())
}

pub fn seq_json(verts: &[usize]) -> Value {
    Value::Array(verts.iter().map(|v| json!(v)).collect())
}

pub fn path_json(p: &InducedPath) -> Value {
    seq_json(p.verts())
}

pub fn hole_json(h: &Hole) -> Value {
    seq_json(h.verts())
}

pub fn side_json(side: Side) -> Value {
    match side {
        Side::G => json!("G"),
        Side::Complement => json!("complement"),
    }
}

pub fn berge_json(g: &Graph, witness: &Option<BergeWitness>) -> Value {
    json!({
        "graph6": emit_graph6(g),
        "berge": witness.is_none(),
        "witness": witness.as_ref().map(|w| json!({
            "side": side_json(w.side),
            "hole": hole_json(&w.hole),
        })),
    })
}

pub fn basic_json(cert: &BasicCert) -> Value {
    match cert {
        BasicCert::Bipartite { parts } => json!({
            "class": "bipartite",
            "parts": [set_json(parts.0), set_json(parts.1)],
        }),
        BasicCert::ComplementBipartite { parts } => json!({
            "class": "complement_bipartite",
            "parts": [set_json(parts.0), set_json(parts.1)],
        }),
        BasicCert::LineOfBipartite(lr) => json!({
            "class": "line_of_bipartite",
            "root_graph6": emit_graph6(&lr.root),
            "map": lr.map.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        }),
        BasicCert::ComplementLineOfBipartite(lr) => json!({
            "class": "complement_line_of_bipartite",
            "root_graph6": emit_graph6(&lr.root),
            "map": lr.map.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        }),
        BasicCert::Bicograph(c) => json!({
            "class": "bicograph",
            "ab_pairs": c.ab_pairs.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "cd_pairs": c.cd_pairs.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        }),
    }
}

pub fn two_join_json(cert: &decompositions::TwoJoinCert) -> Value {
    json!({
        "X1": set_json(cert.x1),
        "X2": set_json(cert.x2),
        "A1": set_json(cert.a1),
        "B1": set_json(cert.b1),
        "A2": set_json(cert.a2),
        "B2": set_json(cert.b2),
    })
}

pub fn m_join_json(cert: &decompositions::MJoinCert) -> Value {
    json!({
        "A": set_json(cert.a),
        "B": set_json(cert.b),
        "C": set_json(cert.c),
        "D": set_json(cert.d),
        "E": set_json(cert.e),
        "F": set_json(cert.f),
    })
}

pub fn skew_json(cert: &decompositions::SkewPartitionCert) -> Value {
    json!({
        "A": set_json(cert.a),
        "B": set_json(cert.b),
        "components_of_A": cert.components_of_a.iter().map(|c| set_json(*c)).collect::<Vec<_>>(),
        "anticomponents_of_B":
            cert.anticomponents_of_b.iter().map(|c| set_json(*c)).collect::<Vec<_>>(),
        "loose": cert.loose,
        "balanced": cert.balanced,
    })
}

pub fn verdict_json(g: &Graph, verdict: &decompositions::Verdict) -> Value {
    use decompositions::Verdict;
    let mut obj = match verdict {
        Verdict::Basic(cert) => {
            let mut m = Map::new();
            m.insert("kind".into(), json!("basic"));
            if let Value::Object(inner) = basic_json(cert) {
                m.extend(inner);
            }
            m
        }
        Verdict::TwoJoin { side, cert } => {
            let mut m = Map::new();
            let kind = match side {
                Side::G => "two_join",
                Side::Complement => "two_join_complement",
            };
            m.insert("kind".into(), json!(kind));
            if let Value::Object(inner) = two_join_json(cert) {
                m.extend(inner);
            }
            m
        }
        Verdict::MJoin(cert) => {
            let mut m = Map::new();
            m.insert("kind".into(), json!("m_join"));
            if let Value::Object(inner) = m_join_json(cert) {
                m.extend(inner);
            }
            m
        }
        Verdict::BalancedSkew(cert) => {
            let mut m = Map::new();
            m.insert("kind".into(), json!("balanced_skew"));
            if let Value::Object(inner) = skew_json(cert) {
                m.extend(inner);
            }
            m
        }
        Verdict::CounterexampleToTheorem => {
            let mut m = Map::new();
            m.insert("kind".into(), json!("counterexample"));
            m
        }
    };
    obj.insert("graph6".into(), json!(emit_graph6(g)));
    Value::Object(obj)
}

pub fn binding_json(v: &BindingValue) -> Value {
    match v {
        BindingValue::Set(s) => seq_json(s),
        BindingValue::Seq(s) => seq_json(s),
        BindingValue::Int(i) => json!(i),
        BindingValue::Text(t) => json!(t),
    }
}

/// Report serialization. Wall time goes to stderr, not here: identical
/// invocations must produce byte-identical standard output.
pub fn report_json(r: &CorpusReport) -> Value {
    json!({
        "claim": r.claim,
        "graphs_checked": r.graphs_checked,
        "skipped_non_berge": r.skipped_non_berge,
        "bindings_checked": r.bindings_checked,
        "budget_overflows": r.budget_overflows,
        "counterexamples": r.counterexamples.iter().map(|c| json!({
            "claim": c.claim,
            "graph6": c.graph6,
            "bindings": c.bindings.iter()
                .map(|(k, v)| (k.clone(), binding_json(v)))
                .collect::<Map<String, Value>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Serialize with stable field ordering (sorted keys) and a trailing newline.
pub fn emit_report(value: &Value) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(value).expect("JSON encoding cannot fail");
    bytes.push(b'\n');
    bytes
}
