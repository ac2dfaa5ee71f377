//! Seeded graph generators. Identical spec and seed always produce the same
//! graph; corpus sampling derives per-sample seeds as `seed ^ index` so
//! parallel and serial runs agree.

use graphcore::{Graph, MAX_N};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use recognizers::is_berge;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    /// G(n,p) with independent edges.
    Uniform { n: usize, p: f64 },
    /// Rejection-sample G(n,p) until Berge; the density decays on long
    /// failure streaks because Berge density collapses as n grows.
    BergeRejection { n: usize, p: f64 },
    Bipartite { n1: usize, n2: usize, p: f64 },
    /// Line graph of a random bipartite graph.
    LineOfBipartite { n1: usize, n2: usize, p: f64 },
    /// A bicograph with m adjacent and n nonadjacent pairs; the seed picks
    /// each cross pattern.
    Bicograph { m: usize, n: usize },
    ComplementOf(Box<GeneratorSpec>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("parameters produce {0} vertices, beyond the limit {MAX_N}")]
    TooLarge(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(&'static str),
    #[error("rejection sampling found no Berge graph in {0} attempts")]
    RejectionExhausted(u32),
}

const REJECTION_CAP: u32 = 10_000;
const DECAY_EVERY: u32 = 500;

pub fn generate(spec: &GeneratorSpec, seed: u64) -> Result<Graph, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_with(spec, &mut rng)
}

fn gen_with(spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> Result<Graph, GenerateError> {
    match spec {
        GeneratorSpec::Uniform { n, p } => uniform(*n, *p, rng),
        GeneratorSpec::BergeRejection { n, p } => {
            let mut density = *p;
            for attempt in 1..=REJECTION_CAP {
                let g = uniform(*n, density, rng)?;
                if is_berge(&g) {
                    return Ok(g);
                }
                if attempt % DECAY_EVERY == 0 {
                    density = (density * 0.8).max(0.05);
                }
            }
            Err(GenerateError::RejectionExhausted(REJECTION_CAP))
        }
        GeneratorSpec::Bipartite { n1, n2, p } => bipartite(*n1, *n2, *p, rng),
        GeneratorSpec::LineOfBipartite { n1, n2, p } => {
            if n1 * n2 > MAX_N {
                return Err(GenerateError::TooLarge(n1 * n2));
            }
            let h = bipartite(*n1, *n2, *p, rng)?;
            let (l, _) = recognizers::line_graph(&h)
                .map_err(|_| GenerateError::TooLarge(h.edge_count()))?;
            Ok(l)
        }
        GeneratorSpec::Bicograph { m, n } => bicograph(*m, *n, rng),
        GeneratorSpec::ComplementOf(inner) => Ok(gen_with(inner, rng)?.complement()),
    }
}

fn check_p(p: f64) -> Result<(), GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::BadParameter("edge probability outside [0,1]"));
    }
    Ok(())
}

fn uniform(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph, GenerateError> {
    check_p(p)?;
    let mut g = Graph::empty(n).map_err(|_| GenerateError::TooLarge(n))?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}

fn bipartite(n1: usize, n2: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph, GenerateError> {
    check_p(p)?;
    let mut g = Graph::empty(n1 + n2).map_err(|_| GenerateError::TooLarge(n1 + n2))?;
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}

/// Layout: a_i = i, b_i = m+i, c_j = 2m+j, d_j = 2m+n+j. Cross edges per
/// (i,j) are a_i c_j + b_i d_j or a_i d_j + b_i c_j by a seeded coin.
fn bicograph(m: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, GenerateError> {
    if m < 2 || n < 2 {
        return Err(GenerateError::BadParameter("bicograph needs m, n >= 2"));
    }
    let total = 2 * (m + n);
    let mut g = Graph::empty(total).map_err(|_| GenerateError::TooLarge(total))?;
    let (a, b, c, d) = (0, m, 2 * m, 2 * m + n);
    for i in 0..m {
        g.add_edge(a + i, b + i).unwrap();
    }
    for j in 0..n {
        for j2 in j + 1..n {
            g.add_edge(c + j, c + j2).unwrap();
            g.add_edge(c + j, d + j2).unwrap();
            g.add_edge(d + j, c + j2).unwrap();
            g.add_edge(d + j, d + j2).unwrap();
        }
    }
    for i in 0..m {
        for j in 0..n {
            if rng.gen_bool(0.5) {
                g.add_edge(a + i, c + j).unwrap();
                g.add_edge(b + i, d + j).unwrap();
            } else {
                g.add_edge(a + i, d + j).unwrap();
                g.add_edge(b + i, c + j).unwrap();
            }
        }
    }
    Ok(g)
}
