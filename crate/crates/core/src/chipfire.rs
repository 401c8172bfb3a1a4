//! Chip-firing with singleton, cluster, and explicit subset-family moves.

use crate::error::{input, Error, Result};
use crate::graph::{require_connected, Graph, VertexSet};
use crate::guard;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Default cap on the number of firings in one stabilization.
pub const STEP_LIMIT: u128 = 10_000_000;

/// Chip counts on the non-sink vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(pub Vec<u64>);

impl Configuration {
    pub fn chips(&self, i: usize) -> u64 {
        self.0[i - 1]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Configuration(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Input(format!("bad chip count {t:?}")))
            })
            .collect::<Result<_>>()
            .map(Configuration)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which vertex sets may fire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiringModel {
    /// The abelian sandpile: one vertex at a time.
    Singletons,
    /// Any nonempty subset.
    Cluster,
    /// An explicit list of nonempty subsets of `1..=n`.
    Family(Vec<VertexSet>),
}

impl FiringModel {
    /// Allowed sets in lexicographic order.
    fn sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        let n = g.n();
        let mut sets = match self {
            FiringModel::Singletons => (1..=n).map(VertexSet::singleton).collect(),
            FiringModel::Cluster => (1u64..1 << n).map(|m| VertexSet(m << 1)).collect(),
            FiringModel::Family(family) => {
                for &s in family {
                    g.check_sigma(s)?;
                }
                family.clone()
            }
        };
        sets.sort_by(|a, b| a.lex_cmp(*b));
        sets.dedup();
        Ok(sets)
    }
}

fn check_length(g: &Graph, c: &Configuration) -> Result<()> {
    if c.0.len() != g.n() {
        return input(format!("configuration has {} entries, expected {}", c.0.len(), g.n()));
    }
    Ok(())
}

fn can_fire(g: &Graph, c: &Configuration, sigma: VertexSet) -> bool {
    sigma.iter().all(|i| c.chips(i) >= u64::from(g.out_degree(sigma, i)))
}

/// Fires `sigma`: each `i ∈ σ` sends one chip along every edge leaving `σ`.
pub fn fire_set(g: &Graph, c: &Configuration, sigma: VertexSet) -> Result<Configuration> {
    check_length(g, c)?;
    g.check_sigma(sigma)?;
    let mut next = c.0.clone();
    for i in sigma.iter() {
        let need = u64::from(g.out_degree(sigma, i));
        if c.chips(i) < need {
            return Err(Error::InvalidFiring {
                vertex: i,
                have: c.chips(i),
                need,
            });
        }
        next[i - 1] -= need;
        for j in g.neighbors(i).iter().filter(|&j| j != 0 && !sigma.contains(j)) {
            next[j - 1] += 1;
        }
    }
    Ok(Configuration(next))
}

pub fn is_stable(g: &Graph, c: &Configuration, model: &FiringModel) -> Result<bool> {
    check_length(g, c)?;
    Ok(!model.sets(g)?.into_iter().any(|s| can_fire(g, c, s)))
}

/// How `stabilize` picks among the sets that can fire.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    LexLeast,
    /// Uniformly random valid set, from a seeded ChaCha8 stream.
    Random(u64),
}

/// One firing in a stabilization trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub fired: VertexSet,
    pub after: Configuration,
}

pub fn stabilize(g: &Graph, c: &Configuration, model: &FiringModel) -> Result<Configuration> {
    stabilize_traced(g, c, model, Policy::LexLeast).map(|(end, _)| end)
}

/// Fires valid allowed sets until none remains, recording every step.
pub fn stabilize_traced(
    g: &Graph,
    c: &Configuration,
    model: &FiringModel,
    policy: Policy,
) -> Result<(Configuration, Vec<Step>)> {
    check_length(g, c)?;
    require_connected(g)?;
    let sets = model.sets(g)?;
    let limit = guard::cell_limit(STEP_LIMIT);
    let mut rng = match policy {
        Policy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Policy::LexLeast => None,
    };
    let mut current = c.clone();
    let mut steps = Vec::new();
    loop {
        let chosen = match rng.as_mut() {
            None => sets.iter().copied().find(|&s| can_fire(g, &current, s)),
            Some(rng) => {
                let valid: Vec<VertexSet> = sets.iter().copied().filter(|&s| can_fire(g, &current, s)).collect();
                (!valid.is_empty()).then(|| valid[rng.gen_range(0..valid.len())])
            }
        };
        let Some(sigma) = chosen else {
            return Ok((current, steps));
        };
        guard::check("chip-firing steps", steps.len() as u128 + 1, limit)?;
        current = fire_set(g, &current, sigma)?;
        steps.push(Step {
            fired: sigma,
            after: current.clone(),
        });
    }
}
