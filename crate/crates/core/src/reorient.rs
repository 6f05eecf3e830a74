//! Reversing arcs of `F` one at a time without lowering arc-connectivity.
//!
//! With `D` reversed on `F` k-arc-connected and `λ(D) <= ⌊(k+1)/2⌋`, a
//! safe single reversal always exists; iterating gets to `⌊(k+3)/2⌋`, i.e.
//! to `k` itself when `k` is 2 or 3. Higher up the search is best-effort and
//! a stuck step comes back with a [`Certificate`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::{blocking_certificate, Certificate};
use crate::connectivity::{arc_connectivity, is_k_arc_connected};
use crate::digraph::{ArcId, ArcSet, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::sparsify::{dalmazzo_sparsify, SparsifyResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub k: usize,
    /// `⌊(k+1)/2⌋`: at or below this, a safe reversal always exists.
    pub guarantee_floor: usize,
    /// `⌊(k+3)/2⌋`: the connectivity the monotone sequence always reaches.
    pub target: usize,
}

pub fn thresholds(k: usize) -> Result<Threshold> {
    if k < 2 {
        return Err(Error::InvalidK {
            k,
            reason: "thresholds need k >= 2",
        });
    }
    Ok(Threshold {
        k,
        guarantee_floor: k.div_ceil(2),
        target: (k + 3) / 2,
    })
}

/// How to pick among reversible arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Smallest qualifying arc id.
    #[default]
    First,
    /// Largest resulting `λ`, ties to the smallest id.
    Best,
    /// Uniform over qualifying arcs.
    Random(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepOutcome {
    pub chosen: Option<ArcId>,
    pub lambda_before: usize,
    pub lambda_after: Option<usize>,
    #[serde(skip)]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub arc: ArcId,
    /// `λ` right after reversing `arc`.
    pub lambda: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    ReachedK,
    ReachedGuarantee,
    Blocked(Certificate),
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::ReachedK => "ReachedK",
            Status::ReachedGuarantee => "ReachedGuarantee",
            Status::Blocked(_) => "Blocked",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub k: usize,
    pub initial_lambda: usize,
    pub steps: Vec<Step>,
    pub status: Status,
    pub final_digraph: Digraph,
}

impl SequenceReport {
    /// `λ(D₀)` followed by `λ` after each step.
    pub fn lambdas(&self) -> Vec<usize> {
        std::iter::once(self.initial_lambda)
            .chain(self.steps.iter().map(|s| s.lambda))
            .collect()
    }

    pub fn final_lambda(&self) -> usize {
        self.steps.last().map_or(self.initial_lambda, |s| s.lambda)
    }
}

/// Search parameters shared by the single step and the sequence driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Search {
    pub k: usize,
    pub mode: Mode,
    /// Root used to split certificates.
    pub root: Vertex,
}

impl Search {
    pub fn new(k: usize) -> Self {
        Search {
            k,
            mode: Mode::First,
            root: 0,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_root(mut self, root: Vertex) -> Self {
        self.root = root;
        self
    }

    fn rng(&self) -> Option<ChaCha8Rng> {
        match self.mode {
            Mode::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        }
    }

    fn validate(&self, digraph: &Digraph, f: &ArcSet) -> Result<Threshold> {
        let threshold = thresholds(self.k)?;
        f.validate(digraph)?;
        if self.root >= digraph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: self.root,
                n: digraph.vertex_count(),
            });
        }
        let reversed = digraph.reverse_set(f)?;
        if !is_k_arc_connected(&reversed, self.k)? {
            let lambda = arc_connectivity(&reversed)?.value;
            return Err(Error::ReversalTooWeak { lambda, k: self.k });
        }
        Ok(threshold)
    }

    /// One reversal step. See [`find_reversible_arc`].
    pub fn find_reversible_arc(&self, digraph: &Digraph, f: &ArcSet) -> Result<StepOutcome> {
        let threshold = self.validate(digraph, f)?;
        if f.is_empty() {
            return Err(Error::EmptyReversalSet);
        }
        self.step(digraph, f, threshold, &mut self.rng())
    }

    fn step(
        &self,
        digraph: &Digraph,
        f: &ArcSet,
        threshold: Threshold,
        rng: &mut Option<ChaCha8Rng>,
    ) -> Result<StepOutcome> {
        let lambda = arc_connectivity(digraph)?.value;
        // Reversing one arc moves every cut by at most one, so λ + 1 is the
        // best any candidate can do.
        let mut qualifying: Vec<(ArcId, usize)> = Vec::new();
        for id in f.iter() {
            let candidate = digraph.reverse_arc(id)?;
            match self.mode {
                Mode::First => {
                    if is_k_arc_connected(&candidate, lambda)? {
                        qualifying.push((id, arc_connectivity(&candidate)?.value));
                        break;
                    }
                }
                Mode::Best | Mode::Random(_) => {
                    let after = arc_connectivity(&candidate)?.value;
                    if after >= lambda {
                        qualifying.push((id, after));
                        if self.mode == Mode::Best && after > lambda {
                            break;
                        }
                    }
                }
            }
        }

        let pick = match self.mode {
            Mode::First => qualifying.first().copied(),
            Mode::Best => qualifying
                .iter()
                .copied()
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0))),
            Mode::Random(_) => {
                let rng = rng.as_mut().expect("random mode carries an rng");
                (!qualifying.is_empty()).then(|| qualifying[rng.gen_range(0..qualifying.len())])
            }
        };

        match pick {
            Some((id, after)) => Ok(StepOutcome {
                chosen: Some(id),
                lambda_before: lambda,
                lambda_after: Some(after),
                certificate: None,
            }),
            None if lambda <= threshold.guarantee_floor => Err(Error::GuaranteeViolated {
                lambda,
                floor: threshold.guarantee_floor,
            }),
            None => Ok(StepOutcome {
                chosen: None,
                lambda_before: lambda,
                lambda_after: None,
                certificate: Some(blocking_certificate(digraph, f, self.k, self.root)?),
            }),
        }
    }

    /// Repeated steps until `λ >= k` or no arc qualifies. See
    /// [`monotone_sequence`].
    pub fn monotone_sequence(&self, digraph: &Digraph, f: &ArcSet) -> Result<SequenceReport> {
        let threshold = self.validate(digraph, f)?;
        let mut rng = self.rng();
        let mut current = digraph.clone();
        let mut remaining = f.clone();
        let initial_lambda = arc_connectivity(digraph)?.value;
        let mut lambda = initial_lambda;
        let mut steps = Vec::new();
        let status = loop {
            if lambda >= self.k {
                break Status::ReachedK;
            }
            // λ(current with `remaining` reversed) >= k > λ, so `remaining`
            // cannot be empty here.
            let outcome = self.step(&current, &remaining, threshold, &mut rng)?;
            match (outcome.chosen, outcome.lambda_after) {
                (Some(id), Some(after)) => {
                    current.reverse_in_place(id)?;
                    remaining.remove(id);
                    lambda = after;
                    steps.push(Step { arc: id, lambda });
                }
                _ if lambda >= threshold.target => break Status::ReachedGuarantee,
                _ => {
                    break Status::Blocked(
                        outcome
                            .certificate
                            .expect("a step without a chosen arc carries a certificate"),
                    )
                }
            }
        };
        Ok(SequenceReport {
            k: self.k,
            initial_lambda,
            steps,
            status,
            final_digraph: current,
        })
    }
}

/// Finds an arc of `f` whose reversal does not decrease `λ(D)`.
///
/// Requires `k >= 2`, `f` nonempty, and `D` with `f` reversed
/// k-arc-connected. When `λ(D) <= ⌊(k+1)/2⌋` an arc always exists and its
/// absence is reported as [`Error::GuaranteeViolated`]. Above that floor the
/// outcome may carry a certificate instead; the certificate satisfies every
/// verified property whenever `λ(D) < k`.
pub fn find_reversible_arc(
    digraph: &Digraph,
    f: &ArcSet,
    k: usize,
    mode: Mode,
) -> Result<StepOutcome> {
    Search::new(k)
        .with_mode(mode)
        .find_reversible_arc(digraph, f)
}

/// Reverses arcs of `f` one at a time, never lowering `λ`, each arc at most
/// once, stopping as soon as `λ >= k`.
pub fn monotone_sequence(
    digraph: &Digraph,
    f: &ArcSet,
    k: usize,
    mode: Mode,
) -> Result<SequenceReport> {
    Search::new(k).with_mode(mode).monotone_sequence(digraph, f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    /// Arcs of `D₀` chosen for reversal.
    pub f: ArcSet,
    /// Sparsification of the seed orientation (seed arc ids).
    pub sparsified: SparsifyResult,
    pub sequence: SequenceReport,
}

/// Pairs every seed arc with a `D₀` arc on the same endpoints, preferring
/// equal direction. Returns, per seed arc id, the `D₀` arc id and whether the
/// directions agree.
fn match_orientations(d0: &Digraph, seed: &Digraph) -> Result<Vec<(ArcId, bool)>> {
    use std::collections::BTreeMap;

    if d0.vertex_count() != seed.vertex_count() {
        return Err(Error::SeedMismatch(format!(
            "vertex counts differ: {} vs {}",
            d0.vertex_count(),
            seed.vertex_count()
        )));
    }
    let mut pool: BTreeMap<(Vertex, Vertex), Vec<ArcId>> = BTreeMap::new();
    for arc in d0.arcs().iter().rev() {
        pool.entry((arc.tail, arc.head)).or_default().push(arc.id);
    }
    let mut take = |tail, head| pool.get_mut(&(tail, head)).and_then(Vec::pop);
    let mut out = Vec::with_capacity(seed.arc_count());
    for arc in seed.arcs() {
        let matched = take(arc.tail, arc.head)
            .map(|id| (id, true))
            .or_else(|| take(arc.head, arc.tail).map(|id| (id, false)))
            .ok_or_else(|| {
                Error::SeedMismatch(format!(
                    "seed arc {} ({} -> {}) has no partner in D0",
                    arc.id, arc.tail, arc.head
                ))
            })?;
        out.push(matched);
    }
    if seed.arc_count() != d0.arc_count() {
        return Err(Error::SeedMismatch(format!(
            "arc counts differ: {} vs {}",
            d0.arc_count(),
            seed.arc_count()
        )));
    }
    Ok(out)
}

/// Drives an orientation `d0` to k-arc-connectivity for `k ∈ {2, 3}` using
/// at most `k(n-1)` reversals.
///
/// `seed` must be a k-arc-connected orientation of the same undirected
/// multigraph. It is sparsified to at most `2k(n-1)` arcs; the matching `D₀`
/// arcs split into those agreeing and disagreeing with the sparse seed, and
/// the smaller class becomes `F`.
pub fn reorientation_pipeline(
    d0: &Digraph,
    k: usize,
    seed: &Digraph,
    mode: Mode,
) -> Result<PipelineReport> {
    if !(2..=3).contains(&k) {
        return Err(Error::InvalidK {
            k,
            reason: "the pipeline covers k = 2 and k = 3 only",
        });
    }
    let matching = match_orientations(d0, seed)?;
    if !is_k_arc_connected(seed, k)? {
        let lambda = arc_connectivity(seed)?.value;
        return Err(Error::SeedMismatch(format!(
            "seed has lambda = {lambda} < k = {k}"
        )));
    }
    let sparsified = dalmazzo_sparsify(seed, k)?;
    let (mut agree, mut disagree) = (ArcSet::new(), ArcSet::new());
    for seed_id in sparsified.kept.iter() {
        let (d0_id, same) = matching[seed_id.0];
        if same {
            agree.insert(d0_id);
        } else {
            disagree.insert(d0_id);
        }
    }
    let f = if disagree.len() <= agree.len() {
        disagree
    } else {
        agree
    };
    let n = d0.vertex_count();
    debug_assert!(f.len() <= k * (n - 1));

    let sequence = Search::new(k).with_mode(mode).monotone_sequence(d0, &f)?;
    if sequence.status != Status::ReachedK {
        return Err(Error::GuaranteeViolated {
            lambda: sequence.final_lambda(),
            floor: thresholds(k)?.guarantee_floor,
        });
    }
    Ok(PipelineReport {
        f,
        sparsified,
        sequence,
    })
}
