//! Search for shift-chains that are not properly 2-colorable.
//!
//! Each generated instance is decided by backtracking. A witness is checked
//! with the verifier; a "no coloring" verdict is re-derived by exhaustive
//! search before the instance is reported as certified. Instances too large
//! for exhaustive search are kept apart as uncertified candidates.

use std::fmt::Write as _;
use std::ops::{ControlFlow, RangeInclusive};

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::coloring::{backtracking_search, exhaustive_search, is_proper, Mode, SearchOptions};
use crate::config::Limits;
use crate::constructions::{enumerate_shift_chains, random_shift_chain};
use crate::error::{Error, Result};
use crate::format::write_shift_chain;
use crate::hypergraph::{chain_bound, ShiftChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Random,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntConfig {
    pub m: usize,
    pub n_range: RangeInclusive<usize>,
    pub edges_range: RangeInclusive<usize>,
    pub seed: u64,
    /// Maximum number of instances to test.
    pub budget: u64,
    pub strategy: Strategy,
    pub workers: usize,
}

/// An instance with no proper 2-coloring according to both searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: ShiftChain,
    pub backtracking_nodes: u64,
    pub exhaustive_assignments: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HuntReport {
    pub tested: u64,
    pub colorable: u64,
    pub certified: Vec<Counterexample>,
    /// Backtracking found no coloring but the instance exceeds the
    /// exhaustive cap, so there is no second opinion.
    pub uncertified: Vec<ShiftChain>,
}

impl HuntReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instances tested: {}", self.tested);
        let _ = writeln!(out, "properly 2-colorable: {}", self.colorable);
        let _ = writeln!(out, "certified not 2-colorable: {}", self.certified.len());
        let _ = writeln!(out, "uncertified candidates: {}", self.uncertified.len());
        for (i, c) in self.certified.iter().enumerate() {
            let _ = writeln!(
                out,
                "counterexample {} (backtracking nodes {}, exhaustive assignments {}):",
                i + 1,
                c.backtracking_nodes,
                c.exhaustive_assignments
            );
            out.push_str(&write_shift_chain(&c.instance));
        }
        for (i, h) in self.uncertified.iter().enumerate() {
            let _ = writeln!(out, "uncertified candidate {}:", i + 1);
            out.push_str(&write_shift_chain(h));
        }
        out
    }
}

fn check_config(cfg: &HuntConfig) -> Result<()> {
    let (n_lo, n_hi) = (*cfg.n_range.start(), *cfg.n_range.end());
    let (e_lo, e_hi) = (*cfg.edges_range.start(), *cfg.edges_range.end());
    if cfg.m == 0 || n_lo < cfg.m || n_lo > n_hi {
        return Err(Error::Infeasible(format!(
            "vertex range {n_lo}..={n_hi} must be nonempty and at least m={}",
            cfg.m
        )));
    }
    if e_lo == 0 || e_lo > e_hi {
        return Err(Error::Infeasible(format!(
            "edge range {e_lo}..={e_hi} must be nonempty and positive"
        )));
    }
    Ok(())
}

fn decide(
    h: &ShiftChain,
    options: &SearchOptions,
    limits: &Limits,
    report: &mut HuntReport,
) -> Result<()> {
    report.tested += 1;
    let outcome = backtracking_search(h, 2, Mode::Proper, options)?;
    if let Some(witness) = &outcome.witness {
        if !is_proper(h, witness)? {
            return Err(Error::OracleDisagreement(
                "backtracking returned an improper coloring".into(),
            ));
        }
        report.colorable += 1;
        return Ok(());
    }
    match exhaustive_search(h, 2, Mode::Proper, limits) {
        Ok(second) if second.found() => Err(Error::OracleDisagreement(format!(
            "exhaustive search colors an instance backtracking rejected:\n{}",
            write_shift_chain(h)
        ))),
        Ok(second) => {
            report.certified.push(Counterexample {
                instance: h.clone(),
                backtracking_nodes: outcome.nodes_explored,
                exhaustive_assignments: second.nodes_explored,
            });
            Ok(())
        }
        Err(Error::SizeLimit { .. }) => {
            report.uncertified.push(h.clone());
            Ok(())
        }
        Err(e) => Err(e),
    }
}

/// Runs a hunt. Deterministic for a fixed configuration; in random mode
/// instance `i` uses vertex count, edge target and generator seed drawn
/// from a SplitMix64 stream seeded with `cfg.seed`. Edge targets are
/// clamped to the shift-chain bound of the drawn vertex count.
pub fn hunt(cfg: &HuntConfig, limits: &Limits) -> Result<HuntReport> {
    check_config(cfg)?;
    let options = SearchOptions {
        workers: cfg.workers.max(1),
        symmetry_breaking: false,
    };
    let mut report = HuntReport::default();
    if cfg.budget == 0 {
        return Ok(report);
    }

    match cfg.strategy {
        Strategy::Random => {
            let mut rng = SplitMix64::seed_from_u64(cfg.seed);
            let draw = |rng: &mut SplitMix64, r: &RangeInclusive<usize>| {
                let span = (r.end() - r.start()) as u64 + 1;
                r.start() + (rng.next_u64() % span) as usize
            };
            for _ in 0..cfg.budget {
                let n = draw(&mut rng, &cfg.n_range);
                let bound = chain_bound(cfg.m, n);
                let hi = (*cfg.edges_range.end()).min(bound);
                let lo = (*cfg.edges_range.start()).min(hi);
                let target = draw(&mut rng, &(lo..=hi));
                let instance_seed = rng.next_u64();
                let h = random_shift_chain(n, cfg.m, target, instance_seed)?;
                decide(&h, &options, limits, &mut report)?;
            }
        }
        Strategy::Enumerate => {
            let min_edges = *cfg.edges_range.start();
            let mut failure = None;
            for n in cfg.n_range.clone() {
                enumerate_shift_chains(n, cfg.m, *cfg.edges_range.end(), limits, |h| {
                    if h.len() < min_edges {
                        return ControlFlow::Continue(());
                    }
                    if let Err(e) = decide(h, &options, limits, &mut report) {
                        failure = Some(e);
                        return ControlFlow::Break(());
                    }
                    if report.tested >= cfg.budget {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                })?;
                if let Some(e) = failure.take() {
                    return Err(e);
                }
                if report.tested >= cfg.budget {
                    break;
                }
            }
        }
    }
    Ok(report)
}
