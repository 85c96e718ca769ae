//! Whole-diagram checks: every cycle unknotted, and linked cycle pairs.
//!
//! Per-cycle work fans out over the current rayon pool; results are collected
//! in canonical cycle order, so reports do not depend on scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{
    disjoint_cycle_pairs, enumerate_cycles, extract_component_pd, retained_crossings, CrossingId, Cycle,
    Diagram, DiagramError,
};
use crate::invariants::{classify_knot, linking_number, LaurentPoly, UnknotVerdict};

pub const SCHEMA: &str = "knotcert/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Summary {
    Knotless,
    KnotFound,
    Inconclusive,
}

impl Summary {
    pub fn label(self) -> &'static str {
        match self {
            Summary::Knotless => "KNOTLESS",
            Summary::KnotFound => "KNOT_FOUND",
            Summary::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleRecord {
    pub cycle: Cycle,
    pub crossings: Vec<CrossingId>,
    pub verdict: &'static str,
    /// Normalized bracket; absent when the cycle was not evaluated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<LaurentPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificationReport {
    pub schema: &'static str,
    pub diagram: String,
    pub max_crossings: usize,
    pub cycle_count: usize,
    pub summary: Summary,
    pub knotted_cycles: usize,
    pub inconclusive_cycles: usize,
    pub records: Vec<CycleRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl CertificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn record(cycle: Cycle, crossings: Vec<CrossingId>, verdict: UnknotVerdict) -> CycleRecord {
    let (polynomial, reason) = match &verdict {
        UnknotVerdict::Unknot => (Some(LaurentPoly::one()), None),
        UnknotVerdict::Knotted { witness } => (Some(witness.clone()), None),
        UnknotVerdict::Inconclusive { reason } => (None, Some(reason.clone())),
    };
    CycleRecord {
        cycle,
        crossings,
        verdict: verdict.label(),
        polynomial_text: polynomial.as_ref().map(ToString::to_string),
        jones: polynomial.as_ref().and_then(LaurentPoly::to_t_string),
        polynomial,
        reason,
    }
}

/// Classifies the knot type of every simple cycle of `d`.
pub fn certify(d: &Diagram, id: &str, max_crossings: usize) -> Result<CertificationReport, DiagramError> {
    let r = d.resolve()?;
    let cycles = enumerate_cycles(&r.graph);
    let records = cycles
        .into_par_iter()
        .map(|c| {
            let pd = extract_component_pd(&r, &[&c])?;
            let ids = pd.crossings.iter().map(|x| CrossingId(x.id.clone())).collect();
            let verdict = classify_knot(&pd, max_crossings)?;
            Ok(record(c, ids, verdict))
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let knotted = records.iter().filter(|r| r.verdict == "KNOTTED").count();
    let inconclusive = records.iter().filter(|r| r.verdict == "INCONCLUSIVE").count();
    let summary = if knotted > 0 {
        Summary::KnotFound
    } else if inconclusive > 0 {
        Summary::Inconclusive
    } else {
        Summary::Knotless
    };
    Ok(CertificationReport {
        schema: SCHEMA,
        diagram: id.to_string(),
        max_crossings,
        cycle_count: records.len(),
        summary,
        knotted_cycles: knotted,
        inconclusive_cycles: inconclusive,
        records,
        wall_time_ms: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkRecord {
    pub cycles: [Cycle; 2],
    /// Crossings between the two cycles.
    pub crossings: Vec<CrossingId>,
    pub linking_number: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinksReport {
    pub schema: &'static str,
    pub diagram: String,
    pub pairs_examined: usize,
    pub linked_pairs: usize,
    pub odd_pairs: usize,
    /// Pairs with nonzero linking number, in canonical order.
    pub records: Vec<LinkRecord>,
}

impl LinksReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Linking numbers of all vertex-disjoint cycle pairs; keeps the nonzero ones.
pub fn find_links(d: &Diagram, id: &str) -> Result<LinksReport, DiagramError> {
    let r = d.resolve()?;
    let pairs = disjoint_cycle_pairs(&r.graph);
    let examined = pairs.len();
    let computed = pairs
        .into_par_iter()
        .map(|(a, b)| {
            let pd = extract_component_pd(&r, &[&a, &b])?;
            let lk = linking_number(&pd)?;
            let crossings = pd
                .crossings
                .iter()
                .filter(|x| x.is_mixed())
                .map(|x| CrossingId(x.id.clone()))
                .collect();
            Ok((lk != 0).then_some(LinkRecord {
                cycles: [a, b],
                crossings,
                linking_number: lk,
            }))
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let records: Vec<LinkRecord> = computed.into_iter().flatten().collect();
    Ok(LinksReport {
        schema: SCHEMA,
        diagram: id.to_string(),
        pairs_examined: examined,
        linked_pairs: records.len(),
        odd_pairs: records.iter().filter(|r| r.linking_number % 2 != 0).count(),
        records,
    })
}

/// Crossings retained by a single cycle, without evaluating anything.
pub fn cycle_crossings(d: &Diagram, cycle: &Cycle) -> Result<Vec<CrossingId>, DiagramError> {
    let r = d.resolve()?;
    retained_crossings(&r, &[cycle])
}
