//! Conjecture-level verification: build an instance, measure it exactly,
//! and record machine-checkable verdicts.
//!
//! Reports follow one schema (versioned, `"schema": 1`). Every verdict is
//! recomputable from the measurements embedded next to it, and a
//! "refuted" verdict is only ever issued on the strength of an exact
//! measurement or a certified bound, never a heuristic one. Budget
//! exhaustion shows up as "inconclusive".

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::enumerate_cycles;
use crate::digraph::Digraph;
use crate::generators::{self, ConstructionParams, OddVariant};
use crate::packing::{self, counting_bound, BoundMode, Packing};
use crate::paths;
use crate::probes;

/// Node-expansion budget used when the caller does not provide one.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Exact packing is attempted only below these limits; larger instances
/// get certified counting bounds plus a budgeted lower-bound search.
const EXACT_VERTEX_LIMIT: usize = 40;
const EXACT_CYCLE_LIMIT: usize = 5_000;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Params(#[from] generators::ParamError),
    #[error("shift constant c is only defined for the even-girth family")]
    ShiftOnOddFamily,
    #[error("corollary 2 instance needs packing target k >= 2, got {0}")]
    PackingTargetTooSmall(usize),
    #[error(transparent)]
    Bound(#[from] packing::BoundError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The claim fails on this instance, proven by an exact measurement
    /// or certified bound.
    Refuted,
    /// The instance is compatible with the claim.
    Consistent,
    /// The available measurements cannot decide the claim.
    Inconclusive,
    /// An exact measurement contradicts a theorem; either a genuine
    /// counterexample or, far more likely, a bug. Never issued silently.
    RefutationCandidate,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub predicted: String,
    pub measured: String,
    pub verdict: Verdict,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Measured {
    /// Girth of the instance; `null` means acyclic.
    pub girth: Option<usize>,
    pub min_outdegree: usize,
    pub packing_lower: Option<usize>,
    pub packing_upper: Option<usize>,
    pub packing_optimal: Option<bool>,
    pub longest_path: Option<usize>,
    pub longest_path_exact: Option<bool>,
    pub longest_path_upper: Option<usize>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Witnesses {
    pub girth_cycle: Option<Vec<usize>>,
    pub packing_cycles: Vec<Vec<usize>>,
    pub path: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub instance: String,
    pub params: BTreeMap<String, u64>,
    pub measured: Measured,
    pub claims: Vec<Claim>,
    pub witnesses: Witnesses,
}

impl VerificationReport {
    fn new(instance: String, params: BTreeMap<String, u64>) -> Self {
        Self {
            schema: 1,
            instance,
            params,
            measured: Measured::default(),
            claims: Vec::new(),
            witnesses: Witnesses::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn has_refutation_candidate(&self) -> bool {
        self.claims
            .iter()
            .any(|c| c.verdict == Verdict::RefutationCandidate)
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// May this instance be solved exactly? Small vertex counts always
/// qualify; otherwise the total cycle count decides.
fn exact_gate(d: &Digraph) -> bool {
    if d.vertex_count() <= EXACT_VERTEX_LIMIT {
        return true;
    }
    !enumerate_cycles(d, None, EXACT_CYCLE_LIMIT).truncated
}

/// Best packing knowledge for an instance: exact solve behind the size
/// gate, combined with a certified counting bound when one is supplied.
fn measure_packing(d: &Digraph, certified_upper: Option<usize>, budget: u64) -> Packing {
    let solved = if exact_gate(d) {
        packing::max_disjoint_cycles(d, budget)
    } else {
        // cheap lower-bound probe only
        packing::max_disjoint_cycles(d, 2_000.min(budget))
    };
    let mut upper = solved.upper_bound;
    if let Some(cb) = certified_upper {
        upper = upper.min(cb);
    }
    let upper = upper.max(solved.lower_bound);
    Packing {
        lower_bound: solved.lower_bound,
        upper_bound: upper,
        optimal: solved.lower_bound == upper,
        cycles: solved.cycles,
    }
}

fn record_packing(report: &mut VerificationReport, p: &Packing) {
    report.measured.packing_lower = Some(p.lower_bound);
    report.measured.packing_upper = Some(p.upper_bound);
    report.measured.packing_optimal = Some(p.optimal);
    report.witnesses.packing_cycles = p.cycles.iter().map(|c| c.vertices().to_vec()).collect();
}

/// The conjectured threshold ceil(g*k/(g-1)) that the generated families
/// are built to refute.
fn conjectured_threshold(g: usize, k: usize) -> usize {
    ceil_div(g * k, g - 1)
}

fn girth_claim(
    report: &mut VerificationReport,
    label: &str,
    id: &str,
    target: usize,
    measured: Option<usize>,
) {
    report.claims.push(Claim {
        id: id.to_string(),
        statement: format!("{label} has girth exactly {target}"),
        predicted: target.to_string(),
        measured: measured.map_or("acyclic".to_string(), |g| g.to_string()),
        verdict: if measured == Some(target) {
            Verdict::Consistent
        } else {
            Verdict::Refuted
        },
        note: None,
    });
}

fn conjecture2_claim(
    report: &mut VerificationReport,
    g: usize,
    k: usize,
    threshold: usize,
    min_outdegree: usize,
    packing: &Packing,
) {
    let verdict = if min_outdegree >= threshold && packing.upper_bound < k {
        Verdict::Refuted
    } else if packing.lower_bound >= k {
        Verdict::Consistent
    } else {
        Verdict::Inconclusive
    };
    report.claims.push(Claim {
        id: "girth-outdegree-packing-conjecture".to_string(),
        statement: format!(
            "every digraph with girth {g} and minimum outdegree at least \
             ceil(g*k/(g-1)) = {threshold} contains {k} vertex-disjoint cycles"
        ),
        predicted: format!(">= {k} disjoint cycles at outdegree {threshold}"),
        measured: format!(
            "min outdegree {min_outdegree}, packing in [{}, {}]",
            packing.lower_bound, packing.upper_bound
        ),
        verdict,
        note: None,
    });
}

/// Even- or odd-girth family instance: generate, measure, and judge the
/// girth/outdegree packing conjecture plus the family's own bound.
pub fn verify_theorem2_instance(
    g: usize,
    k: usize,
    t: usize,
    c: usize,
    budget: u64,
) -> Result<VerificationReport, HarnessError> {
    if g.is_multiple_of(2) {
        verify_even_instance(g, k, t, c, budget)
    } else if c > 0 {
        Err(HarnessError::ShiftOnOddFamily)
    } else {
        verify_odd_instance(g, k, t, budget)
    }
}

fn family_params(p: &ConstructionParams, t: usize) -> BTreeMap<String, u64> {
    BTreeMap::from([
        ("girth".to_string(), p.girth as u64),
        ("packing_target".to_string(), p.packing_target as u64),
        ("shift".to_string(), p.shift as u64),
        ("deficiency".to_string(), t as u64),
        ("min_outdegree".to_string(), p.min_outdegree as u64),
        ("layer_count".to_string(), p.layer_count as u64),
    ])
}

fn verify_even_instance(
    g: usize,
    k: usize,
    t: usize,
    c: usize,
    budget: u64,
) -> Result<VerificationReport, HarnessError> {
    let (d, params) = generators::even_girth(g, k, c)?;
    let mut report = VerificationReport::new(
        format!("even-girth(g={g},k={k},t={t},c={c})"),
        family_params(&params, t),
    );
    let cert = d.girth();
    report.measured.girth = cert.girth;
    report.measured.min_outdegree = d.min_outdegree();
    report.witnesses.girth_cycle = (!cert.witness.is_empty()).then(|| cert.witness.clone());

    girth_claim(
        &mut report,
        "the construction",
        "girth-target",
        g,
        cert.girth,
    );

    let h = params.min_outdegree;
    report.claims.push(Claim {
        id: "min-outdegree-target".to_string(),
        statement: format!("every vertex has outdegree exactly h = {h}"),
        predicted: h.to_string(),
        measured: report.measured.min_outdegree.to_string(),
        verdict: if report.measured.min_outdegree == h {
            Verdict::Consistent
        } else {
            Verdict::Refuted
        },
        note: None,
    });

    // counting bound: every cycle alternates the bipartition and has
    // length >= g, so it uses at least g/2 of the n X-vertices
    let certified = counting_bound(&d, &params.x_layer(), g / 2, BoundMode::Certified)?;
    let packing = measure_packing(&d, Some(certified), budget);
    record_packing(&mut report, &packing);

    let applicable = k >= (t + 1) * (g - 1);
    let cap = k.saturating_sub(t);
    report.claims.push(Claim {
        id: "packing-at-most-k-minus-t".to_string(),
        statement: format!(
            "the instance has at most k - t = {cap} vertex-disjoint cycles, \
             applicable when k >= (t+1)(g-1) = {}",
            (t + 1) * (g - 1)
        ),
        predicted: format!("<= {cap} disjoint cycles"),
        measured: format!(
            "packing in [{}, {}], certified counting bound {certified}",
            packing.lower_bound, packing.upper_bound
        ),
        verdict: if !applicable {
            Verdict::Inconclusive
        } else if packing.lower_bound > cap {
            Verdict::RefutationCandidate
        } else if packing.upper_bound <= cap {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        },
        note: (!applicable).then(|| format!("precondition k >= {} unmet", (t + 1) * (g - 1))),
    });

    let threshold = conjectured_threshold(g, k);
    let measured_outdegree = report.measured.min_outdegree;
    conjecture2_claim(&mut report, g, k, threshold, measured_outdegree, &packing);

    if c > 0 {
        // threshold of the shifted refutation: k > (g-1)(gc + g - 2c)/g
        let lhs = g * k;
        let rhs = (g - 1) * (g * c + g - 2 * c);
        let strict = lhs > rhs;
        let verdict = if strict && packing.upper_bound < k {
            Verdict::Refuted
        } else if packing.lower_bound >= k {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        };
        report.claims.push(Claim {
            id: "no-additive-constant".to_string(),
            statement: format!(
                "f(k,g) = ceil(g*k/(g-1)) + c fails for c = {c} once g*k = {lhs} \
                 exceeds (g-1)(g*c+g-2c) = {rhs}"
            ),
            predicted: format!(">= {k} disjoint cycles at outdegree {}", threshold + c),
            measured: format!(
                "min outdegree {}, packing in [{}, {}]",
                report.measured.min_outdegree, packing.lower_bound, packing.upper_bound
            ),
            verdict,
            note: (!strict).then(|| "instance below the refutation threshold".to_string()),
        });
    }
    Ok(report)
}

fn verify_odd_instance(
    g: usize,
    k: usize,
    t: usize,
    budget: u64,
) -> Result<VerificationReport, HarnessError> {
    let (with_chord, params) = generators::odd_girth(g, k, OddVariant::WithChord)?;
    let (without_chord, _) = generators::odd_girth(g, k, OddVariant::WithoutChord)?;
    let mut report = VerificationReport::new(
        format!("odd-girth(g={g},k={k},t={t})"),
        family_params(&params, t),
    );
    let cert = with_chord.girth();
    let cert_without = without_chord.girth();
    report.measured.girth = cert.girth;
    report.measured.min_outdegree = with_chord.min_outdegree();
    report.witnesses.girth_cycle = (!cert.witness.is_empty()).then(|| cert.witness.clone());

    girth_claim(
        &mut report,
        "the chord variant",
        "girth-target",
        g,
        cert.girth,
    );
    girth_claim(
        &mut report,
        "the chordless variant",
        "girth-without-chord",
        g + 1,
        cert_without.girth,
    );
    report.claims.push(Claim {
        id: "chord-is-single-arc".to_string(),
        statement: "the two variants differ in exactly one arc".to_string(),
        predicted: "1".to_string(),
        measured: (with_chord.arc_count() - without_chord.arc_count()).to_string(),
        verdict: if with_chord.arc_count() == without_chord.arc_count() + 1 {
            Verdict::Consistent
        } else {
            Verdict::Refuted
        },
        note: None,
    });

    // the chordless variant is bipartite with girth g+1, so every cycle
    // uses at least (g+1)/2 X-vertices
    let certified_without = counting_bound(
        &without_chord,
        &params.x_layer(),
        g.div_ceil(2),
        BoundMode::Certified,
    )?;
    let packing_without = measure_packing(&without_chord, Some(certified_without), budget);
    // removing one arc destroys at most one cycle of any packing, so the
    // chord variant holds at most one more cycle than the chordless one
    let chained_upper = packing_without.upper_bound + 1;
    let packing_with = measure_packing(&with_chord, Some(chained_upper), budget);
    record_packing(&mut report, &packing_with);

    let applicable = k >= (t + 2) * (g + 1);
    let cap_without = k.saturating_sub(t).saturating_sub(1);
    report.claims.push(Claim {
        id: "packing-chain".to_string(),
        statement: format!(
            "the chordless variant has at most k-t-1 = {cap_without} disjoint cycles and \
             the chord variant at most one more, applicable when k >= (t+2)(g+1) = {}",
            (t + 2) * (g + 1)
        ),
        predicted: format!(
            "<= {cap_without} and <= {} disjoint cycles",
            cap_without + 1
        ),
        measured: format!(
            "chordless packing in [{}, {}], chord packing in [{}, {}]",
            packing_without.lower_bound,
            packing_without.upper_bound,
            packing_with.lower_bound,
            packing_with.upper_bound
        ),
        verdict: if !applicable {
            Verdict::Inconclusive
        } else if packing_without.lower_bound > cap_without
            || packing_with.lower_bound > cap_without + 1
        {
            Verdict::RefutationCandidate
        } else if packing_without.upper_bound <= cap_without
            && packing_with.upper_bound <= cap_without + 1
        {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        },
        note: (!applicable).then(|| format!("precondition k >= {} unmet", (t + 2) * (g + 1))),
    });

    if packing_with.optimal && packing_without.optimal {
        let p_with = packing_with.lower_bound;
        let p_without = packing_without.lower_bound;
        let ok = p_with >= p_without && p_with - p_without <= 1;
        report.claims.push(Claim {
            id: "arc-removal-delta".to_string(),
            statement: "removing the chord changes the maximum packing by at most one".to_string(),
            predicted: "difference in {0, 1}".to_string(),
            measured: format!("{p_with} - {p_without}"),
            verdict: if ok {
                Verdict::Consistent
            } else {
                Verdict::RefutationCandidate
            },
            note: None,
        });
    }

    let threshold = conjectured_threshold(g, k);
    let measured_outdegree = report.measured.min_outdegree;
    conjecture2_claim(
        &mut report,
        g,
        k,
        threshold,
        measured_outdegree,
        &packing_with,
    );
    Ok(report)
}

/// The bipartite tournament instance showing that minimum outdegree
/// 2k - 2 with girth 4 does not force k disjoint cycles.
pub fn verify_corollary2_instance(
    k: usize,
    budget: u64,
) -> Result<VerificationReport, HarnessError> {
    if k < 2 {
        return Err(HarnessError::PackingTargetTooSmall(k));
    }
    let h = 2 * k - 2;
    let d = generators::bipartite_tournament(h)?;
    let mut report = VerificationReport::new(
        format!("bipartite-tournament(k={k},h={h})"),
        BTreeMap::from([
            ("packing_target".to_string(), k as u64),
            ("min_outdegree".to_string(), h as u64),
            ("y_side".to_string(), (h + 1) as u64),
        ]),
    );
    let cert = d.girth();
    report.measured.girth = cert.girth;
    report.measured.min_outdegree = d.min_outdegree();
    report.witnesses.girth_cycle = (!cert.witness.is_empty()).then(|| cert.witness.clone());

    girth_claim(&mut report, "the tournament", "girth-target", 4, cert.girth);
    report.claims.push(Claim {
        id: "min-outdegree-target".to_string(),
        statement: format!("minimum outdegree is exactly h = {h}"),
        predicted: h.to_string(),
        measured: report.measured.min_outdegree.to_string(),
        verdict: if report.measured.min_outdegree == h {
            Verdict::Consistent
        } else {
            Verdict::Refuted
        },
        note: None,
    });

    // every cycle alternates sides, so it uses >= 2 of the h+1 Y-vertices
    let y = generators::bipartite_tournament_y_side(h);
    let certified = counting_bound(&d, &y, 2, BoundMode::Certified)?;
    let packing = measure_packing(&d, Some(certified), budget);
    record_packing(&mut report, &packing);

    report.claims.push(Claim {
        id: "packing-below-target".to_string(),
        statement: format!("at most k - 1 = {} vertex-disjoint cycles", k - 1),
        predicted: format!("<= {}", k - 1),
        measured: format!(
            "packing in [{}, {}], certified counting bound {certified}",
            packing.lower_bound, packing.upper_bound
        ),
        verdict: if packing.lower_bound > k - 1 {
            Verdict::RefutationCandidate
        } else if packing.upper_bound < k {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        },
        note: None,
    });
    report.claims.push(Claim {
        id: "bt-threshold-sharpness".to_string(),
        statement: format!(
            "minimum outdegree 2k-1 is best possible even for bipartite tournaments: \
             this one has outdegree 2k-2 = {h} and fewer than k = {k} disjoint cycles"
        ),
        predicted: format!("< {k} disjoint cycles"),
        measured: format!("packing upper bound {}", packing.upper_bound),
        verdict: if packing.upper_bound < k {
            Verdict::Consistent
        } else if packing.lower_bound >= k {
            Verdict::RefutationCandidate
        } else {
            Verdict::Inconclusive
        },
        note: None,
    });
    Ok(report)
}

/// Longest-path measurement on the even-girth family: judges both the
/// long-path conjecture (a path of length h(g-1) should exist) and the
/// sharper 2n-1 cap claimed for this construction, independently.
pub fn verify_conjecture3_instance(
    g: usize,
    k: usize,
    budget: u64,
) -> Result<VerificationReport, HarnessError> {
    let (d, params) = generators::even_girth(g, k, 0)?;
    let mut report = VerificationReport::new(
        format!("even-girth-longest-path(g={g},k={k})"),
        family_params(&params, 0),
    );
    report.measured.girth = d.girth().girth;
    report.measured.min_outdegree = d.min_outdegree();

    let digon = probes::find_digon(&d);
    report.claims.push(Claim {
        id: "oriented-graph".to_string(),
        statement: "the instance has no 2-cycles, as the path conjecture requires".to_string(),
        predicted: "no digon".to_string(),
        measured: digon.as_ref().map_or("no digon".to_string(), |c| {
            format!("digon {:?}", c.vertices())
        }),
        verdict: if digon.is_none() {
            Verdict::Consistent
        } else {
            Verdict::Refuted
        },
        note: None,
    });

    let alternation = paths::bipartite_alternation_path_bound(&d);
    let cert = if d.vertex_count() <= 20 {
        paths::longest_path_exact(&d, budget)
    } else {
        // too large for exhaustive search: take a budgeted best-effort
        // witness and let the structural bounds carry the verdicts
        paths::longest_path_exact(&d, budget.min(10_000))
    };
    report.measured.longest_path = Some(cert.length);
    report.measured.longest_path_exact = Some(cert.exact);
    report.measured.longest_path_upper = Some(cert.upper_bound);
    report.witnesses.path = Some(cert.witness.clone());

    let h = params.min_outdegree;
    let n = params.layer_count;
    let conjectured = h * (g - 1);
    let refuted_by_exact = cert.exact && cert.length < conjectured;
    let refuted_by_bound = cert.upper_bound < conjectured;
    report.claims.push(Claim {
        id: "long-path-conjecture".to_string(),
        statement: format!(
            "an oriented graph with girth {g} and minimum outdegree {h} \
             contains a path of length h(g-1) = {conjectured}"
        ),
        predicted: format!(">= {conjectured} arcs"),
        measured: format!(
            "longest path {} (exact: {}), structural upper bound {}{}",
            cert.length,
            cert.exact,
            cert.upper_bound,
            alternation.map_or(String::new(), |b| format!(", alternation bound {b}")),
        ),
        verdict: if refuted_by_exact || refuted_by_bound {
            Verdict::Refuted
        } else if cert.length >= conjectured {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        },
        note: None,
    });

    let paper_cap = 2 * n - 1;
    report.claims.push(Claim {
        id: "path-upper-bound-2n-minus-1".to_string(),
        statement: format!(
            "the longest path of this construction has at most 2n-1 = {paper_cap} arcs"
        ),
        predicted: format!("<= {paper_cap} arcs"),
        measured: format!("longest path {} (exact: {})", cert.length, cert.exact),
        verdict: if cert.length > paper_cap {
            // the witness path alone disproves the cap
            Verdict::Refuted
        } else if cert.exact {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        },
        note: Some(format!(
            "an alternating construction reaches 2n = {} arcs; the verdicts \
             record which cap actually holds",
            2 * n
        )),
    });
    Ok(report)
}

/// Disjoint-cycle check against the 2k-1 outdegree threshold on an
/// arbitrary digraph.
pub fn verify_bt(d: &Digraph, k: usize, budget: u64, label: &str) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("bermond-thomassen({label},k={k})"),
        BTreeMap::from([
            ("packing_target".to_string(), k as u64),
            ("vertex_count".to_string(), d.vertex_count() as u64),
            ("arc_count".to_string(), d.arc_count() as u64),
        ]),
    );
    let cert = d.girth();
    report.measured.girth = cert.girth;
    report.measured.min_outdegree = d.min_outdegree();
    report.witnesses.girth_cycle = (!cert.witness.is_empty()).then(|| cert.witness.clone());
    let threshold = 2 * k - 1;

    if report.measured.min_outdegree < threshold {
        report.claims.push(Claim {
            id: "bermond-thomassen".to_string(),
            statement: format!(
                "every digraph with minimum outdegree at least 2k-1 = {threshold} \
                 contains {k} vertex-disjoint cycles"
            ),
            predicted: format!(">= {k} disjoint cycles at outdegree {threshold}"),
            measured: format!("min outdegree {}", report.measured.min_outdegree),
            verdict: Verdict::Inconclusive,
            note: Some(format!(
                "minimum outdegree below the threshold; the instance only \
                 witnesses that outdegree {} does not suffice",
                report.measured.min_outdegree
            )),
        });
        return report;
    }

    let packing = packing::max_disjoint_cycles(d, budget);
    record_packing(&mut report, &packing);
    let (verdict, note) = if packing.lower_bound >= k {
        (Verdict::Consistent, None)
    } else if packing.optimal {
        let note = if k <= 3 {
            "contradicts the settled k <= 3 cases; a solver bug is the \
             likelier explanation, certificate embedded for audit"
        } else {
            "exact maximum below target; certificate embedded for audit"
        };
        (Verdict::RefutationCandidate, Some(note.to_string()))
    } else {
        (
            Verdict::Inconclusive,
            Some("budget exhausted before the packing was settled".to_string()),
        )
    };
    report.claims.push(Claim {
        id: "bermond-thomassen".to_string(),
        statement: format!(
            "every digraph with minimum outdegree at least 2k-1 = {threshold} \
             contains {k} vertex-disjoint cycles"
        ),
        predicted: format!(">= {k} disjoint cycles"),
        measured: format!(
            "packing in [{}, {}] (optimal: {})",
            packing.lower_bound, packing.upper_bound, packing.optimal
        ),
        verdict,
        note,
    });
    report
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub seed: u64,
    pub edge_list: String,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchSummary {
    pub schema: u32,
    pub params: BTreeMap<String, u64>,
    pub trials: usize,
    pub consistent: usize,
    pub inconclusive: usize,
    pub refutation_candidates: usize,
    /// How many instances survived every probe of the counterexample
    /// filter (each of which the solver must then defuse).
    pub filter_passes: usize,
    pub candidates: Vec<CandidateRecord>,
}

impl SearchSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Seed-deterministic sweep over random digraphs with minimum outdegree
/// 2k-1: each instance runs through the counterexample filter and the
/// packing check. Any refutation candidate is persisted to `out_dir`
/// (edge list plus report) when a directory is given.
pub fn random_search(
    k: usize,
    m: usize,
    trials: usize,
    seed: u64,
    budget: u64,
    out_dir: Option<&Path>,
) -> Result<SearchSummary, std::io::Error> {
    let delta = 2 * k - 1;
    let mut summary = SearchSummary {
        schema: 1,
        params: BTreeMap::from([
            ("packing_target".to_string(), k as u64),
            ("order".to_string(), m as u64),
            ("trials".to_string(), trials as u64),
            ("seed".to_string(), seed),
            ("min_outdegree".to_string(), delta as u64),
        ]),
        trials,
        consistent: 0,
        inconclusive: 0,
        refutation_candidates: 0,
        filter_passes: 0,
        candidates: Vec::new(),
    };
    for i in 0..trials {
        let instance_seed = seed.wrapping_add(i as u64);
        let d = match generators::random_min_outdegree(m, delta, instance_seed) {
            Ok(d) => d,
            Err(_) => {
                summary.inconclusive += 1;
                continue;
            }
        };
        let probe = probes::counterexample_filter(&d);
        if probe.possible_minimal_counterexample {
            summary.filter_passes += 1;
        }
        let report = verify_bt(
            &d,
            k,
            budget,
            &format!("random(m={m},seed={instance_seed})"),
        );
        let verdict = report
            .claims
            .iter()
            .find(|c| c.id == "bermond-thomassen")
            .map(|c| c.verdict)
            .unwrap_or(Verdict::Inconclusive);
        match verdict {
            Verdict::Consistent => summary.consistent += 1,
            Verdict::RefutationCandidate => {
                summary.refutation_candidates += 1;
                let record = CandidateRecord {
                    seed: instance_seed,
                    edge_list: crate::io::to_edge_list(&d),
                    report,
                };
                if let Some(dir) = out_dir {
                    std::fs::create_dir_all(dir)?;
                    std::fs::write(
                        dir.join(format!("candidate_seed{instance_seed}.edges")),
                        &record.edge_list,
                    )?;
                    std::fs::write(
                        dir.join(format!("candidate_seed{instance_seed}.json")),
                        record.report.to_json(),
                    )?;
                }
                summary.candidates.push(record);
            }
            _ => summary.inconclusive += 1,
        }
    }
    Ok(summary)
}
