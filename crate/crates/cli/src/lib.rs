//! Query parsing and report rendering for the `weyl` binary.
//!
//! Every command produces a [`Report`]: a machine-readable JSON document
//! (big integers as decimal strings, keys in sorted order) and an aligned
//! human text. Identical inputs render byte-identical output; nothing
//! nondeterministic (timings, thread interleavings) reaches stdout.

use serde_json::{json, Value};
use weyl_core::characters::weyl_dim;
use weyl_core::classify::{classify_mt, classify_qm, qm_bruteforce, ChainStep, Verdict};
use weyl_core::jantzen::{globally_irreducible_oracle, jantzen_sum};
use weyl_core::killing::{classify_killing, QuotientSpec};
use weyl_core::verify::{run_acceptance, CheckResult, VerifyConfig};
use weyl_core::weight_lattice::{minuscule_weights, orbit_summary};
use weyl_core::{Error, Family, RootSystem, RootSystemType, Weight};

/// Failures split by exit-code contract: usage problems exit 2 with a
/// message, domain errors exit 1 with a structured JSON body.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// One command's output in both renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub human: String,
    pub json: Value,
}

/// Parse a type spec like "B4" or "e6" (family letter + rank, no separator).
pub fn parse_type(spec: &str) -> Result<RootSystemType, CliError> {
    let spec = spec.trim();
    let mut chars = spec.chars();
    let letter = chars
        .next()
        .ok_or_else(|| CliError::Usage("empty type spec".into()))?;
    let family = match letter.to_ascii_uppercase() {
        'A' => Family::A,
        'B' => Family::B,
        'C' => Family::C,
        'D' => Family::D,
        'E' => Family::E,
        'F' => Family::F,
        'G' => Family::G,
        other => {
            return Err(CliError::Usage(format!(
                "unknown family '{other}'; expected one of A-G"
            )))
        }
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad rank in type spec '{spec}'")))?;
    Ok(RootSystemType::new(family, rank)?)
}

/// Parse a dense comma-separated weight like "1,0,1" against a rank.
pub fn parse_weight(spec: &str, rank: usize) -> Result<Weight, CliError> {
    let coords: Result<Vec<i64>, _> = spec.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let coords =
        coords.map_err(|_| CliError::Usage(format!("weight '{spec}' is not a comma list of integers")))?;
    if coords.len() != rank {
        return Err(CliError::Usage(format!(
            "weight has {} entries but the type has rank {rank}",
            coords.len()
        )));
    }
    Ok(Weight(coords))
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.0.iter().map(|&c| json!(c)).collect())
}

fn nodes_one_based(nodes: &[usize]) -> Vec<usize> {
    nodes.iter().map(|&i| i + 1).collect()
}

fn chain_step_json(step: &ChainStep) -> Value {
    match step {
        ChainStep::LeviRestrict { nodes, typ, weight } => json!({
            "step": "levi-restrict",
            "nodes": nodes_one_based(nodes),
            "type": typ.to_string(),
            "weight": weight_json(weight),
        }),
        ChainStep::A1Coefficient { node, coefficient } => json!({
            "step": "a1-coefficient",
            "node": node + 1,
            "coefficient": coefficient,
        }),
        ChainStep::FundamentalBase {
            typ,
            node,
            prime,
            reason,
        } => json!({
            "step": "fundamental-base",
            "type": typ.to_string(),
            "node": node + 1,
            "prime": prime,
            "reason": reason.to_string(),
        }),
        ChainStep::EndSumBase { typ, prime, reason } => json!({
            "step": "end-sum-base",
            "type": typ.to_string(),
            "prime": prime,
            "reason": reason.to_string(),
        }),
        ChainStep::OracleBase { prime } => json!({
            "step": "oracle-base",
            "prime": prime,
        }),
    }
}

fn chain_step_human(step: &ChainStep) -> String {
    match step {
        ChainStep::LeviRestrict { nodes, typ, weight } => format!(
            "restrict to the Levi on nodes {:?} -> ({typ}, {weight})",
            nodes_one_based(nodes)
        ),
        ChainStep::A1Coefficient { node, coefficient } => format!(
            "coefficient {coefficient} at node {} -> SL2 with d = {coefficient}",
            node + 1
        ),
        ChainStep::FundamentalBase {
            typ,
            node,
            prime,
            reason,
        } => format!(
            "base case {typ} omega_{} reducible at p = {prime} [{reason}]",
            node + 1
        ),
        ChainStep::EndSumBase { typ, prime, reason } => {
            format!("base case {typ} omega_1+omega_n reducible at p = {prime} [{reason}]")
        }
        ChainStep::OracleBase { prime } => {
            format!("sum formula verifies reducibility at p = {prime}")
        }
    }
}

pub fn cmd_root_info(typ: RootSystemType) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let minuscule = minuscule_weights(&rs);
    let highest = rs.highest_root();
    let short = rs.highest_short_root();
    let json = json!({
        "type": typ.to_string(),
        "rank": typ.rank,
        "cartan": rs.cartan(),
        "positive_roots": rs.num_positive_roots(),
        "weyl_group_order": rs.weyl_group_order().to_string(),
        "dual_coxeter_number": rs.dual_coxeter_number(),
        "highest_root": weight_json(&highest.weight_coords),
        "highest_short_root": weight_json(&short.weight_coords),
        "minuscule_weights": minuscule.iter().map(weight_json).collect::<Vec<_>>(),
    });
    let mut human = String::new();
    human.push_str(&format!("type:                {typ}\n"));
    human.push_str(&format!("rank:                {}\n", typ.rank));
    human.push_str(&format!("positive roots:      {}\n", rs.num_positive_roots()));
    human.push_str(&format!("|W|:                 {}\n", rs.weyl_group_order()));
    human.push_str(&format!("dual Coxeter number: {}\n", rs.dual_coxeter_number()));
    human.push_str(&format!("highest root:        {}\n", highest.weight_coords));
    human.push_str(&format!("highest short root:  {}\n", short.weight_coords));
    let ms: Vec<String> = minuscule.iter().map(|w| w.to_string()).collect();
    human.push_str(&format!("minuscule weights:   {}\n", ms.join(" ")));
    Ok(Report { human, json })
}

pub fn cmd_dim(typ: RootSystemType, lam: &Weight) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let dim = weyl_dim(&rs, lam)?;
    let orbit = orbit_summary(&rs, lam)?;
    let json = json!({
        "type": typ.to_string(),
        "weight": weight_json(lam),
        "weyl_dim": dim.to_string(),
        "orbit_size": orbit.orbit_size.to_string(),
    });
    let human = format!(
        "dim V({lam}) = {dim}    (orbit of the highest weight: {})\n",
        orbit.orbit_size
    );
    Ok(Report { human, json })
}

pub fn cmd_minuscule(typ: RootSystemType) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let minuscule = minuscule_weights(&rs);
    let json = json!({
        "type": typ.to_string(),
        "count": minuscule.len(),
        "minuscule_weights": minuscule.iter().map(weight_json).collect::<Vec<_>>(),
    });
    let mut human = format!("{} minuscule weights for {typ}:\n", minuscule.len());
    for w in &minuscule {
        let dim = weyl_dim(&rs, w).unwrap();
        human.push_str(&format!("  {w}  (dim {dim})\n"));
    }
    Ok(Report { human, json })
}

pub fn cmd_classify(typ: RootSystemType, lam: &Weight) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let verdict = classify_mt(&rs, lam)?;
    let (json, human) = match &verdict {
        Verdict::GloballyIrreducible { reason } => {
            let reason_str = match reason {
                weyl_core::classify::IrreducibleReason::Minuscule => "minuscule",
                weyl_core::classify::IrreducibleReason::E8Adjoint => "E8-adjoint",
            };
            (
                json!({
                    "type": typ.to_string(),
                    "weight": weight_json(lam),
                    "outcome": "globally-irreducible",
                    "reason": reason_str,
                }),
                format!("V({lam}) over {typ} is irreducible over every field ({reason_str})\n"),
            )
        }
        Verdict::Reducible { witness_prime, chain } => {
            let mut human = format!(
                "V({lam}) over {typ} is reducible in characteristic {witness_prime}\n"
            );
            for (i, step) in chain.iter().enumerate() {
                human.push_str(&format!("  {}. {}\n", i + 1, chain_step_human(step)));
            }
            (
                json!({
                    "type": typ.to_string(),
                    "weight": weight_json(lam),
                    "outcome": "reducible",
                    "witness_prime": witness_prime,
                    "chain": chain.iter().map(chain_step_json).collect::<Vec<_>>(),
                }),
                human,
            )
        }
    };
    Ok(Report { human, json })
}

pub fn cmd_jantzen(typ: RootSystemType, lam: &Weight, p: u64) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let report = jantzen_sum(&rs, lam, p)?;
    let terms: Vec<Value> = report
        .term_log
        .iter()
        .map(|t| {
            let chi = match &t.euler {
                weyl_core::characters::Euler::Zero => json!("wall"),
                weyl_core::characters::Euler::Term { sign, weight } => json!({
                    "sign": sign,
                    "weight": weight_json(weight),
                }),
            };
            json!({
                "alpha": t.alpha,
                "m": t.m,
                "valuation": t.valuation,
                "chi": chi,
            })
        })
        .collect();
    let sum_terms: Vec<Value> = report
        .sum
        .terms()
        .map(|(w, c)| json!({"weight": weight_json(w), "coeff": c}))
        .collect();
    let json = json!({
        "type": typ.to_string(),
        "weight": weight_json(lam),
        "prime": p,
        "irreducible": report.irreducible,
        "sum": sum_terms,
        "prime_bound": report.prime_bound,
        "terms": terms,
    });
    let mut human = format!(
        "Jantzen sum for V({lam}) over {typ} at p = {p}:\n  sum = {}\n  {}\n",
        report.sum,
        if report.irreducible {
            "V(lambda) x F_p is irreducible"
        } else {
            "V(lambda) x F_p is reducible"
        }
    );
    if let Some(split) = report.two_factor_split(&rs)? {
        human.push_str(&format!(
            "  two composition factors: dim L({lam}) = {}, dim L({}) = {}\n",
            split.dim_head, split.socle_weight, split.dim_socle
        ));
    }
    Ok(Report { human, json })
}

pub fn cmd_primes(typ: RootSystemType, lam: &Weight) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let (globally_irreducible, primes) = globally_irreducible_oracle(&rs, lam)?;
    let bound = weyl_core::jantzen::prime_bound(&rs, lam)?;
    let json = json!({
        "type": typ.to_string(),
        "weight": weight_json(lam),
        "globally_irreducible": globally_irreducible,
        "reducible_primes": primes,
        "prime_bound": bound,
    });
    let human = if globally_irreducible {
        format!("V({lam}) over {typ}: no reducible primes (checked all p < {bound})\n")
    } else {
        format!(
            "V({lam}) over {typ}: reducible exactly at {primes:?} (checked all p < {bound})\n"
        )
    };
    Ok(Report { human, json })
}

pub fn cmd_qm(typ: RootSystemType, lam: &Weight) -> Result<Report, CliError> {
    let rs = RootSystem::build(typ);
    let case = classify_qm(&rs, lam)?;
    let brute = qm_bruteforce(&rs, lam)?;
    let case_str = match case {
        Some(weyl_core::classify::QmCase::Minuscule) => "minuscule",
        Some(weyl_core::classify::QmCase::HighestShortRoot) => "highest-short-root",
        Some(weyl_core::classify::QmCase::BnOmega1PlusOmegaN) => "Bn-omega1-plus-omegan",
        Some(weyl_core::classify::QmCase::G2Omega2) => "G2-omega2",
        Some(weyl_core::classify::QmCase::G2Omega1PlusOmega2) => "G2-omega1-plus-omega2",
        None => "none",
    };
    let json = json!({
        "type": typ.to_string(),
        "weight": weight_json(lam),
        "case": case_str,
        "all_proper_levi_irreducible": brute,
    });
    let human = format!(
        "V_J({lam}) over {typ} irreducible for every proper J: {brute} (pattern: {case_str})\n"
    );
    Ok(Report { human, json })
}

pub fn cmd_killing(spec: QuotientSpec) -> Result<Report, CliError> {
    let report = classify_killing(&spec)?;
    let lat = &report.lattice;
    let gram: Vec<Vec<String>> = lat
        .gram_scaled
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    let json = json!({
        "spec": report.spec.to_string(),
        "ambient": lat.ambient.to_string(),
        "basis": lat.basis.iter().map(weight_json).collect::<Vec<_>>(),
        "e_factor": lat.e_factor.to_string(),
        "gram_scaled": gram,
        "det_form": lat.det_form.to_string(),
        "det_scaled": lat.det_scaled.to_string(),
        "globally_nondegenerate": report.globally_nondegenerate,
        "degenerate_primes": report.degenerate_primes,
    });
    let mut human = format!("reduced Killing form for {}:\n", report.spec);
    human.push_str(&format!("  ambient type:      {}\n", lat.ambient));
    human.push_str(&format!("  e factor:          {}\n", lat.e_factor));
    human.push_str(&format!("  det (form):        {}\n", lat.det_form));
    human.push_str(&format!("  det (scaled):      {}\n", lat.det_scaled));
    if report.globally_nondegenerate {
        human.push_str("  nondegenerate over every field\n");
    } else {
        human.push_str(&format!(
            "  degenerate in characteristic {:?}\n",
            report.degenerate_primes
        ));
    }
    Ok(Report { human, json })
}

/// Render the verify run: deterministic stdout (per-check pass/fail lines or
/// the JSON document) plus an exit flag. Timings are the caller's business
/// (they go to stderr, never stdout).
pub fn cmd_verify(cfg: &VerifyConfig) -> (Vec<CheckResult>, Report, bool) {
    let results = run_acceptance(cfg);
    let all_passed = results.iter().all(|r| r.passed);
    let mut human = String::new();
    for r in &results {
        human.push_str(&format!(
            "{} criterion {:2} {}: {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.details
        ));
    }
    human.push_str(if all_passed {
        "all criteria passed\n"
    } else {
        "SOME CRITERIA FAILED\n"
    });
    let json = json!({
        "max_rank": cfg.max_rank,
        "dim_cap": cfg.dim_cap,
        "all_passed": all_passed,
        "checks": results.iter().map(|r| json!({
            "id": r.id,
            "name": r.name,
            "passed": r.passed,
            "details": r.details,
        })).collect::<Vec<_>>(),
    });
    (results, Report { human, json }, all_passed)
}

/// Structured error body for exit-code-1 failures.
pub fn error_json(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}
