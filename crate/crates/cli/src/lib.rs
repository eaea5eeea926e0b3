//! Runs the verification suite for a list of `(m, f)` cases and renders the
//! results as a table or as JSON.

use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sympchar_core::formulas;
use sympchar_core::gf::{FieldContext, MAX_DEGREE};
use sympchar_core::permchar::{
    form_cross, form_norms, pointwise_scan, stabilizer_norm, vector_form_products, verify_degree_identities,
    verify_orbit_structure, PointwiseScan, DEFAULT_SAMPLE_COUNT,
};
use sympchar_core::srg::{build_perp_graph, chi_degrees, spectrum, verify_rank3, verify_srg};
use sympchar_core::{
    Bounds, Case, CaseId, CheckRecord, Comparison, DomainKind, Error, InnerProductReport, Mode, Summary,
    VerificationReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Fields,
    Orbits,
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Srg,
    Degrees,
    Theorem,
    Corollary,
    Rank3,
}

impl Check {
    /// Dependency order: fields, then groups and domains, then characters.
    pub const ALL: [Check; 11] = [
        Check::Fields,
        Check::Orbits,
        Check::Eq1,
        Check::Eq2,
        Check::Eq3,
        Check::Eq4,
        Check::Srg,
        Check::Degrees,
        Check::Theorem,
        Check::Corollary,
        Check::Rank3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::Fields => "fields",
            Check::Orbits => "orbits",
            Check::Eq1 => "eq1",
            Check::Eq2 => "eq2",
            Check::Eq3 => "eq3",
            Check::Eq4 => "eq4",
            Check::Srg => "srg",
            Check::Degrees => "degrees",
            Check::Theorem => "theorem",
            Check::Corollary => "corollary",
            Check::Rank3 => "rank3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModeKind {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub m: usize,
    pub f: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub cases: Vec<CaseSpec>,
    pub checks: Vec<Check>,
    pub mode: ModeKind,
    pub count: usize,
    pub seed: Option<u64>,
    pub bounds: Bounds,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cases: Vec::new(),
            checks: Check::ALL.to_vec(),
            mode: ModeKind::Exhaustive,
            count: DEFAULT_SAMPLE_COUNT,
            seed: None,
            bounds: Bounds::default(),
            format: OutputFormat::Table,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.cases.is_empty() {
            return Err(ConfigError("no cases given; pass at least one --m/--f pair".into()));
        }
        for c in &self.cases {
            if c.m == 0 || c.f == 0 || c.f > MAX_DEGREE {
                return Err(ConfigError(format!("invalid case (m, f) = ({}, {}): need m >= 1 and 1 <= f <= 8", c.m, c.f)));
            }
            if 2 * c.m * c.f as usize > 64 {
                return Err(ConfigError(format!("case (m, f) = ({}, {}) exceeds 2mf <= 64", c.m, c.f)));
            }
        }
        if self.checks.is_empty() {
            return Err(ConfigError("no checks selected".into()));
        }
        if self.mode == ModeKind::Sampled && self.seed.is_none() {
            return Err(ConfigError("sampled mode requires --seed".into()));
        }
        if self.count == 0 {
            return Err(ConfigError("--count must be positive".into()));
        }
        Ok(())
    }
}

/// Top-level JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<10} {:<10} {:<5} {:>9}  computed / expected", "case", "check", "pass", "ms");
        for r in &self.records {
            let case = format!("m={} q={}", r.case.m, r.case.q);
            let verdict = if r.pass { "ok" } else { "FAIL" };
            let values = if r.computed == r.expected {
                shorten(&r.computed.to_string())
            } else {
                format!("{} / {}", shorten(&r.computed.to_string()), shorten(&r.expected.to_string()))
            };
            let _ = writeln!(out, "{case:<10} {:<10} {verdict:<5} {:>9}  {values}", r.check_id, r.elapsed_ms);
            if let Some(note) = &r.note {
                let _ = writeln!(out, "{:<27}note: {note}", "");
            }
        }
        let s = self.summary;
        let _ = writeln!(out, "{} checks, {} passed, {} failed", s.total, s.passed, s.failed);
        out
    }
}

fn shorten(s: &str) -> String {
    const LIMIT: usize = 72;
    if s.chars().count() <= LIMIT {
        s.to_string()
    } else {
        let head: String = s.chars().take(LIMIT - 3).collect();
        format!("{head}...")
    }
}

fn record<T: Serialize + PartialEq>(check: Check, id: CaseId, cmp: &Comparison<T>) -> CheckRecord {
    CheckRecord::from_comparison(check.id(), id, cmp)
}

fn inner_products(check: Check, id: CaseId, reports: &[InnerProductReport]) -> CheckRecord {
    record(check, id, &InnerProductReport::combine(reports))
}

fn fields_check(f: u32) -> sympchar_core::Result<Comparison<Value>> {
    let k = FieldContext::new(f)?;
    let q = k.order();
    let elements: Vec<_> = k.elements().collect();
    let tables_match = elements.iter().all(|&a| elements.iter().all(|&b| k.mul(a, b) == k.mul_reference(a, b)));
    let inverses = elements[1..].iter().all(|&a| matches!(k.inv(a), Ok(i) if k.mul(a, i) == sympchar_core::FieldElement::ONE));
    let image = k.artin_schreier_image();
    let kernel: Vec<_> = elements.iter().copied().filter(|&a| k.absolute_trace(a) == 0).collect();
    let image_is_kernel = image.iter().copied().eq(kernel.iter().copied());
    Ok(Comparison::new(
        json!({
            "order": q,
            "modulus": k.modulus(),
            "tables_match_reference": tables_match,
            "inverses": inverses,
            "artin_schreier_image": image.len(),
            "image_is_trace_kernel": image_is_kernel,
        }),
        json!({
            "order": q,
            "modulus": k.modulus(),
            "tables_match_reference": true,
            "inverses": true,
            "artin_schreier_image": q / 2,
            "image_is_trace_kernel": true,
        }),
        "field axioms against carry-less multiplication; |{a + a^2}| = q/2 = |ker Tr|",
    ))
}

/// Theorem and corollary share one pass over the group.
struct CaseRun<'a> {
    case: &'a Case,
    config: &'a RunConfig,
    scan: Option<(PointwiseScan, Option<String>)>,
}

impl CaseRun<'_> {
    fn mode(&self) -> sympchar_core::Result<(Mode, Option<String>)> {
        let sampled = |seed| Mode::Sampled { count: self.config.count, seed };
        match self.config.mode {
            ModeKind::Sampled => Ok((sampled(self.config.seed.expect("validated")), None)),
            ModeKind::Exhaustive => {
                let order = sympchar_core::grp::order_formula(sympchar_core::GroupLabel::Sp, self.case.m(), self.case.q())?;
                if order <= self.case.bounds().enumeration {
                    return Ok((Mode::Exhaustive, None));
                }
                let seed = self.config.seed.unwrap_or(0);
                let notice = format!(
                    "|G| = {order} exceeds the enumeration bound {}; sampled {} elements with seed {seed} instead",
                    self.case.bounds().enumeration,
                    self.config.count
                );
                eprintln!("notice: m={} q={}: {notice}", self.case.m(), self.case.q());
                Ok((sampled(seed), Some(notice)))
            }
        }
    }

    fn scan(&mut self) -> sympchar_core::Result<&(PointwiseScan, Option<String>)> {
        if self.scan.is_none() {
            let (mode, notice) = self.mode()?;
            self.scan = Some((pointwise_scan(self.case, mode)?, notice));
        }
        Ok(self.scan.as_ref().expect("just filled"))
    }

    fn check(&mut self, check: Check) -> sympchar_core::Result<CheckRecord> {
        let case = self.case;
        let (m, q) = (case.m(), case.q());
        let id = CaseId { m, q };
        Ok(match check {
            Check::Fields => record(check, id, &fields_check(case.space().field_degree())?),
            Check::Orbits => record(check, id, &verify_orbit_structure(case)?),
            Check::Eq1 => inner_products(check, id, &[stabilizer_norm(case)?]),
            Check::Eq2 => inner_products(check, id, &form_norms(case)?),
            Check::Eq3 => inner_products(check, id, &[form_cross(case)?]),
            Check::Eq4 => inner_products(check, id, &vector_form_products(case)?),
            Check::Srg if m == 1 => {
                let graph = build_perp_graph(case.domain(DomainKind::Lines)?)?;
                let max_degree = (0..graph.vertex_count()).map(|i| graph.degree(i)).max().unwrap_or(0);
                let cmp = Comparison::new(
                    json!({ "vertices": graph.vertex_count(), "max_degree": max_degree }),
                    json!({ "vertices": formulas::line_count(1, q) as u64, "max_degree": 0 }),
                    "m = 1: q+1 pairwise non-orthogonal lines",
                );
                let mut r = record(check, id, &cmp);
                r.note = Some("m = 1 is degenerate: the graph is edgeless and not strongly regular".into());
                r
            }
            Check::Srg => {
                let cmp = verify_srg(case)?;
                let spec = spectrum(&cmp.computed);
                let computed = json!({
                    "params": cmp.computed,
                    "feasible": cmp.computed.feasible(),
                    "integral_spectrum": spec.is_ok(),
                });
                let expected = json!({ "params": cmp.expected, "feasible": true, "integral_spectrum": true });
                let mut r = record(check, id, &Comparison::new(computed, expected, cmp.provenance));
                if let Err(e) = spec {
                    r.note = Some(e.to_string());
                }
                r
            }
            Check::Degrees => {
                let (chi, note) = if m == 1 {
                    let (lo, hi) = formulas::chi_degrees(1, q);
                    ((lo, hi), Some("m = 1: chi degrees from the closed form, no graph spectrum".to_string()))
                } else {
                    let c = chi_degrees(case)?;
                    if !c.pass() {
                        let mut r = record(check, id, &c);
                        r.note = Some("graph multiplicities differ from the closed form".into());
                        return Ok(r);
                    }
                    ((c.computed.0 as u128, c.computed.1 as u128), None)
                };
                let cmp = verify_degree_identities(m, q, chi);
                let computed = json!({ "chi": [chi.0 as u64, chi.1 as u64], "sums": cmp.computed });
                let (cm, cp) = formulas::chi_degrees(m, q);
                let expected = json!({ "chi": [cm as u64, cp as u64], "sums": cmp.expected });
                let mut r = record(check, id, &Comparison::new(computed, expected, cmp.provenance));
                r.note = note;
                r
            }
            Check::Theorem | Check::Corollary => {
                let (scan, notice) = self.scan()?;
                let cmp = if check == Check::Theorem { scan.theorem() } else { scan.corollary() };
                let mode = serde_json::to_value(scan.mode).expect("serializable");
                let computed = json!({ "mode": mode, "result": cmp.computed });
                let expected = json!({ "mode": mode, "result": cmp.expected });
                let mut r = record(check, id, &Comparison::new(computed, expected, cmp.provenance));
                r.note = notice.clone();
                r
            }
            Check::Rank3 => {
                let mut r = record(check, id, &verify_rank3(case)?);
                if m == 1 {
                    r.note = Some("m = 1 is degenerate: Sp(2, q) is doubly transitive on the q+1 lines".into());
                }
                r
            }
        })
    }
}

fn run_case(spec: CaseSpec, config: &RunConfig) -> Vec<CheckRecord> {
    let q = 1u64 << spec.f;
    let id = CaseId { m: spec.m, q };
    let case = match Case::new(spec.m, spec.f, config.bounds) {
        Ok(c) => c,
        Err(e) => return config.checks.iter().map(|c| CheckRecord::error(c.id(), id, e.to_string())).collect(),
    };
    let mut run = CaseRun { case: &case, config, scan: None };
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    checks
        .into_iter()
        .map(|check| {
            let start = Instant::now();
            let mut r = run.check(check).unwrap_or_else(|e: Error| CheckRecord::error(check.id(), id, e.to_string()));
            r.elapsed_ms = start.elapsed().as_millis() as u64;
            r
        })
        .collect()
}

/// Runs every selected check on every case. Cases run concurrently.
pub fn run(config: &RunConfig) -> Result<Report, ConfigError> {
    config.validate()?;
    let records: Vec<CheckRecord> = config.cases.par_iter().flat_map_iter(|&c| run_case(c, config)).collect();
    let VerificationReport { records, summary } = VerificationReport::from_records(records);
    Ok(Report { version: env!("CARGO_PKG_VERSION").to_string(), config: config.clone(), records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_err());
        c.cases.push(CaseSpec { m: 2, f: 1 });
        assert!(c.validate().is_ok());
        c.mode = ModeKind::Sampled;
        assert!(c.validate().is_err());
        c.seed = Some(1);
        assert!(c.validate().is_ok());
        c.cases.push(CaseSpec { m: 1, f: 9 });
        assert!(c.validate().is_err());
    }

    #[test]
    fn check_ids_are_serde_names() {
        for c in Check::ALL {
            assert_eq!(serde_json::to_value(c).unwrap(), Value::from(c.id()));
        }
    }
}
