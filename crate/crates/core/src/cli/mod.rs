//! Report builders behind the command-line tool.

mod format;
mod values;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::braidrep::{
    lantern_check, phi_map, psi_map, BraidError, BraidWord, Level, ParseError, SigmaWord, TkContext, XiWord,
};
use crate::fusion::{dimension_report, BlockSpec, FusionError};
use crate::modular::{build_modular, modular_image_finite, modular_relations_check, numeric_unitarity};
use crate::orderlab::{
    classify_group, gl_order, masbaum_scan, projective_order, trace_of_sigma, ClosureError, GroupId, OrderError,
    OrderVerdict, ScanVerdict, DEFAULT_CLOSURE_CAP, DEFAULT_POWER_CAP,
};
use crate::par::Execution;

pub use format::{to_csv, to_pretty, OutputFormat};
pub use values::{exact_matrix, interval_matrix, tagged, ExactValue, IntervalBox, IntervalValue, Tagged};

pub const TOOL_NAME: &str = "monodromy";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::Consistency(_) => 4,
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::InvalidLevel(_) => CliError::Usage(e.to_string()),
            BraidError::Parse(p) => CliError::Parse(p),
        }
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        CliError::Consistency(e.to_string())
    }
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        match e {
            FusionError::WeightOutOfRange { .. } => CliError::Usage(e.to_string()),
            FusionError::Consistency(_) => CliError::Consistency(e.to_string()),
        }
    }
}

/// Caps, precision and execution mode shared by all commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub closure_cap: usize,
    pub power_cap: u64,
    pub precision_bits: u32,
    pub exec: Execution,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            closure_cap: DEFAULT_CLOSURE_CAP,
            power_cap: DEFAULT_POWER_CAP,
            precision_bits: 64,
            exec: Execution::default(),
        }
    }
}

/// Word alphabet accepted by `rep`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordAlphabet {
    Braid,
    Sigma,
    Xi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeFlags {
    pub exact: bool,
    pub numeric: bool,
    pub precision_bits: u32,
}

/// Common wrapper of every report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub levels: Vec<u32>,
    pub parameters: Value,
    pub results: Value,
    pub tool: ToolInfo,
    pub mode: ModeFlags,
    /// Wall-clock data; the only part of a report that varies between runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Value>,
    /// Set when a cap stopped part of the computation.
    #[serde(default)]
    pub cap_exceeded: bool,
}

impl ReportEnvelope {
    fn new(command: &str, levels: Vec<u32>, parameters: Value, results: Value, opts: &RunOptions) -> Self {
        ReportEnvelope {
            command: command.into(),
            levels,
            parameters,
            results,
            tool: ToolInfo {
                name: TOOL_NAME.into(),
                version: TOOL_VERSION.into(),
            },
            mode: ModeFlags {
                exact: true,
                numeric: true,
                precision_bits: opts.precision_bits,
            },
            timing: None,
            cap_exceeded: false,
        }
    }

    /// Report with the timing data removed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        ReportEnvelope {
            timing: None,
            ..self.clone()
        }
    }
}

fn level(l: u32) -> Result<Level, CliError> {
    Ok(Level::new(l)?)
}

fn is_capped(v: &OrderVerdict) -> bool {
    matches!(v, OrderVerdict::UndecidedCap { .. })
}

/// Matrix, trace, determinant and order verdicts for a braid word.
fn matrix_results(ctx: &TkContext, braid: &BraidWord, opts: &RunOptions) -> Result<(Value, bool), CliError> {
    let m = ctx.eval(braid);
    let bits = opts.precision_bits;
    let proj = projective_order(&m, opts.power_cap)?;
    let gl = gl_order(&m, opts.power_cap)?;
    let capped = is_capped(&proj) || is_capped(&gl);
    Ok((
        json!({
            "matrix": exact_matrix(&m),
            "matrix_numeric": interval_matrix(&m, bits),
            "trace": tagged(&m.trace(), bits),
            "det": tagged(&m.det(), bits),
            "projective_order": proj,
            "gl_order": gl,
        }),
        capped,
    ))
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(x), Value::Object(y)) = (a.as_object_mut(), b) {
        x.extend(y);
    }
    a
}

/// `rep`: evaluate a word in one of the three alphabets.
pub fn cmd_rep(l: u32, word: &str, alphabet: WordAlphabet, opts: &RunOptions) -> Result<ReportEnvelope, CliError> {
    let lv = level(l)?;
    let ctx = TkContext::get(lv);
    let (words, braid) = match alphabet {
        WordAlphabet::Braid => {
            let w = BraidWord::parse(word)?;
            (json!({}), w)
        }
        WordAlphabet::Sigma => {
            let w = SigmaWord::parse(word)?;
            let b = psi_map(&w);
            (json!({ "sigma_word": w }), b)
        }
        WordAlphabet::Xi => {
            let w = XiWord::parse(word)?;
            let s = phi_map(&w);
            let b = psi_map(&s);
            (json!({ "xi_word": w, "sigma_word": s }), b)
        }
    };
    let (res, capped) = matrix_results(&ctx, &braid, opts)?;
    let results = merge(merge(words, json!({ "braid_word": braid })), res);
    let params = json!({ "word": word, "alphabet": alphabet, "power_cap": opts.power_cap });
    let mut r = ReportEnvelope::new("rep", vec![l], params, results, opts);
    r.cap_exceeded = capped;
    Ok(r)
}

/// `fivepoint`: a five-point loop word through both word maps.
pub fn cmd_fivepoint(l: u32, word: &str, opts: &RunOptions) -> Result<ReportEnvelope, CliError> {
    let mut r = cmd_rep(l, word, WordAlphabet::Xi, opts)?;
    r.command = "fivepoint".into();
    r.parameters = json!({ "word": word, "power_cap": opts.power_cap });
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
struct ScanRow {
    level: u32,
    masbaum: ScanVerdict,
    sigma_order: OrderVerdict,
    group: GroupId,
    group_order: Option<u64>,
    /// `closure` or `infinite_element`.
    group_source: &'static str,
    finite: bool,
}

fn scan_row(l: u32, opts: &RunOptions) -> Result<(ScanRow, u128), CliError> {
    let start = Instant::now();
    let lv = level(l)?;
    let ctx = TkContext::get(lv);
    trace_of_sigma(lv)?;
    let masbaum = masbaum_scan(lv);
    let sigma = ctx.eval_sigma(&SigmaWord::parse("s1^-1 s2").expect("valid word"));
    let sigma_order = projective_order(&sigma, opts.power_cap)?;
    let (group, source) = if sigma_order.is_infinite() {
        (GroupId::InfiniteOrCapExceeded { cap: opts.closure_cap }, "infinite_element")
    } else {
        let gens = vec![
            ctx.sigma_generator(crate::braidrep::SigmaGen::S1),
            ctx.sigma_generator(crate::braidrep::SigmaGen::S2),
        ];
        (classify_group(&gens, opts.closure_cap, opts.power_cap, Execution::Sequential)?.group, "closure")
    };
    let bounded = masbaum == ScanVerdict::AllConjugatesBounded;
    let finite = sigma_order.finite_order().is_some();
    if bounded != finite {
        return Err(CliError::Consistency(format!("conjugate scan and order verdict disagree at l={l}")));
    }
    let row = ScanRow {
        level: l,
        masbaum,
        group_order: group.order(),
        sigma_order,
        group,
        group_source: source,
        finite,
    };
    Ok((row, start.elapsed().as_millis()))
}

/// `scan`: per-level verdicts over a range, in ascending level order.
pub fn cmd_scan(l_min: u32, l_max: u32, opts: &RunOptions) -> Result<ReportEnvelope, CliError> {
    if l_min < 1 || l_min > l_max {
        return Err(CliError::Usage(format!("invalid level range {l_min}..{l_max}")));
    }
    let levels: Vec<u32> = (l_min..=l_max).collect();
    let rows = opts.exec.map(&levels, |&l| scan_row(l, opts));
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let finite: Vec<u32> = rows.iter().filter(|(r, _)| r.finite).map(|(r, _)| r.level).collect();
    let capped = rows
        .iter()
        .any(|(r, _)| r.finite && matches!(r.group, GroupId::InfiniteOrCapExceeded { .. }));
    let timing = json!(rows.iter().map(|(r, ms)| json!({ "level": r.level, "runtime_ms": ms })).collect::<Vec<_>>());
    let results = json!({
        "rows": rows.iter().map(|(r, _)| r).collect::<Vec<_>>(),
        "finite_levels": finite,
    });
    let params = json!({ "levels": [l_min, l_max], "closure_cap": opts.closure_cap, "power_cap": opts.power_cap });
    let mut r = ReportEnvelope::new("scan", levels, params, results, opts);
    r.timing = Some(timing);
    r.cap_exceeded = capped;
    Ok(r)
}

/// `fusion`: block dimension by both methods.
pub fn cmd_fusion(l: u32, genus: u32, weights: &[u32], opts: &RunOptions) -> Result<ReportEnvelope, CliError> {
    let lv = level(l)?;
    let spec = BlockSpec::new(genus, weights, lv)?;
    let d = dimension_report(&spec)?;
    if !d.agreement {
        return Err(CliError::Consistency(format!(
            "dimension methods disagree: path {} balanced {} verlinde {}",
            d.path_count, d.balanced, d.verlinde
        )));
    }
    let mut results = json!({
        "dimension": d.dimension,
        "method": "both",
        "agreement": d.agreement,
        "path_count": d.path_count,
        "balanced_decomposition": d.balanced,
        "verlinde": d.verlinde,
    });
    if l == 1 {
        results["level_one_note"] =
            json!("at level 1 the four-point block with weights (1,1,1,1) has dimension 1, not 2");
    }
    let params = json!({ "genus": genus, "weights": weights });
    Ok(ReportEnvelope::new("fusion", vec![l], params, results, opts))
}

/// `modular`: relations, finite image with certificate, unitarity.
pub fn cmd_modular(l: u32, opts: &RunOptions) -> Result<ReportEnvelope, CliError> {
    let lv = level(l)?;
    let rep = build_modular(lv);
    let relations = modular_relations_check(&rep);
    let unitarity = numeric_unitarity(&rep, opts.precision_bits.max(128), -64);
    let mut results = json!({
        "rank": l + 1,
        "relations_ok": relations.all_hold,
        "relations": relations,
        "st_cubed_equals_s_squared": rep.s.mul(&rep.t).pow(3) == rep.s.mul(&rep.s),
        "unitarity_ok": unitarity.within,
        "unitarity_bits": unitarity.bits,
    });
    let mut capped = false;
    match modular_image_finite(&rep, opts.closure_cap, opts.exec) {
        Ok(img) => {
            results["image_order"] = json!(img.order);
            results["certificate_ok"] = json!(img.certificate_ok);
            results["st_projective_order"] = json!(img.st_order);
            results["generation_sizes"] = json!(img.generation_sizes);
        }
        Err(ClosureError::CapExceeded { reached, .. }) => {
            capped = true;
            results["image_order"] = json!("cap_exceeded");
            results["partial_count"] = json!(reached);
            results["certificate_ok"] = json!(false);
        }
        Err(e) => return Err(CliError::Consistency(e.to_string())),
    }
    let params = json!({ "closure_cap": opts.closure_cap });
    let mut r = ReportEnvelope::new("modular", vec![l], params, results, opts);
    r.cap_exceeded = capped;
    Ok(r)
}

/// `lantern`: the loop relation evaluated letter by letter.
pub fn cmd_lantern(l: u32, opts: &RunOptions) -> Result<ReportEnvelope, CliError> {
    let lv = level(l)?;
    let rep = lantern_check(lv);
    let results = json!({
        "word": rep.word,
        "braid_word": rep.braid_word,
        "identity": rep.identity,
        "residual": exact_matrix(&rep.residual),
    });
    Ok(ReportEnvelope::new("lantern", vec![l], json!({}), results, opts))
}

/// Level list for `--levels a..b`.
pub fn parse_level_range(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("expected a range like 1..10, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

/// Weight list for `--weights 1,1,1,1`.
pub fn parse_weights(s: &str) -> Result<Vec<u32>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|w| {
            w.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad weight {w:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_ranges() {
        assert_eq!(parse_level_range("1..10").unwrap(), (1, 10));
        assert_eq!(parse_level_range("3..=3").unwrap(), (3, 3));
        assert!(parse_level_range("10").is_err());
        assert!(parse_level_range("a..3").is_err());
    }

    #[test]
    fn weight_lists() {
        assert_eq!(parse_weights("1, 1,2").unwrap(), vec![1, 1, 2]);
        assert_eq!(parse_weights("").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_weights("1,x").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn envelope_round_trip() {
        let r = cmd_rep(2, "g1 g2^-1", WordAlphabet::Braid, &RunOptions::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: ReportEnvelope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn level_zero_is_rejected() {
        assert_eq!(cmd_lantern(0, &RunOptions::default()).unwrap_err().exit_code(), 2);
    }
}
