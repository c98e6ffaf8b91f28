//! Batch frontend: parse a job, run the block computation, and serialize the
//! report as a table, canonical JSON, or CSV. All three formats carry the
//! same numeric content.

use std::io::Write;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use famalg::blockcalc::{block_report, generic_fast_path, BlockReport};
use famalg::klengine::{BlockContext, KlTable};
use famalg::rootsys::{TypeLetter, DEFAULT_WEYL_CAP};
use famalg::weightlat::{dominance_failure, integral_data, MinimalityOrder};
use famalg::{Rat, RootSystem, Weight};

/// Environment variable naming a path for the Kazhdan-Lusztig table dump.
pub const KL_DUMP_ENV: &str = "FAMALG_KL_DUMP";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

/// One batch job: a simple type, a dominant parameter, and one or more
/// highest weights, each producing its own report.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub type_letter: TypeLetter,
    pub rank: usize,
    pub lambda: Weight,
    pub v_highest_weights: Vec<Weight>,
    pub format: OutputFormat,
    pub order_variant: MinimalityOrder,
    pub fast_path: bool,
    pub kl_dump: Option<PathBuf>,
    pub cap: usize,
}

impl JobSpec {
    pub fn new(type_letter: TypeLetter, rank: usize, lambda: Weight) -> Self {
        JobSpec {
            type_letter,
            rank,
            lambda,
            v_highest_weights: Vec::new(),
            format: OutputFormat::Table,
            order_variant: MinimalityOrder::RootLattice,
            fast_path: false,
            kl_dump: None,
            cap: DEFAULT_WEYL_CAP,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Math(#[from] famalg::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl RunError {
    /// 1 for input problems, 2 for internal inconsistencies surfaced by the
    /// exact solver.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Math(famalg::Error::Inconsistency(_)) => 2,
            _ => 1,
        }
    }
}

/// JSON document for one report. Field order is the canonical key order;
/// rationals are reduced `"p/q"` strings.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ReportDoc {
    #[serde(rename = "type")]
    pub type_letter: String,
    pub rank: usize,
    pub lambda: Vec<String>,
    pub v: Vec<String>,
    pub entries: Vec<EntryDoc>,
    pub end_v_zero: u64,
    pub sum_check: u64,
    pub checks: ChecksDoc,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct EntryDoc {
    pub mu: Vec<String>,
    #[serde(rename = "dim_S")]
    pub dim_s: u64,
    #[serde(rename = "dim_N")]
    pub dim_n: u64,
    #[serde(rename = "dim_Q")]
    pub dim_q: u64,
    pub minimal: bool,
    pub v_mult: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ChecksDoc {
    pub dim_identity: bool,
    pub necessary_condition: bool,
    pub order_agreement: bool,
}

impl ReportDoc {
    pub fn from_report(job: &JobSpec, v: &Weight, report: &BlockReport<Rat>) -> Self {
        ReportDoc {
            type_letter: job.type_letter.to_string(),
            rank: job.rank,
            lambda: report.lambda.to_strings(),
            v: v.to_strings(),
            entries: report
                .entries
                .iter()
                .map(|e| EntryDoc {
                    mu: e.mu.to_strings(),
                    dim_s: e.dim_s,
                    dim_n: e.dim_n,
                    dim_q: e.dim_q,
                    minimal: match job.order_variant {
                        MinimalityOrder::RootLattice => e.minimal,
                        MinimalityOrder::DominantCone => e.minimal_dominant_cone,
                    },
                    v_mult: e.v_weight_mult,
                })
                .collect(),
            end_v_zero: report.end_v_zero,
            sum_check: report.sum_check,
            checks: ChecksDoc {
                dim_identity: report.checks.dim_identity,
                necessary_condition: report.checks.necessary_condition,
                order_agreement: report.checks.order_agreement,
            },
        }
    }
}

fn build_system(job: &JobSpec) -> Result<RootSystem, RunError> {
    if job.lambda.rank() != job.rank {
        return Err(RunError::Input(format!(
            "lambda has {} coordinates but rank is {}",
            job.lambda.rank(),
            job.rank
        )));
    }
    for v in &job.v_highest_weights {
        if v.rank() != job.rank {
            return Err(RunError::Input(format!(
                "--v weight {v} has the wrong number of coordinates for rank {}",
                job.rank
            )));
        }
    }
    Ok(RootSystem::new(job.type_letter, job.rank)?)
}

/// Run the whole job, writing one serialized report per requested module.
pub fn run(job: &JobSpec, out: &mut dyn Write) -> Result<(), RunError> {
    let rs = build_system(job)?;
    if job.v_highest_weights.is_empty() {
        return Err(RunError::Input(
            "at least one --v weight is required".into(),
        ));
    }
    // Reject non-dominant parameters up front, naming the failing root.
    if let Some((root, value)) = dominance_failure(&rs, &job.lambda) {
        return Err(RunError::Math(famalg::Error::NotDominant {
            lambda: job.lambda.to_string(),
            root: root.to_string(),
            value: value.to_string(),
        }));
    }

    let mut csv_header_done = false;
    for v in &job.v_highest_weights {
        let report = if job.fast_path {
            generic_fast_path(&rs, &job.lambda, v, job.cap)?
        } else {
            block_report(&rs, &job.lambda, v, job.cap)?
        };
        let doc = ReportDoc::from_report(job, v, &report);
        match job.format {
            OutputFormat::Json => {
                let line = serde_json::to_string(&doc).expect("serializable");
                writeln!(out, "{line}")?;
            }
            OutputFormat::Csv => {
                write_csv(out, &doc, &mut csv_header_done)?;
            }
            OutputFormat::Table => {
                write_table(out, &doc, &report, job.order_variant)?;
            }
        }
    }

    let dump_path = job
        .kl_dump
        .clone()
        .or_else(|| std::env::var_os(KL_DUMP_ENV).map(PathBuf::from));
    if let Some(path) = dump_path {
        let data = integral_data(&rs, &job.lambda, job.cap)?;
        let table = KlTable::new(&data.group);
        table.fill_all()?;
        let mut file = std::fs::File::create(path)?;
        table.dump(&mut file)?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, doc: &ReportDoc, header_done: &mut bool) -> std::io::Result<()> {
    if !*header_done {
        writeln!(
            out,
            "kind,v,mu,dim_S,dim_N,dim_Q,minimal,v_mult,end_v_zero,sum_check,dim_identity,necessary_condition,order_agreement"
        )?;
        *header_done = true;
    }
    let v = doc.v.join(";");
    for e in &doc.entries {
        writeln!(
            out,
            "entry,{},{},{},{},{},{},{},,,,,",
            v,
            e.mu.join(";"),
            e.dim_s,
            e.dim_n,
            e.dim_q,
            e.minimal,
            e.v_mult
        )?;
    }
    writeln!(
        out,
        "summary,{},,,,,,,{},{},{},{},{}",
        v,
        doc.end_v_zero,
        doc.sum_check,
        doc.checks.dim_identity,
        doc.checks.necessary_condition,
        doc.checks.order_agreement
    )
}

fn write_table(
    out: &mut dyn Write,
    doc: &ReportDoc,
    report: &BlockReport<Rat>,
    order: MinimalityOrder,
) -> std::io::Result<()> {
    let order_name = match order {
        MinimalityOrder::RootLattice => "root-lattice",
        MinimalityOrder::DominantCone => "dominant-cone",
    };
    writeln!(
        out,
        "type {}{}  lambda [{}]  V [{}]  (minimality order: {order_name})",
        doc.type_letter,
        doc.rank,
        doc.lambda.join(","),
        doc.v.join(",")
    )?;
    let mu_width = doc
        .entries
        .iter()
        .map(|e| e.mu.join(",").len() + 2)
        .max()
        .unwrap_or(4)
        .max("mu".len());
    writeln!(
        out,
        "{:<mu_width$}  {:>6}  {:>6}  {:>6}  {:>8}  {:>6}",
        "mu", "dim_S", "dim_N", "dim_Q", "minimal", "v_mult"
    )?;
    for e in &doc.entries {
        let mu = format!("[{}]", e.mu.join(","));
        let flagged = report
            .order_disagreement_flags
            .iter()
            .any(|w| w.to_strings() == e.mu);
        let minimal = match (e.minimal, flagged) {
            (true, false) => "yes".to_string(),
            (false, false) => "no".to_string(),
            (m, true) => format!("{}*", if m { "yes" } else { "no" }),
        };
        writeln!(
            out,
            "{mu:<mu_width$}  {:>6}  {:>6}  {:>6}  {:>8}  {:>6}",
            e.dim_s, e.dim_n, e.dim_q, minimal, e.v_mult
        )?;
    }
    writeln!(
        out,
        "end_v_zero {}  sum_check {}",
        doc.end_v_zero, doc.sum_check
    )?;
    writeln!(
        out,
        "checks: dim_identity {}  necessary_condition {}  order_agreement {}",
        doc.checks.dim_identity, doc.checks.necessary_condition, doc.checks.order_agreement
    )?;
    if !report.order_disagreement_flags.is_empty() {
        writeln!(
            out,
            "  (* the two minimality orders disagree at this weight)"
        )?;
    }
    writeln!(out)
}

/// Graded Ext dimensions between the standard object at `x.lambda` and the
/// simple at `y.lambda`, for regular dominant `lambda`; words index the
/// reflections in the integral simple roots, 1-based.
pub struct ExtJob {
    pub type_letter: TypeLetter,
    pub rank: usize,
    pub lambda: Weight,
    pub x_word: Vec<usize>,
    pub y_word: Vec<usize>,
    pub format: OutputFormat,
    pub cap: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ExtDoc {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub dims: Vec<u64>,
    pub total: u64,
}

pub fn run_ext(job: &ExtJob, out: &mut dyn Write) -> Result<(), RunError> {
    if job.lambda.rank() != job.rank {
        return Err(RunError::Input(format!(
            "lambda has {} coordinates but rank is {}",
            job.lambda.rank(),
            job.rank
        )));
    }
    let rs = RootSystem::new(job.type_letter, job.rank)?;
    if let Some((root, value)) = dominance_failure(&rs, &job.lambda) {
        return Err(RunError::Math(famalg::Error::NotDominant {
            lambda: job.lambda.to_string(),
            root: root.to_string(),
            value: value.to_string(),
        }));
    }
    let data = integral_data(&rs, &job.lambda, job.cap)?;
    let ctx = BlockContext::new(&rs, &data, job.lambda.clone())?;
    let elt_of = |word: &[usize]| -> Result<usize, RunError> {
        let mut cur = data.group.identity_index();
        for &g in word {
            if g == 0 || g > data.group.num_generators() {
                return Err(RunError::Input(format!(
                    "word letter {g} out of range 1..={}",
                    data.group.num_generators()
                )));
            }
            cur = data.group.right_mul_gen(cur, g - 1);
        }
        Ok(cur)
    };
    let x = elt_of(&job.x_word)?;
    let y = elt_of(&job.y_word)?;
    let dims = ctx.ext_dimensions(x, y)?;
    let doc = ExtDoc {
        x: job.x_word.clone(),
        y: job.y_word.clone(),
        total: dims.iter().sum(),
        dims,
    };
    match job.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&doc).unwrap())?,
        _ => {
            writeln!(
                out,
                "Ext dims for x={:?} y={:?}: {:?} (total {})",
                doc.x, doc.y, doc.dims, doc.total
            )?;
        }
    }
    Ok(())
}

/// Parse a comma-separated word like `"1,2,1"`; `"e"` or the empty string is
/// the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>, RunError> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| RunError::Input(format!("bad word letter {p:?}")))
        })
        .collect()
}

pub fn parse_weight(s: &str, what: &str) -> Result<Weight, RunError> {
    Weight::parse(s).ok_or_else(|| {
        RunError::Input(format!(
            "cannot parse {what} {s:?}: expected comma-separated rationals like 1/2,0"
        ))
    })
}

pub fn parse_type(c: char) -> Result<TypeLetter, RunError> {
    TypeLetter::from_char(c)
        .ok_or_else(|| RunError::Input(format!("unknown type letter {c:?}; expected A-G")))
}
