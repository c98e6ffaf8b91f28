//! End-to-end tests of the batch frontend: canonical JSON round-trips,
//! format agreement, exit codes, and the ext subcommand.

use std::process::Command;

use famalg::rootsys::TypeLetter;
use famalg::weightlat::MinimalityOrder;
use famalg::Weight;
use famalg_cli::{
    parse_weight, parse_word, run, run_ext, ExtDoc, ExtJob, JobSpec, OutputFormat, ReportDoc,
    RunError,
};

fn job(letter: char, rank: usize, lambda: &str, vs: &[&str]) -> JobSpec {
    let mut j = JobSpec::new(
        TypeLetter::from_char(letter).unwrap(),
        rank,
        Weight::parse(lambda).unwrap(),
    );
    j.v_highest_weights = vs.iter().map(|v| Weight::parse(v).unwrap()).collect();
    j
}

fn run_to_string(j: &JobSpec) -> Result<String, RunError> {
    let mut buf = Vec::new();
    run(j, &mut buf)?;
    Ok(String::from_utf8(buf).unwrap())
}

#[test]
fn sl2_adjoint_json_report() {
    let mut j = job('A', 1, "0", &["2"]);
    j.format = OutputFormat::Json;
    let out = run_to_string(&j).unwrap();
    let doc: ReportDoc = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc.entries.len(), 3);
    assert_eq!(doc.sum_check, 3);
    assert_eq!(doc.end_v_zero, 3);
    assert!(doc.checks.dim_identity);
}

#[test]
fn json_round_trips_byte_identical() {
    for (letter, rank, lambda, v) in [
        ('A', 1, "0", "2"),
        ('A', 2, "-1,-1", "1,1"),
        ('B', 2, "1/2,0", "0,1"),
        ('G', 2, "0,0", "1,0"),
    ] {
        let mut j = job(letter, rank, lambda, &[v]);
        j.format = OutputFormat::Json;
        let out = run_to_string(&j).unwrap();
        let line = out.trim_end();
        let doc: ReportDoc = serde_json::from_str(line).unwrap();
        let again = serde_json::to_string(&doc).unwrap();
        assert_eq!(line, again, "round trip changed bytes for {letter}{rank}");
    }
}

#[test]
fn formats_carry_identical_numbers() {
    let base = job('A', 2, "-1,-1", &["1,1"]);

    let mut jj = base.clone();
    jj.format = OutputFormat::Json;
    let doc: ReportDoc = serde_json::from_str(run_to_string(&jj).unwrap().trim()).unwrap();

    let mut jc = base.clone();
    jc.format = OutputFormat::Csv;
    let csv = run_to_string(&jc).unwrap();
    let mut csv_entries = Vec::new();
    let mut csv_summary = None;
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        match f[0] {
            "entry" => csv_entries.push((
                f[2].to_string(),
                f[3].parse::<u64>().unwrap(),
                f[4].parse::<u64>().unwrap(),
                f[5].parse::<u64>().unwrap(),
                f[6] == "true",
                f[7].parse::<u64>().unwrap(),
            )),
            "summary" => {
                csv_summary = Some((f[8].parse::<u64>().unwrap(), f[9].parse::<u64>().unwrap()))
            }
            other => panic!("unexpected row kind {other}"),
        }
    }
    assert_eq!(csv_entries.len(), doc.entries.len());
    for (e, (mu, s, n, q, m, v)) in doc.entries.iter().zip(&csv_entries) {
        assert_eq!(&e.mu.join(";"), mu);
        assert_eq!(
            (e.dim_s, e.dim_n, e.dim_q, e.minimal, e.v_mult),
            (*s, *n, *q, *m, *v)
        );
    }
    assert_eq!(csv_summary, Some((doc.end_v_zero, doc.sum_check)));

    let mut jt = base;
    jt.format = OutputFormat::Table;
    let table = run_to_string(&jt).unwrap();
    for e in &doc.entries {
        let mu = format!("[{}]", e.mu.join(","));
        let row = table
            .lines()
            .find(|l| l.starts_with(&mu))
            .unwrap_or_else(|| panic!("table row for {mu} missing"));
        let nums: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(nums[1].parse::<u64>().unwrap(), e.dim_s);
        assert_eq!(nums[2].parse::<u64>().unwrap(), e.dim_n);
        assert_eq!(nums[3].parse::<u64>().unwrap(), e.dim_q);
        assert_eq!(nums[5].parse::<u64>().unwrap(), e.v_mult);
    }
    assert!(table.contains(&format!(
        "end_v_zero {}  sum_check {}",
        doc.end_v_zero, doc.sum_check
    )));
}

#[test]
fn multiple_v_emit_one_report_each() {
    let mut j = job('A', 1, "0", &["2", "4"]);
    j.format = OutputFormat::Json;
    let out = run_to_string(&j).unwrap();
    let lines: Vec<&str> = out.trim_end().lines().collect();
    assert_eq!(lines.len(), 2);
    let d0: ReportDoc = serde_json::from_str(lines[0]).unwrap();
    let d1: ReportDoc = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(d0.v, vec!["2"]);
    assert_eq!(d1.v, vec!["4"]);
    assert_eq!(d1.end_v_zero, 5);
}

#[test]
fn fast_path_matches_and_guards() {
    let mut a = job('A', 1, "1/2", &["2"]);
    a.format = OutputFormat::Json;
    let slow = run_to_string(&a).unwrap();
    let mut b = a.clone();
    b.fast_path = true;
    let fast = run_to_string(&b).unwrap();
    assert_eq!(slow, fast);

    let mut bad = job('A', 1, "0", &["2"]);
    bad.fast_path = true;
    let err = run_to_string(&bad).unwrap_err();
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn order_variant_changes_reported_flags() {
    let mut j = job('A', 2, "-1,-1", &["1,1"]);
    j.format = OutputFormat::Json;
    let root: ReportDoc = serde_json::from_str(run_to_string(&j).unwrap().trim()).unwrap();
    j.order_variant = MinimalityOrder::DominantCone;
    let cone: ReportDoc = serde_json::from_str(run_to_string(&j).unwrap().trim()).unwrap();
    assert!(!root.checks.order_agreement);
    assert_ne!(
        root.entries.iter().map(|e| e.minimal).collect::<Vec<_>>(),
        cone.entries.iter().map(|e| e.minimal).collect::<Vec<_>>()
    );
}

#[test]
fn non_dominant_lambda_is_rejected_with_root() {
    let j = job('A', 1, "-2", &["2"]);
    match run_to_string(&j).unwrap_err() {
        RunError::Math(famalg::Error::NotDominant { root, value, .. }) => {
            assert_eq!(root, "[2]");
            assert_eq!(value, "-1");
        }
        other => panic!("expected NotDominant, got {other:?}"),
    }
}

#[test]
fn exit_code_classification() {
    assert_eq!(
        RunError::Math(famalg::Error::Inconsistency("x".into())).exit_code(),
        2
    );
    assert_eq!(RunError::Input("x".into()).exit_code(), 1);
    assert_eq!(
        RunError::Math(famalg::Error::NotDominantIntegral("x".into())).exit_code(),
        1
    );
}

#[test]
fn kl_dump_writes_table() {
    let path = std::env::temp_dir().join(format!("famalg-kl-{}.txt", std::process::id()));
    let mut j = job('A', 2, "0,0", &["1,1"]);
    j.format = OutputFormat::Json;
    j.kl_dump = Some(path.clone());
    run_to_string(&j).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    // one line per Bruhat-comparable pair in the order-6 group
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().all(|l| l.split(';').count() == 3));
    assert!(text.contains("e;121;1"));
}

#[test]
fn ext_job_examples() {
    let base = ExtJob {
        type_letter: TypeLetter::A,
        rank: 2,
        lambda: Weight::parse("0,0").unwrap(),
        x_word: vec![],
        y_word: vec![1, 2, 1],
        format: OutputFormat::Json,
        cap: famalg::rootsys::DEFAULT_WEYL_CAP,
    };
    let mut buf = Vec::new();
    run_ext(&base, &mut buf).unwrap();
    let doc: ExtDoc = serde_json::from_str(String::from_utf8(buf).unwrap().trim()).unwrap();
    assert_eq!(doc.dims, vec![0, 0, 0, 1]);
    assert_eq!(doc.total, 1);

    // singular lambda is refused
    let singular = ExtJob {
        lambda: Weight::parse("-1,-1").unwrap(),
        ..base
    };
    let err = run_ext(&singular, &mut Vec::new()).unwrap_err();
    assert_eq!(err.exit_code(), 1);

    // word letters out of range
    let bad = parse_word("0,1");
    assert!(bad.is_ok(), "parse leaves range checks to the runner");
    let bad_job = ExtJob {
        type_letter: TypeLetter::A,
        rank: 2,
        lambda: Weight::parse("0,0").unwrap(),
        x_word: vec![0],
        y_word: vec![],
        format: OutputFormat::Table,
        cap: famalg::rootsys::DEFAULT_WEYL_CAP,
    };
    assert!(run_ext(&bad_job, &mut Vec::new()).is_err());
}

#[test]
fn weight_and_word_parsing() {
    assert!(parse_weight("1/2,0", "--lambda").is_ok());
    assert!(parse_weight("", "--lambda").is_err());
    assert!(parse_weight("1,,2", "--lambda").is_err());
    assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
    assert_eq!(parse_word("1,2,1").unwrap(), vec![1, 2, 1]);
    assert!(parse_word("1,x").is_err());
}

#[test]
fn binary_exit_codes_and_output() {
    let exe = env!("CARGO_BIN_EXE_famalg");
    let ok = Command::new(exe)
        .args([
            "--type", "A", "--rank", "1", "--lambda", "0", "--v", "2", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(ok.status.success());
    let doc: ReportDoc =
        serde_json::from_str(String::from_utf8(ok.stdout).unwrap().trim()).unwrap();
    assert_eq!(doc.sum_check, 3);

    let rejected = Command::new(exe)
        .args(["--type", "A", "--rank", "1", "--lambda", "-2", "--v", "2"])
        .output()
        .unwrap();
    assert_eq!(rejected.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&rejected.stderr).contains("not dominant"));

    let bad_type = Command::new(exe)
        .args(["--type", "Q", "--rank", "1", "--lambda", "0", "--v", "2"])
        .output()
        .unwrap();
    assert_eq!(bad_type.status.code(), Some(1));

    let ext = Command::new(exe)
        .args([
            "ext", "--type", "A", "--rank", "1", "--lambda", "0", "--x", "e", "--y", "1",
        ])
        .output()
        .unwrap();
    assert!(ext.status.success());
    assert!(String::from_utf8_lossy(&ext.stdout).contains("total 1"));
}
