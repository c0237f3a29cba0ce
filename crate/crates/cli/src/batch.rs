use rayon::prelude::*;
use serde::Serialize;

use grs_core::report::ReportJson;
use grs_core::{obstruction, Error, ObstructionReport, Verdict};

use crate::record::{check, Check, CheckStatus, KnotRecord};
use crate::render::nonzero_d_field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub format: Format,
    pub verify: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

/// Result of one input line.
#[derive(Debug)]
pub struct Outcome {
    pub name: String,
    pub result: Result<ObstructionReport, Error>,
    pub check: Option<Check>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub infinite_order: usize,
    pub no_obstruction: usize,
    pub not_applicable_noncyclic: usize,
    pub errors: usize,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matched: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<usize>,
}

impl Summary {
    /// Whether the run should exit with failure.
    pub fn failed(&self) -> bool {
        self.errors > 0 || self.mismatch.unwrap_or(0) > 0
    }
}

fn parse_line(index: usize, line: &str) -> Result<KnotRecord, (String, Error)> {
    serde_json::from_str::<KnotRecord>(line).map_err(|e| {
        let name = serde_json::from_str::<serde_json::Value>(line)
            .ok()
            .and_then(|v| v.get("name").and_then(|n| n.as_str()).map(str::to_string))
            .unwrap_or_else(|| format!("line {}", index + 1));
        (name, Error::PdSyntax(format!("bad record: {e}")))
    })
}

fn process(index: usize, line: &str, verify: bool) -> Outcome {
    let record = match parse_line(index, line) {
        Ok(r) => r,
        Err((name, e)) => return failed(name, e, verify),
    };
    let result = record.input().and_then(|input| obstruction(&input, &record.name));
    match result {
        Ok(report) => {
            let chk = if verify {
                Some(match &record.expected {
                    Some(exp) => check(&report, exp),
                    None => Check {
                        status: CheckStatus::Mismatch,
                        sign: None,
                        problems: vec!["record has no expected values".into()],
                    },
                })
            } else {
                None
            };
            Outcome { name: record.name, result: Ok(report), check: chk }
        }
        Err(e) => failed(record.name, e, verify),
    }
}

fn failed(name: String, e: Error, verify: bool) -> Outcome {
    let chk = verify.then(|| Check {
        status: CheckStatus::Mismatch,
        sign: None,
        problems: vec!["computation failed".into()],
    });
    Outcome { name, result: Err(e), check: chk }
}

/// Computes every non-blank line of a JSON-lines input, in input order.
pub fn compute_all(input: &str, opts: &Options) -> Vec<Outcome> {
    let lines: Vec<(usize, &str)> =
        input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).collect();
    let work = || lines.par_iter().map(|&(i, l)| process(i, l, opts.verify)).collect::<Vec<_>>();
    match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    }
}

pub fn summarize(outcomes: &[Outcome], verify: bool) -> Summary {
    let mut s = Summary { records: outcomes.len(), ..Summary::default() };
    for o in outcomes {
        match &o.result {
            Ok(r) => match r.verdict {
                Verdict::InfiniteOrder => s.infinite_order += 1,
                Verdict::NoObstruction => s.no_obstruction += 1,
                Verdict::NotApplicableNoncyclic => s.not_applicable_noncyclic += 1,
            },
            Err(_) => s.errors += 1,
        }
    }
    if verify {
        let m = outcomes.iter().filter(|o| o.check.as_ref().is_some_and(|c| c.status == CheckStatus::Match)).count();
        s.matched = Some(m);
        s.mismatch = Some(outcomes.len() - m);
    }
    s
}

#[derive(Serialize)]
struct ErrorJson {
    stage: &'static str,
    message: String,
}

#[derive(Serialize)]
struct Line<'a> {
    #[serde(flatten)]
    report: Option<ReportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<&'a Check>,
}

fn json_outcome(o: &Outcome) -> String {
    let line = match &o.result {
        Ok(r) => Line { report: Some(ReportJson::from(r)), name: None, error: None, check: o.check.as_ref() },
        Err(e) => Line {
            report: None,
            name: Some(&o.name),
            error: Some(ErrorJson { stage: e.stage(), message: e.to_string() }),
            check: o.check.as_ref(),
        },
    };
    serde_json::to_string(&line).expect("serializable")
}

fn check_field(c: &Option<Check>) -> String {
    match c {
        None => String::new(),
        Some(c) if c.status == CheckStatus::Match => match c.sign {
            Some(-1) => "match(-)".into(),
            _ => "match".into(),
        },
        Some(c) => format!("mismatch: {}", c.problems.join("; ")),
    }
}

/// Renders outcomes and the trailing summary.
pub fn render(outcomes: &[Outcome], summary: &Summary, opts: &Options) -> String {
    match opts.format {
        Format::Json => {
            let mut out = String::new();
            for o in outcomes {
                out.push_str(&json_outcome(o));
                out.push('\n');
            }
            out.push_str(&format!("{{\"summary\":{}}}", serde_json::to_string(summary).expect("serializable")));
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["name", "det", "verdict", "nonzero_D"];
            if opts.verify {
                header.push("check");
            }
            w.write_record(&header).expect("in-memory write");
            for o in outcomes {
                let mut row = match &o.result {
                    Ok(r) => vec![o.name.clone(), r.det.to_string(), r.verdict.as_str().to_string(), nonzero_d_field(r)],
                    Err(e) => vec![o.name.clone(), String::new(), "error".into(), crate::describe(e)],
                };
                if opts.verify {
                    row.push(check_field(&o.check));
                }
                w.write_record(&row).expect("in-memory write");
            }
            let mut tally = format!(
                "infinite_order={};no_obstruction={};not_applicable_noncyclic={};errors={}",
                summary.infinite_order, summary.no_obstruction, summary.not_applicable_noncyclic, summary.errors
            );
            if let (Some(m), Some(x)) = (summary.matched, summary.mismatch) {
                tally.push_str(&format!(";match={m};mismatch={x}"));
            }
            let mut row = vec!["summary".to_string(), summary.records.to_string(), String::new(), tally];
            if opts.verify {
                row.push(String::new());
            }
            w.write_record(&row).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
    }
}

/// Full batch run: output text and summary.
pub fn run(input: &str, opts: &Options) -> (String, Summary) {
    let outcomes = compute_all(input, opts);
    let summary = summarize(&outcomes, opts.verify);
    (render(&outcomes, &summary, opts), summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    const INPUT: &str = concat!(
        r#"{"name":"0_1","pd":"[]","expected":{"det":1,"D":{}}}"#,
        "\n\n",
        r#"{"name":"t","goeritz":[[-3]],"expected":{"det":3,"D":{"1":"1/2","3":"1/6"}}}"#,
        "\n",
        r#"{"name":"bad","goeritz":[[2]]}"#,
        "\n",
        "not json\n",
    );

    fn opts(format: Format, verify: bool) -> Options {
        Options { format, verify, jobs: Some(2) }
    }

    #[test]
    fn json_batch_preserves_order_and_records_errors() {
        let (out, s) = run(INPUT, &opts(Format::Json, false));
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0]["name"], "0_1");
        assert_eq!(lines[0]["verdict"], "no_obstruction");
        assert_eq!(lines[1]["verdict"], "infinite_order");
        assert_eq!(lines[2]["name"], "bad");
        assert_eq!(lines[2]["error"]["stage"], "goeritz");
        assert_eq!(lines[3]["name"], "line 5");
        assert_eq!(lines[4]["summary"]["errors"], 2);
        assert_eq!(s.records, 4);
        assert!(s.failed());
    }

    #[test]
    fn verify_counts_matches() {
        let (_, s) = run(INPUT, &opts(Format::Json, true));
        assert_eq!((s.matched, s.mismatch), (Some(2), Some(2)));
    }

    #[test]
    fn csv_batch() {
        let (out, _) = run(INPUT, &opts(Format::Csv, true));
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("name,det,verdict,nonzero_D,check"));
        assert_eq!(lines.next(), Some("0_1,1,no_obstruction,,match"));
        assert_eq!(lines.next(), Some("t,3,infinite_order,1^0=-1/2;3^1=-1/6,match(-)"));
        assert!(out.lines().last().unwrap().starts_with("summary,4,,infinite_order=1;"));
    }
}
