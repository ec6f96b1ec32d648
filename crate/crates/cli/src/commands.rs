use std::fmt::Write as _;

use balancing_core::{
    balancing_binet, balancing_fast, brute_force_power_sum, linearize as linearize_power,
    lucas_balancing_binet, lucas_balancing_fast, power_sum, power_sum_formula, verify_even_theorem,
    verify_lemma_identity, verify_odd_theorem, Integer, SeqTable, Sequence,
};
use serde::Serialize;

use crate::{Method, OutputFormat, Seq};

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<balancing_core::Error> for CliError {
    fn from(e: balancing_core::Error) -> Self {
        let code = match e {
            balancing_core::Error::InvalidArgument { .. } => 2,
            _ => 1,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

type CmdResult = Result<Outcome, CliError>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn not_tabular(cmd: &str) -> CliError {
    CliError::usage(format!(
        "{cmd} has no tabular output; use --format text or json"
    ))
}

#[derive(Serialize)]
struct Row {
    n: u64,
    value: String,
}

#[derive(Serialize)]
struct GenJson {
    seq: &'static str,
    values: Vec<Row>,
}

pub fn gen(upto: u64, method: Method, seq: Seq, format: OutputFormat) -> CmdResult {
    let values: Vec<Integer> = match method {
        Method::Recurrence => {
            let kind = match seq {
                Seq::B => Sequence::Balancing,
                Seq::C => Sequence::LucasBalancing,
            };
            let len = usize::try_from(upto).map_err(|_| CliError::usage("--upto too large"))?;
            SeqTable::new(kind, len).values().to_vec()
        }
        Method::Fast => (0..=upto)
            .map(|n| match seq {
                Seq::B => balancing_fast(n),
                Seq::C => lucas_balancing_fast(n),
            })
            .collect(),
        Method::Binet => (0..=upto)
            .map(|n| match seq {
                Seq::B => balancing_binet(n),
                Seq::C => lucas_balancing_binet(n),
            })
            .collect(),
    };
    let label = match seq {
        Seq::B => "B",
        Seq::C => "C",
    };

    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n} {v}").unwrap();
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,{label}").unwrap();
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n},{v}").unwrap();
            }
        }
        OutputFormat::Json => {
            out = to_json(&GenJson {
                seq: label,
                values: values
                    .iter()
                    .zip(0..)
                    .map(|(v, n)| Row {
                        n,
                        value: v.to_string(),
                    })
                    .collect(),
            });
        }
    }
    Ok(Outcome::ok(out))
}

pub fn linearize(power: u64, format: OutputFormat) -> CmdResult {
    let form = linearize_power(power)?;
    let text = match format {
        OutputFormat::Text => format!("{form}\n"),
        OutputFormat::Json => to_json(&form),
        OutputFormat::Csv => return Err(not_tabular("linearize")),
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct SumRow {
    n: u64,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
}

#[derive(Serialize)]
struct SumJson {
    m: u64,
    power: u64,
    upto: u64,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

#[derive(Serialize)]
struct SweepJson {
    m: u64,
    power: u64,
    rows: Vec<SumRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

pub fn sum(
    m: u64,
    power: u64,
    upto: u64,
    oracle: bool,
    sweep: bool,
    format: OutputFormat,
) -> CmdResult {
    let ns: Vec<u64> = if sweep {
        (0..=upto).collect()
    } else {
        vec![upto]
    };
    let mut rows = Vec::with_capacity(ns.len());
    let mut agree = true;
    for n in ns {
        let value = power_sum(m, power, n)?;
        let check = if oracle {
            let direct = brute_force_power_sum(m, power, n)?;
            agree &= direct == value;
            Some(direct.to_string())
        } else {
            None
        };
        rows.push(SumRow {
            n,
            value: value.to_string(),
            oracle: check,
        });
    }
    let agree_flag = oracle.then_some(agree);

    let mut out = String::new();
    match format {
        OutputFormat::Text if !sweep => {
            let row = &rows[0];
            writeln!(out, "{}", row.value).unwrap();
            if let Some(o) = &row.oracle {
                let verdict = if agree { "agree" } else { "MISMATCH" };
                writeln!(out, "oracle {o} ({verdict})").unwrap();
            }
        }
        OutputFormat::Text => {
            for row in &rows {
                match &row.oracle {
                    Some(o) => writeln!(out, "{} {} {o}", row.n, row.value).unwrap(),
                    None => writeln!(out, "{} {}", row.n, row.value).unwrap(),
                }
            }
            if oracle && !agree {
                writeln!(out, "MISMATCH").unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str(if oracle {
                "n,value,oracle\n"
            } else {
                "n,value\n"
            });
            for row in &rows {
                match &row.oracle {
                    Some(o) => writeln!(out, "{},{},{o}", row.n, row.value).unwrap(),
                    None => writeln!(out, "{},{}", row.n, row.value).unwrap(),
                }
            }
        }
        OutputFormat::Json if sweep => {
            out = to_json(&SweepJson {
                m,
                power,
                rows,
                agree: agree_flag,
            });
        }
        OutputFormat::Json => {
            let row = rows.pop().expect("one row");
            out = to_json(&SumJson {
                m,
                power,
                upto,
                value: row.value,
                oracle: row.oracle,
                agree: agree_flag,
            });
        }
    }
    Ok(Outcome {
        text: out,
        code: if agree { 0 } else { 1 },
    })
}

/// Points at which `formula` text output is cross-checked against direct summation.
const FORMULA_CHECK_UPTO: u64 = 4;

pub fn formula(m: u64, power: u64, format: OutputFormat) -> CmdResult {
    let expr = power_sum_formula(m, power)?;
    match format {
        OutputFormat::Json => Ok(Outcome::ok(to_json(&expr))),
        OutputFormat::Csv => Err(not_tabular("formula")),
        OutputFormat::Text => {
            let mut values = Vec::new();
            let mut agree = true;
            for n in 0..=FORMULA_CHECK_UPTO {
                let v = expr.evaluate(n)?;
                agree &= v == brute_force_power_sum(m, power, n)?;
                values.push(v.to_string());
            }
            let verdict = if agree {
                "matches direct summation"
            } else {
                "DOES NOT match direct summation"
            };
            let text = format!(
                "{expr}\n# n = 0..{FORMULA_CHECK_UPTO}: {} ({verdict})\n",
                values.join(", ")
            );
            Ok(Outcome {
                text,
                code: if agree { 0 } else { 1 },
            })
        }
    }
}

pub struct VerifyBounds {
    lemma_max_m: Option<u64>,
    odd_max_l: Option<u64>,
    even_max_l: Option<u64>,
}

impl VerifyBounds {
    pub fn new(lemma_max_m: Option<u64>, odd_max_l: Option<u64>, even_max_l: Option<u64>) -> Self {
        if lemma_max_m.is_none() && odd_max_l.is_none() && even_max_l.is_none() {
            return VerifyBounds {
                lemma_max_m: Some(20),
                odd_max_l: Some(10),
                even_max_l: Some(6),
            };
        }
        VerifyBounds {
            lemma_max_m,
            odd_max_l,
            even_max_l,
        }
    }
}

#[derive(Serialize)]
struct Case {
    identity: &'static str,
    param: u64,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    cases: &'a [Case],
    passed: usize,
    total: usize,
}

pub fn verify(bounds: VerifyBounds, format: OutputFormat) -> CmdResult {
    let mut cases = Vec::new();
    if let Some(max) = bounds.lemma_max_m {
        for m in 2..=max {
            cases.push(Case {
                identity: "lemma",
                param: m,
                pass: verify_lemma_identity(m)?,
            });
        }
    }
    if let Some(max) = bounds.odd_max_l {
        for l in 0..=max {
            cases.push(Case {
                identity: "odd",
                param: l,
                pass: verify_odd_theorem(l),
            });
        }
    }
    if let Some(max) = bounds.even_max_l {
        for l in 1..=max {
            cases.push(Case {
                identity: "even",
                param: l,
                pass: verify_even_theorem(l)?,
            });
        }
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    let total = cases.len();

    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for c in &cases {
                let name = if c.identity == "lemma" { "m" } else { "l" };
                let verdict = if c.pass { "pass" } else { "FAIL" };
                writeln!(out, "{} {name}={}: {verdict}", c.identity, c.param).unwrap();
            }
            writeln!(out, "summary: {passed}/{total} passed").unwrap();
        }
        OutputFormat::Csv => {
            out.push_str("identity,param,pass\n");
            for c in &cases {
                writeln!(out, "{},{},{}", c.identity, c.param, c.pass).unwrap();
            }
        }
        OutputFormat::Json => {
            out = to_json(&VerifyJson {
                cases: &cases,
                passed,
                total,
            });
        }
    }
    Ok(Outcome {
        text: out,
        code: if passed == total { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_text_rows() {
        let out = gen(4, Method::Recurrence, Seq::B, OutputFormat::Text).unwrap();
        assert_eq!(out.text, "0 0\n1 1\n2 6\n3 35\n4 204\n");
        let out = gen(2, Method::Binet, Seq::C, OutputFormat::Csv).unwrap();
        assert_eq!(out.text, "n,C\n0,1\n1,3\n2,17\n");
    }

    #[test]
    fn gen_methods_identical() {
        let a = gen(50, Method::Recurrence, Seq::B, OutputFormat::Text).unwrap();
        let b = gen(50, Method::Fast, Seq::B, OutputFormat::Text).unwrap();
        let c = gen(50, Method::Binet, Seq::B, OutputFormat::Text).unwrap();
        assert_eq!(a.text, b.text);
        assert_eq!(a.text, c.text);
        assert_eq!(
            gen(30, Method::Fast, Seq::C, OutputFormat::Json)
                .unwrap()
                .text,
            gen(30, Method::Recurrence, Seq::C, OutputFormat::Json)
                .unwrap()
                .text
        );
    }

    #[test]
    fn formula_text_has_check_line() {
        let out = formula(1, 2, OutputFormat::Text).unwrap();
        let mut lines = out.text.lines();
        lines.next().unwrap();
        assert!(lines.next().unwrap().starts_with("# n = 0..4: 0, 1, 37,"));
        assert_eq!(out.code, 0);
    }

    #[test]
    fn csv_rejected_for_forms() {
        assert_eq!(linearize(2, OutputFormat::Csv).err().unwrap().code, 2);
        assert_eq!(formula(1, 1, OutputFormat::Csv).err().unwrap().code, 2);
    }
}
