//! Job configuration: a single JSON document.
//!
//! ```json
//! {
//!   "a": [1, 3], "b": [0, 0], "c": [[4, 0], "8+0i"],
//!   "theta_samples": 720, "phi_grid": 256, "truncation_size": 128,
//!   "outputs": ["profile_csv", "polynomial_json", "boundary_svg", "oracles_csv"],
//!   "output_dir": "out"
//! }
//! ```
//!
//! Word entries are bare numbers, `[re, im]` pairs or strings `"re"`,
//! `"re+imi"`, `"imi"`.

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_complex::Complex64;
use numrange::Operator;
use serde::Deserialize;

use crate::error::CliError;

pub const DEFAULT_THETA_SAMPLES: usize = 720;
pub const DEFAULT_PHI_GRID: usize = 256;
pub const MIN_COUNT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    ProfileCsv,
    PolynomialJson,
    BoundarySvg,
    OraclesCsv,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
enum Entry {
    Real(f64),
    Pair([f64; 2]),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    a: Vec<Entry>,
    b: Vec<Entry>,
    c: Vec<Entry>,
    theta_samples: Option<usize>,
    phi_grid: Option<usize>,
    truncation_size: Option<usize>,
    outputs: Option<Vec<Output>>,
    output_dir: Option<PathBuf>,
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub theta_samples: Option<usize>,
    pub phi_grid: Option<usize>,
    pub truncation_size: Option<usize>,
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct JobConfig {
    pub operator: Operator,
    pub theta_samples: usize,
    pub phi_grid: usize,
    pub truncation_size: usize,
    pub outputs: BTreeSet<Output>,
    pub output_dir: PathBuf,
}

impl JobConfig {
    /// Parses and validates; `source` names the document in messages.
    pub fn parse(text: &str, source: &str, overrides: &Overrides) -> Result<Self, CliError> {
        let raw: RawConfig = serde_json::from_str(text)
            .map_err(|e| CliError::Config(format!("{source}:{}:{}: {e}", e.line(), e.column())))?;
        let at = |key: &str, msg: String| CliError::Config(format!("{source}:{}: {msg}", key_line(text, key)));

        let mut words = Vec::with_capacity(3);
        for (key, entries) in [("a", &raw.a), ("b", &raw.b), ("c", &raw.c)] {
            let word = entries
                .iter()
                .enumerate()
                .map(|(k, e)| entry_value(e).map_err(|msg| at(key, format!("{key}[{k}]: {msg}"))))
                .collect::<Result<Vec<_>, _>>()?;
            words.push(word);
        }
        let [a, b, c]: [Vec<Complex64>; 3] = words.try_into().expect("three words");
        if a.len() != b.len() || b.len() != c.len() {
            return Err(at("a", format!("period words differ in length: a={}, b={}, c={}", a.len(), b.len(), c.len())));
        }
        if a.len() < 2 {
            return Err(at(
                "a",
                format!("period must be at least 2, got {}; repeat a constant word, e.g. [x] -> [x, x]", a.len()),
            ));
        }
        let period = a.len();
        let operator = Operator::new(a, b, c).map_err(|e| at("a", e.to_string()))?;

        let count = |key: &str, cli: Option<usize>, file: Option<usize>, default: usize| {
            let v = cli.or(file).unwrap_or(default);
            if v < MIN_COUNT {
                let line = if cli.is_some() { "command line".to_string() } else { key_line(text, key).to_string() };
                return Err(CliError::Config(format!("{source}:{line}: {key} must be at least {MIN_COUNT}, got {v}")));
            }
            Ok(v)
        };
        let theta_samples = count("theta_samples", overrides.theta_samples, raw.theta_samples, DEFAULT_THETA_SAMPLES)?;
        let phi_grid = count("phi_grid", overrides.phi_grid, raw.phi_grid, DEFAULT_PHI_GRID)?;
        let truncation_size = count("truncation_size", overrides.truncation_size, raw.truncation_size, 64 * period)?;

        let outputs = match raw.outputs {
            Some(list) => list.into_iter().collect(),
            None => [Output::ProfileCsv, Output::PolynomialJson, Output::BoundarySvg, Output::OraclesCsv].into(),
        };
        let output_dir = overrides.output_dir.clone().or(raw.output_dir).unwrap_or_else(|| PathBuf::from("."));
        Ok(Self { operator, theta_samples, phi_grid, truncation_size, outputs, output_dir })
    }
}

/// 1-based line of the first `"key"` followed by a colon, or 1.
fn key_line(text: &str, key: &str) -> usize {
    let quoted = format!("\"{key}\"");
    let mut from = 0;
    while let Some(pos) = text[from..].find(&quoted) {
        let end = from + pos + quoted.len();
        if text[end..].trim_start().starts_with(':') {
            return text[..from + pos].matches('\n').count() + 1;
        }
        from = end;
    }
    1
}

fn entry_value(e: &Entry) -> Result<Complex64, String> {
    let z = match e {
        Entry::Real(v) => Complex64::new(*v, 0.0),
        Entry::Pair([re, im]) => Complex64::new(*re, *im),
        Entry::Text(s) => parse_complex(s)?,
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err("non-finite value".into())
    }
}

/// `"re"`, `"imi"`, `"re+imi"`, `"re-imi"`; `"i"` and `"-i"` mean `±1i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse {s:?} as a complex number");
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // Split at the last sign that is not the leading one or part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<JobConfig, CliError> {
        JobConfig::parse(text, "job.json", &Overrides::default())
    }

    #[test]
    fn complex_strings() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_complex("-2.5").unwrap(), c(-2.5, 0.0));
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1 - 2i").unwrap(), c(1.0, -2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("0.5i").unwrap(), c(0.0, 0.5));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex("-1-i").unwrap(), c(-1.0, -1.0));
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn defaults_and_entry_forms() {
        let job = parse(r#"{"a": [1, "3"], "b": [[0, 0], "0"], "c": [4, "8+0i"]}"#).unwrap();
        assert_eq!(job.theta_samples, 720);
        assert_eq!(job.phi_grid, 256);
        assert_eq!(job.truncation_size, 128);
        assert_eq!(job.outputs.len(), 4);
        assert_eq!(job.operator.c()[1], Complex64::new(8.0, 0.0));
    }

    #[test]
    fn overrides_win() {
        let text = r#"{"a": [1, 3], "b": [0, 0], "c": [4, 8], "theta_samples": 90}"#;
        let o = Overrides { theta_samples: Some(36), truncation_size: Some(10), ..Default::default() };
        let job = JobConfig::parse(text, "job.json", &o).unwrap();
        assert_eq!((job.theta_samples, job.truncation_size), (36, 10));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "{\n  \"a\": [1, 3],\n  \"b\": [0],\n  \"c\": [4, 8]\n}";
        let msg = parse(text).unwrap_err().to_string();
        assert!(msg.starts_with("job.json:2:"), "{msg}");
        assert!(msg.contains("differ in length"), "{msg}");

        let text = "{\n  \"a\": [1, 3],\n  \"b\": [0, 0],\n  \"c\": [4, 8],\n  \"phi_grid\": 4\n}";
        assert!(parse(text).unwrap_err().to_string().starts_with("job.json:5:"));

        let text = "{\n  \"a\": [1, 3],\n  \"b\": [0, 0],\n  \"c\": [4, \"x\"]\n}";
        let msg = parse(text).unwrap_err().to_string();
        assert!(msg.starts_with("job.json:4:") && msg.contains("c[1]"), "{msg}");

        let text = "{\n  \"a\": [1, 3],\n  \"oops\": 1\n}";
        assert!(parse(text).unwrap_err().to_string().starts_with("job.json:3:"));
    }

    #[test]
    fn rejects_period_one() {
        let msg = parse(r#"{"a": [1], "b": [0], "c": [1]}"#).unwrap_err().to_string();
        assert!(msg.contains("at least 2"), "{msg}");
    }
}
