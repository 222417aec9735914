//! Problem input from inline flags, CSV or JSON.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use super::CliError;
use crate::field::{Field, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

/// Raw, unparsed problem description.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ProblemInput {
    pub nodes: Vec<String>,
    pub values: Option<Vec<String>>,
    pub n: Option<usize>,
    pub mode: Mode,
}

#[derive(Debug, Default)]
pub struct Sources<'a> {
    pub nodes: Option<&'a [String]>,
    pub values: Option<&'a [String]>,
    pub n: Option<usize>,
    pub csv: Option<&'a PathBuf>,
    pub json: Option<&'a PathBuf>,
    pub float: bool,
}

/// Merges file and flag sources; inline flags override file contents.
pub fn load(src: &Sources<'_>) -> Result<ProblemInput, CliError> {
    let mut input = match (src.csv, src.json) {
        (Some(_), Some(_)) => {
            return Err(CliError::Parse("--csv and --json are mutually exclusive".into()))
        }
        (Some(path), None) => read_csv(path)?,
        (None, Some(path)) => read_json(path)?,
        (None, None) => ProblemInput::default(),
    };
    if let Some(nodes) = src.nodes {
        input.nodes = nodes.to_vec();
    }
    if let Some(values) = src.values {
        input.values = Some(values.to_vec());
    }
    if src.n.is_some() {
        input.n = src.n;
    }
    if src.float {
        input.mode = Mode::Float;
    }
    if input.nodes.is_empty() {
        return Err(CliError::Invalid("no nodes given (use --nodes, --csv or --json)".into()));
    }
    Ok(input)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Two columns `node,value` (the second optional), with an optional header
/// row detected by its first cell not parsing as a scalar.
pub fn parse_csv(text: &str) -> Result<ProblemInput, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Parse(format!("csv: {e}")))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let first = record.get(0).unwrap_or_default();
        if row == 0 && Rational::parse_scalar(first).is_err() && f64::parse_scalar(first).is_err() {
            continue;
        }
        match record.len() {
            1 => nodes.push(first.to_string()),
            2 => {
                nodes.push(first.to_string());
                values.push(record[1].to_string());
            }
            k => {
                return Err(CliError::Parse(format!("csv row {}: expected 1 or 2 columns, found {k}", row + 1)))
            }
        }
    }
    if !values.is_empty() && values.len() != nodes.len() {
        return Err(CliError::Parse("csv: every row needs a value once any row has one".into()));
    }
    Ok(ProblemInput {
        nodes,
        values: (!values.is_empty()).then_some(values),
        ..ProblemInput::default()
    })
}

fn read_csv(path: &Path) -> Result<ProblemInput, CliError> {
    parse_csv(&read_file(path)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonProblem {
    nodes: Vec<Value>,
    #[serde(default)]
    values: Option<Vec<Value>>,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    mode: Mode,
}

fn scalar_text(v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(CliError::Parse(format!("json: expected a scalar, found {other}"))),
    }
}

/// `{"nodes": [...], "values": [...], "n": 4, "mode": "exact"}`; scalars may
/// be strings (`"1/3"`) or numbers.
pub fn parse_json(text: &str) -> Result<ProblemInput, CliError> {
    let raw: JsonProblem = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("json: {e}")))?;
    Ok(ProblemInput {
        nodes: raw.nodes.iter().map(scalar_text).collect::<Result<_, _>>()?,
        values: raw
            .values
            .map(|vs| vs.iter().map(scalar_text).collect::<Result<_, _>>())
            .transpose()?,
        n: raw.n,
        mode: raw.mode,
    })
}

fn read_json(path: &Path) -> Result<ProblemInput, CliError> {
    parse_json(&read_file(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_with_and_without_header() {
        let a = parse_csv("node,value\n0,1\n1,2\n").unwrap();
        let b = parse_csv("0, 1\n1 ,2\n\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.nodes, ["0", "1"]);
        assert_eq!(a.values.unwrap(), ["1", "2"]);
        let c = parse_csv("x\n1/2\n3\n").unwrap();
        assert_eq!(c.nodes, ["1/2", "3"]);
        assert_eq!(c.values, None);
    }

    #[test]
    fn csv_errors() {
        assert!(parse_csv("1,2,3\n").is_err());
        assert!(parse_csv("1,2\n3\n").is_err());
    }

    #[test]
    fn json_scalars_as_strings_or_numbers() {
        let p = parse_json(r#"{"nodes": ["1/3", 2, -0.5], "values": [1, "2", 3], "n": 5, "mode": "float"}"#).unwrap();
        assert_eq!(p.nodes, ["1/3", "2", "-0.5"]);
        assert_eq!(p.values.unwrap(), ["1", "2", "3"]);
        assert_eq!(p.n, Some(5));
        assert_eq!(p.mode, Mode::Float);
        assert!(parse_json(r#"{"nodes": [true]}"#).is_err());
        assert!(parse_json(r#"{"nodes": [1], "extra": 1}"#).is_err());
        assert!(parse_json("not json").is_err());
    }

    #[test]
    fn flags_override_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        fs::write(&path, r#"{"nodes": [1, 2], "values": [3, 4], "n": 3}"#).unwrap();
        let values = vec!["5".to_string(), "6".to_string()];
        let input = load(&Sources {
            values: Some(&values),
            json: Some(&path),
            n: Some(4),
            float: true,
            ..Sources::default()
        })
        .unwrap();
        assert_eq!(input.nodes, ["1", "2"]);
        assert_eq!(input.values.unwrap(), ["5", "6"]);
        assert_eq!(input.n, Some(4));
        assert_eq!(input.mode, Mode::Float);
    }

    #[test]
    fn missing_nodes_is_invalid() {
        assert!(matches!(load(&Sources::default()), Err(CliError::Invalid(_))));
        let missing = PathBuf::from("/nonexistent/p.csv");
        assert!(matches!(
            load(&Sources { csv: Some(&missing), ..Sources::default() }),
            Err(CliError::Parse(_))
        ));
    }
}
