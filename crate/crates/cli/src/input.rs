//! JSON argument parsing. An argument of `-` reads standard input and
//! `@path` reads a file; anything else is taken literally.

use std::io::Read;

use lpdm_core::matroid::Label;
use lpdm_core::{LpdmSpec, Permutation, RationalPoint, SubsetMask};
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    n: usize,
    #[serde(rename = "S", default)]
    s: Vec<Label>,
    #[serde(rename = "T", default)]
    t: Vec<Label>,
    ground: Option<Vec<Label>>,
}

fn read_arg(raw: &str) -> Result<String, CliError> {
    if raw == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(buf)
    } else if let Some(path) = raw.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    } else {
        Ok(raw.to_string())
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(raw: &str) -> Result<T, CliError> {
    let text = read_arg(raw)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn spec(raw: &str) -> Result<LpdmSpec, CliError> {
    let j: SpecJson = parse_json(raw)?;
    Ok(LpdmSpec::from_labels(j.n, &j.s, &j.t, j.ground)?)
}

/// `S` and `T` as positional masks with no order requirement.
pub fn pair(raw: &str) -> Result<(SubsetMask, SubsetMask), CliError> {
    let j: SpecJson = parse_json(raw)?;
    if j.ground.is_some() {
        return Err(CliError::Usage("order queries take positions in [n], not a ground set".into()));
    }
    Ok((SubsetMask::from_members(j.n, pos(&j.s)?)?, SubsetMask::from_members(j.n, pos(&j.t)?)?))
}

/// `{"n": .., "S": [..]}`.
pub fn subset(raw: &str) -> Result<SubsetMask, CliError> {
    let (s, _) = pair(raw)?;
    Ok(s)
}

fn pos(labels: &[Label]) -> Result<Vec<usize>, CliError> {
    labels
        .iter()
        .map(|&l| usize::try_from(l).map_err(|_| CliError::Usage(format!("{l} is not a position"))))
        .collect()
}

pub fn permutation(raw: &str) -> Result<Permutation, CliError> {
    let v: Vec<usize> = parse_json(raw)?;
    Ok(Permutation::new(v)?)
}

pub fn point(raw: &str) -> Result<RationalPoint, CliError> {
    Ok(read_arg(raw)?.parse()?)
}
