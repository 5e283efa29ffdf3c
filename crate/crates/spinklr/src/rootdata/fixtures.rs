//! Built-in quivers with automorphism.

use super::datum::RootDatum;
use super::quiver::QuiverInput;
use super::RootDataError;

const SOURCES: &[(&str, &str)] = &[
    ("osp12", include_str!("../../fixtures/osp12.json")),
    ("b01", include_str!("../../fixtures/b01.json")),
    ("osp16", include_str!("../../fixtures/osp16.json")),
    ("aff-c", include_str!("../../fixtures/aff-c.json")),
    ("aff-bb", include_str!("../../fixtures/aff-bb.json")),
    ("aff-cc", include_str!("../../fixtures/aff-cc.json")),
    ("aff-a11", include_str!("../../fixtures/aff-a11.json")),
    ("aff-a22", include_str!("../../fixtures/aff-a22.json")),
];

/// A quiver whose odd orbit has even size, so that its symmetrizer breaks C6.
pub const C6_VIOLATING: &str = include_str!("../../fixtures/invalid/c6-violating.json");

pub fn builtin_names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

pub fn builtin_source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn parse_quiver_json(text: &str) -> Result<QuiverInput, RootDataError> {
    serde_json::from_str(text).map_err(|e| RootDataError::InvalidInput(format!("malformed quiver JSON: {e}")))
}

pub fn builtin(name: &str) -> Result<RootDatum, RootDataError> {
    let src = builtin_source(name).ok_or_else(|| RootDataError::InvalidInput(format!("unknown builtin {name}")))?;
    RootDatum::from_quiver(&parse_quiver_json(src)?)
}

pub fn all_builtins() -> Vec<RootDatum> {
    builtin_names().into_iter().map(|n| builtin(n).expect("builtin fixtures are valid")).collect()
}
