//! OEIS search client with a local raw-response cache.
//!
//! Lookups are annotation only: network trouble degrades to a soft skip,
//! never to a failed computation. Responses are cached verbatim on disk
//! keyed by the query string, so repeated queries (and the test suite)
//! need no network at all. In offline mode the client never opens a
//! connection; a cold cache is a soft skip.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{Context, Result};
use qcatalan_core::exactnum::Integer;
use serde_json::Value;

use crate::config::OeisConfig;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisMatch {
    pub id: String,
    pub name: String,
}

#[derive(Clone, Debug)]
pub enum LookupOutcome {
    /// Lookups are turned off in the configuration.
    Disabled,
    /// No network allowed or available and no cached response; lookup
    /// skipped without failing the computation.
    Skipped(String),
    Hits(Vec<OeisMatch>),
}

pub struct OeisClient {
    config: OeisConfig,
}

impl OeisClient {
    pub fn new(config: OeisConfig) -> Self {
        OeisClient { config }
    }

    fn cache_path(&self, query: &str) -> PathBuf {
        let safe: String = query
            .chars()
            .map(|c| match c {
                '0'..='9' | 'a'..='z' | 'A'..='Z' => c,
                '-' => 'm',
                _ => '_',
            })
            .collect();
        self.config.cache_dir.join(format!("oeis-{safe}.json"))
    }

    pub fn lookup(&self, terms: &[Integer]) -> Result<LookupOutcome> {
        if !self.config.enabled {
            return Ok(LookupOutcome::Disabled);
        }
        let query = terms
            .iter()
            .map(Integer::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let cache = self.cache_path(&query);
        let body = if cache.exists() {
            std::fs::read_to_string(&cache)
                .with_context(|| format!("cannot read cache {}", cache.display()))?
        } else {
            if self.config.offline {
                return Ok(LookupOutcome::Skipped(format!(
                    "offline and no cached response for {query}"
                )));
            }
            let url = format!("{}?q={}&fmt=json", self.config.endpoint, query);
            let body = match fetch(&url) {
                Ok(body) => body,
                Err(err) => return Ok(LookupOutcome::Skipped(format!("network: {err}"))),
            };
            std::fs::create_dir_all(&self.config.cache_dir).with_context(|| {
                format!("cannot create cache dir {}", self.config.cache_dir.display())
            })?;
            std::fs::write(&cache, &body)
                .with_context(|| format!("cannot write cache {}", cache.display()))?;
            body
        };
        let hits = parse_response(&body).with_context(|| {
            format!("malformed OEIS response (raw body kept at {})", cache.display())
        })?;
        Ok(LookupOutcome::Hits(hits))
    }
}

fn fetch(url: &str) -> Result<String> {
    let mut response = ureq::get(url).call()?;
    let mut body = String::new();
    response
        .body_mut()
        .as_reader()
        .read_to_string(&mut body)?;
    Ok(body)
}

/// Accepts both historical response shapes: an object with a `results`
/// array (possibly null), or a bare array of result objects.
fn parse_response(body: &str) -> Result<Vec<OeisMatch>> {
    let value: Value = serde_json::from_str(body)?;
    let results = match &value {
        Value::Object(map) => match map.get("results") {
            Some(Value::Array(items)) => items.as_slice(),
            Some(Value::Null) | None => &[],
            Some(other) => anyhow::bail!("unexpected results field: {other}"),
        },
        Value::Array(items) => items.as_slice(),
        other => anyhow::bail!("unexpected response shape: {other}"),
    };
    let mut hits = Vec::new();
    for item in results {
        let number = item
            .get("number")
            .and_then(Value::as_u64)
            .context("result without a sequence number")?;
        let name = item
            .get("name")
            .and_then(Value::as_str)
            .unwrap_or("")
            .to_string();
        hits.push(OeisMatch {
            id: format!("A{number:06}"),
            name,
        });
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_object_shape() {
        let body = r#"{"greeting":"hi","count":1,"results":[{"number":1318,"name":"Generalized pentagonal numbers"}]}"#;
        let hits = parse_response(body).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].id, "A001318");
    }

    #[test]
    fn parses_bare_array_shape() {
        let body = r#"[{"number":1045,"name":"Jacobsthal sequence"}]"#;
        let hits = parse_response(body).unwrap();
        assert_eq!(hits[0].id, "A001045");
    }

    #[test]
    fn null_results_mean_no_hits() {
        assert!(parse_response(r#"{"results":null,"count":0}"#).unwrap().is_empty());
    }

    #[test]
    fn malformed_body_is_an_error() {
        assert!(parse_response("pardon?").is_err());
    }
}
