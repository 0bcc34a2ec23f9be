//! Domain and condition-set file formats.
//!
//! Text domain files carry a header line `alternatives: a b c d` followed
//! by one order per line (space-separated labels, best first; the compact
//! single-token form is accepted when all labels are one character).
//! Blank lines and `#` comments are ignored. The JSON mirror is
//! `{"alternatives": [...], "orders": [[...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::domain::Domain;
use crate::never::{ConditionSet, NeverCondition};
use crate::order::{AlternativeSet, LinearOrder};
use crate::{Error, Result};

/// Version stamped into every JSON document this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses a domain from either format, sniffing JSON by a leading `{`.
pub fn parse_domain(text: &str) -> Result<Domain> {
    if text.trim_start().starts_with('{') {
        parse_domain_json(text)
    } else {
        parse_domain_text(text)
    }
}

pub fn parse_domain_text(text: &str) -> Result<Domain> {
    let mut alts: Option<AlternativeSet> = None;
    let mut orders: Vec<LinearOrder> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        let lineno = index + 1;
        if line.is_empty() {
            continue;
        }
        match &alts {
            None => {
                let Some(rest) = line.strip_prefix("alternatives:") else {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected header line starting with 'alternatives:'".into(),
                    });
                };
                alts = Some(
                    AlternativeSet::from_labels(rest.split_whitespace().map(str::to_string))
                        .map_err(|e| Error::Parse {
                            line: lineno,
                            message: e.to_string(),
                        })?,
                );
            }
            Some(set) => {
                let order = set.parse_order(line).map_err(|e| Error::Parse {
                    line: lineno,
                    message: e.to_string(),
                })?;
                orders.push(order);
            }
        }
    }
    let Some(alts) = alts else {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing 'alternatives:' header".into(),
        });
    };
    Domain::new(alts, orders)
}

/// Renders the canonical text form; parses back to the identical domain.
pub fn render_domain_text(domain: &Domain) -> String {
    let mut out = format!(
        "alternatives: {}\n",
        domain.alternatives().labels().join(" ")
    );
    for line in domain.render_orders() {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct DomainJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema_version: Option<u32>,
    alternatives: Vec<String>,
    orders: Vec<Vec<String>>,
}

pub fn parse_domain_json(text: &str) -> Result<Domain> {
    let raw: DomainJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let alts = AlternativeSet::from_labels(raw.alternatives).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    let orders = raw
        .orders
        .iter()
        .map(|tokens| alts.parse_order(&tokens.join(" ")))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Parse {
            line: 1,
            message: e.to_string(),
        })?;
    Domain::new(alts, orders)
}

pub fn render_domain_json(domain: &Domain) -> String {
    let doc = DomainJson {
        schema_version: Some(SCHEMA_VERSION),
        alternatives: domain.alternatives().labels().to_vec(),
        orders: domain
            .orders()
            .iter()
            .map(|u| {
                u.ranking()
                    .iter()
                    .map(|&id| domain.alternatives().label(id).to_string())
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("domain serializes")
}

/// Parses a condition-set file: one `xN{a,b,c}i` per line, `#` comments
/// allowed. Labels resolve against the given alternative set.
pub fn parse_condition_set(text: &str, alts: &AlternativeSet) -> Result<ConditionSet> {
    let mut set = ConditionSet::new(alts.len());
    for (index, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let cond = NeverCondition::parse(line, alts).map_err(|e| Error::Parse {
            line: index + 1,
            message: e.to_string(),
        })?;
        set.insert(cond);
    }
    Ok(set)
}

pub fn render_condition_set(set: &ConditionSet, alts: &AlternativeSet) -> String {
    let mut out = String::new();
    for cond in set.iter() {
        out.push_str(&cond.display(alts));
        out.push('\n');
    }
    out
}
