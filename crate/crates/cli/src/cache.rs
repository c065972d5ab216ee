//! On-disk cache of enumerated bases, enabled by `DECOGRAPH_CACHE_DIR`.
//! Entries are keyed by complex and bidegree and tagged with the tool
//! version; a stale or unreadable entry is recomputed and overwritten.

use std::fs;
use std::path::PathBuf;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use decograph::homology::Differential;
use decograph::json::{GraphJson, VERSION};
use decograph::{DecoratedGraph, Parity};

pub const CACHE_ENV: &str = "DECOGRAPH_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    graphs: Vec<GraphJson>,
}

fn path(diff: Differential, parity: Parity, k: i64, m: i64) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let kind = if diff == Differential::Framed { "framed" } else { "plain" };
    Some(PathBuf::from(dir).join(format!("basis-{kind}-{parity}-{k}-{m}.json")))
}

fn load(path: &PathBuf) -> Option<Vec<DecoratedGraph>> {
    let entry: Entry = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if entry.version != VERSION {
        return None;
    }
    entry.graphs.iter().map(|g| DecoratedGraph::try_from(g).ok()).collect()
}

pub fn basis(diff: Differential, parity: Parity, k: i64, m: i64) -> Result<Vec<DecoratedGraph>> {
    let Some(path) = path(diff, parity, k, m) else {
        return Ok(diff.basis(parity, k, m)?);
    };
    if let Some(graphs) = load(&path) {
        return Ok(graphs);
    }
    let graphs = diff.basis(parity, k, m)?;
    let entry = Entry { version: VERSION.to_string(), graphs: graphs.iter().map(GraphJson::from).collect() };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    fs::write(&path, serde_json::to_string(&entry)?)?;
    Ok(graphs)
}
