//! JSON result records and the append-only JSON-lines cache.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

/// Identifies a query for cache lookups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema: u32,
    pub query: Query,
    pub value: u64,
    pub exhaustive: bool,
    pub certificate: serde_json::Value,
    pub engine_version: String,
    pub wall_time_ms: u64,
}

impl ResultRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Last record in `path` matching `query` under the current engine version.
pub fn lookup(path: &Path, query: &Query) -> std::io::Result<Option<ResultRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut found = None;
    for line in BufReader::new(file).lines() {
        let line = line?;
        // lines from other schemas or hand edits are skipped
        let Ok(record) = serde_json::from_str::<ResultRecord>(&line) else {
            continue;
        };
        if record.schema == SCHEMA && &record.query == query && record.engine_version == rprime_core::ENGINE_VERSION {
            found = Some(record);
        }
    }
    Ok(found)
}

pub fn append(path: &Path, record: &ResultRecord) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(file, "{}", record.to_json_line())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(value: u64) -> ResultRecord {
        ResultRecord {
            schema: SCHEMA,
            query: Query {
                command: "search".into(),
                kind: "rprime".into(),
                n: Some(4),
                m: None,
                j: None,
                score: None,
                graph6: None,
            },
            value,
            exhaustive: true,
            certificate: serde_json::json!({}),
            engine_version: rprime_core::ENGINE_VERSION.into(),
            wall_time_ms: 0,
        }
    }

    #[test]
    fn last_matching_line_wins() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        assert_eq!(lookup(&path, &record(0).query).unwrap(), None);
        append(&path, &record(3)).unwrap();
        std::fs::OpenOptions::new()
            .append(true)
            .open(&path)
            .unwrap()
            .write_all(b"not json\n")
            .unwrap();
        append(&path, &record(4)).unwrap();
        assert_eq!(lookup(&path, &record(0).query).unwrap().unwrap().value, 4);
        let mut other = record(0).query;
        other.n = Some(5);
        assert_eq!(lookup(&path, &other).unwrap(), None);
    }
}
