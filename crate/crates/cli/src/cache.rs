//! JSON-lines store of computed products, one (u, v) record per line after
//! a header that pins the schema, system and element indexing.

use std::fs;
use std::io::{BufRead, BufReader, ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::RwLock;

use bkmult_core::schubert::{CohomologyClass, SchubertEngine, StructureTable};
use bkmult_core::WeylGroup;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

const INDEXING: &str = "lex";

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct Header {
    schema: u32,
    system: String,
    indexing: String,
}

#[derive(Serialize, Deserialize)]
struct Record {
    system: String,
    u: String,
    v: String,
    terms: Vec<(String, i64)>,
}

/// A [`StructureTable`] shared between workers: lookups take the read lock,
/// misses are computed outside any lock and inserted under the write lock.
pub struct Cache {
    path: Option<PathBuf>,
    table: RwLock<StructureTable>,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl Cache {
    pub fn in_memory(group: &WeylGroup) -> Self {
        Cache {
            path: None,
            table: RwLock::new(StructureTable::new(group.id())),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
        }
    }

    /// Loads `path` if it exists. A file written under another schema or
    /// indexing is discarded; one for another system is an error.
    pub fn open(path: &Path, group: &WeylGroup) -> Result<Self> {
        let mut cache = Self::in_memory(group);
        cache.path = Some(path.to_path_buf());
        let file = match fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(CliError::io(path, e)),
        };
        let system = group.id().to_string();
        let bad = |line: usize, message: String| CliError::Cache { path: path.to_path_buf(), line, message };
        let mut lines = BufReader::new(file).lines().enumerate();
        let Some((_, first)) = lines.next() else { return Ok(cache) };
        let first = first.map_err(|e| CliError::io(path, e))?;
        let header: Header = serde_json::from_str(&first).map_err(|e| bad(1, e.to_string()))?;
        if header.system != system {
            return Err(bad(1, format!("cache is for {}, not {system}", header.system)));
        }
        if header.schema != StructureTable::VERSION || header.indexing != INDEXING {
            return Ok(cache);
        }
        let table = cache.table.get_mut().expect("fresh lock");
        for (n, line) in lines {
            let line = line.map_err(|e| CliError::io(path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: Record = serde_json::from_str(&line).map_err(|e| bad(n + 1, e.to_string()))?;
            if rec.system != system {
                return Err(bad(n + 1, format!("record for {}", rec.system)));
            }
            let word = |s: &str| group.parse_word(s).map_err(|e| bad(n + 1, e.to_string()));
            let (u, v) = (word(&rec.u)?, word(&rec.v)?);
            let mut class = CohomologyClass::zero(group.id());
            for (w, c) in &rec.terms {
                class.add_term(word(w)?, *c);
            }
            table.insert(u, v, class);
        }
        Ok(cache)
    }

    /// [Ω_u]·[Ω_v], from the table or the engine.
    pub fn cup(&self, engine: &SchubertEngine, u: usize, v: usize) -> bkmult_core::Result<CohomologyClass> {
        if let Some(c) = self.table.read().expect("cache lock").get(u, v) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(c.clone());
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let c = engine.cup_expand(u, v)?;
        self.table.write().expect("cache lock").insert(u, v, c.clone());
        Ok(c)
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rewrites the file with records in index order, via a temporary file.
    pub fn save(&self, group: &WeylGroup) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let system = group.id().to_string();
        let mut buf = Vec::new();
        let header = Header { schema: StructureTable::VERSION, system: system.clone(), indexing: INDEXING.into() };
        serde_json::to_writer(&mut buf, &header)?;
        buf.push(b'\n');
        for ((u, v), class) in self.table.read().expect("cache lock").entries() {
            let rec = Record {
                system: system.clone(),
                u: group.word(u).to_string(),
                v: group.word(v).to_string(),
                terms: class.terms().map(|(w, c)| (group.word(w).to_string(), c)).collect(),
            };
            serde_json::to_writer(&mut buf, &rec)?;
            buf.push(b'\n');
        }
        let tmp = path.with_extension("tmp");
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&buf)?;
            f.sync_all()?;
            fs::rename(&tmp, path)
        };
        write().map_err(|e| CliError::io(path, e))
    }
}
