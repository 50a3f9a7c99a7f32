use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use circmyc::graph::{parse_dimacs, write_dimacs, LabelSidecar};
use circmyc::{Error, Graph, Result};
use serde_json::{json, Value};

/// `f.col` keeps its labels in `f.labels.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("labels.json")
}

/// Reads a DIMACS graph from a file, or from stdin for `-`, attaching the
/// label sidecar when one exists next to the file.
pub fn read_graph(path: &str) -> Result<Graph> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return parse_dimacs(&text);
    }
    let p = Path::new(path);
    let text = fs::read_to_string(p).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    let g = parse_dimacs(&text)?;
    let side = sidecar_path(p);
    if !side.exists() {
        return Ok(g);
    }
    let raw = fs::read_to_string(&side)?;
    let labels: LabelSidecar = serde_json::from_str(&raw).map_err(|e| Error::Io(format!("{}: {e}", side.display())))?;
    labels.apply(g)
}

/// Writes DIMACS to `out` (stdout when absent). A file target also gets
/// the label sidecar when the graph carries labels.
pub fn write_graph(g: &Graph, out: Option<&Path>) -> Result<()> {
    let text = write_dimacs(g);
    match out {
        None => emit(&text),
        Some(p) => {
            fs::write(p, text)?;
            if let Some(side) = LabelSidecar::from_graph(g) {
                let body = serde_json::to_string_pretty(&side).expect("sidecar serializes") + "\n";
                fs::write(sidecar_path(p), body)?;
            }
            Ok(())
        }
    }
}

/// The JSON export: 0-based vertex ids and edge pairs.
pub fn graph_json(g: &Graph) -> Value {
    let mut v = json!({
        "order": g.order(),
        "edges": g.edges().collect::<Vec<_>>(),
    });
    if let Some(p) = g.provenance() {
        v["family"] = json!(p.family);
        v["params"] = json!(p.params);
    }
    if let Some(l) = g.labels() {
        v["labels"] = json!(l);
    }
    v
}

pub fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        // A closed pipe downstream is not our failure.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

pub fn emit_json(v: &impl serde::Serialize) -> Result<()> {
    emit(&(serde_json::to_string_pretty(v).expect("serializable") + "\n"))
}

pub fn write_text(path: &str, text: &str) -> Result<()> {
    if path == "-" {
        emit(text)
    } else {
        fs::write(path, text).map_err(|e| Error::Io(format!("{path}: {e}")))
    }
}
