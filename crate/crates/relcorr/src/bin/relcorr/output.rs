//! Output assembly helpers. Every command builds its full output as one
//! string and writes it in a single pass, so a rerun with identical flags
//! produces byte-identical bytes.

use serde_json::{json, Map, Value};

/// Shortest round-trip decimal form of a float, locale-independent.
pub fn format_float(v: f64) -> String {
    format!("{v}")
}

/// One CSV record terminated by a newline. Cells are known to be free of
/// commas, quotes, and line breaks, so no quoting is needed.
pub fn csv_line(cells: &[String]) -> String {
    let mut line = cells.join(",");
    line.push('\n');
    line
}

/// Run manifest: the command name, every parameter that shaped the run,
/// and the tool version. Re-running a manifest reproduces the output.
pub fn manifest(command: &str, parameters: Map<String, Value>) -> Value {
    json!({
        "command": command,
        "parameters": parameters,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

/// Pretty-printed JSON document holding the manifest and a payload.
pub fn json_document(manifest: Value, key: &str, payload: Value) -> String {
    let mut doc = Map::new();
    doc.insert("manifest".into(), manifest);
    doc.insert(key.into(), payload);
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable output");
    text.push('\n');
    text
}
