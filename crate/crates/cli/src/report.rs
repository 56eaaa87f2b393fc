//! Machine-readable reports with reproducible float formatting.

use std::io;

use pseudoctx_core::numfmt::fmt17;
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

/// Compact JSON whose floats are printed via [`fmt17`], so a report is
/// byte-identical across runs for the same inputs and flags.
struct Fmt17Formatter;

impl Formatter for Fmt17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

pub fn value_to_json(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Fmt17Formatter);
    value.serialize(&mut ser).expect("in-memory serialization cannot fail");
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// One command invocation's structured result. Timings are deliberately not
/// part of the report (they would break reproducibility); the `--timings`
/// flag prints them to stderr instead.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
}

impl Report {
    pub fn to_json_line(&self) -> String {
        value_to_json(&serde_json::json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "timings": Value::Null,
        }))
    }
}
