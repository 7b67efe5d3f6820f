//! Output plumbing: CSV/JSON sinks and float formatting.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Floats are rendered with 15 significant digits and a '.' decimal
/// separator so every table reimports cleanly for plotting.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.14e}")
}

/// Buffered writer over the requested path, or standard output.
pub fn open_sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    match out {
        Some(path) => Ok(Box::new(io::BufWriter::new(File::create(path)?))),
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
    }
}
