use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to FILE instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Leave out the timestamp so that repeated runs are byte-identical.
    #[arg(long)]
    pub no_timestamp: bool,
}

impl OutputArgs {
    pub fn sink(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => {
                let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
                Box::new(BufWriter::new(file))
            }
            None => Box::new(io::stdout().lock()),
        })
    }

    /// Writes `{command, timestamp?, ..., result}` as pretty JSON.
    pub fn emit<T: Serialize>(&self, command: &str, context: serde_json::Value, result: &T) -> Result<()> {
        let mut doc = serde_json::Map::new();
        doc.insert("command".into(), command.into());
        if !self.no_timestamp {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            doc.insert("timestamp".into(), secs.into());
        }
        if let serde_json::Value::Object(extra) = context {
            doc.extend(extra);
        }
        doc.insert("result".into(), serde_json::to_value(result)?);
        let mut sink = self.sink()?;
        serde_json::to_writer_pretty(&mut sink, &doc)?;
        writeln!(sink)?;
        sink.flush()?;
        Ok(())
    }
}
