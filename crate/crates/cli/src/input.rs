use std::fs::File;
use std::io::{self, BufWriter, Read, Write};

use anyhow::{Context, Result};
use domiperf::formats::{parse_edge_list_blocks, parse_graph6_lines};
use domiperf::GraphRecord;

use crate::Format;

/// Reads every graph up front so that a malformed line fails the whole run
/// before any output is written.
pub fn read_graphs(path: Option<&str>, format: Format) -> Result<Vec<GraphRecord>> {
    let mut text = String::new();
    match path {
        None | Some("-") => {
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
        }
        Some(p) => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .with_context(|| format!("reading {p}"))?;
        }
    }
    let records: Result<Vec<GraphRecord>, _> = match format {
        Format::Graph6 => parse_graph6_lines(&text).collect(),
        Format::Edges => parse_edge_list_blocks(&text).into_iter().collect(),
    };
    Ok(records?)
}

pub struct Output(Box<dyn Write>);

impl Output {
    pub fn open(path: Option<&str>) -> Result<Output> {
        Ok(Output(match path {
            None | Some("-") => Box::new(BufWriter::new(io::stdout().lock())),
            Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {p}"))?)),
        }))
    }

    pub fn lines(mut self, lines: &[String]) -> Result<()> {
        for l in lines {
            writeln!(self.0, "{l}")?;
        }
        self.0.flush()?;
        Ok(())
    }
}
