//! Resolving the graph and the specification named on the command line.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use multidom::{generate, read_graph, DominationSpec, Graph, GraphFamily, GraphFamilySpec, GraphFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Gnp,
    Regular,
    Path,
    Cycle,
    Complete,
    Bipartite,
    Petersen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    EdgeList,
    Dimacs,
}

impl From<FileFormat> for GraphFormat {
    fn from(f: FileFormat) -> Self {
        match f {
            FileFormat::EdgeList => GraphFormat::EdgeList,
            FileFormat::Dimacs => GraphFormat::Dimacs,
        }
    }
}

/// Parameters of a generated graph.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Order of the graph.
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability for `gnp`.
    #[arg(long)]
    pub p: Option<f64>,
    /// Degree for `regular`.
    #[arg(long)]
    pub d: Option<usize>,
    /// Part sizes `A,B` for `bipartite`.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Seed for the generator and for any randomized step of the command.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl FamilyArgs {
    pub fn family_spec(&self) -> Result<GraphFamilySpec> {
        let Some(name) = self.family else {
            bail!("either --graph FILE or --family NAME is required");
        };
        let n = || self.n.with_context(|| format!("--n is required for {name:?}"));
        let family = match name {
            FamilyName::Gnp => GraphFamily::Gnp { n: n()?, p: self.p.context("--p is required for gnp")? },
            FamilyName::Regular => {
                GraphFamily::RandomRegular { n: n()?, d: self.d.context("--d is required for regular")? }
            }
            FamilyName::Path => GraphFamily::Path { n: n()? },
            FamilyName::Cycle => GraphFamily::Cycle { n: n()? },
            FamilyName::Complete => GraphFamily::Complete { n: n()? },
            FamilyName::Bipartite => {
                let Some(&[a, b]) = self.parts.as_deref() else {
                    bail!("--parts A,B is required for bipartite");
                };
                GraphFamily::CompleteBipartite { a, b }
            }
            FamilyName::Petersen => GraphFamily::Petersen,
        };
        Ok(GraphFamilySpec::new(family, self.seed))
    }
}

/// A graph file or a generated family.
#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph file; `.dimacs`, `.col` and `.clq` are read as DIMACS, anything else as an edge list.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Overrides the format guessed from the file extension.
    #[arg(long, value_enum, requires = "graph")]
    pub graph_format: Option<FileFormat>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

/// Where a graph came from, as echoed in reports.
#[derive(Debug, Clone, serde::Serialize)]
#[serde(untagged)]
pub enum Origin {
    File { file: String },
    Family(GraphFamilySpec),
}

impl GraphArgs {
    pub fn load(&self) -> Result<(Graph, Origin)> {
        match &self.graph {
            Some(path) => {
                let format = self.graph_format.map(GraphFormat::from).unwrap_or_else(|| guess_format(path));
                let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
                let g =
                    read_graph(BufReader::new(file), format).with_context(|| format!("reading {}", path.display()))?;
                Ok((g, Origin::File { file: path.display().to_string() }))
            }
            None => {
                let spec = self.family.family_spec()?;
                Ok((generate(&spec)?, Origin::Family(spec)))
            }
        }
    }

    pub fn seed(&self) -> u64 {
        self.family.seed
    }
}

fn guess_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("dimacs" | "col" | "clq") => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

/// Parses the compact specification forms, plus `rs:RFILE,SFILE` and
/// `totalrs:RFILE,SFILE` whose files hold whitespace-separated integers.
pub fn parse_spec(text: &str) -> Result<DominationSpec> {
    let vectors = |files: &str| -> Result<(Vec<u32>, Vec<u32>)> {
        let (r, s) = files.split_once(',').context("expected RFILE,SFILE")?;
        Ok((read_vector(Path::new(r))?, read_vector(Path::new(s))?))
    };
    if let Some(files) = text.strip_prefix("rs:") {
        let (r, s) = vectors(files)?;
        return Ok(DominationSpec::Rs { r, s });
    }
    if let Some(files) = text.strip_prefix("totalrs:") {
        let (r, s) = vectors(files)?;
        return Ok(DominationSpec::TotalRs { r, s });
    }
    Ok(text.parse()?)
}

fn read_vector(path: &Path) -> Result<Vec<u32>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    text.split_whitespace()
        .map(|tok| tok.parse::<u32>().with_context(|| format!("bad integer `{tok}` in {}", path.display())))
        .collect()
}
