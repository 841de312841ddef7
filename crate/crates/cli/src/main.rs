use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use homcx_core::budget::Budget;
use homcx_core::constructions::{chromatic_pipeline, verify_certificate, FamilyMember, PipelineCertificate, Verdict};
use homcx_core::error::Error;
use homcx_core::graph::{Graph, GraphJson};
use homcx_core::hom::{enumerate_cells_with, x_homotopy_classes_with};
use homcx_core::homology::hom_homology;

#[derive(Parser)]
#[command(name = "homcx", version, about = "Hom complexes of graphs and their homology")]
struct Cli {
    /// Cap on homomorphisms, cells, chains and solver steps; overrides the defaults.
    #[arg(long, global = true, env = "HOMCX_CAP")]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect Hom(T, G); prints cells and homology when neither flag nor --classes is given.
    Hom {
        t: PathBuf,
        g: PathBuf,
        #[arg(long)]
        homology: bool,
        #[arg(long)]
        cells: bool,
        #[arg(long)]
        classes: bool,
    },
    /// Build H ⊇ G with χ(H) > n and record the evidence in a certificate.
    Construct {
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<PathBuf>,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "certificate.json")]
        out: PathBuf,
    },
    /// Recompute every claim of a certificate from the graphs it embeds.
    Verify { cert: PathBuf },
}

/// Failure with its exit code.
struct Exit(u8, anyhow::Error);

const PARSE: u8 = 2;
const BUDGET: u8 = 3;
const BIPARTITE: u8 = 4;
const VERIFY: u8 = 5;

fn code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } | Error::NotFound(_) => BUDGET,
        Error::BipartiteInput => BIPARTITE,
        _ => PARSE,
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(code_for(&e), e.into())
    }
}

fn read(path: &Path) -> Result<String, Exit> {
    std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Exit(PARSE, e))
}

fn parse_err(path: &Path, e: Error) -> Exit {
    Exit(PARSE, anyhow::Error::new(e).context(format!("parsing {}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Exit> {
    GraphJson::parse(&read(path)?).map_err(|e| parse_err(path, e))
}

fn load_member(path: &Path) -> Result<FamilyMember, Exit> {
    let raw: GraphJson = serde_json::from_str(&read(path)?).map_err(|e| parse_err(path, e.into()))?;
    FamilyMember::from_json(&raw).map_err(|e| parse_err(path, e))
}

fn budget(cap: Option<usize>) -> Budget {
    cap.map_or_else(Budget::default, Budget::uniform)
}

fn hom(t: &Path, g: &Path, mut homology: bool, mut cells: bool, classes: bool, budget: &Budget) -> Result<(), Exit> {
    let (t, g) = (load_graph(t)?, load_graph(g)?);
    if !(homology || cells || classes) {
        homology = true;
        cells = true;
    }
    if cells || homology {
        let k = enumerate_cells_with(&t, &g, budget)?;
        if k.is_empty() {
            println!("empty complex");
        } else {
            if cells {
                let mut by_dim = vec![0usize; k.dimension().unwrap_or(0) + 1];
                for c in k.cells() {
                    by_dim[c.dimension()] += 1;
                }
                println!("cells {}", k.len());
                for (d, count) in by_dim.iter().enumerate() {
                    println!("  dim {d}: {count}");
                }
            }
            if homology {
                let p = hom_homology(&k);
                println!("betti {}", serde_json::to_string(&p.betti).expect("serialisable"));
                if !p.is_torsion_free() {
                    println!("torsion {}", serde_json::to_string(&p.torsion).expect("serialisable"));
                }
                println!("homology {}", p.summary());
            }
        }
    }
    if classes {
        let c = x_homotopy_classes_with(&t, &g, budget.hom_cap)?;
        println!("classes {} (homomorphisms {})", c.classes.len(), c.homs.len());
    }
    Ok(())
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomically(path: &Path, text: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)?;
    Ok(())
}

fn construct(family: &[PathBuf], g: &Path, n: usize, seed: u64, out: &Path, budget: &Budget) -> Result<(), Exit> {
    let family = family.iter().map(|p| load_member(p)).collect::<Result<Vec<_>, _>>()?;
    let g = load_graph(g)?;
    let cert = chromatic_pipeline(&family, &g, n, seed, budget)?;
    write_atomically(out, &cert.to_json()).map_err(|e| Exit(1, e.context(format!("writing {}", out.display()))))?;
    println!(
        "verdict {} (chiX={}, chiH={}, |V(H)|={}) -> {}",
        serde_json::to_value(cert.verdict).expect("serialisable").as_str().unwrap_or("?"),
        cert.chi_x.map_or_else(|| "-".to_string(), |c| c.to_string()),
        cert.chi_h,
        cert.graph_h.n,
        out.display()
    );
    match cert.verdict {
        Verdict::Consistent => Ok(()),
        Verdict::Partial => Err(Exit(BUDGET, anyhow::anyhow!("some claims were left unverified by the budget"))),
        Verdict::Failed => Err(Exit(VERIFY, anyhow::anyhow!("checks failed: {:?}", cert.checks))),
    }
}

fn verify(path: &Path) -> Result<(), Exit> {
    let cert = PipelineCertificate::from_json(&read(path)?).map_err(|e| parse_err(path, e))?;
    let report = verify_certificate(&cert)?;
    if report.passes() {
        println!("pass");
        Ok(())
    } else {
        println!("fail: {}", report.mismatches.join(", "));
        Err(Exit(VERIFY, anyhow::anyhow!("certificate does not match its recomputation")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = budget(cli.cap);
    let result = match &cli.command {
        Command::Hom {
            t,
            g,
            homology,
            cells,
            classes,
        } => hom(t, g, *homology, *cells, *classes, &budget),
        Command::Construct {
            family,
            g,
            n,
            seed,
            out,
        } => construct(family, g, *n, *seed, out, &budget),
        Command::Verify { cert } => verify(cert),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
