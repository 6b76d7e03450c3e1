use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use orbifold_fatgraph::fatgraph::{covers, pinch, pinch_seeded};
use orbifold_fatgraph::stability::{
    achievable_exponents, attach_a_modules, build_disk_surface, build_genus_surface, build_yprime_genus,
    nt_bound, nt_witness, prepare_word, GenusOptions, SurfaceBuild,
};
use orbifold_fatgraph::{check_certificate, classify, Fatgraph, Realization, Word};

#[derive(Parser)]
#[command(
    name = "fatgraph",
    version,
    about = "Cyclic fatgraphs over hyperbolic orbifold groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the boundary word of an orbifold file.
    DeriveBoundary { orbifold: PathBuf },
    /// Classify a word as identity, elliptic, parabolic or hyperbolic.
    Classify {
        #[arg(long)]
        orbifold: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Run the immersion certificate on complete fatgraphs.
    Check {
        #[arg(required = true)]
        fatgraphs: Vec<PathBuf>,
        #[arg(long)]
        orbifold: PathBuf,
        /// One `polygon <idx> <verdict>` line per polygon instead of prose.
        #[arg(long)]
        machine: bool,
    },
    /// Print the boundary components; with a word, check that they cover it.
    Boundary {
        fatgraph: PathBuf,
        #[arg(long, requires = "word")]
        orbifold: Option<PathBuf>,
        #[arg(long, requires = "orbifold")]
        word: Option<String>,
    },
    /// Count pieces by kind and polygons by size.
    Census { fatgraph: PathBuf },
    /// Build a fatgraph whose boundary reads the given words.
    Pinch {
        #[arg(long)]
        orbifold: PathBuf,
        #[arg(long = "word", required = true)]
        words: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a certified surface covering w b^(N + n g) over a disk orbifold.
    BuildDisk {
        orbifold: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a certified surface covering w b^(N + n) over a genus orbifold.
    BuildGenus {
        orbifold: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Skip the b^2 padding of the strip and report the exponent after A_i modules.
        #[arg(long)]
        reproduce_fig: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constructive bound and a witness sequence for sums without equal neighbours.
    NtWitness {
        #[arg(required = true, num_args = 3..)]
        xs: Vec<i64>,
        /// Target sum; defaults to the bound.
        #[arg(long, conflicts_with = "n")]
        target: Option<i64>,
        /// Target the bound plus n times the gcd.
        #[arg(long)]
        n: Option<i64>,
    },
    /// List exponents e up to a limit with w b^e reached by the builders.
    Achievable {
        orbifold: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        up_to: usize,
    },
    /// Write the spine of a fatgraph or the core graph of an orbifold as DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_orbifold(path: &Path) -> Result<Realization> {
    Realization::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_fatgraph(path: &Path) -> Result<Fatgraph> {
    Fatgraph::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn parse_word(text: &str, r: &Realization) -> Result<Word> {
    Word::parse(text, r.alphabet()).with_context(|| format!("in word `{text}`"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Summary on stdout when the fatgraph goes to a file, on stderr when the
/// fatgraph itself goes to stdout.
fn report_build(s: &SurfaceBuild, r: &Realization, out: Option<&Path>, extra: &[String]) -> Result<bool> {
    let cert = check_certificate(&s.fatgraph, r)?;
    let mut lines = extra.to_vec();
    lines.push(format!("base exponent N: {}", s.base_exponent));
    lines.push(format!("exponent: {}", s.exponent));
    lines.push(format!("covering degree: {}", s.degree));
    lines.push(format!(
        "pieces: {}, gluings: {}",
        s.fatgraph.piece_count(),
        s.fatgraph.gluing_count()
    ));
    lines.push(format!(
        "certificate: {}",
        if cert.passed() { "PASS" } else { "FAIL" }
    ));
    let summary = lines.join("\n") + "\n";
    match out {
        Some(_) => print!("{summary}"),
        None => eprint!("{summary}"),
    }
    emit(&s.fatgraph.to_text(), out)?;
    Ok(cert.passed())
}

/// Ok(true) for success, Ok(false) for a negative verdict.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::DeriveBoundary { orbifold } => {
            let r = load_orbifold(&orbifold)?;
            println!("{}", r.boundary_word());
            println!("shape: {}", r.shape()?);
            Ok(true)
        }
        Command::Classify { orbifold, word } => {
            let r = load_orbifold(&orbifold)?;
            let w = parse_word(&word, &r)?;
            println!("{}", classify(&w, &r.boundary_cyclic(), r.alphabet())?);
            Ok(true)
        }
        Command::Check {
            fatgraphs,
            orbifold,
            machine,
        } => {
            let r = load_orbifold(&orbifold)?;
            let mut all = true;
            for path in &fatgraphs {
                let f = load_fatgraph(path)?;
                let rep = check_certificate(&f, &r).with_context(|| format!("in {}", path.display()))?;
                if fatgraphs.len() > 1 {
                    println!("== {}", path.display());
                }
                if machine {
                    print!("{}", rep.machine_lines());
                    println!("certificate: {}", if rep.passed() { "PASS" } else { "FAIL" });
                } else {
                    print!("{rep}");
                }
                all &= rep.passed();
            }
            Ok(all)
        }
        Command::Boundary {
            fatgraph,
            orbifold,
            word,
        } => {
            let f = load_fatgraph(&fatgraph)?;
            let report = f.boundary()?;
            print!("{report}");
            if let (Some(o), Some(word)) = (orbifold, word) {
                let r = load_orbifold(&o)?;
                let w = parse_word(&word, &r)?;
                return match covers(&report, &w, r.alphabet())? {
                    Some(d) => {
                        println!("covers {w} with degree {d}");
                        Ok(true)
                    }
                    None => {
                        println!("not a cover of {w}");
                        Ok(false)
                    }
                };
            }
            Ok(true)
        }
        Command::Census { fatgraph } => {
            let f = load_fatgraph(&fatgraph)?;
            print!("{}", f.census());
            let s = f.surface_summary()?;
            println!(
                "euler characteristic {}, components {}, boundary components {}, genus {}",
                s.euler_characteristic,
                s.connected_components,
                s.boundary_components,
                s.total_genus()
            );
            Ok(true)
        }
        Command::Pinch {
            orbifold,
            words,
            seed,
            out,
        } => {
            let r = load_orbifold(&orbifold)?;
            let ws = words
                .iter()
                .map(|w| parse_word(w, &r))
                .collect::<Result<Vec<_>>>()?;
            let f = match seed {
                Some(s) => pinch_seeded(&ws, r.alphabet(), s)?,
                None => pinch(&ws, r.alphabet())?,
            };
            emit(&f.to_text(), out.as_deref())?;
            Ok(true)
        }
        Command::BuildDisk {
            orbifold,
            word,
            n,
            out,
        } => {
            let r = load_orbifold(&orbifold)?;
            let w = parse_word(&word, &r)?;
            let s = build_disk_surface(&r, &w, n)?;
            report_build(&s, &r, out.as_deref(), &[])
        }
        Command::BuildGenus {
            orbifold,
            word,
            n,
            reproduce_fig,
            out,
        } => {
            let r = load_orbifold(&orbifold)?;
            let w = parse_word(&word, &r)?;
            let opts = GenusOptions {
                pad_b2: !reproduce_fig,
            };
            let mut extra = Vec::new();
            if reproduce_fig {
                let p = prepare_word(&r, &w)?;
                let y = attach_a_modules(&build_yprime_genus(&r, &p.word, false)?, &r)?;
                extra.push(format!("modules attached: boundary {} b^{}", y.word, y.exponent));
            }
            let s = build_genus_surface(&r, &w, n, opts)?;
            report_build(&s, &r, out.as_deref(), &extra)
        }
        Command::NtWitness { xs, target, n } => {
            let inst = nt_bound(&xs)?;
            let c = target.unwrap_or(inst.bound + n.unwrap_or(0) * inst.g);
            println!(
                "g = {}, s = {}, coefficients {:?}, N = {}",
                inst.g, inst.s, inst.coeffs, inst.bound
            );
            let seq = nt_witness(&inst, c)?;
            let shown: Vec<String> = seq.iter().map(|i| i.to_string()).collect();
            println!("target {c}: {}", shown.join(" "));
            Ok(true)
        }
        Command::Achievable {
            orbifold,
            word,
            up_to,
        } => {
            let r = load_orbifold(&orbifold)?;
            let w = parse_word(&word, &r)?;
            let set = achievable_exponents(&r, &w, up_to)?;
            let shown: Vec<String> = set.iter().map(|e| e.to_string()).collect();
            println!("{}", shown.join(" "));
            Ok(true)
        }
        Command::ExportDot { file, out } => {
            let text = read(&file)?;
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let dot = match first {
                "fatgraph" => load_fatgraph(&file)?.spine_dot(),
                "orbifold" => load_orbifold(&file)?.core_graph_dot(),
                _ => bail!("{}: expected a `fatgraph` or `orbifold` file", file.display()),
            };
            emit(&dot, out.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
