//! `ballpack`: generate packings, count contacts, analyse cap packings and
//! audit the bound constants.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch or a
//! failed check, and 2 for bad arguments or unreadable input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ballpack::audit::{
    audit_chain, construction_lower, pairs_upper, triplets_quads_upper, ProofParams,
};
use ballpack::constructions::{
    cuboctahedron_configuration, octahedral_packing, table6_configuration, verify_octahedral,
};
use ballpack::contact::count_contacts;
use ballpack::sphere::tables::{all_tables, lemma_table, LemmaTable};
use ballpack::sphere::{
    assemble_polygons, cap_contact_counts, classify_triangles, delaunay, project_neighbors,
    PolarConvention,
};
use ballpack::{CapConfiguration, Error, Packing, TolerancePolicy};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "ballpack",
    version,
    about = "Contact numbers of unit-ball and spherical-cap packings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a constructed packing as JSON.
    Generate {
        #[command(subcommand)]
        which: Generate,
    },
    /// Count touching pairs, triplets and quadruples of a packing file.
    Count {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        distance_eps: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the octahedral construction against its closed-form counts.
    VerifyConstruction {
        #[arg(long)]
        k: u64,
    },
    /// Evaluate the upper and lower bounds for `n` balls.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lattice: bool,
    },
    /// Recompute the constants of the surface-area argument.
    Audit {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Spherical cap packings.
    Sphere {
        #[command(subcommand)]
        command: Sphere,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Regular octahedron of FCC lattice points with `k` balls per edge.
    Octahedral {
        #[arg(long)]
        k: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Sphere {
    /// Delaunay triangulation, triangle types and irregular polygons.
    Delaunay {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        angle_eps: f64,
    },
    /// Write one of the built-in twelve-point configurations.
    Preset {
        #[arg(long, value_enum)]
        name: Preset,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance and touching counts of a configuration.
    Verify {
        #[arg(
            long = "in",
            conflicts_with = "preset",
            required_unless_present = "preset"
        )]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[arg(long, default_value_t = 1e-9)]
        angle_eps: f64,
    },
    /// Regenerate the lemma tables.
    Tables {
        /// Table number 1..=5; all tables when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        which: Option<u8>,
        #[arg(long, default_value_t = 3)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Project the neighbors of one ball of a packing onto its unit sphere.
    Project {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value_t = 1e-9)]
        distance_eps: f64,
        #[arg(long, default_value_t = 1e-9)]
        angle_eps: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Table6,
    Cuboctahedron,
}

/// Failure of a command, carrying its exit status.
enum Failure {
    /// A check ran and did not hold.
    Check(String),
    /// Bad input or arguments.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Mismatch { .. } => Failure::Check(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Generate {
            which: Generate::Octahedral { k, out },
        } => {
            let p = octahedral_packing(k)?;
            emit(out.as_deref(), &p.to_json_string())
        }
        Command::Count {
            input,
            distance_eps,
            format,
        } => {
            let p = read_packing(&input)?;
            let tol = TolerancePolicy::new(distance_eps, 1e-9)?;
            let c = count_contacts(&p, &tol)?;
            match format {
                Format::Json => print_json(&c),
                Format::Csv => put(&format!(
                    "n,pairs,triplets,quadruples\n{},{},{},{}",
                    c.n, c.pairs, c.triplets, c.quadruples
                )),
            }
            Ok(())
        }
        Command::VerifyConstruction { k } => {
            let report = verify_octahedral(k)?;
            print_json(&report);
            Ok(())
        }
        Command::Bounds { n, lattice } => bounds(n, lattice),
        Command::Audit { format } => {
            let results = audit_chain(&ProofParams::default());
            match format {
                Format::Json => print_json(&results),
                Format::Csv => {
                    let mut text = String::from("check,computed,expected,tolerance,pass");
                    for r in &results {
                        text += &format!(
                            "\n{},{},{},{},{}",
                            r.name, r.computed, r.expected, r.tolerance, r.pass
                        );
                    }
                    put(&text);
                }
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} audit checks failed")));
            }
            Ok(())
        }
        Command::Sphere { command } => sphere(command),
    }
}

fn bounds(n: u64, lattice: bool) -> CmdResult {
    let mut reports = vec![serde_json::to_value(pairs_upper(n, lattice)?).expect("serializable")];
    if let Ok((t, q)) = triplets_quads_upper(n, lattice) {
        reports.push(serde_json::to_value(t).expect("serializable"));
        reports.push(serde_json::to_value(q).expect("serializable"));
    }
    let (p, t, q) = construction_lower(n)?;
    for (name, value, formula) in [
        ("pairs_lower_construction", p, "6n - 486^(1/3)*n^(2/3)"),
        (
            "triplets_lower_construction",
            t,
            "8n - 12*(3n/2)^(2/3) + 4*n^(1/3)",
        ),
        (
            "quadruples_lower_construction",
            q,
            "2n - 4*(3n/2)^(2/3) + 2*n^(1/3)",
        ),
    ] {
        reports.push(json!({ "name": name, "n": n, "value": value, "formula_text": formula }));
    }
    print_json(&reports);
    Ok(())
}

fn sphere(command: Sphere) -> CmdResult {
    match command {
        Sphere::Delaunay { input, angle_eps } => {
            let config = read_caps(&input, angle_eps)?;
            let t = delaunay(&config)?;
            let classes = classify_triangles(&t, angle_eps)?;
            let polygons = assemble_polygons(&t, &classes, angle_eps);
            print_json(&json!({
                "n": t.n,
                "faces": t.face_count(),
                "edges": t.edge_count(),
                "triangles": t.triangles,
                "edge_list": t.edges,
                "types": classes.types,
                "type_histogram": classes.histogram,
                "polygons": polygons,
            }));
            Ok(())
        }
        Sphere::Preset { name, out } => {
            let config = preset(name)?.0;
            emit(out.as_deref(), &config.to_json_string())
        }
        Sphere::Verify {
            input,
            preset: name,
            angle_eps,
        } => {
            let (config, convention) = match (input, name) {
                (Some(path), _) => (read_caps(&path, angle_eps)?, None),
                (None, Some(name)) => preset(name)?,
                (None, None) => return Err(Failure::Input("give --in or --preset".into())),
            };
            let counts = cap_contact_counts(&config, angle_eps);
            let min = config.min_distance();
            let within = counts.pairs <= 25 && counts.triplets <= 11;
            print_json(&json!({
                "n": config.len(),
                "angular_radius": config.angular_radius(),
                "min_distance": if config.len() >= 2 { Some(min) } else { None },
                "convention": convention,
                "pairs": counts.pairs,
                "triplets": counts.triplets,
                "within_bounds": within,
            }));
            if !within {
                return Err(Failure::Check(
                    "touching counts exceed 25 pairs / 11 triplets".into(),
                ));
            }
            Ok(())
        }
        Sphere::Tables {
            which,
            precision,
            format,
        } => {
            let tables: Vec<LemmaTable> = match which {
                Some(id) => vec![lemma_table(id)?],
                None => all_tables(),
            };
            match format {
                Format::Json => print_json(&tables),
                Format::Csv => {
                    let csv: Vec<String> = tables.iter().map(|t| t.to_csv(precision)).collect();
                    put(csv.join("\n").trim_end());
                }
            }
            Ok(())
        }
        Sphere::Project {
            input,
            index,
            distance_eps,
            angle_eps,
            out,
        } => {
            let p = read_packing(&input)?;
            let tol = TolerancePolicy::new(distance_eps, angle_eps)?;
            let caps = project_neighbors(&p, index, &tol)?;
            emit(out.as_deref(), &caps.to_json_string())
        }
    }
}

fn preset(name: Preset) -> Result<(CapConfiguration, Option<PolarConvention>), Failure> {
    Ok(match name {
        Preset::Cuboctahedron => (cuboctahedron_configuration(), None),
        Preset::Table6 => {
            let t = table6_configuration()?;
            (t.config, Some(t.convention))
        }
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_packing(path: &Path) -> Result<Packing, Failure> {
    Ok(Packing::from_json_str(&read(path)?)?)
}

fn read_caps(path: &Path, angle_eps: f64) -> Result<CapConfiguration, Failure> {
    Ok(CapConfiguration::from_json_str(&read(path)?, angle_eps)?)
}

/// Writes `text` plus a newline to `out`, or to stdout.
fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            put(text);
            Ok(())
        }
    }
}

fn print_json<T: Serialize + ?Sized>(value: &T) {
    put(&serde_json::to_string_pretty(value).expect("serializable"));
}

/// Prints a line to stdout; a closed pipe ends the process quietly.
fn put(text: &str) {
    if let Err(e) = writeln!(io::stdout().lock(), "{text}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing output: {e}");
        std::process::exit(2);
    }
}
