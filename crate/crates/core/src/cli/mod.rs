//! Command-line surface tying construction, verification and audit
//! together.
//!
//! Exit codes: `0` verified/consistent, `1` refuted or failed verification,
//! `2` inconclusive, `64` usage errors and malformed files.

pub mod format;

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::One;

use crate::audit::audit_extension;
use crate::formulation::{
    build_birkhoff_extension, birkhoff_z_extension, combined_lower_bound, face_count_lower_bound,
    find_symmetry_certificate, symmetric_variable_lower_bound, to_subspace_extension,
    verify_projection, verify_symmetry_certificate, ColumnOrigin, Formulation, SubspaceExtension,
};
use crate::permgroup::{rho_generators, Permutation};
use crate::polytope::permutahedron_facets;
use crate::section::derive_weak_symmetry_witness;
use crate::Error;
use format::{
    birkhoff_names, coordinate_names, emit_certificate, emit_extension,
    facet_system_as_formulation, parse_certificate, parse_extension, parse_section,
    ExtensionFile,
};

const DEFAULT_CLI_CAP: usize = 7;

#[derive(Parser)]
#[command(
    name = "permext",
    about = "Exact-arithmetic toolkit for extended formulations of the permutahedron",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the facet description of the permutahedron as an extension file.
    GenFacets {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CLI_CAP)]
        cap: usize,
    },
    /// Print the Birkhoff extended formulation (x and z blocks).
    GenBirkhoff {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CLI_CAP)]
        cap: usize,
    },
    /// Print the z-only Birkhoff subspace extension.
    GenBirkhoffZ {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CLI_CAP)]
        cap: usize,
    },
    /// Rewrite a formulation as a subspace extension.
    ToSubspace {
        /// Input file (defaults to stdin).
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Certify that an extension projects onto a target polytope.
    VerifyProjection {
        /// Target polytope, e.g. `perm:4`.
        #[arg(long)]
        target: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CLI_CAP)]
        cap: usize,
        /// Fan independent LP checks out over this many threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Find (or check) a symmetry certificate for a formulation.
    VerifySymmetry {
        /// The target-space permutation, in cycle or one-line form.
        #[arg(long)]
        pi: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Verify this certificate file instead of searching for one.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Derive a weak-symmetry witness for a section table.
    DeriveWitness {
        /// Section file (defaults to stdin).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Semicolon-separated generators (defaults to the rho 3-cycles).
        #[arg(long)]
        gens: Option<String>,
    },
    /// Run the symmetry lower-bound audit on a subspace extension.
    Audit {
        #[arg(long)]
        extension: PathBuf,
        #[arg(long)]
        section: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CLI_CAP)]
        cap: usize,
    },
    /// Print the facet count and the three lower bounds for one n.
    Bounds { n: usize },
}

/// Entry point used by the binary and the tests. Writes to the supplied
/// streams and returns the process exit code.
pub fn run_cli(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    64
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            64
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        return Err(Error::CapExceeded {
            context: "command-line cap".into(),
            requested: n,
            cap,
            estimate: "raise --cap to proceed".into(),
        });
    }
    Ok(())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    match path {
        Some(path) => read_file(path),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::parse(0, format!("reading stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::parse(0, format!("reading {}: {e}", path.display())))
}

fn parse_target(target: &str) -> Result<usize, Error> {
    target
        .strip_prefix("perm:")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| Error::parse(0, format!("unknown target {target:?}, expected perm:<n>")))
}

fn require_formulation(file: ExtensionFile) -> Result<(usize, Vec<String>, Formulation), Error> {
    match file {
        ExtensionFile::Formulation {
            n,
            names,
            formulation,
        } => Ok((n, names, formulation)),
        ExtensionFile::Subspace { .. } => Err(Error::parse(
            0,
            "expected a formulation file, found a subspace extension",
        )),
    }
}

fn require_subspace(file: ExtensionFile) -> Result<(usize, SubspaceExtension), Error> {
    match file {
        ExtensionFile::Subspace { n, extension, .. } => Ok((n, extension)),
        ExtensionFile::Formulation { .. } => Err(Error::parse(
            0,
            "expected a subspace extension file, found a formulation",
        )),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let emit = |out: &mut dyn Write, text: String| -> Result<i32, Error> {
        out.write_all(text.as_bytes())
            .map_err(|e| Error::parse(0, format!("writing output: {e}")))?;
        Ok(0)
    };
    match command {
        Command::GenFacets { n, cap } => {
            check_cap(n, cap)?;
            let fs = permutahedron_facets(n)?;
            let file = ExtensionFile::Formulation {
                n,
                names: coordinate_names(n),
                formulation: facet_system_as_formulation(&fs),
            };
            emit(out, emit_extension(&file))
        }
        Command::GenBirkhoff { n, cap } => {
            check_cap(n, cap)?;
            let file = ExtensionFile::Formulation {
                n,
                names: birkhoff_names(n, true),
                formulation: build_birkhoff_extension(n)?,
            };
            emit(out, emit_extension(&file))
        }
        Command::GenBirkhoffZ { n, cap } => {
            check_cap(n, cap)?;
            let file = ExtensionFile::Subspace {
                n,
                names: birkhoff_names(n, false),
                extension: birkhoff_z_extension(n)?,
            };
            emit(out, emit_extension(&file))
        }
        Command::ToSubspace { input } => {
            let (n, names, formulation) =
                require_formulation(parse_extension(&read_input(&input)?)?)?;
            let transform = to_subspace_extension(&formulation)?;
            let new_names = transform
                .columns
                .iter()
                .map(|origin| match origin {
                    ColumnOrigin::Original(j) => names[*j].clone(),
                    ColumnOrigin::PositivePart(j) => format!("{}+", names[*j]),
                    ColumnOrigin::NegativePart(j) => format!("{}-", names[*j]),
                    ColumnOrigin::Slack(r) => format!("s{}", r + 1),
                })
                .collect();
            let file = ExtensionFile::Subspace {
                n,
                names: new_names,
                extension: transform.extension,
            };
            emit(out, emit_extension(&file))
        }
        Command::VerifyProjection {
            target,
            input,
            cap,
            jobs,
        } => {
            let n = parse_target(&target)?;
            check_cap(n, cap)?;
            let file = parse_extension(&read_input(&input)?)?;
            let facets = permutahedron_facets(n)?;
            let report = match jobs {
                Some(jobs) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs)
                        .build()
                        .map_err(|e| Error::parse(0, format!("thread pool: {e}")))?;
                    pool.install(|| match &file {
                        ExtensionFile::Formulation { formulation, .. } => {
                            verify_projection(formulation, &facets)
                        }
                        ExtensionFile::Subspace { extension, .. } => {
                            verify_projection(extension, &facets)
                        }
                    })?
                }
                None => match &file {
                    ExtensionFile::Formulation { formulation, .. } => {
                        verify_projection(formulation, &facets)?
                    }
                    ExtensionFile::Subspace { extension, .. } => {
                        verify_projection(extension, &facets)?
                    }
                },
            };
            let _ = write!(out, "{report}");
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::VerifySymmetry { pi, input, cert } => {
            let (_, _, formulation) = require_formulation(parse_extension(&read_input(&input)?)?)?;
            let pi = Permutation::parse(&pi, formulation.target_dim())?;
            match cert {
                Some(path) => {
                    let cert = parse_certificate(&read_file(&path)?, &formulation)?;
                    if cert.pi != pi {
                        let _ = writeln!(out, "certificate is for pi = {}, not {pi}", cert.pi);
                        return Ok(1);
                    }
                    if verify_symmetry_certificate(&formulation, &cert) {
                        let _ = writeln!(out, "certificate verified for pi = {pi}");
                        Ok(0)
                    } else {
                        let _ = writeln!(out, "certificate INVALID for pi = {pi}");
                        Ok(1)
                    }
                }
                None => match find_symmetry_certificate(&formulation, &pi)? {
                    Some(cert) => {
                        debug_assert!(verify_symmetry_certificate(&formulation, &cert));
                        let _ = write!(out, "{}", emit_certificate(&cert));
                        Ok(0)
                    }
                    None => {
                        let _ = writeln!(out, "no symmetry certificate exists for pi = {pi}");
                        Ok(1)
                    }
                },
            }
        }
        Command::DeriveWitness { input, gens } => {
            let section = parse_section(&read_input(&input)?)?;
            let generators = match gens {
                Some(text) => text
                    .split(';')
                    .map(|piece| Permutation::parse(piece.trim(), section.n()))
                    .collect::<Result<Vec<_>, _>>()?,
                None => rho_generators(section.n())?,
            };
            match derive_weak_symmetry_witness(&section, &generators)? {
                Some(witness) => {
                    let _ = writeln!(out, "weak-symmetry-witness");
                    for (pi, kappa) in witness.pairs() {
                        let _ = writeln!(out, "gen {pi} kappa {kappa}");
                    }
                    let _ = writeln!(out, "end");
                    Ok(0)
                }
                None => {
                    let _ = writeln!(out, "no weak-symmetry witness exists for the generators");
                    Ok(1)
                }
            }
        }
        Command::Audit {
            extension,
            section,
            cap,
        } => {
            let (_, extension) = require_subspace(parse_extension(&read_file(&extension)?)?)?;
            let section = parse_section(&read_file(&section)?)?;
            check_cap(section.n(), cap)?;
            let generators = rho_generators(section.n())?;
            let Some(witness) = derive_weak_symmetry_witness(&section, &generators)? else {
                let _ = writeln!(
                    out,
                    "audit rejected: no weak-symmetry witness exists for the rho generators"
                );
                return Ok(1);
            };
            match audit_extension(&extension, &section, &witness) {
                Ok(report) => {
                    let _ = writeln!(out, "{report}");
                    Ok(report.exit_code())
                }
                Err(Error::PreconditionViolated { condition }) => {
                    let _ = writeln!(out, "audit rejected: {condition}");
                    Ok(1)
                }
                Err(Error::WeakSymmetryViolated { context }) => {
                    let _ = writeln!(out, "audit rejected: {context}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Bounds { n } => {
            let facets = (BigUint::one() << n) - 2u32;
            let _ = writeln!(
                out,
                "facets={facets} nonsym≥{} sym-vars≥{} sym-total≥{}",
                face_count_lower_bound(n),
                symmetric_variable_lower_bound(n),
                combined_lower_bound(n)
            );
            Ok(0)
        }
    }
}

/// Convenience wrapper writing to the process streams.
pub fn run_cli_default(args: &[String]) -> i32 {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_cli(args, &mut out, &mut err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("permext".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bounds_line_for_n6() {
        let (code, out, _) = run(&["bounds", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "facets=62 nonsym≥10 sym-vars≥15 sym-total≥15/2\n");
    }

    #[test]
    fn bounds_is_deterministic() {
        let a = run(&["bounds", "8"]);
        let b = run(&["bounds", "8"]);
        assert_eq!(a, b);
    }

    #[test]
    fn usage_errors_exit_64() {
        let (code, _, err) = run(&["frobnicate"]);
        assert_eq!(code, 64);
        assert!(!err.is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let (code, _, err) = run(&["gen-birkhoff", "9"]);
        assert_eq!(code, 64);
        assert!(err.contains("cap"));
        let (code, out, _) = run(&["gen-birkhoff", "2", "--cap", "7"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("kind formulation"));
    }

    #[test]
    fn gen_facets_round_trips() {
        let (code, out, _) = run(&["gen-facets", "3"]);
        assert_eq!(code, 0);
        let parsed = parse_extension(&out).unwrap();
        assert_eq!(emit_extension(&parsed), out);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("gen-birkhoff"));
    }
}
