use std::fs;

use roughmat::generate::partition_with_blocks;
use roughmat::{
    induced, verify_all, Caps, ElementId, InducedMatroid, InstanceDocument, InstanceError, Minor,
    Partition, SetFamily, Subset,
};
use serde_json::json;
use thiserror::Error;

use crate::render;
use crate::{Approximation, Cli, Command, ContractMode, FamilyArg, SideArg};

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            status: 0,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("{0}")]
    Cap(String),
    #[error("internal mismatch: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) | CliError::Instance(_) | CliError::UnknownElement(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<roughmat::Error> for CliError {
    fn from(e: roughmat::Error) -> Self {
        match e {
            roughmat::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            roughmat::Error::Internal(m) => CliError::Internal(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Gen { n, blocks, seed } = &cli.command {
        let p = partition_with_blocks(*n, *blocks, *seed)?;
        return Ok(Outcome::ok(InstanceDocument::from_partition(&p).to_text()));
    }

    let path = cli
        .instance
        .as_ref()
        .ok_or_else(|| CliError::Input("missing --instance <PATH>".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let p = InstanceDocument::parse(&text)?.to_partition()?;
    let caps = cli.cap.map_or_else(Caps::default, Caps::uniform);

    match &cli.command {
        Command::Approx { which, elements } => {
            let x = resolve(&p, elements)?;
            let result = match which {
                Approximation::Lower => p.lower_approximation(&x)?,
                Approximation::Upper => p.upper_approximation(&x)?,
            };
            Ok(Outcome::ok(if cli.json {
                format!("{}\n", json!(render::names(p.universe(), &result)))
            } else {
                format!("{}\n", render::names(p.universe(), &result).join(" "))
            }))
        }
        Command::Matroid { side, family } => {
            let primal = InducedMatroid::new(p.clone())?;
            let m = match side {
                SideArg::Primal => primal.matroid().clone(),
                SideArg::Dual => primal.dual()?.matroid().clone(),
            };
            let listing = match family {
                FamilyArg::Independents => m.independents().clone(),
                FamilyArg::Bases => m.bases()?,
                FamilyArg::Circuits => m.circuits(),
            };
            Ok(Outcome::ok(render_family(&p, &listing, cli.json)))
        }
        Command::Rank { side, elements } => {
            let x = resolve(&p, elements)?;
            let primal = InducedMatroid::new(p.clone())?;
            let r = match side {
                SideArg::Primal => primal.matroid().rank(&x)?,
                SideArg::Dual => {
                    let r = primal.dual()?.matroid().rank(&x)?;
                    let closed = induced::dual_rank_closed_form(&p, &x)?;
                    if r != closed {
                        return Err(CliError::Internal(format!(
                            "engine rank {r} but {closed} blocks meet the set"
                        )));
                    }
                    r
                }
            };
            Ok(Outcome::ok(format!("{r}\n")))
        }
        Command::Contract {
            element,
            mode,
            family,
        } => {
            let x = lookup(&p, element)?;
            let dual = InducedMatroid::new(p.clone())?.dual()?;
            let by = match mode {
                ContractMode::Point => Subset::singleton(p.size(), x)?,
                ContractMode::Class => p.equivalence_class(x)?,
            };
            let minor: Minor = dual.matroid().contraction(&by)?;
            let listing = match family {
                FamilyArg::Independents => minor.independents_in_parent(),
                FamilyArg::Bases => minor.bases_in_parent()?,
                FamilyArg::Circuits => minor.circuits_in_parent(),
            };
            Ok(Outcome::ok(render_family(&p, &listing, cli.json)))
        }
        Command::Verify => {
            let report = verify_all(&p, &caps)?;
            let text = render::report_text(p.universe(), &report);
            let (stdout, stderr) = if cli.json {
                (
                    format!("{}\n", render::report_json(p.universe(), &report)),
                    text,
                )
            } else {
                (text, String::new())
            };
            Ok(Outcome {
                stdout,
                stderr,
                status: if report.passed() { 0 } else { 1 },
            })
        }
        Command::Gen { .. } => unreachable!("handled above"),
    }
}

fn lookup(p: &Partition, name: &str) -> Result<ElementId, CliError> {
    p.universe()
        .lookup(name)
        .ok_or_else(|| CliError::UnknownElement(name.to_owned()))
}

fn resolve(p: &Partition, names: &[String]) -> Result<Subset, CliError> {
    let ids = names
        .iter()
        .map(|n| lookup(p, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subset::from_elements(p.size(), ids)?)
}

fn render_family(p: &Partition, family: &SetFamily, json: bool) -> String {
    if json {
        let sets: Vec<Vec<String>> = family
            .iter()
            .map(|s| render::names(p.universe(), s))
            .collect();
        format!("{}\n", json!(sets))
    } else {
        family
            .iter()
            .map(|s| format!("{}\n", p.universe().format(s)))
            .collect()
    }
}
