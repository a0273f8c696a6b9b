//! Input, output and error plumbing.

use std::io::Read;
use std::path::Path;

use serde::de::DeserializeOwned;
use thiserror::Error;

use crate::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] modbranch::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Domain(modbranch::Error::Parse(_)) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// The positional argument, else the `--in` file, else stdin.
pub fn read_input(cli: &Cli, arg: &Option<String>) -> CliResult<String> {
    if let Some(s) = arg {
        return Ok(s.clone());
    }
    if let Some(path) = &cli.input {
        return Ok(std::fs::read_to_string(path)?);
    }
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

/// Parses JSON, reporting the path of the offending field.
pub fn parse_json<T: DeserializeOwned>(s: &str) -> CliResult<T> {
    let de = &mut serde_json::Deserializer::from_str(s);
    serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        if path == "." {
            usage(format!("invalid JSON: {}", err.inner()))
        } else {
            usage(format!("invalid JSON at field `{path}`: {}", err.inner()))
        }
    })
}

pub fn write_output(cli: &Cli, body: &str) -> CliResult<()> {
    let mut body = body.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => write_file(path, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, body: &str) -> CliResult<()> {
    std::fs::write(path, body)?;
    Ok(())
}

pub fn to_json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("output serializes")
}
