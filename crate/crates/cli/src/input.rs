use std::io::Read;
use std::path::Path;

use ragraph::graphs::{graph6_decode, Graph};

use crate::CliError;

/// Text of a file, of stdin for `-` or `None`, or the argument itself when
/// it names no file.
pub fn read_source(arg: Option<&str>) -> Result<String, CliError> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(a) if Path::new(a).is_file() => std::fs::read_to_string(a)
            .map_err(|e| CliError::Input(format!("reading {a}: {e}"))),
        Some(a) => Ok(a.to_string()),
    }
}

/// A single graph from a graph6 argument, or from stdin for `-`.
pub fn graph_arg(arg: &str) -> Result<Graph, CliError> {
    let text = if arg == "-" { read_source(None)? } else { arg.to_string() };
    let line = text.trim();
    graph6_decode(line).map_err(|e| CliError::Input(format!("{line:?}: {e}")))
}

/// Comma separated unsigned integers.
pub fn usize_list(arg: &str) -> Result<Vec<usize>, CliError> {
    arg.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| CliError::Input(format!("{t:?} in {arg:?}: {e}")))
        })
        .collect()
}
