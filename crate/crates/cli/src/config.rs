//! Flat `key=value` config files. Each key names a long flag of the
//! subcommand; the file's values are placed before the command-line flags so
//! that flags given explicitly win.

use std::collections::BTreeSet;
use std::path::Path;

use clap::{ArgAction, ArgMatches, Command};

use crate::Failure;

pub fn load(path: &Path, cmd: &Command) -> Result<Vec<String>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    parse(&text, cmd).map_err(|m| Failure::param(format!("{}: {m}", path.display())))
}

pub fn parse(text: &str, cmd: &Command) -> Result<Vec<String>, String> {
    let mut args = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .map(|(k, v)| (k.trim().replace('_', "-"), v.trim()))
            .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
        let arg = cmd
            .get_arguments()
            .find(|a| a.get_long() == Some(key.as_str()) && key != "config")
            .ok_or_else(|| format!("line {}: unknown key {key:?} for `{}`", i + 1, cmd.get_name()))?;
        if !seen.insert(key.clone()) {
            return Err(format!("line {}: key {key:?} given twice", i + 1));
        }
        match arg.get_action() {
            ArgAction::SetTrue => match value {
                "true" | "yes" | "1" => args.push(format!("--{key}")),
                "false" | "no" | "0" => {}
                _ => return Err(format!("line {}: {key} expects true or false", i + 1)),
            },
            _ => {
                args.push(format!("--{key}"));
                args.push(value.to_string());
            }
        }
    }
    Ok(args)
}

/// Every argument of the subcommand with its resolved value, defaults
/// included, one `key=value` per line.
pub fn echo(cmd: &Command, m: &ArgMatches) -> String {
    let mut out = String::new();
    for arg in cmd.get_arguments() {
        let id = arg.get_id().as_str();
        if matches!(id, "help" | "version" | "config") {
            continue;
        }
        let Some(long) = arg.get_long() else { continue };
        let value = match arg.get_action() {
            ArgAction::SetTrue => m.get_flag(id).to_string(),
            _ => match m.get_raw(id) {
                Some(vals) => vals.map(|v| v.to_string_lossy()).collect::<Vec<_>>().join(","),
                None => continue,
            },
        };
        out.push_str(&format!("# {long}={value}\n"));
    }
    out
}
