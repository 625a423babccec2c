//! Flat `key = value` configuration files. Each key is a long flag name; the file's
//! flags are spliced in ahead of the command line, which therefore wins.

use std::ffi::OsString;

use crate::error::CliError;

/// Flags accepted before the subcommand name.
const GLOBAL_KEYS: [&str; 3] = ["format", "workers", "out"];

pub fn parse(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", n + 1)))?;
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        if key == "config" {
            return Err(CliError::Usage("config files cannot include other config files".into()));
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

/// `args` with the file's flags inserted: global ones right after the program name,
/// the rest right after the subcommand token.
pub fn splice(args: &[OsString], entries: &[(String, String)], subcommand_at: Option<usize>) -> Vec<OsString> {
    let flag = |(k, v): &(String, String)| [OsString::from(format!("--{k}")), OsString::from(v)];
    let (global, local): (Vec<_>, Vec<_>) = entries.iter().partition(|(k, _)| GLOBAL_KEYS.contains(&k.as_str()));
    let mut out: Vec<OsString> = args[..1].to_vec();
    out.extend(global.into_iter().flat_map(flag));
    match subcommand_at {
        Some(i) => {
            out.extend(args[1..=i].iter().cloned());
            out.extend(local.into_iter().flat_map(flag));
            out.extend(args[i + 1..].iter().cloned());
        }
        None => out.extend(args[1..].iter().cloned()),
    }
    out
}
