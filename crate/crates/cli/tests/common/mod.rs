//! Shared by the golden and acceptance targets.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// `(name, commands)` for each case line.
pub fn cases() -> Vec<(String, Vec<String>)> {
    let text = fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, cmds) = l.split_once(':').expect("`name: command`");
            let cmds = cmds.split("&&").map(|c| c.trim().to_string()).collect();
            (name.trim().to_string(), cmds)
        })
        .collect()
}

/// Runs one case and returns the transcript: each command, its stdout and
/// its exit code.
pub fn transcript(cmds: &[String]) -> String {
    let scratch = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let path = entry.unwrap().path();
        fs::copy(&path, scratch.path().join(path.file_name().unwrap())).unwrap();
    }
    let mut out = String::new();
    for cmd in cmds {
        let run = Command::new(env!("CARGO_BIN_EXE_dsb"))
            .args(cmd.split_whitespace())
            .current_dir(scratch.path())
            .output()
            .unwrap();
        out.push_str(&format!("$ dsb {cmd}\n"));
        out.push_str(&String::from_utf8(run.stdout).unwrap());
        out.push_str(&format!("exit={}\n", run.status.code().unwrap_or(-1)));
    }
    out
}
