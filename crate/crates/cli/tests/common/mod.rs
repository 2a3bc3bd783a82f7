#![allow(dead_code)]

use manin::gallery::scenarios;
use manin_cli::{invoke, Invocation};
use std::path::{Path, PathBuf};

pub fn run(args: &[&str]) -> Invocation {
    invoke(std::iter::once("manin").chain(args.iter().copied()))
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares `gallery NAME --format json` with its golden file; with
/// `UPDATE_GOLDEN=1` the file is rewritten instead.
pub fn check_golden(name: &str) -> Result<(), String> {
    let out = run(&["gallery", name, "--format", "json"]);
    if out.status != 0 {
        return Err(format!("{name}: exit {} {}", out.status, out.stderr));
    }
    let path = golden_dir().join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != out.stdout {
        return Err(format!("{name}: output differs from {}", path.display()));
    }
    Ok(())
}

pub fn scenario_names() -> Vec<&'static str> {
    scenarios().iter().map(|s| s.name()).collect()
}

/// Writes the gallery bundles at m = 2 and a degree-4 coend into `dir`.
pub fn fixtures(dir: &Path) {
    for name in ["yangian_eval", "finite_group", "so_quadratic"] {
        let runs = manin::gallery::run(name, Some(2)).unwrap();
        runs[0].bundle.save(&dir.join(format!("{name}.json"))).unwrap();
    }
    let coend = dir.join("coend.json");
    let out = run(&["comonoid", "coend", "--b", "antisym:2", "--max-degree", "4", "--out", coend.to_str().unwrap()]);
    assert_eq!(out.status, 0, "{}", out.stderr);
}
