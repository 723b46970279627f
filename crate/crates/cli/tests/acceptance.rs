//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::process::{Command, ExitCode};

use rprime_core::claims::run_claims;
use rprime_core::Exec;

fn certificate_json(threads: usize, dir: &std::path::Path) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_rprime"))
        .args([
            "search",
            "rprime",
            "--n",
            "5",
            "--json",
            "--threads",
            &threads.to_string(),
            "--cache",
        ])
        .arg(dir.join(format!("cache-{threads}.jsonl")))
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let record: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    serde_json::to_string(&record["certificate"]).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let mut failures = 0;
    for r in run_claims(None, Exec::default()) {
        let status = if r.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!r.passed);
        println!(
            "{status} {:<14} {} | expected {} | computed {} | {:.1} ms (limit {} ms)",
            r.id, r.claim, r.expected, r.computed, r.elapsed_ms, r.limit_ms
        );
    }

    let dir = tempfile::tempdir().expect("temp dir");
    let outcome = match (certificate_json(1, dir.path()), certificate_json(8, dir.path())) {
        (Ok(a), Ok(b)) if a == b => Ok(a.len()),
        (Ok(_), Ok(_)) => Err("certificates differ".to_string()),
        (Err(e), _) | (_, Err(e)) => Err(e),
    };
    match outcome {
        Ok(len) => {
            println!("PASS determinism    search rprime --n 5 certificate identical at 1 and 8 threads ({len} bytes)")
        }
        Err(e) => {
            failures += 1;
            println!("FAIL determinism    search rprime --n 5 at 1 and 8 threads: {e}");
        }
    }

    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
