//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};

use burnside_cli::verify::{self, Suite};

fn run_binary_twice() -> Result<(), String> {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_burnside"))
            .args(["analyze", "2I", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit status {}", out.status));
        }
        Ok(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    if a == b {
        Ok(())
    } else {
        Err("separate processes produced different bytes".into())
    }
}

fn main() -> ExitCode {
    let mut suite = Suite::new();
    let (c1, checks) = verify::criterion_1(&mut suite);
    let mut c9 = verify::criterion_9();
    if let Err(e) = run_binary_twice() {
        c9.passed = false;
        c9.failures.push(e);
    }
    let results = vec![
        c1,
        verify::criterion_2(&mut suite),
        verify::criterion_3(&mut suite),
        verify::criterion_4(&mut suite),
        verify::criterion_5(&mut suite),
        verify::criterion_6(&mut suite),
        verify::criterion_7(&mut suite),
        verify::criterion_8(&mut suite),
        c9,
        verify::criterion_10(&mut suite),
    ];
    print!("{}", verify::matrix_text(&checks));
    println!();
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("\nacceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
