//! Runs every acceptance criterion once, printing one PASS/FAIL line each.

mod common;

use std::time::Instant;

fn main() {
    let mut failed = 0;
    for (k, (name, check, limit)) in common::CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let out = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let out = match out {
            Ok(msg) if secs >= *limit as f64 => Err(format!("{msg}; took {secs:.2}s, limit {limit}s")),
            other => other,
        };
        match out {
            Ok(msg) => println!("PASS {:>2} {name} ({secs:.2}s): {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {msg}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", common::CRITERIA.len() - failed, common::CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
