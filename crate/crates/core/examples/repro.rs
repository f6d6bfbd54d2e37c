//! Runs the reproduction suite and prints one line per item.

use bei::repro::{repro_suite, Scope};

fn main() {
    let full = std::env::args().any(|a| a == "--full");
    let report = repro_suite(if full { Scope::Full } else { Scope::Fast }, 0);
    for item in &report.items {
        let tag = if item.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2} {} ({} ms): {}", item.id, item.anchor, item.elapsed_ms, item.computed);
    }
    println!("all pass: {}", report.all_pass());
}
