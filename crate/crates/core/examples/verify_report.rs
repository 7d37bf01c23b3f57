//! Three-way verification report, as text and as JSON.
//!
//! `cargo run --example verify_report -- 27 total`

use zdpoly::domcount::DominationKind;
use zdpoly::verify::{run_verification, VerifyOptions};

fn main() -> zdpoly::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args
        .next()
        .map_or(27, |a| a.parse().expect("n must be an integer"));
    let kind = match args.next().as_deref() {
        Some("total") => DominationKind::Total,
        _ => DominationKind::Ordinary,
    };
    let report = run_verification(n, kind, &VerifyOptions::default())?;
    println!("{report}\n");
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}
