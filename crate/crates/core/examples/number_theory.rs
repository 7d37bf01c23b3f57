//! Factorization, divisors, totients and family tags.
//!
//! `cargo run --example number_theory -- 360`

use zdpoly::numtheory::{classify_family, factorize, gcd, proper_divisors, totient};

fn main() -> zdpoly::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .map_or(360, |a| a.parse().expect("n must be an integer"));
    let f = factorize(n)?;
    let factors: Vec<String> = f
        .factors()
        .iter()
        .map(|pp| format!("{}^{}", pp.prime, pp.exponent))
        .collect();
    println!("{n} = {}", factors.join(" * "));
    println!("phi({n}) = {}", totient(n)?);
    println!("family: {}", classify_family(&f));
    for d in proper_divisors(n)? {
        println!(
            "  d = {d:<5} |V_d| = phi(n/d) = {:<5} gcd(d, n/d) = {}",
            totient(n / d)?,
            gcd(d, n / d)?
        );
    }
    Ok(())
}
