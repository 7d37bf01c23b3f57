//! Exact polynomial arithmetic with arbitrary-precision coefficients.

use zdpoly::Polynomial;

fn main() {
    let x = Polynomial::x_pow(1);
    let one_plus_x = Polynomial::binomial_expand(1);
    let p = &(&one_plus_x * &one_plus_x) - &Polynomial::one();
    println!("(1+x)^2 - 1 = {p}");
    println!("x * p       = {}", &x * &p);
    println!("p(1)        = {}", p.evaluate_at(1));

    let big = Polynomial::binomial_expand(200);
    println!("largest coefficient of (1+x)^200 = {}", big.coeff(100));

    println!(
        "as JSON: {}",
        serde_json::to_string(&p).expect("serializes")
    );
    let back: Polynomial = serde_json::from_str(r#"["0","2","1"]"#).expect("parses");
    assert_eq!(back, p);
}
