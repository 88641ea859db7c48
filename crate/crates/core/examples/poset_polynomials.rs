//! Inversion and major-index generating functions of a small poset read
//! from the text format, evaluated at q = -1.

use imbalance::poset::{extension_stats, is_sign_balanced, natural_labeling, DEFAULT_CAP};
use imbalance::Poset;

const ZIGZAG: &str = "\
# a fence 0 < 1 > 2 < 3 > 4
n 5
0 1
2 1
2 3
4 3
";

fn main() -> imbalance::Result<()> {
    let file = Poset::parse_text(ZIGZAG)?;
    let p = file.poset;
    let omega = file.omega.unwrap_or_else(|| natural_labeling(&p));

    let stats = extension_stats(&p, &omega, DEFAULT_CAP)?;
    println!("linear extensions: {}", stats.count);
    println!("I(q) = {}", stats.inv);
    println!("W(q) = {}", stats.maj);
    println!("I(-1) = {}, W(-1) = {}", stats.inv.at_minus_one(), stats.maj.at_minus_one());
    println!("sign-balanced: {}", is_sign_balanced(&p)?);

    for f in p.linear_extensions().take(4) {
        println!("  extension {:?}", f.order());
    }
    Ok(())
}
