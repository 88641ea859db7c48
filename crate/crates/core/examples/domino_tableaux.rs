//! Standard domino tableaux of a shape with empty 2-core, their signed
//! count, and domino tableaux of a general poset.

use imbalance::domino::{count_p_domino, enumerate_sdt, imbalance_domino, is_tilable, max_ev, p_domino_tableaux};
use imbalance::shapes::{imbalance, Partition};
use imbalance::Poset;

fn main() -> imbalance::Result<()> {
    let lambda = Partition::new(vec![4, 2])?;
    let tableaux = enumerate_sdt(&lambda)?;
    println!("shape {lambda}: {} domino tableaux", tableaux.len());
    for t in &tableaux {
        let chain: Vec<String> = t.chain().iter().map(ToString::to_string).collect();
        println!("  ev = {}  vertical = {}  {}", t.ev(), t.vdom(), chain.join(" < "));
    }
    println!("signed count {} = I(-1) {}", imbalance_domino(&lambda)?, imbalance(&lambda));
    println!("largest ev: {:?}", max_ev(&lambda));

    // Two chains of length two side by side, with 0 < 3 linking them.
    let p = Poset::new(4, &[(0, 1), (2, 3), (0, 3)])?;
    println!("\nposet {p:?}");
    println!("tilable: {}, domino tableaux: {}", is_tilable(&p)?, count_p_domino(&p));
    for chain in p_domino_tableaux(&p) {
        let ideals: Vec<String> = chain.ideals().iter().map(|m| format!("{m:04b}")).collect();
        println!("  {}", ideals.join(" < "));
    }
    Ok(())
}
