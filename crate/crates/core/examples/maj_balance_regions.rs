//! Maj-imbalance of posets against their domino tableaux, and of regions
//! of the plane under the Schur labeling.

use imbalance::balance::{dcmb_check, majdom_check, slabps_check};
use imbalance::generate::random_posets;
use imbalance::region::{regions_in_frame, Region};

const L_SHAPE: &str = "\
0 0
0 1
1 0
1 1
2 0
2 1
";

fn main() -> imbalance::Result<()> {
    for p in random_posets(6, 6, 7) {
        let (w, tableaux) = majdom_check(&p)?;
        println!("{p:?}: W(-1) = {w}, domino tableaux = {tableaux}, dual check {}", dcmb_check(&p)?);
    }

    let region = Region::parse_text(L_SHAPE)?;
    let out = slabps_check(&region)?;
    println!("\n3x2 block: {} tilings, sign {:?}, W(-1) = {}", region.tilings().len(), out.sign, out.w_at_minus_one);
    println!("signed W(-1) = {}, domino tableaux = {}, pass {}", out.lhs, out.tableaux, out.pass);

    let regions = regions_in_frame(3, 3, 6);
    let even: Vec<&Region> = regions.iter().filter(|r| r.len() % 2 == 0 && !r.is_empty()).collect();
    let mut failures = 0;
    for r in &even {
        if !slabps_check(r)?.pass {
            failures += 1;
        }
    }
    println!("even regions in a 3x3 frame: {}, failures: {failures}", even.len());
    Ok(())
}
