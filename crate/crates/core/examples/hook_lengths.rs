//! Hook-length formulas for forests and shapes, and equality of the
//! inversion and major-index polynomials under a postorder labeling.

use imbalance::balance::{bw_check, cell_hooks, forest_hooks, hlsb_imbalance, hook_product_poly, postorder_labeling};
use imbalance::generate::{forest_counts, forests};
use imbalance::poset::{extension_stats, maj_poly, natural_labeling, DEFAULT_CAP};
use imbalance::shapes::{shape_poset, Partition};

fn main() -> imbalance::Result<()> {
    println!("forests by size: {:?}", forest_counts(7));

    for f in forests(4) {
        let hooks = forest_hooks(&f)?;
        let w = postorder_labeling(&f)?;
        let stats = extension_stats(&f, &w, DEFAULT_CAP)?;
        println!(
            "{f:?}: hooks {hooks:?}, product form {}, I(q) {}, I = W: {}",
            hook_product_poly(f.len(), &hooks)?,
            stats.inv,
            bw_check(&f)?
        );
    }

    let lambda = Partition::new(vec![3, 3, 1])?;
    let hooks = cell_hooks(&lambda);
    println!("\nshape {lambda}: hooks {hooks:?}");
    let dual = shape_poset(&lambda.clone().into())?.0.dual();
    println!("W(-1) of the dual shape from even hooks: {}", hlsb_imbalance(lambda.size(), &hooks)?);
    println!("W(-1) of the dual shape by enumeration: {}", maj_poly(&dual, &natural_labeling(&dual))?.at_minus_one());
    Ok(())
}
