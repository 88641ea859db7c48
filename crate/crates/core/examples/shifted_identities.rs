//! Closed forms for imbalances of rectangles, doubled shapes, hooks and
//! three-row shapes in terms of shifted tableau counts.

use imbalance::identities::{
    eg_check, g_shifted, hook_survivors, hooksum_identity, kcor_a_sum, kcor_b_sum, rectangle_imbalance,
    rectangle_shift_shape, survivor_formula, EgFamily,
};
use imbalance::shapes::Partition;

fn main() -> imbalance::Result<()> {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        let r = rectangle_imbalance(m, n);
        println!(
            "{m}x{n}: I(-1) = {:>4}, |shifted count of {:?}| = {:>4}, pass {}",
            r.actual,
            rectangle_shift_shape(m, n),
            r.predicted_abs,
            r.pass()
        );
    }

    println!("\ng(3,1) = {}, g(1,3) = {}, g(2,2) = {}", g_shifted(&[3, 1]), g_shifted(&[1, 3]), g_shifted(&[2, 2]));
    println!("sum over doubled shapes, m = 1..5: {:?}", (1..=5).map(kcor_a_sum).collect::<Vec<_>>());
    println!("signed squares, m = 1..5: {:?}", (1..=5).map(kcor_b_sum).collect::<Vec<_>>());

    for n in 0..=6 {
        println!("hook sum n = {n}: {}", hooksum_identity(n));
    }
    let hook = Partition::hook(6, 2)?;
    println!("survivors of {hook}: {:?}", hook_survivors(&hook)?);
    println!("formula: {}", survivor_formula(6, 2));

    for family in EgFamily::ALL {
        let instances = family.instances(10);
        let passing = instances.iter().filter(|p| eg_check(family, p).map(|c| c.pass()).unwrap_or(false)).count();
        println!("{family}: {passing}/{} instances up to size 10 agree", instances.len());
    }
    Ok(())
}
