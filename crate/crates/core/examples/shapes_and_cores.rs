//! Partition statistics: 2-cores, vertical-domino counts, the inversion
//! polynomial over standard Young tableaux and its value at q = -1.

use imbalance::shapes::{
    a_lambda_quadruple, count_series, d_stat, imbalance, inv_poly_shape, partitions, r_stat, syt_count, two_core,
    v_stat, SeriesKind,
};

fn main() -> imbalance::Result<()> {
    println!("{:<12} {:>5} {:>8} {:>3} {:>3} {:>3} {:>5}", "shape", "f", "core", "v", "d", "r", "I(-1)");
    for lambda in partitions(6) {
        let core = two_core(&lambda);
        let r = r_stat(&lambda).map(|r| r.to_string()).unwrap_or_else(|_| "-".into());
        println!(
            "{:<12} {:>5} {:>8} {:>3} {:>3} {:>3} {:>5}",
            lambda.to_string(),
            syt_count(&lambda),
            core.to_string(),
            v_stat(&lambda),
            d_stat(&lambda),
            r,
            imbalance(&lambda)
        );
    }

    let lambda = imbalance::shapes::Partition::new(vec![4, 2, 1])?;
    println!("\nI_(4,2,1)(q) = {}", inv_poly_shape(&lambda));
    println!("parity quadruple: {:?}", a_lambda_quadruple(&lambda).as_array());

    for kind in [SeriesKind::P, SeriesKind::CoreLe1, SeriesKind::TN, SeriesKind::GN] {
        println!("{kind:?}: {:?}", count_series(kind, 10)?);
    }
    Ok(())
}
