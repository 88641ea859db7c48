//! Up and down operators on partitions weighted by q, their commutator,
//! and the expansion of powers of the up operator.

use imbalance::identities::{du_commutator_check, op_a, op_d, op_u, u_power_expansion, PartitionVector, QMode};
use imbalance::shapes::Partition;

fn main() -> imbalance::Result<()> {
    let lambda = Partition::new(vec![2, 1])?;
    let v = PartitionVector::basis(lambda.clone());
    for mode in [QMode::Symbolic, QMode::AtMinusOne] {
        println!("{mode:?}");
        println!("  U s_{lambda} = {}", op_u(&v, mode));
        println!("  D s_{lambda} = {}", op_d(&v, mode));
    }

    let mode = QMode::AtMinusOne;
    let du = op_d(&op_u(&v, mode), mode);
    let ud = op_u(&op_d(&v, mode), mode);
    println!("at q = -1: (DU + UD) s_{lambda} = {}", &du + &ud);
    println!("at q = -1: A s_{lambda} = {}", op_a(&v));

    println!("\nat q = -1 the commutator identity holds through size 5: {}", du_commutator_check(5));
    println!("U^4 1 = {}", u_power_expansion(4));
    Ok(())
}
