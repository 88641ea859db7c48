//! Promotion and evacuation on the linear extensions of a poset, and the
//! parity classes they induce.

use imbalance::poset::{natural_labeling, perm_of};
use imbalance::promotion::{
    evac_parity, evacuate, gamma, is_consistent, promote, promotion_chain, promotion_parity_class,
};
use imbalance::shapes::{shape_poset, Partition};

fn main() -> imbalance::Result<()> {
    let lambda = Partition::new(vec![3, 2])?;
    let (p, w) = shape_poset(&lambda.clone().into())?;
    println!("shape {lambda}: {} elements", p.len());

    for f in p.linear_extensions() {
        let pr = promote(&p, &f);
        let ev = evacuate(&p, &f);
        println!(
            "f = {:?}  sign {:+}  chain {:?}  pr = {:?}  evac = {:?}",
            f.values(),
            perm_of(&f, &w).sign(),
            promotion_chain(&p, &f).elements,
            pr.values(),
            ev.values()
        );
    }

    println!("promotion parity class: {:?}", promotion_parity_class(&p));
    println!("consistent: {}, gamma = {}", is_consistent(&p), gamma(&p));
    if is_consistent(&p) {
        println!("evacuation parity: {:?}", evac_parity(&p)?);
    }

    let chain = imbalance::Poset::chain(4);
    let f = chain.linear_extensions().next().expect("a chain has one extension");
    let omega = natural_labeling(&chain);
    println!("chain of 4: evac fixes the extension: {}", evacuate(&chain, &f) == f);
    println!("chain of 4: sign {:+}", perm_of(&f, &omega).sign());
    Ok(())
}
