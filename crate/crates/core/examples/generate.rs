//! Seeded random instances and the Multiway Cut gadget.

use mwns::generate::{from_multiway_cut, random_instance, RandomParams};
use mwns::io::format_instance;
use mwns::solver::solve;

fn main() {
    let params = RandomParams { n: 8, p: 0.4, terminals: 3, k: 1, seed: 42, independent: true };
    let inst = random_instance(&params);
    assert_eq!(inst, random_instance(&params));
    print!("{}", format_instance(&inst));
    println!("# solve: {:?}", solve(&inst).unwrap());

    let derived = from_multiway_cut(&inst);
    print!("{}", format_instance(&derived));
    println!("# solve: {:?}", solve(&derived).unwrap());
}
