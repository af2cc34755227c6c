//! Shared inputs for the benchmarks.

use postlie::catalog::{catalog_operators, make_dim3, witnesses, Witness};
use postlie::{int, Class3Tag, LieAlgebra, RBOperator};

/// A few catalog operators of different shapes on `sl2 + sl2`.
pub fn operators() -> Vec<(String, RBOperator)> {
    const PICK: [&str; 4] = ["type4-split", "type5-triangular", "type8b-jordan", "type1-double-negative"];
    catalog_operators()
        .into_iter()
        .filter(|o| PICK.contains(&o.name.as_str()))
        .map(|o| (o.name, o.operator))
        .collect()
}

pub fn witness(name: &str) -> Witness {
    witnesses()
        .into_iter()
        .find(|w| w.name == name)
        .unwrap_or_else(|| panic!("no witness {name}"))
}

pub fn r3_two() -> LieAlgebra {
    make_dim3(Class3Tag::R3Lambda, Some(&int(2))).expect("valid parameter")
}
