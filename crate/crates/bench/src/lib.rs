//! Fixtures shared by the benchmarks.

use quiverlab::{CartanDatum, KlrAlgebra, OrientedQuiver};

/// The standard orientation of a Dynkin type such as "E6".
pub fn standard(label: &str) -> OrientedQuiver {
    OrientedQuiver::standard(CartanDatum::parse(label).expect("known type"))
}

/// The quiver Hecke algebra of `beta` over the standard orientation of `label`.
pub fn algebra(label: &str, beta: &[i64]) -> KlrAlgebra {
    KlrAlgebra::new(&standard(label), beta).expect("valid dimension vector")
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        assert_eq!(super::standard("E6").rank(), 6);
        assert_eq!(super::algebra("A2", &[1, 1]).beta(), &[1, 1]);
    }
}
