//! Quantum integers and the loop value.

use super::domain::Domain;
use super::laurent::Laurent;
use super::qpoly::Q;
use num_traits::One;

/// `[n] = s^{2(n-1)} + s^{2(n-3)} + ... + s^{-2(n-1)}`, with `[-n] = -[n]`.
pub fn quantum_integer(n: i64) -> Laurent {
    if n == 0 {
        return Laurent::zero();
    }
    let m = n.abs();
    let l = Laurent::from_terms((0..m).map(|j| (2 * (m - 1) - 4 * j, Q::one())));
    if n < 0 {
        -l
    } else {
        l
    }
}

/// `delta = -s^2 - s^-2 = -[2]`
pub fn delta() -> Laurent {
    -quantum_integer(2)
}

pub fn quantum_integer_in<D: Domain>(d: &D, n: i64) -> D::F {
    d.embed(&quantum_integer(n))
}
