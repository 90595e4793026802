//! Modules and vectors shared by the benchmark targets.

use whittaker_core::lattice::{chi_for_whittaker, pi_module, PiModule};
use whittaker_core::whittaker::{critical_quotient, universal, CriticalQuotient, UniversalWhittaker};
use whittaker_core::{Convention, LaurentData, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Central character `1/z^2 + 2/z` used by the critical-level fixtures.
pub fn sample_c() -> LaurentData {
    LaurentData::new(Convention::Weight2, [(0, q(1)), (-1, q(2))])
}

pub fn noncritical() -> UniversalWhittaker {
    universal(q(2), q(3), q(1))
}

pub fn critical() -> UniversalWhittaker {
    universal(q(2), q(3), q(-2))
}

pub fn quotient() -> CriticalQuotient {
    critical_quotient(q(2), q(3), &sample_c()).expect("λ ≠ 0")
}

pub fn lattice() -> PiModule {
    pi_module(q(2), &chi_for_whittaker(&q(2), &q(3), &sample_c())).expect("λ ≠ 0")
}
