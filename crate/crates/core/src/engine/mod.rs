//! Decision procedures: comparison morphisms, splittings and verdicts.

mod chi;
mod split;
mod verdict;

pub use chi::{
    chi0, chi1, chi2, chi_bar, coalgebra_chi, coalgebra_chi0, galois_map, is_faithfully_galois,
    is_galois,
};
pub use split::{
    conservativity_check, progenerator_checks, separability, separability_ranks,
    verify_separability, ProgeneratorReport,
};
pub use verdict::{
    azumaya_evaluation_test, evaluation_map, is_azumaya_coalgebra, is_left_azumaya,
    is_right_azumaya, is_separable_azumaya, tensor_separability_descent, CoalgebraVerdict, Descent,
    SeparableAzumaya, Verdict,
};
