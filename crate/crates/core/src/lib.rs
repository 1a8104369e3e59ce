//! Solving and certifying `alpha ∘ y ∘ alpha⁻¹ = y²` in the symmetric group.
//!
//! ```
//! use permeq::{enumerate_pruned, parse_cycles, Guards};
//!
//! let alpha = parse_cycles("(1,2,3,4,5,6)", 6).unwrap();
//! let set = enumerate_pruned(&alpha, &Guards::default()).unwrap();
//! assert_eq!(set.len(), 3);
//! ```

pub mod arith;
pub mod certifier;
pub mod cli;
pub mod constructor;
pub mod cycle_analysis;
pub mod enumerator;
pub mod error;
pub mod perm;
pub mod survey;

pub use certifier::{
    certify_a1, certify_a1_type, certify_a2, certify_a2_type, certify_a3_cyclic, certify_all,
    proves_only_trivial, Certificate, Failure, Theorem, Verdict,
};
pub use constructor::{
    b1_construct, b2_all_solutions, b2_parameters, b2_solution, conjugacy_transporter,
    power_solutions, transport_solution, B1Instance, B2Params, TransportWitness,
};
pub use cycle_analysis::{
    cycle_decomposition, cycle_type, d_range, d_range_of_type, fixed_set_decomposition,
    induced_index_permutation, same_type, CycleType, DRange, InducedPermutation,
};
pub use enumerator::{
    brute_force_square_roots, candidate_types, enumerate_naive, enumerate_pruned, solve_conjugate,
    solve_star, square_root_exists, square_roots_all, Equation, Guards, Method, SearchStats,
    SolutionSet, Strategy,
};
pub use error::{Error, Result};
pub use perm::{format_cycles, parse_cycles, parse_cycles_inferred, Cycle, Permutation};
pub use survey::{partitions, survey, write_survey, SurveyFormat, SurveyRow};
