//! Explicit matrix models of `SL2(F5)`, the lifted groups `2^r_-PGL2(F5)`
//! over `F25`, their conjugacy classes, permutation actions and the
//! subgroup chain used to read Frobenius classes off a degree-48 polynomial.

mod group;
mod lifted;
mod mat2;
mod s5;

pub use group::{
    class_cycletype_table, coset_action, p1_action, ClassCycleTable, ConjClass, GroupData, PermAction, Subgroup,
    GROUP_ORDER_CAP,
};
pub use lifted::{
    class_labels, collisions_outside_inverse_pairs, det_sgn_generator, det_sign, expected_table1, find_h80,
    format_pairs, index2_kernels, inertia_151, lifted_group, normal_order10_subgroups, quotient_fingerprint, scalar,
    sl2_f5, sl2_generators, subgroup_chain, surjections_to_c2, table1, unipotent_subgroup, verify_inertia_matrices,
    verify_structure, verify_table1, verify_table2, w_matrix, Index2Kernels, LiftedGroup, QuadraticCharacter,
    SubgroupChain, Table1Row, TrDet,
};
pub use mat2::{char_poly_string, Mat2, MatF25, ZETA};
pub use s5::{projective_data, s5_class_of, ProjectiveData, S5Class};
