//! The seminormal representation of the integral KLR algebra on `TL_n`,
//! diamonds and the recursive construction of `p`-Jones-Wenzl idempotents.

mod action;
mod basis;
mod diamond;
mod elements;
mod operator;
mod recursive;
mod relations;

pub use action::{CoeffSystem, KlrContext};
pub use basis::{FBasis, FVector};
pub use diamond::{
    cab_agreement, diamond_case, diamond_closed_form, diamond_formula_check, diamond_tl_check, diamond_word, iota_cab,
    iota_image_rank, iota_on_idempotents, main_class, small_jm_check, x_factor, DiamondCase, DiamondFamily,
};
pub use elements::{
    f_basis_element, f_norm, f_norm_by_square, left_operator_of, operator_to_element, right_operator_of,
};
pub use operator::{Column, SeminormalOperator, Side};
pub use recursive::{
    final_theorem_check, lifted_class_idempotents, p_jones_wenzl_direct_operator, p_jones_wenzl_recursive,
    p_jones_wenzl_recursive_element,
};
pub use relations::{klr_relations_check, klr_relations_check_oriented, plus_p_cases, plus_p_report, Orientation};
