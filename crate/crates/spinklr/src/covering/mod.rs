//! The free covering half-algebra: words in the generators, the twisted
//! coproduct, the bilinear form and its radical, divided powers and the
//! quantum Serre elements.

mod algebra;
mod form;
mod serre;

pub use algebra::{
    coproduct, divided_power, divided_word, generator_norm, word, word_pairing, word_parity, word_weight,
    FreeElement, TensorElement, Word,
};
pub use form::{rank_at, Form};
pub use serre::{
    divided_coproduct_closed, divided_norm_factorial, divided_norm_product, divided_norm_recursive,
    lu12_closed_form, rtheta_check, serre_element, serre_parity, Lu12Sign,
};
