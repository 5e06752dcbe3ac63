//! Finite fields `GF(p^e)`, polynomials over them, factorisation, and
//! extension fields used to build Singer elements.

mod ext;
mod factor;
mod field;
mod poly;

pub use ext::{minimal_polynomial, norm, ExtField};
pub use factor::{
    count_irreducibles, distinct_degree, equal_degree, factor, irreducibles, is_irreducible,
    is_primitive, square_free, IRREDUCIBLE_SIEVE_LIMIT,
};
pub use field::{field, multiplicative_generator, Elem, Field, FieldSpec, MAX_FIELD_ORDER};
pub use poly::Poly;
