//! Exact coefficient arithmetic.

mod cyclo;
mod laurent;
mod ratfunc;
mod ring;
mod zpoly;

pub use cyclo::{cyclotomic_poly, Cyclo, CycloField};
pub use laurent::LaurentPoly;
pub use ratfunc::RingElem;
pub use ring::{fugacity, pbar, qfact, qint, specialize, specialize_in, Generic, Pbar, QParam, Ring, RootOfUnity};
pub use zpoly::ZPoly;
