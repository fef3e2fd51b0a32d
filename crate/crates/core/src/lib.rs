//! MV-algebras viewed as idempotent semirings.
//!
//! The crate is organised bottom-up:
//!
//! * [`mv`] finite MV-algebras (chains and their products) held as explicit
//!   operation tables, plus the standard algebra on exact rationals in `[0, 1]`;
//!   laws, ideals, spectra, quotients and the Boolean center.
//! * [`logic`] Łukasiewicz propositional formulas, the translation into MV terms
//!   and validity over finite chains.
//! * [`semiring`] finite semiring tables, the two semiring reducts of an
//!   MV-algebra, MV-semiring recognition, semiring spectra and the min-plus
//!   semifield with its truncation.
//! * [`semimodule`] free semimodules, matrices, projectivity, strong
//!   semimodules, tensor products and restriction of scalars.
//! * [`ktheory`] projective classes, direct sums and the Grothendieck group.
//! * [`sheaf`] localizations at primes and global sections.
//!
//! Elements of finite structures are canonical indices into the carrier; all
//! arithmetic on `[0, 1]` is exact.

pub mod ktheory;
pub mod logic;
pub mod mv;
pub mod semimodule;
pub mod semiring;
pub mod sheaf;

pub(crate) mod util;
