//! Exact symbolic arithmetic over M, the finite and infinite natural numbers.
//!
//! M extends the finite naturals with infinite elements: `w` (all binary digits
//! one), its successors `w_1, w_2, …` and predecessors `w-1, w-2, …`, and a
//! sequence of landmark classes `o_1, o_2, …`, each a copy of Z. Alongside the
//! elements sits a small cardinal stratum with `K = |N|` and the indeterminate
//! `κ`.
//!
//! ```
//! use infnat::{element, MNumber, Value, CardValue};
//!
//! let w = MNumber::w(0);
//! assert_eq!(element::succ(&w).to_string(), "w_1");
//! assert_eq!(element::add(&w, &MNumber::lmk(1, 0)), Value::Card(CardValue::K));
//! ```
//!
//! Modules:
//!
//! * [`number`]: element and cardinal types, canonical names
//! * [`card`]: the `K`/`κ` operation table
//! * [`element`]: successor and element arithmetic
//! * [`digits`]: binary digit patterns
//! * [`order`]: comparison, distance, landmark classes, archimedean test
//! * [`limits`]: symbolic limits
//! * [`bijections`]: enumerations of two-ended sets, pairing function
//! * [`calc`]: expression parser, evaluator, REPL, command line

pub mod bijections;
pub mod calc;
pub mod card;
pub mod digits;
pub mod element;
pub mod error;
pub mod limits;
pub mod number;
pub mod order;

pub use error::{Error, Result};
pub use number::{parse_value, CardValue, MNumber, Value};
