pub mod certificates;
pub mod combinatorics;
pub mod fixtures;
pub mod formats;
pub mod oracle;
pub mod ring;
pub mod search;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/rings.md")]
mod book_rings {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/ideals.md")]
mod book_ideals {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/certificates.md")]
mod book_certificates {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/search.md")]
mod book_search {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/oracle.md")]
mod book_oracle {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
