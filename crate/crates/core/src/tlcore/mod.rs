//! Diagrams, elements and cell modules of the Temperley-Lieb algebra at
//! loop value 2.

mod cell;
mod element;
mod matching;
mod notation;
mod words;

pub use cell::{
    act_on_half, bilinear, cell_action, cell_matrix, cellular_basis_element, cellular_dimension, gram_entry,
    gram_matrix, half_diagram, tableau_of_half, CellRep, CellVector, HalfDiagram,
};
pub use element::{ElementJson, Ring, TLElement, Tangle, TermJson};
pub(crate) use matching::compose_unchecked;
pub use matching::{enumerate_matchings, End, PlanarMatching, MAX_ENDPOINTS};
pub use notation::{format_element, WORD_LIMIT};
pub use words::{generator_words, jm_element, phi, transposition_word, word_element, WordTable};
