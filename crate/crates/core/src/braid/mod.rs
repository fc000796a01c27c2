//! Words in braid-like groups, their presentations, representations on
//! tuples, and the simplicial maps on virtual pure braid groups.

pub mod presentation;
pub mod rep;
pub mod simplicial;
pub mod word;
pub mod yn;

pub use presentation::{presentation, Presentation, PresentationName, Relator};
pub use rep::{check_assignment, rep_hn, rep_vbn, rep_vp, GeneratorAssignment, PermAssignment};
pub use simplicial::{b3_counterexamples, degeneracy_vp, doubling_bn, doubling_vp, face_vp, simplicial_check, simplicial_check_with};
pub use word::{Gen, Letter, Word};
pub use yn::{lambda_y3, m_elements, n_elements, plus_projection, tau_yn, y3_assignment};
