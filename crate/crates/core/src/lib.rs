//! Maximum genus of graphs via joint-trees and polygon words.
//!
//! [`surface`] classifies polygon words, [`graph`] holds multigraphs and
//! their surgeries, [`jointree`] reads associated surfaces and traces faces,
//! [`engine`] searches rotation systems, [`critical`] runs the critical-vertex
//! reductions, [`families`] generates the test graphs and [`verify`] bundles
//! the property suites.

pub mod critical;
pub mod engine;
pub mod families;
pub mod graph;
pub mod jointree;
pub mod surface;
pub mod verify;

pub use critical::{algorithm_one, algorithm_two, find_1_critical, CriticalFinding, CriticalKind, ReductionTrace};
pub use engine::{is_upper_embeddable, max_genus, max_genus_exhaustive, GenusReport, SearchConfig};
pub use families::{generate, FamilyGraph, FamilySpec};
pub use graph::{EdgeEnd, EdgeId, GraphError, Multigraph, SpanningTree, TreeStrategy, VertexId};
pub use jointree::{associated_surface, enumerate_rotations, face_trace_genus, RotationEnumerator, RotationSystem};
pub use surface::{genus_by_corner_orbits, parse_word, reduce_to_standard, Polygon, StandardForm, SurfaceWord, WordError};
