//! Affine surfaces glued from polygons: validation, holonomy, surgeries and
//! geometrization of representations.

pub mod cone;
pub mod geom;
pub mod haupt;
pub mod holonomy;
pub mod json;
pub mod normal_form;
pub mod polygon;
pub mod presentation;
pub mod realize;
pub mod surgery;
pub mod svg;

pub use geom::Affine;
pub use holonomy::{conjugacy, holonomy, Conjugacy, HolonomyReport};
pub use polygon::{Crossing, EdgeRef, MarkedCurve, Pairing, PairingKind, PolygonSurface};
pub use cone::{cone_data, ConeData, ConePoint};
pub use surgery::{add_handle, connected_sum, cut_slit, Slit};
pub use haupt::{haupt_check, HauptVerdict, Rejection};
pub use normal_form::{normal_form, NormalForm};
pub use realize::{exponentiate, realize, Branch, Realization};
pub use json::{parse_surface, surface_to_json, SurfaceJson};
pub use svg::surface_svg;
