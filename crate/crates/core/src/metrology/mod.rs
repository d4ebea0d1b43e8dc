//! Widths, thickness, diameter and the property checks built on them.

mod checks;
mod completion;
mod falsifier;
mod search;
mod theorems;
mod width;

pub use checks::{
    check_complete, check_constant_diameter, check_constant_width, check_strict_convexity,
    CheckReport, Witness,
};
pub use completion::{complete_hull, radial_hausdorff, Completion, CompletionParams};
pub use falsifier::{reducedness_falsifier, FalsifierParams, FalsifierWitness};
pub use search::{
    max_width, thickness, thickness_in_frame, width_profile, ExtremalWidth, SearchOptions,
    ThicknessReport, WidthProfile,
};
pub use theorems::{
    contact_gap, diameter_strip_range, theorem2_check, verify_diameter_strip, Theorem2Outcome,
    Theorem2Params,
};
pub use width::{diameter, point_set_diameter, width_h, width_in_direction, DiameterReport, WidthReport};
