//! Small named instances used in examples and tests.

use crate::com::Com;
use crate::realize::covectors;
use crate::Arrangement;

/// Covectors of three generic lines through the origin of the plane
/// (`x = 0`, `y = 0`, `x + y = 0`, all cooriented by their normals).
pub fn gen3() -> Com {
    Com::from_words(
        3,
        &[
            "000", "+0+", "-0-", "0++", "0--", "+-0", "-+0", "+++", "---", "+-+", "+--", "-+-", "-++",
        ],
    )
    .expect("well-formed words")
}

/// The single-element oriented matroid `{+, 0, -}`.
pub fn line() -> Com {
    Com::from_words(1, &["+", "0", "-"]).expect("well-formed words")
}

/// The coloop COM `{0}`.
pub fn coloop() -> Com {
    Com::from_words(1, &["0"]).expect("well-formed words")
}

/// JSON text of the four-line example: lines 0, 1, 2 meet at `(5/2, 1)`
/// inside a convex 9-gon, line 3 is `x + 2y = 17/10`.
pub const EX4_JSON: &str = include_str!("../../../fixtures/ex4.json");

/// JSON text of the three lines `x = 0`, `y = 0`, `x + y = 0` in the whole plane.
pub const GEN3_JSON: &str = include_str!("../../../fixtures/gen3.json");

pub fn ex4_arrangement() -> Arrangement {
    Arrangement::from_json(EX4_JSON).expect("shipped fixture parses")
}

/// The COM realized by [`ex4_arrangement`]: 23 covectors, 9 topes.
pub fn ex4() -> Com {
    covectors(&ex4_arrangement())
}

pub fn gen3_arrangement() -> Arrangement {
    Arrangement::from_json(GEN3_JSON).expect("shipped fixture parses")
}
