//! Normal-closure decisions for periodic mapping classes.
//!
//! For order greater than 2 the normal closure always contains the
//! commutator subgroup (for `g ≥ 5`); for involutions, containment is
//! decided from the fixed-point taxonomy. For `g ≥ 7` the commutator
//! subgroup equals the twist subgroup and the closure is then the twist
//! subgroup or the whole group according to the determinant homomorphism,
//! which also yields explicit normal generators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::class_determinant;
use crate::involutions::{Family, InvolutionClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("genus {0} too small for this decision")]
    GenusTooSmall(u64),
    #[error("order {0} is not greater than 2")]
    OrderNotAboveTwo(u64),
}

/// What the normal closure is, when identifiable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosureId {
    TwistSubgroup,
    FullGroup,
    /// The closure misses the commutator subgroup; it is some proper
    /// subgroup with no further identification.
    ProperOther,
    /// Containment of the commutator is known but the closure lattice is
    /// not pinned down (g = 5, 6).
    Unknown,
}

impl ClosureId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosureId::TwistSubgroup => "T",
            ClosureId::FullGroup => "M",
            ClosureId::ProperOther => "proper-other",
            ClosureId::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureVerdict {
    pub contains_commutator: bool,
    pub closure_id: ClosureId,
    /// which clause fired
    pub rationale: String,
    /// set on boundary cases where the published statement needed a
    /// computed correction
    pub warning: Option<String>,
}

impl ClosureVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "contains_commutator": self.contains_commutator,
            "closure": self.closure_id.as_str(),
            "clause": self.rationale,
            "warning": self.warning,
        })
    }
}

/// Decision for periodic classes of order greater than 2: the closure
/// always contains the commutator subgroup; for `g ≥ 7` it is the twist
/// subgroup or the full group according to twist membership.
pub fn decide_order_gt2(
    g: u64,
    order: u64,
    twist_member: bool,
) -> Result<ClosureVerdict, ClosureError> {
    if g < 5 {
        return Err(ClosureError::GenusTooSmall(g));
    }
    if order < 3 {
        return Err(ClosureError::OrderNotAboveTwo(order));
    }
    let closure_id = if g >= 7 {
        if twist_member {
            ClosureId::TwistSubgroup
        } else {
            ClosureId::FullGroup
        }
    } else {
        ClosureId::Unknown
    };
    Ok(ClosureVerdict {
        contains_commutator: true,
        closure_id,
        rationale: if g >= 7 {
            "order > 2: contains the commutator; twist membership picks T or M".into()
        } else {
            "order > 2: contains the commutator; closure lattice unresolved for g < 7".into()
        },
        warning: None,
    })
}

/// Does the normal closure of this involution contain the commutator
/// subgroup?
///
/// Clauses: (1) isolated fixed points only and `g - r >= 4`; (2) ovals with
/// `r + k_- > 0` and either a non-orientable quotient or `g - r - 2k >= 2`;
/// (3) `r = k_- = 0` with a separating fixed set and `g - 2k >= 4`, or with a
/// non-separating fixed set. Two boundary corrections are forced by the
/// exact homology actions: the torus-type free class at `g = 6` and the
/// orientable-quotient oval class with `g - 2k = 2` both act trivially on
/// `V_g⁺/⟨[c]⟩`, so their closures cannot contain the commutator.
pub fn decide_involution(class: &InvolutionClass) -> Result<bool, ClosureError> {
    Ok(involution_decision(class).0)
}

fn involution_decision(class: &InvolutionClass) -> (bool, String, Option<String>) {
    let c = class;
    if c.r > 0 && c.k == 0 {
        let yes = c.g - c.r >= 4;
        return (yes, format!("clause 1: r>0, k=0, g-r={} {} 4", c.g - c.r, ge(yes)), None);
    }
    if c.k > 0 && c.r + c.k_minus > 0 {
        if !c.quotient_orientable {
            return (true, "clause 2a: non-orientable quotient".into(), None);
        }
        let yes = c.g >= c.r + 2 * c.k + 2;
        return (
            yes,
            format!("clause 2b: orientable quotient, g-r-2k={} {} 2", c.g as i64 - c.r as i64 - 2 * c.k as i64, ge(yes)),
            None,
        );
    }
    // r = k_- = 0 (including the free classes)
    if c.fixed_set_separating {
        let yes = c.g >= 2 * c.k + 4;
        return (yes, format!("clause 3a: separating, g-2k={} {} 4", c.g - 2 * c.k, ge(yes)), None);
    }
    if c.family == Family::F02 && c.g == 6 {
        return (
            false,
            "clause 3b correction: torus-type free class at g = 6 acts trivially on V+/<[c]>"
                .into(),
            Some("published clause 3b assumes g >= 8 for free classes".into()),
        );
    }
    if c.quotient_orientable && c.g == 2 * c.k + 2 {
        return (
            false,
            "clause 3b correction: orientable quotient with g-2k=2 acts trivially on V+/<[c]>"
                .into(),
            Some("published clause 3b misses the quotient-genus-1 oval class".into()),
        );
    }
    let warning = (c.k == 0 && c.g == 6)
        .then(|| "free class at g = 6: containment verified homologically".to_string());
    (true, "clause 3b: non-separating fixed set".into(), warning)
}

fn ge(yes: bool) -> &'static str {
    if yes {
        ">="
    } else {
        "<"
    }
}

/// Full verdict for an involution class, including the closure
/// identification for `g ≥ 7` via the determinant homomorphism.
pub fn involution_verdict(class: &InvolutionClass) -> Result<ClosureVerdict, ClosureError> {
    if class.g < 5 {
        return Err(ClosureError::GenusTooSmall(class.g));
    }
    let (contains, rationale, warning) = involution_decision(class);
    let closure_id = if !contains {
        ClosureId::ProperOther
    } else if class.g >= 7 {
        if class_determinant(class) == 1 {
            ClosureId::TwistSubgroup
        } else {
            ClosureId::FullGroup
        }
    } else {
        ClosureId::Unknown
    };
    Ok(ClosureVerdict { contains_commutator: contains, closure_id, rationale, warning })
}

/// Does a periodic class of order greater than 2 normally generate the
/// whole mapping class group? Needs `g ≥ 7` (below that the abelianisation
/// is not cyclic).
pub fn is_normal_generator_periodic(
    g: u64,
    order: u64,
    determinant: i64,
) -> Result<bool, ClosureError> {
    if g < 7 {
        return Err(ClosureError::GenusTooSmall(g));
    }
    let verdict = decide_order_gt2(g, order, determinant == 1)?;
    Ok(verdict.contains_commutator && determinant == -1)
}

/// Does this involution normally generate the mapping class group?
pub fn is_normal_generator_involution(class: &InvolutionClass) -> Result<bool, ClosureError> {
    if class.g < 7 {
        return Err(ClosureError::GenusTooSmall(class.g));
    }
    Ok(decide_involution(class)? && class_determinant(class) == -1)
}

/// A concrete involution normally generating `M(N_g)`: the `f_4` variant
/// with `k_+ = 0` and odd quotient genus, solved at `h = 1`.
pub fn normal_generator_witness(g: u64) -> Result<InvolutionClass, ClosureError> {
    if g < 7 {
        return Err(ClosureError::GenusTooSmall(g));
    }
    let (k_minus, r) = if g % 2 == 0 { (2, g - 4) } else { (1, g - 2) };
    let class = InvolutionClass::new(Family::F4, g, 1, r, 0, k_minus, false, false)
        .expect("witness tuple satisfies the class invariants");
    debug_assert!(is_normal_generator_involution(&class).unwrap());
    Ok(class)
}
