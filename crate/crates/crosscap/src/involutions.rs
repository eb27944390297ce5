//! The signed taxonomy of involutions on `N_g`.
//!
//! Up to conjugacy, an involution of a non-orientable surface is determined
//! by its fixed-point data — `r` isolated points, `k` ovals split into
//! two-sided (`k_+`) and one-sided (`k_-`) ones — together with the genus and
//! orientability of the quotient orbifold, plus one extra tag splitting the
//! two free classes. Eleven families `f_01, f_02, f_1, …, f_9` exhaust all
//! classes; each is built from a reflection, a rotation by π, or an
//! antipodism by the five surgeries.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nec::{Epimorphism, NecSignature, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("genus {0} is too small (need g >= 5)")]
    GenusTooSmall(u64),
    #[error("invalid involution class: {0}")]
    InvalidClass(String),
    #[error("surgery not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// The eleven conjugacy-class families. `F01`/`F02` are the free classes
/// (identical tuples, split by the glide invariant); the others follow the
/// fixed-point taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    F01,
    F02,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::F01,
        Family::F02,
        Family::F1,
        Family::F2,
        Family::F3,
        Family::F4,
        Family::F5,
        Family::F6,
        Family::F7,
        Family::F8,
        Family::F9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::F01 => "F01",
            Family::F02 => "F02",
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
            Family::F4 => "F4",
            Family::F5 => "F5",
            Family::F6 => "F6",
            Family::F7 => "F7",
            Family::F8 => "F8",
            Family::F9 => "F9",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// One conjugacy class of involutions on `N_g`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InvolutionClass {
    pub family: Family,
    pub g: u64,
    /// genus of the quotient orbifold
    pub h: u64,
    /// isolated fixed points
    pub r: u64,
    /// ovals
    pub k: u64,
    pub k_plus: u64,
    pub k_minus: u64,
    pub quotient_orientable: bool,
    pub fixed_set_separating: bool,
}

impl InvolutionClass {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        family: Family,
        g: u64,
        h: u64,
        r: u64,
        k_plus: u64,
        k_minus: u64,
        quotient_orientable: bool,
        fixed_set_separating: bool,
    ) -> Result<Self, InvolutionError> {
        let c = InvolutionClass {
            family,
            g,
            h,
            r,
            k: k_plus + k_minus,
            k_plus,
            k_minus,
            quotient_orientable,
            fixed_set_separating,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn epsilon(&self) -> u64 {
        if self.quotient_orientable {
            2
        } else {
            1
        }
    }

    fn validate(&self) -> Result<(), InvolutionError> {
        let err = |m: &str| Err(InvolutionError::InvalidClass(m.to_string()));
        if self.g < 5 {
            return Err(InvolutionError::GenusTooSmall(self.g));
        }
        if self.k != self.k_plus + self.k_minus {
            return err("k != k+ + k-");
        }
        if (self.r + self.k_minus) % 2 != 0 {
            return err("r + k- must be even");
        }
        if self.g % 2 != self.r % 2 {
            return err("g and r must have equal parity");
        }
        if self.g + 2 != 2 * self.epsilon() * self.h + 2 * self.k + self.r {
            return err("Hurwitz-Riemann identity g = 2eh + 2k - 2 + r fails");
        }
        if self.r + 2 * self.k > self.g + 2 {
            return err("r + 2k exceeds g + 2");
        }
        if !self.quotient_orientable && self.r + 2 * self.k > self.g {
            return err("r + 2k exceeds g for a non-orientable quotient");
        }
        let expect_sep = matches!(self.family, Family::F3 | Family::F6);
        if self.fixed_set_separating != expect_sep {
            return err("fixed_set_separating is true exactly for F3 and F6");
        }
        match self.family {
            Family::F01 | Family::F02 => {
                if self.r != 0 || self.k != 0 {
                    return err("free classes need r = k = 0");
                }
                if self.quotient_orientable {
                    return err("free involutions have non-orientable quotients");
                }
            }
            Family::F1 => {
                if !(self.r > 0 && self.k == 0 && !self.quotient_orientable) {
                    return err("F1 needs r > 0, k = 0, non-orientable quotient");
                }
            }
            Family::F2 => {
                if !(self.r > 0
                    && self.k_minus == 0
                    && self.k_plus > 0
                    && !self.quotient_orientable)
                {
                    return err("F2 needs r > 0, k- = 0, k+ > 0, non-orientable quotient");
                }
            }
            Family::F3 => {
                if !(self.r > 0
                    && self.k_minus == 0
                    && self.k_plus > 0
                    && self.quotient_orientable)
                {
                    return err("F3 needs r > 0, k- = 0, k+ > 0, orientable quotient");
                }
                if (self.r + 2 * self.k) % 4 != (self.g + 2) % 4 {
                    return err("F3 needs r + 2k = g + 2 mod 4");
                }
            }
            Family::F4 => {
                if !(self.k_minus > 0 && !self.quotient_orientable) {
                    return err("F4 needs k- > 0 and a non-orientable quotient");
                }
            }
            Family::F5 => {
                if !(self.k_minus > 0 && self.quotient_orientable) {
                    return err("F5 needs k- > 0 and an orientable quotient");
                }
            }
            Family::F6 => {
                if !(self.r == 0
                    && self.k_minus == 0
                    && self.k > 0
                    && !self.quotient_orientable)
                {
                    return err("F6 needs r = k- = 0, k > 0, non-orientable quotient");
                }
            }
            Family::F7 => {
                if !(self.r == 0
                    && self.k_minus == 0
                    && self.k > 0
                    && !self.quotient_orientable
                    && 2 * self.k < self.g)
                {
                    return err("F7 needs r = k- = 0, k > 0, non-orientable quotient, 2k < g");
                }
            }
            Family::F8 => {
                if !(self.r == 0
                    && self.k_minus == 0
                    && self.k > 0
                    && !self.quotient_orientable
                    && 2 * self.k < self.g - 2)
                {
                    return err("F8 needs r = k- = 0, k > 0, non-orientable quotient, 2k < g-2");
                }
            }
            Family::F9 => {
                if !(self.r == 0
                    && self.k_minus == 0
                    && self.k > 0
                    && self.quotient_orientable
                    && 2 * self.k < self.g)
                {
                    return err("F9 needs r = k- = 0, k > 0, orientable quotient, 2k < g");
                }
                if (2 * self.k) % 4 != (self.g + 2) % 4 {
                    return err("F9 needs 2k = g + 2 mod 4");
                }
            }
        }
        Ok(())
    }

    /// Parses `F4[g=9,h=3,r=1,k=2,k+=1,k-=1,Q=nonor,sep=false]`.
    pub fn parse(input: &str) -> Result<Self, InvolutionError> {
        let s = input.trim();
        let open = s.find('[').ok_or_else(|| InvolutionError::Parse("missing '['".into()))?;
        let family = Family::from_name(&s[..open])
            .ok_or_else(|| InvolutionError::Parse(format!("unknown family {:?}", &s[..open])))?;
        let body = s[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| InvolutionError::Parse("missing ']'".into()))?;
        let mut g = None;
        let mut h = None;
        let mut r = None;
        let mut k = None;
        let mut kp = None;
        let mut km = None;
        let mut q = None;
        let mut sep = None;
        for field in body.split(',') {
            let (key, val) = field
                .split_once('=')
                .ok_or_else(|| InvolutionError::Parse(format!("bad field {field:?}")))?;
            let key = key.trim();
            let val = val.trim();
            let int = || -> Result<u64, InvolutionError> {
                val.parse().map_err(|_| InvolutionError::Parse(format!("bad value {val:?}")))
            };
            match key {
                "g" => g = Some(int()?),
                "h" => h = Some(int()?),
                "r" => r = Some(int()?),
                "k" => k = Some(int()?),
                "k+" => kp = Some(int()?),
                "k-" => km = Some(int()?),
                "Q" => {
                    q = Some(match val {
                        "or" => true,
                        "nonor" => false,
                        _ => return Err(InvolutionError::Parse(format!("bad Q {val:?}"))),
                    })
                }
                "sep" => {
                    sep = Some(match val {
                        "true" => true,
                        "false" => false,
                        _ => return Err(InvolutionError::Parse(format!("bad sep {val:?}"))),
                    })
                }
                _ => return Err(InvolutionError::Parse(format!("unknown key {key:?}"))),
            }
        }
        let need = |o: Option<u64>, n: &str| {
            o.ok_or_else(|| InvolutionError::Parse(format!("missing field {n}")))
        };
        let c = InvolutionClass::new(
            family,
            need(g, "g")?,
            need(h, "h")?,
            need(r, "r")?,
            need(kp, "k+")?,
            need(km, "k-")?,
            q.ok_or_else(|| InvolutionError::Parse("missing field Q".into()))?,
            sep.ok_or_else(|| InvolutionError::Parse("missing field sep".into()))?,
        )?;
        if let Some(kv) = k {
            if kv != c.k {
                return Err(InvolutionError::Parse("k does not match k+ + k-".into()));
            }
        }
        Ok(c)
    }

    /// The NEC signature of the quotient orbifold: `(h; ±; [(2)^r]; {()^k})`.
    pub fn signature(&self) -> NecSignature {
        let sign = if self.quotient_orientable { Sign::Plus } else { Sign::Minus };
        NecSignature::new(self.h, sign, vec![2; self.r as usize], self.k)
            .expect("class invariants imply a valid signature")
    }

    /// A canonical admissible epimorphism realizing this class: elliptic and
    /// reflection generators map to 1, the first `k_-` connectors map to 1,
    /// and the glide/handle images encode the family's extra invariant.
    pub fn canonical_epimorphism(&self) -> Epimorphism {
        let sig = self.signature();
        let pres = crate::nec::presentation(&sig);
        let mut images = Vec::with_capacity(pres.generators().len());
        let mut seen_e = 0;
        let mut seen_d = 0;
        let mut seen_ab = 0;
        let d_ones: u64 = match self.family {
            Family::F7 | Family::F01 => 1,
            Family::F8 | Family::F02 => 2,
            _ => 0,
        };
        for gen in pres.generators() {
            use crate::nec::GenKind::*;
            let v = match gen.kind {
                Elliptic | Reflection => 1,
                Connector => {
                    seen_e += 1;
                    u64::from(seen_e <= self.k_minus)
                }
                Glide => {
                    seen_d += 1;
                    u64::from(seen_d <= d_ones)
                }
                HandleA | HandleB => {
                    seen_ab += 1;
                    // F9 needs a handle generator outside the kernel
                    u64::from(self.family == Family::F9 && seen_ab == 1)
                }
            };
            images.push(v);
        }
        Epimorphism::new(&sig, 2, images)
            .expect("canonical images satisfy the relations and surjectivity")
    }
}

impl fmt::Display for InvolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[g={},h={},r={},k={},k+={},k-={},Q={},sep={}]",
            self.family.name(),
            self.g,
            self.h,
            self.r,
            self.k,
            self.k_plus,
            self.k_minus,
            if self.quotient_orientable { "or" } else { "nonor" },
            self.fixed_set_separating
        )
    }
}

/// The complete, duplicate-free list of conjugacy classes on `N_g`,
/// deterministically ordered.
pub fn enumerate_classes(g: u64) -> Result<Vec<InvolutionClass>, InvolutionError> {
    if g < 5 {
        return Err(InvolutionError::GenusTooSmall(g));
    }
    let mut out = Vec::new();
    let mk = |fam, h, r, kp, km, q, sep| InvolutionClass::new(fam, g, h, r, kp, km, q, sep);
    if g % 2 == 0 {
        let h = (g + 2) / 2;
        out.push(mk(Family::F01, h, 0, 0, 0, false, false).unwrap());
        out.push(mk(Family::F02, h, 0, 0, 0, false, false).unwrap());
        // F1: r in {2,4,...,g}, h = (g+2-r)/2
        for r in (2..=g).step_by(2) {
            out.push(mk(Family::F1, (g + 2 - r) / 2, r, 0, 0, false, false).unwrap());
        }
        // F2: r >= 2 even, k >= 1, h = (g+2-r-2k)/2 >= 1
        for r in (2..=g).step_by(2) {
            for k in 1.. {
                if 2 * k + r > g {
                    break;
                }
                let h = (g + 2 - r - 2 * k) / 2;
                out.push(mk(Family::F2, h, r, k, 0, false, false).unwrap());
            }
        }
        // F3: r >= 2 even, k >= 1, 4h = g+2-r-2k >= 0
        for r in (2..=g).step_by(2) {
            for k in 1.. {
                if r + 2 * k > g + 2 {
                    break;
                }
                let rem = g + 2 - r - 2 * k;
                if rem % 4 == 0 {
                    out.push(mk(Family::F3, rem / 4, r, k, 0, true, true).unwrap());
                }
            }
        }
    }
    // F4/F5: k- > 0 with r + k- even; r has the parity of g
    let r0 = g % 2;
    for r in (r0..=g).step_by(2) {
        for km in 1..=(g + 2) / 2 {
            if (r + km) % 2 != 0 {
                continue;
            }
            if r + 2 * km > g + 2 {
                break;
            }
            for kp in 0.. {
                let k = kp + km;
                if r + 2 * k > g {
                    break;
                }
                let rem = g + 2 - r - 2 * k;
                if rem >= 2 && rem % 2 == 0 {
                    out.push(mk(Family::F4, rem / 2, r, kp, km, false, false).unwrap());
                }
            }
            for kp in 0.. {
                let k = kp + km;
                if r + 2 * k > g + 2 {
                    break;
                }
                let rem = g + 2 - r - 2 * k;
                if rem % 4 == 0 {
                    out.push(mk(Family::F5, rem / 4, r, kp, km, true, false).unwrap());
                }
            }
        }
    }
    if g % 2 == 0 {
        // F6/F7/F8: k >= 1, h = (g+2-2k)/2 with h >= 1 / 2 / 3
        for k in 1..=(g / 2) {
            let h = (g + 2 - 2 * k) / 2;
            if h >= 1 {
                out.push(mk(Family::F6, h, 0, k, 0, false, true).unwrap());
            }
            if h >= 2 {
                out.push(mk(Family::F7, h, 0, k, 0, false, false).unwrap());
            }
            if h >= 3 {
                out.push(mk(Family::F8, h, 0, k, 0, false, false).unwrap());
            }
        }
        // F9: k >= 1, 4h = g+2-2k with h >= 1
        for k in 1.. {
            if 2 * k >= g {
                break;
            }
            let rem = g + 2 - 2 * k;
            if rem % 4 == 0 && rem / 4 >= 1 {
                out.push(mk(Family::F9, rem / 4, 0, k, 0, true, false).unwrap());
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Surgeries
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceKind {
    Orientable { genus: u64 },
    NonOrientable { genus: u64 },
}

impl SurfaceKind {
    /// `2 - χ`: usual genus for non-orientable surfaces, twice the genus for
    /// orientable ones. The Hurwitz-Riemann identity is uniform in it.
    pub fn effective_genus(self) -> u64 {
        match self {
            SurfaceKind::Orientable { genus } => 2 * genus,
            SurfaceKind::NonOrientable { genus } => genus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientKind {
    Orientable { genus: u64 },
    NonOrientable { genus: u64 },
}

impl QuotientKind {
    pub fn epsilon(self) -> u64 {
        match self {
            QuotientKind::Orientable { .. } => 2,
            QuotientKind::NonOrientable { .. } => 1,
        }
    }
    pub fn genus(self) -> u64 {
        match self {
            QuotientKind::Orientable { genus } | QuotientKind::NonOrientable { genus } => genus,
        }
    }
}

/// Invariant tuple of an involution at any stage of a surgery sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryState {
    pub surface: SurfaceKind,
    pub r: u64,
    pub k_plus: u64,
    pub k_minus: u64,
    pub quotient: QuotientKind,
    /// For an orientable surface: whether the involution reverses
    /// orientation. Meaningless (None) once the surface is non-orientable.
    pub reverses_orientation: Option<bool>,
}

impl SurgeryState {
    pub fn k(&self) -> u64 {
        self.k_plus + self.k_minus
    }

    /// `G = 2εh + 2k - 2 + r` with `G` the effective genus.
    pub fn hurwitz_riemann_holds(&self) -> bool {
        let rhs = 2 * self.quotient.epsilon() * self.quotient.genus() + 2 * self.k() + self.r;
        self.surface.effective_genus() + 2 == rhs
    }
}

/// Base actions the model recipes start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Base {
    /// Mirror reflection of an orientable surface: `genus + 1` two-sided
    /// ovals, orientable quotient of genus 0.
    Reflection { genus: u64 },
    /// Rotation by π of an orientable surface with quotient genus `q`:
    /// `2·genus - 4q + 2` isolated fixed points (the hyperelliptic case is
    /// `q = 0`; `genus = 2q - 1` gives the free rotation).
    Rotation { genus: u64, quotient_genus: u64 },
    /// Free antipodism of the sphere (quotient genus 1) or the torus
    /// (quotient genus 2).
    Antipodism { torus: bool },
}

impl Base {
    pub fn state(self) -> Result<SurgeryState, InvolutionError> {
        match self {
            Base::Reflection { genus } => Ok(SurgeryState {
                surface: SurfaceKind::Orientable { genus },
                r: 0,
                k_plus: genus + 1,
                k_minus: 0,
                quotient: QuotientKind::Orientable { genus: 0 },
                reverses_orientation: Some(true),
            }),
            Base::Rotation { genus, quotient_genus } => {
                let fixed = (2 * genus + 2).checked_sub(4 * quotient_genus).ok_or_else(|| {
                    InvolutionError::NotApplicable(format!(
                        "no rotation of genus {genus} with quotient genus {quotient_genus}"
                    ))
                })?;
                Ok(SurgeryState {
                    surface: SurfaceKind::Orientable { genus },
                    r: fixed,
                    k_plus: 0,
                    k_minus: 0,
                    quotient: QuotientKind::Orientable { genus: quotient_genus },
                    reverses_orientation: Some(false),
                })
            }
            Base::Antipodism { torus } => Ok(SurgeryState {
                surface: SurfaceKind::Orientable { genus: u64::from(torus) },
                r: 0,
                k_plus: 0,
                k_minus: 0,
                quotient: QuotientKind::NonOrientable { genus: 1 + u64::from(torus) },
                reverses_orientation: Some(true),
            }),
        }
    }
}

/// The five surgeries as transitions on invariant tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurgeryStep {
    /// Replaces an isolated fixed point with a one-sided oval (+1 crosscap).
    BlowUpIsolated,
    /// Blows up a point on an oval: adds an isolated fixed point and
    /// toggles that oval's sidedness (+1 crosscap).
    BlowUpNonIsolated { two_sided_oval: bool },
    /// Adds two crosscaps swapped by the involution; the quotient gains one
    /// crosscap.
    BlowUp2Orbit,
    /// Identifies the boundaries of a free 2-orbit of discs: adds a
    /// two-sided oval.
    AddHandle,
    /// Glues a rotated orientable factor (with the stated invariants) onto a
    /// reflection; the result is non-orientable of genus `2(g_X + g_Y + 1)`.
    GlueSurfaces { rotation_fixed_points: u64, rotation_quotient_genus: u64 },
}

pub fn apply_surgery(
    state: &SurgeryState,
    step: SurgeryStep,
) -> Result<SurgeryState, InvolutionError> {
    let mut s = *state;
    let blow_one_crosscap = |s: &mut SurgeryState| {
        s.surface = SurfaceKind::NonOrientable { genus: s.surface.effective_genus() + 1 };
        s.reverses_orientation = None;
    };
    match step {
        SurgeryStep::BlowUpIsolated => {
            if s.r == 0 {
                return Err(InvolutionError::NotApplicable(
                    "BlowUpIsolated needs an isolated fixed point".into(),
                ));
            }
            s.r -= 1;
            s.k_minus += 1;
            blow_one_crosscap(&mut s);
        }
        SurgeryStep::BlowUpNonIsolated { two_sided_oval } => {
            if two_sided_oval {
                if s.k_plus == 0 {
                    return Err(InvolutionError::NotApplicable(
                        "no two-sided oval to blow up".into(),
                    ));
                }
                s.k_plus -= 1;
                s.k_minus += 1;
            } else {
                if s.k_minus == 0 {
                    return Err(InvolutionError::NotApplicable(
                        "no one-sided oval to blow up".into(),
                    ));
                }
                s.k_minus -= 1;
                s.k_plus += 1;
            }
            s.r += 1;
            blow_one_crosscap(&mut s);
        }
        SurgeryStep::BlowUp2Orbit => {
            s.surface = SurfaceKind::NonOrientable { genus: s.surface.effective_genus() + 2 };
            s.reverses_orientation = None;
            s.quotient = match s.quotient {
                QuotientKind::Orientable { genus } => {
                    QuotientKind::NonOrientable { genus: 2 * genus + 1 }
                }
                QuotientKind::NonOrientable { genus } => {
                    QuotientKind::NonOrientable { genus: genus + 1 }
                }
            };
        }
        SurgeryStep::AddHandle => {
            s.k_plus += 1;
            s.surface = match (s.surface, s.reverses_orientation) {
                (SurfaceKind::Orientable { genus }, Some(true)) => {
                    SurfaceKind::Orientable { genus: genus + 1 }
                }
                (SurfaceKind::Orientable { genus }, Some(false)) => {
                    s.reverses_orientation = None;
                    SurfaceKind::NonOrientable { genus: 2 * genus + 2 }
                }
                (SurfaceKind::NonOrientable { genus }, _) => {
                    SurfaceKind::NonOrientable { genus: genus + 2 }
                }
                (SurfaceKind::Orientable { .. }, None) => unreachable!(),
            };
        }
        SurgeryStep::GlueSurfaces { rotation_fixed_points, rotation_quotient_genus } => {
            let SurfaceKind::Orientable { genus: gx } = s.surface else {
                return Err(InvolutionError::NotApplicable(
                    "gluing needs an orientable reflection factor".into(),
                ));
            };
            if s.reverses_orientation != Some(true) {
                return Err(InvolutionError::NotApplicable(
                    "gluing needs an orientation-reversing first factor".into(),
                ));
            }
            let QuotientKind::Orientable { genus: qx } = s.quotient else {
                return Err(InvolutionError::NotApplicable(
                    "reflection factor must have an orientable quotient".into(),
                ));
            };
            // rotation factor genus from its own Hurwitz-Riemann identity
            let ry = rotation_fixed_points;
            let qy = rotation_quotient_genus;
            if ry % 2 != 0 || 4 * qy + ry < 2 {
                return Err(InvolutionError::NotApplicable(
                    "no rotation with those invariants".into(),
                ));
            }
            let gy = (4 * qy + ry - 2) / 2;
            s.surface = SurfaceKind::NonOrientable { genus: 2 * (gx + gy + 1) };
            s.r += ry;
            s.quotient = QuotientKind::Orientable { genus: qx + qy };
            s.reverses_orientation = None;
        }
    }
    Ok(s)
}

/// A model construction: a base action and the surgeries to fold over it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelRecipe {
    pub base: Base,
    pub steps: Vec<SurgeryStep>,
}

impl ModelRecipe {
    pub fn replay(&self) -> Result<SurgeryState, InvolutionError> {
        let mut s = self.base.state()?;
        for &step in &self.steps {
            let before_ok = s.hurwitz_riemann_holds();
            s = apply_surgery(&s, step)?;
            if before_ok && !s.hurwitz_riemann_holds() {
                return Err(InvolutionError::InvalidClass(
                    "surgery broke the Hurwitz-Riemann identity".into(),
                ));
            }
        }
        Ok(s)
    }
}

/// The published model of each class as a base plus surgeries.
pub fn model_recipe(class: &InvolutionClass) -> ModelRecipe {
    let c = class;
    let reps = |step: SurgeryStep, n: u64| std::iter::repeat(step).take(n as usize);
    match c.family {
        Family::F01 => ModelRecipe {
            base: Base::Antipodism { torus: false },
            steps: reps(SurgeryStep::BlowUp2Orbit, c.h - 1).collect(),
        },
        Family::F02 => ModelRecipe {
            base: Base::Antipodism { torus: true },
            steps: reps(SurgeryStep::BlowUp2Orbit, c.h - 2).collect(),
        },
        Family::F1 => ModelRecipe {
            base: Base::Rotation { genus: c.r / 2 - 1, quotient_genus: 0 },
            steps: reps(SurgeryStep::BlowUp2Orbit, c.h).collect(),
        },
        Family::F2 => {
            let mut steps: Vec<SurgeryStep> = reps(SurgeryStep::BlowUp2Orbit, c.h).collect();
            // non-isolated blow-ups in pairs per oval keep k- = 0
            for _ in 0..c.r / 2 {
                steps.push(SurgeryStep::BlowUpNonIsolated { two_sided_oval: true });
                steps.push(SurgeryStep::BlowUpNonIsolated { two_sided_oval: false });
            }
            ModelRecipe { base: Base::Reflection { genus: c.k - 1 }, steps }
        }
        Family::F3 => ModelRecipe {
            base: Base::Reflection { genus: c.k - 1 },
            steps: vec![SurgeryStep::GlueSurfaces {
                rotation_fixed_points: c.r,
                rotation_quotient_genus: c.h,
            }],
        },
        Family::F4 => {
            if c.k_plus >= 1 {
                let mut steps = vec![SurgeryStep::GlueSurfaces {
                    rotation_fixed_points: c.r + c.k_minus,
                    rotation_quotient_genus: 0,
                }];
                steps.extend(reps(SurgeryStep::BlowUp2Orbit, c.h));
                steps.extend(reps(SurgeryStep::BlowUpIsolated, c.k_minus));
                ModelRecipe { base: Base::Reflection { genus: c.k_plus - 1 }, steps }
            } else {
                let mut steps: Vec<SurgeryStep> = reps(SurgeryStep::BlowUp2Orbit, c.h).collect();
                steps.extend(reps(SurgeryStep::BlowUpIsolated, c.k_minus));
                ModelRecipe {
                    base: Base::Rotation {
                        genus: (c.r + c.k_minus) / 2 - 1,
                        quotient_genus: 0,
                    },
                    steps,
                }
            }
        }
        Family::F5 => {
            if c.k_plus >= 1 {
                let mut steps = vec![SurgeryStep::GlueSurfaces {
                    rotation_fixed_points: c.r + c.k_minus,
                    rotation_quotient_genus: c.h,
                }];
                steps.extend(reps(SurgeryStep::BlowUpIsolated, c.k_minus));
                ModelRecipe { base: Base::Reflection { genus: c.k_plus - 1 }, steps }
            } else {
                ModelRecipe {
                    base: Base::Rotation {
                        genus: 2 * c.h + (c.r + c.k_minus) / 2 - 1,
                        quotient_genus: c.h,
                    },
                    steps: reps(SurgeryStep::BlowUpIsolated, c.k_minus).collect(),
                }
            }
        }
        Family::F6 => ModelRecipe {
            base: Base::Reflection { genus: c.k - 1 },
            steps: reps(SurgeryStep::BlowUp2Orbit, c.h).collect(),
        },
        Family::F7 => {
            let mut steps: Vec<SurgeryStep> = reps(SurgeryStep::BlowUp2Orbit, c.h - 1).collect();
            steps.extend(reps(SurgeryStep::AddHandle, c.k));
            ModelRecipe { base: Base::Antipodism { torus: false }, steps }
        }
        Family::F8 => {
            let mut steps: Vec<SurgeryStep> = reps(SurgeryStep::BlowUp2Orbit, c.h - 2).collect();
            steps.extend(reps(SurgeryStep::AddHandle, c.k));
            ModelRecipe { base: Base::Antipodism { torus: true }, steps }
        }
        Family::F9 => ModelRecipe {
            base: Base::Rotation { genus: 2 * c.h - 1, quotient_genus: c.h },
            steps: reps(SurgeryStep::AddHandle, c.k).collect(),
        },
    }
}

/// Checks that replaying the recipe reproduces the class tuple.
pub fn recipe_matches(class: &InvolutionClass) -> Result<bool, InvolutionError> {
    let final_state = model_recipe(class).replay()?;
    let SurfaceKind::NonOrientable { genus } = final_state.surface else {
        return Ok(false);
    };
    let quotient_ok = match final_state.quotient {
        QuotientKind::Orientable { genus } => class.quotient_orientable && genus == class.h,
        QuotientKind::NonOrientable { genus } => !class.quotient_orientable && genus == class.h,
    };
    Ok(genus == class.g
        && final_state.r == class.r
        && final_state.k_plus == class.k_plus
        && final_state.k_minus == class.k_minus
        && quotient_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nec::is_admissible;

    #[test]
    fn genus_gate() {
        assert!(matches!(enumerate_classes(4), Err(InvolutionError::GenusTooSmall(4))));
    }

    #[test]
    fn free_classes_only_for_even_genus() {
        let c6 = enumerate_classes(6).unwrap();
        let free: Vec<_> = c6.iter().filter(|c| c.r == 0 && c.k == 0).collect();
        assert_eq!(free.len(), 2);
        assert_eq!(free[0].family, Family::F01);
        assert_eq!(free[1].family, Family::F02);
        let c7 = enumerate_classes(7).unwrap();
        assert!(c7.iter().all(|c| c.r > 0 || c.k > 0));
    }

    #[test]
    fn odd_genus_forces_one_sided_ovals() {
        for c in enumerate_classes(5).unwrap() {
            assert_eq!(c.r % 2, 1, "{c}");
            assert!(c.k_minus >= 1, "{c}");
            assert!(matches!(c.family, Family::F4 | Family::F5), "{c}");
        }
    }

    /// Independent oracle: brute force over all tuples within the bounds.
    fn brute_force(g: u64) -> Vec<InvolutionClass> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for h in 0..=(g + 2) {
                for r in 0..=(g + 2) {
                    for kp in 0..=(g + 2) / 2 {
                        for km in 0..=(g + 2) / 2 {
                            for q in [false, true] {
                                for sep in [false, true] {
                                    if let Ok(c) =
                                        InvolutionClass::new(family, g, h, r, kp, km, q, sep)
                                    {
                                        out.push(c);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn enumeration_matches_brute_force_oracle() {
        for g in 5..=12 {
            let fast = enumerate_classes(g).unwrap();
            let slow = brute_force(g);
            assert_eq!(fast, slow, "genus {g}");
        }
    }

    #[test]
    fn counts_are_monotone_in_g_by_two() {
        let counts: Vec<usize> = (5..=30).map(|g| enumerate_classes(g).unwrap().len()).collect();
        for i in 0..counts.len() - 2 {
            assert!(counts[i] <= counts[i + 2], "g={} vs g={}", i + 5, i + 7);
        }
    }

    #[test]
    fn blow_up_isolated_example() {
        // (g=8, r=4, k=0, eps=1, h=3) -> (g=9, r=3, k=1, k-=1, h=3)
        let s = SurgeryState {
            surface: SurfaceKind::NonOrientable { genus: 8 },
            r: 4,
            k_plus: 0,
            k_minus: 0,
            quotient: QuotientKind::NonOrientable { genus: 3 },
            reverses_orientation: None,
        };
        assert!(s.hurwitz_riemann_holds());
        let t = apply_surgery(&s, SurgeryStep::BlowUpIsolated).unwrap();
        assert_eq!(t.surface, SurfaceKind::NonOrientable { genus: 9 });
        assert_eq!((t.r, t.k(), t.k_minus), (3, 1, 1));
        assert_eq!(t.quotient, QuotientKind::NonOrientable { genus: 3 });
        assert!(t.hurwitz_riemann_holds());
        // not applicable with r = 0
        let mut s0 = s;
        s0.r = 0;
        s0.surface = SurfaceKind::NonOrientable { genus: 4 };
        assert!(apply_surgery(&s0, SurgeryStep::BlowUpIsolated).is_err());
    }

    #[test]
    fn add_handle_preserves_hurwitz_riemann() {
        let s = SurgeryState {
            surface: SurfaceKind::NonOrientable { genus: 6 },
            r: 0,
            k_plus: 1,
            k_minus: 0,
            quotient: QuotientKind::NonOrientable { genus: 3 },
            reverses_orientation: None,
        };
        assert!(s.hurwitz_riemann_holds());
        let t = apply_surgery(&s, SurgeryStep::AddHandle).unwrap();
        assert!(t.hurwitz_riemann_holds());
        assert_eq!(t.surface.effective_genus(), 8);
        assert_eq!(t.k_plus, 2);
    }

    #[test]
    fn rotation_blowups_reproduce_f1() {
        // rotation base with q=0, then h 2-orbit blow-ups gives F1 invariants
        let c = InvolutionClass::new(Family::F1, 10, 3, 6, 0, 0, false, false).unwrap();
        assert!(recipe_matches(&c).unwrap());
    }

    #[test]
    fn all_recipes_reproduce_their_classes() {
        for g in 5..=16 {
            for c in enumerate_classes(g).unwrap() {
                assert!(recipe_matches(&c).unwrap(), "recipe mismatch for {c}");
            }
        }
    }

    #[test]
    fn canonical_epimorphisms_are_admissible() {
        for g in 5..=14 {
            for c in enumerate_classes(g).unwrap() {
                let sig = c.signature();
                let theta = c.canonical_epimorphism();
                assert!(is_admissible(&sig, &theta).unwrap(), "{c}");
                assert_eq!(crate::nec::hurwitz_riemann_genus(&sig, 2).unwrap(), c.g, "{c}");
            }
        }
    }

    #[test]
    fn class_text_roundtrip() {
        for g in [5, 6, 9, 12] {
            for c in enumerate_classes(g).unwrap() {
                let text = c.to_string();
                assert_eq!(InvolutionClass::parse(&text).unwrap(), c, "{text}");
            }
        }
        // the HR identity rejects inconsistent tuples
        assert!(InvolutionClass::parse("F4[g=9,h=1,r=1,k=2,k+=1,k-=1,Q=nonor,sep=false]").is_err());
        let ok = "F4[g=9,h=3,r=1,k=2,k+=1,k-=1,Q=nonor,sep=false]";
        assert_eq!(InvolutionClass::parse(ok).unwrap().to_string(), ok);
    }
}
