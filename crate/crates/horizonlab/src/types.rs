use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Complex spectral parameter with its conjugated companion
/// `tilde = -sigma + i(d-1)/2`, fixed here to d = 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaParam {
    pub sigma: C64,
}

impl SigmaParam {
    pub fn new(sigma: C64) -> Result<Self> {
        if !sigma.re.is_finite() || !sigma.im.is_finite() {
            return Err(Error::NonFinite("SigmaParam"));
        }
        Ok(SigmaParam { sigma })
    }

    pub fn real(s: f64) -> Self {
        SigmaParam { sigma: c64(s, 0.0) }
    }

    pub fn tilde_sigma(&self) -> C64 {
        -self.sigma + c64(0.0, 0.5)
    }

    /// Distance from i*sigma to the nearest integer (indicial resonance gauge).
    pub fn indicial_margin(&self) -> f64 {
        let is = I * self.sigma;
        let r = is.re.round();
        ((is.re - r).powi(2) + is.im.powi(2)).sqrt()
    }

    pub fn negated(&self) -> Self {
        SigmaParam { sigma: -self.sigma }
    }
}

/// Angular Fourier mode on the circle fibers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeIndex(pub i32);

impl ModeIndex {
    pub fn abs(&self) -> i32 {
        self.0.abs()
    }
}

/// Regions of the boundary sphere; the horizons are the two circles v = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionLabel {
    CapPlus,
    Belt,
    CapMinus,
    HorizonPlus,
    HorizonMinus,
}

/// The two singular conormal branches a solution may carry at a horizon.
/// `PlusI0` denotes (v+i0)^{-i sigma}, `MinusI0` denotes (v-i0)^{-i sigma}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    PlusI0,
    MinusI0,
}

/// Sink data corresponds to the (v+i0)^{-i sigma} branch; flipping this single
/// constant flips the sign convention of every downstream projector.
pub const SINK_BRANCH: Branch = Branch::PlusI0;

/// Which horizon. `Plus` separates CapPlus from the belt at theta = pi/4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Horizon {
    Plus,
    Minus,
}

/// Propagator choice: the subset I of {+,-} naming the horizons at which
/// full regularity is imposed (both singular branches killed there for
/// one-element I; one branch killed at each horizon otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchLabel {
    pub plus: bool,
    pub minus: bool,
}

impl BranchLabel {
    pub const FEYNMAN: BranchLabel = BranchLabel { plus: false, minus: false };
    pub const ANTI_FEYNMAN: BranchLabel = BranchLabel { plus: true, minus: true };
    pub const ADVANCED: BranchLabel = BranchLabel { plus: true, minus: false };
    pub const RETARDED: BranchLabel = BranchLabel { plus: false, minus: true };

    pub const ALL: [BranchLabel; 4] = [
        BranchLabel::FEYNMAN,
        BranchLabel::ANTI_FEYNMAN,
        BranchLabel::ADVANCED,
        BranchLabel::RETARDED,
    ];

    pub fn complement(&self) -> BranchLabel {
        BranchLabel { plus: !self.plus, minus: !self.minus }
    }

    pub fn name(&self) -> &'static str {
        match (self.plus, self.minus) {
            (false, false) => "feynman",
            (true, true) => "antifeynman",
            (true, false) => "advanced",
            (false, true) => "retarded",
        }
    }
}

/// theta -> v = cos(2 theta); horizons at pi/4 and 3pi/4.
pub fn v_of_theta(theta: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::DomainError(format!("theta = {theta} outside [0, pi]")));
    }
    Ok((2.0 * theta).cos())
}

/// Hemisphere sign: +1 for theta < pi/2, -1 for theta > pi/2.
pub fn region_of(v: f64, hemisphere: i32) -> RegionLabel {
    if v == 0.0 {
        if hemisphere >= 0 {
            RegionLabel::HorizonPlus
        } else {
            RegionLabel::HorizonMinus
        }
    } else if v < 0.0 {
        RegionLabel::Belt
    } else if hemisphere >= 0 {
        RegionLabel::CapPlus
    } else {
        RegionLabel::CapMinus
    }
}

pub fn region_of_theta(theta: f64) -> RegionLabel {
    use std::f64::consts::FRAC_PI_4;
    let q1 = FRAC_PI_4;
    let q3 = 3.0 * FRAC_PI_4;
    if theta < q1 {
        RegionLabel::CapPlus
    } else if theta == q1 {
        RegionLabel::HorizonPlus
    } else if theta < q3 {
        RegionLabel::Belt
    } else if theta == q3 {
        RegionLabel::HorizonMinus
    } else {
        RegionLabel::CapMinus
    }
}
