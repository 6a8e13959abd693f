//! Local length functions on balls from rotation representations.
//!
//! Each generator is sent to a rotation of `SO(3)` by angle `epsilon`;
//! a word maps to the product rotation and its length is the rotation angle
//! `θ ∈ [0, π]`. Angles obey the triangle inequality with equality on squares
//! while `θ ≤ π/2`, so with `R·ε ≤ π/2` this is a local length function on
//! the ball `B(R)`, positive whenever the representation is faithful there.
//!
//! Quaternions are used instead of 3×3 matrices: renormalization is cheap and
//! the angle comes straight out of `atan2`. Products renormalize every step
//! to bound drift.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use core::ops::Mul;

use rand::Rng;

use crate::fmath;
use crate::length::{LengthFlags, LengthFn};
use crate::words::{enumerate_ball, reduced_product_len, Alphabet, Word};
use crate::{seed, Error, Limits};

/// A unit quaternion `w + xi + yj + zk`, acting on `R³` as a rotation.
/// `q` and `−q` act identically; the angle accessor respects that.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitQuaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    /// Build from raw components; rejects vectors further than `1e-9` from
    /// unit norm, then renormalizes exactly.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<UnitQuaternion, Error> {
        let norm = fmath::sqrt(w * w + x * x + y * y + z * z);
        if !norm.is_finite() || fmath::abs(norm - 1.0) > 1e-9 {
            return Err(Error::NotNormalized);
        }
        Ok(UnitQuaternion { w, x, y, z }.renormalized())
    }

    /// Rotation by `angle` around `axis` (normalized internally).
    ///
    /// Panics if the axis is zero or non-finite.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> UnitQuaternion {
        let norm = fmath::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
        assert!(norm.is_finite() && norm > 0.0, "axis must be non-zero");
        let (s, c) = (fmath::sin(angle / 2.0), fmath::cos(angle / 2.0));
        UnitQuaternion {
            w: c,
            x: s * axis[0] / norm,
            y: s * axis[1] / norm,
            z: s * axis[2] / norm,
        }
        .renormalized()
    }

    fn renormalized(self) -> UnitQuaternion {
        let norm = fmath::sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z);
        UnitQuaternion {
            w: self.w / norm,
            x: self.x / norm,
            y: self.y / norm,
            z: self.z / norm,
        }
    }

    /// The inverse rotation.
    pub fn conjugate(self) -> UnitQuaternion {
        UnitQuaternion {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Rotation angle in `[0, π]`, well-defined on the double cover.
    pub fn angle(self) -> f64 {
        let v = fmath::sqrt(self.x * self.x + self.y * self.y + self.z * self.z);
        2.0 * fmath::atan2(v, fmath::abs(self.w))
    }

    pub fn scalar(self) -> f64 {
        self.w
    }

    pub fn vector(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;

    fn mul(self, r: UnitQuaternion) -> UnitQuaternion {
        UnitQuaternion {
            w: self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            x: self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            y: self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            z: self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        }
        .renormalized()
    }
}

/// Uniform point on the unit sphere.
pub fn random_axis<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..2.0 * PI);
    let r = fmath::sqrt((1.0 - z * z).max(0.0));
    [r * fmath::cos(phi), r * fmath::sin(phi), z]
}

/// Random unit quaternion via a random axis and angle; covers the whole
/// group (not Haar-uniform, which the checks here do not need).
pub fn random_unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> UnitQuaternion {
    let axis = random_axis(rng);
    let angle = rng.random_range(0.0..2.0 * PI);
    UnitQuaternion::from_axis_angle(axis, angle)
}

/// Epsilon policy for representation constructors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Epsilon {
    /// `ε = π / (2R)`, which guarantees `θ ≤ π/2` on `B(R)` by
    /// subadditivity.
    Auto,
    Fixed(f64),
}

/// A generator-to-rotation assignment defining a local length on `B(R)`.
#[derive(Clone, Debug)]
pub struct RotationRep {
    alphabet: Alphabet,
    images: Vec<UnitQuaternion>,
    epsilon: f64,
    radius: usize,
}

impl RotationRep {
    /// Seeded representation with every generator rotating by the same angle
    /// about an independently random axis. Safe mode: rejects `R·ε > π/2`.
    pub fn random(
        alphabet: &Alphabet,
        radius: usize,
        epsilon: Epsilon,
        seed_value: u64,
    ) -> Result<RotationRep, Error> {
        let eps = match epsilon {
            Epsilon::Auto => FRAC_PI_2 / radius.max(1) as f64,
            Epsilon::Fixed(e) => e,
        };
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::EpsilonTooLarge);
        }
        if radius as f64 * eps > FRAC_PI_2 + 1e-12 {
            return Err(Error::EpsilonTooLarge);
        }
        let mut rng = seed::rng(seed_value);
        let axes: Vec<[f64; 3]> = (0..alphabet.rank()).map(|_| random_axis(&mut rng)).collect();
        Self::from_axes(alphabet, &axes, radius, eps)
    }

    /// Representation from explicit axes; does not enforce the `R·ε ≤ π/2`
    /// budget (degenerate and oversized configurations are allowed so their
    /// failure modes can be observed).
    pub fn from_axes(
        alphabet: &Alphabet,
        axes: &[[f64; 3]],
        radius: usize,
        epsilon: f64,
    ) -> Result<RotationRep, Error> {
        if axes.len() != alphabet.rank() {
            return Err(Error::DimensionMismatch);
        }
        if !(epsilon > 0.0 && epsilon.is_finite() && epsilon <= PI) {
            return Err(Error::EpsilonTooLarge);
        }
        let images = axes
            .iter()
            .map(|&axis| UnitQuaternion::from_axis_angle(axis, epsilon))
            .collect();
        Ok(RotationRep {
            alphabet: alphabet.clone(),
            images,
            epsilon,
            radius,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn generator_image(&self, gen: usize) -> UnitQuaternion {
        self.images[gen]
    }

    /// The product rotation of a word; a homomorphism up to floating-point
    /// drift.
    pub fn represent(&self, x: &Word) -> UnitQuaternion {
        let mut q = UnitQuaternion::IDENTITY;
        for &l in x.letters() {
            let img = self.images[l.generator()];
            q = q * if l.is_inverse() { img.conjugate() } else { img };
        }
        q
    }

    /// Rotation angle of a word, regardless of the ball radius.
    pub fn angle_of(&self, x: &Word) -> f64 {
        self.represent(x).angle()
    }

    /// The induced local length function on `B(radius)`.
    pub fn local_length(&self) -> LocalLengthFn {
        LocalLengthFn { rep: self.clone() }
    }
}

/// The angle length `x ↦ θ(U_x)` restricted to the ball `B(R)`.
#[derive(Clone, Debug)]
pub struct LocalLengthFn {
    rep: RotationRep,
}

impl LocalLengthFn {
    pub fn rep(&self) -> &RotationRep {
        &self.rep
    }

    pub fn radius(&self) -> usize {
        self.rep.radius
    }

    pub fn eval(&self, x: &Word) -> Result<f64, Error> {
        if x.len() > self.rep.radius {
            return Err(Error::DomainExceeded {
                len: x.len(),
                radius: self.rep.radius,
            });
        }
        Ok(self.rep.angle_of(x))
    }

    /// View as a generic [`LengthFn`] with the ball as domain.
    pub fn as_length_fn(&self) -> LengthFn {
        let rep = self.rep.clone();
        let name = alloc::format!("so3(R={},eps={})", rep.radius, rep.epsilon);
        LengthFn::new(
            name,
            LengthFlags {
                symmetric: true,
                triangle: true,
                conjugation_invariant: true,
                ..LengthFlags::default()
            },
            move |x| Ok(rep.angle_of(x)),
        )
        .with_domain(self.rep.radius)
    }
}

/// Build a seeded local length on `B(radius)`.
pub fn make_local_length(
    radius: usize,
    epsilon: Epsilon,
    seed_value: u64,
    alphabet: &Alphabet,
) -> Result<LocalLengthFn, Error> {
    Ok(RotationRep::random(alphabet, radius, epsilon, seed_value)?.local_length())
}

/// Exhaustive checks of a local length over its ball.
#[derive(Clone, Debug)]
pub struct BallCheckReport {
    pub words: usize,
    /// Number of `(x, y)` pairs with `xy` back in the ball.
    pub triangle_pairs: u64,
    /// Pairs violating `θ(xy) ≤ θ(x) + θ(y)` beyond tolerance.
    pub triangle_violations: u64,
    pub max_triangle_excess: f64,
    pub triangle_witness: Option<(Word, Word)>,
    /// Words with `x²` in the ball and `θ(x) ≤ π/2`.
    pub doubling_checked: u64,
    pub max_doubling_deviation: f64,
    pub doubling_witness: Option<Word>,
    pub positivity_threshold: f64,
    /// Non-identity words whose angle is at or below the threshold.
    pub positivity_failures: Vec<Word>,
    pub max_angle: f64,
    pub tolerance: f64,
}

impl BallCheckReport {
    pub fn triangle_ok(&self) -> bool {
        self.triangle_violations == 0
    }

    pub fn doubling_ok(&self) -> bool {
        self.max_doubling_deviation <= self.tolerance
    }

    pub fn positivity_ok(&self) -> bool {
        self.positivity_failures.is_empty()
    }
}

/// Exhaustively check the triangle inequality, doubling equality, and
/// positivity of a local length over its ball.
///
/// Degenerate representations (e.g. both generators on one axis) report
/// positivity failures rather than erroring.
pub fn ball_check(
    f: &LocalLengthFn,
    positivity_threshold: f64,
    limits: &Limits,
) -> Result<BallCheckReport, Error> {
    let rep = f.rep();
    let radius = rep.radius();
    let ball = enumerate_ball(radius, rep.alphabet(), limits)?;
    let tolerance = 1e-9;

    let quats: Vec<UnitQuaternion> = ball.iter().map(|x| rep.represent(x)).collect();
    let angles: Vec<f64> = quats.iter().map(|q| q.angle()).collect();

    let mut report = BallCheckReport {
        words: ball.len(),
        triangle_pairs: 0,
        triangle_violations: 0,
        max_triangle_excess: 0.0,
        triangle_witness: None,
        doubling_checked: 0,
        max_doubling_deviation: 0.0,
        doubling_witness: None,
        positivity_threshold,
        positivity_failures: Vec::new(),
        max_angle: 0.0,
        tolerance,
    };

    for (i, x) in ball.iter().enumerate() {
        report.max_angle = report.max_angle.max(angles[i]);
        if !x.is_identity() && angles[i] <= positivity_threshold {
            report.positivity_failures.push(x.clone());
        }
        // doubling equality θ(x²) = 2θ(x) while θ(x) ≤ π/2
        if reduced_product_len(x.letters(), x.letters()) <= radius
            && angles[i] <= FRAC_PI_2 + 1e-12
        {
            report.doubling_checked += 1;
            let sq = quats[i] * quats[i];
            let dev = fmath::abs(sq.angle() - 2.0 * angles[i]);
            if dev > report.max_doubling_deviation {
                report.max_doubling_deviation = dev;
                report.doubling_witness = Some(x.clone());
            }
        }
        for (j, y) in ball.iter().enumerate() {
            if reduced_product_len(x.letters(), y.letters()) > radius {
                continue;
            }
            report.triangle_pairs += 1;
            let xy_angle = (quats[i] * quats[j]).angle();
            let excess = xy_angle - angles[i] - angles[j];
            if excess > report.max_triangle_excess {
                report.max_triangle_excess = excess;
            }
            if excess > tolerance {
                report.triangle_violations += 1;
                if report.triangle_witness.is_none() {
                    report.triangle_witness = Some((x.clone(), y.clone()));
                }
            }
        }
    }
    Ok(report)
}

/// The decay statistic `θ([a,b]) / (θ_a + θ_b)` for a seeded rank-2
/// representation at generator angle `epsilon`.
///
/// For small `epsilon` the commutator angle scales like `ε²`, so the ratio
/// decays linearly in `ε` as the local lengths flatten out.
pub fn commutator_ratio(epsilon: f64, seed_value: u64) -> Result<f64, Error> {
    if !(epsilon > 0.0 && epsilon <= PI / 4.0) {
        return Err(Error::EpsilonTooLarge);
    }
    let alphabet = Alphabet::new(2).expect("rank 2");
    let mut rng = seed::rng(seed_value);
    let axes = [random_axis(&mut rng), random_axis(&mut rng)];
    let rep = RotationRep::from_axes(&alphabet, &axes, 4, epsilon)?;
    let a = Word::parse("a", &alphabet).expect("generator");
    let b = Word::parse("b", &alphabet).expect("generator");
    let comm = a.commutator(&b).expect("same alphabet");
    Ok(rep.angle_of(&comm) / (rep.angle_of(&a) + rep.angle_of(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(text, &ab()).unwrap()
    }

    #[test]
    fn angle_examples() {
        assert_eq!(UnitQuaternion::IDENTITY.angle(), 0.0);
        let q = UnitQuaternion::from_axis_angle([0.3, -0.2, 0.9], 0.4);
        assert!(fmath::abs(q.angle() - 0.4) < 1e-12);
        let half_turn = UnitQuaternion::new(0.0, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(half_turn.angle(), PI);
        assert!(UnitQuaternion::new(0.9, 0.1, 0.0, 0.0).is_err());
    }

    #[test]
    fn angle_respects_double_cover() {
        let q = UnitQuaternion::from_axis_angle([0.0, 0.0, 1.0], 0.7);
        let minus_q = UnitQuaternion::new(-q.scalar(), -q.vector()[0], -q.vector()[1], -q.vector()[2])
            .unwrap();
        assert!(fmath::abs(q.angle() - minus_q.angle()) < 1e-12);
    }

    #[test]
    fn represent_examples() {
        let rep = RotationRep::random(&ab(), 6, Epsilon::Auto, 1).unwrap();
        assert_eq!(rep.represent(&w("")).angle(), 0.0);
        assert_eq!(rep.represent(&w("aA")).angle(), 0.0);
        let prod = rep.generator_image(0) * rep.generator_image(1);
        let via_word = rep.represent(&w("ab"));
        assert!(fmath::abs(prod.angle() - via_word.angle()) < 1e-12);
    }

    #[test]
    fn represent_is_homomorphism() {
        let rep = RotationRep::random(&ab(), 8, Epsilon::Auto, 13).unwrap();
        let mut rng = seed::rng(17);
        for _ in 0..100 {
            let x = crate::words::sample_word(&mut rng, 6, &ab());
            let y = crate::words::sample_word(&mut rng, 6, &ab());
            let xy = x.multiply(&y).unwrap();
            let direct = rep.represent(&xy).angle();
            let composed = (rep.represent(&x) * rep.represent(&y)).angle();
            assert!(fmath::abs(direct - composed) < 1e-12);
        }
    }

    #[test]
    fn auto_epsilon_formula() {
        let f = make_local_length(8, Epsilon::Auto, 3, &ab()).unwrap();
        assert!(fmath::abs(f.rep().epsilon() - PI / 16.0) < 1e-15);
        assert_eq!(f.eval(&w("")).unwrap(), 0.0);
        assert!(matches!(
            f.eval(&w("ababababa")),
            Err(Error::DomainExceeded { .. })
        ));
        assert!(matches!(
            make_local_length(8, Epsilon::Fixed(0.5), 3, &ab()),
            Err(Error::EpsilonTooLarge)
        ));
    }

    #[test]
    fn angle_triangle_inequality_random() {
        let mut rng = seed::rng(29);
        for _ in 0..10_000 {
            let p = random_unit_quaternion(&mut rng);
            let q = random_unit_quaternion(&mut rng);
            assert!((p * q).angle() <= p.angle() + q.angle() + 1e-9);
        }
    }

    #[test]
    fn angle_doubling_and_inverse() {
        let mut rng = seed::rng(31);
        for _ in 0..1000 {
            let axis = random_axis(&mut rng);
            let theta = rng.random_range(0.0..=FRAC_PI_2);
            let q = UnitQuaternion::from_axis_angle(axis, theta);
            assert!(fmath::abs((q * q).angle() - 2.0 * q.angle()) < 1e-9);
            assert!(fmath::abs(q.conjugate().angle() - q.angle()) < 1e-15);
        }
    }

    #[test]
    fn conjugation_invariance_of_angle() {
        let rep = RotationRep::random(&ab(), 12, Epsilon::Auto, 37).unwrap();
        let mut rng = seed::rng(41);
        for _ in 0..200 {
            let g = crate::words::sample_word(&mut rng, 4, &ab());
            let x = crate::words::sample_word(&mut rng, 4, &ab());
            let conj = g.conjugate(&x).unwrap();
            assert!(fmath::abs(rep.angle_of(&conj) - rep.angle_of(&x)) < 1e-12);
        }
    }

    #[test]
    fn ball_check_r4_is_clean() {
        let f = make_local_length(4, Epsilon::Auto, 5, &ab()).unwrap();
        let report = ball_check(&f, 1e-6, &Limits::default()).unwrap();
        assert_eq!(report.words, 161);
        assert!(report.triangle_ok());
        assert!(report.doubling_ok());
        assert!(report.positivity_ok());
        assert!(report.max_angle <= FRAC_PI_2 + 1e-9);
    }

    #[test]
    fn degenerate_rep_reports_positivity_failures() {
        // both generators rotate about the same axis: commutators act
        // trivially, so positivity must fail without crashing
        let axes = [[0.0, 0.0, 1.0], [0.0, 0.0, 1.0]];
        let rep = RotationRep::from_axes(&ab(), &axes, 4, 0.3).unwrap();
        let report = ball_check(&rep.local_length(), 1e-6, &Limits::default()).unwrap();
        assert!(!report.positivity_failures.is_empty());
    }

    #[test]
    fn commutator_ratio_small_angle() {
        // orthogonal axes: commutator angle ~ ε², ratio ~ ε/2
        let alphabet = ab();
        let axes = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
        let a = w("a");
        let b = w("b");
        let comm = a.commutator(&b).unwrap();
        for eps in [0.01, 0.005] {
            let rep = RotationRep::from_axes(&alphabet, &axes, 4, eps).unwrap();
            let ratio = rep.angle_of(&comm) / (2.0 * eps);
            assert!(
                fmath::abs(ratio - eps / 2.0) <= 0.2 * (eps / 2.0),
                "ratio {ratio} too far from {}",
                eps / 2.0
            );
        }
    }

    #[test]
    fn commutator_ratio_decays_linearly() {
        let r1 = commutator_ratio(0.1, 77).unwrap();
        let r2 = commutator_ratio(0.01, 77).unwrap();
        let quotient = r1 / r2;
        assert!((8.0..=12.0).contains(&quotient), "quotient {quotient}");
        // identical axes commute
        let alphabet = ab();
        let axes = [[0.0, 1.0, 0.0], [0.0, 1.0, 0.0]];
        let rep = RotationRep::from_axes(&alphabet, &axes, 4, 0.2).unwrap();
        let comm = w("a").commutator(&w("b")).unwrap();
        assert!(rep.angle_of(&comm) < 1e-12);
    }
}
