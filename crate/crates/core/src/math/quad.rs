//! Adaptive one-dimensional quadrature on a finite interval.
//!
//! A 21-point Kronrod rule nested over 10-point Gauss supplies the
//! per-panel estimate and error; panels are bisected worst-error-first
//! until the global error meets the requested tolerance. The Kronrod rule
//! integrates polynomials through degree 31 exactly, which the tests pin.

use crate::error::{Error, Result};

/// Tolerances and budget for [`integrate_1d`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Absolute error target.
    pub abs_tol: f64,
    /// Relative error target (scaled by the running estimate).
    pub rel_tol: f64,
    /// Panel-split budget before giving up.
    pub max_subdivisions: u32,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: u32) -> Result<Self> {
        let spec = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::Domain("QuadratureSpec.abs_tol must be > 0"));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain("QuadratureSpec.rel_tol must be > 0"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("QuadratureSpec.max_subdivisions must be >= 1"));
        }
        Ok(())
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 512,
        }
    }
}

/// Converged quadrature estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub subdivisions: u32,
}

// 21-point Kronrod abscissae (positive half) and weights, with the
// embedded 10-point Gauss weights. Standard QUADPACK QK21 constants.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Single Kronrod panel: returns (estimate, error bound).
fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[10];
    let mut res_abs = res_kronrod.abs();

    let mut values = [0.0f64; 20];
    for j in 0..10 {
        let abscissa = half * XGK[j];
        let f_lo = f(center - abscissa);
        let f_hi = f(center + abscissa);
        values[2 * j] = f_lo;
        values[2 * j + 1] = f_hi;
        let fsum = f_lo + f_hi;
        res_kronrod += WGK[j] * fsum;
        res_abs += WGK[j] * (f_lo.abs() + f_hi.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * fsum;
        }
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((values[2 * j] - mean).abs() + (values[2 * j + 1] - mean).abs());
    }

    let raw_err = ((res_kronrod - res_gauss) * half).abs();
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();

    // QUADPACK error rescaling: sharpen the raw Gauss/Kronrod difference
    // and floor it at the round-off level of the panel.
    let mut err = raw_err;
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }

    (res_kronrod * half, err)
}

/// Adaptive estimate of the integral of `f` over [a, b].
///
/// Converges when the summed panel error drops below
/// `max(abs_tol, rel_tol * |estimate|)`; exhausting `max_subdivisions`
/// first yields [`Error::QuadratureNonConvergence`] carrying the partial
/// estimate.
pub fn integrate_1d<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    spec.validate()?;
    if !(a < b) {
        return Err(Error::Domain("integrate_1d requires a < b"));
    }

    struct Panel {
        a: f64,
        b: f64,
        value: f64,
        error: f64,
    }

    let (value, error) = kronrod_panel(&f, a, b);
    let mut panels = vec![Panel {
        a,
        b,
        value,
        error,
    }];

    for split in 0..spec.max_subdivisions {
        let total_value: f64 = panels.iter().map(|p| p.value).sum();
        let total_error: f64 = panels.iter().map(|p| p.error).sum();
        let tolerance = spec.abs_tol.max(spec.rel_tol * total_value.abs());
        if total_error <= tolerance {
            return Ok(QuadResult {
                value: total_value,
                abs_error: total_error,
                subdivisions: split,
            });
        }

        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.error.total_cmp(&y.error))
            .map(|(i, _)| i)
            .expect("panel list never empty");
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        let (lv, le) = kronrod_panel(&f, a, mid);
        let (rv, re) = kronrod_panel(&f, mid, b);
        panels.push(Panel {
            a,
            b: mid,
            value: lv,
            error: le,
        });
        panels.push(Panel {
            a: mid,
            b,
            value: rv,
            error: re,
        });
    }

    let total_value: f64 = panels.iter().map(|p| p.value).sum();
    let total_error: f64 = panels.iter().map(|p| p.error).sum();
    let tolerance = spec.abs_tol.max(spec.rel_tol * total_value.abs());
    if total_error <= tolerance {
        return Ok(QuadResult {
            value: total_value,
            abs_error: total_error,
            subdivisions: spec.max_subdivisions,
        });
    }
    Err(Error::QuadratureNonConvergence {
        estimate: total_value,
        abs_error: total_error,
        subdivisions: spec.max_subdivisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_sine_over_half_period() {
        let r = integrate_1d(f64::sin, 0.0, std::f64::consts::PI, &QuadratureSpec::default())
            .unwrap();
        assert!((r.value - 2.0).abs() <= 1e-10);
    }

    #[test]
    fn integrates_constant() {
        let r = integrate_1d(|_| 1.0, 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn polynomials_up_to_rule_degree_are_exact() {
        // Kronrod 21 integrates degree <= 31 exactly; check a spread of
        // degrees on an interval that is not symmetric about zero.
        for &d in &[0u32, 1, 2, 5, 10, 17, 24, 31] {
            let exact = (2.0f64.powi(d as i32 + 1) - (-1.0f64).powi(d as i32 + 1)) / (d as f64 + 1.0);
            let r = integrate_1d(|x| x.powi(d as i32), -1.0, 2.0, &QuadratureSpec::default())
                .unwrap();
            assert!(
                (r.value - exact).abs() <= 1e-12 * exact.abs().max(1.0),
                "degree {d}: {} vs {exact}",
                r.value
            );
        }
    }

    #[test]
    fn truncated_gamma_two() {
        // int_0^inf x e^{-x} dx = 1, truncated far in the tail.
        let r = integrate_1d(|x| x * (-x).exp(), 0.0, 60.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn reports_non_convergence_with_partial_result() {
        let spec = QuadratureSpec::new(1e-12, 1e-12, 1).unwrap();
        // Needle the single allowed split cannot resolve.
        let err = integrate_1d(|x: f64| (-(x * 300.0).powi(2)).exp(), -1.0, 1.0, &spec)
            .unwrap_err();
        match err {
            Error::QuadratureNonConvergence { estimate, .. } => {
                assert!(estimate.is_finite());
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(integrate_1d(|x| x, 1.0, 1.0, &QuadratureSpec::default()).is_err());
        assert!(integrate_1d(|x| x, 2.0, 1.0, &QuadratureSpec::default()).is_err());
    }

    #[test]
    fn rejects_invalid_spec() {
        assert!(QuadratureSpec::new(0.0, 1e-10, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, 0.0, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, 1e-10, 0).is_err());
    }
}
