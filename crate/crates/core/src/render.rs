//! Deterministic SVG figures of trajectories: billiard view (folded into the
//! unit square), torus view (wrapped into the unit cell), and the unfolded
//! straight line over the integer grid.
//!
//! All geometry comes from the exact crossing enumeration; coordinates enter
//! the SVG text at a fixed precision of 12 decimal digits, so identical specs
//! produce byte-identical documents.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{line_crossings, sturmian_crossings, Number};
use crate::rational::Rational;
use crate::surd::QuadraticSurd;

/// Which picture to draw.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum View {
    /// Trajectory folded back into the square table.
    Billiard,
    /// Trajectory wrapped into the unit square torus.
    Torus,
    /// Straight line across the integer grid.
    Unfolded,
}

/// Trajectory direction for rendering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SlopeSpec {
    Rational(Rational),
    Surd(QuadraticSurd),
    Vertical,
}

/// One trajectory to draw: direction plus starting point `(x0, y0)`.
/// Torus and unfolded views conventionally start at `x0 = 0` with `y0` the
/// intercept; irrational slopes require `x0 = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trajectory {
    pub slope: SlopeSpec,
    pub start: (Rational, Rational),
}

/// A full figure specification. Identical specs render to identical bytes.
#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub view: View,
    pub trajectory: Trajectory,
    /// How many crossings (equivalently bounces) to trace; at least 1.
    pub steps: usize,
    /// Canvas size of one panel in pixels; positive.
    pub size: u32,
    /// Draw the unit grid / square border.
    pub grid: bool,
    /// Draw A/B edge labels (billiard and torus views).
    pub labels: bool,
    /// Stroke width of the trajectory in pixels.
    pub stroke: u32,
    /// Optional second trajectory, drawn as a side-by-side panel.
    pub compare: Option<Trajectory>,
}

const PRECISION: u32 = 12;

/// Fixed-precision decimal form of an exact value (12 fractional digits,
/// trailing zeros trimmed). Floor-based, hence total and deterministic.
fn decimal(n: &Number) -> String {
    let scaled = n.scaled_floor(PRECISION);
    let base = BigInt::from(10u32).pow(PRECISION);
    let negative = scaled.is_negative();
    let abs = scaled.abs();
    let int = &abs / &base;
    let frac = &abs % &base;
    let mut out = String::new();
    if negative && (!int.is_zero() || !frac.is_zero()) {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if !frac.is_zero() {
        let digits = format!("{frac:0>width$}", width = PRECISION as usize);
        let trimmed = digits.trim_end_matches('0');
        out.push('.');
        out.push_str(trimmed);
    }
    out
}

fn rational_number(r: &Rational) -> Number {
    Number::Rational(r.clone())
}

/// `x - 2 * floor(x / 2)` reflected into `[0, 1]`: the folding of the plane
/// onto the square table.
fn fold(n: &Number) -> Number {
    match n {
        Number::Rational(r) => {
            let two = Rational::from_integer(2);
            let u = &two * &(r / &two).fract();
            if u <= Rational::one() {
                Number::Rational(u)
            } else {
                Number::Rational(&two - &u)
            }
        }
        Number::Surd(s) => {
            let two = QuadraticSurd::from_integer(2);
            let half = s.mul(&QuadraticSurd::new(1, 0, 0, 2).expect("1/2")).expect("field");
            let fl = QuadraticSurd::from_integer(half.floor_int());
            let u = s.sub(&two.mul(&fl).expect("field")).expect("field");
            if u.cmp_exact(&QuadraticSurd::from_integer(1)) != std::cmp::Ordering::Greater {
                Number::Surd(u)
            } else {
                Number::Surd(two.sub(&u).expect("field"))
            }
        }
    }
}

/// `x - floor(x)` for segment-cell wrapping.
fn sub_int(n: &Number, k: &BigInt) -> Number {
    match n {
        Number::Rational(r) => Number::Rational(r - &Rational::from_integer(k.clone())),
        Number::Surd(s) => Number::Surd(s.sub_integer(k)),
    }
}

fn floor_of(n: &Number) -> BigInt {
    match n {
        Number::Rational(r) => r.floor_int(),
        Number::Surd(s) => s.floor_int(),
    }
}

fn midpoint(a: &Number, b: &Number) -> Result<Number> {
    let half = Rational::new(1, 2).expect("1/2");
    match (a, b) {
        (Number::Rational(x), Number::Rational(y)) => {
            Ok(Number::Rational(&(x + y) * &half))
        }
        _ => {
            let to_surd = |n: &Number| match n {
                Number::Rational(r) => QuadraticSurd::from_rational(r),
                Number::Surd(s) => s.clone(),
            };
            let sum = to_surd(a).add(&to_surd(b))?;
            Ok(Number::Surd(sum.mul(&QuadraticSurd::new(1, 0, 0, 2).expect("1/2"))?))
        }
    }
}

/// The planar (unfolded) vertex chain of a trajectory: start point followed
/// by each crossing point.
fn planar_points(t: &Trajectory, steps: usize) -> Result<Vec<(Number, Number)>> {
    let (x0, y0) = &t.start;
    let mut points: Vec<(Number, Number)> = vec![(rational_number(x0), rational_number(y0))];
    match &t.slope {
        SlopeSpec::Rational(s) => {
            let events = line_crossings(s, (x0, y0), steps)?;
            points.extend(events.into_iter().map(|e| (e.x, e.y)));
        }
        SlopeSpec::Surd(s) => {
            if !x0.is_zero() {
                return Err(Error::Domain(
                    "irrational-slope trajectories must start at x = 0".into(),
                ));
            }
            let events = sturmian_crossings(s, y0, steps)?;
            points.extend(events.into_iter().map(|e| (e.x, e.y)));
        }
        SlopeSpec::Vertical => {
            if x0.is_integer() {
                return Err(Error::VertexHit {
                    x: x0.clone(),
                    y: Rational::from_integer(y0.floor_int() + 1),
                });
            }
            let mut m: BigInt = y0.floor_int() + 1;
            for _ in 0..steps {
                points.push((
                    rational_number(x0),
                    Number::Rational(Rational::from_integer(m.clone())),
                ));
                m += 1;
            }
        }
    }
    Ok(points)
}

struct Panel {
    /// Polyline chains in abstract units, y up.
    chains: Vec<Vec<(Number, Number)>>,
    /// Grid lines as (x1, y1, x2, y2) in abstract units.
    grid: Vec<(Number, Number, Number, Number)>,
    /// Label text anchored at unit coordinates.
    labels: Vec<(Number, Number, &'static str)>,
    /// Extent of the panel in units.
    width: BigInt,
    height: BigInt,
}

fn int_number(k: i64) -> Number {
    Number::Rational(Rational::from_integer(k))
}

fn big_number(k: &BigInt) -> Number {
    Number::Rational(Rational::from_integer(k.clone()))
}

fn square_grid(width: &BigInt, height: &BigInt) -> Vec<(Number, Number, Number, Number)> {
    let mut lines = Vec::new();
    let mut x = BigInt::zero();
    while &x <= width {
        lines.push((big_number(&x), int_number(0), big_number(&x), big_number(height)));
        x += 1;
    }
    let mut y = BigInt::zero();
    while &y <= height {
        lines.push((int_number(0), big_number(&y), big_number(width), big_number(&y)));
        y += 1;
    }
    lines
}

fn edge_labels() -> Vec<(Number, Number, &'static str)> {
    vec![
        (
            Number::Rational(Rational::new(1, 2).expect("1/2")),
            Number::Rational(Rational::new(21, 20).expect("21/20")),
            "A",
        ),
        (
            Number::Rational(Rational::new(1, 2).expect("1/2")),
            Number::Rational(Rational::new(-1, 10).expect("-1/10")),
            "A",
        ),
        (
            Number::Rational(Rational::new(-1, 10).expect("-1/10")),
            Number::Rational(Rational::new(1, 2).expect("1/2")),
            "B",
        ),
        (
            Number::Rational(Rational::new(21, 20).expect("21/20")),
            Number::Rational(Rational::new(1, 2).expect("1/2")),
            "B",
        ),
    ]
}

fn build_panel(view: View, t: &Trajectory, steps: usize, grid: bool, labels: bool) -> Result<Panel> {
    let points = planar_points(t, steps)?;
    match view {
        View::Billiard => {
            let folded: Vec<(Number, Number)> =
                points.iter().map(|(x, y)| (fold(x), fold(y))).collect();
            Ok(Panel {
                chains: vec![folded],
                grid: if grid { square_grid(&BigInt::from(1), &BigInt::from(1)) } else { vec![] },
                labels: if labels { edge_labels() } else { vec![] },
                width: BigInt::from(1),
                height: BigInt::from(1),
            })
        }
        View::Torus => {
            // each inter-crossing segment lies inside one unit cell; shift it
            // back by the cell of its midpoint
            let mut chains = Vec::new();
            for pair in points.windows(2) {
                let (px, py) = &pair[0];
                let (qx, qy) = &pair[1];
                let cx = floor_of(&midpoint(px, qx)?);
                let cy = floor_of(&midpoint(py, qy)?);
                chains.push(vec![
                    (sub_int(px, &cx), sub_int(py, &cy)),
                    (sub_int(qx, &cx), sub_int(qy, &cy)),
                ]);
            }
            Ok(Panel {
                chains,
                grid: if grid { square_grid(&BigInt::from(1), &BigInt::from(1)) } else { vec![] },
                labels: if labels { edge_labels() } else { vec![] },
                width: BigInt::from(1),
                height: BigInt::from(1),
            })
        }
        View::Unfolded => {
            let mut width = BigInt::from(1);
            let mut height = BigInt::from(1);
            for (x, y) in &points {
                let cx = floor_of(x) + 1;
                let cy = floor_of(y) + 1;
                if cx > width {
                    width = cx;
                }
                if cy > height {
                    height = cy;
                }
            }
            Ok(Panel {
                chains: vec![points],
                grid: if grid { square_grid(&width, &height) } else { vec![] },
                labels: vec![],
                width,
                height,
            })
        }
    }
}

/// Renders the figure to a complete standalone SVG document.
pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    if spec.steps == 0 {
        return Err(Error::Domain("step count must be at least 1".into()));
    }
    if spec.size == 0 {
        return Err(Error::Domain("canvas size must be positive".into()));
    }
    let mut panels = vec![build_panel(
        spec.view,
        &spec.trajectory,
        spec.steps,
        spec.grid,
        spec.labels,
    )?];
    if let Some(second) = &spec.compare {
        panels.push(build_panel(spec.view, second, spec.steps, spec.grid, spec.labels)?);
    }

    // uniform scale: the tallest/widest panel fits a `size`-pixel box,
    // with a 1/8-unit pad around every panel
    let pad = Rational::new(1, 8).expect("1/8");
    let mut max_units = BigInt::from(1);
    for p in &panels {
        if p.width > max_units {
            max_units = p.width.clone();
        }
        if p.height > max_units {
            max_units = p.height.clone();
        }
    }
    let box_units = &Rational::from_integer(max_units) + &(&pad + &pad);
    let scale = &Rational::from_integer(BigInt::from(spec.size)) / &box_units;

    let panel_px = |p: &Panel| -> (Rational, Rational) {
        let w = &(&Rational::from_integer(p.width.clone()) + &(&pad + &pad)) * &scale;
        let h = &(&Rational::from_integer(p.height.clone()) + &(&pad + &pad)) * &scale;
        (w, h)
    };

    let gap = &Rational::from_integer(BigInt::from(spec.size)) / &Rational::from_integer(16);
    let mut total_w = Rational::zero();
    let mut total_h = Rational::zero();
    for (i, p) in panels.iter().enumerate() {
        let (w, h) = panel_px(p);
        if i > 0 {
            total_w = &total_w + &gap;
        }
        total_w = &total_w + &w;
        if h > total_h {
            total_h = h;
        }
    }

    let px = |v: &Rational| decimal(&Number::Rational(v.clone()));
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        px(&total_w),
        px(&total_h),
        px(&total_w),
        px(&total_h)
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        px(&total_w),
        px(&total_h)
    ));

    let mut offset_x = Rational::zero();
    for p in &panels {
        let (w, h) = panel_px(p);
        // unit coords -> pixels: shift by pad, flip y
        let map_x = |n: &Number| -> String {
            let v = match n {
                Number::Rational(r) => Number::Rational(&(&(r + &pad) * &scale) + &offset_x),
                Number::Surd(s) => {
                    let shifted = s
                        .add(&QuadraticSurd::from_rational(&pad))
                        .and_then(|t| t.mul(&QuadraticSurd::from_rational(&scale)))
                        .and_then(|t| t.add(&QuadraticSurd::from_rational(&offset_x)))
                        .expect("field");
                    Number::Surd(shifted)
                }
            };
            decimal(&v)
        };
        let units_h = &Rational::from_integer(p.height.clone()) + &pad;
        let map_y = |n: &Number| -> String {
            // y_px = (height + pad - y) * scale
            let v = match n {
                Number::Rational(r) => Number::Rational(&(&units_h - r) * &scale),
                Number::Surd(s) => {
                    let shifted = QuadraticSurd::from_rational(&units_h)
                        .sub(s)
                        .and_then(|t| t.mul(&QuadraticSurd::from_rational(&scale)))
                        .expect("field");
                    Number::Surd(shifted)
                }
            };
            decimal(&v)
        };

        for (x1, y1, x2, y2) in &p.grid {
            svg.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#9e9e9e\" stroke-width=\"1\"/>\n",
                map_x(x1),
                map_y(y1),
                map_x(x2),
                map_y(y2)
            ));
        }
        for chain in &p.chains {
            let pts: Vec<String> = chain
                .iter()
                .map(|(x, y)| format!("{},{}", map_x(x), map_y(y)))
                .collect();
            svg.push_str(&format!(
                "<polyline points=\"{}\" fill=\"none\" stroke=\"#1a237e\" stroke-width=\"{}\"/>\n",
                pts.join(" "),
                spec.stroke
            ));
        }
        for (x, y, text) in &p.labels {
            svg.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" fill=\"#b71c1c\">{}</text>\n",
                map_x(x),
                map_y(y),
                text
            ));
        }
        offset_x = &(&offset_x + &w) + &gap;
        let _ = h;
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
