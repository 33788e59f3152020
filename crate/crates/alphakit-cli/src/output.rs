//! CSV and PPM emitters. All output is a pure function of the inputs, so
//! repeated runs produce identical bytes.

use num_complex::Complex;
use rayon::prelude::*;

use alphakit::mapping::eval_series;
use alphakit::{Point64, Policy64, Result, Spectrum64};

use crate::Eval64;

type C = Complex<f64>;

pub const CSV_HEADER: &str =
    "point_re,point_im,u_re,u_im,u_z_re,u_z_im,u_zbar_re,u_zbar_im,jacobian\n";

fn csv_row(p: C, ev: &Eval64) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}\n",
        p.re, p.im, ev.u.re, ev.u.im, ev.u_z.re, ev.u_z.im, ev.u_zbar.re, ev.u_zbar.im,
        ev.jacobian
    )
}

pub fn eval_csv(rows: &[(C, Eval64)]) -> String {
    let mut out = String::from(CSV_HEADER);
    for (p, ev) in rows {
        out.push_str(&csv_row(*p, ev));
    }
    out
}

/// Grid coordinate of cell `i` along an axis: `-1 + 2i/(n-1)`.
fn coord(i: usize, n: usize) -> f64 {
    -1.0 + 2.0 * i as f64 / (n - 1) as f64
}

/// Series evaluation over the full `n × n` grid: `None` outside the radius
/// cap. Row-major with y ascending; parallel per pixel.
pub fn render_grid(
    s: &Spectrum64,
    n: usize,
    cap: f64,
    policy: &Policy64,
) -> Result<Vec<Option<Eval64>>> {
    (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (iy, ix) = (idx / n, idx % n);
            let (x, y) = (coord(ix, n), coord(iy, n));
            if x * x + y * y > cap * cap {
                return Ok(None);
            }
            let z = Point64::from_re_im(x, y).expect("inside the disk");
            eval_series(s, z, policy).map(Some)
        })
        .collect()
}

pub fn grid_csv(n: usize, _cap: f64, grid: &[Option<Eval64>]) -> String {
    let mut out = String::from(CSV_HEADER);
    for (idx, cell) in grid.iter().enumerate() {
        if let Some(ev) = cell {
            let (iy, ix) = (idx / n, idx % n);
            out.push_str(&csv_row(C::new(coord(ix, n), coord(iy, n)), ev));
        }
    }
    out
}

/// Binary PPM (P6) of the disk: hue from arg(u), brightness from |u|
/// (clamped at 1), black outside the radius cap. Top image row is y = +1.
pub fn disk_ppm(n: usize, grid: &[Option<Eval64>]) -> Vec<u8> {
    let mut bytes = format!("P6\n{n} {n}\n255\n").into_bytes();
    for row in (0..n).rev() {
        for col in 0..n {
            let rgb = match &grid[row * n + col] {
                Some(ev) => {
                    let hue = (ev.u.arg() + std::f64::consts::PI) / (2.0 * std::f64::consts::PI);
                    let value = ev.u.norm().min(1.0);
                    hsv_to_rgb(hue.min(1.0 - f64::EPSILON), 1.0, value)
                }
                None => [0, 0, 0],
            };
            bytes.extend_from_slice(&rgb);
        }
    }
    bytes
}

/// Side length of the scatter image.
pub const SCATTER_SIZE: usize = 512;
/// Half-width of the w-plane window covered by the scatter image.
pub const SCATTER_HALF_WIDTH: f64 = 1.25;

/// Binary PPM (P6) scatter of the image points u(grid) in the w-plane:
/// black dots on white over `[-1.25, 1.25]²`.
pub fn scatter_ppm(grid: &[Option<Eval64>]) -> Vec<u8> {
    let n = SCATTER_SIZE;
    let mut pixels = vec![255u8; n * n * 3];
    for ev in grid.iter().flatten() {
        let to_px = |v: f64| -> Option<usize> {
            let t = (v + SCATTER_HALF_WIDTH) / (2.0 * SCATTER_HALF_WIDTH);
            if !(0.0..1.0).contains(&t) {
                return None;
            }
            Some((t * (n as f64 - 1.0)).round() as usize)
        };
        if let (Some(px), Some(py)) = (to_px(ev.u.re), to_px(ev.u.im)) {
            let row = n - 1 - py;
            let at = (row * n + px) * 3;
            pixels[at] = 0;
            pixels[at + 1] = 0;
            pixels[at + 2] = 0;
        }
    }
    let mut bytes = format!("P6\n{n} {n}\n255\n").into_bytes();
    bytes.extend_from_slice(&pixels);
    bytes
}

/// Standard HSV → RGB with h, s, v ∈ [0, 1).
fn hsv_to_rgb(h: f64, s: f64, v: f64) -> [u8; 3] {
    let h6 = h * 6.0;
    let i = h6.floor() as i32 % 6;
    let f = h6 - h6.floor();
    let p = v * (1.0 - s);
    let q = v * (1.0 - f * s);
    let t = v * (1.0 - (1.0 - f) * s);
    let (r, g, b) = match i {
        0 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        _ => (v, p, q),
    };
    let to_byte = |x: f64| (x.clamp(0.0, 1.0) * 255.0).round() as u8;
    [to_byte(r), to_byte(g), to_byte(b)]
}
