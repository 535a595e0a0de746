//! ASCII and SVG renderings of lattice paths.
//!
//! Steps are drawn with the displacements `a ↦ (+1,+1)`, `b ↦ (+1,−1)` and
//! `c ↦ (+1,0)`. Rendering is a pure function of the word and cell size, so
//! identical inputs give byte-identical output.

use dyckdiv::{TriStep, TriWord};
use std::fmt::Write;

/// The vertices the path visits, starting at the origin.
pub fn path_points(word: &TriWord) -> Vec<(i64, i64)> {
    let mut points = Vec::with_capacity(word.len() + 1);
    let mut height = 0i64;
    points.push((0, 0));
    for (i, step) in word.steps().iter().enumerate() {
        height += step.rise();
        points.push((i as i64 + 1, height));
    }
    points
}

/// Mountain-profile ASCII art: `/` for a rise, `\` for a fall, `_` for a
/// level step, one column per step.
pub fn ascii(word: &TriWord) -> String {
    // Each step occupies one row band: a rise from h covers [h, h+1], a fall
    // to h covers [h, h+1], and a level step at height h is drawn as the
    // floor of band [h, h+1].
    let mut cells = Vec::with_capacity(word.len());
    let mut height = 0i64;
    for step in word.steps() {
        let (band, glyph) = match step {
            TriStep::Up => {
                let band = height;
                height += 1;
                (band, '/')
            }
            TriStep::Down => {
                height -= 1;
                (height, '\\')
            }
            TriStep::Flat => (height, '_'),
        };
        cells.push((band, glyph));
    }

    let min_band = cells.iter().map(|&(b, _)| b).min().unwrap_or(0);
    let max_band = cells.iter().map(|&(b, _)| b).max().unwrap_or(0);
    let rows = (max_band - min_band + 1) as usize;
    let mut grid = vec![vec![' '; word.len()]; rows];
    for (column, &(band, glyph)) in cells.iter().enumerate() {
        let row = (max_band - band) as usize;
        grid[row][column] = glyph;
    }

    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// A minimal SVG document: a unit grid drawn with `line` elements and the
/// path as a single `polyline` whose points are the lattice coordinates.
pub fn svg(word: &TriWord, cell_size: u32) -> String {
    let points = path_points(word);
    let width = word.len() as i64;
    let max_h = points.iter().map(|&(_, y)| y).max().unwrap_or(0).max(1);
    let min_h = points.iter().map(|&(_, y)| y).min().unwrap_or(0).min(0);
    let span = max_h - min_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        width as u64 * cell_size as u64,
        span as u64 * cell_size as u64,
        width,
        span
    );
    // Flip the y axis so the path coordinates below are in math orientation.
    let _ = writeln!(out, "<g transform=\"translate(0,{max_h}) scale(1,-1)\">");
    for x in 0..=width {
        let _ = writeln!(
            out,
            "<line x1=\"{x}\" y1=\"{min_h}\" x2=\"{x}\" y2=\"{max_h}\" stroke=\"#cccccc\" stroke-width=\"0.02\"/>"
        );
    }
    for y in min_h..=max_h {
        let _ = writeln!(
            out,
            "<line x1=\"0\" y1=\"{y}\" x2=\"{width}\" y2=\"{y}\" stroke=\"#cccccc\" stroke-width=\"0.02\"/>"
        );
    }
    let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{x},{y}")).collect();
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"0.08\" points=\"{}\"/>",
        coords.join(" ")
    );
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
