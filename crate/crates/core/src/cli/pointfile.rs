//! Comma-separated point files: one point per line, `#` lines ignored.

use std::path::Path;

use thiserror::Error;

use crate::geometry::Point;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PointFileError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Parses point rows. Blank lines and lines starting with `#` are skipped;
/// every other row must have the arity of the first one.
pub fn parse_points(text: &str) -> Result<Vec<Point>, PointFileError> {
    let mut points: Vec<Point> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let coords =
            parse_coords(trimmed).map_err(|message| PointFileError::Parse { line, message })?;
        if let Some(first) = points.first() {
            if first.dim() != coords.len() {
                return Err(PointFileError::Parse {
                    line,
                    message: format!("expected {} values, found {}", first.dim(), coords.len()),
                });
            }
        }
        let point = Point::new(coords).map_err(|e| PointFileError::Parse {
            line,
            message: e.to_string(),
        })?;
        points.push(point);
    }
    Ok(points)
}

pub fn read_point_file(path: &Path) -> Result<Vec<Point>, PointFileError> {
    let text = std::fs::read_to_string(path).map_err(|e| PointFileError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_points(&text)
}

/// Parses `"1.5, 2,3e-1"` into finite values.
pub fn parse_coords(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|field| {
            let field = field.trim();
            let value: f64 = field
                .parse()
                .map_err(|_| format!("cannot parse '{field}' as a number"))?;
            if value.is_finite() {
                Ok(value)
            } else {
                Err(format!("value '{field}' is not finite"))
            }
        })
        .collect()
}
