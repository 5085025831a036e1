//! Stable text formats for sparse rectangles.
//!
//! CSV mirrors the visual layout: one line per row, empty cells as empty
//! fields, signed decimal integers, no header. JSON is a canonical object
//! `{"m":…,"n":…,"k":…,"s":…,"cells":[{"row":…,"col":…,"value":…},…]}`
//! with 0-based indices and cells sorted by `(row, col)`, so equal arrays
//! serialize to identical bytes. The text form is for human eyes only.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::types::{Params, SparseRectangle};

/// Parse failures for the on-disk formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Csv { line: usize, detail: String },
    Json(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Csv { line, detail } => write!(f, "csv line {line}: {detail}"),
            FormatError::Json(detail) => write!(f, "json: {detail}"),
        }
    }
}

impl std::error::Error for FormatError {}

/// The `m`, `n`, `k`, `s` header carried by the JSON form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub s: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonRect {
    m: usize,
    n: usize,
    k: usize,
    s: usize,
    cells: Vec<JsonCell>,
}

#[derive(Serialize, Deserialize)]
struct JsonCell {
    row: usize,
    col: usize,
    value: i32,
}

/// One CSV line per row, empty fields for empty cells, trailing newline.
pub fn to_csv(rect: &SparseRectangle) -> String {
    let mut out = String::new();
    for row in 0..rect.rows() {
        let line: Vec<String> = (0..rect.cols())
            .map(|col| rect.get(row, col).map_or(String::new(), |v| v.to_string()))
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Parses the CSV form; the grid shape comes from the line and field
/// counts, which must be uniform.
pub fn from_csv(text: &str) -> Result<SparseRectangle, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.is_empty() {
        return Err(FormatError::Csv {
            line: 0,
            detail: "empty input".into(),
        });
    }
    let cols = lines[0].split(',').count();
    let mut rect = SparseRectangle::new(lines.len(), cols);
    for (r, line) in lines.iter().enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != cols {
            return Err(FormatError::Csv {
                line: r + 1,
                detail: format!("{} fields, first line has {cols}", fields.len()),
            });
        }
        for (c, field) in fields.iter().enumerate() {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let value: i32 = field.parse().map_err(|_| FormatError::Csv {
                line: r + 1,
                detail: format!("bad integer {field:?}"),
            })?;
            rect.set(r, c, value).expect("fresh cell in fresh grid");
        }
    }
    Ok(rect)
}

/// The canonical JSON form; cells are already sorted by `(row, col)`.
pub fn to_json(rect: &SparseRectangle, params: &Params) -> String {
    let doc = JsonRect {
        m: rect.rows(),
        n: rect.cols(),
        k: params.k,
        s: params.s,
        cells: rect
            .iter()
            .map(|(row, col, value)| JsonCell { row, col, value })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serialization cannot fail")
}

/// Parses the JSON form into the grid and its header.
pub fn from_json(text: &str) -> Result<(SparseRectangle, Header), FormatError> {
    let doc: JsonRect =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let mut rect = SparseRectangle::new(doc.m, doc.n);
    for cell in &doc.cells {
        rect.set(cell.row, cell.col, cell.value)
            .map_err(|e| FormatError::Json(e.to_string()))?;
    }
    Ok((
        rect,
        Header {
            m: doc.m,
            n: doc.n,
            k: doc.k,
            s: doc.s,
        },
    ))
}

/// Right-aligned grid with `.` for empty cells; output only.
pub fn to_text(rect: &SparseRectangle) -> String {
    let width = rect
        .iter()
        .map(|(_, _, v)| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in 0..rect.rows() {
        let line: Vec<String> = (0..rect.cols())
            .map(|col| match rect.get(row, col) {
                Some(v) => format!("{v:>width$}"),
                None => format!("{:>width$}", "."),
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::fixed_smr_4_12;
    use proptest::prelude::*;

    #[test]
    fn csv_shape_and_empty_cells() {
        let rect = fixed_smr_4_12();
        let csv = to_csv(&rect);
        let first = csv.lines().next().unwrap();
        assert_eq!(first, "1,16,-17,-12,12,,,-6,6,-3,3,");
        let parsed = from_csv(&csv).unwrap();
        assert_eq!(parsed, rect);
    }

    #[test]
    fn csv_rejects_ragged_and_junk() {
        assert!(matches!(from_csv("1,2\n3"), Err(FormatError::Csv { line: 2, .. })));
        assert!(matches!(from_csv("1,x"), Err(FormatError::Csv { line: 1, .. })));
        assert!(from_csv("").is_err());
    }

    #[test]
    fn json_is_canonical() {
        let rect = SparseRectangle::from_rows(&[vec![1, -1], vec![2, -2], vec![-3, 3]]);
        let params = Params::relaxed(3, 2, 2, 3);
        let json = to_json(&rect, &params);
        assert_eq!(
            json,
            "{\"m\":3,\"n\":2,\"k\":2,\"s\":3,\"cells\":[\
             {\"row\":0,\"col\":0,\"value\":1},{\"row\":0,\"col\":1,\"value\":-1},\
             {\"row\":1,\"col\":0,\"value\":2},{\"row\":1,\"col\":1,\"value\":-2},\
             {\"row\":2,\"col\":0,\"value\":-3},{\"row\":2,\"col\":1,\"value\":3}]}"
        );
        let (parsed, header) = from_json(&json).unwrap();
        assert_eq!(parsed, rect);
        assert_eq!(header, Header { m: 3, n: 2, k: 2, s: 3 });
    }

    #[test]
    fn json_rejects_double_cells() {
        let bad = "{\"m\":1,\"n\":1,\"k\":1,\"s\":1,\"cells\":[\
                   {\"row\":0,\"col\":0,\"value\":1},{\"row\":0,\"col\":0,\"value\":2}]}";
        assert!(matches!(from_json(bad), Err(FormatError::Json(_))));
    }

    #[test]
    fn text_marks_empty_cells() {
        let mut rect = SparseRectangle::new(1, 3);
        rect.set(0, 1, -12).unwrap();
        assert_eq!(to_text(&rect), "  . -12   .\n");
    }

    fn arb_rect() -> impl Strategy<Value = SparseRectangle> {
        ((1usize..6, 1usize..8)).prop_flat_map(|(rows, cols)| {
            proptest::collection::btree_map(
                ((0..rows), (0..cols)),
                -999i32..999,
                0..rows * cols,
            )
            .prop_map(move |cells| {
                let mut rect = SparseRectangle::new(rows, cols);
                for ((r, c), v) in cells {
                    rect.set(r, c, v).unwrap();
                }
                rect
            })
        })
    }

    proptest! {
        #[test]
        fn csv_round_trip(rect in arb_rect()) {
            prop_assert_eq!(from_csv(&to_csv(&rect)).unwrap(), rect);
        }

        #[test]
        fn json_round_trip(rect in arb_rect()) {
            // Any header works for the cell round trip.
            let params = Params::relaxed(1, 1, 1, 1);
            let (parsed, _) = from_json(&to_json(&rect, &params)).unwrap();
            prop_assert_eq!(parsed, rect);
        }
    }
}
