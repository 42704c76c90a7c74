//! The facet-list file format:
//!
//! ```json
//! { "name": "cyclic-4-9", "facets": [[0, 1, 2, 3], [0, 1, 2, 8]] }
//! ```
//!
//! Vertex ids are non-negative decimal integers. Writing is deterministic:
//! one facet per line, facets in canonical order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetFile {
    name: String,
    facets: Vec<Vec<Vertex>>,
}

/// A complex together with its file name field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedComplex {
    pub name: String,
    pub complex: SimplicialComplex,
}

/// Parses a facet document. `origin` is used in error messages.
pub fn parse_facet_list(text: &str, origin: &str) -> Result<NamedComplex> {
    let doc: FacetFile = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let reason = full.strip_suffix(&suffix).unwrap_or(&full);
        Error::Parse {
            path: origin.to_string(),
            message: format!("line {}, column {}: {reason}", e.line(), e.column()),
        }
    })?;
    let complex = SimplicialComplex::from_faces(doc.facets).map_err(|e| Error::Parse {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    Ok(NamedComplex {
        name: doc.name,
        complex,
    })
}

pub fn read_facet_file(path: &Path) -> Result<NamedComplex> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_facet_list(&text, &path.display().to_string())
}

pub fn format_facet_list(name: &str, complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    out.push_str("{\n  \"name\": ");
    out.push_str(&serde_json::to_string(name).expect("strings serialize"));
    out.push_str(",\n  \"facets\": [");
    for (i, facet) in complex.facets().iter().enumerate() {
        out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
        for (j, v) in facet.vertices().iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            write!(out, "{v}").expect("writing to a String");
        }
        out.push(']');
    }
    out.push_str("\n  ]\n}\n");
    out
}

pub fn write_facet_file(path: &Path, name: &str, complex: &SimplicialComplex) -> Result<()> {
    fs::write(path, format_facet_list(name, complex)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
