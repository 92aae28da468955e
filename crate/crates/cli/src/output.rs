//! Tidy (mu, nu, x, quantity, value) output for plotting.

use std::path::Path;

use lommel::Error;

pub struct Row {
    pub mu: f64,
    pub nu: f64,
    pub x: f64,
    pub quantity: String,
    pub value: f64,
}

impl Row {
    pub fn new(mu: f64, nu: f64, x: f64, quantity: &str, value: f64) -> Self {
        Self {
            mu,
            nu,
            x,
            quantity: quantity.to_string(),
            value,
        }
    }
}

#[derive(Clone, Copy)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn from_path(path: &Path) -> Result<Self, Error> {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Ok(Format::Json),
            Some(e) if e.eq_ignore_ascii_case("csv") => Ok(Format::Csv),
            _ => Err(Error::Domain(format!(
                "--out must end in .json or .csv, got {}",
                path.display()
            ))),
        }
    }
}

/// Empty cell for quantities that do not depend on a parameter.
fn cell(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else {
        v.to_string()
    }
}

pub fn write_rows(rows: &[Row], path: &Path, format: Format) -> Result<(), Error> {
    let text = match format {
        Format::Csv => {
            let mut s = String::from("mu,nu,x,quantity,value\n");
            for r in rows {
                s += &format!("{},{},{},{},{:e}\n", cell(r.mu), cell(r.nu), r.x, r.quantity, r.value);
            }
            s
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "mu": r.mu, "nu": r.nu, "x": r.x, "quantity": r.quantity, "value": r.value
                    })
                })
                .collect();
            serde_json::to_string_pretty(&v)? + "\n"
        }
    };
    std::fs::write(path, text)?;
    Ok(())
}
