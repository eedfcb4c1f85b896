use std::fmt::Write as _;

use clap::ValueEnum;
use num_complex::Complex64;
use serde_json::json;

use paravec::ga::{gamma5, Algebra};
use paravec::reps::{dirac_rep, pauli_rep, quat_rep, DiracKind};

#[derive(Clone, Copy, ValueEnum)]
pub enum RepName {
    /// Pauli matrices for Cl(3,0).
    Cl30,
    /// 2×2 quaternionic matrices for Cl(1,3).
    Cl13,
    /// Dirac matrices in the standard basis.
    DiracStd,
    /// Dirac matrices in the chiral basis.
    DiracWeyl,
}

fn real(x: f64) -> String {
    // normalizes -0
    format!("{}", x + 0.0)
}

fn complex(z: Complex64) -> String {
    match (z.re, z.im) {
        (re, 0.0) => real(re),
        (0.0, im) => match im {
            1.0 => "i".into(),
            -1.0 => "-i".into(),
            _ => format!("{}i", real(im)),
        },
        (re, im) if im < 0.0 => format!("{}-{}i", real(re), real(-im)),
        (re, im) => format!("{}+{}i", real(re), real(im)),
    }
}

/// Generator label and its image as rows of formatted entries.
fn images(name: RepName) -> Vec<(String, Vec<Vec<String>>)> {
    let rows = |m: paravec::ComplexMatrix| -> Vec<Vec<String>> {
        m.row_iter().map(|r| r.iter().map(|&z| complex(z)).collect()).collect()
    };
    match name {
        RepName::Cl30 => Algebra::Cl30
            .labels()
            .iter()
            .map(|&l| (Algebra::Cl30.symbol(l), rows(pauli_rep(&Algebra::Cl30.generator(l)).expect("Cl(3,0)"))))
            .collect(),
        RepName::Cl13 => Algebra::Cl13
            .labels()
            .iter()
            .map(|&l| {
                let q = quat_rep(&Algebra::Cl13.generator(l)).expect("real Cl(1,3)");
                let entries = (0..2).map(|r| (0..2).map(|c| q.get(r, c).to_string()).collect()).collect();
                (Algebra::Cl13.symbol(l), entries)
            })
            .collect(),
        RepName::DiracStd | RepName::DiracWeyl => {
            let kind = if matches!(name, RepName::DiracStd) { DiracKind::Standard } else { DiracKind::Weyl };
            let mut out: Vec<_> = Algebra::Cl13
                .labels()
                .iter()
                .map(|&l| {
                    (Algebra::Cl13.symbol(l), rows(dirac_rep(&Algebra::Cl13.generator(l), kind).expect("Cl(1,3)")))
                })
                .collect();
            out.push(("γ5".into(), rows(dirac_rep(&gamma5(), kind).expect("Cl(1,3)"))));
            out
        }
    }
}

/// Aligned text table of the generator images, or their JSON form.
pub fn render(name: RepName, as_json: bool) -> String {
    let images = images(name);
    if as_json {
        let doc: Vec<_> = images.iter().map(|(g, m)| json!({ "generator": g, "matrix": m })).collect();
        return serde_json::to_string_pretty(&doc).expect("strings serialize") + "\n";
    }
    let mut out = String::new();
    let width = images.iter().flat_map(|(_, m)| m.iter().flatten()).map(|e| e.chars().count()).max().unwrap_or(1);
    for (k, (generator, matrix)) in images.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "{generator} =");
        for row in matrix {
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            let _ = writeln!(out, "  [ {} ]", cells.join("  "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_format() {
        assert_eq!(complex(Complex64::new(-0.0, 0.0)), "0");
        assert_eq!(complex(Complex64::new(0.0, -1.0)), "-i");
        assert_eq!(complex(Complex64::new(0.5, -2.0)), "0.5-2i");
        assert_eq!(complex(Complex64::new(1.0, 0.0)), "1");
    }

    #[test]
    fn standard_gamma0_is_diagonal() {
        let (label, m) = &images(RepName::DiracStd)[0];
        assert_eq!(label, "γ0");
        let diag: Vec<&str> = (0..4).map(|k| m[k][k].as_str()).collect();
        assert_eq!(diag, ["1", "1", "-1", "-1"]);
    }
}
