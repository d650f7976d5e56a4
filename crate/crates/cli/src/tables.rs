use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;

use qhopf::bundle::{dagger, make_ket, matmul};
use qhopf::classical::{calculus_report, spectra_report, structure_constants_report, ClassicalItem};
use qhopf::config::check_cap;
use qhopf::gauge::{projector_curvature, verify_master_relation, MasterRow};
use qhopf::hodge::{render_half, spectrum3, spectrum_gauged, spectrum_sphere, HodgeParams, SpectrumRow};
use qhopf::uq::{casimir_eigenvalue, casimir_left, casimir_right, pw_basis};
use qhopf::{winding_cap, AlgElem, Rat, ScalarQ};

/// `"3/2"`, `"2"` or `"1.5"` to twice the value.
pub fn parse_half(s: &str) -> std::result::Result<i64, String> {
    let bad = || format!("{:?} is not a nonnegative half-integer", s);
    let r = if let Some((whole, frac)) = s.split_once('.') {
        match frac.trim_end_matches('0') {
            "" => whole.parse::<Rat>().map_err(|_| bad())?,
            "5" => format!("{}/2", 2 * whole.parse::<i64>().map_err(|_| bad())? + 1).parse::<Rat>().map_err(|_| bad())?,
            _ => return Err(bad()),
        }
    } else {
        s.parse::<Rat>().map_err(|_| bad())?
    };
    let twice = &r * &Rat::int(2);
    match twice.to_integer() {
        Some(k) if k >= 0 => Ok(k),
        _ => Err(bad()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpectrumKind {
    Total,
    Sphere,
    Gauged,
}

#[derive(Serialize)]
pub struct SpectrumTable {
    pub kind: &'static str,
    pub n: i64,
    pub jmax: String,
    pub alpha: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s0: Option<String>,
    pub rows: Vec<SpectrumRow>,
}

fn at(lambda: &ScalarQ, s0: Option<&Rat>) -> Option<String> {
    s0.map(|s| match lambda.eval_at(s) {
        Ok(v) => v.to_string(),
        Err(e) => format!("pole ({})", e),
    })
}

fn row(n: i64, j2: i64, lambda: ScalarQ, s0: Option<&Rat>) -> SpectrumRow {
    SpectrumRow { n, j: render_half(j2), multiplicity: j2 + 1, lambda_at_q: at(&lambda, s0), lambda: lambda.to_string() }
}

pub fn spectrum(kind: SpectrumKind, n: i64, j2max: i64, alpha: &Rat, s0: Option<&Rat>) -> Result<SpectrumTable> {
    let p = HodgeParams::classical(alpha.clone())?;
    check_cap(n, winding_cap())?;
    let mut rows = Vec::new();
    match kind {
        SpectrumKind::Sphere => {
            if n != 0 {
                bail!("the sphere spectrum has no winding index; got --n {}", n);
            }
            for j in 0..=j2max / 2 {
                rows.push(row(0, 2 * j, spectrum_sphere(j, &p)?, s0));
            }
        }
        SpectrumKind::Total | SpectrumKind::Gauged => {
            if j2max < n.abs() {
                bail!("jmax = {} is below |n|/2 = {}", render_half(j2max), render_half(n.abs()));
            }
            let mut j2 = n.abs();
            while j2 <= j2max {
                let lam = if kind == SpectrumKind::Total { spectrum3(n, j2, &p)? } else { spectrum_gauged(n, j2, &p)? };
                rows.push(row(n, j2, lam, s0));
                j2 += 2;
            }
        }
    }
    let name = match kind {
        SpectrumKind::Total => "total",
        SpectrumKind::Sphere => "sphere",
        SpectrumKind::Gauged => "gauged",
    };
    Ok(SpectrumTable { kind: name, n, jmax: render_half(j2max), alpha: alpha.to_string(), s0: s0.map(Rat::to_string), rows })
}

#[derive(Serialize)]
pub struct MasterVerdict {
    pub holds: bool,
    pub checked: usize,
    pub rows: Vec<MasterRow>,
}

#[derive(Serialize)]
pub struct GaugedReport {
    pub spectrum: SpectrumTable,
    pub master_relation: MasterVerdict,
}

#[derive(Serialize)]
pub struct GaugedCsvRow {
    pub n: i64,
    pub j: String,
    pub multiplicity: i64,
    pub lambda: String,
    pub lambda_at_q: String,
    pub master_relation: bool,
}

impl GaugedReport {
    pub fn pass(&self) -> bool {
        self.master_relation.holds
    }

    pub fn csv_rows(&self) -> Vec<GaugedCsvRow> {
        let rows = &self.master_relation.rows;
        self.spectrum
            .rows
            .iter()
            .map(|r| {
                let ok = rows.iter().filter(|m| render_half(m.j2) == r.j).all(|m| m.relation && m.eigenvalue);
                GaugedCsvRow {
                    n: r.n,
                    j: r.j.clone(),
                    multiplicity: r.multiplicity,
                    lambda: r.lambda.clone(),
                    lambda_at_q: r.lambda_at_q.clone().unwrap_or_default(),
                    master_relation: ok,
                }
            })
            .collect()
    }
}

pub fn gauged(n: i64, j2max: i64, alpha: &Rat, s0: Option<&Rat>) -> Result<GaugedReport> {
    let spectrum = spectrum(SpectrumKind::Gauged, n, j2max, alpha, s0)?;
    let p = HodgeParams::classical(alpha.clone())?;
    let rows = verify_master_relation(n, j2max, &p)?;
    let holds = rows.iter().all(|r| r.relation && r.eigenvalue);
    Ok(GaugedReport { spectrum, master_relation: MasterVerdict { holds, checked: rows.len(), rows } })
}

#[derive(Serialize)]
pub struct ProjectorChecks {
    pub normalized: bool,
    pub idempotent: bool,
    pub self_adjoint: bool,
    pub entries_in_l0: bool,
    pub curvature: bool,
}

#[derive(Serialize)]
pub struct ProjectorReport {
    pub n: i64,
    pub ket: Vec<String>,
    pub projector: Vec<Vec<String>>,
    pub checks: ProjectorChecks,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct EntryRow {
    pub row: usize,
    pub col: usize,
    pub entry: String,
}

impl ProjectorReport {
    pub fn csv_rows(&self) -> Vec<EntryRow> {
        let mut out = Vec::new();
        for (i, r) in self.projector.iter().enumerate() {
            for (j, e) in r.iter().enumerate() {
                out.push(EntryRow { row: i, col: j, entry: e.clone() });
            }
        }
        out
    }
}

pub fn projector(n: i64) -> Result<ProjectorReport> {
    let ket = make_ket(n)?;
    let p = ket.projector();
    let pc = projector_curvature(n)?;
    let checks = ProjectorChecks {
        normalized: ket.norm() == AlgElem::one(),
        idempotent: matmul(&p, &p) == p,
        self_adjoint: dagger(&p) == p,
        entries_in_l0: p.iter().flatten().all(|x| x.is_in(0)),
        curvature: pc.left == pc.expected && pc.right == pc.expected,
    };
    let pass = checks.normalized && checks.idempotent && checks.self_adjoint && checks.entries_in_l0 && checks.curvature;
    Ok(ProjectorReport {
        n,
        ket: ket.comps.iter().map(|x| x.to_string()).collect(),
        projector: p.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        checks,
        pass,
    })
}

#[derive(Serialize)]
pub struct BoxEntry {
    pub t: usize,
    pub r: usize,
    pub element: String,
    pub left_eigen: bool,
    pub right_eigen: bool,
}

#[derive(Serialize)]
pub struct PeterWeylReport {
    pub p: i64,
    pub casimir: String,
    pub entries: Vec<BoxEntry>,
    pub pass: bool,
}

pub fn peter_weyl(p: i64) -> Result<PeterWeylReport> {
    if p < 0 {
        bail!("p must be nonnegative, got {}", p);
    }
    let lam = casimir_eigenvalue(p);
    let mut entries = Vec::new();
    for (t, row) in pw_basis(p)?.iter().enumerate() {
        for (r, w) in row.iter().enumerate() {
            let target = w.scale(&lam);
            entries.push(BoxEntry { t, r, element: w.to_string(), left_eigen: casimir_left(w) == target, right_eigen: casimir_right(w) == target });
        }
    }
    let pass = entries.iter().all(|e| e.left_eigen && e.right_eigen);
    Ok(PeterWeylReport { p, casimir: lam.to_string(), entries, pass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassicalCheck {
    StructureConstants,
    Spectra,
    Calculus,
}

#[derive(Serialize)]
pub struct ClassicalReport {
    pub check: &'static str,
    pub items: Vec<ClassicalItem>,
    pub pass: bool,
}

pub fn classical(check: ClassicalCheck, alpha: &Rat) -> Result<ClassicalReport> {
    let (name, items) = match check {
        ClassicalCheck::StructureConstants => ("structure-constants", structure_constants_report()),
        ClassicalCheck::Calculus => ("calculus", calculus_report()),
        ClassicalCheck::Spectra => ("spectra", spectra_report(3.min(winding_cap()), 3, alpha)?),
    };
    let pass = items.iter().all(|i| i.ok);
    Ok(ClassicalReport { check: name, items, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integers() {
        assert_eq!(parse_half("3/2"), Ok(3));
        assert_eq!(parse_half("2"), Ok(4));
        assert_eq!(parse_half("1.5"), Ok(3));
        assert_eq!(parse_half("0"), Ok(0));
        assert!(parse_half("1/3").is_err());
        assert!(parse_half("-1").is_err());
        assert!(parse_half("x").is_err());
    }

    #[test]
    fn sphere_rows() {
        let t = spectrum(SpectrumKind::Sphere, 0, 4, &Rat::one(), Some(&Rat::one())).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.rows[0].lambda, "0");
        // -2qν[1][2] with ν = 1/2 is -2 at q = 1
        assert_eq!(t.rows[1].lambda_at_q.as_deref(), Some("-2"));
        assert!(spectrum(SpectrumKind::Sphere, 1, 4, &Rat::one(), None).is_err());
    }

    #[test]
    fn index_constraints() {
        assert!(spectrum(SpectrumKind::Total, 3, 1, &Rat::one(), None).is_err());
        assert!(spectrum(SpectrumKind::Total, 0, 0, &Rat::new(-1, 1), None).is_err());
        let t = spectrum(SpectrumKind::Total, 0, 0, &Rat::one(), None).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].lambda, "0");
    }
}
