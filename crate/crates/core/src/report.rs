//! Invariant report assembly, link comparison, table reproduction and the
//! density sequence: the engine behind the CLI commands.

use serde::Serialize;

use crate::algebra::{Cyclo40, LaurentPoly};
use crate::bracket::{
    jones_class5_with_limit, jones_tilde_with_limit, kauffman_bracket_with_limit, JonesClass5,
    VAbs,
};
use crate::catalog;
use crate::colorings::col_n;
use crate::diagram::LinkDiagram;
use crate::error::Error;
use crate::kauffman::{
    f_at_special_with_limit, f_set, kauffman_lambda_with_limit, FSetInvariant,
};
use crate::notation::{parse_spec, serialize_spec, LinkSpec};

/// Limits for the two skein engines.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub bracket: usize,
    pub kauffman: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { bracket: crate::bracket::DEFAULT_BRACKET_LIMIT, kauffman: crate::kauffman::DEFAULT_KAUFFMAN_LIMIT }
    }
}

impl Limits {
    pub fn with_cap(cap: usize) -> Limits {
        Limits { bracket: cap, kauffman: cap }
    }
}

fn fmt6(x: f64) -> String {
    // six significant digits, as printed in the reference tables
    if x == 0.0 {
        return "0.000000".to_string();
    }
    let digits = (6 - 1 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.digits$}")
}

/// The full invariant report of a link.
#[derive(Serialize)]
pub struct InvariantReport {
    pub spec: String,
    pub components: usize,
    pub crossings: usize,
    pub col5: u128,
    pub col3: u128,
    pub f_special_exact: [i64; 16],
    pub f_special: String,
    pub bracket: Vec<[i64; 2]>,
    pub jones_tilde: Vec<[i64; 2]>,
    pub v_abs: String,
    pub v_abs_squared_exact: [i64; 16],
    pub class5: [[i64; 4]; 5],
    pub class5_half_shift: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kauffman_f: Option<Vec<[i64; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_f: Option<SetFReport>,
}

#[derive(Serialize)]
pub struct SetFReport {
    pub a0_zeta_power: i64,
    pub p0_zeta_power: i64,
    pub orbit: Vec<[i64; 16]>,
    pub has_real_member: bool,
}

pub struct ComputeOptions {
    pub limits: Limits,
    pub with_kauffman_poly: bool,
    /// `(i, j)`: evaluate `Set(F)` at `a0 = zeta^i`, `p0 = zeta^j`.
    pub set_f_point: Option<(i64, i64)>,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { limits: Limits::default(), with_kauffman_poly: false, set_f_point: None }
    }
}

/// Computes the report; the coloring bridge `5 F^2 = col_5` is asserted on
/// every emitted report.
pub fn compute_report(spec: &LinkSpec, opts: &ComputeOptions) -> Result<InvariantReport, Error> {
    let d = crate::build_link(spec)?;
    compute_report_for(&serialize_spec(spec), &d, opts)
}

pub fn compute_report_for(
    spec_text: &str,
    d: &LinkDiagram,
    opts: &ComputeOptions,
) -> Result<InvariantReport, Error> {
    let stats = d.stats();
    let col5 = col_n(d, 5)?;
    let col3 = col_n(d, 3)?;
    let f = f_at_special_with_limit(d, opts.limits.kauffman)?;
    let bridge = (&f * &f).scaled(5);
    assert_eq!(
        bridge,
        Cyclo40::from_int(col5 as i64),
        "coloring bridge must hold: 5 F^2 = col_5"
    );
    let bracket = kauffman_bracket_with_limit(d, opts.limits.bracket)?;
    let vt = jones_tilde_with_limit(d, opts.limits.bracket)?;
    let vabs = VAbs::from_u_poly(&vt);
    let class5 = JonesClass5::from_u_poly(&vt);
    let kauffman_f = if opts.with_kauffman_poly {
        Some(
            kauffman_lambda_with_limit(d, opts.limits.kauffman)?
                .f
                .to_triples(),
        )
    } else {
        None
    };
    let set_f = match opts.set_f_point {
        Some((i, j)) => {
            let a0 = Cyclo40::zeta_pow(i);
            let p0 = Cyclo40::zeta_pow(j);
            let inv = f_set(d, &a0, &p0, opts.limits.kauffman)?;
            Some(SetFReport {
                a0_zeta_power: i,
                p0_zeta_power: j,
                orbit: inv.orbit().iter().map(|z| z.coords()).collect(),
                has_real_member: inv.has_real_member,
            })
        }
        None => None,
    };
    Ok(InvariantReport {
        spec: spec_text.to_string(),
        components: stats.components,
        crossings: d.crossing_count(),
        col5,
        col3,
        f_special_exact: f.coords(),
        f_special: f_label(&f),
        bracket: bracket.to_pairs(),
        jones_tilde: vt.to_pairs(),
        v_abs: fmt6(vabs.value()),
        v_abs_squared_exact: vabs.squared().coords(),
        class5: *class5.vectors(),
        class5_half_shift: class5.half_shift(),
        kauffman_f,
        set_f,
    })
}

/// Friendly rendering of the special F values.
fn f_label(f: &Cyclo40) -> String {
    let sqrt5 = Cyclo40::sqrt5();
    if *f == Cyclo40::one() {
        "1".into()
    } else if *f == Cyclo40::from_int(-1) {
        "-1".into()
    } else if *f == sqrt5 {
        "sqrt5".into()
    } else if *f == sqrt5.scaled(-1) {
        "-sqrt5".into()
    } else if f.is_real() {
        fmt6(f.to_real())
    } else {
        format!("{f}")
    }
}

/// Comparison verdict: invariants can only ever distinguish.
#[derive(Serialize, Debug, PartialEq, Eq)]
pub enum CompareVerdict {
    Distinguished { by: Vec<String> },
    NotDistinguished,
}

/// Compares the 5-move invariants of two links.
pub fn compare_links(
    a: &LinkSpec,
    b: &LinkSpec,
    limits: &Limits,
) -> Result<CompareVerdict, Error> {
    let da = crate::build_link(a)?;
    let db = crate::build_link(b)?;
    let mut by = Vec::new();
    if col_n(&da, 5)? != col_n(&db, 5)? {
        by.push("col5".to_string());
    }
    let fa = f_at_special_with_limit(&da, 26)?;
    let fb = f_at_special_with_limit(&db, 26)?;
    if fa != fb {
        by.push("f_special".to_string());
    }
    let va = VAbs::from_u_poly(&jones_tilde_with_limit(&da, limits.bracket.max(30))?);
    let vb = VAbs::from_u_poly(&jones_tilde_with_limit(&db, limits.bracket.max(30))?);
    if va != vb {
        by.push("v_abs".to_string());
    }
    let ca = jones_class5_with_limit(&da, limits.bracket.max(30))?;
    let cb = jones_class5_with_limit(&db, limits.bracket.max(30))?;
    if !ca.same_class(&cb) {
        by.push("jones_class5".to_string());
    }
    if by.is_empty() {
        Ok(CompareVerdict::NotDistinguished)
    } else {
        Ok(CompareVerdict::Distinguished { by })
    }
}

/// One row of a table reproduction run.
#[derive(Serialize)]
pub struct TableRow {
    pub id: String,
    pub spec: String,
    pub f_expected: String,
    pub f_computed: String,
    pub f_pass: bool,
    pub v_expected: String,
    pub v_computed: String,
    pub v_pass: bool,
    pub member_expected: [i64; 4],
    pub member_pass: bool,
    pub pass: bool,
}

/// Recomputes the 45-row table; `only` restricts to one class id.
pub fn table41_rows(only: Option<u8>) -> Result<Vec<TableRow>, Error> {
    let mut out = Vec::new();
    for row in catalog::table41() {
        if let Some(id) = only {
            if row.id != id {
                continue;
            }
        }
        let d = crate::build_link(&row.braid)?;
        let f = f_at_special_with_limit(&d, 16)?;
        let expected_f = row.expected_f.to_cyclo();
        let vt = jones_tilde_with_limit(&d, 24)?;
        let vabs = VAbs::from_u_poly(&vt).value();
        let v_expected: f64 = row.expected_v.parse().expect("catalog V parses");
        let class = JonesClass5::from_u_poly(&vt);
        let f_pass = f == expected_f;
        let v_pass = (vabs - v_expected).abs() <= 1e-4;
        let member_pass = class.contains(&row.expected_member);
        out.push(TableRow {
            id: row.id.to_string(),
            spec: serialize_spec(&row.braid),
            f_expected: row.expected_f.label().to_string(),
            f_computed: f_label(&f),
            f_pass,
            v_expected: row.expected_v.clone(),
            v_computed: fmt6(vabs),
            v_pass,
            member_expected: row.expected_member,
            member_pass,
            pass: f_pass && v_pass && member_pass,
        });
    }
    Ok(out)
}

/// Recomputes the constructible members of the 9-crossing boxes.
pub fn table71_rows() -> Result<Vec<TableRow>, Error> {
    let boxes = catalog::box_expectations();
    let mut out = Vec::new();
    for link in catalog::named_links() {
        let Some(box_id) = &link.box_id else { continue };
        let Some(&(f_exp, v_exp, member)) = boxes.get(box_id.as_str()) else {
            continue;
        };
        let d = crate::build_link(&link.spec)?;
        let f = f_at_special_with_limit(&d, 16)?;
        let vt = jones_tilde_with_limit(&d, 24)?;
        let vabs = VAbs::from_u_poly(&vt).value();
        let class = JonesClass5::from_u_poly(&vt);
        let v_expected: f64 = v_exp.parse().expect("box V parses");
        let f_pass = f == f_exp.to_cyclo();
        let v_pass = (vabs - v_expected).abs() <= 1e-4;
        let member_pass = class.contains(&member);
        out.push(TableRow {
            id: format!("{} [box {box_id}]", link.key),
            spec: serialize_spec(&link.spec),
            f_expected: f_exp.label().to_string(),
            f_computed: f_label(&f),
            f_pass,
            v_expected: v_exp.to_string(),
            v_computed: fmt6(vabs),
            v_pass,
            member_expected: member,
            member_pass,
            pass: f_pass && v_pass && member_pass,
        });
    }
    Ok(out)
}

/// One density value `|1+t|^{k1} |1-t|^{k2}` with exact squared modulus.
#[derive(Serialize)]
pub struct DensityValue {
    pub k1: u32,
    pub k2: u32,
    pub value: String,
    #[serde(skip)]
    pub squared: Cyclo40,
    #[serde(skip)]
    value_f64: f64,
}

/// The density sequence over `0 <= k1, k2 <= kmax`, sorted by value; all
/// entries are pairwise distinct and differ from 1 except `(0, 0)`,
/// verified exactly on the squared moduli.
pub fn density_values(kmax: u32) -> Vec<DensityValue> {
    let t = Cyclo40::zeta_pow(-4);
    let one_plus = &Cyclo40::one() + &t;
    let one_minus = &Cyclo40::one() - &t;
    let np = one_plus.norm_squared();
    let nm = one_minus.norm_squared();
    let mut values = Vec::new();
    for k1 in 0..=kmax {
        for k2 in 0..=kmax {
            let squared = &np.pow(k1) * &nm.pow(k2);
            let v = squared.to_real().max(0.0).sqrt();
            values.push(DensityValue {
                k1,
                k2,
                value: fmt6(v),
                squared,
                value_f64: v,
            });
        }
    }
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            assert_ne!(
                values[i].squared, values[j].squared,
                "density values must be pairwise distinct"
            );
        }
        let is_origin = values[i].k1 == 0 && values[i].k2 == 0;
        assert_eq!(
            values[i].squared == Cyclo40::one(),
            is_origin,
            "only (0,0) gives the value 1"
        );
    }
    values.sort_by(|a, b| a.value_f64.partial_cmp(&b.value_f64).unwrap());
    values
}

/// Checks a parsed spec string; convenience for the CLI.
pub fn parse(text: &str) -> Result<LinkSpec, Error> {
    parse_spec(text)
}

/// Exposes the orbit invariant type for the CLI.
pub type SetF = FSetInvariant;

/// Closed-form pretzel Jones polynomial, re-exported for table commands.
pub fn pretzel_tilde(m: u32, s: i64) -> LaurentPoly {
    crate::montesinos::pretzel_jones_tilde(m, s)
}
