use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};
use solitary_core::bounds::{self, CurveClass};
use solitary_core::certify::{certify_construction, certify_finite_count, CertifyOptions, Region};
use solitary_core::dessins::{bigonal_counts, cover_counts, family_bigonal, family_genus, to_svg};
use solitary_core::error::Error;
use solitary_core::geom::io as geom_io;
use solitary_core::patchwork::realize::realize;
use solitary_core::patchwork::{exact_construction, Construction};
use solitary_core::poly::SparseBivariate;

use crate::{BoundsArgs, CertifyArgs, Certification, DessinArgs, Family, Format, Surface, SubdivideArgs};

/// Degrees certified end to end unless `--force-large` is given.
const DEFAULT_MAX_K: i64 = 4;

pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Partial report still worth printing.
    pub output: Option<String>,
}

type Outcome = Result<String, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parameter(_)
            | Error::Format(_)
            | Error::NonPositiveT(_)
            | Error::NotAPower { .. }
            | Error::ZeroPolynomial => 2,
            Error::Inconclusive(_) | Error::ScheduleExhausted(_) | Error::Unsupported(_) => 3,
            Error::Degenerate(_)
            | Error::NotATiling(_)
            | Error::EdgeMismatch { .. }
            | Error::OddFatPoint { .. }
            | Error::QuadrantMismatch { .. }
            | Error::ZeroVertexCoefficient(_)
            | Error::Irregular(_)
            | Error::BlockMismatch(_) => 4,
        };
        Failure { code, message: e.to_string(), output: None }
    }
}

fn parameter(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into(), output: None }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: 1, message: format!("{}: {e}", path.display()), output: None }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| io_failure(&path, e))
}

pub fn table(format: Format) -> Outcome {
    let rows = bounds::known_table();
    match format {
        Format::Json => Ok(pretty(&serde_json::to_value(&rows).expect("rows serialize"))),
        Format::Csv => {
            let label = |p: bounds::Provenance| serde_json::to_value(p).expect("enum serializes").as_str().unwrap_or("").to_string();
            let mut out = String::from("k,upper,lower,upper_provenance,lower_provenance\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.k,
                    r.upper,
                    r.lower,
                    label(r.upper_provenance),
                    label(r.lower_provenance)
                ));
            }
            Ok(out)
        }
    }
}

fn required(v: Option<i64>, flag: &str) -> Result<i64, Failure> {
    v.ok_or_else(|| parameter(format!("missing -{flag}")))
}

pub fn bounds(a: &BoundsArgs) -> Outcome {
    let mut m = Map::new();
    match a.surface {
        Surface::P2 => {
            let k = required(a.k, "k")?;
            if k < 1 {
                return Err(parameter(format!("half degree k = {k} must be at least 1")));
            }
            m.insert("petrovsky_upper".into(), json!(bounds::petrovsky_upper(k)));
            if let Some(g) = a.g {
                let class = CurveClass::plane(k, g)?;
                m.insert("genus_upper".into(), json!(bounds::genus_upper_cp2(k, g)?));
                m.insert("general_upper".into(), json!(class.general_upper()));
            }
            if let Some(row) = bounds::known_table().into_iter().find(|r| r.k == k) {
                m.insert("known_upper".into(), json!(row.upper));
                m.insert("known_lower".into(), json!(row.lower));
            }
        }
        Surface::Hirzebruch => {
            let (n, aa, b) = (required(a.n, "n")?, required(a.a, "a")?, required(a.b, "b")?);
            m.insert("hirzebruch_upper".into(), json!(bounds::hirzebruch_upper(n, aa, b, a.genus_base)?));
            m.insert("within_hypothesis".into(), json!(bounds::hirzebruch_within_hypothesis(aa, b)));
            if let Some(g) = a.g {
                let class = CurveClass::ruled(n, a.genus_base, aa, b, g)?;
                m.insert(
                    "hirzebruch_upper_genus".into(),
                    json!(bounds::hirzebruch_upper_genus(n, aa, b, a.genus_base, g)?),
                );
                m.insert("general_upper".into(), json!(class.general_upper()));
            }
        }
        Surface::Ellipsoid => {
            let mm = required(a.m, "m")?;
            let upper = bounds::ellipsoid_upper(mm)?;
            m.insert("ellipsoid_upper".into(), json!(upper));
            if let Some(exact) = bounds::ellipsoid_exact_small(mm) {
                m.insert("exact".into(), json!(exact));
                m.insert("gap".into(), json!(upper - exact));
            }
            if let Some(g) = a.g {
                m.insert("ellipsoid_upper_genus".into(), json!(bounds::ellipsoid_upper_genus(mm, g)?));
            }
        }
    }
    Ok(pretty(&Value::Object(m)))
}

fn options(cert: &Certification) -> CertifyOptions {
    CertifyOptions { allow_high_degree: cert.force_large, ..CertifyOptions::default() }
}

fn construction_json(k: i64, c: &Construction) -> Value {
    json!({
        "k": k,
        "predicted": c.predicted,
        "ledger": c.ledger,
        "viro": c.viro.to_json(),
    })
}

/// Certifies a construction and writes the realized curve and certificate.
fn certify_built(k: i64, c: &Construction, cert: &Certification, summary: &mut Map<String, Value>) -> Result<(), Failure> {
    match certify_construction(c, cert.t_depth, &options(cert)) {
        Ok(certificate) => {
            summary.insert("certified".into(), json!(true));
            summary.insert("count".into(), json!(certificate.count));
            if let Some(dir) = &cert.out {
                let t = certificate.t_used.clone().ok_or_else(|| parameter("certificate without t"))?;
                let curve = realize(c, &t)?.curve();
                write(dir, "polynomial.json", &pretty(&curve.to_json()))?;
                write(dir, "certificate.json", &pretty(&certificate.to_json()))?;
            }
            Ok(())
        }
        Err(e) => {
            summary.insert("certified".into(), json!(false));
            let mut f = Failure::from(e);
            if k > DEFAULT_MAX_K {
                f.message.push_str(&format!(" (k = {k})"));
            }
            f.output = Some(pretty(&Value::Object(summary.clone())));
            Err(f)
        }
    }
}

pub fn construct(k: i64, cert: &Certification) -> Outcome {
    let c = exact_construction(k)?;
    let mut summary = Map::new();
    summary.insert("k".into(), json!(k));
    summary.insert("predicted".into(), json!(c.predicted));
    if let Some(dir) = &cert.out {
        write(dir, "construction.json", &pretty(&construction_json(k, &c)))?;
        write(dir, "subdivision.json", &pretty(&geom_io::to_json(&c.subdivision)))?;
        write(dir, "subdivision.svg", &geom_io::to_svg(&c.subdivision))?;
    }
    if k > DEFAULT_MAX_K && !cert.force_large {
        eprintln!("notice: certification skipped for k = {k}; pass --force-large to attempt it");
        summary.insert("certified".into(), Value::Null);
    } else {
        certify_built(k, &c, cert, &mut summary)?;
    }
    Ok(pretty(&Value::Object(summary)))
}

pub fn certify(a: &CertifyArgs) -> Outcome {
    if let Some(k) = a.k {
        if k > DEFAULT_MAX_K && !a.cert.force_large {
            return Err(parameter(format!("certifying k = {k} > {DEFAULT_MAX_K} needs --force-large")));
        }
        let c = exact_construction(k)?;
        let mut summary = Map::new();
        summary.insert("k".into(), json!(k));
        summary.insert("predicted".into(), json!(c.predicted));
        certify_built(k, &c, &a.cert, &mut summary)?;
        return Ok(pretty(&Value::Object(summary)));
    }
    let path = a.path.as_ref().ok_or_else(|| parameter("give a polynomial file or -k"))?;
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::from(Error::Format(e.to_string())))?;
    let f = SparseBivariate::from_json(&doc)?;
    let region: Region = a.region.parse()?;
    let certificate = certify_finite_count(&f, region, &options(&a.cert))?;
    let out = pretty(&certificate.to_json());
    if let Some(dir) = &a.cert.out {
        write(dir, "certificate.json", &out)?;
    }
    Ok(out)
}

pub fn subdivide(a: &SubdivideArgs) -> Outcome {
    let c = exact_construction(a.k)?;
    let json = pretty(&geom_io::to_json(&c.subdivision));
    let svg = geom_io::to_svg(&c.subdivision);
    if let Some(dir) = &a.out {
        write(dir, "subdivision.json", &json)?;
        write(dir, "subdivision.svg", &svg)?;
    }
    Ok(if a.svg { svg } else { json })
}

pub fn dessin(a: &DessinArgs) -> Outcome {
    let (d, counts) = match a.family {
        Family::Bigonal => {
            let d = family_bigonal(a.n, a.q, a.contracted)?;
            let report = bigonal_counts(a.n as i64, 0, a.q as i64)?;
            let split = d.solitary_split().map(|(p, m)| json!([p, m]));
            (d, json!({ "report": report, "dessin_split": split }))
        }
        Family::Genus => {
            let d = family_genus(a.n, a.genus_base)?;
            let audit = cover_counts(a.n as i64, a.genus_base as i64)?;
            (d, json!({ "audit": audit, "total": audit.total() }))
        }
    };
    let validation = d.validate();
    let doc = json!({
        "dessin": d.to_json(),
        "valid": validation.is_valid(),
        "violations": validation.violations,
        "counts": counts,
    });
    let json = pretty(&doc);
    let svg = to_svg(&d);
    if let Some(dir) = &a.out {
        write(dir, "dessin.json", &json)?;
        write(dir, "dessin.svg", &svg)?;
    }
    Ok(if a.svg { svg } else { json })
}
