use std::path::{Path, PathBuf};

use kampen_core::charclass::{
    bounds_hold, cap_d, division_witness, dual_total_class, frick_harrison_admissible, projective_space,
    single_generator_bits, ManifoldPresentation,
};
use kampen_core::coincide::{find_coincidences, homotopy_scan, linear_homotopy, parse_rational, random_plmap, PLMap};
use kampen_core::deleted::{deleted_product, deleted_product_truncated, z2_index, DeletedMode, QuotientComplex};
use kampen_core::gf2::{Coefficients, PolyRing, TruncatedPoly};
use kampen_core::lambda::{atiyah_bound, gamma_table, kring_pair};
use kampen_core::simplicial::{
    boundary_of_simplex, k5, minimal_rp2, simplex, verify_cover_hypothesis, CoverFamily, SimplicialComplex,
};
use kampen_core::Error;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{Inputs, Outcome};

type CliResult = Result<Outcome, CliError>;

fn parse_err(e: serde_json::Error) -> CliError {
    CliError::Core(Error::Parse(e.to_string()))
}

/// `{"dimension": d, "generator_degree": k, "coefficients": [...]}`: a
/// total tangent class `Σ c_i T^i` in `F2[T]`, `deg T = k`, truncated
/// above degree `d`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TotalFile {
    dimension: u32,
    #[serde(default = "one")]
    generator_degree: u32,
    coefficients: Vec<i64>,
}

fn one() -> u32 {
    1
}

pub enum ManifoldSource {
    Projective(u32),
    Total(PathBuf),
}

fn load_manifold(inputs: &mut Inputs, source: &ManifoldSource) -> Result<(ManifoldPresentation, Value), CliError> {
    match source {
        ManifoldSource::Projective(d) => Ok((projective_space(*d)?, json!({ "rp": d }))),
        ManifoldSource::Total(path) => {
            let file: TotalFile = serde_json::from_str(&inputs.read(path)?).map_err(parse_err)?;
            if file.dimension == 0 || file.generator_degree == 0 {
                return Err(CliError::Usage("dimension and generator degree must be positive".into()));
            }
            let ring = PolyRing::single(
                Coefficients::Gf2,
                "T",
                file.generator_degree,
                file.dimension / file.generator_degree + 1,
            );
            let total = TruncatedPoly::from_coefficients(&ring, &file.coefficients)?;
            let mp = ManifoldPresentation::new(ring, file.dimension, &total)?;
            Ok((mp, json!({ "total": "file" })))
        }
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn dualsw(inputs: &mut Inputs, source: &ManifoldSource) -> CliResult {
    let (mp, parameters) = load_manifold(inputs, source)?;
    let dual = dual_total_class(&mp.tangent)?;
    let d_cap = cap_d(&mp)?;
    let bits: Vec<String> = single_generator_bits(&dual).iter().map(ToString::to_string).collect();
    Ok(Outcome {
        parameters,
        results: json!({
            "dimension": mp.dimension,
            "tangent": strings(mp.tangent.components()),
            "dual": strings(dual.components()),
            "dual_bits": bits.concat(),
            "D": d_cap,
            "bounds_hold": bounds_hold(mp.dimension, d_cap),
        }),
        positive: true,
    })
}

pub fn capd(inputs: &mut Inputs, source: &ManifoldSource) -> CliResult {
    let (mp, parameters) = load_manifold(inputs, source)?;
    let d_cap = cap_d(&mp)?;
    Ok(Outcome {
        parameters,
        results: json!({
            "dimension": mp.dimension,
            "D": d_cap,
            "bounds_hold": bounds_hold(mp.dimension, d_cap),
        }),
        positive: true,
    })
}

pub fn division(inputs: &mut Inputs, source: &ManifoldSource, m: u32) -> CliResult {
    let (mp, mut parameters) = load_manifold(inputs, source)?;
    parameters["m"] = json!(m);
    let witness = division_witness(&mp, m)?;
    Ok(Outcome {
        parameters,
        results: json!({
            "D": cap_d(&mp)?,
            "witness": witness.as_ref().map(ToString::to_string),
        }),
        positive: witness.is_some(),
    })
}

fn load_complex(inputs: &mut Inputs, path: &Path) -> Result<SimplicialComplex, CliError> {
    Ok(SimplicialComplex::from_json(&inputs.read(path)?)?)
}

#[derive(Clone, Debug)]
pub enum IndexMode {
    Full,
    Capped(usize),
    Family(PathBuf),
}

impl std::str::FromStr for IndexMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "full" {
            return Ok(IndexMode::Full);
        }
        if let Some(m) = s.strip_prefix("cap:") {
            return m.parse().map(IndexMode::Capped).map_err(|e| format!("bad cap `{m}`: {e}"));
        }
        if let Some(path) = s.strip_prefix("family:") {
            return Ok(IndexMode::Family(PathBuf::from(path)));
        }
        Err(format!("unknown mode `{s}`; expected full, cap:M or family:<file>"))
    }
}

pub fn index(
    inputs: &mut Inputs,
    complex: &Path,
    mode: &IndexMode,
    family_cap: Option<usize>,
    max_degree: Option<usize>,
) -> CliResult {
    let k = load_complex(inputs, complex)?;
    let subcomplex;
    let (mode, mode_name) = match mode {
        IndexMode::Full => (DeletedMode::Full, json!("full")),
        IndexMode::Capped(m) => (DeletedMode::Capped(*m), json!({ "cap": m })),
        IndexMode::Family(path) => {
            let family = CoverFamily::from_json(&k, &inputs.read(path)?)?;
            subcomplex = family.subcomplex(&k)?;
            (
                DeletedMode::OfSubcomplex {
                    subcomplex: &subcomplex,
                    cap: family_cap,
                },
                json!({ "family": family.len(), "cap": family_cap }),
            )
        }
    };
    let x = match max_degree {
        Some(n) => deleted_product_truncated(&k, mode, n)?,
        None => deleted_product(&k, mode)?,
    };
    let y = QuotientComplex::new(x)?;
    let report = z2_index(&y)?;
    Ok(Outcome {
        parameters: json!({ "mode": mode_name, "max_degree": max_degree }),
        results: serde_json::to_value(&report).expect("report serializes"),
        positive: true,
    })
}

pub fn cover_check(inputs: &mut Inputs, complex: &Path, family: &Path, m: usize, r: usize) -> CliResult {
    let k = load_complex(inputs, complex)?;
    let family = CoverFamily::from_json(&k, &inputs.read(family)?)?;
    let violation = verify_cover_hypothesis(&k, &family, m, r)?;
    Ok(Outcome {
        parameters: json!({ "m": m, "r": r }),
        results: json!({
            "holds": violation.is_none(),
            "violation": violation.as_ref().map(|v| json!({
                "j": v.j,
                "first": k.labels_of(&v.first),
                "second": k.labels_of(&v.second),
            })),
        }),
        positive: violation.is_none(),
    })
}

fn load_points(inputs: &mut Inputs, path: &Path) -> Result<PLMap, CliError> {
    Ok(PLMap::from_json(&inputs.read(path)?)?)
}

pub fn coincide(inputs: &mut Inputs, complex: &Path, points: &Path, cap: Option<usize>) -> CliResult {
    let k = load_complex(inputs, complex)?;
    let f = load_points(inputs, points)?;
    let found = find_coincidences(&k, &f, cap)?;
    let records: Vec<_> = found.iter().map(|w| w.to_record(&k)).collect();
    Ok(Outcome {
        parameters: json!({ "cap": cap }),
        results: json!({ "count": records.len(), "witnesses": records }),
        positive: !records.is_empty(),
    })
}

pub fn homotopy(inputs: &mut Inputs, complex: &Path, points: &Path, steps: u32, tolerance: &str) -> CliResult {
    let k = load_complex(inputs, complex)?;
    let f = load_points(inputs, points)?;
    let tol = parse_rational(tolerance)?;
    let frames = linear_homotopy(&f, steps)?;
    let scan = homotopy_scan(&k, &frames, &tol)?;
    let frames: Vec<Value> = scan
        .frames
        .iter()
        .map(|fr| {
            json!({
                "t": fr.t.to_string(),
                "witnesses": fr.witnesses.len(),
                "gap": fr.gap.as_ref().map(ToString::to_string),
            })
        })
        .collect();
    Ok(Outcome {
        parameters: json!({ "steps": steps, "tolerance": tol.to_string() }),
        results: json!({
            "first_hit": scan.first_hit.as_ref().map(ToString::to_string),
            "min_gap": scan.min_gap.as_ref().map(ToString::to_string),
            "near_misses": strings(&scan.near_misses),
            "frames": frames,
        }),
        positive: scan.first_hit.is_some(),
    })
}

pub fn ktheory(d: u32, f: u32, n: usize) -> CliResult {
    let table = gamma_table(d, f, n)?;
    let gamma: Vec<Value> = table
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let (free, mu) = kring_pair(g);
            json!({ "i": i, "free": free.to_string(), "mu": mu.to_string() })
        })
        .collect();
    Ok(Outcome {
        parameters: json!({ "d": d, "f": f, "n": n }),
        results: json!({ "gamma": gamma, "atiyah_bound": atiyah_bound(d, f)? }),
        positive: true,
    })
}

pub fn fh(l: i64, m: i64, k: i64, r: i64, d_cap: i64) -> CliResult {
    let admissible = frick_harrison_admissible(l, m, k, r, d_cap);
    Ok(Outcome {
        parameters: json!({ "l": l, "m": m, "k": k, "r": r, "D": d_cap }),
        results: json!({ "admissible": admissible }),
        positive: admissible,
    })
}

fn builtin(name: &str) -> Result<SimplicialComplex, CliError> {
    let numbered = |prefix: &str| -> Result<Option<usize>, CliError> {
        match name.strip_prefix(prefix) {
            Some(n) => n
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("bad size in `{name}`"))),
            None => Ok(None),
        }
    };
    Ok(match name {
        "k5" => k5(),
        "rp2" => minimal_rp2(),
        _ => {
            if let Some(d) = numbered("sphere:")? {
                boundary_of_simplex(d + 1)?
            } else if let Some(n) = numbered("simplex:")? {
                simplex(n)?
            } else {
                return Err(CliError::Usage(format!(
                    "unknown builtin `{name}`; expected k5, rp2, sphere:D or simplex:N"
                )));
            }
        }
    })
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
    }
    Ok(())
}

pub fn complex(name: &str, out: Option<&Path>) -> CliResult {
    let k = builtin(name)?;
    write_out(out, &k.to_json())?;
    Ok(Outcome {
        parameters: json!({ "builtin": name }),
        results: json!({
            "complex": k.to_file(),
            "f_vector": k.f_vector(),
            "euler_characteristic": k.euler_characteristic(),
        }),
        positive: true,
    })
}

pub fn random_map(
    inputs: &mut Inputs,
    complex: &Path,
    dimension: usize,
    seed: u64,
    bound: u32,
    out: Option<&Path>,
) -> CliResult {
    let k = load_complex(inputs, complex)?;
    let f = random_plmap(&k, dimension, seed, bound)?;
    let file = f.to_file();
    write_out(out, &serde_json::to_string(&file).expect("points serialize"))?;
    Ok(Outcome {
        parameters: json!({ "dimension": dimension, "seed": seed, "bound": bound }),
        results: json!({ "points": file }),
        positive: true,
    })
}
