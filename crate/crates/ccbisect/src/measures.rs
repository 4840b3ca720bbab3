//! Mass distributions as kernel mixtures or raster grids.
//!
//! Point-like inputs are smeared into axis-aligned square/cube kernels of
//! positive half-width so every measure is absolutely continuous and the
//! mass inside a moving placement varies continuously. Atomic inputs
//! (radius 0) are rejected.

use crate::error::{Error, Result};
use crate::geometry::{Aabb, CutterSpec, PlacedQuery, Placement, Vector};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// One smeared point: an axis-aligned box of half-width `radius` around
/// `center` carrying `weight` of mass.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Kernel<const D: usize> {
    pub center: Vector<D>,
    pub weight: f64,
    pub radius: f64,
}

impl<const D: usize> Kernel<D> {
    pub fn support(&self) -> Aabb<D> {
        Aabb::from_center_half(self.center, self.radius)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MeasureData<const D: usize> {
    Kernels { kernels: Vec<Kernel<D>> },
    Raster(Raster<D>),
}

/// Piecewise-constant density on a regular grid: cell `(i1, ..., id)` spans
/// `origin + cell * i .. origin + cell * (i + 1)` with density `values[k]`
/// (row-major, last index fastest).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Raster<const D: usize> {
    pub origin: Vector<D>,
    pub cell: f64,
    pub shape: Vec<usize>,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Measure<const D: usize> {
    data: MeasureData<D>,
    total: f64,
}

impl<const D: usize> Measure<D> {
    pub fn from_kernels(kernels: Vec<Kernel<D>>) -> Result<Self> {
        if kernels.is_empty() {
            return Err(Error::InvalidMeasure("no kernels".into()));
        }
        for (i, k) in kernels.iter().enumerate() {
            if !(k.weight > 0.0) || !k.weight.is_finite() {
                return Err(Error::NonPositiveWeight {
                    row: i,
                    value: k.weight,
                });
            }
            if !(k.radius > 0.0) || !k.radius.is_finite() {
                return Err(Error::NonPositiveRadius {
                    row: i,
                    value: k.radius,
                });
            }
            if !k.center.is_finite() {
                return Err(Error::InvalidMeasure(format!("kernel {i}: non-finite center")));
            }
        }
        let total = kernels.iter().map(|k| k.weight).sum();
        Ok(Measure {
            data: MeasureData::Kernels { kernels },
            total,
        })
    }

    pub fn from_raster(raster: Raster<D>) -> Result<Self> {
        if raster.shape.len() != D {
            return Err(Error::DimensionMismatch {
                expected: D,
                got: raster.shape.len(),
            });
        }
        let n: usize = raster.shape.iter().product();
        if n == 0 || raster.values.len() != n {
            return Err(Error::InvalidMeasure(format!(
                "raster has {} values for shape {:?}",
                raster.values.len(),
                raster.shape
            )));
        }
        if !(raster.cell > 0.0) {
            return Err(Error::InvalidMeasure("non-positive cell size".into()));
        }
        if raster.values.iter().any(|v| *v < 0.0 || !v.is_finite()) {
            return Err(Error::InvalidMeasure("negative raster value".into()));
        }
        let total = raster.cell.powi(D as i32) * raster.values.iter().sum::<f64>();
        if !(total > 0.0) {
            return Err(Error::InvalidMeasure("zero total mass".into()));
        }
        Ok(Measure {
            data: MeasureData::Raster(raster),
            total,
        })
    }

    pub fn data(&self) -> &MeasureData<D> {
        &self.data
    }

    /// Total mass, cached at construction.
    pub fn total(&self) -> f64 {
        self.total
    }

    /// Iterates over mass atoms as (box, weight) pairs; raster cells are
    /// exposed as square kernels of half-width cell/2.
    pub fn for_each_cell(&self, mut f: impl FnMut(Aabb<D>, f64)) {
        match &self.data {
            MeasureData::Kernels { kernels } => {
                for k in kernels {
                    f(k.support(), k.weight);
                }
            }
            MeasureData::Raster(r) => {
                let cell_vol = r.cell.powi(D as i32);
                let mut idx = vec![0usize; D];
                for v in &r.values {
                    if *v > 0.0 {
                        let lo = Vector::from_fn(|i| r.origin[i] + r.cell * idx[i] as f64);
                        let hi = Vector::from_fn(|i| r.origin[i] + r.cell * (idx[i] + 1) as f64);
                        f(Aabb::new(lo, hi), v * cell_vol);
                    }
                    // increment row-major index, last axis fastest
                    for ax in (0..D).rev() {
                        idx[ax] += 1;
                        if idx[ax] < r.shape[ax] {
                            break;
                        }
                        idx[ax] = 0;
                    }
                }
            }
        }
    }

    pub fn support_bbox(&self) -> Aabb<D> {
        let mut bbox: Option<Aabb<D>> = None;
        self.for_each_cell(|b, _| {
            bbox = Some(match bbox {
                Some(acc) => acc.union(&b),
                None => b,
            });
        });
        bbox.expect("measure has mass")
    }
}

/// Exactly d+1 measures sharing a dimension; index 0 is the scale-pinning
/// measure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeasureSet<const D: usize> {
    measures: Vec<Measure<D>>,
}

impl<const D: usize> MeasureSet<D> {
    pub fn new(measures: Vec<Measure<D>>) -> Result<Self> {
        if measures.len() < D + 1 {
            return Err(Error::TooFewMeasures {
                needed: D + 1,
                found: measures.len(),
            });
        }
        if measures.len() != D + 1 {
            return Err(Error::WrongMeasureCount {
                expected: D + 1,
                found: measures.len(),
            });
        }
        Ok(MeasureSet { measures })
    }

    pub fn pinning(&self) -> &Measure<D> {
        &self.measures[0]
    }

    pub fn all(&self) -> &[Measure<D>] {
        &self.measures
    }

    /// The d measures entering the residual map (indices 1..=d).
    pub fn residual_measures(&self) -> &[Measure<D>] {
        &self.measures[1..]
    }

    pub fn support_bbox(&self) -> Aabb<D> {
        self.measures
            .iter()
            .map(|m| m.support_bbox())
            .reduce(|a, b| a.union(&b))
            .expect("non-empty")
    }

    pub fn diameter(&self) -> f64 {
        self.support_bbox().diameter()
    }
}

/// Fraction of the kernel box covered by the placed cutter, in [0, 1].
pub fn kernel_mass_fraction<const D: usize>(
    kernel: &Kernel<D>,
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> Result<f64> {
    Ok(PlacedQuery::new(cutter, placement)?.fraction(&kernel.support()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileFormat {
    Csv,
    Json,
}

/// Loads a measure set from disk.
///
/// CSV columns: `measure_id,x,y[,z],weight[,radius]`. Rows are grouped by
/// `measure_id` in ascending order; ids must be exactly `0..=d`. A missing
/// radius column (or empty field) falls back to
/// `default_radius.unwrap_or(1e-3 * instance diameter)`.
///
/// JSON: `{"dimension": d, "measures": [measure, ...]}` where each measure
/// is either `{"type":"kernels","kernels":[{"center":[..],"weight":w,"radius":r}]}`
/// or `{"type":"raster","origin":[..],"cell":h,"shape":[..],"values":[..]}`.
pub fn load_measures<const D: usize>(
    path: impl AsRef<Path>,
    format: FileFormat,
    default_radius: Option<f64>,
) -> Result<MeasureSet<D>> {
    match format {
        FileFormat::Csv => load_csv(path.as_ref(), default_radius),
        FileFormat::Json => load_json(path.as_ref()),
    }
}

/// Dimension recorded in a measures file, without fixing `D` at compile
/// time. CSV: 2 or 3 depending on a `z` column; JSON: the `dimension` field.
pub fn peek_dimension(path: impl AsRef<Path>, format: FileFormat) -> Result<usize> {
    match format {
        FileFormat::Csv => {
            let mut rdr = csv::Reader::from_path(path.as_ref())?;
            let headers = rdr.headers()?;
            Ok(if headers.iter().any(|h| h.trim() == "z") {
                3
            } else {
                2
            })
        }
        FileFormat::Json => {
            let text = std::fs::read_to_string(path.as_ref())?;
            let v: serde_json::Value = serde_json::from_str(&text)?;
            v["dimension"]
                .as_u64()
                .map(|d| d as usize)
                .ok_or_else(|| Error::InvalidMeasure("missing dimension field".into()))
        }
    }
}

fn load_csv<const D: usize>(path: &Path, default_radius: Option<f64>) -> Result<MeasureSet<D>> {
    let mut rdr = csv::Reader::from_path(path)?;
    let headers = rdr.headers()?.clone();
    let col = |name: &str| headers.iter().position(|h| h.trim() == name);
    let c_id = col("measure_id").ok_or_else(|| Error::MissingColumn("measure_id".into()))?;
    let c_x = col("x").ok_or_else(|| Error::MissingColumn("x".into()))?;
    let c_y = col("y").ok_or_else(|| Error::MissingColumn("y".into()))?;
    let c_z = col("z");
    let c_w = col("weight").ok_or_else(|| Error::MissingColumn("weight".into()))?;
    let c_r = col("radius");
    if D == 3 && c_z.is_none() {
        return Err(Error::MissingColumn("z".into()));
    }

    struct Row<const D: usize> {
        id: usize,
        center: Vector<D>,
        weight: f64,
        radius: Option<f64>,
    }

    let mut rows: Vec<Row<D>> = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let row = i + 1; // 1-based data rows; header is row 0
        let rec = rec?;
        let field = |c: usize| -> Result<f64> {
            rec.get(c)
                .ok_or_else(|| Error::BadRow {
                    row,
                    msg: "short record".into(),
                })?
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::BadRow {
                    row,
                    msg: format!("bad number: {e}"),
                })
        };
        let id = field(c_id)? as usize;
        let mut center = Vector::zero();
        center[0] = field(c_x)?;
        center[1] = field(c_y)?;
        if D == 3 {
            center[2] = field(c_z.unwrap())?;
        }
        let weight = field(c_w)?;
        if !(weight > 0.0) {
            return Err(Error::NonPositiveWeight { row, value: weight });
        }
        let radius = match c_r {
            Some(c) => {
                let raw = rec.get(c).unwrap_or("").trim();
                if raw.is_empty() {
                    None
                } else {
                    let r: f64 = raw.parse().map_err(|e| Error::BadRow {
                        row,
                        msg: format!("bad radius: {e}"),
                    })?;
                    if !(r > 0.0) {
                        return Err(Error::NonPositiveRadius { row, value: r });
                    }
                    Some(r)
                }
            }
            None => None,
        };
        rows.push(Row {
            id,
            center,
            weight,
            radius,
        });
    }

    // Default radius: 1e-3 of the point-set diameter.
    let fallback = default_radius.unwrap_or_else(|| {
        let mut lo = Vector::<D>::splat(f64::INFINITY);
        let mut hi = Vector::<D>::splat(f64::NEG_INFINITY);
        for r in &rows {
            lo = lo.min_with(&r.center);
            hi = hi.max_with(&r.center);
        }
        let diam = (hi - lo).norm();
        (1e-3 * diam).max(1e-9)
    });

    let max_id = rows.iter().map(|r| r.id).max().unwrap_or(0);
    let mut grouped: Vec<Vec<Kernel<D>>> = vec![Vec::new(); max_id + 1];
    for r in &rows {
        grouped[r.id].push(Kernel {
            center: r.center,
            weight: r.weight,
            radius: r.radius.unwrap_or(fallback),
        });
    }
    let found = grouped.iter().filter(|g| !g.is_empty()).count();
    if found < D + 1 {
        return Err(Error::TooFewMeasures {
            needed: D + 1,
            found,
        });
    }
    if grouped.len() != D + 1 || grouped.iter().any(|g| g.is_empty()) {
        return Err(Error::WrongMeasureCount {
            expected: D + 1,
            found: grouped.len(),
        });
    }
    MeasureSet::new(
        grouped
            .into_iter()
            .map(Measure::from_kernels)
            .collect::<Result<Vec<_>>>()?,
    )
}

#[derive(Deserialize)]
struct JsonMeasures<const D: usize> {
    dimension: usize,
    measures: Vec<MeasureData<D>>,
}

fn load_json<const D: usize>(path: &Path) -> Result<MeasureSet<D>> {
    let text = std::fs::read_to_string(path)?;
    let parsed: JsonMeasures<D> = serde_json::from_str(&text)?;
    if parsed.dimension != D {
        return Err(Error::DimensionMismatch {
            expected: D,
            got: parsed.dimension,
        });
    }
    let measures = parsed
        .measures
        .into_iter()
        .map(|data| match data {
            MeasureData::Kernels { kernels } => Measure::from_kernels(kernels),
            MeasureData::Raster(r) => Measure::from_raster(r),
        })
        .collect::<Result<Vec<_>>>()?;
    MeasureSet::new(measures)
}
