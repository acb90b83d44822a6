//! Point-cloud data model: N points in R^m, stored row-major.

use serde::{Deserialize, Serialize};

use crate::error::{DimError, Result};

/// An immutable cloud of `n_points` points with `ambient_dim` coordinates each.
///
/// Invariants enforced at construction: at least 2 points, at least 1
/// dimension, every coordinate finite. Row order is stable; the binary
/// format round-trips bit-exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    data: Vec<f64>,
    n_points: usize,
    ambient_dim: usize,
    label: String,
}

impl PointCloud {
    /// Build a cloud from a flat row-major coordinate buffer.
    pub fn from_flat(data: Vec<f64>, ambient_dim: usize, label: impl Into<String>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(DimError::Validation("ambient dimension must be >= 1".into()));
        }
        if data.len() % ambient_dim != 0 {
            return Err(DimError::Validation(format!(
                "coordinate buffer length {} is not a multiple of ambient dimension {}",
                data.len(),
                ambient_dim
            )));
        }
        let n_points = data.len() / ambient_dim;
        if n_points < 2 {
            return Err(DimError::Validation(format!(
                "a cloud needs at least 2 points, got {n_points}"
            )));
        }
        for (i, &v) in data.iter().enumerate() {
            if !v.is_finite() {
                return Err(DimError::Validation(format!(
                    "non-finite coordinate at row {}, column {}",
                    i / ambient_dim + 1,
                    i % ambient_dim + 1
                )));
            }
        }
        Ok(PointCloud {
            data,
            n_points,
            ambient_dim,
            label: label.into(),
        })
    }

    pub fn from_rows(rows: &[Vec<f64>], label: impl Into<String>) -> Result<Self> {
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(DimError::Validation("rows have inconsistent lengths".into()));
        }
        Self::from_flat(rows.concat(), m, label)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.ambient_dim..(i + 1) * self.ambient_dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.data.chunks_exact(self.ambient_dim)
    }

    /// Flat row-major coordinate buffer.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Coordinate-wise (min, max) vectors.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let m = self.ambient_dim;
        let mut lo = self.row(0).to_vec();
        let mut hi = lo.clone();
        for row in self.rows().skip(1) {
            for d in 0..m {
                if row[d] < lo[d] {
                    lo[d] = row[d];
                }
                if row[d] > hi[d] {
                    hi[d] = row[d];
                }
            }
        }
        (lo, hi)
    }

    /// Largest per-coordinate extent of the bounding box.
    pub fn max_extent(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        lo.iter()
            .zip(&hi)
            .map(|(a, b)| b - a)
            .fold(0.0, f64::max)
    }

    /// Copy the selected columns, in the projection's order.
    pub fn project_axes(&self, projection: &AxisProjection) -> Result<PointCloud> {
        if let Some(&bad) = projection
            .axis_indices
            .iter()
            .find(|&&i| i >= self.ambient_dim)
        {
            return Err(DimError::Validation(format!(
                "axis index {bad} out of range for ambient dimension {}",
                self.ambient_dim
            )));
        }
        let mut data = Vec::with_capacity(self.n_points * projection.axis_indices.len());
        for row in self.rows() {
            data.extend(projection.axis_indices.iter().map(|&i| row[i]));
        }
        PointCloud::from_flat(data, projection.axis_indices.len(), self.label.clone())
    }

    /// Take rows 0, step, 2*step, ... capped at `limit` rows when given.
    pub fn subsample(&self, step: usize, limit: Option<usize>) -> Result<PointCloud> {
        if step == 0 {
            return Err(DimError::Validation("subsample step must be >= 1".into()));
        }
        let mut data = Vec::new();
        let mut taken = 0usize;
        for (i, row) in self.rows().enumerate() {
            if i % step != 0 {
                continue;
            }
            if let Some(cap) = limit {
                if taken == cap {
                    break;
                }
            }
            data.extend_from_slice(row);
            taken += 1;
        }
        if taken < 2 {
            return Err(DimError::Validation(format!(
                "subsample keeps {taken} points; at least 2 required"
            )));
        }
        PointCloud::from_flat(data, self.ambient_dim, self.label.clone())
    }
}

/// An ordered selection of coordinate axes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisProjection {
    pub axis_indices: Vec<usize>,
    pub source_label: String,
}

impl AxisProjection {
    /// Indices must be strictly increasing.
    pub fn new(axis_indices: Vec<usize>, source_label: impl Into<String>) -> Result<Self> {
        if axis_indices.is_empty() {
            return Err(DimError::Validation("projection needs at least one axis".into()));
        }
        if axis_indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DimError::Validation(
                "projection indices must be strictly increasing".into(),
            ));
        }
        Ok(AxisProjection {
            axis_indices,
            source_label: source_label.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cloud(rows: &[Vec<f64>]) -> PointCloud {
        PointCloud::from_rows(rows, "test").unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(PointCloud::from_flat(vec![1.0], 1, "x").is_err()); // N=1
        assert!(PointCloud::from_flat(vec![], 0, "x").is_err());
        assert!(PointCloud::from_flat(vec![1.0, f64::NAN], 1, "x").is_err());
        let err = PointCloud::from_flat(vec![1.0, 2.0, f64::INFINITY, 4.0], 2, "x")
            .unwrap_err()
            .to_string();
        assert!(err.contains("row 2"), "{err}");
        assert!(err.contains("column 1"), "{err}");
    }

    #[test]
    fn project_selected_axes() {
        let c = cloud(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        let p = AxisProjection::new(vec![0, 2], "test").unwrap();
        let out = c.project_axes(&p).unwrap();
        assert_eq!(out.ambient_dim(), 2);
        assert_eq!(out.row(0), &[1.0, 3.0]);
        assert_eq!(out.row(1), &[4.0, 6.0]);
    }

    #[test]
    fn project_full_index_set_is_identity() {
        let c = cloud(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        let p = AxisProjection::new(vec![0, 1, 2], "test").unwrap();
        assert_eq!(c.project_axes(&p).unwrap(), c);
    }

    #[test]
    fn project_out_of_range_errors() {
        let c = cloud(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        let p = AxisProjection::new(vec![5], "test").unwrap();
        assert!(c.project_axes(&p).is_err());
    }

    #[test]
    fn projection_indices_must_increase() {
        assert!(AxisProjection::new(vec![2, 1], "x").is_err());
        assert!(AxisProjection::new(vec![1, 1], "x").is_err());
    }

    #[test]
    fn subsample_takes_every_step() {
        let rows: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64]).collect();
        let c = cloud(&rows);
        let s = c.subsample(2, None).unwrap();
        assert_eq!(s.n_points(), 5);
        assert_eq!(
            s.rows().map(|r| r[0]).collect::<Vec<_>>(),
            vec![0.0, 2.0, 4.0, 6.0, 8.0]
        );
    }

    #[test]
    fn subsample_step_one_is_identity() {
        let c = cloud(&[vec![1.0], vec![2.0], vec![3.0]]);
        assert_eq!(c.subsample(1, None).unwrap(), c);
    }

    #[test]
    fn subsample_step_and_limit_large_cloud() {
        let c = PointCloud::from_flat((0..2_000_000).map(|i| i as f64).collect(), 1, "big").unwrap();
        let s = c.subsample(10, Some(200_000)).unwrap();
        assert_eq!(s.n_points(), 200_000);
        assert_eq!(s.row(1)[0], 10.0);
    }

    #[test]
    fn subsample_too_few_errors() {
        let c = cloud(&[vec![1.0], vec![2.0], vec![3.0]]);
        assert!(c.subsample(5, None).is_err());
        assert!(c.subsample(1, Some(1)).is_err());
    }
}
