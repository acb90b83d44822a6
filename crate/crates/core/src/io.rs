//! Cloud file formats.
//!
//! CSV: one point per line, comma-separated decimal coordinates, optional
//! single header line starting with `#`. Values are emitted with 17
//! significant digits so the printed form round-trips to the same f64.
//!
//! Binary (`DIMC`): 24-byte header — ASCII magic `DIMC`, u32 version = 1,
//! u64 point count, u64 ambient dimension, all little-endian — followed by
//! the row-major coordinates as little-endian f64. Round-trips bit-exactly.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::cloud::PointCloud;
use crate::error::{DimError, Result};

const MAGIC: &[u8; 4] = b"DIMC";
const VERSION: u32 = 1;

/// On-disk representation of a cloud.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloudFormat {
    Csv,
    Binary,
}

impl CloudFormat {
    /// `.csv` means CSV; anything else is the binary format.
    pub fn infer(path: &Path) -> CloudFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => CloudFormat::Csv,
            _ => CloudFormat::Binary,
        }
    }
}

pub fn load_cloud(path: &Path, format: CloudFormat) -> Result<PointCloud> {
    match format {
        CloudFormat::Csv => load_csv(path),
        CloudFormat::Binary => load_binary(path),
    }
}

pub fn save_cloud(cloud: &PointCloud, path: &Path, format: CloudFormat) -> Result<()> {
    match format {
        CloudFormat::Csv => save_csv(cloud, path),
        CloudFormat::Binary => save_binary(cloud, path),
    }
}

fn label_for(path: &Path) -> String {
    path.file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("cloud")
        .to_string()
}

fn load_csv(path: &Path) -> Result<PointCloud> {
    let file = File::open(path).map_err(|e| DimError::io(path, e))?;
    let reader = BufReader::new(file);
    let mut data: Vec<f64> = Vec::new();
    let mut width: Option<usize> = None;
    let mut rows = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| DimError::io(path, e))?;
        let lineno = idx + 1;
        if idx == 0 && line.starts_with('#') {
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let mut count = 0usize;
        for field in line.split(',') {
            let v: f64 = field.trim().parse().map_err(|_| DimError::Parse {
                path: path.to_path_buf(),
                line: lineno,
                message: format!("cannot parse `{}` as a number", field.trim()),
            })?;
            data.push(v);
            count += 1;
        }
        match width {
            None => width = Some(count),
            Some(w) if w != count => {
                return Err(DimError::Parse {
                    path: path.to_path_buf(),
                    line: lineno,
                    message: format!("row has {count} fields, expected {w}"),
                })
            }
            _ => {}
        }
        rows += 1;
    }
    if rows < 2 {
        return Err(DimError::Validation(format!(
            "{} holds {rows} points; at least 2 required",
            path.display()
        )));
    }
    PointCloud::from_flat(data, width.unwrap_or(0), label_for(path))
}

fn save_csv(cloud: &PointCloud, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| DimError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut line = String::new();
    for row in cloud.rows() {
        line.clear();
        for (d, v) in row.iter().enumerate() {
            if d > 0 {
                line.push(',');
            }
            // 17 significant digits: lossless for f64.
            line.push_str(&format!("{v:.16e}"));
        }
        line.push('\n');
        w.write_all(line.as_bytes()).map_err(|e| DimError::io(path, e))?;
    }
    w.flush().map_err(|e| DimError::io(path, e))
}

fn load_binary(path: &Path) -> Result<PointCloud> {
    let file = File::open(path).map_err(|e| DimError::io(path, e))?;
    let mut reader = BufReader::new(file);
    let mut header = [0u8; 24];
    reader
        .read_exact(&mut header)
        .map_err(|e| DimError::io(path, e))?;
    if &header[0..4] != MAGIC {
        return Err(DimError::Parse {
            path: path.to_path_buf(),
            line: 0,
            message: "bad magic; not a DIMC file".into(),
        });
    }
    let version = u32::from_le_bytes(header[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(DimError::Parse {
            path: path.to_path_buf(),
            line: 0,
            message: format!("unsupported DIMC version {version}"),
        });
    }
    let n = u64::from_le_bytes(header[8..16].try_into().unwrap()) as usize;
    let m = u64::from_le_bytes(header[16..24].try_into().unwrap()) as usize;
    let total = n
        .checked_mul(m)
        .ok_or_else(|| DimError::Validation("header size overflow".into()))?;
    let mut bytes = Vec::new();
    reader
        .read_to_end(&mut bytes)
        .map_err(|e| DimError::io(path, e))?;
    if bytes.len() != total * 8 {
        return Err(DimError::Parse {
            path: path.to_path_buf(),
            line: 0,
            message: format!(
                "payload is {} bytes, header promises {}",
                bytes.len(),
                total * 8
            ),
        });
    }
    let data: Vec<f64> = bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    PointCloud::from_flat(data, m, label_for(path))
}

fn save_binary(cloud: &PointCloud, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| DimError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut header = Vec::with_capacity(24);
    header.extend_from_slice(MAGIC);
    header.extend_from_slice(&VERSION.to_le_bytes());
    header.extend_from_slice(&(cloud.n_points() as u64).to_le_bytes());
    header.extend_from_slice(&(cloud.ambient_dim() as u64).to_le_bytes());
    w.write_all(&header).map_err(|e| DimError::io(path, e))?;
    let mut buf = Vec::with_capacity(8 * 1024);
    for v in cloud.as_slice() {
        buf.extend_from_slice(&v.to_le_bytes());
        if buf.len() >= 8 * 1024 {
            w.write_all(&buf).map_err(|e| DimError::io(path, e))?;
            buf.clear();
        }
    }
    w.write_all(&buf).map_err(|e| DimError::io(path, e))?;
    w.flush().map_err(|e| DimError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomSource;
    use rand::Rng;

    fn tmp(name: &str) -> tempfile::TempDir {
        tempfile::Builder::new().prefix(name).tempdir().unwrap()
    }

    #[test]
    fn csv_parse_basic() {
        let dir = tmp("csv");
        let p = dir.path().join("a.csv");
        std::fs::write(&p, "0.1,0.2\n0.3,0.4").unwrap();
        let c = load_cloud(&p, CloudFormat::Csv).unwrap();
        assert_eq!(c.n_points(), 2);
        assert_eq!(c.ambient_dim(), 2);
        assert_eq!(c.row(0), &[0.1, 0.2]);
        assert_eq!(c.row(1), &[0.3, 0.4]);
    }

    #[test]
    fn csv_single_point_is_invalid() {
        let dir = tmp("csv1");
        let p = dir.path().join("a.csv");
        std::fs::write(&p, "1.0\n").unwrap();
        assert!(matches!(
            load_cloud(&p, CloudFormat::Csv),
            Err(DimError::Validation(_))
        ));
    }

    #[test]
    fn csv_header_and_malformed_rows() {
        let dir = tmp("csvh");
        let p = dir.path().join("a.csv");
        std::fs::write(&p, "# x,y\n1,2\n3,4\n").unwrap();
        assert_eq!(load_cloud(&p, CloudFormat::Csv).unwrap().n_points(), 2);

        std::fs::write(&p, "1,2\n3,4,5\n").unwrap();
        let err = load_cloud(&p, CloudFormat::Csv).unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");

        std::fs::write(&p, "1,2\n3,nan\n").unwrap();
        assert!(load_cloud(&p, CloudFormat::Csv).is_err());
    }

    #[test]
    fn csv_roundtrip_value_equal() {
        let dir = tmp("csvr");
        let p = dir.path().join("a.csv");
        let c = PointCloud::from_rows(
            &[vec![0.1, -2.5e-300], vec![std::f64::consts::PI, 1.0 / 3.0]],
            "a",
        )
        .unwrap();
        save_cloud(&c, &p, CloudFormat::Csv).unwrap();
        let back = load_cloud(&p, CloudFormat::Csv).unwrap();
        assert_eq!(back.as_slice(), c.as_slice());
    }

    #[test]
    fn binary_roundtrip_bit_exact() {
        let dir = tmp("bin");
        let p = dir.path().join("a.dimc");
        let mut rng = RandomSource::new(3).rng();
        let data: Vec<f64> = (0..1000 * 512).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
        let c = PointCloud::from_flat(data, 512, "a").unwrap();
        save_cloud(&c, &p, CloudFormat::Binary).unwrap();
        let back = load_cloud(&p, CloudFormat::Binary).unwrap();
        assert_eq!(back.n_points(), 1000);
        assert_eq!(back.ambient_dim(), 512);
        let same = back
            .as_slice()
            .iter()
            .zip(c.as_slice())
            .all(|(a, b)| a.to_bits() == b.to_bits());
        assert!(same);
    }

    #[test]
    fn save_to_empty_path_is_io_error() {
        let c = PointCloud::from_rows(&[vec![1.0], vec![2.0]], "a").unwrap();
        assert!(matches!(
            save_cloud(&c, Path::new(""), CloudFormat::Binary),
            Err(DimError::Io { .. })
        ));
    }

    #[test]
    fn binary_rejects_bad_magic() {
        let dir = tmp("mag");
        let p = dir.path().join("a.dimc");
        std::fs::write(&p, b"NOPE0000000000000000000000000").unwrap();
        assert!(load_cloud(&p, CloudFormat::Binary).is_err());
    }

    #[test]
    fn format_inference() {
        assert_eq!(CloudFormat::infer(Path::new("x.csv")), CloudFormat::Csv);
        assert_eq!(CloudFormat::infer(Path::new("x.CSV")), CloudFormat::Csv);
        assert_eq!(CloudFormat::infer(Path::new("x.dimc")), CloudFormat::Binary);
        assert_eq!(CloudFormat::infer(Path::new("x")), CloudFormat::Binary);
    }
}
