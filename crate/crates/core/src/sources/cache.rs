//! On-disk cache of eigenvalue streams.
//!
//! One file per `(source id, limit)`:
//!
//! ```text
//! #source=<id> weight=<w> limit=<N>
//! #excluded=2,11
//! p<TAB>raw<TAB>re<TAB>im<TAB>zero_flag
//! ```
//!
//! Floats are written in shortest round-trip form, so a cached stream
//! reads back bit-identical.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use sha2::{Digest, Sha256};

use super::stream::{EigenvalueStream, RawValue, StreamEntry};
use super::SourceError;

#[derive(Debug, Clone)]
pub struct StreamCache {
    dir: PathBuf,
}

fn sanitize(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

impl StreamCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, source_id: &str, limit: u64) -> PathBuf {
        let digest = Sha256::digest(source_id.as_bytes());
        let hex: String = digest[..4].iter().map(|b| format!("{b:02x}")).collect();
        self.dir
            .join(format!("{}-{hex}-{limit}.tsv", sanitize(source_id)))
    }

    /// The cached stream, or `None` if absent. A file whose header does not
    /// match is treated as absent.
    pub fn load(
        &self,
        source_id: &str,
        limit: u64,
    ) -> Result<Option<EigenvalueStream>, SourceError> {
        let path = self.path_for(source_id, limit);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(SourceError::Io(format!("{}: {e}", path.display()))),
        };
        let stream =
            parse(&text).map_err(|msg| SourceError::Cache(format!("{}: {msg}", path.display())))?;
        if stream.source_id != source_id || stream.limit != limit {
            return Ok(None);
        }
        Ok(Some(stream))
    }

    /// Write the stream to a temporary file and rename it into place.
    pub fn store(&self, stream: &EigenvalueStream) -> Result<PathBuf, SourceError> {
        let io = |e: std::io::Error| SourceError::Io(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path_for(&stream.source_id, stream.limit);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut out = std::io::BufWriter::new(fs::File::create(&tmp).map_err(io)?);
            out.write_all(render(stream).as_bytes()).map_err(io)?;
            out.flush().map_err(io)?;
        }
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(path)
    }
}

pub fn render(stream: &EigenvalueStream) -> String {
    let mut s = format!(
        "#source={} weight={} limit={}\n",
        stream.source_id, stream.weight, stream.limit
    );
    let excluded: Vec<String> = stream.excluded.iter().map(u64::to_string).collect();
    s.push_str(&format!("#excluded={}\n", excluded.join(",")));
    for e in &stream.entries {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            e.p,
            e.raw,
            e.normalized.re,
            e.normalized.im,
            u8::from(e.exact_zero)
        ));
    }
    s
}

pub fn parse(text: &str) -> Result<EigenvalueStream, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty cache file")?;
    let header = header.strip_prefix("#source=").ok_or("missing header")?;
    // the id may contain spaces only if the writer put them there; split
    // from the right
    let (rest, limit) = header.rsplit_once(" limit=").ok_or("missing limit")?;
    let (source_id, weight) = rest.rsplit_once(" weight=").ok_or("missing weight")?;
    let weight: u32 = weight.parse().map_err(|_| "bad weight")?;
    let limit: u64 = limit.parse().map_err(|_| "bad limit")?;
    let mut excluded = Vec::new();
    let mut entries = Vec::new();
    for line in lines {
        if let Some(list) = line.strip_prefix("#excluded=") {
            excluded = list
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| format!("bad excluded prime `{t}`"))
                })
                .collect::<Result<_, _>>()?;
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        let [p, raw, re, im, zero] = f.as_slice() else {
            return Err(format!("bad record `{line}`"));
        };
        let num = |t: &str| t.parse::<f64>().map_err(|_| format!("bad number `{t}`"));
        let raw = match raw.split_once(',') {
            Some((a, b)) => RawValue::Complex {
                re: num(a)?,
                im: num(b)?,
            },
            None => RawValue::Int(raw.parse().map_err(|_| format!("bad raw value `{raw}`"))?),
        };
        entries.push(StreamEntry {
            p: p.parse().map_err(|_| format!("bad prime `{p}`"))?,
            raw,
            normalized: Complex64::new(num(re)?, num(im)?),
            exact_zero: match *zero {
                "0" => false,
                "1" => true,
                other => return Err(format!("bad zero flag `{other}`")),
            },
        });
    }
    let stream = EigenvalueStream {
        source_id: source_id.to_string(),
        weight,
        limit,
        entries,
        excluded,
    };
    stream.validate()?;
    Ok(stream)
}
