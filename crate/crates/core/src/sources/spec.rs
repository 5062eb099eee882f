//! Source specifications such as `ec:0,0,0,-1,0` or `serre:3`, and what is
//! known about the representation behind each.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::cache::StreamCache;
use super::chebotarev::{serre_group_model, ChebotarevModel};
use super::dirichlet::RealCharacter;
use super::elliptic::EllipticCurve;
use super::q8::{OrderCounts, Q8Source};
use super::stream::{EigenvalueStream, RawValue};
use super::SourceError;
use crate::satake::{Gl2Type, Quotient};

#[derive(Debug, Clone, PartialEq)]
pub enum SourceSpec {
    Elliptic(EllipticCurve),
    /// The default Q8 polynomial, or one read from a file.
    Q8(Option<PathBuf>),
    Chebotarev(PathBuf),
    Serre(u64),
    Dirichlet {
        modulus: u64,
        index: usize,
    },
}

impl FromStr for SourceSpec {
    type Err = SourceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let bad = |msg: &str| SourceError::BadSpec(format!("{msg}: `{s}`"));
        match kind {
            "ec" => Ok(SourceSpec::Elliptic(arg.parse()?)),
            "q8" if arg.is_empty() => Ok(SourceSpec::Q8(None)),
            "q8" => Ok(SourceSpec::Q8(Some(PathBuf::from(arg)))),
            "cheb" if !arg.is_empty() => Ok(SourceSpec::Chebotarev(PathBuf::from(arg))),
            "serre" => Ok(SourceSpec::Serre(
                arg.parse().map_err(|_| bad("expected serre:<prime r>"))?,
            )),
            "dirichlet" => {
                let (m, i) = arg
                    .split_once(',')
                    .ok_or_else(|| bad("expected dirichlet:<modulus>,<index>"))?;
                Ok(SourceSpec::Dirichlet {
                    modulus: m.trim().parse().map_err(|_| bad("bad modulus"))?,
                    index: i.trim().parse().map_err(|_| bad("bad index"))?,
                })
            }
            _ => Err(bad("unknown source")),
        }
    }
}

impl fmt::Display for SourceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceSpec::Elliptic(e) => write!(f, "ec:{e}"),
            SourceSpec::Q8(None) => write!(f, "q8"),
            SourceSpec::Q8(Some(p)) => write!(f, "q8:{}", p.display()),
            SourceSpec::Chebotarev(p) => write!(f, "cheb:{}", p.display()),
            SourceSpec::Serre(r) => write!(f, "serre:{r}"),
            SourceSpec::Dirichlet { modulus, index } => write!(f, "dirichlet:{modulus},{index}"),
        }
    }
}

/// Exact pole orders at `s = 1` of `L(s, pi^{xk} x pibar^{xk})` for
/// `k = 2, 3, 4`, i.e. the moments `E|a_v|^{2k}`, where known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PoleOrders {
    pub k2: u64,
    pub k3: Option<u64>,
    pub k4: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SourceInfo {
    pub id: String,
    /// Degree `n` of the representation (the `GL(n)`).
    pub dimension: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gl2_type: Option<Gl2Type>,
    pub pole_orders: PoleOrders,
    /// Synthetic stream drawn from a finite-group model.
    pub sampled: bool,
}

#[derive(Debug, Clone, Default)]
pub struct GenerateOptions {
    /// Largest prime, for sources that scan primes.
    pub limit: u64,
    /// Number of draws, for sampled sources.
    pub samples: usize,
    pub seed: u64,
    pub cache: Option<StreamCache>,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub stream: EigenvalueStream,
    pub info: SourceInfo,
    pub cache_hit: bool,
    /// Frobenius order counts, for Q8 sources.
    pub q8_orders: Option<OrderCounts>,
}

fn short_hash(bytes: &[u8]) -> String {
    Sha256::digest(bytes)[..4]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn model_info(id: String, model: &ChebotarevModel) -> SourceInfo {
    let dimension = model.dimension();
    SourceInfo {
        id,
        dimension,
        gl2_type: (dimension == 2 && model.fourth_moment() == 4)
            .then_some(Gl2Type::Dihedral(Quotient::Invariant)),
        pole_orders: PoleOrders {
            k2: model.fourth_moment(),
            k3: None,
            k4: None,
        },
        sampled: true,
    }
}

fn q8_orders(stream: &EigenvalueStream) -> OrderCounts {
    let mut counts = OrderCounts::default();
    for e in &stream.entries {
        match e.raw {
            RawValue::Int(2) => counts.order1 += 1,
            RawValue::Int(-2) => counts.order2 += 1,
            _ => counts.order4 += 1,
        }
    }
    counts
}

impl SourceSpec {
    /// The finite-group model behind a sampled source.
    pub fn model(&self) -> Result<Option<ChebotarevModel>, SourceError> {
        match self {
            SourceSpec::Serre(r) => serre_group_model(*r).map(Some),
            SourceSpec::Chebotarev(path) => ChebotarevModel::from_file(path).map(Some),
            _ => Ok(None),
        }
    }

    /// Build (or load from cache) the stream for this source.
    pub fn generate(&self, opts: &GenerateOptions) -> Result<Generated, SourceError> {
        match self {
            SourceSpec::Serre(r) => {
                let model = serre_group_model(*r)?;
                let id = format!("serre:{r}@seed={}", opts.seed);
                let stream = model.sample(opts.samples, opts.seed, &id);
                let info = model_info(id, &model);
                Ok(Generated {
                    stream,
                    info,
                    cache_hit: false,
                    q8_orders: None,
                })
            }
            SourceSpec::Chebotarev(path) => {
                let model = ChebotarevModel::from_file(path)?;
                let text = model.to_json();
                let id = format!(
                    "cheb:{}-{}@seed={}",
                    model.name,
                    short_hash(text.as_bytes()),
                    opts.seed
                );
                let stream = model.sample(opts.samples, opts.seed, &id);
                let info = model_info(id, &model);
                Ok(Generated {
                    stream,
                    info,
                    cache_hit: false,
                    q8_orders: None,
                })
            }
            SourceSpec::Elliptic(curve) => {
                let id = format!("ec:{curve}");
                let (gl2_type, pole_orders) = if curve.has_cm() {
                    (
                        Gl2Type::Dihedral(Quotient::NonInvariant),
                        PoleOrders {
                            k2: 3,
                            k3: Some(10),
                            k4: Some(35),
                        },
                    )
                } else {
                    (
                        Gl2Type::NonSolvablePolyhedral,
                        PoleOrders {
                            k2: 2,
                            k3: Some(5),
                            k4: Some(14),
                        },
                    )
                };
                let info = SourceInfo {
                    id: id.clone(),
                    dimension: 2,
                    gl2_type: Some(gl2_type),
                    pole_orders,
                    sampled: false,
                };
                let (stream, cache_hit) = cached(opts, &id, || Ok(curve.eigenvalues(opts.limit)))?;
                Ok(Generated {
                    stream,
                    info,
                    cache_hit,
                    q8_orders: None,
                })
            }
            SourceSpec::Q8(path) => {
                let src = match path {
                    None => Q8Source::default_polynomial(),
                    Some(p) => Q8Source::from_file(p)?,
                };
                let id = src.id();
                let (stream, cache_hit) = cached(opts, &id, || Ok(src.eigenvalues(opts.limit)?.0))?;
                let info = SourceInfo {
                    id,
                    dimension: 2,
                    gl2_type: Some(Gl2Type::Dihedral(Quotient::Invariant)),
                    pole_orders: PoleOrders {
                        k2: 4,
                        k3: Some(16),
                        k4: Some(64),
                    },
                    sampled: false,
                };
                let orders = q8_orders(&stream);
                Ok(Generated {
                    stream,
                    info,
                    cache_hit,
                    q8_orders: Some(orders),
                })
            }
            SourceSpec::Dirichlet { modulus, index } => {
                let chi = RealCharacter::new(*modulus, *index)?;
                let id = chi.id();
                let (stream, cache_hit) = cached(opts, &id, || Ok(chi.eigenvalues(opts.limit)))?;
                let info = SourceInfo {
                    id,
                    dimension: 1,
                    gl2_type: None,
                    pole_orders: PoleOrders {
                        k2: 1,
                        k3: Some(1),
                        k4: Some(1),
                    },
                    sampled: false,
                };
                Ok(Generated {
                    stream,
                    info,
                    cache_hit,
                    q8_orders: None,
                })
            }
        }
    }
}

fn cached(
    opts: &GenerateOptions,
    id: &str,
    build: impl FnOnce() -> Result<EigenvalueStream, SourceError>,
) -> Result<(EigenvalueStream, bool), SourceError> {
    if opts.limit < 2 {
        return Err(SourceError::BadSpec("limit must be at least 2".into()));
    }
    if let Some(cache) = &opts.cache {
        if let Some(stream) = cache.load(id, opts.limit)? {
            return Ok((stream, true));
        }
    }
    let stream = build()?;
    if let Some(cache) = &opts.cache {
        cache.store(&stream)?;
    }
    Ok((stream, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in [
            "ec:0,-1,1,-10,-20",
            "q8",
            "serre:3",
            "dirichlet:4,1",
            "cheb:model.json",
        ] {
            assert_eq!(s.parse::<SourceSpec>().unwrap().to_string(), s);
        }
        assert!("ec:1,2,3".parse::<SourceSpec>().is_err());
        assert!("serre:x".parse::<SourceSpec>().is_err());
        assert!("dirichlet:4".parse::<SourceSpec>().is_err());
        assert!("nope".parse::<SourceSpec>().is_err());
    }

    #[test]
    fn cache_hit_on_rerun() {
        let dir = tempfile::tempdir().unwrap();
        let opts = GenerateOptions {
            limit: 2000,
            cache: Some(StreamCache::new(dir.path())),
            ..Default::default()
        };
        let spec: SourceSpec = "ec:0,0,0,-1,0".parse().unwrap();
        let cold = spec.generate(&opts).unwrap();
        let warm = spec.generate(&opts).unwrap();
        assert!(!cold.cache_hit && warm.cache_hit);
        assert_eq!(cold.stream, warm.stream);
        assert_eq!(
            cold.info.gl2_type,
            Some(Gl2Type::Dihedral(Quotient::NonInvariant))
        );
    }

    #[test]
    fn sampled_sources_are_seeded() {
        let opts = GenerateOptions {
            samples: 500,
            seed: 7,
            ..Default::default()
        };
        let a = SourceSpec::Serre(3).generate(&opts).unwrap();
        let b = SourceSpec::Serre(3).generate(&opts).unwrap();
        assert_eq!(a.stream, b.stream);
        assert_eq!(a.info.dimension, 3);
        assert_eq!(a.info.pole_orders.k2, 9);
        assert_eq!(a.stream.len(), 500);
    }
}
