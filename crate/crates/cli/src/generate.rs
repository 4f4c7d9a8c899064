use std::collections::BTreeMap;
use std::fmt::Write;

use graph_core::generate::{generate_family, Family, Planted};
use graph_core::Graph;

use crate::CliError;

pub struct Generated {
    pub graph: Graph,
    /// Planted certificate text: a vertex list for modulators, one class per
    /// line for type partitions.
    pub certificate: Option<String>,
}

/// Parses `--family` and `--params` ("key=value,key=value"; list values
/// separated by ':').
pub fn parse_family(name: &str, params: &str) -> Result<Family, CliError> {
    let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
    for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("parameter {item:?} is not key=value")))?;
        if kv.insert(k.trim(), v.trim()).is_some() {
            return Err(CliError::Parse(format!("parameter {k:?} given twice")));
        }
    }
    let mut take = |key: &str| -> Result<&str, CliError> {
        kv.remove(key).ok_or_else(|| CliError::Parse(format!("family {name} needs parameter {key}")))
    };
    fn int(s: &str) -> Result<usize, CliError> {
        s.parse().map_err(|_| CliError::Parse(format!("not a non-negative integer: {s:?}")))
    }
    let family = match name.replace('-', "_").as_str() {
        "path" => Family::Path { n: int(take("n")?)? },
        "cycle" => Family::Cycle { n: int(take("n")?)? },
        "star" => Family::Star { leaves: int(take("leaves")?)? },
        "random_tree" => Family::RandomTree { n: int(take("n")?)? },
        "random_maximal_outerplanar" => Family::RandomMaximalOuterplanar { n: int(take("n")?)? },
        "random_cluster_plus_modulator" => {
            let cliques = take("cliques")?.split(':').map(int).collect::<Result<Vec<_>, _>>()?;
            Family::RandomClusterPlusModulator { cliques, d: int(take("d")?)? }
        }
        "random_bounded_nd" => Family::RandomBoundedNd { types: int(take("types")?)?, max_class: int(take("max_class")?)? },
        "subdivided_clique" => Family::SubdividedClique { n: int(take("n")?)? },
        "random_connected" => {
            let n = int(take("n")?)?;
            let t = take("p")?;
            let p = t.parse().map_err(|_| CliError::Parse(format!("not a number: {t:?}")))?;
            Family::RandomConnected { n, p }
        }
        "random_planar" => Family::RandomPlanar { n: int(take("n")?)? },
        other => return Err(CliError::Parse(format!("unknown family {other:?}"))),
    };
    if let Some(k) = kv.keys().next() {
        return Err(CliError::Parse(format!("family {name} has no parameter {k:?}")));
    }
    Ok(family)
}

pub fn generate(family: &Family, seed: u64) -> Result<Generated, CliError> {
    let (graph, planted) = generate_family(family, seed)?;
    let certificate = planted.map(|pl| {
        let mut s = String::new();
        match pl {
            Planted::Modulator(x) => {
                for v in x.members() {
                    writeln!(s, "{}", v + 1).unwrap();
                }
            }
            Planted::Partition(classes) => {
                for (set, clique) in classes {
                    let kind = if clique { "clique" } else { "independent" };
                    let vs: Vec<String> = set.members().iter().map(|v| (v + 1).to_string()).collect();
                    writeln!(s, "{kind}: {}", vs.join(" ")).unwrap();
                }
            }
        }
        s
    });
    Ok(Generated { graph, certificate })
}
