//! Graph families: standard graphs, the twisted cylindrical grid, the
//! biregular family and the isomorphism-free small-graph corpus.

mod corpus;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{cartesian_product, Graph};

pub use corpus::{small_corpus, small_corpus_iter, CorpusFilters};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
    #[error("corpus order {0} exceeds the supported maximum of 9")]
    TooLarge(usize),
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::ParamOutOfRange(msg()))
    }
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap())
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges).unwrap())
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    require(a >= 1 && b >= 1, || format!("complete bipartite needs a, b >= 1, got {a},{b}"))?;
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Ok(Graph::new(a + b, edges).unwrap())
}

/// Rim `0..n` as a cycle, hub `n`.
pub fn wheel(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 3, || format!("wheel needs a rim of at least 3, got {n}"))?;
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n));
    Ok(Graph::new(n + 1, rim.chain(spokes)).unwrap())
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, edges).unwrap()
}

/// `P_len □ P_2`: column `c` holds the vertices `2c` (top) and `2c+1` (bottom).
pub fn ladder(len: usize) -> Result<Graph, FamilyError> {
    Ok(cartesian_product(&path(len)?, &path(2)?))
}

/// Finite circular twisted cylindrical grid: vertices `(i, j)` with
/// `i in Z_t`, `j in Z_k`, index `i*k + j`, and edges `(i,j)(i+1,j)` and
/// `(i,j)(i+1,j+1 mod k)`.
pub fn twisted_grid(t: usize, k: usize) -> Result<Graph, FamilyError> {
    require(t >= 3 && k >= 3, || format!("twisted grid needs t, k >= 3, got {t},{k}"))?;
    let idx = |i: usize, j: usize| (i % t) * k + j % k;
    let mut edges = Vec::with_capacity(2 * t * k);
    for i in 0..t {
        for j in 0..k {
            edges.push((idx(i, j), idx(i + 1, j)));
            edges.push((idx(i, j), idx(i + 1, j + 1)));
        }
    }
    Ok(Graph::new(t * k, edges).unwrap())
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `r`-subsets of `0..h` as bitmasks, in increasing numeric order.
fn subsets(h: usize, r: usize) -> Vec<u32> {
    (0u32..1 << h).filter(|m| m.count_ones() as usize == r).collect()
}

/// The biregular family with its two sides.
#[derive(Clone, Debug)]
pub struct Biregular {
    pub graph: Graph,
    /// The `(i, A1, A2)` side, of degree `2r`.
    pub u_side: Vec<usize>,
    /// The `(i, j)` side.
    pub v_side: Vec<usize>,
}

/// Vertices `(i, j)` for `i in Z_t`, `j in 0..h` come first with index
/// `i*h + j`; then `(i, A1, A2)` for `r`-subsets `A1, A2` of `0..h`. Vertex
/// `(i, A1, A2)` is adjacent to `(i, j)` for `j in A1` and to `(i+1, j)` for
/// `j in A2`.
pub fn biregular_family(t: usize, h: usize, r: usize) -> Result<Biregular, FamilyError> {
    require(t >= 2 && r >= 1 && r <= h && h <= 16, || {
        format!("biregular family needs t >= 2 and 1 <= r <= h <= 16, got {t},{h},{r}")
    })?;
    let subs = subsets(h, r);
    let s = subs.len();
    let nv = t * h;
    let n = nv + t * s * s;
    let mut edges = Vec::new();
    for i in 0..t {
        for (a, &a1) in subs.iter().enumerate() {
            for (b, &a2) in subs.iter().enumerate() {
                let u = nv + (i * s + a) * s + b;
                for j in 0..h {
                    if a1 >> j & 1 == 1 {
                        edges.push((u, i * h + j));
                    }
                    if a2 >> j & 1 == 1 {
                        edges.push((u, ((i + 1) % t) * h + j));
                    }
                }
            }
        }
    }
    Ok(Biregular {
        graph: Graph::new(n, edges).unwrap(),
        u_side: (nv..n).collect(),
        v_side: (0..nv).collect(),
    })
}

/// Order `t*C(h,r)^2 + t*h` of the biregular family.
pub fn biregular_order(t: usize, h: usize, r: usize) -> usize {
    t * binomial(h, r).pow(2) + t * h
}

/// Degrees `(2r, 2*C(h-1,r-1)*C(h,r))` of the biregular family.
pub fn biregular_degrees(h: usize, r: usize) -> (usize, usize) {
    (2 * r, 2 * binomial(h - 1, r - 1) * binomial(h, r))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    TwistedGrid { t: usize, k: usize },
    Biregular { t: usize, h: usize, r: usize },
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Petersen,
    Cartesian(Vec<FamilySpec>),
    SmallCorpus { max_n: usize, filters: CorpusFilters },
}

impl FamilySpec {
    /// Graphs described by the spec; a single graph except for corpora.
    pub fn graphs(&self) -> Result<Vec<Graph>, FamilyError> {
        Ok(match self {
            FamilySpec::SmallCorpus { max_n, filters } => small_corpus(*max_n, filters)?,
            other => vec![other.graph()?],
        })
    }

    /// The single graph described by a non-corpus spec.
    pub fn graph(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::TwistedGrid { t, k } => twisted_grid(*t, *k),
            FamilySpec::Biregular { t, h, r } => Ok(biregular_family(*t, *h, *r)?.graph),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            FamilySpec::Wheel(n) => wheel(*n),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Cartesian(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| FamilyError::ParamOutOfRange("empty cartesian product".into()))?;
                iter.try_fold(first.graph()?, |acc, p| Ok(cartesian_product(&acc, &p.graph()?)))
            }
            FamilySpec::SmallCorpus { .. } => Err(FamilyError::ParamOutOfRange(
                "a corpus describes many graphs".into(),
            )),
        }
    }
}

fn parse_params(s: &str, count: usize, spec: &str) -> Result<Vec<usize>, FamilyError> {
    let vals: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse()).collect();
    match vals {
        Ok(v) if v.len() == count => Ok(v),
        _ => Err(FamilyError::Parse(spec.to_string())),
    }
}

/// Splits `(a)(b)(c)` into `a`, `b`, `c`, respecting nesting.
fn split_groups(s: &str, spec: &str) -> Result<Vec<String>, FamilyError> {
    let err = || FamilyError::Parse(spec.to_string());
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                if depth > 0 {
                    cur.push(c);
                }
                depth += 1;
            }
            ')' => {
                depth = depth.checked_sub(1).ok_or_else(err)?;
                if depth == 0 {
                    out.push(std::mem::take(&mut cur));
                } else {
                    cur.push(c);
                }
            }
            c if depth > 0 => cur.push(c),
            c if c.is_whitespace() => {}
            _ => return Err(err()),
        }
    }
    if depth != 0 || out.is_empty() {
        return Err(err());
    }
    Ok(out)
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Syntax: `kind:params`, for example `cycle:5`, `twisted_grid:5,5`,
    /// `biregular:3,4,2`, `cartesian:(cycle:4)(path:2)` or
    /// `small_corpus:6,biconnected,non_cycle,minor_free=5`.
    fn from_str(spec: &str) -> Result<Self, FamilyError> {
        let spec = spec.trim();
        let (kind, params) = spec.split_once(':').unwrap_or((spec, ""));
        let p = |count| parse_params(params, count, spec);
        Ok(match kind {
            "twisted_grid" => {
                let v = p(2)?;
                FamilySpec::TwistedGrid { t: v[0], k: v[1] }
            }
            "biregular" => {
                let v = p(3)?;
                FamilySpec::Biregular {
                    t: v[0],
                    h: v[1],
                    r: v[2],
                }
            }
            "cycle" => FamilySpec::Cycle(p(1)?[0]),
            "path" => FamilySpec::Path(p(1)?[0]),
            "complete" => FamilySpec::Complete(p(1)?[0]),
            "complete_bipartite" => {
                let v = p(2)?;
                FamilySpec::CompleteBipartite(v[0], v[1])
            }
            "wheel" => FamilySpec::Wheel(p(1)?[0]),
            "petersen" if params.is_empty() => FamilySpec::Petersen,
            "cartesian" => FamilySpec::Cartesian(
                split_groups(params, spec)?
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<_, _>>()?,
            ),
            "small_corpus" => {
                let mut parts = params.split(',');
                let max_n = parts
                    .next()
                    .and_then(|s| s.trim().parse().ok())
                    .ok_or_else(|| FamilyError::Parse(spec.to_string()))?;
                let mut filters = CorpusFilters::default();
                for f in parts {
                    filters
                        .apply_token(f.trim())
                        .map_err(|_| FamilyError::Parse(spec.to_string()))?;
                }
                FamilySpec::SmallCorpus { max_n, filters }
            }
            _ => return Err(FamilyError::Parse(spec.to_string())),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::TwistedGrid { t, k } => write!(f, "twisted_grid:{t},{k}"),
            FamilySpec::Biregular { t, h, r } => write!(f, "biregular:{t},{h},{r}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Cartesian(parts) => {
                write!(f, "cartesian:")?;
                parts.iter().try_for_each(|p| write!(f, "({p})"))
            }
            FamilySpec::SmallCorpus { max_n, filters } => {
                write!(f, "small_corpus:{max_n}")?;
                filters.tokens().iter().try_for_each(|t| write!(f, ",{t}"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_biregular;

    #[test]
    fn standard_graphs() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let star = complete_bipartite(1, 3).unwrap();
        assert_eq!(star.degree(0), 3);
        assert_eq!((star.n(), star.m()), (4, 3));
        let cube = FamilySpec::from_str("cartesian:(cycle:4)(path:2)").unwrap().graph().unwrap();
        assert_eq!((cube.n(), cube.m()), (8, 12));
        assert!(cube.is_regular() && cube.degree(0) == 3);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn twisted_grid_shape() {
        let g = twisted_grid(5, 5).unwrap();
        assert_eq!(g.n(), 25);
        assert!(g.is_regular() && g.degree(0) == 4);
        let g = twisted_grid(8, 3).unwrap();
        assert_eq!(g.m(), 48);
        assert!(g.is_connected());
    }

    #[test]
    fn biregular_closed_forms() {
        let b = biregular_family(3, 4, 2).unwrap();
        assert_eq!(b.graph.n(), 120);
        assert_eq!(biregular_order(3, 4, 2), 120);
        assert_eq!(is_biregular(&b.graph, &b.u_side, &b.v_side), Ok(Some((4, 36))));
        assert_eq!(biregular_degrees(4, 2), (4, 36));
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "twisted_grid:5,5",
            "biregular:3,4,2",
            "cartesian:(cycle:4)(path:2)",
            "cartesian:(cartesian:(path:2)(path:2))(cycle:3)",
            "petersen",
            "small_corpus:6,biconnected,non_cycle",
        ] {
            assert_eq!(FamilySpec::from_str(s).unwrap().to_string(), s);
        }
        assert!(FamilySpec::from_str("cycle:x").is_err());
        assert!(FamilySpec::from_str("mystery:3").is_err());
    }
}
