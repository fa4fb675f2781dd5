//! Generators for the oriented wheel, fan and cycle-amalgamation families.
//!
//! Vertex numbering is fixed per family so that instances can be compared
//! and serialized deterministically:
//!
//! * wheels: vertex 0 is the hub `c`, vertices 1..=n are the rim `v1..vn`
//! * fans: vertices 0..m are the centers `c1..cm`, then the path `v1..vn`
//! * path amalgamations: the shared path `v1..vx` first, then each cycle's
//!   own vertices in cycle order

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::digraph::Digraph;
use crate::distance::Dist;

/// The two triangle-simple orientations of an even wheel. They differ by
/// which rim parity class feeds the rim and which feeds the hub.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WheelVariant {
    A,
    B,
}

/// Spoke direction scheme for fans: `CentersOut` sends spokes from the
/// centers to the odd path vertices (so od(c) > id(c) when n is odd),
/// `CentersIn` is the parity swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanVariant {
    CentersOut,
    CentersIn,
}

/// Direction of the rim edge {v1, vn} that closes an odd wheel over its
/// spanning fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosingArc {
    VnToV1,
    V1ToVn,
}

impl fmt::Display for WheelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WheelVariant::A => write!(f, "A"),
            WheelVariant::B => write!(f, "B"),
        }
    }
}

impl FromStr for WheelVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" => Ok(WheelVariant::A),
            "B" => Ok(WheelVariant::B),
            other => Err(format!("unknown wheel variant `{other}` (expected A or B)")),
        }
    }
}

impl fmt::Display for FanVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanVariant::CentersOut => write!(f, "centers-out"),
            FanVariant::CentersIn => write!(f, "centers-in"),
        }
    }
}

impl FromStr for FanVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "centers-out" => Ok(FanVariant::CentersOut),
            "centers-in" => Ok(FanVariant::CentersIn),
            other => Err(format!(
                "unknown fan variant `{other}` (expected centers-out or centers-in)"
            )),
        }
    }
}

impl fmt::Display for ClosingArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosingArc::VnToV1 => write!(f, "vn-to-v1"),
            ClosingArc::V1ToVn => write!(f, "v1-to-vn"),
        }
    }
}

impl FromStr for ClosingArc {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "vn-to-v1" => Ok(ClosingArc::VnToV1),
            "v1-to-vn" => Ok(ClosingArc::V1ToVn),
            other => Err(format!(
                "unknown closing arc `{other}` (expected vn-to-v1 or v1-to-vn)"
            )),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(
        "wheel-c3simple requires even n >= 4 (got n={0}): \
         a wheel admits a triangle-simple orientation precisely when the rim is even"
    )]
    WheelParity(usize),
    #[error("wheel-odd requires odd n >= 3 (got n={0})")]
    WheelOddParity(usize),
    #[error(
        "wheel-dim2 requires n >= 8 (got n={0}); for 4 <= n <= 7 the \
         triangle-simple wheel generators already reach dimension 2"
    )]
    WheelDim2TooSmall(usize),
    #[error("{family} requires n >= {min} (got n={n})")]
    RimTooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("fan generators require m >= 1 (got m={0})")]
    NoCenters(usize),
    #[error("path-amal requires at least two cycles (got {0})")]
    TooFewCycles(usize),
    #[error("path-amal cycle lengths must be >= 3 (got {0})")]
    CycleTooShort(usize),
    #[error("path-amal requires 1 <= x <= min(lengths)-1 (got x={x} with min length {min})")]
    SharedPathTooLong { x: usize, min: usize },
    #[error("covering cycle {index} has {got} vertices, expected {expected}")]
    CoveringCycleLength {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("covering cycle {index} repeats vertex {v}")]
    CoveringCycleRepeat { index: usize, v: usize },
    #[error("covering cycle {index} uses edge {{{u}, {v}}} which the digraph does not carry")]
    CoveringMissingEdge { index: usize, u: usize, v: usize },
    #[error("no centers given")]
    EmptyCenters,
    #[error("vertex {v} out of range 0..{n}")]
    OutOfRange { v: usize, n: usize },
    #[error(
        "vertex {v} is at distance {d} from the center; wheel- and fan-like \
         orientations keep every vertex within distance 2"
    )]
    CenterTooFar { v: usize, d: Dist },
}

/// A generated digraph together with its parameters and vertex-name map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub spec: FamilySpec,
    pub digraph: Digraph,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    WheelC3Simple {
        n: usize,
        variant: WheelVariant,
    },
    WheelOdd {
        n: usize,
        variant: FanVariant,
        closing: ClosingArc,
    },
    WheelDim2 {
        n: usize,
    },
    FanC3Simple {
        m: usize,
        n: usize,
        variant: FanVariant,
    },
    FanDim2 {
        n: usize,
    },
    PathAmal {
        x: usize,
        lengths: Vec<usize>,
    },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<FamilyInstance, FamilyError> {
        match self {
            FamilySpec::WheelC3Simple { n, variant } => oriented_wheel_c3simple(*n, *variant),
            FamilySpec::WheelOdd {
                n,
                variant,
                closing,
            } => oriented_wheel_odd(*n, *variant, *closing),
            FamilySpec::WheelDim2 { n } => wheel_dim2_orientation(*n),
            FamilySpec::FanC3Simple { m, n, variant } => oriented_fan_c3simple(*m, *n, *variant),
            FamilySpec::FanDim2 { n } => fan_dim2_orientation(*n),
            FamilySpec::PathAmal { x, lengths } => path_amal_cycles(*x, lengths),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::WheelC3Simple { n, variant } => {
                write!(f, "wheel-c3simple:n={n},variant={variant}")
            }
            FamilySpec::WheelOdd {
                n,
                variant,
                closing,
            } => write!(f, "wheel-odd:n={n},variant={variant},closing={closing}"),
            FamilySpec::WheelDim2 { n } => write!(f, "wheel-dim2:n={n}"),
            FamilySpec::FanC3Simple { m, n, variant } => {
                write!(f, "fan-c3simple:m={m},n={n},variant={variant}")
            }
            FamilySpec::FanDim2 { n } => write!(f, "fan-dim2:n={n}"),
            FamilySpec::PathAmal { x, lengths } => {
                let lengths = lengths
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                write!(f, "path-amal:x={x},lengths={lengths}")
            }
        }
    }
}

/// `family:key=value,...` parameter bag used by the parser.
struct Params<'a> {
    spec: &'a str,
    entries: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn parse(spec: &'a str, body: &'a str) -> Result<Self, String> {
        let mut entries = Vec::new();
        for part in body.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}` in `{spec}`"))?;
            if entries.iter().any(|&(seen, _)| seen == k) {
                return Err(format!("duplicate parameter `{k}` in `{spec}`"));
            }
            entries.push((k, v));
        }
        Ok(Params { spec, entries })
    }

    fn take(&mut self, key: &str) -> Option<&'a str> {
        let i = self.entries.iter().position(|&(k, _)| k == key)?;
        Some(self.entries.remove(i).1)
    }

    fn required<T: FromStr>(&mut self, key: &str) -> Result<T, String>
    where
        T::Err: fmt::Display,
    {
        let raw = self
            .take(key)
            .ok_or_else(|| format!("missing parameter `{key}` in `{}`", self.spec))?;
        raw.parse()
            .map_err(|e| format!("bad value for `{key}` in `{}`: {e}", self.spec))
    }

    fn optional<T: FromStr>(&mut self, key: &str, default: T) -> Result<T, String>
    where
        T::Err: fmt::Display,
    {
        match self.take(key) {
            None => Ok(default),
            Some(raw) => raw
                .parse()
                .map_err(|e| format!("bad value for `{key}` in `{}`: {e}", self.spec)),
        }
    }

    fn finish(self) -> Result<(), String> {
        match self.entries.first() {
            None => Ok(()),
            Some((k, _)) => Err(format!("unknown parameter `{k}` in `{}`", self.spec)),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (family, body) = s
            .split_once(':')
            .ok_or_else(|| format!("missing `:` in family spec `{s}`"))?;
        let mut p = Params::parse(s, body)?;
        let spec = match family {
            "wheel-c3simple" => FamilySpec::WheelC3Simple {
                n: p.required("n")?,
                variant: p.optional("variant", WheelVariant::A)?,
            },
            "wheel-odd" => FamilySpec::WheelOdd {
                n: p.required("n")?,
                variant: p.optional("variant", FanVariant::CentersOut)?,
                closing: p.optional("closing", ClosingArc::VnToV1)?,
            },
            "wheel-dim2" => FamilySpec::WheelDim2 {
                n: p.required("n")?,
            },
            "fan-c3simple" => FamilySpec::FanC3Simple {
                m: p.required("m")?,
                n: p.required("n")?,
                variant: p.optional("variant", FanVariant::CentersOut)?,
            },
            "fan-dim2" => FamilySpec::FanDim2 {
                n: p.required("n")?,
            },
            "path-amal" => {
                let x = p.required("x")?;
                let raw = p
                    .take("lengths")
                    .ok_or_else(|| format!("missing parameter `lengths` in `{s}`"))?;
                let lengths = raw
                    .split('+')
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| format!("bad cycle length `{t}` in `{s}`"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                FamilySpec::PathAmal { x, lengths }
            }
            other => return Err(format!("unknown family `{other}`")),
        };
        p.finish()?;
        Ok(spec)
    }
}

fn wheel_labels(n: usize) -> Vec<String> {
    let mut labels = vec!["c".to_string()];
    labels.extend((1..=n).map(|i| format!("v{i}")));
    labels
}

fn fan_labels(m: usize, n: usize) -> Vec<String> {
    let mut labels: Vec<String> = if m == 1 {
        vec!["c".to_string()]
    } else {
        (1..=m).map(|j| format!("c{j}")).collect()
    };
    labels.extend((1..=n).map(|i| format!("v{i}")));
    labels
}

fn instance(spec: FamilySpec, n: usize, arcs: BTreeSet<(usize, usize)>, labels: Vec<String>) -> FamilyInstance {
    let digraph = Digraph::new(n, arcs).expect("generated arc set is a valid orientation");
    FamilyInstance {
        spec,
        digraph,
        labels,
    }
}

/// Triangle-simple orientation of the even wheel: one rim parity class
/// receives the spokes and feeds both rim neighbors, the other sends its
/// spoke back to the hub, and the wrap-around arc keeps the rim pattern
/// consistent between v1 and vn.
pub fn oriented_wheel_c3simple(
    n: usize,
    variant: WheelVariant,
) -> Result<FamilyInstance, FamilyError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(FamilyError::WheelParity(n));
    }
    let feeds_rim = |i: usize| match variant {
        WheelVariant::A => i % 2 == 1,
        WheelVariant::B => i.is_multiple_of(2),
    };
    let succ = |i: usize| if i == n { 1 } else { i + 1 };
    let pred = |i: usize| if i == 1 { n } else { i - 1 };
    let mut arcs = BTreeSet::new();
    for i in 1..=n {
        if feeds_rim(i) {
            arcs.insert((0, i));
            arcs.insert((i, succ(i)));
            arcs.insert((i, pred(i)));
        } else {
            arcs.insert((i, 0));
        }
    }
    Ok(instance(
        FamilySpec::WheelC3Simple { n, variant },
        n + 1,
        arcs,
        wheel_labels(n),
    ))
}

/// Triangle-simple orientation of the fan: every center is joined to every
/// path vertex, one path parity class receives all spokes and feeds its
/// path neighbors, the other sends spokes back to every center.
pub fn oriented_fan_c3simple(
    m: usize,
    n: usize,
    variant: FanVariant,
) -> Result<FamilyInstance, FamilyError> {
    if m < 1 {
        return Err(FamilyError::NoCenters(m));
    }
    if n < 2 {
        return Err(FamilyError::RimTooSmall {
            family: "fan-c3simple",
            n,
            min: 2,
        });
    }
    let receives_spokes = |i: usize| match variant {
        FanVariant::CentersOut => i % 2 == 1,
        FanVariant::CentersIn => i.is_multiple_of(2),
    };
    let v = |i: usize| m + i - 1;
    let mut arcs = BTreeSet::new();
    for i in 1..=n {
        if receives_spokes(i) {
            for c in 0..m {
                arcs.insert((c, v(i)));
            }
            if i < n {
                arcs.insert((v(i), v(i + 1)));
            }
            if i >= 2 {
                arcs.insert((v(i), v(i - 1)));
            }
        } else {
            for c in 0..m {
                arcs.insert((v(i), c));
            }
        }
    }
    Ok(instance(
        FamilySpec::FanC3Simple { m, n, variant },
        m + n,
        arcs,
        fan_labels(m, n),
    ))
}

/// Odd wheel built from a triangle-simple spanning fan plus the closing
/// rim arc between v1 and vn. Odd wheels have no triangle-simple
/// orientation of their own; the closing triangle is left non-strong.
pub fn oriented_wheel_odd(
    n: usize,
    variant: FanVariant,
    closing: ClosingArc,
) -> Result<FamilyInstance, FamilyError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(FamilyError::WheelOddParity(n));
    }
    let fan = oriented_fan_c3simple(1, n, variant)?;
    let mut arcs: BTreeSet<(usize, usize)> = fan.digraph.arcs().iter().copied().collect();
    match closing {
        ClosingArc::VnToV1 => arcs.insert((n, 1)),
        ClosingArc::V1ToVn => arcs.insert((1, n)),
    };
    Ok(instance(
        FamilySpec::WheelOdd {
            n,
            variant,
            closing,
        },
        n + 1,
        arcs,
        wheel_labels(n),
    ))
}

/// Dimension-2 orientation of a large wheel: a triangle-simple fan on the
/// first seven rim vertices, an oriented rim path from v1 through vn down
/// to v7, and hub spokes out to every tail vertex.
pub fn wheel_dim2_orientation(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 8 {
        return Err(FamilyError::WheelDim2TooSmall(n));
    }
    let fan = oriented_fan_c3simple(1, 7, FanVariant::CentersOut)?;
    let mut arcs: BTreeSet<(usize, usize)> = fan.digraph.arcs().iter().copied().collect();
    arcs.insert((1, n));
    for i in 8..=n {
        arcs.insert((i, i - 1));
        arcs.insert((0, i));
    }
    Ok(instance(
        FamilySpec::WheelDim2 { n },
        n + 1,
        arcs,
        wheel_labels(n),
    ))
}

/// Dimension-2 orientation of the single-center fan. The head of the path
/// uses a fixed asymmetric arc set; longer fans append an oriented path
/// from vn down to v4 plus spokes out of the center.
///
/// v1 has no incoming arc, so the result is deliberately not strongly
/// connected; use the sentinel dimension mode with it.
pub fn fan_dim2_orientation(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(FamilyError::RimTooSmall {
            family: "fan-dim2",
            n,
            min: 3,
        });
    }
    let mut arcs = BTreeSet::from([(1, 2), (3, 2), (1, 0), (2, 0), (0, 3)]);
    if n >= 4 {
        arcs.insert((3, 4));
        arcs.insert((4, 0));
    }
    for i in 5..=n {
        arcs.insert((i, i - 1));
        arcs.insert((0, i));
    }
    Ok(instance(
        FamilySpec::FanDim2 { n },
        n + 1,
        arcs,
        fan_labels(1, n),
    ))
}

/// Strongly oriented cycles glued along a shared directed path v1 -> .. -> vx.
/// Each cycle continues from vx through its own vertices and returns to v1.
pub fn path_amal_cycles(x: usize, lengths: &[usize]) -> Result<FamilyInstance, FamilyError> {
    if lengths.len() < 2 {
        return Err(FamilyError::TooFewCycles(lengths.len()));
    }
    if let Some(&short) = lengths.iter().find(|&&l| l < 3) {
        return Err(FamilyError::CycleTooShort(short));
    }
    let min = *lengths.iter().min().expect("at least two lengths");
    if x < 1 || x > min - 1 {
        return Err(FamilyError::SharedPathTooLong { x, min });
    }
    let mut arcs = BTreeSet::new();
    for j in 0..x - 1 {
        arcs.insert((j, j + 1));
    }
    let mut labels: Vec<String> = (1..=x).map(|i| format!("v{i}")).collect();
    let mut next = x;
    for (idx, &len) in lengths.iter().enumerate() {
        let own = len - x;
        let start = next;
        next += own;
        labels.extend((x + 1..=len).map(|k| format!("v{k}^{}", idx + 1)));
        arcs.insert((x - 1, start));
        for k in 0..own - 1 {
            arcs.insert((start + k, start + k + 1));
        }
        arcs.insert((start + own - 1, 0));
    }
    Ok(instance(
        FamilySpec::PathAmal {
            x,
            lengths: lengths.to_vec(),
        },
        next,
        arcs,
        labels,
    ))
}

/// Checks that every listed covering cycle is strongly oriented, i.e. its
/// underlying edges all point the same way around. Missing underlying
/// edges are reported as errors rather than `false`.
pub fn check_cn_simple(
    d: &Digraph,
    cycle_length: usize,
    covering: &[Vec<usize>],
) -> Result<bool, FamilyError> {
    let mut all_simple = true;
    for (index, cycle) in covering.iter().enumerate() {
        if cycle.len() != cycle_length {
            return Err(FamilyError::CoveringCycleLength {
                index,
                got: cycle.len(),
                expected: cycle_length,
            });
        }
        for &v in cycle {
            if v >= d.n() {
                return Err(FamilyError::OutOfRange { v, n: d.n() });
            }
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(FamilyError::CoveringCycleRepeat { index, v: w[0] });
        }
        let mut forward = 0;
        let mut backward = 0;
        for k in 0..cycle.len() {
            let a = cycle[k];
            let b = cycle[(k + 1) % cycle.len()];
            if d.has_arc(a, b) {
                forward += 1;
            } else if d.has_arc(b, a) {
                backward += 1;
            } else {
                return Err(FamilyError::CoveringMissingEdge { index, u: a, v: b });
            }
        }
        if forward != cycle.len() && backward != cycle.len() {
            all_simple = false;
        }
    }
    Ok(all_simple)
}

/// Canonical triangle covering of a wheel in generator numbering.
pub fn wheel_triangles(n: usize) -> Vec<Vec<usize>> {
    (1..=n)
        .map(|i| vec![0, i, if i == n { 1 } else { i + 1 }])
        .collect()
}

/// Canonical triangle covering of a fan in generator numbering.
pub fn fan_triangles(m: usize, n: usize) -> Vec<Vec<usize>> {
    let v = |i: usize| m + i - 1;
    (0..m)
        .flat_map(|c| (1..n).map(move |i| vec![c, v(i), v(i + 1)]))
        .collect()
}

/// Distance classes around the centers of a wheel- or fan-like digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterPartition {
    pub centers: Vec<usize>,
    pub dist1: Vec<usize>,
    pub dist2: Vec<usize>,
}

/// Partitions the non-center vertices by their distance from the first
/// center. In the triangle-simple families the centers all see the same
/// classes, so one source suffices.
pub fn center_partition(d: &Digraph, centers: &[usize]) -> Result<CenterPartition, FamilyError> {
    if centers.is_empty() {
        return Err(FamilyError::EmptyCenters);
    }
    if let Some(&v) = centers.iter().find(|&&c| c >= d.n()) {
        return Err(FamilyError::OutOfRange { v, n: d.n() });
    }
    let dist = d.distances_from(centers[0]);
    let mut dist1 = Vec::new();
    let mut dist2 = Vec::new();
    for (v, &dv) in dist.iter().enumerate() {
        if centers.contains(&v) {
            continue;
        }
        match dv {
            Dist::Finite(1) => dist1.push(v),
            Dist::Finite(2) => dist2.push(v),
            far => return Err(FamilyError::CenterTooFar { v, d: far }),
        }
    }
    let mut centers = centers.to_vec();
    centers.sort_unstable();
    Ok(CenterPartition {
        centers,
        dist1,
        dist2,
    })
}
