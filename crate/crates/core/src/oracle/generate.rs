use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::matrix::is_strict_partition;
use crate::partition::{find_bridge_triangles, StabPartition};
use crate::rational::{r, Rational};
use crate::rep::{Instance, Side, StabRepresentation, UnitRect};
use crate::{Error, Result};

const DEN: i64 = 20;
const RETRIES: usize = 200;
const STRICT_RAW_ATTEMPTS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenClass {
    #[serde(rename = "2SIG")]
    Sig,
    #[serde(rename = "proper-2SIG")]
    Proper2Sig,
    #[serde(rename = "2SUIG")]
    Suig,
    #[serde(rename = "2SIIG")]
    Siig,
    #[serde(rename = "2SUIIG")]
    Suiig,
    #[serde(rename = "triangle-free-2SUIG")]
    TriangleFree2Suig,
    #[serde(rename = "bridge-triangle-free-2SUIG")]
    BridgeTriangleFree2Suig,
}

impl GenClass {
    pub const ALL: [GenClass; 7] = [
        GenClass::Sig,
        GenClass::Proper2Sig,
        GenClass::Suig,
        GenClass::Siig,
        GenClass::Suiig,
        GenClass::TriangleFree2Suig,
        GenClass::BridgeTriangleFree2Suig,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenClass::Sig => "2SIG",
            GenClass::Proper2Sig => "proper-2SIG",
            GenClass::Suig => "2SUIG",
            GenClass::Siig => "2SIIG",
            GenClass::Suiig => "2SUIIG",
            GenClass::TriangleFree2Suig => "triangle-free-2SUIG",
            GenClass::BridgeTriangleFree2Suig => "bridge-triangle-free-2SUIG",
        }
    }

    fn unit(self) -> bool {
        !matches!(self, GenClass::Sig | GenClass::Proper2Sig | GenClass::Siig)
    }

    fn independent_upper(self) -> bool {
        matches!(self, GenClass::Siig | GenClass::Suiig)
    }

    /// Whether `inst` belongs to the class.
    pub fn admits(self, inst: &Instance) -> bool {
        let part = || StabPartition::from_instance(inst);
        match self {
            GenClass::Sig => true,
            GenClass::Proper2Sig => inst.rep.is_proper(),
            GenClass::Suig => inst.is_2suig(),
            GenClass::Siig => inst.is_2siig(),
            GenClass::Suiig => inst.is_2suiig(),
            GenClass::TriangleFree2Suig => inst.is_2suig() && inst.graph.triangles().is_empty(),
            GenClass::BridgeTriangleFree2Suig => {
                inst.is_2suig() && find_bridge_triangles(&inst.graph, &part()).is_empty()
            }
        }
    }
}

impl fmt::Display for GenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::ClassMismatch { class: "generator", reason: format!("unknown class {s:?}") })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n_lower: usize,
    pub n_upper: usize,
    pub bridge_density: Rational,
    pub seed: u64,
    pub class: GenClass,
    /// For 2SUIIG: only accept strict partitions.
    #[serde(default)]
    pub require_strict: bool,
}

impl GeneratorConfig {
    pub fn new(class: GenClass, n_lower: usize, n_upper: usize, seed: u64) -> Self {
        GeneratorConfig { n_lower, n_upper, bridge_density: r(1, 2), seed, class, require_strict: false }
    }

    /// Sizes and density drawn from `seed`, with `1 <= n_lower + n_upper <= max_n`.
    pub fn sweep(class: GenClass, seed: u64, max_n: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ SWEEP_SALT);
        let n = rng.gen_range(1..=max_n.max(1));
        let n_upper = rng.gen_range(0..=n);
        let mut cfg = GeneratorConfig::new(class, n - n_upper, n_upper, seed);
        cfg.bridge_density = Rational::new(rng.gen_range(0..=4), 4);
        cfg
    }

    /// Strict-partition 2SUIIG sizes: `n_lower >= 2 n_upper + 1`, at most 20 vertices.
    pub fn strict_sweep(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ SWEEP_SALT);
        let n_upper = rng.gen_range(1..=4);
        let n_lower = 2 * n_upper + 1 + rng.gen_range(0..=5);
        let mut cfg = GeneratorConfig::new(GenClass::Suiig, n_lower, n_upper, seed);
        cfg.bridge_density = Rational::new(rng.gen_range(1..=5), 5);
        cfg.require_strict = true;
        cfg
    }

    pub fn describe(&self) -> String {
        format!(
            "class={} n_lower={} n_upper={} bridge_density={} seed={} require_strict={}",
            self.class, self.n_lower, self.n_upper, self.bridge_density, self.seed, self.require_strict
        )
    }
}

const SWEEP_SALT: u64 = 0x5eed_5eed_5eed_5eed;

fn q(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi), DEN)
}

fn chance(rng: &mut ChaCha8Rng, p: Rational) -> bool {
    Rational::new(rng.gen_range(0..DEN), DEN) < p
}

/// Widths of one side: unit, or sorted-endpoint proper, or arbitrary.
fn side_xs(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig, k: usize, independent: bool) -> Vec<(Rational, Rational)> {
    let span = (k as i64 * DEN * 7 / 10).max(DEN);
    let width = |rng: &mut ChaCha8Rng| match cfg.class {
        c if c.unit() => Rational::ONE,
        _ => q(rng, DEN / 2, 2 * DEN),
    };
    if independent {
        let mut x = q(rng, 0, DEN);
        return (0..k)
            .map(|_| {
                let w = width(rng);
                let iv = (x, x + w);
                x = x + w + q(rng, 1, DEN);
                iv
            })
            .collect();
    }
    (0..k)
        .map(|_| {
            let x = q(rng, 0, span);
            (x, x + width(rng))
        })
        .collect()
}

/// Lower bottoms in `[1/2, 1]` can reach upper bottoms in `[3/2, 2]`; the
/// complementary ranges reach nothing on the other side.
fn lower_y(rng: &mut ChaCha8Rng, d: Rational) -> Rational {
    if chance(rng, d) {
        q(rng, DEN / 2, DEN)
    } else {
        q(rng, 0, DEN / 2 - 1)
    }
}

fn upper_y(rng: &mut ChaCha8Rng, d: Rational) -> Rational {
    if chance(rng, d) {
        r(3, 2) + q(rng, 0, DEN / 2)
    } else {
        r(3, 2) + q(rng, DEN / 2 + 1, DEN)
    }
}

fn raw(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> StabRepresentation {
    let d = cfg.bridge_density;
    let mut rects = Vec::with_capacity(cfg.n_lower + cfg.n_upper);
    for (i, (a, b)) in side_xs(rng, cfg, cfg.n_lower, false).into_iter().enumerate() {
        let y = lower_y(rng, d);
        rects.push(UnitRect::new(format!("l{i}"), a, b, y));
    }
    let upper = side_xs(rng, cfg, cfg.n_upper, cfg.class.independent_upper());
    for (i, (a, b)) in upper.into_iter().enumerate() {
        let y = upper_y(rng, d);
        rects.push(UnitRect::new(format!("h{i}"), a, b, y));
    }
    if cfg.class == GenClass::Proper2Sig {
        make_proper(&mut rects);
    }
    let mut rep = StabRepresentation::with_rects(rects);
    rep.flags.unit_squares = cfg.class.unit();
    rep.flags.proper = cfg.class == GenClass::Proper2Sig;
    rep
}

/// Right endpoints re-drawn so that they increase with the left endpoints.
fn make_proper(rects: &mut [UnitRect]) {
    let mut idx: Vec<usize> = (0..rects.len()).collect();
    idx.sort_by(|&a, &b| rects[a].x_left.cmp(&rects[b].x_left).then(a.cmp(&b)));
    let mut prev: Option<(Rational, Rational)> = None;
    for i in idx {
        let rect = &mut rects[i];
        if let Some((pl, pr)) = prev {
            if rect.x_left == pl {
                rect.x_right = pr;
            } else if rect.x_right <= pr {
                rect.x_right = pr + Rational::new(1, DEN);
            }
        }
        prev = Some((rect.x_left, rect.x_right));
    }
}

/// Moves a vertex out of reach of the other side.
fn demote(rect: &mut UnitRect, side: Side) {
    rect.y_bottom = match side {
        Side::Lower => Rational::ZERO,
        Side::Upper => r(5, 2),
    };
}

/// Demotes bridge vertices until no triangle of the requested kind is left.
/// Triangles inside one side cannot be repaired this way; those instances
/// are rejected by the caller.
fn repair(rep: &mut StabRepresentation, class: GenClass) -> Result<()> {
    loop {
        let inst = Instance::new(rep)?;
        let part = StabPartition::from_instance(&inst);
        let bad = match class {
            GenClass::TriangleFree2Suig => inst
                .graph
                .triangles()
                .into_iter()
                .find(|t| t.iter().any(|&v| part.is_bridge_vertex(v))),
            GenClass::BridgeTriangleFree2Suig => find_bridge_triangles(&inst.graph, &part).first().copied(),
            _ => None,
        };
        let Some(t) = bad else { return Ok(()) };
        let v = *t.iter().filter(|&&v| part.is_bridge_vertex(v)).max().expect("bridge vertex");
        demote(&mut rep.rects[v], inst.sides[v]);
    }
}

/// Seeded instance of the requested class. Candidates are drawn, repaired
/// where a local repair exists, and otherwise redrawn up to a fixed count.
pub fn generate(cfg: &GeneratorConfig) -> Result<StabRepresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for attempt in 0..RETRIES {
        let mut rep = if cfg.class == GenClass::TriangleFree2Suig {
            sparse_sides(&mut rng, cfg)
        } else if cfg.require_strict && cfg.class == GenClass::Suiig && attempt >= STRICT_RAW_ATTEMPTS {
            match claw_centres(&mut rng, cfg)? {
                Some(rep) => rep,
                None => continue,
            }
        } else {
            raw(&mut rng, cfg)
        };
        repair(&mut rep, cfg.class)?;
        let inst = Instance::new(&rep)?;
        if !cfg.class.admits(&inst) {
            continue;
        }
        if cfg.require_strict && !is_strict_partition(&rep)? {
            continue;
        }
        return Ok(rep);
    }
    Err(Error::RetriesExhausted(cfg.describe()))
}

/// Strict 2SUIIG by construction: a connected lower chain, and each upper
/// square bridged to one centre `c` whose chain neighbours are far apart,
/// so `c`, its two neighbours and the upper square form a claw. Further
/// lower squares are raised at random where strictness survives.
fn claw_centres(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Result<Option<StabRepresentation>> {
    let m = cfg.n_lower;
    let mut xs = vec![q(rng, 0, DEN)];
    for _ in 1..m {
        let last = *xs.last().unwrap();
        xs.push(last + q(rng, 7, 15));
    }
    let mut rects: Vec<UnitRect> =
        (0..m).map(|i| UnitRect::square(format!("l{i}"), xs[i], q(rng, 0, DEN / 2 - 1))).collect();

    let mut centres: Vec<usize> = (1..m.saturating_sub(1)).filter(|&c| xs[c + 1] - xs[c - 1] > Rational::ONE).collect();
    for i in (1..centres.len()).rev() {
        centres.swap(i, rng.gen_range(0..=i));
    }
    let mut placed: Vec<(usize, Rational)> = Vec::new();
    for c in centres {
        if placed.len() == cfg.n_upper {
            break;
        }
        let x = xs[c] + q(rng, -DEN / 4, DEN / 4);
        let clear = placed
            .iter()
            .all(|&(c2, x2)| (x - x2).abs() > Rational::ONE && (x - xs[c2]).abs() > Rational::ONE && (x2 - xs[c]).abs() > Rational::ONE);
        if clear {
            placed.push((c, x));
        }
    }
    if placed.len() < cfg.n_upper {
        return Ok(None);
    }
    placed.sort_by_key(|&(_, x)| x);
    for (k, &(c, x)) in placed.iter().enumerate() {
        // y_c - tau >= 1/2 keeps the bridge.
        let kc = rng.gen_range(DEN / 2 + 1..=DEN);
        let kt = rng.gen_range(0..=kc - DEN / 2);
        rects[c].y_bottom = Rational::new(kc, DEN);
        rects.push(UnitRect::square(format!("h{k}"), x, r(3, 2) + Rational::new(kt, DEN)));
    }
    let mut rep = StabRepresentation::with_rects(rects);
    rep.flags.unit_squares = true;
    for i in 0..m {
        if rep.rects[i].y_bottom >= r(1, 2) || !chance(rng, cfg.bridge_density) {
            continue;
        }
        let old = rep.rects[i].y_bottom;
        rep.rects[i].y_bottom = q(rng, DEN / 2, DEN);
        let inst = Instance::new(&rep)?;
        if !inst.is_2suiig() || !is_strict_partition(&rep)? {
            rep.rects[i].y_bottom = old;
        }
    }
    Ok(Some(rep))
}

/// Unit squares whose consecutive left ends differ by more than 1/2, so no
/// three on a side pairwise overlap.
fn sparse_sides(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> StabRepresentation {
    let d = cfg.bridge_density;
    let mut rects = Vec::new();
    for (side, k, prefix) in [(Side::Lower, cfg.n_lower, "l"), (Side::Upper, cfg.n_upper, "h")] {
        let mut x = q(rng, 0, DEN);
        for i in 0..k {
            let y = match side {
                Side::Lower => lower_y(rng, d),
                Side::Upper => upper_y(rng, d),
            };
            rects.push(UnitRect::square(format!("{prefix}{i}"), x, y));
            x += q(rng, DEN / 2 + 1, 3 * DEN / 2);
        }
    }
    let mut rep = StabRepresentation::with_rects(rects);
    rep.flags.unit_squares = true;
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let cfg = GeneratorConfig::new(GenClass::Suiig, 4, 2, 1);
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
        let other = GeneratorConfig { seed: 2, ..cfg.clone() };
        assert_ne!(generate(&cfg).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn density_zero_has_no_bridges() {
        for class in GenClass::ALL {
            for seed in 0..10 {
                let cfg = GeneratorConfig { bridge_density: Rational::ZERO, ..GeneratorConfig::new(class, 5, 4, seed) };
                let inst = Instance::new(&generate(&cfg).unwrap()).unwrap();
                assert!(StabPartition::from_instance(&inst).bridge_edges.is_empty(), "{class} {seed}");
            }
        }
    }

    #[test]
    fn classes_hold() {
        for class in GenClass::ALL {
            for seed in 0..30 {
                let cfg = GeneratorConfig::new(class, 6, 5, seed);
                let rep = generate(&cfg).unwrap();
                assert!(rep.check().is_ok());
                assert!(class.admits(&Instance::new(&rep).unwrap()), "{class} {seed}");
            }
        }
    }

    #[test]
    fn strict_corpus_is_strict() {
        for seed in 0..40 {
            let cfg = GeneratorConfig {
                require_strict: true,
                bridge_density: r(4, 5),
                ..GeneratorConfig::new(GenClass::Suiig, 8, 3, seed)
            };
            let rep = generate(&cfg).unwrap();
            assert!(is_strict_partition(&rep).unwrap(), "{seed}");
        }
    }

    #[test]
    fn class_names_round_trip() {
        for class in GenClass::ALL {
            assert_eq!(class.name().parse::<GenClass>().unwrap(), class);
            let json = serde_json::to_string(&class).unwrap();
            assert_eq!(json, format!("\"{}\"", class.name()));
        }
        assert!("3SIG".parse::<GenClass>().is_err());
    }
}
