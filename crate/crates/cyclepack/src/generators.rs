//! Deterministic constructors for the digraph families used by the
//! verification harness.
//!
//! All generators use a frozen vertex numbering so fixtures and witnesses
//! are byte-stable across runs:
//!
//! * layered families ([`even_girth`], [`odd_girth`]): the X layer is
//!   `0..n`, then the Y blocks in layer order, `Y_i` occupying
//!   `n + i*h .. n + (i+1)*h`;
//! * [`bipartite_tournament`]: the X blocks first (`X_i` occupying
//!   `i*h .. (i+1)*h`), then `y_0..y_h` at the end;
//! * [`pad_sources`] appends the new source vertices after the existing
//!   ones.
//!
//! Randomized generators are seed-deterministic: the sampling consumes a
//! ChaCha8 stream through a fixed partial Fisher-Yates, so identical
//! inputs give identical edge lists.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{Digraph, DigraphBuilder};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("even-girth family requires even girth >= 4, got {0}")]
    GirthNotEven(usize),
    #[error("odd-girth family requires odd girth >= 3, got {0}")]
    GirthNotOdd(usize),
    #[error("packing target k must be >= 1")]
    PackingTargetZero,
    #[error("bipartite tournament block size h must be >= 1")]
    BlockSizeZero,
    #[error("circular family requires step reach p >= 1 and girth g >= 2, got p={p}, g={g}")]
    CircularOutOfRange { p: usize, g: usize },
    #[error("complete symmetric digraph needs at least 1 vertex")]
    OrderZero,
    #[error("source padding outdegree {d} exceeds the {n} vertices available")]
    PaddingDegreeTooLarge { d: usize, n: usize },
    #[error("random digraph needs outdegree {delta} < vertex count {m}")]
    RandomDegreeTooLarge { delta: usize, m: usize },
}

/// Parameter bundle for the layered girth families, with the derived
/// quantities fixed by the construction: the per-vertex outdegree `h` and
/// the X-layer size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    /// Target girth g.
    pub girth: usize,
    /// Packing target k: the number of disjoint cycles the refuted
    /// conjecture would guarantee.
    pub packing_target: usize,
    /// Shift constant c, zero except in the "no additive constant" family.
    pub shift: usize,
    /// Deficiency t; reporting only, constrains nothing in the generator.
    pub deficiency: usize,
    /// Derived minimum outdegree: ceil(g*k / (g-1)) + c.
    pub min_outdegree: usize,
    /// Derived X-layer size.
    pub layer_count: usize,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

impl ConstructionParams {
    /// Parameters of the even-girth family: h = ceil(g*k/(g-1)) + c,
    /// n = (g/2 - 1)*h + 1.
    pub fn even(girth: usize, packing_target: usize, shift: usize) -> Result<Self, ParamError> {
        if girth < 4 || !girth.is_multiple_of(2) {
            return Err(ParamError::GirthNotEven(girth));
        }
        if packing_target == 0 {
            return Err(ParamError::PackingTargetZero);
        }
        let h = ceil_div(girth * packing_target, girth - 1) + shift;
        let n = (girth / 2 - 1) * h + 1;
        Ok(Self {
            girth,
            packing_target,
            shift,
            deficiency: 0,
            min_outdegree: h,
            layer_count: n,
        })
    }

    /// Parameters of the odd-girth family: g = 2r + 1,
    /// h = ceil(g*k/(g-1)), n = r*h + 1.
    pub fn odd(girth: usize, packing_target: usize) -> Result<Self, ParamError> {
        if girth < 3 || girth.is_multiple_of(2) {
            return Err(ParamError::GirthNotOdd(girth));
        }
        if packing_target == 0 {
            return Err(ParamError::PackingTargetZero);
        }
        let h = ceil_div(girth * packing_target, girth - 1);
        let r = (girth - 1) / 2;
        let n = r * h + 1;
        Ok(Self {
            girth,
            packing_target,
            shift: 0,
            deficiency: 0,
            min_outdegree: h,
            layer_count: n,
        })
    }

    pub fn with_deficiency(mut self, t: usize) -> Self {
        self.deficiency = t;
        self
    }

    /// Total vertex count of the generated digraph, n * (h + 1).
    pub fn vertex_count(&self) -> usize {
        self.layer_count * (self.min_outdegree + 1)
    }

    /// First vertex ID of block `Y_i`.
    pub fn y_block_start(&self, i: usize) -> usize {
        self.layer_count + i * self.min_outdegree
    }

    /// The X-layer vertex IDs, `0..n`.
    pub fn x_layer(&self) -> Vec<usize> {
        (0..self.layer_count).collect()
    }
}

/// Shared layered skeleton of the two girth families:
/// x_i -> every vertex of Y_i, and every vertex of Y_i -> x_{i+1..i+h}
/// (indices mod n).
fn layered_family(params: &ConstructionParams) -> Digraph {
    let h = params.min_outdegree;
    let n = params.layer_count;
    let mut b = DigraphBuilder::new(params.vertex_count());
    for i in 0..n {
        let block = params.y_block_start(i);
        for j in 0..h {
            let y = block + j;
            b.add_arc(i, y).expect("layered arcs are simple");
            for step in 1..=h {
                b.add_arc(y, (i + step) % n)
                    .expect("layered arcs are simple");
            }
        }
    }
    b.build()
}

/// Even-girth counterexample family. Bipartite on X and Y, every vertex
/// of outdegree exactly h, girth exactly `girth`; with `shift = c > 0` it
/// carries the same structure at outdegree ceil(g*k/(g-1)) + c.
pub fn even_girth(
    girth: usize,
    packing_target: usize,
    shift: usize,
) -> Result<(Digraph, ConstructionParams), ParamError> {
    let params = ConstructionParams::even(girth, packing_target, shift)?;
    Ok((layered_family(&params), params))
}

/// Chord handling for the odd-girth family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OddVariant {
    /// The digraph with the extra arc x_{rh} -> x_0; girth g.
    WithChord,
    /// The same digraph without that arc; girth g + 1.
    WithoutChord,
}

/// Odd-girth counterexample family. Same layered skeleton with
/// r = (g-1)/2 layers of X per winding; the chord variant adds the single
/// arc x_{rh} -> x_0 that closes an odd cycle, giving vertex x_{rh}
/// outdegree h + 1 while every other vertex keeps outdegree h.
pub fn odd_girth(
    girth: usize,
    packing_target: usize,
    variant: OddVariant,
) -> Result<(Digraph, ConstructionParams), ParamError> {
    let params = ConstructionParams::odd(girth, packing_target)?;
    let d = layered_family(&params);
    match variant {
        OddVariant::WithoutChord => Ok((d, params)),
        OddVariant::WithChord => {
            let n = params.layer_count;
            let mut b = DigraphBuilder::new(d.vertex_count());
            for (u, v) in d.arcs() {
                b.add_arc(u, v).expect("arcs already simple");
            }
            b.add_arc(n - 1, 0).expect("chord is a new X->X arc");
            Ok((b.build(), params))
        }
    }
}

/// The bipartite tournament D* on X = X_1 u ... u X_{h+1} (blocks of size
/// h) and Y = {y_1 .. y_{h+1}}: every vertex of X_i beats every y_j with
/// j != i, and y_i beats every vertex of X_i. Every X-Y pair is joined in
/// exactly one direction; minimum outdegree h; girth 4.
pub fn bipartite_tournament(h: usize) -> Result<Digraph, ParamError> {
    if h == 0 {
        return Err(ParamError::BlockSizeZero);
    }
    let blocks = h + 1;
    let y_start = blocks * h;
    let mut b = DigraphBuilder::new(y_start + blocks);
    for i in 0..blocks {
        let y_i = y_start + i;
        for x in (i * h)..((i + 1) * h) {
            for j in 0..blocks {
                if j != i {
                    b.add_arc(x, y_start + j)
                        .expect("tournament arcs are simple");
                }
            }
            b.add_arc(y_i, x).expect("tournament arcs are simple");
        }
    }
    Ok(b.build())
}

/// Index of the Y side of [`bipartite_tournament`]: the last h + 1 IDs.
pub fn bipartite_tournament_y_side(h: usize) -> Vec<usize> {
    let y_start = (h + 1) * h;
    (y_start..y_start + h + 1).collect()
}

/// Circular digraph on n = p*(g-1) + 1 vertices with arcs
/// i -> i+1, ..., i+p (mod n). Minimum outdegree p, girth ceil(n/p) = g.
pub fn circular(p: usize, g: usize) -> Result<Digraph, ParamError> {
    if p < 1 || g < 2 {
        return Err(ParamError::CircularOutOfRange { p, g });
    }
    let n = p * (g - 1) + 1;
    let mut b = DigraphBuilder::new(n);
    for i in 0..n {
        for step in 1..=p {
            // n > p, so the step never wraps onto i itself
            b.add_arc(i, (i + step) % n)
                .expect("circular arcs are simple");
        }
    }
    Ok(b.build())
}

/// Complete symmetric digraph: every ordered pair of distinct vertices.
pub fn complete_symmetric(m: usize) -> Result<Digraph, ParamError> {
    if m == 0 {
        return Err(ParamError::OrderZero);
    }
    let mut b = DigraphBuilder::new(m);
    for u in 0..m {
        for v in 0..m {
            if u != v {
                b.add_arc(u, v).expect("complete arcs are simple");
            }
        }
    }
    Ok(b.build())
}

/// Append `s` source vertices, each with `d` out-arcs to distinct,
/// seed-deterministically chosen vertices of `d` and no in-arcs. The new
/// vertices lie on no cycle, so girth and maximum packing are unchanged.
pub fn pad_sources(base: &Digraph, s: usize, d: usize, seed: u64) -> Result<Digraph, ParamError> {
    let n = base.vertex_count();
    if d > n {
        return Err(ParamError::PaddingDegreeTooLarge { d, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = DigraphBuilder::new(n + s);
    for (u, v) in base.arcs() {
        b.add_arc(u, v).expect("arcs already simple");
    }
    for new in n..n + s {
        for target in sample_distinct(&mut rng, n, d) {
            b.add_arc(new, target).expect("padded arcs are simple");
        }
    }
    Ok(b.build())
}

/// Seed-deterministic digraph on `m` vertices where every vertex gets
/// exactly `delta` out-neighbors sampled without replacement, so the
/// minimum outdegree is exactly `delta`.
pub fn random_min_outdegree(m: usize, delta: usize, seed: u64) -> Result<Digraph, ParamError> {
    if delta >= m {
        return Err(ParamError::RandomDegreeTooLarge { delta, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = DigraphBuilder::new(m);
    for v in 0..m {
        // sample from the other m-1 vertices, skipping v by index shift
        for raw in sample_distinct(&mut rng, m - 1, delta) {
            let target = if raw >= v { raw + 1 } else { raw };
            b.add_arc(v, target).expect("sampled arcs are distinct");
        }
    }
    Ok(b.build())
}

/// `count` distinct values from `0..population`, by partial Fisher-Yates
/// over the raw ChaCha stream. The reduction is pinned here rather than
/// delegated so the emitted digraphs never change under dependency bumps.
fn sample_distinct(rng: &mut ChaCha8Rng, population: usize, count: usize) -> Vec<usize> {
    debug_assert!(count <= population);
    let mut pool: Vec<usize> = (0..population).collect();
    let mut picked = Vec::with_capacity(count);
    for i in 0..count {
        let j = i + (rng.next_u64() % (population - i) as u64) as usize;
        pool.swap(i, j);
        picked.push(pool[i]);
    }
    picked
}
