//! Numeric layer: slope solving, critical orbits, closest precritical
//! points, separation radii and the backward-orbit oracle for p-points.
//!
//! Forward orbits of a tent map lose a binary digit of accuracy per step,
//! so naive iteration is only trustworthy for a few dozen steps. Deep
//! geometry (chain verification to depth 150, level widths to depth 500)
//! is therefore computed through the pullback structure of the levels
//! `D_n`: between cutting times the branch over `[c, c_m]` is affine, so
//! every postcritical position is an exact telescoping sum of terms
//! `±s^j |c_{S_k} - c|`, and the distances `|c_{S_k} - c|` themselves obey
//! the exact recursion `d_k = s^{S_Q(k)} d_{k-1} - d_{Q(k)}`. Evaluated in
//! binary64 this keeps relative errors near machine precision at any
//! desk-scale depth. Backward preimage branches contract by `1/s` per step
//! and are likewise stable.

use serde::Serialize;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::folding::Level;
use crate::kneading::{cutting_times, KneadingMap, KneadingSequence};

pub const CRITICAL: f64 = 0.5;

/// One tent-map step `x -> min(sx, s(1-x))`.
pub fn tent(s: f64, x: f64) -> f64 {
    (s * x).min(s * (1.0 - x))
}

/// Itinerary of `c_1` under `T_s`: symbol `j` is 1 iff `T_s^j(c) > c`.
pub fn itinerary(s: f64, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut x = s / 2.0;
    for _ in 0..len {
        out.push(u8::from(x > CRITICAL));
        x = tent(s, x);
    }
    out
}

/// Parity-lexicographic order on itineraries: orientation flips after
/// every 1-symbol. This is the order the tent family induces on kneading
/// data as the slope grows.
pub fn plex_cmp(a: &[u8], b: &[u8]) -> Ordering {
    let mut positive = true;
    for (&x, &y) in a.iter().zip(b.iter()) {
        if x != y {
            let lt = (x < y) == positive;
            return if lt { Ordering::Less } else { Ordering::Greater };
        }
        if x == 1 {
            positive = !positive;
        }
    }
    a.len().cmp(&b.len())
}

/// Length of the common prefix of two symbol sequences.
pub fn match_len(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count()
}

/// Slope, fixed point and the forward orbit of the critical point.
#[derive(Debug, Clone, Serialize)]
pub struct TentParams {
    pub s: f64,
    /// `c_1 .. c_N`, naive forward iteration. Trustworthy for a few dozen
    /// entries; deep geometry goes through [`StructuredOrbit`].
    pub orbit: Vec<f64>,
    /// Positive fixed point `r = s / (s + 1)`.
    pub r: f64,
}

impl TentParams {
    pub fn from_slope(s: f64, n: usize) -> Self {
        let mut orbit = Vec::with_capacity(n);
        let mut x = s / 2.0;
        for _ in 0..n {
            orbit.push(x);
            x = tent(s, x);
        }
        TentParams {
            s,
            orbit,
            r: s / (s + 1.0),
        }
    }

    pub fn c(&self) -> f64 {
        CRITICAL
    }

    /// `c_1 .. c_n`.
    pub fn orbit_prefix(&self, n: usize) -> Result<&[f64]> {
        if n > self.orbit.len() {
            return Err(Error::Range {
                index: n,
                max: self.orbit.len(),
            });
        }
        Ok(&self.orbit[..n])
    }
}

/// Find the slope in `(sqrt 2, 2]` whose itinerary matches `nu` for `want`
/// symbols, by bisection in the parity-lexicographic order. The bracket is
/// narrowed below `tol`, the match re-verified, and failure is an explicit
/// error: renormalizable or otherwise unrealizable itineraries are
/// rejected, never approximated.
pub fn solve_slope(nu: &KneadingSequence, want: usize, tol: f64) -> Result<TentParams> {
    if want > nu.len() {
        return Err(Error::Range {
            index: want,
            max: nu.len(),
        });
    }
    let target = &nu.symbols()[..want];
    let orbit_len = want.max(64);

    let mut lo = std::f64::consts::SQRT_2 + 1e-12;
    let mut hi = 2.0;
    if plex_cmp(&itinerary(hi, want), target) == Ordering::Equal {
        return Ok(TentParams::from_slope(hi, orbit_len));
    }
    // Bisect to float exhaustion: the bracket is guaranteed below `tol`,
    // and the extra iterations buy itinerary agreement at depth.
    let mut s = 0.5 * (lo + hi);
    for _ in 0..256 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        s = mid;
        match plex_cmp(&itinerary(mid, want), target) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => break,
        }
    }
    if hi - lo > tol {
        return Err(Error::Numeric(format!(
            "bisection bracket {} wider than tol {tol}",
            hi - lo
        )));
    }
    let got = itinerary(s, want);
    let matched = match_len(&got, target);
    if matched < want {
        return Err(Error::SlopeNotFound {
            matched,
            required: want,
        });
    }
    Ok(TentParams::from_slope(s, orbit_len))
}

/// Postcritical geometry evaluated through the level structure: positions
/// `c_n`, cutting-time distances `d_k = |c_{S_k} - c|`, level widths
/// `|D_n|` and offsets along beta-orbits, none of it by long forward
/// iteration.
#[derive(Debug, Clone)]
pub struct StructuredOrbit {
    pub s: f64,
    depth: usize,
    nu: Vec<u8>,                   // nu[n-1] = symbol of c_n
    cuts: Vec<usize>,              // cutting times <= depth (S_0 = 1 first)
    cut_index: Vec<Option<usize>>, // n -> k with S_k = n
    beta_of: Vec<usize>,           // beta(n) for n >= 2; beta_of[1] = 0
    d: Vec<f64>,                   // d[k] = |c_{S_k} - c|, as far as f64 reaches
    pos: Vec<f64>,                 // pos[n] = c_n, 1-based
    incr: Vec<f64>,                // incr[n] = c_n - c_{beta(n)} (signed), n >= 2
}

impl StructuredOrbit {
    /// Build the geometry of `T_s` with the combinatorics of `q`, to the
    /// given depth. The side of every computed position is checked against
    /// the kneading sequence; a mismatch is an error, not a warning.
    pub fn new(q: &KneadingMap, s: f64, depth: usize) -> Result<Self> {
        if depth < 2 {
            return Err(Error::Precondition("depth must be at least 2".into()));
        }
        let nu_seq = crate::kneading::kneading_sequence(q, depth)?;
        let nu: Vec<u8> = nu_seq.symbols().to_vec();

        let mut ones = vec![0u32; depth + 1];
        for j in 1..=depth {
            ones[j] = ones[j - 1] + nu[j - 1] as u32;
        }

        let all = cutting_times(q, q.k_max())?;
        if !all.covers(depth) {
            return Err(Error::Horizon(format!(
                "kneading map too short to certify cutting times to depth {depth}"
            )));
        }
        let cuts: Vec<usize> = all.cutting_set_upto(depth);
        let mut cut_index = vec![None; depth + 1];
        for (k, &sk) in cuts.iter().enumerate() {
            cut_index[sk] = Some(k);
        }

        // d_k = s^{S_{Q(k)}} d_{k-1} - d_{Q(k)}, exact in real arithmetic.
        // The table stops where f64 range runs out.
        let mut d: Vec<f64> = vec![(s - 1.0) / 2.0];
        for k in 1..=q.k_max() {
            let qk = q.q(k)? as usize;
            let sq = match all.s_usize(qk) {
                Ok(v) => v,
                Err(_) => break,
            };
            if (sq as f64) * s.ln() > 700.0 || k - 1 >= d.len() || qk >= d.len() {
                break;
            }
            let next = s.powi(sq as i32) * d[k - 1] - d[qk];
            if !(next.is_finite() && next > 0.0) {
                break;
            }
            d.push(next);
        }

        let mut beta_of = vec![0usize; depth + 1];
        let mut pos = vec![f64::NAN; depth + 1];
        let mut incr = vec![0f64; depth + 1];
        pos[1] = s / 2.0;
        let mut last_cut = 1usize;
        for n in 2..=depth {
            if cut_index[n - 1].is_some() {
                last_cut = n - 1;
            }
            let m = last_cut;
            let j = n - m;
            beta_of[n] = j;
            let k_m = cut_index[m].expect("last_cut is a cutting time");
            if k_m >= d.len() {
                return Err(Error::Numeric(format!(
                    "d-table too short (needs k = {k_m}) for depth {depth}"
                )));
            }
            let delta_m = if nu[m - 1] == 1 { d[k_m] } else { -d[k_m] };
            let parity = nu[m - 1] as u32 + ones[j - 1];
            let sign = if parity % 2 == 0 { 1.0 } else { -1.0 };
            let inc = sign * s.powi(j as i32) * delta_m;
            pos[n] = pos[j] + inc;
            incr[n] = inc;
            if (pos[n] > CRITICAL) != (nu[n - 1] == 1) {
                return Err(Error::Numeric(format!(
                    "structured position of c_{n} lands on the wrong side of c"
                )));
            }
        }

        Ok(StructuredOrbit {
            s,
            depth,
            nu,
            cuts,
            cut_index,
            beta_of,
            d,
            pos,
            incr,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn symbol(&self, n: usize) -> Result<u8> {
        if n == 0 || n > self.depth {
            return Err(Error::Range {
                index: n,
                max: self.depth,
            });
        }
        Ok(self.nu[n - 1])
    }

    /// `c_n` (1-based); `position(0)` is `c` itself.
    pub fn position(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Ok(CRITICAL);
        }
        if n > self.depth {
            return Err(Error::Range {
                index: n,
                max: self.depth,
            });
        }
        Ok(self.pos[n])
    }

    /// `beta(n)` with the convention `beta(1) = 0` (and `c_0 = c`).
    pub fn beta(&self, n: usize) -> Result<usize> {
        if n == 0 || n > self.depth {
            return Err(Error::Range {
                index: n,
                max: self.depth,
            });
        }
        Ok(self.beta_of[n])
    }

    pub fn cutting_set(&self) -> &[usize] {
        &self.cuts
    }

    pub fn is_cutting(&self, n: usize) -> bool {
        n <= self.depth && self.cut_index[n].is_some()
    }

    /// `d_k = |c_{S_k} - c|`; errors where the f64 table ended.
    pub fn d(&self, k: usize) -> Result<f64> {
        self.d.get(k).copied().ok_or(Error::Range {
            index: k,
            max: self.d.len().saturating_sub(1),
        })
    }

    pub fn d_table_len(&self) -> usize {
        self.d.len()
    }

    /// `|c_n - c|`, through the d-table when `n` is a cutting time (the
    /// plain difference would cancel catastrophically there).
    pub fn dist_to_c(&self, n: usize) -> Result<f64> {
        if let Some(k) = self.cut_index.get(n).copied().flatten() {
            return self.d(k);
        }
        Ok((self.position(n)? - CRITICAL).abs())
    }

    /// Width of the level `D_n = [c_n, c_{beta(n)}]`: multiplicatively,
    /// `|D_n| = s^{beta(n)} |c_{n - beta(n)} - c|`.
    pub fn level_width(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::Range {
                index: 0,
                max: self.depth,
            });
        }
        if n == 1 {
            return Ok(self.pos[1]);
        }
        let b = self.beta(n)?;
        let m = n - b;
        let k = self.cut_index[m]
            .ok_or_else(|| Error::Numeric(format!("n - beta(n) = {m} is not a cutting time")))?;
        Ok(self.s.powi(b as i32) * self.d(k)?)
    }

    /// Signed offset `c_hi - c_lo` where `lo` lies on the beta-orbit of
    /// `hi`; a telescoping sum of per-step increments, so tiny differences
    /// near `c` stay fully resolved.
    pub fn beta_chain_offset(&self, hi: usize, lo: usize) -> Result<f64> {
        let mut n = hi;
        let mut sum = 0.0;
        while n > lo {
            if n <= 1 {
                return Err(Error::Precondition(format!(
                    "{lo} is not on the beta-orbit of {hi}"
                )));
            }
            sum += self.incr[n];
            n = self.beta_of[n];
        }
        if n != lo {
            return Err(Error::Precondition(format!(
                "{lo} is not on the beta-orbit of {hi}"
            )));
        }
        Ok(sum)
    }

    /// The beta-orbit `n, beta(n), beta^2(n), ..., 1`.
    pub fn beta_orbit(&self, n: usize) -> Vec<usize> {
        let mut orbit = vec![n];
        let mut m = n;
        while m > 1 {
            m = self.beta_of[m];
            orbit.push(m);
        }
        orbit
    }

    /// `ln |zeta_k - c| = ln d_k - S_k ln s` (log space reaches any k in
    /// the d-table).
    pub fn ln_zeta_dist(&self, k: usize) -> Result<f64> {
        let sk = *self.cuts.get(k).ok_or(Error::Range {
            index: k,
            max: self.cuts.len().saturating_sub(1),
        })?;
        Ok(self.d(k)?.ln() - (sk as f64) * self.s.ln())
    }
}

/// The closest precritical pair `(zeta_k, 1 - zeta_k)`: `T^{S_k}` maps
/// `zeta_k` to `c` and no earlier image of `(zeta_k, c)` meets `c`.
/// Computed by pulling `c` back along the branches the kneading sequence
/// prescribes.
pub fn closest_precritical(geom: &StructuredOrbit, k: usize) -> Result<(f64, f64)> {
    let s = geom.s;
    let sk = *geom.cuts.get(k).ok_or(Error::Range {
        index: k,
        max: geom.cuts.len().saturating_sub(1),
    })?;
    let mut x = CRITICAL;
    for j in (1..sk).rev() {
        x = if geom.symbol(j)? == 1 {
            1.0 - x / s
        } else {
            x / s
        };
        if !(0.0..=s / 2.0).contains(&x) {
            return Err(Error::Numeric(format!(
                "branch preimage left [0, s/2] at step {j}"
            )));
        }
    }
    let zeta = x / s;
    if !(0.0..CRITICAL).contains(&zeta) {
        return Err(Error::Numeric("zeta escaped [0, c)".into()));
    }
    Ok((zeta, 1.0 - zeta))
}

/// Separation radii: around each `c_n` a radius `eta_n` such that any
/// beta-orbit entering the ball either ends outside it or lies inside it
/// entirely. The construction proposes values; the exhaustive check is
/// authoritative.
#[derive(Debug, Clone)]
pub struct EtaTable {
    /// `eta[n - 1]` is the radius for `c_n`.
    pub eta: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EtaViolation {
    pub n: usize,
    pub n_prime: usize,
    pub endpoint_dist: f64,
    pub max_intermediate: f64,
    pub eta: f64,
}

/// Check the separation property up to `horizon`: for every `n' > n` whose
/// beta-orbit passes through `n`, either `|c_{n'} - c_n| > eta_n` or every
/// orbit point between them lies within `eta_n` of `c_n`.
pub fn verify_eta(geom: &StructuredOrbit, table: &EtaTable, horizon: usize) -> Vec<EtaViolation> {
    let mut violations = Vec::new();
    for np in 2..=horizon.min(geom.depth()) {
        let orbit = geom.beta_orbit(np);
        for (idx, &n) in orbit.iter().enumerate().skip(1) {
            if n == 0 || n > table.eta.len() {
                continue;
            }
            let eta = table.eta[n - 1];
            let endpoint = geom.beta_chain_offset(np, n).map(f64::abs).unwrap_or(f64::INFINITY);
            if endpoint > eta {
                continue;
            }
            let mut max_mid: f64 = 0.0;
            for &mid in &orbit[1..idx] {
                let dm = geom.beta_chain_offset(mid, n).map(f64::abs).unwrap_or(f64::INFINITY);
                max_mid = max_mid.max(dm);
            }
            if max_mid >= eta {
                violations.push(EtaViolation {
                    n,
                    n_prime: np,
                    endpoint_dist: endpoint,
                    max_intermediate: max_mid,
                    eta,
                });
            }
        }
    }
    violations
}

/// Radii for `n = 1..=depth`, capped at `cap`, shrunk until the
/// exhaustive check to the geometry's full depth passes. The initial
/// candidate sits just inside the nearest level `D_k` with
/// `beta^2(k) = n` meeting the first level that returns to `n` (the
/// obstruction the separation property excludes), or at half the distance
/// to the nearest postcritical point when no such level exists.
pub fn eta_table(geom: &StructuredOrbit, depth: usize, cap: f64) -> Result<EtaTable> {
    if depth > geom.depth() {
        return Err(Error::Range {
            index: depth,
            max: geom.depth(),
        });
    }
    if !(cap > 0.0) {
        return Err(Error::Precondition("eta cap must be positive".into()));
    }
    let horizon = geom.depth();
    let mut eta = Vec::with_capacity(depth);
    for n in 1..=depth {
        let pos_n = geom.position(n)?;

        let mut half_near = f64::INFINITY;
        for m in 1..=horizon {
            if m == n {
                continue;
            }
            let dist = (geom.position(m)? - pos_n).abs();
            if dist > 0.0 {
                half_near = half_near.min(0.5 * dist);
            }
        }

        let m1 = (n + 1..=horizon).find(|&m| geom.beta(m).ok() == Some(n));
        let mut candidate = (cap * 0.99).min(half_near);
        if let Some(m1) = m1 {
            let d_m1 = interval(geom, m1)?;
            for k in 2..=horizon {
                let b = geom.beta(k)?;
                if b >= 2 && geom.beta(b)? == n {
                    let d_k = interval(geom, k)?;
                    if d_k.1 >= d_m1.0 && d_m1.1 >= d_k.0 {
                        let dist = (geom.position(k)? - pos_n).abs();
                        if dist > 0.0 {
                            candidate = candidate.min(0.9 * dist);
                        }
                    }
                }
            }
        }
        if !(candidate > 0.0 && candidate.is_finite()) {
            candidate = cap * 0.5;
        }
        eta.push(candidate);
    }

    let mut table = EtaTable { eta };
    for _ in 0..64 {
        let violations = verify_eta(geom, &table, horizon);
        let relevant: Vec<_> = violations.into_iter().filter(|v| v.n <= depth).collect();
        if relevant.is_empty() {
            return Ok(table);
        }
        for v in relevant {
            let new = (v.endpoint_dist * 0.9).min(table.eta[v.n - 1] * 0.5);
            table.eta[v.n - 1] = new.max(f64::MIN_POSITIVE);
        }
    }
    Err(Error::Numeric(
        "eta table failed exhaustive verification after 64 shrink rounds".into(),
    ))
}

fn interval(geom: &StructuredOrbit, n: usize) -> Result<(f64, f64)> {
    let a = geom.position(n)?;
    let b = geom.position(if n == 1 { 0 } else { geom.beta(n)? })?;
    Ok((a.min(b), a.max(b)))
}

/// A p-point of the oracle: parameter along the arc and its p-level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OraclePoint {
    pub t: f64,
    pub level: Level,
}

/// Ordered p-points along a depth-truncated arc, with the sentinel entry
/// for the anchor (the endpoint, or the fixed point).
#[derive(Debug, Clone, Serialize)]
pub struct OraclePointList {
    pub points: Vec<OraclePoint>,
    /// Index of the sentinel.
    pub anchor: usize,
}

impl OraclePointList {
    pub fn levels(&self) -> Vec<Level> {
        self.points.iter().map(|p| p.level).collect()
    }
}

/// In-order enumerator for precritical points. Points of order <= m in
/// `[0, c]` are `c` itself plus `y/s` for precriticals `y` of order
/// <= m - 1 in `[0, c_1]`, and `(c, c_1]` mirrors `[1 - c_1, c)`; the
/// walker composes these steps as one affine transform per branch and
/// prunes empty ranges, so enumeration is output-sensitive and a cap can
/// stop it early.
struct PreimageWalk<'a> {
    s: f64,
    c1: f64,
    cap: usize,
    emitted: usize,
    out: &'a mut dyn FnMut(f64, u32),
}

impl<'a> PreimageWalk<'a> {
    fn emit(&mut self, t: f64, order: u32) -> bool {
        if self.emitted >= self.cap {
            return false;
        }
        (self.out)(t, order);
        self.emitted += 1;
        true
    }

    /// Precriticals of order <= m in `[lo, hi] ⊆ [0, c]`, emitted as
    /// `a*t + b`, ordered so outputs ascend iff `out_asc`.
    fn walk_left(&mut self, m: u32, lo: f64, hi: f64, a: f64, b: f64, out_asc: bool) -> bool {
        if lo > hi {
            return true;
        }
        let has_c = lo <= CRITICAL && CRITICAL <= hi;
        if m == 0 {
            if has_c {
                return self.emit(a * CRITICAL + b, 0);
            }
            return true;
        }
        let cur_asc = (a > 0.0) == out_asc;
        let (ylo, yhi) = ((lo * self.s).max(0.0), (hi * self.s).min(self.c1));
        if cur_asc {
            if !self.walk_below_c1(m - 1, ylo, yhi, a / self.s, b, out_asc) {
                return false;
            }
            if has_c {
                return self.emit(a * CRITICAL + b, 0);
            }
            true
        } else {
            if has_c && !self.emit(a * CRITICAL + b, 0) {
                return false;
            }
            self.walk_below_c1(m - 1, ylo, yhi, a / self.s, b, out_asc)
        }
    }

    /// Precriticals of order <= m in `[lo, hi] ⊆ [0, c_1]`, transformed as
    /// above. The upper part `(c, c_1]` is the mirror `u -> 1 - u` of
    /// `[1 - c_1, c)`, which flips the transform's slope.
    fn walk_below_c1(&mut self, m: u32, lo: f64, hi: f64, a: f64, b: f64, out_asc: bool) -> bool {
        if lo > hi {
            return true;
        }
        let cur_asc = (a > 0.0) == out_asc;
        let low = |w: &mut Self| w.walk_left(m, lo, hi.min(CRITICAL), a, b, out_asc);
        let high = |w: &mut Self| {
            // u in [max(1-hi, 1-c1), min(1-lo, c)), strictly below c
            let ulo = (1.0 - hi).max(1.0 - w.c1);
            let uhi = (1.0 - lo).min(prev_before(CRITICAL));
            w.walk_left(m, ulo, uhi, -a, a + b, out_asc)
        };
        if cur_asc {
            low(self) && high(self)
        } else {
            high(self) && low(self)
        }
    }
}

fn prev_before(x: f64) -> f64 {
    f64::from_bits(x.to_bits() - 1)
}

/// All precritical points of order <= m in `[0, c]`, ascending, capped.
fn precriticals_left_of_c(s: f64, m: u32, cap: usize) -> Vec<(f64, u32)> {
    let mut out: Vec<(f64, u32)> = Vec::new();
    let mut sink = |t: f64, order: u32| out.push((t, order));
    let mut walker = PreimageWalk {
        s,
        c1: s / 2.0,
        cap,
        emitted: 0,
        out: &mut sink,
    };
    walker.walk_left(m, 0.0, CRITICAL, 1.0, 0.0, true);
    out
}

/// All precritical points of order <= m in `[c, c_1]`, ascending, capped.
fn precriticals_right_of_c(s: f64, m: u32, cap: usize) -> Vec<(f64, u32)> {
    let c1 = s / 2.0;
    let mut out: Vec<(f64, u32)> = vec![(CRITICAL, 0)];
    let mut sink = |t: f64, order: u32| out.push((t, order));
    let mut walker = PreimageWalk {
        s,
        c1,
        cap,
        emitted: 0,
        out: &mut sink,
    };
    // (c, c_1] = mirror of [1 - c_1, c): emit 1 - u with u descending
    walker.walk_left(
        m,
        1.0 - c1,
        prev_before(CRITICAL),
        -1.0,
        1.0,
        true,
    );
    out
}

/// p-points of the depth-`n` initial segment of the endpoint
/// arc-component: the coordinate at depth `n` runs over `t ∈ [0, c]` with
/// the deeper tail following the left preimage branch `t/s` toward the
/// endpoint. Entries are the precritical parameters of order `m <= n - p`
/// with level `n - p - m`, sentinel first.
pub fn oracle_p_points_c0(s: f64, depth_n: usize, p: usize, cap: usize) -> Result<OraclePointList> {
    if p >= depth_n {
        return Err(Error::Precondition(format!(
            "need p < depth (p = {p}, depth = {depth_n})"
        )));
    }
    let m = (depth_n - p) as u32;
    let mut points = vec![OraclePoint {
        t: 0.0,
        level: Level::INFINITE,
    }];
    for (t, order) in precriticals_left_of_c(s, m, cap) {
        points.push(OraclePoint {
            t,
            level: Level::finite(m - order),
        });
    }
    Ok(OraclePointList { points, anchor: 0 })
}

/// p-points of a depth-`n` arc of the fixed-point arc-component: `t` runs
/// over `[c, c_1]` with the deeper tail following the right preimage
/// branch `y -> 1 - y/s` toward the fixed point. `t = c` has level
/// `n - p`, `t = c_1` level `n - p + 1` (its tail reaches `c` one
/// coordinate deeper); the sentinel sits at `t = r`.
pub fn oracle_p_points_r(s: f64, depth_n: usize, p: usize, cap: usize) -> Result<OraclePointList> {
    if p >= depth_n {
        return Err(Error::Precondition(format!(
            "need p < depth (p = {p}, depth = {depth_n})"
        )));
    }
    let m = (depth_n - p) as u32;
    let r = s / (s + 1.0);
    let c1 = s / 2.0;
    let mut points: Vec<OraclePoint> = precriticals_right_of_c(s, m, cap)
        .into_iter()
        .map(|(t, order)| OraclePoint {
            t,
            level: Level::finite(m - order),
        })
        .collect();
    points.push(OraclePoint {
        t: c1,
        level: Level::finite(m + 1),
    });
    let anchor = points.partition_point(|pt| pt.t < r);
    points.insert(
        anchor,
        OraclePoint {
            t: r,
            level: Level::INFINITE,
        },
    );
    Ok(OraclePointList { points, anchor })
}
