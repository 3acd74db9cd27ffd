//! Folding patterns: the ordered p-level sequences along the two
//! distinguished arc-components, generated symbolically by the shift step.
//!
//! A pattern is a list of levels with an anchor sentinel (the endpoint of
//! the ray, or the fixed point for the two-sided component). Between two
//! adjacent entries sits a gap; the arc across a gap projects onto a
//! single interval of the tower, which gives every gap an integer label:
//! a gap flanked by levels `{n, beta(n)}` projects onto
//! `D_n = [c_n, c_{beta(n)}]`, and a gap flanked by `{0, m}` projects onto
//! `[c, c_m]` (with `m` a cutting time; we write `beta(1) = 0`, `c_0 = c`
//! to keep the bookkeeping uniform). Labels are recomputed from flank
//! levels rather than tracked, which removes any chance of drift.
//!
//! One shift step raises every finite level by one, raises every gap
//! label by one, and inserts a new level-0 entry into exactly those gaps
//! whose new label is a cutting time (the projected interval has grown
//! across `c`). Anchor gaps are special: the endpoint gap projects onto
//! `[0, c]` and inserts every step; the two fixed-point gaps project onto
//! `[c, r]` and `[r, c_1]` and alternate, the gap on the level-1 side
//! inserting. Everything else is forced by the flank rules.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::kneading::{cutting_times, KneadingMap};

/// A p-level: a nonnegative integer, or the sentinel for the anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level(u32);

impl Level {
    pub const INFINITE: Level = Level(u32::MAX);

    pub fn finite(v: u32) -> Level {
        assert!(v != u32::MAX, "level overflow");
        Level(v)
    }

    pub fn is_infinite(self) -> bool {
        self.0 == u32::MAX
    }

    pub fn value(self) -> Option<u32> {
        if self.is_infinite() {
            None
        } else {
            Some(self.0)
        }
    }

    fn bumped(self) -> Level {
        if self.is_infinite() {
            self
        } else {
            Level::finite(self.0 + 1)
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "INF"),
        }
    }
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self.value() {
            Some(v) => ser.serialize_u32(v),
            None => ser.serialize_str("INF"),
        }
    }
}

impl<'de> Deserialize<'de> for Level {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(v) => Ok(Level::finite(v)),
            Raw::Str(s) if s == "INF" => Ok(Level::INFINITE),
            Raw::Str(s) => Err(D::Error::custom(format!("bad level {s:?}"))),
        }
    }
}

/// Which arc-component a pattern describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// One-sided ray from the endpoint.
    C0,
    /// Two-sided component through the fixed point.
    R,
}

/// Label of the gap between two adjacent entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapLabel {
    /// Gap adjacent to the anchor sentinel; flagged specially.
    Anchor,
    /// The gap projects onto `[c_n, c_{beta(n)}]` (with `c_0 = c`).
    Level(u32),
}

/// Caps on pattern growth. Oversized patterns are trimmed to a window
/// around the anchor; the trimmed entries are exact for what they cover
/// (insertions are local), but the pattern is marked truncated.
#[derive(Debug, Clone, Copy)]
pub struct GrowthLimits {
    pub max_entries: usize,
}

impl Default for GrowthLimits {
    fn default() -> Self {
        GrowthLimits {
            max_entries: 1 << 20,
        }
    }
}

/// Cutting-time membership on machine integers, precomputed to a bound.
#[derive(Debug, Clone)]
pub struct CutSet {
    flags: Vec<bool>,
}

impl CutSet {
    pub fn from_map(q: &KneadingMap, bound: usize) -> Result<CutSet> {
        let all = cutting_times(q, q.k_max())?;
        if !all.covers(bound) {
            return Err(Error::Horizon(format!(
                "kneading map too short to certify cutting times up to {bound}"
            )));
        }
        let mut flags = vec![false; bound + 1];
        for v in all.cutting_set_upto(bound) {
            flags[v] = true;
        }
        Ok(CutSet { flags })
    }

    pub fn bound(&self) -> usize {
        self.flags.len() - 1
    }

    pub fn contains(&self, n: usize) -> Result<bool> {
        self.flags.get(n).copied().ok_or(Error::Range {
            index: n,
            max: self.bound(),
        })
    }
}

/// An ordered sequence of p-levels with the anchor sentinel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldingPattern {
    side: Side,
    entries: Vec<Level>,
    anchor: usize,
    stage: u32,
    truncated: bool,
}

impl FoldingPattern {
    /// Seed for the endpoint component: `(INF, 0)` with the anchor gap
    /// (projecting onto `[0, c]`, inside `D_1`).
    pub fn seed_c0() -> FoldingPattern {
        FoldingPattern {
            side: Side::C0,
            entries: vec![Level::INFINITE, Level::finite(0)],
            anchor: 0,
            stage: 0,
            truncated: false,
        }
    }

    /// Seed for the fixed-point component: `(0, INF, 1)`.
    pub fn seed_r() -> FoldingPattern {
        FoldingPattern {
            side: Side::R,
            entries: vec![Level::finite(0), Level::INFINITE, Level::finite(1)],
            anchor: 1,
            stage: 0,
            truncated: false,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Level] {
        &self.entries
    }

    pub fn level(&self, i: usize) -> Result<Level> {
        self.entries.get(i).copied().ok_or(Error::Range {
            index: i,
            max: self.entries.len() - 1,
        })
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    /// Number of shift steps applied since the seed.
    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Label of the gap between entries `i` and `i + 1`, recomputed from
    /// the flanking levels.
    pub fn gap_label(&self, i: usize) -> Result<GapLabel> {
        if i + 1 >= self.entries.len() {
            return Err(Error::Range {
                index: i,
                max: self.entries.len().saturating_sub(2),
            });
        }
        let (a, b) = (self.entries[i], self.entries[i + 1]);
        if a.is_infinite() || b.is_infinite() {
            return Ok(GapLabel::Anchor);
        }
        let hi = a.0.max(b.0);
        if hi == 0 {
            return Err(Error::InconsistentPattern(format!(
                "two adjacent level-0 entries at {i}"
            )));
        }
        Ok(GapLabel::Level(hi))
    }

    pub fn gap_labels(&self) -> Result<Vec<GapLabel>> {
        (0..self.entries.len() - 1)
            .map(|i| self.gap_label(i))
            .collect()
    }

    /// Check structural invariants: the flank rule for every gap (lower
    /// flank is `beta` of the label, or 0 for a cutting-time label, with
    /// the anchor gaps flagged), the record rule (between two entries of
    /// equal level there is a strictly higher one), and for the two-sided
    /// pattern the `0 | anchor | 1` neighborhood.
    pub fn validate(&self, q: &KneadingMap, cuts: &CutSet) -> Result<()> {
        if self.entries.is_empty() {
            return Err(Error::InconsistentPattern("empty pattern".into()));
        }
        if !self.entries[self.anchor].is_infinite() {
            return Err(Error::InconsistentPattern("anchor entry not sentinel".into()));
        }
        for (i, e) in self.entries.iter().enumerate() {
            if e.is_infinite() && i != self.anchor {
                return Err(Error::InconsistentPattern(format!(
                    "stray sentinel at {i}"
                )));
            }
        }

        let s = cutting_times(q, q.k_max())?;
        for i in 0..self.entries.len() - 1 {
            match self.gap_label(i)? {
                GapLabel::Anchor => {}
                GapLabel::Level(n) => {
                    let (a, b) = (self.entries[i].0, self.entries[i + 1].0);
                    let lo = a.min(b) as usize;
                    let n = n as usize;
                    let expected = crate::kneading::beta_ext(&s, n)?;
                    if lo != expected {
                        return Err(Error::InconsistentPattern(format!(
                            "gap {i}: flanks ({a}, {b}) but beta({n}) = {expected}"
                        )));
                    }
                    if lo == 0 && !cuts.contains(n)? {
                        return Err(Error::InconsistentPattern(format!(
                            "gap {i}: fresh gap label {n} is not a cutting time"
                        )));
                    }
                }
            }
        }

        // record rule via a strictly decreasing stack
        let mut stack: Vec<u64> = Vec::new();
        for e in &self.entries {
            let v = e.value().map_or(u64::MAX, u64::from);
            while let Some(&top) = stack.last() {
                if top < v {
                    stack.pop();
                } else {
                    break;
                }
            }
            if stack.last() == Some(&v) {
                return Err(Error::InconsistentPattern(format!(
                    "two level-{v} entries with nothing higher between"
                )));
            }
            stack.push(v);
        }

        if self.side == Side::R {
            let l = self
                .entries
                .get(self.anchor.wrapping_sub(1))
                .and_then(|e| e.value());
            let r = self.entries.get(self.anchor + 1).and_then(|e| e.value());
            let mut pair = [l, r];
            pair.sort_unstable();
            if pair != [Some(0), Some(1)] {
                return Err(Error::InconsistentPattern(format!(
                    "fixed-point anchor flanked by {l:?}, {r:?}"
                )));
            }
        }
        Ok(())
    }

    /// Reverse in place, keeping the anchor index coherent.
    fn reverse(&mut self) {
        self.entries.reverse();
        self.anchor = self.entries.len() - 1 - self.anchor;
    }

    /// Normalize the two-sided pattern so the entry left of the anchor
    /// has level 0 (the orientation convention for emitted patterns).
    fn normalize_r(&mut self) {
        if self.side == Side::R && self.anchor > 0 {
            if let Some(0) = self.entries[self.anchor - 1].value() {
                return;
            }
            self.reverse();
        }
    }

    /// Trim to the growth cap: the endpoint pattern keeps its prefix, the
    /// two-sided pattern a centered window. Retained entries are exact.
    fn trim(&mut self, limits: &GrowthLimits) {
        let max = limits.max_entries.max(3);
        if self.entries.len() <= max {
            return;
        }
        self.truncated = true;
        match self.side {
            Side::C0 => {
                self.entries.truncate(max);
            }
            Side::R => {
                let half = (max - 1) / 2;
                let lo = self.anchor.saturating_sub(half);
                let hi = (self.anchor + half + 1).min(self.entries.len());
                self.entries = self.entries[lo..hi].to_vec();
                self.anchor -= lo;
            }
        }
    }

    /// Space-separated levels with the `INF` sentinel.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        parts.join(" ")
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Doc<'a> {
            side: Side,
            stage: u32,
            truncated: bool,
            anchor: usize,
            entries: &'a [Level],
            gaps: Vec<serde_json::Value>,
        }
        let gaps = self
            .gap_labels()?
            .into_iter()
            .map(|g| match g {
                GapLabel::Anchor => serde_json::Value::String("A".into()),
                GapLabel::Level(n) => serde_json::Value::from(n),
            })
            .collect();
        serde_json::to_string_pretty(&Doc {
            side: self.side,
            stage: self.stage,
            truncated: self.truncated,
            anchor: self.anchor,
            entries: &self.entries,
            gaps,
        })
        .map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

/// One shift step: every finite level rises by one, every gap label rises
/// by one, and each gap whose new label is a cutting time receives a new
/// level-0 entry. The endpoint anchor gap always inserts; of the two
/// fixed-point anchor gaps exactly the one flanked by the old level-1
/// entry inserts, which alternates the sides.
pub fn sigma_step(
    fp: &FoldingPattern,
    cuts: &CutSet,
    limits: &GrowthLimits,
) -> Result<FoldingPattern> {
    let n = fp.entries.len();
    let mut entries: Vec<Level> = Vec::with_capacity(n + n / 2 + 2);
    for i in 0..n {
        entries.push(fp.entries[i].bumped());
        if i + 1 < n {
            let insert = match fp.gap_label(i)? {
                GapLabel::Anchor => match fp.side {
                    Side::C0 => true,
                    Side::R => {
                        let flank = if fp.entries[i].is_infinite() {
                            fp.entries[i + 1]
                        } else {
                            fp.entries[i]
                        };
                        flank.value() == Some(1)
                    }
                },
                GapLabel::Level(lab) => cuts.contains(lab as usize + 1)?,
            };
            if insert {
                entries.push(Level::finite(0));
            }
        }
    }
    let anchor = entries
        .iter()
        .position(|e| e.is_infinite())
        .expect("anchor survives the step");
    let mut out = FoldingPattern {
        side: fp.side,
        entries,
        anchor,
        stage: fp.stage + 1,
        truncated: fp.truncated,
    };
    out.normalize_r();
    out.trim(limits);
    Ok(out)
}

fn cut_set_for(q: &KneadingMap, stages: usize) -> Result<CutSet> {
    CutSet::from_map(q, stages + 2)
}

/// Run `steps` shift steps from the endpoint seed. Truncation to the cap
/// is allowed; the retained prefix is exact.
pub fn generate_c0(q: &KneadingMap, steps: u32, limits: &GrowthLimits) -> Result<FoldingPattern> {
    ensure_admissible(q)?;
    let cuts = cut_set_for(q, steps as usize)?;
    let mut fp = FoldingPattern::seed_c0();
    for _ in 0..steps {
        fp = sigma_step(&fp, &cuts, limits)?;
    }
    Ok(fp)
}

/// Run `steps` shift steps from the fixed-point seed.
pub fn generate_r(q: &KneadingMap, steps: u32, limits: &GrowthLimits) -> Result<FoldingPattern> {
    ensure_admissible(q)?;
    let cuts = cut_set_for(q, steps as usize)?;
    let mut fp = FoldingPattern::seed_r();
    for _ in 0..steps {
        fp = sigma_step(&fp, &cuts, limits)?;
    }
    Ok(fp)
}

fn ensure_admissible(q: &KneadingMap) -> Result<()> {
    match crate::kneading::is_admissible(q, q.k_max())? {
        crate::kneading::Admissibility::Admissible => Ok(()),
        crate::kneading::Admissibility::ViolatedAt(k) => Err(Error::NotAdmissible { violation: k }),
    }
}

/// Folding pattern of the endpoint component with at least `n_salient`
/// salient points. Errors explicitly if the growth cap cuts the run short.
pub fn fp_c0(q: &KneadingMap, n_salient: u32, limits: &GrowthLimits) -> Result<FoldingPattern> {
    ensure_admissible(q)?;
    let cuts = cut_set_for(q, n_salient as usize + 2)?;
    let mut fp = FoldingPattern::seed_c0();
    for _ in 0..n_salient {
        fp = sigma_step(&fp, &cuts, limits)?;
        if fp.truncated {
            let have = match salient_indices(&fp)? {
                SalientIndex::C0(v) => v.len(),
                SalientIndex::R { .. } => unreachable!(),
            };
            if (have as u32) < n_salient && fp.stage < n_salient {
                return Err(Error::GrowthCap {
                    cap: limits.max_entries,
                    steps: fp.stage,
                });
            }
        }
    }
    Ok(fp)
}

/// Two-sided folding pattern around the fixed point with at least
/// `n_salient` salient points on each side.
pub fn fp_r(q: &KneadingMap, n_salient: u32, limits: &GrowthLimits) -> Result<FoldingPattern> {
    ensure_admissible(q)?;
    let max_steps = 2 * n_salient + 4;
    let cuts = cut_set_for(q, max_steps as usize + 2)?;
    let mut fp = FoldingPattern::seed_r();
    for _ in 0..max_steps {
        fp = sigma_step(&fp, &cuts, limits)?;
        let SalientIndex::R { left, right } = salient_indices(&fp)? else {
            unreachable!()
        };
        if left.len() >= n_salient as usize && right.len() >= n_salient as usize {
            return Ok(fp);
        }
        if fp.truncated {
            return Err(Error::GrowthCap {
                cap: limits.max_entries,
                steps: fp.stage,
            });
        }
    }
    Err(Error::Horizon(format!(
        "{max_steps} steps did not yield {n_salient} salient pairs"
    )))
}

/// Positions of salient entries: levels strictly dominating everything
/// between the anchor and themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SalientIndex {
    C0(Vec<usize>),
    R { left: Vec<usize>, right: Vec<usize> },
}

pub fn salient_indices(fp: &FoldingPattern) -> Result<SalientIndex> {
    let records = |iter: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut best: i64 = 0;
        let mut out = Vec::new();
        for i in iter {
            if let Some(v) = fp.entries[i].value() {
                if i64::from(v) > best {
                    best = i64::from(v);
                    out.push(i);
                }
            }
        }
        out
    };
    match fp.side {
        Side::C0 => {
            let mut iter = fp.anchor + 1..fp.entries.len();
            Ok(SalientIndex::C0(records(&mut iter)))
        }
        Side::R => {
            let mut right_iter = fp.anchor + 1..fp.entries.len();
            let right = records(&mut right_iter);
            let mut left_iter = (0..fp.anchor).rev();
            let left = records(&mut left_iter);
            Ok(SalientIndex::R { left, right })
        }
    }
}

/// Result of the bridge search for a level pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeSearch {
    /// Positions `(x, y, z)` with levels `a, b, a`, level-symmetric about
    /// `y`, with no level-`a` entry strictly between `x` and `z`.
    Found { x: usize, y: usize, z: usize },
    /// Every candidate center failed structurally.
    Absent,
    /// Some candidate ran off the pattern before resolving.
    InconclusiveAtHorizon,
}

/// Search the pattern for a level-symmetric bridge from `a` up to `b`.
pub fn bridges_exists(fp: &FoldingPattern, a: u32, b: u32) -> Result<BridgeSearch> {
    if b <= a {
        return Err(Error::Precondition(format!(
            "bridge search needs b > a, got a = {a}, b = {b}"
        )));
    }
    let lv = |i: usize| fp.entries[i];
    let mut saw_center = false;
    let mut inconclusive = false;
    for y in 0..fp.entries.len() {
        if lv(y).value() != Some(b) {
            continue;
        }
        saw_center = true;
        let mut d = 1usize;
        loop {
            if y < d || y + d >= fp.entries.len() {
                inconclusive = true;
                break;
            }
            let (l, r) = (lv(y - d), lv(y + d));
            if l != r {
                break;
            }
            if l.value() == Some(a) {
                return Ok(BridgeSearch::Found {
                    x: y - d,
                    y,
                    z: y + d,
                });
            }
            d += 1;
        }
    }
    if !saw_center || inconclusive {
        return Ok(BridgeSearch::InconclusiveAtHorizon);
    }
    Ok(BridgeSearch::Absent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> KneadingMap {
        KneadingMap::fibonacci(64)
    }

    fn limits() -> GrowthLimits {
        GrowthLimits::default()
    }

    fn levels(fp: &FoldingPattern) -> Vec<String> {
        fp.entries().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn c0_prefix_matches_known_start() {
        let fp = generate_c0(&fib(), 3, &limits()).unwrap();
        assert_eq!(
            levels(&fp),
            vec!["INF", "0", "1", "0", "2", "0", "1", "0", "3"]
        );
    }

    #[test]
    fn sigma_step_increments_existing_levels() {
        let cuts = CutSet::from_map(&fib(), 32).unwrap();
        let fp = generate_c0(&fib(), 5, &limits()).unwrap();
        let next = sigma_step(&fp, &cuts, &limits()).unwrap();
        // old entries reappear incremented, in order, interleaved with 0s
        let mut old = fp.entries().iter();
        let mut matched = 0;
        let mut want = old.next();
        for e in next.entries() {
            if let Some(w) = want {
                let bumped = if w.is_infinite() {
                    Level::INFINITE
                } else {
                    Level::finite(w.value().unwrap() + 1)
                };
                if *e == bumped {
                    matched += 1;
                    want = old.next();
                    continue;
                }
            }
            assert_eq!(e.value(), Some(0), "unexpected non-zero insertion");
        }
        assert_eq!(matched, fp.len());
    }

    #[test]
    fn c0_prefix_stability() {
        // the endpoint pattern is one fixed sequence: each stage extends
        // the previous one
        let a = generate_c0(&fib(), 6, &limits()).unwrap();
        let b = generate_c0(&fib(), 7, &limits()).unwrap();
        assert_eq!(&b.entries()[..a.len()], a.entries());
    }

    #[test]
    fn r_seed_and_first_steps() {
        let fp = generate_r(&fib(), 3, &limits()).unwrap();
        let a = fp.anchor();
        assert_eq!(fp.entries()[a - 1].value(), Some(0));
        assert_eq!(fp.entries()[a + 1].value(), Some(1));
        fp.validate(&fib(), &CutSet::from_map(&fib(), 16).unwrap())
            .unwrap();
    }

    #[test]
    fn r_window_stability() {
        // each stage contains the previous stage as a centered window
        let a = generate_r(&fib(), 8, &limits()).unwrap();
        let b = generate_r(&fib(), 9, &limits()).unwrap();
        let (aa, ba) = (a.anchor(), b.anchor());
        let left = aa.min(ba);
        let right = (a.len() - aa).min(b.len() - ba);
        let wa = &a.entries()[aa - left..aa + right];
        let wb = &b.entries()[ba - left..ba + right];
        assert_eq!(wa, wb);
    }

    #[test]
    fn generated_patterns_validate() {
        let cuts = CutSet::from_map(&fib(), 64).unwrap();
        for steps in [1u32, 2, 5, 9, 12] {
            let fp = generate_c0(&fib(), steps, &limits()).unwrap();
            fp.validate(&fib(), &cuts).unwrap();
            let fp = generate_r(&fib(), steps, &limits()).unwrap();
            fp.validate(&fib(), &cuts).unwrap();
        }
        // and for a different admissible family
        let q3 = KneadingMap::offset(3, 64);
        for steps in [4u32, 9] {
            let fp = generate_c0(&q3, steps, &limits()).unwrap();
            fp.validate(&q3, &CutSet::from_map(&q3, 64).unwrap()).unwrap();
        }
    }

    #[test]
    fn fp_c0_salient_levels_are_consecutive() {
        let fp = fp_c0(&fib(), 10, &limits()).unwrap();
        let SalientIndex::C0(sal) = salient_indices(&fp).unwrap() else {
            unreachable!()
        };
        assert!(sal.len() >= 10);
        for (i, &pos) in sal.iter().take(10).enumerate() {
            assert_eq!(fp.entries()[pos].value(), Some(i as u32 + 1));
        }
    }

    #[test]
    fn fp_r_salient_ladders() {
        let fp = fp_r(&fib(), 6, &limits()).unwrap();
        let SalientIndex::R { left, right } = salient_indices(&fp).unwrap() else {
            unreachable!()
        };
        for (i, &pos) in right.iter().take(6).enumerate() {
            assert_eq!(
                fp.entries()[pos].value(),
                Some(2 * (i as u32 + 1) - 1),
                "right salient {i}"
            );
        }
        for (i, &pos) in left.iter().take(6).enumerate() {
            assert_eq!(
                fp.entries()[pos].value(),
                Some(2 * (i as u32 + 1)),
                "left salient {i}"
            );
        }
    }

    #[test]
    fn salient_of_bare_seed_is_empty() {
        let fp = FoldingPattern::seed_c0();
        let SalientIndex::C0(sal) = salient_indices(&fp).unwrap() else {
            unreachable!()
        };
        // the single proper entry has level 0, which never dominates
        assert!(sal.is_empty());
    }

    #[test]
    fn truncation_keeps_exact_prefix() {
        let full = generate_c0(&fib(), 14, &limits()).unwrap();
        let capped = generate_c0(
            &fib(),
            14,
            &GrowthLimits { max_entries: 200 },
        )
        .unwrap();
        assert!(capped.is_truncated());
        assert_eq!(capped.len(), 200);
        assert_eq!(&full.entries()[..200], capped.entries());
    }

    #[test]
    fn fp_c0_rejects_insufficient_cap() {
        let err = fp_c0(&fib(), 14, &GrowthLimits { max_entries: 64 });
        assert!(matches!(err, Err(Error::GrowthCap { .. })));
    }

    #[test]
    fn bridge_search_on_handcrafted_window() {
        // 0 2 0 inside the early pattern; interior maximum is a bridge
        let fp = generate_c0(&fib(), 6, &limits()).unwrap();
        match bridges_exists(&fp, 0, 2).unwrap() {
            BridgeSearch::Found { x, y, z } => {
                assert_eq!(fp.entries()[y].value(), Some(2));
                assert_eq!(fp.entries()[x].value(), Some(0));
                assert_eq!(fp.entries()[z].value(), Some(0));
            }
            other => panic!("expected a bridge, got {other:?}"),
        }
        assert!(bridges_exists(&fp, 2, 2).is_err());
    }

    #[test]
    fn rejects_inadmissible_map() {
        // Q = (0,0,1,0,3,...) violates the lexicographic condition
        let q = KneadingMap::from_values(vec![0, 0, 1, 0, 3, 3, 3, 3]).unwrap();
        if crate::kneading::is_admissible(&q, 8).unwrap().is_admissible() {
            // if this particular map happens to be admissible, skip
            return;
        }
        assert!(matches!(
            generate_c0(&q, 3, &limits()),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn text_and_json_emission() {
        let fp = generate_c0(&fib(), 2, &limits()).unwrap();
        assert_eq!(fp.to_text(), "INF 0 1 0 2");
        let json = fp.to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["side"], "C0");
        assert_eq!(v["entries"][0], "INF");
        assert_eq!(v["entries"][2], 1);
        assert_eq!(v["gaps"][0], "A");
    }
}
