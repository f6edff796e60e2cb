//! Brute-force ground truth for small sizes.
//!
//! Wheel-sequences are generated explicitly, canonicalised under the dihedral
//! or cyclic group by lexicographic minimum, and counted directly. Nothing
//! here depends on the series machinery.

use std::collections::{BTreeMap, HashSet};

use crate::parallel::{map_collect, Exec};
use crate::{Error, Result};

/// Labels `a_0 .. a_{2k−1}` around a 2k-gon with no two opposite and no two
/// adjacent zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WheelSequence {
    labels: Vec<u32>,
}

impl WheelSequence {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        let len = labels.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::InvalidSequence(format!("length {len} is not 2k with k >= 1")));
        }
        let k = len / 2;
        for i in 0..len {
            if labels[i] == 0 && labels[(i + k) % len] == 0 {
                return Err(Error::InvalidSequence(format!("opposite zeros at {i}")));
            }
            if labels[i] == 0 && labels[(i + 1) % len] == 0 {
                return Err(Error::InvalidSequence(format!("adjacent zeros at {i}")));
            }
        }
        Ok(WheelSequence { labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn diameters(&self) -> usize {
        self.labels.len() / 2
    }

    pub fn size(&self) -> u32 {
        self.labels.iter().sum()
    }
}

/// A reduced Gale diagram: a centre label plus a wheel satisfying P3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaleDiagram {
    centre: u32,
    wheel: WheelSequence,
}

impl GaleDiagram {
    pub fn new(centre: u32, wheel: WheelSequence) -> Result<Self> {
        if wheel.diameters() < 2 {
            return Err(Error::InvalidSequence("a reduced Gale diagram needs k >= 2".into()));
        }
        if !satisfies_p3(&wheel) {
            return Err(Error::InvalidSequence("wheel violates the half-plane condition".into()));
        }
        Ok(GaleDiagram { centre, wheel })
    }

    pub fn centre(&self) -> u32 {
        self.centre
    }

    pub fn wheel(&self) -> &WheelSequence {
        &self.wheel
    }

    pub fn size(&self) -> u32 {
        self.centre + self.wheel.size()
    }
}

/// P3 in window form: with `k = len/2`, every `k − 1` cyclically consecutive
/// labels sum to at least 2. Fails for `k = 1`, where the windows are empty.
pub fn window_condition(labels: &[u32]) -> bool {
    let len = labels.len();
    let w = (len / 2).saturating_sub(1);
    if w == 0 {
        return false;
    }
    let mut sum: u32 = labels[..w].iter().sum();
    for i in 0..len {
        if sum < 2 {
            return false;
        }
        sum = sum + labels[(i + w) % len] - labels[i];
    }
    true
}

pub fn satisfies_p3(w: &WheelSequence) -> bool {
    window_condition(&w.labels)
}

/// Every wheel-sequence of size `n` with `k` diameters, in lexicographic order.
pub fn sequences_with_diameters(n: u32, k: usize) -> Vec<WheelSequence> {
    fn rec(pre: &mut Vec<u32>, rem: u32, k: usize, out: &mut Vec<WheelSequence>) {
        let len = 2 * k;
        let i = pre.len();
        if i == len {
            if rem == 0 {
                out.push(WheelSequence { labels: pre.clone() });
            }
            return;
        }
        let last = i == len - 1;
        for v in 0..=rem {
            if last && v != rem {
                continue;
            }
            if v == 0 {
                let adj = i > 0 && pre[i - 1] == 0;
                let opp = i >= k && pre[i - k] == 0;
                let wrap = last && pre[0] == 0;
                if adj || opp || wrap {
                    continue;
                }
            }
            pre.push(v);
            rec(pre, rem - v, k, out);
            pre.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && k as u32 <= n {
        rec(&mut Vec::with_capacity(2 * k), n, k, &mut out);
    }
    out
}

/// Every wheel-sequence of size `n`: lengths `2 <= 2k <= 2n`.
pub fn enumerate_wheel_sequences(n: u32) -> Vec<WheelSequence> {
    (1..=n as usize).flat_map(|k| sequences_with_diameters(n, k)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Dihedral,
    Cyclic,
}

fn rotated(s: &[u32], l: usize) -> impl Iterator<Item = u32> + '_ {
    let n = s.len();
    (0..n).map(move |j| s[(j + l) % n])
}

fn reflected(s: &[u32], l: usize) -> impl Iterator<Item = u32> + '_ {
    let n = s.len();
    (0..n).map(move |j| s[(l + n - j) % n])
}

/// Lexicographic minimum over the group images of `s`.
pub fn canonical_form(s: &[u32], group: Group) -> Vec<u32> {
    let n = s.len();
    let mut best = s.to_vec();
    for l in 0..n {
        if rotated(s, l).lt(best.iter().copied()) {
            best = rotated(s, l).collect();
        }
        if group == Group::Dihedral && reflected(s, l).lt(best.iter().copied()) {
            best = reflected(s, l).collect();
        }
    }
    best
}

/// Number of orbits among `sequences` under `group`.
pub fn orbit_count(sequences: &[WheelSequence], group: Group) -> usize {
    sequences
        .iter()
        .map(|s| canonical_form(&s.labels, group))
        .collect::<HashSet<_>>()
        .len()
}

/// Fixed-point data for one `(n, k)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FixedPairs {
    /// Wheel-sequences.
    pub rooted: u64,
    /// (sequence, nontrivial rotation) pairs with the rotation fixing it.
    pub rotation_pairs: u64,
    /// (sequence, reflection) pairs with the reflection fixing it.
    pub reflection_pairs: u64,
    /// Sequences fixed by the vertex-axis reflection `(0,−)`.
    pub vertex_axis: u64,
    /// Sequences fixed by the edge-axis reflection `(−1,−)`.
    pub edge_axis: u64,
}

/// Orbit counts for one `(n, k)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrbitCounts {
    pub wheels: u64,
    pub oriented_wheels: u64,
    pub not_p3: u64,
    pub oriented_not_p3: u64,
    /// P3 wheels whose dihedral orbit contains a reflection-symmetric sequence.
    pub achiral_p3: u64,
}

impl std::ops::AddAssign for OrbitCounts {
    fn add_assign(&mut self, o: Self) {
        self.wheels += o.wheels;
        self.oriented_wheels += o.oriented_wheels;
        self.not_p3 += o.not_p3;
        self.oriented_not_p3 += o.oriented_not_p3;
        self.achiral_p3 += o.achiral_p3;
    }
}

/// Everything the oracle knows about wheels of one size, keyed by `k`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SizeStatistics {
    pub fixed: BTreeMap<usize, FixedPairs>,
    pub orbits: BTreeMap<usize, OrbitCounts>,
}

impl SizeStatistics {
    pub fn totals(&self) -> OrbitCounts {
        let mut t = OrbitCounts::default();
        for o in self.orbits.values() {
            t += *o;
        }
        t
    }
}

fn stats_for(n: u32, k: usize) -> (FixedPairs, OrbitCounts) {
    let len = 2 * k;
    let mut f = FixedPairs::default();
    let mut dih = HashSet::new();
    let mut cyc = HashSet::new();
    let mut dih_bad = HashSet::new();
    let mut cyc_bad = HashSet::new();
    let mut achiral = HashSet::new();
    for s in sequences_with_diameters(n, k) {
        let a = &s.labels;
        f.rooted += 1;
        f.rotation_pairs += (1..len).filter(|&l| rotated(a, l).eq(a.iter().copied())).count() as u64;
        let refl = (0..len).filter(|&l| reflected(a, l).eq(a.iter().copied())).count() as u64;
        f.reflection_pairs += refl;
        f.vertex_axis += reflected(a, 0).eq(a.iter().copied()) as u64;
        f.edge_axis += reflected(a, len - 1).eq(a.iter().copied()) as u64;
        let d = canonical_form(a, Group::Dihedral);
        let c = canonical_form(a, Group::Cyclic);
        if window_condition(a) {
            if refl > 0 {
                achiral.insert(d.clone());
            }
        } else {
            dih_bad.insert(d.clone());
            cyc_bad.insert(c.clone());
        }
        dih.insert(d);
        cyc.insert(c);
    }
    let o = OrbitCounts {
        wheels: dih.len() as u64,
        oriented_wheels: cyc.len() as u64,
        not_p3: dih_bad.len() as u64,
        oriented_not_p3: cyc_bad.len() as u64,
        achiral_p3: achiral.len() as u64,
    };
    (f, o)
}

/// Enumerates all wheels of size `n`, sharded by `k`.
pub fn wheel_statistics(n: u32, exec: Exec) -> SizeStatistics {
    let ks: Vec<usize> = (1..=n as usize).collect();
    let per_k = map_collect(exec, ks, |k| (k, stats_for(n, k)));
    let mut out = SizeStatistics::default();
    for (k, (f, o)) in per_k {
        out.fixed.insert(k, f);
        out.orbits.insert(k, o);
    }
    out
}

/// Per-`k` ground truth for `R`, `R⁺` and `R⁻` at size `n`.
pub fn fixed_pair_counts(n: u32, exec: Exec) -> BTreeMap<usize, FixedPairs> {
    wheel_statistics(n, exec).fixed
}

/// Diagram counts of one size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCounts {
    pub c: u64,
    pub c_plus: u64,
    pub c_minus: u64,
    /// Achiral diagrams counted directly rather than as `2c − c⁺`.
    pub achiral_direct: u64,
}

/// Reduced Gale diagrams of size `n` up to symmetry: a wheel of size `m <= n`
/// satisfying P3 plus a centre label `n − m`.
pub fn brute_force_counts(n: u32, exec: Exec) -> OracleCounts {
    let sizes: Vec<u32> = (1..=n).collect();
    let per_size = map_collect(exec, sizes, |m| {
        let mut t = OrbitCounts::default();
        for k in 2..=m as usize {
            t += stats_for(m, k).1;
        }
        t
    });
    let (mut c, mut cp, mut ach) = (0, 0, 0);
    for t in per_size {
        c += t.wheels - t.not_p3;
        cp += t.oriented_wheels - t.oriented_not_p3;
        ach += t.achiral_p3;
    }
    OracleCounts { c, c_plus: cp, c_minus: 2 * c - cp, achiral_direct: ach }
}

/// Every reduced Gale diagram of size `n`, one per dihedral orbit.
pub fn gale_diagrams(n: u32) -> Vec<GaleDiagram> {
    let mut out = Vec::new();
    for m in 1..=n {
        let mut seen = HashSet::new();
        for s in enumerate_wheel_sequences(m) {
            if s.diameters() >= 2 && satisfies_p3(&s) && seen.insert(canonical_form(&s.labels, Group::Dihedral)) {
                out.push(GaleDiagram { centre: n - m, wheel: s });
            }
        }
    }
    out
}
