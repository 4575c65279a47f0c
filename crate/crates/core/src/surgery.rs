//! Ribbon decompositions: words of gluings on `n` disks, their orientation
//! cover, the map to transposition sequences, and classification of the
//! resulting surface.
//!
//! A gluing `G[i,j]^{εδ}` attaches a ribbon between marked points `i` and
//! `j`; with signed labels `i^+ = i`, `i^- = i + n` it corresponds to the
//! transposition `(i^ε, j^δ)` on `2n` points. Gluings are applied in list
//! order, so the first gluing of a word is `σ1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{workload, Budget, TranspositionSequence};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{classify_twisted, doubled_type, tau, tau_point, Permutation, Transposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// `i^ε` on `2n` points.
pub fn signed_label(n: usize, i: usize, sign: Sign) -> usize {
    match sign {
        Sign::Plus => i,
        Sign::Minus => tau_point(n, i),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Gluing {
    pub i: usize,
    pub j: usize,
    pub eps: Sign,
    pub delta: Sign,
}

impl Gluing {
    pub fn new(i: usize, j: usize, eps: Sign, delta: Sign) -> Result<Self> {
        if i == j {
            return Err(Error::domain(format!(
                "gluing G[{i},{j}] joins a marked point to itself"
            )));
        }
        if i == 0 || j == 0 {
            return Err(Error::domain("disk labels start at 1"));
        }
        Ok(Gluing { i, j, eps, delta })
    }

    pub fn is_twisted(&self) -> bool {
        self.eps != self.delta
    }

    pub fn flipped(&self) -> Gluing {
        Gluing {
            eps: self.eps.flip(),
            delta: self.delta.flip(),
            ..*self
        }
    }

    /// `(i^ε, j^δ)`.
    pub fn transposition(&self, n: usize) -> Transposition {
        Transposition::new(signed_label(n, self.i, self.eps), signed_label(n, self.j, self.delta))
            .expect("distinct disks give distinct signed labels")
    }
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G[{},{}]^{{{}{}}}",
            self.i,
            self.j,
            self.eps.symbol(),
            self.delta.symbol()
        )
    }
}

/// `n` disks and an ordered word of gluings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RibbonDecomposition {
    n: usize,
    gluings: Vec<Gluing>,
}

impl RibbonDecomposition {
    pub fn new(n: usize, gluings: Vec<Gluing>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a ribbon decomposition needs at least one disk"));
        }
        for (k, g) in gluings.iter().enumerate() {
            if g.i == g.j || g.i == 0 || g.j == 0 || g.i > n || g.j > n {
                return Err(Error::domain(format!("gluing {} ({g}) is invalid on {n} disks", k + 1)));
            }
        }
        Ok(RibbonDecomposition { n, gluings })
    }

    /// Parses `G[i,j]^{εδ}` gluings separated by `;`. Blank text is the
    /// empty word. Error positions are byte offsets into `text`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut gluings = Vec::new();
        let mut offset = 0;
        for piece in text.split(';') {
            let lead = piece.len() - piece.trim_start().len();
            let body = piece.trim();
            if body.is_empty() {
                if !text.trim().is_empty() {
                    return Err(Error::parse(offset + lead, "empty gluing"));
                }
            } else {
                let g = parse_gluing(body, offset + lead)?;
                if g.i > n || g.j > n {
                    return Err(Error::parse(
                        offset + lead,
                        format!("gluing {} ({g}) uses a disk beyond {n}", gluings.len() + 1),
                    ));
                }
                gluings.push(g);
            }
            offset += piece.len() + 1;
        }
        RibbonDecomposition::new(n, gluings)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    pub fn len(&self) -> usize {
        self.gluings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gluings.is_empty()
    }
}

impl fmt::Display for RibbonDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.gluings.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn parse_gluing(body: &str, at: usize) -> Result<Gluing> {
    let err = |pos: usize, msg: &str| Error::parse(at + pos, msg.to_string());
    let rest = body.strip_prefix("G[").ok_or_else(|| err(0, "expected `G[`"))?;
    let close = rest.find(']').ok_or_else(|| err(2, "missing `]`"))?;
    let labels = &rest[..close];
    let (a, b) = labels
        .split_once(',')
        .ok_or_else(|| err(2, "expected two disk labels `i,j`"))?;
    let label = |s: &str, pos: usize| -> Result<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| err(pos, "disk label must be a positive integer"))
    };
    let i = label(a, 2)?;
    let j = label(b, 2 + a.len() + 1)?;
    let after = 2 + close + 1;
    let signs = body[after..]
        .strip_prefix("^{")
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| err(after, "expected `^{εδ}` with ε, δ in {+,-}"))?;
    let mut parsed = Vec::with_capacity(2);
    for c in signs.chars() {
        parsed.push(match c {
            '+' => Sign::Plus,
            '-' | '−' => Sign::Minus,
            _ => return Err(err(after + 2, "sign must be `+` or `-`")),
        });
    }
    let [eps, delta] = parsed[..] else {
        return Err(err(after + 2, "expected exactly two signs"));
    };
    Gluing::new(i, j, eps, delta).map_err(|e| match e {
        Error::Domain(msg) => Error::parse(at, msg),
        other => other,
    })
}

/// `Ξ`: the transposition `(i_k^{ε_k}, j_k^{δ_k})` for every gluing.
pub fn xi(rd: &RibbonDecomposition) -> TranspositionSequence {
    let sigmas = rd.gluings.iter().map(|g| g.transposition(rd.n)).collect();
    TranspositionSequence::new(rd.n, sigmas).expect("gluings of distinct disks are admissible")
}

/// The orientation cover on `2n` disks: `2m` untwisted gluings, first the
/// mirrored ones `(i_k^{-ε_k}, j_k^{-δ_k})` for `k = m..1`, then
/// `(i_k^{ε_k}, j_k^{δ_k})` for `k = 1..m`.
pub fn orientation_cover(rd: &RibbonDecomposition) -> RibbonDecomposition {
    let n = rd.n;
    let plain = |i, j| Gluing {
        i,
        j,
        eps: Sign::Plus,
        delta: Sign::Plus,
    };
    let mirrored = rd
        .gluings
        .iter()
        .rev()
        .map(|g| plain(signed_label(n, g.i, g.eps.flip()), signed_label(n, g.j, g.delta.flip())));
    let direct = rd
        .gluings
        .iter()
        .map(|g| plain(signed_label(n, g.i, g.eps), signed_label(n, g.j, g.delta)));
    RibbonDecomposition {
        n: 2 * n,
        gluings: mirrored.chain(direct).collect(),
    }
}

/// `σ1 … σm (τσmτ) … (τσ1τ)` on `2n` points.
pub fn boundary_permutation_cover(rd: &RibbonDecomposition) -> Permutation {
    let n = rd.n;
    let t = tau(n);
    let mut prefix = Permutation::identity(2 * n);
    for g in &rd.gluings {
        prefix = &prefix * &g.transposition(n).to_permutation(2 * n);
    }
    &(&(&prefix * &t) * &prefix.inverse()) * &t
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub disks: Vec<usize>,
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Marked points on each boundary circle of the component.
    pub boundary_partition: Partition,
    pub classification: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub n: usize,
    pub ribbons: usize,
    pub components: Vec<ComponentReport>,
    pub boundary_type: Partition,
}

impl SurfaceReport {
    pub fn euler_characteristic(&self) -> i64 {
        self.components.iter().map(|c| c.euler_characteristic).sum()
    }
}

/// Components of the multigraph on `1..=n` with an edge per gluing, as a
/// root label per disk (index 0 unused).
fn component_roots(n: usize, gluings: &[Gluing]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for g in gluings {
        let (a, b) = (find(&mut parent, g.i), find(&mut parent, g.j));
        parent[a.max(b)] = a.min(b);
    }
    (0..=n).map(|x| find(&mut parent, x)).collect()
}

fn classify_surface(chi: i64, orientable: bool, boundary: usize) -> String {
    let b = boundary as i64;
    let circles = if b == 1 {
        "1 boundary circle".to_string()
    } else {
        format!("{b} boundary circles")
    };
    let deficit = 2 - b - chi;
    if orientable {
        debug_assert!(deficit >= 0 && deficit % 2 == 0, "χ={chi}, b={b}");
        format!("genus {}, {circles}", deficit / 2)
    } else {
        debug_assert!(deficit >= 1, "χ={chi}, b={b}");
        let caps = if deficit == 1 {
            "1 cross-cap".to_string()
        } else {
            format!("{deficit} cross-caps")
        };
        format!("{caps}, {circles}")
    }
}

pub fn analyze(rd: &RibbonDecomposition) -> SurfaceReport {
    let n = rd.n;
    let roots = component_roots(n, &rd.gluings);
    let cover = orientation_cover(rd);
    let cover_roots = component_roots(2 * n, &cover.gluings);

    let boundary = boundary_permutation_cover(rd);
    let class = classify_twisted(&boundary, n).expect("boundary permutation lies in C~(τ)");
    assert!(
        class.self_symmetric_cycles.is_empty(),
        "internal invariant violated: cover boundary of {rd} has self-symmetric cycles"
    );
    let disk_of = |point: usize| (point - 1) % n + 1;

    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (d, &root) in roots.iter().enumerate().skip(1) {
        by_root.entry(root).or_default().push(d);
    }
    let mut circles: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (cycle, _) in &class.symmetric_pairs {
        circles.entry(roots[disk_of(cycle[0])]).or_default().push(cycle.len());
    }
    let mut ribbons: BTreeMap<usize, i64> = BTreeMap::new();
    for g in &rd.gluings {
        *ribbons.entry(roots[g.i]).or_default() += 1;
    }

    let components = by_root
        .into_iter()
        .map(|(root, disks)| {
            let chi = disks.len() as i64 - ribbons.get(&root).copied().unwrap_or(0);
            let lifted: BTreeSet<usize> = disks
                .iter()
                .flat_map(|&d| [cover_roots[d], cover_roots[d + n]])
                .collect();
            let orientable = lifted.len() == 2;
            let boundary_partition = Partition::from_parts_unsorted(circles.remove(&root).unwrap_or_default());
            let classification = classify_surface(chi, orientable, boundary_partition.len());
            ComponentReport {
                disks,
                euler_characteristic: chi,
                orientable,
                boundary_partition,
                classification,
            }
        })
        .collect();

    SurfaceReport {
        n,
        ribbons: rd.len(),
        components,
        boundary_type: class.doubled_type.expect("no self-symmetric cycles"),
    }
}

/// Every gluing in normal form (`i < j`, all four sign pairs).
pub fn normal_gluings(n: usize) -> Vec<Gluing> {
    let signs = [Sign::Plus, Sign::Minus];
    let mut out = Vec::with_capacity(2 * n * n.saturating_sub(1));
    for i in 1..=n {
        for j in i + 1..=n {
            for eps in signs {
                for delta in signs {
                    out.push(Gluing { i, j, eps, delta });
                }
            }
        }
    }
    out
}

/// Tallies the boundary type of every normal-form word of length `m` on
/// `n` disks. Every partition of `n` appears as a key.
pub fn count_decompositions(n: usize, m: usize, budget: Budget) -> Result<BTreeMap<Partition, BigUint>> {
    if n == 0 {
        return Err(Error::domain("count_decompositions needs n ≥ 1"));
    }
    let work = workload(n, m).ok_or(Error::Resource {
        what: "gluing word count overflows",
        workload: u128::MAX,
        budget: budget.max_work,
    })?;
    budget.check("count_decompositions: gluing words", work)?;

    let letters = normal_gluings(n);
    let mut tally: BTreeMap<Partition, BigUint> =
        partitions_of(n).into_iter().map(|p| (p, BigUint::default())).collect();

    fn walk(n: usize, letters: &[Gluing], word: &mut Vec<Gluing>, left: usize, out: &mut BTreeMap<Partition, u64>) {
        if left == 0 {
            let rd = RibbonDecomposition {
                n,
                gluings: word.clone(),
            };
            let lambda = doubled_type(&boundary_permutation_cover(&rd)).expect("boundary lies in B~_n");
            *out.entry(lambda).or_default() += 1;
            return;
        }
        for &g in letters {
            word.push(g);
            walk(n, letters, word, left - 1, out);
            word.pop();
        }
    }

    let partials: Vec<BTreeMap<Partition, u64>> = if m == 0 {
        let mut out = BTreeMap::new();
        walk(n, &letters, &mut Vec::new(), 0, &mut out);
        vec![out]
    } else {
        letters
            .par_iter()
            .map(|&first| {
                let mut out = BTreeMap::new();
                walk(n, &letters, &mut vec![first], m - 1, &mut out);
                out
            })
            .collect()
    };
    for partial in partials {
        for (lambda, c) in partial {
            *tally.get_mut(&lambda).expect("boundary type has weight n") += c;
        }
    }
    Ok(tally)
}

/// `𝒫(a_i)` for every disk: gluing numbers at `a_i`, left to right. A
/// gluing attached with sign `+` at `i` lands rightmost, with `−` leftmost.
pub fn diagonal_orderings(rd: &RibbonDecomposition) -> Vec<Vec<usize>> {
    let mut orderings: Vec<std::collections::VecDeque<usize>> = vec![Default::default(); rd.n + 1];
    for (k, g) in rd.gluings.iter().enumerate() {
        for (disk, sign) in [(g.i, g.eps), (g.j, g.delta)] {
            match sign {
                Sign::Plus => orderings[disk].push_back(k + 1),
                Sign::Minus => orderings[disk].push_front(k + 1),
            }
        }
    }
    orderings.into_iter().map(Vec::from).collect()
}

/// Strictly decreasing then strictly increasing.
pub fn is_anti_unimodal(seq: &[usize]) -> bool {
    let Some(low) = seq.iter().enumerate().min_by_key(|(_, &v)| v).map(|(p, _)| p) else {
        return true;
    };
    seq[..=low].windows(2).all(|w| w[0] > w[1]) && seq[low..].windows(2).all(|w| w[0] < w[1])
}

/// Checks anti-unimodality at every vertex and the twisting rule (a twisted
/// edge is negative at one end and positive at the other, an untwisted
/// edge has the same side at both) for the given orderings of `rd`'s edges.
pub fn satisfies_diagonal_properties(rd: &RibbonDecomposition, orderings: &[Vec<usize>]) -> bool {
    if orderings.len() != rd.n + 1 || !orderings.iter().all(|o| is_anti_unimodal(o)) {
        return false;
    }
    // (negative, positive) membership of each edge at each vertex.
    let side = |disk: usize, edge: usize| -> Option<(bool, bool)> {
        let seq = &orderings[disk];
        let at = seq.iter().position(|&e| e == edge)?;
        let low = seq.iter().enumerate().min_by_key(|(_, &v)| v)?.0;
        Some((at <= low, at >= low))
    };
    rd.gluings.iter().enumerate().all(|(k, g)| {
        let (Some((neg_i, pos_i)), Some((neg_j, pos_j))) = (side(g.i, k + 1), side(g.j, k + 1)) else {
            return false;
        };
        if g.is_twisted() {
            (pos_i && neg_j) || (neg_i && pos_j)
        } else {
            (pos_i && pos_j) || (neg_i && neg_j)
        }
    })
}
