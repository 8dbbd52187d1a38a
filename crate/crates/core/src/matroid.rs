//! Finite matroids given by an independence oracle.
//!
//! The connectivity function is computed without ranks: take a basis `B`
//! of `M|X`, a basis `B'` of `M\X`, a maximal independent `S ⊆ B ∪ B'`,
//! and report `F = (B ∪ B') \ S`. The rank route `r(X) + r(Y) - r(E)` is
//! kept alongside as an independent cross-check.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{check_capacity, input, precondition, Error, Result};
use crate::exec::{Exec, Options};
use crate::report::{CertificatePath, Connectivity, SeparationKind, SeparationReport, SeparationSearch, Side};
use crate::set::{ElementSet, MAX_ELEMENTS};

type Predicate = dyn Fn(ElementSet) -> bool + Send + Sync;

/// A matroid on a finite, named ground set.
///
/// Elements are addressed by index into [`Matroid::ground`]; the predicate
/// must be pure. Duals and restrictions wrap the original predicate.
#[derive(Clone)]
pub struct Matroid {
    ground: Arc<Vec<String>>,
    lex_order: Arc<Vec<usize>>,
    oracle: Arc<Predicate>,
    label: String,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("label", &self.label)
            .field("ground", &self.ground)
            .finish()
    }
}

/// A maximal independent subset of `within`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Basis {
    pub elements: ElementSet,
    pub within: ElementSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Kappa {
    pub value: usize,
    /// `F`: the elements dropped from `B ∪ B'` to reach a basis.
    pub witness: ElementSet,
    pub basis_x: ElementSet,
    pub basis_y: ElementSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// (I1): the empty set is dependent.
    EmptyDependent,
    /// (I2): `set` is independent but its subset `subset` is not.
    NotSubsetClosed { set: Vec<String>, subset: Vec<String> },
    /// (I3): no element of `maximal \ smaller` extends `smaller`.
    NoAugmentation { smaller: Vec<String>, maximal: Vec<String> },
}

impl Matroid {
    pub fn new<F>(ground: Vec<String>, label: impl Into<String>, independent: F) -> Result<Self>
    where
        F: Fn(ElementSet) -> bool + Send + Sync + 'static,
    {
        check_capacity("matroid ground set", ground.len(), MAX_ELEMENTS)?;
        let mut lex: Vec<usize> = (0..ground.len()).collect();
        lex.sort_by(|&a, &b| ground[a].cmp(&ground[b]));
        if lex.windows(2).any(|w| ground[w[0]] == ground[w[1]]) {
            return Err(input("duplicate ground element"));
        }
        Ok(Matroid {
            ground: Arc::new(ground),
            lex_order: Arc::new(lex),
            oracle: Arc::new(independent),
            label: label.into(),
        })
    }

    /// Independent sets are the sets containing no listed circuit.
    pub fn from_circuits(ground: Vec<String>, circuits: &[Vec<String>]) -> Result<Self> {
        let index = |name: &String| {
            ground
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| input(format!("circuit element {name} is not in the ground set")))
        };
        let circuits: Vec<ElementSet> = circuits
            .iter()
            .map(|c| c.iter().map(index).collect::<Result<ElementSet>>())
            .collect::<Result<_>>()?;
        if circuits.iter().any(|c| c.is_empty()) {
            return Err(input("the empty set cannot be a circuit"));
        }
        Matroid::new(ground, "circuits", move |s| !circuits.iter().any(|c| c.is_subset(s)))
    }

    /// `U_{r,n}` on elements `a, b, c, ..` (or `x0, x1, ..` beyond 26).
    pub fn uniform(rank: usize, n: usize) -> Self {
        let ground = (0..n)
            .map(|i| {
                if n <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{i}")
                }
            })
            .collect();
        Matroid::new(ground, format!("U({rank},{n})"), move |s| s.len() <= rank)
            .expect("uniform matroid")
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.ground.len())
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        debug_assert!(set.is_subset(self.full()));
        (self.oracle)(set)
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.ground.iter().position(|g| g == name)
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        names
            .iter()
            .map(|n| {
                self.element_index(n.as_ref())
                    .ok_or_else(|| input(format!("unknown element {}", n.as_ref())))
            })
            .collect()
    }

    /// Member names in lexicographic order.
    pub fn names(&self, set: ElementSet) -> Vec<String> {
        self.lex_order
            .iter()
            .filter(|&&i| set.contains(i))
            .map(|&i| self.ground[i].clone())
            .collect()
    }

    /// Element indices sorted by name; the default greedy order.
    pub fn lex_order(&self) -> &[usize] {
        &self.lex_order
    }

    /// Greedy maximal independent set `I` with `containing ⊆ I ⊆ within`,
    /// scanning `order` (default: lexicographic by name).
    pub fn max_independent(
        &self,
        within: ElementSet,
        containing: ElementSet,
        order: Option<&[usize]>,
    ) -> Result<Basis> {
        if !containing.is_subset(within) {
            return Err(precondition("containing set is not inside the restriction set"));
        }
        if !within.is_subset(self.full()) {
            return Err(input("restriction set is not inside the ground set"));
        }
        if !self.is_independent(containing) {
            return Err(precondition("containing set is dependent"));
        }
        Ok(Basis {
            elements: self.greedy(within, containing, order),
            within,
        })
    }

    fn greedy(&self, within: ElementSet, start: ElementSet, order: Option<&[usize]>) -> ElementSet {
        let order = order.unwrap_or(&self.lex_order);
        let mut current = start;
        for &e in order {
            if within.contains(e) && !current.contains(e) && self.is_independent(current.with(e)) {
                current.insert(e);
            }
        }
        current
    }

    pub fn rank(&self, x: ElementSet) -> usize {
        self.greedy(x & self.full(), ElementSet::EMPTY, None).len()
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.is_independent(set) && (self.full() - set).iter().all(|e| !self.is_independent(set.with(e)))
    }

    /// The dual matroid: `I` is independent iff `E \ I` spans.
    pub fn dual(&self) -> Matroid {
        let inner = self.clone();
        let full = self.full();
        let full_rank = self.rank(full);
        Matroid {
            ground: Arc::clone(&self.ground),
            lex_order: Arc::clone(&self.lex_order),
            oracle: Arc::new(move |s: ElementSet| inner.rank(full - s) == full_rank),
            label: format!("dual({})", self.label),
        }
    }

    /// `M|x`, re-indexed on the members of `x` in ascending index order.
    pub fn restrict(&self, x: ElementSet) -> Matroid {
        let members: Vec<usize> = (x & self.full()).iter().collect();
        let ground = members.iter().map(|&i| self.ground[i].clone()).collect();
        let inner = self.clone();
        let lift = move |s: ElementSet| s.iter().map(|k| members[k]).collect::<ElementSet>();
        Matroid::new(ground, format!("{}|X", self.label), move |s| inner.is_independent(lift(s)))
            .expect("restriction of a valid matroid")
    }

    /// The connectivity function `κ(x)` with its witness `F`.
    pub fn kappa(&self, x: ElementSet) -> Kappa {
        self.kappa_with_order(x, None)
    }

    pub fn kappa_with_order(&self, x: ElementSet, order: Option<&[usize]>) -> Kappa {
        let x = x & self.full();
        let y = self.full() - x;
        let basis_x = self.greedy(x, ElementSet::EMPTY, order);
        let basis_y = self.greedy(y, ElementSet::EMPTY, order);
        let union = basis_x | basis_y;
        let kept = self.greedy(union, ElementSet::EMPTY, order);
        let witness = union - kept;
        Kappa {
            value: witness.len(),
            witness,
            basis_x,
            basis_y,
        }
    }

    /// `r(x) + r(E \ x) - r(E)`.
    pub fn kappa_by_rank(&self, x: ElementSet) -> usize {
        let x = x & self.full();
        self.rank(x) + self.rank(self.full() - x) - self.rank(self.full())
    }
}

/// Exhaustive check of (I1), (I2) and (I3).
pub fn check_axioms(m: &Matroid, opts: &Options) -> Result<Option<AxiomViolation>> {
    let n = m.size();
    check_capacity("axiom check ground set", n, opts.limits.axioms)?;
    if !m.is_independent(ElementSet::EMPTY) {
        return Ok(Some(AxiomViolation::EmptyDependent));
    }
    let total = 1u64 << n;
    let set = |bits: u64| ElementSet::from_bits(bits as u128);
    let indep: Vec<bool> = opts.exec.map(0..total, |b| m.is_independent(set(b)));

    let closure = opts.exec.find_first(0..total, |b| {
        if !indep[b as usize] {
            return None;
        }
        set(b)
            .iter()
            .map(|e| b & !(1u64 << e))
            .find(|&sub| !indep[sub as usize])
            .map(|sub| AxiomViolation::NotSubsetClosed {
                set: m.names(set(b)),
                subset: m.names(set(sub)),
            })
    });
    if closure.is_some() {
        return Ok(closure);
    }

    // extensions[b]: elements e with b + e independent (b independent)
    let extensions: Vec<u64> = opts.exec.map(0..total, |b| {
        if !indep[b as usize] {
            return 0;
        }
        (0..n)
            .filter(|&e| b & (1 << e) == 0 && indep[(b | (1 << e)) as usize])
            .fold(0u64, |acc, e| acc | (1 << e))
    });
    let maximal: Vec<u64> = (0..total)
        .filter(|&b| indep[b as usize] && extensions[b as usize] == 0)
        .collect();
    Ok(opts.exec.find_first(0..total, |b| {
        let ext = extensions[b as usize];
        if !indep[b as usize] || ext == 0 {
            return None;
        }
        maximal
            .iter()
            .find(|&&max| (max & !b) & ext == 0)
            .map(|&max| AxiomViolation::NoAugmentation {
                smaller: m.names(set(b)),
                maximal: m.names(set(max)),
            })
    }))
}

/// Partitions `(X, Y)` with the lexicographically first element in `X`,
/// enumerated as bitmasks over the remaining elements.
pub(crate) struct CanonicalPartitions {
    first: usize,
    rest: Vec<usize>,
}

impl CanonicalPartitions {
    /// `order` lists every element once; its first entry is pinned into `X`.
    pub(crate) fn new(order: &[usize]) -> Self {
        CanonicalPartitions {
            first: order.first().copied().unwrap_or(0),
            rest: order.iter().skip(1).copied().collect(),
        }
    }

    pub(crate) fn count(&self) -> u64 {
        1u64 << self.rest.len()
    }

    pub(crate) fn side(&self, mask: u64) -> ElementSet {
        let mut x = ElementSet::singleton(self.first);
        for (k, &e) in self.rest.iter().enumerate() {
            if mask & (1 << k) != 0 {
                x.insert(e);
            }
        }
        x
    }
}

/// All subsets of `ground` with size in `sizes`, in lexicographic order of
/// index combinations.
pub(crate) fn subsets_by_size(ground: &[usize], sizes: std::ops::RangeInclusive<usize>, limit: usize) -> Result<Vec<ElementSet>> {
    fn rec(ground: &[usize], k: usize, start: usize, cur: ElementSet, out: &mut Vec<ElementSet>, limit: usize) -> bool {
        if k == 0 {
            out.push(cur);
            return out.len() <= limit;
        }
        for i in start..ground.len() {
            if ground.len() - i < k {
                break;
            }
            if !rec(ground, k - 1, i + 1, cur.with(ground[i]), out, limit) {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    for k in sizes {
        if !rec(ground, k, 0, ElementSet::EMPTY, &mut out, limit) {
            return Err(Error::Capacity {
                what: "heuristic candidate family".into(),
                size: out.len(),
                limit,
            });
        }
    }
    Ok(out)
}

pub(crate) const HEURISTIC_CANDIDATES: usize = 2_000_000;

fn matroid_report(m: &Matroid, x: ElementSet, ell: usize, k: &Kappa, exhaustive: bool) -> SeparationReport {
    SeparationReport {
        kind: SeparationKind::Matroid,
        ell,
        x: Side::Ids(m.names(x)),
        y: Side::Ids(m.names(m.full() - x)),
        boundary: None,
        kappa: Some(k.value.into()),
        witness_f: Some(m.names(k.witness)),
        path: CertificatePath::Search,
        exhaustive,
    }
}

/// Candidate sides: canonical partitions when within the limit, otherwise
/// (heuristic mode only) small sides of size `ell..=ell+1`.
pub(crate) enum Candidates {
    Exhaustive(CanonicalPartitions),
    Heuristic(Vec<ElementSet>),
}

impl Candidates {
    /// `order` lists all `order.len()` elements, lexicographic first.
    pub(crate) fn new(order: &[usize], ells: std::ops::RangeInclusive<usize>, opts: &Options) -> Result<Self> {
        let n = order.len();
        if n <= opts.limits.separation {
            return Ok(Candidates::Exhaustive(CanonicalPartitions::new(order)));
        }
        if !opts.heuristic {
            check_capacity("separation search ground set", n, opts.limits.separation)?;
        }
        let lo = *ells.start();
        let hi = (*ells.end() + 1).min(n);
        Ok(Candidates::Heuristic(subsets_by_size(order, lo..=hi, HEURISTIC_CANDIDATES)?))
    }

    pub(crate) fn exhaustive(&self) -> bool {
        matches!(self, Candidates::Exhaustive(_))
    }

    /// The candidate with the smallest key, ties to the earliest.
    pub(crate) fn min_by<T: Send>(
        &self,
        exec: Exec,
        f: impl Fn(ElementSet) -> Option<(usize, T)> + Sync + Send,
    ) -> Option<(usize, T)> {
        let hit = match self {
            Candidates::Exhaustive(p) => exec.min_by_key(0..p.count(), |mask| f(p.side(mask))),
            Candidates::Heuristic(list) => exec.min_by_key(0..list.len() as u64, |i| f(list[i as usize])),
        };
        hit.map(|(k, _, t)| (k, t))
    }

    /// The earliest candidate accepted by `f`.
    pub(crate) fn find_first<T: Send>(&self, exec: Exec, f: impl Fn(ElementSet) -> Option<T> + Sync + Send) -> Option<T> {
        match self {
            Candidates::Exhaustive(p) => exec.find_first(0..p.count(), |mask| f(p.side(mask))),
            Candidates::Heuristic(list) => exec.find_first(0..list.len() as u64, |i| f(list[i as usize])),
        }
    }
}

/// Finds an ℓ-separation: `κ(X) ≤ ℓ-1` and `|X|, |Y| ≥ ℓ`.
pub fn find_matroid_separation(m: &Matroid, ell: usize, opts: &Options) -> Result<SeparationSearch> {
    if ell == 0 {
        return Err(precondition("separations start at ℓ = 1"));
    }
    let n = m.size();
    let cands = Candidates::new(m.lex_order(), ell..=ell, opts)?;
    let exhaustive = cands.exhaustive();
    let found = cands.find_first(opts.exec, |x| {
        if x.len() < ell || n - x.len() < ell {
            return None;
        }
        let k = m.kappa(x);
        (k.value < ell).then_some((x, k))
    });
    Ok(SeparationSearch {
        ell,
        found: found.map(|(x, k)| matroid_report(m, x, ell, &k, exhaustive)),
        exhaustive,
    })
}

/// Largest `k ≤ cap` such that `m` has no ℓ-separation with `ℓ < k`.
///
/// A partition is an ℓ-separation exactly for `κ+1 ≤ ℓ ≤ min(|X|,|Y|)`,
/// so one sweep recording the smallest feasible `κ+1` answers every ℓ.
pub fn matroid_connectivity(m: &Matroid, cap: usize, opts: &Options) -> Result<Connectivity> {
    let n = m.size();
    let cands = Candidates::new(m.lex_order(), 1..=cap.saturating_sub(1).max(1), opts)?;
    let exhaustive = cands.exhaustive();
    let best = cands.min_by(opts.exec, |x| {
        let small = x.len().min(n - x.len());
        let k = m.kappa(x);
        (k.value < small).then(|| (k.value + 1, (x, k)))
    });
    Ok(finish(m, cap, exhaustive, best))
}

fn finish(m: &Matroid, cap: usize, exhaustive: bool, best: Option<(usize, (ElementSet, Kappa))>) -> Connectivity {
    match best {
        Some((ell, (x, k))) if ell < cap => Connectivity {
            value: ell,
            cap,
            exhaustive,
            witness: Some(matroid_report(m, x, ell, &k, exhaustive)),
        },
        _ => Connectivity {
            value: cap,
            cap,
            exhaustive,
            witness: None,
        },
    }
}

/// Connectivity from the rank definition: `(X, Y)` is an ℓ-separation when
/// `r(X) + r(Y) - r(E) ≤ ℓ-1`.
pub fn matroid_connectivity_by_rank(m: &Matroid, cap: usize, opts: &Options) -> Result<Connectivity> {
    let n = m.size();
    let cands = Candidates::new(m.lex_order(), 1..=cap.saturating_sub(1).max(1), opts)?;
    let exhaustive = cands.exhaustive();
    let best = cands.min_by(opts.exec, |x| {
        let small = x.len().min(n - x.len());
        let lam = m.kappa_by_rank(x);
        (lam < small).then(|| {
            let k = Kappa {
                value: lam,
                witness: ElementSet::EMPTY,
                basis_x: ElementSet::EMPTY,
                basis_y: ElementSet::EMPTY,
            };
            (lam + 1, (x, k))
        })
    });
    let mut c = finish(m, cap, exhaustive, best);
    if let Some(w) = c.witness.as_mut() {
        w.witness_f = None;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graphic::mfc;

    fn opts() -> Options {
        Options::default()
    }

    #[test]
    fn uniform_axioms() {
        assert_eq!(check_axioms(&Matroid::uniform(1, 2), &opts()).unwrap(), None);
    }

    #[test]
    fn size_one_sets_dependent_violates_closure() {
        let m = Matroid::new(vec!["a".into(), "b".into()], "odd", |s| s.len() != 1).unwrap();
        let v = check_axioms(&m, &opts()).unwrap();
        assert_eq!(
            v,
            Some(AxiomViolation::NotSubsetClosed {
                set: vec!["a".into(), "b".into()],
                subset: vec!["b".into()]
            })
        );
    }

    #[test]
    fn empty_dependent_and_augmentation_failures() {
        let m = Matroid::new(vec!["a".into()], "none", |_| false).unwrap();
        assert_eq!(check_axioms(&m, &opts()).unwrap(), Some(AxiomViolation::EmptyDependent));
        // {a} and {b,c} both maximal: not a matroid
        let m = Matroid::new(vec!["a".into(), "b".into(), "c".into()], "bad", |s| {
            s.len() <= 1 || s == ElementSet::from_indices([1, 2])
        })
        .unwrap();
        assert!(matches!(
            check_axioms(&m, &opts()).unwrap(),
            Some(AxiomViolation::NoAugmentation { .. })
        ));
    }

    #[test]
    fn axiom_capacity() {
        let m = Matroid::uniform(2, 15);
        assert!(matches!(check_axioms(&m, &opts()), Err(Error::Capacity { .. })));
    }

    #[test]
    fn graphic_k4_satisfies_axioms() {
        assert_eq!(check_axioms(&mfc(&corpus::k4()), &opts()).unwrap(), None);
    }

    #[test]
    fn max_independent_examples() {
        let c4 = mfc(&corpus::cycle(4));
        let b = c4.max_independent(c4.full(), ElementSet::EMPTY, None).unwrap();
        assert_eq!(c4.names(b.elements), ["e12", "e23", "e34"]);
        let b = c4.max_independent(ElementSet::EMPTY, ElementSet::EMPTY, None).unwrap();
        assert!(b.elements.is_empty());

        let k4 = mfc(&corpus::k4());
        let tri = k4.set_of(&["e12", "e13", "e23"]).unwrap();
        let e12 = k4.set_of(&["e12"]).unwrap();
        let b = k4.max_independent(tri, e12, None).unwrap();
        assert_eq!(b.elements.len(), 2);
        assert!(e12.is_subset(b.elements) && b.elements.is_subset(tri));
    }

    #[test]
    fn max_independent_rejects_dependent_start() {
        let c3 = mfc(&corpus::cycle(3));
        assert!(matches!(
            c3.max_independent(c3.full(), c3.full(), None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let d = Matroid::uniform(1, 3).dual();
        assert!(d.is_independent(d.set_of(&["a", "b"]).unwrap()));
        assert!(!d.is_independent(d.full()));
        assert_eq!(d.rank(d.full()), 2);
    }

    #[test]
    fn rank_examples() {
        let k4 = mfc(&corpus::k4());
        assert_eq!(k4.rank(k4.full()), 3);
        assert_eq!(k4.rank(ElementSet::EMPTY), 0);
        let c4 = mfc(&corpus::cycle(4));
        assert_eq!(c4.rank(c4.set_of(&["e12", "e34"]).unwrap()), 2);
    }

    #[test]
    fn kappa_examples() {
        let k4 = mfc(&corpus::k4());
        assert_eq!(k4.kappa(k4.set_of(&["e12", "e13", "e23"]).unwrap()).value, 2);
        assert_eq!(k4.kappa(ElementSet::EMPTY).value, 0);
        let c4 = mfc(&corpus::cycle(4));
        let k = c4.kappa(c4.set_of(&["e12", "e34"]).unwrap());
        assert_eq!(k.value, 1);
        assert!(k.witness.is_subset(k.basis_x | k.basis_y));
        assert!(c4.is_basis((k.basis_x | k.basis_y) - k.witness));
    }

    #[test]
    fn restriction() {
        let k4 = mfc(&corpus::k4());
        let tri = k4.set_of(&["e12", "e13", "e23"]).unwrap();
        let r = k4.restrict(tri);
        assert_eq!(r.size(), 3);
        assert_eq!(r.rank(r.full()), 2);
    }

    #[test]
    fn separation_examples() {
        let c4 = mfc(&corpus::cycle(4));
        let s = find_matroid_separation(&c4, 2, &opts()).unwrap();
        let f = s.found.unwrap();
        assert_eq!(f.x, Side::Ids(vec!["e12".into(), "e23".into()]));
        assert_eq!(f.kappa, Some(1.into()));

        let c3 = mfc(&corpus::cycle(3));
        let s = find_matroid_separation(&c3, 2, &opts()).unwrap();
        assert!(s.found.is_none() && s.exhaustive);

        let k4 = mfc(&corpus::k4());
        assert!(find_matroid_separation(&k4, 2, &opts()).unwrap().found.is_none());
        let f = find_matroid_separation(&k4, 3, &opts()).unwrap().found.unwrap();
        assert_eq!(f.kappa, Some(2.into()));
    }

    #[test]
    fn connectivity_examples() {
        let conn = |g| matroid_connectivity(&mfc(&g), 5, &opts()).unwrap().value;
        assert_eq!(conn(corpus::k4()), 3);
        assert_eq!(conn(corpus::cycle(4)), 2);
        assert_eq!(conn(corpus::bowtie()), 1);
        // U(2,3) has no separation at all
        assert_eq!(conn(corpus::cycle(3)), 5);
    }

    #[test]
    fn capacity_and_heuristic() {
        let m = Matroid::uniform(2, 18);
        assert!(matches!(find_matroid_separation(&m, 2, &opts()), Err(Error::Capacity { .. })));
        let h = Options {
            heuristic: true,
            ..opts()
        };
        let s = find_matroid_separation(&m, 2, &h).unwrap();
        assert!(!s.exhaustive);
        // U(2,18): κ(X) = 2 + 2 - 2 = 2 for 2 ≤ |X| ≤ 16, so ℓ = 3 is reachable
        assert!(s.found.is_none());
        let s = find_matroid_separation(&m, 3, &h).unwrap();
        assert_eq!(s.found.unwrap().kappa, Some(2.into()));
    }

    #[test]
    fn rank_route_agrees_on_small_graphs() {
        for (_, g) in corpus::finite_corpus() {
            let m = mfc(&g);
            let a = matroid_connectivity(&m, 6, &opts()).unwrap().value;
            let b = matroid_connectivity_by_rank(&m, 6, &opts()).unwrap().value;
            assert_eq!(a, b);
        }
    }
}
