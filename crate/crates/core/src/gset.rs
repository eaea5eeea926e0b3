//! Finite domains acted on by subgroups of `Sp(V)`.
//!
//! Points are stored as packed `u64`s: a vector, a canonical line
//! representative, or the functional `l` of the form `Q+ + l^2`. Forms are
//! acted on by `Q -> Q o g^{-1}`, so that `Q . (g h) = (Q . g) . h`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::grp::{is_isometry, GeneratorSet, GroupElement};
use crate::space::{FormType, LinearFunctional, QuadraticForm, Space, Vector};

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DomainKind {
    /// `V \ {0}`.
    Vectors,
    /// Quadratic forms of one type polarizing to the standard alternating form.
    Forms(FormType),
    /// 1-dimensional subspaces.
    Lines,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainKind::Vectors => f.write_str("V\\0"),
            DomainKind::Forms(ty) => write!(f, "forms{ty}"),
            DomainKind::Lines => f.write_str("lines"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GSet {
    kind: DomainKind,
    space: Space,
    points: Vec<u64>,
    // Dense map from packed object to position; ABSENT outside the domain.
    index: Vec<u32>,
}

impl GSet {
    pub fn new(space: &Space, kind: DomainKind, bound: u128) -> Result<Self> {
        let total = space.check_bound(&format!("domain {kind}"), bound)?;
        if total > ABSENT as u64 {
            return Err(Error::BoundExceeded { what: format!("domain {kind}"), needed: total as u128, bound: ABSENT as u128 });
        }
        let member = |p: u64| -> bool {
            match kind {
                DomainKind::Vectors => p != 0,
                DomainKind::Forms(ty) => space.functional_form_type(LinearFunctional(p)) == ty,
                DomainKind::Lines => p != 0 && space.normalize_line(Vector(p)) == Vector(p),
            }
        };
        let points: Vec<u64> = (0..total).filter(|&p| member(p)).collect();
        let mut index = vec![ABSENT; total as usize];
        for (i, &p) in points.iter().enumerate() {
            index[p as usize] = i as u32;
        }
        Ok(GSet { kind, space: space.clone(), points, index })
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }

    pub fn point(&self, i: usize) -> u64 {
        self.points[i]
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        match self.index.get(p as usize) {
            Some(&i) if i != ABSENT => Some(i as usize),
            _ => None,
        }
    }

    /// The quadratic form behind point `i` of a form domain.
    pub fn form(&self, i: usize) -> Option<QuadraticForm> {
        matches!(self.kind, DomainKind::Forms(_))
            .then(|| QuadraticForm::from_functional(&self.space, LinearFunctional(self.points[i])))
    }

    /// Image of a single point. Form domains invert `g` on every call; use
    /// [`GSet::permutation`] for bulk work.
    pub fn act(&self, p: u64, g: &GroupElement) -> Result<u64> {
        let out = match self.kind {
            DomainKind::Vectors => g.apply(&self.space, Vector(p)).0,
            DomainKind::Lines => self.space.normalize_line(g.apply(&self.space, Vector(p))).0,
            DomainKind::Forms(_) => {
                if !is_isometry(&self.space, g) {
                    return Err(Error::DomainNotClosed);
                }
                let h = g.inverse(&self.space)?;
                self.form_image(LinearFunctional(p), &h)
            }
        };
        self.index_of(out).map(|_| out).ok_or(Error::DomainNotClosed)
    }

    /// Functional of `(Q+ + l^2) o h`, valid for isometries `h`.
    fn form_image(&self, l: LinearFunctional, h: &GroupElement) -> u64 {
        let s = &self.space;
        let coords: Vec<FieldElement> = (0..s.dim()).map(|i| s.field().sqrt(s.q_functional(l, h.row(i)))).collect();
        s.vector(&coords).expect("valid coordinates").0
    }

    /// `perm[i]` is the index of `point(i) . g`.
    pub fn permutation(&self, g: &GroupElement) -> Result<Vec<u32>> {
        let s = &self.space;
        let mut perm = Vec::with_capacity(self.len());
        match self.kind {
            DomainKind::Vectors | DomainKind::Lines => {
                let table = g.action_table(s);
                for &p in &self.points {
                    let mut out = table.apply(p);
                    if self.kind == DomainKind::Lines {
                        out = s.normalize_line(Vector(out)).0;
                    }
                    perm.push(self.index_of(out).ok_or(Error::DomainNotClosed)? as u32);
                }
            }
            DomainKind::Forms(_) => {
                if !is_isometry(s, g) {
                    return Err(Error::DomainNotClosed);
                }
                let h = g.inverse(s)?;
                for &p in &self.points {
                    let out = self.form_image(LinearFunctional(p), &h);
                    perm.push(self.index_of(out).ok_or(Error::DomainNotClosed)? as u32);
                }
            }
        }
        Ok(perm)
    }

    /// `|{x : x . g = x}|`.
    pub fn fixed_points(&self, g: &GroupElement) -> usize {
        let s = &self.space;
        match self.kind {
            DomainKind::Vectors => {
                let table = g.action_table(s);
                self.points.iter().filter(|&&p| table.apply(p) == p).count()
            }
            DomainKind::Lines => {
                let table = g.action_table(s);
                self.points.iter().filter(|&&p| s.normalize_line(Vector(table.apply(p))).0 == p).count()
            }
            DomainKind::Forms(_) => {
                let tests = FormFixTests::new(s, g);
                self.points.iter().filter(|&&l| tests.fixes(l)).count()
            }
        }
    }

    /// Orbits of `<gens>` on this domain.
    pub fn orbits(&self, gens: &GeneratorSet) -> Result<OrbitPartition> {
        let perms = gens.gens().iter().map(|g| self.permutation(g)).collect::<Result<Vec<_>>>()?;
        Ok(OrbitPartition::from_permutations(self.len(), &perms))
    }
}

/// `Q o g = Q` iff both agree on every basis vector `b` and every sum of two
/// basis vectors. For `Q = Q+ + l^2` the condition at a test vector `y` reads
/// `l(y g + y) = sqrt(Q+(y g) + Q+(y))`, one dot product per test.
struct FormFixTests {
    tests: Vec<DotTest>,
    degree: u32,
    mask: u64,
    q: usize,
}

struct DotTest {
    // table[i * q + c] = c * d_i
    table: Vec<u8>,
    target: u8,
}

impl FormFixTests {
    fn new(s: &Space, g: &GroupElement) -> Self {
        let n = s.dim();
        let q = s.q() as usize;
        let field = s.field();
        let mut ys: Vec<Vector> = (0..n).map(|i| s.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                ys.push(s.basis_vector(i) + s.basis_vector(j));
            }
        }
        let tests = ys
            .into_iter()
            .map(|y| {
                let yg = g.apply(s, y);
                let d = yg + y;
                let target = field.sqrt(s.q_plus(yg) + s.q_plus(y)).0;
                let mut table = vec![0u8; n * q];
                for i in 0..n {
                    let di = s.coord(d, i);
                    for c in field.elements() {
                        table[i * q + c.0 as usize] = field.mul(c, di).0;
                    }
                }
                DotTest { table, target }
            })
            .collect();
        FormFixTests { tests, degree: s.field_degree(), mask: s.field().mask() as u64, q }
    }

    #[inline]
    fn fixes(&self, l: u64) -> bool {
        self.tests.iter().all(|t| {
            let mut acc = 0u8;
            let mut rest = l;
            let mut base = 0;
            while rest != 0 {
                acc ^= t.table[base + (rest & self.mask) as usize];
                rest >>= self.degree;
                base += self.q;
            }
            acc == t.target
        })
    }
}

/// Orbit labels, sizes and representatives (smallest index in each orbit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub labels: Vec<u32>,
    pub sizes: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl OrbitPartition {
    /// Connected components of the Schreier graph, found by BFS over indices.
    pub fn from_permutations(len: usize, perms: &[Vec<u32>]) -> Self {
        let mut labels = vec![ABSENT; len];
        let mut sizes = Vec::new();
        let mut representatives = Vec::new();
        let mut queue = Vec::new();
        for start in 0..len {
            if labels[start] != ABSENT {
                continue;
            }
            let label = sizes.len() as u32;
            labels[start] = label;
            queue.clear();
            queue.push(start as u32);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head] as usize;
                head += 1;
                for perm in perms {
                    let y = perm[x];
                    if labels[y as usize] == ABSENT {
                        labels[y as usize] = label;
                        queue.push(y);
                    }
                }
            }
            sizes.push(queue.len());
            representatives.push(start);
        }
        OrbitPartition { labels, sizes, representatives }
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }

    /// Whether the orbits are exactly the fibres of `key` (same key within an
    /// orbit, different keys across orbits).
    pub fn matches_fibres<K: Eq + std::hash::Hash + Clone>(&self, key: impl Fn(usize) -> K) -> bool {
        let mut orbit_key: Vec<Option<K>> = vec![None; self.count()];
        for (i, &label) in self.labels.iter().enumerate() {
            let k = key(i);
            match &orbit_key[label as usize] {
                None => orbit_key[label as usize] = Some(k),
                Some(existing) if *existing == k => {}
                Some(_) => return false,
            }
        }
        let distinct: std::collections::HashSet<K> = orbit_key.into_iter().flatten().collect();
        distinct.len() == self.count()
    }
}
