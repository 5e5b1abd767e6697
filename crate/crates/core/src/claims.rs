//! Registry of the checkable claims about `ssd`, `sd` and `d`, and a runner
//! that evaluates each claim on concrete groups.
//!
//! Free variables (a normal subgroup `N`, a subgroup `H`, `K` or `M`, the
//! depth `n`) are quantified universally: every admissible value yields its
//! own [`ClaimResult`], and a claim holds on a group only if every
//! instantiation holds.
//!
//! Each result carries a `reading`. `"statement"` is the claim as stated and
//! is what [`SuiteReport::all_hold`] looks at; other readings are diagnostic
//! variants recorded next to it.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::characters::{class_count, equal_generator_invariance, xi_vector};
use crate::degrees::{
    commuting_subgroup_pairs, d_group, d_multi_in, multi_bracket_count, BracketTable,
    DEFAULT_D_MULTI_BUDGET, MAX_DEPTH,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{is_prime, Family, Group};
use crate::lattice::Lattice;
use crate::mask::Mask;
use crate::rational::Rational;

/// Claim identifier `C1` ..= `C20`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClaimId(u8);

impl ClaimId {
    pub const COUNT: u8 = 20;

    pub fn new(n: u8) -> Option<ClaimId> {
        (1..=Self::COUNT).contains(&n).then_some(ClaimId(n))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ClaimId> {
        (1..=Self::COUNT).map(ClaimId)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClaimId> {
        let t = s.trim();
        let digits = t.strip_prefix('C').or_else(|| t.strip_prefix('c'));
        digits
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse::<u8>().ok())
            .and_then(ClaimId::new)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Equality,
    NonStrict,
    Strict,
    Iff,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Equality => "equality",
            Kind::NonStrict => "non-strict inequality",
            Kind::Strict => "strict inequality",
            Kind::Iff => "iff",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClaimInfo {
    pub id: ClaimId,
    pub description: &'static str,
    /// The checked relation, written out as a formula.
    pub statement: &'static str,
    pub kind: Kind,
    pub applicability: &'static str,
}

macro_rules! claim {
    ($n:expr, $kind:ident, $desc:expr, $stmt:expr, $app:expr) => {
        ClaimInfo {
            id: ClaimId($n),
            description: $desc,
            statement: $stmt,
            kind: Kind::$kind,
            applicability: $app,
        }
    };
}

pub fn registry() -> Vec<ClaimInfo> {
    vec![
        claim!(1, Iff, "ssd detects commutativity",
            "ssd(G) = 1 <=> G abelian", "every group"),
        claim!(2, Strict, "ssd is bounded by pairwise element degrees",
            "ssd(G) < |G|^2/|L(G)|^2 * sum_{H,K in L(G)} d(H,K)", "every group"),
        claim!(3, NonStrict, "sd is bounded below by centralizer counts",
            "for all K: sd(G) >= 1/|L(G)|^2 * sum_{H in L(G)} |C_K(H)|; \
             sum_{H,K} d(H,K)|H||K| >= sum_{H,K} |C_K(H)|",
            "every group; K ranges over L(G)"),
        claim!(4, NonStrict, "ssd bound from a normal subgroup and its quotient",
            "ssd(G) >= ((|L(N)|+|L(G/N)|-1)^2 + (ssd(N)-1)|L(N)|^2 + (ssd(G/N)-1)|L(G/N)|^2) / |L(G)|^2",
            "every normal subgroup N"),
        claim!(5, NonStrict, "ssd bound from an abelian normal subgroup with abelian quotient",
            "ssd(G) >= (|L(N)|+|L(G/N)|-1)^2 / |L(G)|",
            "normal N with N and G/N abelian"),
        claim!(6, NonStrict, "ssd bound from a normal subgroup of prime index",
            "ssd(G) >= (ssd(N)|L(N)|^2 + 2|L(N)| + 1) / |L(G)|^2",
            "normal N with |G/N| prime"),
        claim!(7, NonStrict, "ssd bound from the derived subgroup",
            "ssd(G) >= (ssd(G')|L(G')|^2 + 2|L(G')| + 1) / |L(G)|^2; \
             metabelian: ssd(G) >= (|L(G')|^2 + 2|L(G')| + 1) / |L(G)|^2",
            "nonabelian solvable groups"),
        claim!(8, NonStrict, "subgroup monotonicity of ssd and sd",
            "|L(H)|^2/|L(G)|^2 * ssd(H) <= ssd(G); \
             for all M in L(H): 1/|L(G)|^2 * sum_{L in L(H)} |C_M(L)| <= sd(H) <= sd(G)",
            "every subgroup H"),
        claim!(9, Equality, "ssd is multiplicative over coprime factors",
            "ssd(G_1 x ... x G_k) = ssd(G_1) ... ssd(G_k)",
            "direct products of pairwise coprime factors"),
        claim!(10, NonStrict, "ssd^(n)(H,G) decreases in n",
            "ssd^(n)(H,G) >= ssd^(n+1)(H,G)", "every subgroup H, 1 <= n < n_max"),
        claim!(11, NonStrict, "bounding chain for ssd^(n)",
            "ssd^(n)(H,G) <= ssd^(n)(G,G) <= ssd(G) <= sd(G)",
            "every subgroup H, 1 <= n <= n_max"),
        claim!(12, Equality, "ssd^(n) is multiplicative over coprime factors",
            "ssd^(n)(A_1 x ... x A_k, C_1 x ... x C_k) = prod_i ssd^(n)(A_i, C_i)",
            "direct products of pairwise coprime factors; A_i in L(C_i)"),
        claim!(13, Strict, "ssd^(n)(H,H) is bounded by multiple element degrees",
            "ssd^(n)(H,H) < |H|^(n+1)/|L(H)|^(n+1) * sum_{K in L(H)} d^(n)(K,K)",
            "every subgroup H, 1 <= n <= n_max"),
        claim!(14, NonStrict, "subgroup monotonicity of ssd^(n)",
            "(|L(H)|/|L(G)|)^(n+1) * ssd^(n)(H,H) <= ssd^(n)(G,G)",
            "every subgroup H, 1 <= n <= n_max"),
        claim!(15, Equality, "dihedral lattice size",
            "|L(D(n))| = sigma(n) + tau(n)", "dihedral groups"),
        claim!(16, NonStrict, "two-sided bound on the commuting subgroup pair count",
            "(tau(|G'|)+1)^2/|L(G)|^2 <= sum_{H,K} phi(H,K) <= |G|^2/|L(G)|^2 * sum_{H,K} d(H,K)",
            "even order, metabelian, G' cyclic, |L(G)| = sigma(|G|/2) + tau(|G|/2)"),
        claim!(17, Equality, "xi is a class function",
            "xi(a g a^-1) = xi(g)", "every group"),
        claim!(18, Equality, "xi depends only on the generated cyclic subgroup",
            "<x> = <y> => xi(x) = xi(y)", "every group"),
        claim!(19, Equality, "class count and commutativity degree",
            "k(G) = |G| d(G)", "every group"),
        claim!(20, Equality, "modular p-groups are quasihamiltonian but nonabelian",
            "sd(M(p,m)) = 1 and ssd(M(p,m)) != 1", "groups built as M(p,m)"),
    ]
}

pub fn claim_info(id: ClaimId) -> ClaimInfo {
    registry().swap_remove(id.0 as usize - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    /// Largest depth `n` for the multiple-degree claims.
    pub n_max: usize,
    /// Work budget passed to [`d_multi_in`].
    pub d_multi_budget: u128,
    /// Largest number of factor-subgroup combinations tried for C12.
    pub product_combination_cap: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            n_max: 3,
            d_multi_budget: DEFAULT_D_MULTI_BUDGET,
            product_combination_cap: 4096,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Integer(u128),
    Bool(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Subgroup(Mask),
    Element(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim_id: ClaimId,
    pub group_label: String,
    /// The free-variable values, e.g. `N=L3 (order 2)` or `H=L5 (order 4), n=2`.
    pub instance: String,
    /// Which inequality of a multi-part claim this is.
    pub part: &'static str,
    pub reading: &'static str,
    pub applicable: bool,
    pub holds: bool,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub strict_observed: Option<bool>,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl ClaimResult {
    pub fn counts(&self) -> bool {
        self.applicable && self.reading == STATEMENT
    }

    pub fn is_violation(&self) -> bool {
        self.counts() && !self.holds
    }
}

pub const STATEMENT: &str = "statement";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rel {
    Lt,
    Le,
    Ge,
    Eq,
}

fn compare(lhs: &Rational, rel: Rel, rhs: &Rational) -> (bool, Option<bool>) {
    match rel {
        Rel::Lt => (lhs < rhs, Some(lhs < rhs)),
        Rel::Le => (lhs <= rhs, Some(lhs < rhs)),
        Rel::Ge => (lhs >= rhs, Some(lhs > rhs)),
        Rel::Eq => (lhs == rhs, None),
    }
}

fn ratio(num: u128, den: u128) -> Rational {
    Rational::new(num, den)
}

pub fn divisor_sum(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
}

/// Cached per-group data shared by the claim runners.
struct Ctx<'a> {
    g: &'a Group,
    params: &'a Params,
    exec: Exec,
    lat: Lattice,
    brackets: OnceCell<BracketTable>,
    permutes: OnceCell<Vec<bool>>,
    elem_centralizers: OnceCell<Vec<Mask>>,
    sublattices: OnceCell<Vec<Vec<usize>>>,
    pair_degree_sum: OnceCell<(Rational, u128)>,
    ssd_multi_top: RefCell<HashMap<usize, Rational>>,
    d_multi: RefCell<HashMap<(usize, usize), Rational>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Group, params: &'a Params, exec: Exec) -> Result<Ctx<'a>> {
        Ok(Ctx {
            g,
            params,
            exec,
            lat: Lattice::enumerate(g)?,
            brackets: OnceCell::new(),
            permutes: OnceCell::new(),
            elem_centralizers: OnceCell::new(),
            sublattices: OnceCell::new(),
            pair_degree_sum: OnceCell::new(),
            ssd_multi_top: RefCell::new(HashMap::new()),
            d_multi: RefCell::new(HashMap::new()),
        })
    }

    fn size(&self) -> u128 {
        self.lat.len() as u128
    }

    fn brackets(&self) -> &BracketTable {
        self.brackets
            .get_or_init(|| BracketTable::build_with(&self.lat, self.exec))
    }

    fn permutes(&self, i: usize, j: usize) -> bool {
        let m = self.lat.len();
        let table = self.permutes.get_or_init(|| {
            let lat = &self.lat;
            let rows = self
                .exec
                .map(m, |i| (0..m).map(|j| lat.permutes_at(i, j)).collect::<Vec<_>>());
            rows.into_iter().flatten().collect()
        });
        table[i * m + j]
    }

    fn sub(&self, h: usize) -> &[usize] {
        &self.sublattices.get_or_init(|| {
            (0..self.lat.len()).map(|h| self.lat.sublattice(h)).collect()
        })[h]
    }

    fn elem_centralizer(&self, x: usize) -> &Mask {
        &self
            .elem_centralizers
            .get_or_init(|| (0..self.g.order()).map(|x| self.g.centralizer_of(x)).collect())[x]
    }

    fn commuting_pairs_in(&self, members: &[usize]) -> u128 {
        commuting_subgroup_pairs(&self.lat, members)
    }

    fn permuting_pairs_in(&self, members: &[usize]) -> u128 {
        members
            .iter()
            .map(|&i| members.iter().filter(|&&j| self.permutes(i, j)).count() as u128)
            .sum()
    }

    /// `ssd` of the member `h` regarded as a group in its own right.
    fn ssd_of(&self, h: usize) -> Rational {
        let sub = self.sub(h);
        let l = sub.len() as u128;
        ratio(self.commuting_pairs_in(sub), l * l)
    }

    fn sd_of(&self, h: usize) -> Rational {
        let sub = self.sub(h);
        let l = sub.len() as u128;
        ratio(self.permuting_pairs_in(sub), l * l)
    }

    fn ssd(&self) -> Rational {
        self.ssd_of(self.lat.top())
    }

    fn sd(&self) -> Rational {
        self.sd_of(self.lat.top())
    }

    /// `sum_{H,K} d(H,K)` and `sum_{H,K} sum_{h in H} |C_K(h)|`.
    fn pair_degree_sums(&self) -> &(Rational, u128) {
        self.pair_degree_sum.get_or_init(|| {
            let m = self.lat.len();
            let rows: Vec<(Rational, u128)> = (0..m)
                .map(|i| {
                    let h = self.lat.get(i);
                    let mut sum = Rational::zero();
                    let mut weighted = 0u128;
                    for j in 0..m {
                        let k = self.lat.get(j);
                        let c: u128 = h
                            .elements()
                            .map(|x| self.elem_centralizer(x).intersection_count(k.mask()) as u128)
                            .sum();
                        weighted += c;
                        sum = sum + ratio(c, (h.size() * k.size()) as u128);
                    }
                    (sum, weighted)
                })
                .collect();
            rows.into_iter()
                .fold((Rational::zero(), 0), |(s, w), (a, b)| (s + a, w + b))
        })
    }

    /// `|C_K(H)|` for members `h`, `k`.
    fn centralizer_count(&self, k: usize, h: usize) -> u128 {
        self.lat
            .centralizer_mask(h)
            .intersection_count(self.lat.get(k).mask()) as u128
    }

    /// `ssd^(n)(H, G)`.
    fn ssd_multi(&self, h: usize, n: usize) -> Rational {
        let all: Vec<usize> = (0..self.lat.len()).collect();
        let sub = self.sub(h);
        let count = multi_bracket_count(self.brackets(), sub, &all, n);
        ratio(count, (sub.len() as u128).pow(n as u32) * self.size())
    }

    /// `ssd^(n)(H, H)`.
    fn ssd_multi_within(&self, h: usize, n: usize) -> Rational {
        let sub = self.sub(h);
        let count = multi_bracket_count(self.brackets(), sub, sub, n);
        ratio(count, (sub.len() as u128).pow(n as u32 + 1))
    }

    fn ssd_multi_top(&self, n: usize) -> Rational {
        if let Some(v) = self.ssd_multi_top.borrow().get(&n) {
            return v.clone();
        }
        let v = self.ssd_multi_within(self.lat.top(), n);
        self.ssd_multi_top.borrow_mut().insert(n, v.clone());
        v
    }

    fn d_multi(&self, k: usize, n: usize) -> Result<Rational> {
        if let Some(v) = self.d_multi.borrow().get(&(k, n)) {
            return Ok(v.clone());
        }
        let v = d_multi_in(self.g, self.lat.get(k), n, self.params.d_multi_budget)?;
        self.d_multi.borrow_mut().insert((k, n), v.clone());
        Ok(v)
    }

    /// `ssd(G/N)` through the members containing `N`: `[X/N, Y/N] = 1` iff `[X, Y] <= N`.
    fn quotient_data(&self, n: usize) -> (usize, Rational) {
        let over = self.lat.overgroups(n);
        let nm = self.lat.get(n).mask();
        let bt = self.brackets();
        let mut c = 0u128;
        for &x in &over {
            for &y in &over {
                if self.lat.get(bt.get(x, y)).mask().is_subset(nm) {
                    c += 1;
                }
            }
        }
        let b = over.len() as u128;
        (over.len(), ratio(c, b * b))
    }

    fn tag(&self, name: &str, i: usize) -> String {
        format!("{name}=L{i} (order {})", self.lat.get(i).size())
    }

    fn witness(&self, members: &[usize]) -> Vec<Witness> {
        members
            .iter()
            .map(|&i| Witness::Subgroup(self.lat.get(i).mask().clone()))
            .collect()
    }
}

struct Builder<'c, 'a> {
    ctx: &'c Ctx<'a>,
    id: ClaimId,
    out: Vec<ClaimResult>,
}

impl Builder<'_, '_> {
    fn base(&self, instance: String, part: &'static str, reading: &'static str) -> ClaimResult {
        ClaimResult {
            claim_id: self.id,
            group_label: self.ctx.g.label().to_string(),
            instance,
            part,
            reading,
            applicable: true,
            holds: true,
            lhs: None,
            rhs: None,
            strict_observed: None,
            witnesses: Vec::new(),
            note: None,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn cmp(
        &mut self,
        instance: String,
        part: &'static str,
        reading: &'static str,
        lhs: Rational,
        rel: Rel,
        rhs: Rational,
        members: &[usize],
    ) {
        let (holds, strict) = compare(&lhs, rel, &rhs);
        let mut r = self.base(instance, part, reading);
        r.holds = holds;
        r.strict_observed = strict;
        if !holds {
            r.witnesses = self.ctx.witness(members);
        }
        r.lhs = Some(Value::Rational(lhs));
        r.rhs = Some(Value::Rational(rhs));
        self.out.push(r);
    }

    fn not_applicable(&mut self, note: impl Into<String>) {
        let mut r = self.base(String::new(), "", STATEMENT);
        r.applicable = false;
        r.holds = false;
        r.note = Some(note.into());
        self.out.push(r);
    }
}

fn all_subgroups(ctx: &Ctx) -> std::ops::Range<usize> {
    0..ctx.lat.len()
}

fn c1(b: &mut Builder) {
    let ssd_one = b.ctx.ssd().is_one();
    let abelian = b.ctx.g.is_abelian();
    let mut r = b.base(String::new(), "", STATEMENT);
    r.holds = ssd_one == abelian;
    r.lhs = Some(Value::Bool(ssd_one));
    r.rhs = Some(Value::Bool(abelian));
    b.out.push(r);
}

fn c2(b: &mut Builder) {
    let ctx = b.ctx;
    let n = ctx.g.order() as u128;
    let (sum, _) = ctx.pair_degree_sums();
    let rhs = ratio(n * n, ctx.size() * ctx.size()) * sum.clone();
    b.cmp(String::new(), "", STATEMENT, ctx.ssd(), Rel::Lt, rhs, &[]);
}

fn c3(b: &mut Builder) {
    let ctx = b.ctx;
    let l2 = ctx.size() * ctx.size();
    let sd = ctx.sd();
    for k in all_subgroups(ctx) {
        let s: u128 = all_subgroups(ctx).map(|h| ctx.centralizer_count(k, h)).sum();
        b.cmp(ctx.tag("K", k), "sd-lower", STATEMENT, sd.clone(), Rel::Ge, ratio(s, l2), &[k]);
    }
    let (_, weighted) = ctx.pair_degree_sums();
    let total: u128 = all_subgroups(ctx)
        .flat_map(|k| all_subgroups(ctx).map(move |h| (k, h)))
        .map(|(k, h)| ctx.centralizer_count(k, h))
        .sum();
    b.cmp(
        String::new(),
        "pair-sum",
        STATEMENT,
        Rational::from_integer(*weighted),
        Rel::Ge,
        Rational::from_integer(total),
        &[],
    );
}

fn c4(b: &mut Builder) {
    let ctx = b.ctx;
    let l2 = Rational::from_integer(ctx.size() * ctx.size());
    for n in ctx.lat.normal_subgroups() {
        let a = Rational::from(ctx.sub(n).len());
        let (bq, ssd_q) = ctx.quotient_data(n);
        let bq = Rational::from(bq);
        let ssd_n = ctx.ssd_of(n);
        let one = Rational::one();
        let head = (&(&a + &bq) - &one).pow(2);
        let rhs = |first: &Rational| {
            (head.clone()
                + (first - &one) * a.pow(2)
                + (&ssd_q - &one) * bq.pow(2))
                / l2.clone()
        };
        let inst = ctx.tag("N", n);
        b.cmp(inst.clone(), "", STATEMENT, ctx.ssd(), Rel::Ge, rhs(&ssd_n), &[n]);
        b.cmp(inst, "", "proof-variant", ctx.ssd(), Rel::Ge, rhs(&ssd_q), &[n]);
    }
}

fn c5(b: &mut Builder) {
    let ctx = b.ctx;
    let derived = ctx.g.derived_subgroup();
    let mut any = false;
    for n in ctx.lat.normal_subgroups() {
        let nsub = ctx.lat.get(n);
        let n_abelian = ctx.ssd_of(n).is_one();
        if !n_abelian || !derived.is_subgroup_of(nsub) {
            continue;
        }
        any = true;
        let a = ctx.sub(n).len() as u128;
        let bq = ctx.lat.overgroups(n).len() as u128;
        let head = (a + bq - 1) * (a + bq - 1);
        let inst = ctx.tag("N", n);
        b.cmp(inst.clone(), "", STATEMENT, ctx.ssd(), Rel::Ge, ratio(head, ctx.size()), &[n]);
        b.cmp(inst, "", "squared", ctx.ssd(), Rel::Ge, ratio(head, ctx.size() * ctx.size()), &[n]);
    }
    if !any {
        b.not_applicable("no normal N with N and G/N abelian");
    }
}

fn c6(b: &mut Builder) {
    let ctx = b.ctx;
    let mut any = false;
    for n in ctx.lat.normal_subgroups() {
        let index = ctx.g.order() / ctx.lat.get(n).size();
        if !is_prime(index as u64) {
            continue;
        }
        any = true;
        let a = ctx.sub(n).len() as u128;
        let rhs = (ctx.ssd_of(n) * Rational::from_integer(a * a)
            + Rational::from_integer(2 * a + 1))
            / Rational::from_integer(ctx.size() * ctx.size());
        b.cmp(ctx.tag("N", n), "", STATEMENT, ctx.ssd(), Rel::Ge, rhs, &[n]);
    }
    if !any {
        b.not_applicable("no normal subgroup of prime index");
    }
}

fn c7(b: &mut Builder) {
    let ctx = b.ctx;
    let g = ctx.g;
    if g.is_abelian() || !g.is_solvable() {
        b.not_applicable("requires a nonabelian solvable group");
        return;
    }
    let d = ctx
        .lat
        .index_of(&g.derived_subgroup())
        .expect("derived subgroup missing from lattice");
    let a = ctx.sub(d).len() as u128;
    let l2 = Rational::from_integer(ctx.size() * ctx.size());
    let tail = Rational::from_integer(2 * a + 1);
    let rhs = (ctx.ssd_of(d) * Rational::from_integer(a * a) + tail.clone()) / l2.clone();
    b.cmp(ctx.tag("G'", d), "derived", STATEMENT, ctx.ssd(), Rel::Ge, rhs, &[d]);
    if g.is_metabelian() {
        let rhs = (Rational::from_integer(a * a) + tail) / l2;
        b.cmp(ctx.tag("G'", d), "metabelian", STATEMENT, ctx.ssd(), Rel::Ge, rhs, &[d]);
    }
}

fn c8(b: &mut Builder) {
    let ctx = b.ctx;
    let l2 = ctx.size() * ctx.size();
    let (ssd, sd) = (ctx.ssd(), ctx.sd());
    for h in all_subgroups(ctx) {
        let sub = ctx.sub(h);
        let lh = sub.len() as u128;
        let scale = ratio(lh * lh, l2);
        let inst = ctx.tag("H", h);
        b.cmp(inst.clone(), "ssd", STATEMENT, &scale * &ctx.ssd_of(h), Rel::Le, ssd.clone(), &[h]);
        let sd_h = ctx.sd_of(h);
        for &m in sub {
            let s: u128 = sub.iter().map(|&l| ctx.centralizer_count(m, l)).sum();
            b.cmp(
                format!("{inst}, {}", ctx.tag("M", m)),
                "sd-lower",
                STATEMENT,
                ratio(s, l2),
                Rel::Le,
                sd_h.clone(),
                &[h, m],
            );
        }
        b.cmp(inst.clone(), "sd-upper", STATEMENT, sd_h.clone(), Rel::Le, sd.clone(), &[h]);
        b.cmp(inst, "sd-upper", "scaled", &scale * &sd_h, Rel::Le, sd.clone(), &[h]);
    }
}

/// Pairwise coprime direct factors, or `None`.
fn coprime_factors(g: &Group) -> Option<&[Group]> {
    let f = g.factors();
    if f.len() < 2 {
        return None;
    }
    let coprime = (0..f.len()).all(|i| {
        (i + 1..f.len()).all(|j| num_integer::gcd(f[i].order(), f[j].order()) == 1)
    });
    coprime.then_some(f)
}

fn c9(b: &mut Builder) {
    let Some(factors) = coprime_factors(b.ctx.g) else {
        b.not_applicable("requires a direct product of pairwise coprime factors");
        return;
    };
    let mut rhs = Rational::one();
    for f in factors {
        let l = Lattice::enumerate(f).expect("factor lattice");
        rhs = rhs * crate::degrees::ssd_group(&l);
    }
    b.cmp(String::new(), "", STATEMENT, b.ctx.ssd(), Rel::Eq, rhs, &[]);
}

fn c10(b: &mut Builder) {
    let ctx = b.ctx;
    for h in all_subgroups(ctx) {
        for n in 1..ctx.params.n_max {
            b.cmp(
                format!("{}, n={n}", ctx.tag("H", h)),
                "",
                STATEMENT,
                ctx.ssd_multi(h, n),
                Rel::Ge,
                ctx.ssd_multi(h, n + 1),
                &[h],
            );
        }
    }
}

fn c11(b: &mut Builder) {
    let ctx = b.ctx;
    let ssd = ctx.ssd();
    for n in 1..=ctx.params.n_max {
        let top = ctx.ssd_multi_top(n);
        for h in all_subgroups(ctx) {
            b.cmp(
                format!("{}, n={n}", ctx.tag("H", h)),
                "relative",
                STATEMENT,
                ctx.ssd_multi(h, n),
                Rel::Le,
                top.clone(),
                &[h],
            );
        }
        b.cmp(format!("n={n}"), "depth", STATEMENT, top, Rel::Le, ssd.clone(), &[]);
    }
    b.cmp(String::new(), "sd", STATEMENT, ssd, Rel::Le, ctx.sd(), &[]);
}

fn c12(b: &mut Builder) -> Result<()> {
    let ctx = b.ctx;
    let Some(factors) = coprime_factors(ctx.g) else {
        b.not_applicable("requires a direct product of pairwise coprime factors");
        return Ok(());
    };
    let lats: Vec<Lattice> = factors.iter().map(Lattice::enumerate).collect::<Result<_>>()?;
    let combos: u128 = lats.iter().map(|l| l.len() as u128).product();
    if combos > ctx.params.product_combination_cap as u128 {
        return Err(Error::BudgetExceeded {
            needed: combos,
            budget: ctx.params.product_combination_cap as u128,
        });
    }
    let tables: Vec<BracketTable> = lats.iter().map(|l| BracketTable::build_with(l, ctx.exec)).collect();
    let orders: Vec<usize> = factors.iter().map(Group::order).collect();

    // factor-level ssd^(n)(A_i, C_i), indexed by [factor][n-1][member]
    let factor_values: Vec<Vec<Vec<Rational>>> = lats
        .iter()
        .zip(&tables)
        .map(|(l, bt)| {
            (1..=ctx.params.n_max)
                .map(|n| {
                    (0..l.len())
                        .map(|a| crate::degrees::ssd_multi(l, bt, l.get(a), n).expect("member of own lattice"))
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut choice = vec![0usize; lats.len()];
    loop {
        let product_mask = product_subgroup(&lats, &orders, &choice, ctx.g.order());
        let idx = ctx
            .lat
            .index_of_mask(&product_mask)
            .expect("product of factor subgroups is a subgroup");
        let names: Vec<String> = choice
            .iter()
            .enumerate()
            .map(|(i, &a)| format!("A{}=L{a} (order {})", i + 1, lats[i].get(a).size()))
            .collect();
        for n in 1..=ctx.params.n_max {
            let rhs: Rational = (0..lats.len()).map(|i| factor_values[i][n - 1][choice[i]].clone()).product();
            b.cmp(
                format!("{}, n={n}", names.join(", ")),
                "",
                STATEMENT,
                ctx.ssd_multi(idx, n),
                Rel::Eq,
                rhs,
                &[idx],
            );
        }
        // odometer over factor lattices, last factor fastest
        let mut i = lats.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < lats[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Element mask of `A_1 x ... x A_k` inside the product group, elements in
/// mixed radix with the last factor least significant.
fn product_subgroup(lats: &[Lattice], orders: &[usize], choice: &[usize], order: usize) -> Mask {
    let mut elems = vec![0usize];
    for (i, l) in lats.iter().enumerate() {
        let members: Vec<usize> = l.get(choice[i]).elements().collect();
        elems = elems
            .iter()
            .flat_map(|&e| members.iter().map(move |&a| e * orders[i] + a))
            .collect();
    }
    Mask::from_indices(order, elems)
}

fn c13(b: &mut Builder) -> Result<()> {
    let ctx = b.ctx;
    for h in all_subgroups(ctx) {
        let sub = ctx.sub(h);
        let hs = ctx.lat.get(h).size() as u128;
        let lh = sub.len() as u128;
        for n in 1..=ctx.params.n_max {
            let mut sum = Rational::zero();
            for &k in sub {
                sum = sum + ctx.d_multi(k, n)?;
            }
            let e = n as u32 + 1;
            let rhs = ratio(hs.pow(e), lh.pow(e)) * sum;
            b.cmp(
                format!("{}, n={n}", ctx.tag("H", h)),
                "",
                STATEMENT,
                ctx.ssd_multi_within(h, n),
                Rel::Lt,
                rhs,
                &[h],
            );
        }
    }
    Ok(())
}

fn c14(b: &mut Builder) {
    let ctx = b.ctx;
    for n in 1..=ctx.params.n_max {
        let top = ctx.ssd_multi_top(n);
        for h in all_subgroups(ctx) {
            let lh = ctx.sub(h).len() as u128;
            let scale = ratio(lh, ctx.size()).pow(n as u32 + 1);
            b.cmp(
                format!("{}, n={n}", ctx.tag("H", h)),
                "",
                STATEMENT,
                scale * ctx.ssd_multi_within(h, n),
                Rel::Le,
                top.clone(),
                &[h],
            );
        }
    }
}

fn c15(b: &mut Builder) {
    let Family::Dihedral(n) = *b.ctx.g.family() else {
        b.not_applicable("requires a group built as D(n)");
        return;
    };
    let n = n as u64;
    let lhs = b.ctx.lat.len() as u128;
    let rhs = (divisor_sum(n) + divisor_count(n)) as u128;
    let mut r = b.base(format!("n={n}"), "", STATEMENT);
    r.holds = lhs == rhs;
    r.lhs = Some(Value::Integer(lhs));
    r.rhs = Some(Value::Integer(rhs));
    b.out.push(r);
}

fn c16(b: &mut Builder) {
    let ctx = b.ctx;
    let g = ctx.g;
    let order = g.order() as u64;
    let derived = g.derived_subgroup();
    let half = order / 2;
    let lattice_match =
        order.is_multiple_of(2) && ctx.lat.len() as u64 == divisor_sum(half) + divisor_count(half);
    let cyclic_derived = derived
        .elements()
        .any(|x| g.element_order(x) == derived.size());
    if !(lattice_match && g.is_metabelian() && cyclic_derived) {
        b.not_applicable(
            "requires even order, metabelian, cyclic G' and |L(G)| = sigma(|G|/2) + tau(|G|/2)",
        );
        return;
    }
    let l2 = ctx.size() * ctx.size();
    let t = divisor_count(derived.size() as u64) as u128 + 1;
    let lower = ratio(t * t, l2);
    let n2 = (order * order) as u128;
    let upper = ratio(n2, l2) * ctx.pair_degree_sums().0.clone();
    let phi_sum = Rational::from_integer(ctx.commuting_pairs_in(&(0..ctx.lat.len()).collect::<Vec<_>>()));
    b.cmp(String::new(), "lower", STATEMENT, lower.clone(), Rel::Le, phi_sum.clone(), &[]);
    b.cmp(String::new(), "upper", STATEMENT, phi_sum, Rel::Le, upper.clone(), &[]);
    b.cmp(String::new(), "lower", "normalized", lower, Rel::Le, ctx.ssd(), &[]);
    b.cmp(String::new(), "upper", "normalized", ctx.ssd(), Rel::Le, upper, &[]);
}

fn c17(b: &mut Builder) {
    let ctx = b.ctx;
    let xi = xi_vector(&ctx.lat);
    let mut bad = Vec::new();
    let mut violations = 0u128;
    for class in ctx.g.conjugacy_classes() {
        let v = xi.values[class[0]];
        if let Some(&x) = class.iter().find(|&&x| xi.values[x] != v) {
            violations += 1;
            bad.push(Witness::Element(class[0]));
            bad.push(Witness::Element(x));
        }
    }
    integer_result(b, violations, bad);
}

fn c18(b: &mut Builder) {
    let pairs = equal_generator_invariance(&b.ctx.lat);
    let bad = pairs
        .iter()
        .flat_map(|&(x, y)| [Witness::Element(x), Witness::Element(y)])
        .collect();
    integer_result(b, pairs.len() as u128, bad);
}

/// A violation count compared with zero.
fn integer_result(b: &mut Builder, violations: u128, witnesses: Vec<Witness>) {
    let mut r = b.base(String::new(), "", STATEMENT);
    r.holds = violations == 0;
    r.lhs = Some(Value::Integer(violations));
    r.rhs = Some(Value::Integer(0));
    r.witnesses = witnesses;
    r.note = Some("lhs counts violations".into());
    b.out.push(r);
}

fn c19(b: &mut Builder) {
    let g = b.ctx.g;
    let k = class_count(g) as u128;
    let rhs = Rational::from(g.order()) * d_group(g);
    let mut r = b.base(String::new(), "", STATEMENT);
    r.holds = Rational::from_integer(k) == rhs;
    r.lhs = Some(Value::Integer(k));
    r.rhs = Some(Value::Rational(rhs));
    b.out.push(r);
}

fn c20(b: &mut Builder) {
    let Family::Modular { p, m } = *b.ctx.g.family() else {
        b.not_applicable("requires a group built as M(p,m)");
        return;
    };
    let inst = format!("p={p}, m={m}");
    let ssd = b.ctx.ssd();
    b.cmp(inst.clone(), "sd", STATEMENT, b.ctx.sd(), Rel::Eq, Rational::one(), &[]);
    let mut r = b.base(inst, "ssd", STATEMENT);
    r.holds = !ssd.is_one();
    r.lhs = Some(Value::Rational(ssd));
    r.rhs = Some(Value::Rational(Rational::one()));
    r.note = Some("holds when lhs != rhs".into());
    b.out.push(r);
}

fn dispatch(ctx: &Ctx, id: ClaimId) -> Result<Vec<ClaimResult>> {
    let mut b = Builder { ctx, id, out: Vec::new() };
    match id.0 {
        1 => c1(&mut b),
        2 => c2(&mut b),
        3 => c3(&mut b),
        4 => c4(&mut b),
        5 => c5(&mut b),
        6 => c6(&mut b),
        7 => c7(&mut b),
        8 => c8(&mut b),
        9 => c9(&mut b),
        10 => c10(&mut b),
        11 => c11(&mut b),
        12 => c12(&mut b)?,
        13 => c13(&mut b)?,
        14 => c14(&mut b),
        15 => c15(&mut b),
        16 => c16(&mut b),
        17 => c17(&mut b),
        18 => c18(&mut b),
        19 => c19(&mut b),
        20 => c20(&mut b),
        _ => unreachable!("ClaimId is validated on construction"),
    }
    Ok(b.out)
}

fn check_params(params: &Params) -> Result<()> {
    if params.n_max == 0 || params.n_max > MAX_DEPTH {
        return Err(Error::DepthOutOfRange { n: params.n_max, max: MAX_DEPTH });
    }
    Ok(())
}

/// Every instantiation of one claim on one group.
pub fn run_claim(id: ClaimId, g: &Group, params: &Params) -> Result<Vec<ClaimResult>> {
    check_params(params)?;
    let ctx = Ctx::new(g, params, Exec::default())?;
    dispatch(&ctx, id)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub claim_id: ClaimId,
    pub group_label: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub results: Vec<ClaimResult>,
    pub skipped: Vec<Skipped>,
}

impl SuiteReport {
    /// True when no applicable statement reading fails.
    pub fn all_hold(&self) -> bool {
        !self.results.iter().any(ClaimResult::is_violation)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| r.is_violation())
    }
}

pub fn run_suite(groups: &[Group], filter: Option<&[ClaimId]>, params: &Params) -> Result<SuiteReport> {
    run_suite_with(groups, filter, params, Exec::default())
}

/// Runs the selected claims (all by default) on every group. Groups are
/// processed concurrently under `exec`; results are ordered by claim, then
/// by position in `groups`.
pub fn run_suite_with(
    groups: &[Group],
    filter: Option<&[ClaimId]>,
    params: &Params,
    exec: Exec,
) -> Result<SuiteReport> {
    check_params(params)?;
    let mut claims: Vec<ClaimId> = match filter {
        Some(f) => f.to_vec(),
        None => ClaimId::all().collect(),
    };
    claims.sort();
    claims.dedup();

    let per_group: Vec<Vec<Result<Vec<ClaimResult>>>> = exec.map(groups.len(), |gi| {
        let g = &groups[gi];
        match Ctx::new(g, params, exec) {
            Ok(ctx) => claims.iter().map(|&id| dispatch(&ctx, id)).collect(),
            Err(e) => claims.iter().map(|_| Err(e.clone())).collect(),
        }
    });

    let mut report = SuiteReport::default();
    for (ci, &id) in claims.iter().enumerate() {
        for (gi, g) in groups.iter().enumerate() {
            match &per_group[gi][ci] {
                Ok(rs) => report.results.extend(rs.iter().cloned()),
                Err(e) => report.skipped.push(Skipped {
                    claim_id: id,
                    group_label: g.label().to_string(),
                    reason: e.to_string(),
                }),
            }
        }
    }
    Ok(report)
}
