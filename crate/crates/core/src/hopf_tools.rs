//! Generic filtered-Hopf machinery: the Takeuchi antipode for the two
//! quasi-shuffle Hopf algebras and a harness that checks the algebraic laws
//! exhaustively below a size bound, with seeded random spot checks where the
//! bound leaves room.

use std::collections::HashMap;
use std::fmt::Write as _;

use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{
    cliques, compositions_of, glue, permutations_of, Composition, Interval,
    LabeledIntervalPartition, Permutation,
};
use crate::error::Result;
use crate::freealg::{bilinear, rat, tensor2, try_bilinear, Basis, LinComb, Tensor2, Tensor3};
use crate::partition_hopf::{self, coqspart, deconc, qspart};
use crate::perm_hopf::{delta_conc, pc_count, perm_concat, superinfiltration};
use crate::signatures::{gpc_count, ipc_chen_eval, ipc_count};
use crate::vincular_hopf::{
    coqsgen, deconcgen, embed_phi, embed_psi, genconc, qsgen, qsgen_interleaved, VincularPattern,
};

/// A basis carrying the quasi-shuffle product and the deconcatenation
/// coproduct of a connected filtered Hopf algebra.
pub trait QuasiShuffleHopf: Basis {
    fn unit_elem() -> Self;
    fn qs_product(a: &Self, b: &Self) -> Result<LinComb<Self>>;
    /// All two-sided deconcatenation splits, trivial ones included.
    fn deconc_splits(&self) -> Vec<(Self, Self)>;
}

impl QuasiShuffleHopf for Composition {
    fn unit_elem() -> Self {
        Composition::empty()
    }

    fn qs_product(a: &Self, b: &Self) -> Result<LinComb<Self>> {
        qspart(a, b)
    }

    fn deconc_splits(&self) -> Vec<(Self, Self)> {
        let parts = self.parts();
        (0..=parts.len())
            .map(|i| {
                (
                    Composition::new(parts[..i].to_vec()).unwrap(),
                    Composition::new(parts[i..].to_vec()).unwrap(),
                )
            })
            .collect()
    }
}

impl QuasiShuffleHopf for VincularPattern {
    fn unit_elem() -> Self {
        VincularPattern::empty()
    }

    fn qs_product(a: &Self, b: &Self) -> Result<LinComb<Self>> {
        qsgen(a, b)
    }

    fn deconc_splits(&self) -> Vec<(Self, Self)> {
        deconcgen(self)
            .iter()
            .map(|(t, _)| (t.0.clone(), t.1.clone()))
            .collect()
    }
}

fn strict_splits<B: QuasiShuffleHopf>(b: &B, k: usize) -> Vec<Vec<B>> {
    if k == 0 {
        return Vec::new();
    }
    if k == 1 {
        return if b.degree() >= 1 { vec![vec![b.clone()]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for (left, right) in b.deconc_splits() {
        if left.degree() == 0 {
            continue;
        }
        for mut tail in strict_splits(&right, k - 1) {
            let mut split = Vec::with_capacity(k);
            split.push(left.clone());
            split.append(&mut tail);
            out.push(split);
        }
    }
    out
}

/// The `k`-th Takeuchi term on a basis element: the signed quasi-shuffle
/// product over all deconcatenations into `k` legs of positive degree.
/// Connectedness makes it vanish for `k` past the degree.
pub fn takeuchi_term<B: QuasiShuffleHopf>(b: &B, k: usize) -> Result<LinComb<B>> {
    if k == 0 {
        return Ok(if b.degree() == 0 {
            LinComb::basis(B::unit_elem())
        } else {
            LinComb::zero()
        });
    }
    let mut out = LinComb::zero();
    for split in strict_splits(b, k) {
        let mut acc = LinComb::basis(split[0].clone());
        for leg in &split[1..] {
            acc = acc.try_linear_map(|a| B::qs_product(a, leg))?;
        }
        out = out + acc;
    }
    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
    Ok(out.scale(&sign))
}

/// Antipode of the connected filtered Hopf algebra via Takeuchi's alternating
/// series; the series truncates at the degree of the argument.
pub fn takeuchi_antipode<B: QuasiShuffleHopf>(x: &LinComb<B>) -> Result<LinComb<B>> {
    x.try_linear_map(|b| {
        let mut acc = LinComb::zero();
        for k in 0..=b.degree() {
            acc = acc + takeuchi_term(b, k)?;
        }
        Ok(acc)
    })
}

/// `m ∘ (S ⊗ id) ∘ Δ - uε` on a basis element; zero exactly when the
/// antipode axiom holds on that element. `right_side` flips to `(id ⊗ S)`.
pub fn antipode_defect<B: QuasiShuffleHopf>(b: &B, right_side: bool) -> Result<LinComb<B>> {
    let mut acc = LinComb::zero();
    for (l, r) in b.deconc_splits() {
        let (sl, pr) = if right_side {
            (LinComb::basis(l), takeuchi_antipode(&LinComb::basis(r))?)
        } else {
            (takeuchi_antipode(&LinComb::basis(l))?, LinComb::basis(r))
        };
        acc = acc + try_bilinear(&sl, &pr, |a, c| B::qs_product(a, c))?;
    }
    let counit = if b.degree() == 0 { rat(1) } else { rat(0) };
    Ok(acc - LinComb::term(B::unit_elem(), counit))
}

/// The algebraic laws the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    GluingAssoc,
    CoassocCoqspart,
    CocommCoqspart,
    CoassocCoqsgen,
    DeconcgenCoassoc,
    BialgebraPartition,
    BialgebraVincular,
    DualBialgebraPartition,
    StarAssoc,
    StarComm,
    QsgenComm,
    CharacterIpc,
    CharacterPc,
    CharacterGpc,
    ChenIpc,
    ChenPc,
    ChenGpc,
    PsiHom,
    PhiHom,
    AntipodeAxiom,
    QspartOracle,
    IpcChenOracle,
    QsgenInterleavedOracle,
}

impl Law {
    pub fn all() -> &'static [Law] {
        use Law::*;
        &[
            GluingAssoc,
            CoassocCoqspart,
            CocommCoqspart,
            CoassocCoqsgen,
            DeconcgenCoassoc,
            BialgebraPartition,
            BialgebraVincular,
            DualBialgebraPartition,
            StarAssoc,
            StarComm,
            QsgenComm,
            CharacterIpc,
            CharacterPc,
            CharacterGpc,
            ChenIpc,
            ChenPc,
            ChenGpc,
            PsiHom,
            PhiHom,
            AntipodeAxiom,
            QspartOracle,
            IpcChenOracle,
            QsgenInterleavedOracle,
        ]
    }

    pub fn name(&self) -> &'static str {
        use Law::*;
        match self {
            GluingAssoc => "gluing_assoc",
            CoassocCoqspart => "coassoc_coqspart",
            CocommCoqspart => "cocomm_coqspart",
            CoassocCoqsgen => "coassoc_coqsgen",
            DeconcgenCoassoc => "deconcgen_coassoc",
            BialgebraPartition => "bialgebra_partition",
            BialgebraVincular => "bialgebra_vincular",
            DualBialgebraPartition => "dual_bialgebra_partition",
            StarAssoc => "star_assoc",
            StarComm => "star_comm",
            QsgenComm => "qsgen_comm",
            CharacterIpc => "character_ipc",
            CharacterPc => "character_pc",
            CharacterGpc => "character_gpc",
            ChenIpc => "chen_ipc",
            ChenPc => "chen_pc",
            ChenGpc => "chen_gpc",
            PsiHom => "psi_hom",
            PhiHom => "phi_hom",
            AntipodeAxiom => "antipode_axiom",
            QspartOracle => "qspart_oracle",
            IpcChenOracle => "ipc_chen_oracle",
            QsgenInterleavedOracle => "qsgen_interleaved_oracle",
        }
    }

    /// Bound used when the caller does not supply one; exhaustive runs stay
    /// below a minute on commodity hardware at these sizes.
    pub fn default_bound(&self) -> usize {
        use Law::*;
        match self {
            GluingAssoc => 10,
            CoassocCoqspart | CocommCoqspart | BialgebraPartition => 5,
            CoassocCoqsgen | DeconcgenCoassoc | BialgebraVincular | DualBialgebraPartition => 4,
            StarAssoc => 5,
            StarComm => 6,
            QsgenComm => 4,
            CharacterIpc => 8,
            CharacterPc => 6,
            CharacterGpc => 6,
            ChenIpc => 8,
            ChenPc => 7,
            ChenGpc => 7,
            PsiHom | PhiHom => 4,
            AntipodeAxiom => 4,
            QspartOracle => 3,
            IpcChenOracle => 7,
            QsgenInterleavedOracle => 5,
        }
    }
}

impl std::str::FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Law::all()
            .iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Law::all().iter().map(|l| l.name()).collect();
                format!("unknown law {s:?}; known laws: {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LawFailure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law: String,
    pub bound: usize,
    pub checked: u64,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    checked: u64,
    failures: Vec<LawFailure>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, inputs: impl Fn() -> String, lhs: T, rhs: T) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(LawFailure {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

fn all_vincular(n: usize) -> Vec<VincularPattern> {
    let mut out = Vec::new();
    for s in compositions_of(n) {
        for p in permutations_of(n) {
            out.push(VincularPattern::new(s.clone(), p).unwrap());
        }
    }
    out
}

fn vincular_up_to(bound: usize) -> Vec<VincularPattern> {
    (0..=bound).flat_map(all_vincular).collect()
}

fn compositions_up_to(bound: usize) -> Vec<Composition> {
    (0..=bound).flat_map(compositions_of).collect()
}

fn permutations_up_to(bound: usize) -> Vec<Permutation> {
    (0..=bound).flat_map(permutations_of).collect()
}

fn random_composition(rng: &mut ChaCha8Rng, n: usize) -> Composition {
    if n == 0 {
        return Composition::empty();
    }
    let mut parts = Vec::new();
    let mut run = 1;
    for _ in 1..n {
        if rng.gen_bool(0.5) {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::new(parts).unwrap()
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut values: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        values.swap(i, j);
    }
    Permutation::new(values).unwrap()
}

fn random_partition(rng: &mut ChaCha8Rng, ground_max: usize) -> LabeledIntervalPartition {
    let ground: Vec<usize> = (1..=ground_max).filter(|_| rng.gen_bool(0.5)).collect();
    let coarse = cliques(&ground);
    // cut each block at a random subset of its interior adjacencies
    let mut blocks = Vec::new();
    for b in coarse.blocks() {
        let mut start = b.start();
        let mut len = 1;
        for x in b.start()..b.end() {
            if rng.gen_bool(0.5) {
                blocks.push(Interval::new(start, len).unwrap());
                start = x + 1;
                len = 1;
            } else {
                len += 1;
            }
        }
        blocks.push(Interval::new(start, len).unwrap());
    }
    LabeledIntervalPartition::new(blocks).unwrap()
}

type CompTensor3 = Tensor3<Composition, Composition, Composition>;
type VincTensor3 = Tensor3<VincularPattern, VincularPattern, VincularPattern>;

/// Runs one law check: exhaustive below `bound` (per-law interpretation of
/// the bound), plus seeded spot checks past the bound where the enumeration
/// cost allows. Failures carry the offending inputs and both sides.
pub fn verify_law(law: Law, bound: Option<usize>, seed: u64) -> LawReport {
    let bound = bound.unwrap_or_else(|| law.default_bound());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ck = Checker::new();
    match law {
        Law::GluingAssoc => check_gluing_assoc(&mut ck, bound, &mut rng),
        Law::CoassocCoqspart => check_coassoc_coqspart(&mut ck, bound, &mut rng),
        Law::CocommCoqspart => check_cocomm_coqspart(&mut ck, bound, &mut rng),
        Law::CoassocCoqsgen => check_coassoc_coqsgen(&mut ck, bound),
        Law::DeconcgenCoassoc => check_deconcgen_coassoc(&mut ck, bound),
        Law::BialgebraPartition => check_bialgebra_partition(&mut ck, bound),
        Law::BialgebraVincular => check_bialgebra_vincular(&mut ck, bound),
        Law::DualBialgebraPartition => check_dual_bialgebra_partition(&mut ck, bound),
        Law::StarAssoc => check_star_assoc(&mut ck, bound),
        Law::StarComm => check_star_comm(&mut ck, bound, &mut rng),
        Law::QsgenComm => check_qsgen_comm(&mut ck, bound),
        Law::CharacterIpc => check_character_ipc(&mut ck, bound, &mut rng),
        Law::CharacterPc => check_character_pc(&mut ck, bound),
        Law::CharacterGpc => check_character_gpc(&mut ck, bound),
        Law::ChenIpc => check_chen_ipc(&mut ck, bound, &mut rng),
        Law::ChenPc => check_chen_pc(&mut ck, bound),
        Law::ChenGpc => check_chen_gpc(&mut ck, bound, &mut rng),
        Law::PsiHom => check_psi_hom(&mut ck, bound),
        Law::PhiHom => check_phi_hom(&mut ck, bound),
        Law::AntipodeAxiom => check_antipode_axiom(&mut ck, bound),
        Law::QspartOracle => check_qspart_oracle(&mut ck, bound),
        Law::IpcChenOracle => check_ipc_chen_oracle(&mut ck, bound),
        Law::QsgenInterleavedOracle => check_qsgen_interleaved_oracle(&mut ck, bound),
    }
    let mut failures = ck.failures;
    failures.sort_by(|a, b| a.inputs.cmp(&b.inputs));
    LawReport {
        law: law.name().to_string(),
        bound,
        checked: ck.checked,
        failures,
    }
}

fn check_gluing_assoc(ck: &mut Checker, ground_max: usize, rng: &mut ChaCha8Rng) {
    for _ in 0..500 {
        let a = random_partition(rng, ground_max);
        let b = random_partition(rng, ground_max);
        let c = random_partition(rng, ground_max);
        let lhs = glue(&glue(&a, &b), &c);
        let rhs = glue(&a, &glue(&b, &c));
        ck.eq(|| format!("a={a} b={b} c={c}"), lhs, rhs);
    }
}

fn delta_cache(bound: usize) -> HashMap<Composition, LinComb<partition_hopf::CompTensor>> {
    compositions_up_to(bound)
        .into_iter()
        .map(|s| {
            let d = coqspart(&s).expect("within guard");
            (s, d)
        })
        .collect()
}

fn check_coassoc_coqspart(ck: &mut Checker, bound: usize, rng: &mut ChaCha8Rng) {
    let cache = delta_cache(bound);
    let mut run = |s: &Composition| {
        let delta = match cache.get(s) {
            Some(d) => d.clone(),
            None => coqspart(s).expect("within guard"),
        };
        let mut lhs: LinComb<CompTensor3> = LinComb::zero();
        let mut rhs: LinComb<CompTensor3> = LinComb::zero();
        for (Tensor2(a, b), c) in delta.iter() {
            let da = cache.get(a).cloned().unwrap_or_else(|| coqspart(a).unwrap());
            for (Tensor2(u, v), q) in da.iter() {
                lhs.add_term(Tensor3(u.clone(), v.clone(), b.clone()), c * q);
            }
            let db = cache.get(b).cloned().unwrap_or_else(|| coqspart(b).unwrap());
            for (Tensor2(w, z), q) in db.iter() {
                rhs.add_term(Tensor3(a.clone(), w.clone(), z.clone()), c * q);
            }
        }
        ck.eq(|| format!("s={s}"), lhs, rhs);
    };
    for s in compositions_up_to(bound) {
        run(&s);
    }
    if bound + 1 <= crate::guard::partition_guard().min(6) {
        for _ in 0..3 {
            run(&random_composition(rng, bound + 1));
        }
    }
}

fn check_cocomm_coqspart(ck: &mut Checker, bound: usize, rng: &mut ChaCha8Rng) {
    let mut run = |s: &Composition| {
        let delta = coqspart(s).expect("within guard");
        let swapped = delta.linear_map(|Tensor2(a, b)| {
            LinComb::basis(Tensor2(b.clone(), a.clone()))
        });
        ck.eq(|| format!("s={s}"), delta, swapped);
    };
    for s in compositions_up_to(bound) {
        run(&s);
    }
    if bound + 1 <= crate::guard::partition_guard().min(7) {
        for _ in 0..3 {
            run(&random_composition(rng, bound + 1));
        }
    }
}

fn check_coassoc_coqsgen(ck: &mut Checker, bound: usize) {
    let mut cache: HashMap<VincularPattern, LinComb<crate::vincular_hopf::VincTensor>> =
        HashMap::new();
    for x in vincular_up_to(bound) {
        let delta = coqsgen(&x).expect("within guard");
        let mut lhs: LinComb<VincTensor3> = LinComb::zero();
        let mut rhs: LinComb<VincTensor3> = LinComb::zero();
        for (Tensor2(a, b), c) in delta.iter() {
            let da = cache
                .entry(a.clone())
                .or_insert_with(|| coqsgen(a).unwrap())
                .clone();
            for (Tensor2(u, v), q) in da.iter() {
                lhs.add_term(Tensor3(u.clone(), v.clone(), b.clone()), c * q);
            }
            let db = cache
                .entry(b.clone())
                .or_insert_with(|| coqsgen(b).unwrap())
                .clone();
            for (Tensor2(w, z), q) in db.iter() {
                rhs.add_term(Tensor3(a.clone(), w.clone(), z.clone()), c * q);
            }
        }
        ck.eq(|| format!("x={x}"), lhs, rhs);
    }
}

fn check_deconcgen_coassoc(ck: &mut Checker, bound: usize) {
    for x in vincular_up_to(bound) {
        let delta = deconcgen(&x);
        let mut lhs: LinComb<VincTensor3> = LinComb::zero();
        let mut rhs: LinComb<VincTensor3> = LinComb::zero();
        for (Tensor2(a, b), c) in delta.iter() {
            for (Tensor2(u, v), q) in deconcgen(a).iter() {
                lhs.add_term(Tensor3(u.clone(), v.clone(), b.clone()), c * q);
            }
            for (Tensor2(w, z), q) in deconcgen(b).iter() {
                rhs.add_term(Tensor3(a.clone(), w.clone(), z.clone()), c * q);
            }
        }
        ck.eq(|| format!("x={x}"), lhs, rhs);
    }
}

fn check_bialgebra_partition(ck: &mut Checker, bound: usize) {
    let cache = delta_cache(bound);
    for s in compositions_up_to(bound) {
        for t in compositions_up_to(bound - s.size()) {
            let product = s.concat(&t);
            let lhs = coqspart(&product).expect("within guard");
            let rhs = bilinear(&cache[&s], &cache[&t], |Tensor2(a, b), Tensor2(c, d)| {
                LinComb::basis(Tensor2(a.concat(c), b.concat(d)))
            });
            ck.eq(|| format!("s={s} t={t}"), lhs, rhs);
        }
    }
}

fn check_bialgebra_vincular(ck: &mut Checker, bound: usize) {
    let mut cache: HashMap<VincularPattern, LinComb<crate::vincular_hopf::VincTensor>> =
        HashMap::new();
    for n in 0..=bound {
        for x in all_vincular(n) {
            for y in vincular_up_to(bound - n) {
                let dx = cache
                    .entry(x.clone())
                    .or_insert_with(|| coqsgen(&x).unwrap())
                    .clone();
                let dy = cache
                    .entry(y.clone())
                    .or_insert_with(|| coqsgen(&y).unwrap())
                    .clone();
                let lhs = coqsgen(&genconc(&x, &y)).expect("within guard");
                let rhs = bilinear(&dx, &dy, |Tensor2(a, b), Tensor2(c, d)| {
                    LinComb::basis(Tensor2(genconc(a, c), genconc(b, d)))
                });
                ck.eq(|| format!("x={x} y={y}"), lhs, rhs);
            }
        }
    }
}

fn check_dual_bialgebra_partition(ck: &mut Checker, bound: usize) {
    for s in compositions_up_to(bound) {
        for t in compositions_up_to(bound - s.size()) {
            let lhs = qspart(&s, &t)
                .expect("within guard")
                .linear_map(|g| deconc(g));
            let rhs = try_bilinear(&deconc(&s), &deconc(&t), |Tensor2(a, b), Tensor2(c, d)| {
                Ok(tensor2(&qspart(a, c)?, &qspart(b, d)?))
            })
            .expect("within guard");
            ck.eq(|| format!("s={s} t={t}"), lhs, rhs);
        }
    }
}

fn check_star_assoc(ck: &mut Checker, bound: usize) {
    for s in compositions_up_to(bound) {
        for t in compositions_up_to(bound - s.size()) {
            for u in compositions_up_to(bound - s.size() - t.size()) {
                let lhs = qspart(&s, &t)
                    .expect("within guard")
                    .try_linear_map(|g| qspart(g, &u))
                    .expect("within guard");
                let rhs = qspart(&t, &u)
                    .expect("within guard")
                    .try_linear_map(|g| qspart(&s, g))
                    .expect("within guard");
                ck.eq(|| format!("s={s} t={t} u={u}"), lhs, rhs);
            }
        }
    }
}

fn check_star_comm(ck: &mut Checker, bound: usize, rng: &mut ChaCha8Rng) {
    for s in compositions_up_to(bound) {
        for t in compositions_up_to(bound - s.size()) {
            let lhs = qspart(&s, &t).expect("within guard");
            let rhs = qspart(&t, &s).expect("within guard");
            ck.eq(|| format!("s={s} t={t}"), lhs, rhs);
        }
    }
    if bound + 1 <= crate::guard::partition_guard().min(8) {
        for _ in 0..3 {
            let total = bound + 1;
            let k = rng.gen_range(0..=total);
            let s = random_composition(rng, k);
            let t = random_composition(rng, total - k);
            let lhs = qspart(&s, &t).expect("within guard");
            let rhs = qspart(&t, &s).expect("within guard");
            ck.eq(|| format!("s={s} t={t}"), lhs, rhs);
        }
    }
}

fn check_qsgen_comm(ck: &mut Checker, bound: usize) {
    for n in 0..=bound {
        for x in all_vincular(n) {
            for y in vincular_up_to(bound - n) {
                let lhs = qsgen(&x, &y).expect("within guard");
                let rhs = qsgen(&y, &x).expect("within guard");
                ck.eq(|| format!("x={x} y={y}"), lhs, rhs);
            }
        }
    }
}

fn coeff_as_u64(q: &crate::freealg::Rational) -> u64 {
    q.to_integer().to_u64().expect("structure constant fits u64")
}

fn check_character_ipc(ck: &mut Checker, bound: usize, rng: &mut ChaCha8Rng) {
    let pattern_bound = 3.min(bound);
    let patterns = compositions_up_to(pattern_bound);
    let products: Vec<(Composition, Composition, LinComb<Composition>)> = patterns
        .iter()
        .flat_map(|s| {
            patterns.iter().map(move |t| {
                (s.clone(), t.clone(), qspart(s, t).expect("within guard"))
            })
        })
        .collect();
    let run = |ck: &mut Checker, l: &Composition| {
        let mut memo: HashMap<Composition, u64> = HashMap::new();
        for (s, t, product) in &products {
            let count =
                |memo: &mut HashMap<Composition, u64>, pat: &Composition| -> u64 {
                    *memo
                        .entry(pat.clone())
                        .or_insert_with(|| ipc_count(l, pat))
                };
            let lhs = count(&mut memo, s) * count(&mut memo, t);
            let rhs: u64 = product
                .iter()
                .map(|(g, c)| coeff_as_u64(c) * count(&mut memo, g))
                .sum();
            ck.eq(|| format!("L={l} s={s} t={t}"), lhs, rhs);
        }
    };
    for l in compositions_up_to(bound) {
        run(ck, &l);
    }
    for _ in 0..2 {
        let l = random_composition(rng, bound + 1);
        run(ck, &l);
    }
}

fn check_character_pc(ck: &mut Checker, bound: usize) {
    let pattern_bound = 2.min(bound);
    let patterns = permutations_up_to(pattern_bound);
    let products: Vec<(Permutation, Permutation, LinComb<Permutation>)> = patterns
        .iter()
        .flat_map(|s| {
            patterns.iter().map(move |t| {
                (
                    s.clone(),
                    t.clone(),
                    superinfiltration(s, t).expect("within guard"),
                )
            })
        })
        .collect();
    for host in permutations_up_to(bound) {
        let mut memo: HashMap<Permutation, u64> = HashMap::new();
        for (s, t, product) in &products {
            let count = |memo: &mut HashMap<Permutation, u64>, pat: &Permutation| -> u64 {
                *memo
                    .entry(pat.clone())
                    .or_insert_with(|| pc_count(&host, pat))
            };
            let lhs = count(&mut memo, s) * count(&mut memo, t);
            let rhs: u64 = product
                .iter()
                .map(|(g, c)| coeff_as_u64(c) * count(&mut memo, g))
                .sum();
            ck.eq(|| format!("host={host} s={s} t={t}"), lhs, rhs);
        }
    }
}

fn check_character_gpc(ck: &mut Checker, bound: usize) {
    let pattern_bound = 2.min(bound);
    let patterns = vincular_up_to(pattern_bound);
    let products: Vec<(VincularPattern, VincularPattern, LinComb<VincularPattern>)> = patterns
        .iter()
        .flat_map(|x| {
            patterns.iter().map(move |y| {
                (x.clone(), y.clone(), qsgen(x, y).expect("within guard"))
            })
        })
        .collect();
    for n in 0..=bound {
        for l in compositions_of(n) {
            for host in permutations_of(n) {
                let mut memo: HashMap<VincularPattern, u64> = HashMap::new();
                for (x, y, product) in &products {
                    let count = |memo: &mut HashMap<VincularPattern, u64>,
                                 pat: &VincularPattern|
                     -> u64 {
                        *memo
                            .entry(pat.clone())
                            .or_insert_with(|| gpc_count(&l, &host, pat))
                    };
                    let lhs = count(&mut memo, x) * count(&mut memo, y);
                    let rhs: u64 = product
                        .iter()
                        .map(|(g, c)| coeff_as_u64(c) * count(&mut memo, g))
                        .sum();
                    ck.eq(|| format!("L={l} host={host} x={x} y={y}"), lhs, rhs);
                }
            }
        }
    }
}

fn check_chen_ipc(ck: &mut Checker, bound: usize, rng: &mut ChaCha8Rng) {
    let patterns = compositions_up_to(4.min(bound));
    let splits: Vec<(Composition, Vec<(Composition, Composition)>)> = patterns
        .iter()
        .map(|s| (s.clone(), s.deconc_splits()))
        .collect();
    let run = |ck: &mut Checker, l: &Composition, m: &Composition| {
        let host = l.concat(m);
        for (s, split) in &splits {
            let lhs = ipc_count(&host, s);
            let rhs: u64 = split
                .iter()
                .map(|(a, b)| ipc_count(l, a) * ipc_count(m, b))
                .sum();
            ck.eq(|| format!("L={l} M={m} s={s}"), lhs, rhs);
        }
    };
    for l in compositions_up_to(bound) {
        for m in compositions_up_to(bound - l.size()) {
            run(ck, &l, &m);
        }
    }
    for _ in 0..2 {
        let total = bound + 1;
        let k = rng.gen_range(0..=total);
        let l = random_composition(rng, k);
        let m = random_composition(rng, total - k);
        run(ck, &l, &m);
    }
}

fn check_chen_pc(ck: &mut Checker, bound: usize) {
    let patterns = permutations_up_to(3.min(bound));
    let splits: Vec<(Permutation, Vec<(Permutation, Permutation)>)> = patterns
        .iter()
        .map(|s| {
            let d: Vec<(Permutation, Permutation)> = delta_conc(s)
                .iter()
                .map(|(t, _)| (t.0.clone(), t.1.clone()))
                .collect();
            (s.clone(), d)
        })
        .collect();
    for a in 0..=bound {
        for lam in permutations_of(a) {
            for b in 0..=bound - a {
                for ups in permutations_of(b) {
                    let host = perm_concat(&lam, &ups);
                    for (s, split) in &splits {
                        let lhs = pc_count(&host, s);
                        let rhs: u64 = split
                            .iter()
                            .map(|(x, y)| pc_count(&lam, x) * pc_count(&ups, y))
                            .sum();
                        ck.eq(|| format!("L={lam} M={ups} s={s}"), lhs, rhs);
                    }
                }
            }
        }
    }
}

/// Count vector of a vincular host over every pattern of size at most
/// `pattern_bound`, indexed in step with `patterns`.
fn gpc_vector(
    l: &Composition,
    host: &Permutation,
    patterns: &[VincularPattern],
    pattern_bound: usize,
) -> Vec<u64> {
    let mut vec = vec![0u64; patterns.len()];
    let by_size: Vec<Vec<usize>> = (0..=pattern_bound)
        .map(|k| {
            patterns
                .iter()
                .enumerate()
                .filter(|(_, p)| p.size() == k)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let ids = crate::signatures::block_ids(l);
    let n = host.len();
    let mut positions = Vec::new();
    for k in 0..=pattern_bound.min(n) {
        crate::combinatorics::for_each_subset_of_size(n, k, |idx| {
            positions.clear();
            positions.extend(idx.iter().map(|&i| i + 1));
            let shape = crate::signatures::restricted_shape(&ids, &positions);
            let st = host.restrict_st(&positions);
            for &pi in &by_size[k] {
                let p = &patterns[pi];
                if *p.perm() == st && p.blocks().refines(&shape) {
                    vec[pi] += 1;
                }
            }
        });
    }
    vec
}

fn check_chen_gpc(ck: &mut Checker, bound: usize, rng: &mut ChaCha8Rng) {
    let pattern_bound = 3.min(bound);
    let patterns = vincular_up_to(pattern_bound);
    let index: HashMap<VincularPattern, usize> = patterns
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let splits: Vec<Vec<(usize, usize)>> = patterns
        .iter()
        .map(|p| {
            p.deconc_splits()
                .into_iter()
                .map(|(a, b)| (index[&a], index[&b]))
                .collect()
        })
        .collect();
    let mut side_cache: HashMap<(Composition, Permutation), Vec<u64>> = HashMap::new();
    let run = |ck: &mut Checker,
               side_cache: &mut HashMap<(Composition, Permutation), Vec<u64>>,
                   l1: &Composition,
                   h1: &Permutation,
                   l2: &Composition,
                   h2: &Permutation| {
        let v1 = side_cache
            .entry((l1.clone(), h1.clone()))
            .or_insert_with(|| gpc_vector(l1, h1, &patterns, pattern_bound))
            .clone();
        let v2 = side_cache
            .entry((l2.clone(), h2.clone()))
            .or_insert_with(|| gpc_vector(l2, h2, &patterns, pattern_bound))
            .clone();
        let l = l1.concat(l2);
        let host = perm_concat(h1, h2);
        let joint = gpc_vector(&l, &host, &patterns, pattern_bound);
        for (pi, p) in patterns.iter().enumerate() {
            let rhs: u64 = splits[pi].iter().map(|&(a, b)| v1[a] * v2[b]).sum();
            ck.eq(
                || format!("L={l1} host={h1} M={l2} host2={h2} x={p}"),
                joint[pi],
                rhs,
            );
        }
    };
    for n1 in 1..bound {
        for n2 in 1..=bound - n1 {
            for l1 in compositions_of(n1) {
                for h1 in permutations_of(n1) {
                    for l2 in compositions_of(n2) {
                        for h2 in permutations_of(n2) {
                            run(ck, &mut side_cache, &l1, &h1, &l2, &h2);
                        }
                    }
                }
            }
        }
    }
    // the empty factor, spot checked over seeded hosts
    for _ in 0..50 {
        let n = rng.gen_range(0..=bound);
        let l = random_composition(rng, n);
        let h = random_permutation(rng, n);
        run(ck, &mut side_cache, &Composition::empty(), &Permutation::empty(), &l, &h);
        run(ck, &mut side_cache, &l, &h, &Composition::empty(), &Permutation::empty());
    }
}

fn check_psi_hom(ck: &mut Checker, bound: usize) {
    for s in compositions_up_to(bound) {
        for t in compositions_up_to(bound - s.size()) {
            let lhs = qspart(&s, &t)
                .expect("within guard")
                .try_linear_map(|g| embed_psi(g))
                .expect("within guard");
            let rhs = try_bilinear(
                &embed_psi(&s).expect("within guard"),
                &embed_psi(&t).expect("within guard"),
                |x, y| qsgen(x, y),
            )
            .expect("within guard");
            ck.eq(|| format!("s={s} t={t} (product)"), lhs, rhs);
        }
    }
    for s in compositions_up_to(bound) {
        let lhs = embed_psi(&s)
            .expect("within guard")
            .linear_map(|x| deconcgen(x));
        let rhs = deconc(&s).try_linear_map(|Tensor2(a, b)| {
            Ok(tensor2(&embed_psi(a)?, &embed_psi(b)?))
        });
        ck.eq(
            || format!("s={s} (coproduct)"),
            lhs,
            rhs.expect("within guard"),
        );
    }
}

fn check_phi_hom(ck: &mut Checker, bound: usize) {
    for a in 0..=bound {
        for sigma in permutations_of(a) {
            for tau in permutations_up_to(bound - a) {
                let lhs = superinfiltration(&sigma, &tau)
                    .expect("within guard")
                    .linear_map(|g| LinComb::basis(embed_phi(g)));
                let rhs = qsgen(&embed_phi(&sigma), &embed_phi(&tau)).expect("within guard");
                ck.eq(|| format!("sigma={sigma} tau={tau} (product)"), lhs, rhs);
            }
        }
    }
    for sigma in permutations_up_to(bound) {
        let lhs = deconcgen(&embed_phi(&sigma));
        let rhs = delta_conc(&sigma).linear_map(|Tensor2(a, b)| {
            LinComb::basis(Tensor2(embed_phi(a), embed_phi(b)))
        });
        ck.eq(|| format!("sigma={sigma} (coproduct)"), lhs, rhs);
    }
}

fn check_antipode_axiom(ck: &mut Checker, bound: usize) {
    for s in compositions_up_to(bound) {
        let left = antipode_defect(&s, false).expect("within guard");
        let right = antipode_defect(&s, true).expect("within guard");
        ck.eq(|| format!("s={s} (left)"), left, LinComb::zero());
        ck.eq(|| format!("s={s} (right)"), right, LinComb::zero());
    }
    for x in vincular_up_to(3.min(bound)) {
        let left = antipode_defect(&x, false).expect("within guard");
        let right = antipode_defect(&x, true).expect("within guard");
        ck.eq(|| format!("x={x} (left)"), left, LinComb::zero());
        ck.eq(|| format!("x={x} (right)"), right, LinComb::zero());
    }
}

fn check_qspart_oracle(ck: &mut Checker, bound: usize) {
    let patterns = compositions_up_to(bound);
    for s in &patterns {
        for t in &patterns {
            let direct = qspart(s, t).expect("within guard");
            let mut via_sections: LinComb<Composition> = LinComb::zero();
            for n in s.size().max(t.size())..=s.size() + t.size() {
                for g in compositions_of(n) {
                    let c = partition_hopf::section_coefficient(s, t, &g)
                        .expect("within guard");
                    if c > 0 {
                        via_sections.add_term(g, rat(c as i64));
                    }
                }
            }
            ck.eq(|| format!("s={s} t={t}"), direct, via_sections);
        }
    }
}

fn check_ipc_chen_oracle(ck: &mut Checker, bound: usize) {
    for l in compositions_up_to(bound) {
        for s in compositions_up_to(4.min(bound)) {
            let brute = num::BigUint::from(ipc_count(&l, &s));
            let closed = ipc_chen_eval(&l, &s);
            ck.eq(|| format!("L={l} s={s}"), closed, brute);
        }
    }
}

fn check_qsgen_interleaved_oracle(ck: &mut Checker, bound: usize) {
    for n in 0..=bound {
        for x in all_vincular(n) {
            for y in vincular_up_to(bound - n) {
                let brute = qsgen(&x, &y).expect("within guard");
                let fast = qsgen_interleaved(&x, &y).expect("within guard");
                ck.eq(|| format!("x={x} y={y}"), brute, fast);
            }
        }
    }
}

/// Human-readable rendering of a report: one summary line, then failures.
pub fn render_report(report: &LawReport) -> String {
    let mut out = String::new();
    let status = if report.passed() { "pass" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{}: law={} bound={} checked={} failures={}",
        status,
        report.law,
        report.bound,
        report.checked,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(out, "  inputs: {}", f.inputs);
        let _ = writeln!(out, "    lhs: {}", f.lhs);
        let _ = writeln!(out, "    rhs: {}", f.rhs);
    }
    out
}
