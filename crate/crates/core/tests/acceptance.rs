//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest harness
//! so the report is always printed.

use cyclic_vote::analysis::{
    effective_isotypic_basis, scaling_report, subspace_catalog, tally, Profile, ScalingAction,
    SubspaceCatalog,
};
use cyclic_vote::ballots::{build_ballot_space, BallotKind, BallotSpace};
use cyclic_vote::cyclic_orders::{
    classify_pair, co_character, count_fixed_orders, distance_table, CyclicOrder, OrderingKind, PairName,
};
use cyclic_vote::linalg::{self, Matrix};
use cyclic_vote::rational::{frac, from_ints, q};
use cyclic_vote::representation::{all_projectors, decompose_character, space_character, ActionSpace};
use cyclic_vote::scoring::{named_rule, RuleFamily, RuleParams, ScoringMatrix};
use cyclic_vote::symmetric_group::{all_permutations, cycle_type, enumerate_classes, generators, Partition};
use cyclic_vote::Q;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, VecDeque};
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const ROLO21_TABLE: [[i64; 24]; 6] = [
    [2, 2, 2, 2, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 2, 2, 2, 2, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0],
    [1, 0, 1, 0, 1, 0, 0, 1, 2, 2, 2, 2, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0],
    [0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 2, 2, 2, 2, 1, 0, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 2, 2, 2, 2, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 2, 2, 2, 2],
];

const PARADOX_PROFILE: [i64; 24] = [
    141, 141, 141, 141, 73, 313, 133, 253, 133, 159, 99, 193, 223, 9, 103, 129, 193, 159, 133, 219, 163, 9, 9, 163,
];

const TRAD_PROFILE: [i64; 24] = [
    218, 198, 128, 128, 218, 198, 128, 128, 26, 26, 186, 186, 6, 6, 166, 166, 0, 0, 250, 230, 0, 0, 250, 230,
];

const TIE_VECTOR: [i64; 24] = [1, 1, 1, 1, -1, -1, -1, -1, -1, 1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1];

const TRAD_EFFECTIVE: [i64; 24] = [1, 1, 1, 1, -1, -1, -1, -1, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0];

fn rule(f: RuleFamily, p: &[Q]) -> ScoringMatrix {
    named_rule(&RuleParams::Family(f, p.to_vec())).expect("rule builds")
}

fn irule(f: RuleFamily, p: &[i64]) -> ScoringMatrix {
    rule(f, &from_ints(p))
}

fn reference_space(kind: BallotKind, n: usize) -> BallotSpace {
    build_ballot_space(kind, n, OrderingKind::Paper).expect("space builds")
}

fn co(s: &str) -> CyclicOrder {
    CyclicOrder::parse(s).expect("order literal")
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    frac(rng.gen_range(-20..=20), rng.gen_range(1..=6))
}

fn random_qs(rng: &mut ChaCha8Rng, k: usize) -> Vec<Q> {
    (0..k).map(|_| random_q(rng)).collect()
}

fn catalog(space: &BallotSpace) -> SubspaceCatalog {
    subspace_catalog(space).expect("catalog exists")
}

fn scalar_of(report: &cyclic_vote::analysis::ScalingReport, label: &str) -> Option<Q> {
    report.entry(label)?.scalar()
}

fn golden_tallies() -> Check {
    let p = Profile::from_ints(reference_space(BallotKind::Cyclic, 4), &[2, 1, 0, 0, 0, 1]).unwrap();
    let t = tally(&irule(RuleFamily::Generic4, &[2, 1, 0]), &p).unwrap();
    ensure!(t.scores == from_ints(&[5, 4, 0, 0, 1, 2]), "generic4(2,1,0) scores {:?}", t.scores);
    ensure!(t.winner_orders() == vec![co("(ACBD)")], "generic4(2,1,0) winners {:?}", t.winners);
    let t = tally(&irule(RuleFamily::Generic4, &[2, 0, 1]), &p).unwrap();
    ensure!(t.scores == from_ints(&[5, 3, 4, 4, 3, 5]), "generic4(2,0,1) scores {:?}", t.scores);
    ensure!(
        t.winner_orders() == vec![co("(ACBD)"), co("(ACDB)")],
        "generic4(2,0,1) winners {:?}",
        t.winners
    );
    Ok(())
}

fn golden_matrix() -> Check {
    let m = irule(RuleFamily::Rolo21, &[]);
    let expected: Matrix = ROLO21_TABLE.iter().map(|r| from_ints(r)).collect();
    for (h, (got, want)) in m.entries().iter().zip(&expected).enumerate() {
        ensure!(got == want, "row {h} differs");
    }
    ensure!(m.entries().len() == 6, "row count {}", m.entries().len());
    Ok(())
}

fn paradox() -> Check {
    let m = irule(RuleFamily::Rolo21, &[]);
    let p = Profile::from_ints(m.ballots().clone(), &PARADOX_PROFILE).unwrap();
    let t = tally(&m, &p).unwrap();
    ensure!(t.winner_orders() == vec![co("(ACBD)")], "winners {:?}", t.winner_orders());
    let last: Vec<Q> = t.scores[2..6].to_vec();
    let min = t.scores.iter().min().unwrap();
    ensure!(last.iter().all(|s| s == min), "last four are {:?}, minimum {min}", last);
    ensure!(t.scores[1] > *min, "(ADBC) is also last");
    let mut sorted = t.scores.clone();
    sorted.sort();
    let margin = &sorted[5] - &sorted[4];
    println!("      paradox scores {:?}, margin {margin}", t.scores.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    ensure!(margin >= q(90) && margin <= q(100), "margin {margin} outside [90,100]");
    Ok(())
}

fn tie_space() -> Check {
    let m = irule(RuleFamily::Rolo21, &[]);
    for k in 0..6 {
        let rev = k ^ 1;
        let mut w = vec![0i64; 24];
        for i in 0..4 {
            w[4 * k + i] = 3;
            w[4 * rev + i] = -3;
        }
        let t = tally(&m, &Profile::from_ints(m.ballots().clone(), &w).unwrap()).unwrap();
        for (h, s) in t.scores.iter().enumerate() {
            let want = if h == k { q(24) } else if h == rev { q(-24) } else { q(0) };
            ensure!(*s == want, "order {k}: outcome {h} scored {s}");
        }
    }
    // 3·(block − reversal block) minus (row − reversal row) has a zero image by linearity.
    let rows = m.entries();
    let built: Vec<Q> = (0..24)
        .map(|g| {
            let block = match g / 4 {
                0 => q(3),
                1 => q(-3),
                _ => q(0),
            };
            block - (&rows[0][g] - &rows[1][g])
        })
        .collect();
    ensure!(linalg::is_zero_vec(&linalg::mat_vec(rows, &built)), "constructed mixed vector is not in the kernel");
    let listed = from_ints(&TIE_VECTOR);
    let image = linalg::mat_vec(rows, &listed);
    if !linalg::is_zero_vec(&image) {
        let flipped: Vec<usize> = (0..24).filter(|&g| built[g] != listed[g]).collect();
        let show: Vec<String> = image.iter().map(|x| x.to_string()).collect();
        return Err(format!(
            "listed mixed vector maps to ({}); it differs from the constructed kernel vector at positions {:?}",
            show.join(","),
            flipped
        ));
    }
    Ok(())
}

fn character_oracle() -> Check {
    for n in 3..=7 {
        let closed = co_character(n);
        let classes = enumerate_classes(n);
        let mut seen: HashMap<Partition, u128> = HashMap::new();
        for g in all_permutations(n) {
            let mu = cycle_type(&g);
            let brute = count_fixed_orders(&g);
            ensure!(
                closed.value(&mu) == q(brute as i64),
                "n={n} class {mu}: closed {} brute {brute}",
                closed.value(&mu)
            );
            *seen.entry(mu).or_default() += 1;
        }
        for (mu, size) in &classes {
            ensure!(seen.get(mu) == Some(size), "n={n} class {mu} size mismatch");
        }
        if n == 7 {
            ensure!(classes.len() == 15, "n=7 has {} classes", classes.len());
        }
    }
    Ok(())
}

fn multiplicities(space: &BallotSpace) -> (Vec<(String, u64)>, u64) {
    let r = decompose_character(&space_character(space)).unwrap();
    let m = r
        .rows
        .iter()
        .filter(|row| row.multiplicity > 0)
        .map(|row| (row.partition.to_string(), row.multiplicity))
        .collect();
    (m, r.total_dimension())
}

fn decompositions() -> Check {
    let expect = |v: &[(&str, u64)]| -> Vec<(String, u64)> {
        let mut v: Vec<(String, u64)> = v.iter().map(|(s, m)| (s.to_string(), *m)).collect();
        v.sort_by_key(|(s, _)| Partition::parse(s).unwrap());
        v
    };
    let cases = [
        (reference_space(BallotKind::Cyclic, 4), expect(&[("4", 1), ("2+2", 1), ("2+1+1", 1)]), 6),
        (
            reference_space(BallotKind::Cyclic, 5),
            expect(&[("5", 1), ("3+2", 1), ("3+1+1", 2), ("2+2+1", 1), ("1+1+1+1+1", 1)]),
            24,
        ),
        (
            reference_space(BallotKind::Rolo, 4),
            expect(&[("4", 1), ("3+1", 3), ("2+2", 2), ("2+1+1", 3), ("1+1+1+1", 1)]),
            24,
        ),
    ];
    for (space, want, dim) in cases {
        let (got, total) = multiplicities(&space);
        ensure!(got == want, "{space}: {:?}", got);
        ensure!(total == dim, "{space}: dimension sum {total}");
    }
    Ok(())
}

fn projector_suite() -> Check {
    for space in [
        reference_space(BallotKind::Cyclic, 4),
        reference_space(BallotKind::Rolo, 4),
        reference_space(BallotKind::Cyclic, 5),
    ] {
        let d = space.dim();
        let projectors = all_projectors(&space).unwrap();
        let report = decompose_character(&space_character(&space)).unwrap();
        let gens: Vec<Matrix> = generators(space.degree()).iter().map(|g| space.action_matrix(g)).collect();
        let mut sum = linalg::zeros(d, d);
        for (i, (lambda, p)) in projectors.iter().enumerate() {
            ensure!(linalg::mat_mul(p, p) == *p, "{space} {lambda}: not idempotent");
            for (mu, other) in &projectors[i + 1..] {
                ensure!(linalg::is_zero_matrix(&linalg::mat_mul(p, other)), "{space}: {lambda}·{mu} ≠ 0");
            }
            for a in &gens {
                ensure!(linalg::mat_mul(a, p) == linalg::mat_mul(p, a), "{space} {lambda}: not equivariant");
            }
            let want = report.multiplicity(lambda) * report.dimension(lambda);
            ensure!(linalg::rank(p) as u64 == want, "{space} {lambda}: rank {} ≠ {want}", linalg::rank(p));
            sum = linalg::mat_add(&sum, p);
        }
        ensure!(sum == linalg::identity(d), "{space}: projectors do not sum to the identity");
        let cat = catalog(&space);
        let total: usize = cat.entries.iter().map(|e| e.dim()).sum();
        ensure!(total == d, "{space}: catalog dimensions sum to {total}");
        for e in &cat.entries {
            let p = &projectors.iter().find(|(l, _)| *l == e.lambda).unwrap().1;
            for (k, v) in e.vectors.iter().enumerate() {
                ensure!(linalg::mat_vec(p, v) == *v, "{space}: {} vector {} not fixed by P_{}", e.label, k + 1, e.lambda);
            }
        }
    }
    Ok(())
}

fn schur_n4(rng: &mut ChaCha8Rng) -> Check {
    let cat = catalog(&reference_space(BallotKind::Cyclic, 4));
    for _ in 0..100 {
        let p = random_qs(rng, 3);
        let (a, b, c) = (&p[0], &p[1], &p[2]);
        let r = scaling_report(&rule(RuleFamily::Generic4, &p), &cat).unwrap();
        let t = a + b + q(4) * c;
        let u = a + b - q(2) * c;
        let v = a - b;
        ensure!(scalar_of(&r, "T") == Some(t.clone()), "trivial scalar for {:?}", p);
        ensure!(scalar_of(&r, "non_adjacency") == Some(u.clone()), "(2,2) scalar for {:?}", p);
        ensure!(scalar_of(&r, "reversal") == Some(v.clone()), "(2,1,1) scalar for {:?}", p);
        let a2 = &t / q(6) + &u / q(3) + &v / q(2);
        let b2 = &t / q(6) + &u / q(3) - &v / q(2);
        let c2 = &t / q(6) - &u / q(6);
        ensure!((a2, b2, c2) == (a.clone(), b.clone(), c.clone()), "inversion fails for {:?}", p);
    }
    Ok(())
}

fn name_value(p: &[Q], name: PairName) -> Q {
    p[PairName::ALL.iter().position(|&n| n == name).unwrap()].clone()
}

fn schur_n5(rng: &mut ChaCha8Rng) -> Check {
    let space = reference_space(BallotKind::Cyclic, 5);
    let cat = catalog(&space);
    let pairs = &cat.entries.iter().find(|e| e.label == "pairs").unwrap().vectors;
    for _ in 0..100 {
        let p = random_qs(rng, 8);
        let [a, b, c, d, e, f, g, h] = [0, 1, 2, 3, 4, 5, 6, 7].map(|i| p[i].clone());
        let m = rule(RuleFamily::Generic5, &p);
        let r = scaling_report(&m, &cat).unwrap();
        let five = q(5);
        let expected = [
            ("T", &a + &b + &five * (&c + &d + &e + &f) + &g + &h),
            ("sign", &a + &b - &five * (&c + &d) + &five * (&e + &f) - &g - &h),
            ("y", &a + &b - &c - &d - &e - &f + &g + &h),
            ("z", &a + &b + &c + &d - &e - &f - &g - &h),
        ];
        for (label, want) in expected {
            ensure!(scalar_of(&r, label) == Some(want.clone()), "{label} for {:?}", p);
        }
        for (k, v) in pairs.iter().enumerate() {
            let x = space.order(2 * k);
            let image = linalg::mat_vec(m.entries(), v);
            for (row, got) in image.iter().enumerate() {
                let name = classify_pair(space.order(row), x).unwrap().name.unwrap();
                let want = name_value(&p, name) - name_value(&p, name.partner());
                ensure!(*got == want, "pair vector {k}, outcome {row}: {got} vs {want}");
            }
        }
    }
    Ok(())
}

fn rolo_family(rng: &mut ChaCha8Rng) -> Check {
    let rolo = reference_space(BallotKind::Rolo, 4);
    let cat = catalog(&rolo);
    let w: Vec<&Vec<Vec<Q>>> = ["w1", "w2", "w3"]
        .iter()
        .map(|l| &cat.entries.iter().find(|e| e.label == *l).unwrap().vectors)
        .collect();
    let lambda = Partition::parse("2+1+1").unwrap();
    for _ in 0..20 {
        let p = random_qs(rng, 6);
        let m = rule(RuleFamily::RoloGeneric, &p);
        let (ab, cd, fe) = (&p[0] - &p[1], &p[2] - &p[3], &p[5] - &p[4]);
        let claimed: Vec<Vec<Q>> = (0..3)
            .map(|i| {
                let x = linalg::add(&linalg::scale(&w[0][i], &ab), &linalg::scale(&w[1][i], &cd));
                linalg::add(&x, &linalg::scale(&w[2][i], &fe))
            })
            .collect();
        let effective = effective_isotypic_basis(&m, &lambda).unwrap();
        ensure!(linalg::same_span(&effective, &claimed), "effective (2,1,1) part differs for {:?}", p);
        let r = scaling_report(&m, &cat).unwrap();
        let want = q(4) * (&ab * &ab + &cd * &cd + &fe * &fe);
        ensure!(r.eigenvalue("reversal") == Some(&want), "eigenvalue {:?} vs {want}", r.eigenvalue("reversal"));
        let e = [1, -1, 0, 0, 0, 0].map(q);
        let mmt_e = linalg::mat_vec(m.entries(), &linalg::mat_vec(&linalg::transpose(m.entries()), &e));
        ensure!(mmt_e == linalg::scale(&e, &want), "MMᵀ e ≠ λ e");
    }
    for x in [-3i64, 0, 1, 2, 5] {
        let r = scaling_report(&irule(RuleFamily::RoloX1, &[x]), &cat).unwrap();
        ensure!(r.eigenvalue("reversal") == Some(&q(4 * x * x + 8)), "rolo_x1({x}) eigenvalue");
    }
    let r = scaling_report(&irule(RuleFamily::Rolo21, &[]), &cat).unwrap();
    ensure!(r.eigenvalue("reversal") == Some(&q(24)), "ROLO(2,1) eigenvalue");
    let m1 = irule(RuleFamily::RoloX1, &[1]);
    let v = &cat.entries.iter().find(|e| e.label == "v").unwrap().vectors;
    for (i, vi) in v.iter().enumerate() {
        ensure!(linalg::is_zero_vec(&linalg::mat_vec(m1.entries(), vi)), "v{} not in rolo_x1(1) kernel", i + 1);
    }
    Ok(())
}

fn trad() -> Check {
    let m = irule(RuleFamily::Trad21, &[]);
    let t = tally(&m, &Profile::from_ints(m.ballots().clone(), &TRAD_PROFILE).unwrap()).unwrap();
    ensure!(t.winner_orders() == vec![co("(ABCD)")], "winners {:?}", t.winner_orders());
    let rolo = reference_space(BallotKind::Rolo, 4);
    let cat = catalog(&rolo);
    let w = |l: &str| cat.entries.iter().find(|e| e.label == l).unwrap().vectors.clone();
    let (w1, w2) = (w("w1"), w("w2"));
    let sums: Vec<Vec<Q>> = (0..3).map(|i| linalg::add(&w1[i], &w2[i])).collect();
    let effective = effective_isotypic_basis(&m, &Partition::parse("2+1+1").unwrap()).unwrap();
    ensure!(linalg::same_span(&effective, &sums), "effective (2,1,1) part is not span of w1i+w2i");
    ensure!(sums[0] == from_ints(&TRAD_EFFECTIVE), "displayed vector is not w11+w21");
    let k = irule(RuleFamily::RoloX1, &[-1]);
    for s in &sums {
        ensure!(linalg::is_zero_vec(&linalg::mat_vec(k.entries(), s)), "w1i+w2i not in rolo_x1(-1) kernel");
    }
    Ok(())
}

fn borda_pair() -> Check {
    let space = reference_space(BallotKind::Cyclic, 5);
    let cat = catalog(&space);
    let adj = irule(RuleFamily::AdjustedDistance5, &[]);
    let dist = irule(RuleFamily::Distance5, &[4, 3, 2, 1, 0]);
    let r = scaling_report(&adj, &cat).unwrap();
    for label in ["T", "sign", "y", "z"] {
        ensure!(r.entry(label).unwrap().action == ScalingAction::Annihilated, "{label} not annihilated");
    }
    for v in &cat.entries.iter().find(|e| e.label == "pairs").unwrap().vectors {
        ensure!(
            linalg::mat_vec(adj.entries(), v) == linalg::mat_vec(dist.entries(), v),
            "images differ on a pair-difference vector"
        );
    }
    let s = |m: &ScoringMatrix, g: &str, h: &str| {
        m.score(&cyclic_vote::ballots::Ballot::Cyclic(co(g)), &co(h)).cloned().unwrap()
    };
    ensure!(s(&dist, "(ABCDE)", "(ABDCE)") == q(3), "s(ABCDE, ABDCE)");
    ensure!(s(&dist, "(ABCDE)", "(ABECD)") == q(2), "s(ABCDE, ABECD)");
    ensure!(s(&dist, "(ABCDE)", "(AEDCB)") == q(0), "s(ABCDE, AEDCB)");
    ensure!(s(&adj, "(ABCDE)", "(ACEBD)") == q(0), "adjusted s(ABCDE, ACEBD)");
    ensure!(s(&adj, "(ACEBD)", "(ABCDE)") == q(0), "adjusted s(ACEBD, ABCDE)");
    Ok(())
}

/// Independent BFS over seat swaps on rotation-normalized sequences.
fn bfs_class_sizes(start: &[usize]) -> Vec<usize> {
    let n = start.len();
    let norm = |s: &[usize]| -> Vec<usize> {
        let k = s.iter().position(|&x| x == 0).unwrap();
        (0..n).map(|i| s[(k + i) % n]).collect()
    };
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(norm(start), 0);
    queue.push_back(norm(start));
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        for i in 0..n {
            let mut t = s.clone();
            t.swap(i, (i + 1) % n);
            let t = norm(&t);
            if !dist.contains_key(&t) {
                dist.insert(t.clone(), d + 1);
                queue.push_back(t);
            }
        }
    }
    let mut sizes = vec![0; dist.values().max().unwrap() + 1];
    for d in dist.values() {
        sizes[*d] += 1;
    }
    sizes
}

fn distance_classes() -> Check {
    let space = reference_space(BallotKind::Cyclic, 5);
    let table = distance_table(5).unwrap();
    for i in 0..space.len() {
        let x = space.order(i);
        let mut sizes = vec![0; 5];
        for j in 0..space.len() {
            sizes[table.distance(x, space.order(j))] += 1;
        }
        ensure!(sizes == vec![1, 5, 10, 7, 1], "{x}: {:?}", sizes);
        let oracle = bfs_class_sizes(x.seq());
        ensure!(oracle == sizes, "{x}: oracle {:?}", oracle);
    }
    Ok(())
}

fn neutrality(rng: &mut ChaCha8Rng) -> Check {
    let rules: Vec<ScoringMatrix> = vec![
        rule(RuleFamily::Generic4, &random_qs(rng, 3)),
        rule(RuleFamily::RoloGeneric, &random_qs(rng, 6)),
        rule(RuleFamily::RoloX1, &random_qs(rng, 1)),
        irule(RuleFamily::Rolo21, &[]),
        irule(RuleFamily::Trad21, &[]),
        rule(RuleFamily::Generic5, &random_qs(rng, 8)),
        rule(RuleFamily::Distance5, &random_qs(rng, 5)),
        irule(RuleFamily::AdjustedDistance5, &[]),
    ];
    for m in &rules {
        let ballots = m.ballots();
        let outcomes = m.outcomes();
        for _ in 0..200 {
            let weights: Vec<Q> = (0..ballots.len()).map(|_| q(rng.gen_range(-3..=3))).collect();
            let p = Profile::new(ballots.clone(), weights.clone()).unwrap();
            let base = tally(m, &p).unwrap();
            for sigma in generators(ballots.degree()) {
                let mut moved = vec![Q::zero(); weights.len()];
                for (g, w) in weights.iter().enumerate() {
                    moved[ballots.act_index(&sigma, g)] = w.clone();
                }
                let t = tally(m, &Profile::new(ballots.clone(), moved).unwrap()).unwrap();
                let mut want: Vec<usize> = base.winners.iter().map(|&h| outcomes.act_index(&sigma, h)).collect();
                want.sort();
                ensure!(t.winners == want, "{}: winners not equivariant under {sigma}", m.rule_name);
                let k = q(rng.gen_range(1..=5));
                let scaled = Profile::new(ballots.clone(), linalg::scale(&weights, &k)).unwrap();
                ensure!(tally(m, &scaled).unwrap().winners == base.winners, "{}: scaling changed winners", m.rule_name);
            }
        }
    }
    Ok(())
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut criteria: Vec<(&str, Box<dyn FnMut() -> Check>)> = Vec::new();
    criteria.push(("golden tallies", Box::new(golden_tallies)));
    criteria.push(("golden ROLO(2,1) matrix", Box::new(golden_matrix)));
    criteria.push(("paradox profile", Box::new(paradox)));
    criteria.push(("tie space", Box::new(tie_space)));
    criteria.push(("character oracle n=3..7", Box::new(character_oracle)));
    criteria.push(("decompositions", Box::new(decompositions)));
    criteria.push(("projector suite", Box::new(projector_suite)));
    let mut r8 = ChaCha8Rng::seed_from_u64(rng.gen());
    criteria.push(("Schur scaling n=4", Box::new(move || schur_n4(&mut r8))));
    let mut r9 = ChaCha8Rng::seed_from_u64(rng.gen());
    criteria.push(("Schur scaling n=5", Box::new(move || schur_n5(&mut r9))));
    let mut r10 = ChaCha8Rng::seed_from_u64(rng.gen());
    criteria.push(("ROLO family", Box::new(move || rolo_family(&mut r10))));
    criteria.push(("TRAD", Box::new(trad)));
    criteria.push(("Borda-like pair", Box::new(borda_pair)));
    criteria.push(("distance classes", Box::new(distance_classes)));
    let mut r14 = ChaCha8Rng::seed_from_u64(rng.gen());
    criteria.push(("neutrality", Box::new(move || neutrality(&mut r14))));

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter_mut().enumerate() {
        let start = Instant::now();
        let result = match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(e) => Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
