//! End-to-end verification suite: every headline quantity the library is
//! supposed to reproduce, run as twelve independent criteria with exact
//! expected/actual records and wall-clock timings.

use std::fmt::Display;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::conics;
use crate::family;
use crate::heisenberg;
use crate::klein;
use crate::kummer;
use crate::lattice;
use crate::linalg::Mat;
use crate::mpoly::MPoly;
use crate::tower::{rat, FieldElement, Rat, Tower};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub slug: &'static str,
    pub checks: Vec<Check>,
    pub millis: u128,
}

impl CriterionReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "name": self.slug,
            "pass": self.pass(),
            "millis": self.millis,
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass,
            })).collect::<Vec<_>>(),
        })
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn eq<T: Display + PartialEq>(&mut self, name: &str, expected: T, actual: T) {
        self.checks.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        });
    }

    fn is_true(&mut self, name: &str, actual: bool) {
        self.eq(name, true, actual);
    }
}

pub const CRITERIA: [(usize, &str); 12] = [
    (1, "group-structure"),
    (2, "fix-lines"),
    (3, "tetrahedra-quadrics"),
    (4, "parameter-maps"),
    (5, "kummer-seed"),
    (6, "conic-splitting"),
    (7, "fixed-points"),
    (8, "hessian"),
    (9, "igusa"),
    (10, "conic-configuration"),
    (11, "lattice-chain"),
    (12, "fermat-lines"),
];

fn finish(id: usize, slug: &'static str, rec: Recorder, start: Instant) -> CriterionReport {
    CriterionReport {
        id,
        slug,
        checks: rec.checks,
        millis: start.elapsed().as_millis(),
    }
}

fn criterion_group() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    r.eq("matrix group order", 32, heisenberg::enumerate_group().len());
    let z = heisenberg::center();
    r.eq("center size", 2, z.len());
    r.is_true(
        "center is plus and minus identity",
        z.contains(&heisenberg::IDENTITY4)
            && z.contains(&heisenberg::mat4_neg(&heisenberg::IDENTITY4)),
    );
    r.is_true(
        "nonidentity classes square to the center",
        (1..16u8).all(|g| {
            let m = heisenberg::lift(g);
            let m2 = heisenberg::mat4_mul(&m, &m);
            m2 == heisenberg::IDENTITY4 || m2 == heisenberg::mat4_neg(&heisenberg::IDENTITY4)
        }),
    );
    r.is_true(
        "symplectic form nondegenerate",
        (1..16u8).all(|a| (1..16u8).any(|b| heisenberg::symplectic(a, b) == 1)),
    );
    let planes = heisenberg::classify_planes();
    r.eq("planes", 35, planes.len());
    r.eq(
        "isotropic planes",
        15,
        planes.iter().filter(|p| p.isotropic).count(),
    );
    r.eq(
        "anisotropic planes",
        20,
        planes.iter().filter(|p| !p.isotropic).count(),
    );
    finish(1, "group-structure", r, start)
}

fn criterion_fix_lines() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let lines = heisenberg::all_fix_lines();
    r.eq("fix line count", 30, lines.len());
    let mut distinct = true;
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if lines[i].same_line(&lines[j]) {
                distinct = false;
            }
        }
    }
    r.is_true("fix lines pairwise distinct", distinct);
    let mut incidence_ok = true;
    let mut action_ok = true;
    for g in 1..16u8 {
        let lg = heisenberg::fix_lines_of(g);
        for h in 1..16u8 {
            let lh = heisenberg::fix_lines_of(h);
            let commute = heisenberg::symplectic(g, h) == 0;
            if g != h {
                for a in &lg {
                    for b in &lh {
                        if heisenberg::lines_meet(a, b) != commute {
                            incidence_ok = false;
                        }
                    }
                }
            }
            // commuting h preserves each fix line of g; anticommuting h swaps them
            let m0 = heisenberg::map_line(h, &lg[0]);
            let m1 = heisenberg::map_line(h, &lg[1]);
            if commute {
                if m0 != lg[0].echelon || m1 != lg[1].echelon {
                    action_ok = false;
                }
            } else if m0 != lg[1].echelon || m1 != lg[0].echelon {
                action_ok = false;
            }
        }
    }
    r.is_true("incidence iff commutation (all pairs)", incidence_ok);
    r.is_true("commuting preserve, anticommuting flip", action_ok);
    finish(2, "fix-lines", r, start)
}

fn criterion_tetrahedra_quadrics() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let planes = heisenberg::classify_planes();
    let mut t_matches: Vec<[Rat; 6]> = Vec::new();
    for p in planes.iter().filter(|p| p.isotropic) {
        let tet = heisenberg::tetrahedron_of(p);
        if let Some(u) = family::match_t_point(&tet.face_product()) {
            t_matches.push(u);
        }
    }
    r.eq("tetrahedra matched to parameters", 15, t_matches.len());
    t_matches.sort();
    t_matches.dedup();
    r.eq("distinct parameter points hit", 15, t_matches.len());
    let mut q_matches: Vec<[Rat; 6]> = Vec::new();
    for pair in heisenberg::anisotropic_pairs() {
        let q = heisenberg::quadric_of(&pair);
        if let Some(u) = family::match_segre_node(&q.mul(&q)) {
            q_matches.push(u);
        }
    }
    r.eq("quadric squares matched to parameters", 10, q_matches.len());
    q_matches.sort();
    q_matches.dedup();
    r.eq("distinct node parameters hit", 10, q_matches.len());
    finish(3, "tetrahedra-quadrics", r, start)
}

fn criterion_parameter_maps() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    // roundtrip is linear, so checking a basis of the sum-zero hyperplane
    // is a symbolic identity
    let mut roundtrip = true;
    for i in 0..5 {
        let mut v = [rat(0), rat(0), rat(0), rat(0), rat(0), rat(-1)];
        v[i] = rat(1);
        let back = family::abcde_to_u(&family::u_to_abcde(&v));
        for j in 0..6 {
            if back[j] != &v[j] * rat(4) {
                roundtrip = false;
            }
        }
    }
    r.is_true("parameter roundtrip is multiplication by 4", roundtrip);
    let fermat_u = family::abcde_to_u(&[rat(1), rat(0), rat(0), rat(0), rat(0)]);
    r.eq(
        "first-axis parameter image",
        "[1, 1, 1, 1, -2, -2]".to_string(),
        format!(
            "[{}]",
            fermat_u
                .iter()
                .map(crate::tower::rat_string)
                .collect::<Vec<_>>()
                .join(", ")
        ),
    );
    let f4 = family::f_lambda(&[rat(4), rat(0), rat(0), rat(0), rat(0)]);
    r.is_true(
        "quartic of mapped parameter is 4 times the original",
        family::f_u(&fermat_u) == f4,
    );
    finish(4, "parameter-maps", r, start)
}

fn seed_point() -> [Rat; 4] {
    [rat(1), rat(2), rat(3), rat(4)]
}

fn criterion_kummer_seed() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    match kummer::build_seed(&seed_point()) {
        Err(e) => r.eq("seed construction", "ok".to_string(), format!("error: {e}")),
        Ok(seed) => {
            r.eq("seed construction", "ok", "ok");
            r.is_true("parameter on the singular cubic", family::segre_membership(&seed.param));
            let mut nodes = seed.nodes16.clone();
            nodes.sort();
            nodes.dedup();
            r.eq("distinct singular orbit points", 16, nodes.len());
            r.eq("tropes", 16, seed.tropes16.len());
            let (per_trope, per_node) = kummer::incidence_profile(&seed);
            r.is_true(
                "six nodes on every trope",
                per_trope.iter().all(|&c| c == 6),
            );
            r.is_true("six tropes through every node", per_node.iter().all(|&c| c == 6));
            let squares = seed
                .tropes16
                .iter()
                .filter(|t| kummer::trope_square(&seed, t).is_ok())
                .count();
            r.eq("trope restrictions that are smooth doubled conics", 16, squares);
        }
    }
    finish(5, "kummer-seed", r, start)
}

fn criterion_conic_splitting() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let seed = kummer::build_seed(&seed_point()).expect("seed");
    let q0 = family::u_from_i64([1, 1, 1, -1, -1, -1]);
    let (u, _t) = kummer::choose_line_parameter(&seed, &q0);
    r.is_true(
        "chosen member is smooth in the family",
        !family::singular_discriminant(&u).is_zero(),
    );
    match kummer::split_all_tropes(&u, &seed, &q0) {
        Err(e) => r.eq("splitting", "ok".to_string(), format!("error: {e}")),
        Ok(splits) => {
            r.eq("tropes split", 16, splits.len());
            let mut planes: Vec<[Rat; 4]> = splits.iter().map(|s| s.trope.clone()).collect();
            planes.sort();
            planes.dedup();
            r.eq("distinct planes", 16, planes.len());
            let mut forms: Vec<String> = splits
                .iter()
                .flat_map(|s| {
                    [
                        format!("{:?}{}", s.trope, s.first.form.display(&["s", "t", "u"])),
                        format!("{:?}{}", s.trope, s.second.form.display(&["s", "t", "u"])),
                    ]
                })
                .collect();
            forms.sort();
            forms.dedup();
            r.eq("distinct conics", 32, forms.len());
            r.is_true(
                "all conics smooth",
                splits.iter().all(|s| {
                    !s.first.matrix().det().is_zero() && !s.second.matrix().det().is_zero()
                }),
            );
            let heights: Vec<usize> = splits.iter().map(|s| s.scale.tower().height()).collect();
            r.is_true("at most one quadratic extension", heights.iter().all(|&h| h <= 1));
            r.is_true(
                "single shared tower",
                splits
                    .iter()
                    .all(|s| s.scale.tower() == splits[0].scale.tower()),
            );
        }
    }
    finish(6, "conic-splitting", r, start)
}

fn sample_smooth_u() -> [Rat; 6] {
    family::u_from_i64([1, 2, 3, 5, 7, -18])
}

fn criterion_fixed_points() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let u = sample_smooth_u();
    let counts: Vec<usize> = (1..16u8)
        .map(|g| kummer::fixed_points_count(&u, g).unwrap_or(0))
        .collect();
    r.is_true(
        "eight fixed points for every nonidentity class",
        counts.iter().all(|&c| c == 8),
    );
    match kummer::mukai_counts(&u) {
        Err(e) => r.eq("aggregate", "ok".to_string(), format!("error: {e}")),
        Ok((avg, rank)) => {
            r.eq("orbifold average (24 + 15*8)/16", 9, avg);
            r.eq("invariant cohomology rank", 7, rank);
        }
    }
    finish(7, "fixed-points", r, start)
}

fn criterion_hessian() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let t = Tower::rationals();
    let g = family::g_basis();
    let xyzw_sq = MPoly::from_int_terms(4, &t, &[(&[2, 2, 2, 2], 1)]);
    r.is_true(
        "first-axis Hessian equals 20736 (xyzw)^2",
        family::hessian(&g[0]) == xyzw_sq.mul_rat(&rat(20736)),
    );
    r.is_true(
        "all five axis Hessians proportional to (xyzw)^2",
        g.iter()
            .all(|gi| family::proportional(&family::hessian(gi), &xyzw_sq)),
    );
    // the three doubly-quadric axes split over the Gaussian rationals
    let ti = Tower::gaussian();
    let i = ti.generator(0);
    let quad = |a: usize, b: usize, c: usize, d: usize, sign: i64| {
        let mut e1 = [0u16; 4];
        e1[a] = 1;
        e1[b] += 1;
        let mut e2 = [0u16; 4];
        e2[c] = 1;
        e2[d] += 1;
        let mut p = MPoly::zero(4, &ti);
        p.add_term(crate::mpoly::Mono::new(e1.to_vec()), ti.one());
        p.add_term(
            crate::mpoly::Mono::new(e2.to_vec()),
            i.mul_rat(&rat(sign)),
        );
        p
    };
    let splits_ok = [(1usize, (0, 1, 2, 3)), (2, (0, 2, 1, 3)), (3, (0, 3, 1, 2))]
        .iter()
        .all(|&(k, (a, b, c, d))| {
            let plus = quad(a, b, c, d, 1);
            let minus = quad(a, b, c, d, -1);
            plus.mul(&minus).mul_rat(&rat(2)) == g[k]
        });
    r.is_true("middle-axis quartics split into conjugate quadrics", splits_ok);
    let f = family::f_u(&sample_smooth_u());
    let hf = family::hessian(&f);
    let covariant = [8u8, 4, 2, 1].iter().all(|&gen| {
        heisenberg::transform_poly(&hf, gen) == family::hessian(&heisenberg::transform_poly(&f, gen))
    });
    r.is_true("Hessian commutes with the generator substitutions", covariant);
    finish(8, "hessian", r, start)
}

fn criterion_igusa(seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5);
    let mut constant = true;
    for _ in 0..6 {
        let p: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-9..=9i64));
        if p == [0, 0, 0, 0] {
            continue;
        }
        let base = family::igusa_map(&std::array::from_fn(|i| rat(p[i])));
        for glabel in 0..16u8 {
            let img = heisenberg::mat4_apply(&heisenberg::lift(glabel), &p);
            let mapped = family::igusa_map(&std::array::from_fn(|i| rat(img[i])));
            if mapped != base {
                constant = false;
            }
        }
    }
    r.is_true("invariants constant on group orbits", constant);
    let rel = family::igusa_relation(seed);
    r.eq("relation degree", 4, rel.degree().unwrap_or(0));
    r.is_true(
        "relation vanishes on fresh image points",
        (0..20).all(|_| {
            let p: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-5..=5i64));
            if p == [0, 0, 0, 0] {
                return true;
            }
            let alpha = family::igusa_map(&std::array::from_fn(|i| rat(p[i])));
            let t = Tower::rationals();
            let pt: Vec<FieldElement> = alpha.iter().map(|c| t.from_rat(c.clone())).collect();
            rel.eval(&pt).is_zero()
        }),
    );
    r.is_true(
        "relation independent of interpolation seed",
        rel == family::igusa_relation(seed.wrapping_add(1)),
    );
    finish(9, "igusa", r, start)
}

fn criterion_conic_configuration() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let s = conics::incidence_set();
    r.eq("incidence set size", 10, s.len());
    r.eq("reducible conics", 160, conics::reducible_conics().len());
    let same_ok = s.iter().all(|&k| {
        let d = conics::same_orbit_distribution(k);
        d == [(0i64, 6usize), (2, 9)].into_iter().collect()
    });
    r.is_true("same-orbit statistics 0:6, 2:9 for all ten orbits", same_ok);
    let cross_ok = s.iter().any(|&a| {
        s.iter()
            .any(|&b| a != b && conics::cross_orbit_distribution(a, b) == [(0i64, 4usize), (1, 8), (2, 4)].into_iter().collect())
    });
    r.is_true("cross-orbit statistics 0:4, 1:8, 2:4 attained", cross_ok);
    let m = conics::submatrix_m(conics::FROZEN_CONVENTION);
    let entrywise = (0..16).all(|i| (0..16).all(|j| m[i][j] == conics::M_EXPECTED[i][j]));
    r.is_true("distinguished 16x16 matrix reproduced entry-for-entry", entrywise);
    r.eq("det of distinguished matrix", rat(-512), conics::int_det(&m));
    r.is_true(
        "frozen convention found by the bounded search",
        conics::convention_search().contains(&conics::FROZEN_CONVENTION),
    );
    finish(10, "conic-configuration", r, start)
}

fn criterion_lattice_chain() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let big = BigInt::from;
    let l = lattice::lambda15();
    r.eq("rank-15 fixture determinant", big(512), lattice::det_exact(&l.gram));
    r.is_true("rank-15 fixture even", lattice::is_even(&l.gram));
    r.eq(
        "rank-15 fixture signature",
        "(15, 0)".to_string(),
        format!("{:?}", lattice::signature(&l.gram).unwrap()),
    );
    r.eq(
        "rank-15 fixture minimum norm",
        big(4),
        lattice::minimum_norm(&l.gram).unwrap(),
    );
    let minimal = lattice::short_vectors(&l.gram, 4).unwrap();
    r.eq("minimal vectors", 2340, minimal.len());
    let m = lattice::conic16_lattice();
    r.eq("conic lattice determinant", big(-512), lattice::det_exact(&m.gram));
    r.is_true("conic lattice even", lattice::is_even(&m.gram));
    r.eq(
        "conic lattice signature",
        "(1, 15)".to_string(),
        format!("{:?}", lattice::signature(&m.gram).unwrap()),
    );
    let target: Vec<BigInt> = vec![big(2); 16];
    let h = lattice::solve_integral(&m.gram, &target)
        .ok()
        .flatten();
    r.is_true("hyperplane class integral in the conic basis", h.is_some());
    if let Some(h) = h {
        r.eq("h squared", big(4), lattice::norm_of(&m.gram, &h));
        let (comp, basis) = lattice::orth_complement(&m, &h).unwrap();
        r.eq("orthogonal complement determinant", big(-512), lattice::det_exact(&comp.gram));
        let neg = lattice::negate(&comp.gram);
        r.is_true(
            "negated complement matches the rank-15 fixture invariants",
            lattice::det_exact(&neg) == big(512)
                && lattice::is_even(&neg)
                && lattice::signature(&neg).unwrap() == (15, 0)
                && lattice::short_vectors(&neg, 4).unwrap().len() == 2340,
        );
        let mut sub = vec![h.clone()];
        sub.extend(basis);
        let sub_gram: Vec<Vec<BigInt>> = sub
            .iter()
            .map(|a| sub.iter().map(|b| lattice::product_of(&m.gram, a, b)).collect())
            .collect();
        r.eq("direct-sum sublattice determinant", big(-2048), lattice::det_exact(&sub_gram));
        r.eq(
            "index of the direct sum",
            big(2),
            lattice::sublattice_index(&m, &sub).unwrap(),
        );
    }
    finish(11, "lattice-chain", r, start)
}

fn criterion_fermat_lines() -> CriterionReport {
    let start = Instant::now();
    let mut r = Recorder::new();
    let lines = klein::fermat_lines();
    r.eq("line count", 48, lines.len());
    r.eq(
        "tower of definition",
        "Q(sqrt(-1))(sqrt(2))".to_string(),
        lines[0].span[0][0].tower().describe(),
    );
    let mut distinct = true;
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if klein::projectively_equal(&lines[i].klein, &lines[j].klein) {
                distinct = false;
            }
        }
    }
    r.is_true("lines pairwise distinct", distinct);
    let [g0, ..] = family::g_basis();
    r.is_true(
        "every line on the diagonal quartic",
        lines
            .iter()
            .all(|l| klein::line_on_surface(&g0, &l.span[0], &l.span[1])),
    );
    let gram = klein::line_gram(&lines);
    r.eq("intersection matrix rank", 20, klein::integer_matrix_rank(&gram));
    finish(12, "fermat-lines", r, start)
}

/// Runs one criterion by id.
pub fn run_criterion(id: usize, seed: u64) -> CriterionReport {
    match id {
        1 => criterion_group(),
        2 => criterion_fix_lines(),
        3 => criterion_tetrahedra_quadrics(),
        4 => criterion_parameter_maps(),
        5 => criterion_kummer_seed(),
        6 => criterion_conic_splitting(),
        7 => criterion_fixed_points(),
        8 => criterion_hessian(),
        9 => criterion_igusa(seed),
        10 => criterion_conic_configuration(),
        11 => criterion_lattice_chain(),
        12 => criterion_fermat_lines(),
        _ => panic!("criterion ids run 1..=12"),
    }
}

/// Runs the selected criteria (all twelve when `only` is None). `only`
/// matches a slug or an id.
pub fn run_suite(only: Option<&str>, seed: u64) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .filter(|(id, slug)| match only {
            None => true,
            Some(sel) => sel == *slug || sel.parse::<usize>() == Ok(*id),
        })
        .map(|(id, _)| run_criterion(*id, seed))
        .collect()
}

/// One line per criterion, in the style of a test harness.
pub fn format_report_lines(reports: &[CriterionReport]) -> Vec<String> {
    reports
        .iter()
        .map(|rep| {
            let status = if rep.pass() { "pass" } else { "FAIL" };
            let detail = if rep.pass() {
                format!("{} checks", rep.checks.len())
            } else {
                let failed: Vec<String> = rep
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| format!("{} (expected {}, got {})", c.name, c.expected, c.actual))
                    .collect();
                failed.join("; ")
            };
            format!(
                "criterion {:>2} {:<22} {} [{} ms] {}",
                rep.id, rep.slug, status, rep.millis, detail
            )
        })
        .collect()
}

/// Needed by the matrix-emitting command: rank of a rational matrix given as
/// i64 rows, reusing the exact kernel machinery.
pub fn i64_matrix_rank(rows: &[Vec<i64>]) -> usize {
    let t = Tower::rationals();
    Mat::from_i64_rows(&t, rows).rank()
}
