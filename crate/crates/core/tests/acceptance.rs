//! Acceptance run: one line per criterion, exhaustive over the standard
//! corpus and small spaces. Runs without the libtest harness so the lines
//! are always printed; the process fails if any criterion fails.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use latspec::adjunction::{
    continuous_maps, is_classifying, lambda_adjunct, lattice_morphisms, sigma_adjunct, spectrum_data,
    spectrum_uniqueness, support_data, support_uniqueness, universal_spectrum_map, universal_support_map,
    SpectrumDatum, SupportDatum, Uniqueness, DEFAULT_MAX_ENUM,
};
use latspec::decomposition::{decompose_semiprime, is_semiprime_indecomposable};
use latspec::instances::{
    all_topologies, divisor_lattice, find_isomorphism, isomorphism_failure, powerset_lattice,
    semiring_ideal_lattice, standard_corpus, t0_spaces, CorpusEntry, FiniteSemiring,
};
use latspec::lattice::{Elem, FiniteIdealLattice};
use latspec::pointset::PointSet;
use latspec::topology::{
    canonical_homeo, classify, hochster_dual, open_lattice, spec_star, verify_spectral, zariski_spectrum,
    ClassificationKind, FiniteSpace,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Outcome of one criterion: `Err` carries the first counterexample.
type Outcome = Result<String, String>;

type Criterion<'a> = (&'static str, u64, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prime_by_definition(l: &FiniteIdealLattice, p: Elem) -> bool {
    p != l.top()
        && l.elements()
            .all(|a| l.elements().all(|b| !l.leq(l.mul(a, b), p) || l.leq(a, p) || l.leq(b, p)))
}

fn axiom_suite(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let report = e.lattice.verify_axioms();
        if let Some((axiom, w)) = report.first_failure() {
            return Err(format!("{}: {} fails at {w:?}", e.name, axiom.label()));
        }
    }
    Ok(format!("{} lattices", corpus.len()))
}

fn spectrality(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let l = &e.lattice;
        let x = zariski_spectrum(l);
        ensure(verify_spectral(&x).is_spectral(), || format!("{}: spectrum not spectral", e.name))?;
        for &u in x.opens() {
            ensure(l.elements().any(|a| l.d_points(a) == u), || {
                format!("{}: open {} is no D(a)", e.name, x.render(u))
            })?;
        }
    }
    Ok(format!("{} spectra", corpus.len()))
}

fn hochster(corpus: &[CorpusEntry]) -> Outcome {
    let mut spaces: Vec<(String, FiniteSpace)> = corpus
        .iter()
        .map(|e| (e.name.clone(), zariski_spectrum(&e.lattice)))
        .collect();
    for n in 0..=4 {
        spaces.extend(t0_spaces(n).into_iter().enumerate().map(|(i, s)| (format!("t0-{n}-{i}"), s)));
    }
    for (name, x) in &spaces {
        let dual = hochster_dual(x).map_err(|e| format!("{name}: {e}"))?;
        let back = hochster_dual(&dual).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.opens() == x.opens() && back.names() == x.names(), || format!("{name}: (X*)* != X"))?;
    }
    Ok(format!("{} spaces", spaces.len()))
}

fn squarefree(d: u64) -> bool {
    (2..=d).all(|p| !d.is_multiple_of(p * p))
}

fn classification(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        for kind in [ClassificationKind::Closed, ClassificationKind::Open, ClassificationKind::Support] {
            let table = classify(&e.lattice, kind);
            ensure(table.report.is_bijection(), || format!("{}: {} table is not a bijection", e.name, kind.label()))?;
        }
    }
    // oracle: the semiprimes of the divisor lattice of 12 are the squarefree
    // divisors, and its spectrum is discrete on the prime divisors
    let l = divisor_lattice(12).unwrap();
    let squarefree_divisors = (1..=12u64).filter(|d| 12 % d == 0 && squarefree(*d)).count();
    let prime_divisors = (2..=12u64).filter(|p| 12 % p == 0 && (2..*p).all(|q| p % q != 0)).count();
    let closed_sets = 1usize << prime_divisors;
    let table = classify(&l, ClassificationKind::Closed);
    ensure(table.pairs.len() == squarefree_divisors, || format!("12: {} semiprimes", table.pairs.len()))?;
    ensure(table.targets.len() == closed_sets, || format!("12: {} closed sets", table.targets.len()))?;
    Ok(format!("{} lattices x 3 tables; 12 gives {squarefree_divisors} <-> {closed_sets}", corpus.len()))
}

fn reconstruction() -> Outcome {
    let mut count = 0;
    for n in 0..=4 {
        let spaces = t0_spaces(n);
        ensure(n != 4 || spaces.len() == 219, || format!("{} T0 spaces on 4 points", spaces.len()))?;
        for (i, x) in spaces.iter().enumerate() {
            let h = canonical_homeo(x).map_err(|e| format!("t0-{n}-{i}: {e}"))?;
            ensure(h.is_homeomorphism(x), || format!("t0-{n}-{i}: canonical map is not a homeomorphism"))?;
            count += 1;
        }
    }
    Ok(format!("{count} spaces"))
}

fn small_lattices(corpus: &[CorpusEntry]) -> Vec<&CorpusEntry> {
    corpus.iter().filter(|e| e.lattice.len() <= 6).collect()
}

fn universal_property(corpus: &[CorpusEntry]) -> Outcome {
    let spaces: Vec<FiniteSpace> = (0..=3).flat_map(all_topologies).collect();
    let (mut data, mut maps) = (0u64, 0u128);
    for e in small_lattices(corpus) {
        let l = &e.lattice;
        for x in &spaces {
            for delta in spectrum_data(l, x) {
                let d = SpectrumDatum::new(l, x, delta.clone());
                let f = universal_spectrum_map(&d).map_err(|err| format!("{}: {err}", e.name))?;
                ensure(l.elements().all(|a| f.preimage(l.d_points(a)) == delta[a]), || {
                    format!("{}: spectrum datum preimage identity fails", e.name)
                })?;
                match spectrum_uniqueness(&d, DEFAULT_MAX_ENUM).map_err(|err| err.to_string())? {
                    Uniqueness::Unique { checked } => maps += checked,
                    other => return Err(format!("{}: spectrum datum {other:?}", e.name)),
                }
                data += 1;
            }
            for sigma in support_data(l, x) {
                let d = SupportDatum::new(l, x, sigma.clone());
                let f = universal_support_map(&d).map_err(|err| format!("{}: {err}", e.name))?;
                ensure(l.elements().all(|a| f.preimage(l.d_points(a)) == sigma[a]), || {
                    format!("{}: support datum preimage identity fails", e.name)
                })?;
                match support_uniqueness(&d, DEFAULT_MAX_ENUM).map_err(|err| err.to_string())? {
                    Uniqueness::Unique { checked } => maps += checked,
                    other => return Err(format!("{}: support datum {other:?}", e.name)),
                }
                data += 1;
            }
        }
    }
    Ok(format!("{data} data, {maps} point maps enumerated"))
}

fn adjunction(corpus: &[CorpusEntry]) -> Outcome {
    let spaces: Vec<FiniteSpace> = (0..=3).flat_map(t0_spaces).collect();
    let mut pairs = 0u64;
    for e in small_lattices(corpus) {
        let l = &e.lattice;
        let spec = zariski_spectrum(l);
        for x in &spaces {
            let ol = open_lattice(x).map_err(|err| err.to_string())?;
            let homs = lattice_morphisms(l, &ol.lattice);
            let maps = continuous_maps(x, &spec);
            ensure(homs.len() == maps.len(), || {
                format!("{}: {} morphisms but {} continuous maps", e.name, homs.len(), maps.len())
            })?;
            for phi in &homs {
                let f = sigma_adjunct(phi, &ol, x).map_err(|err| err.to_string())?;
                let back = lambda_adjunct(l, &ol, x, &f).map_err(|err| err.to_string())?;
                ensure(back.map() == phi.map(), || format!("{}: Lambda(Sigma phi) != phi", e.name))?;
            }
            for f in &maps {
                let phi = lambda_adjunct(l, &ol, x, f).map_err(|err| err.to_string())?;
                let back = sigma_adjunct(&phi, &ol, x).map_err(|err| err.to_string())?;
                ensure(&back == f, || format!("{}: Sigma(Lambda f) != f", e.name))?;
            }
            pairs += homs.len() as u64;
        }
    }
    Ok(format!("{pairs} adjoint pairs"))
}

fn classifying(corpus: &[CorpusEntry]) -> Outcome {
    let mut deleted = 0;
    for e in corpus {
        let l = &e.lattice;
        let star = spec_star(l);
        let taut = SupportDatum::tautological(l, &star);
        let report = is_classifying(&taut).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(report.is_classifying() && report.criteria_agree(), || {
            format!("{}: (Spec* L, supp) not classifying", e.name)
        })?;
        // drop the last point of the spectrum
        if let Some(last) = star.len().checked_sub(1) {
            let kept = star.full().difference(PointSet::singleton(last));
            let sub = star.subspace(kept);
            let restricted = SupportDatum::new(l, &sub, taut.restricted_sigma(kept));
            let r = is_classifying(&restricted).map_err(|err| format!("{}: deleted point: {err}", e.name))?;
            ensure(!r.is_classifying() && r.criteria_agree(), || {
                format!("{}: deleted-point datum reported classifying", e.name)
            })?;
            deleted += 1;
        }
    }
    Ok(format!("{} tautological data classifying, {deleted} deleted-point data not", corpus.len()))
}

fn radical_algebra(corpus: &[CorpusEntry]) -> Outcome {
    let mut pairs = 0u64;
    for e in corpus {
        let l = &e.lattice;
        for a in l.elements() {
            let ra = l.radical(a);
            ensure(l.radical(ra) == ra && l.leq(a, ra), || format!("{}: radical of {}", e.name, l.name(a)))?;
            for b in l.elements() {
                ensure(l.radical(l.mul(a, b)) == l.radical(l.mul(b, a)), || {
                    format!("{}: sqrt(ab) != sqrt(ba) at {}, {}", e.name, l.name(a), l.name(b))
                })?;
                ensure(!l.leq(a, b) || l.leq(ra, l.radical(b)), || {
                    format!("{}: radical not monotone at {}, {}", e.name, l.name(a), l.name(b))
                })?;
                pairs += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut found = 0;
    for _ in 0..1000 {
        let l = &corpus[rng.gen_range(0..corpus.len())].lattice;
        let a = rng.gen_range(0..l.len());
        let mut set = vec![l.top()];
        set.extend((0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..l.len())));
        set.sort_unstable();
        set.dedup();
        loop {
            let mut grown = set.clone();
            grown.extend(set.iter().flat_map(|&x| set.iter().map(move |&y| l.mul(x, y))));
            grown.sort_unstable();
            grown.dedup();
            if grown == set {
                break;
            }
            set = grown;
        }
        match l.prime_avoidance(a, &set).map_err(|err| err.to_string())? {
            None => ensure(set.iter().any(|&s| l.leq(s, a)), || "avoidance gave up wrongly".to_string())?,
            Some(p) => {
                ensure(prime_by_definition(l, p) && l.leq(a, p) && set.iter().all(|&s| !l.leq(s, p)), || {
                    format!("prime avoidance returned {}, not a valid prime", l.name(p))
                })?;
                found += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs; 1000 avoidance draws, {found} primes re-verified"))
}

/// Oracle: every partition of `set` into non-empty unions of closed sets,
/// then per point the intersection of its blocks.
fn brute_blocks(space: &FiniteSpace, set: PointSet) -> Vec<PointSet> {
    let unions: Vec<PointSet> = set
        .subsets()
        .filter(|s| !s.is_empty() && s.iter().all(|p| space.closure(p).is_subset(*s)))
        .collect();
    fn walk(rest: PointSet, unions: &[PointSet], acc: &mut Vec<PointSet>, out: &mut Vec<Vec<PointSet>>) {
        let Some(first) = rest.first() else {
            out.push(acc.clone());
            return;
        };
        for &u in unions.iter().filter(|u| u.contains(first) && u.is_subset(rest)) {
            acc.push(u);
            walk(rest.difference(u), unions, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    walk(set, &unions, &mut Vec::new(), &mut all);
    let mut blocks: Vec<PointSet> = set
        .iter()
        .map(|x| {
            all.iter()
                .map(|p| *p.iter().find(|b| b.contains(x)).unwrap())
                .fold(set, PointSet::intersection)
        })
        .collect();
    blocks.sort_by_key(|b| b.bits());
    blocks.dedup();
    blocks
}

fn decomposition(corpus: &[CorpusEntry]) -> Outcome {
    let mut checked = 0;
    for e in corpus {
        let l = &e.lattice;
        let star = spec_star(l);
        let mut targets: Vec<Elem> = l.elements().map(|b| l.radical(b)).collect();
        targets.sort_unstable();
        targets.dedup();
        for a in targets.into_iter().filter(|&a| l.d_points(a).len() <= 6) {
            let d = decompose_semiprime(l, a).map_err(|err| format!("{}: {err}", e.name))?;
            let mut got: Vec<PointSet> = d.blocks.iter().map(|b| b.support).collect();
            got.sort_by_key(|b| b.bits());
            ensure(got == brute_blocks(&star, l.d_points(a)), || {
                format!("{}: blocks of {} differ from the oracle", e.name, l.name(a))
            })?;
            ensure(d.blocks.iter().all(|b| is_semiprime_indecomposable(l, b.element)), || {
                format!("{}: a block of {} splits further", e.name, l.name(a))
            })?;
            ensure(d.degenerate || d.join_is_target, || format!("{}: join of blocks of {}", e.name, l.name(a)))?;
            let bottom_semiprime = l.is_semiprime(l.bottom());
            ensure(d.pairwise_meet.is_none_or(|m| m == l.radical(l.bottom())), || {
                format!("{}: blocks of {} meet above the radical of the bottom", e.name, l.name(a))
            })?;
            ensure(!d.meet_above_bottom || !bottom_semiprime, || format!("{}: spurious meet flag", e.name))?;
            checked += 1;
        }
    }
    let p = powerset_lattice(3);
    let d = decompose_semiprime(&p, p.top()).map_err(|err| err.to_string())?;
    let atoms: Vec<Elem> = p.elements().filter(|&a| p.covers().contains(&(p.bottom(), a))).collect();
    let mut blocks: Vec<Elem> = d.blocks.iter().map(|b| b.element).collect();
    blocks.sort_unstable();
    ensure(blocks == atoms && d.pairwise_meet == Some(p.bottom()), || "powerset top does not split into its atoms".into())?;
    let t = divisor_lattice(12).unwrap();
    let d = decompose_semiprime(&t, t.top()).map_err(|err| err.to_string())?;
    let supports: Vec<Vec<&str>> = d
        .blocks
        .iter()
        .map(|b| b.support.iter().map(|p| t.name(t.prime_at(p))).collect())
        .collect();
    ensure(supports == [["2"], ["3"]] && d.meet_above_bottom, || format!("12: supports {supports:?}"))?;
    Ok(format!("{checked} semiprimes match the oracle; powerset and 12 examples hold"))
}

fn cross_oracle() -> Outcome {
    for n in 1..=60u64 {
        let s = FiniteSemiring::zn(n as usize).map_err(|e| e.to_string())?;
        let ideals = semiring_ideal_lattice(&s).map_err(|e| format!("Z/{n}: {e}"))?;
        let div = divisor_lattice(n).map_err(|e| e.to_string())?;
        let iso = find_isomorphism(&ideals.lattice, &div).ok_or_else(|| format!("Z/{n}: no isomorphism"))?;
        ensure(isomorphism_failure(&ideals.lattice, &div, &iso).is_none(), || format!("Z/{n}: bad isomorphism"))?;
    }
    Ok("n = 1..60".to_string())
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../cli/tests/golden")
}

fn cli_binary() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    // target/<profile>/deps/acceptance-<hash>
    let dir = exe.parent()?.parent()?;
    let bin = dir.join(format!("latspec{}", std::env::consts::EXE_SUFFIX));
    bin.exists().then_some(bin)
}

fn cli_golden() -> Outcome {
    let bin = cli_binary().ok_or("latspec binary not built; run the workspace tests")?;
    let cases = fs::read_to_string(golden_dir().join("cases.txt")).map_err(|e| e.to_string())?;
    let mut count = 0;
    for line in cases.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let mut words = line.split_whitespace();
        let name = words.next().unwrap();
        let code: i32 = words.next().unwrap().parse().map_err(|_| format!("{name}: bad exit code"))?;
        let rest: Vec<&str> = words.collect();
        let mut input = Vec::new();
        let mut status = 0;
        for stage in rest.split(|w| *w == "|") {
            let mut child = Command::new(&bin)
                .args(stage)
                .current_dir(golden_dir().join("inputs"))
                .env_remove("LATSPEC_MAX_ENUM")
                .stdin(Stdio::piped())
                .stdout(Stdio::piped())
                .stderr(Stdio::null())
                .spawn()
                .map_err(|e| e.to_string())?;
            child.stdin.take().unwrap().write_all(&input).map_err(|e| e.to_string())?;
            let out = child.wait_with_output().map_err(|e| e.to_string())?;
            status = out.status.code().unwrap_or(-1);
            input = out.stdout;
        }
        let expected = fs::read(golden_dir().join(format!("{name}.out"))).map_err(|e| format!("{name}: {e}"))?;
        ensure(status == code && input == expected, || format!("{name}: output or exit code differs"))?;
        count += 1;
    }
    ensure(count >= 11, || format!("only {count} pipelines"))?;
    Ok(format!("{count} pipelines byte-identical"))
}

fn main() -> ExitCode {
    let corpus = standard_corpus();
    let criteria: Vec<Criterion> = vec![
        ("axiom suite", 30, Box::new(|| axiom_suite(&corpus))),
        ("spectrality", 10, Box::new(|| spectrality(&corpus))),
        ("Hochster involution", 10, Box::new(|| hochster(&corpus))),
        ("classification bijections", 30, Box::new(|| classification(&corpus))),
        ("reconstruction", 60, Box::new(reconstruction)),
        ("universal property", 60, Box::new(|| universal_property(&corpus))),
        ("adjunction", 60, Box::new(|| adjunction(&corpus))),
        ("classifying detection", 30, Box::new(|| classifying(&corpus))),
        ("radical algebra", 30, Box::new(|| radical_algebra(&corpus))),
        ("decomposition", 30, Box::new(|| decomposition(&corpus))),
        ("cross-oracle Z/n", 30, Box::new(cross_oracle)),
        ("CLI golden pipelines", 30, Box::new(cli_golden)),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= Duration::from_secs(*limit) => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {limit} s")),
            Err(e) => (false, e),
        };
        failures += usize::from(!ok);
        println!(
            "{} [{:>2}] {name}: {detail} ({:.2} s, limit {limit} s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
