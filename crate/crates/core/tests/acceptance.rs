//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdicts are always printed.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use orbifold_fatgraph::fatgraph::{covers, pinch};
use orbifold_fatgraph::stability::{
    attach_a_modules, build_disk_surface, build_genus_surface, build_strip, build_yprime_genus,
    covering_trick, nt_bound, nt_witness, prepare_word, GenusOptions, PartialBuild,
};
use orbifold_fatgraph::{
    check_certificate, classify, cyclic_reduce, free_reduce, CyclicOrder, CyclicSubOrder, CyclicWord,
    ElementClass, Fatgraph, GenAlphabet, Letter, PolygonVerdict, Realization, Shape, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DERIVE_LIMIT: Duration = Duration::from_millis(1);
const DISK_LIMIT: Duration = Duration::from_secs(1);
const GENUS_LIMIT: Duration = Duration::from_secs(5);
const NT_LIMIT: Duration = Duration::from_secs(10);
const PROPERTY_CASES: usize = 500;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn load_fatgraph(name: &str) -> Fatgraph {
    Fatgraph::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn load_orbifold(name: &str) -> Realization {
    Realization::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn realization(inf: usize, fin: Vec<usize>, order: &str) -> Realization {
    let a = GenAlphabet::new(inf, fin).unwrap();
    let o = CyclicOrder::parse(order, &a).unwrap();
    Realization::new(a, o).unwrap()
}

fn cyclic(w: &Word, a: &GenAlphabet) -> CyclicWord {
    cyclic_reduce(w, a).unwrap().0
}

fn boundary_derivation() -> Result<String, String> {
    let a = GenAlphabet::new(2, vec![4, 4, 4]).unwrap();
    let o = CyclicOrder::parse("c1 c2 z0 Z1 c0 Z0 z1", &a).unwrap();
    let t = Instant::now();
    let r = Realization::new(a.clone(), o).unwrap();
    let elapsed = t.elapsed();
    let expected = cyclic(&Word::parse("c0 Z0 Z1 c1 c2 z0 z1", &a).unwrap(), &a);
    if r.boundary_cyclic() != expected {
        return Err(format!("derived {} expected {expected}", r.boundary_word()));
    }
    if elapsed > DERIVE_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("b = {} in {elapsed:?}", r.boundary_word()))
}

fn fixture_boundary() -> Result<String, String> {
    let f = load_fatgraph("fig_cyclic_fatgraph.fg");
    let a = f.alphabet().clone();
    let mut got: Vec<CyclicWord> = f
        .boundary()
        .unwrap()
        .words()
        .unwrap()
        .iter()
        .map(|w| cyclic(w, &a))
        .collect();
    let mut want: Vec<CyclicWord> = [
        "z0 c0 Z1 c0 Z0 c1 z0 c1 Z1 c0 Z0 Z1 c1 Z0 c1 z1",
        "z0 z1",
        "z1 c0",
    ]
    .iter()
    .map(|s| cyclic(&Word::parse(s, &a).unwrap(), &a))
    .collect();
    got.sort();
    want.sort();
    if got != want {
        return Err(format!("components {got:?}"));
    }
    let census = f.census();
    let sizes: BTreeMap<usize, usize> = census.polygons.clone();
    if sizes != BTreeMap::from([(2, 7), (3, 2)]) {
        return Err(format!("polygon census {sizes:?}"));
    }
    Ok("3 caption components, 7 bigons + 2 triangles".into())
}

fn certificate() -> Result<String, String> {
    let r = load_orbifold("example22.orb");
    let f = load_fatgraph("fig_spine.fg");
    let rep = check_certificate(&f, &r).map_err(|e| e.to_string())?;
    if !rep.passed() {
        return Err(format!("spine fixture fails:\n{rep}"));
    }
    let a = r.alphabet();
    let canon = |s: &str| CyclicSubOrder::new(Word::parse(s, a).unwrap().into_letters()).canonical();
    let mut want: Vec<_> = [
        "c1 z0 c0 Z0",
        "c1 z0 Z0",
        "c0 z0 Z1",
        "c1 Z0",
        "c1 z1",
        "c0 Z1",
        "c0 z1",
    ]
    .iter()
    .map(|s| canon(s))
    .collect();
    let mut got: Vec<_> = rep.polygons.iter().map(|p| p.labels.canonical()).collect();
    want.sort();
    got.sort();
    if got != want {
        return Err(format!("polygons {got:?}"));
    }

    let disk = realization(0, vec![3, 3, 3], "c0 c1 c2");
    let mut partial = Fatgraph::new(disk.alphabet().clone());
    partial
        .add_polygon(vec![Letter::c(2), Letter::c(1), Letter::c(0)])
        .unwrap();
    let (closed, _) = covering_trick(&partial).map_err(|e| e.to_string())?;
    let rep = check_certificate(&closed, &disk).map_err(|e| e.to_string())?;
    let witnesses: Vec<_> = rep
        .polygons
        .iter()
        .filter(|p| p.labels.len() == 3)
        .map(|p| p.verdict.clone())
        .collect();
    if rep.passed()
        || witnesses.is_empty()
        || !witnesses
            .iter()
            .all(|v| matches!(v, PolygonVerdict::Incompatible(..)))
    {
        return Err(format!("reversed triangle verdicts {witnesses:?}"));
    }
    let PolygonVerdict::Incompatible(x, y, z) = witnesses[0] else {
        unreachable!()
    };
    Ok(format!(
        "spine passes with the 7 listed polygons; [c2, c1, c0] incompatible at ({x}, {y}, {z})"
    ))
}

fn disk_end_to_end() -> Result<String, String> {
    let r = load_orbifold("disk334.orb");
    let w = Word::parse("c0 c1^2 c2 c1", r.alphabet()).unwrap();
    let mut base = None;
    let mut slowest = Duration::ZERO;
    for n in 0..=5 {
        let t = Instant::now();
        let s = build_disk_surface(&r, &w, n).map_err(|e| e.to_string())?;
        slowest = slowest.max(t.elapsed());
        if !s.fatgraph.is_complete() || s.degree != 12 {
            return Err(format!(
                "n = {n}: complete {} degree {}",
                s.fatgraph.is_complete(),
                s.degree
            ));
        }
        if !check_certificate(&s.fatgraph, &r)
            .map_err(|e| e.to_string())?
            .passed()
        {
            return Err(format!("n = {n}: certificate fails"));
        }
        let target = w.concat(&r.boundary_word().repeat(s.exponent));
        if covers(&s.fatgraph.boundary().unwrap(), &target, r.alphabet()).unwrap() != Some(12) {
            return Err(format!("n = {n}: not a degree-12 cover of w b^{}", s.exponent));
        }
        let n0 = *base.get_or_insert(s.base_exponent);
        if s.exponent != n0 + n {
            return Err(format!("n = {n}: exponent {} with N = {n0}", s.exponent));
        }
    }
    if slowest > DISK_LIMIT {
        return Err(format!("slowest build {slowest:?}"));
    }
    Ok(format!(
        "degree 12, exponents N..N+5 with N = {}, slowest {slowest:?}",
        base.unwrap()
    ))
}

fn genus_reproduction() -> Result<String, String> {
    let r = load_orbifold("genus1_cone3.orb");
    let w = Word::parse("z0 c0 Z0 c0", r.alphabet()).unwrap();
    let p = prepare_word(&r, &w).map_err(|e| e.to_string())?;
    let y = build_yprime_genus(&r, &p.word, false).map_err(|e| e.to_string())?;
    let filled = attach_a_modules(&y, &r).map_err(|e| e.to_string())?;
    let report = filled.fatgraph.boundary().unwrap();
    let read = report.components[0].read_as_word().map_err(|e| e.to_string())?;
    let want = w.concat(&r.boundary_word().repeat(14));
    if report.len() != 1
        || p.absorbed() != 0
        || filled.exponent != 14
        || cyclic(&read, r.alphabet()) != cyclic(&want, r.alphabet())
    {
        return Err(format!(
            "{} components, exponent {}",
            report.len(),
            filled.exponent
        ));
    }
    Ok("single boundary reads w b^14".into())
}

fn genus_end_to_end() -> Result<String, String> {
    let cases = [
        ("genus1_cone3.orb", "z0 c0 Z0 c0", [3, 6]),
        ("genus1.orb", "z0 z1 Z0 Z0 Z1 z0", [1, 2]),
    ];
    let mut slowest = Duration::ZERO;
    for (file, word, degrees) in cases {
        let r = load_orbifold(file);
        let w = Word::parse(word, r.alphabet()).unwrap();
        for n in 0..=5 {
            let t = Instant::now();
            let s = build_genus_surface(&r, &w, n, GenusOptions::default()).map_err(|e| e.to_string())?;
            slowest = slowest.max(t.elapsed());
            let want = degrees[n % 2];
            if !s.fatgraph.is_complete() || s.degree != want || s.exponent != s.base_exponent + n {
                return Err(format!(
                    "{file} n = {n}: degree {} exponent {}",
                    s.degree, s.exponent
                ));
            }
            if !check_certificate(&s.fatgraph, &r)
                .map_err(|e| e.to_string())?
                .passed()
            {
                return Err(format!("{file} n = {n}: certificate fails"));
            }
            let target = w.concat(&r.boundary_word().repeat(s.exponent));
            if covers(&s.fatgraph.boundary().unwrap(), &target, r.alphabet()).unwrap() != Some(want) {
                return Err(format!("{file} n = {n}: not a degree-{want} cover"));
            }
        }
    }
    if slowest > GENUS_LIMIT {
        return Err(format!("slowest build {slowest:?}"));
    }
    Ok(format!(
        "degrees 3/6 with a cone point, 1/2 without; slowest {slowest:?}"
    ))
}

/// `reach[t]`: some sequence without equal neighbours sums to `t`.
fn reachable(xs: &[i64], limit: usize) -> Vec<bool> {
    let k = xs.len();
    let mut ends = vec![vec![false; k]; limit + 1];
    for t in 1..=limit {
        for i in 0..k {
            let x = xs[i] as usize;
            if x <= t {
                ends[t][i] = t == x || (0..k).any(|j| j != i && ends[t - x][j]);
            }
        }
    }
    ends.iter().map(|row| row.iter().any(|&b| b)).collect()
}

fn number_theory() -> Result<String, String> {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut all: Vec<Vec<i64>> = vec![vec![2, 2, 3], vec![2, 4, 6], vec![3, 5, 7]];
    for _ in 0..20 {
        all.push((0..3).map(|_| rng.gen_range(1..=9)).collect());
    }
    for xs in &all {
        let inst = nt_bound(xs).map_err(|e| e.to_string())?;
        let top = inst.bound + 200 * inst.g;
        let reach = reachable(xs, top as usize);
        // least multiple of g from which every multiple up to `top` is a sum
        let mut threshold = top;
        while threshold >= inst.g && reach[(threshold - inst.g) as usize] {
            threshold -= inst.g;
        }
        if threshold > inst.bound {
            return Err(format!(
                "{xs:?}: oracle threshold {threshold} above N = {}",
                inst.bound
            ));
        }
        for step in 0..200 {
            let c = inst.bound + step * inst.g;
            let seq = nt_witness(&inst, c).map_err(|e| format!("{xs:?}, C = {c}: {e}"))?;
            let sum: i64 = seq.iter().map(|&i| xs[i]).sum();
            if sum != c || seq.windows(2).any(|p| p[0] == p[1]) {
                return Err(format!("{xs:?}, C = {c}: bad witness"));
            }
        }
    }
    let elapsed = t.elapsed();
    if elapsed > NT_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{} inputs x 200 targets, oracle threshold <= N, {elapsed:?}",
        all.len()
    ))
}

/// A random realization with `I <= 4`, `J <= 4`, orders at most 6.
fn random_realization(rng: &mut ChaCha8Rng) -> Option<Realization> {
    let inf = 2 * rng.gen_range(0..=2);
    let fin_count = if inf == 0 {
        rng.gen_range(3..=4)
    } else {
        rng.gen_range(0..=4)
    };
    let orders: Vec<usize> = (0..fin_count).map(|_| rng.gen_range(2..=6)).collect();
    let mut symbols: Vec<Letter> = (0..inf / 2)
        .flat_map(|h| {
            [
                Letter::z(2 * h),
                Letter::z_inv(2 * h + 1),
                Letter::z_inv(2 * h),
                Letter::z(2 * h + 1),
            ]
        })
        .collect();
    for j in 0..fin_count {
        let at = rng.gen_range(0..=symbols.len());
        symbols.insert(at, Letter::c(j));
    }
    let a = GenAlphabet::new(inf, orders).ok()?;
    let text: Vec<String> = symbols.iter().map(|x| x.to_string()).collect();
    let o = CyclicOrder::parse(&text.join(" "), &a).ok()?;
    Realization::new(a, o).ok()
}

fn random_word(rng: &mut ChaCha8Rng, a: &GenAlphabet, len: usize) -> Word {
    let symbols = a.symbols();
    Word::new(
        (0..len)
            .map(|_| symbols[rng.gen_range(0..symbols.len())])
            .collect(),
    )
}

/// Words of length at most 12; for genus orbifolds a commutator, so the
/// exponent sums vanish.
fn random_test_word(rng: &mut ChaCha8Rng, r: &Realization) -> Word {
    let a = r.alphabet();
    match r.shape().unwrap() {
        Shape::Disk { .. } => {
            let len = rng.gen_range(1..=12);
            random_word(rng, a, len)
        }
        Shape::Genus { .. } => loop {
            let (lu, lv) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let u = random_word(rng, a, lu);
            let v = random_word(rng, a, lv);
            let w = u
                .concat(&v)
                .concat(&u.inverse(a).unwrap())
                .concat(&v.inverse(a).unwrap());
            if w.len() <= 12 {
                return w;
            }
        },
    }
}

/// Independent re-read of the strip boundary: unglued `pe(z_i)` expands to
/// `z_i b_+ Z_i`, `pe(Z_i)` to `Z_i b_- z_i`, and `pe(c_j)` to `c_j`.
fn strip_reads_word(y: &PartialBuild, r: &Realization) -> Result<(), String> {
    let report = y.fatgraph.boundary().map_err(|e| e.to_string())?;
    if report.len() != 1 {
        return Err(format!("{} boundary components", report.len()));
    }
    let comp = report.components[0]
        .starting_at(y.start)
        .ok_or("start side missing")?;
    let subwords: Vec<(Word, Word)> = (0..r.alphabet().inf_count())
        .map(|i| r.b_subwords(i).unwrap())
        .collect();
    let read = comp
        .read_with(|l| {
            if l.label.is_finite() {
                return Some(vec![l.label]);
            }
            let (plus, minus) = &subwords[l.label.index()];
            let middle = if l.label.is_inverse() { minus } else { plus };
            let mut v = vec![l.label];
            v.extend_from_slice(middle.letters());
            v.push(l.label.partner());
            Some(v)
        })
        .map_err(|e| e.to_string())?;
    let want = y.word.concat(&r.boundary_word().repeat(y.exponent));
    if read != want {
        return Err(format!("boundary reads {read}, expected {want}"));
    }
    Ok(())
}

fn check_surface(f: &Fatgraph) -> Result<(), String> {
    let s = f.surface_summary().map_err(|e| e.to_string())?;
    let direct = f.piece_count() as i64 - f.gluing_count() as i64;
    let classified =
        2 * s.connected_components as i64 - 2 * s.total_genus() as i64 - s.boundary_components as i64;
    if s.euler_characteristic != direct || direct != classified {
        return Err(format!(
            "chi {} vs {direct} vs {classified}",
            s.euler_characteristic
        ));
    }
    let again = Fatgraph::parse(&f.to_text()).map_err(|e| e.to_string())?;
    if &again != f {
        return Err("fatgraph round trip differs".into());
    }
    Ok(())
}

/// `None` when the random realization is rejected, otherwise whether the
/// word was hyperbolic and went through the strip checks.
fn property_case(rng: &mut ChaCha8Rng) -> Result<Option<bool>, String> {
    let Some(r) = random_realization(rng) else {
        return Ok(None);
    };
    let a = r.alphabet();
    let again = Realization::parse(&r.to_text()).map_err(|e| e.to_string())?;
    if again != r {
        return Err(format!("realization round trip: {}", r.to_text()));
    }
    let w = random_test_word(rng, &r);
    let reduced = free_reduce(&w, a).unwrap();
    if free_reduce(&reduced, a).unwrap() != reduced {
        return Err(format!("free_reduce not idempotent on {w}"));
    }
    let b = r.boundary_cyclic();
    let class = classify(&w, &b, a).unwrap();
    let lu = rng.gen_range(0..=4);
    let u = random_word(rng, a, lu);
    let conj = u.concat(&w).concat(&u.inverse(a).unwrap());
    if classify(&conj, &b, a).unwrap() != class {
        return Err(format!("class of {w} changes under conjugation by {u}"));
    }
    if class != ElementClass::Hyperbolic {
        return Ok(Some(false));
    }
    let p = prepare_word(&r, &w).map_err(|e| format!("{w}: {e}"))?;
    let y = match r.shape().unwrap() {
        Shape::Disk { .. } => build_strip(&r, &p.word),
        Shape::Genus { .. } => build_yprime_genus(&r, &p.word, true),
    }
    .map_err(|e| format!("{w}: {e}"))?;
    y.verify(&r).map_err(|e| format!("{w}: {e}"))?;
    strip_reads_word(&y, &r).map_err(|e| format!("{w}: {e}"))?;
    let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
    for (_, l) in y.fatgraph.unglued_edges() {
        if !l.label.is_finite() {
            *counts.entry(l.label).or_default() += 1;
        }
    }
    for i in 0..a.inf_count() {
        let (plus, minus) = (counts.get(&Letter::z(i)), counts.get(&Letter::z_inv(i)));
        if plus != minus {
            return Err(format!("{w}: pe(z{i}) {plus:?} vs pe(Z{i}) {minus:?}"));
        }
    }
    check_surface(&y.fatgraph)?;
    let pinched = pinch(&[w.clone(), w.inverse(a).unwrap()], a).map_err(|e| e.to_string())?;
    check_surface(&pinched)?;
    Ok(Some(true))
}

fn property_suites() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0;
    let mut strips = 0;
    let mut attempts = 0;
    while done < PROPERTY_CASES {
        attempts += 1;
        if attempts > 20 * PROPERTY_CASES {
            return Err(format!("only {done} valid cases generated"));
        }
        match property_case(&mut rng)? {
            Some(true) => {
                done += 1;
                strips += 1;
            }
            Some(false) => done += 1,
            None => {}
        }
    }
    Ok(format!(
        "{done} random (realization, word) pairs, {strips} hyperbolic, zero failures"
    ))
}

type Check = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("1 boundary derivation", boundary_derivation),
        ("2 fixture boundary", fixture_boundary),
        ("3 certificate", certificate),
        ("4 disk end-to-end", disk_end_to_end),
        ("5 genus reproduction", genus_reproduction),
        ("6 genus end-to-end", genus_end_to_end),
        ("7 sums without equal neighbours", number_theory),
        ("8 property suites", property_suites),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
