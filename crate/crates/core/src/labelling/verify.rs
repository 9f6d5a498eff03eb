use super::{Labelling, Scheme, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Checks every clause of `scheme` and lists the ones that fail, each with
/// a witness. Missing labels are an error, not a failed clause.
pub fn verify(g: &Graph, l: &Labelling, scheme: &Scheme) -> Result<VerificationReport> {
    if l.vertex.len() != g.n() || l.edge.len() != g.q() {
        return Err(Error::SizeMismatch(format!(
            "labelling covers {} vertices and {} edges, graph has {} and {}",
            l.vertex.len(),
            l.edge.len(),
            g.n(),
            g.q()
        )));
    }
    let fv = l.vertex_values()?;
    let mut r = VerificationReport::new();
    let q = g.q() as i64;
    let p = g.n() as i64;
    match *scheme {
        Scheme::Graceful | Scheme::SetOrderedGraceful => {
            let fe = derived(g, l, &fv, &mut r, |a, b| (a - b).abs());
            injective(&mut r, &fv);
            in_range(&mut r, &fv, 0, q);
            r.check(fv.iter().min() == Some(&0) || fv.is_empty(), "min-zero", || "0 is not used".into());
            exact(&mut r, "edge-set", &fe, (1..=q).collect());
            if *scheme == Scheme::SetOrderedGraceful {
                set_ordered(&mut r, g, &fv);
            }
        }
        Scheme::OddGraceful | Scheme::SetOrderedOddGraceful | Scheme::PerfectOddGraceful => {
            let fe = derived(g, l, &fv, &mut r, |a, b| (a - b).abs());
            injective(&mut r, &fv);
            in_range(&mut r, &fv, 0, (2 * q - 1).max(0));
            r.check(fv.iter().min() == Some(&0) || fv.is_empty(), "min-zero", || "0 is not used".into());
            exact(&mut r, "edge-set", &fe, odd_range(q));
            if *scheme == Scheme::SetOrderedOddGraceful {
                set_ordered(&mut r, g, &fv);
            }
            if *scheme == Scheme::PerfectOddGraceful {
                let mut diffs: Vec<i64> = pairwise_differences(&fv);
                diffs.dedup();
                let want: Vec<i64> = (1..=2 * q - 1).collect();
                r.check(diffs == want, "vertex-differences", || format!("{diffs:?}"));
            }
        }
        Scheme::Felicitous | Scheme::Harmonious => {
            let m = q.max(1);
            let fe = derived(g, l, &fv, &mut r, |a, b| (a + b).rem_euclid(m));
            if *scheme == Scheme::Felicitous {
                injective(&mut r, &fv);
                in_range(&mut r, &fv, 0, q);
            } else {
                // trees have p = q+1 vertices in q slots, so one repeat is allowed
                let mut s = fv.clone();
                s.sort_unstable();
                let repeats = s.windows(2).filter(|w| w[0] == w[1]).count();
                r.check(repeats <= 1, "injective", || format!("{repeats} repeated values"));
                in_range(&mut r, &fv, 0, q - 1);
            }
            exact(&mut r, "edge-set", &fe, (0..q).collect());
        }
        Scheme::OddElegant => {
            let m = (2 * q).max(1);
            let fe = derived(g, l, &fv, &mut r, |a, b| (a + b).rem_euclid(m));
            injective(&mut r, &fv);
            in_range(&mut r, &fv, 0, (2 * q - 1).max(0));
            exact(&mut r, "edge-set", &fe, odd_range(q));
        }
        Scheme::KdGraceful { k, d } | Scheme::KdArithmetic { k, d } => {
            let fe = if matches!(scheme, Scheme::KdGraceful { .. }) {
                derived(g, l, &fv, &mut r, |a, b| (a - b).abs())
            } else {
                derived(g, l, &fv, &mut r, |a, b| a + b)
            };
            injective(&mut r, &fv);
            in_range(&mut r, &fv, 0, k + (q - 1) * d);
            exact(&mut r, "edge-set", &fe, arithmetic(k, d, q));
        }
        Scheme::KdHarmonious { k, d } => {
            let m = (q * d).max(1);
            let fe = derived(g, l, &fv, &mut r, |a, b| k + (a + b - k).rem_euclid(m));
            injective(&mut r, &fv);
            let allowed: Vec<i64> = (0..q).map(|i| i * d).chain(arithmetic(k, d, q)).collect();
            for (v, x) in fv.iter().enumerate() {
                r.check(allowed.contains(x), "vertex-range", || format!("vertex {v} label {x}"));
            }
            exact(&mut r, "edge-set", &fe, arithmetic(k, d, q));
        }
        Scheme::EdgeMagicTotal { k, super_ } => {
            let fe = l.edge_values()?;
            bijection(&mut r, &fv, &fe, 1, p + q);
            if super_ {
                exact(&mut r, "super", &fv, (1..=p).collect());
            }
            let sums = edge_sums(g, &fv, &fe);
            constant(&mut r, "magic", "k", &sums, k);
        }
        Scheme::EdgeAntimagicTotal { k, d, super_ } => {
            let fe = l.edge_values()?;
            bijection(&mut r, &fv, &fe, 1, p + q);
            if super_ {
                exact(&mut r, "super", &fv, (1..=p).collect());
            }
            exact(&mut r, "edge-sums", &edge_sums(g, &fv, &fe), arithmetic(k, d, q));
        }
        Scheme::EdgeOddGracefulTotal => {
            let fe = l.edge_values()?;
            in_range(&mut r, &fv, 0, q - 1);
            exact(&mut r, "edge-set", &fe, odd_range(q));
            consecutive_sums(&mut r, &edge_sums(g, &fv, &fe));
        }
        Scheme::MultipleMeaning { rule, k } => {
            let fe = l.edge_values()?;
            injective(&mut r, &fv);
            in_range(&mut r, &fv, 0, p - 1);
            multiple_meaning(&mut r, g, &fv, &fe, rule, k, p, q)?;
        }
        Scheme::SixC => six_c(&mut r, g, &fv, &l.edge_values()?, p, q),
        Scheme::OddSixC => odd_six_c(&mut r, g, &fv, &l.edge_values()?, p, q),
    }
    Ok(r)
}

/// Induced edge labels; explicit edge labels must agree with them.
fn derived(
    g: &Graph,
    l: &Labelling,
    fv: &[i64],
    r: &mut VerificationReport,
    rule: impl Fn(i64, i64) -> i64,
) -> Vec<i64> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let x = rule(fv[u], fv[v]);
            if let Some(given) = l.edge[e] {
                r.check(given == x, "edge-label", || format!("edge {e} has {given}, rule gives {x}"));
            }
            x
        })
        .collect()
}

fn odd_range(q: i64) -> Vec<i64> {
    (1..=q).map(|i| 2 * i - 1).collect()
}

fn arithmetic(k: i64, d: i64, q: i64) -> Vec<i64> {
    (0..q).map(|i| k + i * d).collect()
}

fn edge_sums(g: &Graph, fv: &[i64], fe: &[i64]) -> Vec<i64> {
    g.edges().iter().zip(fe).map(|(&(u, v), &x)| fv[u] + x + fv[v]).collect()
}

fn pairwise_differences(fv: &[i64]) -> Vec<i64> {
    let mut d = Vec::new();
    for i in 0..fv.len() {
        for j in i + 1..fv.len() {
            d.push((fv[i] - fv[j]).abs());
        }
    }
    d.sort_unstable();
    d
}

fn injective(r: &mut VerificationReport, xs: &[i64]) {
    let mut s = xs.to_vec();
    s.sort_unstable();
    if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
        r.fail("injective", format!("label {} repeats", w[0]));
    }
}

fn in_range(r: &mut VerificationReport, xs: &[i64], lo: i64, hi: i64) {
    if let Some((i, x)) = xs.iter().enumerate().find(|(_, x)| !(lo..=hi).contains(*x)) {
        r.fail("vertex-range", format!("vertex {i} label {x} outside [{lo},{hi}]"));
    }
}

/// Multiset equality with a witness naming the first surplus or missing value.
fn exact(r: &mut VerificationReport, clause: &str, got: &[i64], mut want: Vec<i64>) {
    let mut got = got.to_vec();
    got.sort_unstable();
    want.sort_unstable();
    if got != want {
        let surplus = got.iter().find(|x| got.iter().filter(|y| y == x).count() > want.iter().filter(|y| y == x).count());
        let missing = want.iter().find(|x| !got.contains(x));
        let w = match (surplus, missing) {
            (Some(s), _) => format!("unexpected or repeated {s}"),
            (None, Some(m)) => format!("missing {m}"),
            _ => "size differs".to_string(),
        };
        r.fail(clause, w);
    }
}

fn bijection(r: &mut VerificationReport, fv: &[i64], fe: &[i64], lo: i64, hi: i64) {
    let all: Vec<i64> = fv.iter().chain(fe).copied().collect();
    exact(r, "bijection", &all, (lo..=hi).collect());
}

/// All values equal (to `k` when given); records the constant under `key`.
fn constant(r: &mut VerificationReport, clause: &str, key: &str, xs: &[i64], k: Option<i64>) {
    let Some(&first) = xs.first() else { return };
    let k = k.unwrap_or(first);
    match xs.iter().position(|&x| x != k) {
        Some(e) => r.fail(clause, format!("edge {e} gives {} not {k}", xs[e])),
        None => {
            r.values.insert(key.to_string(), k);
        }
    }
}

fn consecutive_sums(r: &mut VerificationReport, sums: &[i64]) {
    let mut s = sums.to_vec();
    s.sort_unstable();
    match s.windows(2).find(|w| w[1] != w[0] + 1) {
        Some(w) => r.fail("sum-range", format!("{} then {}", w[0], w[1])),
        None => {
            if let (Some(&a), Some(&b)) = (s.first(), s.last()) {
                r.values.insert("a".into(), a);
                r.values.insert("b".into(), b);
            }
        }
    }
}

/// Some threshold t puts one end of every edge at or below t and the other
/// above it. On disconnected graphs this picks the bipartition per component.
pub(crate) fn set_ordered_threshold(g: &Graph, fv: &[i64]) -> Option<i64> {
    let mut cands: Vec<i64> = fv.to_vec();
    cands.sort_unstable();
    cands.dedup();
    cands.into_iter().find(|&t| g.edges().iter().all(|&(u, v)| (fv[u] <= t) != (fv[v] <= t)))
}

fn set_ordered(r: &mut VerificationReport, g: &Graph, fv: &[i64]) {
    match set_ordered_threshold(g, fv) {
        Some(t) => {
            r.values.insert("threshold".into(), t);
        }
        None => r.fail("set-ordered", "no threshold separates the bipartition"),
    }
}

#[allow(clippy::too_many_arguments)]
fn multiple_meaning(
    r: &mut VerificationReport,
    g: &Graph,
    fv: &[i64],
    fe: &[i64],
    rule: u8,
    k: Option<i64>,
    p: i64,
    q: i64,
) -> Result<()> {
    let ends = |e: usize| {
        let (u, v) = g.edge(e);
        (fv[u], fv[v])
    };
    match rule {
        1 | 2 => {
            let want = if rule == 1 { (1..=q).collect() } else { (p..p + q).collect() };
            exact(r, "edge-set", fe, want);
            constant(r, "magic", "k", &edge_sums(g, fv, fe), k);
        }
        3 => {
            exact(r, "edge-set", fe, (0..q).collect());
            let m = k.unwrap_or(q).max(1);
            r.values.insert("modulus".into(), m);
            for (e, &x) in fe.iter().enumerate() {
                let (a, b) = ends(e);
                r.check((a + b - x).rem_euclid(m) == 0, "modular-sum", || format!("edge {e}"));
            }
        }
        4 => {
            exact(r, "edge-set", fe, (1..=q).collect());
            let gaps: Vec<i64> = (0..fe.len())
                .map(|e| {
                    let (a, b) = ends(e);
                    (a + b - fe[e]).abs()
                })
                .collect();
            constant(r, "magic-graceful", "k", &gaps, k);
        }
        5 => {
            exact(r, "edge-set", fe, odd_range(q));
            consecutive_sums(r, &edge_sums(g, fv, fe));
        }
        _ => return Err(Error::UnknownScheme(format!("multiple-meaning {rule}"))),
    }
    Ok(())
}

/// Partner search shared by the two balance clauses: each edge needs some
/// edge with s+s′ = k′, or (p+q+1)+s+s′ = k′. Returns (k′, alternatives used).
fn balanced(s: &[i64], shift: i64) -> Option<(i64, i64)> {
    let first = *s.first()?;
    let mut cands: Vec<i64> = s.iter().flat_map(|&x| [first + x, shift + first + x]).collect();
    cands.sort_unstable();
    cands.dedup();
    cands.into_iter().find_map(|k| {
        let mut used = 0;
        for &a in s {
            if s.iter().any(|&b| a + b == k) {
                used |= 1;
            } else if s.iter().any(|&b| shift + a + b == k) {
                used |= 2;
            } else {
                return None;
            }
        }
        Some((k, used))
    })
}

/// Which reading of the EV-ordered clause holds, 1-based, or `None`.
fn ev_ordered(fv: &[i64], fe: &[i64]) -> Option<i64> {
    let (vmin, vmax) = (*fv.iter().min()?, *fv.iter().max()?);
    let (emin, emax) = (fe.iter().min().copied(), fe.iter().max().copied());
    let (Some(emin), Some(emax)) = (emin, emax) else { return Some(2) };
    if vmin > emax {
        Some(1)
    } else if vmax < emin {
        Some(2)
    } else if fv.iter().all(|x| fe.contains(x)) {
        Some(3)
    } else if fe.iter().all(|x| fv.contains(x)) {
        Some(4)
    } else if fv.iter().all(|x| x % 2 != 0) && fe.iter().all(|x| x % 2 == 0) {
        Some(5)
    } else {
        None
    }
}

fn six_c(r: &mut VerificationReport, g: &Graph, fv: &[i64], fe: &[i64], p: i64, q: i64) {
    if g.bipartition().is_none() {
        r.fail("bipartite", "odd cycle");
    }
    bijection(r, fv, fe, 1, p + q);
    let diff: Vec<i64> = g.edges().iter().map(|&(u, v)| (fv[u] - fv[v]).abs()).collect();
    let top = p + q + 1;

    let magic: Vec<i64> = fe.iter().zip(&diff).map(|(a, b)| a + b).collect();
    constant(r, "e-magic", "k", &magic, None);

    // ee-difference: prefer a partner other than the edge itself
    let mut partner = vec![None; fe.len()];
    let mut used = 0;
    for e in 0..fe.len() {
        let direct = |x: usize| diff[x] == fe[e];
        let alt = |x: usize| top - diff[x] == fe[e];
        let pick = (0..fe.len())
            .filter(|&x| x != e)
            .find(|&x| direct(x))
            .map(|x| (x, 1))
            .or_else(|| (0..fe.len()).filter(|&x| x != e).find(|&x| alt(x)).map(|x| (x, 2)))
            .or_else(|| direct(e).then_some((e, 1)))
            .or_else(|| alt(e).then_some((e, 2)));
        match pick {
            Some((x, how)) => {
                partner[e] = Some(x);
                used |= how;
            }
            None => r.fail("ee-difference", format!("edge {e} label {}", fe[e])),
        }
    }
    if partner.iter().all(Option::is_some) {
        let involution = (0..fe.len()).all(|e| partner[partner[e].unwrap()] == Some(e));
        r.values.insert("ee_alternatives".into(), used);
        r.values.insert("ee_involution".into(), involution as i64);
    }

    let s: Vec<i64> = diff.iter().zip(fe).map(|(d, x)| d - x).collect();
    match balanced(&s, top) {
        Some((k1, how)) => {
            r.values.insert("k_prime".into(), k1);
            r.values.insert("balance_alternatives".into(), how);
        }
        None if s.is_empty() => {}
        None => r.fail("ee-balanced", "no constant k′ pairs every edge"),
    }

    match ev_ordered(fv, fe) {
        Some(a) => {
            r.values.insert("ev_alternative".into(), a);
        }
        None => r.fail("ev-ordered", "none of the five orderings holds"),
    }

    let z0 = top / 2;
    r.values.insert("singularity".into(), z0);
    let k2 = fe.first().and_then(|&x| {
        let mut cands: Vec<i64> = fv.iter().map(|w| x + w).collect();
        cands.sort_unstable();
        cands.into_iter().find(|&k| {
            fe.iter().all(|e| fv.iter().any(|w| e + w == k))
                && fv.iter().filter(|&&w| w != z0).all(|w| fe.iter().any(|e| e + w == k))
        })
    });
    match k2 {
        Some(k) => {
            r.values.insert("k_double_prime".into(), k);
        }
        None if fe.is_empty() => {}
        None => r.fail("ve-matching", "no constant k″ matches edges and vertices"),
    }

    set_ordered(r, g, fv);
}

fn odd_six_c(r: &mut VerificationReport, g: &Graph, fv: &[i64], fe: &[i64], p: i64, q: i64) {
    let all: Vec<i64> = fv.iter().chain(fe).copied().collect();
    injective(r, &all);
    if let Some(x) = all.iter().find(|x| !(1..=4 * q - 1).contains(*x)) {
        r.fail("range", format!("label {x} outside [1,{}]", 4 * q - 1));
    }
    let diff: Vec<i64> = g.edges().iter().map(|&(u, v)| (fv[u] - fv[v]).abs()).collect();

    let magic: Vec<i64> = fe.iter().zip(&diff).map(|(a, b)| a + b).collect();
    constant(r, "e-magic", "k", &magic, None);
    if let Some(e) = fe.iter().position(|x| x % 2 == 0) {
        r.fail("e-magic", format!("edge {e} label {} is even", fe[e]));
    }

    for (e, &x) in fe.iter().enumerate() {
        r.check(diff.iter().any(|&d| x == 2 * q + d), "ee-difference", || format!("edge {e} label {x}"));
    }

    let s: Vec<i64> = diff.iter().zip(fe).map(|(d, x)| d - x).collect();
    match balanced(&s, p + q + 1) {
        Some((k1, how)) => {
            r.values.insert("k_prime".into(), k1);
            r.values.insert("balance_alternatives".into(), how);
        }
        None if s.is_empty() => {}
        None => r.fail("ee-balanced", "no constant k′ pairs every edge"),
    }

    if let (Some(vmax), Some(emin)) = (fv.iter().max(), fe.iter().min()) {
        r.check(vmax < emin, "ev-ordered", || format!("max vertex {vmax} ≥ min edge {emin}"));
    }
    let mut diffs = pairwise_differences(fv);
    diffs.dedup();
    r.check(diffs == (1..=2 * q - 1).collect::<Vec<_>>(), "ev-ordered", || {
        "vertex differences do not fill [1,2q−1]".into()
    });

    // two constants k1 ≤ k2 cover every edge
    let covers = |k: i64, e: i64| fv.iter().any(|w| e + w == k);
    let found = fe.first().and_then(|&x0| {
        fv.iter().map(|w| x0 + w).find_map(|k1| {
            let rest: Vec<i64> = fe.iter().copied().filter(|&e| !covers(k1, e)).collect();
            match rest.first() {
                None => Some((k1, k1)),
                Some(&y) => fv
                    .iter()
                    .map(|w| y + w)
                    .find(|&k2| rest.iter().all(|&e| covers(k2, e)))
                    .map(|k2| (k1.min(k2), k1.max(k2))),
            }
        })
    });
    match found {
        Some((k1, k2)) => {
            r.values.insert("k1".into(), k1);
            r.values.insert("k2".into(), k2);
        }
        None if fe.is_empty() => {}
        None => r.fail("ve-matching", "two constants do not cover every edge"),
    }

    set_ordered(r, g, fv);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn report(g: &Graph, v: &[i64], s: Scheme) -> VerificationReport {
        verify(g, &Labelling::from_vertices(g, v), &s).unwrap()
    }

    #[test]
    fn k2_graceful() {
        let g = generate::path(2);
        assert!(report(&g, &[0, 1], Scheme::Graceful).pass);
        assert!(report(&g, &[0, 1], Scheme::SetOrderedOddGraceful).pass);
    }

    #[test]
    fn path_graceful_and_failures() {
        let g = generate::path(4);
        assert!(report(&g, &[0, 3, 1, 2], Scheme::Graceful).pass);
        let bad = report(&g, &[0, 1, 2, 3], Scheme::Graceful);
        assert!(!bad.pass && bad.violates("edge-set"));
        let dup = report(&g, &[0, 3, 0, 2], Scheme::Graceful);
        assert!(dup.violates("injective"));
    }

    #[test]
    fn missing_label_is_error() {
        let g = generate::path(2);
        let mut l = Labelling::empty(&g);
        l.vertex[0] = Some(0);
        assert!(matches!(verify(&g, &l, &Scheme::Graceful), Err(Error::MissingLabel(_))));
    }

    #[test]
    fn edge_label_must_agree() {
        let g = generate::path(2);
        let l = Labelling::total(&g, &[0, 1], &[2]);
        assert!(verify(&g, &l, &Scheme::Graceful).unwrap().violates("edge-label"));
    }

    #[test]
    fn odd_six_c_on_k2() {
        let g = generate::path(2);
        let l = Labelling::total(&g, &[1, 2], &[3]);
        let r = verify(&g, &l, &Scheme::OddSixC).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn edge_magic_total_path() {
        // 1+5+3 = 3+4+2 = 9
        let g = generate::path(3);
        let l = Labelling::total(&g, &[1, 3, 2], &[5, 4]);
        let r = verify(&g, &l, &Scheme::EdgeMagicTotal { k: None, super_: true }).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.value("k"), Some(9));
    }
}
