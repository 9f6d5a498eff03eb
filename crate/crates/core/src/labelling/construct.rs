use super::verify::set_ordered_threshold;
use super::{verify, Labelling, Scheme};
use crate::error::{Error, Result};
use crate::graph::{spine_of, Graph, VertexId};
use std::collections::{BTreeMap, BTreeSet};

/// A graph built by merging equal-labelled vertices of two labelled graphs,
/// with the labels carried over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coincided {
    pub graph: Graph,
    pub vertex_labels: Vec<i64>,
    pub edge_labels: Vec<i64>,
}

/// Vertex labels plus the low/high sides of a set-ordered labelling, each
/// side sorted by label. Fails unless `f` passes the set-ordered scheme.
pub fn set_ordered_sides(
    t: &Graph,
    f: &Labelling,
    odd: bool,
) -> Result<(Vec<i64>, Vec<VertexId>, Vec<VertexId>)> {
    let scheme = if odd { Scheme::SetOrderedOddGraceful } else { Scheme::SetOrderedGraceful };
    let f = Labelling { edge: vec![None; t.q()], ..f.clone() };
    if !verify(t, &f, &scheme)?.pass {
        return Err(Error::NotSetOrdered);
    }
    let fv = f.vertex_values()?;
    let cut = set_ordered_threshold(t, &fv).ok_or(Error::NotSetOrdered)?;
    let mut order: Vec<VertexId> = (0..t.n()).collect();
    order.sort_by_key(|&v| fv[v]);
    let (x, y): (Vec<_>, Vec<_>) = order.into_iter().partition(|&v| fv[v] <= cut);
    Ok((fv, x, y))
}

/// Lays the caterpillar out on two rows without crossings, walking the
/// spine and dropping each spine vertex's leaves on the opposite row. The
/// top row is numbered 0,1,… left to right and the bottom row p−1,p−2,…;
/// consecutive edges in the layout then have differences q, q−1, …, 1.
pub fn caterpillar_set_ordered_graceful(t: &Graph) -> Result<Labelling> {
    let spine = spine_of(t)?;
    let p = t.n() as i64;
    let mut rows: [Vec<VertexId>; 2] = [vec![spine[0]], Vec::new()];
    for (i, &v) in spine.iter().enumerate() {
        let side = i % 2;
        let leaves = t.neighbors(v).into_iter().filter(|&w| t.degree(w) == 1 && !spine.contains(&w));
        rows[1 - side].extend(leaves);
        if let Some(&next) = spine.get(i + 1) {
            rows[1 - side].push(next);
        }
    }
    let mut f = vec![0i64; t.n()];
    for (j, &v) in rows[0].iter().enumerate() {
        f[v] = j as i64;
    }
    for (j, &v) in rows[1].iter().enumerate() {
        f[v] = p - 1 - j as i64;
    }
    Labelling::from_vertices(t, &f).with_scheme(Scheme::SetOrderedGraceful).with_difference_edges(t)
}

/// Doubles the low side and maps the high side to 2f−1; every difference d
/// becomes 2d−1.
pub fn graceful_to_odd_graceful(t: &Graph, f: &Labelling) -> Result<Labelling> {
    let (fv, _, y) = set_ordered_sides(t, f, false)?;
    let out: Vec<i64> = (0..t.n()).map(|v| if y.contains(&v) { 2 * fv[v] - 1 } else { 2 * fv[v] }).collect();
    Labelling::from_vertices(t, &out).with_scheme(Scheme::SetOrderedOddGraceful).with_difference_edges(t)
}

/// Hangs `plan[v]` new leaves on each listed vertex and relabels so the
/// result is odd-graceful. New leaf edges take 1,3,5,… first on the low side
/// (ascending), then on the high side (descending); old high labels shift
/// up by 2M where M is the number of new leaves.
pub fn extend_caterpillar_to_lobster(
    t: &Graph,
    g: &Labelling,
    plan: &BTreeMap<VertexId, usize>,
) -> Result<(Graph, Labelling)> {
    if let Some((&v, _)) = plan.iter().find(|(&v, _)| v >= t.n()) {
        return Err(Error::PlanTargetsUnknownVertex(v));
    }
    let (gv, x, y) = set_ordered_sides(t, g, true)?;
    let m: i64 = plan.values().map(|&c| c as i64).sum();
    let mut out = t.clone();
    let mut f: Vec<i64> = (0..t.n()).map(|v| if y.contains(&v) { gv[v] + 2 * m } else { gv[v] }).collect();
    let mut edge = 1;
    for &v in &x {
        for _ in 0..plan.get(&v).copied().unwrap_or(0) {
            let w = out.add_vertex();
            out.add_edge(v, w)?;
            f.push(f[v] + edge);
            edge += 2;
        }
    }
    for &v in y.iter().rev() {
        for _ in 0..plan.get(&v).copied().unwrap_or(0) {
            let w = out.add_vertex();
            out.add_edge(v, w)?;
            f.push(f[v] - edge);
            edge += 2;
        }
    }
    let l = Labelling::from_vertices(&out, &f).with_scheme(Scheme::OddGraceful).with_difference_edges(&out)?;
    Ok((out, l))
}

/// Reflects each side of a set-ordered labelling within its own range. The
/// image keeps set-orderedness and f(uv)+g(uv) is constant; the constant is
/// returned alongside (q+1 for graceful input).
pub fn image_labelling(t: &Graph, f: &Labelling) -> Result<(Labelling, i64)> {
    image_with(t, f, false, Scheme::SetOrderedGraceful)
}

/// The same reflection for set-ordered odd-graceful input; the constant is 2q.
pub fn odd_image_labelling(t: &Graph, f: &Labelling) -> Result<(Labelling, i64)> {
    image_with(t, f, true, Scheme::SetOrderedOddGraceful)
}

fn image_with(t: &Graph, f: &Labelling, odd: bool, scheme: Scheme) -> Result<(Labelling, i64)> {
    let (fv, x, y) = set_ordered_sides(t, f, odd)?;
    let span = |side: &[VertexId]| match (side.first(), side.last()) {
        (Some(&a), Some(&b)) => fv[a] + fv[b],
        _ => 0,
    };
    let (sx, sy) = (span(&x), span(&y));
    let g: Vec<i64> = (0..t.n()).map(|v| if y.contains(&v) { sy - fv[v] } else { sx - fv[v] }).collect();
    let g = Labelling::from_vertices(t, &g).with_scheme(scheme).with_difference_edges(t)?;
    Ok((g, sy - sx))
}

/// The edge-magic total labelling behind the inverse-matching construction:
/// low side f+1, high side mirrored into s+p−f, edges f+p.
fn edge_magic_shift(t: &Graph, f: &Labelling) -> Result<Labelling> {
    let (fv, x, y) = set_ordered_sides(t, f, false)?;
    let p = t.n() as i64;
    let s = x.len() as i64;
    let vertex: Vec<i64> = (0..t.n()).map(|v| if y.contains(&v) { s + p - fv[v] } else { fv[v] + 1 }).collect();
    let edge: Vec<i64> = t.edges().iter().map(|&(a, b)| (fv[a] - fv[b]).abs() + p).collect();
    Ok(Labelling::total(t, &vertex, &edge).with_scheme(Scheme::EdgeMagicTotal { k: Some(2 * p + s + 1), super_: true }))
}

/// g1 on the first tree, h2 = 2p − g2 on the second. The vertex labels of
/// one fill the edge labels of the other, sharing only p.
pub fn reciprocal_inverse_pair(
    t1: &Graph,
    f1: &Labelling,
    t2: &Graph,
    f2: &Labelling,
) -> Result<(Labelling, Labelling)> {
    if t1.n() != t2.n() {
        return Err(Error::SizeMismatch(format!("{} vs {} vertices", t1.n(), t2.n())));
    }
    let p = t1.n() as i64;
    let g1 = edge_magic_shift(t1, f1)?;
    let g2 = edge_magic_shift(t2, f2)?;
    let flip = |x: &Option<i64>| x.map(|x| 2 * p - x);
    let h2 = Labelling {
        vertex: g2.vertex.iter().map(flip).collect(),
        edge: g2.edge.iter().map(flip).collect(),
        scheme: None,
    };
    Ok((g1, h2))
}

/// Vertices p+f, edges p−f(uv): vertex labels sit above the edge labels and
/// f(uv)+|f(u)−f(v)| = p.
pub fn six_c_from_set_ordered_graceful(t: &Graph, f: &Labelling) -> Result<Labelling> {
    let (fv, _, _) = set_ordered_sides(t, f, false)?;
    let p = t.n() as i64;
    let vertex: Vec<i64> = fv.iter().map(|x| p + x).collect();
    let edge: Vec<i64> = t.edges().iter().map(|&(a, b)| p - (fv[a] - fv[b]).abs()).collect();
    Ok(Labelling::total(t, &vertex, &edge).with_scheme(Scheme::SixC))
}

/// The mirror arrangement: vertices f+1, edges 2p−f(uv). Paired with the
/// labelling above on another tree of the same order it forms a
/// complementary matching around p.
pub fn six_c_partner_from_set_ordered_graceful(t: &Graph, f: &Labelling) -> Result<Labelling> {
    let (fv, _, _) = set_ordered_sides(t, f, false)?;
    let p = t.n() as i64;
    let vertex: Vec<i64> = fv.iter().map(|x| x + 1).collect();
    let edge: Vec<i64> = t.edges().iter().map(|&(a, b)| 2 * p - (fv[a] - fv[b]).abs()).collect();
    Ok(Labelling::total(t, &vertex, &edge).with_scheme(Scheme::SixC))
}

fn value_set(xs: &[i64]) -> BTreeSet<i64> {
    xs.iter().copied().collect()
}

/// Checks the complementarity conditions around z0 = ⌊(p+q+1)/2⌋ and glues
/// the two z0-labelled vertices together.
pub fn six_c_complementary_matching(
    g: &Graph,
    f: &Labelling,
    h: &Graph,
    f2: &Labelling,
) -> Result<Coincided> {
    let z0 = (g.n() + g.q() + 1) as i64 / 2;
    let (gv, ge) = (value_set(&f.vertex_values()?), value_set(&f.edge_values()?));
    let (hv, he) = (value_set(&f2.vertex_values()?), value_set(&f2.edge_values()?));
    let only_z0 = BTreeSet::from([z0]);
    let mut bad: BTreeSet<i64> = BTreeSet::new();
    let gv_minus: BTreeSet<i64> = gv.difference(&only_z0).copied().collect();
    let hv_minus: BTreeSet<i64> = hv.difference(&only_z0).copied().collect();
    bad.extend(gv_minus.symmetric_difference(&he));
    bad.extend(ge.symmetric_difference(&hv_minus));
    bad.extend(gv.intersection(&hv).filter(|&&x| x != z0));
    if !gv.contains(&z0) || !hv.contains(&z0) {
        bad.insert(z0);
    }
    if !bad.is_empty() {
        return Err(Error::ComplementarityViolation(bad.into_iter().collect()));
    }
    glue(g, f, h, f2, |x| x == z0)
}

/// Disjoint union where H-vertices whose label passes `merge` and also
/// appears in G are identified with that G-vertex.
fn glue(g: &Graph, f: &Labelling, h: &Graph, f2: &Labelling, merge: impl Fn(i64) -> bool) -> Result<Coincided> {
    let fv = f.vertex_values()?;
    let hv = f2.vertex_values()?;
    let mut out = g.clone();
    let mut labels = fv.clone();
    let mut map = Vec::with_capacity(h.n());
    for &x in &hv {
        let target = if merge(x) { fv.iter().position(|&y| y == x) } else { None };
        map.push(match target {
            Some(v) => v,
            None => {
                labels.push(x);
                out.add_vertex()
            }
        });
    }
    let mut edge_labels = match f.edge_values() {
        Ok(e) => e,
        Err(_) => g.edges().iter().map(|&(a, b)| (fv[a] - fv[b]).abs()).collect(),
    };
    let h_edges = match f2.edge_values() {
        Ok(e) => e,
        Err(_) => h.edges().iter().map(|&(a, b)| (hv[a] - hv[b]).abs()).collect(),
    };
    for (&(a, b), x) in h.edges().iter().zip(h_edges) {
        out.add_edge(map[a], map[b])?;
        edge_labels.push(x);
    }
    Ok(Coincided { graph: out, vertex_labels: labels, edge_labels })
}

/// Validates a twin pair (f odd-graceful on G; f′ on H within [0,2q] with
/// edge differences exactly the odd range) and builds G⊙H by merging every
/// pair of equal labels.
pub fn twin_odd_graceful(g: &Graph, f: &Labelling, h: &Graph, f2: &Labelling) -> Result<Coincided> {
    let q = g.q() as i64;
    let fg = Labelling { edge: vec![None; g.q()], ..f.clone() };
    if !verify(g, &fg, &Scheme::OddGraceful)?.pass {
        return Err(Error::EdgeSetMismatch("first labelling is not odd-graceful".into()));
    }
    let hv = f2.vertex_values()?;
    if hv.iter().any(|x| !(0..=2 * q).contains(x)) || value_set(&hv).len() != hv.len() {
        return Err(Error::EdgeSetMismatch("second labelling leaves [0,2q] or repeats".into()));
    }
    let mut diffs: Vec<i64> = h.edges().iter().map(|&(a, b)| (hv[a] - hv[b]).abs()).collect();
    diffs.sort_unstable();
    let odd: Vec<i64> = (1..=q).map(|i| 2 * i - 1).collect();
    if diffs != odd {
        return Err(Error::EdgeSetMismatch(format!("edge labels {diffs:?}")));
    }
    glue(g, &fg, h, &Labelling { edge: vec![None; h.q()], ..f2.clone() }, |_| true)
}

/// Labellings equivalent to a set-ordered graceful one, keyed by name, each
/// paired with the scheme it should pass. (k, d) parametrise the graceful
/// and arithmetic members.
pub fn equivalence_suite(
    t: &Graph,
    f: &Labelling,
    k: i64,
    d: i64,
) -> Result<BTreeMap<&'static str, (Scheme, Labelling)>> {
    let (fv, x, y) = set_ordered_sides(t, f, false)?;
    let p = t.n() as i64;
    let q = t.q() as i64;
    let s = x.len() as i64;
    let high = |v: VertexId| y.contains(&v);
    let alpha: Vec<i64> = (0..t.n()).map(|v| if high(v) { fv[v] } else { s - 1 - fv[v] }).collect();
    let vertex_map = |rule: &dyn Fn(VertexId) -> i64| -> Vec<i64> { (0..t.n()).map(rule).collect() };
    let diff = |e: usize| {
        let (a, b) = t.edge(e);
        (fv[a] - fv[b]).abs()
    };
    let mut out = BTreeMap::new();

    out.insert("felicitous", (Scheme::Felicitous, Labelling::from_vertices(t, &alpha)));
    let m = q.max(1);
    let harmonious: Vec<i64> = alpha.iter().map(|a| a.rem_euclid(m)).collect();
    out.insert("harmonious", (Scheme::Harmonious, Labelling::from_vertices(t, &harmonious)));

    let beta = vertex_map(&|v| if high(v) { d * fv[v] + k - d } else { d * fv[v] });
    out.insert("kd-graceful", (Scheme::KdGraceful { k, d }, Labelling::from_vertices(t, &beta)));

    let psi = vertex_map(&|v| if high(v) { d * alpha[v] + k - d * s } else { d * alpha[v] });
    out.insert("kd-arithmetic", (Scheme::KdArithmetic { k, d }, Labelling::from_vertices(t, &psi)));

    let gamma_v = vertex_map(&|v| if high(v) { s + p - fv[v] } else { fv[v] + 1 });
    let gamma_e: Vec<i64> = (0..t.q()).map(|e| diff(e) + p).collect();
    out.insert(
        "super-edge-magic-total",
        (Scheme::EdgeMagicTotal { k: Some(s + 2 * p + 1), super_: true }, Labelling::total(t, &gamma_v, &gamma_e)),
    );
    let theta_e: Vec<i64> = (0..t.q()).map(|e| 2 * p - diff(e)).collect();
    out.insert(
        "super-edge-antimagic-total",
        (
            Scheme::EdgeAntimagicTotal { k: s + p + 3, d: 2, super_: true },
            Labelling::total(t, &gamma_v, &theta_e),
        ),
    );

    let eta = vertex_map(&|v| if high(v) { 2 * (fv[v] - s) + 1 } else { 2 * (s - 1 - fv[v]) });
    out.insert("odd-elegant", (Scheme::OddElegant, Labelling::from_vertices(t, &eta)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn pair_is_zero_one() {
        let g = generate::path(2);
        let f = caterpillar_set_ordered_graceful(&g).unwrap();
        assert_eq!(f.vertex, vec![Some(0), Some(1)]);
        let odd = graceful_to_odd_graceful(&g, &f).unwrap();
        assert_eq!(odd.vertex, vec![Some(0), Some(1)]);
        assert_eq!(odd.edge, vec![Some(1)]);
    }

    #[test]
    fn star_and_path() {
        for g in [generate::star(5), generate::path(7), generate::caterpillar(&[2, 0, 3])] {
            let f = caterpillar_set_ordered_graceful(&g).unwrap();
            assert!(verify(&g, &f, &Scheme::SetOrderedGraceful).unwrap().pass);
        }
    }

    #[test]
    fn non_caterpillar_refused() {
        let g = generate::spider(&[2, 2, 2]);
        assert_eq!(caterpillar_set_ordered_graceful(&g), Err(Error::NotACaterpillar));
    }

    #[test]
    fn graceful_to_odd_needs_set_order() {
        let g = generate::path(5);
        // graceful, but 1-2 and 4-0-3 leave no separating threshold
        let f = Labelling::from_vertices(&g, &[1, 2, 4, 0, 3]);
        assert_eq!(graceful_to_odd_graceful(&g, &f), Err(Error::NotSetOrdered));
    }

    #[test]
    fn k2_inverse_pair() {
        let g = generate::path(2);
        let f = Labelling::from_vertices(&g, &[0, 1]);
        let (g1, h2) = reciprocal_inverse_pair(&g, &f, &g, &f).unwrap();
        assert_eq!(value_set(&g1.vertex_values().unwrap()), BTreeSet::from([1, 2]));
        assert_eq!(g1.edge_values().unwrap(), vec![3]);
        assert_eq!(value_set(&h2.vertex_values().unwrap()), BTreeSet::from([2, 3]));
        assert_eq!(h2.edge_values().unwrap(), vec![1]);
    }

    #[test]
    fn k2_super_edge_magic_constant() {
        let g = generate::path(2);
        let f = Labelling::from_vertices(&g, &[0, 1]);
        let suite = equivalence_suite(&g, &f, 1, 1).unwrap();
        let (scheme, l) = &suite["super-edge-magic-total"];
        assert_eq!(*scheme, Scheme::EdgeMagicTotal { k: Some(6), super_: true });
        assert!(verify(&g, l, scheme).unwrap().pass);
    }

    #[test]
    fn empty_plan_keeps_labels() {
        let g = generate::caterpillar(&[1, 2]);
        let f = graceful_to_odd_graceful(&g, &caterpillar_set_ordered_graceful(&g).unwrap()).unwrap();
        let (h, l) = extend_caterpillar_to_lobster(&g, &f, &BTreeMap::new()).unwrap();
        assert_eq!(h, g);
        assert_eq!(l.vertex, f.vertex);
        let plan = BTreeMap::from([(99, 1)]);
        assert_eq!(extend_caterpillar_to_lobster(&g, &f, &plan).unwrap_err(), Error::PlanTargetsUnknownVertex(99));
    }

    #[test]
    fn self_pair_is_not_complementary() {
        let g = generate::path(3);
        let f = caterpillar_set_ordered_graceful(&g).unwrap();
        let six = six_c_from_set_ordered_graceful(&g, &f).unwrap();
        assert!(matches!(
            six_c_complementary_matching(&g, &six, &g, &six),
            Err(Error::ComplementarityViolation(_))
        ));
    }

    #[test]
    fn twin_parity_mismatch() {
        let g = generate::path(2);
        let f = Labelling::from_vertices(&g, &[0, 1]);
        let h = generate::path(2);
        let bad = Labelling::from_vertices(&h, &[0, 2]);
        assert!(matches!(twin_odd_graceful(&g, &f, &h, &bad), Err(Error::EdgeSetMismatch(_))));
    }
}
