//! Brute-force oracles. Deliberately naive: plain enumeration or index-order
//! backtracking over adjacency matrices, sharing no code with the library.

#![allow(dead_code, clippy::needless_range_loop)]

use circmyc::Graph;

pub type Adj = Vec<Vec<bool>>;

pub fn adj(g: &Graph) -> Adj {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn edges(a: &Adj) -> Vec<(usize, usize)> {
    let n = a.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if a[u][v] {
                out.push((u, v));
            }
        }
    }
    out
}

/// Graph on `n` vertices whose edges are the set bits of `code` over the
/// pairs (0,1), (0,2), …, (n−2,n−1).
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut es = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                es.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, es).unwrap()
}

pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << pairs(n)).map(move |c| graph_from_code(n, c))
}

fn hom_from(a: &Adj, h: &Adj, map: &mut Vec<usize>) -> bool {
    let v = map.len();
    if v == a.len() {
        return true;
    }
    for x in 0..h.len() {
        if (0..v).all(|u| !a[u][v] || h[map[u]][x]) {
            map.push(x);
            if hom_from(a, h, map) {
                return true;
            }
            map.pop();
        }
    }
    false
}

pub fn hom_exists(a: &Adj, h: &Adj) -> bool {
    hom_from(a, h, &mut Vec::new())
}

/// Every homomorphism, by full enumeration; only for tiny graphs.
pub fn all_homs(a: &Adj, h: &Adj) -> Vec<Vec<usize>> {
    let (n, k) = (a.len(), h.len());
    let mut out = Vec::new();
    let total = k.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let map: Vec<usize> = (0..n)
            .map(|_| {
                let x = c % k;
                c /= k;
                x
            })
            .collect();
        if edges(a).iter().all(|&(u, v)| h[map[u]][map[v]]) {
            out.push(map);
        }
    }
    out
}

pub fn complete_adj(k: usize) -> Adj {
    (0..k).map(|i| (0..k).map(|j| i != j).collect()).collect()
}

pub fn circular_adj(p: usize, q: usize) -> Adj {
    (0..p)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let d = i.abs_diff(j);
                    q <= d && d <= p - q
                })
                .collect()
        })
        .collect()
}

pub fn chi(a: &Adj) -> usize {
    (0..=a.len()).find(|&k| hom_exists(a, &complete_adj(k))).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least p/q with p ≤ |V| admitting a homomorphism to K_{p/q}, found by
/// trying every reduced fraction with numerator at most |V|.
pub fn chi_c(a: &Adj) -> (usize, usize) {
    let n = a.len();
    let mut best: Option<(usize, usize)> = None;
    for p in 1..=n {
        for q in 1..=p {
            if gcd(p, q) != 1 || 2 * q > p && p != 1 {
                continue;
            }
            let better = best.is_none_or(|(bp, bq)| p * bq < bp * q);
            if better && hom_exists(a, &circular_adj(p, q)) {
                best = Some((p, q));
            }
        }
    }
    best.unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn is_independent(a: &Adj, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| !a[u][v]))
}

pub fn alpha(a: &Adj) -> usize {
    subsets(a.len())
        .filter(|s| is_independent(a, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn omega(a: &Adj) -> usize {
    subsets(a.len())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || a[u][v])))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Length of a shortest cycle, by searching simple paths that return home.
pub fn girth(a: &Adj) -> Option<usize> {
    fn walk(a: &Adj, start: usize, at: usize, seen: &mut Vec<bool>, len: usize, best: &mut Option<usize>) {
        for next in 0..a.len() {
            if !a[at][next] {
                continue;
            }
            if next == start && len >= 3 {
                *best = Some(best.map_or(len, |b: usize| b.min(len)));
            } else if next > start && !seen[next] {
                seen[next] = true;
                walk(a, start, next, seen, len + 1, best);
                seen[next] = false;
            }
        }
    }
    let mut best = None;
    for s in 0..a.len() {
        let mut seen = vec![false; a.len()];
        seen[s] = true;
        walk(a, s, s, &mut seen, 1, &mut best);
    }
    best
}

/// Edges uv with neither endpoint in or adjacent to `f`.
pub fn supp(a: &Adj, f: &[usize]) -> Vec<(usize, usize)> {
    edges(a)
        .into_iter()
        .filter(|&(u, v)| f.iter().all(|&x| x != u && x != v && !a[u][x] && !a[v][x]))
        .collect()
}

/// Largest independent set with at least one supporting edge (0 if none).
pub fn alpha_bar(a: &Adj) -> usize {
    subsets(a.len())
        .filter(|s| !s.is_empty() && is_independent(a, s) && !supp(a, s).is_empty())
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Every vertex v leaves an edge in G − N[v].
pub fn is_free_graph(a: &Adj) -> bool {
    let n = a.len();
    n > 0 && (0..n).all(|v| !supp(a, &[v]).is_empty())
}

/// Every partition of the vertices into non-empty independent classes.
pub fn independent_partitions(a: &Adj) -> Vec<Vec<Vec<usize>>> {
    fn go(a: &Adj, v: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == a.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..cur.len() {
            if cur[i].iter().all(|&u| !a[u][v]) {
                cur[i].push(v);
                go(a, v + 1, cur, out);
                cur[i].pop();
            }
        }
        cur.push(vec![v]);
        go(a, v + 1, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(a, 0, &mut Vec::new(), &mut out);
    out
}

/// Can each class get a support edge or be left unsupported, with at most
/// `spare` unsupported classes and every vertex meeting at most `cap`
/// chosen edges (counted with multiplicity)?
fn supportable(a: &Adj, classes: &[Vec<usize>], spare: usize, cap: Option<usize>) -> bool {
    fn go(options: &[Vec<(usize, usize)>], i: usize, spare: usize, cap: Option<usize>, load: &mut Vec<usize>) -> bool {
        if i == options.len() {
            return true;
        }
        if spare > 0 && go(options, i + 1, spare - 1, cap, load) {
            return true;
        }
        for &(u, v) in &options[i] {
            load[u] += 1;
            load[v] += 1;
            let ok = cap.is_none_or(|b| load[u] <= b && load[v] <= b);
            if ok && go(options, i + 1, spare, cap, load) {
                return true;
            }
            load[u] -= 1;
            load[v] -= 1;
        }
        false
    }
    let options: Vec<_> = classes.iter().map(|c| supp(a, c)).collect();
    go(&options, 0, spare, cap, &mut vec![0; a.len()])
}

/// φ^a_b by exhaustion over partitions; `cap = None` is φ when `spare = 0`.
pub fn phi_ab(a: &Adj, spare: usize, cap: Option<usize>) -> Option<usize> {
    independent_partitions(a)
        .iter()
        .filter(|p| supportable(a, p, spare, cap))
        .map(|p| p.len())
        .min()
}

/// α by include/exclude recursion in index order; fine up to ~25 vertices.
pub fn alpha_backtrack(a: &Adj) -> usize {
    fn go(a: &Adj, v: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if chosen.len() + (a.len() - v) <= *best {
            return;
        }
        if v == a.len() {
            *best = chosen.len();
            return;
        }
        if chosen.iter().all(|&u| !a[u][v]) {
            chosen.push(v);
            go(a, v + 1, chosen, best);
            chosen.pop();
        }
        go(a, v + 1, chosen, best);
    }
    let mut best = 0;
    go(a, 0, &mut Vec::new(), &mut best);
    best
}

/// Maximal independent sets containing `f`, by exhaustion.
pub fn maximal_independent_supersets(a: &Adj, f: &[usize]) -> Vec<Vec<usize>> {
    let n = a.len();
    subsets(n)
        .filter(|s| f.iter().all(|x| s.contains(x)) && is_independent(a, s))
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| a[u][v])))
        .collect()
}

pub fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc = 1i128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
