//! Reference rankers written directly from the method definitions with
//! plain loops. Each returns `(scores, order)`.

pub struct Vikor {
    pub s: Vec<f64>,
    pub r: Vec<f64>,
    pub q: Vec<f64>,
    pub order: Vec<usize>,
}

fn argsort(scores: &[f64], best_high: bool) -> Vec<usize> {
    // Selection sort; strict comparison keeps the lower index on ties.
    let m = scores.len();
    let mut used = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let mut pick: Option<usize> = None;
        for i in 0..m {
            if used[i] {
                continue;
            }
            pick = match pick {
                None => Some(i),
                Some(p) => {
                    let better = if best_high {
                        scores[i] > scores[p]
                    } else {
                        scores[i] < scores[p]
                    };
                    if better {
                        Some(i)
                    } else {
                        Some(p)
                    }
                }
            };
        }
        let p = pick.unwrap();
        used[p] = true;
        order.push(p);
    }
    order
}

fn col_min(q: &[Vec<f64>], j: usize) -> f64 {
    let mut v = q[0][j];
    for row in q {
        if row[j] < v {
            v = row[j];
        }
    }
    v
}

fn col_max(q: &[Vec<f64>], j: usize) -> f64 {
    let mut v = q[0][j];
    for row in q {
        if row[j] > v {
            v = row[j];
        }
    }
    v
}

pub fn saw(q: &[Vec<f64>], maximize: &[bool], w: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let m = q.len();
    let n = maximize.len();
    let mut phi = vec![0.0; m];
    for j in 0..n {
        let lo = col_min(q, j);
        let hi = col_max(q, j);
        for i in 0..m {
            let norm = if hi == lo {
                0.0
            } else if maximize[j] {
                (q[i][j] - lo) / (hi - lo)
            } else {
                (hi - q[i][j]) / (hi - lo)
            };
            phi[i] += w[j] * norm;
        }
    }
    let order = argsort(&phi, true);
    (phi, order)
}

pub fn topsis(q: &[Vec<f64>], maximize: &[bool], w: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let m = q.len();
    let n = maximize.len();
    let mut v = vec![vec![0.0; n]; m];
    for j in 0..n {
        let mut ss = 0.0;
        for i in 0..m {
            ss += q[i][j] * q[i][j];
        }
        let norm = ss.sqrt();
        for i in 0..m {
            v[i][j] = if norm == 0.0 { 0.0 } else { w[j] * (q[i][j] / norm) };
        }
    }
    let mut plus = vec![0.0; n];
    let mut minus = vec![0.0; n];
    for j in 0..n {
        let (lo, hi) = (col_min(&v, j), col_max(&v, j));
        if maximize[j] {
            plus[j] = hi;
            minus[j] = lo;
        } else {
            plus[j] = lo;
            minus[j] = hi;
        }
    }
    let mut c = vec![0.0; m];
    for i in 0..m {
        let mut dp = 0.0;
        let mut dn = 0.0;
        for j in 0..n {
            dp += (v[i][j] - plus[j]).powi(2);
            dn += (v[i][j] - minus[j]).powi(2);
        }
        let (dp, dn) = (dp.sqrt(), dn.sqrt());
        c[i] = if dp + dn == 0.0 { 0.5 } else { dn / (dp + dn) };
    }
    let order = argsort(&c, true);
    (c, order)
}

pub fn vikor(q: &[Vec<f64>], maximize: &[bool], w: &[f64], v: f64) -> Vikor {
    let m = q.len();
    let n = maximize.len();
    let mut s = vec![0.0; m];
    let mut r = vec![0.0; m];
    for j in 0..n {
        let (best, worst) = if maximize[j] {
            (col_max(q, j), col_min(q, j))
        } else {
            (col_min(q, j), col_max(q, j))
        };
        let span = (best - worst).abs();
        for i in 0..m {
            let t = if span == 0.0 {
                0.0
            } else {
                w[j] * (best - q[i][j]).abs() / span
            };
            s[i] += t;
            if t > r[i] {
                r[i] = t;
            }
        }
    }
    let s_star = s.iter().cloned().fold(f64::INFINITY, f64::min);
    let s_minus = s.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let r_star = r.iter().cloned().fold(f64::INFINITY, f64::min);
    let r_minus = r.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut qv = vec![0.0; m];
    for i in 0..m {
        let a = if s_minus == s_star {
            0.0
        } else {
            v * (s[i] - s_star) / (s_minus - s_star)
        };
        let b = if r_minus == r_star {
            0.0
        } else {
            (1.0 - v) * (r[i] - r_star) / (r_minus - r_star)
        };
        qv[i] = a + b;
    }
    let order = argsort(&qv, false);
    Vikor {
        s,
        r,
        q: qv,
        order,
    }
}

/// Acceptable advantage / stability rule: `(members, c1, c2)`.
pub fn compromise(vk: &Vikor) -> (Vec<usize>, bool, bool) {
    let m = vk.order.len();
    let first = vk.order[0];
    if m == 1 {
        return (vec![first], true, true);
    }
    let dq = 1.0 / (m as f64 - 1.0);
    let second = vk.order[1];
    let c1 = vk.q[second] - vk.q[first] >= dq;
    let s_min = vk.s.iter().cloned().fold(f64::INFINITY, f64::min);
    let r_min = vk.r.iter().cloned().fold(f64::INFINITY, f64::min);
    let c2 = vk.s[first] == s_min || vk.r[first] == r_min;
    let members = if c1 && c2 {
        vec![first]
    } else if c1 {
        vec![first, second]
    } else {
        let mut out = Vec::new();
        for &i in &vk.order {
            if vk.q[i] - vk.q[first] < dq {
                out.push(i);
            } else {
                break;
            }
        }
        out
    };
    (members, c1, c2)
}
