//! The counting refutation: the per-edge cycle-count equations
//! `Σ δ_i(e) n_i = m`, together with `Σ n_i = km/2`, checked for residue
//! infeasibility mod 2 and mod 4 and, failing that, by exhaustion over the
//! box `0 ≤ n_i ≤ m`.

use crate::decomp::feasibility::{delta_rows, search_counts};
use crate::decomp::{CountingDetail, Refutation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::{enumerate_hamilton_cycles, HamiltonCycleSet};
use crate::{BudgetMeter, SearchBudget};

/// Looks for a proof that no nonnegative integer cycle-count vector meets
/// every edge equation exactly. `k·m` must be even (otherwise the equations
/// do not hold with equality). Absent when a count vector exists.
pub fn counting_obstruction(
    x: &Graph,
    m: usize,
    budget: &SearchBudget,
) -> Result<Option<Refutation>> {
    if m == 0 {
        return Err(Error::BadMultiplicity);
    }
    let k = x.regular_valency().ok_or(Error::NotRegular)?;
    if (k * m) % 2 != 0 {
        return Err(Error::Precondition(
            "the equality system requires k·m to be even".into(),
        ));
    }
    let t = k * m / 2;
    let cycles = enumerate_hamilton_cycles(x, budget)?;
    let detail = |modulus| {
        Refutation::CountingObstruction(CountingDetail {
            modulus,
            edge_deltas: delta_rows(&cycles.masks, x.edge_count()),
            edge_target: m as u64,
            cycle_total: t as u64,
        })
    };
    if let Some(modulus) = modular_obstruction(&cycles, m, t) {
        return Ok(Some(detail(Some(modulus))));
    }
    let mut meter = BudgetMeter::new(budget);
    match search_counts(x, &cycles.masks, m, t, true, &mut meter)? {
        Some(_) => Ok(None),
        None => Ok(Some(detail(None))),
    }
}

/// Smallest of the moduli 2, 4 in which the per-edge equality system is
/// infeasible. Only the edge equations are used, so the modulus reported is
/// meaningful for integral (possibly negative) solutions too.
pub(crate) fn modular_obstruction(cycles: &HamiltonCycleSet, m: usize, _t: usize) -> Option<u32> {
    let rows: Vec<(Vec<u64>, u64)> = delta_rows(&cycles.masks, cycles.base.edge_count())
        .iter()
        .map(|row| (row.iter().map(|&d| d as u64).collect(), m as u64))
        .collect();
    if !solvable_mod2(&rows) {
        Some(2)
    } else if !solvable_mod4(&rows) {
        Some(4)
    } else {
        None
    }
}

/// Edge rows plus the all-ones total row, with right-hand sides.
fn system_rows(edge_deltas: &[Vec<u8>], vars: usize, m: u64, t: u64) -> Vec<(Vec<u64>, u64)> {
    let mut rows: Vec<(Vec<u64>, u64)> = edge_deltas
        .iter()
        .map(|row| (row.iter().map(|&d| d as u64).collect(), m))
        .collect();
    rows.push((vec![1; vars], t));
    rows
}

fn solvable_mod2(rows: &[(Vec<u64>, u64)]) -> bool {
    let mut rows: Vec<(Vec<u64>, u64)> = rows
        .iter()
        .map(|(r, b)| (r.iter().map(|&x| x % 2).collect(), b % 2))
        .collect();
    let vars = rows.first().map_or(0, |(r, _)| r.len());
    let mut pivot_row = 0;
    for col in 0..vars {
        let Some(i) = (pivot_row..rows.len()).find(|&i| rows[i].0[col] == 1) else {
            continue;
        };
        rows.swap(pivot_row, i);
        let (pr, pb) = rows[pivot_row].clone();
        for (i, (r, b)) in rows.iter_mut().enumerate() {
            if i != pivot_row && r[col] == 1 {
                for (x, &p) in r.iter_mut().zip(&pr) {
                    *x ^= p;
                }
                *b ^= pb;
            }
        }
        pivot_row += 1;
    }
    rows.iter()
        .all(|(r, b)| *b == 0 || r.iter().any(|&x| x != 0))
}

/// Elimination over Z/4: pivot on unit entries; rows left with only even
/// entries drop to a GF(2) system after division by 2.
fn solvable_mod4(rows: &[(Vec<u64>, u64)]) -> bool {
    let mut rows: Vec<(Vec<u64>, u64)> = rows
        .iter()
        .map(|(r, b)| (r.iter().map(|&x| x % 4).collect(), b % 4))
        .collect();
    let vars = rows.first().map_or(0, |(r, _)| r.len());
    let mut pivot_row = 0;
    for col in 0..vars {
        let Some(i) = (pivot_row..rows.len()).find(|&i| rows[i].0[col] % 2 == 1) else {
            continue;
        };
        rows.swap(pivot_row, i);
        // Normalize the pivot to 1 (3 is its own inverse mod 4).
        let inv = if rows[pivot_row].0[col] == 3 { 3 } else { 1 };
        for x in &mut rows[pivot_row].0 {
            *x = *x * inv % 4;
        }
        rows[pivot_row].1 = rows[pivot_row].1 * inv % 4;
        let (pr, pb) = rows[pivot_row].clone();
        for (i, (r, b)) in rows.iter_mut().enumerate() {
            if i != pivot_row && r[col] != 0 {
                let factor = r[col];
                for (x, &p) in r.iter_mut().zip(&pr) {
                    *x = (*x + (4 - p * factor % 4)) % 4;
                }
                *b = (*b + (4 - pb * factor % 4)) % 4;
            }
        }
        pivot_row += 1;
    }
    // Remaining rows have only even coefficients.
    let residual: Vec<(Vec<u64>, u64)> = rows[pivot_row..]
        .iter()
        .filter(|(r, b)| *b != 0 || r.iter().any(|&x| x != 0))
        .map(|(r, b)| {
            if b % 2 == 1 {
                (Vec::new(), 1) // odd rhs with even coefficients: infeasible
            } else {
                (r.iter().map(|&x| x / 2).collect(), b / 2)
            }
        })
        .collect();
    if residual.iter().any(|(r, b)| r.is_empty() && *b == 1) {
        return false;
    }
    residual.is_empty() || solvable_mod2(&residual)
}

/// Re-checks a counting refutation from its stored matrix alone: brute force
/// over residues for a modular detail, depth-first box exhaustion otherwise.
pub fn verify_counting_detail(detail: &CountingDetail) -> bool {
    let vars = detail.edge_deltas.first().map_or(0, |r| r.len());
    match detail.modulus {
        Some(mu) => {
            let mu = mu as u64;
            if (mu as f64).powi(vars as i32) <= 2e7 {
                !residue_dfs(detail, &mut vec![0; vars], 0, mu)
            } else {
                let rows = system_rows(
                    &detail.edge_deltas,
                    vars,
                    detail.edge_target,
                    detail.cycle_total,
                );
                match mu {
                    2 => !solvable_mod2(&rows),
                    4 => !solvable_mod4(&rows),
                    _ => false,
                }
            }
        }
        None => !box_dfs(detail, &mut vec![0; vars], 0, detail.cycle_total),
    }
}

/// True when some residue vector satisfies every equation mod `mu`.
fn residue_dfs(detail: &CountingDetail, n: &mut Vec<u64>, i: usize, mu: u64) -> bool {
    if i == n.len() {
        let total: u64 = n.iter().sum();
        return total % mu == detail.cycle_total % mu
            && detail.edge_deltas.iter().all(|row| {
                let s: u64 = row.iter().zip(n.iter()).map(|(&d, &x)| d as u64 * x).sum();
                s % mu == detail.edge_target % mu
            });
    }
    (0..mu).any(|v| {
        n[i] = v;
        residue_dfs(detail, n, i + 1, mu)
    })
}

/// True when some vector in the box `0..=m` solves the system exactly.
fn box_dfs(detail: &CountingDetail, n: &mut Vec<u64>, i: usize, remaining: u64) -> bool {
    if i == n.len() {
        return remaining == 0
            && detail.edge_deltas.iter().all(|row| {
                let s: u64 = row.iter().zip(n.iter()).map(|(&d, &x)| d as u64 * x).sum();
                s == detail.edge_target
            });
    }
    // Partial per-edge sums may never exceed the target.
    let cap = detail.edge_target.min(remaining);
    (0..=cap).any(|v| {
        n[i] = v;
        let ok = detail.edge_deltas.iter().all(|row| {
            let s: u64 = row[..=i]
                .iter()
                .zip(n[..=i].iter())
                .map(|(&d, &x)| d as u64 * x)
                .sum();
            s <= detail.edge_target
        });
        ok && box_dfs(detail, n, i + 1, remaining - v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, Catalog};

    fn obstruction(name: &str, m: usize) -> Option<Refutation> {
        let catalog = Catalog::builtin();
        counting_obstruction(
            &catalog.get(name).unwrap().graph,
            m,
            &SearchBudget::default(),
        )
        .unwrap()
    }

    #[test]
    fn cube_at_m2_is_blocked_mod_4() {
        match obstruction("F8", 2) {
            Some(Refutation::CountingObstruction(detail)) => {
                assert_eq!(detail.modulus, Some(4));
                assert_eq!(detail.edge_deltas.len(), 12);
                assert_eq!(detail.edge_deltas[0].len(), 6);
                assert!(verify_counting_detail(&detail));
            }
            other => panic!("expected an obstruction, got {:?}", other),
        }
    }

    #[test]
    fn cube_at_m4_is_not_blocked() {
        assert!(obstruction("F8", 4).is_none());
    }

    #[test]
    fn k4_is_never_blocked_at_even_m() {
        let k4 = complete_graph(4);
        for m in [2, 4, 6] {
            assert!(counting_obstruction(&k4, m, &SearchBudget::default())
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn odd_km_is_rejected() {
        let k4 = complete_graph(4);
        assert!(counting_obstruction(&k4, 1, &SearchBudget::default()).is_err());
    }

    #[test]
    fn petersen_is_blocked_trivially() {
        // No Hamilton cycles at all: the empty system cannot reach the
        // targets in any modulus.
        let detail = obstruction("F10", 2);
        assert!(matches!(
            detail,
            Some(Refutation::CountingObstruction(_))
        ));
    }

    #[test]
    fn mod2_solver_basics() {
        // x + y = 1, x = 1, y = 1 is infeasible mod 2.
        let rows = vec![
            (vec![1, 1], 1u64),
            (vec![1, 0], 1),
            (vec![0, 1], 1),
        ];
        assert!(!solvable_mod2(&rows));
        // Drop the last equation and it becomes feasible.
        assert!(solvable_mod2(&rows[..2]));
    }

    #[test]
    fn mod4_solver_basics() {
        // 2x = 2 is feasible (x = 1); 2x = 1 is not.
        assert!(solvable_mod4(&[(vec![2], 2u64)]));
        assert!(!solvable_mod4(&[(vec![2], 1u64)]));
        // x + 2y = 3 with x = 1 forces 2y = 2, feasible.
        assert!(solvable_mod4(&[(vec![1, 2], 3u64), (vec![1, 0], 1)]));
        // x = 1 and x = 3 clash.
        assert!(!solvable_mod4(&[(vec![1, 0], 1u64), (vec![1, 0], 3)]));
    }
}
