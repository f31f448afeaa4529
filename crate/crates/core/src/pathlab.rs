//! Brute-force enumeration oracles for every path-counting claim.
//!
//! These counters are deliberately exponential: they exist to check the
//! closed forms in [`crate::reflection`], not to be fast. Each enumerator
//! walks the step tree, prunes outside the admissible region, and then
//! re-validates every completed path against the region predicate from
//! scratch, so a bug in the pruning cannot silently leak through.
//!
//! A path lives on the N/E lattice from (0,0) to (n,n); its position is
//! tracked through w = y - x. The two-bound region is -s <= w <= m, with
//! either bound optional. Generalized paths use the three steps (0,2),
//! (1,1), (2,0); see [`ContactPolicy`] for how those interact with the
//! bounding lines.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Integer;

/// Cap on visited partial states per enumeration call. Desk-scale guard:
/// the oracles verify small instances, they never race the closed forms.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// Path region for N/E paths: endpoint (n,n), upper bound y - x <= m,
/// lower bound y - x >= -s; `None` means the bound is absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundSpec {
    pub n: u32,
    pub m: Option<u32>,
    pub s: Option<u32>,
}

impl BoundSpec {
    fn admits(&self, w: i64) -> bool {
        if let Some(m) = self.m {
            if w > m as i64 {
                return false;
            }
        }
        if let Some(s) = self.s {
            if w < -(s as i64) {
                return false;
            }
        }
        true
    }
}

/// Contact policy for generalized three-step paths.
///
/// `Strict` is the geometry behind the closed forms: the path stays between
/// the diagonal and the line y = x + m, and no (1,1) step may lie *on*
/// either bounding line (only lines at even height can host such a step;
/// touching a line at a single vertex is fine). `Weak` drops the diagonal
/// entirely and keeps only y - x <= m with steps on the line allowed, which
/// is the reading under which the unbounded count is a full triangle entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactPolicy {
    Weak,
    Strict,
}

/// Generalized path region: endpoint (n,n) reached by steps (0,2), (1,1),
/// (2,0), upper bound at distance m (optional), contact handling per policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenPathSpec {
    pub n: u32,
    pub m: Option<u32>,
    pub policy: ContactPolicy,
}

impl GenPathSpec {
    /// Is a step from w to w' (flat = (1,1)) admissible?
    fn admits_step(&self, w_new: i64, flat: bool) -> bool {
        match self.policy {
            ContactPolicy::Weak => match self.m {
                Some(m) => w_new <= m as i64,
                None => true,
            },
            ContactPolicy::Strict => {
                if w_new < 0 {
                    return false;
                }
                if flat && w_new == 0 {
                    return false; // (1,1) step lying on the diagonal
                }
                if let Some(m) = self.m {
                    if w_new > m as i64 {
                        return false;
                    }
                    if flat && m % 2 == 0 && w_new == m as i64 {
                        return false; // (1,1) step lying on the upper line
                    }
                }
                true
            }
        }
    }
}

struct Counter {
    states: u64,
    budget: u64,
}

impl Counter {
    fn tick(&mut self, what: &'static str) -> Result<()> {
        self.states += 1;
        if self.states > self.budget {
            Err(Error::BudgetExceeded {
                what,
                size: self.states,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

const NE_STEPS: [(i64, i64); 2] = [(0, 1), (1, 0)];

fn ne_dfs(
    n: i64,
    x: i64,
    y: i64,
    admit: &impl Fn(i64) -> bool,
    path: &mut Vec<(i64, i64)>,
    counter: &mut Counter,
    total: &mut Integer,
) -> Result<()> {
    counter.tick("enumeration")?;
    if x == n && y == n {
        // re-validate the finished path step by step; never trust the pruning
        let mut px = 0;
        let mut py = 0;
        assert!(admit(0), "start outside region");
        for &(dx, dy) in path.iter() {
            px += dx;
            py += dy;
            assert!(admit(py - px), "enumerated path leaves the region");
        }
        assert!(px == n && py == n);
        *total += 1;
        return Ok(());
    }
    for (dx, dy) in NE_STEPS {
        let (nx, ny) = (x + dx, y + dy);
        if nx > n || ny > n || !admit(ny - nx) {
            continue;
        }
        path.push((dx, dy));
        ne_dfs(n, nx, ny, admit, path, counter, total)?;
        path.pop();
    }
    Ok(())
}

fn ne_count(n: u32, admit: impl Fn(i64) -> bool, budget: u64) -> Result<Integer> {
    let mut counter = Counter { states: 0, budget };
    let mut total = Integer::zero();
    if admit(0) {
        ne_dfs(
            n as i64,
            0,
            0,
            &admit,
            &mut Vec::new(),
            &mut counter,
            &mut total,
        )?;
    }
    Ok(total)
}

/// All N/E paths (0,0) -> (n,n); equals C(2n, n).
pub fn count_all_paths_enum(n: u32) -> Result<Integer> {
    count_all_paths_enum_with_budget(n, DEFAULT_ENUM_BUDGET)
}

pub fn count_all_paths_enum_with_budget(n: u32, budget: u64) -> Result<Integer> {
    ne_count(n, |_| true, budget)
}

/// Paths staying weakly above the diagonal (y >= x throughout).
pub fn count_dyck_enum(n: u32) -> Result<Integer> {
    count_dyck_enum_with_budget(n, DEFAULT_ENUM_BUDGET)
}

pub fn count_dyck_enum_with_budget(n: u32, budget: u64) -> Result<Integer> {
    ne_count(n, |w| w >= 0, budget)
}

/// Paths confined to -s <= y-x <= m.
pub fn count_bounded_enum(spec: &BoundSpec) -> Result<Integer> {
    count_bounded_enum_with_budget(spec, DEFAULT_ENUM_BUDGET)
}

pub fn count_bounded_enum_with_budget(spec: &BoundSpec, budget: u64) -> Result<Integer> {
    ne_count(spec.n, |w| spec.admits(w), budget)
}

const GEN_STEPS: [(i64, i64); 3] = [(0, 2), (1, 1), (2, 0)];

fn gen_dfs(
    spec: &GenPathSpec,
    x: i64,
    y: i64,
    path: &mut Vec<(i64, i64)>,
    counter: &mut Counter,
    total: &mut Integer,
) -> Result<()> {
    counter.tick("enumeration")?;
    let n = spec.n as i64;
    if x == n && y == n {
        let mut px = 0;
        let mut py = 0;
        for &(dx, dy) in path.iter() {
            px += dx;
            py += dy;
            assert!(
                spec.admits_step(py - px, (dx, dy) == (1, 1)),
                "enumerated path violates the contact policy"
            );
        }
        *total += 1;
        return Ok(());
    }
    for (dx, dy) in GEN_STEPS {
        let (nx, ny) = (x + dx, y + dy);
        if nx + ny > 2 * n || !spec.admits_step(ny - nx, (dx, dy) == (1, 1)) {
            continue;
        }
        path.push((dx, dy));
        gen_dfs(spec, nx, ny, path, counter, total)?;
        path.pop();
    }
    Ok(())
}

/// Paths from (0,0) to (n,n) built from the steps (0,2), (1,1), (2,0),
/// under the spec's bound and contact policy. An unreachable endpoint
/// simply counts zero.
pub fn count_generalized_enum(spec: &GenPathSpec) -> Result<Integer> {
    count_generalized_enum_with_budget(spec, DEFAULT_ENUM_BUDGET)
}

pub fn count_generalized_enum_with_budget(spec: &GenPathSpec, budget: u64) -> Result<Integer> {
    let mut counter = Counter { states: 0, budget };
    let mut total = Integer::zero();
    gen_dfs(spec, 0, 0, &mut Vec::new(), &mut counter, &mut total)?;
    Ok(total)
}
