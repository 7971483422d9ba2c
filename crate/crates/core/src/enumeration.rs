//! Census of convex lattice polygons by lattice-point count or by area.
//!
//! A polygon with `w` lattice points has a longest collinear run of length
//! `ℓ >= ⌈√w⌉` (Rabinowitz). After a unimodular map that run sits on the
//! x-axis, and the rest of `P ∩ Z^2` splits into `z1` points above and `z2`
//! points below it. Each `(ℓ, z1, z2)` is a [`WorkItem`]. Within an item the
//! lattice set is grown one row at a time, every row an integer interval,
//! and each row-prefix must already be hull-closed. Accepted sets are
//! deduplicated by [`canonical_form`], so the pruning only affects speed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::RangeInclusive;
use core::sync::atomic::{AtomicU64, Ordering};

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::lattice::{
    area2_and_boundary, hull_of_sorted, lattice_count_of_cycle, longest_run, LatticePoint,
    LatticePolygon,
};
use crate::unimodular::{canonical_form_in, CanonicalForm, EquivalenceGroup};

/// What a census counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CensusMode {
    /// Classes with exactly `w` lattice points.
    Cardinality,
    /// Classes with doubled area exactly `m`.
    Area,
}

impl CensusMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CensusMode::Cardinality => "cardinality",
            CensusMode::Area => "area",
        }
    }
}

/// One slice of the cardinality search: the longest run has `run` points,
/// with `above` points on one side of its line and `below` on the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorkItem {
    pub run: i64,
    pub above: i64,
    pub below: i64,
}

/// All work items for polygons with `w` lattice points.
pub fn work_items(w: i64) -> Result<Vec<WorkItem>> {
    if w < 3 {
        return Err(Error::invalid("a polygon has at least 3 lattice points"));
    }
    let min_run = ceil_sqrt(w).max(2);
    let mut items = Vec::new();
    for run in (min_run..w).rev() {
        let rest = w - run;
        for below in 0..=rest / 2 {
            items.push(WorkItem { run, above: rest - below, below });
        }
    }
    Ok(items)
}

fn ceil_sqrt(w: i64) -> i64 {
    let r = w.sqrt();
    if r * r == w {
        r
    } else {
        r + 1
    }
}

/// Bounds on where the lattice points of a work item can lie.
///
/// The run occupies `x = -left ..= right` on row 0, centred as in the
/// normalisation that puts the longest run on the x-axis. Rows above reach at
/// most `height_above`, rows below at most `height_below`. Any triangle
/// spanned by points of the set has doubled area at most `area2_bound`, which
/// bounds every row once the first row above the run is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchRegion {
    pub left: i64,
    pub right: i64,
    pub height_above: i64,
    pub height_below: i64,
    pub area2_bound: i64,
}

impl SearchRegion {
    pub fn new(w: i64, item: WorkItem) -> Self {
        let run = item.run;
        let left = (run - 1) / 2;
        let right = run - 1 - left;
        // Pick's identity gives area2 = 2w - B - 2 <= 2w - 5.
        let area2_bound = 2 * w - 5;
        let height = |z: i64| {
            if z == 0 {
                0
            } else {
                // conv(run ∪ side) has area2 >= h(run-1) and, by Pick,
                // area2 <= run + 2z - 3.
                ((run + 2 * z - 3) / (run - 1)).min(area2_bound / (run - 1))
            }
        };
        SearchRegion {
            left,
            right,
            height_above: height(item.above),
            height_below: height(item.below),
            area2_bound,
        }
    }

    pub fn run_points(&self) -> impl Iterator<Item = LatticePoint> {
        (-self.left..=self.right).map(|x| LatticePoint::new(x, 0))
    }

    /// Integer x-range on row `y` compatible with the area bound, given the
    /// left end `anchor` of the first row above the run.
    pub fn row_window(&self, y: i64, anchor: LatticePoint) -> Option<(i64, i64)> {
        let (l0, y0) = (anchor.x, anchor.y);
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for bx in [-self.left, self.right] {
            // det(b - a, p - a) = (bx - l0)(y - y0) + y0 (x - l0)
            let c = (bx - l0) * (y - y0);
            lo = lo.max(l0 + Integer::div_ceil(&(-self.area2_bound - c), &y0));
            hi = hi.min(l0 + Integer::div_floor(&(self.area2_bound - c), &y0));
        }
        (lo <= hi).then_some((lo, hi))
    }
}

/// A shared work counter. Every hull-closure test costs one unit.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn charge(&self, units: u64) -> Result<()> {
        let before = self.used.fetch_add(units, Ordering::Relaxed);
        if before.saturating_add(units) > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

struct Search<'a> {
    w: i64,
    item: WorkItem,
    region: SearchRegion,
    group: EquivalenceGroup,
    budget: &'a Budget,
    points: Vec<LatticePoint>,
    hull: Vec<LatticePoint>,
    scratch: Vec<LatticePoint>,
    anchor: Option<LatticePoint>,
    found: BTreeSet<CanonicalForm>,
}

impl Search<'_> {
    /// Tries to append row `y` with `x = lo..=hi`; on success the hull and
    /// point list are updated and the previous hull is returned for undo.
    fn push_row(&mut self, y: i64, lo: i64, hi: i64) -> Result<Option<Vec<LatticePoint>>> {
        self.budget.charge(1)?;
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.hull);
        self.scratch.push(LatticePoint::new(lo, y));
        if hi != lo {
            self.scratch.push(LatticePoint::new(hi, y));
        }
        self.scratch.sort_unstable();
        let mut new_hull = Vec::with_capacity(self.scratch.len());
        hull_of_sorted(&self.scratch, &mut new_hull);
        let size = self.points.len() as i64 + hi - lo + 1;
        if new_hull.len() < 3 || lattice_count_of_cycle(&new_hull) != size {
            return Ok(None);
        }
        self.points.extend((lo..=hi).map(|x| LatticePoint::new(x, y)));
        Ok(Some(core::mem::replace(&mut self.hull, new_hull)))
    }

    fn pop_row(&mut self, len: i64, hull: Vec<LatticePoint>) {
        self.points.truncate(self.points.len() - len as usize);
        self.hull = hull;
    }

    fn upper(&mut self, y: i64, remaining: i64) -> Result<()> {
        if remaining == 0 {
            return self.lower(-1, self.item.below);
        }
        if y > self.region.height_above {
            return Ok(());
        }
        let cap = self.item.run.min(remaining);
        match self.anchor {
            None => {
                // First row above the run. The shear (x, y) -> (x + a y, y)
                // fixes the run, so the row's centre offset is taken mod y.
                for len in 1..=cap {
                    for offset in 0..y {
                        let lo = offset - (len - 1) / 2;
                        let hi = lo + len - 1;
                        if let Some(prev) = self.push_row(y, lo, hi)? {
                            self.anchor = Some(LatticePoint::new(lo, y));
                            self.upper(y + 1, remaining - len)?;
                            self.anchor = None;
                            self.pop_row(len, prev);
                        }
                    }
                }
                // With run >= 3 the row directly above a nonempty upper
                // part always holds a lattice point.
                if self.item.run == 2 {
                    self.upper(y + 1, remaining)?;
                }
            }
            Some(anchor) => {
                self.rows(y, remaining, cap, anchor, true)?;
                self.upper(y + 1, remaining)?;
            }
        }
        Ok(())
    }

    fn rows(&mut self, y: i64, remaining: i64, cap: i64, anchor: LatticePoint, up: bool) -> Result<()> {
        let Some((wlo, whi)) = self.region.row_window(y, anchor) else {
            return Ok(());
        };
        for lo in wlo..=whi {
            for hi in lo..=(lo + cap - 1).min(whi) {
                let len = hi - lo + 1;
                if let Some(prev) = self.push_row(y, lo, hi)? {
                    if up {
                        self.upper(y + 1, remaining - len)?;
                    } else {
                        self.lower(y - 1, remaining - len)?;
                    }
                    self.pop_row(len, prev);
                }
            }
        }
        Ok(())
    }

    fn lower(&mut self, y: i64, remaining: i64) -> Result<()> {
        if remaining == 0 {
            self.accept();
            return Ok(());
        }
        if -y > self.region.height_below {
            return Ok(());
        }
        let anchor = self.anchor.expect("upper part is nonempty whenever the lower part is");
        let cap = self.item.run.min(remaining);
        self.rows(y, remaining, cap, anchor, false)?;
        if y < -1 || self.item.run == 2 {
            self.lower(y - 1, remaining)?;
        }
        Ok(())
    }

    fn accept(&mut self) {
        debug_assert_eq!(self.points.len() as i64, self.w);
        let mut sorted = self.points.clone();
        sorted.sort_unstable();
        if longest_run(&sorted).length as i64 != self.item.run {
            return;
        }
        let polygon = LatticePolygon::from_ccw_cycle(self.hull.clone());
        self.found.insert(canonical_form_in(&polygon, self.group));
    }
}

/// Canonical forms of all polygons with `w` lattice points whose longest
/// collinear run and side split match `item`. Sorted, no duplicates.
pub fn enumerate_work_item(
    w: i64,
    item: WorkItem,
    group: EquivalenceGroup,
    budget: &Budget,
) -> Result<Vec<CanonicalForm>> {
    if item.run < 2 || item.run >= w || item.above < item.below || item.below < 0
        || item.run + item.above + item.below != w
    {
        return Err(Error::invalid("inconsistent work item"));
    }
    let region = SearchRegion::new(w, item);
    let points: Vec<LatticePoint> = region.run_points().collect();
    let hull = vec_of([points[0], points[points.len() - 1]]);
    let mut search = Search {
        w,
        item,
        region,
        group,
        budget,
        points,
        hull,
        scratch: Vec::new(),
        anchor: None,
        found: BTreeSet::new(),
    };
    search.upper(1, item.above)?;
    Ok(search.found.into_iter().collect())
}

fn vec_of<const N: usize>(a: [LatticePoint; N]) -> Vec<LatticePoint> {
    a.into_iter().collect()
}

/// Options shared by all census entry points.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusOptions {
    pub group: EquivalenceGroup,
    pub symmetric_only: bool,
}

/// Classes for one parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub parameter: i64,
    pub mode: CensusMode,
    pub symmetric_only: bool,
    /// Sorted canonical forms, one per class.
    pub classes: Vec<CanonicalForm>,
}

impl CensusResult {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

impl CanonicalForm {
    pub fn area2(&self) -> i64 {
        area2_and_boundary(self.vertices()).0
    }

    pub fn lattice_count(&self) -> i64 {
        lattice_count_of_cycle(self.vertices())
    }
}

/// Symmetry filter used for the `v*` and `κ*` censuses: symmetry about a
/// lattice point.
pub fn census_symmetric(form: &CanonicalForm) -> bool {
    form.to_polygon().is_lattice_symmetric()
}

/// Cardinalities `w` that can carry polygons of doubled area `m`.
///
/// Pick gives `w - 2 <= m <= 2w - 2`, i.e. `m/2 + 1 <= w <= m + 2`.
pub fn cardinalities_for_area(m: i64) -> RangeInclusive<i64> {
    ((m + 1) / 2 + 1).max(3)..=m + 2
}

/// Sequential cardinality census.
pub fn enumerate_cardinality(w: i64) -> Result<CensusResult> {
    enumerate_cardinality_with(w, CensusOptions::default(), &Budget::unlimited())
}

pub fn enumerate_cardinality_with(
    w: i64,
    options: CensusOptions,
    budget: &Budget,
) -> Result<CensusResult> {
    let classes = all_classes(w, options.group, budget)?;
    Ok(finish(w, CensusMode::Cardinality, options.symmetric_only, classes))
}

fn all_classes(w: i64, group: EquivalenceGroup, budget: &Budget) -> Result<Vec<CanonicalForm>> {
    let mut set = BTreeSet::new();
    for item in work_items(w)? {
        set.extend(enumerate_work_item(w, item, group, budget)?);
    }
    Ok(set.into_iter().collect())
}

fn finish(
    parameter: i64,
    mode: CensusMode,
    symmetric_only: bool,
    mut classes: Vec<CanonicalForm>,
) -> CensusResult {
    if symmetric_only {
        classes.retain(census_symmetric);
    }
    classes.sort();
    classes.dedup();
    CensusResult { parameter, mode, symmetric_only, classes }
}

/// Sequential area census.
pub fn enumerate_area(m: i64) -> Result<CensusResult> {
    enumerate_area_with(m, CensusOptions::default(), &Budget::unlimited())
}

pub fn enumerate_area_with(m: i64, options: CensusOptions, budget: &Budget) -> Result<CensusResult> {
    if m < 1 {
        return Err(Error::invalid("doubled area must be at least 1"));
    }
    let mut table = census_table_by(
        CensusMode::Area,
        m..=m,
        options.symmetric_only,
        |w| all_classes(w, options.group, budget),
    )?;
    Ok(table.remove(0))
}

/// One result per parameter in `range`, ascending.
pub fn census_table(
    mode: CensusMode,
    range: RangeInclusive<i64>,
    symmetric_only: bool,
) -> Result<Vec<CensusResult>> {
    let budget = Budget::unlimited();
    census_table_by(mode, range, symmetric_only, |w| {
        all_classes(w, EquivalenceGroup::Full, &budget)
    })
}

/// Builds a census table from any source of per-cardinality classes. Each
/// cardinality is requested at most once.
pub fn census_table_by<F>(
    mode: CensusMode,
    range: RangeInclusive<i64>,
    symmetric_only: bool,
    mut classes_for: F,
) -> Result<Vec<CensusResult>>
where
    F: FnMut(i64) -> Result<Vec<CanonicalForm>>,
{
    let (start, end) = (*range.start(), *range.end());
    match mode {
        CensusMode::Cardinality if start < 3 => {
            return Err(Error::invalid("cardinality census starts at w = 3"))
        }
        CensusMode::Area if start < 1 => return Err(Error::invalid("area census starts at m = 1")),
        _ => {}
    }
    let mut cache: BTreeMap<i64, Vec<CanonicalForm>> = BTreeMap::new();
    let mut fetch = |w: i64, cache: &mut BTreeMap<i64, Vec<CanonicalForm>>| -> Result<()> {
        if let alloc::collections::btree_map::Entry::Vacant(slot) = cache.entry(w) {
            slot.insert(classes_for(w)?);
        }
        Ok(())
    };
    let mut out = Vec::new();
    for param in start..=end {
        let classes = match mode {
            CensusMode::Cardinality => {
                fetch(param, &mut cache)?;
                cache[&param].clone()
            }
            CensusMode::Area => {
                let mut acc = Vec::new();
                for w in cardinalities_for_area(param) {
                    fetch(w, &mut cache)?;
                    acc.extend(cache[&w].iter().filter(|c| c.area2() == param).cloned());
                }
                acc
            }
        };
        out.push(finish(param, mode, symmetric_only, classes));
    }
    Ok(out)
}
