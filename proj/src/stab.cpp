#include "spreadres/stab.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "spreadres/approx.hpp"

namespace spreadres {

namespace {

int shifted_column(const Poset& grid, Elem x, int shift) {
  return std::min(grid.coord(x, 0) + shift, grid.factors()[0] - 1);
}

}  // namespace

std::vector<int> radapp_window(const Poset& grid, Subset s) {
  if (!grid.is_grid()) throw std::invalid_argument("windows are defined on grids");
  std::set<int> cols{0};
  minimal(grid, s).for_each([&](Elem a) {
    cols.insert(shifted_column(grid, a, 0));
    cols.insert(shifted_column(grid, a, 1));
  });
  maximal(grid, s).for_each([&](Elem b) {
    cols.insert(shifted_column(grid, b, 1));
    cols.insert(shifted_column(grid, b, 2));
  });
  return {cols.begin(), cols.end()};
}

AlignedGridInclusion radapp_subgrid(const PosetPtr& grid, Subset s) {
  std::vector<std::vector<int>> coords{radapp_window(*grid, s)};
  for (std::size_t j = 1; j < grid->factors().size(); ++j) {
    std::vector<int> all(static_cast<std::size_t>(grid->factors()[j]));
    for (int c = 0; c < grid->factors()[j]; ++c) all[static_cast<std::size_t>(c)] = c;
    coords.push_back(std::move(all));
  }
  return subgrid_inclusion(grid, std::move(coords));
}

bool cover_window_check(const Poset& grid, Subset s) {
  std::set<int> allowed;
  minimal(grid, s).for_each([&](Elem a) { allowed.insert(grid.coord(a, 0)); });
  maximal(grid, s).for_each([&](Elem b) { allowed.insert(shifted_column(grid, b, 1)); });
  bool ok = true;
  covers(grid, s).for_each([&](Elem x) { ok = ok && allowed.count(grid.coord(x, 0)) > 0; });
  return ok;
}

HitReport hit_check(const PosetPtr& grid, Subset s, Field field) {
  const AlignedGridInclusion inc = radapp_subgrid(grid, s);
  std::vector<Subset> targets{s};
  for (Subset t : radapp_domain_closed_form(*grid, s)) targets.push_back(t);
  HitReport report{true, true};
  for (Subset t : targets) {
    const Subset grades = minimal(*grid, t) | covers(*grid, t);
    if (!grades.subset_of(inc.image())) report.grades_in_image = false;
    auto rep = indicator_rep(grid, field, t);
    auto back = lan(inc, *contraction(inc, *rep));
    if (!iso_check(back, rep)) report.round_trip = false;
  }
  return report;
}

int k_star(const std::vector<int>& g_factors) {
  int g = 1;
  for (int f : g_factors) g *= f;
  return 1 + 4 * g;
}

bool StabilizationReport::monotone() const {
  std::optional<int> last;
  for (const auto& r : rows) {
    if (!r.gldim) continue;
    if (last && *r.gldim < *last) return false;
    last = r.gldim;
  }
  return true;
}

std::optional<int> StabilizationReport::onset() const {
  std::optional<int> onset;
  std::optional<int> value;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!it->gldim) continue;
    if (value && *it->gldim != *value) break;
    value = it->gldim;
    onset = it->k;
  }
  return onset;
}

StabilizationReport stabilization_table(int m, int k_min, int k_max, Field field, int threads,
                                        double time_budget_seconds) {
  StabilizationReport report;
  report.m = m;
  report.p = field.p();
  report.k_star = k_star({m});
  const auto start = std::chrono::steady_clock::now();
  for (int k = k_min; k <= k_max; ++k) {
    StabilizationRow row;
    row.k = k;
    const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k * m > kDefaultElementCap) {
      row.status = "skipped (cap)";
    } else if (spent > time_budget_seconds) {
      row.status = "skipped (time budget)";
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      auto family = SpreadFamily::all_spreads(Poset::grid({k, m}), field);
      row.gldim = spread_gldim(family, threads).gldim;
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      row.status = "ok";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace spreadres
