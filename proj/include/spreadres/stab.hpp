#pragma once

// Window subgrids of T x G grids (T a chain, first factor) and the g_m(k)
// experiment: spread-global dimension of [k] x [m] as k grows.

#include <optional>
#include <string>
#include <vector>

#include "spreadres/kan.hpp"

namespace spreadres {

/// Column window {0} ∪ π0(A) ∪ π0(A+e0) ∪ π0(B+e0) ∪ π0(B+2e0) for A = min S,
/// B = max S, with truncated addition, sorted.
std::vector<int> radapp_window(const Poset& grid, Subset s);

/// The inclusion of window x G into the grid.
AlignedGridInclusion radapp_subgrid(const PosetPtr& grid, Subset s);

/// Every cover x of S has π0(x) in π0(min S ∪ (max S + e0)).
bool cover_window_check(const Poset& grid, Subset s);

struct HitReport {
  /// Minima and covers of S and of every closed-form radical-approximation
  /// summand lie in the image of the window inclusion.
  bool grades_in_image = false;
  /// lan(contraction(k_T)) ≅ k_T for S and every summand T.
  bool round_trip = false;
  bool ok() const { return grades_in_image && round_trip; }
};

HitReport hit_check(const PosetPtr& grid, Subset s, Field field = Field{});

/// 1 + 4|G| for G the product of all factors after the first.
int k_star(const std::vector<int>& g_factors);

struct StabilizationRow {
  int k = 0;
  std::optional<int> gldim;
  double seconds = 0.0;
  /// "ok", "skipped (time budget)" or "skipped (cap)".
  std::string status;
};

struct StabilizationReport {
  int m = 0;
  std::uint32_t p = 2;
  std::vector<StabilizationRow> rows;
  int k_star = 0;

  /// Computed values are non-decreasing in k.
  bool monotone() const;
  /// Smallest computed k from which every computed value is equal.
  std::optional<int> onset() const;
};

/// spread_gldim([k] x [m]) for k in [k_min, k_max]. A k is skipped if the grid
/// exceeds the element cap or the budget is already spent when it would start.
StabilizationReport stabilization_table(int m, int k_min, int k_max, Field field = Field{}, int threads = 1,
                                        double time_budget_seconds = 1800.0);

}  // namespace spreadres
