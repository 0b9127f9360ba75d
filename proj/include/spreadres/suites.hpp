#pragma once

// Property suites shared by `verify` and the acceptance runner. Each suite
// reports per-property case and failure counts plus the first few failures.

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spreadres/stab.hpp"

namespace spreadres {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> examples;

  void record(bool ok, const std::function<std::string()>& describe);
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  explicit SuiteReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  std::optional<std::uint64_t> seed;
  // deque: references returned by property() stay valid as properties are added.
  std::deque<PropertyResult> properties;
  std::optional<StabilizationReport> stabilization;

  PropertyResult& property(const std::string& name);
  bool passed() const;
};

struct NamedPoset {
  std::string name;
  PosetPtr poset;
};

inline constexpr int kMaxExamples = 5;

/// Closed-form radical-approximation domains against the generic computation.
SuiteReport verify_radapp_closed_form(const std::vector<NamedPoset>& posets, const std::vector<Field>& fields);

/// Radical-approximation cokernels are one-dimensional at S.
SuiteReport verify_relative_simple(const std::vector<NamedPoset>& posets, const std::vector<Field>& fields);

/// For `inclusions` seeded aligned inclusions source -> target and `trials`
/// seeded modules: lan of the minimal resolution has the summands and kernel
/// dimensions of a fresh minimal resolution of lan M.
SuiteReport verify_kan_transport(const PosetPtr& source, const std::vector<PosetPtr>& targets, int inclusions,
                                 int trials, std::uint64_t seed, Field field);

/// lan(k_S) = k_{up i(A) - up i(B)} for the spreads of each lan source, and
/// contraction(k_S) = k_{up fl(A) - up fl(B)} for the spreads of each
/// contraction target (origin-aligned inclusions).
SuiteReport verify_spread_formulas(const std::vector<AlignedGridInclusion>& lan_inclusions,
                                   const std::vector<AlignedGridInclusion>& contraction_inclusions, Field field);

struct FormulaInclusions {
  std::vector<AlignedGridInclusion> lan;
  std::vector<AlignedGridInclusion> contraction;
};

/// `count` seeded inclusions out of the grid (into the grid with the first
/// factor grown by 3 and the others by 1) and `count` seeded origin-aligned
/// inclusions into it (from the grid with the first factor shrunk by 2).
FormulaInclusions spread_formula_inclusions(const PosetPtr& grid, int count, std::uint64_t seed);

/// cover_window_check, hit_check and the window size bound on every spread.
SuiteReport verify_windows(const std::vector<NamedPoset>& grids, Field field);

/// gldim Gamma = spread_gldim + 2.
SuiteReport verify_sandwich(const std::vector<NamedPoset>& posets, Field field);

/// Seeded random modules over chains [1..max_m]: the minimal approximation is an
/// isomorphism, so spread_pdim is 0.
SuiteReport verify_chains(int trials, int max_m, std::uint64_t seed, const std::vector<Field>& fields);

/// g_m(k) table: monotone; for m = 2 constant 2 on computed k >= 4.
SuiteReport verify_stabilization(int m, int k_min, int k_max, Field field, int threads, double time_budget_seconds);

/// Region decomposition, finitely generated upsets, cocover identities and the
/// duality dictionary, exhaustively over subsets (posets up to 16 elements).
SuiteReport verify_order_combinatorics(const std::vector<NamedPoset>& posets);

/// Registered suite names, in display order.
const std::vector<std::string>& suite_names();

}  // namespace spreadres
