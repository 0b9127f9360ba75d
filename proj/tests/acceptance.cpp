// Acceptance runner: one PASS/FAIL line per criterion. All tolerances are exact
// (integer or set equality); there are no floating-point comparisons.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spreadres/io.hpp"
#include "spreadres/suites.hpp"

using namespace spreadres;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kStabilizationBudgetSeconds = 1800.0;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " [" << detail << "]" << std::endl;
  if (!ok) ++failures;
}

std::string summary(const SuiteReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.properties.size(); ++i) {
    const auto& p = r.properties[i];
    os << (i ? "; " : "") << p.name << " " << (p.cases - p.failures) << "/" << p.cases;
  }
  for (const auto& p : r.properties) {
    for (const auto& e : p.examples) os << "; fail " << e;
  }
  return os.str();
}

void merge(SuiteReport& into, const SuiteReport& from) {
  for (const auto& p : from.properties) {
    auto& q = into.property(p.name);
    q.cases += p.cases;
    q.failures += p.failures;
    for (const auto& e : p.examples) q.examples.push_back(e);
  }
}

std::vector<NamedPoset> grids(std::initializer_list<std::vector<int>> list) {
  std::vector<NamedPoset> out;
  for (const auto& f : list) {
    std::string name;
    for (std::size_t i = 0; i < f.size(); ++i) name += (i ? "x" : "") + std::to_string(f[i]);
    out.push_back({name, Poset::grid(f)});
  }
  return out;
}

void criterion1() {
  std::ostringstream detail;
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    for (int k : {4, 5, 6}) {
      const int g = spread_gldim(SpreadFamily::all_spreads(Poset::grid({k, 2}), Field(p))).gldim;
      detail << "GF(" << p << ") k=" << k << ":" << g << " ";
      ok = ok && g == 2;
    }
  }
  report(1, ok, "spread gldim([k]x[2]) = 2 for k in {4,5,6} over GF(2), GF(3); exact", detail.str());
}

void criterion2() {
  const StabilizationReport t = stabilization_table(2, 4, 9, Field(2), 1, kStabilizationBudgetSeconds);
  std::ostringstream detail;
  bool ok = true;
  bool k7_done = false;
  std::optional<int> first;
  for (const auto& row : t.rows) {
    detail << "k=" << row.k << ":" << (row.gldim ? std::to_string(*row.gldim) : row.status) << " ";
    if (!row.gldim) continue;
    if (row.k == 7) k7_done = true;
    if (!first) first = row.gldim;
    ok = ok && row.gldim == first;
  }
  // k = 7 may be reported as skipped under the budget; constancy is then over the computed rows.
  detail << (k7_done ? "k=7 computed" : "k=7 skipped (budget)");
  report(2, ok && first == 2, "spread gldim([k]x[2]) constant over computed k in {4..9}; exact", detail.str());
}

void criterion3() {
  const SuiteReport r = verify_chains(200, 6, kSeed, {Field(2), Field(3)});
  report(3, r.passed(), "spread_pdim = 0 for 200 seeded modules over chains [m], m <= 6; exact",
         "seed " + std::to_string(kSeed) + "; " + summary(r));
}

void criterion4() {
  SuiteReport r = verify_radapp_closed_form(grids({{3, 3}, {4, 3}, {4, 2}}), {Field(2), Field(3)});
  auto abc = Poset::from_relations(3, {{1, 0}, {1, 2}}, {"a", "b", "c"});
  for (std::uint32_t p : {2u, 3u}) {
    auto f = SpreadFamily::all_spreads(abc, Field(p));
    const Approximation a = minimal_radical_approximation(f, f.index_of(abc->up_of(1)).value());
    std::vector<Subset> got;
    for (int i : a.summands) got.push_back(f.spread(i).members);
    r.property("three-element-example").record(got == std::vector<Subset>{abc->up_of(0), abc->up_of(2)}, [p] {
      return "GF(" + std::to_string(p) + ") domain of up-b is not {up-a, up-c}";
    });
  }
  report(4, r.passed(), "closed-form radical approximation domains = generic, [3]x[3], [4]x[3], [4]x[2], both fields; exact",
         summary(r));
}

void criterion5() {
  const SuiteReport r = verify_relative_simple(grids({{4, 2}}), {Field(2), Field(3)});
  report(5, r.passed(), "relative simple cokernel has total dimension 1 at S for every spread of [4]x[2]; exact",
         summary(r));
}

void criterion6() {
  SuiteReport r("kan-transport");
  for (std::uint32_t p : {2u, 3u}) {
    merge(r, verify_kan_transport(Poset::grid({3, 2}), {Poset::grid({5, 2}), Poset::grid({6, 3})}, 5, 20, kSeed, Field(p)));
  }
  report(6, r.passed(), "lan of minimal resolutions over [3]x[2] matches fresh resolutions in [5]x[2], [6]x[3]; exact",
         "seed " + std::to_string(kSeed) + "; 20 modules x 5 inclusions per target; " + summary(r));
}

void criterion7() {
  const auto inc = spread_formula_inclusions(Poset::grid({6, 2}), 3, kSeed);
  SuiteReport r("spread-formulas");
  for (std::uint32_t p : {2u, 3u}) merge(r, verify_spread_formulas(inc.lan, inc.contraction, Field(p)));
  report(7, r.passed(), "lan and contraction spread formulas on all spreads of [6]x[2] under 3 inclusions each; exact iso",
         "seed " + std::to_string(kSeed) + "; " + summary(r));
}

void criterion8() {
  const SuiteReport r = verify_windows(grids({{5, 2}, {4, 3}}), Field(2));
  report(8, r.passed(), "cover window, hit check and window size <= 1 + 4|G| on [5]x[2], [4]x[3]; exact", summary(r));
}

void criterion9() {
  const SuiteReport r = verify_sandwich(grids({{2}, {3}, {2, 2}}), Field(2));
  report(9, r.passed(), "gldim Gamma = spread gldim + 2 on [2], [3], [2]x[2]; exact", summary(r));
}

void criterion10() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(std::string(SPREADRES_TEST_DATA) + "/posets")) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedPoset> posets;
  for (const auto& f : files) {
    std::ifstream in(f);
    auto p = poset_from_json(json::parse(in));
    if (p->size() <= 12) posets.push_back({f.stem().string(), p});
  }
  const SuiteReport r = verify_order_combinatorics(posets);
  report(10, r.passed() && !posets.empty(),
         "order-combinatorics properties exhaustive on the " + std::to_string(posets.size()) + " corpus posets (<= 12 elements); exact",
         summary(r));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << " (" << secs << " s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
