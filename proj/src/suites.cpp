#include "spreadres/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "spreadres/approx.hpp"

namespace spreadres {

void PropertyResult::record(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (ok) return;
  ++failures;
  if (static_cast<int>(examples.size()) < kMaxExamples) examples.push_back(describe());
}

PropertyResult& SuiteReport::property(const std::string& name) {
  for (auto& p : properties) {
    if (p.name == name) return p;
  }
  PropertyResult fresh;
  fresh.name = name;
  properties.push_back(std::move(fresh));
  return properties.back();
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"radapp-closed-form", "relative-simple", "kan-transport",
                                              "spread-formulas",    "windows",         "sandwich",
                                              "chains",             "stabilization",   "order-combinatorics"};
  return names;
}

namespace {

std::string field_tag(Field f) { return "GF(" + std::to_string(f.p()) + ")"; }

std::vector<Subset> summand_sets(const SpreadFamily& f, const std::vector<int>& summands) {
  std::vector<Subset> out;
  for (int i : summands) out.push_back(f.spread(i).members);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string format_sets(const Poset& p, const std::vector<Subset>& sets) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < sets.size(); ++i) os << (i ? ", " : "") << format_subset(p, sets[i]);
  os << "]";
  return os.str();
}

std::string format_dims(const std::vector<int>& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

std::string format_maps(const AlignedGridInclusion& i) {
  std::ostringstream os;
  for (std::size_t j = 0; j < i.factor_maps().size(); ++j) {
    os << (j ? "x" : "") << "{";
    const auto& m = i.factor_maps()[j];
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "," : "") << m[k];
    os << "}";
  }
  return os.str();
}

// Order closures straight from leq, independent of the library's closure code.
Subset naive_up(const Poset& p, Subset s) {
  Subset out;
  for (Elem x = 0; x < p.size(); ++x) {
    s.for_each([&](Elem a) {
      if (p.leq(a, x)) out.insert(x);
    });
  }
  return out;
}

Subset naive_down(const Poset& p, Subset s) {
  Subset out;
  for (Elem x = 0; x < p.size(); ++x) {
    s.for_each([&](Elem a) {
      if (p.leq(x, a)) out.insert(x);
    });
  }
  return out;
}

std::vector<AlignedGridInclusion> sample(std::vector<AlignedGridInclusion> all, int count, std::mt19937_64& rng) {
  const std::size_t take = std::min(all.size(), static_cast<std::size_t>(std::max(count, 0)));
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i < take; ++i) std::swap(order[i], order[i + draw(rng, order.size() - i)]);
  order.resize(take);
  std::sort(order.begin(), order.end());
  std::vector<AlignedGridInclusion> out;
  for (std::size_t i : order) out.push_back(all[i]);
  return out;
}

}  // namespace

// |cover S| plus the number of pairs (s, W) with s in min S, W a component of
// S - s that is a spread, S = W + (up s - up W) and s a cocover of W.
int predicted_summand_count(const Poset& p, Subset s) {
  int count = covers(p, s).size();
  minimal(p, s).for_each([&](Elem m) {
    for (Subset w : connected_components(p, s - Subset::singleton(m))) {
      if (is_spread(p, w) && (w | (p.up_of(m) - upset(p, w))) == s && cocovers(p, w).contains(m)) ++count;
    }
  });
  return count;
}

SuiteReport verify_radapp_closed_form(const std::vector<NamedPoset>& posets, const std::vector<Field>& fields) {
  SuiteReport report{"radapp-closed-form"};
  auto& equal = report.property("closed-form-equals-generic");
  auto& free = report.property("multiplicity-free");
  auto& count = report.property("summands-equal-covers-plus-minima-components");
  for (const auto& np : posets) {
    for (Field field : fields) {
      auto f = SpreadFamily::all_spreads(np.poset, field);
      for (int s = 0; s < f.size(); ++s) {
        const Approximation a = minimal_radical_approximation(f, s);
        const auto generic = summand_sets(f, a.summands);
        const auto closed = radapp_domain_closed_form(*np.poset, f.spread(s).members);
        const std::string where = np.name + " " + field_tag(field) + " S=" + format_subset(*np.poset, f.spread(s).members);
        equal.record(generic == closed, [&] {
          return where + " generic " + format_sets(*np.poset, generic) + " closed " + format_sets(*np.poset, closed);
        });
        const auto mult = a.multiplicities();
        free.record(std::all_of(mult.begin(), mult.end(), [](auto m) { return m.second == 1; }), [&] { return where; });
        const int predicted = predicted_summand_count(*np.poset, f.spread(s).members);
        count.record(static_cast<int>(a.summands.size()) == predicted, [&] {
          return where + " generic " + std::to_string(a.summands.size()) + " predicted " + std::to_string(predicted);
        });
      }
    }
  }
  return report;
}

SuiteReport verify_relative_simple(const std::vector<NamedPoset>& posets, const std::vector<Field>& fields) {
  SuiteReport report{"relative-simple"};
  auto& prop = report.property("cokernel-concentrated-at-S");
  for (const auto& np : posets) {
    for (Field field : fields) {
      auto f = SpreadFamily::all_spreads(np.poset, field);
      for (int s = 0; s < f.size(); ++s) {
        const auto dims = relative_simple_dims(f, s);
        bool ok = true;
        for (int t = 0; t < f.size(); ++t) ok = ok && dims[static_cast<std::size_t>(t)] == (t == s ? 1 : 0);
        prop.record(ok, [&] { return np.name + " " + field_tag(field) + " S=" + format_subset(*np.poset, f.spread(s).members); });
      }
    }
  }
  return report;
}

SuiteReport verify_kan_transport(const PosetPtr& source, const std::vector<PosetPtr>& targets, int inclusions,
                                 int trials, std::uint64_t seed, Field field) {
  SuiteReport report{"kan-transport"};
  report.seed = seed;
  auto& summands = report.property("lan-summands-match-fresh");
  auto& kernels = report.property("lan-kernels-match-fresh");
  auto& approx = report.property("lan-cover-is-approximation");
  std::mt19937_64 rng(seed);
  std::vector<RepPtr> modules;
  for (int t = 0; t < trials; ++t) modules.push_back(random_representation(source, field, rng));
  auto small = SpreadFamily::all_spreads(source, field);
  std::vector<Resolution> small_res;
  for (const auto& m : modules) small_res.push_back(minimal_resolution(small, m));

  for (const auto& target : targets) {
    auto big = SpreadFamily::all_spreads(target, field);
    for (const auto& inc : sample(all_aligned_inclusions(source, target), inclusions, rng)) {
      std::map<int, Subset> lan_support;
      auto lan_of = [&](int idx) {
        auto it = lan_support.find(idx);
        if (it == lan_support.end()) it = lan_support.emplace(idx, lan(inc, *small.rep(idx))->support()).first;
        return it->second;
      };
      for (std::size_t t = 0; t < modules.size(); ++t) {
        const std::string where = format_maps(inc) + " trial " + std::to_string(t);
        const Resolution& r = small_res[t];
        const RepPtr lan_m = lan(inc, *modules[t]);
        const Resolution fresh = minimal_resolution(big, lan_m);
        bool same = r.steps.size() == fresh.steps.size();
        bool same_kernels = same;
        for (std::size_t j = 0; same && j < r.steps.size(); ++j) {
          std::vector<Subset> transported;
          for (int idx : r.steps[j].approximation.summands) transported.push_back(lan_of(idx));
          std::sort(transported.begin(), transported.end(), canonical_less);
          same = transported == summand_sets(big, fresh.steps[j].approximation.summands);
          same_kernels = same_kernels && lan(inc, *r.steps[j].kernel)->dims() == fresh.steps[j].kernel->dims();
        }
        summands.record(same, [&] { return where; });
        kernels.record(same_kernels, [&] { return where; });
        if (!r.steps.empty()) {
          const auto& a = r.steps.front().approximation;
          const RepPtr lan_domain = lan(inc, *a.domain.sum);
          approx.record(is_approximation(big, lan(inc, a.morphism, lan_domain, lan_m)), [&] { return where; });
        }
      }
    }
  }
  return report;
}

SuiteReport verify_spread_formulas(const std::vector<AlignedGridInclusion>& lan_inclusions,
                                   const std::vector<AlignedGridInclusion>& contraction_inclusions, Field field) {
  SuiteReport report{"spread-formulas"};
  auto& lan_prop = report.property("lan-spread-formula");
  auto& con_prop = report.property("contraction-spread-formula");
  for (const auto& i : lan_inclusions) {
    for (const auto& s : enumerate_spreads(i.source())) {
      const Subset expected = upset(i.target(), i.map_of(s.minima)) - upset(i.target(), i.map_of(s.covers));
      const RepPtr image = lan(i, *indicator_rep(i.source_ptr(), field, s.members));
      const bool ok = is_spread(i.target(), expected) && iso_check(image, indicator_rep(i.target_ptr(), field, expected), 8);
      lan_prop.record(ok, [&] { return format_maps(i) + " S=" + format_subset(i.source(), s.members); });
    }
  }
  for (const auto& i : contraction_inclusions) {
    if (!i.origin_aligned()) throw std::invalid_argument("contraction formula needs origin-aligned inclusions");
    for (const auto& s : enumerate_spreads(i.target())) {
      const Subset expected = upset(i.source(), i.floor_of(s.minima)) - upset(i.source(), i.floor_of(s.covers));
      const RepPtr image = contraction(i, *indicator_rep(i.target_ptr(), field, s.members));
      const bool ok = is_convex(i.source(), expected) && iso_check(image, indicator_rep(i.source_ptr(), field, expected), 8);
      con_prop.record(ok, [&] { return format_maps(i) + " S=" + format_subset(i.target(), s.members); });
    }
  }
  return report;
}

FormulaInclusions spread_formula_inclusions(const PosetPtr& grid, int count, std::uint64_t seed) {
  if (!grid->is_grid()) throw std::invalid_argument("spread formulas are checked on grids");
  std::vector<int> bigger = grid->factors();
  std::vector<int> smaller = grid->factors();
  for (std::size_t j = 0; j < bigger.size(); ++j) bigger[j] += j == 0 ? 3 : 1;
  smaller[0] = std::max(1, smaller[0] - 2);
  std::mt19937_64 rng(seed);
  FormulaInclusions out;
  out.lan = sample(all_aligned_inclusions(grid, Poset::grid(bigger)), count, rng);
  auto aligned = all_aligned_inclusions(Poset::grid(smaller), grid);
  std::erase_if(aligned, [](const AlignedGridInclusion& i) { return !i.origin_aligned(); });
  out.contraction = sample(std::move(aligned), count, rng);
  return out;
}

SuiteReport verify_windows(const std::vector<NamedPoset>& grids, Field field) {
  SuiteReport report{"windows"};
  auto& cover = report.property("cover-window");
  auto& bound = report.property("window-size-bound");
  auto& grades = report.property("hit-grades-in-window");
  auto& round = report.property("hit-round-trip");
  for (const auto& np : grids) {
    const Poset& g = *np.poset;
    if (!g.is_grid()) throw std::invalid_argument("windows are defined on grids");
    const int kstar = k_star(std::vector<int>(g.factors().begin() + 1, g.factors().end()));
    for (const auto& s : enumerate_spreads(g)) {
      const std::string where = np.name + " S=" + format_subset(g, s.members);
      cover.record(cover_window_check(g, s.members), [&] { return where; });
      bound.record(static_cast<int>(radapp_window(g, s.members).size()) <= kstar, [&] { return where; });
      const HitReport h = hit_check(np.poset, s.members, field);
      grades.record(h.grades_in_image, [&] { return where; });
      round.record(h.round_trip, [&] { return where; });
    }
  }
  return report;
}

SuiteReport verify_sandwich(const std::vector<NamedPoset>& posets, Field field) {
  SuiteReport report{"sandwich"};
  auto& algebra = report.property("gamma-associative-unital");
  auto& sandwich = report.property("gldim-gamma-equals-spread-gldim-plus-2");
  for (const auto& np : posets) {
    auto f = SpreadFamily::all_spreads(np.poset, field);
    const GammaAlgebra g = gamma_table(f);
    algebra.record(g.is_associative() && g.has_unit(), [&] { return np.name; });
    const int spread = spread_gldim(f).gldim;
    const int gamma = gamma_gldim(f);
    sandwich.record(gamma == spread + 2, [&] {
      return np.name + " gldim Gamma=" + std::to_string(gamma) + " spread gldim=" + std::to_string(spread);
    });
  }
  return report;
}

SuiteReport verify_chains(int trials, int max_m, std::uint64_t seed, const std::vector<Field>& fields) {
  SuiteReport report{"chains"};
  report.seed = seed;
  auto& iso = report.property("approximation-is-iso");
  auto& pdim = report.property("spread-pdim-zero");
  if (max_m < 1 || fields.empty()) throw std::invalid_argument("chains suite needs max_m >= 1 and a field");
  std::mt19937_64 rng(seed);
  std::map<std::pair<int, std::uint32_t>, SpreadFamily> families;
  for (int t = 0; t < trials; ++t) {
    const int m = 1 + t % max_m;
    const Field field = fields[static_cast<std::size_t>(t) % fields.size()];
    auto key = std::make_pair(m, field.p());
    auto it = families.find(key);
    if (it == families.end()) it = families.emplace(key, SpreadFamily::all_spreads(Poset::grid({m}), field)).first;
    const SpreadFamily& f = it->second;
    const RepPtr module = random_representation(f.poset_ptr(), field, rng);
    const std::string where = "trial " + std::to_string(t) + " [" + std::to_string(m) + "] " + field_tag(field) +
                              " dims " + format_dims(module->dims());
    iso.record(minimal_approximation(f, module).morphism.is_iso(), [&] { return where; });
    const auto d = spread_pdim(f, module);
    pdim.record(!d || *d == 0, [&] { return where; });
  }
  return report;
}

SuiteReport verify_stabilization(int m, int k_min, int k_max, Field field, int threads, double time_budget_seconds) {
  SuiteReport report{"stabilization"};
  StabilizationReport table = stabilization_table(m, k_min, k_max, field, threads, time_budget_seconds);
  report.property("monotone").record(table.monotone(), [] { return std::string("values decrease somewhere"); });
  if (m == 2) {
    auto& constant = report.property("constant-2-from-k-4");
    for (const auto& row : table.rows) {
      if (row.k < 4 || !row.gldim) continue;
      constant.record(*row.gldim == 2, [&] { return "k=" + std::to_string(row.k) + " gives " + std::to_string(*row.gldim); });
    }
  }
  report.stabilization = std::move(table);
  return report;
}

SuiteReport verify_order_combinatorics(const std::vector<NamedPoset>& posets) {
  SuiteReport report{"order-combinatorics"};
  auto& region = report.property("region-decomposition");
  auto& upsets = report.property("finitely-generated-upsets");
  auto& presentation = report.property("canonical-presentation");
  auto& component = report.property("cocover-vs-connected-component");
  auto& extension = report.property("cocover-of-cover-extension");
  auto& minspread = report.property("minimal-elements-cover-down-cocover");
  auto& duality = report.property("duality-dictionary");

  for (const auto& np : posets) {
    const Poset& p = *np.poset;
    if (p.size() > 16) throw std::invalid_argument("order-combinatorics suite enumerates subsets; poset " + np.name + " is too large");
    const PosetPtr op = opposite(p);
    const Subset all = p.all();
    const Subset min_p = minimal(p, all);
    const std::uint64_t count = std::uint64_t{1} << p.size();
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      const Subset s{bits};
      auto where = [&] { return np.name + " S=" + format_subset(p, s); };
      const Subset up = naive_up(p, s);
      const Subset down = naive_down(p, s);

      const Subset gen_min = minimal(p, up);
      upsets.record(is_upset(p, up) && gen_min.subset_of(s) && naive_up(p, gen_min) == up, where);

      const bool convex = is_convex(p, s);
      duality.record(convex == is_convex(*op, s) && is_connected(p, s) == is_connected(*op, s) &&
                         is_spread(p, s) == is_spread(*op, s) && is_antichain(p, s) == is_antichain(*op, s) &&
                         minimal(*op, s) == maximal(p, s) && maximal(*op, s) == minimal(p, s) &&
                         covers(*op, s) == cocovers(p, s) && cocovers(*op, s) == covers(p, s) &&
                         upset(*op, s) == down && downset(*op, s) == up,
                     where);
      if (!convex) continue;

      const RegionDecomposition rd = region_decomposition(p, s);
      const Subset rest = all - up - down;
      const bool partition = (rd.spread | rd.up_cover | rd.down_cocover | rd.incomparable) == all &&
                             rd.spread.size() + rd.up_cover.size() + rd.down_cocover.size() + rd.incomparable.size() ==
                                 p.size();
      region.record(partition && rd.spread == s && rd.up_cover == up - s && rd.up_cover == naive_up(p, covers(p, s)) &&
                        rd.down_cocover == down - s && rd.down_cocover == naive_down(p, cocovers(p, s)) &&
                        rd.incomparable == rest,
                    where);

      const Subset strict_up = up - s;
      upsets.record(is_upset(p, strict_up) && minimal(p, strict_up) == covers(p, s) &&
                        naive_up(p, minimal(p, strict_up)) == strict_up,
                    where);

      const RegionDecomposition rd_op = region_decomposition(*op, s);
      duality.record(rd_op.up_cover == rd.down_cocover && rd_op.down_cocover == rd.up_cover &&
                         rd_op.incomparable == rd.incomparable,
                     where);

      const Subset cocover_down = naive_down(p, cocovers(p, s));
      if (min_p.subset_of(cocover_down)) {
        minspread.record(minimal(p, s).subset_of(covers(p, cocover_down)), where);
      }

      if (!is_connected(p, s)) continue;

      presentation.record(naive_up(p, minimal(p, s)) - naive_up(p, covers(p, s)) == s &&
                              naive_down(p, maximal(p, s)) - naive_down(p, cocovers(p, s)) == s,
                          where);

      (down - s).for_each([&](Elem a) {
        const Subset tail = (p.up_of(a) - up) - Subset::singleton(a);
        const auto comps = connected_components(p, s | tail);
        const bool is_component = std::find(comps.begin(), comps.end(), s) != comps.end();
        component.record(cocovers(p, s).contains(a) == is_component,
                         [&] { return where() + " a=" + format_elem(p, a); });
      });

      covers(p, s).for_each([&](Elem x) {
        const Subset v = s | (p.down_of(x) - down);
        if (!is_spread(p, v)) return;
        extension.record(cocovers(p, v) == cocovers(p, s), [&] { return where() + " x=" + format_elem(p, x); });
      });
    }
  }
  return report;
}

}  // namespace spreadres
