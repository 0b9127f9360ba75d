#include "spreadres/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "spreadres/io.hpp"
#include "spreadres/suites.hpp"

namespace spreadres::cli {

namespace {

struct Globals {
  std::vector<std::string> grids;
  std::vector<std::string> poset_files;
  std::string rep_file;
  std::string json_out;
  std::uint32_t field = 2;
  std::vector<std::uint32_t> fields;
  int threads = 1;
  std::uint64_t seed = 7;
  double time_budget = 1800.0;
  bool timings = false;
};

/// Text lines plus the machine-readable form of one report.
struct Report {
  std::ostringstream text;
  json data = json::object();
  int exit_code = kExitOk;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string poset_description(const Poset& p) {
  if (p.is_grid()) {
    std::string s;
    for (std::size_t i = 0; i < p.factors().size(); ++i) s += (i ? "x[" : "[") + std::to_string(p.factors()[i]) + "]";
    return s + " (" + std::to_string(p.size()) + " elements)";
  }
  return "explicit (" + std::to_string(p.size()) + " elements, " + std::to_string(p.hasse().size()) + " cover relations)";
}

std::string describe_spread(const Poset& p, Subset s) {
  const Spread sp = make_spread(p, s);
  std::string out = "up" + format_subset(p, sp.minima);
  if (!sp.covers.empty()) out += " - up" + format_subset(p, sp.covers);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

std::vector<NamedPoset> collect_posets(const Globals& g) {
  std::vector<NamedPoset> out;
  for (const auto& spec : g.grids) {
    for (const auto& one : split_commas(spec)) out.push_back({one, parse_grid(one)});
  }
  for (const auto& file : g.poset_files) {
    out.push_back({std::filesystem::path(file).stem().string(), poset_from_json(read_json_file(file))});
  }
  return out;
}

PosetPtr single_poset(const Globals& g, bool allow_rep) {
  auto posets = collect_posets(g);
  if (posets.size() > 1) throw InputError("expected a single poset");
  if (posets.size() == 1) return posets.front().poset;
  if (allow_rep && !g.rep_file.empty()) return poset_from_json(read_json_file(g.rep_file).at("poset"));
  throw InputError("no poset given (use --grid KxM or --poset FILE)");
}

RepPtr load_rep(const Globals& g) {
  if (g.rep_file.empty()) throw InputError("this command needs --rep FILE");
  const json j = read_json_file(g.rep_file);
  auto posets = collect_posets(g);
  if (posets.size() > 1) throw InputError("expected a single poset");
  if (!posets.empty()) return rep_from_json(j, posets.front().poset);
  if (!j.contains("poset")) throw InputError("representation has no poset; give --grid or --poset");
  return rep_from_json(j);
}

std::vector<Field> chosen_fields(const Globals& g) {
  std::vector<Field> out;
  try {
    if (g.fields.empty()) {
      out.emplace_back(g.field);
    } else {
      for (auto p : g.fields) out.emplace_back(p);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return out;
}

Field chosen_field(const Globals& g) { return chosen_fields(g).front(); }

json approximation_json(const SpreadFamily& f, const Approximation& a) {
  json summands = json::array();
  for (auto [idx, mult] : a.multiplicities()) {
    json s = spread_to_json(f.poset(), f.spread(idx).members);
    s["multiplicity"] = mult;
    summands.push_back(s);
  }
  return summands;
}

void print_approximation(std::ostream& os, const SpreadFamily& f, const Approximation& a, const std::string& indent) {
  for (auto [idx, mult] : a.multiplicities()) {
    const Subset s = f.spread(idx).members;
    os << indent << describe_spread(f.poset(), s) << "  " << format_subset(f.poset(), s);
    if (mult > 1) os << "  x" << mult;
    os << "\n";
  }
}

json suite_json(const SuiteReport& r, bool timings) {
  json props = json::array();
  for (const auto& p : r.properties) {
    props.push_back({{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}, {"examples", p.examples}});
  }
  json out{{"suite", r.suite}, {"passed", r.passed()}, {"properties", props}};
  if (r.stabilization) {
    json rows = json::array();
    for (const auto& row : r.stabilization->rows) {
      json jr{{"k", row.k}, {"status", row.status}, {"gldim", row.gldim ? json(*row.gldim) : json(nullptr)}};
      if (timings) jr["seconds"] = row.seconds;
      rows.push_back(jr);
    }
    out["table"] = rows;
  }
  return out;
}

void print_table(std::ostream& os, const StabilizationReport& t, bool timings) {
  os << "g_" << t.m << "(k) = spread gldim of [k]x[" << t.m << "] over GF(" << t.p << ")\n";
  os << "k\tgldim\tstatus" << (timings ? "\tseconds" : "") << "\n";
  for (const auto& row : t.rows) {
    os << row.k << "\t" << (row.gldim ? std::to_string(*row.gldim) : "-") << "\t" << row.status;
    if (timings) os << "\t" << seconds(row.seconds);
    os << "\n";
  }
  os << "monotone: " << (t.monotone() ? "yes" : "no") << "\n";
  if (auto onset = t.onset()) os << "constant from k = " << *onset << "\n";
  os << "k* = " << t.k_star << "\n";
}

void print_suite(std::ostream& os, const SuiteReport& r, bool timings) {
  os << "suite: " << r.suite << "\n";
  for (const auto& p : r.properties) {
    os << "property " << p.name << ": " << p.cases << " cases, " << p.failures << " failures\n";
    for (const auto& e : p.examples) os << "  fail: " << e << "\n";
  }
  if (r.stabilization) print_table(os, *r.stabilization, timings);
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

void merge_into(SuiteReport& into, const SuiteReport& from) {
  for (const auto& p : from.properties) {
    auto& q = into.property(p.name);
    q.cases += p.cases;
    q.failures += p.failures;
    for (const auto& e : p.examples) {
      if (static_cast<int>(q.examples.size()) < kMaxExamples) q.examples.push_back(e);
    }
  }
  if (from.stabilization && !into.stabilization) into.stabilization = from.stabilization;
}

// ---- verbs

void cmd_spreads(const Globals& g, bool count_only, Report& r) {
  const PosetPtr p = single_poset(g, true);
  const auto spreads = enumerate_spreads(*p);
  r.data["poset"] = poset_to_json(*p);
  r.data["count"] = spreads.size();
  if (count_only) {
    r.text << spreads.size() << "\n";
    return;
  }
  r.text << "poset: " << poset_description(*p) << "\n";
  r.text << "spreads: " << spreads.size() << "\n";
  json list = json::array();
  for (std::size_t i = 0; i < spreads.size(); ++i) {
    r.text << "#" << i << " " << format_subset(*p, spreads[i].members) << "  " << describe_spread(*p, spreads[i].members)
           << "\n";
    list.push_back(spread_to_json(*p, spreads[i].members));
  }
  r.data["spreads"] = list;
}

void cmd_hom(const Globals& g, const std::string& source, const std::string& target, Report& r) {
  if (source.empty()) throw InputError("hom needs --source SPREAD");
  if (target.empty() && g.rep_file.empty()) throw InputError("hom needs --target SPREAD or --rep FILE");
  const Field field = chosen_field(g);
  RepPtr m;
  PosetPtr p;
  if (target.empty()) {
    m = load_rep(g);
    p = m->poset_ptr();
  } else {
    p = single_poset(g, false);
  }
  const Subset s = parse_spread(*p, source);
  const RepPtr ks = indicator_rep(p, m ? m->field() : field, s);
  r.data["source"] = spread_to_json(*p, s);
  if (!m) {
    const Subset t = parse_spread(*p, target);
    auto f = SpreadFamily(p, field, {make_spread(*p, s), make_spread(*p, t)});
    if (s == t) {
      r.text << "Hom(k_S, k_S) = k (identity)\n";
      r.data["target"] = r.data["source"];
      r.data["dim"] = 1;
      return;
    }
    const auto& comps = f.hom_components(f.index_of(s).value(), f.index_of(t).value());
    r.text << "S = " << describe_spread(*p, s) << "\n";
    r.text << "T = " << describe_spread(*p, t) << "\n";
    r.text << "dim Hom(k_S, k_T) = " << comps.size() << "\n";
    json jc = json::array();
    for (std::size_t k = 0; k < comps.size(); ++k) {
      r.text << "  basis " << k << ": identity on " << format_subset(*p, comps[k]) << "\n";
      jc.push_back(subset_to_json(*p, comps[k]));
    }
    r.data["target"] = spread_to_json(*p, t);
    r.data["dim"] = comps.size();
    r.data["components"] = jc;
  } else {
    const int d = hom_dim(*ks, *m);
    r.text << "S = " << describe_spread(*p, s) << "\n";
    r.text << "dim Hom(k_S, M) = " << d << "\n";
    r.data["dim"] = d;
  }
}

void cmd_approx(const Globals& g, Report& r) {
  const RepPtr m = load_rep(g);
  auto f = SpreadFamily::all_spreads(m->poset_ptr(), m->field());
  const Approximation a = minimal_approximation(f, m);
  const bool ok = is_approximation(f, a.morphism);
  r.text << "target dims: " << join_ints(m->dims()) << "\n";
  r.text << "summands (" << a.summands.size() << "):\n";
  print_approximation(r.text, f, a, "  ");
  r.text << "approximation property: " << (ok ? "holds" : "FAILS") << "\n";
  r.text << "isomorphism: " << (a.morphism.is_iso() ? "yes" : "no") << "\n";
  r.data["target"] = rep_to_json(*m);
  r.data["summands"] = approximation_json(f, a);
  r.data["is_approximation"] = ok;
  r.data["is_iso"] = a.morphism.is_iso();
  if (!ok) r.exit_code = kExitAssertion;
}

void cmd_radapp(const Globals& g, const std::string& spread, Report& r) {
  if (spread.empty()) throw InputError("radapp needs --spread");
  const PosetPtr p = single_poset(g, false);
  const Subset s = parse_spread(*p, spread);
  auto f = SpreadFamily::all_spreads(p, chosen_field(g));
  const int idx = f.index_of(s).value();
  const Approximation a = minimal_radical_approximation(f, idx);
  std::vector<Subset> generic;
  for (int i : a.summands) generic.push_back(f.spread(i).members);
  std::sort(generic.begin(), generic.end(), canonical_less);
  const bool agrees = generic == radapp_domain_closed_form(*p, s);
  r.text << "target: " << describe_spread(*p, s) << "  " << format_subset(*p, s) << "\n";
  r.text << "summands (" << a.summands.size() << "):\n";
  print_approximation(r.text, f, a, "  ");
  r.text << "closed form: " << (agrees ? "agrees" : "DISAGREES") << "\n";
  r.data["target"] = spread_to_json(*p, s);
  r.data["summands"] = approximation_json(f, a);
  r.data["closed_form_agrees"] = agrees;
  if (!agrees) r.exit_code = kExitAssertion;
}

void cmd_resolve(const Globals& g, Report& r) {
  const RepPtr m = load_rep(g);
  auto f = SpreadFamily::all_spreads(m->poset_ptr(), m->field());
  const Resolution res = minimal_resolution(f, m);
  json steps = json::array();
  for (std::size_t j = 0; j < res.steps.size(); ++j) {
    const auto& st = res.steps[j];
    r.text << "step " << j << ":";
    if (g.timings) r.text << " (" << seconds(st.seconds) << " s)";
    r.text << "\n";
    print_approximation(r.text, f, st.approximation, "  ");
    r.text << "  kernel dims: " << join_ints(st.kernel->dims()) << "\n";
    json js{{"summands", approximation_json(f, st.approximation)}, {"kernel_dims", st.kernel->dims()}};
    if (g.timings) js["seconds"] = st.seconds;
    steps.push_back(js);
  }
  const auto len = res.length();
  r.text << "spread pdim: " << (len ? std::to_string(*len) : "none (zero module)") << "\n";
  r.data["steps"] = steps;
  r.data["pdim"] = len ? json(*len) : json(nullptr);
}

void cmd_gldim(const Globals& g, Report& r) {
  const PosetPtr p = single_poset(g, false);
  const Field field = chosen_field(g);
  const auto t0 = std::chrono::steady_clock::now();
  auto f = SpreadFamily::all_spreads(p, field);
  const GldimReport rep = spread_gldim(f, g.threads);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.text << "poset: " << poset_description(*p) << "\n";
  r.text << "spreads: " << f.size() << "\n";
  r.text << "spread gldim: " << rep.gldim << "\n";
  if (rep.witness) r.text << "witness: " << describe_spread(*p, f.spread(*rep.witness).members) << "\n";
  if (g.timings) r.text << "seconds: " << seconds(secs) << "\n";
  json pd = json::array();
  for (const auto& k : rep.kernel_pdims) pd.push_back(k ? json(*k) : json(nullptr));
  r.data["poset"] = poset_to_json(*p);
  r.data["p"] = field.p();
  r.data["spreads"] = f.size();
  r.data["gldim"] = rep.gldim;
  r.data["witness"] = rep.witness ? spread_to_json(*p, f.spread(*rep.witness).members) : json(nullptr);
  r.data["kernel_pdims"] = pd;
  if (g.timings) r.data["seconds"] = secs;
}

AlignedGridInclusion inclusion_from_flags(const std::string& file, const std::string& maps, const std::string& to) {
  if (!file.empty()) return inclusion_from_json(read_json_file(file));
  if (maps.empty()) throw InputError("kan-check needs --inclusion FILE or --maps 0,2,4/0,1");
  json j;
  std::vector<std::vector<int>> factors;
  std::istringstream in(maps);
  std::string part;
  while (std::getline(in, part, '/')) {
    std::vector<int> m;
    for (const auto& tok : split_commas(part)) {
      try {
        m.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("cannot parse --maps '" + maps + "'");
      }
    }
    factors.push_back(m);
  }
  j["factors"] = factors;
  if (!to.empty()) j["target"] = parse_grid(to)->factors();
  return inclusion_from_json(j);
}

void cmd_kan_check(const Globals& g, const std::string& file, const std::string& maps, const std::string& to, Report& r) {
  const AlignedGridInclusion inc = inclusion_from_flags(file, maps, to);
  const Field field = chosen_field(g);
  std::vector<AlignedGridInclusion> con;
  if (inc.origin_aligned()) con.push_back(inc);
  SuiteReport suite = verify_spread_formulas({inc}, con, field);
  suite.suite = "kan-check";
  if (!g.rep_file.empty()) {
    const json j = read_json_file(g.rep_file);
    const RepPtr m = rep_from_json(j, inc.source_ptr());
    const RepPtr l = lan(inc, *m);
    suite.property("restriction-of-lan-is-identity").record(*restriction(inc, *l) == *m, [] { return std::string("M"); });
    suite.property("contraction-of-lan-dims").record(contraction(inc, *l)->dims() == m->dims(), [] { return std::string("M"); });
    r.text << "lan M dims: " << join_ints(l->dims()) << "\n";
    r.data["lan"] = rep_to_json(*l);
  }
  r.text << "inclusion: " << inclusion_to_json(inc).dump() << "\n";
  r.text << "origin aligned: " << (inc.origin_aligned() ? "yes" : "no") << "\n";
  print_suite(r.text, suite, g.timings);
  r.data["inclusion"] = inclusion_to_json(inc);
  r.data["report"] = suite_json(suite, g.timings);
  if (!suite.passed()) r.exit_code = kExitAssertion;
}

void cmd_stabilize(const Globals& g, int m, int kmin, int kmax, Report& r) {
  if (m < 1 || kmin < 1 || kmax < kmin) throw InputError("stabilize needs 1 <= m and 1 <= kmin <= kmax");
  const StabilizationReport t = stabilization_table(m, kmin, kmax, chosen_field(g), g.threads, g.time_budget);
  print_table(r.text, t, g.timings);
  json rows = json::array();
  for (const auto& row : t.rows) {
    json jr{{"k", row.k}, {"status", row.status}, {"gldim", row.gldim ? json(*row.gldim) : json(nullptr)}};
    if (g.timings) jr["seconds"] = row.seconds;
    rows.push_back(jr);
  }
  r.data = {{"m", m},
            {"p", t.p},
            {"rows", rows},
            {"monotone", t.monotone()},
            {"onset", t.onset() ? json(*t.onset()) : json(nullptr)},
            {"k_star", t.k_star}};
}

struct VerifyOptions {
  std::string from = "3x2";
  std::string to = "5x2,6x3";
  int trials = -1;
  int inclusions = -1;
  int m = 2;
  int kmin = 1;
  int kmax = 7;
  int max_m = 6;
  std::string corpus;
};

std::vector<NamedPoset> posets_or(const Globals& g, const std::vector<std::string>& defaults) {
  auto posets = collect_posets(g);
  if (posets.empty()) {
    for (const auto& d : defaults) posets.push_back({d, parse_grid(d)});
  }
  return posets;
}

std::vector<NamedPoset> corpus_posets(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) throw InputError("cannot read corpus directory " + dir);
  std::sort(files.begin(), files.end());
  std::vector<NamedPoset> out;
  for (const auto& f : files) out.push_back({f.stem().string(), poset_from_json(read_json_file(f.string()))});
  return out;
}

SuiteReport run_suite(const Globals& g, const std::string& name, const VerifyOptions& o) {
  const auto fields = chosen_fields(g);
  auto per_field = [&](auto&& fn) {
    SuiteReport out{name};
    for (Field f : fields) merge_into(out, fn(f));
    return out;
  };
  if (name == "radapp-closed-form") return verify_radapp_closed_form(posets_or(g, {"3x3", "4x3", "4x2"}), fields);
  if (name == "relative-simple") return verify_relative_simple(posets_or(g, {"4x2"}), fields);
  if (name == "kan-transport") {
    std::vector<PosetPtr> targets;
    for (const auto& t : split_commas(o.to)) targets.push_back(parse_grid(t));
    const PosetPtr source = parse_grid(o.from);
    auto rep = per_field([&](Field f) {
      return verify_kan_transport(source, targets, o.inclusions < 0 ? 5 : o.inclusions, o.trials < 0 ? 20 : o.trials, g.seed, f);
    });
    rep.seed = g.seed;
    return rep;
  }
  if (name == "spread-formulas") {
    auto posets = posets_or(g, {"6x2"});
    auto rep = per_field([&](Field f) {
      SuiteReport acc{name};
      for (const auto& np : posets) {
        auto inc = spread_formula_inclusions(np.poset, o.inclusions < 0 ? 3 : o.inclusions, g.seed);
        merge_into(acc, verify_spread_formulas(inc.lan, inc.contraction, f));
      }
      return acc;
    });
    rep.seed = g.seed;
    return rep;
  }
  if (name == "windows") {
    auto posets = posets_or(g, {"5x2", "4x3"});
    return per_field([&](Field f) { return verify_windows(posets, f); });
  }
  if (name == "sandwich") {
    auto posets = posets_or(g, {"2", "3", "2x2"});
    return per_field([&](Field f) { return verify_sandwich(posets, f); });
  }
  if (name == "chains") return verify_chains(o.trials < 0 ? 200 : o.trials, o.max_m, g.seed, fields);
  if (name == "stabilization") {
    if (o.m < 1 || o.kmin < 1 || o.kmax < o.kmin) throw InputError("stabilization needs 1 <= m and 1 <= kmin <= kmax");
    return per_field([&](Field f) { return verify_stabilization(o.m, o.kmin, o.kmax, f, g.threads, g.time_budget); });
  }
  if (name == "order-combinatorics") {
    auto posets = collect_posets(g);
    if (!o.corpus.empty()) {
      auto more = corpus_posets(o.corpus);
      posets.insert(posets.end(), more.begin(), more.end());
    }
    if (posets.empty()) throw InputError("order-combinatorics needs --corpus DIR, --poset FILE or --grid");
    return verify_order_combinatorics(posets);
  }
  throw InputError("unknown suite '" + name + "'");
}

void cmd_verify(const Globals& g, const std::string& name, const VerifyOptions& o, Report& r) {
  const SuiteReport suite = run_suite(g, name, o);
  print_suite(r.text, suite, g.timings);
  r.data = suite_json(suite, g.timings);
  if (!suite.passed()) r.exit_code = kExitAssertion;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spread resolutions of finite poset representations", "spreadres"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--grid", g.grids, "Inline grid such as 4x2 (comma-separated list where several posets are accepted)");
  app.add_option("--poset", g.poset_files, "Poset JSON file (repeatable)");
  app.add_option("--rep", g.rep_file, "Representation JSON file");
  app.add_option("--field", g.field, "Prime p of GF(p)");
  app.add_option("--fields", g.fields, "Comma-separated primes for multi-field suites")->delimiter(',');
  app.add_option("--threads", g.threads, "Worker threads for global-dimension sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled inputs");
  app.add_option("--json", g.json_out, "Write the JSON report to this path ('-' for stdout)");
  app.add_option("--time-budget", g.time_budget, "Seconds before remaining stabilization rows are skipped");
  app.add_flag("--timings", g.timings, "Include wall-clock timings (output is otherwise deterministic)");

  bool count_only = false;
  auto* spreads = app.add_subcommand("spreads", "Enumerate spreads in canonical order");
  spreads->add_flag("--count", count_only, "Print only the number of spreads");

  std::string source, target;
  auto* hom = app.add_subcommand("hom", "Hom(k_S, k_T) or Hom(k_S, M)");
  hom->add_option("--source", source, "Spread S");
  hom->add_option("--target", target, "Spread T");

  auto* approx = app.add_subcommand("approx", "Minimal spread approximation of --rep");

  std::string spread;
  auto* radapp = app.add_subcommand("radapp", "Minimal radical approximation of k_S");
  radapp->add_option("--spread", spread, "up-X, down-X, elems:X,Y or #N")->required();

  auto* resolve = app.add_subcommand("resolve", "Minimal spread resolution of --rep");
  auto* gldim = app.add_subcommand("gldim", "Spread-global dimension");

  std::string inc_file, inc_maps, inc_to;
  auto* kan = app.add_subcommand("kan-check", "Check lan/contraction formulas for one aligned grid inclusion");
  kan->add_option("--inclusion", inc_file, "Inclusion JSON file");
  kan->add_option("--maps", inc_maps, "Factor maps such as 0,2,4/0,1");
  kan->add_option("--to", inc_to, "Target grid (defaults to the smallest containing the image)");

  int stab_m = 2, stab_kmin = 1, stab_kmax = 7;
  auto* stabilize = app.add_subcommand("stabilize", "Table of spread gldim([k]x[m])");
  stabilize->add_option("--m", stab_m, "Second factor size");
  stabilize->add_option("--kmin", stab_kmin, "First k");
  stabilize->add_option("--kmax", stab_kmax, "Last k");

  std::string suite_name;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite_name, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--from", vo.from, "kan-transport source grid");
  verify->add_option("--to", vo.to, "kan-transport target grids, comma-separated");
  verify->add_option("--trials", vo.trials, "Random modules");
  verify->add_option("--inclusions", vo.inclusions, "Inclusions per target");
  verify->add_option("--m", vo.m, "stabilization: second factor size");
  verify->add_option("--kmin", vo.kmin, "stabilization: first k");
  verify->add_option("--kmax", vo.kmax, "stabilization: last k");
  verify->add_option("--max-m", vo.max_m, "chains: largest chain");
  verify->add_option("--corpus", vo.corpus, "order-combinatorics: directory of poset JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Report r;
  try {
    if (*spreads) cmd_spreads(g, count_only, r);
    else if (*hom) cmd_hom(g, source, target, r);
    else if (*approx) cmd_approx(g, r);
    else if (*radapp) cmd_radapp(g, spread, r);
    else if (*resolve) cmd_resolve(g, r);
    else if (*gldim) cmd_gldim(g, r);
    else if (*kan) cmd_kan_check(g, inc_file, inc_maps, inc_to, r);
    else if (*stabilize) cmd_stabilize(g, stab_m, stab_kmin, stab_kmax, r);
    else if (*verify) cmd_verify(g, suite_name, vo, r);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  r.data["seed"] = g.seed;
  r.text << "seed: " << g.seed << "\n";
  if (g.json_out == "-") {
    out << r.data.dump(2) << "\n";
  } else {
    out << r.text.str();
    if (!g.json_out.empty()) {
      std::ofstream f(g.json_out);
      if (!f) {
        err << "error: cannot write " << g.json_out << "\n";
        return kExitInput;
      }
      f << r.data.dump(2) << "\n";
    }
  }
  return r.exit_code;
}

}  // namespace spreadres::cli
