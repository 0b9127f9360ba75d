#include "spreadres/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace spreadres {

namespace {

std::optional<int> parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// Splits on commas or semicolons outside parentheses.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == ',' || ch == ';') && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const CapExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::string edge_key(Elem x, Elem y) { return std::to_string(x) + "->" + std::to_string(y); }

}  // namespace

PosetPtr poset_from_json(const json& j, int cap) {
  return guarded("poset", [&] {
    const std::string type = j.at("type").get<std::string>();
    if (type == "grid") return Poset::grid(j.at("factors").get<std::vector<int>>(), cap);
    if (type != "explicit") throw InputError("poset: unknown type '" + type + "'");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<Elem, Elem>> rel;
    for (const auto& r : j.value("relations", json::array())) {
      if (!r.is_array() || r.size() != 2) throw InputError("poset: relations must be pairs");
      rel.emplace_back(r[0].get<int>(), r[1].get<int>());
    }
    std::vector<std::string> labels = j.value("labels", std::vector<std::string>{});
    return Poset::from_relations(n, rel, std::move(labels), cap);
  });
}

json poset_to_json(const Poset& p) {
  if (p.is_grid()) return json{{"type", "grid"}, {"factors", p.factors()}};
  json rel = json::array();
  for (auto [a, b] : p.cover_relations()) rel.push_back({a, b});
  json out{{"type", "explicit"}, {"n", p.size()}, {"relations", rel}};
  if (!p.labels().empty()) out["labels"] = p.labels();
  return out;
}

PosetPtr parse_grid(const std::string& spec, int cap) {
  std::vector<int> factors;
  for (const auto& part : split(spec, 'x')) {
    auto v = parse_int(part);
    if (!v || *v < 1) throw InputError("grid: cannot parse '" + spec + "' (expected e.g. 4x2)");
    factors.push_back(*v);
  }
  if (factors.empty()) throw InputError("grid: empty specification");
  return guarded("grid", [&] { return Poset::grid(factors, cap); });
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Field field) {
  if (!j.is_array() || j.size() != rows) throw InputError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(j[r][c].get<std::int64_t>());
  }
  return m;
}

RepPtr rep_from_json(const json& j, int cap) {
  PosetPtr p = poset_from_json(guarded("representation", [&] { return j.at("poset"); }), cap);
  return rep_from_json(j, p);
}

RepPtr rep_from_json(const json& j, const PosetPtr& poset) {
  return guarded("representation", [&] {
    const Field field(j.value("p", 2u));
    auto dims = j.at("dims").get<std::vector<int>>();
    if (static_cast<int>(dims.size()) != poset->size()) throw InputError("representation: dims length mismatch");
    const json maps = j.value("maps", json::object());
    for (const auto& [key, value] : maps.items()) {
      auto parts = split(key, '-');
      bool known = false;
      if (parts.size() == 2 && !parts[1].empty() && parts[1][0] == '>') {
        auto x = parse_int(parts[0]);
        auto y = parse_int(parts[1].substr(1));
        known = x && y && *x >= 0 && *y >= 0 && *x < poset->size() && *y < poset->size() && poset->edge_index(*x, *y) >= 0;
      }
      if (!known) throw InputError("representation: '" + key + "' is not a Hasse edge");
    }
    std::vector<Matrix> edge_maps;
    for (auto [x, y] : poset->hasse()) {
      const auto rows = static_cast<std::size_t>(dims[y]);
      const auto cols = static_cast<std::size_t>(dims[x]);
      const std::string key = edge_key(x, y);
      if (maps.contains(key)) {
        edge_maps.push_back(matrix_from_json(maps.at(key), rows, cols, field));
      } else if (rows == 0 || cols == 0) {
        edge_maps.emplace_back(rows, cols, field);
      } else {
        throw InputError("representation: missing map for edge " + key);
      }
    }
    try {
      return std::make_shared<const Representation>(validate_representation(poset, field, dims, std::move(edge_maps)));
    } catch (const FunctorialityError& e) {
      throw InputError(std::string("representation: ") + e.what());
    }
  });
}

json rep_to_json(const Representation& m) {
  json maps = json::object();
  const auto& hasse = m.poset().hasse();
  for (std::size_t i = 0; i < hasse.size(); ++i) {
    auto [x, y] = hasse[i];
    if (m.dim(x) == 0 || m.dim(y) == 0) continue;
    maps[edge_key(x, y)] = matrix_to_json(m.edge_map(static_cast<int>(i)));
  }
  return json{{"poset", poset_to_json(m.poset())}, {"p", m.field().p()}, {"dims", m.dims()}, {"maps", maps}};
}

json morphism_to_json(const RepMorphism& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(matrix_to_json(c));
  return json{{"source", rep_to_json(*f.source())}, {"target", rep_to_json(*f.target())}, {"components", comps}};
}

AlignedGridInclusion inclusion_from_json(const json& j) {
  return guarded("inclusion", [&] {
    auto maps = j.at("factors").get<std::vector<std::vector<int>>>();
    std::vector<int> source_sizes, target_sizes;
    for (const auto& m : maps) {
      if (m.empty()) throw InputError("inclusion: empty factor map");
      source_sizes.push_back(static_cast<int>(m.size()));
      target_sizes.push_back(*std::max_element(m.begin(), m.end()) + 1);
    }
    if (j.contains("target")) target_sizes = j.at("target").get<std::vector<int>>();
    return AlignedGridInclusion(Poset::grid(source_sizes), Poset::grid(target_sizes), std::move(maps));
  });
}

json inclusion_to_json(const AlignedGridInclusion& i) {
  return json{{"factors", i.factor_maps()}, {"target", i.target().factors()}};
}

Elem parse_element(const Poset& p, const std::string& token) {
  if (auto l = p.find_label(token)) return *l;
  if (auto v = parse_int(token)) {
    if (*v < 0 || *v >= p.size()) throw InputError("element index out of range: " + token);
    return *v;
  }
  if (p.is_grid()) {
    std::string t = token;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::replace(t.begin(), t.end(), ',', '.');
    std::vector<int> coords;
    for (const auto& part : split(t, '.')) {
      auto v = parse_int(part);
      if (!v) throw InputError("cannot parse element '" + token + "'");
      coords.push_back(*v);
    }
    return guarded("element", [&] { return p.at(coords); });
  }
  throw InputError("unknown element '" + token + "'");
}

Subset parse_spread(const Poset& p, const std::string& spec) {
  Subset s;
  if (spec.rfind("up-", 0) == 0) {
    s = p.up_of(parse_element(p, spec.substr(3)));
  } else if (spec.rfind("down-", 0) == 0) {
    s = p.down_of(parse_element(p, spec.substr(5)));
  } else if (spec.rfind("elems:", 0) == 0) {
    for (const auto& tok : split_list(spec.substr(6))) {
      if (!tok.empty()) s.insert(parse_element(p, tok));
    }
  } else if (!spec.empty() && spec[0] == '#') {
    auto idx = parse_int(spec.substr(1));
    auto all = enumerate_spreads(p);
    if (!idx || *idx < 0 || *idx >= static_cast<int>(all.size())) throw InputError("spread index out of range: " + spec);
    s = all[static_cast<std::size_t>(*idx)].members;
  } else {
    throw InputError("cannot parse spread '" + spec + "' (use up-X, down-X, elems:X,Y or #N)");
  }
  if (!is_spread(p, s)) throw InputError("'" + spec + "' is not a spread");
  return s;
}

json subset_to_json(const Poset& p, Subset s) {
  json out = json::array();
  s.for_each([&](Elem e) { out.push_back(format_elem(p, e)); });
  return out;
}

json spread_to_json(const Poset& p, Subset s) {
  return json{{"min", subset_to_json(p, minimal(p, s))}, {"cover", subset_to_json(p, covers(p, s))},
              {"elements", subset_to_json(p, s)}};
}

}  // namespace spreadres
