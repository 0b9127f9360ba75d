#include "spreadres/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace spreadres {

Subset Subset::of(const std::vector<Elem>& elems) {
  Subset s;
  for (Elem e : elems) {
    if (e < 0 || e >= 64) throw std::out_of_range("element index out of range: " + std::to_string(e));
    s.insert(e);
  }
  return s;
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

namespace {

void check_cap(int n, int cap) {
  if (cap > kDefaultElementCap) cap = kDefaultElementCap;
  if (n > cap) {
    throw CapExceeded("poset has " + std::to_string(n) + " elements, cap is " + std::to_string(cap));
  }
}

}  // namespace

PosetPtr Poset::from_relations(int n, const std::vector<std::pair<Elem, Elem>>& relations,
                               std::vector<std::string> labels, int cap) {
  if (n < 1) throw std::invalid_argument("poset must have at least one element");
  check_cap(n, cap);
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("label count does not match element count");
  }
  auto p = std::shared_ptr<Poset>(new Poset());
  p->n_ = n;
  p->up_.assign(static_cast<std::size_t>(n), Subset{});
  for (Elem i = 0; i < n; ++i) p->up_[i].insert(i);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("relation (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    p->up_[a].insert(b);
  }
  // Transitive closure.
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (p->up_[i].contains(k)) p->up_[i] |= p->up_[k];
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (p->up_[i].contains(j) && p->up_[j].contains(i)) {
        throw NotAPartialOrder("not a partial order: elements " + std::to_string(i) + " and " +
                               std::to_string(j) + " lie on a cycle");
      }
    }
  }
  p->labels_ = std::move(labels);
  p->finalize();
  return p;
}

PosetPtr Poset::grid(const std::vector<int>& factors, int cap) {
  if (factors.empty()) throw std::invalid_argument("grid needs at least one factor");
  long long total = 1;
  for (int m : factors) {
    if (m < 1) throw std::invalid_argument("grid factor sizes must be positive");
    total *= m;
    if (total > 64) break;
  }
  check_cap(static_cast<int>(std::min<long long>(total, 1 << 20)), cap);
  const int n = static_cast<int>(total);
  auto p = std::shared_ptr<Poset>(new Poset());
  p->n_ = n;
  p->factors_ = factors;
  p->coords_.resize(static_cast<std::size_t>(n));
  for (Elem e = 0; e < n; ++e) {
    std::vector<int> c(factors.size());
    int rest = e;
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = rest % factors[i];
      rest /= factors[i];
    }
    p->coords_[e] = std::move(c);
  }
  p->up_.assign(static_cast<std::size_t>(n), Subset{});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < factors.size() && le; ++i) le = p->coords_[a][i] <= p->coords_[b][i];
      if (le) p->up_[a].insert(b);
    }
  }
  p->finalize();
  return p;
}

void Poset::finalize() {
  down_.assign(static_cast<std::size_t>(n_), Subset{});
  for (Elem a = 0; a < n_; ++a) up_[a].for_each([&](Elem b) { down_[b].insert(a); });
  hasse_.clear();
  edge_index_.assign(static_cast<std::size_t>(n_ * n_), -1);
  upper_covers_.assign(static_cast<std::size_t>(n_), {});
  lower_covers_.assign(static_cast<std::size_t>(n_), {});
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      if (x == y || !leq(x, y)) continue;
      Subset between = (up_[x] & down_[y]) - Subset::singleton(x) - Subset::singleton(y);
      if (between.empty()) hasse_.emplace_back(x, y);
    }
  }
  for (std::size_t i = 0; i < hasse_.size(); ++i) {
    auto [x, y] = hasse_[i];
    edge_index_[static_cast<std::size_t>(x * n_ + y)] = static_cast<int>(i);
    upper_covers_[x].push_back(y);
    lower_covers_[y].push_back(x);
  }
  topo_.resize(static_cast<std::size_t>(n_));
  std::iota(topo_.begin(), topo_.end(), 0);
  std::stable_sort(topo_.begin(), topo_.end(),
                   [&](Elem a, Elem b) { return down_[a].size() < down_[b].size(); });
}

std::string Poset::label(Elem e) const {
  if (!labels_.empty()) return labels_[e];
  return format_elem(*this, e);
}

std::optional<Elem> Poset::find_label(const std::string& s) const {
  for (Elem e = 0; e < n_; ++e) {
    if (!labels_.empty() && labels_[e] == s) return e;
  }
  return std::nullopt;
}

Elem Poset::at(const std::vector<int>& c) const {
  if (c.size() != factors_.size()) throw std::invalid_argument("coordinate arity mismatch");
  Elem idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= factors_[i]) throw std::out_of_range("grid coordinate out of range");
    idx = idx * factors_[i] + c[i];
  }
  return idx;
}

Subset closure(const Poset& p, Subset s, Direction dir) {
  Subset out;
  s.for_each([&](Elem e) { out |= dir == Direction::up ? p.up_of(e) : p.down_of(e); });
  return out;
}

Subset upset(const Poset& p, Subset s) { return closure(p, s, Direction::up); }
Subset downset(const Poset& p, Subset s) { return closure(p, s, Direction::down); }

Subset extrema(const Poset& p, Subset s, Direction dir) {
  Subset out;
  s.for_each([&](Elem e) {
    const Subset strict = (dir == Direction::up ? p.down_of(e) : p.up_of(e)) - Subset::singleton(e);
    // min: nothing of S strictly below; max: nothing strictly above.
    if (!strict.intersects(s)) out.insert(e);
  });
  return out;
}

Subset minimal(const Poset& p, Subset s) { return extrema(p, s, Direction::up); }
Subset maximal(const Poset& p, Subset s) { return extrema(p, s, Direction::down); }

Subset frontier(const Poset& p, Subset s, Direction dir) {
  if (dir == Direction::up) return minimal(p, upset(p, s) - s);
  return maximal(p, downset(p, s) - s);
}

Subset covers(const Poset& p, Subset s) { return frontier(p, s, Direction::up); }
Subset cocovers(const Poset& p, Subset s) { return frontier(p, s, Direction::down); }

Subset segment(const Poset& p, Elem a, Elem b) { return p.up_of(a) & p.down_of(b); }

Subset incomparable(const Poset& p, Subset s) { return p.all() - upset(p, s) - downset(p, s); }

Subset convex_hull(const Poset& p, Subset s) { return upset(p, s) & downset(p, s); }

bool is_antichain(const Poset& p, Subset s) { return minimal(p, s) == s; }

bool is_convex(const Poset& p, Subset s) { return convex_hull(p, s) == s; }

bool is_connected(const Poset& p, Subset s) {
  if (s.empty()) return false;
  Subset seen = Subset::singleton(s.first());
  Subset frontier_set = seen;
  while (!frontier_set.empty()) {
    Subset next;
    frontier_set.for_each([&](Elem e) { next |= (p.up_of(e) | p.down_of(e)) & s; });
    next -= seen;
    seen |= next;
    frontier_set = next;
  }
  return seen == s;
}

bool is_spread(const Poset& p, Subset s) {
  return !s.empty() && s.subset_of(p.all()) && is_convex(p, s) && is_connected(p, s);
}

bool is_upset(const Poset& p, Subset s) { return upset(p, s) == s; }
bool is_downset(const Poset& p, Subset s) { return downset(p, s) == s; }

std::vector<Subset> connected_components(const Poset& p, Subset s) {
  std::vector<Subset> out;
  Subset rest = s;
  while (!rest.empty()) {
    Subset comp = Subset::singleton(rest.first());
    Subset frontier_set = comp;
    while (!frontier_set.empty()) {
      Subset next;
      frontier_set.for_each([&](Elem e) { next |= (p.up_of(e) | p.down_of(e)) & rest; });
      next -= comp;
      comp |= next;
      frontier_set = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

RegionDecomposition region_decomposition(const Poset& p, Subset s) {
  if (!is_convex(p, s)) throw std::invalid_argument("region decomposition needs a convex set");
  return {s, upset(p, s) - s, downset(p, s) - s, incomparable(p, s)};
}

Spread make_spread(const Poset& p, Subset s) {
  if (!is_spread(p, s)) throw std::invalid_argument("not a spread: " + format_subset(p, s));
  return {s, minimal(p, s), covers(p, s)};
}

std::vector<Spread> enumerate_spreads(const Poset& p, int cap) {
  check_cap(p.size(), cap);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Subset> layer;
  for (Elem e = 0; e < p.size(); ++e) {
    layer.push_back(Subset::singleton(e));
    seen.insert(Subset::singleton(e).bits());
  }
  std::vector<Subset> all = layer;
  while (!layer.empty()) {
    std::vector<Subset> next;
    for (Subset s : layer) {
      Subset neighbours;
      s.for_each([&](Elem e) {
        for (Elem y : p.upper_covers(e)) neighbours.insert(y);
        for (Elem y : p.lower_covers(e)) neighbours.insert(y);
      });
      neighbours -= s;
      neighbours.for_each([&](Elem x) {
        Subset grown = convex_hull(p, s | Subset::singleton(x));
        if (seen.insert(grown.bits()).second) next.push_back(grown);
      });
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), canonical_less);
  std::vector<Spread> out;
  out.reserve(all.size());
  for (Subset s : all) out.push_back({s, minimal(p, s), covers(p, s)});
  return out;
}

std::vector<Spread> enumerate_spreads_brute(const Poset& p) {
  if (p.size() > 20) throw CapExceeded("brute-force spread enumeration is limited to 20 elements");
  std::vector<Subset> all;
  const std::uint64_t limit = std::uint64_t{1} << p.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    if (is_spread(p, Subset{bits})) all.emplace_back(bits);
  }
  std::sort(all.begin(), all.end(), canonical_less);
  std::vector<Spread> out;
  for (Subset s : all) out.push_back({s, minimal(p, s), covers(p, s)});
  return out;
}

std::optional<Spread> spread_from_antichains(const Poset& p, Subset a, Subset b) {
  const Subset s = upset(p, a) - upset(p, b);
  if (!is_spread(p, s)) return std::nullopt;
  return Spread{s, minimal(p, s), covers(p, s)};
}

PosetPtr opposite(const Poset& p) {
  auto q = std::shared_ptr<Poset>(new Poset());
  q->n_ = p.n_;
  q->up_ = p.down_;
  q->labels_ = p.labels_;
  q->finalize();
  return q;
}

namespace {

void require_grid(const Poset& g) {
  if (!g.is_grid()) throw std::invalid_argument("operation requires a grid poset");
}

}  // namespace

Elem grid_add(const Poset& g, Elem x, Elem y) {
  require_grid(g);
  std::vector<int> c(g.factors().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = std::min(g.factors()[i] - 1, g.coords(x)[i] + g.coords(y)[i]);
  }
  return g.at(c);
}

Elem grid_join(const Poset& g, Elem x, Elem y) {
  require_grid(g);
  std::vector<int> c(g.factors().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(g.coords(x)[i], g.coords(y)[i]);
  return g.at(c);
}

Elem grid_sub(const Poset& g, Elem x, Elem y) {
  require_grid(g);
  std::vector<int> c(g.factors().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(0, g.coords(x)[i] - g.coords(y)[i]);
  return g.at(c);
}

Elem grid_arith(const Poset& g, Elem x, Elem y, Sign sign) {
  return sign == Sign::plus ? grid_add(g, x, y) : grid_sub(g, x, y);
}

Elem unit_vector(const Poset& g, int axis) {
  require_grid(g);
  std::vector<int> c(g.factors().size(), 0);
  c.at(static_cast<std::size_t>(axis)) = std::min(1, g.factors()[static_cast<std::size_t>(axis)] - 1);
  return g.at(c);
}

Elem grid_origin(const Poset& g) {
  require_grid(g);
  return g.at(std::vector<int>(g.factors().size(), 0));
}

int max_antichain_size(const Poset& p) {
  // Minimum chain cover = n - maximum matching in the bipartite graph of
  // strict comparabilities (Dilworth / Fulkerson).
  const int n = p.size();
  std::vector<int> match_right(static_cast<std::size_t>(n), -1);
  auto augment = [&](auto&& self, Elem x, std::vector<bool>& visited) -> bool {
    bool found = false;
    (p.up_of(x) - Subset::singleton(x)).for_each([&](Elem y) {
      if (found || visited[y]) return;
      visited[y] = true;
      if (match_right[y] < 0 || self(self, match_right[y], visited)) {
        match_right[y] = x;
        found = true;
      }
    });
    return found;
  };
  int matching = 0;
  for (Elem x = 0; x < n; ++x) {
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    if (augment(augment, x, visited)) ++matching;
  }
  return n - matching;
}

int max_antichain_size_brute(const Poset& p) {
  int best = 0;
  auto rec = [&](auto&& self, Elem next, Subset chosen, Subset allowed) -> void {
    best = std::max(best, chosen.size());
    for (Elem e = next; e < p.size(); ++e) {
      if (!allowed.contains(e)) continue;
      const Subset blocked = p.up_of(e) | p.down_of(e);
      self(self, e + 1, chosen | Subset::singleton(e), allowed - blocked);
    }
  };
  rec(rec, 0, Subset{}, p.all());
  return best;
}

InducedSubposet induced_subposet(const Poset& p, Subset sub) {
  InducedSubposet out;
  out.to_parent = sub.elements();
  out.from_parent.assign(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = static_cast<Elem>(i);
  std::vector<std::pair<Elem, Elem>> rel;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    labels.push_back(p.label(out.to_parent[i]));
    for (std::size_t j = 0; j < out.to_parent.size(); ++j) {
      if (i != j && p.leq(out.to_parent[i], out.to_parent[j])) rel.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
    }
  }
  out.poset = Poset::from_relations(static_cast<int>(out.to_parent.size()), rel, std::move(labels));
  return out;
}

std::string format_elem(const Poset& p, Elem e) {
  if (p.is_grid()) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.coords(e).size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p.coords(e)[i]);
    }
    return s + ")";
  }
  if (!p.labels().empty()) return p.labels()[e];
  return std::to_string(e);
}

std::string format_subset(const Poset& p, Subset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ",";
    first = false;
    out += format_elem(p, e);
  });
  return out + "}";
}

}  // namespace spreadres
