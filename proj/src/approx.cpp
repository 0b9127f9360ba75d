#include "spreadres/approx.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace spreadres {

namespace {

using Clock = std::chrono::steady_clock;

// Components of a convex set in the Hasse graph; for convex sets these agree
// with comparability components.
std::vector<Subset> convex_components(const std::vector<Subset>& neighbours, Subset s) {
  std::vector<Subset> out;
  while (!s.empty()) {
    Subset comp = Subset::singleton(s.first());
    Subset fresh = comp;
    while (!fresh.empty()) {
      Subset next;
      fresh.for_each([&](Elem x) { next |= neighbours[static_cast<std::size_t>(x)]; });
      next = (next & s) - comp;
      comp |= next;
      fresh = next;
    }
    out.push_back(comp);
    s -= comp;
  }
  return out;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

std::vector<std::size_t> support_offsets(const Representation& m, Subset s) {
  std::vector<std::size_t> off(static_cast<std::size_t>(m.poset().size()) + 1, 0);
  for (Elem p = 0; p < m.poset().size(); ++p) {
    off[p + 1] = off[p] + (s.contains(p) ? static_cast<std::size_t>(m.dim(p)) : 0);
  }
  return off;
}

Approximation assemble(const SpreadFamily& f, const RepPtr& target, std::vector<int> summands,
                       std::vector<RepMorphism> maps) {
  std::vector<RepPtr> reps;
  std::vector<std::string> labels;
  for (int i : summands) {
    reps.push_back(f.rep(i));
    labels.push_back(format_subset(f.poset(), f.spread(i).members));
  }
  DirectSum domain = direct_sum(f.poset_ptr(), f.field(), reps, std::move(labels));
  RepMorphism morphism = morphism_from_sum(domain, target, maps);
  return Approximation{target, std::move(summands), std::move(domain), std::move(morphism)};
}

}  // namespace

SpreadFamily SpreadFamily::all_spreads(PosetPtr poset, Field field, int cap) {
  auto spreads = enumerate_spreads(*poset, cap);
  return SpreadFamily(std::move(poset), field, std::move(spreads));
}

SpreadFamily SpreadFamily::projectives(PosetPtr poset, Field field) {
  std::vector<Spread> spreads;
  for (Elem p = 0; p < poset->size(); ++p) spreads.push_back(make_spread(*poset, poset->up_of(p)));
  return SpreadFamily(std::move(poset), field, std::move(spreads));
}

SpreadFamily::SpreadFamily(PosetPtr poset, Field field, std::vector<Spread> spreads)
    : poset_(std::move(poset)), field_(field), spreads_(std::move(spreads)) {
  std::vector<std::uint64_t> seen;
  for (const auto& s : spreads_) {
    if (!is_spread(*poset_, s.members)) throw std::invalid_argument("family member is not a spread");
    seen.push_back(s.members.bits());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("family members must be pairwise distinct");
  }
  build();
}

std::optional<int> SpreadFamily::index_of(Subset members) const {
  for (int i = 0; i < size(); ++i)
    if (spreads_[static_cast<std::size_t>(i)].members == members) return i;
  return std::nullopt;
}

void SpreadFamily::build() {
  const auto n = spreads_.size();
  const Poset& p = *poset_;
  std::vector<Subset> upper(static_cast<std::size_t>(p.size())), lower(static_cast<std::size_t>(p.size()));
  std::vector<Subset> neighbours(static_cast<std::size_t>(p.size()));
  for (Elem x = 0; x < p.size(); ++x) {
    upper[x] = Subset::of(p.upper_covers(x));
    lower[x] = Subset::of(p.lower_covers(x));
    neighbours[x] = upper[x] | lower[x];
  }
  for (const auto& s : spreads_) reps_.push_back(indicator_rep(poset_, field_, s.members));

  homs_.assign(n * n, {});
  out_.assign(n, {});
  in_.assign(n, {});
  for (std::size_t t = 0; t < n; ++t) {
    const Subset tm = spreads_[t].members;
    for (std::size_t s = 0; s < n; ++s) {
      const Subset sm = spreads_[s].members;
      const Subset both = tm & sm;
      if (both.empty()) continue;
      const Subset s_only = sm - tm;
      const Subset t_only = tm - sm;
      Subset bad;
      both.for_each([&](Elem x) {
        if (upper[x].intersects(s_only) || lower[x].intersects(t_only)) bad.insert(x);
      });
      auto& homs = homs_[t * n + s];
      for (Subset comp : convex_components(neighbours, both))
        if (!comp.intersects(bad)) homs.push_back(comp);
      if (!homs.empty() && t != s) {
        out_[t].push_back(static_cast<int>(s));
        in_[s].push_back(static_cast<int>(t));
      }
    }
  }

  irr_.assign(n * n, {});
  for (std::size_t t = 0; t < n; ++t) {
    for (int s : out_[t]) {
      const int ti = static_cast<int>(t);
      const int dim = hom_dim(ti, s);
      SpanBuilder rad2(static_cast<std::size_t>(dim), field_);
      for (int u : out_[t]) {
        if (u == s || hom_dim(u, s) == 0) continue;
        for (int i = 0; i < hom_dim(ti, u) && static_cast<int>(rad2.dim()) < dim; ++i)
          for (int j = 0; j < hom_dim(u, s) && static_cast<int>(rad2.dim()) < dim; ++j)
            rad2.add(compose_coords(ti, u, s, i, j));
        if (static_cast<int>(rad2.dim()) == dim) break;
      }
      auto& irr = irr_[t * n + static_cast<std::size_t>(s)];
      for (int k = 0; k < dim && static_cast<int>(rad2.dim()) < dim; ++k) {
        Vec e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(k)] = 1;
        if (rad2.add(e)) irr.push_back(k);
      }
    }
  }
}

RepMorphism SpreadFamily::hom_morphism(int t, int s, int k) const {
  const Subset comp = hom_components(t, s).at(static_cast<std::size_t>(k));
  const RepPtr& src = rep(t);
  const RepPtr& dst = rep(s);
  std::vector<Matrix> comps;
  for (Elem p = 0; p < poset_->size(); ++p) {
    Matrix m(static_cast<std::size_t>(dst->dim(p)), static_cast<std::size_t>(src->dim(p)), field_);
    if (comp.contains(p)) m(0, 0) = 1;
    comps.push_back(std::move(m));
  }
  return RepMorphism(src, dst, std::move(comps));
}

Vec SpreadFamily::compose_coords(int t, int u, int s, int i, int j) const {
  const Subset through = hom_components(t, u)[static_cast<std::size_t>(i)] & hom_components(u, s)[static_cast<std::size_t>(j)];
  const auto& target = hom_components(t, s);
  Vec out(target.size(), 0);
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (through.contains(target[k].first())) out[k] = 1;
  }
  return out;
}

std::vector<Vec> SpreadFamily::rad2_coords(int t, int s) const {
  const int dim = hom_dim(t, s);
  SpanBuilder rad2(static_cast<std::size_t>(dim), field_);
  if (dim == 0) return {};
  for (int u : targets_from(t)) {
    if (u == s || hom_dim(u, s) == 0) continue;
    for (int i = 0; i < hom_dim(t, u); ++i)
      for (int j = 0; j < hom_dim(u, s); ++j) rad2.add(compose_coords(t, u, s, i, j));
  }
  return rad2.basis();
}

std::vector<RepMorphism> rad_basis(const SpreadFamily& f, int t, int s) {
  std::vector<RepMorphism> out;
  if (t == s) return out;
  for (int k = 0; k < f.hom_dim(t, s); ++k) out.push_back(f.hom_morphism(t, s, k));
  return out;
}

std::vector<RepMorphism> rad2_basis(const SpreadFamily& f, int t, int s) {
  std::vector<RepMorphism> out;
  for (const Vec& coords : f.rad2_coords(t, s)) {
    std::optional<RepMorphism> acc;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k] == 0) continue;
      RepMorphism term = f.hom_morphism(t, s, static_cast<int>(k)).scaled(coords[k]);
      acc = acc ? add(*acc, term) : term;
    }
    out.push_back(*acc);
  }
  return out;
}

std::vector<std::pair<int, int>> Approximation::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int i : summands) {
    if (!out.empty() && out.back().first == i) {
      ++out.back().second;
    } else {
      out.emplace_back(i, 1);
    }
  }
  return out;
}

Approximation minimal_approximation(const SpreadFamily& f, const RepPtr& m, RadicalSource source) {
  const int n = f.size();
  std::vector<std::vector<Vec>> homs(static_cast<std::size_t>(n));
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Subset members = f.spread(i).members;
    if (!members.intersects(m->support())) continue;
    homs[static_cast<std::size_t>(i)] = hom_basis_vectors(*f.rep(i), *m);
    offsets[static_cast<std::size_t>(i)] = support_offsets(*m, members);
  }

  std::vector<int> summands;
  std::vector<RepMorphism> maps;
  for (int s = 0; s < n; ++s) {
    const auto& hs = homs[static_cast<std::size_t>(s)];
    if (hs.empty()) continue;
    const auto& off_s = offsets[static_cast<std::size_t>(s)];
    SpanBuilder radical(off_s.back(), f.field());
    for (int t : f.targets_from(s)) {
      const auto& ht = homs[static_cast<std::size_t>(t)];
      if (ht.empty()) continue;
      const auto& off_t = offsets[static_cast<std::size_t>(t)];
      std::vector<int> ks;
      if (source == RadicalSource::irreducibles) {
        ks = f.irreducibles(s, t);
      } else {
        for (int k = 0; k < f.hom_dim(s, t); ++k) ks.push_back(k);
      }
      for (int k : ks) {
        const Subset comp = f.hom_components(s, t)[static_cast<std::size_t>(k)];
        for (const Vec& h : ht) {
          Vec v(off_s.back(), 0);
          comp.for_each([&](Elem p) {
            std::copy(h.begin() + static_cast<std::ptrdiff_t>(off_t[p]), h.begin() + static_cast<std::ptrdiff_t>(off_t[p + 1]),
                      v.begin() + static_cast<std::ptrdiff_t>(off_s[p]));
          });
          if (!vec_is_zero(v)) radical.add(std::move(v));
        }
      }
    }
    for (const Vec& h : hs) {
      if (radical.add(h)) {
        summands.push_back(s);
        maps.push_back(unflatten(f.rep(s), m, h));
      }
    }
  }
  return assemble(f, m, std::move(summands), std::move(maps));
}

bool is_approximation(const SpreadFamily& f, const RepMorphism& g) {
  const RepPtr& domain = g.source();
  const RepPtr& target = g.target();
  for (int s = 0; s < f.size(); ++s) {
    auto wanted = hom_basis_vectors(*f.rep(s), *target);
    if (wanted.empty()) continue;
    SpanBuilder image(wanted.front().size(), f.field());
    for (const auto& x : hom_basis(f.rep(s), domain)) image.add(flatten(compose(g, x)));
    for (const Vec& w : wanted)
      if (!image.contains(w)) return false;
  }
  return true;
}

Approximation minimal_radical_approximation(const SpreadFamily& f, int s) {
  std::vector<int> summands;
  std::vector<RepMorphism> maps;
  for (int t : f.sources_into(s)) {
    for (int k : f.irreducibles(t, s)) {
      summands.push_back(t);
      maps.push_back(f.hom_morphism(t, s, k));
    }
  }
  return assemble(f, f.rep(s), std::move(summands), std::move(maps));
}

std::vector<Subset> radapp_domain_closed_form(const Poset& p, Subset s) {
  std::vector<Subset> out;
  const Subset down_s = downset(p, s);
  covers(p, s).for_each([&](Elem x) {
    const Subset v = s | (p.down_of(x) - down_s);
    if (is_spread(p, v)) out.push_back(v);
  });
  minimal(p, s).for_each([&](Elem m) {
    for (Subset w : connected_components(p, s - Subset::singleton(m))) {
      if (!is_spread(p, w)) continue;
      if ((w | (p.up_of(m) - upset(p, w))) != s) continue;
      if (!cocovers(p, w).contains(m)) continue;
      out.push_back(w);
    }
  });
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> Resolution::length() const {
  if (steps.empty()) return std::nullopt;
  return static_cast<int>(steps.size()) - 1;
}

Resolution minimal_resolution(const SpreadFamily& f, const RepPtr& m, int max_depth) {
  if (max_depth < 0) max_depth = 2 * f.poset().size();
  Resolution res;
  RepPtr current = m;
  while (!current->is_zero()) {
    if (static_cast<int>(res.steps.size()) > max_depth) {
      throw ResolutionDidNotTerminate("resolution did not terminate within bound " + std::to_string(max_depth));
    }
    const auto start = Clock::now();
    Approximation approx = minimal_approximation(f, current);
    RepPtr kernel = kernel_of(approx.morphism).kernel;
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    res.steps.push_back(ResolutionStep{std::move(approx), kernel, secs});
    current = kernel;
  }
  return res;
}

std::optional<int> spread_pdim(const SpreadFamily& f, const RepPtr& m) { return minimal_resolution(f, m).length(); }

GldimReport spread_gldim(const SpreadFamily& f, int threads) {
  const int n = f.size();
  GldimReport report;
  report.kernel_pdims.assign(static_cast<std::size_t>(n), std::nullopt);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (int s = next++; s < n; s = next++) {
        Approximation rho = minimal_radical_approximation(f, s);
        RepPtr kernel = kernel_of(rho.morphism).kernel;
        if (!kernel->is_zero()) report.kernel_pdims[static_cast<std::size_t>(s)] = spread_pdim(f, kernel);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n;
    }
  };
  const int workers = std::max(1, std::min(threads, n));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (int s = 0; s < n; ++s) {
    const auto& d = report.kernel_pdims[static_cast<std::size_t>(s)];
    if (d && (!report.witness || *d > report.gldim)) {
      report.gldim = *d;
      report.witness = s;
    }
  }
  return report;
}

std::vector<int> relative_simple_dims(const SpreadFamily& f, int s) {
  Approximation rho = minimal_radical_approximation(f, s);
  const RepPtr& domain = rho.domain.sum;
  std::vector<int> out(static_cast<std::size_t>(f.size()), 0);
  for (int t = 0; t < f.size(); ++t) {
    const int total = f.hom_dim(t, s);
    if (total == 0) continue;
    SpanBuilder image(hom_ambient_dim(*f.rep(t), *f.rep(s)), f.field());
    for (const auto& g : hom_basis(f.rep(t), domain)) image.add(flatten(compose(rho.morphism, g)));
    out[static_cast<std::size_t>(t)] = total - static_cast<int>(image.dim());
  }
  return out;
}

namespace {

Vec gamma_multiply(const GammaAlgebra& g, const Field& field, const Vec& x, const Vec& y) {
  Vec out(static_cast<std::size_t>(g.dim()), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      const Vec& prod = g.product[a][b];
      if (prod.empty()) continue;
      const Scalar c = field.mul(x[a], y[b]);
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (prod[k] != 0) out[k] = field.add(out[k], field.mul(c, prod[k]));
    }
  }
  return out;
}

Vec unit_vector_of(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

GammaAlgebra gamma_table(const SpreadFamily& f) {
  GammaAlgebra g;
  std::map<std::pair<int, int>, std::size_t> offset;
  for (int t = 0; t < f.size(); ++t) {
    for (int s = 0; s < f.size(); ++s) {
      if (f.hom_dim(t, s) == 0) continue;
      offset[{t, s}] = g.basis.size();
      for (int k = 0; k < f.hom_dim(t, s); ++k) g.basis.push_back({t, s, k});
    }
  }
  const auto d = g.basis.size();
  g.product.assign(d, std::vector<Vec>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto& ea = g.basis[a];
      const auto& eb = g.basis[b];
      if (eb.target != ea.source) continue;
      Vec prod(d, 0);
      auto it = offset.find({eb.source, ea.target});
      if (it != offset.end()) {
        Vec coords = f.compose_coords(eb.source, eb.target, ea.target, eb.index, ea.index);
        std::copy(coords.begin(), coords.end(), prod.begin() + static_cast<std::ptrdiff_t>(it->second));
      }
      g.product[a][b] = std::move(prod);
    }
  }
  return g;
}

bool GammaAlgebra::is_associative() const {
  // Structure constants are 0/1 integers; check them in a large prime field.
  const Field field(65521);
  const auto d = static_cast<std::size_t>(dim());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (product[a][b].empty()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (product[b][c].empty()) continue;
        const Vec left = gamma_multiply(*this, field, product[a][b], unit_vector_of(d, c));
        const Vec right = gamma_multiply(*this, field, unit_vector_of(d, a), product[b][c]);
        if (left != right) return false;
      }
    }
  return true;
}

bool GammaAlgebra::has_unit() const {
  const Field field(65521);
  const auto d = static_cast<std::size_t>(dim());
  Vec unit(d, 0);
  for (std::size_t a = 0; a < d; ++a)
    if (basis[a].source == basis[a].target) unit[a] = 1;
  for (std::size_t b = 0; b < d; ++b) {
    const Vec e = unit_vector_of(d, b);
    if (gamma_multiply(*this, field, unit, e) != e) return false;
    if (gamma_multiply(*this, field, e, unit) != e) return false;
  }
  return true;
}

int GammaAlgebra::radical_nilpotency() const {
  const Field field(65521);
  const auto d = static_cast<std::size_t>(dim());
  std::vector<Vec> rad;
  for (std::size_t a = 0; a < d; ++a)
    if (basis[a].source != basis[a].target) rad.push_back(unit_vector_of(d, a));
  std::vector<Vec> power = rad;
  int n = 1;
  while (!power.empty()) {
    SpanBuilder next(d, field);
    for (const Vec& x : power)
      for (const Vec& r : rad) {
        Vec prod = gamma_multiply(*this, field, x, r);
        if (!vec_is_zero(prod)) next.add(std::move(prod));
      }
    power = next.basis();
    ++n;
  }
  return n;
}

namespace {

// A right module over End(direct sum of the family), viewed as a contravariant
// functor on the family: act[(t, s)][k] is F(b_k(t, s)) : F(s) -> F(t).
struct GammaModule {
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> act;
};

int gamma_module_total(const GammaModule& m) {
  int total = 0;
  for (int d : m.dims) total += d;
  return total;
}

GammaModule gamma_simple(const SpreadFamily& f, int x) {
  const auto n = static_cast<std::size_t>(f.size());
  GammaModule m;
  m.dims.assign(n, 0);
  m.dims[static_cast<std::size_t>(x)] = 1;
  m.act.assign(n * n, {});
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      for (int k = 0; k < f.hom_dim(static_cast<int>(t), static_cast<int>(s)); ++k) {
        Matrix a(static_cast<std::size_t>(m.dims[t]), static_cast<std::size_t>(m.dims[s]), f.field());
        if (t == s && m.dims[t] == 1) a(0, 0) = 1;
        m.act[t * n + s].push_back(std::move(a));
      }
  return m;
}

// Kernel of the projective cover of m.
GammaModule gamma_syzygy(const SpreadFamily& f, const GammaModule& m) {
  const auto n = static_cast<std::size_t>(f.size());
  const Field& field = f.field();
  struct Generator {
    int object;
    std::size_t column;
  };
  std::vector<Generator> gens;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Vec> images;
    for (int t : f.targets_from(static_cast<int>(x))) {
      for (const Matrix& a : m.act[x * n + static_cast<std::size_t>(t)])
        for (std::size_t c = 0; c < a.cols(); ++c) images.push_back(a.column(c));
    }
    QuotientMap top(static_cast<std::size_t>(m.dims[x]), images, field);
    for (std::size_t c : top.free_columns()) gens.push_back({static_cast<int>(x), c});
  }
  // Ambient of the cover at t: for each generator at X, Hom(t, X).
  std::vector<std::vector<std::size_t>> offset(n);
  std::vector<std::size_t> ambient(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    for (const auto& g : gens) {
      offset[t].push_back(ambient[t]);
      ambient[t] += static_cast<std::size_t>(f.hom_dim(static_cast<int>(t), g.object));
    }
  }
  std::vector<Matrix> kernel(n);
  GammaModule out;
  out.dims.assign(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Vec> cols;
    for (const auto& g : gens) {
      for (const Matrix& a : m.act[t * n + static_cast<std::size_t>(g.object)]) cols.push_back(a.column(g.column));
    }
    Matrix cover = Matrix::from_columns(static_cast<std::size_t>(m.dims[t]), cols, field);
    auto basis = kernel_basis(cover);
    out.dims[t] = static_cast<int>(basis.size());
    kernel[t] = Matrix::from_columns(ambient[t], basis, field);
  }
  out.act.assign(n * n, {});
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      const int ti = static_cast<int>(t), si = static_cast<int>(s);
      for (int mi = 0; mi < f.hom_dim(ti, si); ++mi) {
        // Precomposition with b_mi(t, s): Hom(s, X) -> Hom(t, X) per generator.
        Matrix pre(ambient[t], ambient[s], field);
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const int x = gens[g].object;
          for (int k = 0; k < f.hom_dim(si, x); ++k) {
            Vec c = f.compose_coords(ti, si, x, mi, k);
            for (std::size_t r = 0; r < c.size(); ++r) pre(offset[t][g] + r, offset[s][g] + static_cast<std::size_t>(k)) = c[r];
          }
        }
        auto solved = solve_matrix(kernel[t], pre * kernel[s]);
        if (!solved) throw std::logic_error("syzygy is not a submodule");
        out.act[t * n + s].push_back(std::move(*solved));
      }
    }
  }
  return out;
}

}  // namespace

int gamma_gldim(const SpreadFamily& f, int max_depth) {
  if (max_depth < 0) max_depth = 2 * f.size() + 2;
  int best = 0;
  for (int x = 0; x < f.size(); ++x) {
    GammaModule m = gamma_simple(f, x);
    int covers = 0;
    while (gamma_module_total(m) > 0) {
      if (covers > max_depth) throw ResolutionDidNotTerminate("simple module resolution exceeded depth bound");
      m = gamma_syzygy(f, m);
      ++covers;
    }
    best = std::max(best, covers - 1);
  }
  return best;
}

}  // namespace spreadres
