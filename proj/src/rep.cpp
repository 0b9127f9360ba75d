#include "spreadres/rep.hpp"

#include <algorithm>
#include <numeric>

namespace spreadres {

Representation::Representation(PosetPtr poset, Field field, std::vector<int> dims, std::vector<Matrix> edge_maps)
    : poset_(std::move(poset)), field_(field), dims_(std::move(dims)), edge_maps_(std::move(edge_maps)) {
  const auto& hasse = poset_->hasse();
  if (static_cast<int>(dims_.size()) != poset_->size()) {
    throw std::invalid_argument("representation needs one dimension per element");
  }
  if (edge_maps_.size() != hasse.size()) {
    throw std::invalid_argument("representation needs one matrix per Hasse edge");
  }
  for (int d : dims_) {
    if (d < 0) throw std::invalid_argument("negative dimension");
  }
  for (std::size_t i = 0; i < hasse.size(); ++i) {
    auto [x, y] = hasse[i];
    const Matrix& m = edge_maps_[i];
    if (m.rows() != static_cast<std::size_t>(dims_[y]) || m.cols() != static_cast<std::size_t>(dims_[x])) {
      throw std::invalid_argument("edge " + format_elem(*poset_, x) + "->" + format_elem(*poset_, y) +
                                  " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(dims_[y]) + "x" + std::to_string(dims_[x]));
    }
    if (!(m.field() == field_)) throw std::invalid_argument("edge matrix over a different field");
  }
}

Representation Representation::zero(PosetPtr poset, Field field) {
  std::vector<Matrix> maps(poset->hasse().size(), Matrix(0, 0, field));
  std::vector<int> dims(static_cast<std::size_t>(poset->size()), 0);
  return Representation(std::move(poset), field, std::move(dims), std::move(maps));
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

Subset Representation::support() const {
  Subset s;
  for (Elem e = 0; e < poset_->size(); ++e)
    if (dims_[e] > 0) s.insert(e);
  return s;
}

Matrix Representation::map(Elem x, Elem y) const {
  if (!poset_->leq(x, y)) throw std::invalid_argument("map(x, y) requires x <= y");
  Matrix acc = Matrix::identity(static_cast<std::size_t>(dims_[x]), field_);
  Elem cur = x;
  while (cur != y) {
    Elem step = -1;
    for (Elem z : poset_->upper_covers(cur)) {
      if (poset_->leq(z, y)) {
        step = z;
        break;
      }
    }
    acc = edge_maps_[static_cast<std::size_t>(poset_->edge_index(cur, step))] * acc;
    cur = step;
  }
  return acc;
}

bool Representation::operator==(const Representation& o) const {
  return poset_->same_order(*o.poset_) && field_ == o.field_ && dims_ == o.dims_ && edge_maps_ == o.edge_maps_;
}

void check_functorial(const Representation& m) {
  const Poset& p = m.poset();
  const auto& topo = p.topological_order();
  for (Elem x = 0; x < p.size(); ++x) {
    std::vector<std::optional<Matrix>> from_x(static_cast<std::size_t>(p.size()));
    from_x[x] = Matrix::identity(static_cast<std::size_t>(m.dim(x)), m.field());
    for (Elem y : topo) {
      if (y == x || !p.less(x, y)) continue;
      for (Elem z : p.lower_covers(y)) {
        if (!p.leq(x, z)) continue;
        Matrix candidate = m.edge_map(p.edge_index(z, y)) * *from_x[z];
        if (!from_x[y]) {
          from_x[y] = std::move(candidate);
        } else if (!(*from_x[y] == candidate)) {
          throw FunctorialityError(x, y, "non-commuting paths from " + format_elem(p, x) + " to " + format_elem(p, y));
        }
      }
    }
  }
}

Representation validate_representation(PosetPtr poset, Field field, std::vector<int> dims,
                                        std::vector<Matrix> edge_maps) {
  Representation m(std::move(poset), field, std::move(dims), std::move(edge_maps));
  check_functorial(m);
  return m;
}

RepPtr indicator_rep(const PosetPtr& poset, Field field, Subset convex) {
  std::vector<int> dims(static_cast<std::size_t>(poset->size()), 0);
  convex.for_each([&](Elem e) { dims[e] = 1; });
  std::vector<Matrix> maps;
  maps.reserve(poset->hasse().size());
  for (auto [x, y] : poset->hasse()) {
    Matrix m(static_cast<std::size_t>(dims[y]), static_cast<std::size_t>(dims[x]), field);
    if (dims[x] == 1 && dims[y] == 1) m(0, 0) = 1;
    maps.push_back(std::move(m));
  }
  return std::make_shared<const Representation>(poset, field, std::move(dims), std::move(maps));
}

SpreadRep spread_rep(const PosetPtr& poset, Field field, const Spread& s) {
  return {s, indicator_rep(poset, field, s.members)};
}

RepMorphism::RepMorphism(RepPtr source, RepPtr target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const int n = source_->poset().size();
  if (!source_->poset().same_order(target_->poset())) throw std::invalid_argument("morphism between different posets");
  if (static_cast<int>(components_.size()) != n) throw std::invalid_argument("morphism needs one component per element");
  for (Elem e = 0; e < n; ++e) {
    if (components_[e].rows() != static_cast<std::size_t>(target_->dim(e)) ||
        components_[e].cols() != static_cast<std::size_t>(source_->dim(e))) {
      throw std::invalid_argument("morphism component shape mismatch at " + format_elem(source_->poset(), e));
    }
  }
}

RepMorphism RepMorphism::zero(RepPtr source, RepPtr target) {
  std::vector<Matrix> comps;
  for (Elem e = 0; e < source->poset().size(); ++e) {
    comps.emplace_back(static_cast<std::size_t>(target->dim(e)), static_cast<std::size_t>(source->dim(e)), source->field());
  }
  return RepMorphism(std::move(source), std::move(target), std::move(comps));
}

RepMorphism RepMorphism::identity(RepPtr m) {
  std::vector<Matrix> comps;
  for (Elem e = 0; e < m->poset().size(); ++e) comps.push_back(Matrix::identity(static_cast<std::size_t>(m->dim(e)), m->field()));
  return RepMorphism(m, m, std::move(comps));
}

bool RepMorphism::is_natural() const {
  const auto& hasse = source_->poset().hasse();
  for (std::size_t i = 0; i < hasse.size(); ++i) {
    auto [x, y] = hasse[i];
    const int e = static_cast<int>(i);
    if (!(components_[y] * source_->edge_map(e) == target_->edge_map(e) * components_[x])) return false;
  }
  return true;
}

bool RepMorphism::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool RepMorphism::is_iso() const {
  return std::all_of(components_.begin(), components_.end(), [](const Matrix& m) { return is_invertible(m); });
}

RepMorphism RepMorphism::scaled(Scalar s) const {
  std::vector<Matrix> comps;
  for (const auto& c : components_) comps.push_back(c.scaled(s));
  return RepMorphism(source_, target_, std::move(comps));
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  std::vector<Matrix> comps;
  for (std::size_t e = 0; e < f.components().size(); ++e) comps.push_back(g.components()[e] * f.components()[e]);
  return RepMorphism(f.source(), g.target(), std::move(comps));
}

RepMorphism add(const RepMorphism& a, const RepMorphism& b) {
  std::vector<Matrix> comps;
  for (std::size_t e = 0; e < a.components().size(); ++e) comps.push_back(a.components()[e] + b.components()[e]);
  return RepMorphism(a.source(), a.target(), std::move(comps));
}

namespace {

std::vector<std::size_t> hom_offsets(const Representation& m, const Representation& n) {
  std::vector<std::size_t> off(static_cast<std::size_t>(m.poset().size()) + 1, 0);
  for (Elem e = 0; e < m.poset().size(); ++e) {
    off[e + 1] = off[e] + static_cast<std::size_t>(m.dim(e)) * static_cast<std::size_t>(n.dim(e));
  }
  return off;
}

}  // namespace

std::size_t hom_ambient_dim(const Representation& m, const Representation& n) { return hom_offsets(m, n).back(); }

Vec flatten(const RepMorphism& f) {
  Vec out;
  for (const auto& c : f.components()) out.insert(out.end(), c.entries().begin(), c.entries().end());
  return out;
}

RepMorphism unflatten(const RepPtr& source, const RepPtr& target, const Vec& v) {
  std::vector<Matrix> comps;
  std::size_t pos = 0;
  for (Elem e = 0; e < source->poset().size(); ++e) {
    const auto r = static_cast<std::size_t>(target->dim(e));
    const auto c = static_cast<std::size_t>(source->dim(e));
    std::vector<Scalar> entries(v.begin() + static_cast<std::ptrdiff_t>(pos), v.begin() + static_cast<std::ptrdiff_t>(pos + r * c));
    comps.emplace_back(r, c, std::move(entries), source->field());
    pos += r * c;
  }
  if (pos != v.size()) throw std::invalid_argument("flattened morphism has wrong length");
  return RepMorphism(source, target, std::move(comps));
}

std::vector<Vec> hom_basis_vectors(const Representation& m, const Representation& n) {
  const Poset& p = m.poset();
  const Field& f = m.field();
  const auto off = hom_offsets(m, n);
  const std::size_t unknowns = off.back();
  if (unknowns == 0) return {};
  std::vector<Vec> rows;
  const auto& hasse = p.hasse();
  for (std::size_t ei = 0; ei < hasse.size(); ++ei) {
    auto [x, y] = hasse[ei];
    const int mx = m.dim(x), my = m.dim(y), nx = n.dim(x), ny = n.dim(y);
    if (ny == 0 || mx == 0) continue;
    const Matrix& a = m.edge_map(static_cast<int>(ei));  // my x mx
    const Matrix& b = n.edge_map(static_cast<int>(ei));  // ny x nx
    // (f_y A - B f_x)[i][j] = 0
    for (int i = 0; i < ny; ++i) {
      for (int j = 0; j < mx; ++j) {
        Vec row(unknowns, 0);
        bool nonzero = false;
        for (int k = 0; k < my; ++k) {
          const Scalar c = a(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
          if (c == 0) continue;
          auto& slot = row[off[y] + static_cast<std::size_t>(i * my + k)];
          slot = f.add(slot, c);
          nonzero = true;
        }
        for (int k = 0; k < nx; ++k) {
          const Scalar c = b(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
          if (c == 0) continue;
          auto& slot = row[off[x] + static_cast<std::size_t>(k * mx + j)];
          slot = f.sub(slot, c);
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  Matrix system(rows.size(), unknowns, f);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
  return kernel_basis(system);
}

std::vector<RepMorphism> hom_basis(const RepPtr& m, const RepPtr& n) {
  std::vector<RepMorphism> out;
  for (const auto& v : hom_basis_vectors(*m, *n)) out.push_back(unflatten(m, n, v));
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  return static_cast<int>(hom_basis_vectors(m, n).size());
}

KernelResult kernel_of(const RepMorphism& f) {
  const RepPtr& m = f.source();
  const Poset& p = m->poset();
  const Field& field = m->field();
  std::vector<Matrix> incl;
  std::vector<int> dims;
  for (Elem e = 0; e < p.size(); ++e) {
    auto basis = kernel_basis(f.at(e));
    incl.push_back(Matrix::from_columns(static_cast<std::size_t>(m->dim(e)), basis, field));
    dims.push_back(static_cast<int>(basis.size()));
  }
  std::vector<Matrix> maps;
  for (std::size_t ei = 0; ei < p.hasse().size(); ++ei) {
    auto [x, y] = p.hasse()[ei];
    Matrix image = m->edge_map(static_cast<int>(ei)) * incl[x];
    auto solved = solve_matrix(incl[y], image);
    if (!solved) throw std::logic_error("kernel not preserved by structure map (source not functorial?)");
    maps.push_back(std::move(*solved));
  }
  auto k = std::make_shared<const Representation>(m->poset_ptr(), field, std::move(dims), std::move(maps));
  return {k, RepMorphism(k, m, std::move(incl))};
}

CokernelResult cokernel_of(const RepMorphism& f) {
  const RepPtr& n = f.target();
  const Poset& p = n->poset();
  const Field& field = n->field();
  std::vector<QuotientMap> quotients;
  std::vector<int> dims;
  std::vector<Matrix> proj;
  for (Elem e = 0; e < p.size(); ++e) {
    std::vector<Vec> image;
    for (std::size_t c = 0; c < f.at(e).cols(); ++c) image.push_back(f.at(e).column(c));
    quotients.emplace_back(static_cast<std::size_t>(n->dim(e)), image, field);
    const auto& q = quotients.back();
    dims.push_back(static_cast<int>(q.quotient_dim()));
    Matrix pr(q.quotient_dim(), static_cast<std::size_t>(n->dim(e)), field);
    for (std::size_t j = 0; j < static_cast<std::size_t>(n->dim(e)); ++j) {
      Vec ej(static_cast<std::size_t>(n->dim(e)), 0);
      ej[j] = 1;
      Vec c = q.coords(ej);
      for (std::size_t i = 0; i < c.size(); ++i) pr(i, j) = c[i];
    }
    proj.push_back(std::move(pr));
  }
  std::vector<Matrix> maps;
  for (std::size_t ei = 0; ei < p.hasse().size(); ++ei) {
    auto [x, y] = p.hasse()[ei];
    const auto& qx = quotients[static_cast<std::size_t>(x)];
    const auto& qy = quotients[static_cast<std::size_t>(y)];
    Matrix m(qy.quotient_dim(), qx.quotient_dim(), field);
    for (std::size_t k = 0; k < qx.free_columns().size(); ++k) {
      Vec v = n->edge_map(static_cast<int>(ei)).column(qx.free_columns()[k]);
      Vec c = qy.coords(v);
      for (std::size_t i = 0; i < c.size(); ++i) m(i, k) = c[i];
    }
    maps.push_back(std::move(m));
  }
  auto c = std::make_shared<const Representation>(n->poset_ptr(), field, std::move(dims), std::move(maps));
  return {c, RepMorphism(n, c, std::move(proj))};
}

DirectSum direct_sum(const PosetPtr& poset, Field field, const std::vector<RepPtr>& summands,
                     std::vector<std::string> labels) {
  const int n = poset->size();
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  for (const auto& s : summands)
    for (Elem e = 0; e < n; ++e) dims[e] += s->dim(e);
  std::vector<Matrix> maps;
  for (std::size_t ei = 0; ei < poset->hasse().size(); ++ei) {
    auto [x, y] = poset->hasse()[ei];
    Matrix m(static_cast<std::size_t>(dims[y]), static_cast<std::size_t>(dims[x]), field);
    std::size_t ro = 0, co = 0;
    for (const auto& s : summands) {
      const Matrix& b = s->edge_map(static_cast<int>(ei));
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
      ro += static_cast<std::size_t>(s->dim(y));
      co += static_cast<std::size_t>(s->dim(x));
    }
    maps.push_back(std::move(m));
  }
  DirectSum out;
  out.sum = std::make_shared<const Representation>(poset, field, dims, std::move(maps));
  out.labels = std::move(labels);
  std::vector<std::size_t> offset(static_cast<std::size_t>(n), 0);
  for (const auto& s : summands) {
    std::vector<Matrix> inj, pr;
    for (Elem e = 0; e < n; ++e) {
      Matrix i(static_cast<std::size_t>(dims[e]), static_cast<std::size_t>(s->dim(e)), field);
      for (std::size_t k = 0; k < static_cast<std::size_t>(s->dim(e)); ++k) i(offset[e] + k, k) = 1;
      pr.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[e] += static_cast<std::size_t>(s->dim(e));
    }
    out.injections.emplace_back(s, out.sum, std::move(inj));
    out.projections.emplace_back(out.sum, s, std::move(pr));
  }
  return out;
}

RepMorphism morphism_from_sum(const DirectSum& sum, const RepPtr& target, const std::vector<RepMorphism>& maps) {
  if (maps.size() != sum.injections.size()) throw std::invalid_argument("one map per summand expected");
  const Poset& p = target->poset();
  std::vector<Matrix> comps;
  for (Elem e = 0; e < p.size(); ++e) {
    Matrix c(static_cast<std::size_t>(target->dim(e)), 0, target->field());
    for (const auto& m : maps) c = c.hstack(m.at(e));
    comps.push_back(std::move(c));
  }
  return RepMorphism(sum.sum, target, std::move(comps));
}

CoLimit co_limit(const Representation& m, CoLimitKind kind) { return co_limit_over(m, kind, m.poset().all()); }

CoLimit co_limit_over(const Representation& m, CoLimitKind kind, Subset diagram) {
  const Poset& p = m.poset();
  const Field& f = m.field();
  std::vector<std::size_t> off(static_cast<std::size_t>(p.size()) + 1, 0);
  for (Elem e = 0; e < p.size(); ++e) off[e + 1] = off[e] + (diagram.contains(e) ? static_cast<std::size_t>(m.dim(e)) : 0);
  const std::size_t total = off.back();
  // Cover relations of the induced order on the diagram.
  std::vector<std::pair<Elem, Elem>> edges;
  diagram.for_each([&](Elem x) {
    ((p.up_of(x) & diagram) - Subset::singleton(x)).for_each([&](Elem y) {
      const Subset between = (p.up_of(x) & p.down_of(y) & diagram) - Subset::singleton(x) - Subset::singleton(y);
      if (between.empty()) edges.emplace_back(x, y);
    });
  });
  CoLimit out;
  out.legs.assign(static_cast<std::size_t>(p.size()), Matrix{});
  if (kind == CoLimitKind::limit) {
    std::vector<Vec> rows;
    for (auto [x, y] : edges) {
      const Matrix a = m.map(x, y);
      for (int i = 0; i < m.dim(y); ++i) {
        Vec row(total, 0);
        for (int j = 0; j < m.dim(x); ++j) row[off[x] + static_cast<std::size_t>(j)] = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        row[off[y] + static_cast<std::size_t>(i)] = f.sub(row[off[y] + static_cast<std::size_t>(i)], 1);
        rows.push_back(std::move(row));
      }
    }
    Matrix sys(rows.size(), total, f);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < total; ++c) sys(r, c) = rows[r][c];
    auto basis = kernel_basis(sys);
    out.dim = static_cast<int>(basis.size());
    diagram.for_each([&](Elem e) {
      Matrix leg(static_cast<std::size_t>(m.dim(e)), basis.size(), f);
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (int i = 0; i < m.dim(e); ++i) leg(static_cast<std::size_t>(i), k) = basis[k][off[e] + static_cast<std::size_t>(i)];
      out.legs[e] = std::move(leg);
    });
    return out;
  }
  std::vector<Vec> relations;
  for (auto [x, y] : edges) {
    const Matrix a = m.map(x, y);
    for (int j = 0; j < m.dim(x); ++j) {
      Vec v(total, 0);
      v[off[x] + static_cast<std::size_t>(j)] = 1;
      for (int i = 0; i < m.dim(y); ++i) {
        auto& slot = v[off[y] + static_cast<std::size_t>(i)];
        slot = f.sub(slot, a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
      relations.push_back(std::move(v));
    }
  }
  QuotientMap q(total, relations, f);
  out.dim = static_cast<int>(q.quotient_dim());
  diagram.for_each([&](Elem e) {
    Matrix leg(q.quotient_dim(), static_cast<std::size_t>(m.dim(e)), f);
    for (int j = 0; j < m.dim(e); ++j) {
      Vec v(total, 0);
      v[off[e] + static_cast<std::size_t>(j)] = 1;
      Vec c = q.coords(v);
      for (std::size_t i = 0; i < c.size(); ++i) leg(i, static_cast<std::size_t>(j)) = c[i];
    }
    out.legs[e] = std::move(leg);
  });
  return out;
}

Representation restrict(const Representation& m, const PosetPtr& q, const std::vector<Elem>& psi) {
  if (static_cast<int>(psi.size()) != q->size()) throw std::invalid_argument("restriction map has wrong length");
  for (Elem e : psi) {
    if (e < 0 || e >= m.poset().size()) throw std::invalid_argument("restriction map leaves the target poset");
  }
  for (auto [a, b] : q->hasse()) {
    if (!m.poset().leq(psi[a], psi[b])) throw std::invalid_argument("restriction map is not order-preserving");
  }
  std::vector<int> dims;
  for (Elem e = 0; e < q->size(); ++e) dims.push_back(m.dim(psi[e]));
  std::vector<Matrix> maps;
  for (auto [a, b] : q->hasse()) maps.push_back(m.map(psi[a], psi[b]));
  return Representation(q, m.field(), std::move(dims), std::move(maps));
}

bool iso_check(const RepPtr& m, const RepPtr& n, int cap) {
  if (m->dims() != n->dims()) return false;
  if (m->is_zero()) return true;
  auto basis = hom_basis_vectors(*m, *n);
  if (basis.empty()) return false;
  for (const auto& v : basis) {
    if (unflatten(m, n, v).is_iso()) return true;
  }
  if (static_cast<int>(basis.size()) > cap) {
    throw InconclusiveIso("Hom space of dimension " + std::to_string(basis.size()) + " exceeds iso search cap " +
                          std::to_string(cap));
  }
  const Field& f = m->field();
  std::vector<Scalar> coeff(basis.size(), 0);
  const std::size_t ambient = basis.front().size();
  // Odometer over all coefficient vectors.
  while (true) {
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == f.p()) coeff[i++] = 0;
    if (i == coeff.size()) break;
    Vec v(ambient, 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (coeff[k] == 0) continue;
      for (std::size_t j = 0; j < ambient; ++j) v[j] = f.add(v[j], f.mul(coeff[k], basis[k][j]));
    }
    if (unflatten(m, n, v).is_iso()) return true;
  }
  return false;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

RepPtr random_representation(const PosetPtr& poset, Field field, std::mt19937_64& rng, const RandomRepOptions& options) {
  const auto n = static_cast<std::uint64_t>(poset->size());
  const int gens = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(options.max_generators)));
  const int rels = static_cast<int>(draw(rng, static_cast<std::uint64_t>(options.max_relations) + 1));
  std::vector<Elem> gen_at, rel_at;
  for (int i = 0; i < gens; ++i) gen_at.push_back(static_cast<Elem>(draw(rng, n)));
  for (int j = 0; j < rels; ++j) rel_at.push_back(static_cast<Elem>(draw(rng, n)));
  std::vector<std::vector<Scalar>> coeff(static_cast<std::size_t>(gens), std::vector<Scalar>(static_cast<std::size_t>(rels), 0));
  for (int i = 0; i < gens; ++i)
    for (int j = 0; j < rels; ++j)
      if (poset->leq(gen_at[static_cast<std::size_t>(i)], rel_at[static_cast<std::size_t>(j)]))
        coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<Scalar>(draw(rng, field.p()));

  std::vector<RepPtr> p0, p1;
  for (Elem g : gen_at) p0.push_back(indicator_rep(poset, field, poset->up_of(g)));
  for (Elem r : rel_at) p1.push_back(indicator_rep(poset, field, poset->up_of(r)));
  auto sum0 = direct_sum(poset, field, p0);
  auto sum1 = direct_sum(poset, field, p1);
  std::vector<Matrix> comps;
  for (Elem x = 0; x < poset->size(); ++x) {
    std::vector<int> gi, rj;
    for (int i = 0; i < gens; ++i)
      if (poset->leq(gen_at[static_cast<std::size_t>(i)], x)) gi.push_back(i);
    for (int j = 0; j < rels; ++j)
      if (poset->leq(rel_at[static_cast<std::size_t>(j)], x)) rj.push_back(j);
    Matrix c(gi.size(), rj.size(), field);
    for (std::size_t a = 0; a < gi.size(); ++a)
      for (std::size_t b = 0; b < rj.size(); ++b)
        c(a, b) = coeff[static_cast<std::size_t>(gi[a])][static_cast<std::size_t>(rj[b])];
    comps.push_back(std::move(c));
  }
  RepMorphism presentation(sum1.sum, sum0.sum, std::move(comps));
  return cokernel_of(presentation).cokernel;
}

}  // namespace spreadres
