#include "spreadres/kan.hpp"

#include <algorithm>

#include "spreadres/approx.hpp"

namespace spreadres {

AlignedGridInclusion::AlignedGridInclusion(PosetPtr source, PosetPtr target, std::vector<std::vector<int>> factor_maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(factor_maps)) {
  if (!source_->is_grid() || !target_->is_grid()) throw std::invalid_argument("aligned inclusions are between grids");
  const int d = source_->dimension();
  if (target_->dimension() != d) throw std::invalid_argument("grids of different dimension");
  if (static_cast<int>(maps_.size()) != d) throw std::invalid_argument("need one map per factor");
  for (int j = 0; j < d; ++j) {
    const auto& m = maps_[static_cast<std::size_t>(j)];
    if (static_cast<int>(m.size()) != source_->factors()[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("factor map " + std::to_string(j) + " has wrong length");
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0 || m[i] >= target_->factors()[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("factor map " + std::to_string(j) + " leaves the target factor");
      }
      if (i > 0 && m[i] <= m[i - 1]) {
        throw std::invalid_argument("factor map " + std::to_string(j) + " is not strictly increasing");
      }
    }
  }
  for (Elem q = 0; q < source_->size(); ++q) {
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = maps_[static_cast<std::size_t>(j)][static_cast<std::size_t>(source_->coord(q, j))];
    image_of_.push_back(target_->at(c));
    image_.insert(image_of_.back());
  }
  upset_ = upset(*target_, image_);
  floor_of_.assign(static_cast<std::size_t>(target_->size()), -1);
  for (Elem p = 0; p < target_->size(); ++p) {
    if (!upset_.contains(p)) continue;
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const auto& m = maps_[static_cast<std::size_t>(j)];
      const auto it = std::upper_bound(m.begin(), m.end(), target_->coord(p, j));
      c[static_cast<std::size_t>(j)] = static_cast<int>(it - m.begin()) - 1;
    }
    floor_of_[static_cast<std::size_t>(p)] = source_->at(c);
  }
  for (Elem a = 0; a < source_->size(); ++a)
    for (Elem b = 0; b < source_->size(); ++b) {
      if (source_->leq(a, b) != target_->leq(map(a), map(b))) throw std::logic_error("inclusion is not full");
      if (map(grid_join(*source_, a, b)) != grid_join(*target_, map(a), map(b))) {
        throw std::logic_error("inclusion does not preserve joins");
      }
    }
}

AlignedGridInclusion AlignedGridInclusion::identity(const PosetPtr& grid) {
  std::vector<std::vector<int>> maps;
  for (int n : grid->factors()) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
    maps.push_back(std::move(m));
  }
  return AlignedGridInclusion(grid, grid, std::move(maps));
}

bool AlignedGridInclusion::origin_aligned() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const std::vector<int>& m) { return m.front() == 0; });
}

Elem AlignedGridInclusion::floor(Elem p) const {
  const Elem f = floor_of_[static_cast<std::size_t>(p)];
  if (f < 0) throw OutsideImageUpset("element " + format_elem(*target_, p) + " is outside the upset of the image");
  return f;
}

Subset AlignedGridInclusion::floor_of(Subset s) const {
  Subset out;
  s.for_each([&](Elem p) { out.insert(floor(p)); });
  return out;
}

Subset AlignedGridInclusion::map_of(Subset s) const {
  Subset out;
  s.for_each([&](Elem q) { out.insert(map(q)); });
  return out;
}

RepPtr lan(const AlignedGridInclusion& i, const Representation& m) {
  const Poset& p = i.target();
  const Subset u = i.image_upset();
  std::vector<int> dims;
  for (Elem x = 0; x < p.size(); ++x) dims.push_back(u.contains(x) ? m.dim(i.floor(x)) : 0);
  std::vector<Matrix> maps;
  for (auto [x, y] : p.hasse()) {
    if (u.contains(x)) {
      maps.push_back(m.map(i.floor(x), i.floor(y)));
    } else {
      maps.emplace_back(static_cast<std::size_t>(dims[y]), static_cast<std::size_t>(dims[x]), m.field());
    }
  }
  return std::make_shared<const Representation>(i.target_ptr(), m.field(), std::move(dims), std::move(maps));
}

RepMorphism lan(const AlignedGridInclusion& i, const RepMorphism& f, const RepPtr& lan_source, const RepPtr& lan_target) {
  const Poset& p = i.target();
  std::vector<Matrix> comps;
  for (Elem x = 0; x < p.size(); ++x) {
    if (i.image_upset().contains(x)) {
      comps.push_back(f.at(i.floor(x)));
    } else {
      comps.emplace_back(0, 0, f.source()->field());
    }
  }
  return RepMorphism(lan_source, lan_target, std::move(comps));
}

RepPtr padding(const PosetPtr& p, const InducedSubposet& sub, const Representation& m) {
  Subset u;
  for (Elem x : sub.to_parent) u.insert(x);
  if (!is_upset(*p, u)) throw std::invalid_argument("padding requires an upset");
  if (!m.poset().same_order(*sub.poset)) throw std::invalid_argument("representation is not over the upset");
  std::vector<int> dims;
  for (Elem x = 0; x < p->size(); ++x) {
    const Elem local = sub.from_parent[static_cast<std::size_t>(x)];
    dims.push_back(local < 0 ? 0 : m.dim(local));
  }
  std::vector<Matrix> maps;
  for (auto [x, y] : p->hasse()) {
    const Elem lx = sub.from_parent[static_cast<std::size_t>(x)];
    const Elem ly = sub.from_parent[static_cast<std::size_t>(y)];
    if (lx >= 0) {
      maps.push_back(m.map(lx, ly));
    } else {
      maps.emplace_back(static_cast<std::size_t>(dims[y]), static_cast<std::size_t>(dims[x]), m.field());
    }
  }
  return std::make_shared<const Representation>(p, m.field(), std::move(dims), std::move(maps));
}

RepPtr contraction(const AlignedGridInclusion& i, const Representation& m) {
  const Poset& q = i.source();
  if (!m.support().subset_of(i.image_upset())) {
    throw OutsideImageUpset("representation is supported outside the upset of the image");
  }
  std::vector<Subset> diagrams;
  std::vector<CoLimit> colims;
  for (Elem x = 0; x < q.size(); ++x) {
    Subset d;
    i.image_upset().for_each([&](Elem y) {
      if (q.leq(i.floor(y), x)) d.insert(y);
    });
    diagrams.push_back(d);
    colims.push_back(co_limit_over(m, CoLimitKind::colimit, d));
  }
  std::vector<int> dims;
  for (const auto& c : colims) dims.push_back(c.dim);
  std::vector<Matrix> maps;
  for (auto [a, b] : q.hasse()) {
    // The induced map phi satisfies phi * leg_a(y) = leg_b(y) for y in D_a.
    Matrix legs_a(static_cast<std::size_t>(dims[a]), 0, m.field());
    Matrix legs_b(static_cast<std::size_t>(dims[b]), 0, m.field());
    diagrams[static_cast<std::size_t>(a)].for_each([&](Elem y) {
      legs_a = legs_a.hstack(colims[static_cast<std::size_t>(a)].legs[static_cast<std::size_t>(y)]);
      legs_b = legs_b.hstack(colims[static_cast<std::size_t>(b)].legs[static_cast<std::size_t>(y)]);
    });
    auto phi_t = solve_matrix(legs_a.transpose(), legs_b.transpose());
    if (!phi_t) throw std::logic_error("colimit legs are not compatible");
    maps.push_back(phi_t->transpose());
  }
  return std::make_shared<const Representation>(i.source_ptr(), m.field(), std::move(dims), std::move(maps));
}

RepMorphism counit(const AlignedGridInclusion& i, const Representation& m, const RepPtr& lan_res, const RepPtr& target) {
  std::vector<Matrix> comps;
  for (Elem x = 0; x < i.target().size(); ++x) {
    if (i.image_upset().contains(x)) {
      comps.push_back(m.map(i.map(i.floor(x)), x));
    } else {
      comps.emplace_back(static_cast<std::size_t>(m.dim(x)), 0, m.field());
    }
  }
  return RepMorphism(lan_res, target, std::move(comps));
}

RepPtr restriction(const AlignedGridInclusion& i, const Representation& m) {
  return std::make_shared<const Representation>(restrict(m, i.source_ptr(), i.image_table()));
}

AlignedGridInclusion subgrid_inclusion(const PosetPtr& grid, std::vector<std::vector<int>> coords) {
  std::vector<int> sizes;
  for (auto& c : coords) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    sizes.push_back(static_cast<int>(c.size()));
  }
  return AlignedGridInclusion(Poset::grid(sizes), grid, std::move(coords));
}

namespace {

void increasing_maps(int from, int to, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == from) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back() + 1;
  const int remaining = from - static_cast<int>(cur.size());
  for (int v = lo; v + remaining <= to; ++v) {
    cur.push_back(v);
    increasing_maps(from, to, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AlignedGridInclusion> all_aligned_inclusions(const PosetPtr& source, const PosetPtr& target) {
  if (!source->is_grid() || !target->is_grid() || source->dimension() != target->dimension()) {
    throw std::invalid_argument("aligned inclusions need grids of equal dimension");
  }
  std::vector<std::vector<std::vector<int>>> per_factor;
  for (int j = 0; j < source->dimension(); ++j) {
    std::vector<std::vector<int>> maps;
    std::vector<int> cur;
    increasing_maps(source->factors()[static_cast<std::size_t>(j)], target->factors()[static_cast<std::size_t>(j)], cur, maps);
    per_factor.push_back(std::move(maps));
  }
  std::vector<AlignedGridInclusion> out;
  std::vector<std::size_t> idx(per_factor.size(), 0);
  for (const auto& maps : per_factor) {
    if (maps.empty()) return out;
  }
  while (true) {
    std::vector<std::vector<int>> choice;
    for (std::size_t j = 0; j < idx.size(); ++j) choice.push_back(per_factor[j][idx[j]]);
    out.emplace_back(source, target, std::move(choice));
    std::size_t j = idx.size();
    while (j > 0) {
      --j;
      if (++idx[j] < per_factor[j].size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

SubgridResult support_subgrid(const PosetPtr& grid, const std::vector<RepPtr>& reps) {
  const int d = grid->dimension();
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(d));
  if (!reps.empty()) {
    auto family = SpreadFamily::projectives(grid, reps.front()->field());
    auto record = [&](const Approximation& a) {
      for (int idx : a.summands) {
        const Elem g = family.spread(idx).minima.first();
        for (int j = 0; j < d; ++j) coords[static_cast<std::size_t>(j)].push_back(grid->coord(g, j));
      }
    };
    for (const auto& m : reps) {
      Approximation cover = minimal_approximation(family, m);
      record(cover);
      RepPtr syzygy = kernel_of(cover.morphism).kernel;
      if (!syzygy->is_zero()) record(minimal_approximation(family, syzygy));
    }
  }
  for (auto& c : coords)
    if (c.empty()) c.push_back(0);
  AlignedGridInclusion inc = subgrid_inclusion(grid, std::move(coords));
  std::vector<RepPtr> restricted;
  for (const auto& m : reps) restricted.push_back(restriction(inc, *m));
  return SubgridResult{std::move(inc), std::move(restricted)};
}

}  // namespace spreadres
