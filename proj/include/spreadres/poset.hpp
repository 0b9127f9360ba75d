#pragma once

// Finite posets, grid posets, and spread combinatorics. Subsets of a poset are
// 64-bit masks over element indices.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spreadres {

using Elem = int;

inline constexpr int kDefaultElementCap = 64;

class Subset {
public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(Elem e) { return Subset{std::uint64_t{1} << e}; }
  static constexpr Subset full(int n) {
    return Subset{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static Subset of(const std::vector<Elem>& elems);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  Elem first() const { return std::countr_zero(bits_); }

  void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subset operator|(Subset o) const { return Subset{bits_ | o.bits_}; }
  constexpr Subset operator&(Subset o) const { return Subset{bits_ & o.bits_}; }
  /// Set difference.
  constexpr Subset operator-(Subset o) const { return Subset{bits_ & ~o.bits_}; }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  std::vector<Elem> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t b = bits_;
    while (b != 0) {
      f(static_cast<Elem>(std::countr_zero(b)));
      b &= b - 1;
    }
  }

private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then by mask value.
inline bool canonical_less(Subset a, Subset b) {
  const int sa = a.size();
  const int sb = b.size();
  return sa != sb ? sa < sb : a.bits() < b.bits();
}

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

struct NotAPartialOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite poset on elements 0..n-1. Grid posets additionally carry their
/// factor sizes and a coordinate table (elements in lexicographic order).
class Poset {
public:
  /// Reflexive-transitive closure of (lesser, greater) pairs.
  static PosetPtr from_relations(int n, const std::vector<std::pair<Elem, Elem>>& relations,
                                 std::vector<std::string> labels = {}, int cap = kDefaultElementCap);
  static PosetPtr grid(const std::vector<int>& factors, int cap = kDefaultElementCap);

  int size() const { return n_; }
  Subset all() const { return Subset::full(n_); }
  bool leq(Elem a, Elem b) const { return up_[a].contains(b); }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  Subset up_of(Elem a) const { return up_[a]; }
  Subset down_of(Elem a) const { return down_[a]; }

  /// Hasse edges (x, y) with x covered by y, sorted.
  const std::vector<std::pair<Elem, Elem>>& hasse() const { return hasse_; }
  /// Index of the Hasse edge (x, y), or -1.
  int edge_index(Elem x, Elem y) const { return edge_index_[static_cast<std::size_t>(x * n_ + y)]; }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_covers_[x]; }
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_covers_[x]; }
  /// Elements in a linear extension of the order.
  const std::vector<Elem>& topological_order() const { return topo_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem e) const;
  std::optional<Elem> find_label(const std::string& s) const;

  bool is_grid() const { return !factors_.empty(); }
  const std::vector<int>& factors() const { return factors_; }
  int dimension() const { return static_cast<int>(factors_.size()); }
  const std::vector<int>& coords(Elem e) const { return coords_[e]; }
  int coord(Elem e, int axis) const { return coords_[e][static_cast<std::size_t>(axis)]; }
  Elem at(const std::vector<int>& coords) const;

  /// True if `other` has the same order relation (labels and grid data ignored).
  bool same_order(const Poset& other) const { return n_ == other.n_ && up_ == other.up_; }

  /// Explicit relation pairs (the Hasse edges) suitable for serialization.
  std::vector<std::pair<Elem, Elem>> cover_relations() const { return hasse_; }

private:
  Poset() = default;
  void finalize();

  int n_ = 0;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::pair<Elem, Elem>> hasse_;
  std::vector<int> edge_index_;
  std::vector<std::vector<Elem>> upper_covers_;
  std::vector<std::vector<Elem>> lower_covers_;
  std::vector<Elem> topo_;
  std::vector<std::string> labels_;
  std::vector<int> factors_;
  std::vector<std::vector<int>> coords_;

  friend PosetPtr opposite(const Poset& p);
};

enum class Direction { up, down };

Subset closure(const Poset& p, Subset s, Direction dir);
Subset upset(const Poset& p, Subset s);
Subset downset(const Poset& p, Subset s);
Subset extrema(const Poset& p, Subset s, Direction dir);
Subset minimal(const Poset& p, Subset s);
Subset maximal(const Poset& p, Subset s);
/// up: cover(S) = min(upS - S); down: cocover(S) = max(downS - S).
Subset frontier(const Poset& p, Subset s, Direction dir);
Subset covers(const Poset& p, Subset s);
Subset cocovers(const Poset& p, Subset s);
Subset segment(const Poset& p, Elem a, Elem b);
/// Elements of P comparable to no element of S.
Subset incomparable(const Poset& p, Subset s);
Subset convex_hull(const Poset& p, Subset s);

bool is_antichain(const Poset& p, Subset s);
bool is_convex(const Poset& p, Subset s);
bool is_connected(const Poset& p, Subset s);
bool is_spread(const Poset& p, Subset s);
bool is_upset(const Poset& p, Subset s);
bool is_downset(const Poset& p, Subset s);

/// Maximal connected pieces of S (comparability graph), ordered by least element.
std::vector<Subset> connected_components(const Poset& p, Subset s);

struct RegionDecomposition {
  Subset spread;
  Subset up_cover;      // upS - S = up(cover S)
  Subset down_cocover;  // downS - S = down(cocover S)
  Subset incomparable;
};

/// Throws std::invalid_argument if S is not convex.
RegionDecomposition region_decomposition(const Poset& p, Subset s);

/// A spread with its canonical presentation S = up(minima) - up(covers).
struct Spread {
  Subset members;
  Subset minima;
  Subset covers;

  bool operator==(const Spread& o) const { return members == o.members; }
};

/// Throws std::invalid_argument if S is not a spread.
Spread make_spread(const Poset& p, Subset s);

/// All spreads in canonical order (cardinality, then mask). Grows spreads from
/// singletons: every spread with at least two elements has an extremal element
/// whose removal leaves a spread, so one-element extensions by Hasse neighbours
/// followed by convex closure reach every spread.
std::vector<Spread> enumerate_spreads(const Poset& p, int cap = kDefaultElementCap);

/// Exhaustive subset filter; reference implementation for |P| <= 20.
std::vector<Spread> enumerate_spreads_brute(const Poset& p);

/// The spread up(A) - up(B), or nullopt if that set is not a spread.
std::optional<Spread> spread_from_antichains(const Poset& p, Subset a, Subset b);

/// The opposite poset on the same element indices (grid data is dropped).
PosetPtr opposite(const Poset& p);

/// Truncated coordinatewise sum / difference on a grid.
Elem grid_add(const Poset& g, Elem x, Elem y);
Elem grid_sub(const Poset& g, Elem x, Elem y);
/// Coordinatewise maximum.
Elem grid_join(const Poset& g, Elem x, Elem y);
enum class Sign { plus, minus };
Elem grid_arith(const Poset& g, Elem x, Elem y, Sign sign);
/// The element with coordinate 1 on `axis` and 0 elsewhere (truncated).
Elem unit_vector(const Poset& g, int axis);
Elem grid_origin(const Poset& g);

/// Width of the poset (Dilworth: n minus a maximum matching of the strict order).
int max_antichain_size(const Poset& p);
/// Exhaustive search; reference implementation for small posets.
int max_antichain_size_brute(const Poset& p);

/// Elements of a full subposet on `sub`, with index maps in both directions.
struct InducedSubposet {
  PosetPtr poset;
  std::vector<Elem> to_parent;
  std::vector<Elem> from_parent;  // -1 outside
};
InducedSubposet induced_subposet(const Poset& p, Subset sub);

std::string format_elem(const Poset& p, Elem e);
std::string format_subset(const Poset& p, Subset s);

}  // namespace spreadres
