#pragma once

// Representations of finite posets over GF(p): a vector space per element and
// a structure matrix per Hasse edge, with all path composites equal.

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spreadres/linalg.hpp"
#include "spreadres/poset.hpp"

namespace spreadres {

class Representation;
using RepPtr = std::shared_ptr<const Representation>;

struct FunctorialityError : std::invalid_argument {
  FunctorialityError(Elem from, Elem to, const std::string& what)
      : std::invalid_argument(what), x(from), y(to) {}
  Elem x;
  Elem y;
};

class Representation {
public:
  /// Shapes are checked; functoriality is not (see validate_representation).
  Representation(PosetPtr poset, Field field, std::vector<int> dims, std::vector<Matrix> edge_maps);

  static Representation zero(PosetPtr poset, Field field);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const Field& field() const { return field_; }
  int dim(Elem e) const { return dims_[e]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  Subset support() const;

  const Matrix& edge_map(int edge) const { return edge_maps_[static_cast<std::size_t>(edge)]; }
  const std::vector<Matrix>& edge_maps() const { return edge_maps_; }
  /// Structure map M(x <= y), composed along one Hasse path.
  Matrix map(Elem x, Elem y) const;

  bool operator==(const Representation& o) const;

private:
  PosetPtr poset_;
  Field field_;
  std::vector<int> dims_;
  std::vector<Matrix> edge_maps_;
};

/// Checks every pair of Hasse paths between comparable elements; throws
/// FunctorialityError naming the first offending pair.
void check_functorial(const Representation& m);

/// Shape checks plus check_functorial.
Representation validate_representation(PosetPtr poset, Field field, std::vector<int> dims,
                                        std::vector<Matrix> edge_maps);

/// Indicator representation of a convex subset: k on S, identities inside S.
RepPtr indicator_rep(const PosetPtr& poset, Field field, Subset convex);

struct SpreadRep {
  Spread spread;
  RepPtr rep;
};

SpreadRep spread_rep(const PosetPtr& poset, Field field, const Spread& s);

class RepMorphism {
public:
  RepMorphism(RepPtr source, RepPtr target, std::vector<Matrix> components);

  static RepMorphism zero(RepPtr source, RepPtr target);
  static RepMorphism identity(RepPtr m);

  const RepPtr& source() const { return source_; }
  const RepPtr& target() const { return target_; }
  const Matrix& at(Elem e) const { return components_[e]; }
  const std::vector<Matrix>& components() const { return components_; }

  bool is_natural() const;
  bool is_zero() const;
  bool is_iso() const;
  RepMorphism scaled(Scalar s) const;

private:
  RepPtr source_;
  RepPtr target_;
  std::vector<Matrix> components_;
};

/// g after f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism add(const RepMorphism& a, const RepMorphism& b);

/// Unknown layout of Hom(M, N): one row-major dim N(p) x dim M(p) block per
/// element p, in index order.
std::size_t hom_ambient_dim(const Representation& m, const Representation& n);
Vec flatten(const RepMorphism& f);
RepMorphism unflatten(const RepPtr& source, const RepPtr& target, const Vec& v);

/// Basis of the solution space of the naturality equations, as flattened vectors.
std::vector<Vec> hom_basis_vectors(const Representation& m, const Representation& n);
std::vector<RepMorphism> hom_basis(const RepPtr& m, const RepPtr& n);
int hom_dim(const Representation& m, const Representation& n);

struct KernelResult {
  RepPtr kernel;
  RepMorphism inclusion;
};
KernelResult kernel_of(const RepMorphism& f);

struct CokernelResult {
  RepPtr cokernel;
  RepMorphism projection;
};
CokernelResult cokernel_of(const RepMorphism& f);

struct DirectSum {
  RepPtr sum;
  std::vector<RepMorphism> injections;
  std::vector<RepMorphism> projections;
  std::vector<std::string> labels;
};
DirectSum direct_sum(const PosetPtr& poset, Field field, const std::vector<RepPtr>& summands,
                     std::vector<std::string> labels = {});

/// The morphism from a direct sum whose restriction to summand i is maps[i].
RepMorphism morphism_from_sum(const DirectSum& sum, const RepPtr& target,
                              const std::vector<RepMorphism>& maps);

enum class CoLimitKind { limit, colimit };

struct CoLimit {
  int dim = 0;
  /// limit: lim -> M(p) projections; colimit: M(p) -> colim insertions. Indexed
  /// by element; entries outside the diagram are empty.
  std::vector<Matrix> legs;
};

/// (Co)limit of M over the full subposet `diagram` (all of P by default).
CoLimit co_limit(const Representation& m, CoLimitKind kind);
CoLimit co_limit_over(const Representation& m, CoLimitKind kind, Subset diagram);

/// Precomposition with an order-preserving map psi: Q -> P (psi[q] in P).
/// Throws std::invalid_argument if psi is not monotone.
Representation restrict(const Representation& m, const PosetPtr& q, const std::vector<Elem>& psi);

struct InconclusiveIso : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultIsoSearchCap = 4;

/// Isomorphism test: dimension vectors, then a search for an invertible element
/// of Hom(M, N) among basis elements and, up to `cap` dimensions, all
/// combinations. Throws InconclusiveIso beyond the cap.
bool iso_check(const RepPtr& m, const RepPtr& n, int cap = kDefaultIsoSearchCap);

struct RandomRepOptions {
  int max_generators = 3;
  int max_relations = 3;
};

/// Cokernel of a random morphism between direct sums of projectives k_{up p}.
RepPtr random_representation(const PosetPtr& poset, Field field, std::mt19937_64& rng,
                             const RandomRepOptions& options = {});

/// Uniform integer in [0, n) from the engine; stable across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n);

}  // namespace spreadres
