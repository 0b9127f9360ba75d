#pragma once

// Relative homological algebra with respect to spread representations:
// radicals, minimal approximations, radical approximations, resolutions and
// spread-global dimension, plus the endomorphism algebra of the family.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "spreadres/rep.hpp"

namespace spreadres {

/// A finite list of pairwise distinct spreads of one poset, with their
/// indicator representations and all pairwise Hom bases.
///
/// Hom(k_T, k_S) has a basis indexed by the connected components of T∩S that
/// have no upper cover in S - T and no lower cover in T - S; the basis element
/// is the identity on its component and zero elsewhere. Only those components
/// are stored.
class SpreadFamily {
public:
  /// All spreads of the poset in canonical order.
  static SpreadFamily all_spreads(PosetPtr poset, Field field, int cap = kDefaultElementCap);
  /// The projectives k_{up p}, in element order.
  static SpreadFamily projectives(PosetPtr poset, Field field);
  /// An arbitrary list; throws std::invalid_argument on non-spreads or duplicates.
  SpreadFamily(PosetPtr poset, Field field, std::vector<Spread> spreads);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const Field& field() const { return field_; }
  int size() const { return static_cast<int>(spreads_.size()); }
  const Spread& spread(int i) const { return spreads_[static_cast<std::size_t>(i)]; }
  const std::vector<Spread>& spreads() const { return spreads_; }
  const RepPtr& rep(int i) const { return reps_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(Subset members) const;

  /// Supports of the basis morphisms of Hom(k_T, k_S).
  const std::vector<Subset>& hom_components(int t, int s) const { return homs_[pair(t, s)]; }
  int hom_dim(int t, int s) const { return static_cast<int>(hom_components(t, s).size()); }
  /// Spreads S != T with Hom(k_T, k_S) != 0, ascending.
  const std::vector<int>& targets_from(int t) const { return out_[static_cast<std::size_t>(t)]; }
  /// Spreads T != S with Hom(k_T, k_S) != 0, ascending.
  const std::vector<int>& sources_into(int s) const { return in_[static_cast<std::size_t>(s)]; }

  RepMorphism hom_morphism(int t, int s, int k) const;

  /// Coordinates, in the basis of Hom(k_T, k_S), of b_j(U, S) after b_i(T, U).
  Vec compose_coords(int t, int u, int s, int i, int j) const;

  /// Basis (in Hom(k_T, k_S) coordinates) of rad^2(k_T, k_S).
  std::vector<Vec> rad2_coords(int t, int s) const;
  /// Indices of Hom(k_T, k_S) basis elements completing a basis of rad^2 to
  /// one of rad; empty when T == S. The count is dim rad/rad^2.
  const std::vector<int>& irreducibles(int t, int s) const { return irr_[pair(t, s)]; }

private:
  std::size_t pair(int t, int s) const {
    return static_cast<std::size_t>(t) * spreads_.size() + static_cast<std::size_t>(s);
  }
  void build();

  PosetPtr poset_;
  Field field_;
  std::vector<Spread> spreads_;
  std::vector<RepPtr> reps_;
  std::vector<std::vector<Subset>> homs_;
  std::vector<std::vector<int>> irr_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// rad(k_T, k_S): all of Hom for T != S, nothing for T == S.
std::vector<RepMorphism> rad_basis(const SpreadFamily& f, int t, int s);
/// Basis of span{ h after g : g in rad(T, U), h in rad(U, S) }.
std::vector<RepMorphism> rad2_basis(const SpreadFamily& f, int t, int s);

struct Approximation {
  RepPtr target;
  /// Family index of each direct summand of the domain, ascending.
  std::vector<int> summands;
  DirectSum domain;
  RepMorphism morphism;

  /// (family index, multiplicity) pairs, ascending by index.
  std::vector<std::pair<int, int>> multiplicities() const;
};

enum class RadicalSource {
  /// rad(S, -) generated by the irreducible maps out of S.
  irreducibles,
  /// Every basis element of rad(S, T) for every T.
  full,
};

/// Projective cover transported through the family: d_S copies of k_S, where
/// d_S = dim Hom(k_S, M) / span{ h after r : r in rad(S, T), h in Hom(k_T, M) }.
Approximation minimal_approximation(const SpreadFamily& f, const RepPtr& m,
                                    RadicalSource source = RadicalSource::irreducibles);

/// Every morphism from a family member into the target factors through `g`.
bool is_approximation(const SpreadFamily& f, const RepMorphism& g);

/// Minimal radical approximation of k_S: dim rad/rad^2 (T, S) copies of k_T.
Approximation minimal_radical_approximation(const SpreadFamily& f, int s);

/// Summand spreads of the minimal radical approximation of k_S, from the cover
/// and minimum combinatorics of S. Each appears once; canonical order.
std::vector<Subset> radapp_domain_closed_form(const Poset& p, Subset s);

struct ResolutionStep {
  Approximation approximation;
  RepPtr kernel;
  double seconds = 0.0;
};

struct Resolution {
  std::vector<ResolutionStep> steps;
  /// Length of the resolution; nullopt for the zero module.
  std::optional<int> length() const;
};

struct ResolutionDidNotTerminate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Iterated minimal approximations of kernels; max_depth defaults to 2|P|.
Resolution minimal_resolution(const SpreadFamily& f, const RepPtr& m, int max_depth = -1);

/// nullopt for the zero module.
std::optional<int> spread_pdim(const SpreadFamily& f, const RepPtr& m);

struct GldimReport {
  int gldim = 0;
  /// Family index of a spread whose radical-approximation kernel realizes the maximum.
  std::optional<int> witness;
  /// pdim of ker(radical approximation) per spread; nullopt where the kernel is zero.
  std::vector<std::optional<int>> kernel_pdims;
};

/// Max over spreads S of pdim ker(minimal radical approximation of k_S).
GldimReport spread_gldim(const SpreadFamily& f, int threads = 1);

/// Certificate for the relative simple of k_S: cokernel dimensions of
/// Hom(k_T, C) -> Hom(k_T, k_S) along the radical approximation C -> k_S.
std::vector<int> relative_simple_dims(const SpreadFamily& f, int s);

/// Structure constants of the endomorphism algebra of the direct sum of the
/// family, on the basis of all b_k(T, S).
struct GammaAlgebra {
  struct BasisElement {
    int source;
    int target;
    int index;
  };
  std::vector<BasisElement> basis;
  /// product[a][b] = coordinates of (basis a) after (basis b); empty row when
  /// the composite is not defined.
  std::vector<std::vector<Vec>> product;

  int dim() const { return static_cast<int>(basis.size()); }
  bool is_associative() const;
  /// Sum of identities acts as a two-sided unit.
  bool has_unit() const;
  /// Smallest n with rad^n = 0, where rad is spanned by non-identity basis elements.
  int radical_nilpotency() const;
};

GammaAlgebra gamma_table(const SpreadFamily& f);

/// Global dimension of End(direct sum of the family), from minimal projective
/// resolutions of its simple modules.
int gamma_gldim(const SpreadFamily& f, int max_depth = -1);

}  // namespace spreadres
