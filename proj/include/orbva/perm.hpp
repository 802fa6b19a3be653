#pragma once

#include "orbva/util.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbva {

/// Permutation of {0..n-1} stored as an image table.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Transposition (a b) on n points.
  static Permutation transposition(int n, int a, int b);
  /// The n-cycle (0 1 2 ... n-1).
  static Permutation cycle(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  bool is_identity() const;
  Permutation inverse() const;
  /// Composition acting right-to-left: (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

  std::uint64_t apply_to_set(std::uint64_t mask) const;
  const std::vector<int>& images() const { return img_; }
  std::string str() const;  // cycle notation, 1-based

 private:
  std::vector<int> img_;
};

/// (|G|, |G^K|, |G-hat^K|, orbit length of K).
struct StabilizerData {
  BigInt group_order;
  BigInt setwise_order;
  BigInt pointwise_order;
  BigInt orbit_length;
};

/// Three placed support sets with the derived overlap data recomputed on
/// demand (never stored, so it cannot go stale).
struct SupportConfiguration {
  std::uint64_t K1 = 0, K2 = 0, K3 = 0;

  std::uint64_t sets(int i) const { return i == 0 ? K1 : (i == 1 ? K2 : K3); }
  std::uint64_t union_all() const { return K1 | K2 | K3; }
  std::uint64_t triple_overlap() const { return K1 & K2 & K3; }
  /// Points lying in exactly one of the three sets.
  std::uint64_t one_point_set() const {
    return union_all() & ~((K1 & K2) | (K1 & K3) | (K2 & K3));
  }
  int n_t() const;
  friend bool operator==(const SupportConfiguration&, const SupportConfiguration&) = default;
  friend auto operator<=>(const SupportConfiguration&, const SupportConfiguration&) = default;
};

int popcount_mask(std::uint64_t mask);
std::vector<int> mask_to_points(std::uint64_t mask);
std::uint64_t points_to_mask(std::span<const int> points);

/// Permutation group on {0..n-1} given by generators. The order/membership
/// chain is built eagerly, so a constructed group is immutable and safe to
/// query from any thread. Element enumeration is cached lazily behind a
/// mutex.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  static PermGroup trivial(int n);
  static PermGroup symmetric(int n);
  /// All permutations fixing the point 0.
  static PermGroup pointed_symmetric(int n);
  /// A x B acting on the disjoint union, A on [0,degA), B shifted.
  static PermGroup direct_product(const PermGroup& a, const PermGroup& b);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;

  /// All elements; throws std::length_error beyond the budget.
  const std::vector<Permutation>& elements(std::size_t budget = 3000000) const;

  BigInt pointwise_stabilizer_order(std::uint64_t K) const;
  std::vector<Permutation> pointwise_stabilizer_generators(std::uint64_t K) const;

  struct SetOrbit {
    std::vector<std::uint64_t> sets;
    /// transversal[i] maps the base set onto sets[i].
    std::vector<Permutation> transversal;
    std::optional<std::size_t> index_of(std::uint64_t mask) const;
  };
  SetOrbit orbit_of_set(std::uint64_t K) const;
  BigInt set_orbit_length(std::uint64_t K) const;
  BigInt setwise_stabilizer_order(std::uint64_t K) const;
  std::vector<Permutation> setwise_stabilizer_generators(std::uint64_t K) const;

  StabilizerData stabilizer_data(std::uint64_t K) const;

  /// Faithful action of G^K / G-hat^K on K, relabeled to {0..|K|-1} along
  /// sorted(K). Throws on empty K.
  PermGroup restriction(std::uint64_t K) const;
  /// Lifts a permutation of the restriction back to degree() points (identity
  /// off K).
  Permutation lift_restriction(std::uint64_t K, const Permutation& r) const;

  /// |A*B*C| for the pointwise stabilizers of K1,K2,K3, computed by direct
  /// product-set enumeration over right-coset labels (exact for any order).
  BigInt pointwise_product_set_order(std::uint64_t K1, std::uint64_t K2, std::uint64_t K3) const;

 private:
  struct Chain;
  std::shared_ptr<const Chain> build_chain(std::vector<int> base_prefix) const;

  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const Chain> chain_;
  BigInt order_;
  mutable std::shared_ptr<std::vector<Permutation>> elements_;
  mutable std::shared_ptr<std::mutex> mu_;
};

/// Generic orbit of a value under the generators of a group.
template <typename T, typename Apply>
std::vector<T> orbit_of(const T& start, const std::vector<Permutation>& gens, Apply apply) {
  std::vector<T> orbit{start};
  std::map<T, bool> seen{{start, true}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      T next = apply(g, orbit[i]);
      if (seen.emplace(next, true).second) orbit.push_back(next);
    }
  }
  return orbit;
}

/// Family of permutation groups indexed by N with strictly growing domains.
class GroupFamily {
 public:
  enum class Kind { symmetric, pointed_symmetric, product, custom };

  static GroupFamily symmetric();
  static GroupFamily pointed_symmetric();
  /// S_N x S_N on 2N interleaved sites (even block / odd block), so that the
  /// initial segments I_N are unions of group blocks and the family nests.
  static GroupFamily product();
  static GroupFamily custom(std::string name, std::function<int(int)> sites,
                            std::function<PermGroup(int)> group);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int sites(int N) const;
  PermGroup group(int N) const;

 private:
  GroupFamily(Kind kind, std::string name, std::function<int(int)> sites,
              std::function<PermGroup(int)> group);
  Kind kind_;
  std::string name_;
  std::function<int(int)> sites_;
  std::function<PermGroup(int)> group_;
};

/// Site label used for counting orbits of weighted functions: a seed basis
/// vector is abstracted to (weight, index within that weight).
struct SiteLabel {
  int weight;
  int index;
  friend auto operator<=>(const SiteLabel&, const SiteLabel&) = default;
};

/// Finitely supported function site -> nonvacuum label, sorted by site.
using LabeledWord = std::vector<std::pair<int, SiteLabel>>;

LabeledWord act_on_word(const Permutation& g, const LabeledWord& w);

/// All functions of total weight n on `degree` sites, where dims[w] labels of
/// weight w exist (dims[0] is the vacuum and is implicit).
std::vector<LabeledWord> weighted_functions(int degree, const std::vector<int>& dims, int n);

struct FunctionOrbits {
  BigInt count;                   // b_n
  std::vector<LabeledWord> reps;  // lexicographically least members, sorted
  std::vector<BigInt> orbit_lengths;
};
FunctionOrbits function_orbit_reps(const PermGroup& g, const std::vector<int>& dims, int n);

struct FamilyDiagnostics {
  std::vector<int> Ns;
  std::vector<bool> nested;           // restriction of G_N to I_{N-1} lies in G_{N-1}
  bool restriction_stabilized;        // G|K^N eventually constant over the range
  int restriction_stable_from;        // first N of the stable tail (-1 if none)
  BigInt stable_restriction_order;
  std::vector<BigInt> b_n;            // orbit counts of weight-n functions
  int saturation_N;                   // minimal N with b_n constant onward (-1 if none)
  std::vector<BigInt> orbit_lengths;  // of K under G_N
  bool finite_orbit_flag;             // orbit length constant over the tested tail
};

FamilyDiagnostics family_diagnostics(const GroupFamily& fam, std::uint64_t K,
                                     const std::vector<int>& dims, int n, int N_min, int N_max);

/// Representatives of the diagonal G-orbits on placed triples
/// (g1 K1, g2 K2, g3 K3), together with the class sizes and transporting
/// elements kappa_i mapping K_i onto the representative sets.
struct PlacedConfiguration {
  SupportConfiguration conf;
  BigInt class_size;
  std::array<Permutation, 3> kappa;
};
std::vector<PlacedConfiguration> placed_support_orbits(const PermGroup& g, std::uint64_t K1,
                                                       std::uint64_t K2, std::uint64_t K3,
                                                       std::size_t budget = 4000000);

}  // namespace orbva
