#include "orbva/perm.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace orbva {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Permutation Permutation::cycle(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a.img_[b.img_[i]];
  return Permutation(std::move(img));
}

std::uint64_t Permutation::apply_to_set(std::uint64_t mask) const {
  std::uint64_t out = 0;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << img_[i];
  }
  return out;
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || img_[i] == i) continue;
    any = true;
    os << "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) os << " ";
      first = false;
      os << (j + 1);
      j = img_[j];
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

int popcount_mask(std::uint64_t mask) { return std::popcount(mask); }

int SupportConfiguration::n_t() const { return popcount_mask(triple_overlap()); }

std::vector<int> mask_to_points(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t points_to_mask(std::span<const int> points) {
  std::uint64_t out = 0;
  for (int p : points) {
    if (p < 0 || p >= 64) throw std::invalid_argument("point out of mask range");
    out |= std::uint64_t{1} << p;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims)

struct PermGroup::Chain {
  int degree = 0;
  std::vector<int> base;
  // transversal[l]: point -> element mapping base[l] to that point, for the
  // orbit of base[l] under level_gens[l].
  std::vector<std::unordered_map<int, Permutation>> transversal;
  std::vector<std::vector<Permutation>> level_gens;

  BigInt order_below(std::size_t level) const {
    BigInt r = 1;
    for (std::size_t l = level; l < base.size(); ++l) {
      r *= static_cast<long>(transversal[l].size());
    }
    return r;
  }

  void rebuild_orbit(std::size_t l) {
    transversal[l].clear();
    std::vector<int> queue{base[l]};
    transversal[l].emplace(base[l], Permutation::identity(degree));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int p = queue[i];
      const Permutation& up = transversal[l].at(p);
      for (const auto& s : level_gens[l]) {
        int q = s(p);
        if (!transversal[l].count(q)) {
          transversal[l].emplace(q, s * up);
          queue.push_back(q);
        }
      }
    }
  }

  // Sifts g through levels starting at `from`; returns the residue and the
  // level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < base.size(); ++l) {
      int p = g(base[l]);
      auto it = transversal[l].find(p);
      if (it == transversal[l].end()) return {std::move(g), l};
      g = it->second.inverse() * g;
    }
    return {std::move(g), base.size()};
  }

  void append_base_point(int p) {
    base.push_back(p);
    level_gens.emplace_back();
    transversal.emplace_back();
    rebuild_orbit(base.size() - 1);
  }
};

std::shared_ptr<const PermGroup::Chain> PermGroup::build_chain(std::vector<int> base_prefix) const {
  auto chain = std::make_shared<Chain>();
  chain->degree = degree_;
  for (int p : base_prefix) {
    if (p < 0 || p >= degree_) throw std::invalid_argument("base point out of range");
    chain->base.push_back(p);
    chain->level_gens.emplace_back();
    chain->transversal.emplace_back();
  }
  // Distribute generators: a generator belongs to every level whose previous
  // base points it fixes.
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    std::size_t l = 0;
    while (l < chain->base.size() && g(chain->base[l]) == chain->base[l]) ++l;
    if (l == chain->base.size()) {
      int moved = -1;
      for (int i = 0; i < degree_; ++i) {
        if (g(i) != i) {
          moved = i;
          break;
        }
      }
      chain->base.push_back(moved);
      chain->level_gens.emplace_back();
      chain->transversal.emplace_back();
    }
    // A generator belongs to every level whose base prefix it fixes.
    for (std::size_t k = 0; k <= l; ++k) chain->level_gens[k].push_back(g);
  }
  for (std::size_t l = 0; l < chain->base.size(); ++l) chain->rebuild_orbit(l);
  if (chain->base.empty()) return chain;  // trivial group

  // Schreier-Sims closure, verified from the deepest level upward: every
  // Schreier generator of level l must sift to identity through the levels
  // below; when one sticks, it is inserted at levels l+1..stuck (it fixes the
  // corresponding base prefixes) and verification resumes at `stuck`.
  std::size_t l = chain->base.size() - 1;
  for (;;) {
    bool clean = true;
    for (const auto& [p, up] : chain->transversal[l]) {
      for (const auto& s : chain->level_gens[l]) {
        const Permutation& uq = chain->transversal[l].at(s(p));
        Permutation schreier = uq.inverse() * (s * up);
        if (schreier.is_identity()) continue;
        auto [residue, stuck] = chain->strip(std::move(schreier), l + 1);
        if (stuck == chain->base.size() && residue.is_identity()) continue;
        if (stuck == chain->base.size()) {
          int moved = -1;
          for (int i = 0; i < degree_; ++i) {
            if (residue(i) != i) {
              moved = i;
              break;
            }
          }
          chain->append_base_point(moved);
        }
        for (std::size_t k = l + 1; k <= stuck && k < chain->base.size(); ++k) {
          chain->level_gens[k].push_back(residue);
          chain->rebuild_orbit(k);
        }
        l = stuck;
        clean = false;
        break;
      }
      if (!clean) break;
    }
    if (clean) {
      if (l == 0) break;
      --l;
    }
  }
  return chain;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), mu_(std::make_shared<std::mutex>()) {
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  }
  chain_ = build_chain({});
  order_ = chain_->order_below(0);
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {}); }

PermGroup PermGroup::symmetric(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::transposition(n, 0, 1));
    if (n >= 3) gens.push_back(Permutation::cycle(n));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::pointed_symmetric(int n) {
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(Permutation::transposition(n, 1, 2));
    // cycle on {1..n-1}
    std::vector<int> img(n);
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[i] = i == n - 1 ? 1 : i + 1;
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::direct_product(const PermGroup& a, const PermGroup& b) {
  int n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < a.degree(); ++i) img[i] = g(i);
    for (int i = a.degree(); i < n; ++i) img[i] = i;
    gens.push_back(Permutation(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < a.degree(); ++i) img[i] = i;
    for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + g(i);
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = chain_->strip(p, 0);
  return level == chain_->base.size() && residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  for (const auto& s : gens_) {
    if (!g.contains(s)) return false;
  }
  return true;
}

const std::vector<Permutation>& PermGroup::elements(std::size_t budget) const {
  std::lock_guard<std::mutex> lock(*mu_);
  if (elements_) return *elements_;
  if (order_ > BigInt(budget)) {
    throw std::length_error("group too large to enumerate (order " + order_.str() + ")");
  }
  auto out = std::make_shared<std::vector<Permutation>>();
  out->push_back(Permutation::identity(degree_));
  std::set<Permutation> seen{out->front()};
  for (std::size_t i = 0; i < out->size(); ++i) {
    Permutation current = (*out)[i];
    for (const auto& g : gens_) {
      Permutation next = g * current;
      if (seen.insert(next).second) out->push_back(std::move(next));
    }
  }
  elements_ = std::move(out);
  return *elements_;
}

BigInt PermGroup::pointwise_stabilizer_order(std::uint64_t K) const {
  auto points = mask_to_points(K);
  auto chain = build_chain(points);
  return chain->order_below(points.size());
}

std::vector<Permutation> PermGroup::pointwise_stabilizer_generators(std::uint64_t K) const {
  auto points = mask_to_points(K);
  auto chain = build_chain(points);
  if (points.size() >= chain->base.size()) {
    // Stabilizer is trivial.
    return {};
  }
  // Generators of the stabilizer of the prefix: all stored generators at the
  // first level past the prefix.
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const auto& g : chain->level_gens[points.size()]) {
    if (!g.is_identity() && seen.insert(g).second) out.push_back(g);
  }
  return out;
}

std::optional<std::size_t> PermGroup::SetOrbit::index_of(std::uint64_t mask) const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == mask) return i;
  }
  return std::nullopt;
}

PermGroup::SetOrbit PermGroup::orbit_of_set(std::uint64_t K) const {
  if (degree_ > 64) throw std::invalid_argument("set orbits require degree <= 64");
  SetOrbit orbit;
  orbit.sets.push_back(K);
  orbit.transversal.push_back(Permutation::identity(degree_));
  std::map<std::uint64_t, std::size_t> seen{{K, 0}};
  for (std::size_t i = 0; i < orbit.sets.size(); ++i) {
    for (const auto& g : gens_) {
      std::uint64_t next = g.apply_to_set(orbit.sets[i]);
      if (seen.emplace(next, orbit.sets.size()).second) {
        orbit.sets.push_back(next);
        orbit.transversal.push_back(g * orbit.transversal[i]);
      }
    }
  }
  return orbit;
}

BigInt PermGroup::set_orbit_length(std::uint64_t K) const {
  return BigInt(orbit_of_set(K).sets.size());
}

BigInt PermGroup::setwise_stabilizer_order(std::uint64_t K) const {
  return order_ / set_orbit_length(K);
}

std::vector<Permutation> PermGroup::setwise_stabilizer_generators(std::uint64_t K) const {
  SetOrbit orbit = orbit_of_set(K);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < orbit.sets.size(); ++i) index[orbit.sets[i]] = i;
  std::set<Permutation> seen;
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < orbit.sets.size(); ++i) {
    for (const auto& g : gens_) {
      std::uint64_t image = g.apply_to_set(orbit.sets[i]);
      const Permutation& to_image = orbit.transversal[index.at(image)];
      Permutation schreier = to_image.inverse() * (g * orbit.transversal[i]);
      if (!schreier.is_identity() && seen.insert(schreier).second) {
        out.push_back(std::move(schreier));
      }
    }
  }
  return out;
}

StabilizerData PermGroup::stabilizer_data(std::uint64_t K) const {
  if (K >> degree_) throw std::invalid_argument("subset outside the domain");
  StabilizerData d;
  d.group_order = order_;
  d.orbit_length = set_orbit_length(K);
  d.setwise_order = order_ / d.orbit_length;
  d.pointwise_order = pointwise_stabilizer_order(K);
  return d;
}

PermGroup PermGroup::restriction(std::uint64_t K) const {
  if (K == 0) throw std::invalid_argument("restriction to empty set");
  auto points = mask_to_points(K);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < points.size(); ++i) relabel[points[i]] = static_cast<int>(i);
  std::set<Permutation> seen;
  std::vector<Permutation> gens;
  for (const auto& g : setwise_stabilizer_generators(K)) {
    std::vector<int> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) img[i] = relabel.at(g(points[i]));
    Permutation r{std::move(img)};
    if (!r.is_identity() && seen.insert(r).second) gens.push_back(std::move(r));
  }
  return PermGroup(static_cast<int>(points.size()), std::move(gens));
}

Permutation PermGroup::lift_restriction(std::uint64_t K, const Permutation& r) const {
  auto points = mask_to_points(K);
  if (r.degree() != static_cast<int>(points.size())) {
    throw std::invalid_argument("restriction degree mismatch");
  }
  std::vector<int> img(degree_);
  for (int i = 0; i < degree_; ++i) img[i] = i;
  for (std::size_t i = 0; i < points.size(); ++i) img[points[i]] = points[r(static_cast<int>(i))];
  return Permutation(std::move(img));
}

BigInt PermGroup::pointwise_product_set_order(std::uint64_t K1, std::uint64_t K2,
                                              std::uint64_t K3) const {
  // A*B*C is a union of right cosets of C = the pointwise stabilizer of K3.
  // The coset x*C is faithfully labeled by the tuple (x(k))_{k in K3}, since
  // (x*c)(k) = x(c(k)) = x(k). The covered labels are the closure of the
  // identity tuple under B and then A, acting coordinatewise.
  auto a_gens = pointwise_stabilizer_generators(K1);
  auto b_gens = pointwise_stabilizer_generators(K2);
  auto points = mask_to_points(K3);
  auto tuple_of = [&](const Permutation& x) {
    std::vector<int> t(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) t[i] = x(points[i]);
    return t;
  };
  // Set of cosets covered by B*C: orbit of the identity tuple under B acting
  // by left multiplication (tuples transform coordinatewise).
  std::set<std::vector<int>> bc;
  {
    std::vector<std::vector<int>> queue{tuple_of(Permutation::identity(degree_))};
    bc.insert(queue[0]);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : b_gens) {
        std::vector<int> next(queue[i].size());
        for (std::size_t k = 0; k < next.size(); ++k) next[k] = g(queue[i][k]);
        if (bc.insert(next).second) queue.push_back(next);
      }
    }
  }
  // A*(B*C): close under A.
  std::set<std::vector<int>> abc = bc;
  std::vector<std::vector<int>> queue(bc.begin(), bc.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : a_gens) {
      std::vector<int> next(queue[i].size());
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = g(queue[i][k]);
      if (abc.insert(next).second) queue.push_back(next);
    }
  }
  return BigInt(abc.size()) * pointwise_stabilizer_order(K3);
}

// ---------------------------------------------------------------------------
// Families

GroupFamily::GroupFamily(Kind kind, std::string name, std::function<int(int)> sites,
                         std::function<PermGroup(int)> group)
    : kind_(kind), name_(std::move(name)), sites_(std::move(sites)), group_(std::move(group)) {}

GroupFamily GroupFamily::symmetric() {
  return GroupFamily(Kind::symmetric, "symmetric", [](int N) { return N; },
                     [](int N) { return PermGroup::symmetric(N); });
}

GroupFamily GroupFamily::pointed_symmetric() {
  return GroupFamily(Kind::pointed_symmetric, "pointed_symmetric", [](int N) { return N; },
                     [](int N) { return PermGroup::pointed_symmetric(N); });
}

GroupFamily GroupFamily::product() {
  auto group = [](int N) {
    // S_N x S_N with the first factor on even sites and the second on odd
    // sites of {0..2N-1}; initial segments are then block unions and the
    // restriction of G_{N+1} to I_N is exactly G_N.
    std::vector<Permutation> gens;
    int n = 2 * N;
    if (N >= 2) {
      for (int parity = 0; parity < 2; ++parity) {
        gens.push_back(Permutation::transposition(n, parity, parity + 2));
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        for (int i = 0; i < N; ++i) {
          int from = 2 * i + parity;
          int to = i == N - 1 ? parity : 2 * (i + 1) + parity;
          img[from] = to;
        }
        gens.push_back(Permutation(std::move(img)));
      }
    }
    return PermGroup(n, std::move(gens));
  };
  return GroupFamily(Kind::product, "product", [](int N) { return 2 * N; }, group);
}

GroupFamily GroupFamily::custom(std::string name, std::function<int(int)> sites,
                                std::function<PermGroup(int)> group) {
  return GroupFamily(Kind::custom, std::move(name), std::move(sites), std::move(group));
}

int GroupFamily::sites(int N) const {
  if (N < 1) throw std::invalid_argument("family level must be >= 1");
  return sites_(N);
}

PermGroup GroupFamily::group(int N) const {
  if (N < 1) throw std::invalid_argument("family level must be >= 1");
  return group_(N);
}

// ---------------------------------------------------------------------------
// Weighted-function orbits

LabeledWord act_on_word(const Permutation& g, const LabeledWord& w) {
  LabeledWord out;
  out.reserve(w.size());
  for (const auto& [site, label] : w) out.emplace_back(g(site), label);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
void enumerate_words(int degree, const std::vector<int>& dims, int remaining, int min_site,
                     LabeledWord& current, std::vector<LabeledWord>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int site = min_site; site < degree; ++site) {
    for (int w = 1; w <= remaining && w < static_cast<int>(dims.size()); ++w) {
      if (dims[w] <= 0) continue;
      for (int idx = 0; idx < dims[w]; ++idx) {
        current.emplace_back(site, SiteLabel{w, idx});
        enumerate_words(degree, dims, remaining - w, site + 1, current, out);
        current.pop_back();
      }
    }
  }
}
}  // namespace

std::vector<LabeledWord> weighted_functions(int degree, const std::vector<int>& dims, int n) {
  if (n < 0) throw std::invalid_argument("weight must be >= 0");
  if (dims.empty() || dims[0] != 1) {
    throw std::invalid_argument("seed dims must start with a one-dimensional weight-0 space");
  }
  std::vector<LabeledWord> out;
  LabeledWord current;
  enumerate_words(degree, dims, n, 0, current, out);
  return out;
}

FunctionOrbits function_orbit_reps(const PermGroup& g, const std::vector<int>& dims, int n) {
  auto words = weighted_functions(g.degree(), dims, n);
  std::set<LabeledWord> unseen(words.begin(), words.end());
  FunctionOrbits result;
  result.count = 0;
  while (!unseen.empty()) {
    LabeledWord start = *unseen.begin();
    auto orbit = orbit_of(start, g.generators(),
                          [](const Permutation& p, const LabeledWord& w) { return act_on_word(p, w); });
    LabeledWord rep = orbit.front();
    for (const auto& w : orbit) {
      unseen.erase(w);
      if (w < rep) rep = w;
    }
    result.reps.push_back(std::move(rep));
    result.orbit_lengths.push_back(BigInt(orbit.size()));
    result.count += 1;
  }
  // Deterministic order: sort reps (and keep lengths aligned).
  std::vector<std::size_t> idx(result.reps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return result.reps[a] < result.reps[b]; });
  FunctionOrbits sorted;
  sorted.count = result.count;
  for (std::size_t i : idx) {
    sorted.reps.push_back(result.reps[i]);
    sorted.orbit_lengths.push_back(result.orbit_lengths[i]);
  }
  return sorted;
}

FamilyDiagnostics family_diagnostics(const GroupFamily& fam, std::uint64_t K,
                                     const std::vector<int>& dims, int n, int N_min, int N_max) {
  if (N_min < 1 || N_max < N_min) throw std::invalid_argument("bad N range");
  FamilyDiagnostics d;
  d.restriction_stabilized = false;
  d.restriction_stable_from = -1;
  d.saturation_N = -1;
  std::vector<PermGroup> restrictions;
  for (int N = N_min; N <= N_max; ++N) {
    PermGroup g = fam.group(N);
    d.Ns.push_back(N);
    // Nesting: every generator of the restriction of G_N to I_{N-1} lies in
    // G_{N-1} (trivially true at the first level).
    bool nested = true;
    if (N > 1) {
      int prev_sites = fam.sites(N - 1);
      PermGroup prev = fam.group(N - 1);
      std::uint64_t prefix_mask = prev_sites >= 64 ? ~std::uint64_t{0}
                                                   : ((std::uint64_t{1} << prev_sites) - 1);
      for (const auto& s : g.setwise_stabilizer_generators(prefix_mask)) {
        std::vector<int> img(prev_sites);
        for (int i = 0; i < prev_sites; ++i) img[i] = s(i);
        if (!prev.contains(Permutation(std::move(img)))) {
          nested = false;
          break;
        }
      }
    }
    d.nested.push_back(nested);
    d.orbit_lengths.push_back(g.set_orbit_length(K));
    d.b_n.push_back(function_orbit_reps(g, dims, n).count);
    restrictions.push_back(g.restriction(K));
  }
  // b_n saturation: earliest N from which the sequence is constant.
  for (std::size_t i = 0; i < d.b_n.size(); ++i) {
    bool constant = true;
    for (std::size_t j = i + 1; j < d.b_n.size(); ++j) {
      if (d.b_n[j] != d.b_n[i]) {
        constant = false;
        break;
      }
    }
    if (constant) {
      d.saturation_N = d.Ns[i];
      break;
    }
  }
  // Restriction stabilization: same order and mutual containment over a tail.
  for (std::size_t i = 0; i < restrictions.size(); ++i) {
    bool stable = true;
    for (std::size_t j = i + 1; j < restrictions.size(); ++j) {
      if (restrictions[j].order() != restrictions[i].order() ||
          !restrictions[i].is_subgroup_of(restrictions[j])) {
        stable = false;
        break;
      }
    }
    if (stable) {
      d.restriction_stabilized = true;
      d.restriction_stable_from = d.Ns[i];
      d.stable_restriction_order = restrictions[i].order();
      break;
    }
  }
  // Finite orbit: the orbit length of K is constant over the tested tail
  // (tail = second half of the range).
  std::size_t tail = d.orbit_lengths.size() / 2;
  d.finite_orbit_flag = true;
  for (std::size_t i = tail; i < d.orbit_lengths.size(); ++i) {
    if (d.orbit_lengths[i] != d.orbit_lengths[tail]) d.finite_orbit_flag = false;
  }
  return d;
}

std::vector<PlacedConfiguration> placed_support_orbits(const PermGroup& g, std::uint64_t K1,
                                                       std::uint64_t K2, std::uint64_t K3,
                                                       std::size_t budget) {
  std::array<PermGroup::SetOrbit, 3> orbits = {g.orbit_of_set(K1), g.orbit_of_set(K2),
                                               g.orbit_of_set(K3)};
  std::size_t total = orbits[0].sets.size() * orbits[1].sets.size() * orbits[2].sets.size();
  if (total > budget) {
    throw std::length_error("placed-support product space exceeds enumeration budget");
  }
  std::array<std::map<std::uint64_t, std::size_t>, 3> index;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < orbits[i].sets.size(); ++k) index[i][orbits[i].sets[k]] = k;
  }
  auto pack = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (a * orbits[1].sets.size() + b) * orbits[2].sets.size() + c;
  };
  std::vector<bool> seen(total, false);
  std::vector<PlacedConfiguration> out;
  for (std::size_t a = 0; a < orbits[0].sets.size(); ++a) {
    for (std::size_t b = 0; b < orbits[1].sets.size(); ++b) {
      for (std::size_t c = 0; c < orbits[2].sets.size(); ++c) {
        if (seen[pack(a, b, c)]) continue;
        // BFS the diagonal orbit of this triple.
        std::vector<std::array<std::size_t, 3>> queue{{a, b, c}};
        seen[pack(a, b, c)] = true;
        std::array<std::size_t, 3> best = {a, b, c};
        auto key = [&](const std::array<std::size_t, 3>& t) {
          return std::array<std::uint64_t, 3>{orbits[0].sets[t[0]], orbits[1].sets[t[1]],
                                              orbits[2].sets[t[2]]};
        };
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (const auto& s : g.generators()) {
            std::array<std::size_t, 3> next;
            for (int j = 0; j < 3; ++j) {
              next[j] = index[j].at(s.apply_to_set(orbits[j].sets[queue[i][j]]));
            }
            if (!seen[pack(next[0], next[1], next[2])]) {
              seen[pack(next[0], next[1], next[2])] = true;
              queue.push_back(next);
              if (key(next) < key(best)) best = next;
            }
          }
        }
        out.push_back(PlacedConfiguration{
            SupportConfiguration{orbits[0].sets[best[0]], orbits[1].sets[best[1]],
                                 orbits[2].sets[best[2]]},
            BigInt(queue.size()),
            {orbits[0].transversal[best[0]], orbits[1].transversal[best[1]],
             orbits[2].transversal[best[2]]}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PlacedConfiguration& x, const PlacedConfiguration& y) {
    return x.conf < y.conf;
  });
  return out;
}

}  // namespace orbva
