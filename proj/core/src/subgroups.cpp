#include "hallmark/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

namespace hallmark {

namespace {

using arith::Int;
using Key = std::vector<std::uint32_t>;  // sorted element indices

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t v : k) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Full element table of the parent group: sorted elements, index lookup,
// inverse table and conjugation-by-generator tables.
struct ElementTable {
  const PermGroup& group;
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> inv;
  std::vector<std::vector<std::uint32_t>> conj_by_gen;
  std::uint32_t id_idx = 0;

  ElementTable(const PermGroup& g, const EnumerationLimits& limits) : group(g) {
    elems = g.elements(limits.element_cap);
    index.reserve(elems.size() * 2);
    for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    id_idx = index.at(Perm::identity(g.degree()));
    inv.resize(elems.size());
    for (std::uint32_t i = 0; i < elems.size(); ++i) inv[i] = index.at(elems[i].inverse());
    conj_by_gen.reserve(g.generators().size());
    for (const Perm& gen : g.generators()) {
      Perm gen_inv = gen.inverse();
      std::vector<std::uint32_t> table(elems.size());
      for (std::uint32_t i = 0; i < elems.size(); ++i)
        table[i] = index.at(gen_inv * elems[i] * gen);
      conj_by_gen.push_back(std::move(table));
    }
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return index.at(elems[a] * elems[b]);
  }
  std::uint32_t conj(std::uint32_t x, std::uint32_t by) const {
    return mul(mul(inv[by], x), by);
  }
};

bool key_contains(const Key& key, std::uint32_t x) {
  return std::binary_search(key.begin(), key.end(), x);
}

Key conjugate_key(const Key& key, const std::vector<std::uint32_t>& table) {
  Key out;
  out.reserve(key.size());
  for (std::uint32_t x : key) out.push_back(table[x]);
  std::sort(out.begin(), out.end());
  return out;
}

struct ClassRecord {
  Key rep;                          // first-found representative, sorted
  std::vector<std::uint32_t> gens;  // cyclic-extension generating chain
  Int order = 1;
  long conjugates = 1;
};

// Cyclic-extension enumeration of soluble subgroups up to conjugacy.
// The dedup map holds every conjugate of every discovered class, so a
// duplicate costs one hash lookup.
class Enumerator {
 public:
  Enumerator(const ElementTable& table, const EnumerationLimits& limits)
      : t_(table), limits_(limits) {}

  const std::vector<ClassRecord>& run(const std::function<bool(Int)>& filter) {
    register_class(Key{t_.id_idx}, {}, 1);
    for (std::size_t c = 0; c < classes_.size(); ++c) extend(c, filter);
    return classes_;
  }

  const std::vector<ClassRecord>& classes() const { return classes_; }

  /// All stored keys of one class: its full conjugate orbit.
  std::vector<Key> orbit_of(std::size_t class_id) const {
    std::vector<Key> out;
    for (const auto& [key, id] : seen_) {
      if (id == class_id) out.push_back(key);
    }
    return out;
  }

 private:
  void register_class(Key key, std::vector<std::uint32_t> gens, Int order) {
    std::size_t id = classes_.size();
    if (static_cast<long>(id) >= limits_.class_limit)
      throw ResourceError("subgroup class limit exceeded (" +
                          std::to_string(limits_.class_limit) + " classes)");
    std::deque<const Key*> queue;
    auto [it, fresh] = seen_.emplace(key, id);
    (void)fresh;
    queue.push_back(&it->first);
    long orbit_size = 1;
    while (!queue.empty()) {
      const Key* cur = queue.front();
      queue.pop_front();
      for (const auto& table : t_.conj_by_gen) {
        Key img = conjugate_key(*cur, table);
        auto [pos, inserted] = seen_.emplace(std::move(img), id);
        if (inserted) {
          ++orbit_size;
          if (static_cast<long>(seen_.size()) > limits_.stored_subgroup_limit)
            throw ResourceError("subgroup dedup memory guard exceeded (" +
                                std::to_string(limits_.stored_subgroup_limit) +
                                " stored subgroups)");
          queue.push_back(&pos->first);
        }
      }
    }
    classes_.push_back({std::move(key), std::move(gens), order, orbit_size});
  }

  void extend(std::size_t class_id, const std::function<bool(Int)>& filter) {
    const Key rep = classes_[class_id].rep;
    const std::vector<std::uint32_t> rep_gens = classes_[class_id].gens;
    const Int rep_order = classes_[class_id].order;

    // Normalizer by element scan: g normalizes H iff it conjugates every
    // generator of H back into H.
    std::vector<std::uint32_t> normalizer;
    for (std::uint32_t g = 0; g < t_.elems.size(); ++g) {
      bool ok = true;
      for (std::uint32_t h : rep_gens) {
        if (!key_contains(rep, t_.conj(h, g))) {
          ok = false;
          break;
        }
      }
      if (ok) normalizer.push_back(g);
    }

    for (std::uint32_t n : normalizer) {
      if (key_contains(rep, n)) continue;
      // t = order of n modulo H; extensions need t prime.
      long t = 1;
      std::uint32_t pw = n;
      std::vector<std::uint32_t> powers{n};
      while (!key_contains(rep, pw)) {
        pw = t_.mul(pw, n);
        powers.push_back(pw);
        ++t;
      }
      powers.pop_back();  // n^t lies in H
      if (!arith::is_prime(t)) continue;
      Int new_order = rep_order * t;
      if (!filter(new_order)) continue;

      // <H, n> = H + Hn + ... + Hn^(t-1) since n normalizes H.
      Key key = rep;
      key.reserve(rep.size() * static_cast<std::size_t>(t));
      for (std::uint32_t p : powers) {
        for (std::uint32_t h : rep) key.push_back(t_.mul(h, p));
      }
      std::sort(key.begin(), key.end());
      if (seen_.contains(key)) continue;
      std::vector<std::uint32_t> gens = rep_gens;
      gens.push_back(n);
      register_class(std::move(key), std::move(gens), new_order);
    }
  }

  const ElementTable& t_;
  EnumerationLimits limits_;
  std::vector<ClassRecord> classes_;
  std::unordered_map<Key, std::size_t, KeyHash> seen_;
};

SubgroupHandle make_handle(const ElementTable& table, const ClassRecord& rec) {
  SubgroupHandle h;
  h.order = rec.order;
  h.conjugate_count = rec.conjugates;
  for (std::uint32_t g : rec.gens) h.generators.push_back(table.elems[g]);
  if (rec.order <= kSubgroupElementsCap) {
    h.elements.reserve(rec.rep.size());
    for (std::uint32_t e : rec.rep) h.elements.push_back(table.elems[e]);
  }
  return h;
}

// Deterministic presentation order: by order, then by representative key.
std::vector<std::size_t> sorted_class_ids(const std::vector<ClassRecord>& classes) {
  std::vector<std::size_t> ids(classes.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].order != classes[b].order) return classes[a].order < classes[b].order;
    return classes[a].rep < classes[b].rep;
  });
  return ids;
}

SubgroupHandle trivial_handle(const PermGroup& group) {
  SubgroupHandle h;
  h.order = 1;
  h.conjugate_count = 1;
  h.elements.push_back(Perm::identity(group.degree()));
  return h;
}

}  // namespace

std::vector<SubgroupHandle> enumerate_soluble_subgroups(
    const PermGroup& group, const std::function<bool(Int)>& order_filter,
    const EnumerationLimits& limits) {
  ElementTable table(group, limits);
  Enumerator en(table, limits);
  const auto& classes = en.run(order_filter);
  std::vector<SubgroupHandle> out;
  out.reserve(classes.size());
  for (std::size_t id : sorted_class_ids(classes)) out.push_back(make_handle(table, classes[id]));
  return out;
}

namespace {

// Shared Hall-search core: enumerate soluble subgroups of order dividing
// |G|_pi and report the classes hitting the target exactly.
struct HallSearch {
  Int target = 1;
  std::vector<std::size_t> hall_ids;  // sorted presentation order
  ElementTable table;
  Enumerator enumerator;

  HallSearch(const PermGroup& group, const arith::PrimeSet& pi,
             const EnumerationLimits& limits)
      : table(group, limits), enumerator(table, limits) {
    target = arith::pi_part(group.order(), pi);
    enumerator.run([this](Int d) { return target % d == 0; });
    for (std::size_t id : sorted_class_ids(enumerator.classes())) {
      if (enumerator.classes()[id].order == target) hall_ids.push_back(id);
    }
  }
};

}  // namespace

std::optional<HallWitness> find_hall_subgroup(const PermGroup& group,
                                              const arith::PrimeSet& pi,
                                              const EnumerationLimits& limits) {
  Int target = arith::pi_part(group.order(), pi);
  if (target == 1) {
    return HallWitness{trivial_handle(group), pi, 1};
  }
  HallSearch search(group, pi, limits);
  if (search.hall_ids.empty()) return std::nullopt;
  HallWitness w{make_handle(search.table, search.enumerator.classes()[search.hall_ids[0]]),
                pi, static_cast<long>(search.hall_ids.size())};
  return w;
}

HallClasses hall_conjugacy_classes(const PermGroup& group, const arith::PrimeSet& pi,
                                   const EnumerationLimits& limits) {
  Int target = arith::pi_part(group.order(), pi);
  HallClasses out;
  if (target == 1) {
    out.count = 1;
    out.representatives.push_back(trivial_handle(group));
    return out;
  }
  HallSearch search(group, pi, limits);
  out.count = static_cast<long>(search.hall_ids.size());
  for (std::size_t id : search.hall_ids)
    out.representatives.push_back(make_handle(search.table, search.enumerator.classes()[id]));
  return out;
}

ECDResult check_E_C_D(const PermGroup& group, const arith::PrimeSet& pi,
                      const EnumerationLimits& limits) {
  Int target = arith::pi_part(group.order(), pi);
  ECDResult res;
  if (target == 1) {
    res.E = true;
    res.C = true;
    res.D = true;
    res.witness = HallWitness{trivial_handle(group), pi, 1};
    return res;
  }
  arith::PrimeSet relevant = pi.intersect(arith::prime_spectrum(group.order()));
  if (relevant.size() > 2) {
    // Soluble search is incomplete here: a found witness still proves E,
    // but absence proves nothing and C/D would be untrustworthy.
    HallSearch search(group, pi, limits);
    if (search.hall_ids.empty()) {
      throw ScopeError("E/C/D check needs |pi intersect pi(G)| <= 2 (got " +
                       relevant.to_string() + "); soluble search found no witness");
    }
    res.E = true;
    res.witness = HallWitness{
        make_handle(search.table, search.enumerator.classes()[search.hall_ids[0]]), pi,
        std::nullopt};
    return res;
  }

  HallSearch search(group, pi, limits);
  res.E = !search.hall_ids.empty();
  res.C = res.E && search.hall_ids.size() == 1;
  if (!res.E) {
    res.D = false;
    res.C = false;
    return res;
  }
  res.witness = HallWitness{
      make_handle(search.table, search.enumerator.classes()[search.hall_ids[0]]), pi,
      static_cast<long>(search.hall_ids.size())};
  if (!*res.C) {
    res.D = false;
    return res;
  }
  // D: every enumerated class (each is a pi-subgroup, and by Burnside the
  // enumeration is complete) embeds into some conjugate of the Hall class.
  auto hall_orbit = search.enumerator.orbit_of(search.hall_ids[0]);
  bool all_contained = true;
  for (const auto& rec : search.enumerator.classes()) {
    bool contained = false;
    for (const auto& conj : hall_orbit) {
      if (std::includes(conj.begin(), conj.end(), rec.rep.begin(), rec.rep.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) {
      all_contained = false;
      break;
    }
  }
  res.D = all_contained;
  return res;
}

SubgroupHandle normal_closure(const PermGroup& group, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  for (const Perm& s : seeds) {
    if (s.degree() != group.degree())
      throw DomainError("normal_closure: seed degree mismatch");
    if (!group.contains(s)) throw DomainError("normal_closure: seed outside group");
    if (!s.is_identity()) gens.push_back(s);
  }
  SubgroupHandle handle;
  if (gens.empty()) return trivial_handle(group);

  PermGroup closure(group.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm& g : group.generators()) {
      Perm c = g.inverse() * gens[i] * g;
      if (!closure.contains(c)) {
        gens.push_back(std::move(c));
        closure = PermGroup(group.degree(), gens);
      }
    }
  }
  handle.generators = gens;
  handle.order = closure.order();
  handle.conjugate_count = 1;  // normal subgroups are self-conjugate
  if (handle.order <= kSubgroupElementsCap) handle.elements = closure.elements();
  return handle;
}

namespace {

// Conjugacy class representatives of elements, as indices into the table.
std::vector<std::uint32_t> element_class_reps(const ElementTable& table) {
  std::vector<bool> visited(table.elems.size(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < table.elems.size(); ++i) {
    if (visited[i]) continue;
    reps.push_back(i);
    std::deque<std::uint32_t> queue{i};
    visited[i] = true;
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop_front();
      for (const auto& tab : table.conj_by_gen) {
        std::uint32_t img = tab[cur];
        if (!visited[img]) {
          visited[img] = true;
          queue.push_back(img);
        }
      }
    }
  }
  return reps;
}

}  // namespace

bool is_simple(const PermGroup& group, const EnumerationLimits& limits) {
  if (group.order() == 1) return false;
  ElementTable table(group, limits);
  for (std::uint32_t rep : element_class_reps(table)) {
    if (rep == table.id_idx) continue;
    SubgroupHandle closure = normal_closure(group, {table.elems[rep]});
    if (closure.order != group.order()) return false;
  }
  return true;
}

namespace {

std::vector<arith::Int> factor_orders_rec(const PermGroup& group,
                                          const EnumerationLimits& limits) {
  if (group.order() == 1) return {};
  ElementTable table(group, limits);

  SubgroupHandle minimal;
  minimal.order = group.order();
  bool found_proper = false;
  for (std::uint32_t rep : element_class_reps(table)) {
    if (rep == table.id_idx) continue;
    SubgroupHandle closure = normal_closure(group, {table.elems[rep]});
    if (closure.order < group.order() &&
        (!found_proper || closure.order < minimal.order)) {
      minimal = std::move(closure);
      found_proper = true;
    }
  }
  if (!found_proper) return {group.order()};  // simple

  // Factors of N plus factors of G/N via the right-coset action.
  PermGroup nsub(group.degree(), minimal.generators);
  std::vector<arith::Int> orders = factor_orders_rec(nsub, limits);

  std::vector<std::uint32_t> n_idx;
  for (const Perm& e : nsub.elements(limits.element_cap)) n_idx.push_back(table.index.at(e));
  std::vector<std::uint32_t> coset_min(table.elems.size());
  for (std::uint32_t e = 0; e < table.elems.size(); ++e) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t n : n_idx) best = std::min(best, table.mul(n, e));
    coset_min[e] = best;
  }
  std::vector<std::uint32_t> points;  // canonical coset representatives
  for (std::uint32_t e = 0; e < table.elems.size(); ++e)
    if (coset_min[e] == e) points.push_back(e);
  if (points.size() > 60000)
    throw ResourceError("quotient degree too large: " + std::to_string(points.size()));
  std::unordered_map<std::uint32_t, std::uint16_t> point_of;
  for (std::uint16_t i = 0; i < points.size(); ++i) point_of.emplace(points[i], i);

  std::vector<Perm> qgens;
  for (const Perm& g : group.generators()) {
    std::uint32_t gi = table.index.at(g);
    std::vector<std::uint16_t> images(points.size());
    for (std::size_t p = 0; p < points.size(); ++p)
      images[p] = point_of.at(coset_min[table.mul(points[p], gi)]);
    qgens.emplace_back(std::move(images));
  }
  PermGroup quotient(static_cast<unsigned>(points.size()), qgens);
  auto qorders = factor_orders_rec(quotient, limits);
  orders.insert(orders.end(), qorders.begin(), qorders.end());
  return orders;
}

}  // namespace

std::vector<arith::Int> composition_factor_orders(const PermGroup& group,
                                                  const EnumerationLimits& limits) {
  auto orders = factor_orders_rec(group, limits);
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace hallmark
