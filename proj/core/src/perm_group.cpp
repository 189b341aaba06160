#include "hallmark/perm_group.hpp"

#include <algorithm>
#include <string>

namespace hallmark {

void PermGroup::Level::recompute_orbit(unsigned degree) {
  orbit_pos.assign(degree, -1);
  orbit.clear();
  transversal.clear();
  orbit.push_back(base_point);
  orbit_pos[base_point] = 0;
  transversal.push_back(Perm::identity(degree));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& s : gens) {
      unsigned img = s[orbit[i]];
      if (orbit_pos[img] < 0) {
        orbit_pos[img] = static_cast<int>(orbit.size());
        orbit.push_back(img);
        transversal.push_back(transversal[i] * s);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    unsigned img = g[levels_[l].base_point];
    int pos = levels_[l].orbit_pos[img];
    if (pos < 0) return {std::move(g), l};
    g = g * levels_[l].transversal[pos].inverse();
  }
  return {std::move(g), levels_.size()};
}

namespace {

unsigned smallest_moved_point(const Perm& g) {
  for (unsigned i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  throw DomainError("smallest_moved_point: identity permutation");
}

}  // namespace

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1) throw DomainError("PermGroup: degree must be >= 1");
  for (const Perm& g : gens_) {
    if (g.degree() != degree_) throw FormatError("PermGroup: generator degree mismatch");
  }
  build_chain();
}

void PermGroup::build_chain() {
  levels_.clear();

  // Seed the chain: a generator joins every level whose earlier base
  // points it fixes. Base points are smallest-moved-point first.
  for (const Perm& g : gens_) {
    if (g.is_identity()) continue;
    std::size_t l = 0;
    while (l < levels_.size() && g[levels_[l].base_point] == levels_[l].base_point) ++l;
    if (l == levels_.size()) {
      Level lev;
      lev.base_point = smallest_moved_point(g);
      levels_.push_back(std::move(lev));
    }
    for (std::size_t i = 0; i <= l; ++i) levels_[i].gens.push_back(g);
  }
  for (Level& lev : levels_) lev.recompute_orbit(degree_);

  // Close under Schreier generators, deepest level first.
  std::size_t i = levels_.size();
  while (i > 0) {
    --i;
    bool clean = true;
    Level& lev = levels_[i];
    for (std::size_t oi = 0; oi < lev.orbit.size() && clean; ++oi) {
      for (const Perm& s : lev.gens) {
        Perm ts = lev.transversal[oi] * s;
        int pos = lev.orbit_pos[ts[lev.base_point]];
        Perm schreier = ts * lev.transversal[pos].inverse();
        auto [residue, l] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        if (l == levels_.size()) {
          Level fresh;
          fresh.base_point = smallest_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t j = i + 1; j <= l; ++j) {
          levels_[j].gens.push_back(residue);
          levels_[j].recompute_orbit(degree_);
        }
        i = l + 1;  // reprocess from the level that changed
        clean = false;
        break;
      }
    }
  }

  order_ = 1;
  base_.clear();
  for (const Level& lev : levels_) {
    order_ *= static_cast<arith::Int>(lev.orbit.size());
    base_.push_back(lev.base_point);
  }
}

bool PermGroup::contains(const Perm& x) const {
  if (x.degree() != degree_) throw DomainError("PermGroup::contains: degree mismatch");
  auto [residue, level] = strip(x, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<Perm> PermGroup::elements(arith::Int cap) const {
  if (order_ > cap) {
    throw ResourceError("element enumeration cap exceeded: |G| = " + std::to_string(order_) +
                        " > " + std::to_string(cap));
  }
  std::vector<Perm> elems{Perm::identity(degree_)};
  for (std::size_t l = levels_.size(); l > 0; --l) {
    const Level& lev = levels_[l - 1];
    std::vector<Perm> next;
    next.reserve(elems.size() * lev.transversal.size());
    for (const Perm& e : elems) {
      for (const Perm& t : lev.transversal) next.push_back(e * t);
    }
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace hallmark
