// Systems of augmentations for decomposable fillings: pinching sequences
// composed with minimum cobordisms, restriction quotients, and integer
// specializations.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcdga/cobordism.hpp"

namespace lcdga {

struct Augmentation {
  DGAPtr source;
  std::shared_ptr<Ring> ring;              // post-quotient
  std::map<uint32_t, Laurent> values;      // degree-0 generators
  DGAMap pinch_map;                        // composite of the saddle maps
  size_t pinch_count = 0;
  int minima = 0;

  Laurent value(uint32_t g) const {
    auto it = values.find(g);
    return it == values.end() ? Laurent::zero() : it->second;
  }
  Laurent value(const std::string& name) const { return value(gen_id(name)); }
  Laurent var_value(const std::string& name) const {
    return ring->reduce(ring->var(name));
  }
  // Multiplicative extension; degree-1 chords (and anything without a
  // stored value) go to zero through their word.
  Laurent eval(const NCPoly& p) const {
    Laurent out;
    for (const auto& [w, c] : p.terms) {
      Laurent t = ring->reduce(c);
      bool dead = false;
      for (uint32_t g : w) {
        auto it = values.find(g);
        if (it == values.end() || it->second.is_zero()) {
          dead = true;
          break;
        }
        t *= it->second;
      }
      if (!dead) out += t;
    }
    return out;
  }

  // Free rank of R, which must equal 2g + 2m - 2 for a connected genus-g
  // filling of an m-component link.
  size_t free_rank() const { return ring->free_rank(); }
  // genus from the handle count: l = 2g + m + k - 2
  int genus() const {
    int m = source->spec.num_components();
    int g2 = static_cast<int>(pinch_count) - m - minima + 2;
    if (g2 < 0 || g2 % 2 != 0) throw ring_error("filling: odd Euler data");
    return g2 / 2;
  }

  // eps.d = 0 on every degree-1 generator, in the quotient ring.
  bool annihilates_differential(std::string* why = nullptr) const {
    for (const auto& g : source->generators) {
      if (g.degree != 1) continue;
      Laurent v = eval(source->d(g.id));
      if (!ring->equal_mod_constraints(v, Laurent::zero())) {
        if (why) *why = "eps(d(" + g.name + ")) != 0";
        return false;
      }
    }
    return true;
  }
};

// Compose the saddle maps of the pinch sequence with the terminal disk
// fillings. Every crossing must be certified proper at its step.
inline Augmentation filling_augmentation(const DGAPtr& dga,
                                         const std::vector<std::string>& pinch,
                                         bool certify = true) {
  DGAPtr cur = dga;
  DGAMap total;
  total.source = dga;
  total.target = dga;
  bool first = true;
  for (const auto& name : pinch) {
    SaddleResult res = saddle_map(cur, name, certify);
    if (first) {
      total = res.map;
      first = false;
    } else {
      total = total.then(res.map);
    }
    cur = res.target;
  }
  UnknotAugmentation ua = unknot_augmentation(cur);

  Augmentation aug;
  aug.source = dga;
  aug.ring = ua.ring;
  aug.pinch_map = total;
  aug.pinch_count = pinch.size();
  aug.minima = cur->spec.num_components();
  for (const auto& g : dga->generators) {
    if (g.degree != 0) continue;
    NCPoly img = first ? NCPoly::gen(g.id) : total.image(g.id);
    aug.values[g.id] = aug.ring->reduce(img.scalar_part());
  }
  return aug;
}

inline Augmentation filling_augmentation(const ClosureSpec& spec,
                                         const std::vector<std::string>& pinch,
                                         bool certify = true) {
  return filling_augmentation(build_dga(spec), pinch, certify);
}

// Recalibrate the saddle variable signs (s -> -s for the named variables):
// the same system with the base point pair's minus label on the other
// strand, matching a figure's choice.
inline Augmentation flip_saddle_signs(const Augmentation& aug,
                                      const std::vector<std::string>& vars) {
  if (vars.empty()) return aug;
  Augmentation out = aug;
  out.ring = std::make_shared<Ring>(*aug.ring);
  std::set<size_t> flip;
  for (const auto& v : vars) flip.insert(out.ring->idx(v));
  for (auto& [idx, val] : out.ring->solved) val = val.flip_signs(flip);
  for (auto& c : out.ring->constraints) c.lhs = c.lhs.flip_signs(flip);
  for (auto& [g, v] : out.values) v = v.flip_signs(flip);
  return out;
}

// Impose a per-base-point sign designation (one base point set to -1, the
// rest to +1 on each component). The induced relations are pure sign
// conditions on the surviving variables.
inline Augmentation restrict_augmentation(
    const Augmentation& aug,
    const std::vector<std::pair<std::string, int>>& designation) {
  Augmentation out = aug;
  out.ring = std::make_shared<Ring>(*aug.ring);
  std::vector<Laurent> rels;
  for (const auto& [var, sign] : designation) {
    Laurent v = out.ring->reduce(out.ring->var(var));
    // eps(t) = sign  <=>  -sign * eps(t) = -1
    rels.push_back(v * Laurent::constant(-sign));
  }
  solve_unit_relations(*out.ring, rels);
  if (out.ring->legal_sign_assignments().empty())
    throw ring_error("restrict_augmentation: inconsistent designation");
  return out;
}

struct IntegerAugmentation {
  std::vector<int> signs;               // per ring variable
  std::map<uint32_t, Int> values;       // degree-0 generator -> integer
};

// One entry per +-1 assignment of the free variables compatible with the
// ring's sign constraints; each entry is verified to annihilate the
// differential over Z.
inline std::vector<IntegerAugmentation> enumerate_integer_augmentations(
    const Augmentation& aug, bool verify = true) {
  std::vector<IntegerAugmentation> out;
  for (auto& signs : aug.ring->legal_sign_assignments()) {
    IntegerAugmentation ia;
    ia.signs = signs;
    for (const auto& [g, v] : aug.values)
      ia.values[g] = v.evaluate_signs(signs);
    if (verify) {
      for (const auto& g : aug.source->generators) {
        if (g.degree != 1) continue;
        Int total = 0;
        for (const auto& [w, c] : aug.source->d(g.id).terms) {
          Int t = aug.ring->reduce(c).evaluate_signs(signs);
          for (uint32_t x : w) {
            auto it = ia.values.find(x);
            t *= it == ia.values.end() ? Int(0) : it->second;
          }
          total += t;
        }
        if (total != 0)
          throw ring_error("integer augmentation fails eps.d = 0 at " +
                           g.name);
      }
    }
    out.push_back(std::move(ia));
  }
  return out;
}

}  // namespace lcdga
