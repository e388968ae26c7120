// The Legendrian contact DGA of a (-1)-closure: generators, gradings, link
// grading endpoint data, the path-matrix differential, and structural
// checks.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcdga/braid.hpp"
#include "lcdga/ncpoly.hpp"
#include "lcdga/ring.hpp"

namespace lcdga {

enum class GenKind { BraidCrossing, UnknotChord };

struct GeneratorInfo {
  uint32_t id = 0;
  std::string name;
  GenKind kind = GenKind::BraidCrossing;
  int degree = 0;
  int r_comp = 0, c_comp = 0;  // endpoint components (link grading)
  size_t position = 0;         // word position for crossings
  int strand = 0;              // sigma index for crossings
};

inline Laurent basepoint_value(const Ring& ring, const Basepoint& b) {
  Mono m;
  m.set(ring.idx(b.var), b.power);
  return Laurent::monomial(b.sign, m);
}

// Diagonal path-matrix factor of one base point column.
inline NCMatrix column_matrix(const ClosureSpec& spec, const Ring& ring,
                              size_t col) {
  int n = spec.strands();
  NCMatrix d = NCMatrix::identity(n);
  auto it = spec.columns[col];
  for (const auto& [strand, pts] : it.at) {
    Laurent v = Laurent::one();
    for (const auto& b : pts) v *= basepoint_value(ring, b);
    d.at(strand - 1, strand - 1) = NCPoly::scalar(v);
  }
  return d;
}

// Ordered product D(t_lo) P(a_{lo+1}) D(t_{lo+1}) ... P(a_hi) D(t_hi) over
// the column interval [lo, hi]; default the whole braid.
inline NCMatrix path_matrix(const ClosureSpec& spec, const Ring& ring,
                            size_t col_lo = 0, size_t col_hi = SIZE_MAX) {
  if (col_hi == SIZE_MAX) col_hi = spec.length();
  int n = spec.strands();
  NCMatrix p = column_matrix(spec, ring, col_lo);
  for (size_t pos = col_lo; pos < col_hi; ++pos) {
    p = p * path_factor(spec.word.letters[pos],
                        NCPoly::gen(spec.crossing_names[pos]), n);
    p = p * column_matrix(spec, ring, pos + 1);
  }
  return p;
}

struct StructureReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

class ClosureDGA {
 public:
  ClosureSpec spec;
  std::shared_ptr<Ring> ring;
  std::vector<GeneratorInfo> generators;
  std::map<uint32_t, NCPoly> differential_map;

  const GeneratorInfo* find(uint32_t id) const {
    for (const auto& g : generators)
      if (g.id == id) return &g;
    return nullptr;
  }
  const GeneratorInfo& info(uint32_t id) const {
    const GeneratorInfo* g = find(id);
    if (!g) throw ring_error("unknown generator " + gen_name(id));
    return *g;
  }
  int degree(uint32_t id) const { return info(id).degree; }

  NCPoly d(uint32_t id) const {
    auto it = differential_map.find(id);
    return it == differential_map.end() ? NCPoly::zero() : it->second;
  }

  // Leibniz extension, with sign (-1)^degree on words.
  NCPoly differential(const NCPoly& x) const {
    NCPoly out;
    for (const auto& [w, c] : x.terms) {
      int sign = 1;
      for (size_t i = 0; i < w.size(); ++i) {
        NCPoly left = NCPoly::scalar(Laurent::constant(sign));
        for (size_t j = 0; j < i; ++j) left *= NCPoly::gen(w[j]);
        NCPoly right = NCPoly::one();
        for (size_t j = i + 1; j < w.size(); ++j) right *= NCPoly::gen(w[j]);
        out += (left * d(w[i]) * right) * c;
        if (degree(w[i]) % 2 != 0) sign = -sign;
      }
    }
    return out;
  }

  NCMatrix c_matrix() const {
    int n = spec.strands();
    NCMatrix c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        c.at(i, j) = NCPoly::gen(c_name(i + 1, j + 1));
    return c;
  }
  static std::string c_name(int i, int j) {
    return "c" + std::to_string(i) + std::to_string(j);
  }
};

using DGAPtr = std::shared_ptr<const ClosureDGA>;

// Generators a_1..a_r of degree 0 and c_ij of degree 1 with
// d(a) = 0, d(C) = 1 + P_beta; endpoint components from the closure.
inline DGAPtr build_dga(const ClosureSpec& spec,
                        std::shared_ptr<Ring> ring = nullptr) {
  auto dga = std::make_shared<ClosureDGA>();
  dga->spec = spec;
  if (!ring) {
    ring = std::make_shared<Ring>();
    for (const auto& col : spec.columns)
      for (const auto& [s, pts] : col.at)
        for (const auto& b : pts) ring->add(b.var, b.var.starts_with("t"));
  }
  dga->ring = ring;

  int n = spec.strands();
  if (n > 9) throw ring_error("strand count > 9 unsupported by c-naming");
  auto comp = spec.component_map();
  std::vector<std::vector<int>> paths;
  for (int s = 0; s < n; ++s) paths.push_back(spec.strand_path(s));
  auto strand_at = [&](size_t col, int pos0) {
    for (int s = 0; s < n; ++s)
      if (paths[s][col] == pos0) return s;
    throw ring_error("strand lookup failed");
  };

  for (size_t p = 0; p < spec.length(); ++p) {
    int k = spec.word.letters[p];
    GeneratorInfo g;
    g.name = spec.crossing_names[p];
    g.id = gen_id(g.name);
    g.kind = GenKind::BraidCrossing;
    g.degree = 0;
    g.position = p;
    g.strand = k;
    // descending strand enters at 0-based position k, ascending at k-1
    g.r_comp = comp[strand_at(p, k)];
    g.c_comp = comp[strand_at(p, k - 1)];
    dga->generators.push_back(g);
    dga->differential_map[g.id] = NCPoly::zero();
  }
  NCMatrix p_beta = path_matrix(spec, *ring);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GeneratorInfo g;
      g.name = ClosureDGA::c_name(i, j);
      g.id = gen_id(g.name);
      g.kind = GenKind::UnknotChord;
      g.degree = 1;
      g.r_comp = comp[i - 1];
      g.c_comp = comp[strand_at(spec.length(), j - 1)];
      dga->generators.push_back(g);
      NCPoly dc = p_beta.at(i - 1, j - 1);
      if (i == j) dc += NCPoly::one();
      dga->differential_map[g.id] = dc;
    }
  return dga;
}

// Verify d.d = 0, link-grading composability of every differential word,
// degree homogeneity, and the matrix identity d(C) = 1 + P_beta.
inline StructureReport check_structure(const ClosureDGA& dga) {
  StructureReport rep;
  for (const auto& g : dga.generators) {
    NCPoly dd = dga.differential(dga.d(g.id));
    if (!dd.is_zero()) rep.fail("d(d(" + g.name + ")) != 0");
    for (const auto& [w, c] : dga.d(g.id).terms) {
      int expected = g.degree - 1;
      int deg = 0;
      for (uint32_t x : w) deg += dga.degree(x);
      if (deg != expected)
        rep.fail("degree of a term of d(" + g.name + ") is off");
      // composability: outer endpoints match g, inner endpoints chain
      int cur = g.r_comp;
      for (uint32_t x : w) {
        const auto& gi = dga.info(x);
        if (gi.r_comp != cur) {
          rep.fail("composability in d(" + g.name + ") at " + gi.name);
          break;
        }
        cur = gi.c_comp;
      }
      if (cur != g.c_comp)
        rep.fail("composability tail mismatch in d(" + g.name + ")");
    }
  }
  NCMatrix lhs(dga.spec.strands(), dga.spec.strands());
  for (int i = 1; i <= dga.spec.strands(); ++i)
    for (int j = 1; j <= dga.spec.strands(); ++j)
      lhs.at(i - 1, j - 1) = dga.d(gen_id(ClosureDGA::c_name(i, j)));
  NCMatrix rhs =
      NCMatrix::identity(dga.spec.strands()) + path_matrix(dga.spec, *dga.ring);
  if (!(lhs == rhs)) rep.fail("d(C) != 1 + P_beta");
  return rep;
}

}  // namespace lcdga
