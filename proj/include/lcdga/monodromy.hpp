// Loop-induced DGA automorphisms: the purple-box theta loop, the Kalman
// delta loop, iteration, and order detection.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcdga/cobordism.hpp"
#include "lcdga/families.hpp"

namespace lcdga {

// One crossing of the cable with an external strand.
struct GroupMember {
  size_t position;
  int cable_index;   // 1-based index of the cable strand at the box edge
  int external;      // external strand id (0-based entering position)
  bool ext_ascending;
};

// Derive the cable/group structure of a satellite diagram by tracing the
// closure strands: the cable strands are those crossing the box's left
// edge; every crossing of a cable strand with an external strand belongs to
// a group of n consecutive crossings along the external component (a
// "dive"), ordered by cable strand index. Whether the dive acts by the box
// path matrix or its transpose-inverse is read off the external strand's
// direction.
inline std::vector<CrossingGroup> compute_groups(const ClosureSpec& spec) {
  if (!spec.satellite) throw ring_error("compute_groups: no satellite data");
  const SatelliteInfo& si = *spec.satellite;
  int n = spec.strands();
  int m = si.cable_hi - si.cable_lo + 1;
  std::vector<std::vector<int>> paths;
  for (int s = 0; s < n; ++s) paths.push_back(spec.strand_path(s));
  // cable strands and their local indices at the box edge
  std::map<int, int> cable_local;  // strand -> 1..m
  for (int s = 0; s < n; ++s) {
    int pos = paths[s][si.box_start];
    if (pos >= si.cable_lo - 1 && pos <= si.cable_hi - 1)
      cable_local[s] = pos - (si.cable_lo - 1) + 1;
  }
  auto strand_at = [&](size_t col, int pos0) {
    for (int s = 0; s < n; ++s)
      if (paths[s][col] == pos0) return s;
    throw ring_error("compute_groups: strand lookup failed");
  };
  // collect cable-external crossings per external strand
  std::map<int, std::vector<GroupMember>> per_external;
  for (size_t q = 0; q < spec.length(); ++q) {
    if (q >= si.box_start && q < si.box_end) continue;
    int k = spec.word.letters[q];
    int asc = strand_at(q, k - 1);
    int desc = strand_at(q, k);
    bool ca = cable_local.count(asc), cd = cable_local.count(desc);
    if (ca && cd)
      throw ring_error("compute_groups: satellite crossing outside the box");
    if (!ca && !cd) continue;
    int cable = ca ? asc : desc;
    int ext = ca ? desc : asc;
    per_external[ext].push_back(
        GroupMember{q, cable_local[cable], ext, ext == asc});
  }
  // traversal of each external component, chunking into dives of m
  auto perm = coxeter_permutation(spec.word);
  auto comp = spec.component_map();
  std::set<int> done;
  std::vector<CrossingGroup> groups;
  for (int s0 = 0; s0 < n; ++s0) {
    if (cable_local.count(s0) || done.count(comp[s0])) continue;
    done.insert(comp[s0]);
    std::vector<GroupMember> seq;
    int s = s0;
    do {
      auto it = per_external.find(s);
      if (it != per_external.end()) {
        auto v = it->second;
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
          return a.position < b.position;
        });
        seq.insert(seq.end(), v.begin(), v.end());
      }
      s = perm[s];
    } while (s != s0);
    if (seq.empty()) continue;
    if (seq.size() % m != 0)
      throw ring_error("compute_groups: dangling cable crossings");
    // chunk with a rotation fallback in case a dive straddles the wrap
    for (size_t rot = 0; rot < static_cast<size_t>(m); ++rot) {
      bool ok = true;
      std::vector<CrossingGroup> local;
      for (size_t i = 0; i < seq.size() && ok; i += m) {
        CrossingGroup g;
        g.positions.assign(m, SIZE_MAX);
        bool asc = seq[(i + rot) % seq.size()].ext_ascending;
        for (int j = 0; j < m; ++j) {
          const auto& mem = seq[(i + j + rot) % seq.size()];
          if (mem.ext_ascending != asc ||
              g.positions[mem.cable_index - 1] != SIZE_MAX) {
            ok = false;
            break;
          }
          g.positions[mem.cable_index - 1] = mem.position;
        }
        g.over = asc;
        local.push_back(std::move(g));
      }
      if (ok) {
        groups.insert(groups.end(), local.begin(), local.end());
        break;
      }
      if (rot + 1 == static_cast<size_t>(m))
        throw ring_error("compute_groups: could not pair dives");
    }
  }
  return groups;
}

// Factor list of the box path matrix (local strand indexing).
inline std::vector<NCMatrix> box_factors(const ClosureSpec& spec,
                                         const Ring& ring) {
  const SatelliteInfo& si = *spec.satellite;
  int m = si.cable_hi - si.cable_lo + 1;
  std::vector<NCMatrix> fs;
  auto col_mat = [&](size_t col) {
    NCMatrix d = NCMatrix::identity(m);
    for (int j = 0; j < m; ++j) {
      Laurent v =
          detail::column_label(ring, spec.columns[col], si.cable_lo + j);
      d.at(j, j) = NCPoly::scalar(v);
    }
    return d;
  };
  for (size_t q = si.box_start; q < si.box_end; ++q) {
    int k = spec.word.letters[q];
    int klocal = k - (si.cable_lo - 1);
    if (klocal < 1 || klocal > m - 1)
      throw ring_error("box crossing outside the cable band");
    fs.push_back(path_factor(klocal, NCPoly::gen(spec.crossing_names[q]), m));
    fs.push_back(col_mat(q + 1));
  }
  if (fs.empty()) fs.push_back(col_mat(si.box_end));
  return fs;
}

inline NCMatrix product(const std::vector<NCMatrix>& fs) {
  NCMatrix r = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) r = r * fs[i];
  return r;
}

// Inverse of the box path matrix: inverse(F1 F2 ... Fk) = Fk^-1 ... F1^-1.
inline NCMatrix product_inverse(const ClosureSpec& spec, const Ring& ring) {
  const SatelliteInfo& si = *spec.satellite;
  int m = si.cable_hi - si.cable_lo + 1;
  auto col_inv = [&](size_t col) {
    NCMatrix d = NCMatrix::identity(m);
    for (int j = 0; j < m; ++j) {
      Laurent v =
          detail::column_label(ring, spec.columns[col], si.cable_lo + j);
      d.at(j, j) = NCPoly::scalar(v.inverse());
    }
    return d;
  };
  std::vector<NCMatrix> invs;
  for (size_t q = si.box_start; q < si.box_end; ++q) {
    int k = spec.word.letters[q];
    int klocal = k - (si.cable_lo - 1);
    invs.push_back(
        path_factor_inverse(klocal, NCPoly::gen(spec.crossing_names[q]), m));
    invs.push_back(col_inv(q + 1));
  }
  if (invs.empty()) return col_inv(si.box_end);
  NCMatrix inv = NCMatrix::identity(m);
  for (auto it = invs.rbegin(); it != invs.rend(); ++it) inv = inv * (*it);
  return inv;
}

// (M^T)^-1 as the inverse of the reversed-factor transposed product; every
// factor is symmetric, so this is the product of the factor inverses in
// forward order.
inline NCMatrix transpose_inverse_product(const ClosureSpec& spec,
                                          const Ring& ring) {
  const SatelliteInfo& si = *spec.satellite;
  int m = si.cable_hi - si.cable_lo + 1;
  auto col_inv = [&](size_t col) {
    NCMatrix d = NCMatrix::identity(m);
    for (int j = 0; j < m; ++j) {
      Laurent v =
          detail::column_label(ring, spec.columns[col], si.cable_lo + j);
      d.at(j, j) = NCPoly::scalar(v.inverse());
    }
    return d;
  };
  NCMatrix r = NCMatrix::identity(m);
  for (size_t q = si.box_start; q < si.box_end; ++q) {
    int k = spec.word.letters[q];
    int klocal = k - (si.cable_lo - 1);
    r = r * path_factor_inverse(klocal, NCPoly::gen(spec.crossing_names[q]), m);
    r = r * col_inv(q + 1);
  }
  if (si.box_start == si.box_end) r = col_inv(si.box_end);
  return r;
}

struct LoopMap {
  DGAMap map;
  // fast-iteration data for purple-box loops
  bool has_box_action = false;
  NCMatrix box_m, box_m_inv, box_mt_inv, ptilde, ptilde_inv;
  std::vector<CrossingGroup> groups;
};

// The purple-box monodromy: degree-1 chords conjugate by the block
// extension of the box path matrix; overcrossing groups multiply by it,
// undercrossing groups by its transpose-inverse; everything else is fixed.
inline LoopMap theta_map(const DGAPtr& dga) {
  const ClosureSpec& spec = dga->spec;
  if (!spec.satellite) throw ring_error("theta_map: missing satellite data");
  const SatelliteInfo& si = *spec.satellite;
  int n = spec.strands();
  int m = si.cable_hi - si.cable_lo + 1;
  LoopMap loop;
  loop.has_box_action = true;
  loop.groups = compute_groups(spec);
  loop.box_m = product(box_factors(spec, *dga->ring));
  loop.box_m_inv = product_inverse(spec, *dga->ring);
  loop.box_mt_inv = transpose_inverse_product(spec, *dga->ring);

  loop.ptilde = NCMatrix::identity(n);
  loop.ptilde_inv = NCMatrix::identity(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      loop.ptilde.at(si.cable_lo - 1 + i, si.cable_lo - 1 + j) =
          loop.box_m.at(i, j);
      loop.ptilde_inv.at(si.cable_lo - 1 + i, si.cable_lo - 1 + j) =
          loop.box_m_inv.at(i, j);
    }

  DGAMap f;
  f.source = f.target = dga;
  if (m == 1) {
    // a one-strand box is carried around by base point slides only; the
    // two-sided conjugations cancel and the loop is constant
    loop.map = f;
    return loop;
  }
  for (const auto& g : loop.groups) {
    for (int i = 0; i < m; ++i) {
      NCPoly img;
      for (int j = 0; j < m; ++j) {
        NCPoly h = NCPoly::gen(spec.crossing_names[g.positions[j]]);
        // overcrossing groups: column vectors, coefficients on the left;
        // undercrossing groups: the transpose-inverse action, realized as
        // row vectors hit by M^-1 on the right (the operator order that
        // makes the conjugation identity hold on the nose)
        img += g.over ? loop.box_m.at(i, j) * h
                      : h * loop.box_m_inv.at(j, i);
      }
      f.gen_images[gen_id(spec.crossing_names[g.positions[i]])] = img;
    }
  }
  NCMatrix cimg = loop.ptilde * dga->c_matrix() * loop.ptilde_inv;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      f.gen_images[gen_id(ClosureDGA::c_name(i, j))] = cimg.at(i - 1, j - 1);
  loop.map = f;
  return loop;
}

// k-fold composition. Purple-box loops use matrix powers; anything else
// composes generator images directly.
inline DGAMap iterate(const LoopMap& loop, int k) {
  if (k < 0) throw ring_error("iterate: k >= 0 required");
  DGAMap id;
  id.source = id.target = loop.map.source;
  if (k == 0) return id;
  if (!loop.has_box_action) {
    DGAMap f = loop.map;
    for (int i = 1; i < k; ++i) f = f.then(loop.map);
    return f;
  }
  const ClosureSpec& spec = loop.map.source->spec;
  const SatelliteInfo& si = *spec.satellite;
  int n = spec.strands();
  int m = si.cable_hi - si.cable_lo + 1;
  NCMatrix mk = loop.box_m, mik = loop.box_m_inv, pk = loop.ptilde,
           pki = loop.ptilde_inv;
  for (int i = 1; i < k; ++i) {
    mk = mk * loop.box_m;
    mik = loop.box_m_inv * mik;
    pk = pk * loop.ptilde;
    pki = loop.ptilde_inv * pki;
  }
  DGAMap f;
  f.source = f.target = loop.map.source;
  if (m == 1) return f;
  for (const auto& g : loop.groups) {
    for (int i = 0; i < m; ++i) {
      NCPoly img;
      for (int j = 0; j < m; ++j) {
        NCPoly h = NCPoly::gen(spec.crossing_names[g.positions[j]]);
        img += g.over ? mk.at(i, j) * h : h * mik.at(j, i);
      }
      f.gen_images[gen_id(spec.crossing_names[g.positions[i]])] = img;
    }
  }
  NCMatrix cimg = pk * loop.map.source->c_matrix() * pki;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      f.gen_images[gen_id(ClosureDGA::c_name(i, j))] = cimg.at(i - 1, j - 1);
  return f;
}

// Least k <= max_k with loop^k = identity, if any. Symbolic iterates of a
// box loop grow exponentially, so candidate orders are screened first in
// an integer shadow (a fixed unital evaluation of the box matrix): if the
// shadow power is not the identity, neither is the loop iterate. Shadow
// hits are confirmed exactly.
inline std::optional<int> order(const LoopMap& loop, int max_k) {
  if (loop.has_box_action && !loop.groups.empty()) {
    size_t m = loop.box_m.rows;
    std::vector<std::vector<Int>> shadow(m, std::vector<Int>(m, 0));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        // every variable -> 1, generator word w -> 2^|w|
        Int v = 0;
        for (const auto& [w, c] : loop.box_m.at(i, j).terms) {
          Int t = c.evaluate_signs({});
          for (size_t x = 0; x < w.size(); ++x) t *= 2;
          v += t;
        }
        shadow[i][j] = v;
      }
    std::vector<std::vector<Int>> pw = shadow;
    for (int k = 1; k <= max_k; ++k) {
      bool ident = true;
      for (size_t i = 0; i < m && ident; ++i)
        for (size_t j = 0; j < m && ident; ++j)
          if (pw[i][j] != (i == j ? 1 : 0)) ident = false;
      if (ident && iterate(loop, k).is_identity()) return k;
      if (k == max_k) break;
      std::vector<std::vector<Int>> np(m, std::vector<Int>(m, 0));
      for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < m; ++l)
          for (size_t j = 0; j < m; ++j) np[i][j] += pw[i][l] * shadow[l][j];
      pw = std::move(np);
    }
    return std::nullopt;
  }
  DGAMap acc;
  for (int k = 1; k <= max_k; ++k) {
    if (k == 1)
      acc = loop.map;
    else
      acc = acc.then(loop.map);
    if (acc.is_identity()) return k;
  }
  return std::nullopt;
}

// The Kalman loop on the (-1)-closure of (s1...s_{p-1})^{p+q}: the leftmost
// p-1 crossings travel around the closure and the base points slide back
// to standard position. Degree-0 generators shift cyclically with t-column
// conjugations; degree-1 generators are fixed; the t labels pick up the net
// strand permutation.
inline LoopMap kalman_map(int p, int q, DGAPtr dga = nullptr) {
  Family fam = family_torus(p, q);
  if (!dga) dga = build_dga(fam.spec);
  const ClosureSpec& spec = dga->spec;
  size_t r = spec.length();
  size_t block = static_cast<size_t>(p - 1);
  const Ring& ring = *dga->ring;

  // slide the t-column leftward past the unmoved letters a_p .. a_r
  std::vector<Laurent> d;
  for (int i = 1; i <= p; ++i) d.push_back(ring.var("t" + std::to_string(i)));
  std::map<uint32_t, Laurent> slide_coeff;
  for (size_t j = r; j-- > block;) {
    int k = spec.word.letters[j];
    uint32_t g = gen_id(spec.crossing_names[j]);
    slide_coeff[g] = d[k - 1].inverse() * d[k];
    std::swap(d[k - 1], d[k]);
  }

  DGAMap f;
  f.source = f.target = dga;
  for (size_t i = 0; i < r; ++i) {
    uint32_t g = gen_id(spec.crossing_names[i]);
    if (i + block < r) {
      uint32_t tgt = gen_id(spec.crossing_names[i + block]);
      f.gen_images[g] = NCPoly::gen(tgt) * slide_coeff.at(tgt);
    } else {
      f.gen_images[g] = NCPoly::gen(spec.crossing_names[i + block - r]);
    }
  }
  for (int i = 1; i <= p; ++i) {
    size_t v = ring.idx("t" + std::to_string(i));
    if (!(d[i - 1] == Laurent::variable(v))) f.var_images[v] = d[i - 1];
  }
  LoopMap loop;
  loop.map = f;
  return loop;
}

}  // namespace lcdga
