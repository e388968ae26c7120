// DGA maps for elementary cobordisms: base point moves, Reidemeister III,
// cyclic rotation of the closure, the saddle (pinch) map, and the minimum
// cobordism augmentation.
//
// The saddle map is computed by the two-sided unipotent propagation: rotate
// so the pinched crossing is first (done implicitly, the sweeps run over the
// cyclic factor sequence), absorb T-> rightward through the word by the
// lower-unipotent recursion, absorb T<- leftward by the mirrored
// upper-unipotent recursion, and conjugate the degree-1 chords. Signs come
// out of the matrix algebra, not from quadrant sign tables.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcdga/dga.hpp"

namespace lcdga {

struct DGAMap {
  DGAPtr source, target;
  std::map<uint32_t, NCPoly> gen_images;   // defaults to identity
  std::map<size_t, Laurent> var_images;    // target-ring images, default id

  NCPoly image(uint32_t g) const {
    auto it = gen_images.find(g);
    return it == gen_images.end() ? NCPoly::gen(g) : it->second;
  }
  NCPoly apply(const NCPoly& x) const {
    NCPoly r;
    for (const auto& [w, c] : x.terms) {
      Laurent coeff = var_images.empty() ? c : c.substitute(var_images);
      NCPoly t = NCPoly::scalar(coeff);
      for (uint32_t g : w) t *= image(g);
      r += t;
    }
    return r;
  }
  NCMatrix apply(const NCMatrix& m) const {
    return m.map([&](const NCPoly& p) { return apply(p); });
  }

  // this then g
  DGAMap then(const DGAMap& g) const {
    DGAMap h;
    h.source = source;
    h.target = g.target;
    std::set<uint32_t> keys;
    for (const auto& [k, v] : gen_images) keys.insert(k);
    for (const auto& [k, v] : g.gen_images) keys.insert(k);
    for (uint32_t k : keys) h.gen_images[k] = g.apply(image(k));
    for (const auto& [v, img] : var_images)
      h.var_images[v] = img.substitute(g.var_images);
    for (const auto& [v, img] : g.var_images) {
      if (!h.var_images.count(v)) h.var_images[v] = img;
    }
    return h;
  }

  bool is_identity() const {
    for (const auto& [g, img] : gen_images)
      if (!(img == NCPoly::gen(g))) return false;
    for (const auto& [v, img] : var_images)
      if (!(img == Laurent::variable(v))) return false;
    return true;
  }
};

// Chain-map gate: target-d(map(g)) == map(source-d(g)) for every generator.
inline bool verify_chain_map(const DGAMap& f, std::string* why = nullptr) {
  for (const auto& g : f.source->generators) {
    NCPoly lhs = f.target->differential(f.image(g.id));
    NCPoly rhs = f.apply(f.source->d(g.id));
    if (!(lhs == rhs)) {
      if (why) *why = "chain map fails at " + g.name;
      return false;
    }
  }
  return true;
}

// Link automorphism Omega(a) = u_{r(a)} u_{c(a)}^{-1} a for one unit per
// component.
inline DGAMap link_automorphism(const DGAPtr& dga,
                                const std::vector<Laurent>& units) {
  if (static_cast<int>(units.size()) != dga->spec.num_components())
    throw ring_error("link_automorphism: one unit per component required");
  for (const auto& u : units)
    if (!u.is_unit_monomial())
      throw ring_error("link_automorphism: units must be signed monomials");
  DGAMap f;
  f.source = f.target = dga;
  for (const auto& g : dga->generators) {
    Laurent c = units[g.r_comp] * units[g.c_comp].inverse();
    f.gen_images[g.id] = NCPoly::gen(g.id) * c;
  }
  return f;
}

namespace detail {

inline Laurent column_label(const Ring& ring, const Column& col, int strand) {
  Laurent v = Laurent::one();
  auto it = col.at.find(strand);
  if (it != col.at.end())
    for (const auto& b : it->second) v *= basepoint_value(ring, b);
  return v;
}

// One factor of the cyclic word: either a base point column or a crossing.
struct Factor {
  bool is_column = false;
  size_t index = 0;  // column index or letter position
};

// Factor sequence of the cyclic word starting just after letter `pivot`:
// Col(p+1), Let(p+1), ..., Let(r-1), Col(r), Col(0), Let(0), ..., Let(p-1),
// Col(p).
inline std::vector<Factor> cyclic_factors(const ClosureSpec& spec,
                                          size_t pivot) {
  std::vector<Factor> fs;
  size_t r = spec.length();
  for (size_t j = pivot + 1; j < r; ++j) {
    fs.push_back({true, j});
    fs.push_back({false, j});
  }
  fs.push_back({true, r});
  fs.push_back({true, 0});
  for (size_t j = 0; j < pivot; ++j) {
    fs.push_back({false, j});
    fs.push_back({true, j + 1});
  }
  return fs;
}

inline bool lower_unipotent(const NCMatrix& m) {
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) {
      if (i == j && !(m.at(i, j) == NCPoly::one())) return false;
      if (i < j && !m.at(i, j).is_zero()) return false;
    }
  return true;
}
inline bool upper_unipotent(const NCMatrix& m) {
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) {
      if (i == j && !(m.at(i, j) == NCPoly::one())) return false;
      if (i > j && !m.at(i, j).is_zero()) return false;
    }
  return true;
}

}  // namespace detail

// Saddle cobordism map Phi^comb = Phi^<- . Phi^-> . Phi^0 at a degree-0
// crossing certified contractible and proper (complement contains a
// half-twist). Returns the pinched DGA and the map.
struct SaddleResult {
  DGAPtr target;
  DGAMap map;
  std::string s_var;
};

inline SaddleResult saddle_map(const DGAPtr& dga, const std::string& crossing,
                               bool certify = true, int certify_depth = 3) {
  const ClosureSpec& spec = dga->spec;
  size_t p = spec.position_of(crossing);
  int k = spec.word.letters[p];  // 1-based sigma index
  int n = spec.strands();

  if (certify && !contains_half_twist(spec.word, {p}, certify_depth))
    throw ring_error("saddle_map: crossing " + crossing +
                     " not certified contractible and proper");

  // fresh saddle variable, named after the crossing alias when possible
  std::string sname = "s_" + crossing;
  if (crossing.size() > 1 && crossing[0] == 'a' &&
      crossing.find_first_not_of("0123456789", 1) == std::string::npos)
    sname = "s" + crossing.substr(1);
  auto ring = std::make_shared<Ring>(*dga->ring);
  size_t svar = ring->add(sname, false);
  Laurent s = Laurent::variable(svar);
  Laurent sinv = s.inverse();

  // target spec: remove the letter, insert the base point pair at its column
  ClosureSpec tgt;
  tgt.word.strands = n;
  tgt.family = spec.family;
  for (size_t j = 0; j < spec.length(); ++j) {
    if (j == p) continue;
    tgt.word.letters.push_back(spec.word.letters[j]);
    tgt.crossing_names.push_back(spec.crossing_names[j]);
  }
  tgt.columns.resize(tgt.word.length() + 1);
  Column pair;
  pair.add(k, Basepoint{sname, -1, -1});
  pair.add(k + 1, Basepoint{sname, +1, +1});
  for (size_t j = 0; j <= spec.length(); ++j) {
    size_t jt = j <= p ? j : j - 1;
    tgt.columns[jt] = Column::concat(tgt.columns[jt], spec.columns[j]);
    if (j == p) tgt.columns[jt] = Column::concat(tgt.columns[jt], pair);
  }
  if (spec.satellite) {
    const auto& si = *spec.satellite;
    bool broken = false;
    for (const auto& g : si.groups)
      for (size_t q : g.positions)
        if (q == p) broken = true;
    if (!broken) {
      SatelliteInfo ni = si;
      auto shift = [&](size_t q) { return q > p ? q - 1 : q; };
      if (!(p >= si.box_start && p < si.box_end)) {
        if (p < si.box_start) {
          ni.box_start--;
          ni.box_end--;
        }
      } else {
        ni.box_end--;
      }
      for (auto& g : ni.groups)
        for (auto& q : g.positions) q = shift(q);
      tgt.satellite = ni;
    }
  }

  auto factors = detail::cyclic_factors(spec, p);
  auto column_diag = [&](size_t col) {
    NCMatrix d = NCMatrix::identity(n);
    for (int st = 1; st <= n; ++st) {
      Laurent v = detail::column_label(*ring, spec.columns[col], st);
      d.at(st - 1, st - 1) = NCPoly::scalar(v);
    }
    return d;
  };
  auto column_diag_inv = [&](size_t col) {
    NCMatrix d = NCMatrix::identity(n);
    for (int st = 1; st <= n; ++st) {
      Laurent v = detail::column_label(*ring, spec.columns[col], st);
      d.at(st - 1, st - 1) = NCPoly::scalar(v.inverse());
    }
    return d;
  };

  // ----- forward sweep (lower unipotent) -----
  std::map<uint32_t, NCPoly> fwd;
  auto apply_fwd = [&](const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms) {
      NCPoly t = NCPoly::scalar(c);
      for (uint32_t g : w) {
        auto it = fwd.find(g);
        if (it == fwd.end())
          throw ring_error("saddle: forward recursion out of order at " +
                           gen_name(g));
        t *= it->second;
      }
      r += t;
    }
    return r;
  };
  NCMatrix T = NCMatrix::identity(n);
  T.at(k, k - 1) = NCPoly::scalar(sinv);
  for (const auto& f : factors) {
    if (f.is_column) {
      T = column_diag_inv(f.index) * T * column_diag(f.index);
    } else {
      int kj = spec.word.letters[f.index];
      uint32_t g = gen_id(spec.crossing_names[f.index]);
      NCPoly x = T.at(kj, kj - 1);
      fwd[g] = NCPoly::gen(g) - apply_fwd(x);
      NCPoly corrected = NCPoly::gen(g) + x;
      T = path_factor_inverse(kj, corrected, n) * T * path_factor(kj, NCPoly::gen(g), n);
      if (!detail::lower_unipotent(T))
        throw ring_error("saddle: forward unipotent shape lost");
    }
  }
  if (!T.is_identity())
    throw ring_error("saddle: terminal forward unipotent is not the identity");

  // ----- backward sweep (upper unipotent) -----
  std::map<uint32_t, NCPoly> bwd;
  auto apply_bwd = [&](const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms) {
      NCPoly t = NCPoly::scalar(c);
      for (uint32_t g : w) {
        auto it = bwd.find(g);
        if (it == bwd.end())
          throw ring_error("saddle: backward recursion out of order at " +
                           gen_name(g));
        t *= it->second;
      }
      r += t;
    }
    return r;
  };
  NCMatrix U = NCMatrix::identity(n);
  U.at(k - 1, k) = NCPoly::scalar(sinv);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->is_column) {
      U = column_diag(it->index) * U * column_diag_inv(it->index);
    } else {
      int kj = spec.word.letters[it->index];
      uint32_t g = gen_id(spec.crossing_names[it->index]);
      NCPoly y = U.at(kj - 1, kj);
      bwd[g] = NCPoly::gen(g) - apply_bwd(y);
      NCPoly corrected = NCPoly::gen(g) + y;
      U = path_factor(kj, NCPoly::gen(g), n) * U *
          path_factor_inverse(kj, corrected, n);
      if (!detail::upper_unipotent(U))
        throw ring_error("saddle: backward unipotent shape lost");
    }
  }
  if (!U.is_identity())
    throw ring_error(
        "saddle: terminal backward unipotent is not the identity (second "
        "wrap?)");

  DGAPtr target = build_dga(tgt, ring);

  DGAMap f;
  f.source = dga;
  f.target = target;
  auto subst_bwd = [&](const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms) {
      NCPoly t = NCPoly::scalar(c);
      for (uint32_t g : w) {
        auto it = bwd.find(g);
        t *= it == bwd.end() ? NCPoly::gen(g) : it->second;
      }
      r += t;
    }
    return r;
  };
  for (size_t j = 0; j < spec.length(); ++j) {
    uint32_t g = gen_id(spec.crossing_names[j]);
    if (j == p) {
      f.gen_images[g] = NCPoly::scalar(s);
    } else {
      f.gen_images[g] = subst_bwd(fwd.at(g));
    }
  }

  // degree-1 chords: V C V^-1 with V = X^-1 . X^phi . T^<-, X the prefix
  // D(C_0)P(L_0)...P(L_{p-1})D(C_p)
  NCMatrix X = column_diag(0), Xinv = column_diag_inv(0), Xphi = column_diag(0);
  for (size_t j = 0; j < p; ++j) {
    int kj = spec.word.letters[j];
    NCPoly g = NCPoly::gen(spec.crossing_names[j]);
    NCPoly gphi = f.gen_images.at(gen_id(spec.crossing_names[j]));
    X = X * path_factor(kj, g, n) * column_diag(j + 1);
    Xphi = Xphi * path_factor(kj, gphi, n) * column_diag(j + 1);
    Xinv = column_diag_inv(j + 1) * path_factor_inverse(kj, g, n) * Xinv;
  }
  NCMatrix Tleft = NCMatrix::identity(n);
  Tleft.at(k - 1, k) = NCPoly::scalar(sinv);
  NCMatrix TleftInv = NCMatrix::identity(n);
  TleftInv.at(k - 1, k) = NCPoly::scalar(-sinv);
  NCMatrix XphiInv = column_diag_inv(0);
  {
    NCMatrix acc = NCMatrix::identity(n);
    for (size_t j = 0; j < p; ++j) {
      int kj = spec.word.letters[j];
      NCPoly gphi = f.gen_images.at(gen_id(spec.crossing_names[j]));
      acc = column_diag_inv(j + 1) * path_factor_inverse(kj, gphi, n) * acc;
    }
    XphiInv = acc * XphiInv;
  }
  NCMatrix V = Xphi * Tleft * Xinv;
  NCMatrix Vinv = X * TleftInv * XphiInv;
  NCMatrix CM = dga->c_matrix();
  NCMatrix CImg = V * CM * Vinv;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      f.gen_images[gen_id(ClosureDGA::c_name(i, j))] = CImg.at(i - 1, j - 1);

  return SaddleResult{target, std::move(f), sname};
}

// Minimum cobordisms: the closure must be a standard unlink (identity
// permutation, every remaining degree-0 chord joining distinct components).
// Produces one relation per component (product of its base point labels
// = -1), solved into the quotient ring; the augmentation kills every chord.
struct UnknotAugmentation {
  std::shared_ptr<Ring> ring;  // with relations solved
  std::vector<Laurent> relations;
};

inline UnknotAugmentation unknot_augmentation(const DGAPtr& dga) {
  const ClosureSpec& spec = dga->spec;
  auto perm = coxeter_permutation(spec.word);
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i))
      throw ring_error("unknot_augmentation: closure is not an unlink");
  for (const auto& g : dga->generators)
    if (g.degree == 0 && g.r_comp == g.c_comp)
      throw ring_error(
          "unknot_augmentation: a degree-0 chord has both endpoints on one "
          "component");
  auto ring = std::make_shared<Ring>(*dga->ring);
  // epsilon_0(P_beta) with all chords killed is diagonal; each diagonal
  // entry is the label product of one component
  std::map<uint32_t, NCPoly> zero;
  for (const auto& g : dga->generators)
    if (g.degree == 0) zero[g.id] = NCPoly::zero();
  NCMatrix pb = path_matrix(spec, *ring);
  std::vector<Laurent> relations;
  int n = spec.strands();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      NCPoly e = pb.at(i, j).substitute(zero);
      if (i == j) {
        if (!e.is_scalar())
          throw ring_error("unknot_augmentation: diagonal entry not scalar");
        relations.push_back(e.scalar_part());
      } else if (!e.is_zero()) {
        throw ring_error("unknot_augmentation: off-diagonal survivor");
      }
    }
  }
  // solve relations in a deterministic order: those containing the lowest
  // t-variable first
  std::vector<std::pair<size_t, Laurent>> keyed;
  for (const auto& r : relations) {
    size_t key = ring->names.size();
    const Mono& m = r.terms.begin()->first;
    for (size_t v = 0; v < m.e.size(); ++v)
      if (m.e[v] != 0 && ring->t_class.count(v)) {
        key = v;
        break;
      }
    keyed.emplace_back(key, r);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Laurent> ordered;
  for (auto& [k, r] : keyed) ordered.push_back(r);
  solve_unit_relations(*ring, ordered);
  return UnknotAugmentation{ring, relations};
}

// --- elementary isotopies -------------------------------------------------

// Move the whole base point column `col` rightward across the letter at
// position `col` (so it merges into column col+1, with the two strands at
// the crossing swapped). Map: a |-> d_{k+1}^{-1} a d_k on the crossed
// generator.
inline std::pair<DGAPtr, DGAMap> slide_column_right(const DGAPtr& dga,
                                                    size_t col) {
  const ClosureSpec& spec = dga->spec;
  if (col >= spec.length())
    throw ring_error("slide_column_right: no letter to the right");
  int k = spec.word.letters[col];
  ClosureSpec tgt = spec;
  Column moving = spec.columns[col];
  auto lower = moving.at[k], upper = moving.at[k + 1];
  moving.at[k] = upper;
  moving.at[k + 1] = lower;
  tgt.columns[col] = Column{};
  tgt.columns[col + 1] = Column::concat(moving, spec.columns[col + 1]);
  Laurent dk = detail::column_label(*dga->ring, spec.columns[col], k);
  Laurent dk1 = detail::column_label(*dga->ring, spec.columns[col], k + 1);
  auto ring = std::make_shared<Ring>(*dga->ring);
  DGAPtr target = build_dga(tgt, ring);
  DGAMap f;
  f.source = dga;
  f.target = target;
  uint32_t g = gen_id(spec.crossing_names[col]);
  f.gen_images[g] = NCPoly::gen(g) * (dk1.inverse() * dk);
  return {target, f};
}

// Move the whole base point column `col` leftward across the letter at
// position col-1.
inline std::pair<DGAPtr, DGAMap> slide_column_left(const DGAPtr& dga,
                                                   size_t col) {
  const ClosureSpec& spec = dga->spec;
  if (col == 0 || col > spec.length())
    throw ring_error("slide_column_left: no letter to the left");
  int k = spec.word.letters[col - 1];
  ClosureSpec tgt = spec;
  Column moving = spec.columns[col];
  auto lower = moving.at[k], upper = moving.at[k + 1];
  moving.at[k] = upper;
  moving.at[k + 1] = lower;
  tgt.columns[col] = Column{};
  tgt.columns[col - 1] = Column::concat(spec.columns[col - 1], moving);
  Laurent dk = detail::column_label(*dga->ring, spec.columns[col], k);
  Laurent dk1 = detail::column_label(*dga->ring, spec.columns[col], k + 1);
  auto ring = std::make_shared<Ring>(*dga->ring);
  DGAPtr target = build_dga(tgt, ring);
  DGAMap f;
  f.source = dga;
  f.target = target;
  uint32_t g = gen_id(spec.crossing_names[col - 1]);
  f.gen_images[g] = NCPoly::gen(g) * (dk * dk1.inverse());
  return {target, f};
}

// Move a single base point (the outermost one of its strand list) across
// the adjacent crossing. Direction +1 slides right, -1 slides left; the
// point follows its strand through the crossing.
inline std::pair<DGAPtr, DGAMap> basepoint_move(const DGAPtr& dga, size_t col,
                                                int strand, int direction) {
  const ClosureSpec& spec = dga->spec;
  auto it = spec.columns[col].at.find(strand);
  if (it == spec.columns[col].at.end() || it->second.empty())
    throw ring_error("basepoint_move: no base point there");
  size_t letter = direction > 0 ? col : col - 1;
  if ((direction > 0 && col >= spec.length()) || (direction < 0 && col == 0))
    throw ring_error("basepoint_move: base point not adjacent to a crossing");
  int k = spec.word.letters[letter];
  ClosureSpec tgt = spec;
  auto& src_list = tgt.columns[col].at[strand];
  Basepoint moving = direction > 0 ? src_list.back() : src_list.front();
  if (direction > 0)
    src_list.pop_back();
  else
    src_list.erase(src_list.begin());
  int landing = strand;
  if (strand == k)
    landing = k + 1;
  else if (strand == k + 1)
    landing = k;
  size_t dest = direction > 0 ? col + 1 : col - 1;
  auto& dst_list = tgt.columns[dest].at[landing];
  if (direction > 0)
    dst_list.insert(dst_list.begin(), moving);
  else
    dst_list.push_back(moving);
  auto ring = std::make_shared<Ring>(*dga->ring);
  DGAPtr target = build_dga(tgt, ring);
  DGAMap f;
  f.source = dga;
  f.target = target;
  uint32_t g = gen_id(spec.crossing_names[letter]);
  if (strand == k || strand == k + 1) {
    // a -> a u from the lower strand, a u^-1 from the upper strand,
    // whichever way the point crosses; the reverse move inverts because
    // the point lands on the other strand
    Laurent u = basepoint_value(*ring, moving);
    f.gen_images[g] = NCPoly::gen(g) * (strand == k ? u : u.inverse());
  }
  return {target, f};
}

// Cyclic rotation: move the first letter to the end of the word. Requires
// column 0 empty (slide it right first). Degree-0 generators keep their
// names; the chord matrix conjugates by the moved letter's path factor.
inline std::pair<DGAPtr, DGAMap> rotate_closure(const DGAPtr& dga) {
  const ClosureSpec& spec = dga->spec;
  if (spec.length() == 0) throw ring_error("rotate_closure: empty braid");
  if (!spec.columns[0].empty())
    throw ring_error("rotate_closure: column 0 must be empty (slide first)");
  int n = spec.strands();
  ClosureSpec tgt;
  tgt.word.strands = n;
  tgt.family = spec.family;
  for (size_t j = 1; j < spec.length(); ++j) {
    tgt.word.letters.push_back(spec.word.letters[j]);
    tgt.crossing_names.push_back(spec.crossing_names[j]);
  }
  tgt.word.letters.push_back(spec.word.letters[0]);
  tgt.crossing_names.push_back(spec.crossing_names[0]);
  tgt.columns.resize(spec.length() + 1);
  for (size_t j = 1; j <= spec.length(); ++j) tgt.columns[j - 1] = spec.columns[j];
  // new final column empty
  if (spec.satellite) {
    const auto& si = *spec.satellite;
    if (si.box_start >= 1) {
      SatelliteInfo ni = si;
      ni.box_start--;
      ni.box_end--;
      for (auto& g : ni.groups)
        for (auto& q : g.positions)
          q = q == 0 ? spec.length() - 1 : q - 1;
      tgt.satellite = ni;
    }
  }
  auto ring = std::make_shared<Ring>(*dga->ring);
  DGAPtr target = build_dga(tgt, ring);
  DGAMap f;
  f.source = dga;
  f.target = target;
  int q = spec.word.letters[0];
  NCPoly moved = NCPoly::gen(spec.crossing_names[0]);
  NCMatrix P = path_factor(q, moved, n);
  NCMatrix Pinv = path_factor_inverse(q, moved, n);
  NCMatrix CImg = P * dga->c_matrix() * Pinv;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      f.gen_images[gen_id(ClosureDGA::c_name(i, j))] = CImg.at(i - 1, j - 1);
  return {target, f};
}

// Reidemeister III on letters (pos, pos+1, pos+2) with the braid pattern
// j (j+-1) j  <->  (j+-1) j (j+-1). Type III_a configurations give the
// identity map; III_b corrects one generator: the outer crossings trade
// places and the new middle-position generator picks up +/- the product of
// the outer ones. The orientation sign is produced by the underlying
// matrix identity, which the pinch machinery also relies on: here we use
// the braid-region pattern h_{i+1} |-> h_i + a h_{i+1} of the purple-box
// moves, which is a chain map for these local configurations.
inline std::pair<DGAPtr, DGAMap> riii_move(const DGAPtr& dga, size_t pos) {
  const ClosureSpec& spec = dga->spec;
  if (pos + 2 >= spec.length() + 1 || pos + 2 > spec.length() - 1 + 1)
    throw ring_error("riii_move: position out of range");
  int a = spec.word.letters[pos], b = spec.word.letters[pos + 1],
      c = spec.word.letters[pos + 2];
  if (a != c || std::abs(a - b) != 1)
    throw ring_error("riii_move: pattern mismatch");
  if (!spec.columns[pos + 1].empty() || !spec.columns[pos + 2].empty())
    throw ring_error("riii_move: base points inside the triple");
  ClosureSpec tgt = spec;
  tgt.word.letters[pos] = b;
  tgt.word.letters[pos + 1] = a;
  tgt.word.letters[pos + 2] = b;
  // names: the two outer crossings exchange roles, middle stays
  std::string na = spec.crossing_names[pos], nb = spec.crossing_names[pos + 1],
              nc = spec.crossing_names[pos + 2];
  tgt.crossing_names[pos] = nc;
  tgt.crossing_names[pos + 1] = nb;
  tgt.crossing_names[pos + 2] = na;
  auto ring = std::make_shared<Ring>(*dga->ring);
  DGAPtr target = build_dga(tgt, ring);
  DGAMap f;
  f.source = dga;
  f.target = target;
  // h_i |-> h_{i+1}, h_{i+1} |-> h_i + a h_{i+1} in the sigma_b-pair when
  // the moved crossing passes a two-strand group; for plain triples this is
  // the III_b map Psi(a1) = a1 + sigma a3 a2 with sigma from the matrix
  // algebra. We produce it by requiring the path-matrix identity:
  // P_a(x) P_b(y) P_a(z) = P_b(z') P_a(y') P_b(x') forces
  // y' = y ... solved below for the two local patterns.
  NCPoly X = NCPoly::gen(na), Y = NCPoly::gen(nb), Z = NCPoly::gen(nc);
  // target letters: b a b with names nc nb na; the identity
  //   P_a(X)P_b(Y)P_a(Z) = P_b(X)P_a(Y + Z X ...) ...
  // For positive braids the correct images are:
  //   X |-> X, Z |-> Z, Y |-> Y + Z X (pattern b a b -> a b a)
  // and the verification below rejects a wrong sign.
  f.gen_images[gen_id(nb)] = Y + Z * X;
  std::string why;
  if (!verify_chain_map(f, &why)) {
    f.gen_images[gen_id(nb)] = Y - Z * X;
    if (!verify_chain_map(f, &why))
      throw ring_error("riii_move: no chain-map correction found: " + why);
  }
  return {target, f};
}

}  // namespace lcdga
