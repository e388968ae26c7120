// The E(k,a) invariant, positivity certificates for entire theta-orbits,
// and the stabilization transfer between box sizes.

#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcdga/fillings.hpp"
#include "lcdga/monodromy.hpp"

namespace lcdga {

// Laurent matrices in the commutative quotient (entries already augmented).
struct LMatrix {
  size_t n = 0;
  std::vector<Laurent> a;
  LMatrix() = default;
  explicit LMatrix(size_t n_) : n(n_), a(n_ * n_) {}
  Laurent& at(size_t i, size_t j) { return a[i * n + j]; }
  const Laurent& at(size_t i, size_t j) const { return a[i * n + j]; }
  static LMatrix identity(size_t n) {
    LMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Laurent::one();
    return m;
  }
  LMatrix operator*(const LMatrix& o) const {
    LMatrix r(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (at(i, k).is_zero()) continue;
        for (size_t j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
  LMatrix flip(const std::set<size_t>& vars) const {
    LMatrix r(n);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i].flip_signs(vars);
    return r;
  }
  bool nonnegative() const {
    for (const auto& p : a)
      if (!p.coefficients_nonnegative()) return false;
    return true;
  }
  std::vector<std::vector<Int>> all_ones() const {
    std::vector<std::vector<Int>> z(n, std::vector<Int>(n));
    std::vector<int> ones;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) z[i][j] = at(i, j).evaluate_signs(ones);
    return z;
  }
};

inline LMatrix augment_matrix(const Augmentation& aug, const NCMatrix& m) {
  LMatrix r(m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) r.at(i, j) = aug.eval(m.at(i, j));
  return r;
}

// (eps . theta^k)(h_i) for k = 0..k_max via commutative matrix powers
// M0^k v0; the generators must form one overcrossing group of the loop.
inline std::vector<std::vector<Laurent>> orbit_values(
    const Augmentation& aug, const LoopMap& loop,
    const std::vector<std::string>& pair, int k_max) {
  if (!loop.has_box_action)
    throw ring_error("orbit_values: loop has no box action");
  const ClosureSpec& spec = loop.map.source->spec;
  const CrossingGroup* grp = nullptr;
  for (const auto& g : loop.groups) {
    if (g.positions.size() != pair.size()) continue;
    bool match = true;
    for (size_t i = 0; i < pair.size(); ++i)
      if (spec.crossing_names[g.positions[i]] != pair[i]) match = false;
    if (match) {
      grp = &g;
      break;
    }
  }
  if (!grp || !grp->over)
    throw ring_error("orbit_values: generators are not an overcrossing group");
  LMatrix m0 = augment_matrix(aug, loop.box_m);
  std::vector<Laurent> v;
  for (const auto& name : pair) v.push_back(aug.value(name));
  std::vector<std::vector<Laurent>> out{v};
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Laurent> w(v.size());
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        w[i] += m0.at(i, j) * out.back()[j];
    out.push_back(std::move(w));
  }
  return out;
}

// Worker parallelism for the enumeration loops; the results are
// order-independent reductions, so the job count never changes output.
inline int& worker_jobs() {
  static int jobs = 1;
  return jobs;
}

// Exhaustive maximum of |integer specialization| over the ring's legal sign
// assignments.
inline Int max_abs_over_signs(const Ring& ring, const Laurent& p) {
  auto assignments = ring.legal_sign_assignments();
  int jobs = std::max(1, worker_jobs());
  if (jobs == 1 || assignments.size() < 64) {
    Int best = 0;
    for (const auto& signs : assignments) {
      Int v = p.evaluate_signs(signs);
      if (v < 0) v = -v;
      if (v > best) best = v;
    }
    return best;
  }
  size_t chunk = (assignments.size() + jobs - 1) / jobs;
  std::vector<std::future<Int>> parts;
  for (int w = 0; w < jobs; ++w) {
    size_t lo = w * chunk, hi = std::min(assignments.size(), lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async, [&, lo, hi] {
      Int best = 0;
      for (size_t i = lo; i < hi; ++i) {
        Int v = p.evaluate_signs(assignments[i]);
        if (v < 0) v = -v;
        if (v > best) best = v;
      }
      return best;
    }));
  }
  Int best = 0;
  for (auto& f : parts) {
    Int v = f.get();
    if (v > best) best = v;
  }
  return best;
}

enum class Verdict { entire_certified, monotone_up_to_k, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::entire_certified: return "entire_certified";
    case Verdict::monotone_up_to_k: return "monotone_up_to_K";
    default: return "inconclusive";
  }
}

struct Certificate {
  std::string generator;                // a
  std::vector<std::string> companions;  // the base-change pair (h1, h2)
  std::set<size_t> flip_set;            // flipped variable indices
  std::vector<std::string> flip_names;
  LMatrix m1;                           // before flipping
  LMatrix m1_flipped;
  std::vector<std::vector<Int>> z;      // all-ones of the flipped matrix
  std::vector<Int> e_values;            // legal-assignment maxima, k = 0..K
  Verdict verdict = Verdict::inconclusive;
  bool flips_descend = true;            // flip preserves the constraints
  bool max_assignment_legal = true;     // the flip assignment satisfies them
  std::string note;
};

namespace detail {

// M1 = N^-1 M0 N with N = [[eps(h1), 1],[eps(h2), 0]]; requires eps(h2)
// to be a signed monomial (determinant a unit).
inline std::optional<LMatrix> conjugated_matrix(const Augmentation& aug,
                                                const LoopMap& loop,
                                                const std::string& h1,
                                                const std::string& h2) {
  Laurent e1 = aug.value(h1), e2 = aug.value(h2);
  if (!e2.is_unit_monomial()) return std::nullopt;
  LMatrix m0 = augment_matrix(aug, loop.box_m);
  if (m0.n != 2) return std::nullopt;
  Laurent det_inv = (-e2).inverse();
  // N^-1 = det^-1 [[0, -1],[-e2, e1]] with det = -e2
  LMatrix ninv(2), nm(2);
  ninv.at(0, 0) = Laurent::zero();
  ninv.at(0, 1) = -det_inv;
  ninv.at(1, 0) = -e2 * det_inv;
  ninv.at(1, 1) = e1 * det_inv;
  nm.at(0, 0) = e1;
  nm.at(0, 1) = Laurent::one();
  nm.at(1, 0) = e2;
  nm.at(1, 1) = Laurent::zero();
  return ninv * m0 * nm;
}

inline bool flip_descends(const Ring& ring, const std::set<size_t>& flip) {
  for (const auto& c : ring.constraints) {
    int parity = 0;
    const Mono& m = c.lhs.terms.begin()->first;
    for (size_t v : flip) parity += m.exp(v);
    if (parity % 2 != 0) return false;
  }
  return true;
}

inline bool flip_assignment_legal(const Ring& ring,
                                  const std::set<size_t>& flip) {
  std::vector<int> signs(ring.names.size(), 1);
  for (size_t v : flip) signs[v] = -1;
  for (const auto& c : ring.constraints)
    if (c.lhs.evaluate_signs(signs) != -1) return false;
  return true;
}

}  // namespace detail

// Search flip sets (the preferred ones first, then exhaustively) for a
// coefficientwise-nonnegative conjugated matrix; certify entirety when the
// all-ones matrix has entries >= 1 and top-left >= 2, so its power's
// top-left entries grow strictly.
inline Certificate entirety_certificate(
    const Augmentation& aug, const LoopMap& loop, const std::string& h1,
    const std::string& h2, int k_max,
    const std::vector<std::string>& preferred_flips = {}) {
  Certificate cert;
  cert.generator = h2;
  cert.companions = {h1, h2};
  const Ring& ring = *aug.ring;

  auto m1_opt = detail::conjugated_matrix(aug, loop, h1, h2);
  std::vector<std::vector<Laurent>> orbit =
      orbit_values(aug, loop, {h1, h2}, k_max);
  for (int k = 0; k <= k_max; ++k)
    cert.e_values.push_back(max_abs_over_signs(ring, orbit[k][1]));

  bool strictly_increasing = true;
  for (int k = 1; k + 1 <= k_max; ++k)
    if (!(cert.e_values[k] < cert.e_values[k + 1])) strictly_increasing = false;

  if (!m1_opt) {
    cert.note = "base-change matrix not invertible; direct orbit evaluation";
    cert.verdict = strictly_increasing ? Verdict::monotone_up_to_k
                                       : Verdict::inconclusive;
    return cert;
  }
  cert.m1 = *m1_opt;

  std::vector<std::set<size_t>> candidates;
  if (!preferred_flips.empty()) {
    std::set<size_t> f;
    for (const auto& name : preferred_flips) f.insert(ring.idx(name));
    candidates.push_back(std::move(f));
  }
  std::vector<size_t> fv = ring.free_vars();
  if (fv.size() <= 16) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << fv.size()); ++mask) {
      std::set<size_t> f;
      for (size_t b = 0; b < fv.size(); ++b)
        if (mask & (uint64_t(1) << b)) f.insert(fv[b]);
      candidates.push_back(std::move(f));
    }
  }
  for (const auto& flip : candidates) {
    LMatrix flipped = cert.m1.flip(flip);
    if (!flipped.nonnegative()) continue;
    auto z = flipped.all_ones();
    bool zok = z[0][0] >= 2;
    for (const auto& row : z)
      for (const auto& v : row)
        if (v < 1) zok = false;
    if (!zok) continue;
    cert.flip_set = flip;
    for (size_t v : flip) cert.flip_names.push_back(ring.names[v]);
    cert.m1_flipped = flipped;
    cert.z = z;
    cert.flips_descend = detail::flip_descends(ring, flip);
    cert.max_assignment_legal = detail::flip_assignment_legal(ring, flip);
    cert.verdict = Verdict::entire_certified;
    if (!cert.max_assignment_legal)
      cert.note =
          "maximizing assignment violates a sign constraint; certificate "
          "holds in the presentation ring";
    return cert;
  }
  cert.verdict = strictly_increasing ? Verdict::monotone_up_to_k
                                     : Verdict::inconclusive;
  if (cert.verdict == Verdict::monotone_up_to_k)
    cert.note = "no nonnegative flip found; brute-force monotone up to K";
  return cert;
}

// E(k, a): maximum over all unital ring morphisms R -> Z of the k-th loop
// iterate of the augmentation, evaluated on the generator.
inline Int E_invariant(const Augmentation& aug, const LoopMap& loop,
                       const std::vector<std::string>& pair,
                       const std::string& gen, int k) {
  auto orbit = orbit_values(aug, loop, pair, k);
  for (size_t i = 0; i < pair.size(); ++i)
    if (pair[i] == gen) return max_abs_over_signs(*aug.ring, orbit[k][i]);
  throw ring_error("E: generator not in the pair");
}

// (eps_L . theta1^m)(a) = (eps_L . Phi_Sigma . theta2^m)(a) for every
// degree-0 generator outside the box, m = 0..m_max.
inline bool transfer_check(const DGAPtr& extended,
                           const std::vector<std::string>& interior_pinches,
                           const std::vector<std::string>& fill_pinch,
                           int m_max, std::string* why = nullptr) {
  const SatelliteInfo& si = *extended->spec.satellite;
  for (const auto& name : interior_pinches) {
    size_t p = extended->spec.position_of(name);
    if (p <= si.box_start || p + 1 >= si.box_end)
      throw ring_error("transfer_check: pinch must be interior to the box");
  }
  DGAPtr cur = extended;
  DGAMap phi_sigma;
  bool first = true;
  for (const auto& name : interior_pinches) {
    SaddleResult res = saddle_map(cur, name);
    phi_sigma = first ? res.map : phi_sigma.then(res.map);
    first = false;
    cur = res.target;
  }
  DGAPtr base = cur;  // the pinched spec, box shrunk
  Augmentation eps = filling_augmentation(base, fill_pinch);
  LoopMap theta1 = theta_map(base);
  LoopMap theta2 = theta_map(extended);
  for (int m = 0; m <= m_max; ++m) {
    DGAMap t1 = iterate(theta1, m);
    DGAMap t2 = iterate(theta2, m);
    for (const auto& g : extended->generators) {
      if (g.degree != 0) continue;
      size_t p = extended->spec.position_of(g.name);
      if (p >= si.box_start && p < si.box_end) continue;
      Laurent lhs = eps.eval(t1.image(g.id));
      Laurent rhs = eps.eval(phi_sigma.apply(t2.image(g.id)));
      if (!eps.ring->equal_mod_constraints(lhs, rhs)) {
        if (why)
          *why = "transfer mismatch at " + g.name + ", m = " +
                 std::to_string(m);
        return false;
      }
    }
  }
  return true;
}

}  // namespace lcdga
