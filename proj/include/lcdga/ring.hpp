// Coefficient ring machinery: invertible commuting variables, sparse integer
// Laurent polynomials, and unit-monomial relation solving.
//
// A Ring is an ordered list of variable names, each formally invertible.
// Some variables may be "solved" (eliminated by a signed monomial in the
// remaining ones) and the ring may carry sign constraints of the form
// (monomial = -1) that could not be eliminated triangularly.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lcdga {

using Int = mpz_class;

class ring_error : public std::runtime_error {
 public:
  explicit ring_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exponent vector, indexed by variable position in the owning Ring.
// Trailing zeros are trimmed so monomials from smaller rings compare equal
// after the ring grows.
struct Mono {
  std::vector<int> e;

  void trim() {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }
  int exp(size_t i) const { return i < e.size() ? e[i] : 0; }
  void set(size_t i, int v) {
    if (e.size() <= i) e.resize(i + 1, 0);
    e[i] = v;
    trim();
  }
  bool is_one() const { return e.empty(); }
  Mono operator*(const Mono& o) const {
    Mono r;
    r.e.resize(std::max(e.size(), o.e.size()), 0);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = exp(i) + o.exp(i);
    r.trim();
    return r;
  }
  Mono inverse() const {
    Mono r = *this;
    for (auto& x : r.e) x = -x;
    return r;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator<(const Mono& o) const {  // lexicographic on padded vectors
    size_t n = std::max(e.size(), o.e.size());
    for (size_t i = 0; i < n; ++i) {
      if (exp(i) != o.exp(i)) return exp(i) < o.exp(i);
    }
    return false;
  }
};

class Ring;
using RingPtr = std::shared_ptr<Ring>;

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// Terms are kept in a canonically ordered map; zero coefficients are never
// stored.
class Laurent {
 public:
  std::map<Mono, Int> terms;

  Laurent() = default;
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return constant(1); }
  static Laurent constant(Int c) {
    Laurent p;
    if (c != 0) p.terms[Mono{}] = std::move(c);
    return p;
  }
  static Laurent monomial(Int c, Mono m) {
    Laurent p;
    if (c != 0) p.terms[std::move(m)] = std::move(c);
    return p;
  }
  static Laurent variable(size_t idx, int power = 1) {
    Mono m;
    m.set(idx, power);
    return monomial(1, m);
  }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first.is_one() &&
           terms.begin()->second == 1;
  }
  // Signed monomial = single term with coefficient +-1.
  bool is_unit_monomial() const {
    return terms.size() == 1 &&
           (terms.begin()->second == 1 || terms.begin()->second == -1);
  }
  bool is_single_term() const { return terms.size() == 1; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [m, c] : o.terms) {
      auto it = terms.find(m);
      if (it == terms.end()) {
        terms.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
      }
    }
    return *this;
  }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms) {
        Mono m = m1 * m2;
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
          r.terms.emplace(std::move(m), c1 * c2);
        } else {
          it->second += c1 * c2;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Inverse of a signed monomial; error otherwise.
  Laurent inverse() const {
    if (!is_unit_monomial())
      throw ring_error("inverse: not a signed monomial");
    const auto& [m, c] = *terms.begin();
    return monomial(c, m.inverse());
  }

  bool operator==(const Laurent& o) const { return terms == o.terms; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return terms < o.terms; }

  // All coefficients nonnegative (certificate positivity test).
  bool coefficients_nonnegative() const {
    for (const auto& [m, c] : terms)
      if (c < 0) return false;
    return true;
  }

  // Substitute each variable by a signed-monomial image where given.
  Laurent substitute(const std::map<size_t, Laurent>& images) const {
    Laurent r;
    for (const auto& [m, c] : terms) {
      Laurent t = constant(c);
      for (size_t i = 0; i < m.e.size(); ++i) {
        int ex = m.e[i];
        if (ex == 0) continue;
        auto it = images.find(i);
        Laurent base;
        if (it != images.end()) {
          base = it->second;
        } else {
          base = variable(i);
        }
        if (ex < 0) base = base.inverse();
        for (int k = 0; k < std::abs(ex); ++k) t *= base;
      }
      r += t;
    }
    return r;
  }

  // Evaluate at +-1 per variable (index -> sign). Unlisted variables count
  // as +1.
  Int evaluate_signs(const std::vector<int>& signs) const {
    Int total = 0;
    for (const auto& [m, c] : terms) {
      int sgn = 1;
      for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] % 2 != 0 && i < signs.size() && signs[i] < 0) sgn = -sgn;
      }
      total += sgn > 0 ? c : -c;
    }
    return total;
  }

  // Flip the sign of the named variables: s -> -s for indices in flip.
  Laurent flip_signs(const std::set<size_t>& flip) const {
    Laurent r;
    for (const auto& [m, c] : terms) {
      int parity = 0;
      for (size_t i : flip) parity += m.exp(i);
      r.terms[m] = (parity % 2 == 0) ? c : -c;
    }
    return r;
  }
};

// A relation "monomial == -1" kept as a sign constraint when it cannot be
// solved for a t-class variable.
struct SignConstraint {
  Laurent lhs;  // signed monomial that must equal -1
};

// Ordered variable table plus elimination data.
class Ring {
 public:
  std::vector<std::string> names;
  std::map<std::string, size_t> index;
  // Variables marked eliminable (the t-class); relation solving prefers
  // these.
  std::set<size_t> t_class;
  // idx -> signed monomial in unsolved variables
  std::map<size_t, Laurent> solved;
  std::vector<SignConstraint> constraints;

  size_t add(const std::string& name, bool eliminable = false) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    size_t i = names.size();
    names.push_back(name);
    index[name] = i;
    if (eliminable) t_class.insert(i);
    return i;
  }
  bool has(const std::string& name) const { return index.count(name) > 0; }
  size_t idx(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw ring_error("unknown variable " + name);
    return it->second;
  }
  Laurent var(const std::string& name) const {
    return Laurent::variable(idx(name));
  }

  bool is_free(size_t i) const { return solved.find(i) == solved.end(); }
  std::vector<size_t> free_vars() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < names.size(); ++i)
      if (is_free(i)) r.push_back(i);
    return r;
  }
  // Free rank of the presented ring: free generators minus independent sign
  // constraints.
  size_t free_rank() const { return free_vars().size() - constraints.size(); }

  // Substitute the solved variables (values are already expressed in free
  // variables; a single pass suffices by the idempotence invariant).
  Laurent reduce(const Laurent& p) const {
    if (solved.empty()) return p;
    return p.substitute(solved);
  }

  // Normal form modulo the sign constraints: for each constraint pick its
  // highest-index variable as a pivot and rewrite it. Used only for equality
  // tests; reported polynomials stay in the presentation.
  Laurent constraint_normal_form(const Laurent& p) const {
    if (constraints.empty()) return p;
    std::map<size_t, Laurent> rewrite;
    for (const auto& c : constraints) {
      const auto& [m, coef] = *c.lhs.terms.begin();
      size_t pivot = m.e.size();
      while (pivot > 0 && (m.e[pivot - 1] == 0 || rewrite.count(pivot - 1)))
        --pivot;
      if (pivot == 0) continue;
      --pivot;
      // coef * m = -1  =>  pivot^e = -1/coef * rest^-1, with |e| = 1 expected
      int ex = m.e[pivot];
      if (std::abs(ex) != 1) continue;  // give up, equality test will be raw
      Mono rest = m;
      rest.set(pivot, 0);
      Laurent val = Laurent::monomial(-coef, rest.inverse());
      if (ex == -1) val = val.inverse();
      rewrite[pivot] = val;
    }
    Laurent q = p;
    // iterate: pivots may appear in other constraint values
    for (int pass = 0; pass < 4; ++pass) {
      Laurent next = q.substitute(rewrite);
      if (next == q) break;
      q = next;
    }
    return q;
  }

  bool equal_mod_constraints(const Laurent& a, const Laurent& b) const {
    if (a == b) return true;
    return constraint_normal_form(a) == constraint_normal_form(b);
  }

  // GF(2) status of a sign constraint against the recorded ones. Each
  // constraint "c * mono = -1" reads as a character condition: the product
  // of the signs of the odd-exponent variables must equal -c.
  enum class ConstraintStatus { added, implied, inconsistent };
  ConstraintStatus try_add_constraint(const Laurent& lhs) {
    if (!lhs.is_unit_monomial())
      throw ring_error("constraint must be a signed monomial");
    auto encode = [&](const Laurent& l) {
      const auto& [m, c] = *l.terms.begin();
      std::vector<int> parity(names.size(), 0);
      for (size_t i = 0; i < m.e.size(); ++i) parity[i] = std::abs(m.e[i]) % 2;
      int bit = (c == 1) ? 1 : 0;  // need product = -c
      return std::make_pair(parity, bit);
    };
    // row-reduce the existing system, then the candidate against it
    std::vector<std::pair<std::vector<int>, int>> rows;
    for (const auto& c : constraints) rows.push_back(encode(c.lhs));
    std::vector<std::pair<std::vector<int>, int>> basis;
    auto reduce_row = [&](std::pair<std::vector<int>, int> row) {
      for (const auto& [q, d] : basis) {
        size_t pivot = q.size();
        for (size_t i = 0; i < q.size(); ++i)
          if (q[i]) {
            pivot = i;
            break;
          }
        if (pivot < row.first.size() && row.first[pivot]) {
          for (size_t i = 0; i < q.size() && i < row.first.size(); ++i)
            row.first[i] ^= q[i];
          row.second ^= d;
        }
      }
      return row;
    };
    for (auto& r : rows) {
      auto red = reduce_row(r);
      bool zero = true;
      for (int x : red.first)
        if (x) zero = false;
      if (!zero) basis.push_back(red);
    }
    auto red = reduce_row(encode(lhs));
    bool zero = true;
    for (int x : red.first)
      if (x) zero = false;
    if (zero)
      return red.second == 0 ? ConstraintStatus::implied
                             : ConstraintStatus::inconsistent;
    constraints.push_back(SignConstraint{lhs});
    return ConstraintStatus::added;
  }

  // Sign assignments of free variables satisfying all constraints.
  // Each assignment is a full-size vector of +-1 (solved variables get the
  // sign induced by their value later).
  std::vector<std::vector<int>> legal_sign_assignments() const {
    std::vector<size_t> fv = free_vars();
    std::vector<std::vector<int>> out;
    size_t n = fv.size();
    if (n > 24) throw ring_error("too many free variables to enumerate");
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      std::vector<int> signs(names.size(), 1);
      for (size_t b = 0; b < n; ++b)
        if (mask & (uint64_t(1) << b)) signs[fv[b]] = -1;
      bool ok = true;
      for (const auto& c : constraints) {
        if (c.lhs.evaluate_signs(signs) != -1) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(signs));
    }
    return out;
  }
};

// Solve a list of relations "unit_monomial = -1" by triangular elimination.
// Each relation, after substituting previously solved variables, must be a
// signed monomial. If it contains a t-class variable with exponent +-1 that
// variable is eliminated; otherwise the relation is recorded as a sign
// constraint (or reported inconsistent when variable-free).
inline void solve_unit_relations(Ring& ring, std::vector<Laurent> relations) {
  for (auto& rel : relations) {
    Laurent r = ring.reduce(rel);
    if (!r.is_unit_monomial())
      throw ring_error("relation is not a signed monomial");
    const auto& [mono, coef] = *r.terms.begin();
    if (mono.is_one()) {
      if (coef != -1) throw ring_error("inconsistent relations: +1 = -1");
      continue;  // already implied
    }
    // prefer a t-class variable with exponent +-1
    std::optional<size_t> pivot;
    for (size_t i = 0; i < mono.e.size(); ++i) {
      if (mono.e[i] == 0 || std::abs(mono.e[i]) != 1) continue;
      if (!ring.is_free(i)) continue;
      if (ring.t_class.count(i)) {
        pivot = i;
        break;
      }
    }
    if (!pivot) {
      // keep as a sign constraint on the s-variables (dropping redundant
      // ones, e.g. the last minimum when the full product is forced)
      if (ring.try_add_constraint(r) == Ring::ConstraintStatus::inconsistent)
        throw ring_error("inconsistent relations: +1 = -1");
      continue;
    }
    size_t p = *pivot;
    int ex = mono.e[p];
    Mono rest = mono;
    rest.set(p, 0);
    // coef * p^ex * rest = -1  =>  p^ex = -coef^-1 * rest^-1
    Laurent val = Laurent::monomial(-coef, rest.inverse());
    if (ex == -1) val = val.inverse();
    // substitute into previously solved values so solving stays idempotent
    std::map<size_t, Laurent> sub{{p, val}};
    for (auto& [i, v] : ring.solved) v = v.substitute(sub);
    ring.solved[p] = val;
    for (auto& c : ring.constraints) c.lhs = c.lhs.substitute(sub);
  }
}

}  // namespace lcdga
