// Free noncommutative polynomials over a Laurent coefficient ring, matrices
// over them, and Kalman path-matrix factors. Coefficients commute with
// generators; words multiply by concatenation.

#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "lcdga/ring.hpp"

namespace lcdga {

// Generators are interned strings; ids are stable for the whole process so
// maps between DGAs can reuse them.
class GenTable {
 public:
  static GenTable& instance() {
    static GenTable t;
    return t;
  }
  uint32_t id(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    uint32_t i = static_cast<uint32_t>(names_.size());
    names_.push_back(name);
    index_[name] = i;
    return i;
  }
  const std::string& name(uint32_t id) const { return names_.at(id); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, uint32_t> index_;
};

inline uint32_t gen_id(const std::string& name) {
  return GenTable::instance().id(name);
}
inline const std::string& gen_name(uint32_t id) {
  return GenTable::instance().name(id);
}

using Word = std::vector<uint32_t>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return gen_name(a[i]) < gen_name(b[i]);
    }
    return false;
  }
};

class NCPoly {
 public:
  std::map<Word, Laurent, WordLess> terms;

  NCPoly() = default;
  static NCPoly zero() { return NCPoly(); }
  static NCPoly one() { return scalar(Laurent::one()); }
  static NCPoly scalar(Laurent c) {
    NCPoly p;
    if (!c.is_zero()) p.terms[Word{}] = std::move(c);
    return p;
  }
  static NCPoly gen(uint32_t id) {
    NCPoly p;
    p.terms[Word{id}] = Laurent::one();
    return p;
  }
  static NCPoly gen(const std::string& name) { return gen(gen_id(name)); }
  static NCPoly word(Word w, Laurent c = Laurent::one()) {
    NCPoly p;
    if (!c.is_zero()) p.terms[std::move(w)] = std::move(c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_scalar() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  Laurent scalar_part() const {
    auto it = terms.find(Word{});
    return it == terms.end() ? Laurent::zero() : it->second;
  }
  bool is_single_generator() const {
    return terms.size() == 1 && terms.begin()->first.size() == 1 &&
           terms.begin()->second.is_one();
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms) {
      auto it = terms.find(w);
      if (it == terms.end()) {
        terms.emplace(w, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
    return *this;
  }
  NCPoly operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
  }
  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
  }
  NCPoly operator-(const NCPoly& o) const { return *this + (-o); }
  NCPoly& operator-=(const NCPoly& o) { return *this += -o; }

  NCPoly operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [w1, c1] : terms)
      for (const auto& [w2, c2] : o.terms) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        Laurent c = c1 * c2;
        auto it = r.terms.find(w);
        if (it == r.terms.end()) {
          r.terms.emplace(std::move(w), std::move(c));
        } else {
          it->second += c;
          if (it->second.is_zero()) r.terms.erase(it);
        }
      }
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  NCPoly operator*(const Laurent& c) const {
    NCPoly r;
    for (const auto& [w, k] : terms) {
      Laurent v = k * c;
      if (!v.is_zero()) r.terms[w] = std::move(v);
    }
    return r;
  }

  bool operator==(const NCPoly& o) const { return terms == o.terms; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // Algebra-map image: generators by gen_images (total on occurring
  // generators), ring variables by var_images (signed monomials). Applied
  // once, no fixpoint.
  NCPoly substitute(const std::map<uint32_t, NCPoly>& gen_images,
                    const std::map<size_t, Laurent>* var_images = nullptr)
      const {
    NCPoly r;
    for (const auto& [w, c] : terms) {
      Laurent coeff = var_images ? c.substitute(*var_images) : c;
      NCPoly t = NCPoly::scalar(coeff);
      for (uint32_t g : w) {
        auto it = gen_images.find(g);
        if (it == gen_images.end())
          throw ring_error("substitute: missing image for generator " +
                           gen_name(g));
        t *= it->second;
      }
      r += t;
    }
    return r;
  }

  // Coefficient-level map only (e.g. eliminating solved ring variables).
  NCPoly map_coefficients(const std::function<Laurent(const Laurent&)>& f)
      const {
    NCPoly r;
    for (const auto& [w, c] : terms) {
      Laurent v = f(c);
      if (!v.is_zero()) r.terms[w] = std::move(v);
    }
    return r;
  }

  std::vector<uint32_t> generators() const {
    std::set<uint32_t> s;
    for (const auto& [w, c] : terms) s.insert(w.begin(), w.end());
    return {s.begin(), s.end()};
  }
};

inline NCPoly operator*(const Laurent& c, const NCPoly& p) { return p * c; }

class NCMatrix {
 public:
  size_t rows = 0, cols = 0;
  std::vector<NCPoly> a;

  NCMatrix() = default;
  NCMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  static NCMatrix identity(size_t n) {
    NCMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = NCPoly::one();
    return m;
  }
  NCPoly& at(size_t i, size_t j) { return a[i * cols + j]; }
  const NCPoly& at(size_t i, size_t j) const { return a[i * cols + j]; }

  NCMatrix operator*(const NCMatrix& o) const {
    if (cols != o.rows) throw ring_error("matrix shape mismatch");
    NCMatrix r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        if (at(i, k).is_zero()) continue;
        for (size_t j = 0; j < o.cols; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += at(i, k) * o.at(k, j);
        }
      }
    return r;
  }
  NCMatrix operator+(const NCMatrix& o) const {
    NCMatrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  NCMatrix operator-(const NCMatrix& o) const {
    NCMatrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  bool operator==(const NCMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool is_identity() const {
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        if (i == j ? !(at(i, j) == NCPoly::one()) : !at(i, j).is_zero())
          return false;
      }
    return true;
  }
  NCMatrix map(const std::function<NCPoly(const NCPoly&)>& f) const {
    NCMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = f(a[i]);
    return r;
  }
  NCMatrix transpose() const {
    NCMatrix r(cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }
};

// Path-matrix factor P_k(x): identity except the 2x2 block at rows/cols
// k, k+1 (1-based) equal to [[0,1],[1,x]].
inline NCMatrix path_factor(size_t k, const NCPoly& x, size_t n) {
  if (k < 1 || k + 1 > n) throw ring_error("path_factor: index out of range");
  NCMatrix m = NCMatrix::identity(n);
  m.at(k - 1, k - 1) = NCPoly::zero();
  m.at(k - 1, k) = NCPoly::one();
  m.at(k, k - 1) = NCPoly::one();
  m.at(k, k) = x;
  return m;
}

// Inverse factor, block [[-x,1],[1,0]].
inline NCMatrix path_factor_inverse(size_t k, const NCPoly& x, size_t n) {
  if (k < 1 || k + 1 > n) throw ring_error("path_factor: index out of range");
  NCMatrix m = NCMatrix::identity(n);
  m.at(k - 1, k - 1) = -x;
  m.at(k - 1, k) = NCPoly::one();
  m.at(k, k - 1) = NCPoly::one();
  m.at(k, k) = NCPoly::zero();
  return m;
}

inline NCMatrix diagonal(const std::vector<NCPoly>& d) {
  NCMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

}  // namespace lcdga
