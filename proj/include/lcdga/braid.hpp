// Positive braid words, Coxeter permutations, half-twist detection, and the
// decorated closure data ((-1)-closure spec with base point columns and
// satellite metadata).

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcdga/ncpoly.hpp"

namespace lcdga {

struct BraidWord {
  int strands = 1;                 // N >= 1
  std::vector<int> letters;        // sigma indices, 1 <= k <= N-1

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    validate();
  }
  void validate() const {
    if (strands < 1) throw ring_error("braid: strands must be positive");
    for (int k : letters)
      if (k < 1 || k >= strands)
        throw ring_error("braid: letter index out of range");
  }
  size_t length() const { return letters.size(); }
};

// Permutation on [0, N) as a vector; image of the word under
// sigma_i -> (i, i+1), composed left to right.
inline std::vector<int> coxeter_permutation(const BraidWord& w) {
  std::vector<int> p(w.strands);
  std::iota(p.begin(), p.end(), 0);
  // p[i] = where strand starting at position i ends up
  for (int i = 0; i < w.strands; ++i) {
    int pos = i;
    for (int k : w.letters) {
      if (pos == k - 1)
        pos = k;
      else if (pos == k)
        pos = k - 1;
    }
    p[i] = pos;
  }
  return p;
}

inline std::vector<int> compose_perm(const std::vector<int>& f,
                                     const std::vector<int>& g) {
  // first f, then g
  std::vector<int> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

// Canonical half-twist word Delta_N = s1 (s2 s1) (s3 s2 s1) ..., the
// Garside element, of length N(N-1)/2.
inline BraidWord half_twist(int n) {
  if (n < 2) throw ring_error("half_twist: N >= 2 required");
  std::vector<int> ls;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j >= 1; --j) ls.push_back(j);
  return BraidWord(n, std::move(ls));
}

inline bool is_reversal_perm(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

namespace detail {

// Does some contiguous window of `ls` have half-twist length and the
// order-reversing permutation? Positive words of length N(N-1)/2 whose
// permutation is the reversal are exactly the half-twist words.
inline bool has_halftwist_window(const std::vector<int>& ls, int n) {
  size_t m = static_cast<size_t>(n) * (n - 1) / 2;
  if (ls.size() < m) return false;
  for (size_t start = 0; start + m <= ls.size(); ++start) {
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    for (size_t t = 0; t < m; ++t) {
      int k = ls[start + t];
      std::swap(pos[k - 1], pos[k]);
    }
    // pos[i] = final position of the strand entering at i within the window
    bool rev = true;
    for (int i = 0; i < n && rev; ++i) rev = (pos[i] == n - 1 - i);
    if (rev) return true;
  }
  return false;
}

}  // namespace detail

namespace detail {

// BFS over elementary rewrites (far commutations, triple moves) within one
// linear segment, looking for a half-twist window.
inline bool segment_has_halftwist(const std::vector<int>& seg, int n,
                                  int depth) {
  size_t m = static_cast<size_t>(n) * (n - 1) / 2;
  if (seg.size() < m) return false;
  std::set<std::vector<int>> seen{seg};
  std::deque<std::pair<std::vector<int>, int>> queue{{seg, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (has_halftwist_window(cur, n)) return true;
    if (d >= depth) continue;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (std::abs(cur[i] - cur[i + 1]) >= 2) {
        std::vector<int> nxt = cur;
        std::swap(nxt[i], nxt[i + 1]);
        if (seen.insert(nxt).second) queue.emplace_back(nxt, d + 1);
      }
    }
    for (size_t i = 0; i + 2 < cur.size(); ++i) {
      if (cur[i] == cur[i + 2] && std::abs(cur[i] - cur[i + 1]) == 1) {
        std::vector<int> nxt = cur;
        std::swap(nxt[i], nxt[i + 1]);
        std::swap(nxt[i + 1], nxt[i + 2]);
        if (seen.insert(nxt).second) queue.emplace_back(nxt, d + 1);
      }
    }
  }
  return false;
}

}  // namespace detail

// Sufficiency check: after deleting the excluded positions, the remaining
// cyclic word must contain Delta_N as a contiguous subword that does not
// straddle a deleted position, allowing up to `depth` elementary braid
// rewrites. The barrier matters: a half-twist occurrence wrapping past the
// pinch site does not block disks from passing the site a second time, so
// it certifies nothing. Returns false for "not certified", never "provably
// inadmissible".
inline bool contains_half_twist(const BraidWord& w,
                                const std::set<size_t>& excluded = {},
                                int depth = 3) {
  for (size_t p : excluded)
    if (p >= w.letters.size())
      throw ring_error("contains_half_twist: excluded position out of range");
  if (w.strands == 1) return true;  // nothing to certify
  size_t L = w.letters.size();

  if (excluded.empty()) {
    // whole cyclic word: every rotation is a candidate segment
    std::vector<int> base = w.letters;
    for (size_t rot = 0; rot < L; ++rot) {
      std::vector<int> seg(base.begin() + rot, base.end());
      seg.insert(seg.end(), base.begin(), base.begin() + rot);
      if (detail::segment_has_halftwist(seg, w.strands, depth)) return true;
    }
    return false;
  }
  // maximal runs of surviving letters between excluded positions, cyclically
  std::vector<size_t> gaps(excluded.begin(), excluded.end());
  for (size_t gi = 0; gi < gaps.size(); ++gi) {
    size_t start = gaps[gi] + 1;
    size_t end = gaps[(gi + 1) % gaps.size()];  // exclusive
    std::vector<int> seg;
    for (size_t p = start % L; p != end; p = (p + 1) % L)
      seg.push_back(w.letters[p]);
    if (detail::segment_has_halftwist(seg, w.strands, depth)) return true;
  }
  return false;
}

// A base point label: sign * var^power with power +-1.
struct Basepoint {
  std::string var;
  int sign = 1;   // +1 or -1
  int power = 1;  // +1 or -1
};

// Base points on the n strands of one column; per strand an ordered list.
struct Column {
  std::map<int, std::vector<Basepoint>> at;  // strand (1-based) -> labels
  bool empty() const {
    for (const auto& [s, v] : at)
      if (!v.empty()) return false;
    return true;
  }
  void add(int strand, Basepoint b) { at[strand].push_back(std::move(b)); }
  // prepend other's labels before ours, per strand
  static Column concat(const Column& left, const Column& right) {
    Column c = left;
    for (const auto& [s, v] : right.at) {
      auto& dst = c.at[s];
      dst.insert(dst.end(), v.begin(), v.end());
    }
    return c;
  }
};

// One crossing group of a satellite diagram: the cable crossings produced by
// one crossing of the companion braid, listed by increasing cable-strand
// index, acted on by the box path matrix (over) or its transpose-inverse
// (under).
struct CrossingGroup {
  std::vector<size_t> positions;  // word positions, by cable strand index
  bool over = true;
};

struct SatelliteInfo {
  size_t box_start = 0, box_end = 0;  // letter positions [start, end)
  int cable_lo = 1, cable_hi = 2;     // cabled strand range at the box
  std::vector<CrossingGroup> groups;
};

// A positive braid word with base point columns, component structure and
// optional satellite metadata, defining a (-1)-closure.
struct ClosureSpec {
  BraidWord word;
  std::vector<Column> columns;            // size length()+1, index 0..r
  std::vector<std::string> crossing_names;  // position -> label, default a1..
  std::optional<SatelliteInfo> satellite;
  std::string family;  // preset name, empty for ad hoc specs

  ClosureSpec() = default;
  explicit ClosureSpec(BraidWord w) : word(std::move(w)) {
    columns.resize(word.length() + 1);
    crossing_names.resize(word.length());
    for (size_t i = 0; i < word.length(); ++i)
      crossing_names[i] = "a" + std::to_string(i + 1);
  }

  size_t length() const { return word.length(); }
  int strands() const { return word.strands; }

  size_t position_of(const std::string& name) const {
    for (size_t i = 0; i < crossing_names.size(); ++i)
      if (crossing_names[i] == name) return i;
    throw ring_error("unknown crossing " + name);
  }

  // Strand-position trajectory of the closure strand entering at left
  // position `start` (0-based); entry c = position in column c.
  std::vector<int> strand_path(int start) const {
    std::vector<int> path;
    path.reserve(length() + 1);
    int pos = start;
    path.push_back(pos);
    for (int k : word.letters) {
      if (pos == k - 1)
        pos = k;
      else if (pos == k)
        pos = k - 1;
      path.push_back(pos);
    }
    return path;
  }

  // Component index per starting strand (0-based strands), numbered by the
  // least strand in each cycle of the Coxeter permutation.
  std::vector<int> component_map() const {
    auto perm = coxeter_permutation(word);
    int n = word.strands;
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      int j = i;
      while (comp[j] < 0) {
        comp[j] = next;
        j = perm[j];
      }
      ++next;
    }
    return comp;
  }
  int num_components() const {
    auto c = component_map();
    return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
  }

  // Every component must carry at least one base point for the \Z-coefficient
  // unknot relations to close up; a few catalog diagrams break this on purpose,
  // so it is a query rather than a hard invariant.
  bool each_component_has_basepoint() const {
    auto comp = component_map();
    std::set<int> seen;
    for (size_t c = 0; c < columns.size(); ++c) {
      for (const auto& [strand, pts] : columns[c].at) {
        if (pts.empty()) continue;
        // strand position `strand` at column c belongs to the component of
        // the closure strand passing there
        for (int s = 0; s < word.strands; ++s) {
          if (strand_path(s)[c] == strand - 1) {
            seen.insert(comp[s]);
            break;
          }
        }
      }
    }
    return static_cast<int>(seen.size()) == num_components();
  }
};

// Flatten gamma around strand i of beta (Definition of Lambda(beta,i;gamma)).
// Strand i of beta is cabled into M parallel strands; each beta-crossing
// touching strand i expands into a group of M consecutive crossings; gamma's
// word is inserted as the purple box with base points t1..tM on its right
// edge. The caller picks the box position: here the box goes at the end of
// the word, matching the catalog diagrams, and the cable's blackboard framing
// contributes one extra full twist sigma^2 on the cable pair when beta winds
// the closure (kept out: the catalog presets encode their own words, and the
// generic construction is only required up to Legendrian isotopy).
inline ClosureSpec satellite(const BraidWord& beta, int i,
                             const BraidWord& gamma) {
  auto perm = coxeter_permutation(beta);
  if (i < 1 || i > beta.strands) throw ring_error("satellite: bad strand");
  if (perm[i - 1] != i - 1)
    throw ring_error("satellite: strand is not fixed by the permutation");
  int m = gamma.strands;
  int n = beta.strands + m - 1;
  // strand s of beta maps to: s < i -> s; s == i -> [i, i+m-1]; s > i ->
  // s+m-1 (1-based)
  auto lifted = [&](int s) { return s < i ? s : s + m - 1; };

  std::vector<int> letters;
  std::vector<CrossingGroup> groups;
  // walk beta, tracking the cable's current beta-position q; the cable
  // occupies lifted positions [q, q+m-1]
  int q = i;
  for (int k : beta.letters) {
    (void)lifted;
    if (k <= q - 2) {
      letters.push_back(k);
    } else if (k >= q + 1) {
      letters.push_back(k + m - 1);
    } else if (k == q) {
      // the strand above dives down through the cable; its crossings with
      // the cable strands are emitted top-down, so the group list (indexed
      // by increasing cable strand) is built in reverse
      CrossingGroup g;
      for (int j = m - 1; j >= 0; --j) {
        letters.push_back(q + j);
        g.positions.insert(g.positions.begin(), letters.size() - 1);
      }
      g.over = false;
      groups.push_back(std::move(g));
      ++q;
    } else {  // k == q - 1
      // the strand below climbs up through the cable
      CrossingGroup g;
      for (int j = 0; j < m; ++j) {
        letters.push_back(q - 1 + j);
        g.positions.push_back(letters.size() - 1);
      }
      g.over = true;
      groups.push_back(std::move(g));
      --q;
    }
  }
  if (q != i) throw ring_error("satellite: cable did not return to strand i");
  int lo = q;
  // insert the box at the end of the word on the current band
  size_t box_start = letters.size();
  for (int k : gamma.letters) letters.push_back(lo - 1 + k);
  size_t box_end = letters.size();

  ClosureSpec spec{BraidWord(n, letters)};
  SatelliteInfo info;
  info.box_start = box_start;
  info.box_end = box_end;
  info.cable_lo = lo;
  info.cable_hi = lo + m - 1;
  info.groups = std::move(groups);
  spec.satellite = info;
  // box base points t1..tM on the right edge of the box
  for (int j = 0; j < m; ++j)
    spec.columns[box_end].add(lo + j, Basepoint{"t" + std::to_string(j + 1)});
  return spec;
}

}  // namespace lcdga
