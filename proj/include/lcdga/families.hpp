// Catalog of the example families: braid words, crossing-label aliases,
// purple-box marking and base point placement matching the figures, plus
// the standard pinching data used by the distinguisher.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcdga/braid.hpp"

namespace lcdga {

struct Family {
  std::string name;
  ClosureSpec spec;
  std::vector<std::string> default_pinch;
  std::string pair_h1, pair_h2;          // base-change pair (h1 over h2)
  std::vector<std::string> preferred_flips;  // variable names
  std::string e_generator;
  // Saddle base point pairs whose minus label sits on the other strand in
  // the figure; equivalently, s -> -s calibration of the filling variables.
  std::vector<std::string> value_flips;
};

namespace detail {

// 16-letter block (s2 s1 s3 s2)^4 with names a16..a1 descending, then the
// given tail letters with explicit names.
inline ClosureSpec dtilde_like(const std::vector<int>& tail,
                               const std::vector<std::string>& tail_names,
                               size_t box_len) {
  std::vector<int> letters;
  for (int rep = 0; rep < 4; ++rep)
    for (int k : {2, 1, 3, 2}) letters.push_back(k);
  letters.insert(letters.end(), tail.begin(), tail.end());
  ClosureSpec spec{BraidWord(4, letters)};
  for (int j = 0; j < 16; ++j)
    spec.crossing_names[j] = "a" + std::to_string(16 - j);
  for (size_t j = 0; j < tail.size(); ++j)
    spec.crossing_names[16 + j] = tail_names[j];
  SatelliteInfo si;
  si.box_start = spec.length() - box_len;
  si.box_end = spec.length();
  si.cable_lo = 1;
  si.cable_hi = 2;
  spec.satellite = si;
  return spec;
}

inline void place_component_basepoints(ClosureSpec& spec,
                                       const std::vector<int>& strands) {
  // t_i on the listed strand positions (1-based) in the final column
  for (size_t i = 0; i < strands.size(); ++i)
    spec.columns[spec.length()].add(strands[i],
                                    Basepoint{"t" + std::to_string(i + 1)});
}

}  // namespace detail

// (s2 s1 s3 s2)^4 s3^2 s1^{n-2}, n >= 4; the purple box holds the trailing
// s1 block with t1, t2 on its right edge; t3, t4 ride the outer strands.
inline Family family_d(int n) {
  if (n < 4) throw ring_error("d_n requires n >= 4");
  std::vector<int> tail{3, 3};
  std::vector<std::string> names{"a17", "a18"};
  for (int j = 0; j < n - 2; ++j) {
    tail.push_back(1);
    names.push_back("a" + std::to_string(19 + j));
  }
  Family f;
  f.name = "d" + std::to_string(n);
  f.spec = detail::dtilde_like(tail, names, n - 2);
  f.spec.family = f.name;
  detail::place_component_basepoints(f.spec, {1, 2, 3, 4});
  f.default_pinch = {"a9", "a10", "a11", "a12", "a13", "a14", "a15", "a16"};
  f.pair_h1 = "a11";
  f.pair_h2 = "a9";
  f.preferred_flips = {"s11", "s12", "s15", "s16"};
  f.e_generator = "a9";
  return f;
}

// (s2 s1 s3 s2)^4 s3^a s1^b for a, b in {1,2}; the labels follow the
// affine-D4 figure, so dropping a crossing drops its alias too.
inline Family family_b(int a, int b) {
  if ((a != 1 && a != 2) || (b != 1 && b != 2))
    throw ring_error("b_ab requires a, b in {1,2}");
  std::vector<int> tail;
  std::vector<std::string> names;
  tail.push_back(3);
  names.push_back("a17");
  if (a == 2) {
    tail.push_back(3);
    names.push_back("a18");
  }
  tail.push_back(1);
  names.push_back("a19");
  if (b == 2) {
    tail.push_back(1);
    names.push_back("a20");
  }
  Family f;
  f.name = "b" + std::to_string(a) + std::to_string(b);
  f.spec = detail::dtilde_like(tail, names, b);
  f.spec.family = f.name;
  if (a == 2 && b == 2) {
    detail::place_component_basepoints(f.spec, {1, 2, 3, 4});
  } else if (a == 1 && b == 1) {
    detail::place_component_basepoints(f.spec, {1, 2, 3, 4});
  } else {
    detail::place_component_basepoints(f.spec, {1, 2, 3});
  }
  if (a == 1 && b == 2) {
    f.default_pinch = {"a9", "a10", "a11", "a12", "a13", "a15", "a16"};
    f.preferred_flips = {"s11", "s12", "s15", "s16"};
    f.value_flips = {"s13", "s16"};
  } else if (a == 2 && b == 1) {
    f.default_pinch = {"a9", "a10", "a11", "a12", "a13", "a14", "a16"};
    f.preferred_flips = {"s11", "s12", "s16"};
  } else if (a == 1 && b == 1) {
    f.default_pinch = {"a9", "a10", "a11", "a12", "a13", "a16"};
    f.preferred_flips = {"s11", "s12", "s16"};
  } else {
    f.default_pinch = {"a9", "a10", "a11", "a12", "a13", "a14", "a15", "a16"};
    f.preferred_flips = {"s11", "s12", "s15", "s16"};
  }
  f.pair_h1 = "a11";
  f.pair_h2 = "a9";
  f.e_generator = "a9";
  return f;
}

// (s2 s1 s1 s2)^3 s1^n, n >= 1, names a12..a1 then a13, a14, ... in the
// box. For odd n the cable closes to a single component carrying both t1
// and t2, exactly as in the figure; even n has a third component.
inline Family family_lambda(int n) {
  if (n < 1) throw ring_error("lambda_n requires n >= 1");
  std::vector<int> letters;
  for (int rep = 0; rep < 3; ++rep)
    for (int k : {2, 1, 1, 2}) letters.push_back(k);
  for (int j = 0; j < n; ++j) letters.push_back(1);
  ClosureSpec spec{BraidWord(3, letters)};
  for (int j = 0; j < 12; ++j)
    spec.crossing_names[j] = "a" + std::to_string(12 - j);
  for (int j = 0; j < n; ++j)
    spec.crossing_names[12 + j] = "a" + std::to_string(13 + j);
  SatelliteInfo si;
  si.box_start = 12;
  si.box_end = 12 + n;
  si.cable_lo = 1;
  si.cable_hi = 2;
  spec.satellite = si;
  Family f;
  f.name = "lambda" + std::to_string(n);
  f.spec = spec;
  f.spec.family = f.name;
  if (n % 2 == 0)
    detail::place_component_basepoints(f.spec, {1, 2, 3});
  else
    detail::place_component_basepoints(f.spec, {1, 2});
  f.default_pinch = {"a10", "a9", "a8", "a7", "a6", "a5", "a12"};
  if (n >= 2) f.default_pinch.push_back("a11");
  f.pair_h1 = "a10";
  f.pair_h2 = "a9";
  f.preferred_flips = {"s5", "s7", "s8", "s10"};
  f.e_generator = "a9";
  return f;
}

// (s1 ... s_{p-1})^{p+q}, crossings a1..ar left to right, t1..tp at the
// right end.
inline Family family_torus(int p, int q) {
  if (p < 2 || q < 1) throw ring_error("torus requires p >= 2, q >= 1");
  std::vector<int> letters;
  for (int rep = 0; rep < p + q; ++rep)
    for (int k = 1; k < p; ++k) letters.push_back(k);
  ClosureSpec spec{BraidWord(p, letters)};
  SatelliteInfo si;
  si.box_start = 0;
  si.box_end = spec.length();
  si.cable_lo = 1;
  si.cable_hi = p;
  spec.satellite = si;
  Family f;
  f.name = "torus" + std::to_string(p) + "_" + std::to_string(q);
  f.spec = spec;
  f.spec.family = f.name;
  std::vector<int> strands;
  for (int i = 1; i <= p; ++i) strands.push_back(i);
  detail::place_component_basepoints(f.spec, strands);
  return f;
}

// Positive braid knots with infinitely many fillings; one base point per
// component at the right end.
inline Family family_knot(const std::string& id) {
  std::vector<int> letters;
  int strands = 3;
  if (id == "10_139") {
    letters = {2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 1};
  } else if (id == "m10_145") {
    strands = 4;
    for (int rep = 0; rep < 4; ++rep)
      for (int k : {2, 1, 3, 2}) letters.push_back(k);
    for (int k : {2, 1, 3}) letters.push_back(k);
  } else if (id == "10_154") {
    strands = 4;
    for (int rep = 0; rep < 3; ++rep)
      for (int k : {2, 1, 3, 2}) letters.push_back(k);
    for (int k : {2, 2, 1, 1, 3, 2, 1, 3, 3}) letters.push_back(k);
  } else if (id == "m10_161") {
    letters = {2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 1};
  } else if (id == "m10_152") {
    letters = {2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 2, 1, 1, 2, 2, 1};
  } else {
    throw ring_error("unknown knot family " + id);
  }
  Family f;
  f.name = "knot_" + id;
  ClosureSpec spec{BraidWord(strands, letters)};
  f.spec = spec;
  f.spec.family = f.name;
  auto comp = f.spec.component_map();
  int m = f.spec.num_components();
  std::vector<int> reps;
  for (int c = 0; c < m; ++c)
    for (int s = 0; s < strands; ++s)
      if (comp[s] == c) {
        reps.push_back(s + 1);
        break;
      }
  detail::place_component_basepoints(f.spec, reps);
  return f;
}

// Parse "d4", "lambda2", "b21", "torus:2,3", "torus(2,3)", "knot_10_139".
inline Family family_preset(const std::string& name) {
  auto num = [&](size_t from) { return std::stoi(name.substr(from)); };
  if (name.rfind("d", 0) == 0 && name.size() > 1 &&
      isdigit((unsigned char)name[1]))
    return family_d(num(1));
  if (name.rfind("lambda", 0) == 0) return family_lambda(num(6));
  if (name == "b11") return family_b(1, 1);
  if (name == "b12") return family_b(1, 2);
  if (name == "b21") return family_b(2, 1);
  if (name == "b22") return family_b(2, 2);
  if (name == "trefoil") return family_torus(2, 3);
  if (name.rfind("torus", 0) == 0) {
    std::string args = name.substr(5);
    if (!args.empty() && (args[0] == ':' || args[0] == '(')) args = args.substr(1);
    if (!args.empty() && args.back() == ')') args.pop_back();
    auto comma = args.find(',');
    if (comma == std::string::npos) throw ring_error("torus:p,q expected");
    return family_torus(std::stoi(args.substr(0, comma)),
                        std::stoi(args.substr(comma + 1)));
  }
  if (name.rfind("knot_", 0) == 0) return family_knot(name.substr(5));
  throw ring_error("unknown family " + name);
}

}  // namespace lcdga
