// lcdga: Legendrian contact DGAs of (-1)-closures of positive braids,
// filling augmentations, loop monodromies, and orbit distinguishers.
//
// Exit codes: 0 success, 1 invalid input, 2 failed check or verdict
// mismatch. JSON output is byte-identical across runs on the same input;
// timing goes to stderr so reports stay deterministic.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <random>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lcdga/lcdga.hpp"

using namespace lcdga;

namespace {

int g_jobs = 1;

struct Options {
  std::string family;
  std::string braid;
  int strands = 0;
  std::vector<std::string> pinch;
  std::string at;
  std::string restrict_spec;
  std::string pair;
  std::string apply;
  int k = 1;
  int kmax = 10;
  bool json = false;
  bool verify = false;
  bool full = false;
  bool order_flag = false;
  int fuzz = 0;
  unsigned seed = 1;
};

Family resolve_family(const Options& opt) {
  if (!opt.family.empty()) return family_preset(opt.family);
  if (opt.braid.empty())
    throw ring_error("either --family or --braid/--strands is required");
  if (opt.strands < 2) throw ring_error("--strands N >= 2 required");
  std::vector<int> letters;
  std::istringstream is(opt.braid);
  std::string tok;
  while (is >> tok) {
    for (auto& c : tok)
      if (c == ',') c = ' ';
    std::istringstream is2(tok);
    int v;
    while (is2 >> v) letters.push_back(v);
  }
  Family f;
  f.name = "braid";
  f.spec = ClosureSpec{BraidWord(opt.strands, letters)};
  auto comp = f.spec.component_map();
  int m = f.spec.num_components();
  for (int c = 0; c < m; ++c)
    for (int s = 0; s < opt.strands; ++s)
      if (comp[s] == c) {
        f.spec.columns[f.spec.length()].add(
            s + 1, Basepoint{"t" + std::to_string(c + 1)});
        break;
      }
  return f;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Augmentation fill_opts(const Family& f, const Options& opt) {
  std::vector<std::string> pinch =
      opt.pinch.empty() ? f.default_pinch : opt.pinch;
  if (pinch.empty()) throw ring_error("no pinch sequence given or preset");
  Augmentation aug =
      flip_saddle_signs(filling_augmentation(f.spec, pinch), f.value_flips);
  if (!opt.restrict_spec.empty()) {
    std::vector<std::pair<std::string, int>> designation;
    for (const auto& part : split_names(opt.restrict_spec)) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw ring_error("--restrict expects t1=+1,t2=-1,...");
      std::string var = part.substr(0, eq);
      std::string val = part.substr(eq + 1);
      designation.emplace_back(var, val == "-1" ? -1 : 1);
    }
    aug = restrict_augmentation(aug, designation);
  }
  return aug;
}

std::string json_escape(const std::string& s) { return s; }

int cmd_dga(const Options& opt) {
  Family f = resolve_family(opt);
  DGAPtr dga = build_dga(f.spec);
  if (opt.json) {
    std::ostringstream os;
    os << "{\"schema\":1,\"command\":\"dga\",\"family\":\""
       << json_escape(f.name) << "\",\"strands\":" << f.spec.strands()
       << ",\"generators\":[";
    bool first = true;
    for (const auto& g : dga->generators) {
      if (!first) os << ",";
      first = false;
      os << "{\"name\":\"" << g.name << "\",\"degree\":" << g.degree
         << ",\"r\":" << g.r_comp << ",\"c\":" << g.c_comp
         << ",\"differential\":" << json_string(*dga->ring, dga->d(g.id))
         << "}";
    }
    os << "]}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << "family " << f.name << ": " << f.spec.length()
              << " crossings on " << f.spec.strands() << " strands, "
              << f.spec.num_components() << " components\n";
    for (const auto& g : dga->generators) {
      std::cout << "  |" << g.name << "| = " << g.degree << ", d(" << g.name
                << ") = " << to_string(*dga->ring, dga->d(g.id)) << "\n";
    }
  }
  return 0;
}

int cmd_check(const Options& opt) {
  Family f = resolve_family(opt);
  DGAPtr dga = build_dga(f.spec);
  StructureReport rep = check_structure(*dga);
  for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
  std::cout << "structure: " << (rep.ok ? "ok" : "FAILED") << "\n";
  int bad = rep.ok ? 0 : 1;
  if (opt.fuzz > 0) {
    std::mt19937 rng(opt.seed);
    int done = 0, checked = 0;
    while (done < opt.fuzz) {
      int n = 2 + static_cast<int>(rng() % 3);
      BraidWord delta = half_twist(n);
      size_t extra = 1 + rng() % (12 - delta.length());
      std::vector<int> letters;
      for (size_t i = 0; i < extra; ++i)
        letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
      size_t at = rng() % (letters.size() + 1);
      letters.insert(letters.begin() + at, delta.letters.begin(),
                     delta.letters.end());
      ClosureSpec spec{BraidWord(n, letters)};
      for (int s = 1; s <= n; ++s)
        spec.columns[spec.length()].add(s,
                                        Basepoint{"t" + std::to_string(s)});
      std::vector<size_t> ok_positions;
      for (size_t p = 0; p < spec.length(); ++p) {
        if (p >= at && p < at + delta.length()) continue;
        if (contains_half_twist(spec.word, {p}, 0)) ok_positions.push_back(p);
      }
      if (ok_positions.empty()) continue;
      size_t pick = ok_positions[rng() % ok_positions.size()];
      DGAPtr d2 = build_dga(spec);
      std::string why;
      try {
        SaddleResult res = saddle_map(d2, spec.crossing_names[pick]);
        if (!verify_chain_map(res.map, &why)) {
          std::cout << "fuzz FAILURE: " << why << "\n";
          ++bad;
        } else {
          ++checked;
        }
      } catch (const std::exception& e) {
        std::cout << "fuzz FAILURE: " << e.what() << "\n";
        ++bad;
      }
      ++done;
    }
    std::cout << "fuzz: " << checked << "/" << done
              << " random saddles verified as chain maps\n";
  }
  return bad == 0 ? 0 : 2;
}

int cmd_pinch(const Options& opt) {
  Family f = resolve_family(opt);
  if (opt.at.empty()) throw ring_error("--at <crossing> is required");
  DGAPtr dga = build_dga(f.spec);
  SaddleResult res = saddle_map(dga, opt.at);
  if (opt.verify) {
    std::string why;
    if (!verify_chain_map(res.map, &why)) {
      std::cout << "chain-map check FAILED: " << why << "\n";
      return 2;
    }
  }
  Ring& ring = *res.map.target->ring;
  if (opt.json) {
    std::ostringstream os;
    os << "{\"schema\":1,\"command\":\"pinch\",\"family\":\"" << f.name
       << "\",\"at\":\"" << opt.at << "\",\"saddle_variable\":\"" << res.s_var
       << "\",\"verified\":" << (opt.verify ? "true" : "false")
       << ",\"images\":{";
    bool first = true;
    for (const auto& g : dga->generators) {
      if (g.degree != 0 && !opt.full) continue;
      if (!first) os << ",";
      first = false;
      os << "\"" << g.name
         << "\":" << json_string(ring, res.map.image(g.id));
    }
    os << "}}";
    std::cout << os.str() << "\n";
  } else {
    for (const auto& g : dga->generators) {
      if (g.degree != 0 && !opt.full) continue;
      NCPoly img = res.map.image(g.id);
      if (img == NCPoly::gen(g.id)) continue;
      std::cout << g.name << " -> " << to_string(ring, img) << "\n";
    }
  }
  return 0;
}

int cmd_fill(const Options& opt) {
  Family f = resolve_family(opt);
  Augmentation aug = fill_opts(f, opt);
  std::string why;
  bool dead = aug.annihilates_differential(&why);
  Ring& ring = *aug.ring;
  std::vector<std::string> tvars;
  for (const auto& n : ring.names)
    if (n.starts_with("t")) tvars.push_back(n);
  if (opt.json) {
    std::ostringstream os;
    os << "{\"schema\":1,\"command\":\"fill\",\"family\":\"" << f.name
       << "\",\"free_rank\":" << ring.free_rank()
       << ",\"genus\":" << aug.genus() << ",\"minima\":" << aug.minima
       << ",\"eps_d_zero\":" << (dead ? "true" : "false") << ",\"values\":{";
    bool first = true;
    for (const auto& v : tvars) {
      if (!first) os << ",";
      first = false;
      os << "\"" << v << "\":" << json_string(ring, aug.var_value(v));
    }
    for (const auto& g : aug.source->generators) {
      if (g.degree != 0) continue;
      if (!first) os << ",";
      first = false;
      os << "\"" << g.name << "\":" << json_string(ring, aug.value(g.id));
    }
    os << "}}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << "R has free rank " << ring.free_rank() << " (genus "
              << aug.genus() << ", " << aug.minima << " minima); eps.d "
              << (dead ? "vanishes" : "FAILS: " + why) << "\n";
    for (const auto& v : tvars)
      std::cout << "  eps(" << v
                << ") = " << to_string(ring, aug.var_value(v)) << "\n";
    for (const auto& g : aug.source->generators) {
      if (g.degree != 0) continue;
      std::cout << "  eps(" << g.name
                << ") = " << to_string(ring, aug.value(g.id)) << "\n";
    }
  }
  return dead ? 0 : 2;
}

int cmd_monodromy(const Options& opt) {
  Family f = resolve_family(opt);
  DGAPtr dga = build_dga(f.spec);
  LoopMap loop;
  if (f.name.rfind("torus", 0) == 0 && f.spec.strands() >= 2) {
    // the Kalman loop for torus presets
    size_t r = f.spec.length();
    int p = f.spec.strands();
    int q = static_cast<int>(r) / (p - 1) - p;
    loop = kalman_map(p, q, dga);
  } else {
    loop = theta_map(dga);
  }
  if (opt.order_flag) {
    auto ord = order(loop, opt.kmax);
    if (opt.json) {
      std::cout << "{\"schema\":1,\"command\":\"monodromy\",\"family\":\""
                << f.name << "\",\"order\":"
                << (ord ? std::to_string(*ord) : std::string("null")) << "}\n";
    } else {
      if (ord)
        std::cout << "order " << *ord << "\n";
      else
        std::cout << "no order up to k = " << opt.kmax << "\n";
    }
    return 0;
  }
  DGAMap fk = iterate(loop, opt.k);
  std::vector<std::string> gens = opt.apply.empty()
                                      ? std::vector<std::string>{}
                                      : split_names(opt.apply);
  if (gens.empty()) {
    for (const auto& g : dga->generators)
      if (g.degree == 0 && !(fk.image(g.id) == NCPoly::gen(g.id)))
        gens.push_back(g.name);
  }
  Ring& ring = *dga->ring;
  if (opt.json) {
    std::ostringstream os;
    os << "{\"schema\":1,\"command\":\"monodromy\",\"family\":\"" << f.name
       << "\",\"k\":" << opt.k << ",\"images\":{";
    bool first = true;
    for (const auto& name : gens) {
      if (!first) os << ",";
      first = false;
      os << "\"" << name << "\":"
         << json_string(ring, fk.image(gen_id(name)));
    }
    os << "}}";
    std::cout << os.str() << "\n";
  } else {
    for (const auto& name : gens)
      std::cout << name << " -> " << to_string(ring, fk.image(gen_id(name)))
                << "\n";
  }
  return 0;
}

int cmd_distinguish(const Options& opt) {
  Family f = resolve_family(opt);
  Augmentation aug = fill_opts(f, opt);
  std::string h1 = f.pair_h1, h2 = f.pair_h2;
  if (!opt.pair.empty()) {
    auto parts = split_names(opt.pair);
    if (parts.size() != 2) throw ring_error("--pair h1,h2 expected");
    h1 = parts[0];
    h2 = parts[1];
  }
  LoopMap theta = theta_map(aug.source);
  Certificate cert =
      entirety_certificate(aug, theta, h1, h2, opt.kmax, f.preferred_flips);
  Ring& ring = *aug.ring;
  if (opt.json) {
    std::ostringstream os;
    os << "{\"schema\":1,\"command\":\"distinguish\",\"family\":\"" << f.name
       << "\",\"pair\":[\"" << h1 << "\",\"" << h2 << "\"],\"verdict\":\""
       << to_string(cert.verdict) << "\",\"flips\":[";
    for (size_t i = 0; i < cert.flip_names.size(); ++i)
      os << (i ? "," : "") << "\"" << cert.flip_names[i] << "\"";
    os << "],\"m1_flipped\":[";
    for (size_t i = 0; i < cert.m1_flipped.n; ++i) {
      os << (i ? "," : "") << "[";
      for (size_t j = 0; j < cert.m1_flipped.n; ++j)
        os << (j ? "," : "")
           << json_string(ring, cert.m1_flipped.at(i, j));
      os << "]";
    }
    os << "],\"z\":[";
    for (size_t i = 0; i < cert.z.size(); ++i) {
      os << (i ? "," : "") << "[";
      for (size_t j = 0; j < cert.z[i].size(); ++j)
        os << (j ? "," : "") << cert.z[i][j].get_str();
      os << "]";
    }
    os << "],\"e_values\":[";
    for (size_t i = 0; i < cert.e_values.size(); ++i)
      os << (i ? "," : "") << "\"" << cert.e_values[i].get_str() << "\"";
    os << "],\"max_assignment_legal\":"
       << (cert.max_assignment_legal ? "true" : "false") << ",\"note\":\""
       << cert.note << "\"}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << "verdict: " << to_string(cert.verdict) << "\n";
    std::cout << "flips: ";
    for (const auto& n : cert.flip_names) std::cout << n << " ";
    std::cout << "\nflipped M1:\n";
    for (size_t i = 0; i < cert.m1_flipped.n; ++i)
      for (size_t j = 0; j < cert.m1_flipped.n; ++j)
        std::cout << "  m" << i + 1 << j + 1 << " = "
                  << to_string(ring, cert.m1_flipped.at(i, j)) << "\n";
    std::cout << "Z =";
    for (const auto& row : cert.z) {
      std::cout << " [";
      for (const auto& v : row) std::cout << " " << v.get_str();
      std::cout << " ]";
    }
    std::cout << "\nE(k) =";
    for (const auto& e : cert.e_values) std::cout << " " << e.get_str();
    std::cout << "\n";
    if (!cert.note.empty()) std::cout << "note: " << cert.note << "\n";
  }
  return cert.verdict == Verdict::inconclusive ? 2 : 0;
}

struct SuiteCheck {
  std::string name;
  bool ok;
};

void run_family_suite(const std::string& name, std::vector<SuiteCheck>& out) {
  Family f = family_preset(name);
  Augmentation aug = flip_saddle_signs(
      filling_augmentation(f.spec, f.default_pinch), f.value_flips);
  std::string why;
  out.push_back({name + ": eps.d = 0", aug.annihilates_differential(&why)});
  LoopMap theta = theta_map(aug.source);
  out.push_back({name + ": theta chain map", verify_chain_map(theta.map)});
  Certificate cert = entirety_certificate(aug, theta, f.pair_h1, f.pair_h2,
                                          8, f.preferred_flips);
  out.push_back({name + ": entire orbit certified",
                 cert.verdict == Verdict::entire_certified});
  bool mono = true;
  for (size_t k = 1; k < cert.e_values.size(); ++k)
    if (!(cert.e_values[k - 1] < cert.e_values[k])) mono = false;
  out.push_back({name + ": E strictly increasing", mono});
}

int cmd_paper_suite(const Options& opt) {
  std::vector<SuiteCheck> checks;
  std::vector<std::string> fams =
      opt.family.empty() || opt.family == "all"
          ? std::vector<std::string>{"d4", "b11", "b12", "b21", "lambda1",
                                     "lambda2"}
          : std::vector<std::string>{opt.family};
  for (const auto& name : fams) run_family_suite(name, checks);
  if (opt.family.empty() || opt.family == "all") {
    LoopMap delta = kalman_map(2, 3);
    auto ord = order(delta, 10);
    checks.push_back({"torus(2,3): Kalman loop has order 5",
                      ord.has_value() && *ord == 5});
    Family b11 = family_preset("b11");
    Augmentation aug = flip_saddle_signs(
        filling_augmentation(b11.spec, b11.default_pinch), b11.value_flips);
    bool restricted_ok = true;
    try {
      Augmentation res = restrict_augmentation(
          aug, {{"t1", +1}, {"t2", -1}, {"t3", +1}, {"t4", -1}});
      LoopMap theta = theta_map(res.source);
      Certificate cert = entirety_certificate(res, theta, "a11", "a9", 8,
                                              b11.preferred_flips);
      restricted_ok = cert.verdict == Verdict::entire_certified;
    } catch (const std::exception&) {
      restricted_ok = false;
    }
    checks.push_back({"b11 restricted: still entire", restricted_ok});
  }
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name << "\n";
    all = all && c.ok;
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian contact DGAs of (-1)-closures"};
  app.require_subcommand(1);
  Options opt;

  const char* env_jobs = std::getenv("LCDGA_JOBS");
  g_jobs = env_jobs ? std::max(1, atoi(env_jobs))
                    : std::max(1u, std::thread::hardware_concurrency());
  worker_jobs() = g_jobs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "preset family name");
    sub->add_option("--braid", opt.braid, "braid word, e.g. \"2 1 3 2\"");
    sub->add_option("--strands", opt.strands, "strand count for --braid");
    sub->add_flag("--json", opt.json, "canonical JSON output");
    sub->add_flag("--full", opt.full, "include large symbolic output");
    sub->add_option("--jobs", g_jobs, "worker parallelism")
        ->each([](const std::string&) { worker_jobs() = g_jobs; });
  };

  auto* dga = app.add_subcommand("dga", "emit the closure DGA");
  add_common(dga);
  auto* check = app.add_subcommand("check", "structural checks and fuzzing");
  add_common(check);
  check->add_option("--fuzz", opt.fuzz, "number of randomized saddle checks");
  check->add_option("--seed", opt.seed, "random seed");
  auto* pinch = app.add_subcommand("pinch", "saddle cobordism map");
  add_common(pinch);
  pinch->add_option("--at", opt.at, "crossing to resolve");
  pinch->add_flag("--verify", opt.verify, "force the chain-map check");
  auto* fill = app.add_subcommand("fill", "filling augmentation");
  add_common(fill);
  fill->add_option("--pinch", [&](const std::vector<std::string>& v) {
        for (const auto& s : v)
          for (const auto& n : split_names(s)) opt.pinch.push_back(n);
        return true;
      },
      "pinch sequence, comma separated");
  fill->add_option("--restrict", opt.restrict_spec,
                   "per-base-point signs, e.g. t1=+1,t2=-1");
  auto* mono = app.add_subcommand("monodromy", "loop monodromy");
  add_common(mono);
  mono->add_option("--k", opt.k, "iterate count");
  mono->add_option("--kmax", opt.kmax, "order search bound");
  mono->add_option("--apply", opt.apply, "generators to report");
  mono->add_flag("--order", opt.order_flag, "report the loop order");
  auto* dist = app.add_subcommand("distinguish", "entirety certificate");
  add_common(dist);
  dist->add_option("--pinch", [&](const std::vector<std::string>& v) {
        for (const auto& s : v)
          for (const auto& n : split_names(s)) opt.pinch.push_back(n);
        return true;
      },
      "pinch sequence");
  dist->add_option("--pair", opt.pair, "base-change pair h1,h2");
  dist->add_option("--kmax", opt.kmax, "orbit length");
  dist->add_option("--restrict", opt.restrict_spec, "restriction designation");
  auto* suite = app.add_subcommand("paper-suite", "replay the worked examples");
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 1;
  try {
    if (dga->parsed()) rc = cmd_dga(opt);
    if (check->parsed()) rc = cmd_check(opt);
    if (pinch->parsed()) rc = cmd_pinch(opt);
    if (fill->parsed()) rc = cmd_fill(opt);
    if (mono->parsed()) rc = cmd_monodromy(opt);
    if (dist->parsed()) rc = cmd_distinguish(opt);
    if (suite->parsed()) rc = cmd_paper_suite(opt);
  } catch (const ring_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cerr << "elapsed " << dt.count() << " ms\n";
  return rc;
}
