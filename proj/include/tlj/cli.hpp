#pragma once

// Command-line surface: run identity verifications and emit fusion tables,
// Bratteli data, Jones-Wenzl coefficients, and diagram listings as
// JSON / text / DOT. Output bytes depend only on the invocation (the
// opt-in --timings flag is the single documented exception), so reports
// diff cleanly and parallelism never changes them.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tlj/coherence.hpp"

namespace tlj {
namespace cli_detail {

using nlohmann::json;

// Built-in maxima; TLJ_MAX_BOUND lowers every one of them when set.
struct Caps {
  long k = 12;
  long max_len = 12;
  long max_filled = 6;
  long depth = 16;
  long strands = 12;  // --n / --m / jw index / hom-size bounds
  long max_sum = 12;
  long bound = 12;
  long jobs = 64;
};

inline bool effective_caps(Caps& caps, std::ostream& err) {
  const char* raw = std::getenv("TLJ_MAX_BOUND");
  if (raw == nullptr || *raw == '\0') return true;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 0) {
    err << "TLJ_MAX_BOUND must be a nonnegative integer, got \"" << raw
        << "\"\n";
    return false;
  }
  caps.k = std::min(caps.k, v);
  caps.max_len = std::min(caps.max_len, v);
  caps.max_filled = std::min(caps.max_filled, v);
  caps.depth = std::min(caps.depth, v);
  caps.strands = std::min(caps.strands, v);
  caps.max_sum = std::min(caps.max_sum, v);
  caps.bound = std::min(caps.bound, v);
  return true;
}

struct BoundGuard {
  std::ostream& err;
  bool ok = true;

  void require(const char* name, long value, long cap) {
    if (value <= cap) return;
    err << "bound " << name << "=" << value << " exceeds the maximum " << cap
        << " (lower it or raise TLJ_MAX_BOUND)\n";
    ok = false;
  }
};

// Shared per-subcommand settings gathered by CLI11.
struct Invocation {
  long k = 0;
  bool delta2 = false;
  long max_len = 6;
  long max_filled = 3;
  long depth = 4;
  long n = -1;
  long m = -1;
  long max_sum = -1;
  long bound = 8;
  long jobs = 0;  // 0 = one worker per hardware thread
  long long sample = 0;  // 0 = exhaustive
  std::uint64_t seed = 0;
  bool want_float = false;
  bool timings = false;
  std::string format = "text";
  std::string out_path;
  std::string target;
};

inline void add_level_flags(CLI::App* cmd, Invocation& inv) {
  auto* kopt = cmd->add_option("--k", inv.k, "root-of-unity level k >= 1");
  auto* dopt = cmd->add_flag("--delta2", inv.delta2, "loop parameter 2 level");
  kopt->excludes(dopt);
  dopt->excludes(kopt);
}

inline bool resolve_level(const Invocation& inv, const Caps& caps,
                          std::ostream& err, Level& level) {
  if (inv.delta2) {
    level = Level::delta_two();
    return true;
  }
  if (inv.k == 0) {
    err << "choose a level: --k <int> or --delta2\n";
    return false;
  }
  if (inv.k < 1) {
    err << "--k must be >= 1\n";
    return false;
  }
  BoundGuard guard{err};
  guard.require("k", inv.k, caps.k);
  if (!guard.ok) return false;
  level = Level::root_of_unity(static_cast<int>(inv.k));
  return true;
}

// Output sink selection: stdout by default, --out writes a file.
struct Sink {
  std::ofstream file;
  std::ostream* stream = nullptr;

  bool open(const std::string& path, std::ostream& fallback,
            std::ostream& err) {
    if (path.empty()) {
      stream = &fallback;
      return true;
    }
    file.open(path, std::ios::binary);
    if (!file) {
      err << "cannot open output path: " << path << "\n";
      return false;
    }
    stream = &file;
    return true;
  }
  std::ostream& out() { return *stream; }
};

inline std::string diagram_text(const PlanarPairing& d) {
  std::ostringstream s;
  s << d.m << "," << d.n << ":[" << d.to_string() << "]";
  return s.str();
}

inline std::string float12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline json approx_json(const Cyclotomic& a) {
  std::complex<double> z = approx_complex(a);
  return json{{"im", float12(z.imag())}, {"re", float12(z.real())}};
}

inline std::string join_list(const std::vector<std::string>& items) {
  std::string s = "[";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) s += ",";
    s += items[i];
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// verify

inline json counterexample_json(const Counterexample& c) {
  json j;
  j["blocks"] = c.blocks;
  j["diagram"] = c.diagram;
  j["index"] = c.index;
  j["patterns"] = c.patterns;
  j["slot"] = c.slot;
  return j;
}

inline std::string counterexample_text(const Counterexample& c) {
  std::ostringstream s;
  s << "counterexample index=" << c.index << " patterns=" << join_list(c.patterns);
  std::vector<std::string> blocks;
  for (int b : c.blocks) blocks.push_back(std::to_string(b));
  s << " blocks=" << join_list(blocks) << " slot=" << c.slot;
  if (!c.diagram.empty()) s << " diagram=" << c.diagram;
  return s.str();
}

inline void write_verify_record(std::ostream& out, const std::string& format,
                                const std::string& name, const Level& level,
                                const json& bounds_json,
                                const std::string& bounds_text,
                                std::optional<long long> tuples, bool passed,
                                const std::optional<Counterexample>& cex,
                                std::optional<long long> wall_ms,
                                std::optional<std::uint64_t> seed = {}) {
  if (format == "json") {
    json j;
    j["bounds"] = bounds_json;
    if (cex) j["counterexample"] = counterexample_json(*cex);
    j["identity"] = name;
    j["level"] = level.to_string();
    if (seed) {
      j["mode"] = "sampled";
      j["seed"] = *seed;
    }
    j["status"] = passed ? "pass" : "fail";
    if (tuples) j["tuples_checked"] = *tuples;
    if (wall_ms) j["wall_time_ms"] = *wall_ms;
    out << j.dump() << "\n";
    return;
  }
  out << (passed ? "pass" : "fail") << " " << name
      << " level=" << level.to_string() << " " << bounds_text;
  if (seed) out << " mode=sampled seed=" << *seed;
  if (tuples) out << " tuples=" << *tuples;
  if (wall_ms) out << " wall_time_ms=" << *wall_ms;
  if (cex) out << " " << counterexample_text(*cex);
  out << "\n";
}

inline int run_verify(const Invocation& inv, const Caps& caps,
                      std::ostream& fallback, std::ostream& err) {
  Level level;
  if (!resolve_level(inv, caps, err, level)) return 2;

  BoundGuard guard{err};
  guard.require("max-len", inv.max_len, caps.max_len);
  guard.require("max-filled", inv.max_filled, caps.max_filled);
  guard.require("jobs", inv.jobs, caps.jobs);
  if (inv.target == "full-faithful") guard.require("n", std::max(inv.n, 0L), caps.strands);
  if (inv.target == "k0-ring") {
    guard.require("max-sum", std::max(inv.max_sum, 0L), caps.max_sum);
    guard.require("bound", inv.bound, caps.bound);
  }
  if (!guard.ok) return 2;
  if (inv.sample < 0) {
    err << "--sample must be >= 0\n";
    return 2;
  }
  if (inv.format != "json" && inv.format != "text") {
    err << "verify supports --format json|text\n";
    return 2;
  }

  std::vector<std::string> names;
  const auto& catalog = identity_names();
  if (inv.target == "all") {
    names = catalog;
  } else if (std::find(catalog.begin(), catalog.end(), inv.target) !=
             catalog.end()) {
    names = {inv.target};
  } else if (inv.target != "full-faithful" && inv.target != "k0-ring") {
    err << "unknown verify target \"" << inv.target
        << "\" (expected an identity name, all, full-faithful, or k0-ring)\n";
    return 2;
  }

  Sink sink;
  if (!sink.open(inv.out_path, fallback, err)) return 2;

  int jobs = inv.jobs > 0
                 ? static_cast<int>(inv.jobs)
                 : std::max(1u, std::thread::hardware_concurrency());
  bool all_passed = true;

  auto elapsed_ms = [](auto start) -> long long {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  if (inv.target == "full-faithful") {
    int size = static_cast<int>(inv.n < 0 ? 3 : inv.n);
    auto start = std::chrono::steady_clock::now();
    bool ok = check_full_faithful(level, size);
    std::optional<long long> ms;
    if (inv.timings) ms = elapsed_ms(start);
    write_verify_record(sink.out(), inv.format, "full-faithful", level,
                        json{{"max_size", size}},
                        "max_size=" + std::to_string(size), std::nullopt, ok,
                        std::nullopt, ms);
    return ok ? 0 : 1;
  }
  if (inv.target == "k0-ring") {
    int sum = static_cast<int>(inv.max_sum < 0 ? 4 : inv.max_sum);
    int bound = static_cast<int>(inv.bound);
    auto start = std::chrono::steady_clock::now();
    bool ok = check_k0_ring(level, sum, bound);
    std::optional<long long> ms;
    if (inv.timings) ms = elapsed_ms(start);
    write_verify_record(sink.out(), inv.format, "k0-ring", level,
                        json{{"bound", bound}, {"max_sum", sum}},
                        "max_sum=" + std::to_string(sum) +
                            " bound=" + std::to_string(bound),
                        std::nullopt, ok, std::nullopt, ms);
    return ok ? 0 : 1;
  }

  CheckBounds bounds{static_cast<int>(inv.max_len),
                     static_cast<int>(inv.max_filled)};
  json bounds_json{{"max_filled", bounds.max_filled},
                   {"max_len", bounds.max_len}};
  std::string bounds_text = "max_len=" + std::to_string(bounds.max_len) +
                            " max_filled=" + std::to_string(bounds.max_filled);
  CheckOptions options;
  options.jobs = jobs;
  std::optional<std::uint64_t> seed;
  if (inv.sample > 0) {
    options.mode = CheckMode::Sampled;
    options.samples = inv.sample;
    options.seed = inv.seed;
    seed = inv.seed;
  }
  for (const auto& name : names) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = check_identity(level, name, bounds, options);
    std::optional<long long> ms;
    if (inv.timings) ms = elapsed_ms(start);
    write_verify_record(sink.out(), inv.format, name, level, bounds_json,
                        bounds_text, r.instances, r.passed, r.counterexample,
                        ms, seed);
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// emit

inline std::string fusion_vector_text(const FusionVector& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += "f" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

inline int run_emit_fusion(const Invocation& inv, const Caps& caps,
                           std::ostream& fallback, std::ostream& err) {
  Level level;
  if (!resolve_level(inv, caps, err, level)) return 2;
  BoundGuard guard{err};
  long max_sum = inv.max_sum;
  guard.require("bound", inv.bound, caps.bound);
  if (max_sum >= 0) guard.require("max-sum", max_sum, caps.max_sum);
  if (!guard.ok) return 2;
  if (inv.format != "json" && inv.format != "text") {
    err << "emit fusion supports --format json|text\n";
    return 2;
  }
  int bound = static_cast<int>(inv.bound);
  if (max_sum < 0) {
    // Default: the full table when it is small, else products up to size 6.
    int top = simple_count(level, bound) - 1;
    max_sum = std::min(2 * top, 6);
  }
  FusionTable table = fusion_table(level, static_cast<int>(max_sum), bound);

  Sink sink;
  if (!sink.open(inv.out_path, fallback, err)) return 2;
  if (inv.format == "json") {
    json entries = json::array();
    for (const auto& [st, v] : table.entries)
      entries.push_back(
          json{{"product", v}, {"s", st.first}, {"t", st.second}});
    json j{{"bound", table.bound},
           {"entries", entries},
           {"level", level.to_string()},
           {"max_sum", max_sum}};
    sink.out() << j.dump() << "\n";
  } else {
    sink.out() << "fusion level=" << level.to_string()
               << " simples=" << table.bound + 1 << " max_sum=" << max_sum
               << "\n";
    for (const auto& [st, v] : table.entries)
      sink.out() << "f" << st.first << " * f" << st.second << " = "
                 << fusion_vector_text(v) << "\n";
  }
  return 0;
}

inline int run_emit_bratteli(const Invocation& inv, const Caps& caps,
                             std::ostream& fallback, std::ostream& err) {
  Level level;
  if (!resolve_level(inv, caps, err, level)) return 2;
  BoundGuard guard{err};
  guard.require("depth", inv.depth, caps.depth);
  guard.require("bound", inv.bound, caps.bound);
  if (!guard.ok) return 2;
  if (inv.format != "json" && inv.format != "text" && inv.format != "dot") {
    err << "emit bratteli supports --format json|text|dot\n";
    return 2;
  }
  if (inv.depth < 0) {
    err << "--depth must be >= 0\n";
    return 2;
  }
  BratteliData data =
      bratteli(level, static_cast<int>(inv.depth), static_cast<int>(inv.bound));

  Sink sink;
  if (!sink.open(inv.out_path, fallback, err)) return 2;
  std::ostream& out = sink.out();
  if (inv.format == "json") {
    json j{{"bound", data.bound},
           {"depth", inv.depth},
           {"dims", data.dims},
           {"inclusion", data.inclusion},
           {"level", level.to_string()}};
    out << j.dump() << "\n";
  } else if (inv.format == "text") {
    out << "bratteli level=" << level.to_string() << " depth=" << inv.depth
        << "\n";
    for (size_t d = 0; d < data.dims.size(); ++d) {
      out << "n=" << d << ":";
      for (long long v : data.dims[d]) out << " " << v;
      out << "\n";
    }
    out << "inclusion:\n";
    for (const auto& row : data.inclusion) {
      out << " ";
      for (long long v : row) out << " " << v;
      out << "\n";
    }
  } else {
    // One node per nonzero block, one labeled edge per inclusion multiplicity.
    out << "digraph bratteli {\n  rankdir=LR;\n  node [shape=box];\n";
    for (size_t d = 0; d < data.dims.size(); ++d)
      for (size_t s = 0; s < data.dims[d].size(); ++s) {
        if (data.dims[d][s] == 0) continue;
        out << "  \"n" << d << "_f" << s << "\" [label=\"f" << s << ":"
            << data.dims[d][s] << "\"];\n";
      }
    for (size_t d = 0; d + 1 < data.dims.size(); ++d)
      for (size_t t = 0; t < data.dims[d].size(); ++t) {
        if (data.dims[d][t] == 0) continue;
        for (size_t s = 0; s < data.dims[d + 1].size(); ++s) {
          long long mult = data.inclusion[t][s];
          if (mult == 0 || data.dims[d + 1][s] == 0) continue;
          out << "  \"n" << d << "_f" << t << "\" -> \"n" << d + 1 << "_f" << s
              << "\" [label=\"" << mult << "\"];\n";
        }
      }
    out << "}\n";
  }
  return 0;
}

inline int run_emit_jw(const Invocation& inv, const Caps& caps,
                       std::ostream& fallback, std::ostream& err) {
  Level level;
  if (!resolve_level(inv, caps, err, level)) return 2;
  if (inv.n < 0) {
    err << "emit jw needs --n <strands>\n";
    return 2;
  }
  BoundGuard guard{err};
  guard.require("n", inv.n, caps.strands);
  if (!guard.ok) return 2;
  if (inv.format != "json" && inv.format != "text") {
    err << "emit jw supports --format json|text\n";
    return 2;
  }

  const TLMorphism* f = nullptr;
  try {
    f = &jones_wenzl(level, static_cast<int>(inv.n));
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  Cyclotomic trace = quantum_integer(level, inv.n + 1);
  Cyclotomic delta = delta_of_level(level);

  Sink sink;
  if (!sink.open(inv.out_path, fallback, err)) return 2;
  std::ostream& out = sink.out();
  if (inv.format == "json") {
    json terms = json::array();
    for (const auto& [id, coeff] : f->terms()) {
      json t{{"coefficient", coeff.to_string()},
             {"diagram", diagram_text(diagram_of(id))}};
      if (inv.want_float) t["approx"] = approx_json(coeff);
      terms.push_back(t);
    }
    json j{{"delta", delta.to_string()},
           {"level", level.to_string()},
           {"n", inv.n},
           {"terms", terms},
           {"trace", trace.to_string()},
           {"zeta_order", level.zeta_order()}};
    if (inv.want_float) {
      j["delta_approx"] = approx_json(delta);
      j["trace_approx"] = approx_json(trace);
    }
    out << j.dump() << "\n";
  } else {
    out << "jw n=" << inv.n << " level=" << level.to_string()
        << " delta=" << delta.to_string() << " trace=" << trace.to_string()
        << "\n";
    for (const auto& [id, coeff] : f->terms()) {
      out << "  " << diagram_text(diagram_of(id)) << " : "
          << coeff.to_string();
      if (inv.want_float) {
        std::complex<double> z = approx_complex(coeff);
        out << " ~ " << float12(z.real());
        if (z.imag() != 0.0) out << (z.imag() < 0 ? "" : "+") << float12(z.imag()) << "i";
      }
      out << "\n";
    }
  }
  return 0;
}

inline int run_emit_diagrams(const Invocation& inv, const Caps& caps,
                             std::ostream& fallback, std::ostream& err) {
  if (inv.m < 0 || inv.n < 0) {
    err << "emit diagrams needs --m and --n\n";
    return 2;
  }
  BoundGuard guard{err};
  guard.require("m", inv.m, caps.strands);
  guard.require("n", inv.n, caps.strands);
  if (!guard.ok) return 2;
  if (inv.format != "json" && inv.format != "text") {
    err << "emit diagrams supports --format json|text\n";
    return 2;
  }
  std::vector<PlanarPairing> all =
      enumerate(static_cast<int>(inv.m), static_cast<int>(inv.n));

  Sink sink;
  if (!sink.open(inv.out_path, fallback, err)) return 2;
  if (inv.format == "json") {
    json list = json::array();
    for (const auto& d : all) list.push_back(diagram_text(d));
    json j{{"count", all.size()},
           {"diagrams", list},
           {"m", inv.m},
           {"n", inv.n}};
    sink.out() << j.dump() << "\n";
  } else {
    for (const auto& d : all) sink.out() << diagram_text(d) << "\n";
  }
  return 0;
}

}  // namespace cli_detail

// Parses and runs one invocation; returns the process exit code
// (0 all-pass, 1 verification failure, 2 usage or bounds error).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using namespace cli_detail;

  Caps caps;
  if (!effective_caps(caps, err)) return 2;

  CLI::App app{"exact verifier and report emitter for a diagram tensor category"};
  app.name("tlj");
  Invocation inv;

  auto* verify = app.add_subcommand(
      "verify", "check one identity, \"all\", full-faithful, or k0-ring");
  verify->add_option("target", inv.target, "identity name | all | full-faithful | k0-ring")
      ->required();
  add_level_flags(verify, inv);
  verify->add_option("--max-len", inv.max_len, "pattern length budget (default 6)");
  verify->add_option("--max-filled", inv.max_filled, "pattern weight budget (default 3)");
  verify->add_option("--jobs", inv.jobs, "worker threads, 0 = auto (default)");
  verify->add_option("--sample", inv.sample,
                     "check a seeded draw of this many tuples, 0 = exhaustive");
  verify->add_option("--seed", inv.seed, "draw seed for --sample (default 0)");
  verify->add_option("--n", inv.n, "full-faithful: largest hom size (default 3)");
  verify->add_option("--max-sum", inv.max_sum, "k0-ring: largest s+t (default 4)");
  verify->add_option("--bound", inv.bound, "delta2 simple truncation (default 8)");
  verify->add_option("--format", inv.format, "json|text (default text)");
  verify->add_option("--out", inv.out_path, "write to a file instead of stdout");
  verify->add_flag("--timings", inv.timings,
                   "add wall_time_ms to records (nondeterministic)");

  auto* emit = app.add_subcommand("emit", "emit tables and listings");
  emit->require_subcommand(1);

  auto* fusion = emit->add_subcommand("fusion", "fusion multiplicities");
  add_level_flags(fusion, inv);
  fusion->add_option("--max-sum", inv.max_sum, "largest s+t (default: full table up to 6)");
  fusion->add_option("--bound", inv.bound, "delta2 simple truncation (default 8)");
  fusion->add_option("--format", inv.format, "json|text (default text)");
  fusion->add_option("--out", inv.out_path, "write to a file instead of stdout");

  auto* brat = emit->add_subcommand("bratteli", "tower dimensions and inclusion");
  add_level_flags(brat, inv);
  brat->add_option("--depth", inv.depth, "tower depth (default 4)");
  brat->add_option("--bound", inv.bound, "delta2 simple truncation (default 8)");
  brat->add_option("--format", inv.format, "json|text|dot (default text)");
  brat->add_option("--out", inv.out_path, "write to a file instead of stdout");

  auto* jw = emit->add_subcommand("jw", "Jones-Wenzl coefficient listing");
  add_level_flags(jw, inv);
  jw->add_option("--n", inv.n, "strand count")->required();
  jw->add_option("--format", inv.format, "json|text (default text)");
  jw->add_option("--out", inv.out_path, "write to a file instead of stdout");
  jw->add_flag("--float", inv.want_float, "add 12-digit approximations");

  auto* diagrams = emit->add_subcommand("diagrams", "planar diagram basis listing");
  diagrams->add_option("--m", inv.m, "output boundary size")->required();
  diagrams->add_option("--n", inv.n, "input boundary size")->required();
  diagrams->add_option("--format", inv.format, "json|text (default text)");
  diagrams->add_option("--out", inv.out_path, "write to a file instead of stdout");

  app.require_subcommand(1);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string name = "tlj";
  argv.push_back(name.data());
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(inv, caps, out, err);
    if (fusion->parsed()) return run_emit_fusion(inv, caps, out, err);
    if (brat->parsed()) return run_emit_bratteli(inv, caps, out, err);
    if (jw->parsed()) return run_emit_jw(inv, caps, out, err);
    if (diagrams->parsed()) return run_emit_diagrams(inv, caps, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no command selected\n";
  return 2;
}

}  // namespace tlj
