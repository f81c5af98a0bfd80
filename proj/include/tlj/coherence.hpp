#pragma once

#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tlj/dilute_b.hpp"

namespace tlj {

// Structural identities of the pattern algebra, checked instance by
// instance. Pattern-indexed identities quantify over filling patterns;
// element-quantified identities factor through single-diagram generators,
// one quantified slot at a time, under a joint size budget across slots.
enum class IdentityId {
  Pentagon,
  Triangle,
  Hexagon1,
  Hexagon2,
  EqV,
  BraidConj,
  UnitR,
  UnitL,
  PhiTower,
  JBraided,
  JMonoidal,
  UnmUnitary,
};

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "pentagon", "triangle",   "hexagon1",  "hexagon2",
      "eqV",      "braid-conj", "unit-r",    "unit-l",
      "phi-tower", "j-braided", "j-monoidal", "unm-unitary"};
  return names;
}

inline IdentityId identity_from_name(const std::string& name) {
  const auto& names = identity_names();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<IdentityId>(i);
  throw std::invalid_argument("unknown identity: " + name);
}

struct CheckBounds {
  int max_len = 4;
  int max_filled = 2;
};

enum class CheckMode { Exhaustive, Sampled };

struct CheckOptions {
  int jobs = 1;
  CheckMode mode = CheckMode::Exhaustive;
  long long samples = 200;  // sampled mode: instances drawn from the order
  std::uint64_t seed = 0;   // sampled mode: draw seed
  detail::RecipeOptions mutation;  // negative-control flips; keep defaulted
};

struct Counterexample {
  long long index = -1;               // position in the enumeration order
  std::vector<std::string> patterns;  // role-ordered free patterns
  std::vector<int> blocks;            // block sizes, where applicable
  int slot = -1;                      // quantified slot, where applicable
  std::string diagram;                // active slot diagram, where applicable
};

struct CheckResult {
  std::string identity;
  Level level;
  CheckBounds bounds;
  long long instances = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // minimal in the order
};

namespace detail {

struct Instance {
  std::vector<Pattern> patterns;
  std::vector<int> blocks;
  int slot = -1;
  DiagramId diagram = -1;
  int total_size = 0;
};

// Exact equality is the fast path; the contract is equality in the
// trace-radical quotient.
inline bool identity_holds(const BElement& a, const BElement& b) {
  return a == b || b_quotient_equal(a, b);
}

inline BElement compile_opts(Level level, const BraidRecipe& r, const Pattern& x,
                             const RecipeOptions& o) {
  return compile_recipe_opts(level, r, x, o);
}

inline bool eval_pentagon(Level level, const Pattern& y_in, const Pattern& z,
                          const RecipeOptions& o) {
  BraidRecipe assoc = standard_family("assoc");
  BElement vy = compile_opts(level, assoc, y_in, o);
  Pattern x_in = interleave(recipe_out_pattern(assoc, y_in), z);
  BElement lhs =
      compile_opts(level, assoc, x_in, o) * phi_n(vy, p_pattern(level, z));
  Pattern gamma_in = interleave(y_in, z);
  Pattern beta_in = recipe_out_pattern(assoc, gamma_in);
  auto [mu, w] = deinterleave(recipe_out_pattern(assoc, beta_in));
  Pattern nu_in = recipe_in_pattern(assoc, w);
  BElement rhs = phi_n(p_pattern(level, mu),
                       star(compile_opts(level, assoc, nu_in, o))) *
                 compile_opts(level, assoc, beta_in, o) *
                 compile_opts(level, assoc, gamma_in, o);
  return identity_holds(lhs, rhs);
}

inline bool eval_triangle(Level level, const Pattern& u, const Pattern& g,
                          const RecipeOptions& o) {
  BraidRecipe assoc = standard_family("assoc");
  Pattern beta_in = spread_odd(u);
  Pattern z_in = interleave(beta_in, g);
  // Components of an interleave live on their own columns: the even part of
  // ilv(ilv(u, e), g) rebalanced by the assoc routing is spread_even(g),
  // which is exactly the even-supported input the unit recipe wants.
  auto [x, y_in] = deinterleave(recipe_out_pattern(assoc, z_in));
  BElement lhs =
      phi_n(p_pattern(level, x),
            compile_opts(level, standard_family("unit-l"), y_in, o)) *
      compile_opts(level, assoc, z_in, o);
  BElement rhs = phi_n(compile_opts(level, standard_family("unit-r"), beta_in, o),
                       p_pattern(level, g));
  return identity_holds(lhs, rhs);
}

inline bool eval_hexagon(Level level, const Pattern& z_in, bool starred,
                         const RecipeOptions& o) {
  BraidRecipe assoc = standard_family("assoc");
  BraidRecipe swap = standard_family("swap");
  if (!starred) {
    Pattern y_in = recipe_out_pattern(assoc, z_in);
    Pattern x_in = recipe_out_pattern(swap, y_in);
    BElement lhs = compile_opts(level, assoc, x_in, o) *
                   compile_opts(level, swap, y_in, o) *
                   compile_opts(level, assoc, z_in, o);
    auto [gamma_in, eps] = deinterleave(z_in);
    Pattern beta_in = interleave(recipe_out_pattern(swap, gamma_in), eps);
    auto [mu, nu_in] = deinterleave(recipe_out_pattern(assoc, beta_in));
    BElement rhs = phi_n(p_pattern(level, mu), compile_opts(level, swap, nu_in, o)) *
                   compile_opts(level, assoc, beta_in, o) *
                   phi_n(compile_opts(level, swap, gamma_in, o),
                         p_pattern(level, eps));
    return identity_holds(lhs, rhs);
  }
  // Starred variant: the crossing slots carry the adjoint braids.
  Pattern az = recipe_out_pattern(assoc, z_in);
  Pattern y_in = recipe_out_pattern(swap, az);  // row swap is involutive
  BElement lhs = compile_opts(level, assoc, y_in, o) *
                 star(compile_opts(level, swap, y_in, o)) *
                 compile_opts(level, assoc, z_in, o);
  auto [w, eps] = deinterleave(z_in);
  Pattern gamma_in = recipe_out_pattern(swap, w);
  Pattern beta_in = interleave(gamma_in, eps);
  auto [mu, t] = deinterleave(recipe_out_pattern(assoc, beta_in));
  Pattern nu_in = recipe_out_pattern(swap, t);
  BElement rhs =
      phi_n(p_pattern(level, mu), star(compile_opts(level, swap, nu_in, o))) *
      compile_opts(level, assoc, beta_in, o) *
      phi_n(star(compile_opts(level, swap, gamma_in, o)), p_pattern(level, eps));
  return identity_holds(lhs, rhs);
}

inline bool eval_unm_unitary(Level level, int n, int m) {
  Pattern ilv = interleave(Pattern::ones(n), Pattern::ones(m));
  BElement u = compile_recipe(level, standard_family("unshuffle", n, m), ilv);
  return identity_holds(star(u) * u,
                        phi_n(p_consecutive(level, n), p_consecutive(level, m))) &&
         identity_holds(u * star(u), p_consecutive(level, n + m));
}

inline bool eval_j_braided(Level level, int n, int m, const RecipeOptions& o) {
  Pattern ilv_nm = interleave(Pattern::ones(n), Pattern::ones(m));
  BElement proj = p_pattern(level, ilv_nm);
  BElement u = compile_recipe(level, standard_family("unshuffle", n, m), ilv_nm);
  BElement cross = BElement::generator(level, Pattern::ones(n + m),
                                       Pattern::ones(n + m),
                                       block_crossing(level, n, m));
  BElement lhs = cross * u * proj;
  Pattern ilv_mn = interleave(Pattern::ones(m), Pattern::ones(n));
  BElement rhs = compile_recipe(level, standard_family("unshuffle", m, n), ilv_mn) *
                 compile_opts(level, standard_family("swap"), ilv_nm, o) * proj;
  return identity_holds(lhs, rhs);
}

inline bool eval_j_monoidal(Level level, int n, int m, int k,
                            const RecipeOptions& o) {
  Pattern bn = Pattern::ones(n), bm = Pattern::ones(m), bk = Pattern::ones(k);
  BElement lhs =
      compile_recipe(level, standard_family("unshuffle", n, m + k),
                     interleave(bn, Pattern::ones(m + k))) *
      phi_n(p_consecutive(level, n),
            compile_recipe(level, standard_family("unshuffle", m, k),
                           interleave(bm, bk))) *
      compile_opts(level, standard_family("assoc"),
                   interleave(interleave(bn, bm), bk), o);
  BElement rhs =
      compile_recipe(level, standard_family("unshuffle", n + m, k),
                     interleave(Pattern::ones(n + m), bk)) *
      phi_n(compile_recipe(level, standard_family("unshuffle", n, m),
                           interleave(bn, bm)),
            p_consecutive(level, k));
  return identity_holds(lhs, rhs);
}

inline const BElement::Key& only_key(const BElement& e) {
  if (e.terms().size() != 1)
    throw std::logic_error("expected a single-term element");
  return e.terms().begin()->first;
}

inline bool eval_braid_conj(Level level, const BElement& b1, const BElement& b2,
                            const RecipeOptions& o) {
  const auto& k1 = only_key(b1);
  const auto& k2 = only_key(b2);
  BraidRecipe swap = standard_family("swap");
  BElement lhs = compile_opts(level, swap, interleave(k1.first, k2.first), o) *
                 phi_n(b1, b2) *
                 star(compile_opts(level, swap, interleave(k1.second, k2.second), o));
  return identity_holds(lhs, phi_n(b2, b1));
}

inline bool eval_unit(Level level, bool right, const BElement& b,
                      const RecipeOptions& o) {
  const auto& k = only_key(b);
  Pattern px = right ? spread_odd(k.first) : spread_even(k.first);
  Pattern py = right ? spread_odd(k.second) : spread_even(k.second);
  BraidRecipe fam = standard_family(right ? "unit-r" : "unit-l");
  BElement big = right ? phi_n(b, p_star(level)) : phi_n(p_star(level), b);
  BElement wx = compile_opts(level, fam, px, o);
  BElement wy = compile_opts(level, fam, py, o);
  return identity_holds(wx * big * star(wy), b) &&
         identity_holds(star(wx) * wx * big, big) &&
         identity_holds(big * star(wy) * wy, big);
}

inline bool eval_eqv(Level level, const BElement& b1, const BElement& b2,
                     const BElement& b3, const RecipeOptions& o) {
  const auto& k1 = only_key(b1);
  const auto& k2 = only_key(b2);
  const auto& k3 = only_key(b3);
  BraidRecipe assoc = standard_family("assoc");
  Pattern u_out = interleave(interleave(k1.first, k2.first), k3.first);
  Pattern u_in = interleave(interleave(k1.second, k2.second), k3.second);
  BElement lhs = compile_opts(level, assoc, u_out, o) *
                 phi_n(phi_n(b1, b2), b3) *
                 star(compile_opts(level, assoc, u_in, o));
  return identity_holds(lhs, phi_n(b1, phi_n(b2, b3)));
}

inline bool eval_phi_tower(Level level, const BElement& b1, const BElement& b2) {
  const auto& k1 = only_key(b1);
  const auto& k2 = only_key(b2);
  int n0 = std::max(std::max(k1.first.length(), k1.second.length()),
                    std::max(k2.first.length(), k2.second.length()));
  BElement canon = phi_n(b1, b2);
  return phi_n(b1, b2, n0) == canon && phi_n(b1, b2, n0 + 1) == canon;
}

inline BElement active_element(Level level, const Instance& ins) {
  return BElement::generator(
      level, ins.patterns[0], ins.patterns[1],
      TLMorphism::from_diagram(level, diagram_of(ins.diagram)));
}

inline std::vector<BElement> quantified_slots(Level level, const Instance& ins,
                                              int count) {
  std::vector<BElement> slots;
  size_t passive = 2;
  for (int s = 0; s < count; ++s) {
    if (s == ins.slot)
      slots.push_back(active_element(level, ins));
    else
      slots.push_back(p_pattern(level, ins.patterns[passive++]));
  }
  return slots;
}

inline bool eval_instance(Level level, IdentityId id, const Instance& ins,
                          const RecipeOptions& o) {
  switch (id) {
    case IdentityId::Pentagon:
      return eval_pentagon(level, ins.patterns[0], ins.patterns[1], o);
    case IdentityId::Triangle:
      return eval_triangle(level, ins.patterns[0], ins.patterns[1], o);
    case IdentityId::Hexagon1:
      return eval_hexagon(level, ins.patterns[0], false, o);
    case IdentityId::Hexagon2:
      return eval_hexagon(level, ins.patterns[0], true, o);
    case IdentityId::EqV: {
      auto slots = quantified_slots(level, ins, 3);
      return eval_eqv(level, slots[0], slots[1], slots[2], o);
    }
    case IdentityId::BraidConj: {
      auto slots = quantified_slots(level, ins, 2);
      return eval_braid_conj(level, slots[0], slots[1], o);
    }
    case IdentityId::UnitR:
    case IdentityId::UnitL: {
      auto slots = quantified_slots(level, ins, 1);
      return eval_unit(level, id == IdentityId::UnitR, slots[0], o);
    }
    case IdentityId::PhiTower: {
      auto slots = quantified_slots(level, ins, 2);
      return eval_phi_tower(level, slots[0], slots[1]);
    }
    case IdentityId::JBraided:
      return eval_j_braided(level, ins.blocks[0], ins.blocks[1], o);
    case IdentityId::JMonoidal:
      return eval_j_monoidal(level, ins.blocks[0], ins.blocks[1], ins.blocks[2], o);
    case IdentityId::UnmUnitary:
      return eval_unm_unitary(level, ins.blocks[0], ins.blocks[1]);
  }
  throw std::logic_error("unhandled identity");
}

// Free patterns of pattern-indexed identities range over the bounds
// independently; quantified identities spend one joint budget across slots.
inline std::vector<Instance> enumerate_instances(IdentityId id,
                                                 const CheckBounds& b) {
  std::vector<Instance> out;
  std::vector<Pattern> pats = all_patterns(b.max_len, b.max_filled);
  auto push_patterns = [&](std::vector<Pattern> ps) {
    Instance ins;
    int total = 0;
    for (const auto& p : ps) total += p.length();
    ins.patterns = std::move(ps);
    ins.total_size = total;
    out.push_back(std::move(ins));
  };
  auto push_blocks = [&](std::vector<int> blocks) {
    Instance ins;
    int total = 0;
    for (int v : blocks) total += v;
    ins.blocks = std::move(blocks);
    ins.total_size = total;
    out.push_back(std::move(ins));
  };
  auto quantified = [&](int slot_count) {
    for (int slot = 0; slot < slot_count; ++slot) {
      for (const auto& x : pats) {
        for (const auto& y : pats) {
          if ((x.weight() + y.weight()) % 2 != 0) continue;
          int len_used = std::max(x.length(), y.length());
          int wt_used = std::max(x.weight(), y.weight());
          if (len_used > b.max_len || wt_used > b.max_filled) continue;
          std::vector<Pattern> passives = all_patterns(b.max_len - len_used,
                                                       b.max_filled - wt_used);
          std::vector<std::vector<Pattern>> combos;
          if (slot_count == 1) {
            combos.push_back({});
          } else if (slot_count == 2) {
            for (const auto& w : passives) combos.push_back({w});
          } else {
            for (const auto& w1 : passives)
              for (const auto& w2 : passives)
                if (w1.length() + w2.length() <= b.max_len - len_used &&
                    w1.weight() + w2.weight() <= b.max_filled - wt_used)
                  combos.push_back({w1, w2});
          }
          for (DiagramId d : enumerate_ids(x.weight(), y.weight())) {
            for (const auto& combo : combos) {
              Instance ins;
              ins.patterns = {x, y};
              for (const auto& w : combo) ins.patterns.push_back(w);
              ins.slot = slot;
              ins.diagram = d;
              ins.total_size = len_used;
              for (const auto& w : combo) ins.total_size += w.length();
              out.push_back(std::move(ins));
            }
          }
        }
      }
    }
  };
  switch (id) {
    case IdentityId::Pentagon:
    case IdentityId::Triangle:
      for (const auto& p1 : pats)
        for (const auto& p2 : pats) push_patterns({p1, p2});
      break;
    case IdentityId::Hexagon1:
    case IdentityId::Hexagon2:
      for (const auto& p : pats) push_patterns({p});
      break;
    case IdentityId::UnmUnitary:
    case IdentityId::JBraided:
      for (int n = 0; n <= b.max_len; ++n)
        for (int m = 0; n + m <= b.max_len; ++m) push_blocks({n, m});
      break;
    case IdentityId::JMonoidal:
      for (int n = 0; n <= b.max_len; ++n)
        for (int m = 0; n + m <= b.max_len; ++m)
          for (int k = 0; n + m + k <= b.max_len; ++k) push_blocks({n, m, k});
      break;
    case IdentityId::UnitR:
    case IdentityId::UnitL:
      quantified(1);
      break;
    case IdentityId::BraidConj:
    case IdentityId::PhiTower:
      quantified(2);
      break;
    case IdentityId::EqV:
      quantified(3);
      break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Instance& a, const Instance& c) {
                     return a.total_size < c.total_size;
                   });
  return out;
}

// First failing index in enumeration order, or -1; deterministic for any
// job count.
inline long long run_instances(Level level, IdentityId id,
                               const std::vector<Instance>& list, int jobs,
                               const RecipeOptions& o) {
  long long total = static_cast<long long>(list.size());
  if (jobs <= 1) {
    for (long long i = 0; i < total; ++i)
      if (!eval_instance(level, id, list[static_cast<size_t>(i)], o)) return i;
    return -1;
  }
  std::atomic<long long> first_fail{total};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (long long i = t; i < total; i += jobs) {
        if (i >= first_fail.load(std::memory_order_relaxed)) break;
        if (!eval_instance(level, id, list[static_cast<size_t>(i)], o)) {
          long long cur = first_fail.load(std::memory_order_relaxed);
          while (i < cur &&
                 !first_fail.compare_exchange_weak(cur, i,
                                                   std::memory_order_relaxed)) {
          }
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  long long found = first_fail.load();
  return found == total ? -1 : found;
}

}  // namespace detail

inline CheckResult check_identity(Level level, const std::string& name,
                                  CheckBounds bounds, CheckOptions options = {}) {
  IdentityId id = identity_from_name(name);
  CheckResult result;
  result.identity = name;
  result.level = level;
  result.bounds = bounds;
  std::vector<detail::Instance> instances = detail::enumerate_instances(id, bounds);
  // Sampled mode draws a fixed-size subset of the enumeration order with a
  // hand-rolled Fisher-Yates prefix, so the draw is seed-determined on any
  // platform; counterexample indices keep their exhaustive positions.
  std::vector<long long> picked;
  if (options.mode == CheckMode::Sampled &&
      options.samples < static_cast<long long>(instances.size())) {
    if (options.samples < 0)
      throw std::invalid_argument("negative sample count");
    std::vector<long long> idx(instances.size());
    std::iota(idx.begin(), idx.end(), 0LL);
    std::mt19937_64 gen(options.seed);
    long long total = static_cast<long long>(idx.size());
    for (long long i = 0; i < options.samples; ++i) {
      long long j =
          i + static_cast<long long>(gen() %
                                     static_cast<std::uint64_t>(total - i));
      std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    idx.resize(static_cast<size_t>(options.samples));
    std::sort(idx.begin(), idx.end());
    std::vector<detail::Instance> subset;
    subset.reserve(idx.size());
    for (long long i : idx) subset.push_back(instances[static_cast<size_t>(i)]);
    instances = std::move(subset);
    picked = std::move(idx);
  }
  result.instances = static_cast<long long>(instances.size());
  long long fail =
      detail::run_instances(level, id, instances, options.jobs, options.mutation);
  if (fail >= 0) {
    result.passed = false;
    const detail::Instance& ins = instances[static_cast<size_t>(fail)];
    Counterexample ce;
    ce.index = picked.empty() ? fail : picked[static_cast<size_t>(fail)];
    for (const auto& p : ins.patterns) ce.patterns.push_back(p.to_string());
    ce.blocks = ins.blocks;
    ce.slot = ins.slot;
    if (ins.diagram >= 0) ce.diagram = diagram_of(ins.diagram).to_string();
    result.counterexample = std::move(ce);
  }
  return result;
}

// The diagram-level hom pairing and the pattern-algebra pairing must assign
// every hom space the same rank, and distinct simples must not mix.
inline bool check_full_faithful(Level level, int max_size) {
  for (int m = 0; m <= max_size; ++m) {
    for (int n = 0; n <= max_size; ++n) {
      if ((m + n) % 2 != 0) continue;
      int tl_rank = gram_rank(level, m, n);
      std::vector<BElement> family;
      for (DiagramId d : enumerate_ids(m, n))
        family.push_back(BElement::generator(
            level, Pattern::ones(m), Pattern::ones(n),
            TLMorphism::from_diagram(level, diagram_of(d))));
      std::vector<std::vector<Cyclotomic>> g(
          family.size(), std::vector<Cyclotomic>(
                             family.size(), Cyclotomic::zero(level.zeta_order())));
      for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = 0; j < family.size(); ++j)
          g[i][j] = b_trace(star(family[i]) * family[j]);
      if (exact_rank(std::move(g)) != tl_rank) return false;
    }
  }
  int count = simple_count(level);
  for (int s = 0; s < count && s <= max_size; ++s) {
    for (int t = 0; t < count && t <= max_size; ++t) {
      if ((s + t) % 2 != 0) continue;
      BElement ps = simple_projection(level, s);
      BElement pt = simple_projection(level, t);
      std::vector<BElement> family;
      for (DiagramId d : enumerate_ids(s, t)) {
        BElement xi = ps *
                      BElement::generator(
                          level, Pattern::ones(s), Pattern::ones(t),
                          TLMorphism::from_diagram(level, diagram_of(d))) *
                      pt;
        if (!xi.is_zero()) family.push_back(std::move(xi));
      }
      std::vector<std::vector<Cyclotomic>> g(
          family.size(), std::vector<Cyclotomic>(
                             family.size(), Cyclotomic::zero(level.zeta_order())));
      for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = 0; j < family.size(); ++j)
          g[i][j] = b_trace(star(family[i]) * family[j]);
      int rank = exact_rank(std::move(g));
      if (rank != (s == t ? 1 : 0)) return false;
    }
  }
  return true;
}

// K0 classes must multiply like the fusion rules.
inline bool check_k0_ring(Level level, int max_sum, int delta_two_bound = 8) {
  int count = simple_count(level, delta_two_bound);
  for (int s = 0; s < count; ++s) {
    for (int t = 0; t < count; ++t) {
      if (s + t > max_sum) continue;
      BElement p = phi_n(simple_projection(level, s), simple_projection(level, t));
      if (k0_class(p, delta_two_bound) !=
          fusion_product(level, s, t, delta_two_bound))
        return false;
    }
  }
  return true;
}

}  // namespace tlj
