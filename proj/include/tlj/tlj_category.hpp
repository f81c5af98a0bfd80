#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlj/diagrams.hpp"
#include "tlj/scalars.hpp"
#include "tlj/tl_linear.hpp"

namespace tlj {

namespace detail {

// Letters of a positive braid word sorting strands to their target rows by
// adjacent swaps; emitted in applied-first order. Strand s sits at input row
// s+1 and must end at row target[s]+1; sign(riser, other) assigns the letter
// sign when strand `riser` moves up past `other`.
template <typename SignFn>
inline std::vector<std::pair<int, int>> bubble_word(
    const std::vector<int>& target, SignFn sign) {
  int w = static_cast<int>(target.size());
  std::vector<int> arr(w);
  for (int i = 0; i < w; ++i) arr[i] = i;
  std::vector<std::pair<int, int>> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < w; ++p) {
      if (target[arr[p]] > target[arr[p + 1]]) {
        int riser = arr[p + 1];
        int other = arr[p];
        word.emplace_back(p + 1, sign(riser, other));
        std::swap(arr[p], arr[p + 1]);
        moved = true;
      }
    }
  }
  return word;
}

}  // namespace detail

// The crossing that carries the top block of a strands over to the bottom of
// a block of b strands: all letters positive, the lower block rising under.
inline TLMorphism block_crossing(Level level, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative block size");
  std::vector<int> target(a + b);
  for (int s = 0; s < a; ++s) target[s] = b + s;
  for (int s = 0; s < b; ++s) target[a + s] = s;
  auto word = detail::bubble_word(target, [](int, int) { return +1; });
  return braid_morphism(level, a + b, word);
}

// Formal direct sum of projections; the objects of the quotient category.
struct CatObject {
  Level level;
  std::vector<TLMorphism> summands;

  static CatObject of(const TLMorphism& p) {
    if (p.out_size() != p.in_size())
      throw std::invalid_argument("object projection must be square");
    CatObject o;
    o.level = p.level();
    o.summands = {p};
    return o;
  }
  // The simple object f^(s).
  static CatObject simple(Level level, int s) {
    return of(jones_wenzl(level, s));
  }

  size_t count() const { return summands.size(); }
  int strands(size_t i) const { return summands.at(i).in_size(); }
};

inline CatObject dsum(const CatObject& p, const CatObject& q) {
  if (!(p.level == q.level)) throw std::invalid_argument("dsum level mismatch");
  CatObject o = p;
  o.summands.insert(o.summands.end(), q.summands.begin(), q.summands.end());
  return o;
}

// Tensor product of objects; summand order is p-major: index i*|q| + j.
inline CatObject tensor_obj(const CatObject& p, const CatObject& q) {
  if (!(p.level == q.level)) throw std::invalid_argument("tensor level mismatch");
  CatObject o;
  o.level = p.level;
  for (const auto& a : p.summands)
    for (const auto& b : q.summands) o.summands.push_back(tensor_stack(a, b));
  return o;
}

// An object is valid when every summand is an idempotent fixed by * in the
// quotient by the trace radical.
inline bool validate_object(const CatObject& p) {
  for (const auto& s : p.summands) {
    if (s.out_size() != s.in_size()) return false;
    if (!(s.level() == p.level)) return false;
    if (!quotient_equal(compose(s, s), s)) return false;
    if (!quotient_equal(star(s), s)) return false;
  }
  return true;
}

// Matrix of TL morphisms between the summands of source and target; entry
// (i,j) has shape (target_i, source_j) and is kept sandwiched between the
// two projections.
struct CatMorphism {
  CatObject target;
  CatObject source;
  std::vector<std::vector<TLMorphism>> entries;  // [target idx][source idx]

  static CatMorphism zero(const CatObject& target, const CatObject& source) {
    CatMorphism f;
    f.target = target;
    f.source = source;
    f.entries.resize(target.count());
    for (size_t i = 0; i < target.count(); ++i) {
      for (size_t j = 0; j < source.count(); ++j) {
        f.entries[i].push_back(TLMorphism::zero(
            target.level, target.strands(i), source.strands(j)));
      }
    }
    return f;
  }

  // Single-entry constructor: sandwiches x between the projections.
  static CatMorphism of(const CatObject& target, const CatObject& source,
                        const TLMorphism& x) {
    if (target.count() != 1 || source.count() != 1)
      throw std::invalid_argument("entrywise constructor needs single summands");
    CatMorphism f = zero(target, source);
    f.entries[0][0] = compose(compose(target.summands[0], x), source.summands[0]);
    return f;
  }

  static CatMorphism identity_of(const CatObject& p) {
    CatMorphism f = zero(p, p);
    for (size_t i = 0; i < p.count(); ++i) f.entries[i][i] = p.summands[i];
    return f;
  }
};

inline CatMorphism compose(const CatMorphism& f, const CatMorphism& g) {
  if (f.source.count() != g.target.count())
    throw std::invalid_argument("category compose shape mismatch");
  for (size_t j = 0; j < f.source.count(); ++j)
    if (f.source.strands(j) != g.target.strands(j))
      throw std::invalid_argument("category compose summand mismatch");
  CatMorphism r = CatMorphism::zero(f.target, g.source);
  for (size_t i = 0; i < f.target.count(); ++i)
    for (size_t j = 0; j < g.source.count(); ++j)
      for (size_t m = 0; m < f.source.count(); ++m)
        r.entries[i][j] = r.entries[i][j] + compose(f.entries[i][m], g.entries[m][j]);
  return r;
}

inline CatMorphism star(const CatMorphism& f) {
  CatMorphism r = CatMorphism::zero(f.source, f.target);
  for (size_t i = 0; i < f.target.count(); ++i)
    for (size_t j = 0; j < f.source.count(); ++j)
      r.entries[j][i] = star(f.entries[i][j]);
  return r;
}

inline CatMorphism dsum(const CatMorphism& f, const CatMorphism& g) {
  CatMorphism r = CatMorphism::zero(dsum(f.target, g.target), dsum(f.source, g.source));
  for (size_t i = 0; i < f.target.count(); ++i)
    for (size_t j = 0; j < f.source.count(); ++j) r.entries[i][j] = f.entries[i][j];
  for (size_t i = 0; i < g.target.count(); ++i)
    for (size_t j = 0; j < g.source.count(); ++j)
      r.entries[f.target.count() + i][f.source.count() + j] = g.entries[i][j];
  return r;
}

inline CatMorphism tensor_morphism(const CatMorphism& f, const CatMorphism& g) {
  CatMorphism r = CatMorphism::zero(tensor_obj(f.target, g.target),
                                    tensor_obj(f.source, g.source));
  size_t gt = g.target.count(), gs = g.source.count();
  for (size_t i = 0; i < f.target.count(); ++i)
    for (size_t j = 0; j < f.source.count(); ++j)
      for (size_t i2 = 0; i2 < gt; ++i2)
        for (size_t j2 = 0; j2 < gs; ++j2)
          r.entries[i * gt + i2][j * gs + j2] =
              tensor_stack(f.entries[i][j], g.entries[i2][j2]);
  return r;
}

// Categorical trace of an endomorphism.
inline Cyclotomic cat_trace(const CatMorphism& f) {
  if (f.source.count() != f.target.count())
    throw std::invalid_argument("categorical trace needs an endomorphism");
  Cyclotomic t = Cyclotomic::zero(f.source.level.zeta_order());
  for (size_t i = 0; i < f.source.count(); ++i) t += tl_trace(f.entries[i][i]);
  return t;
}

// Equality of arrows in the quotient category: entrywise modulo the radical.
inline bool cat_equal(const CatMorphism& f, const CatMorphism& g) {
  if (f.target.count() != g.target.count() || f.source.count() != g.source.count())
    return false;
  for (size_t i = 0; i < f.target.count(); ++i) {
    for (size_t j = 0; j < f.source.count(); ++j) {
      if (f.entries[i][j].out_size() != g.entries[i][j].out_size() ||
          f.entries[i][j].in_size() != g.entries[i][j].in_size())
        return false;
      if (!quotient_equal(f.entries[i][j], g.entries[i][j])) return false;
    }
  }
  return true;
}

// Whether x is already an arrow source -> target of single-summand objects,
// i.e. sandwiching changes nothing modulo the radical.
inline bool is_hom_element(const TLMorphism& x, const CatObject& target,
                           const CatObject& source) {
  if (target.count() != 1 || source.count() != 1)
    throw std::invalid_argument("membership check needs single summands");
  return quotient_equal(
      compose(compose(target.summands[0], x), source.summands[0]), x);
}

// The braiding P tensor Q -> Q tensor P: blockwise Kauffman crossings
// sandwiched by the projections.
inline CatMorphism braiding_of(const CatObject& p, const CatObject& q) {
  CatObject src = tensor_obj(p, q);
  CatObject dst = tensor_obj(q, p);
  CatMorphism r = CatMorphism::zero(dst, src);
  size_t np = p.count(), nq = q.count();
  for (size_t i = 0; i < np; ++i) {
    for (size_t j = 0; j < nq; ++j) {
      int a = p.strands(i), b = q.strands(j);
      TLMorphism cross = block_crossing(p.level, a, b);
      TLMorphism sandwiched = compose(
          compose(tensor_stack(q.summands[j], p.summands[i]), cross),
          tensor_stack(p.summands[i], q.summands[j]));
      r.entries[j * np + i][i * nq + j] = sandwiched;
    }
  }
  return r;
}

// Number of simple objects at the level: f^(0..k), or f^(0..bound) at
// DeltaTwo where the tower never truncates.
inline int simple_count(Level level, int delta_two_bound = 8) {
  if (level.is_delta_two()) {
    if (delta_two_bound < 0) throw std::invalid_argument("negative bound");
    return delta_two_bound + 1;
  }
  return level.k + 1;
}

// Multiplicity of the simple f^(s) inside the projection p (square, n
// strands): the rank of the trace-pairing Gram matrix of the family
// { p o d o f^(s) : d a basis diagram of shape (n, s) }.
inline int multiplicity(Level level, int s, const TLMorphism& p) {
  if (p.out_size() != p.in_size())
    throw std::invalid_argument("multiplicity needs a square projection");
  int n = p.in_size();
  if ((n + s) % 2 != 0) return 0;
  if (!level.is_delta_two() && s > level.k + 1) return 0;
  const TLMorphism& fs = jones_wenzl(level, s);
  std::vector<TLMorphism> family;
  for (DiagramId d : enumerate_ids(n, s)) {
    TLMorphism v = compose(compose(p, TLMorphism::from_diagram(level, diagram_of(d))), fs);
    if (!v.is_zero()) family.push_back(std::move(v));
  }
  if (family.empty()) return 0;
  std::vector<std::vector<Cyclotomic>> g(
      family.size(),
      std::vector<Cyclotomic>(family.size(), Cyclotomic::zero(level.zeta_order())));
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = 0; j < family.size(); ++j)
      g[i][j] = tl_trace(compose(star(family[i]), family[j]));
  return exact_rank(std::move(g));
}

inline int multiplicity(Level level, int s, const CatObject& p) {
  int total = 0;
  for (const auto& summand : p.summands) total += multiplicity(level, s, summand);
  return total;
}

using FusionVector = std::vector<long long>;

// N_{s,t}^r for r over the simple range, computed from multiplicities in
// f^(s) tensor f^(t).
inline FusionVector fusion_product(Level level, int s, int t,
                                   int delta_two_bound = 8) {
  int count = simple_count(level, delta_two_bound);
  if (s < 0 || t < 0 || s >= count || t >= count)
    throw std::invalid_argument("fusion factors must be simple indices");
  TLMorphism p = tensor_stack(jones_wenzl(level, s), jones_wenzl(level, t));
  FusionVector out(static_cast<size_t>(count), 0);
  for (int r = 0; r < count; ++r) out[static_cast<size_t>(r)] = multiplicity(level, r, p);
  return out;
}

struct FusionTable {
  Level level;
  int bound = 0;  // simple indices run 0..bound
  std::map<std::pair<int, int>, FusionVector> entries;
};

// All products N_{s,t} with s + t <= max_sum (so the tensor power stays
// within reach), s and t simple indices.
inline FusionTable fusion_table(Level level, int max_sum, int delta_two_bound = 8) {
  FusionTable table;
  table.level = level;
  table.bound = simple_count(level, delta_two_bound) - 1;
  for (int s = 0; s <= table.bound; ++s) {
    for (int t = 0; t <= table.bound; ++t) {
      if (s + t > max_sum) continue;
      table.entries[{s, t}] = fusion_product(level, s, t, delta_two_bound);
    }
  }
  return table;
}

}  // namespace tlj
