#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlj/diagrams.hpp"
#include "tlj/scalars.hpp"
#include "tlj/tl_linear.hpp"
#include "tlj/tlj_category.hpp"

namespace tlj {

// A 0/1 filling pattern on a column of boundary nodes, row 1 on top. The
// representation is canonical: trailing empty rows are trimmed, so a pattern
// never records the ambient column height.
struct Pattern {
  std::vector<uint8_t> bits;

  static Pattern of(std::vector<int> v) {
    Pattern p;
    for (int b : v) {
      if (b != 0 && b != 1) throw std::invalid_argument("pattern bits must be 0/1");
      p.bits.push_back(static_cast<uint8_t>(b));
    }
    p.trim();
    return p;
  }
  static Pattern empty() { return Pattern{}; }
  static Pattern ones(int n) {
    Pattern p;
    p.bits.assign(static_cast<size_t>(n), 1);
    return p;
  }
  static Pattern from_rows(const std::vector<int>& rows) {
    Pattern p;
    for (int r : rows) {
      if (r < 1) throw std::invalid_argument("rows are 1-based");
      if (static_cast<int>(p.bits.size()) < r) p.bits.resize(static_cast<size_t>(r), 0);
      p.bits[static_cast<size_t>(r - 1)] = 1;
    }
    return p;
  }

  void trim() {
    while (!bits.empty() && bits.back() == 0) bits.pop_back();
  }
  int length() const { return static_cast<int>(bits.size()); }
  int weight() const {
    int w = 0;
    for (uint8_t b : bits) w += b;
    return w;
  }
  bool filled(int row) const {
    return row >= 1 && row <= length() && bits[static_cast<size_t>(row - 1)] != 0;
  }
  std::vector<int> filled_rows() const {
    std::vector<int> rows;
    for (int r = 1; r <= length(); ++r)
      if (filled(r)) rows.push_back(r);
    return rows;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.bits == b.bits;
  }
  friend bool operator<(const Pattern& a, const Pattern& b) {
    if (a.bits.size() != b.bits.size()) return a.bits.size() < b.bits.size();
    return a.bits < b.bits;
  }

  std::string to_string() const {
    if (bits.empty()) return "e";
    std::string s;
    for (uint8_t b : bits) s += b ? '1' : '0';
    return s;
  }
};

// Odd rows from a, even rows from b.
inline Pattern interleave(const Pattern& a, const Pattern& b) {
  Pattern p;
  int len = std::max(2 * a.length() - 1, 2 * b.length());
  if (len < 0) len = 0;
  p.bits.assign(static_cast<size_t>(std::max(len, 0)), 0);
  for (int i = 1; i <= a.length(); ++i)
    if (a.filled(i)) p.bits[static_cast<size_t>(2 * i - 2)] = 1;
  for (int j = 1; j <= b.length(); ++j)
    if (b.filled(j)) p.bits[static_cast<size_t>(2 * j - 1)] = 1;
  p.trim();
  return p;
}

inline std::pair<Pattern, Pattern> deinterleave(const Pattern& p) {
  Pattern odd, even;
  for (int r = 1; r <= p.length(); ++r) {
    if (!p.filled(r)) continue;
    if (r % 2 == 1) {
      if (odd.length() < (r + 1) / 2) odd.bits.resize(static_cast<size_t>((r + 1) / 2), 0);
      odd.bits[static_cast<size_t>((r + 1) / 2 - 1)] = 1;
    } else {
      if (even.length() < r / 2) even.bits.resize(static_cast<size_t>(r / 2), 0);
      even.bits[static_cast<size_t>(r / 2 - 1)] = 1;
    }
  }
  odd.trim();
  even.trim();
  return {odd, even};
}

// Row j of u lands on row 2j-1 / 2j.
inline Pattern spread_odd(const Pattern& u) {
  std::vector<int> rows;
  for (int j : u.filled_rows()) rows.push_back(2 * j - 1);
  return rows.empty() ? Pattern::empty() : Pattern::from_rows(rows);
}
inline Pattern spread_even(const Pattern& u) {
  std::vector<int> rows;
  for (int j : u.filled_rows()) rows.push_back(2 * j);
  return rows.empty() ? Pattern::empty() : Pattern::from_rows(rows);
}

// First block in rows 1..n, second block shifted to rows n+1... .
inline Pattern concat_block(const Pattern& a, const Pattern& b, int n) {
  if (a.length() > n)
    throw std::invalid_argument("first block exceeds the block height");
  std::vector<int> rows;
  for (int r : a.filled_rows()) rows.push_back(r);
  for (int r : b.filled_rows()) rows.push_back(n + r);
  return rows.empty() ? Pattern::empty() : Pattern::from_rows(rows);
}

// All patterns with length <= max_len and weight <= max_filled, ordered by
// (length, then lexicographic bits); deterministic enumeration order.
inline std::vector<Pattern> all_patterns(int max_len, int max_filled) {
  std::vector<Pattern> out;
  out.push_back(Pattern::empty());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Pattern> of_len;
    std::vector<int> bits(static_cast<size_t>(len), 0);
    bits[static_cast<size_t>(len - 1)] = 1;  // canonical: last row filled
    std::function<void(int, int)> rec = [&](int row, int used) {
      if (row > len - 1) {
        if (used + 1 <= max_filled) of_len.push_back(Pattern::of(bits));
        return;
      }
      bits[static_cast<size_t>(row - 1)] = 0;
      rec(row + 1, used);
      bits[static_cast<size_t>(row - 1)] = 1;
      rec(row + 1, used + 1);
      bits[static_cast<size_t>(row - 1)] = 0;
    };
    rec(1, 0);
    std::sort(of_len.begin(), of_len.end());
    out.insert(out.end(), of_len.begin(), of_len.end());
  }
  return out;
}

// Element of the pattern-indexed algebra: a finite sum of matrix units
// L_{out,in}(a) with a a TL morphism of shape (weight(out), weight(in)).
// Multiplication contracts matching inner patterns:
//   L_{x,y}(a) L_{v,w}(b) = [y == v] L_{x,w}(a o b).
class BElement {
 public:
  using Key = std::pair<Pattern, Pattern>;

  BElement() = default;
  explicit BElement(Level level) : level_(level), has_level_(true) {}

  static BElement generator(Level level, const Pattern& out, const Pattern& in,
                            const TLMorphism& a) {
    if ((out.weight() + in.weight()) % 2 != 0)
      throw std::invalid_argument("key patterns must have equal weight parity");
    if (a.out_size() != out.weight() || a.in_size() != in.weight())
      throw std::invalid_argument("morphism shape must match key pattern weights");
    if (!(a.level() == level)) throw std::invalid_argument("level mismatch");
    BElement e(level);
    if (!a.is_zero()) e.terms_.emplace(Key{out, in}, a);
    return e;
  }

  const Level& level() const { return level_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, TLMorphism>& terms() const { return terms_; }

  void add_term(const Pattern& out, const Pattern& in, const TLMorphism& a) {
    if (a.is_zero()) return;
    Key k{out, in};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), a);
    } else {
      it->second = it->second + a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend BElement operator+(const BElement& a, const BElement& b) {
    a.check_level(b);
    BElement r = a;
    for (const auto& [k, m] : b.terms_) r.add_term(k.first, k.second, m);
    return r;
  }
  friend BElement operator-(const BElement& a, const BElement& b) {
    a.check_level(b);
    BElement r = a;
    for (const auto& [k, m] : b.terms_) r.add_term(k.first, k.second, -m);
    return r;
  }
  friend BElement operator*(const Cyclotomic& s, const BElement& a) {
    BElement r(a.level_);
    for (const auto& [k, m] : a.terms_) r.add_term(k.first, k.second, s * m);
    return r;
  }
  friend BElement operator*(const BElement& a, const BElement& b) {
    a.check_level(b);
    BElement r(a.level_);
    for (const auto& [ka, ma] : a.terms_) {
      for (const auto& [kb, mb] : b.terms_) {
        if (!(ka.second == kb.first)) continue;
        r.add_term(ka.first, kb.second, compose(ma, mb));
      }
    }
    return r;
  }

  friend bool operator==(const BElement& a, const BElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BElement& a, const BElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, m] : terms_) {
      if (!out.empty()) out += " + ";
      out += "L[" + k.first.to_string() + "," + k.second.to_string() + "](" +
             m.to_string() + ")";
    }
    return out;
  }

  void check_level(const BElement& b) const {
    if (has_level_ && b.has_level_ && !(level_ == b.level_))
      throw std::invalid_argument("element level mismatch");
  }

 private:
  Level level_;
  bool has_level_ = false;
  std::map<Key, TLMorphism> terms_;
};

inline BElement star(const BElement& a) {
  BElement r(a.level());
  for (const auto& [k, m] : a.terms()) r.add_term(k.second, k.first, star(m));
  return r;
}

// Sum of the Markov traces of the diagonal components.
inline Cyclotomic b_trace(const BElement& a) {
  Cyclotomic t = Cyclotomic::zero(a.level().zeta_order());
  for (const auto& [k, m] : a.terms())
    if (k.first == k.second) t += tl_trace(m);
  return t;
}

// Pattern projections.
inline BElement p_pattern(Level level, const Pattern& x) {
  return BElement::generator(level, x, x, TLMorphism::identity(level, x.weight()));
}
inline BElement p_consecutive(Level level, int n) {
  return p_pattern(level, Pattern::ones(n));
}
inline BElement p_star(Level level) { return p_pattern(level, Pattern::empty()); }

// Rank-one projection representing the s-th simple object.
inline BElement simple_projection(Level level, int s) {
  return BElement::generator(level, Pattern::ones(s), Pattern::ones(s),
                             jones_wenzl(level, s));
}

// Equality after quotienting each component by the trace radical.
inline bool b_quotient_equal(const BElement& a, const BElement& b) {
  std::set<BElement::Key> keys;
  for (const auto& [k, m] : a.terms()) keys.insert(k);
  for (const auto& [k, m] : b.terms()) keys.insert(k);
  for (const auto& k : keys) {
    auto ia = a.terms().find(k);
    auto ib = b.terms().find(k);
    if (ia == a.terms().end()) {
      if (!radical_contains(ib->second)) return false;
    } else if (ib == b.terms().end()) {
      if (!radical_contains(ia->second)) return false;
    } else if (!quotient_equal(ia->second, ib->second)) {
      return false;
    }
  }
  return true;
}

// A strand-routing recipe: which input rows connect to which output rows,
// and how the strands cross on the way. Standard families cover the
// structural maps; Custom carries explicit routing plus crossing slices.
struct BraidRecipe {
  enum class Family { Shuffle, Unshuffle, Assoc, Swap, UnitRight, UnitLeft, Custom };

  Family family = Family::Custom;
  int n = 0;  // Shuffle block height, Unshuffle first block count
  int m = 0;  // Unshuffle second block count
  // Custom only:
  int tracks = 0;
  std::vector<std::pair<int, int>> routing;  // in row -> out row
  std::vector<std::pair<int, int>> slices;   // (track, sign), input side first
};

// Named constructors for the standard families:
//   "shuffle"   (n): two stacked blocks of height n -> rows interleaved
//   "unshuffle" (n, m): interleaved rows -> stacked blocks of n and m
//   "assoc"     : re-nesting layout shift on a doubly interleaved column
//   "swap"      : odd and even rows exchange roles, strands crossing
//   "unit-r"    : odd rows compress to consecutive rows
//   "unit-l"    : even rows compress to consecutive rows
inline BraidRecipe standard_family(const std::string& name, int n = 0, int m = 0) {
  BraidRecipe r;
  if (name == "shuffle") {
    if (n < 1) throw std::invalid_argument("shuffle needs a block height");
    r.family = BraidRecipe::Family::Shuffle;
    r.n = n;
  } else if (name == "unshuffle") {
    if (n < 0 || m < 0) throw std::invalid_argument("unshuffle needs block counts");
    r.family = BraidRecipe::Family::Unshuffle;
    r.n = n;
    r.m = m;
  } else if (name == "assoc") {
    r.family = BraidRecipe::Family::Assoc;
  } else if (name == "swap") {
    r.family = BraidRecipe::Family::Swap;
  } else if (name == "unit-r") {
    r.family = BraidRecipe::Family::UnitRight;
  } else if (name == "unit-l") {
    r.family = BraidRecipe::Family::UnitLeft;
  } else {
    throw std::invalid_argument("unknown recipe family: " + name);
  }
  return r;
}

inline BraidRecipe custom_recipe(int tracks,
                                 std::vector<std::pair<int, int>> routing,
                                 std::vector<std::pair<int, int>> slices) {
  BraidRecipe r;
  r.family = BraidRecipe::Family::Custom;
  r.tracks = tracks;
  r.routing = std::move(routing);
  r.slices = std::move(slices);
  for (auto [t, s] : r.slices)
    if (t < 1 || t >= tracks || (s != 1 && s != -1))
      throw std::invalid_argument("bad slice");
  std::set<int> ins, outs;
  for (auto [a, b] : r.routing) {
    if (a < 1 || b < 1 || a > tracks || b > tracks)
      throw std::invalid_argument("routing row out of range");
    if (!ins.insert(a).second || !outs.insert(b).second)
      throw std::invalid_argument("routing must be injective");
  }
  return r;
}

namespace detail {

// Negative-control hooks for the mutation checks; not reachable from the
// CLI. Flipping either one must break the corresponding coherence identity.
struct RecipeOptions {
  bool flip_assoc_middle_layer = false;  // middle family dives under instead
  bool flip_swap_signs = false;          // inverted crossings in "swap"
};

// out row of a standard family for a filled in row; -1 when unaddressable.
inline int standard_out_row(const BraidRecipe& r, int in_row) {
  switch (r.family) {
    case BraidRecipe::Family::Shuffle: {
      if (in_row <= r.n) return 2 * in_row - 1;
      if (in_row <= 2 * r.n) return 2 * (in_row - r.n);
      return -1;
    }
    case BraidRecipe::Family::Unshuffle: {
      if (in_row % 2 == 1) {
        int i = (in_row + 1) / 2;
        return i <= r.n ? i : -1;
      }
      int j = in_row / 2;
      return j <= r.m ? r.n + j : -1;
    }
    case BraidRecipe::Family::Assoc: {
      if (in_row % 2 == 0) return 2 * in_row;        // doubling family
      if (in_row % 4 == 1) return (in_row + 1) / 2;  // halving family
      return in_row - 1;                             // middle family, shift by one
    }
    case BraidRecipe::Family::Swap:
      return in_row % 2 == 1 ? in_row + 1 : in_row - 1;
    case BraidRecipe::Family::UnitRight:
      return in_row % 2 == 1 ? (in_row + 1) / 2 : -1;
    case BraidRecipe::Family::UnitLeft:
      return in_row % 2 == 0 ? in_row / 2 : -1;
    case BraidRecipe::Family::Custom:
      for (auto [a, b] : r.routing)
        if (a == in_row) return b;
      return -1;
  }
  return -1;
}

// Crossing layer of the assoc families: higher layers pass over lower ones.
inline int assoc_layer(int in_row, const RecipeOptions& opts) {
  if (in_row % 2 == 0) return 1;
  if (in_row % 4 == 3) return opts.flip_assoc_middle_layer ? 0 : 2;
  return 3;
}

// Letters sorting `arr` (strand ids in current top-to-bottom order) toward
// target ranks; emitted in applied-first order. sign(riser, other) gives the
// letter sign when strand `riser` rises past `other`.
template <typename SignFn>
inline void bubble_letters(std::vector<int>& arr, const std::vector<int>& target,
                           SignFn sign, std::vector<std::pair<int, int>>& word) {
  int w = static_cast<int>(arr.size());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < w; ++p) {
      if (target[static_cast<size_t>(arr[static_cast<size_t>(p)])] >
          target[static_cast<size_t>(arr[static_cast<size_t>(p + 1)])]) {
        int riser = arr[static_cast<size_t>(p + 1)];
        int other = arr[static_cast<size_t>(p)];
        word.emplace_back(p + 1, sign(riser, other));
        std::swap(arr[static_cast<size_t>(p)], arr[static_cast<size_t>(p + 1)]);
        moved = true;
      }
    }
  }
}

inline std::vector<int> ranks_of(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (int v : values) {
    ranks.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  }
  return ranks;
}

inline std::pair<Pattern, TLMorphism> compile_standard(
    Level level, const BraidRecipe& r, const Pattern& x, const RecipeOptions& opts) {
  std::vector<int> in_rows = x.filled_rows();
  std::vector<int> out_rows;
  for (int row : in_rows) {
    int out = standard_out_row(r, row);
    if (out < 0)
      throw std::invalid_argument("pattern fills a row the recipe cannot route: " +
                                  std::to_string(row));
    out_rows.push_back(out);
  }
  int w = static_cast<int>(in_rows.size());
  Pattern out_pattern =
      out_rows.empty() ? Pattern::empty() : Pattern::from_rows(out_rows);
  std::vector<std::pair<int, int>> word;
  std::vector<int> arr(static_cast<size_t>(w));
  for (int i = 0; i < w; ++i) arr[static_cast<size_t>(i)] = i;
  std::vector<int> out_rank = ranks_of(out_rows);
  switch (r.family) {
    case BraidRecipe::Family::Shuffle:
      bubble_letters(arr, out_rank, [](int, int) { return +1; }, word);
      break;
    case BraidRecipe::Family::Unshuffle:
      bubble_letters(arr, out_rank, [](int, int) { return -1; }, word);
      break;
    case BraidRecipe::Family::Assoc: {
      auto sign = [&](int riser, int other) {
        int lr = assoc_layer(in_rows[static_cast<size_t>(riser)], opts);
        int lo = assoc_layer(in_rows[static_cast<size_t>(other)], opts);
        return lr < lo ? +1 : -1;
      };
      bubble_letters(arr, out_rank, sign, word);
      break;
    }
    case BraidRecipe::Family::Swap: {
      // Stage 1: strands from even rows gather above the odd-row strands.
      std::vector<int> stage1(static_cast<size_t>(w));
      int evens = 0;
      for (int i = 0; i < w; ++i)
        if (in_rows[static_cast<size_t>(i)] % 2 == 0) ++evens;
      int e_seen = 0, o_seen = 0;
      for (int i = 0; i < w; ++i) {
        if (in_rows[static_cast<size_t>(i)] % 2 == 0)
          stage1[static_cast<size_t>(i)] = e_seen++;
        else
          stage1[static_cast<size_t>(i)] = evens + o_seen++;
      }
      int letter = opts.flip_swap_signs ? -1 : +1;
      bubble_letters(arr, stage1, [&](int, int) { return letter; }, word);
      // Stage 2: continue from that arrangement to the final row order.
      bubble_letters(arr, out_rank, [&](int, int) { return letter; }, word);
      break;
    }
    case BraidRecipe::Family::UnitRight:
    case BraidRecipe::Family::UnitLeft:
      break;  // order-preserving, no crossings
    case BraidRecipe::Family::Custom:
      throw std::logic_error("custom recipe dispatched to standard path");
  }
  return {out_pattern, braid_morphism(level, w, word)};
}

inline std::pair<Pattern, TLMorphism> compile_custom(Level level,
                                                     const BraidRecipe& r,
                                                     const Pattern& x) {
  // Track simulation: every addressable node rides its track through the
  // slices; crossings count only when both strands survive in x.
  std::vector<int> strand_at(static_cast<size_t>(r.tracks) + 1, -1);
  std::vector<int> in_rows = x.filled_rows();
  for (size_t s = 0; s < in_rows.size(); ++s) {
    int row = in_rows[s];
    if (standard_out_row(r, row) < 0)
      throw std::invalid_argument("pattern fills a row the recipe cannot route: " +
                                  std::to_string(row));
    if (row > r.tracks) throw std::invalid_argument("row beyond track range");
    strand_at[static_cast<size_t>(row)] = static_cast<int>(s);
  }
  int w = static_cast<int>(in_rows.size());
  std::vector<std::pair<int, int>> word;
  for (auto [t, sign] : r.slices) {
    int upper = strand_at[static_cast<size_t>(t)];
    int lower = strand_at[static_cast<size_t>(t) + 1];
    if (upper >= 0 && lower >= 0) {
      int rank = 0;
      for (int tt = 1; tt < t; ++tt)
        if (strand_at[static_cast<size_t>(tt)] >= 0) ++rank;
      word.emplace_back(rank + 1, sign);
    }
    std::swap(strand_at[static_cast<size_t>(t)], strand_at[static_cast<size_t>(t) + 1]);
  }
  std::vector<int> out_rows;
  std::vector<int> final_row(static_cast<size_t>(w), -1);
  for (int t = 1; t <= r.tracks; ++t) {
    int s = strand_at[static_cast<size_t>(t)];
    if (s >= 0) final_row[static_cast<size_t>(s)] = t;
  }
  for (int s = 0; s < w; ++s) {
    int expect = standard_out_row(r, in_rows[static_cast<size_t>(s)]);
    if (final_row[static_cast<size_t>(s)] != expect)
      throw std::invalid_argument("slices do not realize the declared routing");
    out_rows.push_back(expect);
  }
  Pattern out_pattern =
      out_rows.empty() ? Pattern::empty() : Pattern::from_rows(out_rows);
  // Letters were emitted with positions among survivors at emission time but
  // tracked against full-track ranks; recompute morphism on w strands.
  return {out_pattern, braid_morphism(level, w, word)};
}

inline BElement compile_recipe_opts(Level level, const BraidRecipe& r,
                                    const Pattern& x, const RecipeOptions& opts) {
  auto [out_pattern, morphism] =
      r.family == BraidRecipe::Family::Custom
          ? compile_custom(level, r, x)
          : compile_standard(level, r, x, opts);
  return BElement::generator(level, out_pattern, x, morphism);
}

}  // namespace detail

// The partial isometry of a recipe over the in-pattern x: a single matrix
// unit L_{out(x), x}(braid word on the surviving strands). Satisfies
// star(v) v = p_x and v star(v) = p_out(x).
inline BElement compile_recipe(Level level, const BraidRecipe& r, const Pattern& x) {
  return detail::compile_recipe_opts(level, r, x, detail::RecipeOptions{});
}

// Out pattern the recipe assigns to in-pattern x, without building the braid.
inline Pattern recipe_out_pattern(const BraidRecipe& r, const Pattern& x) {
  std::vector<int> rows;
  for (int row : x.filled_rows()) {
    int out = detail::standard_out_row(r, row);
    if (out < 0)
      throw std::invalid_argument("pattern fills a row the recipe cannot route");
    rows.push_back(out);
  }
  return rows.empty() ? Pattern::empty() : Pattern::from_rows(rows);
}

// Inverse of recipe_out_pattern: the in-pattern whose image is y.
inline Pattern recipe_in_pattern(const BraidRecipe& r, const Pattern& y) {
  int max_in = 4 * y.length() + 4;
  std::vector<int> rows;
  std::vector<bool> targets(static_cast<size_t>(y.length()) + 1, false);
  for (int row : y.filled_rows()) targets[static_cast<size_t>(row)] = true;
  int found = 0;
  for (int in_row = 1; in_row <= max_in; ++in_row) {
    int out = detail::standard_out_row(r, in_row);
    if (out >= 1 && out <= y.length() && targets[static_cast<size_t>(out)]) {
      rows.push_back(in_row);
      ++found;
    }
  }
  if (found != y.weight())
    throw std::invalid_argument("pattern is not in the recipe's image");
  return rows.empty() ? Pattern::empty() : Pattern::from_rows(rows);
}

namespace detail {

// Shuffle braid carrying the stacked key pair (a, b) to interleaved rows;
// independent of the block height n as long as both patterns fit.
inline TLMorphism shuffle_braid(Level level, const Pattern& a, const Pattern& b,
                                int forced_n = -1) {
  int n = std::max(a.length(), b.length());
  if (forced_n >= 0) {
    if (forced_n < n) throw std::invalid_argument("block height too small");
    n = forced_n;
  }
  if (n == 0) return TLMorphism::identity(level, 0);
  BraidRecipe r = standard_family("shuffle", n);
  BElement v = compile_recipe(level, r, concat_block(a, b, n));
  return v.terms().begin()->second;
}

inline BElement phi_impl(Level level, const BElement& a, const BElement& b,
                         int forced_n) {
  BElement out(level);
  for (const auto& [ka, ma] : a.terms()) {
    for (const auto& [kb, mb] : b.terms()) {
      TLMorphism b_out = shuffle_braid(level, ka.first, kb.first, forced_n);
      TLMorphism b_in = shuffle_braid(level, ka.second, kb.second, forced_n);
      TLMorphism m = compose(compose(b_out, tensor_stack(ma, mb)), star(b_in));
      out.add_term(interleave(ka.first, kb.first), interleave(ka.second, kb.second), m);
    }
  }
  return out;
}

}  // namespace detail

// Row-interleaving product: sends a pair of elements to the element
// supported on interleaved patterns, conjugating by shuffle braids. The
// optional block height only pads the construction; the result is the same
// for every admissible n.
inline BElement phi_n(const BElement& a, const BElement& b, int n = -1) {
  a.check_level(b);
  return detail::phi_impl(a.level(), a, b, n);
}

// K0 class of a projection: component s counts the rank of the Gram matrix
// of { p L_{x,1^s}(d f^(s)) } over the in-patterns x of p and basis diagrams
// d, which is the multiplicity of the s-th simple.
inline FusionVector k0_class(const BElement& p, int delta_two_bound = 8) {
  Level level = p.level();
  int count = simple_count(level, delta_two_bound);
  std::set<Pattern> in_patterns;
  for (const auto& [k, m] : p.terms()) in_patterns.insert(k.second);
  FusionVector out(static_cast<size_t>(count), 0);
  for (int s = 0; s < count; ++s) {
    std::vector<BElement> family;
    Pattern unit = Pattern::ones(s);
    for (const Pattern& x : in_patterns) {
      int wx = x.weight();
      if ((wx + s) % 2 != 0) continue;
      const TLMorphism& fs = jones_wenzl(level, s);
      for (DiagramId d : enumerate_ids(wx, s)) {
        TLMorphism m = compose(TLMorphism::from_diagram(level, diagram_of(d)), fs);
        BElement xi = p * BElement::generator(level, x, unit, m);
        if (!xi.is_zero()) family.push_back(std::move(xi));
      }
    }
    if (family.empty()) continue;
    std::vector<std::vector<Cyclotomic>> g(
        family.size(),
        std::vector<Cyclotomic>(family.size(), Cyclotomic::zero(level.zeta_order())));
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = 0; j < family.size(); ++j)
        g[i][j] = b_trace(star(family[i]) * family[j]);
    out[static_cast<size_t>(s)] = exact_rank(std::move(g));
  }
  return out;
}

// Finite-stage tower data: block dimensions per simple at each depth and the
// one-step inclusion matrix.
struct BratteliData {
  Level level;
  int bound = 0;                             // simple indices 0..bound
  std::vector<std::vector<long long>> dims;  // [depth][simple]
  std::vector<std::vector<long long>> inclusion;  // [from simple][to simple]
};

inline BratteliData bratteli(Level level, int depth, int delta_two_bound = 8) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  BratteliData data;
  data.level = level;
  int count = simple_count(level, delta_two_bound);
  data.bound = count - 1;
  // Multiplicity of each simple in the full projection on w strands; the
  // pattern positions contribute only the binomial factor.
  std::vector<std::vector<long long>> mult_w(static_cast<size_t>(depth) + 1);
  for (int w = 0; w <= depth; ++w) {
    mult_w[static_cast<size_t>(w)].assign(static_cast<size_t>(count), 0);
    for (int s = 0; s < count; ++s)
      mult_w[static_cast<size_t>(w)][static_cast<size_t>(s)] =
          multiplicity(level, s, TLMorphism::identity(level, w));
  }
  std::vector<std::vector<long long>> binom(static_cast<size_t>(depth) + 1);
  for (int n = 0; n <= depth; ++n) {
    binom[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
    for (int w = 1; w < n; ++w)
      binom[static_cast<size_t>(n)][static_cast<size_t>(w)] =
          binom[static_cast<size_t>(n - 1)][static_cast<size_t>(w - 1)] +
          binom[static_cast<size_t>(n - 1)][static_cast<size_t>(w)];
  }
  data.dims.assign(static_cast<size_t>(depth) + 1,
                   std::vector<long long>(static_cast<size_t>(count), 0));
  for (int n = 0; n <= depth; ++n)
    for (int s = 0; s < count; ++s)
      for (int w = 0; w <= n; ++w)
        data.dims[static_cast<size_t>(n)][static_cast<size_t>(s)] +=
            binom[static_cast<size_t>(n)][static_cast<size_t>(w)] *
            mult_w[static_cast<size_t>(w)][static_cast<size_t>(s)];
  // Adding one addressable node tensors by (empty + strand): the inclusion
  // matrix is identity plus the fusion action of the single strand.
  data.inclusion.assign(static_cast<size_t>(count),
                        std::vector<long long>(static_cast<size_t>(count), 0));
  for (int t = 0; t < count; ++t) {
    data.inclusion[static_cast<size_t>(t)][static_cast<size_t>(t)] += 1;
    TLMorphism pt = tensor_stack(jones_wenzl(level, t), TLMorphism::identity(level, 1));
    for (int s = 0; s < count; ++s)
      data.inclusion[static_cast<size_t>(t)][static_cast<size_t>(s)] +=
          multiplicity(level, s, pt);
  }
  return data;
}

}  // namespace tlj
