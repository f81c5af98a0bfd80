#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlj/diagrams.hpp"
#include "tlj/scalars.hpp"

namespace tlj {

// Crossing sign convention used by braid_letter and every recipe built on
// it: reading a diagram as an operator with inputs on the right, the strand
// of a positive crossing that rises toward row 1 passes UNDER the strand it
// crosses. The positive crossing expands as z^-1 * identity + z * cup-cap.
inline constexpr bool kRisingStrandPassesUnder = true;

// Finite linear combination of (m,n) planar pairings with coefficients in
// Q(zeta_N); the hom spaces of the Temperley-Lieb category at a level.
class TLMorphism {
 public:
  TLMorphism() = default;

  TLMorphism(Level level, int m, int n) : level_(level), m_(m), n_(n) {}

  static TLMorphism from_diagram(Level level, const PlanarPairing& d) {
    TLMorphism x(level, d.m, d.n);
    x.terms_[intern_diagram(d)] =
        Cyclotomic::from_rational(level.zeta_order(), 1);
    return x;
  }
  static TLMorphism from_diagram(Level level, const PlanarPairing& d,
                                 const Cyclotomic& c) {
    TLMorphism x(level, d.m, d.n);
    x.add_term(intern_diagram(d), c);
    return x;
  }
  static TLMorphism identity(Level level, int n) {
    return from_diagram(level, PlanarPairing::identity(n));
  }
  static TLMorphism zero(Level level, int m, int n) {
    return TLMorphism(level, m, n);
  }

  const Level& level() const { return level_; }
  int out_size() const { return m_; }
  int in_size() const { return n_; }
  const std::map<DiagramId, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(DiagramId d, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
    a.check_same_shape(b);
    TLMorphism r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
  }
  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) {
    a.check_same_shape(b);
    TLMorphism r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
  }
  friend TLMorphism operator-(const TLMorphism& a) {
    TLMorphism r(a.level_, a.m_, a.n_);
    for (const auto& [d, c] : a.terms_) r.terms_.emplace(d, -c);
    return r;
  }
  friend TLMorphism operator*(const Cyclotomic& s, const TLMorphism& a) {
    TLMorphism r(a.level_, a.m_, a.n_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : a.terms_) r.add_term(d, s * c);
    return r;
  }

  friend bool operator==(const TLMorphism& a, const TLMorphism& b) {
    return a.level_ == b.level_ && a.m_ == b.m_ && a.n_ == b.n_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const TLMorphism& a, const TLMorphism& b) {
    return !(a == b);
  }

  // Diagnostic text: terms sorted by diagram encoding.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::string, const Cyclotomic*>> parts;
    for (const auto& [d, c] : terms_)
      parts.emplace_back(diagram_of(d).to_string(), &c);
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [text, c] : parts) {
      if (!out.empty()) out += " + ";
      out += "(" + c->to_string() + ")*[" + text + "]";
    }
    return out;
  }

  void check_same_shape(const TLMorphism& b) const {
    if (!(level_ == b.level_) || m_ != b.m_ || n_ != b.n_)
      throw std::invalid_argument("morphism shape or level mismatch");
  }

 private:
  Level level_;
  int m_ = -1;
  int n_ = -1;
  std::map<DiagramId, Cyclotomic> terms_;
};

namespace detail {

inline Cyclotomic delta_power(const Level& level, int e) {
  static std::map<Level, std::vector<Cyclotomic>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& powers = cache[level];
  if (powers.empty())
    powers.push_back(Cyclotomic::from_rational(level.zeta_order(), 1));
  while (static_cast<int>(powers.size()) <= e) {
    powers.push_back(powers.back() * delta_of_level(level));
  }
  return powers[static_cast<size_t>(e)];
}

}  // namespace detail

inline TLMorphism compose(const TLMorphism& a, const TLMorphism& b) {
  if (!(a.level() == b.level()))
    throw std::invalid_argument("compose level mismatch");
  if (a.in_size() != b.out_size())
    throw std::invalid_argument("compose shape mismatch");
  TLMorphism r(a.level(), a.out_size(), b.in_size());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      auto [d, loops] = compose_ids(da, db);
      Cyclotomic c = ca * cb;
      if (loops > 0) c *= detail::delta_power(a.level(), loops);
      r.add_term(d, c);
    }
  }
  return r;
}

inline TLMorphism tensor_stack(const TLMorphism& a, const TLMorphism& b) {
  if (!(a.level() == b.level()))
    throw std::invalid_argument("tensor level mismatch");
  TLMorphism r(a.level(), a.out_size() + b.out_size(), a.in_size() + b.in_size());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms())
      r.add_term(tensor_ids(da, db), ca * cb);
  return r;
}

// Adjoint: mirror the diagrams, conjugate the coefficients.
inline TLMorphism star(const TLMorphism& a) {
  TLMorphism r(a.level(), a.in_size(), a.out_size());
  for (const auto& [d, c] : a.terms()) r.add_term(reflect_id(d), c.conjugate());
  return r;
}

// Markov trace of a square morphism: close every diagram around the outside
// and weight by delta^loops. Normalization: tl_trace(identity(n)) = delta^n.
inline Cyclotomic tl_trace(const TLMorphism& a) {
  if (a.out_size() != a.in_size())
    throw std::invalid_argument("trace needs a square shape");
  Cyclotomic t = Cyclotomic::zero(a.level().zeta_order());
  for (const auto& [d, c] : a.terms())
    t += c * detail::delta_power(a.level(), markov_loops_id(d));
  return t;
}

// Kauffman expansion of a single crossing of strands i, i+1 on n strands:
// sign +1 gives z^-1 * id + z * e_i, sign -1 the conjugate expansion.
inline TLMorphism braid_letter(Level level, int n, int i, int sign) {
  if (i < 1 || i >= n) throw std::invalid_argument("crossing index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +-1");
  Cyclotomic z = kauffman_z(level);
  Cyclotomic zi = z.inverse();
  TLMorphism r(level, n, n);
  r = TLMorphism::from_diagram(level, PlanarPairing::identity(n),
                               sign > 0 ? zi : z);
  r.add_term(intern_diagram(generators(n, i)), sign > 0 ? z : zi);
  return r;
}

// Product of crossing letters. word[0] acts first (nearest the input), so
// the result is letter(word.back()) o ... o letter(word[0]).
inline TLMorphism braid_morphism(Level level, int n,
                                 const std::vector<std::pair<int, int>>& word) {
  TLMorphism r = TLMorphism::identity(level, n);
  for (const auto& [i, sign] : word) r = compose(braid_letter(level, n, i, sign), r);
  return r;
}

// Jones-Wenzl projection on n strands (n = 0 gives the empty projection).
// Defined while the quantum integers [1..n] are nonzero: n <= k+1 at a root
// of unity, every n at DeltaTwo.
inline const TLMorphism& jones_wenzl(Level level, int n) {
  if (n < 0) throw std::invalid_argument("jones_wenzl needs n >= 0");
  if (!level.is_delta_two() && n > level.k + 1)
    throw std::domain_error("jones_wenzl undefined at this level for n = " +
                            std::to_string(n));
  static std::map<std::pair<Level, int>, TLMorphism> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(level, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::function<const TLMorphism&(int)> build = [&](int s) -> const TLMorphism& {
    auto k2 = std::make_pair(level, s);
    auto jt = cache.find(k2);
    if (jt != cache.end()) return jt->second;
    TLMorphism f(level, s, s);
    if (s <= 1) {
      f = TLMorphism::identity(level, s);
    } else {
      const TLMorphism& prev = build(s - 1);
      TLMorphism ext = tensor_stack(prev, TLMorphism::identity(level, 1));
      Cyclotomic num = quantum_integer(level, s - 1);
      Cyclotomic den = quantum_integer(level, s);
      TLMorphism e = TLMorphism::from_diagram(level, generators(s, s - 1));
      f = ext - (num * den.inverse()) * compose(compose(ext, e), ext);
    }
    return cache.emplace(k2, std::move(f)).first->second;
  };
  return build(n);
}

// Exact rank by fraction-free elimination; valid over the field.
inline int exact_rank(std::vector<std::vector<Cyclotomic>> a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  Cyclotomic prev;
  bool have_prev = false;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        Cyclotomic num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        a[r][c] = have_prev ? num * prev.inverse() : num;
      }
      a[r][col] = Cyclotomic::zero(a[r][col].order());
    }
    prev = a[rank][col];
    have_prev = true;
    ++rank;
  }
  return rank;
}

// Gram matrix of the trace pairing <x, y> = tl_trace(star(x) o y) on the
// diagram basis of the (m,n) hom space, indexed in canonical enumeration
// order.
inline std::vector<std::vector<Cyclotomic>> gram_matrix(Level level, int m, int n) {
  const auto& basis = enumerate_ids(m, n);
  size_t sz = basis.size();
  std::vector<std::vector<Cyclotomic>> g(
      sz, std::vector<Cyclotomic>(sz, Cyclotomic::zero(level.zeta_order())));
  for (size_t i = 0; i < sz; ++i) {
    for (size_t j = 0; j < sz; ++j) {
      auto [d, loops] = compose_ids(reflect_id(basis[i]), basis[j]);
      g[i][j] = detail::delta_power(level, loops + markov_loops_id(d));
    }
  }
  return g;
}

inline int gram_rank(Level level, int m, int n) {
  return exact_rank(gram_matrix(level, m, n));
}

// Trace-radical membership: x is in the radical iff tl_trace(x o d) vanishes
// for every basis diagram d of the opposite shape.
inline bool radical_contains(const TLMorphism& x) {
  for (DiagramId d : enumerate_ids(x.in_size(), x.out_size())) {
    TLMorphism y =
        compose(x, TLMorphism::from_diagram(x.level(), diagram_of(d)));
    if (!tl_trace(y).is_zero()) return false;
  }
  return true;
}

// Equality in the quotient by the trace radical.
inline bool quotient_equal(const TLMorphism& x, const TLMorphism& y) {
  x.check_same_shape(y);
  return radical_contains(x - y);
}

}  // namespace tlj
