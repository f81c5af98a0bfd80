#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlj {

// A Temperley-Lieb loop parameter: either delta = 2cos(pi/(k+2)) for an
// integer k >= 1, or the limit value delta = 2. All exact arithmetic happens
// in the cyclotomic field Q(zeta_N) with N = zeta_order().
struct Level {
  enum class Kind { RootOfUnity, DeltaTwo };

  Kind kind = Kind::RootOfUnity;
  int k = 1;

  static Level root_of_unity(int k) {
    if (k < 1) throw std::invalid_argument("level k must be >= 1");
    Level l;
    l.kind = Kind::RootOfUnity;
    l.k = k;
    return l;
  }
  static Level delta_two() {
    Level l;
    l.kind = Kind::DeltaTwo;
    l.k = 0;
    return l;
  }

  bool is_delta_two() const { return kind == Kind::DeltaTwo; }
  int zeta_order() const { return is_delta_two() ? 4 : 4 * (k + 2); }

  friend bool operator==(const Level& a, const Level& b) {
    return a.kind == b.kind && a.k == b.k;
  }
  friend bool operator<(const Level& a, const Level& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.k < b.k;
  }

  std::string to_string() const {
    return is_delta_two() ? std::string("delta2") : "k" + std::to_string(k);
  }
};

namespace detail {

using QPoly = std::vector<mpq_class>;  // coefficients, index = power

inline void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of univariate polynomials over Q; remainder must vanish.
inline QPoly poly_divide_exact(QPoly num, const QPoly& den) {
  if (den.empty()) throw std::invalid_argument("division by zero polynomial");
  QPoly q;
  if (num.size() < den.size()) {
    poly_trim(num);
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return q;
  }
  q.assign(num.size() - den.size() + 1, mpq_class(0));
  for (int d = static_cast<int>(num.size()) - 1;
       d >= static_cast<int>(den.size()) - 1; --d) {
    mpq_class c = num[d] / den.back();
    int shift = d - static_cast<int>(den.size()) + 1;
    q[shift] = c;
    if (c != 0) {
      for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
  }
  poly_trim(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

// Cyclotomic polynomial Phi_n, by dividing x^n - 1 by the Phi_d of proper
// divisors. Coefficients are integers; mpq keeps the code uniform.
inline const QPoly& cyclotomic_poly(int n) {
  static std::map<int, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const QPoly&(int)> get = [&](int m) -> const QPoly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    QPoly num(m + 1, mpq_class(0));
    num[0] = -1;
    num[m] = 1;
    QPoly den{mpq_class(1)};
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) {
        const QPoly& pd = get(d);
        QPoly next(den.size() + pd.size() - 1, mpq_class(0));
        for (size_t i = 0; i < den.size(); ++i)
          for (size_t j = 0; j < pd.size(); ++j) next[i + j] += den[i] * pd[j];
        den = std::move(next);
      }
    }
    QPoly phi = poly_divide_exact(std::move(num), den);
    return cache.emplace(m, std::move(phi)).first->second;
  };
  return get(n);
}

// Per-order data: degree and reduction rows expressing zeta^e, 0 <= e < N,
// plus the overflow range needed by products, over the power basis.
struct CycContext {
  int order = 0;
  int deg = 0;
  std::vector<std::vector<mpq_class>> rows;  // rows[e] has size deg
};

inline const CycContext& cyc_context(int order) {
  static std::map<int, CycContext> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1) throw std::invalid_argument("zeta order must be >= 1");
  const QPoly& phi = cyclotomic_poly(order);
  CycContext ctx;
  ctx.order = order;
  ctx.deg = static_cast<int>(phi.size()) - 1;
  int need = std::max(order, 2 * ctx.deg - 1);
  ctx.rows.resize(need);
  for (int e = 0; e < need; ++e) {
    std::vector<mpq_class> row(ctx.deg, mpq_class(0));
    if (e < ctx.deg) {
      row[e] = 1;
    } else {
      // zeta^e = zeta * zeta^(e-1), reducing the overflow term by
      // zeta^deg = -(phi[0] + phi[1] zeta + ...).
      const auto& prev = ctx.rows[e - 1];
      mpq_class top = prev[ctx.deg - 1];
      for (int i = ctx.deg - 1; i >= 1; --i) row[i] = prev[i - 1];
      row[0] = 0;
      if (top != 0) {
        for (int i = 0; i < ctx.deg; ++i) row[i] -= top * phi[i];
      }
    }
    ctx.rows[e] = std::move(row);
  }
  return cache.emplace(order, std::move(ctx)).first->second;
}

}  // namespace detail

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Representation is canonical, so == is coefficientwise.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(0) {}

  static Cyclotomic zero(int order) {
    Cyclotomic a;
    a.order_ = order;
    a.c_.assign(detail::cyc_context(order).deg, mpq_class(0));
    return a;
  }
  static Cyclotomic from_rational(int order, const mpq_class& v) {
    Cyclotomic a = zero(order);
    if (!a.c_.empty()) a.c_[0] = v;
    else if (v != 0) throw std::invalid_argument("bad zeta order");
    return a;
  }
  static Cyclotomic zeta_power(int order, long e) {
    const auto& ctx = detail::cyc_context(order);
    long r = e % order;
    if (r < 0) r += order;
    Cyclotomic a = zero(order);
    a.c_ = ctx.rows[static_cast<size_t>(r)];
    return a;
  }

  int order() const { return order_; }
  const std::vector<mpq_class>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  mpq_class rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return c_.empty() ? mpq_class(0) : c_[0];
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    const auto& ctx = detail::cyc_context(a.order_);
    int deg = ctx.deg;
    std::vector<mpq_class> conv(2 * deg - 1, mpq_class(0));
    for (int i = 0; i < deg; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < deg; ++j) {
        if (b.c_[j] == 0) continue;
        conv[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyclotomic r = zero(a.order_);
    for (int e = 0; e < 2 * deg - 1; ++e) {
      if (conv[e] == 0) continue;
      if (e < deg) {
        r.c_[e] += conv[e];
      } else {
        const auto& row = ctx.rows[e];
        for (int i = 0; i < deg; ++i) r.c_[i] += conv[e] * row[i];
      }
    }
    return r;
  }
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  // Complex conjugation, zeta -> zeta^(-1).
  Cyclotomic conjugate() const {
    const auto& ctx = detail::cyc_context(order_);
    Cyclotomic r = zero(order_);
    for (int i = 0; i < ctx.deg; ++i) {
      if (c_[i] == 0) continue;
      long e = (order_ - i) % order_;
      const auto& row = ctx.rows[static_cast<size_t>(e)];
      for (int j = 0; j < ctx.deg; ++j) r.c_[j] += c_[i] * row[j];
    }
    return r;
  }

  // Multiplicative inverse via Gaussian elimination on the multiplication
  // matrix; exact over Q.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const auto& ctx = detail::cyc_context(order_);
    int n = ctx.deg;
    // Columns: (*this) * zeta^j in the power basis.
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
    for (int j = 0; j < n; ++j) {
      Cyclotomic col = *this * zeta_power(order_, j);
      for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = 1;
    for (int col = 0, row = 0; col < n && row < n; ++col) {
      int piv = -1;
      for (int r2 = row; r2 < n; ++r2)
        if (m[r2][col] != 0) {
          piv = r2;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[row]);
      mpq_class inv_p = 1 / m[row][col];
      for (int c2 = col; c2 <= n; ++c2) m[row][c2] *= inv_p;
      for (int r2 = 0; r2 < n; ++r2) {
        if (r2 == row || m[r2][col] == 0) continue;
        mpq_class f = m[r2][col];
        for (int c2 = col; c2 <= n; ++c2) m[r2][c2] -= f * m[row][c2];
      }
      ++row;
    }
    Cyclotomic r = zero(order_);
    for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
    if (!((*this * r) == from_rational(order_, 1)))
      throw std::logic_error("inverse solve failed");
    return r;
  }

  // "(p(z))/d" with integer coefficients of p and positive integer d; plain
  // rational when the element is one.
  std::string to_string() const {
    if (is_zero()) return "0";
    if (is_rational()) return rational_value().get_str();
    mpz_class den(1);
    for (const auto& x : c_) {
      mpz_class d = x.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      mpz_class num = c_[i].get_num() * (den / c_[i].get_den());
      bool neg = num < 0;
      mpz_class mag = neg ? mpz_class(-num) : num;
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      bool unit = (mag == 1);
      if (i == 0) {
        out << mag.get_str();
      } else {
        if (!unit) out << mag.get_str() << "*";
        out << "z";
        if (i > 1) out << "^" << i;
      }
    }
    if (den == 1) return out.str();
    return "(" + out.str() + ")/" + den.get_str();
  }

 private:
  void check_same(const Cyclotomic& b) const {
    if (order_ != b.order_)
      throw std::invalid_argument("mixed cyclotomic orders");
  }

  int order_;
  std::vector<mpq_class> c_;
};

inline Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic sub(const Cyclotomic& a, const Cyclotomic& b) { return a - b; }
inline Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic neg(const Cyclotomic& a) { return -a; }
inline Cyclotomic inv(const Cyclotomic& a) { return a.inverse(); }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conjugate(); }

// delta as an exact element of Q(zeta_N): q + q^(-1) with q = zeta^2, which
// is 2cos(pi/(k+2)); the DeltaTwo level pins delta = 2 directly.
inline Cyclotomic delta_of_level(const Level& level) {
  int n = level.zeta_order();
  if (level.is_delta_two()) return Cyclotomic::from_rational(n, 2);
  return Cyclotomic::zeta_power(n, 2) + Cyclotomic::zeta_power(n, -2);
}

// The Kauffman crossing coefficient z: zeta_N^(k+3) at a root of unity
// (equivalently i * zeta_N), and i at DeltaTwo. Satisfies z^2 = -q and
// z^2 + z^(-2) + delta = 0.
inline Cyclotomic kauffman_z(const Level& level) {
  int n = level.zeta_order();
  if (level.is_delta_two()) return Cyclotomic::zeta_power(4, 1);
  return Cyclotomic::zeta_power(n, level.k + 3);
}

// Quantum integer [m]: (q^m - q^-m)/(q - q^-1) as a balanced power sum; at
// DeltaTwo the limit value [m] = m.
inline Cyclotomic quantum_integer(const Level& level, long m) {
  int n = level.zeta_order();
  if (m < 0) return -quantum_integer(level, -m);
  if (level.is_delta_two()) return Cyclotomic::from_rational(n, mpq_class(m));
  Cyclotomic r = Cyclotomic::zero(n);
  for (long j = 0; j < m; ++j) r += Cyclotomic::zeta_power(n, 2 * (m - 1 - 2 * j));
  return r;
}

// Floating approximation, evaluating zeta_N at exp(2 pi i / N). precision is
// the number of trustworthy significant digits requested (1..15).
inline std::complex<double> approx_complex(const Cyclotomic& a, int precision = 12) {
  if (precision < 1 || precision > 15)
    throw std::invalid_argument("precision must be in 1..15");
  long double re = 0, im = 0;
  const long double pi = 3.14159265358979323846264338327950288L;
  for (size_t j = 0; j < a.coords().size(); ++j) {
    if (a.coords()[j] == 0) continue;
    long double c = static_cast<long double>(a.coords()[j].get_d());
    long double ang = 2 * pi * static_cast<long double>(j) / a.order();
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace tlj
