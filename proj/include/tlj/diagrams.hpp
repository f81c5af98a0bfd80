#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tlj {

// Planar pairing of m left and n right boundary points of a rectangle: a
// noncrossing perfect matching in the circular boundary order. Circular
// positions run down the left side then up the right side:
//   left i  (1..m) -> i - 1
//   right j (1..n) -> m + (n - j)
// partner[] is an involution without fixed points over these positions.
struct PlanarPairing {
  int m = 0;
  int n = 0;
  std::vector<int> partner;

  int total() const { return m + n; }

  int left_position(int i) const { return i - 1; }
  int right_position(int j) const { return m + (n - j); }

  // (is_right, 1-based index) of a circular position.
  std::pair<bool, int> side_of(int pos) const {
    if (pos < m) return {false, pos + 1};
    return {true, n - (pos - m)};
  }

  static PlanarPairing identity(int n) {
    PlanarPairing p;
    p.m = n;
    p.n = n;
    p.partner.resize(2 * n);
    for (int i = 1; i <= n; ++i) {
      p.partner[p.left_position(i)] = p.right_position(i);
      p.partner[p.right_position(i)] = p.left_position(i);
    }
    return p;
  }

  // Validating factory: involution, no fixed points, noncrossing.
  static PlanarPairing checked(int m, int n, std::vector<int> partner) {
    PlanarPairing p;
    p.m = m;
    p.n = n;
    p.partner = std::move(partner);
    int t = m + n;
    if (m < 0 || n < 0 || static_cast<int>(p.partner.size()) != t)
      throw std::invalid_argument("partner vector size mismatch");
    for (int i = 0; i < t; ++i) {
      if (p.partner[i] < 0 || p.partner[i] >= t || p.partner[i] == i ||
          p.partner[p.partner[i]] != i)
        throw std::invalid_argument("partner vector is not a fixed-point-free involution");
    }
    std::vector<int> stack;
    for (int i = 0; i < t; ++i) {
      if (p.partner[i] > i) {
        stack.push_back(i);
      } else {
        if (stack.empty() || p.partner[i] != stack.back())
          throw std::invalid_argument("pairing is not planar");
        stack.pop_back();
      }
    }
    return p;
  }

  bool is_identity() const {
    return m == n && *this == identity(n);
  }

  friend bool operator==(const PlanarPairing& a, const PlanarPairing& b) {
    return a.m == b.m && a.n == b.n && a.partner == b.partner;
  }
  friend bool operator<(const PlanarPairing& a, const PlanarPairing& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.partner < b.partner;
  }

  // Canonical text: pairs sorted by first endpoint in the order
  // L1 < ... < Lm < R1 < ... < Rn, each pair "La-Lb" / "La-Rb" / "Ra-Rb".
  std::string to_string() const {
    auto name = [&](int pos) {
      auto [right, idx] = side_of(pos);
      return (right ? "R" : "L") + std::to_string(idx);
    };
    auto order_key = [&](int pos) {
      auto [right, idx] = side_of(pos);
      return (right ? 1 : 0) * (m + n + 1) + idx;
    };
    std::vector<int> order(total());
    for (int i = 0; i < total(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return order_key(a) < order_key(b); });
    std::string out;
    std::vector<bool> seen(total(), false);
    for (int pos : order) {
      if (seen[pos]) continue;
      seen[pos] = seen[partner[pos]] = true;
      if (!out.empty()) out += ",";
      out += name(pos) + "-" + name(partner[pos]);
    }
    return out;
  }
};

using DiagramId = int;

namespace detail {

struct PairingKey {
  int m;
  int n;
  std::vector<int> partner;
  bool operator==(const PairingKey&) const = default;
};

struct PairingKeyHash {
  size_t operator()(const PairingKey& k) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<uint64_t>(k.m));
    mix(static_cast<uint64_t>(k.n));
    for (int x : k.partner) mix(static_cast<uint64_t>(x));
    return static_cast<size_t>(h);
  }
};

inline uint64_t id_pair_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}

// Process-wide interning store with memoized diagram operations. Interned
// ids are stable for the process lifetime; the deque keeps references valid.
class DiagramStore {
 public:
  static DiagramStore& instance() {
    static DiagramStore s;
    return s;
  }

  DiagramId intern(const PlanarPairing& p) {
    PairingKey key{p.m, p.n, p.partner};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(pool_.size());
    pool_.push_back(p);
    ids_.emplace(std::move(key), id);
    return id;
  }

  const PlanarPairing& get(DiagramId id) {
    std::lock_guard<std::mutex> lock(mu_);
    return pool_.at(static_cast<size_t>(id));
  }

  std::pair<DiagramId, int> compose(DiagramId a, DiagramId b) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = compose_.find(id_pair_key(a, b));
      if (it != compose_.end()) return it->second;
    }
    auto r = compose_values(get(a), get(b));
    std::pair<DiagramId, int> out{intern(r.first), r.second};
    std::lock_guard<std::mutex> lock(mu_);
    compose_.emplace(id_pair_key(a, b), out);
    return out;
  }

  DiagramId tensor(DiagramId a, DiagramId b) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = tensor_.find(id_pair_key(a, b));
      if (it != tensor_.end()) return it->second;
    }
    DiagramId out = intern(tensor_values(get(a), get(b)));
    std::lock_guard<std::mutex> lock(mu_);
    tensor_.emplace(id_pair_key(a, b), out);
    return out;
  }

  DiagramId reflect(DiagramId a) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = reflect_.find(a);
      if (it != reflect_.end()) return it->second;
    }
    DiagramId out = intern(reflect_values(get(a)));
    std::lock_guard<std::mutex> lock(mu_);
    reflect_.emplace(a, out);
    return out;
  }

  int markov(DiagramId a) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = markov_.find(a);
      if (it != markov_.end()) return it->second;
    }
    int out = markov_values(get(a));
    std::lock_guard<std::mutex> lock(mu_);
    markov_.emplace(a, out);
    return out;
  }

  const std::vector<DiagramId>& enumerate(int m, int n) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = enum_.find({m, n});
      if (it != enum_.end()) return it->second;
    }
    std::vector<PlanarPairing> all = enumerate_values(m, n);
    std::sort(all.begin(), all.end());
    std::vector<DiagramId> ids;
    ids.reserve(all.size());
    for (const auto& p : all) ids.push_back(intern(p));
    std::lock_guard<std::mutex> lock(mu_);
    return enum_.emplace(std::make_pair(m, n), std::move(ids)).first->second;
  }

  static std::pair<PlanarPairing, int> compose_values(const PlanarPairing& a,
                                                      const PlanarPairing& b);
  static PlanarPairing tensor_values(const PlanarPairing& a,
                                     const PlanarPairing& b);
  static PlanarPairing reflect_values(const PlanarPairing& a);
  static int markov_values(const PlanarPairing& a);
  static std::vector<PlanarPairing> enumerate_values(int m, int n);

 private:
  std::deque<PlanarPairing> pool_;
  std::unordered_map<PairingKey, DiagramId, PairingKeyHash> ids_;
  std::unordered_map<uint64_t, std::pair<DiagramId, int>> compose_;
  std::unordered_map<uint64_t, DiagramId> tensor_;
  std::unordered_map<DiagramId, DiagramId> reflect_;
  std::unordered_map<DiagramId, int> markov_;
  std::map<std::pair<int, int>, std::vector<DiagramId>> enum_;
  std::mutex mu_;
};

inline std::pair<PlanarPairing, int> DiagramStore::compose_values(
    const PlanarPairing& a, const PlanarPairing& b) {
  if (a.n != b.m) throw std::invalid_argument("compose shape mismatch");
  int m = a.m, n = a.n, p = b.n;
  // Node ids: a-left 0..m-1, interface m..m+n-1, b-right m+n..m+n+p-1.
  // Each node carries up to two incident strand ends, tagged by which factor
  // they come from; interface nodes have one of each.
  const int kNone = -1;
  std::vector<int> edge_a(m + n + p, kNone), edge_b(m + n + p, kNone);
  auto node_of_a = [&](int pos) {
    auto [right, idx] = a.side_of(pos);
    return right ? m + (idx - 1) : idx - 1;
  };
  auto node_of_b = [&](int pos) {
    auto [right, idx] = b.side_of(pos);
    return right ? m + n + (idx - 1) : m + (idx - 1);
  };
  for (int pos = 0; pos < a.total(); ++pos) {
    int u = node_of_a(pos), v = node_of_a(a.partner[pos]);
    edge_a[u] = v;
  }
  for (int pos = 0; pos < b.total(); ++pos) {
    int u = node_of_b(pos), v = node_of_b(b.partner[pos]);
    edge_b[u] = v;
  }
  std::vector<bool> seen(m + n + p, false);
  PlanarPairing c;
  c.m = m;
  c.n = p;
  c.partner.assign(m + p, 0);
  auto c_position = [&](int node) {
    // Outer node back to a circular position of the composite.
    return node < m ? node : m + (p - (node - m - n + 1));
  };
  auto walk_from = [&](int start) {
    bool via_a = start < m;  // left outer ends start on an a-strand
    int cur = start;
    seen[cur] = true;
    while (true) {
      cur = via_a ? edge_a[cur] : edge_b[cur];
      seen[cur] = true;
      bool outer = cur < m || cur >= m + n;
      if (outer) return cur;
      via_a = !via_a;
    }
  };
  for (int start = 0; start < m + n + p; ++start) {
    bool outer = start < m || start >= m + n;
    if (!outer || seen[start]) continue;
    int end = walk_from(start);
    int pu = c_position(start), pv = c_position(end);
    c.partner[pu] = pv;
    c.partner[pv] = pu;
  }
  int loops = 0;
  for (int u = m; u < m + n; ++u) {
    if (seen[u]) continue;
    ++loops;
    int cur = u;
    bool via_a = true;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = via_a ? edge_a[cur] : edge_b[cur];
      via_a = !via_a;
    }
  }
  return {std::move(c), loops};
}

inline PlanarPairing DiagramStore::tensor_values(const PlanarPairing& a,
                                                 const PlanarPairing& b) {
  PlanarPairing c;
  c.m = a.m + b.m;
  c.n = a.n + b.n;
  c.partner.assign(c.total(), 0);
  auto map_a = [&](int pos) {
    auto [right, idx] = a.side_of(pos);
    return right ? c.right_position(idx) : c.left_position(idx);
  };
  auto map_b = [&](int pos) {
    auto [right, idx] = b.side_of(pos);
    return right ? c.right_position(a.n + idx) : c.left_position(a.m + idx);
  };
  for (int pos = 0; pos < a.total(); ++pos) {
    int u = map_a(pos), v = map_a(a.partner[pos]);
    c.partner[u] = v;
    c.partner[v] = u;
  }
  for (int pos = 0; pos < b.total(); ++pos) {
    int u = map_b(pos), v = map_b(b.partner[pos]);
    c.partner[u] = v;
    c.partner[v] = u;
  }
  return c;
}

inline PlanarPairing DiagramStore::reflect_values(const PlanarPairing& a) {
  PlanarPairing c;
  c.m = a.n;
  c.n = a.m;
  c.partner.assign(c.total(), 0);
  auto map = [&](int pos) {
    auto [right, idx] = a.side_of(pos);
    return right ? c.left_position(idx) : c.right_position(idx);
  };
  for (int pos = 0; pos < a.total(); ++pos) {
    int u = map(pos), v = map(a.partner[pos]);
    c.partner[u] = v;
    c.partner[v] = u;
  }
  return c;
}

inline int DiagramStore::markov_values(const PlanarPairing& a) {
  if (a.m != a.n) throw std::invalid_argument("markov closure needs a square shape");
  int n = a.n;
  // 2-regular graph: pairing edges plus closure arcs left i - right i.
  std::vector<int> close_edge(2 * n);
  for (int i = 1; i <= n; ++i) {
    int u = a.left_position(i), v = a.right_position(i);
    close_edge[u] = v;
    close_edge[v] = u;
  }
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int cur = s;
    bool via_pairing = true;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = via_pairing ? a.partner[cur] : close_edge[cur];
      via_pairing = !via_pairing;
    }
  }
  return loops;
}

inline std::vector<PlanarPairing> DiagramStore::enumerate_values(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative shape");
  if ((m + n) % 2 != 0)
    throw std::invalid_argument("no pairings of odd total boundary size");
  int t = m + n;
  // Noncrossing matchings of a contiguous interval factor as: the first
  // point pairs with some q at odd offset, splitting into an inner and an
  // outer interval matched independently.
  using Arcs = std::vector<std::pair<int, int>>;
  std::function<std::vector<Arcs>(int, int)> gen = [&](int lo, int hi) {
    std::vector<Arcs> res;
    if (lo > hi) {
      res.emplace_back();
      return res;
    }
    for (int q = lo + 1; q <= hi; q += 2) {
      auto inner = gen(lo + 1, q - 1);
      auto outer = gen(q + 1, hi);
      for (const Arcs& in : inner) {
        for (const Arcs& ou : outer) {
          Arcs arcs;
          arcs.reserve(1 + in.size() + ou.size());
          arcs.emplace_back(lo, q);
          arcs.insert(arcs.end(), in.begin(), in.end());
          arcs.insert(arcs.end(), ou.begin(), ou.end());
          res.push_back(std::move(arcs));
        }
      }
    }
    return res;
  };
  std::vector<PlanarPairing> out;
  for (const Arcs& arcs : gen(0, t - 1)) {
    PlanarPairing p;
    p.m = m;
    p.n = n;
    p.partner.assign(t, -1);
    for (auto [u, v] : arcs) {
      p.partner[u] = v;
      p.partner[v] = u;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

inline DiagramId intern_diagram(const PlanarPairing& p) {
  return detail::DiagramStore::instance().intern(p);
}
inline const PlanarPairing& diagram_of(DiagramId id) {
  return detail::DiagramStore::instance().get(id);
}
inline std::pair<DiagramId, int> compose_ids(DiagramId a, DiagramId b) {
  return detail::DiagramStore::instance().compose(a, b);
}
inline DiagramId tensor_ids(DiagramId a, DiagramId b) {
  return detail::DiagramStore::instance().tensor(a, b);
}
inline DiagramId reflect_id(DiagramId a) {
  return detail::DiagramStore::instance().reflect(a);
}
inline int markov_loops_id(DiagramId a) {
  return detail::DiagramStore::instance().markov(a);
}
inline const std::vector<DiagramId>& enumerate_ids(int m, int n) {
  return detail::DiagramStore::instance().enumerate(m, n);
}

// All planar (m,n) pairings in canonical order (sorted by partner encoding).
inline std::vector<PlanarPairing> enumerate(int m, int n) {
  std::vector<PlanarPairing> out;
  for (DiagramId id : enumerate_ids(m, n)) out.push_back(diagram_of(id));
  return out;
}

// compose(a, b) glues a's right (input) boundary onto b's left (output)
// boundary: the result is "a after b". Returns the composite and the number
// of closed loops created.
inline std::pair<PlanarPairing, int> compose(const PlanarPairing& a,
                                             const PlanarPairing& b) {
  auto [id, loops] = compose_ids(intern_diagram(a), intern_diagram(b));
  return {diagram_of(id), loops};
}

// a stacked on top of b.
inline PlanarPairing tensor_stack(const PlanarPairing& a, const PlanarPairing& b) {
  return diagram_of(tensor_ids(intern_diagram(a), intern_diagram(b)));
}

// Left-right mirror; the diagram part of the * operation.
inline PlanarPairing reflect(const PlanarPairing& a) {
  return diagram_of(reflect_id(intern_diagram(a)));
}

// Number of loops after closing a square diagram around the outside.
inline int markov_close(const PlanarPairing& a) {
  return markov_loops_id(intern_diagram(a));
}

inline PlanarPairing identity_diagram(int n) {
  return PlanarPairing::identity(n);
}

// Temperley-Lieb cup-cap generator e_i on n strands, i in 1..n-1.
inline PlanarPairing generators(int n, int i) {
  if (n < 2 || i < 1 || i >= n)
    throw std::invalid_argument("generator index out of range");
  PlanarPairing p;
  p.m = n;
  p.n = n;
  p.partner.assign(2 * n, 0);
  auto link = [&](int u, int v) {
    p.partner[u] = v;
    p.partner[v] = u;
  };
  for (int j = 1; j <= n; ++j) {
    if (j == i) {
      link(p.left_position(i), p.left_position(i + 1));
      link(p.right_position(i), p.right_position(i + 1));
    } else if (j != i + 1) {
      link(p.left_position(j), p.right_position(j));
    }
  }
  return p;
}

}  // namespace tlj
