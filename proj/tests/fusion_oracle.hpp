#pragma once

#include <stdexcept>
#include <vector>

// Independent fusion-coefficient oracle built purely from walk counting on a
// path graph; shares no code with the engine's Gram-rank route.
namespace tlj_test {

// Number of t-step walks from a to b on the path graph with vertices
// 0..vmax and edges v - v+1.
inline long long walks(int vmax, int a, int b, int t) {
  if (a < 0 || a > vmax || b < 0 || b > vmax) return 0;
  std::vector<long long> cur(vmax + 1, 0);
  cur[a] = 1;
  for (int step = 0; step < t; ++step) {
    std::vector<long long> next(vmax + 1, 0);
    for (int v = 0; v <= vmax; ++v) {
      if (!cur[v]) continue;
      if (v > 0) next[v - 1] += cur[v];
      if (v < vmax) next[v + 1] += cur[v];
    }
    cur = std::move(next);
  }
  return cur[b];
}

// Coefficients of the product s x t over the simple range 0..vmax, by
// peeling walk counts: the t-th strand power decomposes with walk
// multiplicities, and the top component is the t-th simple itself.
inline std::vector<long long> fusion_oracle(int vmax, int s, int t) {
  if (s < 0 || s > vmax || t < 0 || t > vmax)
    throw std::invalid_argument("fusion oracle factor out of range");
  std::vector<std::vector<long long>> memo(t + 1);
  for (int tt = 0; tt <= t; ++tt) {
    std::vector<long long> n(vmax + 1, 0);
    for (int r = 0; r <= vmax; ++r) n[r] = walks(vmax, s, r, tt);
    for (int prev = tt - 2; prev >= 0; prev -= 2) {
      long long w = walks(vmax, 0, prev, tt);
      if (!w) continue;
      for (int r = 0; r <= vmax; ++r) n[r] -= w * memo[prev][r];
    }
    memo[tt] = std::move(n);
  }
  return memo[t];
}

// DeltaTwo variant: no truncation within reach; compute on a long enough
// path and cut the vector to out_size.
inline std::vector<long long> fusion_oracle_delta_two(int s, int t, int out_size) {
  int vmax = s + t + 2;
  if (vmax < out_size) vmax = out_size;
  auto full = fusion_oracle(vmax, s, t);
  full.resize(static_cast<size_t>(out_size));
  return full;
}

}  // namespace tlj_test
