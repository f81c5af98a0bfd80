#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlj/diagrams.hpp"

namespace tlj_test {

// Build a pairing from the same "L1-L2,R1-R2" text that to_string emits.
inline tlj::PlanarPairing pp(int m, int n, const std::string& pairs) {
  std::vector<int> partner(m + n, -1);
  tlj::PlanarPairing shape;
  shape.m = m;
  shape.n = n;
  auto pos_of = [&](const std::string& tok) {
    if (tok.size() < 2) throw std::invalid_argument("bad endpoint " + tok);
    int idx = std::stoi(tok.substr(1));
    if (tok[0] == 'L') return shape.left_position(idx);
    if (tok[0] == 'R') return shape.right_position(idx);
    throw std::invalid_argument("bad endpoint " + tok);
  };
  std::stringstream ss(pairs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad pair " + item);
    int u = pos_of(item.substr(0, dash));
    int v = pos_of(item.substr(dash + 1));
    partner[u] = v;
    partner[v] = u;
  }
  return tlj::PlanarPairing::checked(m, n, std::move(partner));
}

}  // namespace tlj_test
