#pragma once

#include <functional>
#include <map>
#include <vector>

#include "deltatab/partition.hpp"

namespace deltatab {

/// Bounds for an exhaustive family of instances (m, delta, gamma).
struct SweepLimits {
  int max_m = 4;
  int max_n = 6;
  int max_size = 16;         // |gamma|
  long long max_count = 200;  // |RT|
  bool allow_zero_content = true;
};

struct SweepInstance {
  int m = 0;
  OrientationString delta;
  ContentVector gamma;
  long long count = 0;  // |RT_m(delta, gamma)|
};

/// Calls `visit` on every (m, delta, gamma) within the limits with m | |gamma|
/// and 1 <= |RT| <= max_count.  Chain counts are carried along a depth-first
/// search over letters, so prefixes are shared.
inline void for_each_sweep_instance(const SweepLimits& lim, const std::function<void(const SweepInstance&)>& visit) {
  using State = std::map<Partition, long long>;
  for (int m = 1; m <= lim.max_m; ++m) {
    const int max_width = lim.max_size / m;
    std::vector<Orient> letters;
    ContentVector gamma;
    std::function<void(int, const State&)> rec = [&](int size, const State& state) {
      if (!letters.empty() && size % m == 0) {
        auto it = state.find(rectangle(m, size / m));
        const long long count = it == state.end() ? 0 : it->second;
        if (count >= 1 && count <= lim.max_count) visit({m, OrientationString(letters), gamma, count});
      }
      if (static_cast<int>(letters.size()) == lim.max_n) return;
      for (Orient o : {Orient::H, Orient::V}) {
        const int lo = lim.allow_zero_content ? 0 : 1;
        for (int g = lo; size + g <= lim.max_size; ++g) {
          if (o == Orient::V && g > m) break;
          State next;
          for (const auto& [shape, c] : state)
            for (auto& p : add_strip(shape, g, o, m))
              if (p.length() == 0 || p[0] <= max_width) next[p] += c;
          if (next.empty()) continue;
          letters.push_back(o);
          gamma.push_back(g);
          rec(size + g, next);
          letters.pop_back();
          gamma.pop_back();
        }
      }
    };
    rec(0, State{{Partition{}, 1}});
  }
}

}  // namespace deltatab
