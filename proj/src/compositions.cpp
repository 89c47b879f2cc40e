#include "gluings/compositions.hpp"

#include <stdexcept>

namespace gluings {

void for_each_composition(int total, int parts, bool even_only,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (parts < 1) throw std::invalid_argument("for_each_composition: parts must be >= 1");
  const int step = even_only ? 2 : 1;
  if (total < parts * step || (even_only && total % 2 != 0)) return;

  std::vector<int> buf(parts);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      buf[pos] = remaining;
      fn(buf);
      return;
    }
    const int tail = parts - 1 - pos;
    for (int v = step; remaining - v >= tail * step; v += step) {
      buf[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

std::vector<std::vector<int>> list_compositions(int total, int parts, bool even_only) {
  std::vector<std::vector<int>> out;
  for_each_composition(total, parts, even_only, [&](const std::vector<int>& c) { out.push_back(c); });
  return out;
}

}  // namespace gluings
