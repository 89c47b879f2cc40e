#pragma once

#include <functional>
#include <vector>

namespace gluings {

// Streams every ordered composition of `total` into `parts` positive parts in
// lexicographic order. With even_only, every part is even. An infeasible
// request yields an empty stream.
void for_each_composition(int total, int parts, bool even_only,
                          const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> list_compositions(int total, int parts, bool even_only);

}  // namespace gluings
