#include "gluings/enumerator.hpp"

#include <cstdint>
#include <stdexcept>

#include "gluings/compositions.hpp"
#include "gluings/map_ops.hpp"

namespace gluings {

namespace {

void check_slice(const WorkerSlice& slice) {
  if (slice.total < 1 || slice.index < 0 || slice.index >= slice.total)
    throw std::invalid_argument("worker slice: need 0 <= index < total");
}

// Canonical stream of fixed-point-free involutions: always pair the smallest
// unpaired arc with each admissible larger partner, recursing. The branch
// taken for arc 0 is the worker split point.
template <class Visit>
void for_each_pairing(int n, const std::vector<std::uint8_t>* color, const WorkerSlice& slice,
                      Visit&& visit) {
  if (n == 0) {
    if (slice.index == 0) {
      std::vector<int> empty;
      visit(empty);
    }
    return;
  }
  std::vector<int> p(n, -1);
  auto rec = [&](auto&& self, int from) -> void {
    int i = from;
    while (i < n && p[i] >= 0) ++i;
    if (i == n) {
      visit(const_cast<const std::vector<int>&>(p));
      return;
    }
    const bool split_here = (i == 0 && slice.total > 1);
    int branch = 0;
    for (int j = i + 1; j < n; ++j) {
      if (p[j] >= 0) continue;
      if (color && (*color)[i] == (*color)[j]) continue;
      if (split_here && branch++ % slice.total != slice.index) continue;
      p[i] = j;
      p[j] = i;
      self(self, i + 1);
      p[i] = -1;
      p[j] = -1;
    }
  };
  rec(rec, 0);
}

int sigma_cycle_count(const std::vector<int>& tau, const std::vector<int>& p,
                      std::vector<char>& seen) {
  const int n = static_cast<int>(tau.size());
  seen.assign(n, 0);
  int cycles = 0;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++cycles;
    for (int b = a; !seen[b]; b = tau[p[b]]) seen[b] = 1;
  }
  return cycles;
}

bool arcs_connected(const std::vector<int>& tau, const std::vector<int>& p,
                    std::vector<char>& seen, std::vector<int>& stack) {
  const int n = static_cast<int>(tau.size());
  seen.assign(n, 0);
  stack.clear();
  stack.push_back(0);
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (int b : {p[a], tau[a]}) {
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == n;
}

std::vector<std::uint8_t> parity_colors(const FaceProfile& profile, unsigned flip_mask = 0) {
  std::vector<std::uint8_t> color(profile.total_arcs());
  for (int f = 0; f < profile.face_count(); ++f) {
    const std::uint8_t flip = (flip_mask >> f) & 1u;
    const int start = profile.block_start(f);
    for (int i = 0; i < profile.part(f); ++i) color[start + i] = (i % 2) ^ flip;
  }
  return color;
}

// Counts pairings of one profile whose glued map is connected with exactly
// v_target vertices.
std::uint64_t count_profile(const FaceProfile& profile, const std::vector<std::uint8_t>* color,
                            int v_target, const WorkerSlice& slice) {
  const std::vector<int> tau = face_permutation(profile);
  std::vector<char> seen;
  std::vector<int> stack;
  std::uint64_t hits = 0;
  for_each_pairing(profile.total_arcs(), color, slice, [&](const std::vector<int>& p) {
    if (!arcs_connected(tau, p, seen, stack)) return;
    if (sigma_cycle_count(tau, p, seen) == v_target) ++hits;
  });
  return hits;
}

void check_bound(int total_arcs, int max_arcs, const char* who) {
  if (total_arcs > max_arcs)
    throw std::invalid_argument(std::string(who) +
                                ": class exceeds the exhaustion bound, raise max_arcs explicitly");
}

}  // namespace

void enumerate_diagrams(const EnumerationTask& task,
                        const std::function<void(const GluingDiagram&)>& fn) {
  check_slice(task.slice);
  auto run_profile = [&](const FaceProfile& profile) {
    std::vector<std::uint8_t> color;
    if (task.bicolored) {
      if (!profile.all_parts_even())
        throw std::invalid_argument("enumerate_diagrams: bicolored constraint needs all-even parts");
      color = parity_colors(profile);
    }
    for_each_pairing(profile.total_arcs(), task.bicolored ? &color : nullptr, task.slice,
                     [&](const std::vector<int>& p) { fn(GluingDiagram(profile, p)); });
  };
  if (task.profile) {
    run_profile(*task.profile);
    return;
  }
  if (task.faces < 1) throw std::invalid_argument("enumerate_diagrams: need at least one face");
  const bool even_only = task.even_parts_only || task.bicolored;
  for_each_composition(2 * task.edges, task.faces, even_only,
                       [&](const std::vector<int>& parts) { run_profile(FaceProfile(parts)); });
}

GenusSpectrum genus_spectrum(const FaceProfile& profile, bool bicolored, const WorkerSlice& slice) {
  check_slice(slice);
  std::vector<std::uint8_t> color;
  if (bicolored) {
    if (!profile.all_parts_even())
      throw std::invalid_argument("genus_spectrum: bicolored constraint needs all-even parts");
    color = parity_colors(profile);
  }
  const std::vector<int> tau = face_permutation(profile);
  const int edges = profile.total_arcs() / 2;
  const int faces = profile.face_count();
  std::vector<char> seen;
  std::vector<int> stack;
  GenusSpectrum s;
  for_each_pairing(profile.total_arcs(), bicolored ? &color : nullptr, slice,
                   [&](const std::vector<int>& p) {
                     s.total += 1;
                     if (!arcs_connected(tau, p, seen, stack)) {
                       s.disconnected += 1;
                       return;
                     }
                     const int chi = sigma_cycle_count(tau, p, seen) - edges + faces;
                     if (chi > 2 || (2 - chi) % 2 != 0)
                       throw std::logic_error("genus_spectrum: Euler characteristic out of range");
                     s.connected[(2 - chi) / 2] += 1;
                   });
  return s;
}

BigInt count_eps(int g, int edges, int faces, const CountOptions& opts) {
  check_slice(opts.slice);
  if (g < 0 || edges < 0 || faces < 1) throw std::invalid_argument("count_eps: bad class parameters");
  if (edges == 0) return (opts.slice.index == 0 && g == 0 && faces == 1) ? 1 : 0;
  const int n = 2 * edges;
  const int v_target = edges - faces + 2 - 2 * g;
  if (n < faces || v_target <= 0) return 0;
  check_bound(n, opts.max_arcs, "count_eps");
  BigInt tally = 0;
  for_each_composition(n, faces, false, [&](const std::vector<int>& parts) {
    tally += count_profile(FaceProfile(parts), nullptr, v_target, opts.slice);
  });
  return tally;
}

BigInt count_eps_tilde(int total_arcs, int face1_arcs, int faces, const CountOptions& opts) {
  check_slice(opts.slice);
  // positivity conditions: all parameters >= 1, even arc total, room for the
  // other faces
  if (total_arcs < 1 || face1_arcs < 1 || faces < 1) return 0;
  if (total_arcs % 2 != 0) return 0;
  if (total_arcs < face1_arcs + faces - 1) return 0;
  const int v_target = total_arcs / 2 - faces + 2;
  if (v_target <= 0) return 0;
  check_bound(total_arcs, opts.max_arcs, "count_eps_tilde");
  BigInt tally = 0;
  if (faces == 1) {
    if (face1_arcs != total_arcs) return 0;
    tally += count_profile(FaceProfile({face1_arcs}), nullptr, v_target, opts.slice);
    return tally;
  }
  for_each_composition(total_arcs - face1_arcs, faces - 1, false,
                       [&](const std::vector<int>& rest) {
                         std::vector<int> parts;
                         parts.reserve(rest.size() + 1);
                         parts.push_back(face1_arcs);
                         parts.insert(parts.end(), rest.begin(), rest.end());
                         tally += count_profile(FaceProfile(parts), nullptr, v_target, opts.slice);
                       });
  return tally;
}

BigInt count_bicolored(int g, int edges, int faces, const CountOptions& opts) {
  check_slice(opts.slice);
  if (g < 0 || edges < 0 || faces < 1)
    throw std::invalid_argument("count_bicolored: bad class parameters");
  if (edges == 0) return (opts.slice.index == 0 && g == 0 && faces == 1) ? 1 : 0;
  const int n = 2 * edges;
  const int v_target = edges - faces + 2 - 2 * g;
  if (n < 2 * faces || v_target <= 0) return 0;
  check_bound(n, opts.max_arcs, "count_bicolored");
  BigInt tally = 0;
  for_each_composition(n, faces, true, [&](const std::vector<int>& parts) {
    const FaceProfile profile(parts);
    const std::vector<std::uint8_t> color = parity_colors(profile);
    tally += count_profile(profile, &color, v_target, opts.slice);
  });
  return tally;
}

BigInt count_quasimarked(int g, int edges, int faces, const CountOptions& opts) {
  check_slice(opts.slice);
  if (g < 0 || edges < 1 || faces < 1)
    throw std::invalid_argument("count_quasimarked: bad class parameters");
  const int n = 2 * edges;
  const int v_target = edges - faces + 2 - 2 * g;
  if (n < 2 * faces || v_target <= 0) return 0;
  check_bound(n, opts.max_arcs, "count_quasimarked");
  if (faces > 20) throw std::invalid_argument("count_quasimarked: too many faces for 2^K colorings");
  BigInt tally = 0;
  for_each_composition(n, faces, true, [&](const std::vector<int>& parts) {
    const FaceProfile profile(parts);
    for (unsigned mask = 0; mask < (1u << faces); ++mask) {
      const std::vector<std::uint8_t> color = parity_colors(profile, mask);
      tally += count_profile(profile, &color, v_target, opts.slice);
    }
  });
  return tally;
}

}  // namespace gluings
