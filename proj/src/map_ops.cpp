#include "gluings/map_ops.hpp"

#include <stdexcept>

namespace gluings {

std::vector<int> face_permutation(const FaceProfile& profile) {
  std::vector<int> tau(profile.total_arcs());
  for (int f = 0; f < profile.face_count(); ++f) {
    const int start = profile.block_start(f);
    const int len = profile.part(f);
    for (int i = 0; i < len; ++i) tau[start + i] = start + (i + 1) % len;
  }
  return tau;
}

std::vector<int> vertex_permutation(const GluingDiagram& d) {
  std::vector<int> tau = face_permutation(d.profile());
  std::vector<int> sigma(tau.size());
  for (int a = 0; a < static_cast<int>(tau.size()); ++a) sigma[a] = tau[d.partner(a)];
  return sigma;
}

int vertex_count(const GluingDiagram& d) {
  std::vector<int> sigma = vertex_permutation(d);
  std::vector<char> seen(sigma.size(), 0);
  int cycles = 0;
  for (int a = 0; a < static_cast<int>(sigma.size()); ++a) {
    if (seen[a]) continue;
    ++cycles;
    for (int b = a; !seen[b]; b = sigma[b]) seen[b] = 1;
  }
  return cycles;
}

bool is_connected(const GluingDiagram& d) {
  const int n = d.total_arcs();
  std::vector<int> tau = face_permutation(d.profile());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : {d.partner(a), tau[a]}) {
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == n;
}

int genus(const GluingDiagram& d) {
  if (!is_connected(d))
    throw std::invalid_argument("genus: diagram is disconnected, Euler's formula needs one component");
  const int v = vertex_count(d);
  const int chi = v - d.edge_count() + d.face_count();
  if (chi > 2 || (2 - chi) % 2 != 0)
    throw std::logic_error("genus: V - N + K out of range, internal inconsistency");
  return (2 - chi) / 2;
}

ArcColor arc_color(const GluingDiagram& d, int arc) {
  if (!d.profile().all_parts_even())
    throw std::invalid_argument("arc_color: profile has an odd face, no bicoloring exists");
  return d.profile().offset_in_face(arc) % 2 == 0 ? ArcColor::White : ArcColor::Black;
}

bool is_bicolored_valid(const GluingDiagram& d) {
  if (!d.profile().all_parts_even())
    throw std::invalid_argument("is_bicolored_valid: profile has an odd face");
  for (int a = 0; a < d.total_arcs(); ++a) {
    if (d.profile().offset_in_face(a) % 2 == d.profile().offset_in_face(d.partner(a)) % 2) return false;
  }
  return true;
}

}  // namespace gluings
