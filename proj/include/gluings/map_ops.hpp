#pragma once

#include <vector>

#include "gluings/gluing_diagram.hpp"

namespace gluings {

// Face rotation tau: each face's block is one cycle, advancing within the
// block and wrapping from the last arc back to the marked one.
std::vector<int> face_permutation(const FaceProfile& profile);

// Vertex rotation sigma = tau . iota (apply the pairing first). Its cycles
// are the vertices of the glued map.
std::vector<int> vertex_permutation(const GluingDiagram& d);

int vertex_count(const GluingDiagram& d);

// True iff <iota, tau> acts transitively on the arcs.
bool is_connected(const GluingDiagram& d);

// Genus from V - N + K = 2 - 2g. Throws on disconnected input; callers that
// need per-component genera must split first.
int genus(const GluingDiagram& d);

enum class ArcColor { White, Black };

// For all-even profiles: the marked arc of each face is white and colors
// alternate around the face.
ArcColor arc_color(const GluingDiagram& d, int arc);

// True iff the pairing glues every white arc to a black one.
bool is_bicolored_valid(const GluingDiagram& d);

}  // namespace gluings
