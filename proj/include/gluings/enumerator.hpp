#pragma once

#include <functional>
#include <map>
#include <optional>

#include "gluings/bigint.hpp"
#include "gluings/gluing_diagram.hpp"

namespace gluings {

// Default refusal point for exhaustive runs: 16 arcs means 15!! = 2,027,025
// involutions per profile. Override explicitly to go further.
inline constexpr int kDefaultMaxArcs = 16;

// Deterministic split of the search space: worker w takes every slice.total-th
// branch of the first pairing choice. The per-worker streams partition the
// full stream, so partial counts merge by addition.
struct WorkerSlice {
  int index = 0;
  int total = 1;
};

struct EnumerationTask {
  std::optional<FaceProfile> profile;  // fixed profile, or ...
  int edges = 0;                       // ... all compositions of 2*edges
  int faces = 0;                       //     into `faces` positive parts
  bool even_parts_only = false;
  bool bicolored = false;  // implies even parts; prunes to white-black pairings
  WorkerSlice slice;
};

void enumerate_diagrams(const EnumerationTask& task,
                        const std::function<void(const GluingDiagram&)>& fn);

struct GenusSpectrum {
  std::map<int, BigInt> connected;  // genus -> exact count
  BigInt disconnected{0};
  BigInt total{0};
};

GenusSpectrum genus_spectrum(const FaceProfile& profile, bool bicolored = false,
                             const WorkerSlice& slice = {});

struct CountOptions {
  WorkerSlice slice;
  int max_arcs = kDefaultMaxArcs;
};

// Connected gluings of `faces` polygons with 2*edges sides total into a
// surface of genus g. eps(0,0,1) = 1 by convention.
BigInt count_eps(int g, int edges, int faces, const CountOptions& opts = {});

// Genus-0 count over profiles whose face 1 has exactly face1_arcs arcs;
// total_arcs counts arcs, not edges. Zero whenever the positivity conditions
// (all parameters >= 1, total even, total >= face1_arcs + faces - 1) fail.
BigInt count_eps_tilde(int total_arcs, int face1_arcs, int faces, const CountOptions& opts = {});

// Bicolored variant: all-even profiles, white-to-black pairings only.
BigInt count_bicolored(int g, int edges, int faces, const CountOptions& opts = {});

// Bicolored gluings with the mark-color constraint dropped: each face's
// marked arc may independently be white or black (2^K colorings per profile).
BigInt count_quasimarked(int g, int edges, int faces, const CountOptions& opts = {});

}  // namespace gluings
