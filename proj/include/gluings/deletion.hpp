#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gluings/bigint.hpp"
#include "gluings/enumerator.hpp"
#include "gluings/gluing_diagram.hpp"

namespace gluings {

// The four possible shapes of deleting the edge carrying mark 1:
//   DifferentFaces - its two arcs lie in different faces (faces merge),
//   SuccessiveArcs - they are successive arcs of face 1 (a spur is clipped),
//   HandleCut      - unsuccessive in face 1, remainder connected (face splits,
//                    genus drops),
//   Split          - unsuccessive in face 1, remainder disconnected (ordered
//                    pair of maps).
enum class DeletionCase { DifferentFaces, SuccessiveArcs, HandleCut, Split };

std::string_view to_string(DeletionCase c);

struct DeletionOutcome {
  DeletionCase kind;
  GluingDiagram first;
  std::optional<GluingDiagram> second;  // engaged only for Split; order is significant
};

// Needs a connected diagram with more than one edge.
DeletionCase classify_deletion(const GluingDiagram& d);

// Applies the deletion and re-encodes the successor(s) canonically: faces
// renumbered per case (merged face becomes face 1; a split-off face gets
// number K+1; in the Split case the component holding the arcs after the
// marked one comes first), each face's block starting at its marked arc.
// With bicolored=true, marks landing on black arcs move to the next (white)
// arc, so successors are again marked bicolored maps.
DeletionOutcome delete_marked_edge(const GluingDiagram& d, bool bicolored = false);

struct AuditViolation {
  std::string witness;  // successor (pair) in diagram text form
  BigInt expected;
  BigInt actual;
};

struct MultiplicityAudit {
  std::string name;
  BigInt checked{0};  // distinct successors (or pairs) examined
  std::vector<AuditViolation> violations;
  bool passed() const { return violations.empty(); }
};

struct AuditReport {
  int g = 0;
  int edges = 0;
  int faces = 0;
  bool bicolored = false;
  BigInt inputs{0};
  std::array<BigInt, 4> case_totals{};  // indexed by DeletionCase
  std::vector<MultiplicityAudit> audits;
  bool passed() const;
};

// Deletes the marked edge of every connected genus-g diagram in the class and
// checks the exact preimage multiplicities case by case: a merge successor
// whose face 1 has M arcs must appear (M+1)(M+2)(K-1)/2 times, a spur
// successor exactly twice, a handle successor exactly once, a split pair
// exactly C(K-1, K1-1) times; surjectivity onto the full successor classes is
// checked as well.
AuditReport audit_deletion_multiplicities(int g, int edges, int faces,
                                          int max_arcs = kDefaultMaxArcs);

// Bicolored variant on the sphere with two faces: merge successors appear
// N(N-1)/2 times, spur successors (after the mark-color normalization) twice,
// split pairs once, and no handle case can occur.
AuditReport audit_bicolored_deletion(int edges, int max_arcs = kDefaultMaxArcs);

std::string audit_report_json(const AuditReport& report);

}  // namespace gluings
