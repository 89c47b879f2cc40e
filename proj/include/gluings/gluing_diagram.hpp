#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gluings/face_profile.hpp"

namespace gluings {

// One marked gluing: a face profile plus a fixed-point-free involution on the
// arc indices 0..2N-1 pairing each arc with its opposite. Immutable after
// construction; equality is marked-map isomorphism.
class GluingDiagram {
 public:
  GluingDiagram(FaceProfile profile, std::vector<int> pairing);

  const FaceProfile& profile() const { return profile_; }
  const std::vector<int>& pairing() const { return pairing_; }
  int partner(int arc) const { return pairing_[arc]; }
  int total_arcs() const { return profile_.total_arcs(); }
  int edge_count() const { return profile_.total_arcs() / 2; }
  int face_count() const { return profile_.face_count(); }

  // Text form: `profile=m1,...,mK; pairing=(a1 b1)...` with 1-based arcs,
  // pairs printed (low high) in increasing order of the low arc.
  std::string to_text() const;
  static GluingDiagram parse(std::string_view text);

  bool operator==(const GluingDiagram& o) const {
    return profile_ == o.profile_ && pairing_ == o.pairing_;
  }
  std::strong_ordering operator<=>(const GluingDiagram& o) const {
    if (auto c = profile_ <=> o.profile_; c != 0) return c;
    return pairing_ <=> o.pairing_;
  }

 private:
  FaceProfile profile_;
  std::vector<int> pairing_;
};

}  // namespace gluings
