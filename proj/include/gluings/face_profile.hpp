#pragma once

#include <compare>
#include <vector>

namespace gluings {

// Ordered side counts (m_1,...,m_K) of K polygons with an even total number
// of arcs. Arc indices are assigned face by face: face i owns the consecutive
// block [block_start(i), block_start(i) + part(i)), and the first arc of each
// block is that face's marked arc.
class FaceProfile {
 public:
  explicit FaceProfile(std::vector<int> parts);

  int face_count() const { return static_cast<int>(parts_.size()); }
  int total_arcs() const { return starts_.back(); }
  int part(int face) const { return parts_[face]; }
  const std::vector<int>& parts() const { return parts_; }

  int block_start(int face) const { return starts_[face]; }
  int face_of(int arc) const;
  int offset_in_face(int arc) const { return arc - starts_[face_of(arc)]; }

  bool all_parts_even() const;

  bool operator==(const FaceProfile& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const FaceProfile& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> starts_;  // prefix sums, size K+1
};

}  // namespace gluings
