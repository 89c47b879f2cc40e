#include "gluings/face_profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace gluings {

FaceProfile::FaceProfile(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("FaceProfile: needs at least one face");
  starts_.reserve(parts_.size() + 1);
  starts_.push_back(0);
  for (int m : parts_) {
    if (m < 1) throw std::invalid_argument("FaceProfile: every part must be >= 1");
    starts_.push_back(starts_.back() + m);
  }
  if (starts_.back() % 2 != 0) throw std::invalid_argument("FaceProfile: total arc count must be even");
}

int FaceProfile::face_of(int arc) const {
  if (arc < 0 || arc >= total_arcs()) throw std::out_of_range("FaceProfile: arc index out of range");
  auto it = std::upper_bound(starts_.begin(), starts_.end(), arc);
  return static_cast<int>(it - starts_.begin()) - 1;
}

bool FaceProfile::all_parts_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int m) { return m % 2 == 0; });
}

}  // namespace gluings
