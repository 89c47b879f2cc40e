#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gluings/enumerator.hpp"
#include "gluings/map_ops.hpp"

using namespace gluings;

namespace {

GluingDiagram make(std::vector<int> parts, std::vector<int> pairing) {
  return GluingDiagram(FaceProfile(std::move(parts)), std::move(pairing));
}

std::vector<GluingDiagram> all_diagrams(std::vector<int> parts, bool bicolored = false) {
  EnumerationTask task;
  task.profile = FaceProfile(std::move(parts));
  task.bicolored = bicolored;
  std::vector<GluingDiagram> out;
  enumerate_diagrams(task, [&](const GluingDiagram& d) { out.push_back(d); });
  return out;
}

}  // namespace

TEST_CASE("face profile validation") {
  CHECK_THROWS_AS(FaceProfile({}), std::invalid_argument);
  CHECK_THROWS_AS(FaceProfile({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FaceProfile({1, 2}), std::invalid_argument);  // odd total
  const FaceProfile p({1, 3, 2});
  CHECK(p.face_count() == 3);
  CHECK(p.total_arcs() == 6);
  CHECK(p.block_start(1) == 1);
  CHECK(p.face_of(0) == 0);
  CHECK(p.face_of(3) == 1);
  CHECK(p.offset_in_face(3) == 2);
  CHECK(!p.all_parts_even());
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(make({2}, {0, 1}), std::invalid_argument);     // fixed point
  CHECK_THROWS_AS(make({2}, {1}), std::invalid_argument);        // size mismatch
  CHECK_THROWS_AS(make({4}, {1, 0, 3, 3}), std::invalid_argument);
  CHECK_NOTHROW(make({2}, {1, 0}));
}

TEST_CASE("face permutation has one consecutive cycle per face") {
  CHECK(face_permutation(FaceProfile({1, 1})) == std::vector<int>{0, 1});
  CHECK(face_permutation(FaceProfile({4})) == std::vector<int>{1, 2, 3, 0});
  CHECK(face_permutation(FaceProfile({2, 2})) == std::vector<int>{1, 0, 3, 2});
}

TEST_CASE("vertex permutation") {
  CHECK(vertex_permutation(make({2}, {1, 0})) == std::vector<int>{0, 1});
  // classical torus square: one vertex
  CHECK(vertex_permutation(make({4}, {2, 3, 0, 1})) == std::vector<int>{3, 0, 1, 2});
  CHECK(vertex_count(make({4}, {2, 3, 0, 1})) == 1);
  CHECK(vertex_permutation(make({1, 1}, {1, 0})) == std::vector<int>{1, 0});
  CHECK(vertex_count(make({1, 1}, {1, 0})) == 1);
}

TEST_CASE("genus") {
  CHECK(genus(make({2}, {1, 0})) == 0);
  CHECK(genus(make({4}, {2, 3, 0, 1})) == 1);
  CHECK(genus(make({4}, {1, 0, 3, 2})) == 0);
  CHECK_THROWS_AS(genus(make({2, 2}, {1, 0, 3, 2})), std::invalid_argument);  // disconnected
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(make({2, 2}, {1, 0, 3, 2})));
  CHECK(is_connected(make({2, 2}, {3, 2, 1, 0})));
  CHECK(is_connected(make({2}, {1, 0})));
}

TEST_CASE("arc colors") {
  const GluingDiagram d22 = make({2, 2}, {3, 2, 1, 0});
  CHECK(arc_color(d22, 0) == ArcColor::White);
  CHECK(arc_color(d22, 3) == ArcColor::Black);
  CHECK(arc_color(make({4}, {2, 3, 0, 1}), 2) == ArcColor::White);
  CHECK_THROWS_AS(arc_color(make({1, 3}, {1, 0, 3, 2}), 0), std::invalid_argument);
}

TEST_CASE("bicolored validity") {
  CHECK(is_bicolored_valid(make({2, 2}, {3, 2, 1, 0})));
  CHECK_FALSE(is_bicolored_valid(make({2, 2}, {2, 3, 0, 1})));
  CHECK(is_bicolored_valid(make({2}, {1, 0})));
  CHECK_THROWS_AS(is_bicolored_valid(make({1, 3}, {1, 0, 3, 2})), std::invalid_argument);
}

TEST_CASE("text form round trip") {
  const GluingDiagram d = make({2, 2}, {3, 2, 1, 0});
  CHECK(d.to_text() == "profile=2,2; pairing=(1 4)(2 3)");
  CHECK(GluingDiagram::parse(d.to_text()) == d);
  CHECK(GluingDiagram::parse("profile=4; pairing=(1 3)(2 4)").to_text() ==
        "profile=4; pairing=(1 3)(2 4)");

  // parse . print is the identity on every enumerated diagram
  for (auto parts : {std::vector<int>{6}, {2, 4}, {1, 2, 3}, {1, 1, 4}}) {
    for (const GluingDiagram& d2 : all_diagrams(parts)) {
      CHECK(GluingDiagram::parse(d2.to_text()) == d2);
    }
  }
}

TEST_CASE("text form rejects malformed input") {
  CHECK_THROWS_AS(GluingDiagram::parse("pairing=(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(GluingDiagram::parse("profile=2; pairing=(1 3)"), std::invalid_argument);
  CHECK_THROWS_AS(GluingDiagram::parse("profile=2; pairing=(1 2)(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(GluingDiagram::parse("profile=4; pairing=(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(GluingDiagram::parse("profile=2; pairing=(1 2) junk"), std::invalid_argument);
}

TEST_CASE("sigma composed with iota recovers tau") {
  for (auto parts : {std::vector<int>{4}, {1, 3}, {2, 2}, {6}, {2, 4}, {1, 2, 3}}) {
    const std::vector<int> tau = face_permutation(FaceProfile(parts));
    for (const GluingDiagram& d : all_diagrams(parts)) {
      const std::vector<int> sigma = vertex_permutation(d);
      for (int a = 0; a < d.total_arcs(); ++a) CHECK(sigma[d.partner(a)] == tau[a]);
    }
  }
}

TEST_CASE("Euler quantity is even and at most 2 on connected diagrams") {
  for (auto parts : {std::vector<int>{6}, {2, 4}, {1, 2, 3}, {8}}) {
    for (const GluingDiagram& d : all_diagrams(parts)) {
      if (!is_connected(d)) continue;
      const int chi = vertex_count(d) - d.edge_count() + d.face_count();
      CHECK(chi <= 2);
      CHECK((2 - chi) % 2 == 0);
    }
  }
}

TEST_CASE("sigma preserves colors on bicolored-valid diagrams") {
  for (auto parts : {std::vector<int>{6}, {2, 4}, {2, 2, 2}}) {
    for (const GluingDiagram& d : all_diagrams(parts, /*bicolored=*/true)) {
      REQUIRE(is_bicolored_valid(d));
      const std::vector<int> sigma = vertex_permutation(d);
      for (int a = 0; a < d.total_arcs(); ++a) CHECK(arc_color(d, sigma[a]) == arc_color(d, a));
    }
  }
}

TEST_CASE("single-face pairings number (2N-1)!!") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(genus_spectrum(FaceProfile({2 * n})).total == perfect_matchings(2 * n));
  }
}
