#include "gluings/deletion.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "gluings/map_ops.hpp"

namespace gluings {

std::string_view to_string(DeletionCase c) {
  switch (c) {
    case DeletionCase::DifferentFaces:
      return "different-faces";
    case DeletionCase::SuccessiveArcs:
      return "successive-arcs";
    case DeletionCase::HandleCut:
      return "handle-cut";
    case DeletionCase::Split:
      return "split";
  }
  return "?";
}

namespace {

// Scratch view of one deletion: the marked arc e1 = 0, its opposite e1p, and
// the successor's face rotation obtained by skipping the deleted pair.
struct Reduction {
  const GluingDiagram& d;
  std::vector<int> tau;
  int e1;
  int e1p;

  explicit Reduction(const GluingDiagram& diagram)
      : d(diagram), tau(face_permutation(diagram.profile())), e1(0), e1p(diagram.partner(0)) {}

  bool gone(int a) const { return a == e1 || a == e1p; }

  int next(int a) const {
    int t = tau[a];
    while (gone(t)) t = tau[d.partner(t)];
    return t;
  }

  // Component of `start` among the surviving arcs, under the pairing and the
  // reduced rotation.
  std::vector<char> component_of(int start) const {
    std::vector<char> in(d.total_arcs(), 0);
    std::vector<int> stack{start};
    in[start] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : {d.partner(a), next(a)}) {
        if (!in[b]) {
          in[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return in;
  }
};

DeletionCase classify_impl(const Reduction& r) {
  if (r.d.profile().face_of(r.e1p) != 0) return DeletionCase::DifferentFaces;
  if (r.tau[r.e1] == r.e1p || r.tau[r.e1p] == r.e1) return DeletionCase::SuccessiveArcs;
  const std::vector<char> comp = r.component_of(r.next(r.e1));
  int reached = 0;
  for (char c : comp) reached += c;
  return reached == r.d.total_arcs() - 2 ? DeletionCase::HandleCut : DeletionCase::Split;
}

void check_deletable(const GluingDiagram& d) {
  if (d.edge_count() <= 1)
    throw std::invalid_argument("delete_marked_edge: needs more than one edge");
  if (!is_connected(d)) throw std::invalid_argument("delete_marked_edge: diagram must be connected");
}

GluingDiagram encode_faces(const Reduction& r, const std::vector<int>& marks) {
  std::vector<int> order;
  std::vector<int> parts;
  std::vector<int> old_to_new(r.d.total_arcs(), -1);
  for (int m : marks) {
    int len = 0;
    int a = m;
    do {
      old_to_new[a] = static_cast<int>(order.size());
      order.push_back(a);
      ++len;
      a = r.next(a);
    } while (a != m);
    parts.push_back(len);
  }
  std::vector<int> pairing(order.size());
  for (int idx = 0; idx < static_cast<int>(order.size()); ++idx)
    pairing[idx] = old_to_new[r.d.partner(order[idx])];
  return GluingDiagram(FaceProfile(std::move(parts)), std::move(pairing));
}

void require_shape(const GluingDiagram& got, int edges, int faces, int g, const char* what) {
  if (got.edge_count() != edges || got.face_count() != faces || genus(got) != g)
    throw std::logic_error(std::string("delete_marked_edge: successor shape violated in ") + what);
}

}  // namespace

DeletionCase classify_deletion(const GluingDiagram& d) {
  check_deletable(d);
  return classify_impl(Reduction(d));
}

DeletionOutcome delete_marked_edge(const GluingDiagram& d, bool bicolored) {
  check_deletable(d);
  if (bicolored && !is_bicolored_valid(d))
    throw std::invalid_argument("delete_marked_edge: not a valid bicolored gluing");

  const Reduction r(d);
  const FaceProfile& p = d.profile();
  const int n_edges = d.edge_count();
  const int n_faces = p.face_count();
  const int g_in = (2 - (vertex_count(d) - n_edges + n_faces)) / 2;
  const DeletionCase kind = classify_impl(r);

  // A mark that landed on a black arc moves to the next (white) one.
  auto normalize_marks = [&](std::vector<int>& marks) {
    if (!bicolored) return;
    for (int& m : marks)
      if (p.offset_in_face(m) % 2 != 0) m = r.next(m);
  };

  auto other_face_marks = [&](auto&& keep) {
    std::vector<int> marks;
    for (int f = 1; f < n_faces; ++f)
      if (keep(f)) marks.push_back(p.block_start(f));
    return marks;
  };

  switch (kind) {
    case DeletionCase::DifferentFaces: {
      const int j = p.face_of(r.e1p);
      int mark;
      if (p.block_start(j) != r.e1p) {
        mark = p.block_start(j);  // the arc that carried mark j
      } else if (p.part(0) > 1) {
        mark = r.tau[r.e1];
      } else {
        // face 1 is a 1-gon glued into face j; a 1-gon face j as well would
        // contradict connectedness with N > 1
        if (p.part(j) <= 1)
          throw std::logic_error("delete_marked_edge: two 1-gons glued in a connected map, N > 1");
        mark = r.tau[r.e1p];
      }
      std::vector<int> marks{mark};
      for (int m : other_face_marks([&](int f) { return f != j; })) marks.push_back(m);
      normalize_marks(marks);
      GluingDiagram out = encode_faces(r, marks);
      require_shape(out, n_edges - 1, n_faces - 1, g_in, "different-faces");
      return {kind, std::move(out), std::nullopt};
    }
    case DeletionCase::SuccessiveArcs: {
      if (r.tau[r.e1] == r.e1p && r.tau[r.e1p] == r.e1)
        throw std::logic_error("delete_marked_edge: two-arc face 1 in a connected map, N > 1");
      // the arc of the pair beginning at the degree-1 end is the successor of
      // the other one; its own successor takes the mark
      const int mark = r.tau[r.e1] == r.e1p ? r.tau[r.e1p] : r.tau[r.e1];
      std::vector<int> marks{mark};
      for (int m : other_face_marks([](int) { return true; })) marks.push_back(m);
      normalize_marks(marks);
      GluingDiagram out = encode_faces(r, marks);
      require_shape(out, n_edges - 1, n_faces, g_in, "successive-arcs");
      return {kind, std::move(out), std::nullopt};
    }
    case DeletionCase::HandleCut: {
      std::vector<int> marks{r.tau[r.e1]};
      for (int m : other_face_marks([](int) { return true; })) marks.push_back(m);
      marks.push_back(r.tau[r.e1p]);
      normalize_marks(marks);
      GluingDiagram out = encode_faces(r, marks);
      require_shape(out, n_edges - 1, n_faces + 1, g_in - 1, "handle-cut");
      return {kind, std::move(out), std::nullopt};
    }
    case DeletionCase::Split: {
      const std::vector<char> comp = r.component_of(r.next(r.e1));
      std::vector<int> marks_first{r.tau[r.e1]};
      for (int m : other_face_marks([&](int f) { return comp[p.block_start(f)]; }))
        marks_first.push_back(m);
      std::vector<int> marks_second{r.tau[r.e1p]};
      for (int m : other_face_marks([&](int f) { return !comp[p.block_start(f)]; }))
        marks_second.push_back(m);
      normalize_marks(marks_first);
      normalize_marks(marks_second);
      GluingDiagram first = encode_faces(r, marks_first);
      GluingDiagram second = encode_faces(r, marks_second);
      if (first.edge_count() < 1 || second.edge_count() < 1 ||
          first.edge_count() + second.edge_count() != n_edges - 1 ||
          first.face_count() + second.face_count() != n_faces + 1 ||
          genus(first) + genus(second) != g_in)
        throw std::logic_error("delete_marked_edge: successor shape violated in split");
      return {kind, std::move(first), std::move(second)};
    }
  }
  throw std::logic_error("delete_marked_edge: unreachable");
}

namespace {

using DiagramPair = std::pair<GluingDiagram, GluingDiagram>;

// Every connected diagram of the class, in enumeration order.
class ClassTable {
 public:
  explicit ClassTable(bool bicolored) : bicolored_(bicolored) {}

  const std::vector<GluingDiagram>& get(int g, int edges, int faces) {
    auto key = std::tuple(g, edges, faces);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<GluingDiagram> out;
    if (edges >= 1 && faces >= 1 && 2 * edges >= faces && edges - faces + 2 - 2 * g > 0) {
      EnumerationTask task;
      task.edges = edges;
      task.faces = faces;
      task.even_parts_only = bicolored_;
      task.bicolored = bicolored_;
      enumerate_diagrams(task, [&](const GluingDiagram& d) {
        if (!is_connected(d)) return;
        if (vertex_count(d) - edges + faces == 2 - 2 * g) out.push_back(d);
      });
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  bool bicolored_;
  std::map<std::tuple<int, int, int>, std::vector<GluingDiagram>> cache_;
};

void check_group(MultiplicityAudit& audit, const std::vector<GluingDiagram>& expected_class,
                 const std::map<GluingDiagram, long long>& observed,
                 const std::function<BigInt(const GluingDiagram&)>& expected_count) {
  std::set<GluingDiagram> in_class;
  for (const GluingDiagram& s : expected_class) {
    in_class.insert(s);
    const BigInt want = expected_count(s);
    auto it = observed.find(s);
    const BigInt got = it == observed.end() ? 0 : BigInt(it->second);
    audit.checked += 1;
    if (got != want) audit.violations.push_back({s.to_text(), want, got});
  }
  for (const auto& [s, got] : observed)
    if (!in_class.count(s)) audit.violations.push_back({s.to_text(), 0, BigInt(got)});
}

void forbid_group(MultiplicityAudit& audit, const std::map<GluingDiagram, long long>& observed) {
  for (const auto& [s, got] : observed) audit.violations.push_back({s.to_text(), 0, BigInt(got)});
}

std::string pair_text(const DiagramPair& p) {
  return p.first.to_text() + " | " + p.second.to_text();
}

// Case-4 check: expected ordered pairs range over all admissible splits of
// edges, faces and genus; each must appear `pair_multiplicity(K1)` times.
void check_split_group(MultiplicityAudit& audit, ClassTable& classes, int g, int edges, int faces,
                       const std::map<DiagramPair, long long>& observed,
                       const std::function<BigInt(int)>& pair_multiplicity) {
  std::map<DiagramPair, long long> unmatched = observed;
  for (int k1 = 1; k1 <= faces; ++k1) {
    const int k2 = faces + 1 - k1;
    if (k2 < 1) continue;
    for (int n1 = 1; n1 <= edges - 2; ++n1) {
      const int n2 = edges - 1 - n1;
      for (int g1 = 0; g1 <= g; ++g1) {
        const auto& left = classes.get(g1, n1, k1);
        if (left.empty()) continue;
        const auto& right = classes.get(g - g1, n2, k2);
        if (right.empty()) continue;
        const BigInt want = pair_multiplicity(k1);
        for (const GluingDiagram& a : left) {
          for (const GluingDiagram& b : right) {
            DiagramPair key{a, b};
            auto it = observed.find(key);
            const BigInt got = it == observed.end() ? 0 : BigInt(it->second);
            audit.checked += 1;
            if (got != want) audit.violations.push_back({pair_text(key), want, got});
            unmatched.erase(key);
          }
        }
      }
    }
  }
  for (const auto& [key, got] : unmatched)
    audit.violations.push_back({pair_text(key), 0, BigInt(got)});
}

struct DeletionTally {
  std::map<GluingDiagram, long long> merge, spur, handle;
  std::map<DiagramPair, long long> split;
};

DeletionTally run_deletions(AuditReport& report, const std::vector<GluingDiagram>& inputs,
                            bool bicolored) {
  DeletionTally tally;
  for (const GluingDiagram& d : inputs) {
    report.inputs += 1;
    DeletionOutcome out = delete_marked_edge(d, bicolored);
    report.case_totals[static_cast<int>(out.kind)] += 1;
    switch (out.kind) {
      case DeletionCase::DifferentFaces:
        ++tally.merge[out.first];
        break;
      case DeletionCase::SuccessiveArcs:
        ++tally.spur[out.first];
        break;
      case DeletionCase::HandleCut:
        ++tally.handle[out.first];
        break;
      case DeletionCase::Split:
        ++tally.split[{out.first, *out.second}];
        break;
    }
  }
  return tally;
}

}  // namespace

bool AuditReport::passed() const {
  for (const auto& a : audits)
    if (!a.passed()) return false;
  return true;
}

AuditReport audit_deletion_multiplicities(int g, int edges, int faces, int max_arcs) {
  if (g < 0 || edges < 2 || faces < 1)
    throw std::invalid_argument("audit_deletion_multiplicities: needs g >= 0, edges >= 2, faces >= 1");
  if (2 * edges > max_arcs)
    throw std::invalid_argument("audit_deletion_multiplicities: class exceeds the exhaustion bound");

  AuditReport report;
  report.g = g;
  report.edges = edges;
  report.faces = faces;

  ClassTable classes(false);
  const DeletionTally tally = run_deletions(report, classes.get(g, edges, faces), false);

  MultiplicityAudit merge{"merge-multiplicity"};
  if (faces >= 2) {
    check_group(merge, classes.get(g, edges - 1, faces - 1), tally.merge,
                [&](const GluingDiagram& s) {
                  const BigInt m = s.profile().part(0);
                  return exact_div((m + 1) * (m + 2) * (faces - 1), 2);
                });
  } else {
    forbid_group(merge, tally.merge);  // no second face to merge with
  }

  MultiplicityAudit spur{"spur-multiplicity"};
  check_group(spur, classes.get(g, edges - 1, faces), tally.spur,
              [](const GluingDiagram&) { return BigInt(2); });

  MultiplicityAudit handle{"handle-multiplicity"};
  if (g == 0) {
    forbid_group(handle, tally.handle);  // a handle cut needs positive genus
  } else {
    check_group(handle, classes.get(g - 1, edges - 1, faces + 1), tally.handle,
                [](const GluingDiagram&) { return BigInt(1); });
  }

  MultiplicityAudit split{"split-multiplicity"};
  check_split_group(split, classes, g, edges, faces, tally.split,
                    [&](int k1) { return binomial(faces - 1, k1 - 1); });

  report.audits = {std::move(merge), std::move(spur), std::move(handle), std::move(split)};
  return report;
}

AuditReport audit_bicolored_deletion(int edges, int max_arcs) {
  if (edges < 2) throw std::invalid_argument("audit_bicolored_deletion: needs edges >= 2");
  if (2 * edges > max_arcs)
    throw std::invalid_argument("audit_bicolored_deletion: class exceeds the exhaustion bound");

  AuditReport report;
  report.g = 0;
  report.edges = edges;
  report.faces = 2;
  report.bicolored = true;

  ClassTable classes(true);
  const DeletionTally tally = run_deletions(report, classes.get(0, edges, 2), true);

  MultiplicityAudit merge{"merge-multiplicity"};
  const BigInt merge_count = exact_div(BigInt(edges) * (edges - 1), 2);
  check_group(merge, classes.get(0, edges - 1, 1), tally.merge,
              [&](const GluingDiagram&) { return merge_count; });

  MultiplicityAudit spur{"spur-multiplicity"};
  check_group(spur, classes.get(0, edges - 1, 2), tally.spur,
              [](const GluingDiagram&) { return BigInt(2); });

  MultiplicityAudit handle{"handle-absence"};
  forbid_group(handle, tally.handle);

  MultiplicityAudit split{"split-multiplicity"};
  check_split_group(split, classes, 0, edges, 2, tally.split, [](int) { return BigInt(1); });

  report.audits = {std::move(merge), std::move(spur), std::move(handle), std::move(split)};
  return report;
}

std::string audit_report_json(const AuditReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["class"] = {{"g", report.g},
                {"edges", report.edges},
                {"faces", report.faces},
                {"bicolored", report.bicolored}};
  j["inputs"] = to_decimal(report.inputs);
  nlohmann::json cases = nlohmann::json::object();
  for (int c = 0; c < 4; ++c)
    cases[std::string(to_string(static_cast<DeletionCase>(c)))] = to_decimal(report.case_totals[c]);
  j["cases"] = std::move(cases);
  j["passed"] = report.passed();
  nlohmann::json audits = nlohmann::json::array();
  for (const auto& a : report.audits) {
    nlohmann::json ja;
    ja["name"] = a.name;
    ja["checked"] = to_decimal(a.checked);
    ja["passed"] = a.passed();
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : a.violations)
      vs.push_back({{"witness", v.witness},
                    {"expected", to_decimal(v.expected)},
                    {"actual", to_decimal(v.actual)}});
    ja["violations"] = std::move(vs);
    audits.push_back(std::move(ja));
  }
  j["audits"] = std::move(audits);
  return j.dump(2);
}

}  // namespace gluings
