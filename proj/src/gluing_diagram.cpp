#include "gluings/gluing_diagram.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gluings {

GluingDiagram::GluingDiagram(FaceProfile profile, std::vector<int> pairing)
    : profile_(std::move(profile)), pairing_(std::move(pairing)) {
  const int n = profile_.total_arcs();
  if (static_cast<int>(pairing_.size()) != n)
    throw std::invalid_argument("GluingDiagram: pairing size does not match profile");
  for (int a = 0; a < n; ++a) {
    int b = pairing_[a];
    if (b < 0 || b >= n) throw std::invalid_argument("GluingDiagram: pairing entry out of range");
    if (b == a) throw std::invalid_argument("GluingDiagram: pairing has a fixed point");
    if (pairing_[b] != a) throw std::invalid_argument("GluingDiagram: pairing is not an involution");
  }
}

std::string GluingDiagram::to_text() const {
  std::ostringstream out;
  out << "profile=";
  for (int i = 0; i < profile_.face_count(); ++i) {
    if (i) out << ',';
    out << profile_.part(i);
  }
  out << "; pairing=";
  for (int a = 0; a < total_arcs(); ++a) {
    if (pairing_[a] > a) out << '(' << a + 1 << ' ' << pairing_[a] + 1 << ')';
  }
  return out.str();
}

namespace {

void skip_spaces(std::string_view& s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
}

bool eat(std::string_view& s, std::string_view token) {
  if (s.substr(0, token.size()) != token) return false;
  s.remove_prefix(token.size());
  return true;
}

int parse_int(std::string_view& s) {
  skip_spaces(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc()) throw std::invalid_argument("GluingDiagram::parse: expected an integer");
  s.remove_prefix(ptr - s.data());
  return value;
}

}  // namespace

GluingDiagram GluingDiagram::parse(std::string_view text) {
  std::string_view s = text;
  skip_spaces(s);
  if (!eat(s, "profile=")) throw std::invalid_argument("GluingDiagram::parse: missing 'profile='");
  std::vector<int> parts;
  parts.push_back(parse_int(s));
  while (!s.empty() && s.front() == ',') {
    s.remove_prefix(1);
    parts.push_back(parse_int(s));
  }
  skip_spaces(s);
  if (!eat(s, ";")) throw std::invalid_argument("GluingDiagram::parse: missing ';'");
  skip_spaces(s);
  if (!eat(s, "pairing=")) throw std::invalid_argument("GluingDiagram::parse: missing 'pairing='");

  FaceProfile profile(std::move(parts));
  const int n = profile.total_arcs();
  std::vector<int> pairing(n, -1);
  skip_spaces(s);
  while (!s.empty() && s.front() == '(') {
    s.remove_prefix(1);
    int a = parse_int(s);
    int b = parse_int(s);
    skip_spaces(s);
    if (!eat(s, ")")) throw std::invalid_argument("GluingDiagram::parse: missing ')'");
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("GluingDiagram::parse: arc index out of range");
    if (pairing[a - 1] != -1 || pairing[b - 1] != -1)
      throw std::invalid_argument("GluingDiagram::parse: arc paired twice");
    pairing[a - 1] = b - 1;
    pairing[b - 1] = a - 1;
    skip_spaces(s);
  }
  if (!s.empty()) throw std::invalid_argument("GluingDiagram::parse: trailing input");
  for (int v : pairing)
    if (v < 0) throw std::invalid_argument("GluingDiagram::parse: unpaired arc");
  return GluingDiagram(std::move(profile), std::move(pairing));
}

}  // namespace gluings
