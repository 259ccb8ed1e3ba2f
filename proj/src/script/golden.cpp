#include "schemekit/script/golden.hpp"

#include <sstream>

namespace schemekit::script {

namespace {

std::string_view trim_view(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with_ideal(std::string_view line) {
  if (line.substr(0, 5) != "ideal") return false;
  return line.size() == 5 || line[5] == ' ' || line[5] == '(';
}

}  // namespace

std::vector<std::string> read_expected(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim_view(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

Ideal parse_ideal_line(const RingPtr& ring, std::string_view line) {
  std::string_view body = trim_view(line);
  if (!starts_with_ideal(body)) throw Error("not an ideal line: " + std::string(line));
  body = trim_view(body.substr(5));
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw Error("unbalanced parentheses in: " + std::string(line));
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Polynomial> gens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size()) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] != ',' || depth != 0) continue;
    }
    const auto piece = trim_view(body.substr(start, i - start));
    if (!piece.empty()) gens.push_back(parse_polynomial(ring, piece));
    start = i + 1;
  }
  return Ideal(ring, std::move(gens));
}

std::optional<GoldenMismatch> compare_golden(const std::vector<OutputRecord>& actual,
                                             const std::vector<std::string>& expected) {
  const std::size_t n = std::min(actual.size(), expected.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& rec = actual[k];
    const auto& want = expected[k];
    if (starts_with_ideal(want)) {
      if (!rec.value.is<Ideal>()) return GoldenMismatch{k, want, rec.text};
      const Ideal& got = rec.value.as<Ideal>();
      bool equal = false;
      try {
        equal = ideal_equals(got, parse_ideal_line(got.ring(), want));
      } catch (const Error&) {
        equal = false;
      }
      if (!equal) return GoldenMismatch{k, want, rec.text};
    } else if (rec.text != want) {
      return GoldenMismatch{k, want, rec.text};
    }
  }
  if (actual.size() != expected.size()) {
    return GoldenMismatch{n, n < expected.size() ? expected[n] : "<end of output>",
                          n < actual.size() ? actual[n].text : "<end of output>"};
  }
  return std::nullopt;
}

}  // namespace schemekit::script
