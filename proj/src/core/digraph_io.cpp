#include "dicore/digraph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "dicore/errors.hpp"

namespace dicore {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(field) + "'");
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seen = 0;
  std::size_t header_line = 0;
  DigraphBuilder builder(0);

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (fields.size() != 2)
      throw ParseError(line_no, "expected two fields, found " + std::to_string(fields.size()));

    if (!have_header) {
      n = parse_count(fields[0], line_no, "vertex count");
      m = parse_count(fields[1], line_no, "arc count");
      if (n > kMaxVertices)
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " exceeds limit " +
                                      std::to_string(kMaxVertices));
      if (m > n * (n == 0 ? 0 : n - 1))
        throw ParseError(line_no, "arc count " + std::to_string(m) + " exceeds n(n-1) for n = " + std::to_string(n));
      builder = DigraphBuilder(n);
      have_header = true;
      header_line = line_no;
    } else {
      const auto u = parse_count(fields[0], line_no, "arc tail");
      const auto v = parse_count(fields[1], line_no, "arc head");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex outside 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "loop " + std::to_string(u) + " -> " + std::to_string(v));
      if (++seen > m)
        throw ParseError(line_no, "more arc lines than the " + std::to_string(m) + " declared");
      if (!builder.add_arc(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        throw ParseError(line_no, "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
    }
    if (end == text.size()) break;
  }

  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");
  if (seen != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " arcs but " + std::to_string(seen) +
                                      " were given");
  return std::move(builder).freeze();
}

Digraph read_digraph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_digraph(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

std::string format_digraph(const Digraph& d) {
  std::string out = std::to_string(d.vertex_count()) + " " + std::to_string(d.arc_count()) + "\n";
  for (const auto& [u, v] : d.arcs()) {
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

}  // namespace dicore
