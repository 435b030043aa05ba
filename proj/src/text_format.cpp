#include "hypercode/text_format.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "hypercode/error.hpp"

namespace hypercode {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

std::vector<std::size_t> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) throw ParseError("line " + std::to_string(line_no) + ": expected an integer");
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected character '" + std::string(1, line[pos]) +
                       "'");
    }
    out.push_back(value);
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_header(std::string_view line, std::size_t line_no) {
  const auto header = parse_integers(line, line_no);
  if (header.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": header must hold two integers");
  return {header[0], header[1]};
}

}  // namespace

std::string format_matrix(const BitMatrix& m) {
  std::string out = std::to_string(m.num_rows()) + " " + std::to_string(m.num_cols()) + "\n";
  for (const BitVector& row : m.rows()) {
    out += row.to_string();
    out += '\n';
  }
  return out;
}

BitMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || is_blank(lines[0])) throw ParseError("missing matrix header");
  const auto [rows, cols] = parse_header(lines[0], 1);
  if (lines.size() < rows + 1) {
    throw ParseError("expected " + std::to_string(rows) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  BitMatrix m(0, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string_view line = lines[r + 1];
    if (line.size() != cols) {
      throw ParseError("line " + std::to_string(r + 2) + ": expected " + std::to_string(cols) + " bits, found " +
                       std::to_string(line.size()));
    }
    try {
      m.append_row(BitVector::from_string(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(r + 2) + ": " + e.what());
    }
  }
  for (std::size_t i = rows + 1; i < lines.size(); ++i) {
    if (!is_blank(lines[i])) throw ParseError("line " + std::to_string(i + 1) + ": unexpected trailing content");
  }
  return m;
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + " " + std::to_string(h.num_edges()) + "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (is_blank(line) || line.front() == '#') continue;
    if (!header) {
      header = parse_header(line, i + 1);
      continue;
    }
    if (edges.size() == header->second) {
      throw ParseError("line " + std::to_string(i + 1) + ": more edges than the header declares");
    }
    Edge e = parse_integers(line, i + 1);
    for (std::size_t k = 1; k < e.size(); ++k) {
      if (e[k] <= e[k - 1]) {
        throw ParseError("line " + std::to_string(i + 1) + ": vertex indices must be strictly ascending");
      }
    }
    edges.push_back(std::move(e));
  }
  if (!header) throw ParseError("missing hypergraph header");
  if (edges.size() != header->second) {
    throw ParseError("header declares " + std::to_string(header->second) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Hypergraph(header->first, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace hypercode
