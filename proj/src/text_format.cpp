#include "mapda/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mapda {
namespace {

std::int64_t parse_count(const std::string& token, const char* what, std::int64_t line) {
  std::int64_t out = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || out < 1) {
    throw FormatError(std::string(what) + " must be a positive integer, got \"" + token + "\"",
                      line);
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

}  // namespace

CodedArray parse_array(const std::string& text) {
  if (text.empty() || text.back() != '\n') {
    throw FormatError("missing terminating newline", 1);
  }

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  if (lines.empty()) {
    throw FormatError("empty input", 1);
  }
  const std::vector<std::string> header = split_tokens(lines[0]);
  if (header.size() != 2) {
    throw FormatError("header must be \"F K\"", 1);
  }
  const std::int64_t rows = parse_count(header[0], "row count", 1);
  const std::int64_t cols = parse_count(header[1], "column count", 1);

  if (static_cast<std::int64_t>(lines.size()) != rows + 1) {
    throw FormatError("expected " + std::to_string(rows) + " array lines, got " +
                          std::to_string(static_cast<std::int64_t>(lines.size()) - 1),
                      static_cast<std::int64_t>(lines.size()));
  }

  CodedArray a(rows, cols);
  for (std::int64_t f = 0; f < rows; ++f) {
    const std::int64_t line_no = f + 2;
    const std::vector<std::string> tokens = split_tokens(lines[f + 1]);
    if (static_cast<std::int64_t>(tokens.size()) != cols) {
      throw FormatError("expected " + std::to_string(cols) + " entries, got " +
                            std::to_string(tokens.size()),
                        line_no);
    }
    for (std::int64_t k = 0; k < cols; ++k) {
      const std::string& token = tokens[k];
      if (token == "*") {
        continue;
      }
      a.set(f, k, Entry::integer(parse_count(token, "entry", line_no)));
    }
  }
  return a;
}

CodedArray read_array(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_array(buffer.str());
}

CodedArray read_array_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  try {
    return read_array(in);
  } catch (const FormatError& e) {
    throw FormatError(path, e);
  }
}

std::string to_text(const CodedArray& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::int64_t f = 0; f < a.rows(); ++f) {
    for (std::int64_t k = 0; k < a.cols(); ++k) {
      if (k > 0) {
        out += ' ';
      }
      const std::int64_t code = a.code(f, k);
      out += code == Entry::kStarCode ? "*" : std::to_string(code);
    }
    out += '\n';
  }
  return out;
}

void write_array(std::ostream& out, const CodedArray& a) { out << to_text(a); }

void write_array_file(const std::string& path, const CodedArray& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << to_text(a);
}

}  // namespace mapda
