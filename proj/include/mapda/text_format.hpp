#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mapda/coded_array.hpp"

namespace mapda {

// Array text format: a header line "F K", then F lines of K space-separated
// tokens, each "*" or a positive integer, and a terminating newline. Writing
// then reading is bit-exact; the parser rejects anything else.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::int64_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        detail_(message),
        line_(line) {}

  FormatError(const std::string& context, const FormatError& cause)
      : std::runtime_error(context + ": " + cause.what()),
        detail_(cause.detail_),
        line_(cause.line_) {}

  const std::string& detail() const { return detail_; }
  std::int64_t line() const { return line_; }

 private:
  std::string detail_;
  std::int64_t line_;
};

CodedArray parse_array(const std::string& text);
CodedArray read_array(std::istream& in);
CodedArray read_array_file(const std::string& path);

std::string to_text(const CodedArray& a);
void write_array(std::ostream& out, const CodedArray& a);
void write_array_file(const std::string& path, const CodedArray& a);

}  // namespace mapda
