#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glossgraph {

/// Error in user-supplied data (files, trees, annotations, config).
/// Carries an optional source location; `where()` renders it as
/// "file:line:col" with unset parts omitted.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::string message, std::string file = {},
                      std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(render(message, file, line, column)),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string render(const std::string& message, const std::string& file,
                            std::size_t line, std::size_t column) {
    std::string out;
    if (!file.empty()) out += file + ": ";
    if (line > 0) {
      out += "line " + std::to_string(line);
      if (column > 0) out += ", col " + std::to_string(column);
      out += ": ";
    }
    return out + message;
  }

  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

/// Malformed bracketed-tree input; `offset` is the character position
/// in the tree string where the problem was detected.
class TreeParseError : public InputError {
 public:
  TreeParseError(std::string message, std::size_t offset)
      : InputError(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace glossgraph
