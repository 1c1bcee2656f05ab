#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morfo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyLexicon : public Error {
 public:
  explicit EmptyLexicon(const std::string& source)
      : Error("no roots loaded from " + source) {}
};

// Invalid UTF-8. `line` is 1-based, 0 when the input is not line-oriented.
class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t line = 0)
      : Error(line ? "invalid UTF-8 on line " + std::to_string(line) : "invalid UTF-8"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// No prefix rule can realize the requested affix on a stem.
class NoGenerationRule : public Error {
 public:
  NoGenerationRule(const std::string& prefix, const std::string& stem)
      : Error("no generation rule for " + prefix + "~ on stem '" + stem + "'") {}
};

// An affix mark in a token stream that cannot attach to a root. `position` is the
// 0-based token index.
class DanglingAffix : public Error {
 public:
  DanglingAffix(std::size_t position, const std::string& token)
      : Error("dangling affix '" + token + "' at token " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t hyps, std::size_t refs)
      : Error("hypothesis/reference count mismatch: " + std::to_string(hyps) + " vs " +
              std::to_string(refs)) {}
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("empty corpus") {}
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty hypothesis or reference") {}
};

}  // namespace morfo
