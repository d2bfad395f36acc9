#pragma once

#include <stdexcept>
#include <string>

namespace hyperacyclic {

/// Malformed input: empty hyperedges, duplicate pins, bad ids, parse failures.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algorithm was called on a hypergraph outside the class it requires.
/// `recognizer()` names the check that failed ("alpha", "beta", "gamma", ...).
class ClassMismatch : public std::runtime_error {
 public:
  ClassMismatch(std::string recognizer, const std::string& what)
      : std::runtime_error(what), recognizer_(std::move(recognizer)) {}

  const std::string& recognizer() const noexcept { return recognizer_; }

 private:
  std::string recognizer_;
};

/// The input is not alpha-acyclic.
class NotAcyclic : public ClassMismatch {
 public:
  explicit NotAcyclic(const std::string& what) : ClassMismatch("alpha", what) {}
};

}  // namespace hyperacyclic
