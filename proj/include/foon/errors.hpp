#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foon {

// Base class for all errors raised by the toolkit. CLI maps subclasses
// onto its exit-code contract.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Requested goal node appears neither in the graph nor in the kitchen.
class GoalUnknownError : public Error {
public:
  using Error::Error;
};

// No unit sequence can produce the goal from the kitchen.
class UnsolvableError : public Error {
public:
  using Error::Error;
};

class UnknownRelationError : public Error {
public:
  using Error::Error;
};

class NameCollisionError : public Error {
public:
  using Error::Error;
};

class InconsistentInitError : public Error {
public:
  using Error::Error;
};

class PreconditionUnsatisfiedError : public Error {
public:
  explicit PreconditionUnsatisfiedError(const std::string& what,
                                        std::vector<std::string> facts = {})
      : Error(what), violated_facts(std::move(facts)) {}
  std::vector<std::string> violated_facts;
};

class UndeclaredSymbolError : public Error {
public:
  using Error::Error;
};

class PreconditionViolatedError : public Error {
public:
  explicit PreconditionViolatedError(const std::string& what,
                                     std::vector<std::string> facts = {})
      : Error(what), violated_facts(std::move(facts)) {}
  std::vector<std::string> violated_facts;
};

class MissingTargetCellError : public Error {
public:
  using Error::Error;
};

class ExternalPlannerFailedError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace foon
