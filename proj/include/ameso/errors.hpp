#ifndef AMESO_ERRORS_HPP
#define AMESO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ameso {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two points (or a point and a domain) disagree on dimension.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A caller-supplied argument violates a precondition.
class ArgumentError : public Error {
public:
  explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// An enumeration or pair cap would be exceeded; the message names the cap.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

/// The domain lacks a structural property the operation requires
/// (e.g. midpoint closure).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// An objective produced a non-finite value.
class EvaluationError : public Error {
public:
  explicit EvaluationError(const std::string& what) : Error(what) {}
};

} // namespace ameso

#endif // AMESO_ERRORS_HPP
