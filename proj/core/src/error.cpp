#include "kancat/error.hpp"

namespace kancat {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::duplicate_name:
        return "DuplicateName";
      case ErrorKind::dangling_endpoint:
        return "DanglingEndpoint";
      case ErrorKind::unknown_name:
        return "UnknownName";
      case ErrorKind::not_composable:
        return "NotComposable";
      case ErrorKind::type_mismatch:
        return "TypeMismatch";
      case ErrorKind::zero_polynomial:
        return "ZeroPolynomial";
      case ErrorKind::not_complete:
        return "NotComplete";
      case ErrorKind::incomplete:
        return "Incomplete";
      case ErrorKind::internal_limit:
        return "InternalLimit";
      case ErrorKind::invalid_presentation:
        return "InvalidPresentation";
      case ErrorKind::syntax_error:
        return "SyntaxError";
      case ErrorKind::semantic_error:
        return "SemanticError";
    }
    return "Error";
  }

  namespace {
    std::string located(std::string const& message, SourceLocation where) {
      return "line " + std::to_string(where.line) + ", column "
             + std::to_string(where.column) + ": " + message;
    }
  }  // namespace

  Error::Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(message), _kind(kind), _where() {}

  Error::Error(ErrorKind kind, std::string const& message, SourceLocation where)
      : std::runtime_error(located(message, where)),
        _kind(kind),
        _where(where) {}

}  // namespace kancat
