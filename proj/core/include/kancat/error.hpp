#ifndef KANCAT_ERROR_HPP_
#define KANCAT_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kancat {

  enum class ErrorKind {
    duplicate_name,
    dangling_endpoint,
    unknown_name,
    not_composable,
    type_mismatch,
    zero_polynomial,
    not_complete,
    incomplete,
    internal_limit,
    invalid_presentation,
    syntax_error,
    semantic_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  struct SourceLocation {
    std::size_t line   = 0;  // 1-based, 0 when unknown
    std::size_t column = 0;  // 1-based, 0 when unknown
  };

  // Every failure raised by the library is an Error; callers switch on
  // kind() rather than catching distinct types.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message);
    Error(ErrorKind kind, std::string const& message, SourceLocation where);

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::optional<SourceLocation> const& where() const noexcept {
      return _where;
    }

   private:
    ErrorKind                     _kind;
    std::optional<SourceLocation> _where;
  };

}  // namespace kancat

#endif  // KANCAT_ERROR_HPP_
