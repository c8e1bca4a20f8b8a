#ifndef ADT_ERROR_HPP
#define ADT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace adt {

// Domain errors carry a stable machine-readable code ("DuplicateConstructor",
// "TrailingTokens", ...) that the CLI maps to exit code 1.
struct error : std::runtime_error {
  std::string code;

  error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
  throw error(std::move(code), what);
}

}  // namespace adt

#endif
