#pragma once
#include <stdexcept>
#include <string>

namespace gor {

/* Input-level problems: malformed files, bad presentations, bad primes. */
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

/* A request outside an operation's contract: uncertified input where a
   certificate is required, horizons below the documented minimum, modules
   over mismatched algebras. */
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& m) : std::runtime_error(m) {}
};

/* An invariant the library itself guarantees failed to hold. */
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& m) : std::runtime_error(m) {}
};

/* Path enumeration did not close below the cap. */
struct InfiniteDimensionalError : ParseError {
  explicit InfiniteDimensionalError(const std::string& m) : ParseError(m) {}
};

}  // namespace gor
