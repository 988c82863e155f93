#ifndef SETCALC_ERRORS_HPP
#define SETCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace setcalc {

// Error categories. Each maps to one failure mode of the public API;
// callers that care (the CLI, the fuzz driver) dispatch on the code.
enum class errc {
  parse,            // malformed group/element/set/config literal
  invalid_spec,     // group parameters outside the supported ranges
  length_overflow,  // free-group product longer than the word cap
  not_enumerable,   // enumerate() on an infinite group
  unsupported,      // operation needs an abelian group (or similar)
  size_overflow,    // result would exceed the set-size cap
  empty_set,        // nonempty set required (ratios, theorem inputs)
  capacity,         // instance exceeds a solver cap (brute force, flow graph)
  hypothesis,       // a verifier precondition failed outright
  config,           // experiment config inconsistent with the group/generator
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace setcalc

#endif
