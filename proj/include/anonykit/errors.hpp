#ifndef ANONYKIT_ERRORS_HPP
#define ANONYKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anonykit {

// Failure categories raised by the solvers, parsers and the CLI. Infeasible
// inputs (no solution can exist for any algorithm) are kept distinguishable
// because the command-line tool maps them to a dedicated exit code.
enum class errc {
  empty_instance,
  non_positive_size,
  infeasible_total,
  infeasible_k,
  bound_violated,
  precondition_violated,
  enumeration_budget_exceeded,
  too_large,
  disconnected,
  invalid_supplied_tree,
  parse_error,
  non_integral_frequency,
  empty_file,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

  // True when the input admits no feasible solution at all.
  bool infeasible() const noexcept {
    return code_ == errc::infeasible_total || code_ == errc::infeasible_k;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace anonykit

#endif  // ANONYKIT_ERRORS_HPP
