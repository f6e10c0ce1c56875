#ifndef SLAT_ERRORS_HPP
#define SLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slat {

enum class errc {
  not_a_poset,
  no_bottom_or_top,
  not_a_lattice,
  inconsistent_order,
  not_comparable,
  bottom_has_no_covers,
  unknown_fixture,
  not_a_covering_square,
  not_sps,
  trace_stuck,
  witness_not_s7,
  not_a_swing,
  not_a_witness,
  parse_error,
  schema_error,
  validation_error,
};

const char* to_string(errc c) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace slat

#endif
