#pragma once

#include <stdexcept>
#include <string>

namespace knotsig {

enum class errc {
  invalid_argument,
  odd_degree_symmetric,
  not_irreducible,
  not_symmetric,
  no_root_in_interval,
  multiple_roots_in_interval,
  empty_arc,
  search_exhausted,
  not_knot_seifert,
  not_admissible,
  budget_exhausted,
  internal_contradiction,
  parse_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace knotsig
