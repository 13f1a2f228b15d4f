#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qwb {

// Every structured failure carries a code plus the indices of the offending
// elements, so callers (and the CLI) can report exact witnesses.
enum class errc {
  not_a_poset,
  no_join,
  no_meet,
  no_bounds,
  not_associative,
  not_join_preserving,
  bottom_not_annihilating,
  gamma_is_top,
  conditions_fail,
  not_a_group,
  not_a_nucleus,
  too_large,
  parse_error,
  bad_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)) {}

  errc code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  errc code_;
  std::vector<int> witness_;
};

}  // namespace qwb
