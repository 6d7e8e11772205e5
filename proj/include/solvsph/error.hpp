#pragma once

#include <stdexcept>
#include <string>

namespace solvsph {

enum class errc {
  illegal_rank,
  lattice_not_between_root_and_weight,
  dimension_mismatch,
  generator_outside_ambient,
  not_sublattice,
  rank_mismatch,
  ambient_mismatch,
  no_consistent_labeling,
  ambiguous_labeling,
  label_conflict,
  invalid_datum,
  center_not_regular_simple,
  root_system_mismatch,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace solvsph
