#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoact {

enum class Errc {
  constraint_violation,
  bad_generator_index,
  group_mismatch,
  invalid_encoding,
  vertex_not_found,
  unresolvable,
  singular_lattice,
  ball_too_small,
  not_zero_mean,
  not_cylinder_measurable,
  invalid_tree,
  tree_mismatch,
  window_too_small,
  bad_level,
  outside_disc,
  branch_guard,
  precondition_violation,
  missing_ingredient,
  ill_conditioned_phi,
  partition_overflow,
  config_error,
  invalid_coordinate,
  truncation_overflow,
  solve_failure,
  io_error,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

inline void require(bool ok, Errc code, const char* what) {
  if (!ok) fail(code, what);
}

}  // namespace isoact
