#include "isoact/error.hpp"

namespace isoact {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::constraint_violation: return "ConstraintViolation";
    case Errc::bad_generator_index: return "BadGeneratorIndex";
    case Errc::group_mismatch: return "GroupMismatch";
    case Errc::invalid_encoding: return "InvalidEncoding";
    case Errc::vertex_not_found: return "VertexNotFound";
    case Errc::unresolvable: return "Unresolvable";
    case Errc::singular_lattice: return "SingularLattice";
    case Errc::ball_too_small: return "BallTooSmall";
    case Errc::not_zero_mean: return "NotZeroMean";
    case Errc::not_cylinder_measurable: return "NotCylinderMeasurable";
    case Errc::invalid_tree: return "InvalidTree";
    case Errc::tree_mismatch: return "TreeMismatch";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::bad_level: return "BadLevel";
    case Errc::outside_disc: return "OutsideDisc";
    case Errc::branch_guard: return "BranchGuard";
    case Errc::precondition_violation: return "PreconditionViolation";
    case Errc::missing_ingredient: return "MissingIngredient";
    case Errc::ill_conditioned_phi: return "IllConditionedPhi";
    case Errc::partition_overflow: return "PartitionOverflow";
    case Errc::config_error: return "ConfigError";
    case Errc::invalid_coordinate: return "InvalidCoordinate";
    case Errc::truncation_overflow: return "TruncationOverflow";
    case Errc::solve_failure: return "SolveFailure";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace isoact
