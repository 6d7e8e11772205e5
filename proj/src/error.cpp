#include "solvsph/error.hpp"

namespace solvsph {

const char* errc_name(errc c) {
  switch (c) {
    case errc::illegal_rank: return "IllegalRank";
    case errc::lattice_not_between_root_and_weight: return "LatticeNotBetweenRootAndWeight";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::generator_outside_ambient: return "GeneratorOutsideAmbient";
    case errc::not_sublattice: return "NotSublattice";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::no_consistent_labeling: return "NoConsistentLabeling";
    case errc::ambiguous_labeling: return "AmbiguousLabeling";
    case errc::label_conflict: return "LabelConflict";
    case errc::invalid_datum: return "InvalidDatum";
    case errc::center_not_regular_simple: return "CenterNotRegularSimple";
    case errc::root_system_mismatch: return "RootSystemMismatch";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace solvsph
