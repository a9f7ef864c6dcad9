#include "semitrace/error.hpp"

namespace semitrace {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_dimension: return "InvalidDimension";
        case Errc::invalid_order: return "InvalidOrder";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::not_pairwise_coprime: return "NotPairwiseCoprime";
        case Errc::hypothesis_violation: return "HypothesisViolation";
        case Errc::empty_module: return "EmptyModule";
        case Errc::input_too_large: return "InputTooLarge";
        case Errc::group_too_large: return "GroupTooLarge";
        case Errc::box_too_large: return "BoxTooLarge";
        case Errc::bound_too_large: return "BoundTooLarge";
        case Errc::internal_inconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

int exit_code(Errc code) noexcept {
    switch (code) {
        case Errc::not_coprime:
        case Errc::not_pairwise_coprime:
        case Errc::hypothesis_violation:
            return 2;
        case Errc::input_too_large:
        case Errc::group_too_large:
        case Errc::box_too_large:
        case Errc::bound_too_large:
            return 3;
        case Errc::internal_inconsistency:
            return 4;
        default:
            return 1;
    }
}

}  // namespace semitrace
