#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitrace {

enum class Errc {
    invalid_dimension,
    invalid_order,
    invalid_argument,
    dimension_mismatch,
    index_out_of_range,
    not_coprime,
    not_pairwise_coprime,
    hypothesis_violation,
    empty_module,
    input_too_large,
    group_too_large,
    box_too_large,
    bound_too_large,
    internal_inconsistency,
};

/// Stable machine-readable name, e.g. "HypothesisViolation".
std::string_view errc_name(Errc code) noexcept;

/// Process exit code for the CLI: 1 input error, 2 hypothesis refusal,
/// 3 resource bound exceeded. Internal inconsistencies map to 4.
int exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace semitrace
