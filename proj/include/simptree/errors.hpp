#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace simptree {

/// Base class for all domain errors. `code()` is a stable machine-readable
/// identifier, also used by the CLI's structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SIMPTREE_DEFINE_ERROR(NAME, CODE)                                   \
    class NAME : public Error {                                             \
    public:                                                                 \
        explicit NAME(const std::string& message) : Error(CODE, message) {} \
    }

SIMPTREE_DEFINE_ERROR(InvalidSimplexError, "invalid_simplex");
SIMPTREE_DEFINE_ERROR(MixedDimensionError, "mixed_dimension");
SIMPTREE_DEFINE_ERROR(EmptyInputError, "empty_input");
SIMPTREE_DEFINE_ERROR(NotAFacetError, "not_a_facet");
SIMPTREE_DEFINE_ERROR(DimensionOutOfRangeError, "dimension_out_of_range");
SIMPTREE_DEFINE_ERROR(ForeignSimplexError, "foreign_simplex");
SIMPTREE_DEFINE_ERROR(DimensionMismatchError, "dimension_mismatch");
SIMPTREE_DEFINE_ERROR(SameEndpointsError, "same_endpoints");
SIMPTREE_DEFINE_ERROR(EndpointMismatchError, "endpoint_mismatch");
SIMPTREE_DEFINE_ERROR(NotConnectedError, "not_connected");
SIMPTREE_DEFINE_ERROR(NotATreeError, "not_a_tree");
SIMPTREE_DEFINE_ERROR(TooLargeError, "too_large");
SIMPTREE_DEFINE_ERROR(ParseError, "parse");

#undef SIMPTREE_DEFINE_ERROR

}  // namespace simptree
