#ifndef HYPERGRAPH_ERRORS_HPP
#define HYPERGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypergraph {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HYPERGRAPH_DEFINE_ERROR(Name)                     \
    struct Name : Error {                                 \
        explicit Name(const std::string& what_arg)        \
            : Error(#Name ": " + what_arg) {}             \
    }

// Construction / validation
HYPERGRAPH_DEFINE_ERROR(DuplicateEdge);
HYPERGRAPH_DEFINE_ERROR(VertexOutOfRange);
HYPERGRAPH_DEFINE_ERROR(EdgeTooSmall);
HYPERGRAPH_DEFINE_ERROR(NotASupertree);
HYPERGRAPH_DEFINE_ERROR(NotATree);

// Spectral computations
HYPERGRAPH_DEFINE_ERROR(Disconnected);
HYPERGRAPH_DEFINE_ERROR(NoConvergence);
HYPERGRAPH_DEFINE_ERROR(TooLarge);
HYPERGRAPH_DEFINE_ERROR(NonPositiveVector);

// Generators / surgery
HYPERGRAPH_DEFINE_ERROR(InvalidAttachment);
HYPERGRAPH_DEFINE_ERROR(TooManyBranches);
HYPERGRAPH_DEFINE_ERROR(BranchTooLong);
HYPERGRAPH_DEFINE_ERROR(EdgeNotFound);
HYPERGRAPH_DEFINE_ERROR(ResultingDuplicateEdge);
HYPERGRAPH_DEFINE_ERROR(BadShiftShape);

// Enumeration / verification
HYPERGRAPH_DEFINE_ERROR(BudgetExceeded);
HYPERGRAPH_DEFINE_ERROR(ConfigurationNotFound);

// Text formats
HYPERGRAPH_DEFINE_ERROR(ParseError);

#undef HYPERGRAPH_DEFINE_ERROR

} // namespace hypergraph

#endif // HYPERGRAPH_ERRORS_HPP
