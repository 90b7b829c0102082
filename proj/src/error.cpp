#include "hypotree/error.hpp"

namespace hypotree {

const char* errc_name(errc c) {
    switch (c) {
    case errc::edge_count_mismatch:     return "EdgeCountMismatch";
    case errc::disconnected:            return "Disconnected";
    case errc::duplicate_edge:          return "DuplicateEdge";
    case errc::self_loop:               return "SelfLoop";
    case errc::index_out_of_range:      return "IndexOutOfRange";
    case errc::parse_error:             return "ParseError";
    case errc::internal_inconsistency:  return "InternalInconsistency";
    case errc::non_convergence:         return "NonConvergence";
    case errc::no_expansion:            return "NoExpansion";
    case errc::assembly_mismatch:       return "AssemblyMismatch";
    case errc::infeasible_degree:       return "InfeasibleDegree";
    case errc::unknown_name:            return "UnknownName";
    case errc::no_witness_found:        return "NoWitnessFound";
    case errc::budget_exceeded:         return "BudgetExceeded";
    }
    return "UnknownError";
}

} // namespace hypotree
