#pragma once

#include <stdexcept>
#include <string>

namespace hypotree {

enum class errc {
    edge_count_mismatch,
    disconnected,
    duplicate_edge,
    self_loop,
    index_out_of_range,
    parse_error,
    internal_inconsistency,
    non_convergence,
    no_expansion,
    assembly_mismatch,
    infeasible_degree,
    unknown_name,
    no_witness_found,
    budget_exceeded,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace hypotree
