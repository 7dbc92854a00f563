#pragma once

#include <stdexcept>
#include <string>

namespace milab {

enum class Errc {
    cycle_detected,
    not_a_lattice,
    unknown_element,
    empty_poset,
    bottom_excluded,
    not_meet_irreducible,
    cannot_remove_bottom,
    not_meet_closed,
    step_not_lattice,
    too_large,
    too_many_generators,
    syntax_error,
    unknown_variable,
    unit_generator,
    empty_after_minimalization,
    retries_exhausted,
    cap_too_small,
    budget_exceeded,
    invalid_partition,
    not_squarefree,
    not_generic,
    not_atomistic,
    rank_too_large,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Exact-search abort: distinguishes "unknown" from a definite "no".
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& msg, long long expansions, int at_value)
        : Error(Errc::budget_exceeded, msg), expansions(expansions), at_value(at_value) {}
    long long expansions;
    int at_value;  // k being tested when the budget ran out, or -1
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace milab
