#ifndef PDTFUN_PUMPING_HPP
#define PDTFUN_PUMPING_HPP

#include <optional>

#include "pdtfun/function.hpp"

namespace pdtfun {

struct PumpingParams {
    std::size_t m = 1;  // window bound, at least 1
    std::size_t c = 0;  // output window bound is c*m + d
    std::size_t d = 0;
};

// w = u v x y z and s = a b p q r, pumped in lockstep: pump index i sends
// (w, s) to (u v^i x y^i z, a b^i p q^i r).
struct Decomposition {
    Str u, v, x, y, z;
    Str a, b, p, q, r;

    Str pump_input(std::size_t i) const;
    Str pump_output(std::size_t i) const;
    bool operator==(const Decomposition&) const = default;
};

// The five numbered conditions a decomposition must meet, plus the relaxed
// replacement for the first two. `none` means every applicable condition
// held.
enum class PumpCondition {
    none,
    window,         // (i)   |vxy| <= m
    growth,         // (ii)  |vybq| >= 1
    output_window,  // (iii) |bq| <= c*m + d
    pump,           // (iv)  a b^i p q^i r in f(u v^i x y^i z) for each probed i
    length_match,   // (v)   |v| = |b| and |y| = |q|, only when length-preserving
    relaxed_growth, // (i')  |bq| >= 1, replaces (i) and (ii) in relaxed mode
};

const char* describe_condition(PumpCondition c);

struct PumpVerdict {
    bool ok = true;
    PumpCondition failed = PumpCondition::none;
    std::size_t failing_i = 0;  // meaningful when failed == pump
};

// Check one decomposition of (w, s) against the conditions at the given
// parameters, probing condition (iv) at every i in i_range. Preconditions:
// parts reassemble w and s exactly, and s is a value of f at w.
PumpVerdict check_decomposition(const FunctionHandle& f, const Str& w, const Str& s,
                                const Decomposition& dec, const PumpingParams& params,
                                const std::set<std::size_t>& i_range,
                                bool length_preserving, bool relaxed = false);

// Exhaustive search over all ways to cut w and s, probing i in {0,...,i_max}.
// Returns the first decomposition that passes, or nothing once every cut has
// been tried. Preconditions: s in f(w) and |w| >= m.
std::optional<Decomposition> search_decomposition(const FunctionHandle& f, const Str& w,
                                                  const Str& s,
                                                  const PumpingParams& params,
                                                  std::size_t i_max,
                                                  bool length_preserving, bool relaxed,
                                                  std::size_t max_candidates = 50'000'000);

struct PumpingReportEntry {
    Str w;
    Str s;
    std::optional<Decomposition> found;
};

// One search per (w, s) pair with s ranging over f(w). A "none" entry only
// refutes pumping at the supplied (m, c, d); describe() states that scope.
struct PumpingReport {
    PumpingParams params;
    std::size_t i_max = 2;
    bool length_preserving = false;
    bool relaxed = false;
    std::vector<PumpingReportEntry> entries;

    bool all_found() const;
    bool all_failed() const;
    std::string describe() const;
};

PumpingReport pumping_report(const FunctionHandle& f, const PumpingParams& params,
                             const std::vector<Str>& w_list, std::size_t i_max,
                             bool length_preserving = false, bool relaxed = false,
                             std::size_t max_candidates = 50'000'000);

} // namespace pdtfun

#endif
