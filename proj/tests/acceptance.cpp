// Acceptance gate: nine checks, one verdict line each. The process exits
// with the number of failed checks, so a clean run exits 0.
#include <functional>
#include <iostream>
#include <random>

#include "pdtfun/machine_io.hpp"
#include "pdtfun/optimize.hpp"
#include "pdtfun/oracle.hpp"
#include "pdtfun/pumping.hpp"
#include "pdtfun/witnesses.hpp"
#include "random_machines.hpp"
#include "test_util.hpp"

using namespace pdtfun;
using testutil::W;

namespace {

int failures = 0;

void verdict(int index, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << "[" << index << "] " << label << ": " << (ok ? "PASS" : "FAIL") << note
              << "\n";
    if (!ok) ++failures;
}

std::size_t len_for(const Alphabet& a) {
    if (a.size() <= 2) return 8;
    if (a.size() == 3) return 6;
    if (a.size() == 4) return 5;
    return 4;
}

MachineSpec spin_machine() {
    MachineSpec m;
    m.name = "spin";
    m.input = testutil::bin();
    m.stack = Alphabet({U'Z'});
    m.output = testutil::bin();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    Transition boot;
    boot.from = "go";
    boot.read = kLeftEnd;
    boot.top = U'Z';
    boot.to = "spin";
    boot.push = W("Z");
    m.transitions.push_back(boot);
    Transition loop = boot;
    loop.from = "spin";
    loop.read = std::nullopt;
    m.transitions.push_back(loop);
    return m;
}

bool corpus_agreement() {
    for (const WitnessEntry& entry : catalog()) {
        const WitnessVerdict v = verify_entry(entry, entry.test_len);
        if (!v.ok) {
            std::cout << "    " << entry.name << ": " << v.detail << "\n";
            return false;
        }
    }
    for (const auto& [file, spec] : machine_corpus())
        if (load_machine(testutil::machines_dir() + "/" + file) != spec) return false;
    return true;
}

bool duplication_pipeline() {
    const FunctionHandle dup =
        compose(from_machine(make_rev_tail()), from_machine(make_dup_emit_rev()));
    const auto inputs = strings_up_to(testutil::binn(), 6);
    for (const Str& x : inputs) {
        const OutputSet got = dup.eval(x);
        if (got != brute_f_dup(x)) return false;
        if (got.size() != 1) return false;
    }
    return is_single_valued(make_dup_emit_rev(), inputs).single_valued;
}

bool operator_identities() {
    const FunctionHandle pal = from_machine(make_pal_sub());
    const FunctionHandle eta = from_machine(make_eta_pal());
    const FunctionHandle chi = from_machine(make_chi_pal());
    const FunctionHandle u = union_fn(pal, pal);
    const FunctionHandle ab = intersect(pal, eta);
    const FunctionHandle ba = intersect(eta, pal);
    const FunctionHandle diff = set_difference(pal, eta);
    const FunctionHandle via = intersect(pal, complement_fn(eta, {1, 1}, 0));
    const FunctionHandle twice = complement_fn(complement_fn(chi, {0, 1}, 0), {0, 1}, 0);
    for (const Str& x : strings_up_to(testutil::bin(), 6)) {
        if (u.eval(x) != pal.eval(x)) return false;
        if (ab.eval(x) != ba.eval(x)) return false;
        if (diff.eval(x) != via.eval(x)) return false;
        if (twice.eval(x) != chi.eval(x)) return false;
    }
    return true;
}

bool oracle_symmetry() {
    std::mt19937_64 rng(testutil::seed());
    const std::vector<Oracle> oracles{oracle_palindromes(testutil::bin()),
                                      oracle_dup(testutil::bin()),
                                      oracle_none(testutil::bin())};
    const auto inputs = strings_up_to(testutil::bin(), 3);
    std::size_t checked = 0;
    for (int i = 0; i < 10; ++i) {
        const MachineSpec m = testutil::random_turing(rng, i);
        if (!validate_spec(m).ok()) return false;
        const MachineSpec swapped = swap_yes_no(m);
        const Oracle& A = oracles[i % oracles.size()];
        const Oracle notA = complement_oracle(A);
        for (const Str& x : inputs) {
            const RunResult r = run_machine(m, x, &A, {}, true);
            if (!r.termination_ok) return false;
            for (const QueryEvent& e : r.query_events)
                if (e.tape_len_after != 0 || e.head_after != 0) return false;
            if (eval_turing(m, A, x) != eval_turing(swapped, notA, x)) return false;
            ++checked;
        }
    }
    return checked >= 100;
}

bool degenerate_oracles() {
    std::vector<MachineSpec> plain;
    for (const auto& [file, spec] : machine_corpus())
        if (spec.mode() == OracleMode::none) plain.push_back(spec);
    if (plain.size() < 10) return false;
    for (const MachineSpec& spec : plain) {
        const MachineSpec promoted = as_many_one(spec, spec.input);
        const Oracle yes = oracle_all(spec.input);
        const Oracle no = oracle_none(spec.input);
        const std::size_t cap = len_for(spec.input) - 2;
        for (const Str& x : strings_up_to(spec.input, cap)) {
            if (eval_many_one(promoted, yes, x) != enumerate_outputs(spec, x)) return false;
            if (!eval_many_one(promoted, no, x).empty()) return false;
        }
    }
    const MachineSpec copy = make_copy_query();
    for (const Str& x : strings_up_to(testutil::bin(), 5)) {
        if (eval_many_one(copy, oracle_all(testutil::bin()), x) != OutputSet{x}) return false;
        if (!eval_many_one(copy, oracle_none(testutil::bin()), x).empty()) return false;
    }
    return true;
}

bool optimization_dominance() {
    const MachineSpec pal = make_pal_sub();
    for (const Str& x : strings_up_to(testutil::bin(), 8)) {
        const OutputSet values = enumerate_outputs(pal, x);
        if (values.empty()) return false;
        const Str mx = opt_eval(pal, OptMode::maximum, x);
        const Str mn = opt_eval(pal, OptMode::minimum, x);
        if (!values.count(mx) || !values.count(mn)) return false;
        for (const Str& y : values)
            if (dict_less(mx, y, pal.output) || dict_less(y, mn, pal.output)) return false;
    }
    if (opt_eval(pal, OptMode::maximum, W("0110")) != W("11")) return false;
    if (opt_eval(pal, OptMode::minimum, W("0110")) != W("")) return false;
    const Alphabet flipped({U'1', U'0'});
    if (extremal({W("0"), W("1")}, OptMode::maximum, flipped) != W("0")) return false;
    const FunctionHandle pal_fn = from_machine(pal);
    return refinement_check(pal_fn, opt_refinement(pal_fn, OptMode::maximum), 6).holds;
}

bool pumping_probes() {
    const FunctionHandle pal = from_machine(make_pal_sub());
    if (!pumping_report(pal, {2, 1, 1}, {W("00100")}, 2).all_found()) return false;
    if (!pumping_report(pal, {3, 1, 1}, {W("0001000")}, 2).all_found()) return false;

    const FunctionHandle dup =
        compose(from_machine(make_rev_tail()), from_machine(make_dup_emit_rev()));
    const Str w = W("0011");
    const Str s = W("0011♮0011");
    if (search_decomposition(dup, w, s, {2, 0, 1}, 2, false, false)) return false;

    const auto found = search_decomposition(dup, w, s, {2, 1, 2}, 2, false, false);
    if (!found) return false;
    for (std::size_t i = 0; i <= 2; ++i)
        if (!dup.eval(found->pump_input(i)).count(found->pump_output(i))) return false;
    std::cout << "    witnessed split: " << to_utf8(found->pump_input(0)) << " pumps to "
              << to_utf8(found->pump_input(2)) << "\n";
    return !search_decomposition(dup, w, s, {2, 1, 2}, 2, true, false).has_value();
}

bool termination_policing() {
    const MachineSpec spin = spin_machine();
    for (const Str& x : strings_up_to(testutil::bin(), 3)) {
        const RunResult r = run_machine(spin, x);
        if (r.termination_ok) return false;
        if (r.violating_prefix.size() != spin.step_bound.eval(x.size()) + 1) return false;
    }
    for (const auto& [file, spec] : machine_corpus()) {
        if (spec.mode() != OracleMode::none) continue;
        for (const Str& x : strings_up_to(spec.input, len_for(spec.input)))
            if (!check_termination(spec, x).ok) return false;
    }
    const MachineSpec square = make_square_base();
    const Oracle yes = oracle_all(*square.query);
    const Oracle no = oracle_none(*square.query);
    for (const Str& x : strings_up_to(testutil::bin(), 6)) {
        if (!run_machine(square, x, &yes).termination_ok) return false;
        if (!run_machine(square, x, &no).termination_ok) return false;
    }
    const MachineSpec copy = make_copy_query();
    const Oracle ally = oracle_all(testutil::bin());
    for (const Str& x : strings_up_to(testutil::bin(), 6))
        if (!run_machine(copy, x, &ally).termination_ok) return false;
    return true;
}

bool advice_decides_duplication() {
    const MachineSpec eq = make_track_eq();
    const FunctionHandle suffix = from_machine(make_strip_suffix());
    for (const Str& x : strings_up_to(testutil::bin(), 6)) {
        for (const Str& y : strings_up_to(testutil::bin(), 6)) {
            const Str w = x + Str{kPad} + y;
            if (advice_membership(eq, suffix, w) != (x == y)) return false;
        }
    }
    return true;
}

} // namespace

int main() {
    verdict(1, "every witness construction matches its brute-force twin, and every "
               "shipped machine file its builder",
            corpus_agreement);
    verdict(2, "composed duplication is total, single-valued, and exact over the marked "
               "binary alphabet",
            duplication_pipeline);
    verdict(3, "union, intersection, difference, and double complement satisfy their "
               "set identities",
            operator_identities);
    verdict(4, "answer-swapped machines under complemented oracles agree, with a clean "
               "query tape after every answer",
            oracle_symmetry);
    verdict(5, "promoted machines under the full and empty oracles collapse to plain "
               "enumeration and to undefined",
            degenerate_oracles);
    verdict(6, "dictionary-extremal outputs dominate their sets and refine the "
               "set-valued function",
            optimization_dominance);
    verdict(7, "pumping searches succeed at the pinned constants and fail once the "
               "output window or length matching forbids growth",
            pumping_probes);
    verdict(8, "budget overruns are rejected with a shortest offending path while the "
               "whole corpus terminates",
            termination_policing);
    verdict(9, "advice through the two-track acceptor decides pairwise equality",
            advice_decides_duplication);
    std::cout << (failures == 0 ? "all acceptance checks passed"
                                : std::to_string(failures) + " acceptance check(s) failed")
              << "\n";
    return failures;
}
