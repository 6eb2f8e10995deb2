#include "pdtfun/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pdtfun/errors.hpp"
#include "pdtfun/machine_io.hpp"
#include "pdtfun/optimize.hpp"
#include "pdtfun/oracle.hpp"
#include "pdtfun/pumping.hpp"
#include "pdtfun/witnesses.hpp"

namespace pdtfun {
namespace {

// The empty string is written and read as "()" so that line-oriented output
// and positional arguments stay unambiguous.
std::string display(const Str& s) { return s.empty() ? "()" : render_string(s); }

Str parse_word(const std::string& arg) {
    if (arg == "()") return {};
    return utf8_to_str(arg);
}

std::vector<Str> sorted_by_dict(const OutputSet& values, const Alphabet& order) {
    std::vector<Str> v(values.begin(), values.end());
    std::sort(v.begin(), v.end(),
              [&](const Str& a, const Str& b) { return dict_less(a, b, order); });
    return v;
}

void print_set_lines(std::ostream& out, const OutputSet& values, const Alphabet& order) {
    if (values.empty()) {
        out << "UNDEFINED\n";
        return;
    }
    for (const Str& y : sorted_by_dict(values, order)) out << display(y) << "\n";
}

void print_set_inline(std::ostream& out, const Str& x, const OutputSet& values,
                      const Alphabet& order) {
    out << display(x) << " ->";
    if (values.empty()) {
        out << " UNDEFINED\n";
        return;
    }
    for (const Str& y : sorted_by_dict(values, order)) out << ' ' << display(y);
    out << "\n";
}

void print_eval(std::ostream& out, const FunctionHandle& f, const std::vector<Str>& inputs) {
    if (inputs.size() == 1) {
        print_set_lines(out, f.eval(inputs.front()), f.output);
        return;
    }
    for (const Str& x : inputs) print_set_inline(out, x, f.eval(x), f.output);
}

std::vector<Str> gather_inputs(const std::vector<std::string>& args,
                               const std::string& file) {
    std::vector<Str> inputs;
    for (const std::string& a : args) inputs.push_back(parse_word(a));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open input file '" + file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            inputs.push_back(parse_word(line));
        }
    }
    if (inputs.empty()) throw InputError("no input strings given");
    return inputs;
}

// --oracle accepts "builtin:<all|none|palindromes|dup>" (over the machine's
// query alphabet) or "machine:<file>".
Oracle resolve_oracle(const std::string& text, const MachineSpec& querier,
                      const EngineLimits& limits) {
    const auto cut = text.find(':');
    const std::string kind = text.substr(0, cut == std::string::npos ? text.size() : cut);
    const std::string rest = cut == std::string::npos ? "" : text.substr(cut + 1);
    if (kind == "machine") {
        if (rest.empty()) throw InputError("--oracle machine: needs a file path");
        return language_from_machine(load_machine(rest), limits);
    }
    if (kind == "builtin") {
        if (!querier.query)
            throw InputError("machine '" + querier.name +
                             "' has no query alphabet to build a builtin oracle over");
        const Alphabet& a = *querier.query;
        if (rest == "all") return oracle_all(a);
        if (rest == "none") return oracle_none(a);
        if (rest == "palindromes") return oracle_palindromes(a);
        if (rest == "dup") return oracle_dup(a);
        throw InputError("unknown builtin oracle '" + rest +
                         "' (choose all, none, palindromes, dup)");
    }
    throw InputError("--oracle expects builtin:<name> or machine:<file>, got '" + text +
                     "'");
}

std::string describe_decomposition(const Decomposition& d) {
    std::ostringstream o;
    o << "u=" << display(d.u) << " v=" << display(d.v) << " x=" << display(d.x)
      << " y=" << display(d.y) << " z=" << display(d.z) << " | a=" << display(d.a)
      << " b=" << display(d.b) << " p=" << display(d.p) << " q=" << display(d.q)
      << " r=" << display(d.r);
    return o.str();
}

struct CommonOpts {
    std::size_t max_configs = EngineLimits{}.max_configs;
    EngineLimits limits() const { return {max_configs}; }
};

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"pushdown transducers computing multi-valued partial functions"};
    app.name("pdtfun");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    CommonOpts common;
    app.add_option("--max-configs", common.max_configs,
                   "explored-configuration cap per run before giving up");
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized sampling subcommands");

    auto* run = app.add_subcommand("run", "run one machine on one input, with a report");
    std::string run_file;
    std::string run_input;
    bool run_queries = false;
    run->add_option("machine", run_file, "machine definition file")->required();
    run->add_option("input", run_input, "input string, () for the empty string")
        ->required();
    run->add_flag("--show-queries", run_queries, "also list oracle interactions");

    auto* en = app.add_subcommand("enum", "print the full output set per input");
    std::string en_file;
    std::vector<std::string> en_inputs;
    std::string en_input_file;
    en->add_option("machine", en_file, "machine definition file")->required();
    en->add_option("inputs", en_inputs, "input strings, () for the empty string");
    en->add_option("--file", en_input_file, "newline-delimited input strings");

    auto* op = app.add_subcommand("opt", "dictionary-extremal output on one input");
    std::string op_mode;
    bool op_el = false;
    std::string op_file;
    std::string op_input;
    op->add_option("--mode", op_mode, "max or min")->required();
    op->add_flag("--el", op_el, "stack-free machine, all outputs of equal length");
    op->add_option("machine", op_file, "machine definition file")->required();
    op->add_option("input", op_input, "input string")->required();

    auto* co = app.add_subcommand("compose",
                                  "apply the second machine, then the first, per input");
    std::string co_outer;
    std::string co_inner;
    std::vector<std::string> co_inputs;
    std::string co_input_file;
    co->add_option("outer", co_outer, "machine applied second")->required();
    co->add_option("inner", co_inner, "machine applied first")->required();
    co->add_option("inputs", co_inputs, "input strings");
    co->add_option("--file", co_input_file, "newline-delimited input strings");

    auto* al = app.add_subcommand("algebra",
                                  "pointwise set operations on machine functions");
    std::string al_op;
    std::vector<std::string> al_rest;
    std::uint64_t al_slope = 0;
    std::uint64_t al_intercept = 0;
    std::size_t al_n0 = 0;
    al->add_option("op", al_op, "intersect, union, diff, or complement")->required();
    al->add_option("args", al_rest,
                   "machine file(s) then input strings: two machines for "
                   "intersect/union/diff, one for complement");
    al->add_option("--slope", al_slope, "complement: output length bound slope");
    al->add_option("--intercept", al_intercept, "complement: output length bound intercept");
    al->add_option("--n0", al_n0, "complement: inputs shorter than this stay undefined");

    auto* orc = app.add_subcommand("oracle-run", "run a query machine against an oracle");
    std::string orc_file;
    std::vector<std::string> orc_inputs;
    std::string orc_input_file;
    std::string orc_oracle;
    std::vector<std::string> orc_chain;
    std::size_t orc_level = 0;
    orc->add_option("machine", orc_file, "query machine definition file")->required();
    orc->add_option("inputs", orc_inputs, "input strings");
    orc->add_option("--file", orc_input_file, "newline-delimited input strings");
    orc->add_option("--oracle", orc_oracle, "builtin:<name> or machine:<file>");
    orc->add_option("--chain", orc_chain,
                    "machine file for the next nesting level; repeatable, first flag "
                    "is the level directly below the base machine");
    orc->add_option("--level", orc_level,
                    "nesting depth k (defaults to one more than the chain length)");

    auto* pu = app.add_subcommand("pump", "search lockstep pumping decompositions");
    std::string pu_file;
    std::string pu_w;
    std::string pu_s;
    std::size_t pu_m = 1, pu_c = 0, pu_d = 0, pu_imax = 2;
    bool pu_relaxed = false, pu_lenpres = false;
    std::size_t pu_candidates = 50'000'000;
    pu->add_option("machine", pu_file, "machine definition file")->required();
    pu->add_option("input", pu_w, "input string w")->required();
    pu->add_option("output", pu_s, "one value s of the function at w; omit to "
                                   "search every value");
    pu->add_option("--m", pu_m, "input window bound, at least 1");
    pu->add_option("--c", pu_c, "output window bound slope");
    pu->add_option("--d", pu_d, "output window bound intercept");
    pu->add_option("--imax", pu_imax, "probe pump indices 0..imax (skipping 1)");
    pu->add_flag("--relaxed", pu_relaxed, "replace the two window conditions by |bq| >= 1");
    pu->add_flag("--length-preserving", pu_lenpres, "require |v| = |b| and |y| = |q|");
    pu->add_option("--max-candidates", pu_candidates, "cut search off after this many cuts");

    auto* re = app.add_subcommand("refine", "does the first function refine the second?");
    std::string re_f;
    std::string re_g;
    std::size_t re_len = 6;
    re->add_option("refiner", re_f, "machine file for the candidate refinement")
        ->required();
    re->add_option("target", re_g, "machine file for the function being refined")
        ->required();
    re->add_option("--max-len", re_len, "check all inputs up to this length");

    auto* vw = app.add_subcommand("verify-witnesses",
                                  "check every catalog construction against its "
                                  "brute-force twin, and the machine files against "
                                  "their builders");
    std::size_t vw_len = 0;
    std::string vw_dir = "machines";
    std::size_t vw_samples = 0;
    vw->add_option("--max-len", vw_len, "override the per-entry exhaustive length");
    vw->add_option("--dir", vw_dir, "machine corpus directory ('' skips file parity)");
    vw->add_option("--samples", vw_samples,
                   "extra random inputs per entry beyond the exhaustive length");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const EngineLimits limits = common.limits();

    if (*run) {
        const MachineSpec spec = load_machine(run_file);
        if (spec.mode() != OracleMode::none)
            throw InputError("machine '" + spec.name +
                             "' expects an oracle; use the oracle-run subcommand");
        const Str x = parse_word(run_input);
        const RunResult r = run_machine(spec, x, nullptr, limits, run_queries);
        if (!r.termination_ok)
            throw TerminationError("machine '" + spec.name +
                                       "' has a path that outlives its step budget:\n" +
                                       render_prefix(r.violating_prefix),
                                   r.violating_prefix);
        out << "machine: " << spec.name << "\n";
        out << "input: " << display(x) << "\n";
        out << "outputs:\n";
        print_set_lines(out, r.outputs(), spec.output);
        out << "configurations explored: " << r.configs_explored << "\n";
        if (run_queries) {
            out << "oracle interactions: " << r.query_events.size() << "\n";
            for (const QueryEvent& q : r.query_events)
                out << "  query " << display(q.word) << " -> " << (q.answer ? "yes" : "no")
                    << "\n";
        }
        return 0;
    }

    if (*en) {
        const MachineSpec spec = load_machine(en_file);
        if (spec.mode() != OracleMode::none)
            throw InputError("machine '" + spec.name +
                             "' expects an oracle; use the oracle-run subcommand");
        print_eval(out, from_machine(spec, limits), gather_inputs(en_inputs, en_input_file));
        return 0;
    }

    if (*op) {
        OptMode mode;
        if (op_mode == "max")
            mode = OptMode::maximum;
        else if (op_mode == "min")
            mode = OptMode::minimum;
        else
            throw InputError("--mode must be max or min, got '" + op_mode + "'");
        const MachineSpec spec = load_machine(op_file);
        const Str x = parse_word(op_input);
        const Str best =
            op_el ? opt_nfa_el_eval(spec, mode, x, limits) : opt_eval(spec, mode, x, limits);
        out << display(best) << "\n";
        return 0;
    }

    if (*co) {
        const FunctionHandle outer = from_machine(load_machine(co_outer), limits);
        const FunctionHandle inner = from_machine(load_machine(co_inner), limits);
        print_eval(out, compose(outer, inner), gather_inputs(co_inputs, co_input_file));
        return 0;
    }

    if (*al) {
        const bool binary_op = al_op == "intersect" || al_op == "union" || al_op == "diff";
        if (!binary_op && al_op != "complement")
            throw InputError("unknown algebra op '" + al_op +
                             "' (choose intersect, union, diff, complement)");
        const std::size_t files = binary_op ? 2 : 1;
        if (al_rest.size() < files + 1)
            throw InputError("algebra " + al_op + " needs " + std::to_string(files) +
                             " machine file(s) and at least one input string");
        FunctionHandle f = from_machine(load_machine(al_rest[0]), limits);
        FunctionHandle combined;
        if (binary_op) {
            FunctionHandle g = from_machine(load_machine(al_rest[1]), limits);
            if (al_op == "intersect") combined = intersect(f, g);
            if (al_op == "union") combined = union_fn(f, g);
            if (al_op == "diff") combined = set_difference(f, g);
        } else {
            combined = complement_fn(f, {al_slope, al_intercept}, al_n0, limits);
        }
        std::vector<Str> inputs;
        for (std::size_t i = files; i < al_rest.size(); ++i)
            inputs.push_back(parse_word(al_rest[i]));
        if (inputs.size() == 1)
            print_set_lines(out, combined.eval(inputs.front()), combined.output);
        else
            for (const Str& x : inputs)
                print_set_inline(out, x, combined.eval(x), combined.output);
        return 0;
    }

    if (*orc) {
        const MachineSpec spec = load_machine(orc_file);
        const std::vector<Str> inputs = gather_inputs(orc_inputs, orc_input_file);
        if (!orc_oracle.empty() && (!orc_chain.empty() || orc_level != 0))
            throw InputError("--oracle and --chain/--level are mutually exclusive");
        FunctionHandle f;
        if (!orc_oracle.empty()) {
            f = relativized_fn(spec, resolve_oracle(orc_oracle, spec, limits), limits);
        } else if (!orc_chain.empty() || orc_level != 0) {
            std::vector<MachineSpec> chain;
            for (const std::string& path : orc_chain) chain.push_back(load_machine(path));
            const std::size_t k = orc_level != 0 ? orc_level : chain.size() + 1;
            f = build_level(k, spec, chain, limits);
        } else {
            throw InputError("oracle-run needs --oracle, or --chain/--level");
        }
        print_eval(out, f, inputs);
        return 0;
    }

    if (*pu) {
        const FunctionHandle f = from_machine(load_machine(pu_file), limits);
        const Str w = parse_word(pu_w);
        const PumpingParams params{pu_m, pu_c, pu_d};
        if (pu->count("output") > 0) {
            const Str s = parse_word(pu_s);
            const auto found = search_decomposition(f, w, s, params, pu_imax, pu_lenpres,
                                                    pu_relaxed, pu_candidates);
            if (found) {
                out << "found: " << describe_decomposition(*found) << "\n";
            } else {
                out << "none: no decomposition of (" << display(w) << ", " << display(s)
                    << ") passes at (m,c,d)=(" << pu_m << "," << pu_c << "," << pu_d
                    << "); this refutes pumping only at the supplied parameters\n";
            }
            return 0;
        }
        const PumpingReport report =
            pumping_report(f, params, {w}, pu_imax, pu_lenpres, pu_relaxed, pu_candidates);
        out << report.describe();
        return 0;
    }

    if (*re) {
        const FunctionHandle refiner = from_machine(load_machine(re_f), limits);
        const FunctionHandle target = from_machine(load_machine(re_g), limits);
        const RefinementResult r = refinement_check(target, refiner, re_len);
        if (r.holds) {
            out << refiner.name << " refines " << target.name << " on all inputs up to length "
                << re_len << "\n";
        } else {
            out << "no: " << r.reason;
            if (r.counterexample) out << " at input " << display(*r.counterexample);
            out << "\n";
        }
        return 0;
    }

    if (*vw) {
        bool all_ok = true;
        std::mt19937_64 rng(seed);
        for (const WitnessEntry& entry : catalog(limits)) {
            const std::size_t len = vw_len != 0 ? vw_len : entry.test_len;
            WitnessVerdict v = verify_entry(entry, len);
            if (v.ok && vw_samples > 0) {
                const auto& syms = entry.enum_alphabet.symbols();
                std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
                std::uniform_int_distribution<std::size_t> extra(1, 2);
                for (std::size_t i = 0; i < vw_samples && v.ok; ++i) {
                    Str x;
                    const std::size_t n = len + extra(rng);
                    for (std::size_t j = 0; j < n; ++j) x.push_back(syms[pick(rng)]);
                    const OutputSet got = entry.construction.eval(x);
                    const OutputSet want = entry.brute.eval(x);
                    if (got != want) {
                        v.ok = false;
                        v.mismatch_input = x;
                        v.detail = entry.name + " differs from its brute-force twin at "
                                                "sampled input \"" +
                                   to_utf8(x) + "\"";
                    }
                }
            }
            if (v.ok) {
                out << entry.name << ": ok (all inputs up to length " << len;
                if (vw_samples > 0) out << ", plus " << vw_samples << " longer samples";
                out << ")\n";
            } else {
                all_ok = false;
                out << entry.name << ": MISMATCH " << v.detail << "\n";
            }
        }
        if (!vw_dir.empty()) {
            for (const auto& [file, spec] : machine_corpus()) {
                const std::string path = vw_dir + "/" + file;
                try {
                    if (load_machine(path) == spec) {
                        out << file << ": matches its builder\n";
                    } else {
                        all_ok = false;
                        out << file << ": DIFFERS from its builder\n";
                    }
                } catch (const Error& e) {
                    all_ok = false;
                    out << file << ": UNREADABLE " << e.what() << "\n";
                }
            }
        }
        if (!all_ok) throw ValidationError("witness verification failed");
        out << "all witnesses verified\n";
        return 0;
    }

    err << "no subcommand selected\n";
    return 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_command(args, out, err);
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pdtfun
