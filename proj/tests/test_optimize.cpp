#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdtfun/optimize.hpp"
#include "pdtfun/witnesses.hpp"
#include "test_util.hpp"

using namespace pdtfun;
using testutil::W;

namespace {

// A stack-free machine with accepting outputs of two different lengths on
// the empty input: one branch stays silent, the other emits a mark.
MachineSpec mixed_lengths() {
    MachineSpec m;
    m.name = "mixed";
    m.input = testutil::bin();
    m.stack = Alphabet({U'Z'});
    m.output = testutil::bin();
    m.start = "go";
    m.bottom = U'Z';
    m.accepting = {"acc"};
    m.step_bound = {1, 3};
    const auto add = [&](const std::string& from, std::optional<Symbol> read,
                         const std::string& to, std::optional<Symbol> emit) {
        Transition t;
        t.from = from;
        t.read = read;
        t.top = U'Z';
        t.to = to;
        t.push = W("Z");
        t.emit = emit;
        m.transitions.push_back(t);
    };
    add("go", kLeftEnd, "a", std::nullopt);
    add("go", kLeftEnd, "b", U'1');
    add("a", kRightEnd, "acc", std::nullopt);
    add("b", kRightEnd, "acc", std::nullopt);
    return m;
}

} // namespace

TEST_CASE("extremal follows the listing order, not code point order") {
    const OutputSet values{W("0"), W("1"), W("00")};
    CHECK(extremal(values, OptMode::maximum, testutil::bin()) == W("1"));
    CHECK(extremal(values, OptMode::minimum, testutil::bin()) == W("0"));

    const Alphabet flipped({U'1', U'0'});
    CHECK(extremal(values, OptMode::maximum, flipped) == W("00"));
    CHECK(extremal(values, OptMode::minimum, flipped) == W("1"));

    CHECK(extremal({W("")}, OptMode::maximum, testutil::bin()) == W(""));
    CHECK_THROWS_AS(extremal({}, OptMode::maximum, testutil::bin()), InputError);
}

TEST_CASE("a proper prefix ranks below its extensions in both modes") {
    const OutputSet values{W("0"), W("01"), W("011")};
    CHECK(extremal(values, OptMode::minimum, testutil::bin()) == W("0"));
    CHECK(extremal(values, OptMode::maximum, testutil::bin()) == W("011"));
}

TEST_CASE("opt_eval equals extremal over the enumerated set") {
    const MachineSpec pal = make_pal_sub();
    for (const Str& x : strings_up_to(testutil::bin(), 6)) {
        const OutputSet values = enumerate_outputs(pal, x);
        CHECK(opt_eval(pal, OptMode::maximum, x) ==
              extremal(values, OptMode::maximum, pal.output));
        CHECK(opt_eval(pal, OptMode::minimum, x) ==
              extremal(values, OptMode::minimum, pal.output));
    }
    CHECK(opt_eval(pal, OptMode::maximum, W("0110")) == W("11"));
    CHECK(opt_eval(pal, OptMode::minimum, W("0110")) == W(""));
}

TEST_CASE("opt_eval refuses a machine with no accepting path") {
    CHECK_THROWS_AS(opt_eval(make_reject_all(), OptMode::maximum, W("01")), ValidationError);
}

TEST_CASE("equal-length optimization polices its restrictions") {
    SUBCASE("a stack-free single-valued machine is fine") {
        const MachineSpec strip = make_strip_suffix();
        CHECK(opt_nfa_el_eval(strip, OptMode::maximum, W("01#10")) == W("10"));
        CHECK(opt_nfa_el_eval(strip, OptMode::maximum, W("01#10")) ==
              opt_eval(strip, OptMode::maximum, W("01#10")));
    }
    SUBCASE("stack use is rejected up front") {
        CHECK_THROWS_AS(opt_nfa_el_eval(make_pal_sub(), OptMode::maximum, W("00")),
                        InputError);
    }
    SUBCASE("outputs of mixed lengths are rejected") {
        const MachineSpec m = mixed_lengths();
        REQUIRE(is_stack_free(m));
        CHECK(enumerate_outputs(m, W("")) == OutputSet{W(""), W("1")});
        CHECK_THROWS_AS(opt_nfa_el_eval(m, OptMode::maximum, W("")), ValidationError);
        CHECK(opt_eval(m, OptMode::maximum, W("")) == W("1"));
    }
}

TEST_CASE("opt_refinement builds a named single-valued refinement") {
    const FunctionHandle pal = from_machine(make_pal_sub());
    const FunctionHandle mx = opt_refinement(pal, OptMode::maximum);
    const FunctionHandle mn = opt_refinement(pal, OptMode::minimum);
    CHECK(mx.name == "max(pal_sub)");
    CHECK(mn.name == "min(pal_sub)");
    for (const Str& x : strings_up_to(testutil::bin(), 5)) {
        CHECK(mx.eval(x).size() == 1);
        CHECK(pal.eval(x).count(*mx.eval(x).begin()) == 1);
    }
    CHECK(refinement_check(pal, mx, 6).holds);
    CHECK(refinement_check(pal, mn, 6).holds);

    SUBCASE("evaluating past the domain is a totality violation") {
        const FunctionHandle eta = from_machine(make_eta_pal());
        const FunctionHandle best = opt_refinement(eta, OptMode::maximum);
        CHECK(best.eval(W("00")) == OutputSet{W("1")});
        CHECK_THROWS_AS(best.eval(W("01")), ValidationError);
    }
}
