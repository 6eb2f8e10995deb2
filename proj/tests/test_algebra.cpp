#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdtfun/function.hpp"
#include "pdtfun/optimize.hpp"
#include "pdtfun/witnesses.hpp"
#include "test_util.hpp"

using namespace pdtfun;
using testutil::W;

namespace {

bool is_palindrome(const Str& x) {
    return std::equal(x.begin(), x.end(), x.rbegin());
}

} // namespace

TEST_CASE("pointwise operations behave like set algebra") {
    const FunctionHandle pal_sub = from_machine(make_pal_sub());
    const FunctionHandle eta = from_machine(make_eta_pal());
    const auto inputs = strings_up_to(testutil::bin(), 6);

    SUBCASE("union and intersection are idempotent and commutative") {
        const FunctionHandle u = union_fn(pal_sub, pal_sub);
        const FunctionHandle a = intersect(pal_sub, eta);
        const FunctionHandle b = intersect(eta, pal_sub);
        for (const Str& x : inputs) {
            CHECK(u.eval(x) == pal_sub.eval(x));
            CHECK(a.eval(x) == b.eval(x));
        }
    }
    SUBCASE("difference agrees with intersecting the bounded complement") {
        const FunctionHandle diff = set_difference(pal_sub, eta);
        const FunctionHandle via_comp = intersect(pal_sub, complement_fn(eta, {1, 1}, 0));
        for (const Str& x : inputs) CHECK(diff.eval(x) == via_comp.eval(x));
    }
    SUBCASE("union with the undefined function changes nothing") {
        const FunctionHandle bottom = everywhere_undefined(testutil::bin(), testutil::bin());
        const FunctionHandle u = union_fn(pal_sub, bottom);
        for (const Str& x : inputs) CHECK(u.eval(x) == pal_sub.eval(x));
    }
    SUBCASE("operand input alphabets must agree") {
        CHECK_THROWS_AS(intersect(pal_sub, from_machine(make_l_pal())), InputError);
        CHECK_THROWS_AS(union_fn(pal_sub, from_machine(make_strip_suffix())), InputError);
    }
}

TEST_CASE("bounded complement") {
    const FunctionHandle all = from_machine(make_eta_all());
    const FunctionHandle comp = complement_fn(all, {0, 1}, 0);
    CHECK(comp.eval(W("0")) == OutputSet{W(""), W("0")});
    CHECK(comp.eval(W("")) == OutputSet{W(""), W("0")});

    SUBCASE("below the threshold the complement is undefined") {
        const FunctionHandle gated = complement_fn(all, {0, 1}, 2);
        CHECK(gated.eval(W("0")).empty());
        CHECK(gated.eval(W("00")) == OutputSet{W(""), W("0")});
    }
    SUBCASE("complementing twice restores a bounded function") {
        const FunctionHandle chi = from_machine(make_chi_pal());
        const FunctionHandle twice = complement_fn(complement_fn(chi, {0, 1}, 0), {0, 1}, 0);
        for (const Str& x : strings_up_to(testutil::bin(), 6))
            CHECK(twice.eval(x) == chi.eval(x));
    }
}

TEST_CASE("composition") {
    const FunctionHandle rev_tail = from_machine(make_rev_tail());
    const FunctionHandle dup_emit = from_machine(make_dup_emit_rev());
    const FunctionHandle dup = compose(rev_tail, dup_emit);
    CHECK(dup.eval(W("01")) == OutputSet{W("01♮01")});
    CHECK(dup.eval(W("")) == OutputSet{W("♮")});
    CHECK(dup.eval(W("0♮1")) == OutputSet{W("")});

    SUBCASE("identity is a left and right unit") {
        const FunctionHandle pal_sub = from_machine(make_pal_sub());
        const FunctionHandle id = identity_fn(testutil::bin());
        const FunctionHandle left = compose(id, pal_sub);
        const FunctionHandle right = compose(pal_sub, id);
        for (const Str& x : strings_up_to(testutil::bin(), 5)) {
            CHECK(left.eval(x) == pal_sub.eval(x));
            CHECK(right.eval(x) == pal_sub.eval(x));
        }
    }
    SUBCASE("inner outputs must be legal outer inputs") {
        CHECK_THROWS_AS(compose(from_machine(make_eta_pal()), dup_emit), InputError);
    }
}

TEST_CASE("refinement") {
    const FunctionHandle pal_sub = from_machine(make_pal_sub());
    SUBCASE("every function refines itself") {
        CHECK(refinement_check(pal_sub, pal_sub, 5).holds);
    }
    SUBCASE("the dictionary maximum refines the full set function") {
        const RefinementResult r = refinement_check(pal_sub, opt_refinement(pal_sub, OptMode::maximum), 6);
        CHECK(r.holds);
    }
    SUBCASE("a partial indicator does not refine the total one") {
        const RefinementResult r =
            refinement_check(from_machine(make_chi_pal()), from_machine(make_eta_pal()), 4);
        REQUIRE_FALSE(r.holds);
        REQUIRE(r.counterexample.has_value());
        CHECK_FALSE(is_palindrome(*r.counterexample));
        CHECK_FALSE(r.reason.empty());
    }
}

TEST_CASE("domain and range enumeration") {
    const FunctionHandle eta = from_machine(make_eta_pal());
    std::set<Str> pals;
    for (const Str& x : strings_up_to(testutil::bin(), 4))
        if (is_palindrome(x)) pals.insert(x);
    CHECK(domain_of(eta, 4) == pals);
    CHECK(range_of(from_machine(make_chi_pal()), 3) == OutputSet{W("0"), W("1")});
    CHECK(range_of(everywhere_undefined(testutil::bin(), testutil::bin()), 3).empty());
}

TEST_CASE("membership through the length-aligned track presentation") {
    SUBCASE("predicate form searches marked extensions") {
        // Tracks whose lanes project to the same string and carry at least
        // one aligned extension mark, so a hit always needs an extension.
        const auto marked_eq = [](const Str& t) {
            const auto [u, l] = track_split(t);
            if (u.size() != l.size()) return false;
            bool marked = false;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i] == kExt && l[i] == kExt) marked = true;
            return marked && project_naturals(u) == project_naturals(l);
        };
        CHECK(nivat_check(marked_eq, {1, 1}, W("01"), W("01"), 4));
        CHECK_FALSE(nivat_check(marked_eq, {1, 1}, W("01"), W("10"), 4));
        CHECK_FALSE(nivat_check(marked_eq, {1, 1}, W("01"), W("01"), 2));
        CHECK_FALSE(nivat_check(marked_eq, {0, 0}, W("01"), W("01"), 4));
    }
    SUBCASE("acceptor form tolerates tracks outside the machine alphabet") {
        const MachineSpec eq = make_track_eq();
        CHECK(nivat_check(eq, {1, 0}, W("01#1"), W("01##"), 6));
        CHECK_FALSE(nivat_check(eq, {1, 0}, W("01#1"), W("01"), 6));
        CHECK_FALSE(nivat_check(eq, {1, 0}, W("00#1"), W("01##"), 6));
    }
}

TEST_CASE("advice membership decides the separated duplication language") {
    const MachineSpec eq = make_track_eq();
    const FunctionHandle suffix = from_machine(make_strip_suffix());
    for (const Str& x : strings_up_to(testutil::binh(), 5)) {
        const std::size_t cut = x.find(kPad);
        const bool expect = cut != Str::npos && x.find(kPad, cut + 1) == Str::npos &&
                            x.substr(0, cut) == x.substr(cut + 1);
        CHECK(advice_membership(eq, suffix, x) == expect);
    }
}

TEST_CASE("indicator builders") {
    const FunctionHandle chi = char_fn("chi", testutil::bin(), is_palindrome);
    const FunctionHandle eta = quasi_char_fn("eta", testutil::bin(), is_palindrome);
    CHECK(chi.eval(W("010")) == OutputSet{W("1")});
    CHECK(chi.eval(W("01")) == OutputSet{W("0")});
    CHECK(eta.eval(W("010")) == OutputSet{W("1")});
    CHECK(eta.eval(W("01")).empty());
    CHECK(chi.output_bound.eval(7) == 1);
}
