#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdtfun/oracle.hpp"
#include "pdtfun/witnesses.hpp"
#include "random_machines.hpp"
#include "test_util.hpp"

using namespace pdtfun;
using testutil::W;
using testutil::random_turing;

TEST_CASE("random query machines keep the query tape clean and swap cleanly") {
    std::mt19937_64 rng(testutil::seed());
    const std::vector<Oracle> oracles{oracle_palindromes(testutil::bin()),
                                      oracle_dup(testutil::bin()),
                                      oracle_none(testutil::bin())};
    const auto inputs = strings_up_to(testutil::bin(), 3);
    std::size_t total_events = 0;
    std::size_t checked = 0;
    for (int i = 0; i < 10; ++i) {
        const MachineSpec m = random_turing(rng, i);
        REQUIRE(validate_spec(m).ok());
        const MachineSpec swapped = swap_yes_no(m);
        const Oracle& A = oracles[i % oracles.size()];
        const Oracle notA = complement_oracle(A);
        for (const Str& x : inputs) {
            const RunResult r = run_machine(m, x, &A, {}, true);
            REQUIRE(r.termination_ok);
            for (const QueryEvent& e : r.query_events) {
                CHECK(e.tape_len_after == 0);
                CHECK(e.head_after == 0);
            }
            total_events += r.query_events.size();
            CHECK(eval_turing(m, A, x) == eval_turing(swapped, notA, x));
            ++checked;
        }
    }
    CHECK(checked >= 100);
    CHECK(total_events >= 100);
}

TEST_CASE("many-one evaluation filters by the queried word") {
    const MachineSpec copy = make_copy_query();
    const Oracle pal = oracle_palindromes(testutil::bin());
    CHECK(eval_many_one(copy, oracle_all(testutil::bin()), W("01")) == OutputSet{W("01")});
    CHECK(eval_many_one(copy, oracle_none(testutil::bin()), W("01")).empty());
    CHECK(eval_many_one(copy, pal, W("010")) == OutputSet{W("010")});
    CHECK(eval_many_one(copy, pal, W("01")).empty());

    SUBCASE("mode mismatches are rejected") {
        CHECK_THROWS_AS(eval_many_one(make_square_base(), pal, W("0")), InputError);
        CHECK_THROWS_AS(eval_turing(make_copy_query(), pal, W("0")), InputError);
        CHECK_THROWS_AS(relativized_fn(make_eta_pal(), pal), InputError);
    }
}

TEST_CASE("languages lifted from machines") {
    const Oracle pal = language_from_machine(make_eta_pal());
    CHECK(pal.membership(W("010")));
    CHECK(pal.membership(W("")));
    CHECK_FALSE(pal.membership(W("01")));

    SUBCASE("repeat queries are consistent") {
        for (int i = 0; i < 3; ++i) CHECK(pal.membership(W("0110")));
    }
    SUBCASE("words outside the machine alphabet are non-members") {
        CHECK_FALSE(pal.membership(W("0♮1")));
        CHECK_FALSE(pal.membership(W("2")));
    }
    SUBCASE("complement flips membership, even off-alphabet") {
        const Oracle notpal = complement_oracle(pal);
        CHECK_FALSE(notpal.membership(W("010")));
        CHECK(notpal.membership(W("01")));
        CHECK(notpal.membership(W("0♮1")));
    }
    SUBCASE("a query machine needs an inner oracle to define a language") {
        CHECK_THROWS_AS(language_from_machine(make_copy_query()), InputError);
    }
    SUBCASE("a relativized many-one machine accepts through its inner oracle") {
        const Oracle L = language_from_machine(make_copy_query(), pal);
        CHECK(L.membership(W("0110")));
        CHECK_FALSE(L.membership(W("011")));
    }
}

TEST_CASE("level 2 evaluates square detection through a complemented inequality check") {
    const FunctionHandle f = build_level(2, make_square_base(), {make_neq_pair()});
    CHECK(f.eval(W("0101")) == OutputSet{W(""), W("01")});
    for (const Str& x : strings_up_to(testutil::bin(), 5)) CHECK(f.eval(x) == brute_square_sub(x));

    SUBCASE("the same tower built by hand") {
        const Oracle eq = complement_oracle(language_from_machine(make_neq_pair()));
        CHECK(eval_turing(make_square_base(), eq, W("0101")) == OutputSet{W(""), W("01")});
    }
    SUBCASE("query words stay within the declared query alphabet") {
        const Oracle eq = complement_oracle(language_from_machine(make_neq_pair()));
        const RunResult r = run_machine(make_square_base(), W("0101"), &eq, {}, true);
        REQUIRE_FALSE(r.query_events.empty());
        for (const QueryEvent& e : r.query_events)
            CHECK(make_square_base().query->contains_all(e.word));
    }
}

TEST_CASE("copier towers alternate between the empty function and the identity") {
    // l_pal only accepts words carrying the separator mark, so its complement
    // says yes to every plain binary query.  Each copier layer above passes
    // its whole input through that verdict and the complement in between
    // flips it, so adding a layer toggles the tower between rejecting
    // everything and accepting everything.
    const FunctionHandle empty3 =
        build_level(3, make_copy_query(), {make_copy_query(), make_l_pal()});
    const FunctionHandle ident4 =
        build_level(4, make_copy_query(),
                    {make_copy_query(), make_copy_query(), make_l_pal()});
    CHECK(empty3.name == "level3(copy_query)");
    CHECK(ident4.name == "level4(copy_query)");
    for (const Str& x : strings_up_to(testutil::bin(), 4)) {
        CHECK(empty3.eval(x).empty());
        CHECK(ident4.eval(x) == OutputSet{x});
    }
}

TEST_CASE("level construction rejects malformed towers") {
    CHECK_THROWS_AS(build_level(0, make_pal_sub(), {}), InputError);
    CHECK_THROWS_AS(build_level(5, make_square_base(),
                                {make_neq_pair(), make_neq_pair(), make_neq_pair(),
                                 make_neq_pair()}),
                    InputError);
    CHECK_THROWS_AS(build_level(2, make_square_base(), {}), InputError);
    CHECK_THROWS_AS(build_level(1, make_square_base(), {}), InputError);

    SUBCASE("level 1 is the plain function") {
        const FunctionHandle f = build_level(1, make_pal_sub(), {});
        const FunctionHandle g = from_machine(make_pal_sub());
        for (const Str& x : strings_up_to(testutil::bin(), 4)) CHECK(f.eval(x) == g.eval(x));
    }
}

TEST_CASE("degenerate oracles reduce a promoted machine to set logic") {
    const MachineSpec promoted = as_many_one(make_pal_sub(), testutil::bin());
    const Oracle yes = oracle_all(testutil::bin());
    const Oracle no = oracle_none(testutil::bin());
    for (const Str& x : strings_up_to(testutil::bin(), 4)) {
        CHECK(eval_many_one(promoted, yes, x) == enumerate_outputs(make_pal_sub(), x));
        CHECK(eval_many_one(promoted, no, x).empty());
    }
}
