#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "snc/conjectures.hpp"
#include "snc/digraph.hpp"
#include "snc/enumeration.hpp"
#include "snc/errors.hpp"

using namespace snc;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/" + name) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};
}

TEST_CASE("generator is the documented splitmix64") {
    // Reference values for seed 0 published with the original algorithm
    SplitMix64 gen(0);
    CHECK(gen.next() == 0xE220A8397B1DCDAFULL);
    CHECK(gen.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(gen.next() == 0x06C45D188009454FULL);

    SplitMix64 again(0);
    CHECK(again.next() == 0xE220A8397B1DCDAFULL);

    CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
    CHECK(child_seed(7, 0) == mix64(7 + 0x9E3779B97F4A7C15ULL));
    CHECK(child_seed(7, 1) != child_seed(7, 0));
    CHECK(child_seed(8, 0) != child_seed(7, 0));
}

TEST_CASE("stream sizes follow the pair-state counts") {
    CHECK(DigraphStream::all(1).size() == 1);
    CHECK(DigraphStream::all(2).size() == 3);
    CHECK(DigraphStream::all(3).size() == 27);
    CHECK(DigraphStream::all(4).size() == 729);
    CHECK(DigraphStream::all(5).size() == 59049);
    CHECK(DigraphStream::tournaments(2).size() == 2);
    CHECK(DigraphStream::tournaments(3).size() == 8);
    CHECK(DigraphStream::tournaments(4).size() == 64);
    CHECK(DigraphStream::tournaments(6).size() == 32768);
    CHECK_THROWS_AS(DigraphStream::all(0), EmptyDigraph);
    CHECK_THROWS_AS(DigraphStream::all(7), SizeCapExceeded);
    CHECK_THROWS_AS(DigraphStream::tournaments(8), SizeCapExceeded);
    CHECK(DigraphStream::all(7, 7).size() == 10460353203ULL);  // cap raised
}

TEST_CASE("indexing is lexicographic in pair states, most significant first") {
    const DigraphStream s = DigraphStream::all(3);
    // pairs in order (1,2),(1,3),(2,3); index digits base 3
    CHECK(s.at(0) == build_digraph(3, {}));
    CHECK(s.at(1) == build_digraph(3, {{2, 3}}));          // last pair state 1
    CHECK(s.at(2) == build_digraph(3, {{3, 2}}));          // last pair state 2
    CHECK(s.at(3) == build_digraph(3, {{1, 3}}));          // middle pair state 1
    CHECK(s.at(9) == build_digraph(3, {{1, 2}}));          // first pair state 1
    CHECK(s.at(13) == build_digraph(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(s.at(26) == build_digraph(3, {{2, 1}, {3, 1}, {3, 2}}));

    const DigraphStream t = DigraphStream::tournaments(3);
    CHECK(t.at(0) == build_digraph(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(t.at(7) == build_digraph(3, {{2, 1}, {3, 1}, {3, 2}}));
    CHECK_THROWS_AS(s.at(27), std::out_of_range);
}

TEST_CASE("every stream position is distinct and every tournament is complete") {
    std::set<std::vector<Arc>> seen;
    const DigraphStream s = DigraphStream::all(3);
    for (std::uint64_t i = 0; i < s.size(); ++i) seen.insert(s.at(i).arcs());
    CHECK(seen.size() == 27);

    const DigraphStream t = DigraphStream::tournaments(4);
    for (std::uint64_t i = 0; i < t.size(); ++i)
        REQUIRE(t.at(i).arc_count() == 6);  // all C(4,2) pairs oriented
}

TEST_CASE("seeded digraphs are reproducible and respect the probabilities") {
    const Digraph a = random_digraph(6, r(1, 3), r(1, 3), 42);
    const Digraph b = random_digraph(6, r(1, 3), r(1, 3), 42);
    CHECK(a == b);
    CHECK_FALSE(a == random_digraph(6, r(1, 3), r(1, 3), 43));

    CHECK(random_digraph(5, r(0), r(0), 1).arc_count() == 0);
    const Digraph full = random_digraph(5, r(1), r(0), 1);
    CHECK(full.arc_count() == 10);
    for (const Arc& arc : full.arcs()) REQUIRE(arc.tail < arc.head);
    const Digraph back = random_digraph(5, r(0), r(1), 1);
    for (const Arc& arc : back.arcs()) REQUIRE(arc.tail > arc.head);

    CHECK_THROWS_AS(random_digraph(3, r(2, 3), r(1, 2), 0), InvalidProbability);
    CHECK_THROWS_AS(random_digraph(3, r(-1, 3), r(1, 3), 0), InvalidProbability);
    CHECK_THROWS_AS(random_digraph(0, r(1, 3), r(1, 3), 0), EmptyDigraph);
}

TEST_CASE("canonical form is an isomorphism invariant") {
    const Digraph cyc = build_digraph(3, {{1, 2}, {2, 3}, {3, 1}});
    const Digraph relabeled = build_digraph(3, {{2, 1}, {1, 3}, {3, 2}});  // same cycle
    CHECK(canonicalize(cyc) == canonicalize(relabeled));
    CHECK(canonicalize(canonicalize(cyc)) == canonicalize(cyc));

    // the two orientations of a path are NOT isomorphic to the out-star
    const Digraph path = build_digraph(3, {{1, 2}, {2, 3}});
    const Digraph star = build_digraph(3, {{1, 2}, {1, 3}});
    CHECK_FALSE(canonicalize(path) == canonicalize(star));

    // a single arc canonicalizes to 1->2
    CHECK(canonicalize(build_digraph(2, {{2, 1}})) == build_digraph(2, {{1, 2}}));
    CHECK_THROWS_AS(canonicalize(build_digraph(9, {}), 8), SizeCapExceeded);
}

TEST_CASE("canonical form is the least arc list over all relabelings") {
    SplitMix64 gen(606);
    for (int trial = 0; trial < 20; ++trial) {
        const Digraph d = random_digraph(4, r(1, 3), r(1, 3), gen.next());
        const Digraph c = canonicalize(d);
        // canonical arcs compare <= the original's arcs under the same order
        CHECK_FALSE(c.arcs() > d.arcs());
        // and relabeling first never changes the result
        const Digraph shuffled = build_digraph(
            4, [&] {
                std::vector<Arc> arcs;
                const int perm[5] = {0, 3, 1, 4, 2};
                for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
                return arcs;
            }());
        CHECK(canonicalize(shuffled) == c);
    }
}

TEST_CASE("checkpoint text round-trips") {
    const Checkpoint c{EnumMode::Tournaments, 5, 17, 3};
    CHECK(checkpoint_to_string(c) == "tournaments 5 17 3");
    const Checkpoint back = checkpoint_from_string("tournaments 5 17 3");
    CHECK(back.mode == EnumMode::Tournaments);
    CHECK(back.n == 5);
    CHECK(back.next_index == 17);
    CHECK(back.violations_so_far == 3);
    CHECK(checkpoint_from_string("all 4 0 0").mode == EnumMode::All);
    CHECK(checkpoint_from_string("random 4 9 0").mode == EnumMode::Random);
    CHECK_THROWS_AS(checkpoint_from_string("bogus 4 0 0"), ParseError);
    CHECK_THROWS_AS(checkpoint_from_string("all 4 0"), ParseError);
    CHECK_THROWS_AS(checkpoint_from_string(""), ParseError);
}

TEST_CASE("mode names round-trip") {
    CHECK(std::string(enum_mode_name(EnumMode::All)) == "all");
    CHECK(std::string(enum_mode_name(EnumMode::Tournaments)) == "tournaments");
    CHECK(std::string(enum_mode_name(EnumMode::Random)) == "random");
    CHECK(enum_mode_from_name("all") == EnumMode::All);
    CHECK(enum_mode_from_name("tournaments") == EnumMode::Tournaments);
    CHECK(enum_mode_from_name("random") == EnumMode::Random);
    CHECK_FALSE(enum_mode_from_name("ALL").has_value());
    CHECK_FALSE(enum_mode_from_name("").has_value());
}

TEST_CASE("a full small sweep is clean") {
    EnumSpec spec;
    spec.n = 3;
    spec.mode = EnumMode::All;
    const SearchReport rep = sweep(spec);
    CHECK(rep.start_index == 0);
    CHECK(rep.enumerated == 27);
    CHECK(rep.checked == 27);
    CHECK(rep.clean());
    CHECK(rep.violation_count == 0);
    for (const auto& list : rep.counterexamples) CHECK(list.empty());
}

TEST_CASE("sweep reports are identical across thread counts") {
    EnumSpec spec;
    spec.n = 4;
    spec.mode = EnumMode::All;
    const SearchReport one = sweep(spec, 1);
    const SearchReport four = sweep(spec, 4);
    CHECK(one.enumerated == four.enumerated);
    CHECK(one.checked == four.checked);
    CHECK(one.counterexamples == four.counterexamples);
    CHECK(one.violation_count == four.violation_count);
    CHECK(one.clean());
    CHECK(four.clean());
}

TEST_CASE("random-mode sweeps draw per-instance child seeds") {
    EnumSpec spec;
    spec.n = 5;
    spec.mode = EnumMode::Random;
    spec.sample_count = 40;
    spec.seed = 1234;
    const SearchReport rep = sweep(spec, 2);
    CHECK(rep.enumerated == 40);
    CHECK(rep.checked == 40);
    CHECK(rep.clean());
    // replaying a single index must reproduce instance i of the batch
    const Digraph d17 = random_digraph(5, spec.p_forward, spec.p_backward,
                                       child_seed(spec.seed, 17));
    CHECK(d17.vertex_count() == 5);
}

TEST_CASE("dedup keeps exactly the canonical representatives") {
    EnumSpec spec;
    spec.n = 3;
    spec.mode = EnumMode::All;
    spec.dedup = true;
    const SearchReport rep = sweep(spec, 3);
    CHECK(rep.enumerated == 27);
    // count canonical instances directly
    std::uint64_t canonical = 0;
    const DigraphStream s = DigraphStream::all(3);
    for (std::uint64_t i = 0; i < s.size(); ++i)
        if (canonicalize(s.at(i)) == s.at(i)) ++canonical;
    CHECK(rep.checked == canonical);
    CHECK(canonical == 7);  // the isomorphism classes of 3-vertex digraphs
    CHECK(rep.clean());
}

TEST_CASE("pruned sweeps skip everything below the degree bound") {
    EnumSpec spec;
    spec.n = 4;
    spec.mode = EnumMode::All;
    spec.prune = true;
    const SearchReport rep = sweep(spec);
    CHECK(rep.enumerated == 729);
    CHECK(rep.checked == 0);  // n = 4 cannot reach out-degree 7
    CHECK(rep.clean());
}

TEST_CASE("a checkpoint resumes a sweep where it stopped") {
    TempFile ckpt("snc_test_resume.ckpt");
    {
        std::ofstream out(ckpt.path);
        out << "all 3 20 0\n";
    }
    EnumSpec spec;
    spec.n = 3;
    spec.mode = EnumMode::All;
    const SearchReport rep = sweep(spec, 1, ckpt.path);
    CHECK(rep.start_index == 20);
    CHECK(rep.enumerated == 7);  // indices 20..26
    CHECK(rep.clean());
    // the file now records completion
    std::ifstream in(ckpt.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "all 3 27 0");
}

TEST_CASE("a finished checkpoint yields an empty incremental run") {
    TempFile ckpt("snc_test_done.ckpt");
    {
        std::ofstream out(ckpt.path);
        out << "all 3 27 0\n";
    }
    EnumSpec spec;
    spec.n = 3;
    spec.mode = EnumMode::All;
    const SearchReport rep = sweep(spec, 1, ckpt.path);
    CHECK(rep.start_index == 27);
    CHECK(rep.enumerated == 0);
    CHECK(rep.clean());
}

TEST_CASE("checkpoints for a different run shape are rejected") {
    TempFile ckpt("snc_test_mismatch.ckpt");
    {
        std::ofstream out(ckpt.path);
        out << "tournaments 3 4 0\n";
    }
    EnumSpec spec;
    spec.n = 3;
    spec.mode = EnumMode::All;
    CHECK_THROWS_AS(sweep(spec, 1, ckpt.path), std::invalid_argument);
}

TEST_CASE("a fresh checkpoint file is written as the sweep advances") {
    TempFile ckpt("snc_test_fresh.ckpt");
    EnumSpec spec;
    spec.n = 2;
    spec.mode = EnumMode::All;
    std::uint64_t last_done = 0;
    std::uint64_t total = 0;
    const SearchReport rep = sweep(spec, 1, ckpt.path, [&](std::uint64_t done, std::uint64_t t) {
        last_done = done;
        total = t;
    });
    CHECK(rep.enumerated == 3);
    CHECK(last_done == 3);
    CHECK(total == 3);
    std::ifstream in(ckpt.path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "all 2 3 0");
}

TEST_CASE("invalid sweep shapes are rejected up front") {
    EnumSpec bad_n;
    bad_n.n = 0;
    CHECK_THROWS_AS(sweep(bad_n), std::invalid_argument);
    EnumSpec bad_samples;
    bad_samples.n = 3;
    bad_samples.mode = EnumMode::Random;
    bad_samples.sample_count = 0;
    CHECK_THROWS_AS(sweep(bad_samples), std::invalid_argument);
    EnumSpec over_cap;
    over_cap.n = 7;
    over_cap.mode = EnumMode::All;
    CHECK_THROWS_AS(sweep(over_cap), SizeCapExceeded);
}

TEST_CASE("instance labels name the mode, size, and index") {
    EnumSpec spec;
    spec.n = 4;
    spec.mode = EnumMode::Tournaments;
    CHECK(instance_label(spec, 12) == "tournaments:4:12");
    spec.mode = EnumMode::All;
    CHECK(instance_label(spec, 0) == "all:4:0");
}

TEST_CASE("verdict statuses are isomorphism invariants") {
    // relabeling a digraph permutes S_D symmetrically, so every checker
    // must report the same status
    SplitMix64 gen(777);
    for (int trial = 0; trial < 15; ++trial) {
        const Digraph d = random_digraph(4, r(1, 3), r(1, 3), gen.next());
        const Digraph c = canonicalize(d);
        const CrossCheckReport a = consistency_check(d);
        const CrossCheckReport b = consistency_check(c);
        REQUIRE(a.consistent());
        REQUIRE(b.consistent());
        for (std::size_t i = 0; i < 6; ++i)
            REQUIRE(a.verdicts[i].satisfied() == b.verdicts[i].satisfied());
    }
}
