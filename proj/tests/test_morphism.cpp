#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <queue>

#include "clusterpic/morphism.hpp"

using namespace clusterpic;

namespace {

DimVec dv(std::initializer_list<int> xs) { return DimVec(xs); }

ClusterObject mod_of(const Model& m, const DimVec& d) { return module_obj(m.root_id(d)); }
ClusterObject sh_of(const Model& m, const DimVec& d) { return shifted_obj(m.root_id(d)); }

Sequence seq(std::initializer_list<ClusterObject> xs) { return Sequence(xs); }

// Backwards Hom/Ext vanishing for an unsigned sequence in display order.
bool exceptional_by_pairs(const Model& m, const Sequence& s) {
    for (size_t p = 0; p < s.size(); ++p)
        for (size_t q = 0; q < p; ++q) {
            const DimVec& a = m.roots[s[p].root];
            const DimVec& b = m.roots[s[q].root];
            if (hom_dim(m, a, b) != 0 || ext_dim(m, a, b) != 0) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("worked example: the six factorizations of [S1+S3+P1]", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    ClusterMorphism f = make_morphism(
        m, full_wide(m),
        {mod_of(m, dv({1, 0, 0})), mod_of(m, dv({0, 0, 1})), mod_of(m, dv({1, 1, 1}))});
    REQUIRE(f.cod.empty());

    auto got = factorizations(m, f);
    REQUIRE(got.size() == 6);

    ClusterObject S1 = mod_of(m, dv({1, 0, 0})), S3 = mod_of(m, dv({0, 0, 1}));
    ClusterObject P1 = mod_of(m, dv({1, 1, 1})), I2 = mod_of(m, dv({1, 1, 0}));
    ClusterObject S2sh = sh_of(m, dv({0, 1, 0})), P2sh = sh_of(m, dv({0, 1, 1}));
    std::set<Sequence> want{
        seq({S2sh, I2, S3}), seq({S2sh, S3, P1}), seq({I2, S1, S3}),
        seq({S3, P2sh, P1}), seq({S3, P1, S1}),  seq({I2, S3, S1}),
    };
    CHECK(std::set<Sequence>(got.begin(), got.end()) == want);

    // The corner wides of the same example.
    ClusterMorphism byS3 = make_morphism(m, full_wide(m), {S3});
    CHECK(byS3.cod == Wide{m.root_id(dv({1, 0, 0})), m.root_id(dv({0, 1, 0})),
                           m.root_id(dv({1, 1, 0}))});
    ClusterMorphism byP1 = make_morphism(m, full_wide(m), {P1});
    CHECK(byP1.cod == Wide{m.root_id(dv({0, 1, 0})), m.root_id(dv({0, 0, 1})),
                           m.root_id(dv({0, 1, 1}))});
}

TEST_CASE("worked example: composition through the two cube paths", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    ClusterObject S1 = mod_of(m, dv({1, 0, 0})), S3 = mod_of(m, dv({0, 0, 1}));
    ClusterObject P1 = mod_of(m, dv({1, 1, 1})), I2 = mod_of(m, dv({1, 1, 0}));

    ClusterMorphism f = make_morphism(m, full_wide(m), {S3});
    ClusterMorphism g = make_morphism(m, f.cod, {I2});
    ClusterMorphism h = compose(m, g, f);
    CHECK(h.dom == full_wide(m));
    CHECK(h.cod == Wide{m.root_id(dv({0, 1, 0}))});
    // Lifting I2 through [S3] lands on P1: dim I2 + dim S3 = dim P1.
    CHECK(h.T == std::vector<ClusterObject>{std::min(S3, P1), std::max(S3, P1)});

    ClusterMorphism f2 = make_morphism(m, full_wide(m), {P1});
    ClusterMorphism g2 = make_morphism(m, f2.cod, {S3});
    CHECK(compose(m, g2, f2) == h);

    // Completing both paths with the rank-1 morphism of the corner wide
    // reaches the full cluster morphism either way.
    ClusterMorphism tail = make_morphism(m, h.cod, {sh_of(m, dv({0, 1, 0}))});
    ClusterMorphism full = compose(m, tail, h);
    CHECK(full.T == std::vector<ClusterObject>{std::min({S1, S3, P1}), S3, std::max({S1, S3, P1})});
    CHECK(full.cod.empty());

    CHECK_THROWS_AS(compose(m, f, g), invalid_argument_error);
}

TEST_CASE("worked example: ordered-cluster bijection golden values", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    ClusterObject S1 = mod_of(m, dv({1, 0, 0})), S3 = mod_of(m, dv({0, 0, 1}));
    ClusterObject P1 = mod_of(m, dv({1, 1, 1}));
    Sequence s = seq({sh_of(m, dv({0, 1, 0})), S3, P1});

    auto ordered = to_ordered_cluster(m, full_wide(m), s);
    CHECK(ordered == std::vector<ClusterObject>{P1, S3, S1});
    CHECK(from_ordered_cluster(m, full_wide(m), ordered) == s);
}

TEST_CASE("identity and associativity laws", "[morphism]") {
    for (const char* spec : {"A2: 1>2", "B2: 1<(1,2)2"}) {
        Model m = build_model(spec);
        auto morphs = all_morphisms(m);
        std::map<Wide, std::vector<ClusterMorphism>> by_dom;
        for (const auto& f : morphs) by_dom[f.dom].push_back(f);

        for (const auto& f : morphs) {
            CHECK(compose(m, f, identity_morphism(f.dom)) == f);
            CHECK(compose(m, identity_morphism(f.cod), f) == f);
        }

        long long triples = 0;
        for (const auto& f : morphs)
            for (const auto& g : by_dom[f.cod])
                for (const auto& h : by_dom[g.cod]) {
                    CHECK(compose(m, h, compose(m, g, f)) ==
                          compose(m, compose(m, h, g), f));
                    ++triples;
                }
        CHECK(triples > 50);
    }
}

TEST_CASE("complete signed sequence counts equal clusters times n!", "[morphism]") {
    struct Row {
        const char* spec;
        const char* arrows;
        size_t count;
    };
    for (const Row& r : {Row{"A2: 1>2", "", 10}, Row{"A3: 1>2>3", "", 84},
                         Row{"A3: 1<2<3", "", 84}, Row{"B2: 1<(1,2)2", "", 12},
                         Row{"G2: 1<(1,3)2", "", 16}, Row{"A1xA1:", "", 8}}) {
        Model m = build_model(r.spec, r.arrows);
        auto seqs = all_signed_exceptional_sequences(m, full_wide(m));
        INFO(r.spec);
        CHECK(seqs.size() == r.count);
        long long fact = 1;
        for (int i = 2; i <= m.n(); ++i) fact *= i;
        CHECK(seqs.size() == all_clusters(m, full_wide(m)).size() * fact);
    }
}

TEST_CASE("bijection with ordered clusters is exact", "[morphism]") {
    for (const char* spec : {"A2: 1>2", "A3: 1>2>3", "B2: 1<(1,2)2"}) {
        Model m = build_model(spec);
        Wide w = full_wide(m);
        auto seqs = all_signed_exceptional_sequences(m, w);
        std::set<std::vector<ClusterObject>> images;
        std::set<Cluster> underlying;
        for (const Sequence& s : seqs) {
            auto ordered = to_ordered_cluster(m, w, s);
            CHECK(from_ordered_cluster(m, w, ordered) == s);
            images.insert(ordered);
            Cluster c(ordered.begin(), ordered.end());
            std::sort(c.begin(), c.end());
            underlying.insert(c);
        }
        CHECK(images.size() == seqs.size());
        auto cs = all_clusters(m, w);
        CHECK(underlying == std::set<Cluster>(cs.begin(), cs.end()));
    }
}

TEST_CASE("every factorization set has size k! and composes back", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    Wide w = full_wide(m);
    for (const auto& T : all_partial_clusters(m, w)) {
        ClusterMorphism f = make_morphism(m, w, T);
        auto fs = factorizations(m, f);
        long long fact = 1;
        for (size_t i = 2; i <= T.size(); ++i) fact *= (long long)i;
        CHECK((long long)fs.size() == fact);
        for (const Sequence& s : fs) CHECK(composite_morphism(m, w, s) == f);
    }
}

TEST_CASE("unsigned exceptional sequences match the pairwise predicate", "[morphism]") {
    struct Row {
        const char* spec;
        size_t count;
    };
    for (const Row& r : {Row{"A2: 1>2", 3}, Row{"A3: 1>2>3", 16}, Row{"A3: 1<2<3", 16},
                         Row{"B2: 1<(1,2)2", 4}, Row{"G2: 1<(1,3)2", 6}}) {
        Model m = build_model(r.spec);
        auto seqs = all_exceptional_sequences(m, full_wide(m));
        INFO(r.spec);
        CHECK(seqs.size() == r.count);

        // Brute force: every ordered n-tuple of distinct roots, filtered by
        // backwards Hom/Ext vanishing.
        std::set<Sequence> brute;
        int n = m.n(), nr = (int)m.roots.size();
        std::vector<int> pick(n);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                Sequence s;
                for (int id : pick) s.push_back(module_obj(id));
                if (exceptional_by_pairs(m, s)) brute.insert(s);
                return;
            }
            for (pick[depth] = 0; pick[depth] < nr; ++pick[depth]) {
                bool rep = false;
                for (int i = 0; i < depth; ++i) rep |= pick[i] == pick[depth];
                if (!rep) self(self, depth + 1);
            }
        };
        rec(rec, 0);
        CHECK(std::set<Sequence>(seqs.begin(), seqs.end()) == brute);
    }
}

TEST_CASE("factoring any object drops the rank by exactly one", "[morphism]") {
    for (const char* spec : {"A3: 1>2>3", "B2: 1<(1,2)2"}) {
        Model m = build_model(spec);
        for (const Wide& w : all_wide_subcategories(m))
            for (const ClusterObject& x : objects_of(m, w))
                CHECK(wide_rank(m, perp(m, w, {x})) == wide_rank(m, w) - 1);
    }
}

TEST_CASE("completion on the left", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    Wide w = full_wide(m);
    Sequence tail = seq({mod_of(m, dv({0, 0, 1}))});

    auto signed_full = complete_on_left(m, w, tail, true);
    CHECK(signed_full.size() == 10);
    std::set<Sequence> expect;
    for (const Sequence& s : all_signed_exceptional_sequences(m, w))
        if (s.back() == tail.back()) expect.insert(s);
    CHECK(std::set<Sequence>(signed_full.begin(), signed_full.end()) == expect);

    auto unsigned_full = complete_on_left(m, w, tail, false);
    CHECK(unsigned_full.size() == 3);
    for (const Sequence& s : unsigned_full) CHECK(exceptional_by_pairs(m, s));

    // Completions of the empty sequence are all complete sequences.
    CHECK(complete_on_left(m, w, {}, true).size() == 84);

    CHECK_THROWS_AS(complete_on_left(m, w, seq({sh_of(m, dv({1, 0, 0}))}), true),
                    invalid_argument_error);
}

TEST_CASE("sequence validation diagnostics", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    Wide w = full_wide(m);

    CHECK(check_signed_sequence(m, w, seq({sh_of(m, dv({0, 1, 0})), mod_of(m, dv({1, 1, 0})),
                                           mod_of(m, dv({0, 0, 1}))}))
              .ok);

    // Swapping two terms of a valid sequence breaks it.
    auto bad = check_signed_sequence(m, w, seq({mod_of(m, dv({0, 0, 1})), mod_of(m, dv({1, 1, 0})),
                                                sh_of(m, dv({0, 1, 0}))}));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.reason.empty());

    // S1 is not projective, so S1[1] is illegal as a first factor.
    auto shine = check_signed_sequence(m, w, seq({sh_of(m, dv({1, 0, 0}))}));
    CHECK_FALSE(shine.ok);
    CHECK(shine.reason.find("not relatively projective") != std::string::npos);

    // A term outside the perpendicular category of the factors before it.
    auto outside = check_signed_sequence(
        m, w, seq({mod_of(m, dv({1, 0, 0})), mod_of(m, dv({1, 1, 1}))}));
    CHECK_FALSE(outside.ok);
    CHECK(outside.reason.find("does not lie") != std::string::npos);
}

TEST_CASE("braid moves: golden values from the worked example", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    Wide w = full_wide(m);
    ClusterObject S1 = mod_of(m, dv({1, 0, 0})), S3 = mod_of(m, dv({0, 0, 1}));
    ClusterObject P1 = mod_of(m, dv({1, 1, 1})), I2 = mod_of(m, dv({1, 1, 0}));
    ClusterObject S2sh = sh_of(m, dv({0, 1, 0}));

    Sequence s = seq({S2sh, I2, S3});
    CHECK(braid_move(m, w, s, 2, -1) == seq({S2sh, S3, P1}));
    CHECK(braid_move(m, w, seq({S2sh, S3, P1}), 2, +1) == s);
    CHECK(braid_move(m, w, s, 1, -1) == seq({I2, S1, S3}));

    CHECK_THROWS_AS(braid_move(m, w, s, 3, -1), invalid_argument_error);
    CHECK_THROWS_AS(braid_move(m, w, s, 0, -1), invalid_argument_error);
    CHECK_THROWS_AS(braid_move(m, w, s, 1, 2), invalid_argument_error);
}

TEST_CASE("braid moves invert each other and satisfy the braid relation", "[morphism]") {
    // The two directions are partial maps: a move is undefined exactly when
    // the displaced term would mutate onto a shifted copy of a module that is
    // not relatively projective.  Wherever a move is defined, the opposite
    // move is defined on the result and undoes it.
    for (const char* spec : {"A2: 1>2", "A3: 1>2>3", "B2: 1<(1,2)2", "G2: 1<(1,3)2"}) {
        Model m = build_model(spec);
        Wide w = full_wide(m);
        int defined = 0, total = 0;
        for (const Sequence& s : all_signed_exceptional_sequences(m, w))
            for (int i = 1; i < (int)s.size(); ++i)
                for (int dir : {-1, +1}) {
                    ++total;
                    if (!braid_move_defined(m, w, s, i, dir)) continue;
                    ++defined;
                    Sequence t = braid_move(m, w, s, i, dir);
                    CHECK(braid_move(m, w, t, i, -dir) == s);
                }
        CHECK(defined > total / 2);
    }

    // sigma_1 sigma_2 sigma_1 == sigma_2 sigma_1 sigma_2 whenever both chains
    // are defined (they are defined on the same sequences here).
    Model m = build_model("A3: 1>2>3");
    Wide w = full_wide(m);
    auto chain = [&](Sequence s, std::initializer_list<int> idx,
                     int dir) -> std::optional<Sequence> {
        for (int i : idx) {
            if (!braid_move_defined(m, w, s, i, dir)) return std::nullopt;
            s = braid_move(m, w, s, i, dir);
        }
        return s;
    };
    for (int dir : {-1, +1}) {
        int both = 0;
        for (const Sequence& s : all_signed_exceptional_sequences(m, w)) {
            auto a = chain(s, {1, 2, 1}, dir);
            auto b = chain(s, {2, 1, 2}, dir);
            CHECK(a.has_value() == b.has_value());
            if (a && b) {
                ++both;
                CHECK(*a == *b);
            }
        }
        CHECK(both == 50);
    }
}

TEST_CASE("braid orbits: transitivity where the moves stay defined", "[morphism]") {
    auto orbit = [](const Model& m, const Wide& w, const Sequence& start) {
        std::set<Sequence> seen{start};
        std::queue<Sequence> todo;
        todo.push(start);
        while (!todo.empty()) {
            Sequence s = todo.front();
            todo.pop();
            for (int i = 1; i < (int)s.size(); ++i)
                for (int dir : {-1, +1}) {
                    if (!braid_move_defined(m, w, s, i, dir)) continue;
                    Sequence t = braid_move(m, w, s, i, dir);
                    if (seen.insert(t).second) todo.push(t);
                }
        }
        return seen;
    };

    SECTION("the A2 orbit of (S1,S2) runs through all three unsigned sequences") {
        Model m = build_model("A2: 1>2");
        Wide w = full_wide(m);
        Sequence start = seq({mod_of(m, dv({1, 0})), mod_of(m, dv({0, 1}))});
        auto reached = orbit(m, w, start);
        CHECK(reached.count(seq({mod_of(m, dv({0, 1})), mod_of(m, dv({1, 1}))})) == 1);
        CHECK(reached.count(seq({mod_of(m, dv({1, 1})), mod_of(m, dv({1, 0}))})) == 1);
        for (const Sequence& u : all_exceptional_sequences(m, w)) CHECK(reached.count(u) == 1);
    }

    SECTION("the A3 action is transitive on all 84 signed sequences") {
        Model m = build_model("A3: 1>2>3");
        Wide w = full_wide(m);
        Sequence s =
            seq({sh_of(m, dv({0, 1, 0})), mod_of(m, dv({1, 1, 0})), mod_of(m, dv({0, 0, 1}))});
        auto reached = orbit(m, w, s);
        auto all = all_signed_exceptional_sequences(m, w);
        CHECK(reached == std::set<Sequence>(all.begin(), all.end()));
        // In particular the orbit runs through every factorization of the
        // composite morphism and every unsigned complete sequence.
        for (const Sequence& f : factorizations(m, composite_morphism(m, w, s)))
            CHECK(reached.count(f) == 1);
    }

    SECTION("valued quivers split into several orbits") {
        // Over B2 the mutation connecting (P2,I1) to the other unsigned
        // sequences leaves the module world, so the four unsigned sequences
        // are not connected by the partial moves alone.
        Model m = build_model("B2: 1<(1,2)2");
        Wide w = full_wide(m);
        Sequence start = seq({mod_of(m, dv({0, 1})), mod_of(m, dv({1, 0}))});
        auto reached = orbit(m, w, start);
        CHECK(reached.size() == 6);
        CHECK(reached.count(seq({mod_of(m, dv({2, 1})), mod_of(m, dv({1, 1}))})) == 0);
    }
}

TEST_CASE("morphism census for A2", "[morphism]") {
    Model m = build_model("A2: 1>2");
    auto morphs = all_morphisms(m);
    CHECK(morphs.size() == 21);
    std::map<int, int> by_rank;
    for (const auto& f : morphs) ++by_rank[f.rank()];
    CHECK(by_rank[0] == 5);
    CHECK(by_rank[1] == 11);
    CHECK(by_rank[2] == 5);
}

TEST_CASE("relative sequences inside a smaller wide", "[morphism]") {
    Model m = build_model("A3: 1>2>3");
    ClusterMorphism f = make_morphism(m, full_wide(m), {mod_of(m, dv({0, 0, 1}))});
    Wide w = f.cod;  // type A2 wide {S1, S2, I2}
    auto seqs = all_signed_exceptional_sequences(m, w);
    CHECK(seqs.size() == 10);
    for (const Sequence& s : seqs) {
        auto ordered = to_ordered_cluster(m, w, s);
        CHECK(from_ordered_cluster(m, w, ordered) == s);
    }
}
