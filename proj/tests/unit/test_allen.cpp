#include <doctest.h>

#include "iterata/allen.hpp"
#include "iterata/errors.hpp"

using namespace iterata::allen;

namespace {

// Composition by placing three concrete intervals on 0..7.
RelationSet brute_compose(Base r, Base s) {
    RelationSet out;
    for (int b1 = 0; b1 < 8; ++b1)
        for (int e1 = b1 + 1; e1 < 8; ++e1)
            for (int b2 = 0; b2 < 8; ++b2)
                for (int e2 = b2 + 1; e2 < 8; ++e2) {
                    if (relation_between(b1, e1, b2, e2) != r) continue;
                    for (int b3 = 0; b3 < 8; ++b3)
                        for (int e3 = b3 + 1; e3 < 8; ++e3) {
                            if (relation_between(b2, e2, b3, e3) == s) out.add(relation_between(b1, e1, b3, e3));
                        }
                }
    return out;
}

RelationSet rs(std::initializer_list<Base> b) { return RelationSet(b); }

} // namespace

TEST_CASE("relation between endpoints") {
    CHECK(relation_between(0, 1, 2, 3) == Base::p);
    CHECK(relation_between(0, 2, 2, 3) == Base::m);
    CHECK(relation_between(0, 3, 1, 4) == Base::o);
    CHECK(relation_between(0, 4, 1, 2) == Base::di);
    CHECK(relation_between(1, 2, 0, 4) == Base::d);
    CHECK(relation_between(0, 2, 0, 2) == Base::eq);
    CHECK(relation_between(0, 2, 0, 4) == Base::s);
    CHECK(relation_between(2, 4, 0, 4) == Base::f);
    CHECK(relation_between(3, 4, 0, 1) == Base::pi);
}

TEST_CASE("lattice coding") {
    for (Base r : kAllBase) {
        CHECK(from_code(code(r)) == r);
        CHECK(base_from_name(name(r)) == r);
        CHECK(transpose(transpose(r)) == r);
        CHECK(lattice_leq(Base::p, r));
        CHECK(lattice_leq(r, Base::pi));
    }
    CHECK(lattice_inf(Base::s, Base::fi) == Base::o);
    CHECK(lattice_sup(Base::s, Base::fi) == Base::eq);
    CHECK_FALSE(lattice_leq(Base::d, Base::di));
}

TEST_CASE("base composition matches endpoint placement") {
    for (Base r : kAllBase) {
        for (Base s : kAllBase) {
            CAPTURE(name(r));
            CAPTURE(name(s));
            CHECK(compose_base(r, s) == brute_compose(r, s));
        }
    }
    CHECK(compose_base(Base::p, Base::p) == rs({Base::p}));
    CHECK(compose_base(Base::o, Base::o) == rs({Base::p, Base::m, Base::o}));
    for (Base r : kAllBase) CHECK(compose_base(Base::eq, r) == RelationSet::single(r));
}

TEST_CASE("transpose of sets") {
    CHECK(transpose(rs({Base::p})) == rs({Base::pi}));
    CHECK(transpose(rs({Base::eq})) == rs({Base::eq}));
    CHECK(transpose(rs({Base::m, Base::o, Base::s})) == rs({Base::mi, Base::oi, Base::si}));
    CHECK(transpose(ConvexRelation(Base::d, Base::pi).extension()) == ConvexRelation(Base::p, Base::di).extension());
}

TEST_CASE("set composition") {
    CHECK(compose_set(RelationSet::full(), rs({Base::d})) == RelationSet::full());
    CHECK(compose_set(RelationSet(), rs({Base::p})).empty());
    CHECK(compose_set(rs({Base::p, Base::m}), rs({Base::p, Base::m})) == rs({Base::p}));
}

TEST_CASE("convex composition") {
    CHECK(compose_convex({Base::p, Base::m}, {Base::p, Base::m}) == ConvexRelation(Base::p, Base::p));
    CHECK(compose_convex({Base::o, Base::o}, {Base::o, Base::o}) == ConvexRelation(Base::p, Base::o));
    for (const auto& r : all_convex_relations()) {
        CHECK(compose_convex({Base::eq, Base::eq}, r) == r);
    }
    CHECK(compose(rs({Base::o}), rs({Base::o})) == rs({Base::p, Base::m, Base::o}));
    CHECK(compose(rs({Base::p, Base::di}), rs({Base::m})) == compose_set(rs({Base::p, Base::di}), rs({Base::m})));
}

TEST_CASE("convex, pointizable and preconvex classes") {
    RelationSet mixed = rs({Base::m, Base::o, Base::s, Base::di, Base::si});
    CHECK(is_pointizable(mixed));
    CHECK_FALSE(is_convex(mixed));
    RelationSet osfi = rs({Base::o, Base::s, Base::fi});
    CHECK(is_preconvex(osfi));
    CHECK_FALSE(is_convex(osfi));
    CHECK(convex_hull(osfi) == ConvexRelation(Base::o, Base::eq));
    CHECK_FALSE(is_preconvex(rs({Base::p, Base::pi})));
    for (const auto& r : all_convex_relations()) {
        CHECK(is_convex(r.extension()));
        CHECK(is_pointizable(r.extension()));
        CHECK(is_preconvex(r.extension()));
    }
    CHECK(all_convex_relations().size() == 82);
    CHECK_THROWS(ConvexRelation(Base::pi, Base::p));
}

TEST_CASE("named vocabularies") {
    CHECK(vocab(Vocabulary::Sdt, "SIMUL") == ConvexRelation(Base::m, Base::mi));
    CHECK(vocab(Vocabulary::Sdt, "SUCC") == ConvexRelation(Base::d, Base::pi));
    CHECK(vocab(Vocabulary::Sdt, "PREC") == ConvexRelation(Base::p, Base::di));
    CHECK(vocab(Vocabulary::Freksa, "ol") == ConvexRelation(Base::p, Base::di));
    CHECK(vocab(Vocabulary::Accary, "begin_in") == ConvexRelation(Base::s, Base::mi));
    CHECK(vocab(Vocabulary::Sdt, "ACCESS").extension() == rs({Base::fi, Base::di, Base::eq, Base::si}));
    CHECK_THROWS_AS(vocab(Vocabulary::Sdt, "NOPE"), iterata::Error);
    for (Vocabulary v : {Vocabulary::Sdt, Vocabulary::Freksa, Vocabulary::Accary}) {
        CHECK_FALSE(vocabulary_entries(v).empty());
    }
}

TEST_CASE("relation syntax") {
    CHECK(parse_relation("{p,m}") == rs({Base::p, Base::m}));
    CHECK(parse_relation("[p,di]") == ConvexRelation(Base::p, Base::di).extension());
    CHECK(parse_relation("g:SUCC") == vocab(Vocabulary::Sdt, "SUCC").extension());
    CHECK(parse_relation("f:ol") == vocab(Vocabulary::Freksa, "ol").extension());
    CHECK(parse_relation("a:begin_in") == vocab(Vocabulary::Accary, "begin_in").extension());
    CHECK(parse_relation("oi") == rs({Base::oi}));
    CHECK(parse_relation("full").is_full());
    CHECK(parse_relation("{}").empty());
    CHECK_THROWS_AS(parse_relation("{p,zz}"), iterata::Error);
    CHECK_THROWS_AS(parse_relation("[pi,p]"), iterata::Error);
    CHECK(to_text(rs({Base::p, Base::m})) == "{p,m}");
    CHECK(parse_relation(to_text(rs({Base::o, Base::d, Base::mi}))) == rs({Base::o, Base::d, Base::mi}));
    CHECK(to_text(ConvexRelation(Base::m, Base::mi)) == "[m,mi]");
}
