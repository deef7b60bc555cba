#include <doctest.h>

#include <fstream>

#include "iterata/errors.hpp"
#include "iterata/sdt.hpp"

using namespace iterata;
using namespace iterata::sdt;
using allen::Base;
using allen::RelationSet;

namespace {

constexpr long long kHour = 60;
constexpr long long kYear = 365 * 24 * kHour;

Clause clause(Vendler v, Tense t, std::vector<Circumstancial> circ = {}, bool reiterable = false) {
    Clause c;
    c.vendler = v;
    c.tense = t;
    c.circumstancials = std::move(circ);
    c.reiterable = reiterable;
    return c;
}

bool has(const std::vector<Bound>& bounds, const std::string& a, PointRel r, const std::string& b) {
    for (const auto& x : bounds) {
        if (x.a == a && x.rel == r && x.b == b) return true;
        if (r == PointRel::Eq && x.rel == r && x.a == b && x.b == a) return true;
    }
    return false;
}

Clause fixture(const char* name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    return clause_from_json(nlohmann::json::parse(in));
}

} // namespace

TEST_CASE("tense map") {
    CHECK(tense_entry(clause(Vendler::Activite, Tense::PasseSimple)).aspect == Aspect::Aoristique);
    CHECK(tense_entry(clause(Vendler::Activite, Tense::Imparfait)).aspect == Aspect::Inaccompli);
    CHECK(tense_entry(clause(Vendler::Activite, Tense::PlusQueParfait)).aspect == Aspect::Accompli);
    CHECK(tense_entry(clause(Vendler::Activite, Tense::Present)).value == TenseValue::Present);
    CHECK(tense_entry(clause(Vendler::Activite, Tense::Futur)).value == TenseValue::Futur);
    CHECK(tense_entry(clause(Vendler::Activite, Tense::PasseCompose)).aspect == Aspect::Aoristique);
    CHECK(tense_entry(clause(Vendler::Achevement, Tense::PasseCompose, {DepuisDuree{10}})).aspect ==
          Aspect::Accompli);

    SdtConfig cfg = SdtConfig::defaults();
    cfg.tense_map[Tense::Present] = {Aspect::Prospectif, TenseValue::Present};
    CHECK(tense_entry(clause(Vendler::Activite, Tense::Present), cfg).aspect == Aspect::Prospectif);
}

TEST_CASE("marker instructions") {
    auto imparfait = instructions(clause(Vendler::Activite, Tense::Imparfait));
    CHECK(has(imparfait, "B1", PointRel::Lt, "I"));
    CHECK(has(imparfait, "II", PointRel::Lt, "B2"));
    CHECK(has(imparfait, "II", PointRel::Lt, "01"));

    auto simple = instructions(clause(Vendler::Accomplissement, Tense::PasseSimple));
    CHECK(has(simple, "I", PointRel::Eq, "B1"));
    CHECK(has(simple, "II", PointRel::Eq, "B2"));
    CHECK(has(simple, "II", PointRel::Lt, "01"));

    auto pendant = instructions(clause(Vendler::Activite, Tense::PasseSimple, {PendantDuree{2 * kHour}}));
    CHECK(has(pendant, "ct1", PointRel::Eq, "B1"));
    CHECK(has(pendant, "B1", PointRel::Eq, "I"));
    CHECK(has(pendant, "ct2", PointRel::Eq, "B2"));
    CHECK(has(pendant, "B2", PointRel::Eq, "II"));
}

TEST_CASE("clause validation") {
    CHECK_THROWS_AS(validate(clause(Vendler::Activite, Tense::Present, {PendantDuree{0}})), Error);
    CHECK_THROWS_AS(validate(clause(Vendler::Activite, Tense::Present, {DepuisDuree{5}, DepuisDuree{6}})), Error);
    CHECK_NOTHROW(validate(clause(Vendler::Activite, Tense::Present, {PendantDuree{5}, DepuisDuree{6}})));
    Clause bad = clause(Vendler::Activite, Tense::Present);
    bad.adverb = Adverb{Adverb::Kind::IterativeCount, 0};
    CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("point networks") {
    PointNetwork strict;
    strict.add({"a", PointRel::Lt, "b", ""});
    strict.add({"b", PointRel::Lt, "a", ""});
    CHECK_FALSE(strict.consistent());

    PointNetwork loose;
    loose.add({"a", PointRel::Le, "b", ""});
    loose.add({"b", PointRel::Le, "a", ""});
    CHECK(loose.consistent());

    PointNetwork adj;
    adj.add({"a", PointRel::Adj, "b", ""});
    adj.add({"a", PointRel::Lt, "b", ""});
    CHECK(adj.consistent());
    adj.add({"a", PointRel::Ll, "b", ""});
    CHECK_FALSE(adj.consistent());

    PointNetwork gap;
    gap.add({"a", PointRel::Adj, "b", ""});
    gap.add({"a", PointRel::Lt, "c", ""});
    gap.add({"c", PointRel::Lt, "b", ""});
    CHECK_FALSE(gap.consistent()); // nothing fits between adjacent points
}

TEST_CASE("conflict diagnoses") {
    CHECK(build_structure(clause(Vendler::Activite, Tense::Imparfait)).diagnosis == Diagnosis::Ok);

    // Il marcha depuis deux heures
    SdtStructure s7 = build_structure(fixture("clause_7.json"));
    CHECK(s7.diagnosis == Diagnosis::Insoluble);
    CHECK_FALSE(s7.conflicts.empty());

    // Pierre nageait pendant deux heures depuis tres longtemps
    SdtStructure s19 = build_structure(fixture("clause_19.json"));
    CHECK(s19.diagnosis == Diagnosis::ResolvedIteration);
    CHECK(s19.aspect == Aspect::Aoristique);
    CHECK(s19.aspect_series == Aspect::Inaccompli);
    CHECK(s19.iterative());

    // Il dort a 10h40, on the passe simple
    SdtStructure s8 = build_structure(fixture("clause_8.json"));
    CHECK(s8.diagnosis == Diagnosis::ResolvedContraction);
    CHECK_FALSE(s8.iterative());

    // a punctual process at a clock time needs nothing
    CHECK(build_structure(clause(Vendler::Achevement, Tense::PasseSimple, {AClock{10, 40}})).diagnosis ==
          Diagnosis::Ok);

    // implausibly long continuous swimming iterates without a formal conflict
    Clause swim = clause(Vendler::Activite, Tense::Imparfait, {DepuisDuree{10 * kYear}}, true);
    swim.plausible_duration = false;
    SdtStructure it = build_structure(swim);
    CHECK(it.diagnosis == Diagnosis::ResolvedIteration);
    CHECK(it.iterative());

    // not reiterable: nothing to resolve with
    CHECK(build_structure(clause(Vendler::Activite, Tense::PasseSimple, {DepuisDuree{2 * kHour}}, false)).diagnosis ==
          Diagnosis::Insoluble);
}

TEST_CASE("iterative adverbs") {
    Clause four = clause(Vendler::Achevement, Tense::PasseCompose, {EnDuree{10 * kYear}});
    four.adverb = Adverb{Adverb::Kind::IterativeCount, 4};
    auto b = adverb_iteration(four);
    REQUIRE(b.has_value());
    CHECK(b->intrinsic);
    CHECK(b->occurrences == 4);
    SdtStructure en = build_structure(four);
    CHECK(en.diagnosis == Diagnosis::Ok);
    CHECK(en.series_telic);
    CHECK(has(en.bounds, "ct1", PointRel::Eq, "Bs1"));

    Clause pendant = four;
    pendant.circumstancials = {PendantDuree{10 * kYear}};
    SdtStructure p = build_structure(pendant);
    CHECK(p.diagnosis == Diagnosis::Insoluble);

    Clause souvent = clause(Vendler::Activite, Tense::Present);
    souvent.adverb = Adverb{Adverb::Kind::Frequency, 0, cti::FreqAdverb::Souvent};
    auto f = adverb_iteration(souvent);
    REQUIRE(f.has_value());
    CHECK_FALSE(f->intrinsic);
    CHECK(f->density == cti::FreqAdverb::Souvent);

    CHECK_FALSE(adverb_iteration(clause(Vendler::Activite, Tense::Present)).has_value());

    Clause lundis = clause(Vendler::Activite, Tense::Imparfait, {CtiCirc{cti::parse("tous les lundis")}});
    CHECK(build_structure(lundis).iterative());
}

TEST_CASE("encore and deja") {
    CHECK(encore_deja(clause(Vendler::Activite, Tense::Imparfait), Adverb::Kind::Encore) == Reading::Ambiguous);
    CHECK(encore_deja(clause(Vendler::Activite, Tense::PasseCompose), Adverb::Kind::Encore) == Reading::Iterative);
    CHECK(encore_deja(clause(Vendler::Activite, Tense::Present), Adverb::Kind::Encore) == Reading::Ambiguous);
    CHECK(encore_deja(clause(Vendler::Accomplissement, Tense::Present), Adverb::Kind::Encore) ==
          Reading::Iterative);
    CHECK(encore_deja(clause(Vendler::Activite, Tense::Present), Adverb::Kind::Deja) == Reading::Ambiguous);
    CHECK_THROWS_AS(encore_deja(clause(Vendler::Activite, Tense::Present), Adverb::Kind::Frequency), Error);
}

TEST_CASE("interval networks") {
    SdtStructure pqp = build_structure(clause(Vendler::Accomplissement, Tense::PlusQueParfait));
    QualNetwork net = to_network(pqp);
    CHECK(net.edge("proces", "reference") == RelationSet{Base::p});
    CHECK(net.edge("reference", "enonciation") == RelationSet{Base::p});
    auto solved = path_consistency(net);
    CHECK(solved.network.edge("proces", "enonciation") == RelationSet{Base::p});

    SdtStructure imp = build_structure(clause(Vendler::Accomplissement, Tense::Imparfait));
    auto solved_imp = path_consistency(to_network(imp));
    CHECK(solved_imp.network.edge("proces", "reference") == RelationSet{Base::di});
    CHECK(solved_imp.network.edge("proces", "enonciation").size() > 1);

    SdtStructure s19 = build_structure(fixture("clause_19.json"));
    auto series = path_consistency(to_network(s19));
    CHECK(series.verdict != Verdict::Inconsistent);
    CHECK(series.network.edge("proces", "serie").subset_of(RelationSet{Base::s, Base::eq, Base::d, Base::f}));

    // an insoluble clause keeps its unresolved reading, which the network rejects
    QualNetwork bad = to_network(build_structure(fixture("clause_7.json")));
    CHECK(path_consistency(bad).verdict == Verdict::Inconsistent);
}

TEST_CASE("json records") {
    Clause c = fixture("clause_19.json");
    CHECK(c.vendler == Vendler::Activite);
    CHECK(c.tense == Tense::Imparfait);
    CHECK(c.reiterable);
    REQUIRE(c.circumstancials.size() == 2);
    CHECK(std::get<PendantDuree>(c.circumstancials[0]).minutes == 2 * kHour);

    auto j = to_json(build_structure(c));
    CHECK(j.at("diagnosis") == "resolved_iteration");
    CHECK(j.at("aspect_series") == "inaccompli");

    CHECK_THROWS_AS(clause_from_json(nlohmann::json{{"vendler", "chanter"}, {"tense", "present"}}), Error);
    CHECK_THROWS_AS(clause_from_json(nlohmann::json{{"vendler", "etat"}}), Error);
    CHECK_THROWS_AS(clause_from_json(nlohmann::json::parse(R"({"vendler":"etat","tense":"present",
        "circumstancials":[{"kind":"pendant"}]})")),
                    Error);
}
