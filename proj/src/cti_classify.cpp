#include <map>
#include <regex>

#include "iterata/cti.hpp"
#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata::cti {

std::string category_text(Category c) {
    switch (c) {
    case Category::SiteConvexe: return "site-convexe";
    case Category::SiteNonConvexe: return "site-non-convexe";
    case Category::MarqueurDePositionnement: return "marqueur-de-positionnement";
    case Category::DescripteurDeTemporaliteInterne: return "descripteur-de-temporalite-interne";
    case Category::Selecteur: return "selecteur";
    }
    return "";
}

Classification classify(const NodePtr& ast) {
    if (std::holds_alternative<NthNode>(ast->v)) return {Category::Selecteur, ""};
    return {Category::SiteNonConvexe, ""};
}

namespace {

using C = Category;

const std::map<std::string, Classification>& phrase_table() {
    static const std::map<std::string, Classification> t{
        {"demain", {C::SiteConvexe, "relatif-deictique"}},
        {"hier", {C::SiteConvexe, "relatif-deictique"}},
        {"aujourd'hui", {C::SiteConvexe, "relatif-deictique"}},
        {"le mois prochain", {C::SiteConvexe, "relatif-deictique"}},
        {"la semaine prochaine", {C::SiteConvexe, "relatif-deictique"}},
        {"l'annee derniere", {C::SiteConvexe, "relatif-deictique"}},
        {"l'an dernier", {C::SiteConvexe, "relatif-deictique"}},
        {"le lendemain", {C::SiteConvexe, "relatif-anaphorique"}},
        {"la veille", {C::SiteConvexe, "relatif-anaphorique"}},
        {"le mois precedent", {C::SiteConvexe, "relatif-anaphorique"}},
        {"l'annee suivante", {C::SiteConvexe, "relatif-anaphorique"}},
        {"dorenavant", {C::SiteConvexe, "bornes-explicites"}},
        {"a partir de", {C::SiteConvexe, "bornes-explicites"}},
        {"jusqu'a", {C::SiteConvexe, "bornes-explicites"}},
        {"apres", {C::MarqueurDePositionnement, "sequentialite"}},
        {"apres que", {C::MarqueurDePositionnement, "sequentialite"}},
        {"avant", {C::MarqueurDePositionnement, "sequentialite"}},
        {"avant que", {C::MarqueurDePositionnement, "sequentialite"}},
        {"plus tard", {C::MarqueurDePositionnement, "sequentialite"}},
        {"ensuite", {C::MarqueurDePositionnement, "sequentialite"}},
        {"puis", {C::MarqueurDePositionnement, "sequentialite"}},
        {"des que", {C::MarqueurDePositionnement, "sequentialite"}},
        {"a peine", {C::MarqueurDePositionnement, "sequentialite"}},
        {"aussitot", {C::MarqueurDePositionnement, "sequentialite"}},
        {"bientot", {C::MarqueurDePositionnement, "sequentialite"}},
        {"en meme temps", {C::MarqueurDePositionnement, "recouvrement"}},
        {"simultanement", {C::MarqueurDePositionnement, "recouvrement"}},
        {"pendant que", {C::MarqueurDePositionnement, "recouvrement"}},
        {"au cours de", {C::MarqueurDePositionnement, "recouvrement"}},
        {"lorsque", {C::MarqueurDePositionnement, "recouvrement"}},
        {"quand", {C::MarqueurDePositionnement, "recouvrement"}},
        {"peu a peu", {C::DescripteurDeTemporaliteInterne, ""}},
        {"regulierement", {C::DescripteurDeTemporaliteInterne, ""}},
        {"au fur et a mesure", {C::DescripteurDeTemporaliteInterne, ""}},
        {"souvent", {C::DescripteurDeTemporaliteInterne, ""}},
        {"parfois", {C::DescripteurDeTemporaliteInterne, ""}},
        {"rarement", {C::DescripteurDeTemporaliteInterne, ""}},
        {"lentement", {C::DescripteurDeTemporaliteInterne, ""}},
        {"rapidement", {C::DescripteurDeTemporaliteInterne, ""}},
        {"progressivement", {C::DescripteurDeTemporaliteInterne, ""}},
        {"au debut de", {C::Selecteur, ""}},
        {"a la fin de", {C::Selecteur, ""}},
        {"au milieu de", {C::Selecteur, ""}},
        {"cette fois-ci", {C::Selecteur, ""}},
        {"cette fois", {C::Selecteur, ""}},
        {"ce jour la", {C::Selecteur, ""}},
        {"ce jour-la", {C::Selecteur, ""}},
    };
    return t;
}

struct Rule {
    std::regex re;
    Classification result;
};

const std::vector<Rule>& rules() {
    const std::string num = R"((?:\d+|un|une|deux|trois|quatre|cinq|six|sept|huit|neuf|dix|quinze|vingt|cent|quelques))";
    const std::string unit = R"((?:minutes?|heures?|jours?|semaines?|mois|ans|annees?|siecles?))";
    const std::string month =
        R"((?:janvier|fevrier|mars|avril|mai|juin|juillet|aout|septembre|octobre|novembre|decembre))";
    const std::string ord = R"((?:\d+(?:e|eme|er|ere)|premiere?|deuxieme|seconde?|troisieme|quatrieme|cinquieme|derniere?))";
    static const std::vector<Rule> r{
        {std::regex("^(pendant|durant) (ces|les) (" + num + " )?derni(er|ere)s " + unit + "$"),
         {C::SiteConvexe, "relatif-deictique"}},
        {std::regex("^(pendant|durant) les (" + num + " )?" + unit + " (precedents|precedentes|suivants|suivantes)$"),
         {C::SiteConvexe, "relatif-anaphorique"}},
        {std::regex("^(pendant|durant) " + num + " " + unit + "$"), {C::SiteConvexe, "duree"}},
        {std::regex("^(apres|dans) " + num + " " + unit + "$"), {C::MarqueurDePositionnement, "sequentialite"}},
        {std::regex("^en (" + month + " )?\\d{3,4}$"), {C::SiteConvexe, "absolu"}},
        {std::regex("^(au debut|a la fin|au milieu) (de |d')(" + month + " )?\\d{3,4}$"), {C::SiteConvexe, "absolu"}},
        {std::regex("^au \\w+ siecle$"), {C::SiteConvexe, "absolu"}},
        {std::regex("^(depuis|jusqu'en|jusqu'a|a partir de) .+$"), {C::SiteConvexe, "bornes-explicites"}},
        {std::regex("^de " + month + " a " + month + "( \\d{2,4})?$"), {C::SiteConvexe, "bornes-explicites"}},
        {std::regex("^" + num + " fois de suite$"), {C::DescripteurDeTemporaliteInterne, ""}},
        {std::regex("^" + num + " fois$"), {C::DescripteurDeTemporaliteInterne, ""}},
        {std::regex("^la " + ord + " fois$"), {C::Selecteur, ""}},
        {std::regex("^les " + num + " (premieres|dernieres) fois$"), {C::Selecteur, ""}},
    };
    return r;
}

std::string normalize(std::string_view phrase) {
    std::string s = text::fold_string(phrase);
    while (!s.empty() && (s.back() == '.' || s.back() == ',' || s.back() == ';')) s.pop_back();
    std::string out;
    for (const auto& w : text::split_words(s)) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

} // namespace

Classification classify(std::string_view phrase) {
    std::string s = normalize(phrase);
    if (auto it = phrase_table().find(s); it != phrase_table().end()) return it->second;
    for (const auto& rule : rules()) {
        if (std::regex_match(s, rule.re)) return rule.result;
    }
    try {
        return classify(parse(s));
    } catch (const ParseError&) {
        throw Error(ErrorCode::Unclassified, "no category for: " + std::string(phrase));
    }
}

} // namespace iterata::cti
