#include "iterata/extractor.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata::extractor {

namespace {

const std::vector<std::pair<PatternId, const char*>> kPatternNames{
    {PatternId::TOUS_LES, "TOUS_LES"},       {PatternId::TOUS_LES_N, "TOUS_LES_N"},
    {PatternId::CHAQUE, "CHAQUE"},           {PatternId::FOIS_PAR, "FOIS_PAR"},
    {PatternId::PAR_LABEL, "PAR_LABEL"},     {PatternId::LABEL_PAR_LABEL, "LABEL_PAR_LABEL"},
    {PatternId::NIEME_DE, "NIEME_DE"},       {PatternId::PLUPART, "PLUPART"},
    {PatternId::N_SUR_N, "N_SUR_N"},         {PatternId::CERTAINS, "CERTAINS"},
    {PatternId::N_PAR_LABEL, "N_PAR_LABEL"}, {PatternId::GENERIQUE, "GENERIQUE"},
};

const std::vector<std::string> kWeekdays{"lundi", "mardi", "mercredi", "jeudi", "vendredi", "samedi", "dimanche"};
const std::vector<std::string> kMonths{"janvier", "fevrier", "mars",      "avril",   "mai",      "juin",
                                       "juillet", "aout",    "septembre", "octobre", "novembre", "decembre"};
const std::vector<std::string> kSeasons{"printemps", "ete", "automne", "hiver"};
const std::set<std::string> kContinuous{"annee", "an",   "heure",   "jour",     "minute",   "mois",
                                        "saison", "seconde", "semaine", "semestre", "trimestre"};
const std::set<std::string> kDiscontinuousPeriods{"matin", "nuit", "soir", "noel"};

const std::map<std::string, int> kNumbers{
    {"un", 1},       {"une", 1},     {"deux", 2},      {"trois", 3},   {"quatre", 4}, {"cinq", 5},
    {"six", 6},      {"sept", 7},    {"huit", 8},      {"neuf", 9},    {"dix", 10},   {"onze", 11},
    {"douze", 12},   {"treize", 13}, {"quatorze", 14}, {"quinze", 15}, {"seize", 16}, {"vingt", 20},
    {"trente", 30},  {"cent", 100},
};

const std::map<std::string, int> kOrdinals{
    {"premier", 1},  {"premiere", 1}, {"second", 2},   {"seconde", 2},   {"deuxieme", 2}, {"troisieme", 3},
    {"quatrieme", 4}, {"cinquieme", 5}, {"sixieme", 6}, {"septieme", 7}, {"huitieme", 8}, {"neuvieme", 9},
    {"dixieme", 10},
};

bool contains_word(const std::vector<std::string>& v, const std::string& w) {
    return std::find(v.begin(), v.end(), w) != v.end();
}

std::string singular(const std::string& label) {
    if (label == "mois" || label == "fois") return label;
    if (label.size() > 2 && label.back() == 's') return label.substr(0, label.size() - 1);
    if (label.size() > 2 && label.back() == 'x') return label.substr(0, label.size() - 1);
    return label;
}

std::optional<int> number_value(const std::string& w) {
    if (w.empty()) return std::nullopt;
    if (std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return w.size() <= 6 ? std::optional<int>(std::stoi(w)) : std::nullopt;
    }
    if (auto it = kNumbers.find(w); it != kNumbers.end()) return it->second;
    return std::nullopt;
}

std::optional<int> ordinal_value(std::string w) {
    if (w.size() > 1 && w.back() == 's') w.pop_back();
    static const std::regex digits(R"(^(\d{1,4})(e|eme|er|ere|nd|nde)$)");
    std::smatch m;
    if (std::regex_match(w, m, digits)) return std::stoi(m[1].str());
    if (auto it = kOrdinals.find(w); it != kOrdinals.end()) return it->second;
    return std::nullopt;
}

std::string alternation(const std::vector<std::string>& words, bool plural) {
    std::vector<std::string> sorted = words;
    // longer words first so that "annee" is tried before "an"
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::string out = "(?:";
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k) out += '|';
        out += sorted[k];
    }
    out += plural ? ")(?:s|x)?" : ")";
    return out;
}

struct Rule {
    PatternId id;
    std::regex re;
};

struct Candidate {
    PatternId id;
    std::size_t b, e; // byte offsets in the folded text
    std::string label;
    std::optional<int> n, p;
    std::optional<std::string> second;
};

std::vector<Rule> build_rules(const Vocabulary& vocab) {
    const std::string L = "(" + alternation(vocab.labels, true) + ")";
    const std::string num = R"((\d+|une?|deux|trois|quatre|cinq|six|sept|huit|neuf|dix|onze|douze|treize|quatorze|quinze|seize|vingt|trente|cent))";
    const std::string ord =
        R"((\d{1,4}(?:e|eme|er|ere|nd|nde)s?|premiers?|premieres?|seconde?s?|deuxiemes?|troisiemes?|quatriemes?|cinquiemes?|sixiemes?|septiemes?|huitiemes?|neuviemes?|dixiemes?))";
    const std::string wd = alternation(kWeekdays, false);
    const std::string season = alternation(kSeasons, false);
    const std::string month = alternation(kMonths, false);
    const std::string b = R"((?:^|\b))";
    return {
        {PatternId::TOUS_LES_N, std::regex(b + "(?:tous|toutes) les " + num + " " + L + R"(\b)")},
        {PatternId::TOUS_LES, std::regex(b + "(?:tous|toutes) les " + L + R"(\b)")},
        {PatternId::CHAQUE, std::regex(b + "chaque " + L + R"(\b)")},
        {PatternId::FOIS_PAR, std::regex(b + "(?:" + num + " )?fois par " + L + R"(\b)")},
        {PatternId::PAR_LABEL, std::regex(b + "par " + L + R"(\b)")},
        {PatternId::LABEL_PAR_LABEL, std::regex(b + L + " par " + L + R"(\b)")},
        {PatternId::NIEME_DE, std::regex(b + "(?:les|le|la) " + ord + " " + L + R"( (?:de |du |des |d'))" +
                                         "(?:(?:la |le |les |l'))?" + "(?:" + L + R"(\b)?)")},
        {PatternId::PLUPART, std::regex(b + "la plupart des " + L + R"(\b)")},
        {PatternId::N_SUR_N, std::regex(b + num + " " + L + " sur " + num + R"(\b)")},
        {PatternId::CERTAINS, std::regex(b + "(certains|certaines|quelques) " + L + R"(\b)")},
        {PatternId::N_PAR_LABEL, std::regex(b + num + " " + L + " par " + L + R"(\b)")},
        {PatternId::GENERIQUE, std::regex(b + "(?:le |l')(" + wd + "|matin|soir|nuit|" + season + R"()\b)")},
        {PatternId::GENERIQUE, std::regex(b + "les (" + wd + "s) (?:de |d'|du )(?:l')?(?:" + season + "|" + month + R"()\b)")},
    };
}

bool excluded(const Candidate& c, const std::string& s) {
    if (c.id == PatternId::PAR_LABEL) {
        std::string before = text::trim(s.substr(0, c.b));
        return before.size() >= 4 && before.compare(before.size() - 4, 4, "fois") == 0 &&
               (before.size() == 4 || !std::isalpha(static_cast<unsigned char>(before[before.size() - 5])));
    }
    if (c.id == PatternId::GENERIQUE) {
        std::string after = s.substr(c.e);
        static const std::regex date(R"(^ \d)");
        static const std::regex du(R"(^ du\b)");
        static const std::regex meme(R"(^ meme\b)");
        if (contains_word(kWeekdays, c.label) && std::regex_search(after, date)) return true;
        if (c.label == "matin" && std::regex_search(after, du)) return true;
        if (c.label == "soir" && std::regex_search(after, meme)) return true;
    }
    return false;
}

Candidate make_candidate(PatternId id, const std::smatch& m, std::size_t offset) {
    Candidate c{id, offset + static_cast<std::size_t>(m.position(0)),
                offset + static_cast<std::size_t>(m.position(0) + m.length(0)), "", std::nullopt, std::nullopt,
                std::nullopt};
    auto group = [&](std::size_t k) { return m[k].matched ? m[k].str() : std::string(); };
    switch (id) {
    case PatternId::TOUS_LES_N:
        c.n = number_value(group(1));
        c.label = group(2);
        break;
    case PatternId::TOUS_LES:
    case PatternId::CHAQUE:
    case PatternId::PAR_LABEL:
    case PatternId::PLUPART:
    case PatternId::GENERIQUE: c.label = group(1); break;
    case PatternId::FOIS_PAR:
        if (m[1].matched) c.n = number_value(group(1));
        c.label = group(2);
        break;
    case PatternId::LABEL_PAR_LABEL:
        c.label = group(1);
        c.second = group(2);
        break;
    case PatternId::NIEME_DE:
        c.n = ordinal_value(group(1));
        c.label = group(2);
        if (m[3].matched) c.second = group(3);
        break;
    case PatternId::N_SUR_N:
        c.n = number_value(group(1));
        c.label = group(2);
        c.p = number_value(group(3));
        break;
    case PatternId::CERTAINS: c.label = group(2); break;
    case PatternId::N_PAR_LABEL:
        c.n = number_value(group(1));
        c.label = group(2);
        c.second = group(3);
        break;
    }
    return c;
}

std::size_t priority(PatternId id) { return static_cast<std::size_t>(id); }

// code-point index -> byte offset in the original text
std::vector<std::size_t> codepoint_starts(std::string_view s) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if ((static_cast<unsigned char>(s[k]) & 0xC0) != 0x80) out.push_back(k);
    }
    out.push_back(s.size());
    return out;
}

} // namespace

std::string to_string(PatternId p) {
    for (const auto& [id, name] : kPatternNames) {
        if (id == p) return name;
    }
    return "";
}

std::optional<PatternId> pattern_from_string(std::string_view s) {
    std::string up;
    for (char c : s) up.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (const auto& [id, name] : kPatternNames) {
        if (up == name) return id;
    }
    return std::nullopt;
}

Vocabulary Vocabulary::defaults() {
    Vocabulary v;
    v.labels = kWeekdays;
    v.labels.insert(v.labels.end(), kMonths.begin(), kMonths.end());
    v.labels.insert(v.labels.end(), kSeasons.begin(), kSeasons.end());
    for (const char* w : {"noel", "heure", "matin", "soir", "nuit", "jour", "semaine", "mois", "trimestre", "semestre",
                          "an", "annee", "minute", "seconde", "saison"}) {
        v.labels.push_back(w);
    }
    return v;
}

void Vocabulary::add_words(std::string_view word_list) {
    static const std::regex word(R"(^[a-z'-]+$)");
    std::size_t start = 0;
    while (start <= word_list.size()) {
        std::size_t nl = word_list.find('\n', start);
        if (nl == std::string_view::npos) nl = word_list.size();
        std::string line = text::fold_string(word_list.substr(start, nl - start));
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = text::trim(line);
        if (!line.empty()) {
            if (!std::regex_match(line, word)) throw Error(ErrorCode::InvalidInput, "bad label: " + line);
            if (!contains_word(labels, line)) labels.push_back(line);
        }
        start = nl + 1;
    }
}

std::vector<Match> scan(std::string_view input, const Vocabulary& vocab) {
    static const Vocabulary kDefault = Vocabulary::defaults();
    static const std::vector<Rule> kDefaultRules = build_rules(kDefault);
    std::vector<Rule> custom;
    const bool is_default = vocab.labels == kDefault.labels;
    if (!is_default) custom = build_rules(vocab);
    const std::vector<Rule>& rules = is_default ? kDefaultRules : custom;

    text::Folded f = text::fold(input);
    const std::string& s = f.text;
    std::vector<std::size_t> cp_bytes = codepoint_starts(input);
    auto origin = [&](std::size_t folded_byte) {
        return folded_byte < f.origin.size() ? f.origin[folded_byte] : f.codepoints;
    };

    std::vector<Match> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t stop = s.find_first_of(".!?\n", start);
        if (stop == std::string::npos) stop = s.size();
        const std::string sentence = s.substr(start, stop - start);

        std::vector<Candidate> cands;
        for (const auto& rule : rules) {
            for (auto it = std::sregex_iterator(sentence.begin(), sentence.end(), rule.re); it != std::sregex_iterator();
                 ++it) {
                Candidate c = make_candidate(rule.id, *it, 0);
                if (!excluded(c, sentence)) cands.push_back(std::move(c));
            }
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.e - a.b != b.e - b.b) return a.e - a.b > b.e - b.b;
            if (a.id != b.id) return priority(a.id) < priority(b.id);
            return a.b < b.b;
        });
        std::vector<Candidate> chosen;
        for (auto& c : cands) {
            bool clash = std::any_of(chosen.begin(), chosen.end(),
                                     [&](const Candidate& o) { return c.b < o.e && o.b < c.e; });
            if (!clash) chosen.push_back(std::move(c));
        }
        std::sort(chosen.begin(), chosen.end(), [](const Candidate& a, const Candidate& b) { return a.b < b.b; });

        std::size_t sb = origin(start), se = origin(stop);
        std::string source = text::trim(input.substr(cp_bytes[sb], cp_bytes[se] - cp_bytes[sb]));
        for (auto& c : chosen) {
            std::size_t cb = origin(start + c.b), ce = origin(start + c.e);
            Match m{c.id,    cb,  ce,  std::string(input.substr(cp_bytes[cb], cp_bytes[ce] - cp_bytes[cb])),
                    c.label, source, c.n, c.p, c.second};
            out.push_back(std::move(m));
        }
        start = stop + 1;
    }
    return out;
}

std::string to_string(PeriodClass c) { return c == PeriodClass::Continuous ? "continuous" : "discontinuous"; }

PeriodClass classify_period(std::string_view raw) {
    std::string label = text::trim(text::fold_string(raw));
    static const std::regex tous_les_n(R"(^(?:tous|toutes) les (\S+) (\S+)$)");
    std::smatch m;
    if (std::regex_match(label, m, tous_les_n) && number_value(m[1].str())) {
        classify_period(m[2].str()); // the unit itself must be known
        return PeriodClass::Discontinuous;
    }
    // mars and other words ending in s are already singular
    std::string w = contains_word(kMonths, label) ? label : singular(label);
    if (w == "ans") w = "an";
    if (kContinuous.count(w)) return PeriodClass::Continuous;
    if (kDiscontinuousPeriods.count(w) || contains_word(kWeekdays, w) || contains_word(kMonths, w) ||
        contains_word(kSeasons, w)) {
        return PeriodClass::Discontinuous;
    }
    throw Error(ErrorCode::UnknownLabel, "not a period label: " + std::string(raw));
}

PeriodClass classify_period(const Match& m) {
    if (m.pattern == PatternId::TOUS_LES_N) return PeriodClass::Discontinuous;
    return classify_period(m.label);
}

std::optional<cti::NodePtr> to_cti(const Match& m) {
    auto known = [](const std::string& label) { return lookup_calendar_name(label).has_value(); };
    if (!known(m.label)) return std::nullopt;
    std::string label = m.label;
    std::string phrase;
    switch (m.pattern) {
    case PatternId::TOUS_LES: phrase = "tous les " + label; break;
    case PatternId::TOUS_LES_N:
        if (!m.n) return std::nullopt;
        phrase = "tous les " + std::to_string(*m.n) + " " + label;
        break;
    case PatternId::CHAQUE: phrase = "chaque " + label; break;
    case PatternId::FOIS_PAR:
        if (!m.n) return std::nullopt;
        phrase = std::to_string(*m.n) + " fois par " + label;
        break;
    case PatternId::N_SUR_N:
        if (!m.n || !m.p) return std::nullopt;
        phrase = std::to_string(*m.n) + " " + label + " sur " + std::to_string(*m.p);
        break;
    case PatternId::PLUPART: phrase = "la plupart des " + label; break;
    case PatternId::CERTAINS: phrase = "certains " + label; break;
    case PatternId::NIEME_DE: {
        if (!m.n) return std::nullopt;
        phrase = "le " + std::to_string(*m.n) + "e " + singular(label);
        if (m.second_label) {
            if (!known(*m.second_label)) return std::nullopt;
            phrase += " de " + *m.second_label;
        }
        break;
    }
    case PatternId::N_PAR_LABEL:
        if (!m.n || !m.second_label || !known(*m.second_label)) return std::nullopt;
        phrase = std::to_string(*m.n) + " " + label + " par " + *m.second_label;
        break;
    case PatternId::PAR_LABEL:
    case PatternId::LABEL_PAR_LABEL:
    case PatternId::GENERIQUE: return std::nullopt;
    }
    try {
        return cti::parse(phrase);
    } catch (const Error&) {
        return std::nullopt;
    }
}

nlohmann::json to_json(const Match& m) {
    nlohmann::json j{{"pattern", to_string(m.pattern)},
                     {"span", {m.begin, m.end}},
                     {"text", m.text},
                     {"label", m.label},
                     {"sentence", m.sentence}};
    if (m.n) j["n"] = *m.n;
    if (m.p) j["p"] = *m.p;
    if (m.second_label) j["second_label"] = *m.second_label;
    try {
        j["period"] = to_string(classify_period(m));
    } catch (const Error&) {
        // labels added through a word list have no period class
    }
    return j;
}

} // namespace iterata::extractor
