#include <cctype>
#include <map>
#include <regex>
#include <vector>

#include "iterata/cti.hpp"
#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata::cti {

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.') {
            ++k;
            continue;
        }
        std::size_t start = k;
        std::string word;
        while (k < s.size()) {
            char d = s[k];
            if (std::isspace(static_cast<unsigned char>(d)) || d == ',' || d == '.') break;
            word.push_back(d);
            ++k;
            // elided article or preposition: "d'ete", "l'an"
            if (d == '\'') break;
        }
        out.push_back({word, start});
    }
    return out;
}

const std::map<std::string, int> kNumberWords{
    {"un", 1},      {"une", 1},     {"deux", 2},   {"trois", 3},   {"quatre", 4},  {"cinq", 5},
    {"six", 6},     {"sept", 7},    {"huit", 8},   {"neuf", 9},    {"dix", 10},    {"onze", 11},
    {"douze", 12},  {"treize", 13}, {"quatorze", 14}, {"quinze", 15}, {"seize", 16}, {"vingt", 20},
    {"trente", 30}, {"cent", 100},
};

const std::map<std::string, int> kOrdinalWords{
    {"premier", 1},    {"premiere", 1}, {"second", 2},    {"seconde", 2},   {"deuxieme", 2},
    {"troisieme", 3},  {"quatrieme", 4}, {"cinquieme", 5}, {"sixieme", 6},   {"septieme", 7},
    {"huitieme", 8},   {"neuvieme", 9},  {"dixieme", 10},  {"onzieme", 11},  {"douzieme", 12},
};

std::optional<int> as_number(const std::string& w) {
    if (!w.empty() && w.size() <= 6 && std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return std::stoi(w);
    }
    if (auto it = kNumberWords.find(w); it != kNumberWords.end()) return it->second;
    return std::nullopt;
}

std::optional<int> as_ordinal(const std::string& w) {
    static const std::regex re(R"(^(\d{1,4})(e|eme|er|ere|nd|nde)$)");
    std::smatch m;
    if (std::regex_match(w, m, re)) return std::stoi(m[1].str());
    if (auto it = kOrdinalWords.find(w); it != kOrdinalWords.end()) return it->second;
    return std::nullopt;
}

bool continuous_unit(CalendarName n) {
    return n == CalendarName::Jour || n == CalendarName::Semaine || n == CalendarName::Mois ||
           n == CalendarName::An || n == CalendarName::Heure || n == CalendarName::Saison;
}

class Parser {
public:
    Parser(std::string src) : src_(std::move(src)), toks_(tokenize(src_)) {}

    NodePtr run() {
        NodePtr n = cti();
        if (!at_end()) fail({"end of input"});
        return n;
    }

private:
    std::string src_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    bool at_end() const { return i_ >= toks_.size(); }
    const std::string& peek(std::size_t ahead = 0) const {
        static const std::string kEnd;
        return i_ + ahead < toks_.size() ? toks_[i_ + ahead].text : kEnd;
    }
    bool is(std::initializer_list<const char*> words, std::size_t ahead = 0) const {
        for (const char* w : words) {
            if (peek(ahead) == w) return true;
        }
        return false;
    }
    std::string take() { return toks_[i_++].text; }

    [[noreturn]] void fail(std::set<std::string> expected) const {
        std::size_t pos = at_end() ? src_.size() : toks_[i_].pos;
        throw ParseError(pos, std::move(expected), at_end() ? "end of input" : toks_[i_].text);
    }

    void expect(const char* w) {
        if (peek() != w) fail({w});
        ++i_;
    }

    int number() {
        if (auto n = as_number(peek()); n && *n >= 1) {
            ++i_;
            return *n;
        }
        fail({"number"});
    }

    CalendarName name() {
        if (auto n = lookup_calendar_name(peek())) {
            ++i_;
            return *n;
        }
        fail({"calendar name"});
    }

    bool name_ahead(std::size_t ahead = 0) const { return lookup_calendar_name(peek(ahead)).has_value(); }

    bool clock_ahead(std::size_t ahead = 0) const {
        static const std::regex re(R"(^\d{1,2}h(\d{2})?$)");
        const std::string& w = peek(ahead);
        if (w == "midi" || w == "minuit" || std::regex_match(w, re)) return true;
        return as_number(w).has_value() &&
               (peek(ahead + 1) == "h" || peek(ahead + 1) == "heure" || peek(ahead + 1) == "heures");
    }

    std::pair<int, int> clock() {
        static const std::regex re(R"(^(\d{1,2})h(\d{2})?$)");
        std::smatch m;
        const std::string w = peek();
        int h = 0, mi = 0;
        if (w == "midi") {
            h = 12;
            ++i_;
        } else if (w == "minuit") {
            ++i_;
        } else if (std::regex_match(w, m, re)) {
            h = std::stoi(m[1].str());
            mi = m[2].matched ? std::stoi(m[2].str()) : 0;
            ++i_;
        } else if (auto n = as_number(w)) {
            h = *n;
            ++i_;
            ++i_; // h | heure | heures
            if (auto mm = as_number(peek()); mm && !name_ahead(1) && !is({"fois", "par", "sur"}, 1)) {
                mi = *mm;
                ++i_;
            }
        } else {
            fail({"clock time"});
        }
        if (h > 23 || mi > 59) fail({"clock time"});
        return {h, mi};
    }

    bool cti_ahead() const {
        return is({"souvent", "parfois", "rarement", "de", "du", "a", "tous", "toutes", "chaque", "les", "le",
                   "la", "l'", "certains", "certaines", "quelques"}) ||
               as_number(peek()).has_value();
    }

    NodePtr cti() {
        if (is({"souvent", "parfois", "rarement"})) {
            std::string w = take();
            FreqAdverb a = w == "souvent" ? FreqAdverb::Souvent
                           : w == "parfois" ? FreqAdverb::Parfois
                                            : FreqAdverb::Rarement;
            return make(FreqNode{a, cti()});
        }
        if (is({"de", "du"})) return intdef();
        if (peek() == "a" && clock_ahead(1)) {
            ++i_;
            auto [h, m] = clock();
            NodePtr within;
            if (!at_end() && cti_ahead()) within = cti();
            return make(ClockNode{h, m, within});
        }
        NodePtr base = core();
        if (peek() == "a" && clock_ahead(1)) {
            ++i_;
            auto [h, m] = clock();
            return make(ClockNode{h, m, base});
        }
        return base;
    }

    NodePtr cti_or_bare() {
        if (name_ahead()) return make(DetNode{Det::Les, ncspec()});
        return cti();
    }

    // after an explicit or contracted "le"
    NodePtr after_le() {
        if (auto n = as_ordinal(peek())) {
            ++i_;
            return nth(*n);
        }
        if (name_ahead()) return make(DetNode{Det::Les, ncspec()});
        fail({"ordinal", "calendar name"});
    }

    NodePtr nth(int n) {
        if (n < 1) fail({"ordinal"});
        CalendarName nc = name();
        NodePtr parent;
        if (is({"de", "d'", "en"})) {
            ++i_;
            parent = cti_or_bare();
        } else if (peek() == "du") {
            ++i_;
            parent = after_le();
        } else if (peek() == "des") {
            ++i_;
            parent = make(DetNode{Det::Les, ncspec()});
        }
        return make(NthNode{n, nc, parent});
    }

    NodePtr intdef() {
        bool contracted = take() == "du";
        NodePtr a = contracted ? after_le() : cti_or_bare();
        NodePtr b;
        if (peek() == "a") {
            ++i_;
            b = cti_or_bare();
        } else if (peek() == "au") {
            ++i_;
            b = after_le();
        } else {
            fail({"a", "au"});
        }
        return make(IntdefNode{a, b});
    }

    NcSpec ncspec() {
        CalendarName n = name();
        return {n, suite()};
    }

    NodePtr suite() {
        if (is({"de", "d'", "en"})) {
            ++i_;
            return cti_or_bare();
        }
        if (peek() == "du") {
            ++i_;
            return after_le();
        }
        if (peek() == "des") {
            ++i_;
            return make(DetNode{Det::Les, ncspec()});
        }
        if (is({"chaque", "tous", "toutes"})) return cti();
        return nullptr;
    }

    NodePtr core() {
        if (is({"tous", "toutes"})) {
            ++i_;
            expect("les");
            if (as_number(peek()) && name_ahead(1)) {
                int n = number();
                return make(TousLesNNode{n, ncspec()});
            }
            return make(DetNode{Det::Les, ncspec()});
        }
        if (is({"chaque", "les"})) {
            ++i_;
            return make(DetNode{Det::Les, ncspec()});
        }
        if (peek() == "la" && peek(1) == "plupart") {
            i_ += 2;
            if (is({"des", "du"})) {
                ++i_;
            } else if (peek() == "de" && peek(1) == "les") {
                i_ += 2;
            } else {
                fail({"des", "du"});
            }
            return make(DetNode{Det::Plupart, ncspec()});
        }
        if (is({"le", "la", "l'"})) {
            ++i_;
            return after_le();
        }
        if (is({"certains", "certaines", "quelques"})) {
            bool quelques = take() == "quelques";
            std::size_t at = i_;
            NcSpec nc = ncspec();
            if (quelques && continuous_unit(nc.name)) {
                throw ParseError(toks_[at].pos, {"discontinuous calendar name"}, toks_[at].text);
            }
            return make(DetNode{Det::Certains, nc});
        }
        if (as_number(peek())) {
            bool article = is({"un", "une"});
            int n = number();
            if (peek() == "fois") {
                ++i_;
                expect("par");
                return make(FoisParNode{n, ncspec()});
            }
            CalendarName nc = name();
            if (peek() == "par") {
                ++i_;
                return make(ParNode{n, {nc, nullptr}, ncspec()});
            }
            if (peek() == "sur") {
                ++i_;
                int p = number();
                if (n > p) fail({"number >= " + std::to_string(n)});
                return make(SurNode{n, p, {nc, nullptr}});
            }
            if (article) {
                if (peek() == "de" && peek(1) == "chaque") {
                    i_ += 2;
                    return make(ParNode{1, {nc, nullptr}, ncspec()});
                }
                return make(DetNode{Det::Un, {nc, suite()}});
            }
            fail({"par", "sur", "fois"});
        }
        fail({"tous", "toutes", "chaque", "les", "le", "la plupart", "certains", "quelques", "un", "number",
              "souvent", "parfois", "rarement", "de", "a"});
    }
};

} // namespace

NodePtr parse(std::string_view input) { return Parser(text::fold_string(input)).run(); }

} // namespace iterata::cti
