#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "iterata/cti.hpp"

namespace iterata::extractor {

enum class PatternId {
    TOUS_LES,
    TOUS_LES_N,
    CHAQUE,
    FOIS_PAR,
    PAR_LABEL,
    LABEL_PAR_LABEL,
    NIEME_DE,
    PLUPART,
    N_SUR_N,
    CERTAINS,
    N_PAR_LABEL,
    GENERIQUE,
};

std::string to_string(PatternId p);
std::optional<PatternId> pattern_from_string(std::string_view s);

// Period labels, stored folded and singular.
struct Vocabulary {
    std::vector<std::string> labels;

    static Vocabulary defaults();
    // one label per line, '#' comments
    void add_words(std::string_view word_list);
};

struct Match {
    PatternId pattern;
    // code-point offsets into the scanned text, end exclusive
    std::size_t begin;
    std::size_t end;
    std::string text;     // the matched surface string
    std::string label;    // folded, as written
    std::string sentence; // the source sentence, trimmed
    std::optional<int> n; // leading count or ordinal
    std::optional<int> p; // N_SUR_N denominator
    std::optional<std::string> second_label; // NIEME_DE parent, *_PAR_LABEL divisor
};

std::vector<Match> scan(std::string_view text, const Vocabulary& vocab = Vocabulary::defaults());

enum class PeriodClass { Continuous, Discontinuous };
std::string to_string(PeriodClass c);

// A bare label (singular or plural) or a "tous les <n> <label>" phrase.
PeriodClass classify_period(std::string_view label);
PeriodClass classify_period(const Match& m);

std::optional<cti::NodePtr> to_cti(const Match& m);

nlohmann::json to_json(const Match& m);

} // namespace iterata::extractor
