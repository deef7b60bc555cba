#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace iterata::text {

// Lowercase ASCII folding of UTF-8 text: Latin diacritics are dropped,
// ligatures expanded, typographic apostrophes and dashes mapped to ASCII.
// origin[k] is the code-point index in the input of folded byte k.
struct Folded {
    std::string text;
    std::vector<std::size_t> origin;
    std::size_t codepoints = 0;
};

Folded fold(std::string_view utf8);
std::string fold_string(std::string_view utf8);

std::vector<std::string> split_words(std::string_view s);
std::string trim(std::string_view s);

} // namespace iterata::text
