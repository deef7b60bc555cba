#include "iterata/text.hpp"

#include <cctype>
#include <cstdint>

namespace iterata::text {

namespace {

char32_t decode(std::string_view s, std::size_t& pos) {
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char c = byte(pos);
    std::size_t len = 1;
    char32_t cp = c;
    if (c >= 0xF0) {
        len = 4;
        cp = c & 0x07;
    } else if (c >= 0xE0) {
        len = 3;
        cp = c & 0x0F;
    } else if (c >= 0xC2) {
        len = 2;
        cp = c & 0x1F;
    }
    if (len > 1 && pos + len > s.size()) len = 1;
    if (len == 1) {
        ++pos;
        return c < 0x80 ? c : U'?';
    }
    for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (byte(pos + k) & 0x3F);
    pos += len;
    return cp;
}

const char* fold_codepoint(char32_t cp) {
    switch (cp) {
    case U'à': case U'á': case U'â': case U'ã': case U'ä': case U'å':
    case U'À': case U'Á': case U'Â': case U'Ã': case U'Ä': case U'Å': return "a";
    case U'ç': case U'Ç': return "c";
    case U'è': case U'é': case U'ê': case U'ë':
    case U'È': case U'É': case U'Ê': case U'Ë': return "e";
    case U'ì': case U'í': case U'î': case U'ï':
    case U'Ì': case U'Í': case U'Î': case U'Ï': return "i";
    case U'ñ': case U'Ñ': return "n";
    case U'ò': case U'ó': case U'ô': case U'õ': case U'ö':
    case U'Ò': case U'Ó': case U'Ô': case U'Õ': case U'Ö': return "o";
    case U'ù': case U'ú': case U'û': case U'ü':
    case U'Ù': case U'Ú': case U'Û': case U'Ü': return "u";
    case U'ý': case U'ÿ': case U'Ý': case U'Ÿ': return "y";
    case U'œ': case U'Œ': return "oe";
    case U'æ': case U'Æ': return "ae";
    case U'’': case U'‘': case U'ʼ': return "'";
    case U'‐': case U'‑': case U'‒': case U'–': case U'—': return "-";
    case U' ': case U' ': return " ";
    case U'«': case U'»': case U'“': case U'”': return "\"";
    default: return nullptr;
    }
}

} // namespace

Folded fold(std::string_view utf8) {
    Folded out;
    std::size_t pos = 0;
    std::size_t index = 0;
    while (pos < utf8.size()) {
        char32_t cp = decode(utf8, pos);
        if (cp < 0x80) {
            out.text.push_back(static_cast<char>(std::tolower(static_cast<int>(cp))));
            out.origin.push_back(index);
        } else if (const char* f = fold_codepoint(cp)) {
            for (const char* c = f; *c; ++c) {
                out.text.push_back(*c);
                out.origin.push_back(index);
            }
        } else {
            out.text.push_back('?');
            out.origin.push_back(index);
        }
        ++index;
    }
    out.codepoints = index;
    return out;
}

std::string fold_string(std::string_view utf8) { return fold(utf8).text; }

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace iterata::text
