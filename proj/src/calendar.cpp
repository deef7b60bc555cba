#include "iterata/calendar.hpp"

#include <array>
#include <cstdio>
#include <vector>

#include "iterata/errors.hpp"
#include "iterata/text.hpp"

namespace iterata {

using namespace std::chrono;

namespace {

struct NameEntry {
    CalendarName name;
    const char* singular;
    const char* plural;
};

constexpr std::array<NameEntry, 33> kNames{{
    {CalendarName::Jour, "jour", "jours"},
    {CalendarName::Semaine, "semaine", "semaines"},
    {CalendarName::Mois, "mois", "mois"},
    {CalendarName::An, "an", "ans"},
    {CalendarName::Heure, "heure", "heures"},
    {CalendarName::Saison, "saison", "saisons"},
    {CalendarName::Lundi, "lundi", "lundis"},
    {CalendarName::Mardi, "mardi", "mardis"},
    {CalendarName::Mercredi, "mercredi", "mercredis"},
    {CalendarName::Jeudi, "jeudi", "jeudis"},
    {CalendarName::Vendredi, "vendredi", "vendredis"},
    {CalendarName::Samedi, "samedi", "samedis"},
    {CalendarName::Dimanche, "dimanche", "dimanches"},
    {CalendarName::Janvier, "janvier", "janviers"},
    {CalendarName::Fevrier, "fevrier", "fevriers"},
    {CalendarName::Mars, "mars", "mars"},
    {CalendarName::Avril, "avril", "avrils"},
    {CalendarName::Mai, "mai", "mais"},
    {CalendarName::Juin, "juin", "juins"},
    {CalendarName::Juillet, "juillet", "juillets"},
    {CalendarName::Aout, "aout", "aouts"},
    {CalendarName::Septembre, "septembre", "septembres"},
    {CalendarName::Octobre, "octobre", "octobres"},
    {CalendarName::Novembre, "novembre", "novembres"},
    {CalendarName::Decembre, "decembre", "decembres"},
    {CalendarName::Printemps, "printemps", "printemps"},
    {CalendarName::Ete, "ete", "etes"},
    {CalendarName::Automne, "automne", "automnes"},
    {CalendarName::Hiver, "hiver", "hivers"},
    {CalendarName::Matin, "matin", "matins"},
    {CalendarName::ApresMidi, "apres-midi", "apres-midi"},
    {CalendarName::Soir, "soir", "soirs"},
    {CalendarName::Nuit, "nuit", "nuits"},
}};

const NameEntry& entry(CalendarName n) {
    for (const auto& e : kNames) {
        if (e.name == n) return e;
    }
    throw Error(ErrorCode::UnknownName, "unknown calendar name");
}

struct Span {
    SysMinutes beg;
    SysMinutes end;
};

sys_days first_day(const Frame& f) { return floor<days>(f.origin()) - days{1}; }
sys_days last_day(const Frame& f) { return floor<days>(f.horizon()); }

SysMinutes at(sys_days d, int hour = 0, int minute = 0) {
    return SysMinutes{d} + hours{hour} + minutes{minute};
}

sys_days ymd(int y, unsigned m, unsigned d) { return sys_days{year{y} / month{m} / day{d}}; }

void day_spans(const Frame& f, std::vector<Span>& out, const std::function<bool(sys_days)>& keep) {
    for (sys_days d = first_day(f); d <= last_day(f); d += days{1}) {
        if (keep(d)) out.push_back({at(d), at(d + days{1})});
    }
}

void part_spans(const Frame& f, HourSpan h, std::vector<Span>& out) {
    for (sys_days d = first_day(f); d <= last_day(f); d += days{1}) {
        sys_days e = h.to_hour <= h.from_hour ? d + days{1} : d;
        out.push_back({at(d, h.from_hour), at(e, h.to_hour)});
    }
}

void season_spans(const Frame& f, int which, std::vector<Span>& out) {
    // 0 printemps, 1 ete, 2 automne, 3 hiver
    static constexpr std::array<std::pair<unsigned, unsigned>, 5> starts{
        {{3, 21}, {6, 21}, {9, 21}, {12, 21}, {3, 21}}};
    int y0 = int(year_month_day{first_day(f)}.year()) - 1;
    int y1 = int(year_month_day{last_day(f)}.year());
    for (int y = y0; y <= y1; ++y) {
        for (int s = 0; s < 4; ++s) {
            if (which >= 0 && s != which) continue;
            int ye = s == 3 ? y + 1 : y;
            out.push_back({at(ymd(y, starts[s].first, starts[s].second)),
                           at(ymd(ye, starts[s + 1].first, starts[s + 1].second))});
        }
    }
}

void month_spans(const Frame& f, int which, std::vector<Span>& out) {
    year_month ym = year_month_day{first_day(f)}.year() / year_month_day{first_day(f)}.month();
    year_month last = year_month_day{last_day(f)}.year() / year_month_day{last_day(f)}.month();
    for (; ym <= last; ym += months{1}) {
        if (which > 0 && unsigned(ym.month()) != unsigned(which)) continue;
        year_month nx = ym + months{1};
        out.push_back({at(sys_days{ym / day{1}}), at(sys_days{nx / day{1}})});
    }
}

Series to_series(const std::vector<Span>& spans, const Frame& f, RestrictMode mode) {
    std::vector<ConvexInterval> items;
    for (const auto& s : spans) {
        if (mode == RestrictMode::Strict) {
            if (s.beg >= f.origin() && s.end <= f.horizon()) {
                items.emplace_back(f.to_instant(s.beg), f.to_instant(s.end));
            }
        } else {
            SysMinutes lo = std::max(s.beg, f.origin());
            SysMinutes hi = std::min(s.end, f.horizon());
            if (lo < hi) items.emplace_back(f.to_instant(lo), f.to_instant(hi));
        }
    }
    return Series(std::move(items));
}

} // namespace

SysMinutes parse_iso(std::string_view s) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
    std::string str(s);
    int n = 0;
    int read = std::sscanf(str.c_str(), "%d-%d-%d%n", &y, &mo, &d, &n);
    if (read != 3 || n != 10) throw Error(ErrorCode::InvalidFrame, "not an ISO-8601 date: " + str);
    if (static_cast<std::size_t>(n) < str.size()) {
        int n2 = 0;
        const char* rest = str.c_str() + n;
        if ((rest[0] != 'T' && rest[0] != ' ') ||
            std::sscanf(rest + 1, "%d:%d%n", &h, &mi, &n2) != 2) {
            throw Error(ErrorCode::InvalidFrame, "not an ISO-8601 date-time: " + str);
        }
        std::size_t used = static_cast<std::size_t>(n + 1 + n2);
        if (used < str.size()) {
            int n3 = 0;
            if (std::sscanf(str.c_str() + used, ":%d%n", &sec, &n3) != 1 ||
                used + static_cast<std::size_t>(n3) != str.size()) {
                throw Error(ErrorCode::InvalidFrame, "not an ISO-8601 date-time: " + str);
            }
        }
    }
    year_month_day date{year{y} / month{static_cast<unsigned>(mo)} / day{static_cast<unsigned>(d)}};
    if (!date.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || sec < 0 || sec > 59) {
        throw Error(ErrorCode::InvalidFrame, "invalid calendar date: " + str);
    }
    return at(sys_days{date}, h, mi);
}

std::string format_iso(SysMinutes t) {
    sys_days d = floor<days>(t);
    year_month_day date{d};
    auto rem = t - SysMinutes{d};
    int h = static_cast<int>(duration_cast<hours>(rem).count());
    int mi = static_cast<int>((rem - hours{h}).count());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d", int(date.year()), unsigned(date.month()),
                  unsigned(date.day()), h, mi);
    return buf;
}

Frame::Frame(SysMinutes origin, SysMinutes horizon) : origin_(origin), horizon_(horizon) {
    if (!(origin < horizon)) throw Error(ErrorCode::InvalidFrame, "frame origin must precede its horizon");
}

Frame Frame::from_iso(std::string_view from, std::string_view to) { return {parse_iso(from), parse_iso(to)}; }

Instant Frame::length() const noexcept { return (horizon_ - origin_).count(); }
Instant Frame::to_instant(SysMinutes t) const noexcept { return (t - origin_).count(); }
SysMinutes Frame::to_time(Instant i) const noexcept { return origin_ + minutes{i}; }

std::optional<CalendarName> lookup_calendar_name(std::string_view word) {
    std::string w = text::fold_string(word);
    if (w == "annee" || w == "annees") return CalendarName::An;
    if (w == "apresmidi" || w == "apres midi") return CalendarName::ApresMidi;
    for (const auto& e : kNames) {
        if (w == e.singular || w == e.plural) return e.name;
    }
    return std::nullopt;
}

CalendarName calendar_name(std::string_view word) {
    if (auto n = lookup_calendar_name(word)) return *n;
    throw Error(ErrorCode::UnknownName, "unknown calendar name: " + std::string(word));
}

std::string name_text(CalendarName n) { return entry(n).singular; }
std::string plural_text(CalendarName n) { return entry(n).plural; }

bool is_weekday(CalendarName n) noexcept { return n >= CalendarName::Lundi && n <= CalendarName::Dimanche; }
bool is_month(CalendarName n) noexcept { return n >= CalendarName::Janvier && n <= CalendarName::Decembre; }

Series gen(CalendarName name, const Frame& frame, RestrictMode mode, const CalendarConfig& config) {
    std::vector<Span> spans;
    switch (name) {
    case CalendarName::Heure:
        for (SysMinutes t = at(first_day(frame)); t < at(last_day(frame) + days{1}); t += hours{1}) {
            spans.push_back({t, t + hours{1}});
        }
        break;
    case CalendarName::Jour:
        day_spans(frame, spans, [](sys_days) { return true; });
        break;
    case CalendarName::Semaine: {
        sys_days d = first_day(frame);
        d -= days{weekday{d}.iso_encoding() - 1};
        for (; d <= last_day(frame); d += weeks{1}) spans.push_back({at(d), at(d + weeks{1})});
        break;
    }
    case CalendarName::Mois:
        month_spans(frame, 0, spans);
        break;
    case CalendarName::An: {
        int y0 = int(year_month_day{first_day(frame)}.year());
        int y1 = int(year_month_day{last_day(frame)}.year());
        for (int y = y0; y <= y1; ++y) spans.push_back({at(ymd(y, 1, 1)), at(ymd(y + 1, 1, 1))});
        break;
    }
    case CalendarName::Saison:
        season_spans(frame, -1, spans);
        break;
    case CalendarName::Printemps:
    case CalendarName::Ete:
    case CalendarName::Automne:
    case CalendarName::Hiver:
        season_spans(frame, int(name) - int(CalendarName::Printemps), spans);
        break;
    case CalendarName::Matin: part_spans(frame, config.matin, spans); break;
    case CalendarName::ApresMidi: part_spans(frame, config.apres_midi, spans); break;
    case CalendarName::Soir: part_spans(frame, config.soir, spans); break;
    case CalendarName::Nuit: part_spans(frame, config.nuit, spans); break;
    default:
        if (is_weekday(name)) {
            unsigned iso = unsigned(name) - unsigned(CalendarName::Lundi) + 1;
            day_spans(frame, spans, [iso](sys_days d) { return weekday{d}.iso_encoding() == iso; });
        } else if (is_month(name)) {
            month_spans(frame, int(name) - int(CalendarName::Janvier) + 1, spans);
        }
        break;
    }
    return to_series(spans, frame, mode);
}

Series clock_points(int hour, int minute, const Frame& frame) {
    if (hour < 0 || hour > 23 || minute < 0 || minute > 59) {
        throw Error(ErrorCode::InvalidInput, "clock time out of range");
    }
    std::vector<ConvexInterval> items;
    for (sys_days d = floor<days>(frame.origin()); d <= last_day(frame); d += days{1}) {
        SysMinutes t = at(d, hour, minute);
        if (t >= frame.origin() && t < frame.horizon()) items.push_back(ConvexInterval::point(frame.to_instant(t)));
    }
    return Series(std::move(items));
}

bool lexicon_holds(LexiconRelation rel, CalendarName a, CalendarName b, const Frame& frame) {
    Series sa = gen(a, frame);
    Series sb = gen(b, frame);
    return rel == LexiconRelation::SorteDe ? extracted(sa, sb) : included(sa, sb);
}

} // namespace iterata
