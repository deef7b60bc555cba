#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "iterata/series.hpp"

namespace iterata {

using SysMinutes = std::chrono::sys_time<std::chrono::minutes>;

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM" and "YYYY-MM-DDTHH:MM:SS".
SysMinutes parse_iso(std::string_view s);
std::string format_iso(SysMinutes t);

class Frame {
public:
    Frame(SysMinutes origin, SysMinutes horizon);
    static Frame from_iso(std::string_view from, std::string_view to);

    SysMinutes origin() const noexcept { return origin_; }
    SysMinutes horizon() const noexcept { return horizon_; }
    Instant length() const noexcept;
    ConvexInterval span() const noexcept { return {0, length()}; }

    Instant to_instant(SysMinutes t) const noexcept;
    SysMinutes to_time(Instant i) const noexcept;
    std::string iso(Instant i) const { return format_iso(to_time(i)); }

private:
    SysMinutes origin_;
    SysMinutes horizon_;
};

enum class CalendarName {
    Jour, Semaine, Mois, An, Heure, Saison,
    Lundi, Mardi, Mercredi, Jeudi, Vendredi, Samedi, Dimanche,
    Janvier, Fevrier, Mars, Avril, Mai, Juin, Juillet, Aout, Septembre, Octobre, Novembre, Decembre,
    Printemps, Ete, Automne, Hiver,
    Matin, ApresMidi, Soir, Nuit,
};

// Singular or plural, with or without diacritics, any case.
std::optional<CalendarName> lookup_calendar_name(std::string_view word);
CalendarName calendar_name(std::string_view word);
// Lowercase ASCII singular form, e.g. "lundi", "apres-midi".
std::string name_text(CalendarName n);
std::string plural_text(CalendarName n);
bool is_weekday(CalendarName n) noexcept;
bool is_month(CalendarName n) noexcept;

struct HourSpan {
    int from_hour;
    int to_hour; // a value <= from_hour means the next day
};

// Day-part hours; the defaults are conventions and can be overridden.
struct CalendarConfig {
    HourSpan matin{6, 12};
    HourSpan apres_midi{12, 18};
    HourSpan soir{18, 23};
    HourSpan nuit{23, 6};
};

Series gen(CalendarName name, const Frame& frame, RestrictMode mode = RestrictMode::Strict,
           const CalendarConfig& config = {});

// Point at hh:mm of each day of the frame.
Series clock_points(int hour, int minute, const Frame& frame);

enum class LexiconRelation { SorteDe, Inclusion };
bool lexicon_holds(LexiconRelation rel, CalendarName a, CalendarName b, const Frame& frame);

} // namespace iterata
