#include <sstream>

#include "iterata/cti.hpp"

namespace iterata::cti {

bool same_tree(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

bool operator==(const NcSpec& a, const NcSpec& b) { return a.name == b.name && same_tree(a.suite, b.suite); }

namespace {

struct EqVisitor {
    const Node& other;

    bool operator()(const DetNode& a) const {
        auto* b = std::get_if<DetNode>(&other.v);
        return b && a.det == b->det && a.nc == b->nc;
    }
    bool operator()(const NcSpec& a) const {
        auto* b = std::get_if<NcSpec>(&other.v);
        return b && a == *b;
    }
    bool operator()(const ParNode& a) const {
        auto* b = std::get_if<ParNode>(&other.v);
        return b && a.n == b->n && a.nc1 == b->nc1 && a.nc2 == b->nc2;
    }
    bool operator()(const FoisParNode& a) const {
        auto* b = std::get_if<FoisParNode>(&other.v);
        return b && a.n == b->n && a.nc == b->nc;
    }
    bool operator()(const SurNode& a) const {
        auto* b = std::get_if<SurNode>(&other.v);
        return b && a.n == b->n && a.p == b->p && a.nc == b->nc;
    }
    bool operator()(const TousLesNNode& a) const {
        auto* b = std::get_if<TousLesNNode>(&other.v);
        return b && a.n == b->n && a.nc == b->nc;
    }
    bool operator()(const NthNode& a) const {
        auto* b = std::get_if<NthNode>(&other.v);
        return b && a.n == b->n && a.nc == b->nc && same_tree(a.parent, b->parent);
    }
    bool operator()(const ClockNode& a) const {
        auto* b = std::get_if<ClockNode>(&other.v);
        return b && a.hour == b->hour && a.minute == b->minute && same_tree(a.within, b->within);
    }
    bool operator()(const IntdefNode& a) const {
        auto* b = std::get_if<IntdefNode>(&other.v);
        return b && same_tree(a.a, b->a) && same_tree(a.b, b->b);
    }
    bool operator()(const FreqNode& a) const {
        auto* b = std::get_if<FreqNode>(&other.v);
        return b && a.adverb == b->adverb && same_tree(a.inner, b->inner);
    }
};

bool feminine(CalendarName n) {
    return n == CalendarName::Semaine || n == CalendarName::Heure || n == CalendarName::Saison ||
           n == CalendarName::Nuit;
}

std::string render_node(const Node& n);

// "lundi de mars": a name with its suite, without determiner
std::string render_nc(const NcSpec& nc, bool plural);

// Suites and intdef bounds print a plain LES expression as a bare name.
std::string render_bare(const NodePtr& p) {
    if (auto* d = std::get_if<DetNode>(&p->v); d && d->det == Det::Les) return render_nc(d->nc, false);
    if (auto* nc = std::get_if<NcSpec>(&p->v)) return render_nc(*nc, false);
    return render_node(*p);
}

std::string render_nc(const NcSpec& nc, bool plural) {
    std::string out = plural ? plural_text(nc.name) : name_text(nc.name);
    if (nc.suite) out += " de " + render_bare(nc.suite);
    return out;
}

std::string adverb_text(FreqAdverb a) {
    switch (a) {
    case FreqAdverb::Souvent: return "souvent";
    case FreqAdverb::Parfois: return "parfois";
    case FreqAdverb::Rarement: return "rarement";
    }
    return "";
}

struct RenderVisitor {
    std::string operator()(const DetNode& d) const {
        switch (d.det) {
        case Det::Les: return (feminine(d.nc.name) ? "toutes les " : "tous les ") + render_nc(d.nc, true);
        case Det::Un: return (feminine(d.nc.name) ? "une " : "un ") + render_nc(d.nc, false);
        case Det::Plupart: return "la plupart des " + render_nc(d.nc, true);
        case Det::Certains: return (feminine(d.nc.name) ? "certaines " : "certains ") + render_nc(d.nc, true);
        }
        return "";
    }
    std::string operator()(const NcSpec& nc) const { return render_nc(nc, false); }
    std::string operator()(const ParNode& p) const {
        return std::to_string(p.n) + " " + render_nc(p.nc1, p.n > 1) + " par " + render_nc(p.nc2, false);
    }
    std::string operator()(const FoisParNode& f) const {
        return std::to_string(f.n) + " fois par " + render_nc(f.nc, false);
    }
    std::string operator()(const SurNode& s) const {
        return std::to_string(s.n) + " " + render_nc(s.nc, s.n > 1) + " sur " + std::to_string(s.p);
    }
    std::string operator()(const TousLesNNode& t) const {
        return std::string(feminine(t.nc.name) ? "toutes les " : "tous les ") + std::to_string(t.n) + " " +
               render_nc(t.nc, true);
    }
    std::string operator()(const NthNode& t) const {
        std::string out = (feminine(t.nc) ? "la " : "le ") + std::to_string(t.n) + "e " + name_text(t.nc);
        if (t.parent) out += " de " + render_bare(t.parent);
        return out;
    }
    std::string operator()(const ClockNode& c) const {
        std::string out = "a " + std::to_string(c.hour) + "h";
        if (c.minute) out += (c.minute < 10 ? "0" : "") + std::to_string(c.minute);
        if (c.within) out += " " + render_node(*c.within);
        return out;
    }
    std::string operator()(const IntdefNode& i) const {
        // de le -> du, a le -> au
        auto join = [](const std::string& prep, const std::string& rest) {
            if (rest.rfind("le ", 0) == 0) return (prep == "de" ? "du " : "au ") + rest.substr(3);
            return prep + " " + rest;
        };
        return join("de", render_bare(i.a)) + " " + join("a", render_bare(i.b));
    }
    std::string operator()(const FreqNode& f) const { return adverb_text(f.adverb) + " " + render_node(*f.inner); }
};

std::string render_node(const Node& n) { return std::visit(RenderVisitor{}, n.v); }

std::string det_text(Det d) {
    switch (d) {
    case Det::Les: return "LES";
    case Det::Un: return "UN";
    case Det::Plupart: return "PLUPART";
    case Det::Certains: return "CERTAINS";
    }
    return "";
}

void describe_into(std::ostringstream& out, const NodePtr& p, int depth);

void describe_nc(std::ostringstream& out, const NcSpec& nc, int depth) {
    out << std::string(depth * 2, ' ') << "NcSpec(" << name_text(nc.name) << ")\n";
    if (nc.suite) describe_into(out, nc.suite, depth + 1);
}

void describe_into(std::ostringstream& out, const NodePtr& p, int depth) {
    std::string pad(depth * 2, ' ');
    const Node& n = *p;
    if (auto* d = std::get_if<DetNode>(&n.v)) {
        out << pad << "Det(" << det_text(d->det) << ")\n";
        describe_nc(out, d->nc, depth + 1);
    } else if (auto* nc = std::get_if<NcSpec>(&n.v)) {
        describe_nc(out, *nc, depth);
    } else if (auto* pr = std::get_if<ParNode>(&n.v)) {
        out << pad << "Par(" << pr->n << ")\n";
        describe_nc(out, pr->nc1, depth + 1);
        describe_nc(out, pr->nc2, depth + 1);
    } else if (auto* f = std::get_if<FoisParNode>(&n.v)) {
        out << pad << "FoisPar(" << f->n << ")\n";
        describe_nc(out, f->nc, depth + 1);
    } else if (auto* s = std::get_if<SurNode>(&n.v)) {
        out << pad << "Sur(" << s->n << "," << s->p << ")\n";
        describe_nc(out, s->nc, depth + 1);
    } else if (auto* t = std::get_if<TousLesNNode>(&n.v)) {
        out << pad << "TousLesN(" << t->n << ")\n";
        describe_nc(out, t->nc, depth + 1);
    } else if (auto* th = std::get_if<NthNode>(&n.v)) {
        out << pad << "Nth(" << th->n << "," << name_text(th->nc) << ")\n";
        if (th->parent) describe_into(out, th->parent, depth + 1);
    } else if (auto* c = std::get_if<ClockNode>(&n.v)) {
        out << pad << "Clock(" << c->hour << "," << c->minute << ")\n";
        if (c->within) describe_into(out, c->within, depth + 1);
    } else if (auto* i = std::get_if<IntdefNode>(&n.v)) {
        out << pad << "Intdef\n";
        describe_into(out, i->a, depth + 1);
        describe_into(out, i->b, depth + 1);
    } else if (auto* fr = std::get_if<FreqNode>(&n.v)) {
        out << pad << "Freq(" << adverb_text(fr->adverb) << ")\n";
        describe_into(out, fr->inner, depth + 1);
    }
}

} // namespace

bool operator==(const Node& a, const Node& b) { return std::visit(EqVisitor{b}, a.v); }

std::string render(const NodePtr& ast) { return render_node(*ast); }

std::string describe(const NodePtr& ast) {
    std::ostringstream out;
    describe_into(out, ast, 0);
    return out.str();
}

} // namespace iterata::cti
