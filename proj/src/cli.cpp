#include "iterata/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iterata/calendar.hpp"
#include "iterata/cti.hpp"
#include "iterata/errors.hpp"
#include "iterata/extractor.hpp"
#include "iterata/itermodel.hpp"
#include "iterata/network.hpp"
#include "iterata/sdt.hpp"
#include "iterata/text.hpp"

namespace iterata::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

json interval_json(const ConvexInterval& i, const Frame& f) { return json::array({f.iso(i.beg), f.iso(i.end)}); }

void print_series(std::ostream& out, const Series& s, const Frame& f, bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& i : s) arr.push_back(interval_json(i, f));
        out << arr.dump() << "\n";
        return;
    }
    for (const auto& i : s) {
        if (i.is_point()) out << f.iso(i.beg) << "\n";
        else out << f.iso(i.beg) << " " << f.iso(i.end) << "\n";
    }
}

std::string constraint_text(const cti::Family& fam, const Frame& f) {
    return std::visit(
        [&](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, cti::Exact>) return "exactly " + std::to_string(c.series.size()) + " elements";
            else if constexpr (std::is_same_v<T, cti::Card>) return "cardinality " + std::to_string(c.k);
            else if constexpr (std::is_same_v<T, cti::RatioConst>) {
                std::string parent = c.parent.empty() ? "" : " from " + f.iso(c.parent.items().front().beg);
                return std::to_string(c.n) + " per component of a " + std::to_string(c.parent.size()) +
                       "-component parent" + parent + " (" +
                       (c.membership == cti::Membership::Extracted ? "extracted" : "included") + ")";
            } else {
                return std::string(c.op == cti::Cmp::Gt ? "ratio > " : "ratio < ") + std::to_string(c.num) + "/" +
                       std::to_string(c.den);
            }
        },
        fam.constraint);
}

Series read_candidate(const std::string& path, const Frame& f) {
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<ConvexInterval> items;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto words = text::split_words(line);
        if (words.empty()) continue;
        Instant b = f.to_instant(parse_iso(words[0]));
        Instant e = words.size() > 1 ? f.to_instant(parse_iso(words[1])) : b;
        items.emplace_back(b, e);
    }
    return make_series(std::move(items));
}

std::string network_text(const QualNetwork& net) {
    std::ostringstream out;
    for (const auto& n : net.names()) out << n << "\n";
    for (std::size_t i = 0; i < net.size(); ++i) {
        for (std::size_t j = i + 1; j < net.size(); ++j) {
            allen::RelationSet r = net.edge(i, j);
            if (!r.is_full()) out << net.names()[i] << " " << allen::to_text(r) << " " << net.names()[j] << "\n";
        }
    }
    return out.str();
}

int domain_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << json{{"error", code}, {"message", message}}.dump() << "\n";
    return 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterative temporal expressions: series algebra, CTI semantics, Allen networks."};
    app.name("iterata");
    app.require_subcommand(1);

    std::string from, to, expr, candidate, file, pattern, labels, network_out, phrase;
    bool soft = false, lenient = false, witness_only = false, family = false, as_json = false, scenario = false,
         chronogram = false;

    auto* eval = app.add_subcommand("eval", "Denote a CTI over a frame");
    eval->add_option("expr", expr, "CTI expression")->required();
    eval->add_option("--from", from, "frame origin (ISO-8601)")->required();
    eval->add_option("--to", to, "frame horizon (ISO-8601)")->required();
    eval->add_flag("--soft", soft, "soft restriction by default");
    eval->add_flag("--lenient", lenient, "lenient ratio quantifiers");
    auto* w = eval->add_flag("--witness", witness_only, "print only the chosen witness series");
    eval->add_flag("--family", family, "describe the quantified family")->excludes(w);
    eval->add_flag("--json", as_json, "JSON output");

    auto* check = app.add_subcommand("check", "Test a candidate series against a CTI denotation");
    check->add_option("expr", expr, "CTI expression")->required();
    check->add_option("--candidate", candidate, "file of '<iso> [<iso>]' lines")->required();
    check->add_option("--from", from, "frame origin")->required();
    check->add_option("--to", to, "frame horizon")->required();
    check->add_flag("--soft", soft);
    check->add_flag("--lenient", lenient);

    auto* network = app.add_subcommand("network", "Allen constraint networks");
    network->require_subcommand(1);
    auto* solve = network->add_subcommand("solve", "Run path consistency on a network file");
    solve->add_option("file", file, "network file")->required()->check(CLI::ExistingFile);
    solve->add_flag("--scenario", scenario, "print one consistent scenario");
    solve->add_flag("--chronogram", chronogram, "print a chronogram of one scenario");
    solve->add_flag("--json", as_json);

    auto* sdt = app.add_subcommand("sdt", "Aspect/tense structure of a clause record");
    sdt->add_option("clause", file, "clause JSON file")->required()->check(CLI::ExistingFile);
    sdt->add_option("--network", network_out, "write the interval network to this file");

    auto* inst = app.add_subcommand("instantiate", "Project an iteration spec onto the timeline");
    inst->add_option("spec", file, "iteration JSON file")->required()->check(CLI::ExistingFile);
    inst->add_option("--from", from, "frame origin")->required();
    inst->add_option("--to", to, "frame horizon")->required();

    auto* extract = app.add_subcommand("extract", "Find iterative adverbials in text");
    extract->add_option("file", file, "UTF-8 text file")->required()->check(CLI::ExistingFile);
    extract->add_option("--pattern", pattern, "keep only this pattern id");
    extract->add_option("--labels", labels, "extra period labels, one per line")->check(CLI::ExistingFile);
    extract->add_flag("--json", as_json, "JSON lines output");

    auto* classify = app.add_subcommand("classify", "Category of a temporal expression");
    classify->add_option("phrase", phrase)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        // help on a subcommand surfaces as CallForHelp too; anything else is a usage error
        err << e.what() << "\n";
        err << "Run with --help for usage.\n";
        return 2;
    }

    try {
        if (eval->parsed() || check->parsed()) {
            Frame frame = Frame::from_iso(from, to);
            cti::DenoteOptions opts;
            opts.mode = soft ? RestrictMode::Soft : RestrictMode::Strict;
            opts.lenient = lenient;
            cti::Denotation d = cti::denote(cti::parse(expr), frame, opts);
            if (check->parsed()) {
                Series cand = read_candidate(candidate, frame);
                bool ok = d.concrete() ? cand == d.series() : cti::family_check(cand, d.family());
                out << json{{"member", ok}}.dump() << "\n";
                return 0;
            }
            if (family && !d.concrete()) {
                const auto& fam = d.family();
                if (as_json) {
                    json j{{"base", json::array()}, {"constraint", constraint_text(fam, frame)}, {"lenient", fam.lenient}};
                    for (const auto& i : fam.base) j["base"].push_back(interval_json(i, frame));
                    out << j.dump() << "\n";
                } else {
                    out << "# family over " << fam.base.size() << " base elements: " << constraint_text(fam, frame)
                        << "\n";
                    print_series(out, fam.base, frame, false);
                }
                return 0;
            }
            if (!d.concrete() && !witness_only && !as_json) out << "# witness of a quantified family\n";
            print_series(out, cti::witness(d), frame, as_json);
            return 0;
        }
        if (solve->parsed()) {
            QualNetwork net = parse_network(read_file(file));
            auto result = path_consistency(net);
            if (result.verdict == Verdict::Inconsistent) {
                return domain_error(err, "Inconsistent", "the network has no consistent scenario");
            }
            if (as_json) {
                json j{{"verdict", to_string(result.verdict)}, {"edges", json::array()}};
                const auto& n = result.network;
                for (std::size_t i = 0; i < n.size(); ++i) {
                    for (std::size_t k = i + 1; k < n.size(); ++k) {
                        j["edges"].push_back({n.names()[i], allen::to_text(n.edge(i, k)), n.names()[k]});
                    }
                }
                if (scenario) {
                    Scenario sc = find_scenario(result.network);
                    j["scenario"] = json::object();
                    for (std::size_t i = 0; i < n.size(); ++i) {
                        j["scenario"][n.names()[i]] = {sc.endpoints[i].first, sc.endpoints[i].second};
                    }
                }
                out << j.dump() << "\n";
                return 0;
            }
            out << "verdict " << to_string(result.verdict) << "\n";
            out << network_text(result.network);
            if (scenario) {
                Scenario sc = find_scenario(result.network);
                out << "# scenario\n" << network_text(sc.network);
            }
            if (chronogram) out << export_chronogram(result.network);
            return 0;
        }
        if (sdt->parsed()) {
            sdt::Clause c = sdt::clause_from_json(read_json(file));
            sdt::SdtStructure s = sdt::build_structure(c);
            out << sdt::to_json(s).dump(2) << "\n";
            if (!network_out.empty()) {
                std::ofstream f(network_out);
                if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + network_out);
                if (s.diagnosis == sdt::Diagnosis::Insoluble) {
                    f << "# insoluble clause: no network\n";
                } else {
                    f << network_text(sdt::to_network(s));
                }
            }
            return 0;
        }
        if (inst->parsed()) {
            Frame frame = Frame::from_iso(from, to);
            auto it = itermodel::iteration_from_json(read_json(file), frame);
            out << itermodel::to_json(itermodel::instantiate(it, frame), frame).dump(2) << "\n";
            return 0;
        }
        if (extract->parsed()) {
            std::optional<extractor::PatternId> only;
            if (!pattern.empty()) {
                only = extractor::pattern_from_string(pattern);
                if (!only) {
                    err << "unknown pattern id: " << pattern << "\n";
                    return 2;
                }
            }
            extractor::Vocabulary vocab = extractor::Vocabulary::defaults();
            if (!labels.empty()) vocab.add_words(read_file(labels));
            for (const auto& m : extractor::scan(read_file(file), vocab)) {
                if (only && m.pattern != *only) continue;
                if (as_json) {
                    out << extractor::to_json(m).dump() << "\n";
                } else {
                    out << extractor::to_string(m.pattern) << "\t" << m.label << "\t" << m.begin << "-" << m.end << "\t"
                        << m.text << "\n";
                }
            }
            return 0;
        }
        if (classify->parsed()) {
            auto c = cti::classify(phrase);
            out << cti::category_text(c.category);
            if (!c.subcategory.empty()) out << "/" << c.subcategory;
            out << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        json j{{"error", "ParseError"}, {"message", e.what()}, {"position", e.position()}, {"expected", e.expected()}};
        err << j.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        return domain_error(err, std::string(to_string(e.code())), e.what());
    }
    return 2;
}

} // namespace iterata::cli
