#include "obcalc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "obcalc/certify.hpp"
#include "obcalc/json_io.hpp"
#include "obcalc/seifert.hpp"

namespace obcalc::cli {

namespace {

using jsonio::Json;

std::vector<long long> parse_m_range(const std::string& spec) {
    std::vector<long long> ms;
    auto parse_one = [&](const std::string& s) {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0) throw CLI::ValidationError("--m", "expected m >= 0");
        return v;
    };
    if (std::size_t dots = spec.find(".."); dots != std::string::npos) {
        long long lo = parse_one(spec.substr(0, dots));
        long long hi = parse_one(spec.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError("--m", "range must be low..high");
        for (long long m = lo; m <= hi; ++m) ms.push_back(m);
    } else {
        ms.push_back(parse_one(spec));
    }
    return ms;
}

std::optional<contact::Figure3Fixture> fixture_override(std::ostream& err) {
    const char* path = std::getenv("OBCALC_FIXTURES");
    if (path == nullptr || *path == '\0') return std::nullopt;
    std::ifstream in(path);
    if (!in) {
        err << "cannot open fixture file '" << path << "'\n";
        throw CLI::RuntimeError(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return contact::parse_figure3_fixture(buf.str());
}

int cmd_report(const std::string& mspec, const std::string& format, std::ostream& out,
               std::ostream& err) {
    std::vector<long long> ms = parse_m_range(mspec);
    std::optional<contact::Figure3Fixture> fx = fixture_override(err);

    Json all = Json::array();
    std::string failure;
    for (long long m : ms) {
        certify::Certificate cert =
            certify::theorem_report(m, fx ? &*fx : nullptr);
        std::string why;
        if (!certify::validate(cert, &why) && failure.empty())
            failure = "m = " + std::to_string(m) + ": " + why;
        if (format == "markdown")
            out << jsonio::markdown_of(cert) << "\n";
        else
            all.push_back(jsonio::json_of(cert));
    }
    if (format != "markdown") {
        if (all.size() == 1)
            out << all[0].dump(2) << "\n";
        else
            out << all.dump(2) << "\n";
    }
    if (!failure.empty()) {
        err << "verification failed: " << failure << "\n";
        return 1;
    }
    return 0;
}

int cmd_nf(const std::string& word_text, bool no_expand, std::ostream& out) {
    words::TwistWord w = words::parse_word(word_text);
    if (!no_expand) w = words::expand_conjugates(w);
    Json j{{"schema", "obcalc.garside/1"},
           {"word", words::format_word(w)},
           {"normal_form", jsonio::json_of(words::garside_normal_form(w))}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_action(const std::string& word_text, std::ostream& out) {
    words::TwistWord w = words::parse_word(word_text);
    Json j{{"schema", "obcalc.action/1"},
           {"word", words::format_word(w)},
           {"matrix", jsonio::json_of(words::homology_action(w))}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_d3(const std::string& diagram_path, long long figure3_m, std::ostream& out,
           std::ostream& err) {
    contact::ContactSurgeryDiagram d;
    if (!diagram_path.empty()) {
        std::ifstream in(diagram_path);
        if (!in) {
            err << "cannot open diagram file '" << diagram_path << "'\n";
            return 2;
        }
        Json j = Json::parse(in);
        d = jsonio::diagram_from_json(j);
    } else {
        std::optional<contact::Figure3Fixture> fx = fixture_override(err);
        d = fx ? contact::figure3_diagram(*fx, figure3_m)
               : contact::figure3_diagram(figure3_m);
    }
    Json j{{"schema", "obcalc.d3/1"},
           {"components", d.size()},
           {"d3", jsonio::rat_string(contact::d3(d))}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_classify(const std::vector<long long>& pqr, std::ostream& out) {
    seifert::ManifoldClass mc = seifert::classify_three_binding(pqr[0], pqr[1], pqr[2]);
    Json j = jsonio::json_of(mc);
    j["schema"] = "obcalc.classify/1";
    j["right_veering"] =
        seifert::right_veering_boundary_twists({pqr[0], pqr[1], pqr[2]});
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_handles(const std::string& mspec, const std::string& word_text, std::ostream& out) {
    words::TwistWord w;
    if (!word_text.empty()) {
        w = words::parse_word(word_text);
    } else {
        std::vector<long long> ms = parse_m_range(mspec);
        if (ms.size() != 1) throw CLI::ValidationError("--m", "handles takes a single m");
        w = words::factored_phi(ms[0]);
    }
    contact::HandleSummary hs =
        contact::openbook_to_handles(contact::OpenBook::torus(w));
    Json j = jsonio::json_of(hs);
    j["schema"] = "obcalc.handles/1";
    out << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact open book, surgery and certificate calculations"};
    app.require_subcommand(1);

    std::string report_m = "0..20", report_format = "json";
    CLI::App* report = app.add_subcommand("report", "emit theorem certificates per m");
    report->add_option("--m", report_m, "single m or range low..high");
    report->add_option("--format", report_format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    std::string nf_word;
    bool nf_no_expand = false;
    CLI::App* nf = app.add_subcommand("nf", "Garside normal form of a twist word");
    nf->add_option("--word", nf_word, "word in a/b/A/B or T(p,q)^k tokens")->required();
    nf->add_flag("--no-expand", nf_no_expand, "reject non-generator twists instead of expanding");

    std::string action_word;
    CLI::App* action = app.add_subcommand("action", "homology action of a twist word");
    action->add_option("--word", action_word)->required();

    std::string d3_path;
    long long d3_m = -1;
    CLI::App* d3cmd = app.add_subcommand("d3", "d3 invariant of a contact surgery diagram");
    CLI::Option* d3_diagram = d3cmd->add_option("--diagram", d3_path, "diagram JSON file");
    CLI::Option* d3_fig = d3cmd->add_option("--figure3", d3_m, "built-in xi_m diagram, m >= 1");
    d3_diagram->excludes(d3_fig);

    std::vector<long long> pqr;
    CLI::App* classify = app.add_subcommand("classify", "three-binding planar classification");
    classify->add_option("--pqr", pqr, "twist exponents p q r")->expected(3)->required();

    std::string handles_m, handles_word;
    CLI::App* handles = app.add_subcommand("handles", "handle summary of a torus open book");
    handles->add_option("--m", handles_m, "use the factored phi_m monodromy");
    handles->add_option("--word", handles_word, "explicit monodromy word");

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (report->parsed()) return cmd_report(report_m, report_format, out, err);
        if (nf->parsed()) return cmd_nf(nf_word, nf_no_expand, out);
        if (action->parsed()) return cmd_action(action_word, out);
        if (d3cmd->parsed()) {
            if (d3_path.empty() && d3_m < 0) {
                err << "d3: give --diagram or --figure3\n";
                return 2;
            }
            return cmd_d3(d3_path, d3_m, out, err);
        }
        if (classify->parsed()) return cmd_classify(pqr, out);
        if (handles->parsed()) {
            if (handles_m.empty() && handles_word.empty()) {
                err << "handles: give --m or --word\n";
                return 2;
            }
            return cmd_handles(handles_m, handles_word, out);
        }
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const Json::parse_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace obcalc::cli
