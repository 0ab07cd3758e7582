#include "obcalc/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace obcalc::jsonio {

using linalg::Int;
using linalg::IntMatrix;
using linalg::Rat;

namespace {

long long int_to_ll(const Int& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::overflow_error(std::string(what) + ": value exceeds the JSON integer range");
    return z.get_si();
}

}  // namespace

std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

Json json_of(const IntMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(int_to_ll(m.at(i, j), "matrix entry"));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = linalg::to_int(entries[i][k].get<long long>());
    }
    return m;
}

Json json_of(const linalg::AbelianGroup& g) {
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors)
        factors.push_back(int_to_ll(d, "invariant factor"));
    Json out{{"invariant_factors", std::move(factors)}, {"free_rank", g.free_rank}};
    if (g.is_finite()) out["order"] = int_to_ll(g.order(), "group order");
    return out;
}

Json json_of(const words::SL2& m) {
    return Json::array({Json::array({int_to_ll(m.m[0][0], "SL2"), int_to_ll(m.m[0][1], "SL2")}),
                        Json::array({int_to_ll(m.m[1][0], "SL2"), int_to_ll(m.m[1][1], "SL2")})});
}

Json json_of(const words::GarsideNF& nf) {
    Json factors = Json::array();
    for (words::Factor f : nf.factors) factors.push_back(words::factor_name(f));
    return Json{{"delta_power", nf.delta_power}, {"factors", std::move(factors)}};
}

Json json_of(const contact::PageStats& ps) {
    return Json{{"genus", ps.genus},
                {"boundary_count", ps.boundary},
                {"minus_euler", ps.minus_euler()}};
}

Json json_of(const contact::OpenBook& ob) {
    const char* kind = "generic";
    if (ob.kind == contact::PageKind::torus_one_boundary) kind = "torus_one_boundary";
    if (ob.kind == contact::PageKind::planar_labeled) kind = "planar_labeled";
    Json mono = Json::array();
    for (const contact::PageLetter& l : ob.monodromy) {
        std::string curve =
            l.curve.has_class
                ? "T(" + std::to_string(l.curve.cls.p) + "," + std::to_string(l.curve.cls.q) + ")"
                : l.curve.label;
        mono.push_back(Json{{"curve", curve}, {"exponent", l.exponent}});
    }
    return Json{{"page", json_of(ob.page)}, {"page_kind", kind}, {"monodromy", std::move(mono)}};
}

Json json_of(const contact::HandleSummary& hs) {
    return Json{{"one_handles", hs.one_handles}, {"framings", hs.framings}};
}

Json json_of(const contact::ContactSurgeryDiagram& d) {
    Json comps = Json::array();
    for (const contact::DiagramComponent& c : d.components)
        comps.push_back(Json{{"tb", c.tb}, {"rot", c.rot}, {"coeff", c.coeff}});
    Json linking = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < d.size(); ++j)
            row.push_back(int_to_ll(d.linking.at(i, j), "linking"));
        linking.push_back(std::move(row));
    }
    return Json{{"components", std::move(comps)}, {"linking", std::move(linking)}};
}

contact::ContactSurgeryDiagram diagram_from_json(const Json& j) {
    std::vector<contact::DiagramComponent> comps;
    for (const Json& c : j.at("components"))
        comps.push_back({c.at("tb").get<long long>(), c.at("rot").get<long long>(),
                         c.at("coeff").get<int>()});
    IntMatrix lk(comps.size(), comps.size());
    if (j.contains("linking")) {
        const Json& rows = j.at("linking");
        if (rows.size() != comps.size())
            throw std::invalid_argument("diagram_from_json: linking size mismatch");
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (rows[i].size() != comps.size())
                throw std::invalid_argument("diagram_from_json: linking row size mismatch");
            for (std::size_t k = 0; k < comps.size(); ++k)
                lk.at(i, k) = linalg::to_int(rows[i][k].get<long long>());
        }
    }
    return contact::ContactSurgeryDiagram(std::move(comps), std::move(lk));
}

Json json_of(const seifert::SeifertInvariants& si) {
    Json mults = Json::array();
    for (const Rat& r : si.multiplicities) mults.push_back(rat_string(r));
    return Json{{"e0", si.e0}, {"multiplicities", std::move(mults)}};
}

Json json_of(const seifert::ManifoldClass& mc) {
    Json out{{"class", mc.tag == seifert::ManifoldTag::small_sfs
                           ? "small_sfs"
                           : "connected_sum_of_lens_spaces"},
             {"pqr", mc.pqr},
             {"rule", mc.rule}};
    if (mc.tag == seifert::ManifoldTag::small_sfs) out["e0"] = mc.e0;
    return out;
}

Json json_of(const certify::CertStep& step) {
    Json out{{"claim", step.claim},
             {"kind", step.kind == certify::StepKind::computed_witness ? "computed_witness"
                                                                       : "recorded_fact"},
             {"status", step.status == certify::StepStatus::verified ? "verified" : "assumed"}};
    if (!step.evidence.empty()) out["evidence"] = step.evidence;
    if (!step.citation.empty()) out["citation"] = step.citation;
    if (!step.substeps.empty()) {
        Json subs = Json::array();
        for (const certify::CertStep& s : step.substeps) subs.push_back(json_of(s));
        out["substeps"] = std::move(subs);
    }
    return out;
}

Json json_of(const certify::Certificate& cert) {
    Json steps = Json::array();
    for (const certify::CertStep& s : cert.steps) steps.push_back(json_of(s));
    Json out{{"schema", "obcalc.certificate/1"},
             {"m", cert.m},
             {"sn", cert.sn_value},
             {"sg", cert.sg_value},
             {"bn_lower_exclusive", cert.bn_lower_exclusive},
             {"bn_upper", cert.bn_upper},
             {"stein_fillable", cert.stein_fillable},
             {"strict", cert.strict}};
    if (cert.d3_value) out["d3"] = rat_string(*cert.d3_value);
    out["steps"] = std::move(steps);
    return out;
}

namespace {

void render_step(std::ostringstream& os, const certify::CertStep& s, int depth) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "- ";
    os << (s.status == certify::StepStatus::verified ? "[verified] " : "[assumed] ");
    os << s.claim;
    if (!s.evidence.empty()) os << "\n" << std::string(depth * 2 + 2, ' ') << "evidence: " << s.evidence;
    if (!s.citation.empty()) os << "\n" << std::string(depth * 2 + 2, ' ') << "cites: " << s.citation;
    os << "\n";
    for (const certify::CertStep& sub : s.substeps) render_step(os, sub, depth + 1);
}

}  // namespace

std::string markdown_of(const certify::Certificate& cert) {
    std::ostringstream os;
    os << "## Certificate for m = " << cert.m << "\n\n";
    os << "sn = " << cert.sn_value << ", sg = " << cert.sg_value << ", bn in ("
       << cert.bn_lower_exclusive << ", " << cert.bn_upper << "], Stein fillable: "
       << (cert.stein_fillable ? "yes" : "no") << ", strict: "
       << (cert.strict ? "yes" : "no");
    if (cert.d3_value) os << ", d3 = " << rat_string(*cert.d3_value);
    os << "\n\n";
    for (const certify::CertStep& s : cert.steps) render_step(os, s, 0);
    return os.str();
}

}  // namespace obcalc::jsonio
