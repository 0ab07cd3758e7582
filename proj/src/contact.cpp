#include "obcalc/contact.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace obcalc::contact {

using words::CurveClass;
using words::TwistWord;

PageStats::PageStats(long long g, long long n) : genus(g), boundary(n) {
    if (g < 0) throw std::invalid_argument("PageStats: genus must be >= 0");
    if (n < 1) throw std::invalid_argument("PageStats: at least one boundary component");
}

PageCurve PageCurve::labeled(std::string name) {
    if (name.empty()) throw std::invalid_argument("PageCurve: empty label");
    PageCurve c;
    c.label = std::move(name);
    return c;
}

OpenBook OpenBook::torus(const TwistWord& w) {
    OpenBook ob;
    ob.page = PageStats(1, 1);
    ob.kind = PageKind::torus_one_boundary;
    for (const words::Letter& l : w.letters())
        ob.monodromy.push_back({PageCurve::torus(l.curve), l.exponent});
    return ob;
}

OpenBook OpenBook::planar(long long boundary, std::vector<PageLetter> monodromy) {
    OpenBook ob;
    ob.page = PageStats(0, boundary);
    ob.kind = PageKind::planar_labeled;
    for (const PageLetter& l : monodromy)
        if (!l.curve.has_class && l.curve.label.empty())
            throw std::invalid_argument("OpenBook: planar curves need labels");
    ob.monodromy = std::move(monodromy);
    return ob;
}

PageStats page_stats(const OpenBook& ob) { return ob.page; }

OpenBook positive_stabilize(const OpenBook& ob, StabMode mode) {
    OpenBook out = ob;
    out.kind = PageKind::generic;
    if (mode == StabMode::binding_up) {
        out.page = PageStats(ob.page.genus, ob.page.boundary + 1);
    } else {
        if (ob.page.boundary < 2)
            throw std::invalid_argument(
                "positive_stabilize: genus_up plumbing needs two boundary components to merge");
        out.page = PageStats(ob.page.genus + 1, ob.page.boundary - 1);
    }
    out.monodromy.push_back(
        {PageCurve::labeled("stab" + std::to_string(ob.monodromy.size() + 1)), 1});
    return out;
}

long long page_framing(const CurveClass& c) { return -c.p * c.q; }

HandleSummary openbook_to_handles(const OpenBook& ob) {
    if (ob.kind != PageKind::torus_one_boundary)
        throw std::invalid_argument("openbook_to_handles: once-punctured-torus pages only");
    HandleSummary out;
    out.one_handles = 2;
    for (const PageLetter& l : ob.monodromy) {
        long long pf = page_framing(l.curve.cls);
        long long framing = l.exponent > 0 ? pf - 1 : pf + 1;
        long long count = l.exponent < 0 ? -l.exponent : l.exponent;
        for (long long i = 0; i < count; ++i) out.framings.push_back(framing);
    }
    std::sort(out.framings.begin(), out.framings.end(), std::greater<>());
    return out;
}

ContactSurgeryDiagram::ContactSurgeryDiagram(std::vector<DiagramComponent> comps,
                                             IntMatrix lk)
    : components(std::move(comps)), linking(std::move(lk)) {
    const std::size_t n = components.size();
    if (linking.rows() != n || linking.cols() != n)
        throw std::invalid_argument("ContactSurgeryDiagram: linking matrix size mismatch");
    if (!linking.is_symmetric())
        throw std::invalid_argument("ContactSurgeryDiagram: linking matrix must be symmetric");
    for (std::size_t i = 0; i < n; ++i)
        if (linking.at(i, i) != 0)
            throw std::invalid_argument(
                "ContactSurgeryDiagram: linking diagonal is set from tb + coeff, leave zero");
    for (const DiagramComponent& c : components) {
        if (c.coeff != 1 && c.coeff != -1)
            throw std::invalid_argument("ContactSurgeryDiagram: coefficients must be +1 or -1");
        if (c.tb > -1)
            throw std::invalid_argument("ContactSurgeryDiagram: Legendrian unknots have tb <= -1");
        long long width = -c.tb - 1;
        long long r = c.rot < 0 ? -c.rot : c.rot;
        if (r > width || (width - r) % 2 != 0)
            throw std::invalid_argument(
                "ContactSurgeryDiagram: rot must lie in {tb+1, tb+3, ..., -tb-1}");
    }
}

SmoothSurgeryData contact_to_smooth(const ContactSurgeryDiagram& d) {
    const std::size_t n = d.size();
    SmoothSurgeryData out{IntMatrix(n, n), {}, 0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.l.at(i, j) = d.linking.at(i, j);
        out.l.at(i, i) = linalg::to_int(d.components[i].tb + d.components[i].coeff);
        out.rot.push_back(linalg::to_int(d.components[i].rot));
        if (d.components[i].coeff == 1) ++out.q_plus;
    }
    return out;
}

Rat d3(const ContactSurgeryDiagram& d) {
    SmoothSurgeryData s = contact_to_smooth(d);
    const std::size_t n = d.size();
    if (n > 0 && linalg::determinant(s.l) == 0)
        throw std::domain_error("not a rational homology sphere: d3 formula inapplicable");

    Rat csq;
    if (n > 0) {
        std::vector<Rat> rot(n);
        for (std::size_t i = 0; i < n; ++i) rot[i] = Rat(s.rot[i]);
        std::vector<Rat> x = linalg::solve_rational(s.l, rot);
        for (std::size_t i = 0; i < n; ++i) csq += x[i] * rot[i];
        // Both evaluations of c^2 must coincide exactly.
        Rat quad;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) quad += x[i] * Rat(s.l.at(i, j)) * x[j];
        if (quad != csq) throw std::logic_error("d3: c^2 evaluations disagree");
    }

    long sigma = n > 0 ? linalg::signature(s.l) : 0;
    long long chi = 1 + static_cast<long long>(n);
    Rat result = (csq - linalg::to_rat(3 * sigma) - linalg::to_rat(2 * chi)) / Rat(4) +
                 linalg::to_rat(s.q_plus) + kD3Shift;
    return result;
}

ContactSurgeryDiagram ExpandedSurgery::as_diagram() const {
    return ContactSurgeryDiagram(components, linking);
}

namespace {

// Negative continued fraction r = a1 - 1/(a2 - 1/(... - 1/ak)) built with
// floor quotients: a1 <= -1 for r < 0 and all later entries <= -2.
std::vector<long long> negative_continued_fraction(Rat r) {
    std::vector<long long> out;
    for (;;) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
        if (!fl.fits_slong_p())
            throw std::invalid_argument("continued fraction entry out of range");
        long long a = fl.get_si();
        out.push_back(a);
        Rat frac = r - Rat(fl);
        if (frac == 0) break;
        r = Rat(-1) / frac;
    }
    return out;
}

}  // namespace

ExpandedSurgery rational_coeff_expand(long long tb, long long rot, const Rat& r) {
    if (r == 0)
        throw std::invalid_argument("rational_coeff_expand: 0 is not a contact surgery coefficient");

    ExpandedSurgery out;
    if (r == 1 || r == -1) {
        out.components.push_back({tb, rot, r == 1 ? 1 : -1});
        out.linking = IntMatrix(1, 1);
        return out;
    }

    // Components on the knot itself (pushoffs) pairwise link tb; a meridian
    // chain hangs off the last pushoff with consecutive linking one.
    std::size_t pushoffs = 0;
    auto add_pushoff = [&](long long tb_i, long long rot_i, int coeff) {
        out.components.push_back({tb_i, rot_i, coeff});
        ++pushoffs;
    };

    Rat negative = r;
    if (r > 0) {
        // k surgeries with coefficient +1 first, then the leftover negative
        // coefficient r' with 1/r' = 1/r - k on a further pushoff.
        Rat inv = Rat(1) / r;
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
        long long k = fl.get_si() + 1;
        for (long long i = 0; i < k; ++i) add_pushoff(tb, rot, 1);
        negative = Rat(1) / (inv - Rat(static_cast<long>(k)));
    }

    std::vector<long long> cf = negative_continued_fraction(negative);
    long long s1 = -1 - cf[0];
    if (s1 < 0) throw std::logic_error("rational_coeff_expand: bad leading entry");
    add_pushoff(tb - s1, rot - s1, -1);
    for (std::size_t j = 1; j < cf.size(); ++j) {
        long long sj = -2 - cf[j];
        if (sj < 0) throw std::logic_error("rational_coeff_expand: bad chain entry");
        out.components.push_back({-1 - sj, -sj, -1});
    }

    const std::size_t n = out.components.size();
    out.linking = IntMatrix(n, n);
    for (std::size_t i = 0; i < pushoffs; ++i)
        for (std::size_t j = i + 1; j < pushoffs; ++j) {
            out.linking.at(i, j) = linalg::to_int(tb);
            out.linking.at(j, i) = linalg::to_int(tb);
        }
    // Meridian chain: consecutive linking one, starting at the chain head
    // (the last pushoff).
    for (std::size_t i = pushoffs - 1; i + 1 < n; ++i) {
        out.linking.at(i, i + 1) = 1;
        out.linking.at(i + 1, i) = 1;
    }
    return out;
}

namespace {

constexpr const char* kFigure3Json = R"json({
  "schema": "obcalc.figure3/1",
  "min_m": 1,
  "notes": "Surgery presentation of Y_m: a -1-framed central unknot linked once to arms framed -2, -2, -(m+2), realized as contact surgeries, together with a two-component unimodular pair that fixes the plane-field class. Pinned by d3 = -m/4 and |H1| = 4.",
  "components": [
    {"tb": [-2, 0],  "rot": [-1, 0], "coeff": 1},
    {"tb": [-1, 0],  "rot": [0, 0],  "coeff": -1},
    {"tb": [-1, 0],  "rot": [0, 0],  "coeff": -1},
    {"tb": [-1, -1], "rot": [0, 1],  "coeff": -1},
    {"tb": [-2, 0],  "rot": [1, 0],  "coeff": 1},
    {"tb": [-4, 0],  "rot": [1, 0],  "coeff": -1}
  ],
  "linking": [
    [0, 1, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 2, 0]
  ]
})json";

Figure3Fixture::Affine parse_affine(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("figure3 fixture: affine fields are [base, slope]");
    return {j[0].get<long long>(), j[1].get<long long>()};
}

}  // namespace

Figure3Fixture parse_figure3_fixture(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Figure3Fixture fx;
    fx.schema = j.at("schema").get<std::string>();
    if (fx.schema != "obcalc.figure3/1")
        throw std::invalid_argument("figure3 fixture: unknown schema '" + fx.schema + "'");
    fx.min_m = j.value("min_m", 1LL);
    for (const auto& c : j.at("components")) {
        Figure3Fixture::Component comp;
        comp.tb = parse_affine(c.at("tb"));
        comp.rot = parse_affine(c.at("rot"));
        comp.coeff = c.at("coeff").get<int>();
        fx.components.push_back(comp);
    }
    fx.linking = j.at("linking").get<std::vector<std::vector<long long>>>();
    if (fx.linking.size() != fx.components.size())
        throw std::invalid_argument("figure3 fixture: linking size mismatch");
    for (const auto& row : fx.linking)
        if (row.size() != fx.components.size())
            throw std::invalid_argument("figure3 fixture: linking row size mismatch");
    return fx;
}

const Figure3Fixture& default_figure3_fixture() {
    static const Figure3Fixture fx = parse_figure3_fixture(kFigure3Json);
    return fx;
}

ContactSurgeryDiagram figure3_diagram(const Figure3Fixture& fx, long long m) {
    if (m < fx.min_m)
        throw std::invalid_argument("figure3_diagram: family is defined for m >= " +
                                    std::to_string(fx.min_m));
    std::vector<DiagramComponent> comps;
    for (const Figure3Fixture::Component& c : fx.components)
        comps.push_back({c.tb.at(m), c.rot.at(m), c.coeff});
    const std::size_t n = comps.size();
    IntMatrix lk(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lk.at(i, j) = linalg::to_int(fx.linking[i][j]);
    return ContactSurgeryDiagram(std::move(comps), std::move(lk));
}

ContactSurgeryDiagram figure3_diagram(long long m) {
    return figure3_diagram(default_figure3_fixture(), m);
}

OpenBook figure3_openbook(long long m) {
    if (m < 0) throw std::invalid_argument("figure3_openbook: m must be >= 0");
    std::vector<PageLetter> mono;
    for (long long i = 1; i <= m + 4; ++i)
        mono.push_back({PageCurve::labeled("c" + std::to_string(i)), 1});
    mono.push_back({PageCurve::labeled("middle"), -1});
    return OpenBook::planar(m + 5, std::move(mono));
}

}  // namespace obcalc::contact
