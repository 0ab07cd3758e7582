#include "obcalc/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "obcalc/seifert.hpp"
#include "obcalc/words.hpp"

namespace obcalc::certify {

using contact::OpenBook;
using contact::PageStats;
using linalg::Int;
using words::TwistWord;

namespace {

// Citation anchors for the recorded (not computed) inputs.
constexpr const char* kCiteGLSClassification =
    "[GLS] Ghiggini-Lisca-Stipsicz, tight contact structures on small Seifert "
    "fibered 3-manifolds, Section 4";
constexpr const char* kCiteGLSStein =
    "[GLS] Ghiggini-Lisca-Stipsicz, Theorem 4.13 (Stein fillability)";
constexpr const char* kCiteGLSFigure7 =
    "[GLS] Ghiggini-Lisca-Stipsicz, Figure 7 (surgery diagram of the contact structure)";
constexpr const char* kCiteHKMTight =
    "[HKM2] Honda-Kazez-Matic, Theorem 4.3 (nonvanishing contact invariant)";
constexpr const char* kCiteHKMRightVeering =
    "[HKM] Honda-Kazez-Matic, right-veering and tightness";
constexpr const char* kCiteBaldwin =
    "[B] Baldwin, Theorem 4.1 and Proposition 5.1 (L-space correction terms)";
constexpr const char* kCiteOS =
    "[OS] Ozsvath-Szabo, Proposition 4.6 (grading of the contact class)";
constexpr const char* kCiteLensBinding =
    "standard fact: open books with disk or annulus pages support only lens "
    "spaces, and a contact structure with sn < 1 lives on a lens space";
constexpr const char* kCiteThreeBinding =
    "standard fact: a planar open book with three binding components is the "
    "tau_a^p tau_b^q tau_c^r family";

CertStep computed(std::string claim, std::string evidence, bool ok) {
    CertStep s;
    s.claim = std::move(claim);
    s.kind = StepKind::computed_witness;
    s.status = ok ? StepStatus::verified : StepStatus::assumed;
    s.evidence = std::move(evidence);
    if (!ok) s.evidence += " [FAILED]";
    return s;
}

CertStep recorded(std::string claim, std::string citation) {
    CertStep s;
    s.claim = std::move(claim);
    s.kind = StepKind::recorded_fact;
    s.status = StepStatus::assumed;
    s.citation = std::move(citation);
    return s;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

CertStep support_genus_cert(long long m) {
    OpenBook witness = contact::figure3_openbook(m);
    PageStats ps = contact::page_stats(witness);

    CertStep top = computed(
        "sg = 0: a planar open book supports the contact structure",
        "page of the witness open book has genus " + std::to_string(ps.genus),
        ps.genus == 0);
    top.substeps.push_back(computed(
        "witness page is planar with " + std::to_string(m + 5) + " boundary components",
        "page stats (g, n, -chi) = (" + std::to_string(ps.genus) + ", " +
            std::to_string(ps.boundary) + ", " + std::to_string(ps.minus_euler()) + ")",
        ps == PageStats(0, m + 5)));
    top.substeps.push_back(recorded(
        "the witness open book supports the contact structure", kCiteGLSClassification));
    return top;
}

CertStep support_norm_cert(long long m) {
    PageStats torus = contact::page_stats(OpenBook::torus(words::phi_family(m)));
    bool upper_ok = torus.minus_euler() == 1;

    seifert::SeifertInvariants si = seifert::ym_seifert(m);
    bool lens_excluded = seifert::not_lens_space_certificate(si);
    linalg::AbelianGroup h1 =
        linalg::homology_from_presentation(seifert::seifert_linking_matrix(si));
    std::ostringstream h1ev;
    h1ev << "three singular fibers with denominators 2, 2, " << (m + 2)
         << "; H1 has order " << (h1.is_finite() ? h1.order().get_str() : std::string("inf"));

    CertStep top = computed("sn = 1", "upper and lower bounds below agree", true);
    top.substeps.push_back(computed(
        "sn <= 1: the defining open book has a genus-one page with one boundary component",
        "-chi of the page of (T0, phi_m) is " + std::to_string(torus.minus_euler()),
        upper_ok));
    top.substeps.push_back(computed(
        "the underlying manifold is not a lens space", h1ev.str(), lens_excluded));
    top.substeps.push_back(recorded(
        "sn < 1 would force the contact structure onto a lens space", kCiteLensBinding));
    if (!upper_ok || !lens_excluded) top.status = StepStatus::assumed;
    return top;
}

CertStep binding_cert(long long m) {
    OpenBook witness = contact::figure3_openbook(m);
    bool upper_ok = contact::page_stats(witness).boundary == m + 5;

    seifert::SeifertInvariants si = seifert::ym_seifert(m);
    bool e0_ok = si.e0 == -1;
    seifert::ManifoldClass sample = seifert::classify_three_binding(-2, -2, m + 2);
    bool classifier_ok =
        sample.tag == seifert::ManifoldTag::small_sfs && sample.e0 == si.e0;

    const long long bound = 10;
    bool two_negative = seifert::e0_requires_two_negative(-1, bound);

    // Every e0 = -1 triple within the bound has exactly two negative
    // exponents, and no such monodromy is right-veering.
    bool none_right_veering = true;
    for (long long p = -bound; p <= bound && none_right_veering; ++p) {
        if (p >= -1 && p <= 1) continue;
        for (long long q = -bound; q <= bound && none_right_veering; ++q) {
            if (q >= -1 && q <= 1) continue;
            for (long long r = -bound; r <= bound; ++r) {
                if (r >= -1 && r <= 1) continue;
                if (seifert::classify_three_binding(p, q, r).e0 != -1) continue;
                if (seifert::right_veering_boundary_twists({p, q, r})) {
                    none_right_veering = false;
                    break;
                }
            }
        }
    }

    bool lens_excluded = seifert::not_lens_space_certificate(si);

    CertStep top = computed(
        "3 < bn <= " + std::to_string(m + 5),
        "upper bound from the planar witness; lower bound by excluding 1, 2, 3 "
        "binding components",
        upper_ok);
    top.substeps.push_back(computed(
        "bn <= " + std::to_string(m + 5) + ": the planar witness has m+5 bindings",
        "witness boundary count = " + std::to_string(contact::page_stats(witness).boundary),
        upper_ok));
    top.substeps.push_back(recorded(
        "bn cannot be 1 or 2: disk or annulus pages only support lens spaces",
        kCiteLensBinding));
    top.substeps.push_back(computed(
        "the underlying manifold is not a lens space",
        "three singular fibers in M(-1; 1/2, 1/2, 1/" + std::to_string(m + 2) + ")",
        lens_excluded));
    top.substeps.push_back(recorded(
        "a three-binding planar open book is the tau_a^p tau_b^q tau_c^r family",
        kCiteThreeBinding));
    top.substeps.push_back(computed(
        "the manifold is a small Seifert fibered space with e0 = -1",
        "Seifert invariants M(-1; 1/2, 1/2, 1/" + std::to_string(m + 2) +
            "); classifier on (-2, -2, " + std::to_string(m + 2) + ") agrees",
        e0_ok && classifier_ok));
    top.substeps.push_back(computed(
        "e0 = -1 forces exactly two of p, q, r negative",
        "exhaustive search over |p|,|q|,|r| <= " + std::to_string(bound),
        two_negative));
    top.substeps.push_back(computed(
        "no two-negative monodromy in range is right-veering",
        "right-veering test over all e0 = -1 triples with |entries| <= " +
            std::to_string(bound),
        none_right_veering));
    top.substeps.push_back(recorded(
        "an open book that is not right-veering supports no tight structure",
        kCiteHKMRightVeering));
    top.substeps.push_back(recorded(
        "the contact structure is tight (nonvanishing contact invariant)",
        kCiteHKMTight));
    if (!(upper_ok && e0_ok && classifier_ok && two_negative && none_right_veering &&
          lens_excluded))
        top.status = StepStatus::assumed;
    return top;
}

Certificate theorem_report(long long m) { return theorem_report(m, nullptr); }

Certificate theorem_report(long long m, const contact::Figure3Fixture* fixture) {
    if (m < 0) throw std::invalid_argument("theorem_report: m must be >= 0");
    Certificate cert;
    cert.m = m;
    cert.sn_value = 1;
    cert.sg_value = 0;
    cert.bn_lower_exclusive = 3;
    cert.bn_upper = m + 5;
    cert.stein_fillable = m == 0;

    cert.steps.push_back(support_norm_cert(m));
    cert.steps.push_back(support_genus_cert(m));
    cert.steps.push_back(binding_cert(m));

    // Stein fillability: for m = 0 a positive twist factorization is checked;
    // for m > 0 non-fillability is a recorded classification fact.
    if (m == 0) {
        TwistWord fact = words::factored_phi(0);
        bool positive = true;
        for (const words::Letter& l : fact.letters()) positive = positive && l.exponent > 0;
        bool equal = words::words_equal(words::phi_family(0),
                                        words::expand_conjugates(fact));
        cert.steps.push_back(computed(
            "Stein fillable: the monodromy admits a positive twist factorization",
            "factored form has only positive twists and equals phi_0 in the "
            "mapping class group (Garside normal form)",
            positive && equal));
    } else {
        cert.steps.push_back(recorded(
            "not Stein fillable for m > 0", kCiteGLSStein));
    }

    // d3 cross-check against the surgery diagram fixture, m >= 1.
    if (m >= 1) {
        contact::ContactSurgeryDiagram d =
            fixture ? contact::figure3_diagram(*fixture, m) : contact::figure3_diagram(m);
        Rat value = contact::d3(d);
        Rat expected(-static_cast<long>(m), 4);
        expected.canonicalize();
        cert.d3_value = value;

        linalg::AbelianGroup h1 =
            linalg::homology_from_presentation(contact::contact_to_smooth(d).l);
        bool h1_ok = h1.is_finite() && h1.order() == 4;

        CertStep d3step = computed(
            "d3 of the surgery diagram is -" + std::to_string(m) + "/4",
            "d3 = " + rat_str(value) + ", |H1| pinning check " +
                std::string(h1_ok ? "passed" : "failed"),
            value == expected && h1_ok);
        d3step.substeps.push_back(recorded(
            "the diagram presents the contact structure", kCiteGLSFigure7));
        d3step.substeps.push_back(recorded(
            "correction term d(Y_m, s) = -m/4", kCiteBaldwin));
        d3step.substeps.push_back(recorded(
            "the contact class grading identifies d3 with the correction term",
            kCiteOS));
        cert.steps.push_back(std::move(d3step));
    }

    // Strictness, derived from the certified bounds only: bn > 3 means
    // bn >= 4, so sn < 2*sg + bn - 2 becomes 1 < 0 + 4 - 2.
    cert.strict =
        cert.sn_value < 2 * cert.sg_value + (cert.bn_lower_exclusive + 1) - 2;
    cert.steps.push_back(computed(
        "strict inequality sn < 2*sg + bn - 2",
        std::to_string(cert.sn_value) + " < 2*" + std::to_string(cert.sg_value) +
            " + " + std::to_string(cert.bn_lower_exclusive + 1) + " - 2",
        cert.strict));
    return cert;
}

namespace {

bool steps_valid(const std::vector<CertStep>& steps, std::string* why) {
    for (const CertStep& s : steps) {
        if (s.kind == StepKind::computed_witness && s.status != StepStatus::verified) {
            if (why) *why = "unverified computed step: " + s.claim;
            return false;
        }
        if (s.kind == StepKind::recorded_fact && s.citation.empty()) {
            if (why) *why = "recorded fact without citation: " + s.claim;
            return false;
        }
        if (!steps_valid(s.substeps, why)) return false;
    }
    return true;
}

}  // namespace

bool validate(const Certificate& cert, std::string* why) {
    if (!steps_valid(cert.steps, why)) return false;
    if (cert.sn_value != 1 || cert.sg_value != 0 || cert.bn_lower_exclusive != 3 ||
        cert.bn_upper != cert.m + 5) {
        if (why) *why = "certified bounds do not match the theorem";
        return false;
    }
    if (!cert.strict) {
        if (why) *why = "strictness inequality not established";
        return false;
    }
    if (cert.stein_fillable != (cert.m == 0)) {
        if (why) *why = "Stein fillability must hold exactly at m = 0";
        return false;
    }
    return true;
}

}  // namespace obcalc::certify
