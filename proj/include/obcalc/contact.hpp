#pragma once

#include <string>
#include <vector>

#include "obcalc/linalg.hpp"
#include "obcalc/words.hpp"

namespace obcalc::contact {

using linalg::Int;
using linalg::IntMatrix;
using linalg::Rat;

// The d3 convention in use is shifted so the standard tight S^3 comes out
// to exactly zero.
inline const Rat kD3Shift = Rat(1, 2);

struct PageStats {
    long long genus = 0;
    long long boundary = 1;

    PageStats() = default;
    PageStats(long long g, long long n);

    long long minus_euler() const { return 2 * genus + boundary - 2; }

    bool operator==(const PageStats&) const = default;
};

enum class PageKind { torus_one_boundary, planar_labeled, generic };

// A curve on a page: a homology class when the page is the once-punctured
// torus, a named curve from a figure otherwise.
struct PageCurve {
    bool has_class = false;
    words::CurveClass cls;
    std::string label;

    static PageCurve torus(const words::CurveClass& c) { return {true, c, {}}; }
    static PageCurve labeled(std::string name);

    bool operator==(const PageCurve&) const = default;
};

struct PageLetter {
    PageCurve curve;
    long long exponent = 1;

    bool operator==(const PageLetter&) const = default;
};

struct OpenBook {
    PageStats page;
    PageKind kind = PageKind::generic;
    std::vector<PageLetter> monodromy;

    static OpenBook torus(const words::TwistWord& w);
    static OpenBook planar(long long boundary, std::vector<PageLetter> monodromy);
    static OpenBook disk() { return planar(1, {}); }
};

PageStats page_stats(const OpenBook& ob);

enum class StabMode { genus_up, binding_up };

// Plumb a positive Hopf band: -chi grows by exactly one, and the monodromy
// gains a positive twist along a fresh curve.
OpenBook positive_stabilize(const OpenBook& ob, StabMode mode);

// Page framing of the (p,q) curve on the once-punctured-torus page: -p*q.
long long page_framing(const words::CurveClass& c);

struct HandleSummary {
    int one_handles = 0;
    std::vector<long long> framings;  // kept sorted descending

    bool operator==(const HandleSummary&) const = default;
};

// Handle picture read off a once-punctured-torus open book: the page gives
// two 1-handles, and each twist letter gives |k| parallel 2-handles framed
// one below (positive twist) or one above (negative twist) the page framing.
HandleSummary openbook_to_handles(const OpenBook& ob);

struct DiagramComponent {
    long long tb = -1;
    long long rot = 0;
    int coeff = -1;  // contact surgery coefficient, +1 or -1

    bool operator==(const DiagramComponent&) const = default;
};

// Contact (+-1)-surgery diagram on Legendrian unknots in the standard S^3.
struct ContactSurgeryDiagram {
    std::vector<DiagramComponent> components;
    IntMatrix linking;  // symmetric, zero diagonal; pairwise linking numbers

    ContactSurgeryDiagram() : linking(0, 0) {}
    ContactSurgeryDiagram(std::vector<DiagramComponent> comps, IntMatrix linking);

    std::size_t size() const { return components.size(); }
};

struct SmoothSurgeryData {
    IntMatrix l;            // linking matrix, diagonal tb + coeff
    std::vector<Int> rot;   // rotation numbers
    int q_plus = 0;         // number of +1 coefficients
};

SmoothSurgeryData contact_to_smooth(const ContactSurgeryDiagram& d);

// d3 = (c^2 - 3*sigma - 2*chi)/4 + q + 1/2 with c^2 = x.rot for Lx = rot,
// chi = 1 + #components. Throws std::domain_error when det L == 0.
Rat d3(const ContactSurgeryDiagram& d);

// Replacement of a contact r-surgery on a Legendrian knot (tb, rot) by a
// chain of (+-1)-surgeries. Stabilizations are all negative by default.
struct ExpandedSurgery {
    std::vector<DiagramComponent> components;
    IntMatrix linking;

    // The expansion as a standalone diagram (the original knot an unknot).
    ContactSurgeryDiagram as_diagram() const;
};

ExpandedSurgery rational_coeff_expand(long long tb, long long rot, const Rat& r);

// Contact surgery presentation of xi_m, m >= 1, from the versioned fixture.
// Pinned behaviorally: d3 == -m/4 and |H1| == 4.
struct Figure3Fixture {
    struct Affine {
        long long base = 0;
        long long slope = 0;
        long long at(long long m) const { return base + slope * m; }
    };
    struct Component {
        Affine tb, rot;
        int coeff = -1;
    };
    std::string schema;
    long long min_m = 1;
    std::vector<Component> components;
    std::vector<std::vector<long long>> linking;
};

const Figure3Fixture& default_figure3_fixture();
Figure3Fixture parse_figure3_fixture(const std::string& json_text);

ContactSurgeryDiagram figure3_diagram(long long m);
ContactSurgeryDiagram figure3_diagram(const Figure3Fixture& fx, long long m);

// Planar open book supporting xi_m: m+5 boundary components, one negative
// twist along the middle curve, positive twists along the others.
OpenBook figure3_openbook(long long m);

}  // namespace obcalc::contact
