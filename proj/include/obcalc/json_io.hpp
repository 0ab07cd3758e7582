#pragma once

#include <json.hpp>

#include <string>

#include "obcalc/certify.hpp"
#include "obcalc/contact.hpp"
#include "obcalc/linalg.hpp"
#include "obcalc/seifert.hpp"
#include "obcalc/words.hpp"

// Serialization of the external formats. All rationals are "p/q" strings in
// lowest terms (plain "p" when the denominator is one); matrices are integer
// arrays; words use the a/b/A/B text format. Output field order is fixed so
// reports are byte-stable.
namespace obcalc::jsonio {

using Json = nlohmann::ordered_json;

std::string rat_string(const linalg::Rat& r);
linalg::Rat parse_rat(const std::string& s);

Json json_of(const linalg::IntMatrix& m);
linalg::IntMatrix matrix_from_json(const Json& j);

Json json_of(const linalg::AbelianGroup& g);

Json json_of(const words::SL2& m);
Json json_of(const words::GarsideNF& nf);

Json json_of(const contact::PageStats& ps);
Json json_of(const contact::OpenBook& ob);
Json json_of(const contact::HandleSummary& hs);
Json json_of(const contact::ContactSurgeryDiagram& d);
contact::ContactSurgeryDiagram diagram_from_json(const Json& j);

Json json_of(const seifert::SeifertInvariants& si);
Json json_of(const seifert::ManifoldClass& mc);

Json json_of(const certify::CertStep& step);
Json json_of(const certify::Certificate& cert);

std::string markdown_of(const certify::Certificate& cert);

}  // namespace obcalc::jsonio
