#pragma once

#include <string>

#include "json.hpp"

#include "concord/knot.hpp"
#include "concord/lens.hpp"
#include "concord/metabolizer.hpp"
#include "concord/obstruction.hpp"
#include "concord/twisted.hpp"

namespace concord {

using Json = nlohmann::ordered_json;

std::string concord_version();

// ---- polynomials ----------------------------------------------------------
// A rational Laurent polynomial is {"terms": {"<exp>": "p/q", ...}}; over a
// cyclotomic field the coefficient becomes the length-d power-basis vector
// {"d": d, "terms": {"<exp>": ["p/q", ...], ...}}.  Round trips are exact.

Json laurent_to_json(const Laurent<Rat>& p);
Laurent<Rat> laurent_from_json(const Json& j);

Json laurent_to_json(const Laurent<Cyclotomic>& p);
Laurent<Cyclotomic> twisted_laurent_from_json(const Json& j);

Json unit_form_to_json(const LaurentUnitForm<Rat>& f);
Json unit_form_to_json(const LaurentUnitForm<Cyclotomic>& f);

// ---- knot files -------------------------------------------------------------
// {"name": ..., "crossings"?: {"num_arcs": n, "list": [[over, under_in,
// under_out, sign], ...]}, "presentation"?: {"generators": n, "relators":
// ["x1 X2 ...", ...], "eta"?: [...]}, "seifert"?: [[...], ...]}.  At least one
// block is required; every present block is validated and the Alexander
// polynomial cross-check runs on load.  Malformed input throws
// std::invalid_argument.

Json knot_to_json(const KnotRecord& k);
KnotRecord knot_from_json(const Json& j);
KnotRecord load_knot_file(const std::string& path);

// ---- reports ---------------------------------------------------------------

Json twisted_polynomial_to_json(const TwistedPolynomial& p);
Json fox_milnor_to_json(const FoxMilnorResult& r);
Json metabolizer_list_to_json(const LinkedAbelianGroup& g, const MetabolizerList& l);
Json obstruction_report_to_json(const ObstructionReport& r);
Json lens_value_to_json(const LensSignatureValue& v);
Json order_certificate_to_json(const OrderCertificate& c);
Json independence_certificate_to_json(const IndependenceCertificate& c);

// ---- envelope ---------------------------------------------------------------
// Every CLI result is wrapped as {"tool": {name, version}, "command": ...,
// "inputs_hash": "fnv1a:...", "result": ..., "timing_ms": ...} so runs are
// attributable and comparable.

std::string fnv1a_hex(const std::string& bytes);
Json make_envelope(const std::string& command, const std::string& inputs_hash,
                   const Json& result, long timing_ms);

}  // namespace concord
