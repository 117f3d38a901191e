#include "concord/json_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace concord {

std::string concord_version() { return "0.1.0"; }

namespace {

std::string int_str(const Int& n) { return n.get_str(); }

Json int_vector(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_str(x));
    return a;
}

std::vector<Int> parse_int_vector(const Json& j) {
    std::vector<Int> v;
    for (const auto& e : j) v.emplace_back(e.get<std::string>());
    return v;
}

long parse_exponent(const std::string& key) {
    size_t used = 0;
    long e = std::stol(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key: " + key);
    return e;
}

// Common modulus of all coefficients; freshly-set rational entries carry d=1.
long common_modulus(const Laurent<Cyclotomic>& p) {
    long d = 1;
    for (const auto& [e, c] : p.terms()) d = std::lcm(d, c.modulus());
    return d;
}

}  // namespace

Json laurent_to_json(const Laurent<Rat>& p) {
    Json terms = Json::object();
    for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = rat_str(c);
    return Json{{"terms", terms}};
}

Laurent<Rat> laurent_from_json(const Json& j) {
    Laurent<Rat> p;
    for (const auto& [key, val] : j.at("terms").items())
        p.set(parse_exponent(key), parse_rat(val.get<std::string>()));
    return p;
}

Json laurent_to_json(const Laurent<Cyclotomic>& p) {
    long d = common_modulus(p);
    Json terms = Json::object();
    for (const auto& [e, c] : p.terms()) {
        Json coeff = Json::array();
        for (const auto& a : (Cyclotomic::one(d) * c).power_expansion())
            coeff.push_back(rat_str(a));
        terms[std::to_string(e)] = coeff;
    }
    return Json{{"d", d}, {"terms", terms}};
}

Laurent<Cyclotomic> twisted_laurent_from_json(const Json& j) {
    long d = j.at("d").get<long>();
    if (d < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
    Laurent<Cyclotomic> p;
    for (const auto& [key, val] : j.at("terms").items()) {
        std::vector<Rat> raw;
        for (const auto& a : val) raw.push_back(parse_rat(a.get<std::string>()));
        p.set(parse_exponent(key), Cyclotomic(d, raw));
    }
    return p;
}

Json unit_form_to_json(const LaurentUnitForm<Rat>& f) {
    return Json{{"scalar", rat_str(f.scalar)},
                {"shift", f.shift},
                {"canonical", laurent_to_json(f.canonical)},
                {"display", f.canonical.str()}};
}

Json unit_form_to_json(const LaurentUnitForm<Cyclotomic>& f) {
    long d = std::lcm(f.scalar.modulus(), common_modulus(f.canonical));
    Json scalar = Json::array();
    for (const auto& a : (Cyclotomic::one(d) * f.scalar).power_expansion())
        scalar.push_back(rat_str(a));
    return Json{{"d", d},
                {"scalar", scalar},
                {"shift", f.shift},
                {"canonical", laurent_to_json(f.canonical)},
                {"display", f.canonical.str()}};
}

// ---- knot files -------------------------------------------------------------

Json knot_to_json(const KnotRecord& k) {
    Json j = Json::object();
    j["name"] = k.name;
    if (k.diagram) {
        Json list = Json::array();
        for (const auto& c : k.diagram->crossings)
            list.push_back(Json::array({c.over, c.under_in, c.under_out, c.sign}));
        j["crossings"] = Json{{"num_arcs", k.diagram->num_arcs}, {"list", list}};
    }
    if (k.presentation) {
        Json rel = Json::array();
        for (const auto& w : k.presentation->relators) rel.push_back(word_str(w));
        j["presentation"] = Json{{"generators", k.presentation->num_generators},
                                 {"relators", rel},
                                 {"eta", k.presentation->eta}};
    }
    if (k.seifert) {
        Json rows = Json::array();
        for (int r = 0; r < k.seifert->rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < k.seifert->cols(); ++c)
                row.push_back(int_str((*k.seifert)(r, c)));
            rows.push_back(row);
        }
        j["seifert"] = rows;
    }
    return j;
}

KnotRecord knot_from_json(const Json& j) {
    KnotRecord k;
    try {
        k.name = j.at("name").get<std::string>();
        if (k.name.empty()) throw std::invalid_argument("knot file needs a name");
        if (j.contains("crossings")) {
            const Json& block = j.at("crossings");
            CrossingDiagram d;
            d.num_arcs = block.at("num_arcs").get<int>();
            for (const auto& row : block.at("list")) {
                if (row.size() != 4)
                    throw std::invalid_argument("crossing rows are [over, in, out, sign]");
                d.crossings.push_back(Crossing{row[0].get<int>(), row[1].get<int>(),
                                               row[2].get<int>(), row[3].get<int>()});
            }
            validate_diagram(d);
            k.diagram = d;
        }
        if (j.contains("presentation")) {
            const Json& block = j.at("presentation");
            Presentation p;
            p.num_generators = block.at("generators").get<int>();
            for (const auto& w : block.at("relators"))
                p.relators.push_back(parse_word(w.get<std::string>(), p.num_generators));
            if (block.contains("eta"))
                p.eta = block.at("eta").get<std::vector<long>>();
            else
                compute_degree_map(p);
            validate_presentation(p);
            k.presentation = p;
        }
        if (j.contains("seifert")) {
            const Json& rows = j.at("seifert");
            int n = static_cast<int>(rows.size());
            if (n == 0) throw std::invalid_argument("empty seifert matrix");
            IntMatrix m(n, n);
            for (int r = 0; r < n; ++r) {
                if (static_cast<int>(rows[r].size()) != n)
                    throw std::invalid_argument("seifert matrix must be square");
                for (int c = 0; c < n; ++c)
                    m(r, c) = Int(rows[r][c].get<std::string>());
            }
            k.seifert = m;
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed knot file: ") + e.what());
    }
    if (!k.diagram && !k.presentation && !k.seifert)
        throw std::invalid_argument("knot file carries no diagram, presentation, or seifert matrix");
    try {
        alexander_polynomial(k);  // cross-checks every route present
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("knot file fails cross-checks: ") + e.what());
    }
    return k;
}

KnotRecord load_knot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return knot_from_json(j);
}

// ---- reports ---------------------------------------------------------------

Json twisted_polynomial_to_json(const TwistedPolynomial& p) {
    return Json{{"d", p.d},
                {"cover", p.n},
                {"character", p.character},
                {"homology_orders", int_vector(p.homology_orders)},
                {"polynomial", unit_form_to_json(p.value)}};
}

namespace {

const char* fox_milnor_verdict_str(FoxMilnorVerdict v) {
    switch (v) {
        case FoxMilnorVerdict::passes: return "passes";
        case FoxMilnorVerdict::fails: return "fails";
        default: return "indeterminate";
    }
}

const char* norm_verdict_str(NormVerdict v) {
    switch (v) {
        case NormVerdict::factors: return "factors";
        case NormVerdict::obstructed: return "obstructed";
        default: return "indeterminate";
    }
}

const char* order_two_verdict_str(OrderTwoVerdict v) {
    switch (v) {
        case OrderTwoVerdict::obstructed: return "obstructed";
        case OrderTwoVerdict::not_algebraically_slice: return "not_algebraically_slice";
        default: return "inconclusive";
    }
}

}  // namespace

Json fox_milnor_to_json(const FoxMilnorResult& r) {
    Json factors = Json::array();
    for (const auto& f : r.factors)
        factors.push_back(Json{{"factor", laurent_to_json(f.factor)},
                               {"display", f.factor.str()},
                               {"multiplicity", f.multiplicity},
                               {"symmetric", f.symmetric}});
    Json j{{"verdict", fox_milnor_verdict_str(r.verdict)}, {"factors", factors}};
    if (!r.unfactored.is_zero()) j["unfactored"] = r.unfactored.str();
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json metabolizer_list_to_json(const LinkedAbelianGroup& g, const MetabolizerList& l) {
    Json mets = Json::array();
    for (const auto& m : l.metabolizers) {
        Json gens = Json::array(), elems = Json::array();
        for (const auto& v : m.generators) gens.push_back(int_vector(v));
        for (const auto& v : m.elements) elems.push_back(int_vector(v));
        mets.push_back(Json{
            {"generators", gens}, {"order", m.elements.size()}, {"elements", elems}});
    }
    Json j{{"group_orders", int_vector(g.orders)},
           {"linking_assumed", g.linking_assumed},
           {"count", l.metabolizers.size()},
           {"fast_path", l.fast_path},
           {"metabolizers", mets}};
    if (!l.reason.empty()) j["reason"] = l.reason;
    return j;
}

Json obstruction_report_to_json(const ObstructionReport& r) {
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json gens = Json::array();
        for (const auto& v : rec.metabolizer.generators) gens.push_back(int_vector(v));
        Json chars = Json::array();
        for (const auto& c : rec.characters) {
            Json entry{{"element", int_vector(c.element)},
                       {"character", c.character.values},
                       {"polynomial", unit_form_to_json(c.polynomial)},
                       {"factorization",
                        Json{{"verdict", norm_verdict_str(c.factorization.verdict)},
                             {"stripped_power", c.factorization.stripped_power},
                             {"note", c.factorization.note}}}};
            if (!c.note.empty()) entry["note"] = c.note;
            chars.push_back(entry);
        }
        records.push_back(Json{{"metabolizer_generators", gens},
                               {"metabolizer_order", rec.metabolizer.elements.size()},
                               {"blocked", rec.blocked},
                               {"characters", chars}});
    }
    return Json{{"knot", r.knot},
                {"d", r.d},
                {"verdict", order_two_verdict_str(r.verdict)},
                {"reason", r.reason},
                {"cover_homology_orders", int_vector(r.summand.orders)},
                {"sum_homology_orders", int_vector(r.group.orders)},
                {"metabolizer_count", r.metabolizers.metabolizers.size()},
                {"records", records}};
}

Json lens_value_to_json(const LensSignatureValue& v) {
    return Json{{"k", v.k}, {"m", v.m}, {"r", v.r}, {"value", rat_str(v.value)}};
}

Json order_certificate_to_json(const OrderCertificate& c) {
    Json chain = Json::array();
    for (const auto& term : c.bound_chain)
        chain.push_back(Json{{"description", term.description}, {"value", rat_str(term.value)}});
    return Json{{"k", c.k},
                {"n", c.n},
                {"m", c.m},
                {"rationale", c.rationale},
                {"bound_chain", chain},
                {"sigma1_tau_upper_bound", rat_str(c.sigma1_tau_upper_bound)},
                {"verdict", c.verdict == OrderVerdict::infinite_order_evidence
                                ? "infinite_order_evidence"
                                : "inconclusive"}};
}

Json independence_certificate_to_json(const IndependenceCertificate& c) {
    Json pairs = Json::array();
    for (const auto& [k, n] : c.pairs) pairs.push_back(Json::array({k, n}));
    Json j{{"pairs", pairs},
           {"parity", fox_milnor_to_json(c.parity)},
           {"parity_obstructs", c.parity_obstructs},
           {"verdict",
            c.verdict == IndependenceVerdict::not_slice ? "not_slice" : "inconclusive"}};
    if (!c.parity_obstructs) {
        j["m1"] = c.m1;
        j["bound"] = rat_str(c.bound);
        j["bound_obstructs"] = c.bound_obstructs;
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

// ---- envelope ---------------------------------------------------------------

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
    return os.str();
}

Json make_envelope(const std::string& command, const std::string& inputs_hash,
                   const Json& result, long timing_ms) {
    return Json{{"tool", Json{{"name", "concord"}, {"version", concord_version()}}},
                {"command", command},
                {"inputs_hash", "fnv1a:" + inputs_hash},
                {"result", result},
                {"timing_ms", timing_ms}};
}

}  // namespace concord
