#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "concord/json_io.hpp"
#include "concord/lens.hpp"
#include "concord/obstruction.hpp"
#include "concord/two_bridge.hpp"

using namespace concord;

namespace {

constexpr int kExitComputed = 0;
constexpr int kExitInputError = 2;
constexpr int kExitIndeterminate = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("file not found: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// sum over zeta^1..zeta^(d-1) with no constant term, the way the source
// values are usually displayed; falls back to the power basis for
// non-prime moduli.
std::string zeta_style(const Cyclotomic& c) {
    if (c.is_rational()) return rat_str(c.rational_value());
    if (!is_prime(c.modulus())) return c.str();
    auto v = c.zero_constant_basis();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(v[i]) << " z^" << i;
    }
    return first ? "0" : os.str();
}

struct Output {
    Json result;
    std::string text;
    int exit_code = kExitComputed;
};

Presentation presentation_of(const KnotRecord& k) {
    if (k.presentation) return *k.presentation;
    if (k.diagram) return wirtinger_presentation(*k.diagram);
    throw std::invalid_argument("knot file has no presentation or diagram");
}

std::vector<long> parse_character_list(const std::string& s) {
    std::vector<long> values;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        values.push_back(std::stol(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad character entry: " + item);
    }
    if (values.empty()) throw std::invalid_argument("empty character list");
    return values;
}

std::vector<std::pair<long, long>> parse_pairs(const std::string& s) {
    std::vector<std::pair<long, long>> pairs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("pairs are k:n, comma separated");
        pairs.emplace_back(std::stol(item.substr(0, colon)), std::stol(item.substr(colon + 1)));
    }
    if (pairs.empty()) throw std::invalid_argument("empty pair list");
    return pairs;
}

// ---- subcommand bodies -----------------------------------------------------

Output run_alex(const KnotRecord& k) {
    Output out;
    auto f = alexander_polynomial(k);
    auto integral = integral_form(f);
    out.result = Json{{"knot", k.name},
                      {"alexander", unit_form_to_json(f)},
                      {"integral", laurent_to_json(integral)},
                      {"integral_display", integral.str()}};
    out.text = "knot: " + k.name + "\nalexander: " + integral.str() + "\n";
    return out;
}

Output run_twisted(const KnotRecord& k, long n, long d, const std::string& character) {
    Output out;
    Presentation p = presentation_of(k);
    auto homology = branched_homology_from_presentation(p, n);
    std::vector<long> chi = parse_character_list(character);
    if (chi.size() != homology.orders.size())
        throw std::invalid_argument(
            "character needs " + std::to_string(homology.orders.size()) +
            " value(s), one per homology factor; got " + std::to_string(chi.size()));
    TwistedPolynomial tw = twisted_alexander_of_cover(p, n, d, chi);
    out.result = Json{{"knot", k.name}, {"twisted", twisted_polynomial_to_json(tw)}};
    std::ostringstream os;
    os << "knot: " << k.name << "\ncover: " << n << "\nmodulus: " << d << "\ncharacter:";
    for (long v : chi) os << " " << v;
    os << "\nhomology orders:";
    for (const auto& o : tw.homology_orders) os << " " << o.get_str();
    os << "\npolynomial (unit-normalized, z a primitive root of unity of order " << d
       << "):\n";
    for (const auto& [e, c] : tw.value.canonical.terms())
        os << "  t^" << e << ": " << zeta_style(c) << "\n";
    out.text = os.str();
    return out;
}

Output run_cover_homology(const KnotRecord& k, long n) {
    Output out;
    LinkedAbelianGroup h = branched_cover_homology(k, n);
    Json linking = Json::array(), orders = Json::array();
    for (const auto& row : h.linking) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rat_str(v));
        linking.push_back(r);
    }
    for (const auto& o : h.orders) orders.push_back(o.get_str());
    out.result = Json{{"knot", k.name},
                      {"cover", n},
                      {"orders", orders},
                      {"linking", linking},
                      {"linking_assumed", h.linking_assumed}};
    std::ostringstream os;
    os << "knot: " << k.name << "\ncover: " << n << "\nhomology orders:";
    if (h.orders.empty()) os << " (trivial)";
    for (const auto& o : h.orders) os << " " << o.get_str();
    os << "\nlinking" << (h.linking_assumed ? " (assumed 1/N convention):" : ":") << "\n";
    for (const auto& row : h.linking) {
        os << " ";
        for (const auto& v : row) os << " " << rat_str(v);
        os << "\n";
    }
    out.text = os.str();
    return out;
}

Output run_metabolizers(const KnotRecord& k) {
    Output out;
    LinkedAbelianGroup h = branched_cover_homology(k, 2);
    LinkedAbelianGroup g = direct_sum(h, h);
    MetabolizerList l = enumerate_metabolizers(g);
    out.result = Json{{"knot", k.name}, {"group", metabolizer_list_to_json(g, l)}};
    std::ostringstream os;
    os << "knot: " << k.name << "\ngroup (cover homology doubled):";
    for (const auto& o : g.orders) os << " Z/" << o.get_str();
    os << "\nmetabolizers: " << l.metabolizers.size() << "\n";
    for (const auto& m : l.metabolizers) {
        os << "  <";
        for (std::size_t i = 0; i < m.generators.size(); ++i) {
            if (i) os << "; ";
            os << "(";
            for (std::size_t j = 0; j < m.generators[i].size(); ++j) {
                if (j) os << ",";
                os << m.generators[i][j].get_str();
            }
            os << ")";
        }
        os << ">  order " << m.elements.size() << "\n";
    }
    if (!l.reason.empty()) os << "note: " << l.reason << "\n";
    out.text = os.str();
    return out;
}

Output run_order2(const KnotRecord& k, bool all_characters) {
    Output out;
    ObstructionReport r = order_two_report(k, all_characters);
    out.result = obstruction_report_to_json(r);
    std::ostringstream os;
    os << "knot: " << r.knot << "\nverdict: "
       << out.result["verdict"].get<std::string>() << "\nd: " << r.d
       << "\nreason: " << r.reason << "\n";
    for (const auto& rec : r.records) {
        os << "metabolizer <";
        for (std::size_t i = 0; i < rec.metabolizer.generators.size(); ++i) {
            if (i) os << "; ";
            os << "(";
            for (std::size_t j = 0; j < rec.metabolizer.generators[i].size(); ++j) {
                if (j) os << ",";
                os << rec.metabolizer.generators[i][j].get_str();
            }
            os << ")";
        }
        os << ">: " << (rec.blocked ? "blocked" : "not blocked") << "\n";
        for (const auto& c : rec.characters) {
            os << "  chi = (";
            for (std::size_t j = 0; j < c.character.values.size(); ++j) {
                if (j) os << ",";
                os << c.character.values[j];
            }
            os << ") mod " << c.character.modulus << ": "
               << (c.factorization.verdict == NormVerdict::factors       ? "factors"
                   : c.factorization.verdict == NormVerdict::obstructed ? "obstructed"
                                                                         : "indeterminate");
            if (!c.factorization.note.empty()) os << " -- " << c.factorization.note;
            os << "\n";
        }
    }
    out.text = os.str();
    if (r.verdict == OrderTwoVerdict::inconclusive) out.exit_code = kExitIndeterminate;
    return out;
}

Output run_fox_milnor(const Laurent<Rat>& poly, const std::string& label) {
    Output out;
    FoxMilnorResult r = fox_milnor_test(poly);
    out.result = Json{{"input", label},
                      {"polynomial", laurent_to_json(poly)},
                      {"fox_milnor", fox_milnor_to_json(r)}};
    std::ostringstream os;
    os << "polynomial: " << poly.str() << "\nverdict: "
       << (r.verdict == FoxMilnorVerdict::passes   ? "passes"
           : r.verdict == FoxMilnorVerdict::fails ? "fails"
                                                   : "indeterminate")
       << "\n";
    for (const auto& f : r.factors)
        os << "  [" << f.factor.str() << "]^" << f.multiplicity
           << (f.symmetric ? "  (symmetric)" : "") << "\n";
    if (!r.unfactored.is_zero()) os << "  unfactored: " << r.unfactored.str() << "\n";
    if (!r.note.empty()) os << "note: " << r.note << "\n";
    out.text = os.str();
    if (r.verdict == FoxMilnorVerdict::indeterminate) out.exit_code = kExitIndeterminate;
    return out;
}

Output run_lens_sigma(long k, long r) {
    Output out;
    LensSignatureValue closed = sigma_closed(k, r);
    LensSignatureValue lattice = lattice_sigma(k, r);
    if (closed.value != lattice.value)
        throw std::logic_error("closed form and lattice scan disagree");
    out.result = lens_value_to_json(closed);
    std::ostringstream os;
    os << "k: " << closed.k << "\nm: " << closed.m << "\nr: " << closed.r
       << "\nsigma: " << rat_str(closed.value) << "\n";
    out.text = os.str();
    return out;
}

Output run_lens_order(long k, long n, bool allow_small_k) {
    Output out;
    OrderCertificate c = infinite_order_certificate(k, n, allow_small_k);
    out.result = order_certificate_to_json(c);
    std::ostringstream os;
    os << "k: " << c.k << "\nn: " << c.n << "\nm: " << c.m << "\n" << c.rationale << "\n";
    for (const auto& term : c.bound_chain)
        os << "  " << term.description << ": " << rat_str(term.value) << "\n";
    os << "sigma_1(tau) upper bound: " << rat_str(c.sigma1_tau_upper_bound)
       << "\nverdict: "
       << (c.verdict == OrderVerdict::infinite_order_evidence ? "infinite_order_evidence"
                                                              : "inconclusive")
       << "\n";
    out.text = os.str();
    if (c.verdict == OrderVerdict::inconclusive) out.exit_code = kExitIndeterminate;
    return out;
}

Output run_lens_independence(const std::string& pairs_arg) {
    Output out;
    IndependenceCertificate c = independence_certificate(parse_pairs(pairs_arg));
    out.result = independence_certificate_to_json(c);
    std::ostringstream os;
    os << "pairs:";
    for (const auto& [k, n] : c.pairs) os << " " << k << ":" << n;
    os << "\nparity obstructs: " << (c.parity_obstructs ? "yes" : "no") << "\n";
    if (!c.parity_obstructs)
        os << "bound at m1 = " << c.m1 << ": " << rat_str(c.bound) << "\n";
    os << "verdict: "
       << (c.verdict == IndependenceVerdict::not_slice ? "not_slice" : "inconclusive")
       << "\n";
    if (!c.note.empty()) os << "note: " << c.note << "\n";
    out.text = os.str();
    if (c.verdict == IndependenceVerdict::inconclusive) out.exit_code = kExitIndeterminate;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slice obstructions for knots: twisted Alexander polynomials, "
                 "order-two tests, and lens-space signature certificates"};
    app.set_version_flag("--version", concord_version());
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.require_subcommand(1);

    std::string file, character = "1", pairs_arg, poly_arg;
    long cover = 2, modulus = 0, nfold = 2, opt_k = 0, opt_r = 0, opt_n = 0;
    bool all_characters = false, allow_small_k = false;

    auto* alex = app.add_subcommand("alex", "Alexander polynomial of a knot file");
    alex->add_option("file", file, "knot file")->required();

    auto* twisted = app.add_subcommand(
        "twisted", "twisted Alexander polynomial of a cyclic branched cover");
    twisted->add_option("file", file, "knot file")->required();
    twisted->add_option("--cover", cover, "cover degree n")->required();
    twisted->add_option("--modulus", modulus, "character modulus d")->required();
    twisted->add_option("--character", character,
                        "character values on the cover homology factors, comma separated");

    auto* coverh =
        app.add_subcommand("cover-homology", "homology of the n-fold branched cover");
    coverh->add_option("file", file, "knot file")->required();
    coverh->add_option("--n", nfold, "cover degree")->required();

    auto* mets = app.add_subcommand(
        "metabolizers", "metabolizers of the doubled branched-cover homology");
    mets->add_option("file", file, "knot file")->required();

    auto* order2 = app.add_subcommand("order2", "order-two obstruction report");
    order2->add_option("file", file, "knot file")->required();
    order2->add_flag("--all-characters", all_characters,
                     "test every admissible character, not just one per metabolizer");

    auto* foxm = app.add_subcommand("fox-milnor", "Fox-Milnor factorization test");
    foxm->add_option("file", file, "knot file (uses its Alexander polynomial)");
    foxm->add_option("--poly", poly_arg,
                     "comma-separated integer coefficients from exponent 0");

    auto* lens = app.add_subcommand("lens", "lens-space signature certificates");
    lens->require_subcommand(1);
    auto* sigma = lens->add_subcommand("sigma", "sigma(T_k, chi^(2r)) exactly");
    sigma->add_option("--k", opt_k, "twist parameter")->required();
    sigma->add_option("--r", opt_r, "character exponent")->required();
    auto* order = lens->add_subcommand("infinite-order",
                                       "signature bound certificate for n T_k");
    order->add_option("--k", opt_k, "twist parameter")->required();
    order->add_option("--n", opt_n, "number of summands (even)")->required();
    order->add_flag("--allow-small-k", allow_small_k, "skip the k >= 3 hypothesis");
    auto* indep = lens->add_subcommand("independence",
                                       "independence certificate for sums of twist doubles");
    indep->add_option("--pairs", pairs_arg, "k:n pairs, comma separated")->required();

    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInputError;
    }

    std::ostringstream echo;
    for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];

    auto started = std::chrono::steady_clock::now();
    try {
        std::string hash_input;
        Output out;
        if (*alex) {
            hash_input = slurp(file);
            out = run_alex(load_knot_file(file));
        } else if (*twisted) {
            hash_input = slurp(file) + "|cover=" + std::to_string(cover) +
                         "|modulus=" + std::to_string(modulus) + "|character=" + character;
            out = run_twisted(load_knot_file(file), cover, modulus, character);
        } else if (*coverh) {
            hash_input = slurp(file) + "|n=" + std::to_string(nfold);
            out = run_cover_homology(load_knot_file(file), nfold);
        } else if (*mets) {
            hash_input = slurp(file);
            out = run_metabolizers(load_knot_file(file));
        } else if (*order2) {
            hash_input = slurp(file) + (all_characters ? "|all" : "");
            out = run_order2(load_knot_file(file), all_characters);
        } else if (*foxm) {
            if (file.empty() == poly_arg.empty())
                throw std::invalid_argument("give exactly one of a knot file or --poly");
            if (!file.empty()) {
                hash_input = slurp(file);
                KnotRecord k = load_knot_file(file);
                out = run_fox_milnor(integral_form(alexander_polynomial(k)), k.name);
            } else {
                hash_input = "poly=" + poly_arg;
                Laurent<Rat> p;
                long e = 0;
                std::stringstream ss(poly_arg);
                std::string item;
                while (std::getline(ss, item, ',')) p.set(e++, parse_rat(item));
                if (p.is_zero()) throw std::invalid_argument("zero polynomial");
                out = run_fox_milnor(p, poly_arg);
            }
        } else if (*sigma) {
            hash_input = "k=" + std::to_string(opt_k) + "|r=" + std::to_string(opt_r);
            out = run_lens_sigma(opt_k, opt_r);
        } else if (*order) {
            hash_input = "k=" + std::to_string(opt_k) + "|n=" + std::to_string(opt_n) +
                         (allow_small_k ? "|small" : "");
            out = run_lens_order(opt_k, opt_n, allow_small_k);
        } else if (*indep) {
            hash_input = "pairs=" + pairs_arg;
            out = run_lens_independence(pairs_arg);
        } else {
            throw std::invalid_argument("unknown subcommand");
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        if (format == "json") {
            std::cout << make_envelope(echo.str(), fnv1a_hex(hash_input), out.result,
                                       static_cast<long>(ms))
                             .dump(2)
                      << "\n";
        } else {
            std::cout << out.text;
        }
        return out.exit_code;
    } catch (const std::exception& e) {
        if (format == "json") {
            Json err{{"tool", Json{{"name", "concord"}, {"version", concord_version()}}},
                     {"command", echo.str()},
                     {"error", e.what()}};
            std::cout << err.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kExitInputError;
    }
}
