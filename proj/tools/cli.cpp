#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgps/constructions.hpp"
#include "sgps/factorizations.hpp"
#include "sgps/ideals.hpp"
#include "sgps/irreducible.hpp"
#include "sgps/parallel.hpp"
#include "sgps/polynomial.hpp"
#include "sgps/presentations.hpp"
#include "sgps/varieties.hpp"

namespace sgps::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- parsing -------------------------------------------------------------

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

Int parse_int(std::string_view text) {
    const std::string t = trim(text);
    Int value = 0;
    const auto* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(t.data(), end, value);
    if (t.empty() || ec != std::errc() || ptr != end) throw UsageError("not an integer: '" + t + "'");
    return value;
}

IntList parse_list(std::string_view text) {
    IntList out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
}

// ---- JSON ----------------------------------------------------------------

Json semigroup_json(const NumericalSemigroup& s) { return Json{{"minimal_generators", s.minimal_generators()}}; }

Json semigroups_json(const std::vector<NumericalSemigroup>& list) {
    Json out = Json::array();
    for (const auto& s : list) out.push_back(semigroup_json(s));
    return out;
}

Json ideal_json(const RelativeIdeal& a) {
    return Json{{"generators", a.generators()}, {"ambient", semigroup_json(a.ambient())}};
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json polynomial_json(const IntegerPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) {
        if (c >= std::numeric_limits<Int>::min() && c <= std::numeric_limits<Int>::max())
            out.push_back(static_cast<Int>(c));
        else
            out.push_back(c.str());
    }
    return out;
}

Json factorizations_json(const std::vector<Factorization>& zs) {
    Json out = Json::array();
    for (const auto& z : zs) out.push_back(z);
    return out;
}

bool is_semigroup_record(const Json& v) {
    return v.is_object() && v.size() == 1 && v.contains("minimal_generators");
}

std::string render(const Json& v) {
    if (is_semigroup_record(v)) {
        std::string s = "<";
        bool first = true;
        for (const auto& g : v["minimal_generators"]) {
            s += (first ? "" : ",") + g.dump();
            first = false;
        }
        return s + ">";
    }
    if (v.is_array() && !v.empty() && is_semigroup_record(v.front())) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
        return s + "]";
    }
    if (v.is_object() && v.contains("generators") && v.contains("ambient")) {
        const std::string g = v["generators"].dump();
        return "{" + g.substr(1, g.size() - 2) + "} + " + render(v["ambient"]);
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(const Json& record, bool json, std::ostream& out) {
    if (json) {
        out << record.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : record.items()) {
        if (key == "command") continue;
        out << key << ": " << render(value) << "\n";
    }
}

// ---- semigroup sources ---------------------------------------------------

struct Source {
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;

    void attach(CLI::App* app) {
        static const std::pair<const char*, const char*> kinds[] = {
            {"--gens", "generators, comma separated"},
            {"--gaps", "gap set"},
            {"--fundamental-gaps", "fundamental gaps"},
            {"--small-elements", "small elements, ending at the conductor"},
            {"--apery", "Apery set of its size"},
            {"--interval", "rational interval lo,hi (e.g. 71/5,153/8)"},
            {"--inequality", "alpha,beta,gamma for alpha x mod beta <= gamma x"},
            {"--subadditive", "periodic subadditive function f(1),...,f(p)=0"},
        };
        for (const auto& [name, help] : kinds) options[name] = app->add_option(name, values[name], help);
    }

    bool given() const {
        for (const auto& [name, opt] : options)
            if (opt->count() > 0) return true;
        return false;
    }

    NumericalSemigroup build() const {
        std::string chosen;
        for (const auto& [name, opt] : options) {
            if (opt->count() == 0) continue;
            if (!chosen.empty()) throw UsageError("give exactly one semigroup source");
            chosen = name;
        }
        if (chosen.empty()) throw UsageError("a semigroup source is required (e.g. --gens 5,7,9)");
        const std::string& text = values.at(chosen);
        if (chosen == "--gens") return NumericalSemigroup::from_generators(parse_list(text));
        if (chosen == "--gaps") return NumericalSemigroup::from_gap_data(GapDataKind::Gaps, parse_list(text));
        if (chosen == "--fundamental-gaps")
            return NumericalSemigroup::from_gap_data(GapDataKind::FundamentalGaps, parse_list(text));
        if (chosen == "--small-elements")
            return NumericalSemigroup::from_gap_data(GapDataKind::SmallElements, parse_list(text));
        if (chosen == "--apery") return NumericalSemigroup::from_apery(parse_list(text));
        if (chosen == "--subadditive") return NumericalSemigroup::from_subadditive(parse_list(text));
        if (chosen == "--inequality") {
            const IntList v = parse_list(text);
            if (v.size() != 3) throw UsageError("--inequality needs alpha,beta,gamma");
            return NumericalSemigroup::from_inequality(v[0], v[1], v[2]);
        }
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw UsageError("--interval needs lo,hi");
        return NumericalSemigroup::from_interval(parse_rational(text.substr(0, comma)),
                                                 parse_rational(text.substr(comma + 1)));
    }
};

// ---- commands --------------------------------------------------------------

Json invariants_record(const NumericalSemigroup& s) {
    const auto b = basic_invariants(s);
    return Json{{"command", "invariants"},
                {"semigroup", semigroup_json(s)},
                {"multiplicity", b.multiplicity},
                {"embedding_dimension", b.embedding_dimension},
                {"frobenius", b.frobenius},
                {"conductor", b.conductor},
                {"genus", b.genus},
                {"type", b.type}};
}

Variety parse_variety(const std::string& name) {
    if (name == "med") return Variety::MED;
    if (name == "arf") return Variety::Arf;
    if (name == "saturated" || name == "sat") return Variety::Saturated;
    throw UsageError("unknown variety '" + name + "' (med, arf, saturated)");
}

Family parse_family(const std::string& name) {
    if (name == "complete_intersection" || name == "ci") return Family::CompleteIntersection;
    if (name == "free") return Family::Free;
    if (name == "telescopic") return Family::Telescopic;
    if (name == "almost_symmetric") return Family::AlmostSymmetric;
    throw UsageError("unknown family '" + name + "' (complete_intersection, free, telescopic, almost_symmetric)");
}

FamilyMethod parse_method(const std::string& name) {
    if (name == "auto") return FamilyMethod::Auto;
    if (name == "filter") return FamilyMethod::Filter;
    if (name == "gluing") return FamilyMethod::Gluing;
    throw UsageError("unknown method '" + name + "' (auto, filter, gluing)");
}

Json element_graph_json(const ElementGraph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return Json{{"element", g.element}, {"vertices", g.vertices}, {"edges", edges}, {"components", g.components}};
}

Json length_json(const LengthStats& st) {
    return Json{{"denumerant", st.denumerant},
                {"lengths", st.lengths},
                {"delta", st.delta},
                {"elasticity", rational_text(st.elasticity)},
                {"max_denumerant", st.max_denumerant}};
}

Json irreducible_json(const NumericalSemigroup& s) {
    const auto p = irreducibility_profile(s);
    const auto ci = ci_profile(s);
    Json gluings = Json::array();
    for (const auto& [a, b] : gluing_splits(s)) gluings.push_back({a, b});
    return Json{{"command", "decompose"},
                {"semigroup", semigroup_json(s)},
                {"decomposition", semigroups_json(decompose_irreducible(s))},
                {"irreducible", p.irreducible},
                {"symmetric", p.symmetric},
                {"pseudo_symmetric", p.pseudo_symmetric},
                {"almost_symmetric", p.almost_symmetric},
                {"gluings", gluings},
                {"complete_intersection", ci.complete_intersection},
                {"free", ci.free},
                {"telescopic", ci.telescopic}};
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read " << path << "\n";
        return 1;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        Json record;
        try {
            record = invariants_record(NumericalSemigroup::from_generators(parse_list(line)));
        } catch (const Error& e) {
            record = Json{{"error", std::string(kind_name(e.kind()))}, {"message", e.what()}};
        } catch (const UsageError& e) {
            record = Json{{"error", "InvalidArgument"}, {"message", e.what()}};
        }
        out << record.dump() << "\n";
    }
    return 0;
}

void apply_thread_env() {
    if (const char* env = std::getenv("SGPS_THREADS")) {
        try {
            const Int n = parse_int(env);
            if (n >= 0) set_thread_limit(static_cast<unsigned>(n));
        } catch (const UsageError&) {
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_env();

    CLI::App app{"Numerical semigroups: invariants, presentations, censuses, ideals and factorizations."};
    app.name("sgps");
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");
    app.fallthrough();

    auto* invariants = app.add_subcommand("invariants", "multiplicity, embedding dimension, Frobenius number, genus, type");
    Source inv_src;
    inv_src.attach(invariants);

    auto* desc = app.add_subcommand("descriptors", "element lists, Apery set and Kunz coordinates");
    Source desc_src;
    desc_src.attach(desc);
    std::optional<Int> apery_of, first_n, contains_z;
    bool with_polytope = false;
    desc->add_option("--apery-of", apery_of, "Apery set of this element");
    desc->add_option("--first", first_n, "the first n elements");
    desc->add_option("--contains", contains_z, "membership test");
    desc->add_flag("--kunz-polytope", with_polytope, "inequalities of the Kunz polytope of the multiplicity");

    auto* pres = app.add_subcommand("presentation", "minimal presentation and primitive elements");
    Source pres_src;
    pres_src.attach(pres);

    auto* betti = app.add_subcommand("betti", "Betti elements, element graphs and shaded sets");
    Source betti_src;
    betti_src.attach(betti);
    std::optional<Int> graph_n, shaded_n;
    betti->add_option("--graph", graph_n, "element graph of n");
    betti->add_option("--shaded", shaded_n, "shaded set of n");

    auto* decompose = app.add_subcommand("decompose", "irreducibility, decomposition, gluings, complete intersection");
    Source dec_src;
    dec_src.attach(decompose);

    auto* construct = app.add_subcommand("construct", "semigroups built from the given one");
    Source con_src;
    con_src.attach(construct);
    std::optional<Int> remove_g, add_g, quotient_p, multiple_a, tail_b;
    std::string intersect_with;
    construct->add_option("--remove", remove_g, "remove a minimal generator");
    construct->add_option("--add-gap", add_g, "adjoin a special gap");
    construct->add_option("--intersect", intersect_with, "intersect with the semigroup with these generators");
    construct->add_option("--quotient", quotient_p, "quotient by p");
    construct->add_option("--multiple", multiple_a, "a S together with every integer from --tail on");
    construct->add_option("--tail", tail_b, "start of the tail for --multiple");

    auto* enumerate = app.add_subcommand("enumerate", "censuses: frobenius F, genus G, pf LIST, irreducible F, family F, variety F, over");
    std::string enum_kind, enum_param, family_name = "telescopic", variety_name_arg = "arf", method_name = "auto";
    bool count_only = false;
    Source enum_src;
    enumerate->add_option("kind", enum_kind, "frobenius | genus | pf | irreducible | family | variety | over")->required();
    enumerate->add_option("parameter", enum_param, "Frobenius number, genus or pseudo-Frobenius list");
    enumerate->add_flag("--count", count_only, "print only the number of semigroups");
    enumerate->add_option("--family", family_name, "complete_intersection | free | telescopic | almost_symmetric");
    enumerate->add_option("--variety", variety_name_arg, "arf | saturated");
    enumerate->add_option("--method", method_name, "auto | filter | gluing (family censuses)");
    enum_src.attach(enumerate);

    auto* variety = app.add_subcommand("variety", "MED, Arf and saturated membership, closure and minimal generators");
    Source var_src;
    var_src.attach(variety);
    std::string var_name = "med";
    variety->add_option("--variety", var_name, "med | arf | saturated");

    auto* ideal_cmd = app.add_subcommand("ideal", "relative ideals (use --ideal=-1,2 for negative generators)");
    Source ideal_src;
    ideal_src.attach(ideal_cmd);
    std::string ideal_gens, other_gens, op = "describe";
    std::optional<Int> ideal_k, ideal_by, ideal_apery;
    ideal_cmd->add_option("--ideal", ideal_gens, "generators of the ideal");
    ideal_cmd->add_option("--other", other_gens, "generators of the second ideal");
    ideal_cmd->add_option("--op", op,
                          "describe | sum | subtract | union | intersection | difference | translate | scale | "
                          "blowup | hilbert | reduction | canonical | maximal");
    ideal_cmd->add_option("--k", ideal_k, "multiplier for scale, n for hilbert");
    ideal_cmd->add_option("--by", ideal_by, "offset for translate");
    ideal_cmd->add_option("--apery-of", ideal_apery, "Apery set of the ideal with respect to n");

    auto* factorize = app.add_subcommand("factorize", "factorizations of an element and their invariants");
    Source fac_src;
    fac_src.attach(factorize);
    std::string fac_list;
    Int fac_n = 0;
    factorize->add_option("--list", fac_list, "arbitrary positive integers instead of a semigroup");
    factorize->add_option("--element", fac_n, "the element to factor")->required();

    auto* profile = app.add_subcommand("profile", "semigroup-wide factorization invariants");
    Source prof_src;
    prof_src.attach(profile);
    Int delta_bound = 100;
    profile->add_option("--delta-bound", delta_bound, "Delta set is taken over elements up to this bound");

    auto* poly = app.add_subcommand("polynomial", "Hilbert series, semigroup polynomial, Graeffe, cyclotomic tests");
    Source poly_src;
    poly_src.attach(poly);
    std::string coeffs;
    std::optional<Int> hilbert_cap;
    poly->add_option("--coeffs", coeffs, "test this polynomial (ascending coefficients) instead");
    poly->add_option("--hilbert-cap", hilbert_cap, "degree cap for the Hilbert series");

    auto* random = app.add_subcommand("random", "reproducible random semigroup");
    Int max_gens = 5, bound = 50;
    std::uint64_t seed = 0;
    random->add_option("--max-gens", max_gens, "number of draws");
    random->add_option("--bound", bound, "largest drawn value");
    random->add_option("--seed", seed, "splitmix64 seed");

    auto* batch = app.add_subcommand("batch", "one JSON record per line of generators");
    std::string batch_file;
    batch->add_option("file", batch_file, "input file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (batch->parsed()) return run_batch(batch_file, out, err);

        Json r;
        if (invariants->parsed()) {
            r = invariants_record(inv_src.build());
        } else if (desc->parsed()) {
            const auto s = desc_src.build();
            const auto d = descriptors(s);
            r = Json{{"command", "descriptors"},
                     {"semigroup", semigroup_json(s)},
                     {"small_elements", d.small_elements},
                     {"gaps", d.gaps},
                     {"fundamental_gaps", d.fundamental_gaps},
                     {"pseudo_frobenius", d.pseudo_frobenius},
                     {"special_gaps", d.special_gaps},
                     {"apery", s.apery().elements}};
            r["kunz_coordinates"] = s.is_whole() ? Json(nullptr) : Json(kunz_coordinates(s).coords);
            if (apery_of) r["apery_of"] = Json{{"modulus", *apery_of}, {"elements", apery_set(s, *apery_of).elements}};
            if (first_n) r["first_elements"] = first_elements(s, *first_n);
            if (contains_z) r["contains"] = s.contains(*contains_z);
            if (with_polytope) {
                Json ineqs = Json::array();
                if (!s.is_whole())
                    for (const auto& q : kunz_polytope(s.multiplicity()))
                        ineqs.push_back(Json{{"coefficients", q.coeffs}, {"bound", q.bound}});
                r["kunz_polytope"] = ineqs;
            }
        } else if (pres->parsed()) {
            const auto s = pres_src.build();
            Json rels = Json::array();
            for (const auto& rel : minimal_presentation(s)) rels.push_back({rel.lhs, rel.rhs});
            const auto flags = presentation_flags(s);
            r = Json{{"command", "presentation"},
                     {"semigroup", semigroup_json(s)},
                     {"relations", rels},
                     {"uniquely_presented", flags.uniquely_presented},
                     {"generic", flags.generic},
                     {"primitive_elements", primitive_elements(s)}};
        } else if (betti->parsed()) {
            const auto s = betti_src.build();
            r = Json{{"command", "betti"}, {"semigroup", semigroup_json(s)}, {"betti_elements", betti_elements(s)}};
            if (graph_n) r["element_graph"] = element_graph_json(element_graph(s, *graph_n));
            if (shaded_n) r["shaded_set"] = shaded_set(s, *shaded_n);
        } else if (decompose->parsed()) {
            r = irreducible_json(dec_src.build());
        } else if (construct->parsed()) {
            const auto s = con_src.build();
            const int chosen = (remove_g ? 1 : 0) + (add_g ? 1 : 0) + (!intersect_with.empty() ? 1 : 0) +
                               (quotient_p ? 1 : 0) + (multiple_a ? 1 : 0);
            if (chosen != 1) throw UsageError("give exactly one of --remove, --add-gap, --intersect, --quotient, --multiple");
            NumericalSemigroup t;
            if (remove_g) t = remove_generator(s, *remove_g);
            else if (add_g) t = add_gap(s, *add_g);
            else if (!intersect_with.empty()) t = intersection(s, NumericalSemigroup::from_generators(parse_list(intersect_with)));
            else if (quotient_p) t = quotient(s, *quotient_p);
            else {
                if (!tail_b) throw UsageError("--multiple needs --tail");
                t = multiple_with_tail(s, *multiple_a, *tail_b);
            }
            r = Json{{"command", "construct"}, {"source", semigroup_json(s)}, {"semigroup", semigroup_json(t)}};
        } else if (enumerate->parsed()) {
            auto need_int = [&] {
                if (enum_param.empty()) throw UsageError("enumerate " + enum_kind + " needs a parameter");
                return parse_int(enum_param);
            };
            std::optional<std::uint64_t> count;
            EnumerationResult list;
            if (enum_kind == "frobenius") {
                const Int f = need_int();
                if (count_only) count = count_frobenius(f);
                else list = enumerate_frobenius(f);
            } else if (enum_kind == "genus") {
                const Int g = need_int();
                if (count_only) count = count_genus(g);
                else list = enumerate_genus(g);
            } else if (enum_kind == "pf") {
                if (enum_param.empty()) throw UsageError("enumerate pf needs a list");
                list = enumerate_pseudo_frobenius(parse_list(enum_param));
            } else if (enum_kind == "irreducible") {
                list = enumerate_irreducible(need_int());
            } else if (enum_kind == "family") {
                list = enumerate_family(need_int(), parse_family(family_name), parse_method(method_name));
            } else if (enum_kind == "variety") {
                list = variety_enumerate_frobenius(parse_variety(variety_name_arg), need_int());
            } else if (enum_kind == "over") {
                list = oversemigroups(enum_src.build());
            } else {
                throw UsageError("unknown census '" + enum_kind + "'");
            }
            if (!count) count = list.size();
            if (count_only) {
                if (json) out << Json{{"command", "enumerate"}, {"kind", enum_kind}, {"count", *count}}.dump() << "\n";
                else out << *count << "\n";
                return 0;
            }
            if (!json) {
                for (const auto& s : list) out << render(semigroup_json(s)) << "\n";
                return 0;
            }
            r = Json{{"command", "enumerate"}, {"kind", enum_kind}, {"count", *count}, {"semigroups", semigroups_json(list)}};
        } else if (variety->parsed()) {
            const auto s = var_src.build();
            const Variety v = parse_variety(var_name);
            const bool member = in_variety(v, s);
            r = Json{{"command", "variety"},
                     {"semigroup", semigroup_json(s)},
                     {"variety", std::string(variety_name(v))},
                     {"member", member},
                     {"closure", semigroup_json(variety_closure(v, s))}};
            r["variety_generators"] = member ? Json(variety_min_generators(v, s)) : Json(nullptr);
        } else if (ideal_cmd->parsed()) {
            const auto s = ideal_src.build();
            r = Json{{"command", "ideal"}, {"op", op}};
            if (op == "canonical") {
                r["result"] = ideal_json(canonical_ideal(s));
            } else if (op == "maximal") {
                r["result"] = ideal_json(maximal_ideal(s));
            } else {
                if (ideal_gens.empty()) throw UsageError("--ideal is required for --op " + op);
                const RelativeIdeal a = ideal(parse_list(ideal_gens), s);
                r["ideal"] = ideal_json(a);
                auto other = [&] {
                    if (other_gens.empty()) throw UsageError("--other is required for --op " + op);
                    return ideal(parse_list(other_gens), s);
                };
                if (op == "describe") {
                    r["small_elements"] = a.small_elements();
                    r["frobenius"] = a.frobenius();
                    if (ideal_apery) r["apery"] = a.apery(*ideal_apery);
                } else if (op == "sum") r["result"] = ideal_json(ideal_sum(a, other()));
                else if (op == "subtract") r["result"] = ideal_json(ideal_subtract(a, other()));
                else if (op == "union") r["result"] = ideal_json(ideal_union(a, other()));
                else if (op == "intersection") r["result"] = ideal_json(ideal_intersection(a, other()));
                else if (op == "difference") r["result"] = ideal_difference(a, other());
                else if (op == "translate") {
                    if (!ideal_by) throw UsageError("--op translate needs --by");
                    r["result"] = ideal_json(ideal_translate(a, *ideal_by));
                } else if (op == "scale") {
                    if (!ideal_k) throw UsageError("--op scale needs --k");
                    r["result"] = ideal_json(ideal_scale_add(a, *ideal_k));
                } else if (op == "blowup") r["result"] = ideal_json(blow_up(a));
                else if (op == "hilbert") {
                    if (!ideal_k) throw UsageError("--op hilbert needs --k");
                    r["result"] = hilbert_function(a, *ideal_k);
                } else if (op == "reduction") r["result"] = reduction_number(a);
                else throw UsageError("unknown ideal operation '" + op + "'");
            }
        } else if (factorize->parsed()) {
            IntList gens;
            std::optional<NumericalSemigroup> s;
            if (!fac_list.empty()) {
                if (fac_src.given()) throw UsageError("give either --list or a semigroup source");
                gens = parse_list(fac_list);
            } else {
                s = fac_src.build();
                gens = s->minimal_generators();
            }
            const auto zs = factorizations(fac_n, gens);
            if (zs.empty()) fail(ErrorKind::NotInSemigroup, "element has no factorization");
            r = Json{{"command", "factorize"}, {"element", fac_n}, {"generators", gens},
                     {"factorizations", factorizations_json(zs)}};
            const Json stats = length_json(length_stats_of_set(zs));
            for (const auto& [k, v] : stats.items()) r[k] = v;
            r["catenary"] = catenary_of_set(zs);
            r["tame"] = tame_of_set(zs);
            if (s) r["omega"] = omega_primality(*s, fac_n);
        } else if (profile->parsed()) {
            const auto s = prof_src.build();
            const auto p = semigroup_factorization_profile(s, delta_bound);
            r = Json{{"command", "profile"},
                     {"semigroup", semigroup_json(s)},
                     {"delta_set", p.delta_set},
                     {"delta_bound", p.delta_bound},
                     {"delta_max", p.delta_max},
                     {"elasticity", rational_text(p.elasticity)},
                     {"catenary_degree", p.catenary_degree},
                     {"tame_degree", p.tame_degree},
                     {"omega_primality", omega_primality(s)}};
        } else if (poly->parsed()) {
            r = Json{{"command", "polynomial"}};
            IntegerPolynomial p;
            if (!coeffs.empty()) {
                if (poly_src.given()) throw UsageError("give either --coeffs or a semigroup source");
                p = IntegerPolynomial::from_ints(parse_list(coeffs));
            } else {
                const auto s = poly_src.build();
                p = semigroup_polynomial(s);
                r["semigroup"] = semigroup_json(s);
                r["hilbert_series"] = hilbert_series(s, hilbert_cap.value_or(s.conductor() + s.multiplicity()));
            }
            r["polynomial"] = polynomial_json(p);
            r["text"] = p.to_string();
            r["graeffe"] = polynomial_json(graeffe(p));
            const auto t = poly_tests(p);
            r["self_reciprocal"] = t.self_reciprocal;
            r["cyclotomic"] = t.cyclotomic;
            r["kronecker"] = t.kronecker;
        } else if (random->parsed()) {
            r = Json{{"command", "random"}, {"semigroup", semigroup_json(random_semigroup(max_gens, bound, seed))}};
        }
        emit(r, json, out);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << " (" << kind_name(e.kind()) << ")\n";
        return 1;
    }
}

} // namespace sgps::cli
