#include "arquiver/run.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace arq {

namespace {

using nlohmann::json;

long pow_long(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

json spec_block(const GroupSchemeSpec& spec, bool p_defaulted, bool r_defaulted) {
    json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["p"] = spec.p;
    j["r"] = spec.r;
    j["reduced_order"] = spec.reduced_order();
    json defaults = json::array();
    if (p_defaulted) defaults.push_back("p");
    if (r_defaulted) defaults.push_back("r");
    j["defaults"] = defaults;
    return j;
}

json envelope(const json& spec, const json& assumptions, const json& result) {
    json j;
    j["spec"] = spec;
    j["assumptions"] = assumptions;
    j["result"] = result;
    return j;
}

json base_assumptions(const GroupSchemeSpec& spec) {
    json a = json::array();
    if (spec.r == 1)
        a.push_back("fusion data computed character-theoretically from the "
                    "reduced matrix group");
    else
        a.push_back("fusion data computed by weight combinatorics; the "
                    "infinitesimal part contributes the factor p^(r-1)");
    a.push_back("module-regularity hypotheses of the induction machinery are "
                "assumed, not checked");
    return a;
}

json quiver_block(const Quiver& q) {
    json j;
    j["vertices"] = q.vertices;
    j["arrows"] = json::array();
    for (const auto& a : q.arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
    return j;
}

json fusion_block(const FusionDatum& d) {
    json j;
    j["labels"] = d.labels;
    j["dims"] = d.dims;
    j["source"] = d.source;
    return j;
}

json label_block(const ModuleLabel& m, const FusionDatum& d) {
    json j;
    j["name"] = m.name(d);
    j["dim"] = m.dim(d);
    j["n"] = m.weyl.n;
    j["weight"] = m.weyl.i;
    j["simple"] = d.labels[m.simple];
    j["projective"] = m.projective;
    return j;
}

}  // namespace

nlohmann::json envelope_for(const GroupSchemeSpec& spec,
                            const nlohmann::json& result) {
    return envelope(spec_block(spec, false, false), base_assumptions(spec), result);
}

FusionDatum fusion_for(const GroupSchemeSpec& spec) {
    spec.validate();
    if (spec.r > 1) return fusion_from_weights(spec);
    auto G = build_group(spec);
    auto T = character_table(G);
    return fusion_from_chartab(T, std_character(G), G);
}

AffineType expected_affine_type(const GroupSchemeSpec& spec) {
    long q = pow_long(spec.p, spec.r - 1);
    switch (spec.family) {
        case Family::BinaryCyclic: return {'A', 2 * spec.n * q - 1};
        case Family::BinaryDihedral:
            return spec.n * q == 1 ? AffineType{'A', 3}
                                   : AffineType{'D', spec.n * q + 2};
        case Family::BinaryTetrahedral: return {'E', 6};
        case Family::BinaryOctahedral: return {'E', 7};
        case Family::BinaryIcosahedral: return {'E', 8};
    }
    throw std::logic_error("unknown family");
}

nlohmann::json char_table_json(const GroupSchemeSpec& spec) {
    spec.validate();
    if (spec.r > 1)
        throw std::invalid_argument(
            "char-table: only the reduced part (r = 1) has a character table");
    auto G = build_group(spec);
    auto T = character_table(G);
    json result;
    result["group_order"] = T.group_order;
    result["num_classes"] = T.num_classes();
    result["conductor"] = T.conductor;
    result["class_sizes"] = T.class_sizes;
    json orders = json::array();
    for (int c = 0; c < G.num_classes(); ++c)
        orders.push_back(G.element_order(G.class_rep(c)));
    result["class_element_orders"] = orders;
    result["degrees"] = T.degrees;
    json rows = json::array();
    for (const auto& chi : T.irreducibles) {
        json row = json::array();
        for (const auto& v : chi) row.push_back(v.str());
        rows.push_back(row);
    }
    result["irreducibles"] = rows;
    return result;
}

nlohmann::json mckay_json(const GroupSchemeSpec& spec) {
    auto d = fusion_for(spec);
    auto q = mckay_quiver(d);
    auto type = classify_affine(q);
    json result;
    result["fusion"] = fusion_block(d);
    result["quiver"] = quiver_block(q);
    result["affine_type"] = type ? type->str() : "none";
    return result;
}

nlohmann::json separated_json(const GroupSchemeSpec& spec) {
    auto d = fusion_for(spec);
    auto q = mckay_quiver(d);
    auto s = separated_quiver(q);
    auto comps = connected_components(s);
    json result;
    result["quiver"] = quiver_block(s);
    json comp_list = json::array();
    auto original = underlying_graph(q);
    for (const auto& c : comps) {
        json cj = quiver_block(c);
        cj["isomorphic_to_original"] =
            undirected_isomorphic(underlying_graph(c), original);
        comp_list.push_back(cj);
    }
    result["components"] = comp_list;
    return result;
}

nlohmann::json ar_component_json(const GroupSchemeSpec& spec, long l, int seed,
                                 long nu_min, long nu_max) {
    auto d = fusion_for(spec);
    auto w = build_component(l, seed, d, spec.p, nu_min, nu_max);
    json result;
    result["l"] = l;
    result["seed"] = d.labels[seed];
    result["window"] = {{"nu_min", nu_min}, {"nu_max", nu_max}};
    result["component_quiver"] = quiver_block(w.Q);
    json verts = json::array();
    for (const auto& v : w.vertices) {
        json vj = label_block(v.label, d);
        vj["nu"] = v.nu;
        vj["vertex"] = w.Q.vertices[v.qvertex];
        verts.push_back(vj);
    }
    result["vertices"] = verts;
    json arrows = json::array();
    for (const auto& a : w.arrows)
        arrows.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
    result["arrows"] = arrows;
    result["tau"] = w.tau_map;
    json seqs = json::array();
    for (const auto& s : w.sequences) {
        json sj;
        sj["left"] = label_block(s.left, d);
        json mids = json::array();
        for (const auto& m : s.middle) mids.push_back(label_block(m, d));
        sj["middle"] = mids;
        sj["right"] = label_block(s.right, d);
        seqs.push_back(sj);
    }
    result["almost_split_sequences"] = seqs;
    result["psi_violations"] = verify_psi(w, w.Q, d);
    return result;
}

nlohmann::json tubes_json(const GroupSchemeSpec& spec) {
    auto ctx = make_action_context(spec);
    auto rep = tube_rank_report(ctx);
    json result;
    result["effective_order"] = rep.effective_order;
    json orbits = json::array();
    for (const auto& o : rep.orbits) {
        json oj;
        oj["representative"] = o.rep.str();
        oj["orbit_size"] = o.orbit_size;
        oj["reduced_stabilizer"] = o.reduced_stabilizer;
        oj["multiplier"] = o.multiplier;
        oj["e"] = o.e;
        orbits.push_back(oj);
    }
    result["exceptional_orbits"] = orbits;
    result["tube_ranks"] = rep.tube_ranks;
    result["generic_rank"] = rep.generic_rank;
    result["rank_bound_holds"] = rep.bound_holds;
    if (spec.r == 1) {
        auto [ok, residual] = riemann_hurwitz_check(rep);
        result["riemann_hurwitz"] = {{"holds", ok}, {"residual", residual.str()}};
    }
    result["report_assumptions"] = rep.assumptions;
    return result;
}

nlohmann::json check_json(const GroupSchemeSpec& spec, bool& ok) {
    spec.validate();
    json checks = json::array();
    ok = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({{"name", name}, {"ok", pass}, {"detail", detail}});
        ok = ok && pass;
    };

    auto d = fusion_for(spec);
    {
        auto violations = verify_fusion(d);
        record("fusion conservation and symmetry", violations.empty(),
               violations.empty() ? "" : violations.front());
    }
    if (spec.r == 1 && !family_is_exceptional(spec.family)) {
        auto dw = fusion_from_weights(spec);
        bool agree = undirected_isomorphic(d.a, dw.a, &d.dims, &dw.dims);
        record("weight and character fusion agree", agree, "");
    }
    if (spec.r == 1) {
        auto G = build_group(spec);
        auto T = character_table(G);
        bool orth = true;
        for (size_t i = 0; i < T.irreducibles.size() && orth; ++i)
            for (size_t j = i; j < T.irreducibles.size() && orth; ++j)
                orth = inner_product(T.irreducibles[i], T.irreducibles[j], G) ==
                       Cyclo(i == j ? 1 : 0);
        long sq = 0;
        for (long deg : T.degrees) sq += deg * deg;
        record("character table orthogonality", orth && sq == G.order(), "");
    }

    auto q = mckay_quiver(d);
    {
        auto type = classify_affine(q);
        auto expect = expected_affine_type(spec);
        bool match = type.has_value() && *type == expect;
        record("affine classification", match,
               "expected " + expect.str() + ", got " +
                   (type ? type->str() : "none"));
    }
    {
        auto comps = connected_components(separated_quiver(q));
        bool good = comps.size() == 2;
        auto original = underlying_graph(q);
        for (const auto& c : comps) {
            good = good && c.size() == q.size() &&
                   undirected_isomorphic(underlying_graph(c), original);
            for (const auto& a : c.arrows)
                for (const auto& b : c.arrows) good = good && a.to != b.from;
        }
        record("separated quiver structure", good, "");
    }
    {
        bool good = true;
        std::string detail;
        for (long l : {0L, spec.p - 2}) {
            auto w = build_component(l, 0, d, spec.p, -3, 3);
            auto violations = verify_psi(w, w.Q, d);
            if (!violations.empty()) {
                good = false;
                detail = violations.front();
            }
        }
        record("AR component window (psi checks)", good, detail);
    }
    {
        auto rep = tube_rank_report(make_action_context(spec));
        long nq = spec.n * pow_long(spec.p, spec.r - 1);
        std::vector<long> expect;
        switch (spec.family) {
            case Family::BinaryCyclic: expect = {nq, nq}; break;
            case Family::BinaryDihedral: expect = {2, 2, nq}; break;
            case Family::BinaryTetrahedral: expect = {2, 3, 3}; break;
            case Family::BinaryOctahedral: expect = {2, 3, 4}; break;
            case Family::BinaryIcosahedral: expect = {2, 3, 5}; break;
        }
        std::sort(expect.begin(), expect.end());
        expect.erase(std::remove(expect.begin(), expect.end(), 1L), expect.end());
        bool ranks_ok = rep.tube_ranks == expect && rep.bound_holds;
        bool rh_ok = true;
        if (spec.r == 1) rh_ok = riemann_hurwitz_check(rep).first;
        record("tube ranks and ramification", ranks_ok && rh_ok, "");
    }
    {
        bool stable = mckay_json(spec).dump() == mckay_json(spec).dump() &&
                      tubes_json(spec).dump() == tubes_json(spec).dump();
        record("deterministic serialization", stable, "");
    }
    json result;
    result["checks"] = checks;
    result["ok"] = ok;
    return result;
}

namespace {

std::string render_text(const json& j, int indent = 0) {
    std::ostringstream os;
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_structured()) {
                os << pad << it.key() << ":\n" << render_text(it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured())
                os << pad << "-\n" << render_text(v, indent + 2);
            else
                os << pad << "- " << v.dump() << "\n";
        }
    }
    return os.str();
}

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file " << out << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        config.spec.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitSpec;
    }
    try {
        json result;
        bool check_ok = true;
        if (config.command == "char-table") {
            result = char_table_json(config.spec);
        } else if (config.command == "mckay") {
            result = mckay_json(config.spec);
        } else if (config.command == "separated") {
            result = separated_json(config.spec);
        } else if (config.command == "ar-component") {
            result = ar_component_json(config.spec, config.l, config.seed,
                                       config.nu_min, config.nu_max);
        } else if (config.command == "tubes") {
            result = tubes_json(config.spec);
        } else if (config.command == "check") {
            result = check_json(config.spec, check_ok);
        } else {
            std::cerr << "unknown command " << config.command << "\n";
            return kExitUsage;
        }

        std::string text;
        if (config.format == "json") {
            text = envelope(spec_block(config.spec, config.p_defaulted,
                                       config.r_defaulted),
                            base_assumptions(config.spec), result)
                       .dump(2) +
                   "\n";
        } else if (config.format == "dot") {
            Quiver q;
            if (config.command == "mckay") {
                q = mckay_quiver(fusion_for(config.spec));
            } else if (config.command == "separated") {
                q = separated_quiver(mckay_quiver(fusion_for(config.spec)));
            } else if (config.command == "ar-component") {
                auto d = fusion_for(config.spec);
                auto w = build_component(config.l, config.seed, d, config.spec.p,
                                         config.nu_min, config.nu_max);
                for (const auto& v : w.vertices)
                    q.vertices.push_back("(" + std::to_string(v.nu) + ")" +
                                         v.label.name(d));
                for (const auto& a : w.arrows) q.add_arrow(a.from, a.to, a.mult);
            } else {
                std::cerr << "dot output is only available for quiver commands\n";
                return kExitUsage;
            }
            text = export_dot(q);
        } else if (config.format == "text") {
            text = render_text(result);
        } else {
            std::cerr << "unknown format " << config.format << "\n";
            return kExitUsage;
        }
        int code = emit(text, config.out);
        if (code != kExitOk) return code;
        if (config.command == "check" && !check_ok) return kExitInternal;
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitSpec;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitSpec;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace arq
