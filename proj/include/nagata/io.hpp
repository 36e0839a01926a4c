#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nagata/lefschetz.hpp"
#include "nagata/parse.hpp"

namespace nagata {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "nagata-cw/1";

// ---- serialization helpers ------------------------------------------------

/// Integers ride as JSON numbers while they fit a double exactly, and as
/// decimal strings beyond that.
inline Json json_int(long long v) {
    constexpr long long bound = (1LL << 53) - 1;
    if (v <= bound && v >= -bound) return Json(v);
    return Json(std::to_string(v));
}

inline Json json_int(const Int& v) {
    if (fits_json_number(v)) return Json(v.get_si());
    return Json(v.get_str());
}

inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string term_str(const Int& coeff, const BiMonomial& mono, bool lead) {
    std::string s;
    Int a = coeff;
    if (a < 0) {
        s += lead ? "-" : " - ";
        a = -a;
    } else if (!lead) {
        s += " + ";
    }
    const std::string m = mono_str(mono, true);
    if (a != 1)
        s += a.get_str() + (m == "1" ? "" : "*");
    else if (m == "1")
        s += "1";
    if (m != "1") s += m;
    return s;
}

inline std::string generator_str(const Generator& g) {
    std::string s;
    for (size_t t = 0; t < g.terms.size(); ++t)
        s += term_str(g.terms[t].first, g.terms[t].second, t == 0);
    return s;
}

inline std::string spoly_str(const SPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    bool lead = true;
    for (const auto& [mono, c] : p) {
        Int a = c;
        if (a < 0) {
            s += lead ? "-" : " - ";
            a = -a;
        } else if (!lead) {
            s += " + ";
        }
        const std::string m = mono_str(mono, false);
        if (a != 1)
            s += a.get_str() + (m == "1" ? "" : "*");
        else if (m == "1")
            s += "1";
        if (m != "1") s += m;
        lead = false;
    }
    return s;
}

inline std::string action_name(PairingAction a) {
    return a == PairingAction::Contraction ? "contraction" : "differentiation";
}

inline PairingAction action_from_name(const std::string& s) {
    if (s == "contraction") return PairingAction::Contraction;
    if (s == "differentiation") return PairingAction::Differentiation;
    throw ValidationError("unknown action '" + s + "' (expected contraction|differentiation)");
}

// ---- input documents -------------------------------------------------------

/// JSON form: {schema_version, d1, m, g: [[exponents]...], action?}.
inline NagataInput parse_input_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
    if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
        throw ValidationError(std::string("input schema_version must be \"") +
                              kSchemaVersion + "\"");
    for (const char* field : {"d1", "m", "g"})
        if (!doc.contains(field))
            throw ValidationError(std::string("missing input field \"") + field + "\"");
    NagataInput in;
    in.d1 = doc["d1"].get<int>();
    in.m = doc["m"].get<int>();
    if (!doc["g"].is_array() || doc["g"].empty())
        throw ValidationError("field \"g\" must be a non-empty array of exponent vectors");
    for (const auto& row : doc["g"]) {
        UMonomial g;
        for (const auto& e : row) g.exps.push_back(e.get<int>());
        in.facets.push_back(std::move(g));
    }
    if (doc.contains("action")) in.action = action_from_name(doc["action"].get<std::string>());
    in.validate();
    return in;
}

/// Accepts either the JSON document or expression text.
inline NagataInput parse_input_document(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_input_json(text);
    return parse_expression(text);
}

// ---- run/dispatch -----------------------------------------------------------

struct RunOptions {
    std::string command;  // hilbert | ann | check | hasse | lefschetz
    std::optional<PairingAction> action_override;
    bool minimal = false;
    int trials = 10;
    uint64_t seed = 0;
};

struct RunResult {
    Json doc;
    int exit_code = 0;
};

namespace detail {

inline Json table_json(const BigradedTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.a) {
        Json r = Json::array();
        for (long long v : row) r.push_back(json_int(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Json vector_json(const std::vector<long long>& v) {
    Json out = Json::array();
    for (long long x : v) out.push_back(json_int(x));
    return out;
}

inline Json generator_json(const Generator& g) {
    Json terms = Json::array();
    for (const auto& [c, mono] : g.terms) {
        Json t;
        t["coeff"] = json_int(c);
        t["x"] = mono.xexps;
        t["u"] = mono.uexps.exps;
        terms.push_back(std::move(t));
    }
    Json out;
    out["str"] = generator_str(g);
    out["terms"] = std::move(terms);
    return out;
}

inline Json input_echo(const NagataInput& in) {
    Json e;
    e["d1"] = in.d1;
    e["d2"] = in.d2();
    e["m"] = in.m;
    e["n_plus_1"] = in.n_plus_1();
    Json g = Json::array();
    for (const auto& f : in.facets) g.push_back(f.exps);
    e["g"] = std::move(g);
    e["f"] = print_expression(in);
    e["action"] = action_name(in.action);
    e["square_free"] = in.is_square_free();
    return e;
}

inline Json report_json(const LefschetzReport& rep) {
    Json out;
    out["property"] = rep.property;
    out["verdict"] = rep.verdict;
    Json form = Json::array();
    for (const auto& c : rep.form.coeffs) form.push_back(rat_str(c));
    out["form"] = std::move(form);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["deg"] = c.deg;
        j["k"] = c.k;
        j["rank"] = json_int(c.rank);
        j["max_rank"] = json_int(c.max_rank);
        j["maximal"] = c.maximal();
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    out["seed"] = rep.seed;
    out["trials"] = rep.trials;
    out["witness_trial"] = rep.witness_trial;
    if (!rep.note.empty()) out["note"] = rep.note;
    if (!rep.hessians.empty()) {
        Json hs = Json::array();
        for (const auto& h : rep.hessians) {
            Json j;
            j["k"] = h.k;
            j["size"] = json_int(h.size);
            j["ranks"] = vector_json(h.ranks);
            j["deficient_everywhere"] = h.deficient_everywhere;
            hs.push_back(std::move(j));
        }
        out["hessian_evidence"] = std::move(hs);
    }
    return out;
}

inline Json ann_json(const GeneratorSet& gs, const NagataInput& in,
                     const AnnVerification& ver) {
    Json items;
    for (int item = 1; item <= 6; ++item) {
        if (item == 2 && gs.item2_symbolic) {
            Json sym;
            sym["symbolic"] = true;
            sym["str"] = "<U1..U" + std::to_string(in.m) + ">^" +
                         std::to_string(in.d2() + 1);
            sym["degree"] = in.d2() + 1;
            sym["count"] = json_int(binomial(in.m + in.d2(), in.d2() + 1));
            items[std::to_string(item)] = std::move(sym);
            continue;
        }
        Json list = Json::array();
        for (const auto& g : gs.gens)
            if (g.item == item) list.push_back(generator_json(g));
        items[std::to_string(item)] = std::move(list);
    }
    Json out;
    out["action"] = action_name(gs.action);
    out["minimalized"] = gs.minimalized;
    out["generator_count"] = static_cast<long long>(gs.gens.size());
    out["items"] = std::move(items);
    Json verj;
    verj["checked"] = json_int(ver.checked);
    verj["all_annihilate"] = ver.all_zero();
    Json fails = Json::array();
    for (const auto& f : ver.failures) {
        Json j;
        j["generator"] = generator_str(f.gen);
        j["residue"] = spoly_str(f.residue);
        fails.push_back(std::move(j));
    }
    verj["failures"] = std::move(fails);
    out["verification"] = std::move(verj);
    return out;
}

/// For d1 = 1 the interior-row formula does not apply; when its value would
/// differ from the duality branch, say so explicitly in the report.
inline std::optional<std::string> d1_edge_note(const FaceModel& model,
                                               const BigradedTable& actual) {
    if (model.d1() != 1) return std::nullopt;
    std::vector<long long> naive(model.d2() + 1, 0);
    for (int j = 0; j <= model.d2(); ++j)
        for (int r = 0; r < model.n_plus_1(); ++r)
            naive[j] += model.per_facet_counts[j][r];
    bool differs = false;
    for (int j = 0; j <= model.d2(); ++j)
        if (naive[j] != actual.a[1][j]) differs = true;
    if (!differs) return std::nullopt;
    auto vec_str = [](const std::vector<long long>& v) {
        std::string s = "(";
        for (size_t k = 0; k < v.size(); ++k)
            s += (k ? "," : "") + std::to_string(v[k]);
        return s + ")";
    };
    std::vector<long long> actual_row(actual.a[1]);
    return "d1 = 1 has no interior rows: a[1][j] = f_{d2-j} by duality, giving "
           "row " +
           vec_str(actual_row) + "; evaluating the interior-row formula at i = 1 " +
           "would give " + vec_str(naive) +
           " instead and over-counts divisors shared between facets.";
}

}  // namespace detail

inline RunResult run(NagataInput in, const RunOptions& opt) {
    if (opt.action_override) in.action = *opt.action_override;
    in.validate();
    const FaceModel model = build_face_model(in);

    RunResult res;
    res.doc["schema_version"] = kSchemaVersion;
    res.doc["command"] = opt.command;
    res.doc["input"] = detail::input_echo(in);

    if (opt.command == "hilbert") {
        const BigradedTable t = bigraded_table(model);
        Json h;
        h["table"] = detail::table_json(t);
        h["vector"] = detail::vector_json(hilbert_vector(t));
        h["duality_ok"] = t.duality_holds();
        if (auto note = detail::d1_edge_note(model, t)) h["paper_note"] = *note;
        res.doc["hilbert"] = std::move(h);
        return res;
    }

    if (opt.command == "ann") {
        GeneratorSet gs = build_generators(in, model);
        if (opt.minimal) gs = minimalize(gs, in);
        const AnnVerification ver = verify_annihilation(gs, in);
        res.doc["ann"] = detail::ann_json(gs, in, ver);
        if (!ver.all_zero()) res.exit_code = 2;
        return res;
    }

    if (opt.command == "check") {
        const BigradedTable closed = bigraded_table(model);
        const OracleReport oracle = oracle_report(in, model);
        const GeneratorSet gs = build_generators(in, model);

        bool completeness_ok = true;
        Json completeness_mismatches = Json::array();
        long long cells = 0;
        for (int i = 0; i <= in.d1; ++i) {
            for (int j = 0; j <= in.d2(); ++j) {
                ++cells;
                const Int t_dim = binomial(in.n_plus_1() - 1 + i, i) *
                                  binomial(in.m + j - 1, j);
                const Int expected = t_dim - make_int(oracle.dims.a[i][j]);
                const long long got = ideal_span_dimension(gs, in, i, j);
                if (make_int(got) != expected) {
                    completeness_ok = false;
                    Json mm;
                    mm["i"] = i;
                    mm["j"] = j;
                    mm["span_dimension"] = json_int(got);
                    mm["expected"] = json_int(expected);
                    completeness_mismatches.push_back(std::move(mm));
                }
            }
        }

        Json c;
        c["closed_form"] = detail::table_json(closed);
        c["oracle"] = detail::table_json(oracle.dims);
        c["equal"] = oracle.matches_closed_form;
        Json mms = Json::array();
        for (const auto& [i, j, cf, oc] : oracle.mismatches) {
            Json mm;
            mm["i"] = i;
            mm["j"] = j;
            mm["closed_form"] = json_int(cf);
            mm["oracle"] = json_int(oc);
            mms.push_back(std::move(mm));
        }
        c["mismatches"] = std::move(mms);
        c["hilbert_vector"] = detail::vector_json(hilbert_vector(closed));
        c["duality_ok"] = oracle.duality_ok;
        Json comp;
        comp["bidegrees_checked"] = json_int(cells);
        comp["all_match"] = completeness_ok;
        comp["mismatches"] = std::move(completeness_mismatches);
        c["generator_completeness"] = std::move(comp);
        if (auto note = detail::d1_edge_note(model, closed)) c["paper_note"] = *note;
        res.doc["check"] = std::move(c);
        if (!oracle.matches_closed_form || !completeness_ok || !oracle.duality_ok)
            res.exit_code = 2;
        return res;
    }

    if (opt.command == "hasse") {
        Json h;
        long long nodes = 0;
        for (const auto& level : model.divisor_sets)
            nodes += static_cast<long long>(level.size());
        h["nodes"] = json_int(nodes);
        h["edges"] = json_int(hasse_edge_count(model));
        h["dot"] = export_hasse_dot(model);
        res.doc["hasse"] = std::move(h);
        return res;
    }

    if (opt.command == "lefschetz") {
        Json l;
        l["wlp"] = detail::report_json(check_wlp(in, sum_of_x(in.n_plus_1(), in.m)));
        l["slp"] = detail::report_json(check_slp(in, opt.trials, opt.seed));
        res.doc["lefschetz"] = std::move(l);
        return res;
    }

    throw ValidationError("unknown command '" + opt.command + "'");
}

// ---- plain-text rendering ---------------------------------------------------

namespace detail {
inline std::string table_text(const Json& rows) {
    std::string s;
    for (const auto& row : rows) {
        s += " ";
        for (const auto& v : row) s += " " + v.dump();
        s += "\n";
    }
    return s;
}
}  // namespace detail

/// Human-oriented rendering of a run result; same information, same order.
inline std::string render_text(const RunResult& res) {
    const Json& d = res.doc;
    std::string s;
    s += "command: " + d["command"].get<std::string>() + "\n";
    s += "f: " + d["input"]["f"].get<std::string>() + "\n";
    s += "action: " + d["input"]["action"].get<std::string>() + "\n";
    const std::string cmd = d["command"].get<std::string>();
    if (cmd == "hilbert") {
        s += "bigraded table (rows i = 0..d1):\n" + detail::table_text(d["hilbert"]["table"]);
        s += "hilbert vector:";
        for (const auto& v : d["hilbert"]["vector"]) s += " " + v.dump();
        s += "\nduality_ok: " + d["hilbert"]["duality_ok"].dump() + "\n";
        if (d["hilbert"].contains("paper_note"))
            s += "note: " + d["hilbert"]["paper_note"].get<std::string>() + "\n";
    } else if (cmd == "ann") {
        s += "minimalized: " + d["ann"]["minimalized"].dump() + "\n";
        for (const auto& [item, list] : d["ann"]["items"].items()) {
            s += "item " + item + ":\n";
            if (list.is_object()) {
                s += "  " + list["str"].get<std::string>() + "\n";
                continue;
            }
            for (const auto& g : list) s += "  " + g["str"].get<std::string>() + "\n";
        }
        s += "all_annihilate: " + d["ann"]["verification"]["all_annihilate"].dump() + "\n";
    } else if (cmd == "check") {
        s += "closed_form:\n" + detail::table_text(d["check"]["closed_form"]);
        s += "oracle:\n" + detail::table_text(d["check"]["oracle"]);
        s += "equal: " + d["check"]["equal"].dump() + "\n";
        s += "generator_completeness: " +
             d["check"]["generator_completeness"]["all_match"].dump() + "\n";
        if (d["check"].contains("paper_note"))
            s += "note: " + d["check"]["paper_note"].get<std::string>() + "\n";
    } else if (cmd == "hasse") {
        s += d["hasse"]["dot"].get<std::string>();
    } else if (cmd == "lefschetz") {
        for (const char* prop : {"wlp", "slp"}) {
            const Json& rep = d["lefschetz"][prop];
            s += rep["property"].get<std::string>() +
                 " verdict: " + rep["verdict"].dump() + "\n";
            for (const auto& c : rep["checks"])
                s += "  deg " + c["deg"].dump() + " k " + c["k"].dump() + ": rank " +
                     c["rank"].dump() + "/" + c["max_rank"].dump() + "\n";
            if (rep.contains("note")) s += "  " + rep["note"].get<std::string>() + "\n";
        }
    }
    return s;
}

}  // namespace nagata
