#pragma once

// JSON reports and witness files. Integers are written as decimal strings.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramsey/hedgehog.hpp"
#include "ramsey/rainbow.hpp"
#include "ramsey/seqpat.hpp"
#include "ramsey/stepup.hpp"

namespace ramsey::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

template <class T>
std::string num(T v)
{
    return std::to_string(v);
}

inline std::uint64_t to_u64(const Json& j)
{
    const std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-') throw Error("expected a decimal integer in JSON, got " + s);
    return v;
}

template <class Range>
Json num_array(const Range& r)
{
    Json a = Json::array();
    for (const auto& v : r) a.push_back(num(v));
    return a;
}

template <class T>
std::vector<T> read_array(const Json& j)
{
    std::vector<T> out;
    for (const auto& v : j) out.push_back(static_cast<T>(to_u64(v)));
    return out;
}

inline Json envelope(const std::string& command, Json config)
{
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

inline Json vertices(const std::vector<BinVertex>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(v.to_string());
    return a;
}

inline std::vector<BinVertex> read_vertices(const Json& j, std::size_t width)
{
    std::vector<BinVertex> out;
    for (const auto& v : j) out.push_back(BinVertex::parse(v.get<std::string>(), width));
    return out;
}

// ---------------------------------------------------------------------------
// seqpat

inline Json to_json(const Witness& w)
{
    return {{"kind", to_string(w.kind)},
            {"indices", num_array(w.indices)},
            {"values", num_array(w.values)},
            {"pattern", w.pattern.to_string()}};
}

inline Witness witness_from_json(const Json& j)
{
    Witness w;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "left") w.kind = Witness::Kind::left;
    else if (kind == "right") w.kind = Witness::Kind::right;
    else if (kind == "homogeneous") w.kind = Witness::Kind::homogeneous;
    else throw Error("unknown witness kind " + kind);
    w.indices = read_array<std::size_t>(j.at("indices"));
    w.values = read_array<Value>(j.at("values"));
    w.pattern = pattern_of(w.values);
    return w;
}

inline Json to_json(const HomogeneousResult& h)
{
    return {{"length", num(h.length)}, {"indices", num_array(h.indices)}, {"exact", h.exact}};
}

// ---------------------------------------------------------------------------
// rainbow

inline Json to_json(const RainbowReport& r)
{
    Json j;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["coverage"] = r.coverage == RainbowReport::Coverage::exhaustive ? "exhaustive" : "sampled";
    if (r.coverage == RainbowReport::Coverage::sampled) {
        j["seed"] = num(r.seed);
        j["trials"] = num(r.sets_checked);
        j["note"] = "sampled verification is evidence only, not a proof";
    }
    j["t"] = num(r.t);
    j["p"] = num(r.p);
    j["sets_checked"] = num(r.sets_checked);
    Json h = Json::object();
    for (const auto& [k, v] : r.histogram) h[num(k)] = num(v);
    j["histogram"] = h;
    if (r.violation) {
        j["violation"] = vertices(*r.violation);
        j["violation_colours"] = num(r.violation_colours);
    }
    return j;
}

// ---------------------------------------------------------------------------
// stepup

inline Json to_json(const PColourWitness& w)
{
    Json edges = Json::array();
    for (const auto& e : w.edges) edges.push_back({{"vertices", vertices(e.vertices)}, {"colour", e.colour.to_string()}});
    return {{"outcome", to_string(w.outcome)},
            {"p", num(w.p)},
            {"edges", edges},
            {"deltas", num_array(w.deltas)},
            {"branch_indices", num_array(w.branch_indices)},
            {"branch_colours", num(w.branch_colours)},
            {"explanation", w.explanation}};
}

inline PColourWitness p_colour_witness_from_json(const Json& j, std::size_t width)
{
    PColourWitness w;
    const std::string o = j.at("outcome").get<std::string>();
    if (o == "distinct_edges") w.outcome = PColourWitness::Outcome::distinct_edges;
    else if (o == "homogeneous_branch") w.outcome = PColourWitness::Outcome::homogeneous_branch;
    else if (o == "lifted_branch") w.outcome = PColourWitness::Outcome::lifted_branch;
    else if (o == "too_small") w.outcome = PColourWitness::Outcome::too_small;
    else throw Error("unknown outcome " + o);
    w.p = to_u64(j.at("p"));
    for (const auto& e : j.at("edges"))
        w.edges.push_back({read_vertices(e.at("vertices"), width), ColourId::parse(e.at("colour").get<std::string>())});
    w.deltas = read_array<Value>(j.at("deltas"));
    w.branch_indices = read_array<std::size_t>(j.at("branch_indices"));
    w.branch_colours = to_u64(j.at("branch_colours"));
    w.explanation = j.value("explanation", "");
    return w;
}

// ---------------------------------------------------------------------------
// hedgehog

inline Json to_json(const HedgehogEmbedding& e)
{
    Json edges = Json::array();
    for (const auto& s : e.spine)
        edges.push_back({{"subset", num_array(s.subset)}, {"private", num_array(s.privates)}, {"colour", s.colour.to_string()}});
    return {{"t", num(e.t)}, {"r", num(e.r)}, {"s", num(e.s)}, {"body", num_array(e.body)}, {"edges", edges}};
}

inline HedgehogEmbedding embedding_from_json(const Json& j)
{
    HedgehogEmbedding e;
    e.t = to_u64(j.at("t"));
    e.r = to_u64(j.at("r"));
    e.s = to_u64(j.at("s"));
    e.body = read_array<std::size_t>(j.at("body"));
    for (const auto& s : j.at("edges"))
        e.spine.push_back({read_array<std::size_t>(s.at("subset")), read_array<std::size_t>(s.at("private")),
                           ColourId::parse(s.at("colour").get<std::string>())});
    return e;
}

inline Json to_json(const MonoHedgehogResult& r)
{
    Json stages = Json::array();
    for (const auto& s : r.stages) stages.push_back({{"stage", s.name}, {"ok", s.ok}, {"detail", s.detail}});
    Json j{{"k", num(r.k)}, {"t", num(r.t)}, {"n", num(r.n)}, {"stages", stages}};
    j["complete"] = r.embedding.has_value();
    if (!r.failed_stage.empty()) j["failed_stage"] = r.failed_stage;
    j["colour"] = r.colour == 0 ? "red" : "blue";
    j["x_size"] = num(r.x_size);
    j["y_size"] = num(r.y_size);
    j["y_bound"] = r.y_bound;
    if (r.embedding) j["embedding"] = to_json(*r.embedding);
    if (r.certificate) {
        Json edges = Json::array();
        for (const auto& e : r.certificate->edges) edges.push_back(num_array(e));
        j["certificate"] = {{"colour", r.certificate->colour == 0 ? "red" : "blue"},
                            {"core", num_array(r.certificate->core)},
                            {"edges", edges}};
    }
    return j;
}

inline Json to_json(const SpreadReport& r)
{
    Json j{{"verdict", r.pass ? "pass" : "fail"},
           {"vacuous", r.vacuous},
           {"t", num(r.t)},
           {"s", num(r.s)},
           {"k", num(r.k)},
           {"p", num(r.p)},
           {"p_prime", num(r.p_prime)},
           {"bodies_certified", num(r.bodies)},
           {"min_base_colours", num(r.min_base_colours)},
           {"certified_lifted_colours", num(r.certified_lifted)},
           {"embeddings", num(r.embeddings)},
           {"min_embedding_colours", num(r.min_embedding_colours)},
           {"seed", num(r.seed)}};
    if (r.violation) j["violation"] = num_array(*r.violation);
    return j;
}

inline Json to_json(const PiercingResult& r)
{
    return {{"tau", num(r.tau)},
            {"exact", r.exact},
            {"lower", num(r.lower)},
            {"upper", num(r.upper)},
            {"witness", num_array(r.witness)},
            {"nodes", num(r.nodes)}};
}

inline Json to_json(const HostScan& s)
{
    Json j{{"coverage", s.sampled ? "sampled" : "exhaustive"},
           {"checked", num(s.checked)},
           {"violations", num(s.violations)}};
    if (s.sampled) j["seed"] = num(s.seed);
    if (s.first_violation) j["first_violation"] = num_array(*s.first_violation);
    return j;
}

} // namespace ramsey::report
