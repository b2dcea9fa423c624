// Command-line front end: one subcommand per library operation, JSON or text
// reports, witness files that re-validate through `validate`.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey/ramsey.hpp"

namespace fs = std::filesystem;
using namespace ramsey;
using report::Json;
using report::num;
using report::num_array;

namespace {

enum Exit { kPass = 0, kFail = 1, kError = 2 };

struct Outcome {
    int code = kPass;
    Json body = Json::object();
    std::vector<std::string> text;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

template <class Range>
std::string join_nums(const Range& r)
{
    std::vector<std::string> parts;
    for (const auto& v : r) parts.push_back(std::to_string(v));
    return join(parts);
}

/// Every option of the innermost subcommand, as given or defaulted.
Json capture_config(const CLI::App* app)
{
    Json c = Json::object();
    for (const CLI::Option* o : app->get_options()) {
        std::string name = o->get_name();
        if (name == "--help" || name.empty()) continue;
        while (!name.empty() && name.front() == '-') name.erase(name.begin());
        if (o->count())
            c[name] = join(o->results());
        else if (!o->get_default_str().empty())
            c[name] = o->get_default_str();
    }
    return c;
}

std::string read_text(const std::string& path) { return io::read_file(path); }

Sequence sequence_from(const std::string& inline_text, const std::string& path)
{
    if (!inline_text.empty() && !path.empty()) throw PreconditionError("give either --seq or --file, not both");
    if (!path.empty()) return io::parse_sequence(read_text(path));
    if (inline_text.empty()) throw PreconditionError("a sequence is required (--seq or --file)");
    std::string t = inline_text;
    for (char& ch : t)
        if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
    return io::parse_sequence(t);
}

Pattern pattern_from(const std::string& text)
{
    std::vector<int> ranks;
    for (Value v : sequence_from(text, "")) ranks.push_back(static_cast<int>(v));
    return Pattern(std::move(ranks));
}

IndexSet indices_from(const std::string& text)
{
    IndexSet ix;
    for (Value v : sequence_from(text, "")) ix.push_back(static_cast<std::size_t>(v));
    return ix;
}

// ---------------------------------------------------------------------------
// Colouring sources. A source is a JSON description that rebuilds the colouring;
// witness files carry it so they re-validate without side inputs.

Colouring build_source(const Json& s)
{
    if (s.contains("random")) {
        const auto& r = s.at("random");
        return random_colouring(report::to_u64(r.at("k")), report::to_u64(r.at("n")),
                                static_cast<std::uint32_t>(report::to_u64(r.at("q"))), report::to_u64(r.at("seed")));
    }
    if (s.contains("tabulated")) return io::parse_colouring(s.at("tabulated").get<std::string>(), "witness");
    if (s.contains("constant")) {
        const auto& r = s.at("constant");
        const auto colour = static_cast<std::uint16_t>(report::to_u64(r.at("colour")));
        return tabulate_from(report::to_u64(r.at("k")), report::to_u64(r.at("n")), 2, [&](auto) { return colour; });
    }
    if (s.contains("burr_erdos_host")) return BurrErdosHost(report::to_u64(s.at("burr_erdos_host"))).colouring();
    if (s.contains("lift")) return lift_colouring(build_source(s.at("base")), report::to_u64(s.at("lift")));
    if (s.contains("steps")) {
        const auto sched = io::parse_schedule(s.at("steps").get<std::string>());
        return tower_compose(build_source(s.at("base")), sched.steps);
    }
    throw Error("unrecognised colouring source " + s.dump());
}

struct Source {
    Json json;
    Colouring colouring;
};

Json random_source(std::size_t k, std::uint64_t n, std::uint32_t q, std::uint64_t seed)
{
    return {{"random", {{"k", num(k)}, {"n", num(n)}, {"q", num(q)}, {"seed", num(seed)}}}};
}

Json base_source(const io::BaseSpec& b, const fs::path& dir)
{
    if (b.kind == io::BaseSpec::Kind::random) return random_source(b.k, b.n, b.q, b.seed);
    const fs::path p = fs::path(b.path).is_absolute() ? fs::path(b.path) : dir / b.path;
    return {{"tabulated", read_text(p.string())}};
}

struct SourceOptions {
    std::string colouring, schedule, base;

    void add(CLI::App* app)
    {
        app->add_option("--colouring", colouring, "tabulated colouring file");
        app->add_option("--schedule", schedule, "step-up schedule file");
        app->add_option("--base", base, "tabulated base colouring for the schedule");
    }

    Source load() const
    {
        if (!colouring.empty() && !schedule.empty()) throw PreconditionError("give --colouring or --schedule, not both");
        Json j;
        if (!colouring.empty()) {
            j = {{"tabulated", read_text(colouring)}};
        } else if (!schedule.empty()) {
            const auto sched = io::parse_schedule(read_text(schedule));
            Json base_json;
            if (!base.empty()) base_json = {{"tabulated", read_text(base)}};
            else if (sched.base) base_json = base_source(*sched.base, fs::path(schedule).parent_path());
            else throw PreconditionError("the schedule has no base line; pass --base");
            io::Schedule steps_only{std::nullopt, sched.steps};
            j = {{"steps", io::format_schedule(steps_only)}, {"base", base_json}};
        } else {
            throw PreconditionError("a colouring is required (--colouring or --schedule)");
        }
        return {j, build_source(j)};
    }
};

Json colouring_summary(const Colouring& c)
{
    return {{"kind", c.kind()},
            {"uniformity", num(c.uniformity())},
            {"vertices", c.universe().size_string()},
            {"colour_budget", num(c.budget())},
            {"provenance", c.provenance()}};
}

void write_witness(const std::string& path, const std::string& type, Json payload)
{
    Json j;
    j["schema"] = report::kSchema;
    j["type"] = type;
    for (auto& [k, v] : payload.items()) j[k] = v;
    io::write_file(path, j.dump(2) + "\n");
}

std::vector<BinVertex> random_vertex_set(const Universe& u, std::size_t size, Rng& rng)
{
    return detail::sample_vertices(u, size, rng);
}

// ---------------------------------------------------------------------------
// seqpat

Outcome run_pattern(const std::string& seq, const std::string& file, const std::string& find, const std::string& mode,
                    std::size_t enumerate_k)
{
    Outcome out;
    if (enumerate_k) {
        Json lists = Json::object();
        const auto right = enumerate_right_property_perms(enumerate_k);
        const auto left = enumerate_left_property_perms(enumerate_k);
        Json rj = Json::array(), lj = Json::array();
        for (const auto& p : right) rj.push_back(p.to_string());
        for (const auto& p : left) lj.push_back(p.to_string());
        out.body["k"] = num(enumerate_k);
        out.body["right_property"] = {{"count", num(right.size())}, {"permutations", rj}};
        out.body["left_property"] = {{"count", num(left.size())}, {"permutations", lj}};
        out.body["catalan"] = num(catalan(enumerate_k));
        out.text.push_back("right-property permutations of length " + std::to_string(enumerate_k) + ": " +
                           std::to_string(right.size()) + " (Catalan " + std::to_string(catalan(enumerate_k)) + ")");
        for (const auto& p : right) out.text.push_back("  " + p.to_string());
        return out;
    }
    const Sequence s = sequence_from(seq, file);
    const Pattern p = pattern_of(s);
    out.body["length"] = num(s.size());
    out.body["pattern"] = p.to_string();
    out.text.push_back("pattern " + p.to_string());
    if (p.is_permutation() && !p.empty()) {
        out.body["left_property"] = has_left_property(p);
        out.body["right_property"] = has_right_property(p);
        out.body["unique_local_minimum"] = has_unique_local_minimum(p);
        out.text.push_back(std::string("left property ") + (has_left_property(p) ? "yes" : "no") + ", right property " +
                           (has_right_property(p) ? "yes" : "no"));
    }
    const auto hom = longest_homogeneous_max_induced(s);
    out.body["longest_homogeneous_max_induced"] = report::to_json(hom);
    if (!find.empty()) {
        const Pattern q = pattern_from(find);
        std::optional<IndexSet> hit;
        if (mode == "any") hit = contains_pattern(s, q);
        else if (mode == "max-induced") hit = contains_max_induced(s, q);
        else if (mode == "separated") hit = contains_separated_permutation(s, q);
        else throw PreconditionError("--mode must be any, max-induced or separated");
        out.body["query"] = {{"pattern", q.to_string()}, {"mode", mode}, {"found", hit.has_value()}};
        if (hit) out.body["query"]["indices"] = num_array(*hit);
        out.text.push_back(hit ? "found " + q.to_string() + " at indices " + join_nums(*hit)
                               : "no " + mode + " copy of " + q.to_string());
        if (!hit) out.code = kFail;
    }
    return out;
}

Outcome run_gen_sk(std::size_t k)
{
    Outcome out;
    const Sequence s = gen_sk(k);
    out.body["k"] = num(k);
    out.body["length"] = num(s.size());
    out.body["sequence"] = num_array(s);
    out.text.push_back(join_nums(s));
    return out;
}

Outcome run_extract(const std::string& seq, const std::string& file, const std::string& left,
                    const std::string& right, double exponent_base, const std::string& witness_out)
{
    Outcome out;
    const Sequence s = sequence_from(seq, file);
    const Pattern l = pattern_from(left), r = pattern_from(right);
    ExtractOptions opt;
    opt.exponent_base = exponent_base;
    const Witness w = find_left_right_or_homogeneous(s, l, r, opt);
    const double eps = extraction_epsilon(l.size() + r.size(), opt);
    const double bound = extraction_length_bound(s.size(), eps);
    std::string why;
    const bool valid = validate_witness(s, l, r, w, &why);
    out.body["witness"] = report::to_json(w);
    out.body["valid"] = valid;
    out.body["epsilon"] = eps;
    out.body["homogeneous_bound"] = bound;
    out.text.push_back(std::string(to_string(w.kind)) + " witness at indices " + join_nums(w.indices) + " (pattern " +
                       w.pattern.to_string() + ")");
    if (!valid) {
        out.body["invalid_reason"] = why;
        out.text.push_back("witness does not re-validate: " + why);
        out.code = kFail;
    }
    if (!witness_out.empty())
        write_witness(witness_out, "extraction",
                      {{"sequence", num_array(s)}, {"left", l.to_string()}, {"right", r.to_string()},
                       {"witness", report::to_json(w)}});
    return out;
}

Outcome run_separated(const std::string& seq, const std::string& file, std::size_t k, const std::string& witness_out)
{
    Outcome out;
    const Sequence a = sequence_from(seq, file);
    const auto res = separated_interlacing(a, k);
    Json levels = Json::array();
    for (std::size_t i = 0; i < res.chain.levels.size(); ++i)
        levels.push_back({{"value", num(res.chain.values[i])}, {"size", num(res.chain.levels[i].size())}});
    Json reals = Json::object();
    for (const auto& [perm, ix] : res.realizations) reals[perm.to_string()] = num_array(ix);
    out.body["k"] = num(k);
    out.body["length"] = num(a.size());
    out.body["distinct_values"] = num(distinct_values(a));
    out.body["levels"] = levels;
    out.body["realizations"] = reals;
    std::vector<std::string> sizes;
    for (const auto& l : res.chain.levels) sizes.push_back(std::to_string(l.size()));
    out.text.push_back("level sizes " + join(sizes));
    for (const auto& [perm, ix] : res.realizations) out.text.push_back(perm.to_string() + " at " + join_nums(ix));
    if (!witness_out.empty())
        write_witness(witness_out, "separated", {{"sequence", num_array(a)}, {"k", num(k)}, {"realizations", reals}});
    return out;
}

// ---------------------------------------------------------------------------
// delta

Outcome run_delta(const std::string& vertices_file, std::size_t cube, const std::string& max_induced,
                  const std::string& separated)
{
    Outcome out;
    std::vector<BinVertex> vs;
    std::size_t width = 0;
    if (!vertices_file.empty()) {
        auto set = io::parse_vertex_set(read_text(vertices_file));
        vs = std::move(set.vertices);
        width = set.width;
    } else if (cube) {
        if (cube > 20) throw PreconditionError("--cube is limited to m <= 20");
        width = cube;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << cube); ++i) vs.push_back(BinVertex::from_uint(i, width));
    } else {
        throw PreconditionError("give --vertices FILE or --cube m");
    }
    const DeltaSeq ds = delta_sequence(vs);
    const bool ok = check_unique_and_max(ds);
    out.body["width"] = num(width);
    out.body["vertices"] = num(ds.hosts.size());
    out.body["deltas"] = num_array(ds.deltas);
    out.body["distinct_values"] = num(distinct_values(ds.deltas));
    out.body["unique_and_max"] = ok;
    out.text.push_back("deltas " + join_nums(ds.deltas));
    if (!ok) {
        out.code = kFail;
        out.text.push_back("unique/max properties fail");
    }
    auto realize = [&](const std::string& key, const std::string& text, bool sep) {
        if (text.empty()) return;
        const IndexSet ix = indices_from(text);
        const auto hosts = sep ? realize_separated(ds, ix) : realize_max_induced(ds, ix);
        std::vector<BinVertex> sorted = hosts;
        const auto back = delta_sequence(sorted);
        const bool match = pattern_of(back.deltas) == pattern_of(values_at(ds.deltas, ix));
        out.body[key] = {{"indices", num_array(ix)}, {"hosts", report::vertices(hosts)}, {"pattern_preserved", match}};
        std::vector<std::string> hs;
        for (const auto& h : hosts) hs.push_back(h.to_string());
        out.text.push_back(key + " hosts " + join(hs));
        if (!match) out.code = kFail;
    };
    realize("max_induced", max_induced, false);
    realize("separated", separated, true);
    return out;
}

// ---------------------------------------------------------------------------
// stepup and verify

struct SampleOptions {
    std::uint64_t samples = 0;
    std::size_t set_size = 0;
    std::uint64_t seed = 0;
};

/// Runs witness_p_colours on random sets and re-validates each output.
Json sample_witnesses(const Colouring& c, const SampleOptions& opt, bool& all_valid)
{
    Rng rng(opt.seed);
    std::map<std::string, std::uint64_t> outcomes;
    std::uint64_t invalid = 0;
    std::optional<std::string> first_invalid;
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
        const auto vs = random_vertex_set(c.universe(), opt.set_size, rng);
        const auto w = witness_p_colours(c, vs);
        ++outcomes[to_string(w.outcome)];
        std::string why;
        if (!validate_p_colour_witness(c, vs, w, &why)) {
            ++invalid;
            if (!first_invalid) first_invalid = why;
        }
    }
    all_valid = invalid == 0;
    Json o = Json::object();
    for (const auto& [k, v] : outcomes) o[k] = num(v);
    Json j{{"samples", num(opt.samples)}, {"set_size", num(opt.set_size)}, {"seed", num(opt.seed)},
           {"outcomes", o}, {"invalid", num(invalid)}};
    if (first_invalid) j["first_invalid"] = *first_invalid;
    return j;
}

Outcome run_stepup(const SourceOptions& src, const std::string& edge, bool trace, const std::string& witness_set,
                   const std::string& witness_out, const SampleOptions& sample)
{
    Outcome out;
    const auto s = src.load();
    const Colouring& c = s.colouring;
    out.body["colouring"] = colouring_summary(c);
    out.text.push_back(c.kind() + ": " + std::to_string(c.uniformity()) + "-uniform on " + c.universe().size_string() +
                       " vertices, at most " + std::to_string(c.budget()) + " colours");
    const std::size_t width = c.universe().width;
    if (!edge.empty()) {
        Edge e;
        std::string t = edge;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        for (std::string tok; in >> tok;) e.push_back(BinVertex::parse(tok, width));
        std::sort(e.begin(), e.end());
        Trace tr;
        const ColourId col = c.colour(e, trace ? &tr : nullptr);
        out.body["edge"] = {{"vertices", report::vertices(e)}, {"colour", col.to_string()}};
        if (trace) out.body["edge"]["trace"] = tr;
        out.text.push_back("colour " + col.to_string());
        for (const auto& line : tr) out.text.push_back("  " + line);
    }
    if (!witness_set.empty()) {
        const auto set = io::parse_vertex_set(read_text(witness_set));
        if (set.width != width) throw PreconditionError("vertex set width differs from the universe width");
        const auto w = witness_p_colours(c, set.vertices);
        std::string why;
        const bool valid = validate_p_colour_witness(c, set.vertices, w, &why);
        out.body["witness"] = report::to_json(w);
        out.body["witness_valid"] = valid;
        out.text.push_back(std::string("witness: ") + to_string(w.outcome) + (valid ? " (valid)" : " (INVALID: " + why + ")"));
        if (!valid) out.code = kFail;
        if (!witness_out.empty())
            write_witness(witness_out, "p-colour",
                          {{"source", s.json}, {"width", num(width)}, {"vertices", report::vertices(set.vertices)},
                           {"witness", report::to_json(w)}});
    }
    if (sample.samples) {
        bool ok = true;
        out.body["sampled_witnesses"] = sample_witnesses(c, sample, ok);
        out.text.push_back("sampled witnesses: " + std::to_string(sample.samples) + (ok ? ", all valid" : ", some INVALID"));
        if (!ok) out.code = kFail;
    }
    return out;
}

Outcome run_verify(const SourceOptions& src, std::size_t t, std::size_t p, std::uint64_t samples, std::uint64_t seed,
                   const std::string& violation_out)
{
    Outcome out;
    const auto s = src.load();
    const VerifyMode mode = samples ? VerifyMode::sample(samples, seed) : VerifyMode::exhaustive();
    const auto rep = verify_rainbow(s.colouring, t, p, mode);
    out.body["colouring"] = colouring_summary(s.colouring);
    out.body["report"] = report::to_json(rep);
    out.text.push_back(std::string(rep.pass ? "pass" : "fail") + ": " + std::to_string(rep.sets_checked) + " " +
                       std::to_string(t) + "-sets checked (" +
                       (rep.coverage == RainbowReport::Coverage::sampled ? "sampled, seed " + std::to_string(seed)
                                                                         : std::string("exhaustive")) +
                       ")");
    if (rep.coverage == RainbowReport::Coverage::sampled)
        out.text.push_back("note: sampled verification is evidence only, not a proof");
    if (!rep.pass) {
        out.code = kFail;
        std::vector<std::string> vs;
        for (const auto& v : *rep.violation) vs.push_back(v.to_string());
        out.text.push_back("violation {" + join(vs) + "} spans " + std::to_string(rep.violation_colours) + " colours");
        if (!violation_out.empty())
            write_witness(violation_out, "rainbow-violation",
                          {{"source", s.json}, {"t", num(t)}, {"p", num(p)},
                           {"width", num(s.colouring.universe().width)}, {"vertices", report::vertices(*rep.violation)}});
    }
    return out;
}

Outcome run_search_random(std::size_t k, std::uint64_t n, std::uint32_t q, std::size_t t, std::size_t p,
                          std::uint64_t attempts, std::uint64_t seed, const std::string& colouring_out,
                          const std::string& witness_out)
{
    Outcome out;
    const auto fp = first_moment_params(k, q, t);
    out.body["first_moment"] = {{"epsilon", fp.epsilon}, {"log2_n", fp.log2_n}, {"t0", num(fp.t0)},
                                {"above_t0", t > fp.t0}};
    const auto r = search_random_rainbow(k, n, q, t, p, attempts, seed);
    out.body["found"] = r.colouring.has_value();
    out.body["attempts"] = num(r.attempts);
    if (!r.colouring) {
        out.code = kFail;
        out.text.push_back("no (" + std::to_string(t) + ";" + std::to_string(q) + "," + std::to_string(p) +
                           ")-rainbow colouring found in " + std::to_string(r.attempts) + " attempts");
        if (t <= fp.t0) out.text.push_back("note: t <= t0 = " + std::to_string(fp.t0) + ", success is not guaranteed");
        return out;
    }
    out.body["seed_used"] = num(r.seed_used);
    out.text.push_back("found after " + std::to_string(r.attempts) + " attempts (seed " + std::to_string(r.seed_used) + ")");
    const std::string text = io::format_colouring(*r.colouring);
    if (!colouring_out.empty()) io::write_file(colouring_out, text);
    if (!witness_out.empty())
        write_witness(witness_out, "rainbow-colouring",
                      {{"source", random_source(k, n, q, r.seed_used)}, {"t", num(t)}, {"p", num(p)}});
    return out;
}

Outcome run_exact(std::size_t k, std::size_t n, std::size_t q, std::size_t t, std::size_t p, double nodes,
                  const std::string& witness_out)
{
    Outcome out;
    const auto r = exact_rainbow_exists(k, n, q, t, p, nodes);
    out.body["exists"] = r.exists;
    out.body["nodes"] = num(r.nodes);
    if (!r.exists) {
        out.code = kFail;
        out.body["verdict"] = "no rainbow colouring exists";
        out.text.push_back("no rainbow colouring exists (complete search, " + std::to_string(r.nodes) + " nodes)");
        return out;
    }
    out.body["verdict"] = "rainbow colouring exists";
    out.text.push_back("rainbow colouring exists (" + std::to_string(r.nodes) + " nodes)");
    if (r.witness) {
        const std::string text = io::format_colouring(*r.witness);
        out.body["witness"] = text;
        if (!witness_out.empty())
            write_witness(witness_out, "rainbow-colouring", {{"source", {{"tabulated", text}}}, {"t", num(t)}, {"p", num(p)}});
    }
    return out;
}

// ---------------------------------------------------------------------------
// hedgehog

Outcome run_hedgehog_build(std::size_t t, std::size_t k, std::size_t s, const std::string& hypergraph_out)
{
    Outcome out;
    if (!s) s = balanced_s(k);
    const auto h = build_hedgehog(t, k, s);
    out.body["t"] = num(t);
    out.body["k"] = num(k);
    out.body["s"] = num(s);
    out.body["vertices"] = num(h.vertex_count);
    out.body["edges"] = num(h.subsets.size());
    out.body["expected_vertices"] = num(Hedgehog::expected_vertices(t, k, s));
    out.body["expected_edges"] = num(Hedgehog::expected_edges(t, s));
    out.text.push_back("H_" + std::to_string(t) + "^(" + std::to_string(k) + ")(" + std::to_string(s) + "): " +
                       std::to_string(h.vertex_count) + " vertices, " + std::to_string(h.subsets.size()) + " edges");
    if (!hypergraph_out.empty()) io::write_file(hypergraph_out, io::format_hypergraph(h.hypergraph()));
    return out;
}

Outcome run_hedgehog_lift(const SourceOptions& src, std::size_t k, std::size_t t, std::size_t p_prime,
                          std::uint64_t trials, std::uint64_t seed)
{
    Outcome out;
    const auto s = src.load();
    const Colouring lifted = lift_colouring(s.colouring, k);
    out.body["base"] = colouring_summary(s.colouring);
    out.body["lifted"] = colouring_summary(lifted);
    out.text.push_back("lifted to " + std::to_string(k) + "-uniform, at most " + std::to_string(lifted.budget()) +
                       " colours");
    if (t) {
        const auto rep = verify_hedgehog_spread(lifted, t, p_prime, trials, seed);
        out.body["spread"] = report::to_json(rep);
        out.text.push_back(std::string(rep.pass ? "pass" : "fail") + ": " + std::to_string(rep.bodies) +
                           " bodies certified, " + std::to_string(rep.embeddings) + " embeddings sampled (min " +
                           std::to_string(rep.min_embedding_colours) + " colours)");
        if (!rep.pass) out.code = kFail;
    }
    return out;
}

struct MonoOptions {
    std::size_t t = 3, k = 1, n = 81;
    std::string colouring, constant;
    std::optional<std::uint64_t> random_seed;
    std::optional<std::size_t> host;
    double nodes = 0;
    std::string embedding_out;
};

Outcome run_find_mono(const MonoOptions& o)
{
    Outcome out;
    Json src;
    const std::size_t r = 2 * o.k + 1;
    const int given = !o.colouring.empty() + !o.constant.empty() + o.random_seed.has_value() + o.host.has_value();
    if (given != 1) throw PreconditionError("give exactly one of --colouring, --constant, --random-seed, --host");
    if (!o.colouring.empty()) src = {{"tabulated", read_text(o.colouring)}};
    else if (o.random_seed) src = random_source(r, o.n, 2, *o.random_seed);
    else if (o.host) src = {{"burr_erdos_host", num(*o.host)}};
    else if (o.constant == "red" || o.constant == "blue")
        src = {{"constant", {{"k", num(r)}, {"n", num(o.n)}, {"colour", o.constant == "red" ? "1" : "2"}}}};
    else throw PreconditionError("--constant must be red or blue");
    const Colouring c = build_source(src);
    const auto res = find_mono_hedgehog(c, o.t, o.nodes);
    out.body["result"] = report::to_json(res);
    for (const auto& st : res.stages) out.text.push_back((st.ok ? "ok   " : "FAIL ") + st.name + ": " + st.detail);
    if (!res.embedding) {
        out.code = kFail;
        out.text.push_back("no hedgehog: stage " + res.failed_stage + " failed");
        return out;
    }
    out.text.push_back(std::string("monochromatic ") + (res.colour == 0 ? "red" : "blue") + " hedgehog with body " +
                       join_nums(res.embedding->body));
    if (!o.embedding_out.empty())
        write_witness(o.embedding_out, "hedgehog-embedding", {{"source", src}, {"embedding", report::to_json(*res.embedding)}});
    return out;
}

Outcome run_degeneracy(const std::string& hypergraph, std::size_t burr_erdos_n)
{
    Outcome out;
    if (hypergraph.empty() == (burr_erdos_n == 0)) throw PreconditionError("give exactly one of --hypergraph, --burr-erdos");
    if (!hypergraph.empty()) {
        const auto h = io::parse_hypergraph(read_text(hypergraph));
        const auto d = degeneracy(h);
        out.body["degeneracy"] = num(d);
        out.text.push_back("degeneracy " + std::to_string(d));
        return out;
    }
    const auto g = burr_erdos_graph(burr_erdos_n);
    const auto peel = peel_incidences(g.h, g.peel_order());
    const auto peel_max = peel.empty() ? 0 : *std::max_element(peel.begin(), peel.end());
    const auto d = degeneracy(g.h);
    out.body["degeneracy"] = num(d);
    out.body["peel_order_max"] = num(peel_max);
    out.text.push_back("degeneracy " + std::to_string(d) + ", fixed peeling order max " + std::to_string(peel_max));
    return out;
}

Outcome run_piercing(const std::string& hypergraph, const std::string& a, std::optional<std::uint32_t> colour,
                     std::optional<std::size_t> sunflower_at, std::size_t petals, double nodes)
{
    Outcome out;
    const auto h = io::parse_hypergraph(read_text(hypergraph));
    if (sunflower_at) {
        const auto flower = extract_sunflower(h, *sunflower_at, petals, nodes);
        Json fj = Json::array();
        for (const auto& e : flower) fj.push_back(num_array(e));
        out.body["sunflower"] = {{"centre", num(*sunflower_at)}, {"petals", fj}};
        out.text.push_back(std::to_string(flower.size()) + " petals at " + std::to_string(*sunflower_at));
        for (const auto& e : flower) out.text.push_back("  " + join_nums(e));
        return out;
    }
    const auto res = piercing_number(h, a.empty() ? VertexList{} : indices_from(a), colour, nodes);
    out.body["piercing"] = report::to_json(res);
    out.text.push_back("tau = " + std::to_string(res.tau) + (res.exact ? "" : " (bounds only: " + std::to_string(res.lower) +
                                                                               ".." + std::to_string(res.upper) + ")"));
    if (!res.witness.empty()) out.text.push_back("hitting set " + join_nums(res.witness));
    return out;
}

Outcome run_burr_erdos(std::size_t n, const std::string& scan, std::optional<std::uint64_t> samples,
                       std::uint64_t seed, const std::string& hypergraph_out)
{
    Outcome out;
    const auto [g, host] = burr_erdos_pair(n);
    const auto peel = peel_incidences(g.h, g.peel_order());
    const auto peel_max = peel.empty() ? 0 : *std::max_element(peel.begin(), peel.end());
    const auto d = degeneracy(g.h);
    out.body["graph"] = {{"n", num(n)},     {"m", num(g.m)},          {"vertices", num(g.h.vertex_count)},
                         {"edges", num(g.h.edge_count())}, {"degeneracy", num(d)}, {"peel_order_max", num(peel_max)}};
    out.body["host"] = {{"vertices", num(host.vertex_count())}, {"parts", num(host.parts())},
                        {"part_size", num(host.part_size())}};
    out.text.push_back("H: " + std::to_string(g.h.vertex_count) + " vertices, " + std::to_string(g.h.edge_count()) +
                       " edges, degeneracy " + std::to_string(d));
    out.text.push_back("host: " + std::to_string(host.vertex_count()) + " vertices in " + std::to_string(host.parts()) +
                       " parts of " + std::to_string(host.part_size()));
    if (scan != "none" && scan != "five" && scan != "blue" && scan != "all")
        throw PreconditionError("--scan must be none, five, blue or all");
    auto record = [&](const std::string& key, const HostScan& s) {
        out.body[key] = report::to_json(s);
        out.text.push_back(key + ": " + std::to_string(s.checked) + " checked (" +
                           (s.sampled ? "sampled, seed " + std::to_string(s.seed) : std::string("exhaustive")) + "), " +
                           std::to_string(s.violations) + " violations");
        if (s.violations) out.code = kFail;
    };
    if (scan == "five" || scan == "all") record("five_sets", scan_host_five_sets(host, samples, seed));
    if (scan == "blue" || scan == "all") record("blue_rule", scan_host_blue_rule(host, samples, seed));
    if (!hypergraph_out.empty()) io::write_file(hypergraph_out, io::format_hypergraph(g.h));
    return out;
}

// ---------------------------------------------------------------------------
// presets

struct PresetOptions {
    std::size_t k = 0, t = 0, q = 0;
    std::uint64_t n = 0;
    std::uint64_t seed = 1, attempts = 200;
    std::uint64_t samples = 200;
    std::size_t set_size = 64;
    std::uint64_t trials = 1000;
};

struct PresetRun {
    Outcome out;
    Json stages = Json::array();

    void stage(const std::string& name, const std::string& detail, bool ok = true)
    {
        stages.push_back({{"stage", name}, {"ok", ok}, {"detail", detail}});
        out.text.push_back((ok ? "ok   " : "FAIL ") + name + ": " + detail);
    }
};

Colouring preset_base(PresetRun& run, std::size_t k, const PresetOptions& o, std::size_t p)
{
    const auto r = search_random_rainbow(k, o.n, static_cast<std::uint32_t>(o.q), o.t, p, o.attempts, o.seed);
    const auto fp = first_moment_params(k, o.q, o.t);
    if (!r.colouring)
        throw PreconditionError("no (" + std::to_string(o.t) + ";" + std::to_string(o.q) + "," + std::to_string(p) +
                                ")-rainbow colouring of K_" + std::to_string(o.n) + "^(" + std::to_string(k) +
                                ") found in " + std::to_string(o.attempts) + " attempts (first-moment threshold t0 = " +
                                std::to_string(fp.t0) + ")");
    const auto rep = verify_rainbow(*r.colouring, o.t, p);
    run.stage("base", "random (" + std::to_string(o.t) + ";" + std::to_string(o.q) + "," + std::to_string(p) +
                          ")-rainbow colouring of K_" + std::to_string(o.n) + "^(" + std::to_string(k) + "), seed " +
                          std::to_string(r.seed_used) + ", verified on " + std::to_string(rep.sets_checked) + " sets",
              rep.pass);
    run.out.body["base_seed"] = num(r.seed_used);
    return *r.colouring;
}

void preset_sample(PresetRun& run, const Colouring& c, const PresetOptions& o)
{
    const Universe u = c.universe();
    const std::uint64_t cap = u.count ? *u.count : o.set_size;
    SampleOptions so{o.samples, static_cast<std::size_t>(std::min<std::uint64_t>(o.set_size, cap)), o.seed};
    bool ok = true;
    const Json j = sample_witnesses(c, so, ok);
    run.out.body["sampled_witnesses"] = j;
    run.stage("witnesses", std::to_string(o.samples) + " random " + std::to_string(so.set_size) +
                               "-sets, outcomes " + j.at("outcomes").dump(), ok);
    if (!ok) run.out.code = kFail;
}

std::size_t defaulted(std::size_t v, std::size_t d) { return v ? v : d; }

Outcome preset_step_chain(PresetOptions o, bool five_colours)
{
    PresetRun run;
    o.k = defaulted(o.k, 4);
    if (o.k < 4) throw PreconditionError("the recipe needs k >= 4");
    // Each up1 step imposes p colours; the aliased variant keeps q and imposes p - 2.
    const std::size_t part_p = 5;
    const std::size_t base_p = five_colours ? 5 : 3;
    o.q = defaulted(o.q, five_colours ? 5 : 3);
    o.t = defaulted(o.t, five_colours ? 6 : 5);
    o.n = o.n ? o.n : 8;
    if (o.q < base_p) throw PreconditionError("q must be at least " + std::to_string(base_p));
    Colouring c = preset_base(run, 3, o, base_p);
    std::uint64_t budget = o.q;
    Json chain = Json::array({num(budget)});
    for (std::size_t i = 3; i + 1 <= o.k; ++i) {
        if (part_p > catalan(i))
            throw PreconditionError("p = 5 exceeds C_" + std::to_string(i) + " = " + std::to_string(catalan(i)));
        const Step st{five_colours ? Step::Kind::up1 : Step::Kind::up1b, i, part_p};
        c = tower_compose(c, {st});
        budget = five_colours ? 2 * budget + part_p - 2 : budget;
        chain.push_back(num(budget));
        run.stage(to_string(st), std::to_string(i + 1) + "-uniform on " + c.universe().size_string() +
                                     " vertices, colour budget " + std::to_string(c.budget()),
                  c.budget() == budget);
    }
    run.out.body["budget_chain"] = chain;
    run.out.body["colouring"] = colouring_summary(c);
    preset_sample(run, c, o);
    run.out.body["stages"] = run.stages;
    for (const auto& s : run.stages)
        if (!s.at("ok").get<bool>()) run.out.code = std::max(run.out.code, int{kFail});
    return run.out;
}

Outcome preset_hedgehog_lower(PresetOptions o)
{
    PresetRun run;
    o.k = defaulted(o.k, 1);
    const double kk = static_cast<double>(o.k + 1);
    const auto m = static_cast<std::size_t>(std::ceil(std::exp(1.0) * kk / std::log2(kk)));
    const double ratio = kk / static_cast<double>(m);
    const long steps = ratio >= 1 ? static_cast<long>(std::floor(std::log2(ratio))) : 0;
    run.out.body["m"] = num(m);
    run.out.body["up2_steps"] = num(steps);
    if (steps > 0)
        throw PreconditionError("k = " + std::to_string(o.k) + " needs floor(log2((k+1)/m)) = " + std::to_string(steps) +
                                " up2 steps; only the zero-step case runs at desk scale");
    const std::size_t r = 2 * o.k + 1, s = o.k + 1;
    const std::uint64_t lift_p = binomial(r, s);
    const std::size_t need = static_cast<std::size_t>(lift_p) + 1;
    o.q = defaulted(o.q, 30);
    o.t = defaulted(o.t, 4);
    o.n = o.n ? o.n : 10;
    run.stage("schedule", "zero up2 steps; base is " + std::to_string(s) + "-uniform with p = C(" + std::to_string(r) +
                              "," + std::to_string(s) + ") + 1 = " + std::to_string(need));
    const Colouring base = preset_base(run, s, o, need);
    const Colouring lifted = lift_colouring(base, r);
    run.stage("lift", std::to_string(r) + "-uniform set colouring, at most " + std::to_string(lifted.budget()) + " colours");
    const auto rep = verify_hedgehog_spread(lifted, o.t, 1, o.trials, o.seed);
    run.out.body["spread"] = report::to_json(rep);
    run.stage("spread", std::to_string(rep.bodies) + " bodies certified, " + std::to_string(rep.embeddings) +
                            " embeddings, min " + std::to_string(rep.min_embedding_colours) + " colours",
              rep.pass);
    if (!rep.pass) run.out.code = kFail;
    run.out.body["stages"] = run.stages;
    return run.out;
}

Outcome preset_lemma(PresetOptions o)
{
    PresetRun run;
    o.k = defaulted(o.k, 5);
    if (o.k < 5 || o.k > 13) throw PreconditionError("the recipe covers 5 <= k <= 13");
    const std::size_t p = 14;
    o.q = defaulted(o.q, 14);
    o.t = defaulted(o.t, 8);
    o.n = o.n ? o.n : 9;
    Colouring c = preset_base(run, 4, o, p);
    std::uint64_t budget = o.q;
    Json chain = Json::array({num(budget)});
    for (std::size_t i = 4; i + 1 < o.k; ++i) {
        const Step st{Step::Kind::up1, i, p};
        c = tower_compose(c, {st});
        budget = 2 * budget + p - 2;
        chain.push_back(num(budget));
        run.stage(to_string(st), std::to_string(i + 1) + "-uniform on " + c.universe().size_string() +
                                     " vertices, colour budget " + std::to_string(c.budget()),
                  c.budget() == budget);
    }
    run.out.body["budget_chain"] = chain;
    if (o.k > 5) preset_sample(run, c, o);
    const std::uint64_t lift_p = binomial(o.k, o.k - 1);
    if (lift_p + 1 > p)
        throw PreconditionError("lifting needs p'p + 1 = " + std::to_string(lift_p + 1) + " <= 14 colours");
    const Colouring lifted = lift_colouring(c, o.k);
    run.stage("lift", std::to_string(o.k) + "-uniform set colouring with s = " + std::to_string(o.k - 1) +
                          ", at most " + std::to_string(lifted.budget()) + " colours");
    try {
        const auto rep = verify_hedgehog_spread(lifted, o.t, 1, o.trials, o.seed);
        run.out.body["spread"] = report::to_json(rep);
        run.stage("spread", std::to_string(rep.bodies) + " bodies certified, " +
                                (rep.embeddings ? std::to_string(rep.embeddings) + " embeddings, min " +
                                                      std::to_string(rep.min_embedding_colours) + " colours"
                                                : "no embedding fits in the universe"),
                  rep.pass);
        if (!rep.pass) run.out.code = kFail;
    } catch (const BudgetExceeded& e) {
        run.stage("spread", std::string("infeasible: ") + e.what(), false);
        run.out.code = kError;
    }
    run.out.body["stages"] = run.stages;
    return run.out;
}

// ---------------------------------------------------------------------------
// validate

Outcome run_validate(const std::string& path)
{
    Outcome out;
    const Json j = Json::parse(read_text(path));
    const std::string type = j.at("type").get<std::string>();
    std::string why;
    bool ok = false;
    if (type == "extraction") {
        const auto s = report::read_array<Value>(j.at("sequence"));
        ok = validate_witness(s, pattern_from(j.at("left").get<std::string>()),
                              pattern_from(j.at("right").get<std::string>()),
                              report::witness_from_json(j.at("witness")), &why);
    } else if (type == "separated") {
        const auto s = report::read_array<Value>(j.at("sequence"));
        const std::size_t k = report::to_u64(j.at("k"));
        ok = true;
        std::size_t seen = 0;
        for (const auto& [perm, ix_json] : j.at("realizations").items()) {
            const IndexSet ix = report::read_array<std::size_t>(ix_json);
            const Pattern want = pattern_from(perm);
            ++seen;
            if (!is_valid_index_set(ix, s.size()) || !is_separated(ix) || pattern_of(values_at(s, ix)) != want) {
                ok = false;
                why = "realization of " + perm + " is not a separated copy";
                break;
            }
        }
        if (ok && seen != factorial(k)) {
            ok = false;
            why = std::to_string(seen) + " of " + std::to_string(factorial(k)) + " permutations realized";
        }
    } else if (type == "p-colour") {
        const Colouring c = build_source(j.at("source"));
        const std::size_t width = report::to_u64(j.at("width"));
        const auto vs = report::read_vertices(j.at("vertices"), width);
        ok = validate_p_colour_witness(c, vs, report::p_colour_witness_from_json(j.at("witness"), width), &why);
    } else if (type == "rainbow-violation") {
        const Colouring c = build_source(j.at("source"));
        const std::size_t p = report::to_u64(j.at("p")), t = report::to_u64(j.at("t"));
        const auto vs = report::read_vertices(j.at("vertices"), report::to_u64(j.at("width")));
        std::set<ColourId> colours;
        ok = vs.size() == t;
        if (ok)
            for_each_combination(t, c.uniformity(), [&](std::span<const std::size_t> pick) {
                Edge e;
                for (auto i : pick) e.push_back(vs[i]);
                colours.insert(c.colour(e));
            });
        ok = ok && colours.size() < p;
        if (!ok) why = "set does not violate the rainbow condition";
    } else if (type == "rainbow-colouring") {
        const Colouring c = build_source(j.at("source"));
        const auto rep = verify_rainbow(c, report::to_u64(j.at("t")), report::to_u64(j.at("p")));
        ok = rep.pass;
        if (!ok) why = "exhaustive verification found a violation";
    } else if (type == "hedgehog-embedding") {
        const Colouring c = build_source(j.at("source"));
        ok = validate_hedgehog_embedding(c, report::embedding_from_json(j.at("embedding")), &why);
    } else {
        throw Error("unknown witness type " + type);
    }
    out.body["type"] = type;
    out.body["valid"] = ok;
    if (!ok) {
        out.body["reason"] = why;
        out.code = kFail;
    }
    out.text.push_back(type + (ok ? ": valid" : ": INVALID (" + why + ")"));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stepping-up colourings, rainbow verification and hedgehog constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text", out_path;
    std::optional<double> budget;
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to a file");
    app.add_option("--budget", budget, "work budget (overrides RAMSEY_BUDGET)");

    std::function<Outcome()> action;
    auto on = [&](CLI::App* sub, std::function<Outcome()> fn) { sub->callback([&action, fn] { action = fn; }); };

    // seqpat
    std::string seq, seq_file, find, mode = "max-induced", left = "1 2", right = "2 1", witness_out;
    std::size_t enumerate_k = 0, k = 0, sep_k = 2;
    double exponent_base = 4.0;
    auto* pattern = app.add_subcommand("pattern", "pattern of a sequence, containment queries, property enumeration");
    pattern->add_option("--seq", seq, "inline sequence");
    pattern->add_option("--file", seq_file, "sequence file");
    pattern->add_option("--find", find, "pattern to look for");
    pattern->add_option("--mode", mode, "any, max-induced or separated")->capture_default_str();
    pattern->add_option("--enumerate", enumerate_k, "list left/right-property permutations of this length");
    on(pattern, [&] { return run_pattern(seq, seq_file, find, mode, enumerate_k); });

    auto* gensk = app.add_subcommand("gen-sk", "the max-induced (2,3,1)-free family S_k");
    gensk->add_option("--k", k, "level")->required();
    on(gensk, [&] { return run_gen_sk(k); });

    auto* extract = app.add_subcommand("extract", "max-induced L or R copy, or a long homogeneous subsequence");
    extract->add_option("--seq", seq, "inline sequence");
    extract->add_option("--file", seq_file, "sequence file");
    extract->add_option("--left", left, "L, a permutation with the left property")->capture_default_str();
    extract->add_option("--right", right, "R, a permutation with the right property")->capture_default_str();
    extract->add_option("--exponent-base", exponent_base, "recursion exponent base")->capture_default_str();
    extract->add_option("--witness-out", witness_out, "write a witness file");
    on(extract, [&] { return run_extract(seq, seq_file, left, right, exponent_base, witness_out); });

    auto* separated = app.add_subcommand("separated", "every permutation of [k] as a separated subsequence");
    separated->add_option("--seq", seq, "inline sequence");
    separated->add_option("--file", seq_file, "sequence file");
    separated->add_option("--k", sep_k, "permutation length")->capture_default_str();
    separated->add_option("--witness-out", witness_out, "write a witness file");
    on(separated, [&] { return run_separated(seq, seq_file, sep_k, witness_out); });

    // delta
    std::string vertices_file, realize_mi, realize_sep;
    std::size_t cube = 0;
    auto* delta_cmd = app.add_subcommand("delta", "delta-sequence of a vertex set and host realizations");
    delta_cmd->add_option("--vertices", vertices_file, "vertex set file");
    delta_cmd->add_option("--cube", cube, "use all of [2^m]");
    delta_cmd->add_option("--max-induced", realize_mi, "1-based index set to realize as a max-induced copy");
    delta_cmd->add_option("--separated", realize_sep, "1-based index set to realize as a separated copy");
    on(delta_cmd, [&] { return run_delta(vertices_file, cube, realize_mi, realize_sep); });

    // stepup and verify
    SourceOptions src;
    std::string edge, witness_set;
    bool trace = false;
    SampleOptions sample{0, 64, 0};
    auto* stepup = app.add_subcommand("stepup", "build a step-up tower, colour edges, extract p-colour witnesses");
    src.add(stepup);
    stepup->add_option("--edge", edge, "edge to colour (decimal vertices)");
    stepup->add_flag("--trace", trace, "print the colouring trace");
    stepup->add_option("--witness-set", witness_set, "vertex set file for witness extraction");
    stepup->add_option("--witness-out", witness_out, "write a witness file");
    stepup->add_option("--sample", sample.samples, "number of random sets for witness extraction");
    stepup->add_option("--set-size", sample.set_size, "size of each random set")->capture_default_str();
    stepup->add_option("--seed", sample.seed, "sampling seed")->capture_default_str();
    on(stepup, [&] { return run_stepup(src, edge, trace, witness_set, witness_out, sample); });

    std::size_t t = 0, p = 0;
    std::uint64_t samples = 0, seed = 0;
    std::string violation_out;
    auto* verify = app.add_subcommand("verify", "check the (t;q,p)-rainbow condition");
    src.add(verify);
    verify->add_option("--t", t, "clique size")->required();
    verify->add_option("--p", p, "colours required")->required();
    verify->add_option("--sample", samples, "sample this many t-sets instead of enumerating");
    verify->add_option("--seed", seed, "sampling seed")->capture_default_str();
    verify->add_option("--violation-out", violation_out, "write the violating set as a witness file");
    on(verify, [&] { return run_verify(src, t, p, samples, seed, violation_out); });

    std::uint64_t n = 0, attempts = 100;
    std::uint32_t q = 0;
    std::string colouring_out;
    auto* search = app.add_subcommand("search-random", "seeded random search for a rainbow colouring");
    search->add_option("--k", k, "uniformity")->required();
    search->add_option("--n", n, "vertices")->required();
    search->add_option("--q", q, "colours")->required();
    search->add_option("--t", t, "clique size")->required();
    search->add_option("--p", p, "colours required")->required();
    search->add_option("--attempts", attempts, "attempts")->capture_default_str();
    search->add_option("--seed", seed, "first seed")->capture_default_str();
    search->add_option("--colouring-out", colouring_out, "write the colouring");
    search->add_option("--witness-out", witness_out, "write a witness file");
    on(search, [&] { return run_search_random(k, n, q, t, p, attempts, seed, colouring_out, witness_out); });

    double nodes = 0;
    auto* exact = app.add_subcommand("exact-oracle", "complete search for a rainbow colouring");
    exact->add_option("--k", k, "uniformity")->required();
    exact->add_option("--n", n, "vertices")->required();
    exact->add_option("--q", q, "colours")->required();
    exact->add_option("--t", t, "clique size")->required();
    exact->add_option("--p", p, "colours required")->required();
    exact->add_option("--nodes", nodes, "node budget (default: work budget)");
    exact->add_option("--witness-out", witness_out, "write the colouring as a witness file");
    on(exact, [&] { return run_exact(k, n, q, t, p, nodes, witness_out); });

    // hedgehog
    auto* hedgehog = app.add_subcommand("hedgehog", "hedgehogs, lifting, the monochromatic finder and piercing");
    hedgehog->require_subcommand(1);
    std::size_t s = 0, p_prime = 1, burr_n = 0, petals = 0;
    std::uint64_t trials = 1000;
    std::string hypergraph_out, hypergraph, a_set;
    std::optional<std::uint32_t> colour;
    std::optional<std::size_t> sunflower_at;

    auto* build = hedgehog->add_subcommand("build", "explicit H_t^(k)(s)");
    build->add_option("--t", t, "body size")->required();
    build->add_option("--k", k, "uniformity")->required();
    build->add_option("--s", s, "body edge size (default (k+1)/2)");
    build->add_option("--out-hypergraph", hypergraph_out, "write the hypergraph");
    on(build, [&] { return run_hedgehog_build(t, k, s, hypergraph_out); });

    auto* lift = hedgehog->add_subcommand("lift", "set colouring of K_n^(k) from an s-uniform base");
    src.add(lift);
    lift->add_option("--k", k, "target uniformity")->required();
    lift->add_option("--t", t, "body size for the spread check (0 skips it)");
    lift->add_option("--p-prime", p_prime, "p'")->capture_default_str();
    lift->add_option("--trials", trials, "random embeddings")->capture_default_str();
    lift->add_option("--seed", seed, "embedding seed")->capture_default_str();
    on(lift, [&] { return run_hedgehog_lift(src, k, t, p_prime, trials, seed); });

    MonoOptions mono;
    std::uint64_t mono_seed = 0;
    std::size_t host_n = 0;
    auto* find_mono = hedgehog->add_subcommand("find-mono", "monochromatic hedgehog in a 2-colouring of K_n^(2k+1)");
    find_mono->add_option("--t", mono.t, "body size")->capture_default_str();
    find_mono->add_option("--k", mono.k, "hedgehog parameter (uniformity 2k+1)")->capture_default_str();
    find_mono->add_option("--n", mono.n, "vertices")->capture_default_str();
    find_mono->add_option("--colouring", mono.colouring, "tabulated 2-colouring file");
    find_mono->add_option("--constant", mono.constant, "red or blue");
    auto* seed_opt = find_mono->add_option("--random-seed", mono_seed, "uniform random 2-colouring");
    auto* host_opt = find_mono->add_option("--host", host_n, "Burr-Erdos host colouring for this n");
    find_mono->add_option("--nodes", mono.nodes, "node budget");
    find_mono->add_option("--embedding-out", mono.embedding_out, "write the embedding as a witness file");
    on(find_mono, [&] {
        if (seed_opt->count()) mono.random_seed = mono_seed;
        if (host_opt->count()) mono.host = host_n;
        return run_find_mono(mono);
    });

    auto* degen = hedgehog->add_subcommand("degeneracy", "degeneracy of a hypergraph");
    degen->add_option("--hypergraph", hypergraph, "hypergraph file");
    degen->add_option("--burr-erdos", burr_n, "use the Burr-Erdos graph for this n");
    on(degen, [&] { return run_degeneracy(hypergraph, burr_n); });

    std::uint32_t colour_value = 0;
    std::size_t sunflower_value = 0;
    auto* piercing = hedgehog->add_subcommand("piercing", "piercing number of a link, or a sunflower");
    piercing->add_option("--hypergraph", hypergraph, "hypergraph file")->required();
    piercing->add_option("--a", a_set, "the set A (vertex ids)");
    auto* colour_opt = piercing->add_option("--colour", colour_value, "restrict to edges of this colour");
    auto* sun_opt = piercing->add_option("--sunflower-at", sunflower_value, "extract a sunflower at this vertex");
    piercing->add_option("--petals", petals, "number of petals")->capture_default_str();
    piercing->add_option("--nodes", nodes, "node budget");
    on(piercing, [&] {
        if (colour_opt->count()) colour = colour_value;
        if (sun_opt->count()) sunflower_at = sunflower_value;
        return run_piercing(hypergraph, a_set, colour, sunflower_at, petals, nodes);
    });

    std::string scan = "all";
    std::uint64_t host_samples = 0;
    auto add_burr_erdos = [&](CLI::App* parent) {
        auto* be = parent->add_subcommand("burr-erdos", "Burr-Erdos hypergraph and host colouring");
        be->add_option("--n", burr_n, "n, divisible by 4")->required();
        be->add_option("--scan", scan, "none, five, blue or all")->capture_default_str();
        auto* samples_opt = be->add_option("--samples", host_samples, "sample this many subsets instead of enumerating");
        be->add_option("--seed", seed, "sampling seed")->capture_default_str();
        be->add_option("--out-hypergraph", hypergraph_out, "write the hypergraph");
        on(be, [&, samples_opt] {
            std::optional<std::uint64_t> smp;
            if (samples_opt->count()) smp = host_samples;
            return run_burr_erdos(burr_n, scan, smp, seed, hypergraph_out);
        });
    };
    add_burr_erdos(hedgehog);
    add_burr_erdos(&app);

    // presets
    PresetOptions po;
    std::string preset_name;
    auto* preset = app.add_subcommand("preset", "end-to-end composition recipes at desk scale");
    preset->add_option("name", preset_name, "cor-five-colours, cor-three-three, hedgehog-lower or lemma-k5-13")
        ->required()
        ->check(CLI::IsMember({"cor-five-colours", "cor-three-three", "hedgehog-lower", "lemma-k5-13"}));
    preset->add_option("--k", po.k, "target parameter k");
    preset->add_option("--t", po.t, "base clique size");
    preset->add_option("--n", po.n, "base vertices");
    preset->add_option("--q", po.q, "base colours");
    preset->add_option("--seed", po.seed, "seed")->capture_default_str();
    preset->add_option("--attempts", po.attempts, "base search attempts")->capture_default_str();
    preset->add_option("--samples", po.samples, "sampled witness sets")->capture_default_str();
    preset->add_option("--set-size", po.set_size, "size of sampled sets")->capture_default_str();
    preset->add_option("--trials", po.trials, "random hedgehog embeddings")->capture_default_str();
    on(preset, [&] {
        if (preset_name == "cor-five-colours") return preset_step_chain(po, true);
        if (preset_name == "cor-three-three") return preset_step_chain(po, false);
        if (preset_name == "hedgehog-lower") return preset_hedgehog_lower(po);
        return preset_lemma(po);
    });

    std::string witness_file;
    auto* validate = app.add_subcommand("validate", "re-validate a witness file");
    validate->add_option("witness", witness_file, "witness file")->required();
    on(validate, [&] { return run_validate(witness_file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kError;
    }

    // The innermost subcommand selected.
    const CLI::App* leaf = &app;
    std::string command;
    while (!leaf->get_subcommands().empty()) {
        leaf = leaf->get_subcommands().front();
        command += (command.empty() ? "" : " ") + leaf->get_name();
    }
    if (budget) setenv("RAMSEY_BUDGET", std::to_string(*budget).c_str(), 1);
    Json config = capture_config(leaf);
    config["budget"] = num(static_cast<std::uint64_t>(work_budget()));

    Outcome result;
    try {
        result = action();
    } catch (const ParseError& e) {
        result.code = kError;
        result.body["error"] = e.what();
        result.text.push_back(std::string("error: ") + e.what());
    } catch (const std::exception& e) {
        result.code = kError;
        result.body = Json::object();
        result.body["error"] = e.what();
        result.text.push_back(std::string("error: ") + e.what());
    }

    std::string rendered;
    if (format == "json") {
        Json j = report::envelope(command, config);
        j["exit"] = result.code;
        for (auto& [key, v] : result.body.items()) j[key] = v;
        rendered = j.dump(2) + "\n";
    } else {
        for (const auto& line : result.text) rendered += line + "\n";
    }
    if (!out_path.empty()) {
        io::write_file(out_path, rendered);
    } else {
        (result.code == kError && format == "text" ? std::cerr : std::cout) << rendered;
    }
    return result.code;
}
