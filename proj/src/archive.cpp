#include <arrowing/archive.hpp>
#include <arrowing/enumerate.hpp>
#include <arrowing/error.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace arrowing {

namespace {

const char* status_text(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "good";
    case SearchStatus::none:
        return "none";
    case SearchStatus::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

SearchStatus status_from_text(const std::string& s)
{
    if (s == "good")
        return SearchStatus::found;
    if (s == "none")
        return SearchStatus::none;
    if (s == "budget_exceeded")
        return SearchStatus::budget_exceeded;
    fail(ErrorCode::syntax, "unknown query status '" + s + "'");
}

Graph graph_field(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_string())
        fail(ErrorCode::syntax, std::string("gadget record lacks '") + key + "'");
    return parse_edge_list(j[key].get<std::string>());
}

} // namespace

std::string pattern_name(const Graph& g)
{
    std::size_t n = g.vertex_count();
    std::size_t m = g.edge_count();
    auto same = [&](const Graph& other) {
        return other.vertex_count() == n && other.edge_count() == m &&
            (n > max_canonical_vertices ? other == g : is_isomorphic(other, g));
    };
    if (n >= 1 && same(complete_graph(n)))
        return "k" + std::to_string(n);
    if (n >= 3 && same(cycle_graph(n)))
        return "c" + std::to_string(n);
    if (n >= 2 && same(star_graph(n - 1)) && n != 3)
        return "k1_" + std::to_string(n - 1);
    if (n >= 1 && same(path_graph(n)))
        return "p" + std::to_string(n);
    if (n >= 3 && same(complete_minus_edge(n)))
        return "j" + std::to_string(n);
    if (n >= 4 && same(tailed_complete(n - 1)))
        return "tk" + std::to_string(n - 1);
    auto text = to_edge_list(n <= max_canonical_vertices ? canonical_graph(g) : g);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "g%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

nlohmann::json gadget_to_json(const Gadget& g)
{
    nlohmann::json j;
    j["kind"] = gadget_kind_name(g.kind);
    j["f"] = pattern_name(g.f);
    j["h"] = pattern_name(g.h);
    j["f_graph"] = to_edge_list(g.f);
    j["h_graph"] = to_edge_list(g.h);
    j["graph"] = to_edge_list(g.graph);
    j["roles"] = g.roles;
    nlohmann::json templates = nlohmann::json::object();
    for (const auto& [name, colors] : g.templates) {
        auto red = nlohmann::json::array();
        for (EdgeId id = 0; id < colors.size(); ++id)
            if (colors[id] == Color::red)
                red.push_back({g.graph.edge(id).u, g.graph.edge(id).v});
        templates[name] = red;
    }
    j["templates"] = templates;
    auto parts = nlohmann::json::array();
    for (const auto& p : g.parts)
        parts.push_back({{"kind", p.kind}, {"anchor", p.anchor}, {"vertices", p.vertices}});
    j["parts"] = parts;
    j["intended_copies"] = g.intended_copies;
    j["construction"] = g.construction;
    j["verified"] = g.verified;
    auto queries = nlohmann::json::array();
    for (const auto& q : g.log.queries)
        queries.push_back({{"name", q.name}, {"expect_good", q.expect_good}, {"gating", q.gating},
            {"status", status_text(q.status)}, {"nodes", q.nodes}});
    j["log"] = {{"queries", queries}, {"total_nodes", g.log.total_nodes()}, {"digest", g.log.digest()}};
    return j;
}

Gadget gadget_from_json(const nlohmann::json& j)
{
    try {
        Gadget g;
        g.kind = gadget_kind_from_name(j.at("kind").get<std::string>());
        g.f = graph_field(j, "f_graph");
        g.h = graph_field(j, "h_graph");
        g.graph = graph_field(j, "graph");
        g.roles = j.at("roles").get<std::map<std::string, std::vector<Vertex>>>();
        for (const auto& [name, red] : j.at("templates").items()) {
            std::vector<Color> colors(g.graph.edge_count(), Color::blue);
            for (const auto& e : red)
                colors[g.graph.edge_id(e.at(0).get<Vertex>(), e.at(1).get<Vertex>())] = Color::red;
            g.templates[name] = colors;
        }
        for (const auto& p : j.at("parts"))
            g.parts.push_back(
                {p.at("kind").get<std::string>(), p.at("vertices").get<std::vector<Vertex>>(), p.at("anchor").get<Vertex>()});
        g.intended_copies = j.at("intended_copies").get<std::uint64_t>();
        g.construction = j.at("construction").get<std::string>();
        g.verified = j.at("verified").get<bool>();
        for (const auto& q : j.at("log").at("queries"))
            g.log.queries.push_back({q.at("name").get<std::string>(), q.at("expect_good").get<bool>(),
                q.at("gating").get<bool>(), status_from_text(q.at("status").get<std::string>()),
                q.at("nodes").get<std::uint64_t>()});
        for (const auto& [name, vs] : g.roles)
            for (auto v : vs)
                if (v >= g.graph.vertex_count())
                    fail(ErrorCode::invalid_graph, "role '" + name + "' is outside the gadget graph");
        return g;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::syntax, std::string("malformed gadget record: ") + e.what());
    }
}

std::string archive_file_name(const Graph& f, const Graph& h, GadgetKind kind)
{
    return pattern_name(f) + "__" + pattern_name(h) + "__" + std::string(gadget_kind_name(kind)) + ".json";
}

std::string store_gadget(const std::string& dir, const Gadget& gadget)
{
    std::filesystem::create_directories(dir);
    auto path = (std::filesystem::path(dir) / archive_file_name(gadget.f, gadget.h, gadget.kind)).string();
    write_text_file(path, gadget_to_json(gadget).dump(2) + "\n");
    return path;
}

std::optional<Gadget> load_gadget(const std::string& dir, const Graph& f, const Graph& h, GadgetKind kind,
    bool reverify, SearchBudget budget)
{
    auto path = std::filesystem::path(dir) / archive_file_name(f, h, kind);
    if (!std::filesystem::exists(path))
        return std::nullopt;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path.string()));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::syntax, path.string() + ": " + e.what());
    }
    auto g = gadget_from_json(j);
    if (g.kind != kind || !(g.f == f) || !(g.h == h))
        fail(ErrorCode::precondition, path.string() + " does not hold the requested gadget");
    if (reverify) {
        auto stored = g.templates;
        verify_gadget(g, budget);
        for (auto& [name, colors] : stored)
            g.templates.try_emplace(name, std::move(colors));
    }
    return g;
}

} // namespace arrowing
