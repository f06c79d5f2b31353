#include "flagfold/serialize.hpp"

#include <nlohmann/json.hpp>

namespace flagfold {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = json::array();
    for (Vertex v : g.vertices()) j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back(json::array({u, v}));
    json labels = json::object();
    for (Vertex v : g.vertices())
        if (auto name = g.label(v)) labels[std::to_string(v)] = *name;
    if (!labels.empty()) j["labels"] = labels;
    return j;
}

Graph graph_from_json(const json& j) {
    VertexSet vs;
    for (const auto& v : j.at("vertices")) vs.insert(v.get<Vertex>());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw GraphError("malformed edge in JSON graph");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    Graph out = Graph::from_vertex_set(vs, edges);
    if (j.contains("labels"))
        for (const auto& [key, value] : j.at("labels").items())
            out.set_label(std::stoi(key), value.get<std::string>());
    return out;
}

json profile_to_json(const HomologyProfile& p) {
    json j;
    j["reduced"] = p.reduced;
    j["betti"] = p.betti;
    j["torsion"] = json::array();
    for (const auto& [d, f] : p.torsion)
        j["torsion"].push_back(json::array({d, f.convert_to<long long>()}));
    return j;
}

HomologyProfile profile_from_json(const json& j) {
    HomologyProfile p;
    p.reduced = j.at("reduced").get<bool>();
    p.betti = j.at("betti").get<std::vector<int>>();
    for (const auto& t : j.at("torsion"))
        p.torsion.emplace_back(t.at(0).get<int>(), BigInt(t.at(1).get<long long>()));
    return p;
}

namespace {

json move_to_json(const IMove& m) {
    json j;
    j["op"] = m.op_name();
    switch (m.op) {
        case IMove::Op::I1:
        case IMove::Op::SDel:
            j["args"] = json::array({m.v});
            break;
        case IMove::Op::I2:
            j["args"] = json::array();
            for (Vertex v : m.glue_set) j["args"].push_back(v);
            break;
        case IMove::Op::I3:
        case IMove::Op::I4:
            j["args"] = json::array({m.v, m.w});
            break;
    }
    if (m.cert) j["cert"] = verdict_to_json(*m.cert);
    return j;
}

IMove move_from_json(const json& j) {
    const std::string op = j.at("op").get<std::string>();
    const auto& args = j.at("args");
    IMove m = [&] {
        if (op == "I1") return IMove::delete_vertex(args.at(0).get<Vertex>());
        if (op == "S-") return IMove::s_delete(args.at(0).get<Vertex>());
        if (op == "I2") {
            VertexSet s;
            for (const auto& a : args) s.insert(a.get<Vertex>());
            return IMove::glue_vertex(std::move(s));
        }
        if (op == "I3") return IMove::delete_edge(args.at(0).get<Vertex>(), args.at(1).get<Vertex>());
        if (op == "I4") return IMove::glue_edge(args.at(0).get<Vertex>(), args.at(1).get<Vertex>());
        throw GraphError("unknown move op '" + op + "'");
    }();
    if (j.contains("cert"))
        m.cert = std::make_shared<Verdict>(verdict_from_json(j.at("cert")));
    return m;
}

}  // namespace

json verdict_to_json(const Verdict& v) {
    json j;
    switch (v.kind) {
        case Verdict::Kind::Yes: j["kind"] = "yes"; break;
        case Verdict::Kind::No: j["kind"] = "no"; break;
        case Verdict::Kind::Unknown: j["kind"] = "unknown"; break;
    }
    if (v.certificate) j["certificate"] = trace_to_json(*v.certificate);
    if (v.witness) j["witness"] = profile_to_json(*v.witness);
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    return j;
}

Verdict verdict_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    Verdict v = kind == "yes"       ? Verdict{Verdict::Kind::Yes, std::nullopt, std::nullopt, {}}
                : kind == "no"      ? Verdict{Verdict::Kind::No, std::nullopt, std::nullopt, {}}
                : kind == "unknown" ? Verdict::make_unknown("")
                                    : throw GraphError("unknown verdict kind '" + kind + "'");
    if (j.contains("certificate")) v.certificate = trace_from_json(j.at("certificate"));
    if (j.contains("witness")) v.witness = profile_from_json(j.at("witness"));
    if (j.contains("diagnostics")) v.diagnostics = j.at("diagnostics").get<std::string>();
    return v;
}

json trace_to_json(const ITrace& t) {
    json j;
    j["start"] = graph_to_json(t.start);
    j["moves"] = json::array();
    for (const auto& m : t.moves) j["moves"].push_back(move_to_json(m));
    j["end"] = graph_to_json(t.end);
    return j;
}

ITrace trace_from_json(const json& j) {
    ITrace t;
    t.start = graph_from_json(j.at("start"));
    for (const auto& m : j.at("moves")) t.moves.push_back(move_from_json(m));
    t.end = graph_from_json(j.at("end"));
    return t;
}

}  // namespace flagfold
