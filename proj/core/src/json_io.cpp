#include "updraw/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace updraw {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

static json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

PlaneStGraph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw input_error("graph JSON must be an object");
    for (const char* key : {"vertices", "edges", "rotation", "source", "sink"})
        if (!j.contains(key)) throw input_error(std::string("graph JSON missing \"") + key + "\"");

    PlaneStGraph g;
    std::map<std::string, VertexId> vid;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw input_error("vertex names must be strings");
        std::string name = v.get<std::string>();
        if (vid.count(name)) throw input_error("duplicate vertex name: " + name);
        vid[name] = g.add_vertex(name);
    }
    std::map<std::string, EdgeId> eid;
    for (const auto& e : j["edges"]) {
        for (const char* key : {"id", "tail", "head"})
            if (!e.contains(key) || !e[key].is_string())
                throw input_error("each edge needs string fields id, tail, head");
        std::string id = e["id"], tail = e["tail"], head = e["head"];
        if (eid.count(id)) throw input_error("duplicate edge id: " + id);
        if (!vid.count(tail) || !vid.count(head))
            throw input_error("edge " + id + " references unknown vertex");
        /* rotations are filled from the rotation object below */
        EdgeId k = (EdgeId)g.edges.size();
        g.edges.push_back({vid[tail], vid[head], EdgeKind::Real, true});
        eid[id] = k;
    }
    if (!j["rotation"].is_object()) throw input_error("\"rotation\" must be an object");
    for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
        if (!vid.count(it.key())) throw input_error("rotation lists unknown vertex " + it.key());
        VertexId v = vid[it.key()];
        for (const auto& en : it.value()) {
            if (!en.is_string() || !eid.count(en.get<std::string>()))
                throw input_error("rotation of " + it.key() + " references unknown edge");
            g.rotation[v].push_back(eid[en.get<std::string>()]);
        }
    }
    std::string s = j["source"], t = j["sink"];
    if (!vid.count(s) || !vid.count(t)) throw input_error("source or sink not among vertices");
    g.source = vid[s];
    g.sink = vid[t];
    if (j.contains("outer")) {
        for (const auto& en : j["outer"]) {
            if (!en.is_string() || !eid.count(en.get<std::string>()))
                throw input_error("outer walk references unknown edge");
            g.outer_hint.push_back(eid[en.get<std::string>()]);
        }
    }
    return g;
}

std::string graph_to_json(const PlaneStGraph& g) {
    ordered j;
    j["vertices"] = ordered::array();
    for (const auto& n : g.names) j["vertices"].push_back(n);
    auto edge_name = [&](EdgeId e) { return "e" + std::to_string(e); };
    j["edges"] = ordered::array();
    for (EdgeId e = 0; e < (EdgeId)g.edges.size(); ++e) {
        if (!g.edges[e].alive) continue;
        ordered o;
        o["id"] = edge_name(e);
        o["tail"] = g.names[g.edges[e].tail];
        o["head"] = g.names[g.edges[e].head];
        j["edges"].push_back(o);
    }
    j["rotation"] = ordered::object();
    for (VertexId v = 0; v < g.n(); ++v) {
        ordered arr = ordered::array();
        for (EdgeId e : g.rotation[v]) arr.push_back(edge_name(e));
        j["rotation"][g.names[v]] = arr;
    }
    j["source"] = g.names[g.source];
    j["sink"] = g.names[g.sink];
    if (!g.outer_hint.empty()) {
        ordered arr = ordered::array();
        for (EdgeId e : g.outer_hint) arr.push_back(edge_name(e));
        j["outer"] = arr;
    }
    return j.dump(2) + "\n";
}

Drawing drawing_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw input_error("drawing JSON needs \"vertices\" and \"edges\"");
    Drawing d;
    std::map<std::string, int> vid;
    for (auto it = j["vertices"].begin(); it != j["vertices"].end(); ++it) {
        const auto& p = it.value();
        if (!p.is_array() || p.size() != 2)
            throw input_error("vertex position must be [x, y]");
        vid[it.key()] = (int)d.vertices.size();
        d.vertices.push_back({it.key(), {p[0].get<double>(), p[1].get<double>()}});
    }
    for (const auto& e : j["edges"]) {
        if (!e.contains("tail") || !e.contains("head"))
            throw input_error("each drawn edge needs tail and head");
        std::string tail = e["tail"], head = e["head"];
        if (!vid.count(tail) || !vid.count(head))
            throw input_error("drawn edge references unknown vertex");
        Drawing::Edge de;
        de.tail = vid[tail];
        de.head = vid[head];
        if (e.contains("bends")) {
            for (const auto& b : e["bends"]) {
                if (!b.is_array() || b.size() != 2) throw input_error("bend must be [x, y]");
                de.bends.push_back({b[0].get<double>(), b[1].get<double>()});
            }
        }
        d.edges.push_back(std::move(de));
    }
    return d;
}

std::string drawing_to_json(const Drawing& d) {
    ordered j;
    j["vertices"] = ordered::object();
    for (const auto& v : d.vertices) j["vertices"][v.name] = {v.pos.x, v.pos.y};
    j["edges"] = ordered::array();
    for (const auto& e : d.edges) {
        ordered o;
        o["tail"] = d.vertices[e.tail].name;
        o["head"] = d.vertices[e.head].name;
        o["bends"] = ordered::array();
        for (const Pt& b : e.bends) o["bends"].push_back({b.x, b.y});
        j["edges"].push_back(o);
    }
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

} // namespace updraw
