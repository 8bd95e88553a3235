#include "tricoord/builtins.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tricoord {

namespace {

using nlohmann::json;

EdgeVector ev(std::initializer_list<long> xs) { return EdgeVector(xs.begin(), xs.end()); }

Triangulation make_s11() {
    return Triangulation::from_file_labels({{1, 2, 3}, {-1, -2, -3}});
}

Triangulation make_s04() {
    return Triangulation::from_file_labels({{1, 4, -2}, {2, 6, -3}, {3, -5, -1}, {5, -6, -4}});
}

Triangulation make_s12() {
    return Triangulation::from_file_labels({{1, 4, -5}, {5, -1, -3}, {2, 3, -6}, {6, -2, -4}});
}

GeneratorTable make_s11_table() {
    const Triangulation base = make_s11();
    // Twists about the (0,1,1) and (1,0,1) curves; together they satisfy the
    // braid relation, which pins their relative handedness.
    MappingClassPath a{Path(base, {Flip{1}, Reorder{{0, 2, 1}}})};
    MappingClassPath b{Path(base, {Reorder{{2, 1, 0}}, Flip{0}})};
    return GeneratorTable(base, {{"a", {a, ev({0, 1, 1})}}, {"b", {b, ev({1, 0, 1})}}});
}

GeneratorTable make_s04_table() {
    const Triangulation base = make_s04();
    // Half-twists about the curve separating marked points {1,2} from {3,4}
    // and the one separating {2,3} from {1,4}; they satisfy the braid
    // relation and their squares are full twists.
    MappingClassPath a{Path(base, {Flip{1}, Flip{4}, Reorder{{0, 2, 4, 1, 3, 5}}})};
    MappingClassPath b{Path(base, {Flip{0}, Flip{5}, Reorder{{1, 0, 3, 2, 5, 4}}})};
    return GeneratorTable(base,
                          {{"a", {a, ev({0, 1, 1, 1, 1, 0})}}, {"b", {b, ev({1, 1, 0, 0, 1, 1})}}});
}

GeneratorTable make_s12_table() {
    const Triangulation base = make_s12();
    // a: twist about a nonseparating curve. b: twist about the curve
    // isolating the two marked points, built from the two-chain relation
    // (t1 t2 t1)^2 = boundary twist on the complementary one-holed torus;
    // it commutes with a and fixes every curve disjoint from it.
    MappingClassPath a{Path(base, {Flip{1}, Reorder{{0, 5, 2, 3, 4, 1}}})};
    const std::vector<Move> half{
        Flip{1},   Reorder{{0, 5, 2, 3, 4, 1}},  // t1 = a
        Reorder{{0, 1, 2, 3, 5, 4}}, Flip{5}, Flip{4}, Flip{3}, Flip{2},  // t2 (reversed twist)
        Flip{1},   Reorder{{0, 5, 2, 3, 4, 1}},  // t1 again
    };
    std::vector<Move> chain = half;
    chain.insert(chain.end(), half.begin(), half.end());
    MappingClassPath b{Path(base, std::move(chain))};
    return GeneratorTable(base,
                          {{"a", {a, ev({0, 1, 0, 0, 0, 1})}}, {"b", {b, ev({0, 2, 2, 2, 2, 2})}}});
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool looks_like_path(const std::string& spec) {
    return spec.find('/') != std::string::npos ||
           (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json");
}

} // namespace

std::vector<std::string> builtin_surface_names() { return {"S_0_4", "S_1_1", "S_1_2"}; }

Triangulation builtin_surface(const std::string& name) {
    if (name == "S_1_1") return make_s11();
    if (name == "S_0_4") return make_s04();
    if (name == "S_1_2") return make_s12();
    throw std::invalid_argument("unknown builtin surface: " + name);
}

GeneratorTable builtin_table(const std::string& name) {
    if (name == "S_1_1") return make_s11_table();
    if (name == "S_0_4") return make_s04_table();
    if (name == "S_1_2") return make_s12_table();
    throw std::invalid_argument("no builtin generator table for: " + name);
}

Triangulation parse_surface_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("faces")) throw std::invalid_argument("surface file: missing \"faces\"");
    std::vector<std::array<long, 3>> faces;
    for (const auto& f : j.at("faces")) {
        if (!f.is_array() || f.size() != 3)
            throw std::invalid_argument("surface file: each face needs exactly 3 sides");
        faces.push_back({f[0].get<long>(), f[1].get<long>(), f[2].get<long>()});
    }
    return Triangulation::from_file_labels(faces);
}

std::string surface_to_json(const Triangulation& t, const std::string& name) {
    json j;
    j["name"] = name;
    json faces = json::array();
    for (const auto& f : t.to_file_labels()) faces.push_back({f[0], f[1], f[2]});
    j["faces"] = faces;
    return j.dump(2) + "\n";
}

GeneratorTable parse_generators_json(const std::string& text, const Triangulation& base) {
    json j = json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("generator file: expected an object");
    std::vector<std::pair<std::string, GeneratorEntry>> entries;
    for (const auto& [name, moves_json] : j.items()) {
        std::vector<Move> moves;
        for (const auto& m : moves_json) {
            if (m.contains("flip"))
                moves.push_back(Flip{m.at("flip").get<int>()});
            else if (m.contains("reorder"))
                moves.push_back(Reorder{m.at("reorder").get<std::vector<int>>()});
            else
                throw std::invalid_argument("generator file: move must be a flip or a reorder");
        }
        entries.push_back({name, GeneratorEntry{MappingClassPath{Path(base, std::move(moves))},
                                                std::nullopt}});
    }
    return GeneratorTable(base, std::move(entries));
}

std::string generators_to_json(const GeneratorTable& table) {
    json j = json::object();
    for (const auto& [name, entry] : table.entries()) {
        json moves = json::array();
        for (const auto& m : entry.path.path().moves()) {
            if (const Flip* f = std::get_if<Flip>(&m))
                moves.push_back({{"flip", f->edge}});
            else
                moves.push_back({{"reorder", std::get<Reorder>(m).perm}});
        }
        j[name] = moves;
    }
    return j.dump(2) + "\n";
}

Triangulation resolve_surface(const std::string& spec) {
    if (looks_like_path(spec)) return parse_surface_json(read_file(spec));
    if (const char* dir = std::getenv("TRICOORD_DATA")) {
        const auto p = std::filesystem::path(dir) / (spec + ".surface.json");
        if (std::filesystem::exists(p)) return parse_surface_json(read_file(p.string()));
    }
    return builtin_surface(spec);
}

GeneratorTable resolve_table(const std::string& spec, const Triangulation& base) {
    if (looks_like_path(spec)) return parse_generators_json(read_file(spec), base);
    if (const char* dir = std::getenv("TRICOORD_DATA")) {
        const auto p = std::filesystem::path(dir) / (spec + ".gens.json");
        if (std::filesystem::exists(p)) return parse_generators_json(read_file(p.string()), base);
    }
    GeneratorTable t = builtin_table(spec);
    if (!(t.base() == base))
        throw std::invalid_argument("generator table " + spec + " does not match the surface");
    return t;
}

EdgeVector parse_vector(const std::string& text, int zeta) {
    EdgeVector v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        std::size_t end = tok.size();
        while (end > pos && std::isspace(static_cast<unsigned char>(tok[end - 1]))) --end;
        if (pos == end) throw std::invalid_argument("vector: empty entry");
        v.push_back(BigInt(tok.substr(pos, end - pos)));
    }
    if (v.size() != static_cast<std::size_t>(zeta)) {
        std::ostringstream os;
        os << "vector has " << v.size() << " entries, surface has zeta = " << zeta;
        throw std::invalid_argument(os.str());
    }
    return v;
}

std::string vector_to_string(const EdgeVector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace tricoord
