#include "concavlab/io.hpp"

#include "concavlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace concavlab {

namespace {

using nlohmann::json;

std::vector<double> to_vector(const Vec& v) { return {v.data(), v.data() + v.size()}; }

Vec to_vec(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw Error(ErrorKind::Parse, "expected an array of " + std::to_string(dim) + " numbers");
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_number()) throw Error(ErrorKind::Parse, "expected a number");
        v(i) = j[i].get<double>();
    }
    return v;
}

std::vector<double> numbers(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw Error(ErrorKind::Parse, std::string("missing array '") + key + "'");
    std::vector<double> out;
    for (const auto& x : j[key]) {
        if (!x.is_number()) throw Error(ErrorKind::Parse, std::string("non-numeric entry in '") + key + "'");
        out.push_back(x.get<double>());
    }
    return out;
}

int read_dim(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw Error(ErrorKind::Parse, "missing integer 'dim'");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw Error(ErrorKind::Parse, "'dim' must be positive");
    return dim;
}

std::vector<double> split_numbers(const std::string& s, const std::string& descriptor) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad number '" + tok + "' in descriptor '" + descriptor + "'");
        }
    }
    return out;
}

} // namespace

json polytope_to_json(const Polytope& p) {
    json verts = json::array();
    for (int i = 0; i < p.num_vertices(); ++i) verts.push_back(to_vector(p.vertex(i)));
    return {{"dim", p.dim()}, {"vertices", verts}};
}

Polytope polytope_from_json(const json& j) {
    const int dim = read_dim(j);
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw Error(ErrorKind::Parse, "missing array 'vertices'");
    std::vector<Vec> pts;
    for (const auto& v : j["vertices"]) pts.push_back(to_vec(v, dim));
    return convex_hull(pts);
}

json measure_to_json(const DirectionalMeasure& m) {
    json atoms = json::array();
    for (const auto& a : m.atoms()) atoms.push_back({{"dir", to_vector(a.dir)}, {"weight", a.weight}});
    return {{"dim", m.dim()}, {"atoms", atoms}};
}

DirectionalMeasure measure_from_json(const json& j) {
    const int dim = read_dim(j);
    if (!j.contains("atoms") || !j["atoms"].is_array()) throw Error(ErrorKind::Parse, "missing array 'atoms'");
    std::vector<Atom> atoms;
    for (const auto& a : j["atoms"]) {
        if (!a.is_object() || !a.contains("dir") || !a.contains("weight") || !a["weight"].is_number())
            throw Error(ErrorKind::Parse, "atoms need 'dir' and numeric 'weight'");
        atoms.push_back({to_vec(a["dir"], dim), a["weight"].get<double>()});
    }
    return DirectionalMeasure(dim, std::move(atoms));
}

json body_to_json(const Body& body) {
    if (const auto* p = std::get_if<Polytope>(&body)) {
        json j = polytope_to_json(*p);
        j["type"] = "polytope";
        return j;
    }
    if (const auto* b = std::get_if<Box>(&body)) return {{"type", "box"}, {"sides", b->sides}};
    if (const auto* r = std::get_if<Rect>(&body)) return {{"type", "rect"}, {"sides", {r->a, r->b}}};
    if (const auto* s = std::get_if<Spheroid>(&body)) return {{"type", "spheroid"}, {"axes", {s->a, s->b}}};
    return {{"type", "triangle"}};
}

Body body_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "body must be a JSON object");
    const std::string type = j.value("type", std::string("polytope"));
    if (type == "polytope") return polytope_from_json(j);
    if (type == "box") {
        Box b{numbers(j, "sides")};
        validate(b);
        return b;
    }
    if (type == "rect") {
        const auto s = numbers(j, "sides");
        if (s.size() != 2) throw Error(ErrorKind::Parse, "rect needs two sides");
        Rect r{s[0], s[1]};
        validate(r);
        return r;
    }
    if (type == "spheroid") {
        const auto s = numbers(j, "axes");
        if (s.size() != 2) throw Error(ErrorKind::Parse, "spheroid needs two semi-axes");
        Spheroid sp{s[0], s[1]};
        validate(sp);
        return sp;
    }
    if (type == "triangle") return Triangle{};
    throw Error(ErrorKind::Parse, "unknown body type '" + type + "'");
}

json diagnostics_to_json(const SolverDiagnostics& d) { return {{"iters", d.iters}, {"max_rel_area_err", d.max_rel_area_err}}; }

Body parse_body(const std::string& descriptor) {
    if (descriptor == "triangle") return Triangle{};
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "descriptor '" + descriptor + "' has no ':'");
    const std::string kind = descriptor.substr(0, colon);
    const auto v = split_numbers(descriptor.substr(colon + 1), descriptor);
    try {
        if (kind == "box") {
            Box b{v};
            validate(b);
            return b;
        }
        if (kind == "rect" && (v.size() == 1 || v.size() == 2)) {
            Rect r{v[0], v.size() == 2 ? v[1] : 1.0};
            validate(r);
            return r;
        }
        if (kind == "spheroid" && v.size() == 2) {
            Spheroid s{v[0], v[1]};
            validate(s);
            return s;
        }
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, "descriptor '" + descriptor + "': " + e.what());
    }
    throw Error(ErrorKind::Parse, "unrecognised descriptor '" + descriptor + "'");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::ostringstream os;
        os << "malformed JSON at byte " << e.byte << ": " << e.what();
        throw Error(ErrorKind::Parse, os.str());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

} // namespace concavlab
