#include "eedp/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace eedp {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

int to_int(const std::string& tok, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
    return v;
}

}  // namespace

Instance parse_instance(const std::string& text, bool allowNonEulerian) {
    Instance inst;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    int n = -1;
    while (std::getline(is, line)) {
        ++lineno;
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "eedp" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'eedp 1'");
            header = true;
            continue;
        }
        const std::string& kw = tok[0];
        if (kw == "v") {
            if (tok.size() != 2) throw ParseError(lineno, "'v' takes one argument");
            if (n >= 0) throw ParseError(lineno, "duplicate 'v' line");
            n = to_int(tok[1], lineno);
            if (n < 0) throw ParseError(lineno, "negative vertex count");
            for (int i = 0; i < n; ++i) inst.supply.add_vertex();
        } else if (kw == "e" || kw == "d") {
            if (tok.size() != 3) throw ParseError(lineno, "'" + kw + "' takes two arguments");
            if (n < 0) throw ParseError(lineno, "'" + kw + "' before 'v'");
            int a = to_int(tok[1], lineno), b = to_int(tok[2], lineno);
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError(lineno, "vertex out of range [0," + std::to_string(n) + ")");
            if (kw == "e")
                inst.supply.add_edge(a, b);
            else
                inst.demands.push_back(Demand{a, b});
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!header) throw ParseError(lineno + 1, "missing header 'eedp 1'");
    if (n < 0) throw ParseError(lineno + 1, "missing 'v' line");
    if (!allowNonEulerian) {
        if (auto v = first_unbalanced(inst)) throw NotEulerianError(*v);
    }
    return inst;
}

Instance read_instance_file(const std::string& path, bool allowNonEulerian) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_instance(ss.str(), allowNonEulerian);
}

std::string serialize_instance(const Instance& inst) {
    const auto& g = inst.supply;
    std::vector<int> idx(g.vertex_bound(), -1);
    int n = 0;
    for (VertexId v : g.vertices()) idx[v] = n++;
    std::ostringstream os;
    os << "eedp 1\nv " << n << "\n";
    for (EdgeId e : g.edges()) os << "e " << idx[g.tail(e)] << " " << idx[g.head(e)] << "\n";
    for (const Demand& d : inst.demands) os << "d " << idx[d.t] << " " << idx[d.s] << "\n";
    return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::uint64_t fingerprint(const Instance& inst) { return fnv1a(serialize_instance(inst)); }

std::string to_dot(const IncidenceDigraph& g, const DotStyle& style) {
    std::ostringstream os;
    os << "digraph " << style.name << " {\n";
    for (VertexId v : g.vertices()) {
        os << "  v" << v;
        auto it = style.vertexLabels.find(v);
        if (it != style.vertexLabels.end()) os << " [label=\"" << it->second << "\"]";
        os << ";\n";
    }
    for (EdgeId e : g.edges()) {
        if (g.tail(e) == kNone || g.head(e) == kNone) continue;
        os << "  v" << g.tail(e) << " -> v" << g.head(e) << " [label=\"" << e << "\"";
        auto it = style.edgeColors.find(e);
        if (it != style.edgeColors.end()) os << ", color=\"" << it->second << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const Instance& inst) {
    std::string body = to_dot(inst.supply);
    std::ostringstream os;
    for (const Demand& d : inst.demands)
        os << "  v" << d.t << " -> v" << d.s << " [style=dashed, color=\"red\"];\n";
    body.insert(body.size() - 2, os.str());
    return body;
}

}  // namespace eedp
