#include "xpat/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace xpat {

using nlohmann::json;

json polyToJson(const Polynomial& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json e = json::array();
        for (int32_t v : t.exp) e.push_back(v);
        terms.push_back(json::array({t.coef.get_str(), e}));
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polyFromJson(const json& j, int nvars) {
    int nv = j.contains("nvars") ? j.at("nvars").get<int>() : nvars;
    if (nv < 0) throw CorruptFileError("polynomial without variable count");
    std::vector<Term> terms;
    for (const auto& tj : j.at("terms")) {
        Term t;
        t.coef = Int(tj.at(0).get<std::string>());
        for (const auto& ej : tj.at(1)) t.exp.push_back(ej.get<int32_t>());
        if (static_cast<int>(t.exp.size()) != nv)
            throw CorruptFileError("exponent vector length mismatch");
        terms.push_back(std::move(t));
    }
    return Polynomial::fromTerms(nv, std::move(terms));
}

json rfToJson(const RationalFunction& f) {
    return json{{"num", polyToJson(f.num())}, {"den", polyToJson(f.den())}};
}

RationalFunction rfFromJson(const json& j) {
    return RationalFunction::make(polyFromJson(j.at("num")), polyFromJson(j.at("den")));
}

json valueToJson(const SemifieldValue& v) {
    switch (v.kind()) {
        case SemifieldKind::Universal:
            return json{{"kind", "universal"},
                        {"num", polyToJson(v.rf().num())},
                        {"den", polyToJson(v.rf().den())}};
        case SemifieldKind::Tropical: {
            json e = json::array();
            for (int64_t x : v.mono().exps) e.push_back(x);
            return json{{"kind", "tropical"}, {"exps", e}};
        }
        case SemifieldKind::Trivial:
            return json{{"kind", "trivial"}};
    }
    throw VariantError("unknown semifield kind");
}

SemifieldValue valueFromJson(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "universal")
        return SemifieldValue::universal(
            RationalFunction::make(polyFromJson(j.at("num")), polyFromJson(j.at("den"))));
    if (kind == "tropical") {
        LaurentMonomial m;
        for (const auto& e : j.at("exps")) m.exps.push_back(e.get<int64_t>());
        return SemifieldValue::tropical(std::move(m));
    }
    if (kind == "trivial") return SemifieldValue::trivialUnit();
    throw CorruptFileError("unknown semifield value kind: " + kind);
}

namespace {

json matrixToJson(const ExchangeMatrix& B) {
    json b = json::array();
    for (int64_t v : B.matrix().a) b.push_back(v);
    json d = json::array();
    for (int64_t v : B.symmetrizer()) d.push_back(v);
    return json{{"B", b}, {"D", d}};
}

ExchangeMatrix matrixFromJson(const json& j) {
    const auto& b = j.at("B");
    size_t nn = b.size();
    int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(nn))));
    if (static_cast<size_t>(n) * n != nn) throw CorruptFileError("B is not square");
    IntMatrix m(n);
    for (size_t i = 0; i < nn; ++i) m.a[i] = b.at(i).get<int64_t>();
    std::vector<int64_t> d;
    for (const auto& v : j.at("D")) d.push_back(v.get<int64_t>());
    return ExchangeMatrix(std::move(m), std::move(d));
}

} // namespace

json xseedToJson(const XSeed& s) {
    json j = matrixToJson(s.B);
    json xs = json::array();
    for (const auto& v : s.x) xs.push_back(valueToJson(v));
    j["x"] = xs;
    return j;
}

XSeed xseedFromJson(const json& j) {
    XSeed s;
    s.B = matrixFromJson(j);
    for (const auto& v : j.at("x")) s.x.push_back(valueFromJson(v));
    if (static_cast<int>(s.x.size()) != s.B.rank())
        throw CorruptFileError("cluster size does not match rank");
    return s;
}

json aseedToJson(const ASeed& s) {
    json j = xseedToJson(XSeed{s.x, s.B});
    json as = json::array();
    for (const auto& v : s.a) as.push_back(rfToJson(v));
    j["a"] = as;
    if (!s.coeffEmbed.empty()) {
        json em = json::array();
        for (const auto& v : s.coeffEmbed) em.push_back(rfToJson(v));
        j["embed"] = em;
    }
    return j;
}

ASeed aseedFromJson(const json& j) {
    XSeed xs = xseedFromJson(j);
    ASeed s;
    s.B = std::move(xs.B);
    s.x = std::move(xs.x);
    for (const auto& v : j.at("a")) s.a.push_back(rfFromJson(v));
    if (j.contains("embed"))
        for (const auto& v : j.at("embed")) s.coeffEmbed.push_back(rfFromJson(v));
    if (static_cast<int>(s.a.size()) != s.B.rank())
        throw CorruptFileError("cluster size does not match rank");
    return s;
}

json graphToJson(const ExchangeGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        json nj{{"key", toHex(n.key)}};
        if (n.aseed)
            nj["seed"] = aseedToJson(*n.aseed);
        else if (n.xseed)
            nj["seed"] = xseedToJson(*n.xseed);
        nodes.push_back(std::move(nj));
    }
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json::array(
            {toHex(g.nodes[e.from].key), e.dir, toHex(g.nodes[e.to].key)}));
    json xvars = json::array();
    for (const auto& v : g.xvars) xvars.push_back(valueToJson(v));
    return json{{"version", kGraphSchemaVersion},
                {"type", g.type},
                {"rank", g.rank},
                {"semifield", g.semifield},
                {"partial", g.partial},
                {"root", toHex(g.nodes.empty() ? std::string() : g.nodes[g.rootIndex].key)},
                {"nodes", nodes},
                {"edges", edges},
                {"xvars", xvars}};
}

namespace {

std::string fromHex(const std::string& hex) {
    if (hex.size() % 2) throw CorruptFileError("odd hex string");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw CorruptFileError("bad hex digit");
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1])));
    return out;
}

} // namespace

ExchangeGraph graphFromJson(const json& j) {
    int version = j.at("version").get<int>();
    if (version != kGraphSchemaVersion)
        throw VersionError("unsupported graph schema version " + std::to_string(version));
    ExchangeGraph g;
    g.type = j.at("type").get<std::string>();
    g.rank = j.at("rank").get<int>();
    g.semifield = j.at("semifield").get<std::string>();
    g.partial = j.at("partial").get<bool>();
    for (const auto& nj : j.at("nodes")) {
        GraphNode n;
        n.key = fromHex(nj.at("key").get<std::string>());
        if (nj.contains("seed")) {
            if (nj.at("seed").contains("a"))
                n.aseed = aseedFromJson(nj.at("seed"));
            else
                n.xseed = xseedFromJson(nj.at("seed"));
        }
        g.byKey.emplace(n.key, g.nodes.size());
        g.nodes.push_back(std::move(n));
    }
    std::string rootHex = j.at("root").get<std::string>();
    if (!g.nodes.empty()) g.rootIndex = g.indexOf(fromHex(rootHex));
    for (const auto& ej : j.at("edges")) {
        GraphEdge e;
        e.from = g.indexOf(fromHex(ej.at(0).get<std::string>()));
        e.dir = ej.at(1).get<int>();
        e.to = g.indexOf(fromHex(ej.at(2).get<std::string>()));
        g.edges.push_back(e);
    }
    for (const auto& vj : j.at("xvars")) g.xvars.push_back(valueFromJson(vj));
    g.stats.nodes = g.nodes.size();
    g.stats.edges = g.edges.size();
    g.stats.xvars = g.xvars.size();
    return g;
}

void saveGraph(const ExchangeGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphIOError("cannot open for writing: " + path);
    out << graphToJson(g).dump(1) << "\n";
    if (!out) throw GraphIOError("write failed: " + path);
}

ExchangeGraph loadGraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphIOError("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CorruptFileError(std::string("corrupt graph file: ") + e.what());
    }
    try {
        return graphFromJson(j);
    } catch (const json::exception& e) {
        throw CorruptFileError(std::string("corrupt graph file: ") + e.what());
    }
}

std::string graphToDot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "// xpat exchange graph, format 1\n";
    os << "graph exchange {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        // short digest of the key (the raw prefix is a shared header)
        uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : g.nodes[i].key) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        char buf[12];
        snprintf(buf, sizeof buf, "%08x", static_cast<uint32_t>(h));
        os << "  n" << i << " [label=\"" << buf << "\"];\n";
    }
    for (const auto& e : g.edges) {
        if (e.from > e.to) continue; // one line per unordered edge
        if (e.from == e.to && e.dir % 2) continue;
        os << "  n" << e.from << " -- n" << e.to << " [label=\"" << (e.dir + 1) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace xpat
