#include "turan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "turan/ramsey.hpp"

namespace turan {

namespace {
[[noreturn]] void parse_error(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}
}  // namespace

std::string write_h3(const Hypergraph3& h) {
    std::ostringstream out;
    out << "h3 " << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const Triple& t : h.edges())
        out << int(t.a) << ' ' << int(t.b) << ' ' << int(t.c) << '\n';
    return out.str();
}

Hypergraph3 parse_h3(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) parse_error(1, "empty input");
    std::istringstream head(line);
    std::string magic;
    int n = 0;
    long long m = 0;
    if (!(head >> magic >> n >> m) || magic != "h3")
        parse_error(1, "expected header 'h3 <n> <m>'");
    if (n < 0 || m < 0) parse_error(1, "negative counts");
    std::vector<Triple> ts;
    ts.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            parse_error(static_cast<int>(i + 2), "missing edge line");
        std::istringstream row(line);
        int a, b, c;
        if (!(row >> a >> b >> c))
            parse_error(static_cast<int>(i + 2), "expected three vertices");
        if (!(a < b && b < c))
            parse_error(static_cast<int>(i + 2), "vertices must ascend");
        ts.push_back(Triple(a, b, c));
        if (i > 0 && !(triple_rank(ts[i - 1]) < triple_rank(ts[i])))
            parse_error(static_cast<int>(i + 2), "edges must ascend in colex rank");
    }
    Hypergraph3 h = Hypergraph3::from_triples(n, ts);
    if (h.edge_count() != static_cast<std::size_t>(m))
        parse_error(1, "duplicate edges");
    return h;
}

Hypergraph3 parse_h3(const std::string& text) {
    std::istringstream in(text);
    return parse_h3(in);
}

Hypergraph3 load_h3_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_h3(in);
}

std::string write_coloring(const Coloring& c) {
    std::ostringstream out;
    out << "col " << c.n << ' ' << c.r << '\n';
    for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(c.colors.size());
         ++rank) {
        Triple t = triple_unrank(rank);
        out << int(t.a) << ' ' << int(t.b) << ' ' << int(t.c) << ' '
            << c.colors[rank] << '\n';
    }
    return out.str();
}

Coloring parse_coloring(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) parse_error(1, "empty input");
    std::istringstream head(line);
    std::string magic;
    int n = 0, r = 0;
    if (!(head >> magic >> n >> r) || magic != "col")
        parse_error(1, "expected header 'col <n> <r>'");
    if (n < 0 || r < 1) parse_error(1, "bad counts");
    Coloring c;
    c.n = n;
    c.r = r;
    c.colors.assign(binom3(n), -1);
    for (std::int64_t rank = 0; rank < binom3(n); ++rank) {
        if (!std::getline(in, line))
            parse_error(static_cast<int>(rank + 2), "missing color line");
        std::istringstream row(line);
        int a, b, c2, col;
        if (!(row >> a >> b >> c2 >> col))
            parse_error(static_cast<int>(rank + 2), "expected 'a b c color'");
        Triple t(a, b, c2);
        if (!(a < b && b < c2) || triple_rank(t) != rank)
            parse_error(static_cast<int>(rank + 2), "edges must follow colex order");
        if (col < 0 || col >= r)
            parse_error(static_cast<int>(rank + 2), "color out of range");
        c.colors[rank] = col;
    }
    return c;
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    return parse_coloring(in);
}

}  // namespace turan
