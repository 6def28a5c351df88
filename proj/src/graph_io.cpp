#include "bdom/graph_io.hpp"

#include <sstream>

namespace bdom {

namespace {

constexpr char kBias = 63; // printable characters are six-bit values + 63

// Accumulates bits most-significant-first into six-bit characters.
struct BitWriter {
    std::string out;
    int used = 0; // bits already in the trailing character

    void push(int bit) {
        if (used == 0) out.push_back(kBias);
        out.back() = char(out.back() + ((bit & 1) << (5 - used)));
        used = (used + 1) % 6;
    }
    void push_value(unsigned long long value, int width) {
        for (int i = width - 1; i >= 0; --i) push(int(value >> i & 1));
    }
    void pad(int bit) {
        while (used != 0) push(bit);
    }
};

struct BitReader {
    std::string_view data;
    size_t pos = 0; // bit position

    explicit BitReader(std::string_view d) : data(d) {}
    size_t remaining() const { return data.size() * 6 - pos; }
    int next() {
        int c = data[pos / 6] - kBias;
        int bit = c >> (5 - pos % 6) & 1;
        ++pos;
        return bit;
    }
    unsigned long long next_value(int width) {
        unsigned long long v = 0;
        for (int i = 0; i < width; ++i) v = v << 1 | unsigned(next());
        return v;
    }
};

void append_vertex_count(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else {
        // three six-bit digits cover everything up to our 64-vertex cap
        out.push_back(126);
        out.push_back(char((n >> 12 & 63) + kBias));
        out.push_back(char((n >> 6 & 63) + kBias));
        out.push_back(char((n & 63) + kBias));
    }
}

int take_vertex_count(std::string_view& s) {
    if (s.empty()) fail(errc::io_failure, "empty graph text");
    unsigned c0 = static_cast<unsigned char>(s[0]);
    if (c0 != 126) {
        if (c0 < 63 || c0 > 125) fail(errc::io_failure, "bad vertex-count byte");
        s.remove_prefix(1);
        return int(c0 - 63);
    }
    int digits = 3;
    s.remove_prefix(1);
    if (!s.empty() && static_cast<unsigned char>(s[0]) == 126) { // six-digit form
        digits = 6;
        s.remove_prefix(1);
    }
    if (int(s.size()) < digits) fail(errc::io_failure, "truncated vertex count");
    long long n = 0;
    for (int i = 0; i < digits; ++i) {
        unsigned c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) fail(errc::io_failure, "bad vertex-count byte");
        n = n << 6 | (c - 63);
    }
    s.remove_prefix(digits);
    if (n > SubcubicGraph::max_vertices)
        fail(errc::size_limit_exceeded, "graph text describes " + std::to_string(n) + " vertices");
    return int(n);
}

void validate_body(std::string_view s) {
    for (char c : s) {
        unsigned u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) fail(errc::io_failure, "byte outside graph6 alphabet");
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    return s;
}

int bits_for(int n) { // width of vertex indices in sparse6
    int k = 1;
    while ((1 << k) < n - 1 + 1) ++k;
    return n <= 1 ? 1 : k;
}

} // namespace

std::string to_graph6(const SubcubicGraph& g) {
    std::string out;
    int n = g.vertex_count();
    append_vertex_count(out, n);
    BitWriter w;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) w.push(g.has_edge(u, v) ? 1 : 0);
    w.pad(0);
    return out + w.out;
}

SubcubicGraph from_graph6(std::string_view s) {
    s = trim(strip_header(s, ">>graph6<<"));
    int n = take_vertex_count(s);
    validate_body(s);
    size_t need = (size_t(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != need)
        fail(errc::io_failure, "graph6 body has " + std::to_string(s.size()) +
                                   " bytes, expected " + std::to_string(need));
    BitReader r(s);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (r.next()) edges.push_back({u, v});
    return SubcubicGraph::build(n, edges);
}

std::string to_sparse6(const SubcubicGraph& g) {
    int n = g.vertex_count();
    int k = bits_for(n);
    std::string out = ":";
    append_vertex_count(out, n);
    BitWriter w;
    int cur = 0;
    std::vector<std::pair<int, int>> ordered; // (high, low)
    for (auto [u, v] : g.edges()) ordered.push_back({v, u});
    std::sort(ordered.begin(), ordered.end());
    for (auto [v, u] : ordered) {
        if (v == cur) {
            w.push(0);
            w.push_value(unsigned(u), k);
        } else if (v == cur + 1) {
            w.push(1);
            w.push_value(unsigned(u), k);
            cur = v;
        } else { // jump: set the current vertex first, then emit the edge
            w.push(1);
            w.push_value(unsigned(v), k);
            w.push(0);
            w.push_value(unsigned(u), k);
            cur = v;
        }
    }
    // all-ones padding, except that when n is a power of two a k-bit run of
    // ones is a valid vertex index; lead with a zero so decoders cannot
    // misread the padding as an edge
    if (k < 6 && n == (1 << k) && cur < n - 1 && (6 - w.used) % 6 >= k) w.push(0);
    w.pad(1);
    return out + w.out;
}

SubcubicGraph from_sparse6(std::string_view s) {
    s = trim(strip_header(s, ">>sparse6<<"));
    if (s.empty() || s[0] != ':') fail(errc::io_failure, "sparse6 text must start with ':'");
    s.remove_prefix(1);
    int n = take_vertex_count(s);
    validate_body(s);
    int k = bits_for(n);
    BitReader r(s);
    std::vector<std::pair<int, int>> edges;
    int cur = 0;
    while (r.remaining() >= size_t(k) + 1) {
        int b = r.next();
        cur += b;
        long long x = (long long)r.next_value(k);
        if (cur >= n || x >= n) break; // padding reached
        if (x > cur) {
            cur = int(x);
        } else if (x == cur) {
            fail(errc::io_failure, "sparse6 text contains a loop");
        } else {
            edges.push_back({int(x), cur});
        }
    }
    return SubcubicGraph::build(n, edges);
}

SubcubicGraph parse_graph_line(std::string_view line) {
    std::string_view s = trim(line);
    s = strip_header(s, ">>graph6<<");
    s = strip_header(s, ">>sparse6<<");
    if (s.empty()) fail(errc::io_failure, "empty graph line");
    return s[0] == ':' ? from_sparse6(s) : from_graph6(s);
}

std::string to_adjacency_text(const SubcubicGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SubcubicGraph from_adjacency_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m)) fail(errc::io_failure, "adjacency text: missing \"n m\" line");
    if (n < 0 || n > SubcubicGraph::max_vertices)
        fail(errc::size_limit_exceeded, "adjacency text describes " + std::to_string(n) + " vertices");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) fail(errc::io_failure, "adjacency text: fewer edges than declared");
        edges.push_back({u, v});
    }
    return SubcubicGraph::build(int(n), edges);
}

} // namespace bdom
