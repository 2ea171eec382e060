#ifndef SNC_IO_HPP
#define SNC_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "digraph.hpp"

namespace snc {

struct instance {
    digraph graph;
    std::optional<weighting> weights;  ///< present when the text has weight lines

    weighting weights_or_unit() const { return weights ? *weights : weighting::unit(graph.size()); }
    bool operator==(const instance& o) const {
        return graph == o.graph && weights_or_unit().values() == o.weights_or_unit().values();
    }
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline std::uint64_t parse_count(const std::string& s, std::size_t line, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(line, std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw parse_error(line, std::string(what) + " out of range");
    }
}

}  // namespace detail

/**
 * @brief reads "n m", then m lines "u v" (arc u->v), with optional "w v p/q"
 * weight lines; '#' starts a comment
 */
inline instance parse_instance(std::string_view text) {
    std::optional<std::size_t> n, m;
    std::vector<arc> arcs;
    std::vector<std::optional<rational>> weight;
    std::vector<std::vector<bool>> seen;
    std::size_t lineno = 0;
    std::size_t last_line = 0;
    bool any_weight = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = detail::tokens(line);
        if (tok.empty()) continue;
        last_line = lineno;

        if (!n) {
            if (tok.size() != 2) throw parse_error(lineno, "expected header 'n m'");
            n = detail::parse_count(tok[0], lineno, "n");
            m = detail::parse_count(tok[1], lineno, "m");
            if (*n > max_vertices)
                throw parse_error(lineno, "at most " + std::to_string(max_vertices) + " vertices are supported");
            weight.assign(*n, std::nullopt);
            seen.assign(*n, std::vector<bool>(*n, false));
            continue;
        }
        auto vertex_at = [&](const std::string& s) {
            auto v = detail::parse_count(s, lineno, "vertex");
            if (v >= *n) throw parse_error(lineno, "vertex " + s + " out of range");
            return static_cast<vertex>(v);
        };
        if (tok[0] == "w") {
            if (tok.size() != 3) throw parse_error(lineno, "expected 'w v p/q'");
            vertex v = vertex_at(tok[1]);
            auto r = parse_rational(tok[2]);
            if (!r) throw parse_error(lineno, "bad weight '" + tok[2] + "'");
            if (*r < rational(0)) throw parse_error(lineno, "negative weight");
            if (weight[v]) throw parse_error(lineno, "weight of vertex " + tok[1] + " given twice");
            weight[v] = *r;
            any_weight = true;
            continue;
        }
        if (tok.size() != 2) throw parse_error(lineno, "expected an arc 'u v'");
        vertex u = vertex_at(tok[0]), v = vertex_at(tok[1]);
        if (u == v) throw parse_error(lineno, "loop at vertex " + tok[0]);
        if (seen[v][u]) throw parse_error(lineno, "digon between " + tok[0] + " and " + tok[1]);
        if (seen[u][v]) throw parse_error(lineno, "duplicate arc " + tok[0] + " " + tok[1]);
        if (arcs.size() == *m) throw parse_error(lineno, "more than " + std::to_string(*m) + " arcs");
        seen[u][v] = true;
        arcs.push_back({u, v});
    }
    if (!n) throw parse_error(0, "empty instance");
    if (arcs.size() != *m)
        throw parse_error(last_line, "expected " + std::to_string(*m) + " arcs, found " + std::to_string(arcs.size()));

    instance out{digraph(*n, arcs), std::nullopt};
    if (any_weight) {
        std::vector<rational> w;
        for (const auto& x : weight) w.push_back(x.value_or(rational(1)));
        out.weights = weighting(w);
    }
    return out;
}

/// Canonical text: sorted arcs, then weight lines for weights other than 1.
inline std::string emit_instance(const digraph& d, const std::optional<weighting>& w = std::nullopt) {
    std::string s = std::to_string(d.size()) + " " + std::to_string(d.arc_count()) + "\n";
    for (const arc& a : d.arcs()) s += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    if (w)
        for (vertex v = 0; v < d.size(); ++v)
            if ((*w)[v] != rational(1)) s += "w " + std::to_string(v) + " " + to_string((*w)[v]) + "\n";
    return s;
}

inline std::string emit_instance(const instance& i) { return emit_instance(i.graph, i.weights); }

}  // namespace snc

#endif
