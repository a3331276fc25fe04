#ifndef HYPERGRAPH_FORMAT_HPP
#define HYPERGRAPH_FORMAT_HPP

#include <cstdio>
#include <string>

namespace hypergraph {

/// Fixed 12-significant-digit rendering used by all user-facing numeric
/// output (trailing zeros kept, so equal values print identically).
inline std::string format_significant(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.*g", digits, v);
    std::string s(buf);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace hypergraph

#endif // HYPERGRAPH_FORMAT_HPP
