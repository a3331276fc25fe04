#ifndef HYPERGRAPH_VERIFY_HPP
#define HYPERGRAPH_VERIFY_HPP

#include <hypergraph/enumeration.hpp>
#include <hypergraph/format.hpp>
#include <hypergraph/generators.hpp>
#include <hypergraph/hgt_io.hpp>
#include <hypergraph/hypergraph.hpp>
#include <hypergraph/spectral.hpp>

#include <json.hpp>

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hypergraph {

inline constexpr const char* library_version = "0.1.0";

/// Margin used for strict spectral-radius inequalities.
inline constexpr double strict_margin = 1e-10;

/// Entry comparisons treat |a - b| <= this slack as equality.
inline constexpr double entry_slack = 1e-12;

struct VerifyOptions {
    double tol = 1e-12;
    std::size_t max_iter = 1000000;
    double sep_tol = 1e-9;
    Method method = Method::power;
    std::uint32_t vertex_budget = 5000;
};

/// One observation inside a report: free-text description, the hypergraph it
/// refers to (HGT text, possibly empty), and named numeric values.
struct Finding {
    std::string description;
    std::string hypergraph;
    std::map<std::string, double> values;
};

/**
 * Structured pass/fail record of one check. `pass` is true exactly when
 * `failures` is empty. Serializes to the stable JSON schema
 * {check, params, pass, witnesses[], failures[], versions{}}.
 */
struct VerificationReport {
    std::string check;
    std::map<std::string, double> params;
    bool pass = true;
    std::vector<Finding> witnesses;
    std::vector<Finding> failures;
    std::map<std::string, std::string> versions = {
        {"library", library_version},
        {"report-schema", "1"},
    };

    void witness(std::string description, std::string hgt = {},
                 std::map<std::string, double> values = {}) {
        witnesses.push_back({std::move(description), std::move(hgt), std::move(values)});
    }
    void fail(std::string description, std::string hgt = {},
              std::map<std::string, double> values = {}) {
        failures.push_back({std::move(description), std::move(hgt), std::move(values)});
        pass = false;
    }

    nlohmann::json to_json() const {
        auto finding_json = [](const Finding& f) {
            return nlohmann::json{{"description", f.description},
                                  {"hypergraph", f.hypergraph},
                                  {"values", f.values}};
        };
        nlohmann::json w = nlohmann::json::array();
        for (const Finding& f : witnesses) w.push_back(finding_json(f));
        nlohmann::json x = nlohmann::json::array();
        for (const Finding& f : failures) x.push_back(finding_json(f));
        return nlohmann::json{{"check", check},     {"params", params},
                              {"pass", pass},       {"witnesses", w},
                              {"failures", x},      {"versions", versions}};
    }

    static VerificationReport from_json(const nlohmann::json& j) {
        VerificationReport r;
        r.check = j.at("check").get<std::string>();
        r.params = j.at("params").get<std::map<std::string, double>>();
        r.pass = j.at("pass").get<bool>();
        auto read = [](const nlohmann::json& arr) {
            std::vector<Finding> out;
            for (const auto& f : arr) {
                out.push_back({f.at("description").get<std::string>(),
                               f.at("hypergraph").get<std::string>(),
                               f.at("values").get<std::map<std::string, double>>()});
            }
            return out;
        };
        r.witnesses = read(j.at("witnesses"));
        r.failures = read(j.at("failures"));
        r.versions = j.at("versions").get<std::map<std::string, std::string>>();
        return r;
    }

    /// Flat findings table: check,kind,description,values with quoted text
    /// fields and semicolon-joined key=value pairs.
    std::string csv() const {
        auto quote = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += "\"\"";
                else out += c;
            }
            out += '"';
            return out;
        };
        auto values_cell = [&](const std::map<std::string, double>& values) {
            std::string out;
            for (const auto& [key, value] : values) {
                if (!out.empty()) out += "; ";
                out += key + "=" + format_significant(value);
            }
            return quote(out);
        };
        std::string out = "check,kind,description,values\n";
        out += check + ",result," + quote(pass ? "pass" : "fail") + "," +
               values_cell(params) + "\n";
        for (const Finding& f : witnesses) {
            out += check + ",witness," + quote(f.description) + "," +
                   values_cell(f.values) + "\n";
        }
        for (const Finding& f : failures) {
            out += check + ",failure," + quote(f.description) + "," +
                   values_cell(f.values) + "\n";
        }
        return out;
    }

    std::string summary() const {
        auto compact = [](double v) {
            if (v == std::floor(v) && std::abs(v) < 1e15) {
                return std::to_string(static_cast<long long>(v));
            }
            return format_significant(v);
        };
        std::string out = pass ? "[pass] " : "[FAIL] ";
        out += check;
        if (!params.empty()) {
            out += " (";
            bool first = true;
            for (const auto& [key, value] : params) {
                if (!first) out += ", ";
                first = false;
                out += key + "=" + compact(value);
            }
            out += ")";
        }
        out += '\n';
        auto lines = [&](const char* label, const std::vector<Finding>& fs) {
            for (const Finding& f : fs) {
                out += "  ";
                out += label;
                out += ": " + f.description;
                for (const auto& [key, value] : f.values) {
                    out += "  " + key + "=" + compact(value);
                }
                out += '\n';
            }
        };
        lines("witness", witnesses);
        lines("failure", failures);
        return out;
    }
};

namespace detail {

/// Spectral radii of a comparison pair. Near-tie comparisons (within ten
/// separation tolerances) are recomputed with the dense oracle.
inline std::pair<double, double> compared_rhos(const Hypergraph& a, const Hypergraph& b,
                                               const VerifyOptions& opt) {
    double ra = spectral_radius(a, opt.tol, opt.max_iter, opt.method).rho;
    double rb = spectral_radius(b, opt.tol, opt.max_iter, opt.method).rho;
    if (opt.method != Method::dense && std::abs(ra - rb) < 10.0 * opt.sep_tol) {
        ra = dense_eigen_oracle(a);
        rb = dense_eigen_oracle(b);
    }
    return {ra, rb};
}

/// Remove isolated vertices, relabeling the rest in ascending order.
inline Hypergraph drop_isolated(Vertex n, const std::vector<Edge>& edges) {
    std::vector<bool> used(n, false);
    for (const Edge& e : edges) {
        for (Vertex v : e) used[v] = true;
    }
    std::vector<Vertex> map(n, 0);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (used[v]) map[v] = next++;
    }
    std::vector<Edge> relabeled;
    relabeled.reserve(edges.size());
    for (const Edge& e : edges) {
        Edge f;
        f.reserve(e.size());
        for (Vertex v : e) f.push_back(map[v]);
        relabeled.push_back(std::move(f));
    }
    return Hypergraph::from_edge_list(next, std::move(relabeled));
}

} // namespace detail

/**
 * Extremal ordering over the full (k, m) catalog:
 *  (a) the unique maximum-rho class is the superstar,
 *  (b) the unique minimum is the hyperpath,
 *  (c) for m >= 3 the unique maximum among non-superstar classes is
 *      S(n, k; m-2, 1) — at m = 3 it coincides with the hyperpath, which is
 *      reported, not failed,
 *  (d) both extremal statements re-checked on the sub-catalog of k-th powers
 *      of trees.
 * "Unique" means: any class within sep_tol of the extremum must be code-equal
 * to it; since catalog codes are pairwise distinct, near-ties are failures.
 */
inline VerificationReport verify_extremal(std::size_t k, std::uint32_t m,
                                          double sep_tol = 1e-9,
                                          const VerifyOptions& opt_in = {}) {
    VerifyOptions opt = opt_in;
    opt.sep_tol = sep_tol;
    VerificationReport rep;
    rep.check = "extremal";
    rep.params = {{"k", static_cast<double>(k)},
                  {"m", static_cast<double>(m)},
                  {"sep_tol", sep_tol}};

    EnumOptions eopt{opt.tol, opt.max_iter, opt.method, opt.vertex_budget};
    Catalog cat = enumerate_supertrees(k, m, eopt);
    const std::size_t count = cat.entries.size();

    std::vector<double> rho(count);
    std::vector<bool> densified(count, false);
    for (std::size_t i = 0; i < count; ++i) rho[i] = cat.entries[i].spectrum.rho;
    auto dense_rho = [&](std::size_t i) {
        if (!densified[i] && opt.method != Method::dense) {
            rho[i] = dense_eigen_oracle(cat.entries[i].representative);
            densified[i] = true;
        }
        return rho[i];
    };
    // separation with dense cross-check on near ties
    auto separation = [&](std::size_t hi, std::size_t lo) {
        double d = rho[hi] - rho[lo];
        if (std::abs(d) < 10.0 * opt.sep_tol) d = dense_rho(hi) - dense_rho(lo);
        return d;
    };

    const CanonicalCode star_code = canonical_code(superstar(k, m));
    const CanonicalCode path_code = canonical_code(hyperpath(k, m));

    // (a) unique maximum is the superstar
    if (cat.entries[0].code == star_code) {
        rep.witness("maximum class is the superstar",
                    serialize_hgt(cat.entries[0].representative), {{"rho", rho[0]}});
    } else {
        rep.fail("maximum class is not the superstar",
                 serialize_hgt(cat.entries[0].representative), {{"rho", rho[0]}});
    }
    for (std::size_t i = 1; i < count; ++i) {
        double gap = separation(0, i);
        if (gap <= opt.sep_tol) {
            rep.fail("class within sep_tol of the maximum",
                     serialize_hgt(cat.entries[i].representative),
                     {{"rho", rho[i]}, {"gap", gap}});
        }
    }

    // (b) unique minimum is the hyperpath
    const std::size_t last = count - 1;
    if (cat.entries[last].code == path_code) {
        rep.witness("minimum class is the hyperpath",
                    serialize_hgt(cat.entries[last].representative),
                    {{"rho", rho[last]}});
    } else {
        rep.fail("minimum class is not the hyperpath",
                 serialize_hgt(cat.entries[last].representative), {{"rho", rho[last]}});
    }
    for (std::size_t i = 0; i < last; ++i) {
        double gap = separation(i, last);
        if (gap <= opt.sep_tol) {
            rep.fail("class within sep_tol of the minimum",
                     serialize_hgt(cat.entries[i].representative),
                     {{"rho", rho[i]}, {"gap", gap}});
        }
    }

    // (c) unique non-superstar maximum is S(n, k; m-2, 1), for m >= 3
    if (m >= 3) {
        const CanonicalCode dstar_code = canonical_code(double_hyperstar(k, m - 2, 1));
        std::size_t second = count;  // first (highest-rho) non-superstar entry
        for (std::size_t i = 0; i < count; ++i) {
            if (cat.entries[i].code != star_code) { second = i; break; }
        }
        if (second == count) {
            rep.fail("no non-superstar class found");
        } else {
            if (cat.entries[second].code == dstar_code) {
                rep.witness("second maximum is the double hyperstar S(n,k;m-2,1)",
                            serialize_hgt(cat.entries[second].representative),
                            {{"rho", rho[second]}});
            } else {
                rep.fail("second maximum is not S(n,k;m-2,1)",
                         serialize_hgt(cat.entries[second].representative),
                         {{"rho", rho[second]}});
            }
            if (m == 3 && dstar_code == path_code) {
                rep.witness("m = 3: S(n,k;1,1) coincides with the hyperpath");
            }
            for (std::size_t i = second + 1; i < count; ++i) {
                if (cat.entries[i].code == star_code) continue;
                double gap = separation(second, i);
                if (gap <= opt.sep_tol) {
                    rep.fail("non-superstar class within sep_tol of the second maximum",
                             serialize_hgt(cat.entries[i].representative),
                             {{"rho", rho[i]}, {"gap", gap}});
                }
            }
        }
    }

    // (d) k-th powers of trees obey both extremal statements
    {
        std::size_t star_idx = count, path_idx = count;
        std::map<CanonicalCode, std::size_t> by_code;
        for (std::size_t i = 0; i < count; ++i) {
            by_code.emplace(cat.entries[i].code, i);
            if (cat.entries[i].code == star_code) star_idx = i;
            if (cat.entries[i].code == path_code) path_idx = i;
        }
        std::size_t powers = 0;
        for (const Hypergraph& tree : enumerate_trees(m)) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (const Edge& e : tree.edges()) pairs.emplace_back(e[0], e[1]);
            CanonicalCode code = canonical_code(power_k(pairs, k));
            auto it = by_code.find(code);
            if (it == by_code.end()) {
                rep.fail("k-th power of a tree missing from the catalog");
                continue;
            }
            ++powers;
            std::size_t i = it->second;
            if (code != star_code && star_idx < count && separation(star_idx, i) <= opt.sep_tol) {
                rep.fail("tree power within sep_tol of the superstar",
                         serialize_hgt(cat.entries[i].representative),
                         {{"rho", rho[i]}});
            }
            if (code != path_code && path_idx < count && separation(i, path_idx) <= opt.sep_tol) {
                rep.fail("tree power within sep_tol of the hyperpath",
                         serialize_hgt(cat.entries[i].representative),
                         {{"rho", rho[i]}});
            }
        }
        rep.witness("tree powers checked against both extremes", {},
                    {{"count", static_cast<double>(powers)},
                     {"classes", static_cast<double>(count)}});
    }
    return rep;
}

namespace detail {

struct PendantPattern {
    // interior edges: (edge index, v1, vk); pendant edges: (edge index, u)
    std::vector<std::tuple<std::size_t, Vertex, Vertex>> interior;
    std::vector<std::pair<std::size_t, Vertex>> pendant;
    // pendant paths as vertex chains v0, v1, ..., vt (anchor first)
    std::vector<std::vector<Vertex>> paths;
};

inline PendantPattern find_pendant_patterns(const Hypergraph& h) {
    PendantPattern out;
    const auto deg = degree_profile(h).degrees;
    const auto idx = vertex_edge_index(h);

    auto high_vertices = [&](const Edge& e) {
        std::vector<Vertex> hi;
        for (Vertex v : e) {
            if (deg[v] >= 2) hi.push_back(v);
        }
        return hi;
    };
    auto meets_once = [&](std::size_t ei, const Edge& e) {
        std::size_t common = 0;
        for (Vertex u : h.edge(ei)) {
            for (Vertex w : e) {
                if (u == w) ++common;
            }
        }
        return common == 1;
    };

    for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
        const Edge& e = h.edge(ei);
        auto hi = high_vertices(e);
        if (e.size() >= 3 && hi.size() == 2) {
            // interior pattern requires flanking edges meeting e only at the ends
            bool ok = true;
            for (Vertex end : hi) {
                for (std::size_t other : idx[end]) {
                    if (other != ei && !meets_once(other, e)) ok = false;
                }
            }
            if (ok) out.interior.emplace_back(ei, hi[0], hi[1]);
        }
        if (hi.size() == 1 && deg[hi[0]] >= 2) {
            out.pendant.emplace_back(ei, hi[0]);
        }
    }

    // pendant paths: walk inward from every pendant edge
    for (auto [start, u] : out.pendant) {
        std::vector<Vertex> chain;  // built far-end first, reversed at the end
        std::vector<bool> seen(h.edge_count(), false);
        const Edge& first = h.edge(start);
        for (Vertex v : first) {
            if (deg[v] == 1) { chain.push_back(v); break; }  // far pendant end
        }
        chain.push_back(u);
        seen[start] = true;
        std::size_t cur = start;
        Vertex joint = u;
        while (deg[joint] == 2) {
            std::size_t prev = h.edge_count();
            for (std::size_t other : idx[joint]) {
                if (other != cur) prev = other;
            }
            if (prev == h.edge_count() || seen[prev]) break;
            if (!meets_once(prev, h.edge(cur))) break;
            auto hi = high_vertices(h.edge(prev));
            if (hi.size() == 2 && (hi[0] == joint || hi[1] == joint)) {
                Vertex next_joint = hi[0] == joint ? hi[1] : hi[0];
                chain.push_back(next_joint);
                seen[prev] = true;
                cur = prev;
                joint = next_joint;
            } else if (hi.size() == 1 && hi[0] == joint) {
                // the whole hypergraph is a bare path; anchor at its far end
                for (Vertex v : h.edge(prev)) {
                    if (deg[v] == 1) { chain.push_back(v); break; }
                }
                seen[prev] = true;
                break;
            } else {
                break;  // joint vertex anchors something bigger
            }
        }
        std::reverse(chain.begin(), chain.end());
        out.paths.push_back(std::move(chain));
    }
    return out;
}

} // namespace detail

/**
 * Eigenvector identities on pendant structure:
 *  - interior edges (all middle vertices degree 1, both ends attached):
 *    equal middle entries, value (x_v1 + x_vk) / ((|e|-1) rho - (|e|-3)),
 *    strictly below both end entries;
 *  - pendant edges: equal pendant entries, value x_u / ((|e|-1) rho - (|e|-2)),
 *    strictly below x_u;
 *  - pendant paths: end-vertex entries unimodal with the peak away from the
 *    pendant end.
 */
inline VerificationReport verify_pendant_identities(const Hypergraph& h, double tol = 1e-9,
                                                    const VerifyOptions& opt = {}) {
    VerificationReport rep;
    rep.check = "pendant";
    rep.params = {{"tol", tol}};
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("verify_pendant_identities requires a connected hypergraph");
    }
    SpectralResult sr = spectral_radius(h, opt.tol, opt.max_iter, opt.method);
    const std::vector<double>& x = sr.eigvec;
    const double rho = sr.rho;
    const std::string hgt = serialize_hgt(h);

    detail::PendantPattern patterns = detail::find_pendant_patterns(h);

    for (auto [ei, v1, vk] : patterns.interior) {
        const Edge& e = h.edge(ei);
        const double kappa = static_cast<double>(e.size());
        const double predicted = (x[v1] + x[vk]) / ((kappa - 1.0) * rho - (kappa - 3.0));
        double lo = 1.0, hi = 0.0;
        for (Vertex v : e) {
            if (v == v1 || v == vk) continue;
            lo = std::min(lo, x[v]);
            hi = std::max(hi, x[v]);
        }
        bool equal_mid = hi - lo <= tol;
        bool formula = std::abs(hi - predicted) <= tol && std::abs(lo - predicted) <= tol;
        bool dominated = hi < std::min(x[v1], x[vk]) - strict_margin;
        if (equal_mid && formula && dominated) {
            rep.witness("interior edge " + std::to_string(ei) + " matches the closed form",
                        hgt, {{"mid", hi}, {"predicted", predicted}});
        } else {
            rep.fail("interior edge " + std::to_string(ei) + " violates the closed form",
                     hgt,
                     {{"mid_min", lo}, {"mid_max", hi}, {"predicted", predicted},
                      {"end1", x[v1]}, {"end2", x[vk]}});
        }
    }

    for (auto [ei, u] : patterns.pendant) {
        const Edge& e = h.edge(ei);
        const double kappa = static_cast<double>(e.size());
        const double predicted = x[u] / ((kappa - 1.0) * rho - (kappa - 2.0));
        double lo = 1.0, hi = 0.0;
        for (Vertex v : e) {
            if (v == u) continue;
            lo = std::min(lo, x[v]);
            hi = std::max(hi, x[v]);
        }
        bool equal_mid = hi - lo <= tol;
        bool formula = std::abs(hi - predicted) <= tol && std::abs(lo - predicted) <= tol;
        bool dominated = hi < x[u] - strict_margin;
        if (equal_mid && formula && dominated) {
            rep.witness("pendant edge " + std::to_string(ei) + " matches the closed form",
                        hgt, {{"pendant", hi}, {"predicted", predicted}});
        } else {
            rep.fail("pendant edge " + std::to_string(ei) + " violates the closed form",
                     hgt,
                     {{"pendant_min", lo}, {"pendant_max", hi}, {"predicted", predicted},
                      {"anchor", x[u]}});
        }
    }

    for (const auto& chain : patterns.paths) {
        const std::size_t t = chain.size() - 1;  // path length in edges
        std::size_t peak = 0;
        for (std::size_t i = 1; i <= t; ++i) {
            if (x[chain[i]] > x[chain[peak]]) peak = i;
        }
        bool away_from_end = x[chain[t]] < x[chain[peak]] - strict_margin;
        bool unimodal = true;
        for (std::size_t i = 0; i < peak; ++i) {
            if (x[chain[i]] > x[chain[i + 1]] + tol) unimodal = false;
        }
        for (std::size_t i = peak; i < t; ++i) {
            if (x[chain[i]] < x[chain[i + 1]] - tol) unimodal = false;
        }
        if (away_from_end && unimodal) {
            rep.witness("pendant path of length " + std::to_string(t) +
                            " is unimodal with interior peak",
                        hgt, {{"peak_index", static_cast<double>(peak)}});
        } else {
            rep.fail("pendant path of length " + std::to_string(t) +
                         " violates unimodality",
                     hgt,
                     {{"peak_index", static_cast<double>(peak)},
                      {"peak", x[chain[peak]]}, {"end", x[chain[t]]}});
        }
    }

    rep.witness("patterns scanned", hgt,
                {{"interior", static_cast<double>(patterns.interior.size())},
                 {"pendant", static_cast<double>(patterns.pendant.size())},
                 {"paths", static_cast<double>(patterns.paths.size())}});
    return rep;
}

/// rho strictly increases when a new edge keeps the hypergraph connected.
inline VerificationReport verify_edge_addition(const Hypergraph& h, Edge e,
                                               const VerifyOptions& opt = {}) {
    VerificationReport rep;
    rep.check = "edge-addition";
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() < 2) throw EdgeTooSmall("new edge needs at least 2 vertices");
    if (h.has_edge(e)) throw DuplicateEdge("edge already present");
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("verify_edge_addition requires a connected hypergraph");
    }
    Vertex n = h.vertex_count();
    for (Vertex v : e) n = std::max(n, v + 1);
    std::vector<Edge> edges = h.edges();
    edges.push_back(e);
    Hypergraph grown = Hypergraph::from_edge_list(n, std::move(edges));
    if (!is_connected(grown)) {
        throw Disconnected("adding the edge leaves the hypergraph disconnected");
    }
    auto [before, after] = detail::compared_rhos(h, grown, opt);
    rep.params = {{"margin", strict_margin}};
    if (after > before + strict_margin) {
        rep.witness("rho strictly increases", serialize_hgt(grown),
                    {{"rho_before", before}, {"rho_after", after}});
    } else {
        rep.fail("rho did not strictly increase", serialize_hgt(grown),
                 {{"rho_before", before}, {"rho_after", after}});
    }
    return rep;
}

/**
 * Edge-shift comparison G' = G - sum e_i + sum e'_i. The eigenvector
 * hypothesis (each target entry at least the paired removed entry, slack
 * `entry_slack`) is checked against the principal eigenvector of G; when it
 * holds, rho must strictly increase; when it fails, the report says
 * hypothesis-not-met and asserts nothing.
 */
inline VerificationReport verify_edge_shift(const Hypergraph& h,
                                            const std::vector<ShiftItem>& items,
                                            const VerifyOptions& opt = {}) {
    VerificationReport rep;
    rep.check = "edge-shift";
    rep.params = {{"margin", strict_margin}, {"items", static_cast<double>(items.size())}};
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("verify_edge_shift requires a connected hypergraph");
    }
    SpectralResult sr = spectral_radius(h, opt.tol, opt.max_iter, opt.method);
    for (const ShiftItem& item : items) {
        if (item.removed.size() != item.target.size()) {
            throw BadShiftShape("removed/target must be equal-length");
        }
        for (std::size_t j = 0; j < item.removed.size(); ++j) {
            if (item.removed[j] >= h.vertex_count() || item.target[j] >= h.vertex_count()) {
                throw BadShiftShape("shift vertices must exist");
            }
            double xr = sr.eigvec[item.removed[j]];
            double xt = sr.eigvec[item.target[j]];
            if (xt < xr - entry_slack) {
                rep.witness("hypothesis-not-met: target entry below removed entry",
                            serialize_hgt(h),
                            {{"x_removed", xr}, {"x_target", xt},
                             {"edge", static_cast<double>(item.edge_index)}});
                return rep;
            }
        }
    }
    Hypergraph shifted = edge_shift(h, items);
    double before = sr.rho;
    double after = spectral_radius(shifted, opt.tol, opt.max_iter, opt.method).rho;
    if (opt.method != Method::dense && std::abs(after - before) < 10.0 * opt.sep_tol) {
        before = dense_eigen_oracle(h);
        after = dense_eigen_oracle(shifted);
    }
    if (after > before + strict_margin) {
        rep.witness("rho strictly increases", serialize_hgt(shifted),
                    {{"rho_before", before}, {"rho_after", after}});
    } else {
        rep.fail("rho did not strictly increase", serialize_hgt(shifted),
                 {{"rho_before", before}, {"rho_after", after}});
    }
    return rep;
}

/// Grafting comparison: two attachments at v (pendant p-path plus q-path)
/// beat the single (p+q)-path, strictly, for p, q > 0. The vertex v must
/// carry at least one edge of D: with an isolated v the two legs merge into
/// one path and both sides of the comparison are the same hypergraph.
inline VerificationReport verify_grafting(const Hypergraph& d, Vertex v, std::size_t p,
                                          std::size_t q, std::size_t k,
                                          const VerifyOptions& opt = {}) {
    if (p < 1 || q < 1) {
        throw InvalidAttachment("verify_grafting requires p, q > 0");
    }
    if (v >= d.vertex_count()) {
        throw InvalidAttachment("verify_grafting: v is not a vertex of D");
    }
    if (degree_profile(d).degrees[v] == 0) {
        throw InvalidAttachment(
            "verify_grafting: v must carry an edge of D; an isolated v makes "
            "both sides the same path");
    }
    VerificationReport rep;
    rep.check = "grafting";
    rep.params = {{"p", static_cast<double>(p)}, {"q", static_cast<double>(q)},
                  {"k", static_cast<double>(k)}, {"margin", strict_margin}};
    GraftSpec split_spec{d, v, p, q, Hypergraph::from_edge_list(1, {}), 0, k};
    GraftSpec line_spec{d, v, 0, p + q, Hypergraph::from_edge_list(1, {}), 0, k};
    Hypergraph split = graft(split_spec);
    Hypergraph line = graft(line_spec);
    auto [rho_split, rho_line] = detail::compared_rhos(split, line, opt);
    if (rho_split > rho_line + strict_margin) {
        rep.witness("split attachment strictly beats the single path",
                    serialize_hgt(split),
                    {{"rho_split", rho_split}, {"rho_line", rho_line}});
    } else {
        rep.fail("split attachment does not beat the single path",
                 serialize_hgt(split),
                 {{"rho_split", rho_split}, {"rho_line", rho_line}});
    }
    return rep;
}

/// Branch-split comparison: the branched configuration G2 strictly beats the
/// single path G1 of the same total length. A single branch at an isolated
/// v0 is rejected: that configuration is itself a bare path, identical to G1.
inline VerificationReport verify_branch_split(const Hypergraph& d, Vertex v0, std::size_t k,
                                              std::size_t L0,
                                              const std::vector<std::size_t>& branches,
                                              const VerifyOptions& opt = {}) {
    if (v0 >= d.vertex_count()) {
        throw InvalidAttachment("verify_branch_split: v0 is not a vertex of D");
    }
    if (branches.size() == 1 && degree_profile(d).degrees[v0] == 0) {
        throw InvalidAttachment(
            "verify_branch_split: one branch at an isolated v0 degenerates to "
            "the same path as G1");
    }
    VerificationReport rep;
    rep.check = "branch-split";
    std::size_t total = L0;
    for (std::size_t len : branches) total += len;
    rep.params = {{"L0", static_cast<double>(L0)},
                  {"branches", static_cast<double>(branches.size())},
                  {"total", static_cast<double>(total)},
                  {"margin", strict_margin}};
    Hypergraph branched = branch_split(d, v0, k, L0, branches);
    GraftSpec line_spec{d, v0, 0, total, Hypergraph::from_edge_list(1, {}), 0, k};
    Hypergraph line = graft(line_spec);
    auto [rho_line, rho_branched] = detail::compared_rhos(line, branched, opt);
    if (rho_line < rho_branched - strict_margin) {
        rep.witness("branched configuration strictly beats the single path",
                    serialize_hgt(branched),
                    {{"rho_path", rho_line}, {"rho_branched", rho_branched}});
    } else {
        rep.fail("branched configuration does not beat the single path",
                 serialize_hgt(branched),
                 {{"rho_path", rho_line}, {"rho_branched", rho_branched}});
    }
    return rep;
}

namespace detail {

struct MergeSplitConfig {
    std::size_t e1, e2, e3, e4;
    Vertex v1, v2, v3;
};

/// Locate the merge/split configuration around the edge pair: e1 and e2
/// meet at the degree-2 vertex v1; v2 in e1 and v3 in e2 are the only other
/// high-degree vertices, each of degree 2 with flanking edges e4, e3 meeting
/// e1, e2 in exactly one vertex; everything else in e1 + e2 is pendant.
inline MergeSplitConfig locate_merge_split(const Hypergraph& h, std::size_t e1_idx,
                                           std::size_t e2_idx) {
    if (e1_idx >= h.edge_count() || e2_idx >= h.edge_count() || e1_idx == e2_idx) {
        throw ConfigurationNotFound("bad edge indices");
    }
    const Edge& e1 = h.edge(e1_idx);
    const Edge& e2 = h.edge(e2_idx);
    if (e1.size() < 3 || e2.size() < 3) {
        throw ConfigurationNotFound("|e1| and |e2| must be at least 3");
    }
    auto deg = degree_profile(h).degrees;
    auto idx = vertex_edge_index(h);

    Edge common;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                          std::back_inserter(common));
    if (common.size() != 1) {
        throw ConfigurationNotFound("e1 and e2 must meet in exactly one vertex");
    }
    MergeSplitConfig cfg{};
    cfg.e1 = e1_idx;
    cfg.e2 = e2_idx;
    cfg.v1 = common[0];
    if (deg[cfg.v1] != 2) throw ConfigurationNotFound("shared vertex must have degree 2");

    auto side = [&](const Edge& e, std::size_t self, Vertex skip) {
        std::vector<Vertex> hi;
        for (Vertex v : e) {
            if (v != skip && deg[v] >= 2) hi.push_back(v);
        }
        if (hi.size() != 1 || deg[hi[0]] != 2) {
            throw ConfigurationNotFound("edge needs exactly one degree-2 outer vertex");
        }
        std::size_t flank = h.edge_count();
        for (std::size_t other : idx[hi[0]]) {
            if (other != self) flank = other;
        }
        std::size_t shared = 0;
        for (Vertex v : h.edge(flank)) {
            if (std::binary_search(e.begin(), e.end(), v)) ++shared;
        }
        if (shared != 1 || h.edge(flank).size() < 3) {
            throw ConfigurationNotFound("flanking edge must meet the side edge only at its joint and have size >= 3");
        }
        return std::make_pair(hi[0], flank);
    };
    std::tie(cfg.v2, cfg.e4) = side(e1, e1_idx, cfg.v1);
    std::tie(cfg.v3, cfg.e3) = side(e2, e2_idx, cfg.v1);
    if (cfg.e3 == cfg.e4) throw ConfigurationNotFound("flanking edges must be distinct");
    for (Vertex v : e1) {
        if (v != cfg.v1 && v != cfg.v2 && deg[v] != 1) {
            throw ConfigurationNotFound("non-joint vertex of e1 must be pendant");
        }
    }
    for (Vertex v : e2) {
        if (v != cfg.v1 && v != cfg.v3 && deg[v] != 1) {
            throw ConfigurationNotFound("non-joint vertex of e2 must be pendant");
        }
    }
    return cfg;
}

} // namespace detail

/**
 * Merge/split comparisons around two edges meeting at a degree-2 vertex.
 * `which` selects the comparison case:
 *   "1.1"/"1.2" merge e1 and e2 into one edge e' of size t containing v2, v3
 *   "2.1"/"2.2" split at v1, inserting a new size-t edge through a fresh u
 * Size and eigenvector hypotheses of the selected case are checked first
 * (entry comparisons with `entry_slack`); if any fails the report notes
 * hypothesis-not-met without asserting. Strict comparisons apply when the
 * case's strict size hypothesis holds, otherwise the comparison is allowed
 * to be an equality within sep_tol.
 */
inline VerificationReport verify_merge_split(const Hypergraph& h, const std::string& which,
                                             std::size_t e1_idx, std::size_t e2_idx,
                                             std::size_t t,
                                             const VerifyOptions& opt = {}) {
    if (which != "1.1" && which != "1.2" && which != "2.1" && which != "2.2") {
        throw std::invalid_argument("verify_merge_split: case must be 1.1, 1.2, 2.1 or 2.2");
    }
    VerificationReport rep;
    rep.check = "merge-split";
    rep.params = {{"case", which == "1.1" ? 1.1 : which == "1.2" ? 1.2
                           : which == "2.1" ? 2.1 : 2.2},
                  {"t", static_cast<double>(t)},
                  {"sep_tol", opt.sep_tol}};
    if (!is_connected(h) || h.vertex_count() == 0) {
        throw Disconnected("verify_merge_split requires a connected hypergraph");
    }
    detail::MergeSplitConfig cfg = detail::locate_merge_split(h, e1_idx, e2_idx);
    const Edge& e1 = h.edge(cfg.e1);
    const Edge& e2 = h.edge(cfg.e2);
    const std::size_t size_max = std::max(e1.size(), e2.size());
    const std::size_t size_min = std::min(e1.size(), e2.size());

    SpectralResult sr = spectral_radius(h, opt.tol, opt.max_iter, opt.method);
    const double x1 = sr.eigvec[cfg.v1];
    const double x2 = sr.eigvec[cfg.v2];
    const double x3 = sr.eigvec[cfg.v3];

    const bool merge = which[0] == '1';
    const bool v1_dominates = x1 >= x2 - entry_slack && x1 >= x3 - entry_slack;
    const bool v1_dominated = x1 <= x2 + entry_slack && x1 <= x3 + entry_slack;

    bool size_ok, vec_ok, strict;
    if (which == "1.1")      { size_ok = t >= size_max; strict = t > size_max; vec_ok = v1_dominates; }
    else if (which == "1.2") { size_ok = t <= size_max; strict = t < size_max; vec_ok = v1_dominated; }
    else if (which == "2.1") { size_ok = t <= size_min; strict = t < size_min; vec_ok = v1_dominates; }
    else                     { size_ok = t >= size_max; strict = t > size_max; vec_ok = v1_dominated; }

    if (!size_ok || !vec_ok) {
        rep.witness(std::string("hypothesis-not-met: ") +
                        (!size_ok ? "size condition on t fails" : "eigenvector condition fails"),
                    serialize_hgt(h),
                    {{"x_v1", x1}, {"x_v2", x2}, {"x_v3", x3},
                     {"t", static_cast<double>(t)}});
        return rep;
    }

    std::vector<Hypergraph> variants;
    if (merge) {
        if (t < 2) throw ConfigurationNotFound("t must be at least 2");
        Edge merged{cfg.v2, cfg.v3};
        std::vector<Vertex> pool;  // pendant vertices of e1 + e2, then v1 last
        for (const Edge* e : {&e1, &e2}) {
            for (Vertex v : *e) {
                if (v != cfg.v1 && v != cfg.v2 && v != cfg.v3) pool.push_back(v);
            }
        }
        std::sort(pool.begin(), pool.end());
        pool.push_back(cfg.v1);
        if (t - 2 > pool.size()) throw ConfigurationNotFound("t exceeds |e1 + e2|");
        merged.insert(merged.end(), pool.begin(), pool.begin() + (t - 2));
        std::sort(merged.begin(), merged.end());
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            if (i != cfg.e1 && i != cfg.e2) edges.push_back(h.edge(i));
        }
        for (const Edge& e : edges) {
            if (e == merged) throw ConfigurationNotFound("merged edge already present");
        }
        edges.push_back(merged);
        variants.push_back(detail::drop_isolated(h.vertex_count(), edges));
    } else {
        if (t < 2) throw ConfigurationNotFound("t must be at least 2");
        for (std::size_t which_edge : {cfg.e1, cfg.e2}) {
            Vertex u = h.vertex_count();
            Vertex next = u + 1;
            Edge bridge{cfg.v1, u};
            for (std::size_t j = 0; j + 2 < t; ++j) bridge.push_back(next++);
            std::sort(bridge.begin(), bridge.end());
            Edge moved;
            for (Vertex v : h.edge(which_edge)) {
                if (v != cfg.v1) moved.push_back(v);
            }
            moved.push_back(u);
            std::sort(moved.begin(), moved.end());
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < h.edge_count(); ++i) {
                if (i != which_edge) edges.push_back(h.edge(i));
            }
            edges.push_back(moved);
            edges.push_back(bridge);
            variants.push_back(Hypergraph::from_edge_list(next, std::move(edges)));
        }
    }

    const char* labels_merge[] = {"G0"};
    const char* labels_split[] = {"G1", "G2"};
    // 1.1 and 2.2 bound the variant above by rho(G); 1.2 and 2.1 below.
    const bool variant_below = which == "1.1" || which == "2.2";
    for (std::size_t i = 0; i < variants.size(); ++i) {
        auto [rho_h, rho_v] = detail::compared_rhos(h, variants[i], opt);
        const char* label = merge ? labels_merge[i] : labels_split[i];
        double diff = rho_v - rho_h;  // signed: variant minus original
        bool ok;
        std::string what;
        if (strict) {
            ok = variant_below ? diff < -strict_margin : diff > strict_margin;
            what = variant_below ? "strictly below" : "strictly above";
        } else {
            ok = variant_below ? diff <= opt.sep_tol : diff >= -opt.sep_tol;
            what = variant_below ? "at most" : "at least";
        }
        std::map<std::string, double> values{{"rho_original", rho_h},
                                             {"rho_variant", rho_v}};
        if (ok) {
            rep.witness(std::string(label) + " rho is " + what + " the original",
                        serialize_hgt(variants[i]), values);
            if (!strict && std::abs(diff) <= opt.sep_tol) {
                bool sizes_equal = t == e1.size() && t == e2.size();
                bool entries_equal = std::abs(x1 - x2) <= entry_slack &&
                                     std::abs(x1 - x3) <= entry_slack;
                rep.witness(std::string(label) +
                                " equality case; equality-clause conditions " +
                                (sizes_equal && entries_equal ? "hold" : "do not hold"),
                            {}, {{"diff", diff}});
            }
        } else {
            rep.fail(std::string(label) + " rho is not " + what + " the original",
                     serialize_hgt(variants[i]), values);
        }
    }
    return rep;
}

} // namespace hypergraph

#endif // HYPERGRAPH_VERIFY_HPP
