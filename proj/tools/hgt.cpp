// Command-line surface for generation, spectra, enumeration, verification
// and export. Exit codes: 0 success (and verification passed), 1 failed
// verification, 2 usage or I/O error.

#include <CLI11.hpp>

#include <hypergraph/enumeration.hpp>
#include <hypergraph/format.hpp>
#include <hypergraph/generators.hpp>
#include <hypergraph/hgt_io.hpp>
#include <hypergraph/spectral.hpp>
#include <hypergraph/verify.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace hypergraph;

struct CliConfig {
    double tol = 1e-12;
    std::size_t max_iter = 1000000;
    double sep_tol = 1e-9;
    std::string method = "power";
    std::string format = "text";
    std::uint32_t budget = 5000;

    Method parsed_method() const {
        return method == "dense" ? Method::dense : Method::power;
    }
    VerifyOptions verify_options() const {
        return VerifyOptions{tol, max_iter, sep_tol, parsed_method(), budget};
    }
    EnumOptions enum_options() const {
        return EnumOptions{tol, max_iter, parsed_method(), budget};
    }
};

std::size_t uniformity_or(const Hypergraph& h, std::size_t requested, const char* what) {
    if (requested > 0) return requested;
    auto k = h.uniformity();
    if (!k) {
        throw std::invalid_argument(std::string(what) +
                                    ": --k required for non-uniform input");
    }
    return *k;
}

int emit_report(const VerificationReport& rep, const CliConfig& cfg,
                const std::string& out_path) {
    std::string text = cfg.format == "json" ? rep.to_json().dump(2) + "\n"
                     : cfg.format == "csv"  ? rep.csv()
                                            : rep.summary();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write " + out_path);
        f << text;
    }
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    using namespace hypergraph;

    CLI::App app{"hypergraph spectral radius toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--tol", cfg.tol, "solver residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-iter", cfg.max_iter, "power iteration cap");
    app.add_option("--sep-tol", cfg.sep_tol, "separation tolerance for strict comparisons");
    app.add_option("--method", cfg.method, "eigensolver: power or dense")
        ->check(CLI::IsMember({"power", "dense"}));
    app.add_option("--format", cfg.format, "report format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--budget", cfg.budget, "vertex budget for enumeration");

    // gen <family> --k --m [--l1 --l2] -o FILE, plus the surgery constructions
    auto* gen = app.add_subcommand("gen", "generate a named family or construction");
    std::string family, gen_out, gen_in, gen_with;
    std::size_t gk = 0, gm = 0, gl1 = 0, gl2 = 0, gp = 0, gq = 0, gl0 = 0, gedge = 0;
    Vertex gv = 0, gw = 0;
    std::vector<std::size_t> gbranches;
    std::vector<Vertex> gremoved, gtarget;
    gen->add_option("family", family,
                    "superstar | hyperpath | double_hyperstar | power | graft | split | shift")
        ->required()
        ->check(CLI::IsMember({"superstar", "hyperpath", "double_hyperstar", "power",
                               "graft", "split", "shift"}));
    gen->add_option("--k", gk, "edge size");
    gen->add_option("--m", gm, "edge count");
    gen->add_option("--l1", gl1, "pendant edges at u1");
    gen->add_option("--l2", gl2, "pendant edges at u2");
    gen->add_option("-i,--input", gen_in,
                    "input HGT file (power: 2-uniform tree; graft/split: D; shift: source)");
    gen->add_option("--with", gen_with, "HGT file for the grafted H (default: one vertex)");
    gen->add_option("--v", gv, "attachment vertex in D");
    gen->add_option("--w", gw, "attachment vertex in H");
    gen->add_option("--p", gp, "pendant path length");
    gen->add_option("--q", gq, "connecting path length");
    gen->add_option("--l0", gl0, "main path length");
    gen->add_option("--branches", gbranches, "branch lengths, ascending")->delimiter(',');
    gen->add_option("--edge", gedge, "edge index to shift");
    gen->add_option("--removed", gremoved, "removed vertices")->delimiter(',');
    gen->add_option("--target", gtarget, "target vertices")->delimiter(',');
    gen->add_option("-o,--output", gen_out, "output HGT file")->required();

    // rho FILE [--method --tol]
    auto* rho_cmd = app.add_subcommand("rho", "spectral radius of an HGT file");
    std::string rho_in;
    rho_cmd->add_option("file", rho_in, "input HGT file")->required();

    // enum --k --m --out DIR [--csv FILE]
    auto* enum_cmd = app.add_subcommand("enum", "enumerate supertree classes");
    std::size_t ek = 0;
    std::uint32_t em = 0;
    std::string enum_dir, enum_csv;
    enum_cmd->add_option("--k", ek, "edge size")->required();
    enum_cmd->add_option("--m", em, "edge count")->required();
    enum_cmd->add_option("--out", enum_dir, "directory for one HGT per class")->required();
    enum_cmd->add_option("--csv", enum_csv, "catalog CSV file");

    // export mm FILE -o FILE
    auto* export_cmd = app.add_subcommand("export", "export derived artifacts");
    export_cmd->require_subcommand(1);
    auto* export_mm = export_cmd->add_subcommand("mm", "adjacency matrix in MatrixMarket form");
    std::string mm_in, mm_out;
    export_mm->add_option("file", mm_in, "input HGT file")->required();
    export_mm->add_option("-o,--output", mm_out, "output .mtx file")->required();

    // verify <check> ...
    auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
    verify_cmd->require_subcommand(1);
    std::string report_out;
    verify_cmd->add_option("-o,--output", report_out, "write the report here instead of stdout");

    auto* v_extremal = verify_cmd->add_subcommand("extremal", "extremal ordering over the catalog");
    std::size_t vk = 0;
    std::uint32_t vm = 0;
    v_extremal->add_option("--k", vk, "edge size")->required();
    v_extremal->add_option("--m", vm, "edge count")->required();

    auto* v_pendant = verify_cmd->add_subcommand("pendant", "pendant eigenvector identities");
    std::string pendant_in;
    v_pendant->add_option("file", pendant_in, "input HGT file")->required();

    auto* v_shift = verify_cmd->add_subcommand("shift", "edge-shift monotonicity");
    std::string shift_in;
    std::size_t shift_edge = 0;
    std::vector<Vertex> shift_removed, shift_target;
    v_shift->add_option("file", shift_in, "input HGT file")->required();
    v_shift->add_option("--edge", shift_edge, "edge index")->required();
    v_shift->add_option("--removed", shift_removed, "removed vertices")
        ->required()->delimiter(',');
    v_shift->add_option("--target", shift_target, "target vertices")
        ->required()->delimiter(',');

    auto* v_graft = verify_cmd->add_subcommand("graft", "grafting comparison");
    std::string graft_in;
    Vertex graft_v = 0;
    std::size_t graft_p = 0, graft_q = 0, graft_k = 0;
    v_graft->add_option("file", graft_in, "input HGT file for D")->required();
    v_graft->add_option("--v", graft_v, "attachment vertex")->required();
    v_graft->add_option("--p", graft_p, "pendant path length")->required();
    v_graft->add_option("--q", graft_q, "connecting path length")->required();
    v_graft->add_option("--k", graft_k, "path edge size (defaults to D's uniformity)");

    auto* v_split = verify_cmd->add_subcommand("split", "branch-split comparison");
    std::string split_in;
    Vertex split_v0 = 0;
    std::size_t split_k = 0, split_l0 = 0;
    std::vector<std::size_t> split_branches;
    v_split->add_option("file", split_in, "input HGT file for D")->required();
    v_split->add_option("--v0", split_v0, "attachment vertex")->required();
    v_split->add_option("--l0", split_l0, "main path length")->required();
    v_split->add_option("--branches", split_branches, "branch lengths, ascending")
        ->required()->delimiter(',');
    v_split->add_option("--k", split_k, "path edge size (defaults to D's uniformity)");

    auto* v_merge = verify_cmd->add_subcommand("merge", "merge/split case comparison");
    std::string merge_in, merge_case;
    std::size_t merge_e1 = 0, merge_e2 = 0, merge_t = 0;
    v_merge->add_option("file", merge_in, "input HGT file")->required();
    v_merge->add_option("--case", merge_case, "comparison case: 1.1, 1.2, 2.1 or 2.2")
        ->required()->check(CLI::IsMember({"1.1", "1.2", "2.1", "2.2"}));
    v_merge->add_option("--e1", merge_e1, "first edge index")->required();
    v_merge->add_option("--e2", merge_e2, "second edge index")->required();
    v_merge->add_option("--t", merge_t, "size of the inserted edge")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0, usage errors exit 2
    }
    if (cfg.sep_tol < cfg.tol) {
        std::cerr << "error: --sep-tol must be at least --tol\n";
        return 2;
    }

    try {
        if (*gen) {
            auto input = [&]() {
                if (gen_in.empty()) {
                    throw std::invalid_argument("gen " + family + ": -i FILE required");
                }
                return read_hgt(gen_in);
            };
            Hypergraph h;
            if (family == "superstar" || family == "hyperpath") {
                if (gk == 0 || gm == 0) {
                    throw std::invalid_argument("gen " + family + ": --k and --m required");
                }
                h = family == "superstar" ? superstar(gk, gm) : hyperpath(gk, gm);
            } else if (family == "double_hyperstar") {
                if (gk == 0 || gl1 == 0 || gl2 == 0) {
                    throw std::invalid_argument(
                        "gen double_hyperstar: --k, --l1 and --l2 required");
                }
                h = double_hyperstar(gk, gl1, gl2);
            } else if (family == "power") {
                Hypergraph tree = input();
                if (tree.uniformity() != 2) {
                    throw std::invalid_argument("gen power: input must be a 2-uniform tree");
                }
                std::vector<std::pair<Vertex, Vertex>> pairs;
                for (const Edge& e : tree.edges()) pairs.emplace_back(e[0], e[1]);
                if (gk == 0) throw std::invalid_argument("gen power: --k required");
                h = power_k(pairs, gk);
            } else if (family == "graft") {
                Hypergraph d = input();
                Hypergraph with = gen_with.empty() ? Hypergraph::from_edge_list(1, {})
                                                   : read_hgt(gen_with);
                h = graft({d, gv, gp, gq, with, gw,
                           uniformity_or(d, gk, "gen graft")});
            } else if (family == "split") {
                Hypergraph d = input();
                h = branch_split(d, gv, uniformity_or(d, gk, "gen split"), gl0, gbranches);
            } else {  // shift
                h = edge_shift(input(), {{gedge, gremoved, gtarget}});
            }
            write_hgt(gen_out, h);
            return 0;
        }
        if (*rho_cmd) {
            Hypergraph h = read_hgt(rho_in);
            SpectralResult r = spectral_radius(h, cfg.tol, cfg.max_iter, cfg.parsed_method());
            std::cout << "rho = " << format_significant(r.rho) << "\n";
            return 0;
        }
        if (*enum_cmd) {
            Catalog cat = enumerate_supertrees(ek, em, cfg.enum_options());
            std::filesystem::create_directories(enum_dir);
            for (std::size_t i = 0; i < cat.entries.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof(name), "class_%03zu.hgt", i);
                write_hgt((std::filesystem::path(enum_dir) / name).string(),
                          cat.entries[i].representative);
            }
            if (!enum_csv.empty()) {
                std::ofstream f(enum_csv, std::ios::binary);
                if (!f) throw ParseError("cannot write " + enum_csv);
                f << catalog_csv(cat);
            }
            std::cout << "classes = " << cat.entries.size() << "\n";
            return 0;
        }
        if (*export_mm) {
            Hypergraph h = read_hgt(mm_in);
            std::ofstream f(mm_out, std::ios::binary);
            if (!f) throw ParseError("cannot write " + mm_out);
            f << matrix_market(adjacency_matrix(h));
            return 0;
        }
        if (*verify_cmd) {
            VerifyOptions opt = cfg.verify_options();
            VerificationReport rep;
            if (*v_extremal) {
                rep = verify_extremal(vk, vm, cfg.sep_tol, opt);
            } else if (*v_pendant) {
                rep = verify_pendant_identities(read_hgt(pendant_in), cfg.sep_tol, opt);
            } else if (*v_shift) {
                ShiftItem item{shift_edge, shift_removed, shift_target};
                rep = verify_edge_shift(read_hgt(shift_in), {item}, opt);
            } else if (*v_graft) {
                Hypergraph d = read_hgt(graft_in);
                rep = verify_grafting(d, graft_v, graft_p, graft_q,
                                      uniformity_or(d, graft_k, "verify graft"), opt);
            } else if (*v_split) {
                Hypergraph d = read_hgt(split_in);
                rep = verify_branch_split(d, split_v0,
                                          uniformity_or(d, split_k, "verify split"),
                                          split_l0, split_branches, opt);
            } else {
                rep = verify_merge_split(read_hgt(merge_in), merge_case, merge_e1,
                                         merge_e2, merge_t, opt);
            }
            return emit_report(rep, cfg, report_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
