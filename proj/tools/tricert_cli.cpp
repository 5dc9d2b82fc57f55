#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <tricert/tricert.hpp>

using namespace tricert;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
}

Graph load_graph(const std::string& path) { return parse_graph_lenient(slurp(path)).graph; }

void dump_chains_to_stderr(const Graph& g, int root) {
    if (find_non_simple(g) || precheck(g) || root < 0 || root >= g.n) return;
    auto dr = run_dfs(g, root);
    if (!std::holds_alternative<DfsForest>(dr)) return;
    auto dec = decompose(g, std::move(std::get<DfsForest>(dr)));
    if (auto* d = std::get_if<ChainDecomposition>(&dec)) {
        classify(*d);
        std::cerr << dump_chains(*d);
    }
}

CertifyResult run_certify(const Graph& g, int root, bool dump) {
    if (root < 0 || root >= std::max(g.n, 1)) throw UsageError("root out of range");
    if (dump) dump_chains_to_stderr(g, root);
    CertifyOptions opt;
    opt.root = root;
    return certify(g, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying 3-connectivity"};
    app.require_subcommand(1);
    app.fallthrough();
    int root = 1;
    bool dump = false;
    app.add_option("--root", root, "DFS root (1-based)");
    app.add_flag("--dump-chains", dump, "print the chain decomposition to stderr");

    std::string graph_path, cert_path, out_path, target = "edge-ops";
    auto* check = app.add_subcommand("check", "test a graph for 3-connectivity");
    check->add_option("graph", graph_path)->required();

    auto* cert = app.add_subcommand("certify", "write a certificate");
    cert->add_option("graph", graph_path)->required();
    cert->add_option("--out,-o", out_path);

    auto* verify = app.add_subcommand("verify", "check a certificate");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("--cert", cert_path)->required();

    auto* edge3 = app.add_subcommand("edge3", "test for 3-edge-connectivity");
    edge3->add_option("graph", graph_path)->required();
    edge3->add_option("--out,-o", out_path);
    edge3->add_option("--cert", cert_path, "verify this edge3 certificate instead");

    auto* transform = app.add_subcommand("transform", "derive operation or removal sequences");
    transform->add_option("graph", graph_path)->required();
    transform->add_option("--cert", cert_path)->required();
    transform->add_option("--to", target)->check(CLI::IsMember({"removals", "edge-ops"}));

    int ops = 0, gadget_ops = 2;
    std::uint64_t seed = 1;
    bool plant = false;
    auto* gen = app.add_subcommand("gen", "generate a random 3-connected graph");
    gen->add_option("--ops", ops)->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed);
    gen->add_flag("--plant-pair", plant, "glue a gadget on two vertices");
    gen->add_option("--gadget-ops", gadget_ops)->check(CLI::NonNegativeNumber);

    std::vector<int> sizes;
    int runs = 5;
    auto* bench = app.add_subcommand("bench", "time certify on generated graphs");
    bench->add_option("--sizes", sizes, "operation counts")->delimiter(',')->required();
    bench->add_option("--runs", runs)->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    --root;

    try {
        if (*check) {
            Graph g = load_graph(graph_path);
            CertifyResult r = run_certify(g, root, dump);
            if (r.positive()) {
                std::cout << "3-connected\n";
                return 0;
            }
            std::cout << format_witness(*r.witness) << '\n';
            return 1;
        }
        if (*cert) {
            Graph g = load_graph(graph_path);
            CertifyResult r = run_certify(g, root, dump);
            emit(out_path, r.positive() ? format_certificate(*r.certificate) : format_negative(*r.witness));
            return r.positive() ? 0 : 1;
        }
        if (*verify) {
            Graph g = load_graph(graph_path);
            CertificateFile cf = parse_certificate(slurp(cert_path));
            if (!cf.positive) {
                bool ok = verify_witness(g, cf.witness);
                std::cout << (ok ? "accept witness\n" : "reject witness\n");
                return ok ? 0 : 1;
            }
            VerifyResult vr = verify_certificate(g, cf.cert);
            if (vr.accepted) {
                std::cout << "accept\n";
                return 0;
            }
            std::cout << "reject step=" << vr.step << " reason=" << reject_name(vr.reason) << '\n';
            return 1;
        }
        if (*edge3) {
            Graph g = load_graph(graph_path);
            if (find_non_simple(g)) throw UsageError("input graph is not simple");
            if (g.n < 2) throw UsageError("need at least two vertices");
            if (!cert_path.empty()) {
                Edge3VerifyResult vr = verify_edge3(g, parse_edge3_certificate(slurp(cert_path)));
                if (vr.accepted) {
                    std::cout << "accept\n";
                    return 0;
                }
                if (!vr.phi_ok) std::cout << "reject reason=phi\n";
                else std::cout << "reject step=" << vr.inner.step << " reason=" << reject_name(vr.inner.reason) << '\n';
                return 1;
            }
            Edge3Result r = certify_edge3(g);
            emit(out_path, format_edge3_result(r));
            return r.positive() ? 0 : 1;
        }
        if (*transform) {
            Graph g = load_graph(graph_path);
            CertificateFile cf = parse_certificate(slurp(cert_path));
            if (!cf.positive) throw UsageError("transform needs a positive certificate");
            try {
                if (target == "removals") {
                    RemovalSequence rs = to_removal_sequence(g, cf.cert);
                    std::cout << format_removal_sequence(rs);
                    if (!rs.all_ok) std::cerr << "side conditions violated on some removal\n";
                } else {
                    std::cout << format_edge_representation(to_edge_representation(g, cf.cert));
                }
            } catch (const TransformError& e) {
                std::cerr << e.what() << '\n';
                return 1;
            }
            return 0;
        }
        if (*gen) {
            Graph g = gen_random_3connected(ops, seed);
            if (plant) {
                PlantedGraph p = plant_separation_pair(g, seed, gadget_ops);
                std::cout << "c planted pair " << p.u + 1 << ' ' << p.v + 1 << '\n';
                g = std::move(p.graph);
            }
            std::cout << format_graph(g);
            return 0;
        }
        if (*bench) {
            std::cout << "n,m,micros\n";
            for (int k : sizes) {
                if (k < 0) throw UsageError("sizes must be non-negative");
                Graph g = gen_random_3connected(k, seed);
                std::vector<long long> t;
                for (int r = 0; r < runs; ++r) {
                    auto t0 = std::chrono::steady_clock::now();
                    CertifyResult res = certify(g);
                    auto t1 = std::chrono::steady_clock::now();
                    if (!res.positive()) throw InternalError("generated graph was not certified");
                    t.push_back(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
                }
                std::nth_element(t.begin(), t.begin() + t.size() / 2, t.end());
                std::cout << g.n << ',' << g.m << ',' << t[t.size() / 2] << '\n';
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
