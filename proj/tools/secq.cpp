// secq: equations and bottom syzygies of secant varieties of osculating
// varieties, over exact rational arithmetic.
//
// Subcommands:
//   equations  <variety.json> --q N --k N [--method jets|sampling]
//   betti-row  <variety.json> --q N --k N --p-max N [--arithmetic modp:P]
//   verify     <suite|all>
//
// Every probabilistic result is pinned to --seed (default 1729); identical
// invocations produce byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "tsy/ideal.hpp"
#include "tsy/json_io.hpp"
#include "tsy/koszul.hpp"
#include "tsy/verify.hpp"

using namespace tsy;
using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 1729;

struct CommonOpts {
    uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string arithmetic = "exact";
};

uint64_t parse_modp(const std::string& arithmetic) {
    if (arithmetic == "exact") return 0;
    if (arithmetic.rfind("modp:", 0) == 0) {
        uint64_t p = std::stoull(arithmetic.substr(5));
        if (p < 2 || !is_prime_u64(p)) throw CLI::ValidationError("--arithmetic", "p must be prime");
        return p;
    }
    throw CLI::ValidationError("--arithmetic", "expected exact or modp:P");
}

// Monomial printer: x0*x4 - 4*x1*x3 + 3*x2^2, highest monomial first,
// primitive integer coefficients, leading sign positive.
std::string quadric_str(const El& e) {
    if (e.zero()) return "0";
    std::vector<std::pair<MultiLabel, Rat>> terms(e.terms().begin(), e.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return sym_rank(a.first[0]) > sym_rank(b.first[0]);
    });
    RatVec coeffs;
    for (auto& [l, v] : terms) coeffs.push_back(v);
    make_primitive(coeffs);
    if (coeffs.front() < 0)
        for (auto& c : coeffs) c = -c;
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        const Rat& c = coeffs[i];
        bool first = os.tellp() == 0;
        if (!first) os << (c < 0 ? " - " : " + ");
        if (first && c < 0) os << "-";
        Rat a = abs(c);
        bool wrote = false;
        if (a != 1) {
            os << rat_str(a);
            wrote = true;
        }
        const FactorLabel& mono = terms[i].first[0];
        for (size_t t = 0; t < mono.size();) {
            size_t run = t;
            while (run < mono.size() && mono[run] == mono[t]) ++run;
            if (wrote) os << "*";
            os << "x" << mono[t];
            if (run - t > 1) os << "^" << run - t;
            wrote = true;
            t = run;
        }
        if (!wrote) os << "1";
    }
    return os.str();
}

int cmd_equations(const std::string& path, int q, int k, const std::string& method,
                  const CommonOpts& opts) {
    if (parse_modp(opts.arithmetic) != 0) {
        std::cerr << "equations are exact by contract; --arithmetic=modp applies to betti-row\n";
        return 1;
    }
    JetVariety x = variety_from_file(path);
    IdealMethod m = method == "sampling" ? IdealMethod::Sampling : IdealMethod::Jets;
    std::vector<El> basis = ideal_bottom_component(x, q, k, m, opts.seed);

    if (opts.format == "json") {
        json out;
        out["variety"] = x.kind();
        out["q"] = q;
        out["k"] = k;
        out["seed"] = opts.seed;
        out["method"] = method;
        out["dim"] = basis.size();
        json bs = json::array();
        for (const auto& e : basis) bs.push_back(quadric_str(e));
        out["basis"] = std::move(bs);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "dim=" << basis.size();
        if (!basis.empty()) {
            std::cout << "; basis: ";
            for (size_t i = 0; i < basis.size(); ++i)
                std::cout << (i ? " ; " : "") << quadric_str(basis[i]);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_betti_row(const std::string& path, int q, int k, int p_max, const CommonOpts& opts) {
    uint64_t p_filter = parse_modp(opts.arithmetic);
    JetVariety x = variety_from_file(path);
    auto bottom = ideal_bottom_component(x, q, k, IdealMethod::Jets, opts.seed);
    auto next = ideal_degree_slice_sampled(x, q, k, q + 2, opts.seed ^ 0x9e3779b9);
    std::map<int, std::vector<El>> degs;
    degs[q + 1] = std::move(bottom);
    degs[q + 2] = std::move(next);
    GradedIdealSlice slice(x.ambient(), std::move(degs), Provenance::Sampled);

    std::vector<int64_t> dims;
    for (int p = 0; p <= p_max; ++p)
        dims.push_back(koszul_cohomology_dim(slice, {p, q + 1, Kind::Ext}, true, p_filter));

    const char* label = p_filter ? "filter" : "probabilistic, seed-pinned";
    if (opts.format == "csv") {
        std::cout << "p,dim\n";
        for (int p = 0; p <= p_max; ++p) std::cout << p << "," << dims[p] << "\n";
    } else if (opts.format == "json") {
        json out;
        out["variety"] = x.kind();
        out["q"] = q;
        out["k"] = k;
        out["seed"] = opts.seed;
        out["label"] = label;
        out["dims"] = dims;
        std::cout << out.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < dims.size(); ++i) std::cout << (i ? "," : "") << dims[i];
        std::cout << "  [" << label << "; seed=" << opts.seed << "]\n";
    }
    return 0;
}

int cmd_verify(const std::string& which, const CommonOpts& opts) {
    std::vector<std::string> names;
    if (which == "all")
        names = verify::suite_names();
    else if (verify::registry().count(which))
        names = {which};
    else {
        std::cerr << "unknown suite: " << which << "\nknown suites:";
        for (const auto& n : verify::suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 1;
    }

    bool all_pass = true;
    json report = json::array();
    for (const auto& name : names) {
        verify::Suite suite = verify::registry().at(name)(opts.seed);
        for (const auto& c : suite) {
            all_pass = all_pass && c.pass;
            if (opts.format == "json") {
                json jc;
                jc["suite"] = name;
                jc["name"] = c.name;
                jc["expected"] = c.expected;
                jc["got"] = c.got;
                jc["pass"] = c.pass;
                jc["instances"] = c.instances;
                jc["seed"] = opts.seed;
                report.push_back(std::move(jc));
            } else {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << name << "/" << c.name
                          << ": expected " << c.expected << ", got " << c.got << "\n";
            }
        }
    }
    if (opts.format == "json") std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equations and bottom syzygies of secant varieties of osculating varieties"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string variety_path, method = "jets", suite = "all";
    int q = 1, k = 1, p_max = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opts.seed, "RNG seed (default 1729)");
        cmd->add_option("--format", opts.format, "text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--arithmetic", opts.arithmetic, "exact|modp:P");
    };

    CLI::App* eq = app.add_subcommand("equations", "bottom-degree equations of the ideal");
    eq->add_option("variety", variety_path, "variety descriptor (JSON)")->required();
    eq->add_option("--q", q, "secant index")->required();
    eq->add_option("--k", k, "osculating order")->required();
    eq->add_option("--method", method, "jets|sampling")
        ->check(CLI::IsMember({"jets", "sampling"}));
    add_common(eq);

    CLI::App* br = app.add_subcommand("betti-row", "bottom row of Koszul cohomology dimensions");
    br->add_option("variety", variety_path, "variety descriptor (JSON)")->required();
    br->add_option("--q", q, "secant index")->required();
    br->add_option("--k", k, "osculating order")->required();
    br->add_option("--p-max", p_max, "largest homological index")->required();
    add_common(br);

    CLI::App* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("suite", suite, "suite name or 'all'");
    add_common(vf);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eq->parsed()) return cmd_equations(variety_path, q, k, method, opts);
        if (br->parsed()) return cmd_betti_row(variety_path, q, k, p_max, opts);
        return cmd_verify(suite, opts);
    } catch (const DegenerateOracle& e) {
        std::cerr << "oracle degeneracy: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
