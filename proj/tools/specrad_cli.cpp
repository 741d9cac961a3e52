// Command-line front end: analyze / certify / witness / gap / generate /
// enumerate over the plain-text and JSON matrix formats.  JSON goes to
// stdout, diagnostics to stderr.
//
// Exit codes: 0 success; 1 input parse failure or negative entry;
// 2 enumeration found a violation; 3 certify found an equality witness;
// 4 witness requested for a two-fold matrix; 5 numerical non-convergence.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specrad/convexity.hpp"
#include "specrad/generators.hpp"
#include "specrad/oracle.hpp"
#include "specrad/serialize.hpp"
#include "specrad/spectral.hpp"
#include "specrad/structure.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitViolation = 2;
constexpr int kExitWitnessFound = 3;
constexpr int kExitNoWitness = 4;
constexpr int kExitNoConvergence = 5;

specrad::NonnegMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw specrad::ParseError("cannot open file: " + path, 0, 0);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return specrad::parse_matrix(buffer.str());
}

std::vector<double> parse_diagonal(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
    return values;
}

struct SpectralFlags {
    double tolerance = 1e-12;
    long max_iter = 100000;
    double shift = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tolerance", tolerance, "relative convergence threshold");
        cmd->add_option("--max-iter", max_iter, "power iteration cap");
        cmd->add_option("--shift", shift, "diagonal shift enforcing primitivity");
    }
    specrad::SpectralConfig config() const { return {tolerance, max_iter, shift}; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure and log-convexity analysis of nonnegative matrices"};
    app.require_subcommand(1);

    std::string path;
    SpectralFlags spectral_flags;

    auto* analyze = app.add_subcommand("analyze", "classify a matrix and print a JSON report");
    analyze->add_option("path", path, "matrix file (text or JSON)")->required();
    bool with_spectral = false;
    analyze->add_flag("--spectral", with_spectral, "include spectral radius and Perron vector");
    spectral_flags.attach(analyze);

    auto* certify = app.add_subcommand("certify", "decide Property 1; print certificate JSON");
    certify->add_option("path", path)->required();
    spectral_flags.attach(certify);

    auto* witness = app.add_subcommand("witness", "construct an equality witness JSON");
    witness->add_option("path", path)->required();
    spectral_flags.attach(witness);

    auto* gap = app.add_subcommand("gap", "print the convexity gap phi(t) over a t-grid");
    gap->add_option("path", path)->required();
    std::string c_csv, d_csv, t_csv;
    gap->add_option("--C", c_csv, "comma-separated diagonal C")->required();
    gap->add_option("--D", d_csv, "comma-separated diagonal D")->required();
    gap->add_option("--t-grid", t_csv, "comma-separated t values (default 0.1..0.9)");
    spectral_flags.attach(gap);

    auto* generate = app.add_subcommand("generate", "emit a matrix family in text format");
    specrad::GeneratorSpec gen_spec;
    std::string blocks_csv;
    generate->add_option("--family", gen_spec.family,
                         "wielandt | partly_decomposable_two_fold | worked_4x4 | n_cycle | "
                         "cyclic_normal | remark_2x2 | random_pattern | random_matrix")
        ->required();
    generate->add_option("--n", gen_spec.n, "dimension");
    generate->add_option("--seed", gen_spec.seed, "seed (random families)");
    generate->add_option("--density", gen_spec.density, "cell density in (0,1] (random families)");
    generate->add_option("--blocks", blocks_csv, "comma-separated class sizes (cyclic_normal)");

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive or sampled theorem checks");
    int enum_n = 3;
    int sample = 0;
    std::uint64_t enum_seed = 0;
    std::string check = "all";
    enumerate->add_option("--n", enum_n, "pattern dimension")->required();
    enumerate->add_option("--sample", sample, "sample budget (required for n > 4)");
    enumerate->add_option("--seed", enum_seed, "sampling seed");
    enumerate->add_option("--check", check, "all | twofold | property1");
    spectral_flags.attach(enumerate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            specrad::NonnegMatrix m = load_matrix(path);
            specrad::StructureReport report = specrad::classify(m.pattern());
            nlohmann::json j = specrad::report_to_json(report);
            if (with_spectral) {
                auto cfg = spectral_flags.config();
                double r = specrad::spectral_radius(m, cfg);
                nlohmann::json s{{"radius", r}};
                if (report.irreducible) s["perron_vector"] = specrad::perron_pair(m, cfg).vector;
                j["spectral"] = s;
            }
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (*certify) {
            specrad::NonnegMatrix m = load_matrix(path);
            specrad::ConvexityCertificate cert = specrad::certify(m, spectral_flags.config());
            std::cout << specrad::certificate_to_json(cert).dump(2) << '\n';
            return cert.strict ? 0 : kExitWitnessFound;
        }
        if (*witness) {
            specrad::NonnegMatrix m = load_matrix(path);
            if (specrad::is_two_fold(m.pattern())) {
                std::cerr << "matrix is two-fold irreducible: no equality witness exists\n";
                return kExitNoWitness;
            }
            auto w = specrad::construct_witness(m, spectral_flags.config());
            std::cout << specrad::witness_to_json(w).dump(2) << '\n';
            return 0;
        }
        if (*gap) {
            specrad::NonnegMatrix m = load_matrix(path);
            specrad::DiagonalParams c(parse_diagonal(c_csv));
            specrad::DiagonalParams d(parse_diagonal(d_csv));
            std::vector<double> ts;
            if (t_csv.empty())
                for (int k = 1; k <= 9; ++k) ts.push_back(k / 10.0);
            else
                ts = parse_diagonal(t_csv);
            auto cfg = spectral_flags.config();
            std::cout.precision(15);
            for (double t : ts)
                std::cout << t << ' ' << specrad::convexity_gap(m, c, d, t, cfg) << '\n';
            return 0;
        }
        if (*generate) {
            if (!blocks_csv.empty())
                for (double v : parse_diagonal(blocks_csv))
                    gen_spec.blocks.push_back(static_cast<int>(v));
            std::cout << specrad::write_matrix_text(specrad::generate(gen_spec));
            return 0;
        }
        if (*enumerate) {
            auto cfg = spectral_flags.config();
            nlohmann::json j;
            std::uint64_t violations = 0;
            if (check == "property1") {
                nlohmann::json details = nlohmann::json::array();
                std::uint64_t checked = 0;
                auto probe = [&](const specrad::SignPattern& p) {
                    if (!specrad::pattern_has_cycle(p)) return;
                    ++checked;
                    auto res = specrad::property1_numeric_probe(p, 3, enum_seed + checked, cfg);
                    if (!res.agree) {
                        ++violations;
                        details.push_back({{"pattern_bits", p.to_bits()}, {"detail", res.detail}});
                    }
                };
                if (sample > 0)
                    for (const auto& p : specrad::sample_patterns(enum_n, sample, enum_seed)) probe(p);
                else
                    specrad::enumerate_patterns(enum_n, specrad::PatternFilter::all, probe);
                j = {{"n", enum_n}, {"patterns", checked}, {"violations", details}};
            } else {
                std::vector<specrad::SweepViolation> found;
                std::uint64_t checked = 0;
                auto run = [&](const specrad::SignPattern& p) {
                    ++checked;
                    if (check == "twofold") {
                        bool tf = specrad::is_two_fold(p);
                        auto pt = p.transposed();
                        bool s2 = specrad::is_irreducible(specrad::product_pattern(p, p)) &&
                                  specrad::is_irreducible(specrad::product_pattern(pt, p));
                        bool s6 = specrad::irreducible_by_powers(p) && specrad::is_chainable(p);
                        if (p.dim() > 1 && (tf != s2 || tf != s6))
                            found.push_back({"two_fold_equivalence", p.dim(), p.to_bits()});
                    } else {
                        specrad::check_pattern_theorems(p, found);
                    }
                };
                if (sample > 0) {
                    for (const auto& p : specrad::sample_patterns(enum_n, sample, enum_seed)) run(p);
                } else if (enum_n <= 4 && check == "all") {
                    auto report = specrad::theorem_sweep(enum_n);
                    checked = report.patterns;
                    found = report.violations;
                } else {
                    specrad::enumerate_patterns(enum_n, specrad::PatternFilter::all, run);
                }
                violations = found.size();
                specrad::SweepReport report{enum_n, checked, std::move(found)};
                j = specrad::sweep_to_json(report);
            }
            std::cout << j.dump(2) << '\n';
            return violations == 0 ? 0 : kExitViolation;
        }
    } catch (const specrad::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
                  << '\n';
        return kExitParse;
    } catch (const specrad::ConvergenceError& e) {
        std::cerr << "did not converge after " << e.iterations << " iterations; last bracket ["
                  << e.lower << ", " << e.upper << "]\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return 0;
}
