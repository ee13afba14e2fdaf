#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <optional>

#include "fermat/constants.hpp"
#include "fermat/parser.hpp"
#include "fermat/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct GlobalConfig {
    std::string ring_text = "n=3;m=2,2,2;field=4";
};

fermat::RingSpecPtr make_ring(const GlobalConfig& config) {
    const fermat::RingSpecText parsed = fermat::parse_ring_spec(config.ring_text, 4);
    return fermat::RingSpec::make(parsed.n, parsed.exponents, parsed.conductor);
}

// Builds the derivation selected by --matrix or --images.
fermat::Derivation derivation_from_flags(const fermat::RingSpecPtr& spec, const std::string& matrix_text,
                                         const std::string& images_text) {
    if (!matrix_text.empty() && !images_text.empty())
        throw fermat::UsageError("give either --matrix or --images, not both");
    if (!matrix_text.empty()) {
        std::string body = matrix_text;
        const std::string tag = "matrix:";
        if (body.rfind(tag, 0) == 0) body = body.substr(tag.size());
        const fermat::Matrix m = fermat::parse_matrix(body, spec->field());
        return fermat::LinearDerivation::from_matrix(spec, m).derivation();
    }
    if (!images_text.empty()) {
        fermat::Derivation d(spec, fermat::parse_images(images_text, spec));
        if (!d.certified())
            throw fermat::NotADerivationError(
                "images do not define a derivation; residue: " + d.residue().str(), d.residue().str());
        return d;
    }
    throw fermat::UsageError("a derivation is required: pass --matrix or --images");
}

fermat::LinearDerivation linear_from_matrix_flag(const fermat::RingSpecPtr& spec,
                                                 const std::string& matrix_text) {
    if (matrix_text.empty()) throw fermat::UsageError("--matrix is required");
    std::string body = matrix_text;
    const std::string tag = "matrix:";
    if (body.rfind(tag, 0) == 0) body = body.substr(tag.size());
    return fermat::LinearDerivation::from_matrix(spec, fermat::parse_matrix(body, spec->field()));
}

std::vector<fermat::CycloNum> parse_candidates(const std::string& text, const fermat::FieldPtr& field) {
    std::vector<fermat::CycloNum> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(fermat::parse_coefficient(text.substr(start, comma - start), field));
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for derivations of the rings C[X1..Xn]/(X1^m1+...+Xn^mn)"};
    app.require_subcommand(1);
    GlobalConfig config;
    app.add_option("--ring", config.ring_text, "Ring spec, e.g. \"n=3;m=2,2,2;field=4\"");

    std::string expr_arg, matrix_arg, images_arg, alpha_arg = "1", candidates_arg;
    unsigned max_degree = 6, bound = 2;
    unsigned odd_n = 0, even_n = 0;
    std::string mono_arg;

    CLI::App* reduce = app.add_subcommand("reduce", "Print the normal form of an expression");
    reduce->add_option("expr", expr_arg, "Polynomial expression")->required();

    CLI::App* apply = app.add_subcommand("apply", "Apply a derivation to an expression");
    apply->add_option("expr", expr_arg)->required();
    apply->add_option("--matrix", matrix_arg, "Associated matrix rows 'a,b;c,d'");
    apply->add_option("--images", images_arg, "Images 'd(x1)=...; d(x2)=...'");

    CLI::App* gens = app.add_subcommand("gens", "Print the canonical generators");

    CLI::App* linspace = app.add_subcommand("linspace", "Basis of the space of valid linear derivations");

    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a linear derivation");
    classify_cmd->add_option("--matrix", matrix_arg)->required();

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "Scalar + skew split (m = (2,...,2))");
    decompose_cmd->add_option("--matrix", matrix_arg)->required();

    CLI::App* lnd = app.add_subcommand("lnd", "Decide local nilpotency");
    lnd->add_option("--matrix", matrix_arg)->required();

    CLI::App* kernel = app.add_subcommand("kernel", "Degreewise kernel of a linear derivation");
    kernel->add_option("--matrix", matrix_arg)->required();
    kernel->add_option("--max-degree", max_degree, "Largest degree to certify")->capture_default_str();

    CLI::App* darboux = app.add_subcommand("darboux", "Eigenvalue of a monomial under the diagonal derivation");
    darboux->add_option("monomial", mono_arg, "Monomial, e.g. x1^2*x3")->required();
    darboux->add_option("--alpha", alpha_arg, "Diagonal parameter")->capture_default_str();

    CLI::App* find_alpha_cmd = app.add_subcommand("find-alpha", "Search scalar shifts that force a trivial kernel");
    find_alpha_cmd->add_option("--matrix", matrix_arg, "Skew-symmetric matrix")->required();
    find_alpha_cmd->add_option("--max-degree", max_degree)->capture_default_str();
    find_alpha_cmd->add_option("--candidates", candidates_arg, "Comma-separated scalars")->required();

    CLI::App* family = app.add_subcommand("family", "Built-in nilpotent skew families");
    family->add_option("--odd", odd_n, "Odd size n >= 3");
    family->add_option("--even", even_n, "Even size n >= 4");

    CLI::App* verify = app.add_subcommand("verify", "Replay the classification and kernel identities");
    verify->add_option("--max-degree", max_degree)->capture_default_str();
    verify->add_option("--bound", bound, "Degree bound for the triangular check")->capture_default_str();
    std::vector<std::string> grid_arg;
    verify->add_option("--grid", grid_arg, "Restrict to shapes 'n=3;m=2,2,2' (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*reduce) {
            const fermat::RingSpecPtr spec = make_ring(config);
            std::cout << fermat::parse_expression(expr_arg, spec).str() << "\n";
        } else if (*apply) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::Derivation d = derivation_from_flags(spec, matrix_arg, images_arg);
            std::cout << d.apply(fermat::parse_expression(expr_arg, spec)).str() << "\n";
        } else if (*gens) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::Derivation eps = fermat::Derivation::generator_epsilon(spec);
            std::cout << "epsilon:";
            for (unsigned i = 0; i < spec->n(); ++i)
                std::cout << " d(x" << (i + 1) << ")=" << eps.image(i).str() << ";";
            std::cout << " certified=" << (eps.certified() ? "true" : "false") << "\n";
            for (unsigned i = 1; i <= spec->n(); ++i)
                for (unsigned j = i + 1; j <= spec->n(); ++j) {
                    const fermat::Derivation dij = fermat::Derivation::generator_dij(spec, i, j);
                    std::cout << "d" << i << j << ":";
                    for (unsigned t = 0; t < spec->n(); ++t)
                        std::cout << " d(x" << (t + 1) << ")=" << dij.image(t).str() << ";";
                    std::cout << " certified=" << (dij.certified() ? "true" : "false") << "\n";
                }
        } else if (*linspace) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const auto basis = fermat::linear_derivation_space(spec);
            for (std::size_t t = 0; t < basis.size(); ++t)
                std::cout << "basis " << (t + 1) << ":\n" << basis[t].str();
            std::cout << "DIM=" << basis.size() << "\n";
        } else if (*classify_cmd) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::LinearDerivation ld = linear_from_matrix_flag(spec, matrix_arg);
            const fermat::Classification c = fermat::classify(ld);
            switch (c.kind) {
                case fermat::Classification::Kind::diagonal:
                    std::cout << "CLASS=diagonal\nALPHA=" << c.alpha->str() << "\n";
                    break;
                case fermat::Classification::Kind::scalar_plus_skew:
                    std::cout << "CLASS=scalar+skew\nALPHA=" << c.parts->alpha.str() << "\n"
                              << "skew part:\n" << c.parts->skew.str();
                    break;
                case fermat::Classification::Kind::unclassified:
                    std::cout << "CLASS=unclassified\n";
                    break;
            }
        } else if (*decompose_cmd) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::Decomposition parts =
                fermat::decompose(linear_from_matrix_flag(spec, matrix_arg));
            std::cout << "ALPHA=" << parts.alpha.str() << "\nskew part:\n" << parts.skew.str()
                      << "SKEW=" << parts.skew.text() << "\n";
        } else if (*lnd) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const bool result = fermat::is_locally_nilpotent(linear_from_matrix_flag(spec, matrix_arg));
            std::cout << "LND=" << (result ? "true" : "false") << "\n";
        } else if (*kernel) {
            if (max_degree < 1) throw fermat::UsageError("--max-degree must be >= 1");
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::KernelReport report =
                fermat::kernel_up_to_degree(linear_from_matrix_flag(spec, matrix_arg), max_degree);
            std::cout << report.str();
        } else if (*darboux) {
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::CycloNum alpha = fermat::parse_coefficient(alpha_arg, spec->field());
            const fermat::RingElem f = fermat::parse_expression(mono_arg, spec);
            if (f.is_zero() || f.terms().size() != 1)
                throw fermat::UsageError("expected a single monomial");
            const fermat::Monomial mono = f.terms().begin()->first;
            const fermat::CycloNum lambda = fermat::darboux_eigenvalue(spec, alpha, mono);
            const fermat::LinearDerivation d = fermat::LinearDerivation::diagonal(spec, alpha);
            const bool verified = d.apply(f) == lambda * f;
            std::cout << "LAMBDA=" << lambda.str() << "\n"
                      << "VERIFIED=" << (verified ? "true" : "false") << "\n"
                      << "PROPER=" << (mono.total_degree() >= 1 ? "true" : "false") << "\n";
        } else if (*find_alpha_cmd) {
            if (max_degree < 1) throw fermat::UsageError("--max-degree must be >= 1");
            const fermat::RingSpecPtr spec = make_ring(config);
            const fermat::LinearDerivation skew = linear_from_matrix_flag(spec, matrix_arg);
            if (!skew.matrix().is_skew_symmetric())
                throw fermat::PreconditionError("--matrix must be skew-symmetric");
            const auto found =
                fermat::find_alpha(skew, max_degree, parse_candidates(candidates_arg, spec->field()));
            std::cout << "ALPHA=" << (found ? found->str() : "none") << "\n";
        } else if (*family) {
            if ((odd_n == 0) == (even_n == 0))
                throw fermat::UsageError("family needs exactly one of --odd or --even");
            const fermat::RingSpecText parsed = fermat::parse_ring_spec(config.ring_text, 4);
            unsigned conductor = parsed.conductor_given ? parsed.conductor : 4;
            fermat::LinearDerivation d = [&] {
                if (odd_n) return fermat::build_odd_family(odd_n, fermat::FieldSpec::make(conductor));
                // The even pattern needs a primitive (n-1)-th root of unity.
                if (conductor % (even_n - 1) != 0) {
                    conductor = std::lcm(conductor, even_n - 1);
                    std::cout << "conductor raised to " << conductor << "\n";
                }
                return fermat::build_even_family(even_n, fermat::FieldSpec::make(conductor));
            }();
            const fermat::NilpotencyResult nil = fermat::is_nilpotent(d.matrix());
            std::cout << "RING=" << d.spec()->str() << "\n"
                      << d.matrix().str() << "MATRIX=" << d.matrix().text() << "\n"
                      << "NILPOTENCY_INDEX=" << *nil.index << "\n"
                      << "LND=" << (fermat::is_locally_nilpotent(d) ? "true" : "false") << "\n";
        } else if (*verify) {
            if (max_degree < 1) throw fermat::UsageError("--max-degree must be >= 1");
            fermat::VerifyOptions options;
            options.max_degree = max_degree;
            options.triangular_bound = bound;
            for (const std::string& shape : grid_arg) {
                const fermat::RingSpecText parsed = fermat::parse_ring_spec(shape, 4);
                options.grid.emplace_back(parsed.n, parsed.exponents);
            }
            const fermat::VerifyResult result = fermat::run_verify_suite(options, std::cout);
            std::cout << (result.all_passed ? "ALL PASS" : "FAILURES PRESENT") << " (passed "
                      << result.passed << ", failed " << result.failed << ", skipped "
                      << result.skipped << ")\n";
            if (!result.all_passed) return kExitDomain;
        }
    } catch (const fermat::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fermat::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fermat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
