// Command-line surface over the ncwitt core library.
//
// Exit codes: 0 all requested checks hold (or plain computation succeeded),
// 1 a verification verdict failed, 2 bad input or usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncwitt/cuntz_deninger.hpp"
#include "ncwitt/error.hpp"
#include "ncwitt/ghost.hpp"
#include "ncwitt/json_io.hpp"
#include "ncwitt/matrix.hpp"
#include "ncwitt/necklace.hpp"
#include "ncwitt/parse.hpp"
#include "ncwitt/verify.hpp"

namespace {

using ncwitt::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == sep) {
        parts.push_back("");
    }
    return parts;
}

ncwitt::GeneratorSetPtr generators_from_flag(const std::string& gens_flag) {
    return ncwitt::make_generators(split(gens_flag, ','));
}

mpz_class parse_mpz(const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw ncwitt::DomainError("not a decimal integer: \"" + text + "\"");
    }
}

std::vector<mpz_class> parse_coord_list(const std::string& text) {
    std::vector<mpz_class> coords;
    for (const std::string& part : split(text, ',')) {
        coords.push_back(parse_mpz(part));
    }
    if (coords.empty()) {
        throw ncwitt::DomainError("expected a comma-separated coordinate list");
    }
    return coords;
}

int run_ghost(const std::string& prime, std::size_t trunc, const std::string& coords_flag,
              const std::string& gens_flag) {
    const mpz_class p = parse_mpz(prime);
    const ncwitt::GeneratorSetPtr gens = generators_from_flag(gens_flag);
    const ncwitt::CoefficientRing ring = ncwitt::CoefficientRing::integers();

    std::vector<ncwitt::FreePoly> coords;
    for (const std::string& part : split(coords_flag, ';')) {
        coords.push_back(ncwitt::parse(part, gens, ring));
    }
    if (trunc == 0) {
        throw ncwitt::DomainError("--trunc must be positive");
    }
    if (coords.size() > trunc) {
        throw ncwitt::DomainError("more coordinates than the truncation length");
    }
    while (coords.size() < trunc) {
        coords.push_back(ncwitt::FreePoly::zero(gens, ring));
    }

    const ncwitt::GhostVector g = ncwitt::ghost_map(coords, p);
    json doc;
    doc["ghost"] = ncwitt::ghost_to_json(g);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_necklace(const std::string& mod, const std::string& poly_text,
                 const std::string& gens_flag) {
    const ncwitt::GeneratorSetPtr gens = generators_from_flag(gens_flag);
    const ncwitt::CoefficientRing ring = mod.empty()
                                             ? ncwitt::CoefficientRing::integers()
                                             : ncwitt::CoefficientRing::modular(parse_mpz(mod));
    const ncwitt::NecklacePoly canonical =
        ncwitt::project(ncwitt::parse(poly_text, gens, ring));
    std::cout << ncwitt::format(canonical) << "\n";
    json doc;
    doc["terms"] = ncwitt::terms_to_json(canonical);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_witt_op(const std::string& prime, const std::string& a_flag,
                const std::string& b_flag, bool multiply) {
    const mpz_class p = parse_mpz(prime);
    const ncwitt::IntWittVector a(p, parse_coord_list(a_flag));
    const ncwitt::IntWittVector b(p, parse_coord_list(b_flag));
    const ncwitt::IntWittVector c =
        multiply ? ncwitt::witt_mul_int(a, b) : ncwitt::witt_add_int(a, b);

    json coords = json::array();
    for (const mpz_class& v : c.coords()) {
        coords.push_back(v.get_str());
    }
    json doc;
    doc["prime"] = p.get_str();
    doc["coords"] = std::move(coords);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& theorem, const std::string& prime, std::size_t trunc) {
    const ncwitt::VerificationReport report =
        ncwitt::verify_by_name(theorem, parse_mpz(prime), trunc);
    std::cout << report.to_json().dump(2) << "\n";
    return report.holds ? 0 : 1;
}

int run_sweep(const std::string& max_prime, std::size_t trunc) {
    const std::vector<ncwitt::VerificationReport> reports =
        ncwitt::verify_sweep(parse_mpz(max_prime), trunc);
    json arr = json::array();
    bool all_hold = true;
    for (const ncwitt::VerificationReport& r : reports) {
        arr.push_back(r.to_json());
        all_hold = all_hold && r.holds;
    }
    std::cout << arr.dump(2) << "\n";
    return all_hold ? 0 : 1;
}

int run_eval(const std::string& matrices_path, const std::string& poly_text) {
    std::ifstream in(matrices_path);
    if (!in) {
        throw ncwitt::DomainError("cannot open matrix file: " + matrices_path);
    }
    const auto doc = nlohmann::json::parse(in);
    const ncwitt::MatrixAssignment assignment = ncwitt::assignment_from_json(doc);
    const ncwitt::FreePoly f = ncwitt::parse(poly_text, assignment.generators(),
                                             ncwitt::CoefficientRing::integers());
    const ncwitt::Matrix result = ncwitt::eval_matrix(f, assignment);
    std::cout << ncwitt::matrix_to_json(result).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact p-typical Witt vector calculus over free associative algebras"};
    app.require_subcommand(1);

    std::string prime;
    std::size_t trunc = 2;
    std::string coords_flag;
    std::string gens_flag = "X,Y";
    std::string mod;
    std::string poly_text;
    std::string a_flag;
    std::string b_flag;
    std::string theorem;
    std::string max_prime;
    std::string matrices_path;

    CLI::App* ghost = app.add_subcommand("ghost", "Ghost map of a coordinate tuple");
    ghost->add_option("--prime", prime, "prime p")->required();
    ghost->add_option("--trunc", trunc, "truncation length n")->required();
    ghost->add_option("--coords", coords_flag,
                      "';'-separated coordinate polynomials (padded with zeros to n)")
        ->required();
    ghost->add_option("--gens", gens_flag, "generator names, comma separated");

    CLI::App* necklace = app.add_subcommand("necklace", "Canonical form in A/[A,A]");
    necklace->add_option("--mod", mod, "coefficient modulus (default: integers)");
    necklace->add_option("--gens", gens_flag, "generator names, comma separated");
    necklace->add_option("poly", poly_text, "polynomial expression")->required();

    CLI::App* witt_add = app.add_subcommand("witt-add", "Classical Witt vector sum over Z");
    witt_add->add_option("--prime", prime, "prime p")->required();
    witt_add->add_option("--a", a_flag, "coordinates c0,c1,...")->required();
    witt_add->add_option("--b", b_flag, "coordinates c0,c1,...")->required();

    CLI::App* witt_mul =
        app.add_subcommand("witt-mul", "Classical Witt vector product over Z");
    witt_mul->add_option("--prime", prime, "prime p")->required();
    witt_mul->add_option("--a", a_flag, "coordinates c0,c1,...")->required();
    witt_mul->add_option("--b", b_flag, "coordinates c0,c1,...")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run one verification engine");
    verify->add_option("--theorem", theorem,
                       "lemma-trace | lemma-necklace | thm-1-1 | thm-1-2")
        ->required();
    verify->add_option("--prime", prime, "prime p")->required();
    verify->add_option("--trunc", trunc, "truncation length (obstruction engines)");

    CLI::App* sweep = app.add_subcommand("verify-sweep", "All checks for every prime <= bound");
    sweep->add_option("--max-prime", max_prime, "upper bound for the prime sweep")
        ->required();
    sweep->add_option("--trunc", trunc, "truncation length (obstruction engines)");

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a polynomial on matrices");
    eval->add_option("--matrices", matrices_path, "JSON assignment file")->required();
    eval->add_option("poly", poly_text, "polynomial expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ghost->parsed()) {
            return run_ghost(prime, trunc, coords_flag, gens_flag);
        }
        if (necklace->parsed()) {
            return run_necklace(mod, poly_text, gens_flag);
        }
        if (witt_add->parsed()) {
            return run_witt_op(prime, a_flag, b_flag, /*multiply=*/false);
        }
        if (witt_mul->parsed()) {
            return run_witt_op(prime, a_flag, b_flag, /*multiply=*/true);
        }
        if (verify->parsed()) {
            return run_verify(theorem, prime, trunc);
        }
        if (sweep->parsed()) {
            return run_sweep(max_prime, trunc);
        }
        if (eval->parsed()) {
            return run_eval(matrices_path, poly_text);
        }
    } catch (const ncwitt::ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
