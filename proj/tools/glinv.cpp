#include "glinv/invariants.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace glinv;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotColorable = 3;
constexpr int kExitMultiComponent = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Error::Kind::Parse, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case Error::Kind::Parse:
        case Error::Kind::Disconnected: return kExitParse;
        case Error::Kind::NotColorable: return kExitNotColorable;
        case Error::Kind::MultiComponent: return kExitMultiComponent;
        default: return 1;
    }
}

SymIntMatrix parse_matrix_literal(const std::string& text, bool special) {
    std::vector<std::vector<Int>> rows;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (!trimmed.empty()) {
        std::stringstream ss(trimmed);
        std::string row;
        while (std::getline(ss, row, ';')) {
            std::vector<Int> r;
            std::stringstream rs(row);
            std::string cell;
            while (std::getline(rs, cell, ',')) {
                try {
                    r.emplace_back(cell);
                } catch (const std::exception&) {
                    throw Error(Error::Kind::Parse, "bad matrix entry: \"" + cell + "\"");
                }
            }
            if (r.empty()) throw Error(Error::Kind::Parse, "empty matrix row");
            rows.push_back(std::move(r));
        }
    }
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw Error(Error::Kind::Parse, "matrix literal is not square");
    SymIntMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m.at(i, j) = rows[i][j];
    try {
        m.check_symmetric();
    } catch (const std::exception&) {
        throw Error(Error::Kind::Parse, "matrix literal is not symmetric");
    }
    if (special) {
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) {
                const Int& v = m.at(i, j);
                if (i == j ? (v < 0 || v > 3) : (v < 0 || v > 1))
                    throw Error(Error::Kind::Parse,
                                "special mode: diagonal in {0..3}, off-diagonal in {0,1}");
            }
    }
    return m;
}

int default_cap() {
    if (const char* env = std::getenv("GLINV_CAP")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return kDefaultEnumerationCap;
}

int run_invariants(const std::string& file, const std::string& format, int cap, bool quiet) {
    FullReport r = full_report(realize_diagram(parse_gauss_code(read_file(file))), cap);
    if (quiet) return 0;
    if (format == "json")
        std::cout << report_json(r).dump(2) << "\n";
    else if (format == "tsv")
        std::cout << report_tsv_header() << "\n" << report_tsv_row(fs::path(file).filename().string(), r) << "\n";
    else
        std::cout << report_pretty(r);
    return 0;
}

int run_form(const std::string& literal, bool special, const std::string& format, int cap,
             bool quiet) {
    SymIntMatrix m = parse_matrix_literal(literal, special);
    EnhancedSpace e = enhance(m);
    int rad = static_cast<int>(radical(e).size());
    bool proper = is_proper(e);
    BrownValue b = brown(e, cap);
    GaussianInt lambda(0, 0);
    bool have_lambda = e.dim <= cap;
    if (have_lambda) lambda = monsky_sum(e, cap);
    if (quiet) return 0;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["dim"] = m.dim();
        j["signature"] = signature(m);
        j["determinant"] = determinant(m).str();
        j["nullity"] = nullity(m);
        j["lambda"] = have_lambda ? nlohmann::ordered_json(lambda.str()) : nullptr;
        j["beta"] = b.is_infinity() ? nlohmann::ordered_json("infinity")
                                    : nlohmann::ordered_json(b.value());
        j["proper"] = proper;
        j["radical_dim"] = rad;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim " << m.dim() << ", sig " << signature(m) << ", det " << determinant(m)
                  << ", nullity " << nullity(m) << "\n";
        if (have_lambda) std::cout << "lambda " << lambda.str() << "\n";
        std::cout << "beta " << b.str() << ", " << (proper ? "proper" : "improper")
                  << ", radical dim " << rad << "\n";
    }
    return 0;
}

int run_census(const std::string& dir, int cap, bool quiet) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".gauss")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (!quiet) std::cout << report_tsv_header() << "\terror\n";
    for (const std::string& f : files) {
        std::string name = fs::path(f).filename().string();
        try {
            FullReport r = full_report(realize_diagram(parse_gauss_code(read_file(f))), cap);
            if (!quiet) std::cout << report_tsv_row(name, r) << "\t\n";
        } catch (const std::exception& e) {
            if (!quiet)
                std::cout << name << "\t\t\t\t\t\t\t\t\t\t\t\t" << e.what() << "\n";
        }
    }
    return 0;
}

int run_slice(const std::string& file, const std::string& format, int cap, bool quiet) {
    FullReport r = full_report(realize_diagram(parse_gauss_code(read_file(file))), cap);
    SliceReport s = slice_obstructions(r);  // throws on links (exit 4)
    AlternatingVerdict av = alternating_obstruction(r);
    bool obstructed = s.obstructed || av.not_slice;
    if (quiet) return 0;
    if (format == "json") {
        nlohmann::ordered_json j = report_json(r);
        std::cout << j["slice"].dump(2) << "\n";
    } else {
        std::cout << (obstructed ? "Obstructed" : "NotObstructed") << "\n";
        for (size_t k = 0; k < s.per_coloring.size(); ++k) {
            const auto& p = s.per_coloring[k];
            std::cout << "  " << r.colorings[k].label << ": signature "
                      << (p.obstructed_by_signature ? "fires" : "passes") << ", determinant "
                      << (p.obstructed_by_determinant ? "fires" : "passes") << ", brown "
                      << (p.obstructed_by_brown ? "fires" : "passes") << "\n";
        }
        if (av.not_slice)
            std::cout << "  alternating on genus " << r.genus << ": sigma gap " << av.sigma_gap
                      << "\n";
    }
    return 0;
}

int run_selftest(unsigned seed, bool quiet) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 5);
    for (int iter = 0; iter < 200; ++iter) {
        int n = dim(rng);
        SymIntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = entry(rng);
        SquareIntMatrix p = random_unimodular(n, rng());
        SymIntMatrix c = congruence(m, p);
        if (signature(c) != signature(m) || nullity(c) != nullity(m) ||
            det_invariant(c) != det_invariant(m) ||
            !(brown(enhance(c)) == brown(enhance(m)))) {
            std::cerr << "selftest failure at iteration " << iter << "\n";
            return 1;
        }
    }
    if (!quiet) std::cout << "selftest passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gordon-Litherland invariants of checkerboard-colorable links in thickened surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "pretty";
    int cap = default_cap();
    bool quiet = false;
    unsigned seed = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
    app.add_option("--cap", cap, "enumeration cap (bits)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized self-tests");
    app.add_flag("--quiet", quiet, "suppress output");

    std::string file, literal, dir;
    bool special = false;

    auto* inv = app.add_subcommand("invariants", "full invariant report for a Gauss-code file");
    inv->add_option("file", file, "Gauss-code file")->required();

    auto* form = app.add_subcommand("form", "invariants of a symmetric matrix literal");
    form->add_option("matrix", literal, "rows ';'-separated, entries ','-separated")->required();
    form->add_flag("--special", special, "validate as a special matrix (diag mod 4, off-diag mod 2)");

    auto* census = app.add_subcommand("census", "batch report over a directory of .gauss files");
    census->add_option("dir", dir, "directory")->required()->check(CLI::ExistingDirectory);

    auto* slice = app.add_subcommand("slice", "slice obstruction report (knots only)");
    slice->add_option("file", file, "Gauss-code file")->required();

    auto* selftest = app.add_subcommand("selftest", "randomized internal consistency checks");
    (void)selftest;

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return run_invariants(file, format, cap, quiet);
        if (form->parsed()) return run_form(literal, special, format, cap, quiet);
        if (census->parsed()) return run_census(dir, cap, quiet);
        if (slice->parsed()) return run_slice(file, format, cap, quiet);
        if (selftest->parsed()) return run_selftest(seed, quiet);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
