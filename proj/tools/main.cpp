#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "calex/commands.hpp"
#include "calex/errors.hpp"
#include "calex/textio.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw calex::Error("IoError", "cannot open " + path, calex::EXIT_REFUSED);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

calex::RealizeMode parse_mode(const std::string& s) {
    if (s == "auto") return calex::RealizeMode::Auto;
    if (s == "thm1") return calex::RealizeMode::Thm1;
    if (s == "thm2") return calex::RealizeMode::Thm2;
    if (s == "thm3") return calex::RealizeMode::Thm3;
    throw calex::ParseError("unknown mode '" + s + "' (use auto|thm1|thm2|thm3)");
}

void emit(const calex::ReportNode& report, const std::string& format,
          std::chrono::steady_clock::time_point start) {
    if (format == "tree") {
        std::cout << calex::render_machine(report);
        return;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << calex::render_text(report, ms);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calex: exact Alexander polynomials of C-groups, with constructive "
                 "realization of admissible targets"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format: text or tree")
        ->check(CLI::IsMember({"text", "tree"}));

    // compute
    auto* compute = app.add_subcommand("compute", "Alexander polynomial of a presentation");
    std::string builtin_name, file_path;
    int central_power = 0, degree_opt = 0;
    compute->add_option("--builtin", builtin_name,
                        "builtin presentation: free:M, abelian:N, g2, example_4_1, example_4_2");
    compute->add_option("--file", file_path, "presentation file (cgroup format)");
    compute->add_option("--central-power", central_power,
                        "also report the integral module for this central power");
    compute->add_option("--degree", degree_opt, "curve degree for the property block");

    // realize
    auto* realize = app.add_subcommand("realize", "build a Hurwitz C-presentation for a target");
    std::string target_text, mode_text = "auto";
    int max_generators = 128;
    realize->add_option("target", target_text, "target polynomial, e.g. \"t^2 - t + 1\"")
        ->required();
    realize->add_option("--mode", mode_text, "auto|thm1|thm2|thm3");
    realize->add_option("--max-generators", max_generators,
                        "refuse constructions needing more generators than this");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "split an integer involution");
    std::string matrix_text, matrix_file;
    decompose->add_option("matrix", matrix_text, "entries, e.g. \"[[0,1],[1,0]]\"");
    decompose->add_option("--file", matrix_file, "file with the matrix entries");

    // check
    auto* check = app.add_subcommand("check", "realizability classification and property suite");
    std::string check_target;
    int components = 0, check_degree = 0;
    unsigned long betti_n = 0;
    check->add_option("target", check_target, "polynomial to examine")->required();
    check->add_option("--components", components, "component count for the property suite");
    check->add_option("--degree", check_degree, "curve degree for the property suite");
    check->add_option("--betti", betti_n, "report the count of n-th roots of unity != 1");

    // demo
    auto* demo = app.add_subcommand("demo", "run the bundled regression corpus");
    unsigned long seed = 12345;
    demo->add_option("--seed", seed, "seed for the randomized demo items");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return calex::EXIT_PARSE;
    }
    auto start = std::chrono::steady_clock::now();

    try {
        if (compute->parsed()) {
            calex::CPresentation g;
            std::string desc;
            if (!builtin_name.empty()) {
                g = calex::builtin(builtin_name);
                desc = "builtin " + builtin_name;
            } else if (!file_path.empty()) {
                g = calex::parse_presentation(read_file(file_path));
                desc = "file " + file_path;
            } else {
                g = calex::parse_presentation(read_file("/dev/stdin"));
                desc = "stdin";
            }
            calex::ComputeOptions opt;
            if (central_power > 0) opt.central_power = central_power;
            if (degree_opt > 0) opt.property_degree = degree_opt;
            emit(calex::cmd_compute(g, desc, opt), format, start);
        } else if (realize->parsed()) {
            calex::IntPoly target = calex::parse_poly(target_text);
            calex::RealizeOptions opt;
            opt.max_generators = max_generators;
            emit(calex::cmd_realize(target, target_text, parse_mode(mode_text), opt), format,
                 start);
        } else if (decompose->parsed()) {
            std::string text = !matrix_file.empty() ? read_file(matrix_file) : matrix_text;
            if (text.empty())
                throw calex::ParseError("decompose needs a matrix argument or --file");
            emit(calex::cmd_decompose(calex::parse_square_matrix(text)), format, start);
        } else if (check->parsed()) {
            calex::IntPoly p = calex::parse_poly(check_target);
            emit(calex::cmd_check(p, check_target,
                                  components > 0 ? std::optional<int>(components) : std::nullopt,
                                  check_degree > 0 ? std::optional<int>(check_degree)
                                                   : std::nullopt,
                                  betti_n > 0 ? std::optional<unsigned long>(betti_n)
                                              : std::nullopt),
                 format, start);
        } else if (demo->parsed()) {
            calex::ReportNode rep = calex::cmd_demo(seed);
            emit(rep, format, start);
            const calex::ReportNode* all = rep.find("all");
            if (!all || all->value != "PASS") return calex::EXIT_INTERNAL;
        }
    } catch (const calex::Error& e) {
        std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return calex::EXIT_INTERNAL;
    }
    return calex::EXIT_OK;
}
