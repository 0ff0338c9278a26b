#include "maslov/cli.hpp"
#include "maslov/maslov.hpp"
#include "maslov/cover.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace maslov;

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MASLOV_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Viterbo-Maslov index toolbox"};
    app.require_subcommand(1);

    std::string input, method = "formula", out_path, profile_name = "plane-arc";
    std::vector<std::string> profile_names;
    int n = 500;
    std::uint64_t seed = default_seed();

    auto* compute = app.add_subcommand("compute", "Compute the index of a trace document");
    compute->add_option("file", input, "document file (default stdin)");
    compute->add_option("--method", method, "formula|arc|direct|recursive")
        ->check(CLI::IsMember({"formula", "arc", "direct", "recursive"}));

    auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
    verify->add_option("--n", n, "cases per profile");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--profile", profile_names,
                       "plane-arc|plane-general|annulus|torus|word (repeatable)");

    auto* render = app.add_subcommand("render", "Render a trace document as SVG");
    render->add_option("file", input, "document file (default stdin)");
    render->add_option("--out", out_path, "output SVG path")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a crossing word (stdin to stdout)");

    auto* generate_cmd = app.add_subcommand("generate", "Print a generated trace document");
    generate_cmd->add_option("--seed", seed, "seed");
    generate_cmd->add_option("--profile", profile_name,
                             "plane-arc|plane-general|annulus|torus|word");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            Trace t = to_trace(parse_document(slurp(input)));
            long long mu = 0;
            if (method == "formula") mu = maslov_via_trace_formula(t);
            else if (method == "arc") mu = maslov_via_arc_formula(t);
            else if (method == "recursive") mu = maslov_recursive(t);
            else mu = t.surface.is_quotient() ? maslov_quotient(t) : maslov_direct(t);
            std::cout << mu << '\n';
            return 0;
        }
        if (verify->parsed()) {
            std::vector<Profile> profiles;
            for (const auto& name : profile_names) profiles.push_back(profile_from_name(name));
            if (profiles.empty())
                profiles = {Profile::PlaneArc, Profile::PlaneGeneral, Profile::Annulus,
                            Profile::Torus};
            VerifyReport report = run_verify(profiles, n, seed);
            std::cout << format_report(report);
            return report.all_pass() ? 0 : 1;
        }
        if (render->parsed()) {
            Trace t = to_trace(parse_document(slurp(input)));
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
            out << render_svg(t);
            return 0;
        }
        if (reduce_cmd->parsed()) {
            std::cout << serialize_word(reduce(parse_word(slurp(""))));
            return 0;
        }
        if (generate_cmd->parsed()) {
            std::cout << serialize_document(generate(seed, profile_from_name(profile_name)));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
