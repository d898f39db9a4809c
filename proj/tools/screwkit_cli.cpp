#include "screwkit/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace screwkit;

template <class Parse>
int with_file(const std::string& path, Parse parse) {
    std::ifstream in(path);
    if (!in) {
        std::cout << "error=parse\nmessage=cannot open " << path << "\n";
        return cli::kParseError;
    }
    try {
        return parse(in);
    } catch (const io::ParseError& e) {
        std::cout << "error=parse\nline=" << e.line() << "\nmessage=" << e.what() << "\n";
        return cli::kParseError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigid displacements, screws and their compositions"};
    app.require_subcommand(1);

    cli::Options opt;
    std::string path;
    double theta_b = 90.0;
    double psi = 0.0;
    std::uint64_t seed = 0;
    long samples = 10000;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--tol", opt.tol, "Tolerance")->capture_default_str();
        sub->add_flag("--radians", opt.radians, "Angles in radians instead of degrees");
    };

    auto* compose = app.add_subcommand("compose", "Compose a motion file and print its screw");
    compose->add_option("file", path, "Motion file")->required();
    common(compose);

    auto* decompose = app.add_subcommand("decompose", "Split the composed screw into a conjugate pair");
    decompose->add_option("file", path, "Motion file")->required();
    decompose->add_option("--thetaB", theta_b, "Angle of the couple rotations")->capture_default_str();
    decompose->add_option("--psi", psi, "Azimuth of the couple axes")->capture_default_str();
    common(decompose);

    auto* fit = app.add_subcommand("fit", "Fit a displacement to point correspondences");
    fit->add_option("csv", path, "Rows x,y,z,xp,yp,zp")->required();
    common(fit);

    auto* check = app.add_subcommand("check", "Run the property suite");
    check->add_option("--seed", seed, "Random seed")->capture_default_str();
    check->add_option("--samples", samples, "Sample budget")->capture_default_str()->check(CLI::PositiveNumber);
    check->add_option("--tol", opt.tol, "Tolerance scale")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kParseError;
    }

    try {
        if (*compose) {
            return with_file(path, [&](std::istream& in) {
                return cli::cmd_compose(io::parse_motion(in), opt, std::cout);
            });
        }
        if (*decompose) {
            return with_file(path, [&](std::istream& in) {
                return cli::cmd_decompose(io::parse_motion(in), theta_b, psi, opt, std::cout);
            });
        }
        if (*fit) {
            return with_file(path, [&](std::istream& in) {
                return cli::cmd_fit(io::parse_correspondences(in), opt, std::cout);
            });
        }
        return cli::cmd_check(seed, samples, opt.tol, std::cout);
    } catch (const Error& e) {
        std::cout << "error=" << to_string(e.code()) << "\nmessage=" << e.what() << "\n";
        return cli::kParseError;
    }
}
