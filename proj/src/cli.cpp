#include "wsh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "wsh/error.hpp"
#include "wsh/homology.hpp"
#include "wsh/io.hpp"
#include "wsh/oracle.hpp"

namespace wsh {

namespace {

struct Options {
    std::string field = "rational";
    std::optional<int> dim;
    std::string json_path;
    bool generators = false;
    bool check = false;
    bool complete_faces = false;
    std::string input;
};

}  // namespace

int verify_modules(const WeightedComplex& complex, const FieldSpec& field, std::span<const HomologyModule> modules,
                   std::ostream& err) {
    bool agree = true;
    for (const auto& h : modules) {
        const auto ref = homology_via_snf(complex, h.n, field);
        if (ref.free_rank != h.free_rank || ref.torsion != h.torsion) {
            agree = false;
            err << "wsh: check failed for H_" << h.n << ": engine " << render_module(h.free_rank, h.torsion)
                << ", Smith normal form " << render_module(ref.free_rank, ref.torsion) << "\n";
        }
    }
    if (!agree) return kExitMismatch;
    err << "wsh: check passed (" << modules.size() << " dimension" << (modules.size() == 1 ? "" : "s") << ")\n";
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted simplicial homology over F[[pi]]", "wsh"};
    Options opt;
    app.add_option("--field", opt.field, "Residue field: rational or gf:<p>")->capture_default_str();
    app.add_option("--dim", opt.dim, "Only report this dimension");
    app.add_option("--json", opt.json_path, "Write the report as JSON to this path ('-' for stdout)");
    app.add_flag("--generators", opt.generators, "Include pairing records and generators");
    app.add_flag("--check", opt.check, "Verify against Smith normalization over F[[pi]]/(pi^N)");
    app.add_flag("--complete-faces", opt.complete_faces, "Add missing faces with the smallest monotone weight");
    app.add_option("file", opt.input, "Complex file")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "wsh: " << e.what() << "\n" << "Run with --help for usage.\n";
        return kExitUsage;
    }

    FieldSpec field;
    try {
        field = FieldSpec::parse(opt.field);
    } catch (const Error& e) {
        err << "wsh: " << e.what() << "\n";
        return kExitUsage;
    }

    WeightedComplex complex;
    std::vector<HomologyModule> modules;
    try {
        complex = read_complex_file(opt.input, opt.complete_faces ? FaceMode::CompleteFaces : FaceMode::Strict);
        if (opt.dim) {
            modules.push_back(homology(complex, *opt.dim, field, opt.generators));
        } else {
            modules = homology_all(complex, field, opt.generators);
        }
    } catch (const Error& e) {
        err << "wsh: " << opt.input << ": " << to_string(e.code()) << ": " << e.what() << "\n";
        return kExitInput;
    }

    const auto report = make_report(complex, field, modules);
    if (opt.json_path.empty()) {
        out << to_text(report);
    } else if (opt.json_path == "-") {
        out << to_json(report).dump(2) << "\n";
    } else {
        std::ofstream f(opt.json_path);
        if (!f) {
            err << "wsh: cannot write '" << opt.json_path << "'\n";
            return kExitInput;
        }
        f << to_json(report).dump(2) << "\n";
    }

    if (opt.check) return verify_modules(complex, field, modules, err);
    return kExitOk;
}

}  // namespace wsh
