#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gabriel/workbench.hpp"

namespace wb = gabriel::workbench;

namespace {

struct Flags {
    std::string spec;
    std::string format;
    std::size_t cap = gabriel::default_size_cap;
    std::uint64_t budget = gabriel::monomial::default_budget;
    bool expect_pass = false;
    bool timing = false;
};

std::string read_spec(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) gabriel::fail(gabriel::errc::validation_error, "cannot read spec file " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(const std::string& command, const Flags& f) {
    std::string format = f.format;
    const auto task = wb::task_for_command(command);
    try {
        const auto spec = wb::parse_document(read_spec(f.spec));
        if (format.empty() && spec.is_object() && spec.contains("format") && spec["format"].is_string()) format = spec["format"].get<std::string>();
        wb::Options opts;
        opts.cap = std::min(f.cap, gabriel::hard_size_cap);
        opts.budget = f.budget;
        opts.expect_pass = f.expect_pass;
        opts.timing = f.timing;
        const auto out = wb::execute(spec, task, opts);
        if (format == "json") std::cout << out.report.dump(2) << "\n";
        else std::cout << wb::render_text(out.report);
        return out.exit_code;
    } catch (const gabriel::error& e) {
        std::cerr << e.what() << "\n";
        if (format == "json") std::cout << wb::error_report(e, wb::to_string(task)).dump(2) << "\n";
        return wb::exit_code_for(e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabriel filters, torsion theories and totally noetherian certificates on finite rings and monomial ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wb::tool_name) + " " + wb::tool_version);
    Flags flags;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"inspect", "ring structure: ideals, primes, local factors, optional filter"},
        {"partition", "Spec partition K / Z / C for a filter"},
        {"closure", "closure, torsion submodule and density of a submodule"},
        {"certify", "certificates: tfg, closure_colon, sigma_principal, chain_stability, sigma_maximal"},
        {"suite", "exhaustive theorem suite on one ring or a catalogue sweep"},
        {"census", "all Gabriel filters of a ring"},
        {"monomial", "monomial ideals: decide, saturation, member, contains, in_filter, classify, cohen, almost_jansian"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--spec", flags.spec, "spec file (- for stdin)")->required();
        sub->add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", flags.cap, "ring size cap")->check(CLI::PositiveNumber);
        sub->add_option("--budget", flags.budget, "largest power of s tried by monomial decisions");
        sub->add_flag("--expect-pass", flags.expect_pass, "exit 1 when a decision is refuted or exhausted");
        sub->add_flag("--timing", flags.timing, "add wall-clock timing to the report");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    return run(app.get_subcommands().front()->get_name(), flags);
}
