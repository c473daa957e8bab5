// braidq command line: braid group representations on qubits and the
// entanglement of the states they generate.

#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    using braidq::cli::RunConfig;

    CLI::App app{"braidq: unitary braid group representations and entanglement"};
    app.require_subcommand(1);

    RunConfig config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--theta", config.theta, "phase angle for the b2 and ge representations")->capture_default_str();
        sub->add_option("--word", config.word_text, "braid word, e.g. \"(s1 s2^-1)^3\"");
        sub->add_option("--strands", config.strands, "number of strands (2..8)");
        sub->add_option("--tol", config.tolerance, "comparison tolerance")->capture_default_str();
        sub->add_option("--format", config.output_format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        sub->add_option("--seed", config.seed, "seed for randomised checks")->capture_default_str();
    };
    auto add_rep = [&](CLI::App* sub) {
        sub->add_option("--rep", config.rep_name, "representation: b2, ge or jones")->required();
    };

    auto* relations = app.add_subcommand("relations", "verify far commutation and braiding relations");
    add_common(relations);
    add_rep(relations);

    auto* eval = app.add_subcommand("eval", "evaluate a braid word and check closure up to phase");
    add_common(eval);
    add_rep(eval);

    auto* entangle = app.add_subcommand("entangle", "apply a braid word to a state and analyse the entanglement");
    add_common(entangle);
    add_rep(entangle);
    entangle->add_option("--state", config.state_input, "basis string such as 000, or @file.json (default |0...0>)");

    auto* lu = app.add_subcommand("lu-check", "local unitary comparison of GHZ and phi");
    add_common(lu);
    lu->add_option("--factors", config.factors, "v (the fixed local unitary), identity, random-unitary or @file.json")->capture_default_str();

    auto* links = app.add_subcommand("links", "closure components and named word matches");
    add_common(links);
    links->add_flag("--diagram", config.diagram, "also draw the braid");
    links->add_flag("--ascii-only", config.ascii_only, "restrict diagrams to 7-bit characters");

    auto* render = app.add_subcommand("render", "draw a braid word");
    add_common(render);
    render->add_flag("--ascii-only", config.ascii_only, "restrict the diagram to 7-bit characters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return braidq::cli::kUsage;
    }

    config.command = app.get_subcommands().front()->get_name();
    return braidq::cli::run(config, std::cout, std::cerr);
}
