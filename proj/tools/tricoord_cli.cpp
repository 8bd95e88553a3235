// Command-line front end: reducibility, certificates, crushing and the
// canonical system for mapping classes given as words over generator tables.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricoord/builtins.hpp"
#include "tricoord/crushing.hpp"
#include "tricoord/curves.hpp"
#include "tricoord/mapping_class.hpp"
#include "tricoord/reducibility.hpp"

using namespace tricoord;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CommonArgs {
    std::string surface = "S_1_1";
    std::string generators;
    std::string word;
    std::string vector_text;
    std::string format = "text";
    int jobs = 1;
    bool no_prune = false;

    SearchOptions search() const { return SearchOptions{!no_prune, jobs}; }
    bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_word, bool with_vector) {
    cmd->add_option("--surface", args.surface, "builtin name or surface file");
    cmd->add_option("--generators", args.generators, "builtin name or generator file");
    if (with_word) cmd->add_option("--word", args.word, "word over the generators, e.g. a.~b");
    if (with_vector) cmd->add_option("--vector", args.vector_text, "comma-separated edge vector");
    cmd->add_option("--jobs", args.jobs, "parallel workers for searches")->check(CLI::Range(1, 1024));
    cmd->add_flag("--no-prune", args.no_prune, "disable branch pruning");
    cmd->add_option("--format", args.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
}

MappingClassPath compile_args(const CommonArgs& args, const Triangulation& surface) {
    const std::string gens = args.generators.empty() ? args.surface : args.generators;
    GeneratorTable table = resolve_table(gens, surface);
    return compile(parse_word(args.word), table);
}

json report_json(const ReducibilityReport& rep) {
    json j;
    j["verdict"] = rep.reducible ? "reducible" : "irreducible";
    if (rep.certificate) j["certificate"] = vector_to_string(*rep.certificate);
    j["bound_bits"] = rep.bound.value();
    j["branches_explored"] = rep.branches_explored;
    j["branches_pruned"] = rep.branches_pruned;
    j["systems_tested"] = rep.systems_tested;
    return j;
}

int cmd_check(const CommonArgs& args) {
    Triangulation surface = resolve_surface(args.surface);
    EdgeVector v = parse_vector(args.vector_text, surface.zeta());
    bool zero = true;
    for (const BigInt& x : v)
        if (x != 0) zero = false;
    const bool ok = is_multicurve(surface, v);
    json j;
    j["multicurve"] = ok;
    if (ok) {
        json comps = json::array();
        for (const auto& [comp, mult] : decompose(surface, v))
            comps.push_back({{"component", vector_to_string(comp)}, {"multiplicity", mult}});
        j["components"] = comps;
        j["xi"] = xi(surface, v);
    }
    if (args.structured()) {
        std::cout << j.dump(2) << "\n";
    } else if (ok) {
        std::cout << "multicurve\n";
        for (const auto& [comp, mult] : decompose(surface, v))
            std::cout << "component: " << vector_to_string(comp) << " x" << mult << "\n";
        std::cout << "xi: " << j["xi"].get<int>() << "\n";
    } else {
        std::cout << (zero ? "not a multicurve (zero)\n" : "not a multicurve\n");
    }
    return ok ? kExitTrue : kExitFalse;
}

int cmd_apply(const CommonArgs& args) {
    Triangulation surface = resolve_surface(args.surface);
    MappingClassPath path = compile_args(args, surface);
    EdgeVector v = parse_vector(args.vector_text, surface.zeta());
    if (!is_multicurve(surface, v)) {
        std::cerr << "error: vector is not a multicurve\n";
        return kExitFalse;
    }
    EdgeVector out = tricoord::apply(path.path(), v);
    if (args.structured()) {
        json j;
        j["vector"] = vector_to_string(out);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << vector_to_string(out) << "\n";
    }
    return kExitTrue;
}

int cmd_reduce(const CommonArgs& args, long brute) {
    Triangulation surface = resolve_surface(args.surface);
    MappingClassPath path = compile_args(args, surface);
    if (brute > 0) {
        auto hit = brute_force_invariant(path, brute, args.search());
        if (args.structured()) {
            json j;
            j["verdict"] = hit ? "reducible" : "irreducible";
            if (hit) j["certificate"] = vector_to_string(*hit);
            j["max_entry"] = brute;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "verdict: " << (hit ? "reducible" : "irreducible") << "\n";
            if (hit) std::cout << "certificate: " << vector_to_string(*hit) << "\n";
        }
        return hit ? kExitTrue : kExitFalse;
    }
    ReducibilityReport rep = decide(path, args.search());
    if (args.structured()) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (rep.reducible ? "reducible" : "irreducible") << "\n";
        if (rep.certificate) std::cout << "certificate: " << vector_to_string(*rep.certificate) << "\n";
        std::cout << "bound_bits: " << rep.bound.value() << "\n";
        std::cout << "branches: " << rep.branches_explored << " explored, " << rep.branches_pruned
                  << " pruned, " << rep.systems_tested << " systems tested\n";
    }
    return rep.reducible ? kExitTrue : kExitFalse;
}

int cmd_verify(const CommonArgs& args) {
    try {
        Triangulation surface = resolve_surface(args.surface);
        MappingClassPath path = compile_args(args, surface);
        EdgeVector v = parse_vector(args.vector_text, surface.zeta());
        const bool ok = verify_certificate(path, v);
        std::cout << (ok ? "valid certificate\n" : "invalid certificate\n");
        return ok ? kExitTrue : kExitFalse;
    } catch (const std::exception& e) {
        std::cout << "invalid certificate\n";
        return kExitFalse;
    }
}

int cmd_crush(const CommonArgs& args) {
    Triangulation surface = resolve_surface(args.surface);
    EdgeVector v = parse_vector(args.vector_text, surface.zeta());
    if (!is_multicurve(surface, v)) {
        std::cerr << "error: vector is not a multicurve\n";
        return kExitFalse;
    }
    CrushMap cm = crush(surface, v);
    if (args.structured()) {
        json j;
        j["target"] = json::parse(surface_to_json(cm.target, "crushed"));
        j["target_invariants"] = cm.target.describe();
        j["removed_components"] = cm.removed_components;
        json rows = json::array();
        for (std::size_t i = 0; i < cm.lift_matrix.rows(); ++i) {
            std::string row;
            for (std::size_t jj = 0; jj < cm.lift_matrix.cols(); ++jj) {
                if (jj) row += ',';
                row += cm.lift_matrix.at(i, jj).str();
            }
            rows.push_back(row);
        }
        j["lift_matrix"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "crushed surface: " << cm.target.describe() << "\n";
        std::cout << "faces:";
        for (const auto& f : cm.target.to_file_labels())
            std::cout << " [" << f[0] << "," << f[1] << "," << f[2] << "]";
        std::cout << "\nremoved twice-marked spheres: " << cm.removed_components << "\n";
        std::cout << "xi: " << xi(surface, v) << "\n";
    }
    return kExitTrue;
}

int cmd_maximal(const CommonArgs& args) {
    Triangulation surface = resolve_surface(args.surface);
    MappingClassPath path = compile_args(args, surface);
    auto mr = maximal_multicurve(path, args.search());
    if (args.structured()) {
        json j;
        j["maximal"] = mr.has_value();
        if (mr) {
            j["curve"] = vector_to_string(mr->curve);
            j["iterations"] = mr->iterations;
            j["bound_bits"] = mr->bound.value();
        }
        std::cout << j.dump(2) << "\n";
    } else if (mr) {
        std::cout << "maximal multicurve: " << vector_to_string(mr->curve) << "\n";
        std::cout << "iterations: " << mr->iterations << "\n";
        std::cout << "bound_bits: " << mr->bound.value() << "\n";
    } else {
        std::cout << "irreducible: no invariant multicurve\n";
    }
    return mr ? kExitTrue : kExitFalse;
}

int cmd_canonical(const CommonArgs& args, long max_entry) {
    Triangulation surface = resolve_surface(args.surface);
    MappingClassPath path = compile_args(args, surface);
    CanonicalDeskResult res = canonical_system_desk(path, max_entry, args.search());
    if (args.structured()) {
        json j;
        j["system"] = res.system ? vector_to_string(*res.system) : "empty";
        j["approximate"] = res.approximate;
        j["certified_bound_bits"] = res.certified_bound.value();
        j["invariant_count"] = res.invariant_count;
        j["maximal_count"] = res.maximal_count;
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.system)
            std::cout << "canonical system: " << vector_to_string(*res.system) << "\n";
        else
            std::cout << "canonical system: empty\n";
        std::cout << "invariant multicurves scanned: " << res.invariant_count << ", maximal: "
                  << res.maximal_count << "\n";
        if (res.approximate)
            std::cout << "approximate: max-entry " << max_entry
                      << " is below the certified bound (" << res.certified_bound.value()
                      << " bits)\n";
    }
    return res.system ? kExitTrue : kExitFalse;
}

int cmd_identity(const CommonArgs& args) {
    Triangulation surface = resolve_surface(args.surface);
    MappingClassPath path = compile_args(args, surface);
    const bool trivial = acts_trivially(path);
    const auto& inv = surface.invariants();
    const bool kernel_surface =
        inv.components == 1 &&
        ((inv.genus == 1 && inv.marked_points == 1) || (inv.genus == 0 && inv.marked_points == 4));
    if (args.structured()) {
        json j;
        j["acts_trivially"] = trivial;
        j["identity_conclusive"] = !kernel_surface;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (trivial ? "acts trivially on all multicurves\n"
                              : "acts nontrivially on multicurves\n");
        if (trivial && kernel_surface)
            std::cout << "note: on a once-marked torus or four times marked sphere a trivial "
                         "action does not force the identity mapping class\n";
    }
    return trivial ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coordinates for multicurves and mapping classes on marked surfaces"};
    app.require_subcommand(1);

    CommonArgs args;
    long brute = 0, max_entry = 0;

    CLI::App* check = app.add_subcommand("check", "test whether a vector is a multicurve");
    add_common(check, args, false, true);
    CLI::App* applyc = app.add_subcommand("apply", "apply a word to a multicurve vector");
    add_common(applyc, args, true, true);
    CLI::App* reduce = app.add_subcommand("reduce", "decide reducibility of a word");
    add_common(reduce, args, true, false);
    reduce->add_option("--brute", brute, "use exhaustive search up to this max entry");
    CLI::App* verify = app.add_subcommand("verify", "verify a reducibility certificate");
    add_common(verify, args, true, true);
    CLI::App* crushc = app.add_subcommand("crush", "crush the surface along a multicurve");
    add_common(crushc, args, false, true);
    CLI::App* maximal = app.add_subcommand("maximal", "find a maximal invariant multicurve");
    add_common(maximal, args, true, false);
    CLI::App* canonical = app.add_subcommand("canonical", "desk-scale canonical curve system");
    add_common(canonical, args, true, false);
    canonical->add_option("--max-entry", max_entry, "scan bound on vector entries")->required();
    CLI::App* identity = app.add_subcommand("identity", "test whether a word acts trivially");
    add_common(identity, args, true, false);

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmd_check(args);
        if (applyc->parsed()) return cmd_apply(args);
        if (reduce->parsed()) return cmd_reduce(args, brute);
        if (verify->parsed()) return cmd_verify(args);
        if (crushc->parsed()) return cmd_crush(args);
        if (maximal->parsed()) return cmd_maximal(args);
        if (canonical->parsed()) return cmd_canonical(args, max_entry);
        if (identity->parsed()) return cmd_identity(args);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
