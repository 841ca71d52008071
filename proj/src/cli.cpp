#include "mixr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mixr/admissibility.hpp"
#include "mixr/brute_force.hpp"
#include "mixr/colouring.hpp"
#include "mixr/error.hpp"
#include "mixr/projective_plane.hpp"
#include "mixr/sat_export.hpp"
#include "mixr/search.hpp"

namespace mixr::cli {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "' for reading");
    return f;
}

// Writes to `path`, or to `out` when no path was given.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn fn) {
    if (path.empty()) {
        fn(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot open '" + path + "' for writing");
    fn(f);
    if (!f) throw InputError("failed writing '" + path + "'");
}

void write_ids(std::ostream& os, const char* key, const std::vector<std::uint32_t>& ids) {
    os << key;
    for (auto v : ids) os << ' ' << v;
    os << '\n';
}

struct Options {
    std::uint32_t q = 2;
    std::uint32_t m = 4;
    std::uint32_t n = 0;
    std::uint32_t palette = 2;
    std::string input;
    std::string words;
    std::string out;
    std::string resume;
    std::string checkpoint;
    std::uint32_t lemma_samples = 0;
    std::uint64_t seed = 1;
    bool all = false;
    bool count = false;
    bool break_symmetry = false;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint32_t threads = 1;
};

int do_plane(const Options& o, std::ostream& out) {
    const auto plane = build_plane(o.q);
    write_plane(out, plane);
    return kOk;
}

int do_cycle(const Options& o, std::ostream& out) {
    const auto plane = build_plane(o.q);
    const auto levi = levi_graph(plane);
    const auto labeling = rotational_cycle(plane);
    const bool ok = verify_rotational(levi, labeling);
    out << "cycle q=" << o.q << " n=" << levi.size() << '\n';
    write_ids(out, "order", labeling.order);
    write_ids(out, "offsets", labeling.offsets);
    out << "rotational " << (ok ? "true" : "false") << '\n';
    return ok ? kOk : kNegative;
}

int do_fano(const Options& o, std::ostream& out) {
    const auto f = fano_colouring();
    if (o.out.empty()) {
        write_colouring(out, f.colouring.base);
        return kOk;
    }
    emit(o.out, out, [&](std::ostream& os) { write_colouring(os, f.colouring.base); });
    write_ids(out, "point-cycle", f.point_cycle);
    write_ids(out, "line-cycle", f.line_cycle);
    out << "colours " << colour_count(f.colouring.base) << '\n';
    return kOk;
}

int do_expand(const Options& o, std::ostream& out) {
    auto in = open_in(o.words);
    const auto words = read_words(in);
    if (words.q != o.q) throw InputError("word file is for q=" + std::to_string(words.q));
    const auto sc = expand_words(words);
    emit(o.out, out, [&](std::ostream& os) { write_colouring(os, sc.base); });
    return kOk;
}

int do_extract(const Options& o, std::ostream& out) {
    auto in = open_in(o.input);
    const auto sc = attach_levi(o.q, read_colouring(in));
    write_words(out, extract_words(sc));
    return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
    if (o.input.empty() == o.words.empty()) throw InputError("verify needs exactly one of --input and --words");
    EdgeColouring c;
    if (!o.words.empty()) {
        auto in = open_in(o.words);
        const auto words = read_words(in);
        const auto report = verify_words(words.q, words, o.m);
        write_words_report(out, report);
        c = expand_words(words).base;
    } else {
        auto in = open_in(o.input);
        c = read_colouring(in);
        write_report(out, is_admissible(c, o.m));
    }
    const bool admissible = is_admissible(c, o.m).admissible;
    if (admissible && o.lemma_samples > 0) {
        const auto sweep = lemma_sweep(c, o.m, o.lemma_samples, o.seed);
        out << "lemma " << sweep.holding << '/' << sweep.samples << '\n';
        if (sweep.holding != sweep.samples) return kNegative;
    }
    return admissible ? kOk : kNegative;
}

int do_search(const Options& o, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.q = o.q;
    cfg.m = o.m;
    cfg.palette = o.palette;
    cfg.mode = o.count ? SearchMode::count : o.all ? SearchMode::all : SearchMode::first;
    cfg.node_budget = o.node_budget;
    cfg.threads = o.threads;
    cfg.break_symmetry = o.break_symmetry;
    if (!o.resume.empty()) {
        auto in = open_in(o.resume);
        cfg.resume = read_checkpoint(in);
    }
    const auto r = search_rotational(cfg);
    if (cfg.mode == SearchMode::count) {
        out << "solutions " << r.solution_count << '\n';
    } else {
        for (std::size_t i = 0; i < r.solutions.size(); ++i) {
            if (i) out << '\n';
            write_words(out, r.solutions[i]);
        }
    }
    err << "nodes " << r.nodes_explored << '\n'
        << "solutions " << r.solution_count << '\n'
        << "exhausted " << (r.exhausted ? "true" : "false") << '\n';
    if (r.checkpoint) {
        if (!o.checkpoint.empty())
            emit(o.checkpoint, out, [&](std::ostream& os) { write_checkpoint(os, *r.checkpoint); });
        return kBudget;
    }
    return r.solution_count > 0 ? kOk : kNegative;
}

int do_brute(const Options& o, std::ostream& out) {
    const auto r = brute_force_maxr(o.n, o.m);
    out << "maxr = " << r.value << '\n';
    write_colouring(out, r.witness);
    return kOk;
}

int do_sat(const Options& o, std::ostream& out) {
    const auto f = encode_sat(o.q, o.m, o.palette);
    emit(o.out, out, [&](std::ostream& os) { os << f.text; });
    if (!o.out.empty()) out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    return kOk;
}

int do_bound(const Options& o, std::ostream& out) {
    if (o.n < 1) throw InputError("n must be at least 1");
    out << "n " << o.n << '\n'
        << "m " << o.m << '\n'
        << "bound " << std::fixed << std::setprecision(6) << theorem_bound(o.n, o.m) << std::defaultfloat << '\n'
        << "base-case " << (base_case_check(o.m) ? "true" : "false") << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Admissible colourings of complete graphs over projective-plane Levi graphs", "mixr"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "mixr 0.1.0");
    Options o;

    auto* plane = app.add_subcommand("plane", "Print the lines of PG(2,q) as point-id rows");
    plane->add_option("--q", o.q, "Plane order (prime power)")->required();

    auto* cycle = app.add_subcommand("cycle", "Print the rotational Hamilton cycle of the Levi graph");
    cycle->add_option("--q", o.q, "Plane order (prime power)")->required();

    auto* fano = app.add_subcommand("fano", "Build the 7-cycle colouring of K_14");
    fano->add_option("--out", o.out, "Write the colouring here and print the cycles");

    auto* expand = app.add_subcommand("expand", "Expand a word pair into a colouring of K_n(q)");
    expand->add_option("--q", o.q, "Plane order")->required();
    expand->add_option("--words", o.words, "Word file")->required();
    expand->add_option("--out", o.out, "Output colouring file (default: stdout)");

    auto* extract = app.add_subcommand("extract", "Recover the word pair of a rotational special colouring");
    extract->add_option("--input", o.input, "Colouring file")->required();
    extract->add_option("--q", o.q, "Plane order")->required();

    auto* verify = app.add_subcommand("verify", "Check admissibility of a colouring or word pair");
    verify->add_option("--input", o.input, "Colouring file");
    verify->add_option("--words", o.words, "Word file (also reports special/rotational)");
    verify->add_option("--m", o.m, "Forbidden monochromatic clique size")->capture_default_str();
    verify->add_option("--lemma-samples", o.lemma_samples, "Random disjoint-pair sigma checks")->capture_default_str();
    verify->add_option("--rng-seed", o.seed, "Seed for the sigma sample")->capture_default_str();

    auto* search = app.add_subcommand("search", "Backtracking search for admissible rotational word pairs");
    search->add_option("--q", o.q, "Plane order (at most 9)")->required();
    search->add_option("--m", o.m, "Forbidden monochromatic clique size")->capture_default_str();
    search->add_option("--palette", o.palette, "Palette size t (at most 36)")->capture_default_str();
    auto* all = search->add_flag("--all", o.all, "Enumerate every solution");
    search->add_flag("--count", o.count, "Only count solutions")->excludes(all);
    search->add_flag("--break-symmetry", o.break_symmetry, "Only palette symbols in first-use order");
    search->add_option("--node-budget", o.node_budget, "Stop after this many nodes")->capture_default_str();
    search->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
    search->add_option("--resume", o.resume, "Resume from a checkpoint file");
    search->add_option("--checkpoint", o.checkpoint, "Write a checkpoint here if the budget runs out");

    auto* brute = app.add_subcommand("brute", "Exact maxr for K_n by set-partition enumeration");
    brute->add_option("--n", o.n, "Number of vertices (3..6)")->required();
    brute->add_option("--m", o.m, "Forbidden monochromatic clique size")->capture_default_str();

    auto* sat = app.add_subcommand("sat", "Export the two-symbol word problem as DIMACS CNF");
    sat->add_option("--q", o.q, "Plane order")->required();
    sat->add_option("--m", o.m, "Forbidden monochromatic clique size")->capture_default_str();
    sat->add_option("--out", o.out, "Output CNF file")->required();

    auto* bound = app.add_subcommand("bound", "Evaluate n^{3/2} sqrt(2m) and the small-n base case");
    bound->add_option("--n", o.n, "Number of vertices")->required();
    bound->add_option("--m", o.m, "Forbidden monochromatic clique size")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*plane) return do_plane(o, out);
        if (*cycle) return do_cycle(o, out);
        if (*fano) return do_fano(o, out);
        if (*expand) return do_expand(o, out);
        if (*extract) return do_extract(o, out);
        if (*verify) return do_verify(o, out);
        if (*search) return do_search(o, out, err);
        if (*brute) return do_brute(o, out);
        if (*sat) return do_sat(o, out);
        if (*bound) return do_bound(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace mixr::cli
