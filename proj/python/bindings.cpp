#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mixr/admissibility.hpp"
#include "mixr/brute_force.hpp"
#include "mixr/cli.hpp"
#include "mixr/colouring.hpp"
#include "mixr/error.hpp"
#include "mixr/projective_plane.hpp"
#include "mixr/sat_export.hpp"
#include "mixr/search.hpp"

namespace py = pybind11;
using namespace mixr;

namespace {

py::dict report_dict(const AdmissibilityReport& r) {
    py::dict d;
    d["admissible"] = r.admissible;
    d["mono_witness"] = r.mono_witness;
    d["rainbow_witness"] = r.rainbow_witness;
    d["colours"] = r.colour_count;
    d["bound"] = r.theorem_bound;
    d["n"] = r.n;
    d["m"] = r.m;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mixr, m) {
    m.doc() = "Admissible edge-colourings over projective-plane Levi graphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    py::class_<EdgeColouring>(m, "EdgeColouring")
        .def(py::init<std::uint32_t, std::uint32_t, Colour>(), py::arg("n"), py::arg("palette_size") = 0,
             py::arg("fill") = 0)
        .def_property_readonly("n", &EdgeColouring::size)
        .def_property_readonly("palette_size", &EdgeColouring::palette_size)
        .def("colour", &EdgeColouring::colour)
        .def("set", &EdgeColouring::set)
        .def("pair_colours", &EdgeColouring::pair_colours)
        .def("__eq__", [](const EdgeColouring& a, const EdgeColouring& b) { return a == b; })
        .def("to_text", [](const EdgeColouring& c) {
            std::ostringstream os;
            write_colouring(os, c);
            return os.str();
        })
        .def_static("from_text", [](const std::string& s) {
            std::istringstream is(s);
            return read_colouring(is);
        });

    py::class_<WordPair>(m, "WordPair")
        .def(py::init([](std::uint32_t q, std::string w0, std::string w1) { return WordPair{q, std::move(w0), std::move(w1)}; }),
             py::arg("q"), py::arg("w0"), py::arg("w1"))
        .def_readonly("q", &WordPair::q)
        .def_readonly("w0", &WordPair::w0)
        .def_readonly("w1", &WordPair::w1)
        .def("reverse_property", &WordPair::reverse_property)
        .def("__eq__", [](const WordPair& a, const WordPair& b) { return a == b; })
        .def("__repr__", [](const WordPair& w) { return "WordPair(" + std::to_string(w.q) + ", '" + w.w0 + "', '" + w.w1 + "')"; });

    m.def("plane_lines", [](std::uint32_t q) {
        const auto plane = build_plane(q);
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& l : plane.lines()) out.push_back(l.point_ids);
        return out;
    }, py::arg("q"), "Lines of PG(2,q) as sorted point-id lists.");

    m.def("rotational_cycle", [](std::uint32_t q) {
        const auto plane = build_plane(q);
        const auto levi = levi_graph(plane);
        const auto lab = rotational_cycle(plane);
        py::dict d;
        d["order"] = lab.order;
        d["offsets"] = lab.offsets;
        d["rotational"] = verify_rotational(levi, lab);
        return d;
    }, py::arg("q"));

    m.def("is_planar_difference_set", &is_planar_difference_set, py::arg("modulus"), py::arg("residues"));

    m.def("expand_words", [](const WordPair& w) { return expand_words(w).base; }, py::arg("words"),
          "Position-indexed colouring of K_n(q) described by a word pair.");
    m.def("extract_words", [](std::uint32_t q, const EdgeColouring& c) { return extract_words(attach_levi(q, c)); },
          py::arg("q"), py::arg("colouring"));
    m.def("fano_colouring", [] {
        const auto f = fano_colouring();
        py::dict d;
        d["colouring"] = f.colouring.base;
        d["point_cycle"] = f.point_cycle;
        d["line_cycle"] = f.line_cycle;
        return d;
    });
    m.def("colour_count", [](const EdgeColouring& c) { return colour_count(c); });
    m.def("canonicalize", [](const EdgeColouring& c) { return canonicalize(c); });

    m.def("is_admissible", [](const EdgeColouring& c, std::uint32_t mm) { return report_dict(is_admissible(c, mm)); },
          py::arg("colouring"), py::arg("m") = 4);
    m.def("sigma", [](const EdgeColouring& c, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                      std::uint32_t mm) {
        const auto q = sigma(c, a, b, mm);
        py::dict d;
        d["sigma"] = q.sigma;
        d["k"] = q.k;
        d["lemma_bound"] = q.lemma_bound;
        d["holds"] = lemma_bound_holds(q.sigma, q.k, mm);
        return d;
    }, py::arg("colouring"), py::arg("a"), py::arg("b"), py::arg("m") = 4);
    m.def("theorem_bound", &theorem_bound, py::arg("n"), py::arg("m"));
    m.def("base_case_check", &base_case_check, py::arg("m"));

    m.def("verify_words", [](const WordPair& w, std::uint32_t mm) {
        const auto r = verify_words(w.q, w, mm);
        auto d = report_dict(r.admissibility);
        d["special"] = r.special;
        d["rotational"] = r.rotational;
        d["reverse_property"] = r.reverse_property;
        return d;
    }, py::arg("words"), py::arg("m") = 4);

    m.def("search_rotational", [](std::uint32_t q, std::uint32_t mm, std::uint32_t palette, const std::string& mode,
                                  std::optional<std::uint64_t> node_budget, std::uint32_t threads) {
        SearchConfig cfg;
        cfg.q = q;
        cfg.m = mm;
        cfg.palette = palette;
        cfg.mode = parse_search_mode(mode);
        cfg.node_budget = node_budget;
        cfg.threads = threads;
        SearchOutcome r;
        {
            py::gil_scoped_release release;
            r = search_rotational(cfg);
        }
        py::dict d;
        d["solutions"] = r.solutions;
        d["solution_count"] = r.solution_count;
        d["nodes"] = r.nodes_explored;
        d["exhausted"] = r.exhausted;
        return d;
    }, py::arg("q"), py::arg("m") = 4, py::arg("palette") = 2, py::arg("mode") = "first",
       py::arg("node_budget") = py::none(), py::arg("threads") = 1);

    m.def("brute_force_maxr", [](std::uint32_t n, std::uint32_t mm) {
        const auto r = brute_force_maxr(n, mm);
        return py::make_tuple(r.value, r.witness);
    }, py::arg("n"), py::arg("m"));

    m.def("encode_sat", [](std::uint32_t q, std::uint32_t mm) { return encode_sat(q, mm).text; }, py::arg("q"),
          py::arg("m") = 4);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a mixr subcommand; returns (exit code, stdout, stderr).");
}
