#include "mixr/sat_export.hpp"

#include <sstream>
#include <stdexcept>

#include "mixr/error.hpp"
#include "mixr/search.hpp"

namespace mixr {

namespace {

// Every 4-set of K_n must carry at least three palette edges, otherwise a
// two-symbol palette could leave a rainbow K_4 the clauses do not see.
void assert_rainbow_vacuous(const RotationalModel& model) {
    const auto n = model.n();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            for (std::uint32_t c = b + 1; c < n; ++c)
                for (std::uint32_t d = c + 1; d < n; ++d) {
                    const std::uint32_t s[4] = {a, b, c, d};
                    int palette_edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (model.edge_class(s[i], s[j]) != RotationalModel::kStarClass) ++palette_edges;
                    if (palette_edges < 3)
                        throw std::logic_error("a 4-set with fewer than three palette edges exists");
                }
}

}  // namespace

CnfFormula encode_sat(const RotationalModel& model, std::uint32_t m, std::uint32_t palette) {
    if (palette != 2) throw InputError("CNF export supports a palette of exactly 2 symbols");
    if (m < 3) throw InputError("clique size m must be at least 3");
    assert_rainbow_vacuous(model);

    CnfFormula f;
    f.variables = static_cast<std::uint32_t>(model.class_count());
    for (const auto& set : model.palette_cliques(m)) {
        std::vector<int> pos, neg;
        for (auto c : set) {
            pos.push_back(c + 1);
            neg.push_back(-(c + 1));
        }
        f.clauses.push_back(std::move(pos));
        f.clauses.push_back(std::move(neg));
    }

    std::ostringstream os;
    os << "c mixr rotational words q=" << model.q() << " m=" << m << " palette=2\n";
    for (std::size_t c = 0; c < model.class_count(); ++c) {
        os << "c class " << c + 1;
        for (const auto& s : model.classes()[c]) os << " w" << s.word << ':' << s.offset;
        os << '\n';
    }
    os << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (auto lit : cl) os << lit << ' ';
        os << "0\n";
    }
    f.text = os.str();
    return f;
}

CnfFormula encode_sat(std::uint32_t q, std::uint32_t m, std::uint32_t palette) {
    if (palette != 2) throw InputError("CNF export supports a palette of exactly 2 symbols");
    return encode_sat(RotationalModel(q), m, palette);
}

}  // namespace mixr
