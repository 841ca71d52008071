#pragma once

// DIMACS CNF for the two-symbol rotational word problem: one boolean per free
// symmetry class, two clauses per palette m-clique.

#include <cstdint>
#include <string>
#include <vector>

namespace mixr {

class RotationalModel;

struct CnfFormula {
    std::uint32_t variables = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals
    std::string text;
};

CnfFormula encode_sat(const RotationalModel& model, std::uint32_t m, std::uint32_t palette = 2);
CnfFormula encode_sat(std::uint32_t q, std::uint32_t m, std::uint32_t palette = 2);

}  // namespace mixr
